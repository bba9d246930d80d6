//! Named instances used by the test suites and shipped with the CLI:
//! small groups, the catalog crossed modules, two strict morphisms, the
//! super and semion cocycles, and a butterfly over a nonsplit extension.

use crate::butterfly::Butterfly;
use crate::graded::{AbelianThreeCocycle, GradingGroup};
use crate::group::{FiniteGroup, GroupAction, GroupHom, Subgroup};
use crate::xmod::{CrossedModule, StrictMorphism};
use std::sync::Arc;

pub fn trivial_group() -> Arc<FiniteGroup> {
    FiniteGroup::trivial()
}

/// The cyclic group `Z_n` with addition mod `n`.
pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    FiniteGroup::from_table(&rows).expect("cyclic tables are groups")
}

fn compose_perm(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

/// All permutations of `0..3` in lexicographic order.
pub fn perms3() -> Vec<Vec<usize>> {
    vec![
        vec![0, 1, 2],
        vec![0, 2, 1],
        vec![1, 0, 2],
        vec![1, 2, 0],
        vec![2, 0, 1],
        vec![2, 1, 0],
    ]
}

/// The symmetric group on three letters, built from the permutation
/// representation with `(p·q)(x) = p(q(x))` and permutations enumerated
/// lexicographically (so the identity sits at index 0).
pub fn sym3() -> Arc<FiniteGroup> {
    let perms = perms3();
    let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let rows: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| perms.iter().map(|q| index(&compose_perm(p, q))).collect())
        .collect();
    FiniteGroup::from_table(&rows).expect("permutation composition is a group")
}

/// The alternating subgroup of [`sym3`]: the even permutations `{0, 3, 4}`.
pub fn alt3_subgroup() -> Subgroup {
    Subgroup::new(sym3(), vec![0, 3, 4]).expect("even permutations form a subgroup")
}

/// The sign homomorphism of [`sym3`] onto `Z₂`.
pub fn sign_hom() -> GroupHom {
    GroupHom::new(sym3(), cyclic(2), vec![0, 1, 1, 0, 0, 1]).expect("parity is a homomorphism")
}

/// The crossed module `[1 → 1]`.
pub fn trivial_xmod() -> Arc<CrossedModule> {
    let one = trivial_group();
    Arc::new(
        CrossedModule::new(
            GroupHom::identity(&one),
            GroupAction::trivial(&one, &one),
        )
        .expect("the trivial crossed module verifies"),
    )
}

/// `[Z₂ —trivial→ Z₂]` with the trivial action.
pub fn z2_boundary() -> Arc<CrossedModule> {
    let z2 = cyclic(2);
    Arc::new(
        CrossedModule::new(
            GroupHom::trivial(&z2, &z2),
            GroupAction::trivial(&z2, &z2),
        )
        .expect("trivial boundary over an abelian group verifies"),
    )
}

/// `[Z₄ —trivial→ Z₄]` with the trivial action.
pub fn z4_boundary() -> Arc<CrossedModule> {
    let z4 = cyclic(4);
    Arc::new(
        CrossedModule::new(
            GroupHom::trivial(&z4, &z4),
            GroupAction::trivial(&z4, &z4),
        )
        .expect("trivial boundary over an abelian group verifies"),
    )
}

/// `[A₃ ↪ S₃]` with the conjugation action: the normal-subgroup crossed
/// module.
pub fn inclusion_a3_s3() -> Arc<CrossedModule> {
    let (_, inclusion) = alt3_subgroup().to_group();
    let action = GroupAction::conjugation_through(&inclusion)
        .expect("A3 is normal in S3");
    Arc::new(CrossedModule::new(inclusion, action).expect("the inclusion crossed module verifies"))
}

/// `[G —id→ G]` with conjugation, for any `G`.
pub fn identity_xmod(g: &Arc<FiniteGroup>) -> Arc<CrossedModule> {
    Arc::new(
        CrossedModule::new(GroupHom::identity(g), GroupAction::conjugation(g))
            .expect("identity boundary with conjugation verifies"),
    )
}

pub fn s3_identity() -> Arc<CrossedModule> {
    identity_xmod(&sym3())
}

pub fn z4_identity() -> Arc<CrossedModule> {
    identity_xmod(&cyclic(4))
}

/// `[1 → Z₂]`: the base-point crossed module of `Z₂`.
pub fn trivial_to_z2() -> Arc<CrossedModule> {
    let one = trivial_group();
    let z2 = cyclic(2);
    Arc::new(
        CrossedModule::new(
            GroupHom::trivial(&one, &z2),
            GroupAction::trivial(&z2, &one),
        )
        .expect("a trivial kernel crossed module verifies"),
    )
}

/// The named catalog instances, in a fixed order.
pub fn xmod_catalog() -> Vec<(&'static str, Arc<CrossedModule>)> {
    vec![
        ("trivial", trivial_xmod()),
        ("z2_boundary", z2_boundary()),
        ("inclusion_a3_s3", inclusion_a3_s3()),
        ("z4_identity", z4_identity()),
        ("s3_identity", s3_identity()),
    ]
}

/// The fault instance `[S₃ —id→ S₃]` with the trivial action, returned as
/// raw parts since it fails the Peiffer identity.
pub fn peiffer_fault_parts() -> (GroupHom, GroupAction) {
    let s3 = sym3();
    (
        GroupHom::identity(&s3),
        GroupAction::trivial(&s3, &s3),
    )
}

/// The inclusion-induced morphism `[A₃ ↪ S₃] → [S₃ —id→ S₃]` with
/// `f₁ = id` and `f₂` the inclusion.
pub fn inclusion_to_s3_identity() -> StrictMorphism {
    let src = inclusion_a3_s3();
    let dst = s3_identity();
    let f1 = GroupHom::identity(&sym3());
    let f2 = src.boundary().clone();
    StrictMorphism::new(src, dst, f1, f2).expect("the inclusion morphism verifies")
}

/// The collapse morphism `[A₃ ↪ S₃] → [1 → Z₂]` with `f₁` the sign map and
/// `f₂` trivial; an equivalence of crossed modules.
pub fn collapse_to_z2() -> StrictMorphism {
    let src = inclusion_a3_s3();
    let dst = trivial_to_z2();
    let f1 = sign_hom();
    let f2 = GroupHom::trivial(src.n(), dst.n());
    StrictMorphism::new(src, dst, f1, f2).expect("the collapse morphism verifies")
}

/// Super vector spaces: `G = Z₂`, phases in `Z₂`, `f ≡ 0`, `h(1,1) = -1`.
pub fn super_cocycle() -> AbelianThreeCocycle {
    let grading = GradingGroup::new(vec![2]).unwrap();
    AbelianThreeCocycle::new(grading, 2, vec![0; 8], vec![0, 0, 0, 1])
        .expect("the super tables are well formed")
}

/// Semion data: `G = Z₂`, phases in `Z₄`, `f(1,1,1) = -1`, `h(1,1) = i`.
pub fn semion_cocycle() -> AbelianThreeCocycle {
    let grading = GradingGroup::new(vec![2]).unwrap();
    AbelianThreeCocycle::new(grading, 4, vec![0, 0, 0, 0, 0, 0, 0, 2], vec![0, 0, 0, 1])
        .expect("the semion tables are well formed")
}

/// A butterfly from `[1 → Z₂]` to `[Z₂ —trivial→ Z₂]` whose linking group
/// is the nonsplit extension `Z₂ ↪ Z₄ ↠ Z₂`; it admits no section.
pub fn nonsplit_butterfly() -> Butterfly {
    let src = trivial_to_z2();
    let dst = z2_boundary();
    let z4 = cyclic(4);
    let t = GroupHom::new(z4.clone(), dst.m().clone(), vec![0, 1, 0, 1]).unwrap();
    let g = GroupHom::new(z4.clone(), src.m().clone(), vec![0, 1, 0, 1]).unwrap();
    let k = GroupHom::new(dst.n().clone(), z4.clone(), vec![0, 2]).unwrap();
    let f = GroupHom::trivial(src.n(), &z4);
    Butterfly::new(src, dst, z4, t, g, k, f).expect("the nonsplit butterfly verifies")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_instances_verify() {
        for (name, xmod) in xmod_catalog() {
            assert!(xmod.n().order() <= 6, "{name}");
            assert!(xmod.m().order() <= 6, "{name}");
        }
        trivial_to_z2();
        z4_boundary();
        inclusion_to_s3_identity();
        collapse_to_z2();
        nonsplit_butterfly();
    }

    #[test]
    fn super_and_semion_pass_all_conditions() {
        assert!(super_cocycle().verify().all_pass());
        assert!(semion_cocycle().verify().all_pass());
    }
}
