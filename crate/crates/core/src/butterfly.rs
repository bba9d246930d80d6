//! Butterflies between crossed modules.
//!
//! A butterfly from `[N₁ → M₁]` to `[N₂ → M₂]` is a group `E` with four
//! homomorphisms `(t, g, k, f)` making the two diagonal sequences
//! `N₁ → E → M₂` and `N₂ → E → M₁` complexes, the NE-SW diagonal
//! `N₂ → E → M₁` a group extension, and satisfying the two conjugation
//! conditions `k(^t(x) n₂) = x·k(n₂)·x⁻¹` and `f(^g(x) n₁) = x·f(n₁)·x⁻¹`.
//! Split butterflies correspond bijectively to strict morphisms.

use crate::group::{
    enumerate_homs, is_extension, semidirect_product, ExtensionCheck, ExtensionFailure,
    FiniteGroup, GroupError, GroupHom,
};
use crate::xmod::{CrossedModule, StrictMorphism, XModError};
use serde::Serialize;
use std::sync::Arc;
use thiserror::Error;

/// Errors raised while verifying or transforming butterflies.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum ButterflyError {
    #[error("homomorphism endpoints do not match the butterfly data: {context}")]
    StructureMismatch { context: &'static str },

    #[error("diagram leg {leg} does not commute at {witness}")]
    DiagramFails { leg: &'static str, witness: usize },

    #[error("the {diagonal} diagonal is not a complex at {witness}")]
    ComplexFails {
        diagonal: &'static str,
        witness: usize,
    },

    #[error("the NE-SW diagonal is not an extension: {failure}")]
    NotExtension { failure: ExtensionFailure },

    #[error("conjugation condition for {which} fails at (x = {x}, n = {n})")]
    ConjugationFails {
        which: &'static str,
        x: usize,
        n: usize,
    },

    #[error("butterfly is not reversible: {failure}")]
    NotReversible { failure: ExtensionFailure },

    #[error("the map is not a section of g: witness {witness}")]
    NotASection { witness: usize },

    #[error("no N₂ element solves the section equation at n = {n}")]
    NoSolution { n: usize },

    #[error("multiple N₂ elements solve the section equation at n = {n}")]
    NotUnique { n: usize },

    #[error("internal verification failure: {context}")]
    InternalVerificationFailure { context: String },

    #[error(transparent)]
    Group(#[from] GroupError),

    #[error(transparent)]
    XMod(#[from] XModError),
}

/// A verified butterfly `(E, t, g, k, f)` between two crossed modules.
///
/// `t: E → M₂`, `g: E → M₁`, `k: N₂ → E`, `f: N₁ → E`. When the butterfly
/// was produced by [`Butterfly::from_strict`], the canonical splitting
/// `m ↦ (1, m)` is cached; it does not take part in equality.
#[derive(Debug, Clone)]
pub struct Butterfly {
    src: Arc<CrossedModule>,
    dst: Arc<CrossedModule>,
    e: Arc<FiniteGroup>,
    t: GroupHom,
    g: GroupHom,
    k: GroupHom,
    f: GroupHom,
    canonical_section: Option<GroupHom>,
}

impl PartialEq for Butterfly {
    fn eq(&self, other: &Self) -> bool {
        self.src == other.src
            && self.dst == other.dst
            && self.e == other.e
            && self.t == other.t
            && self.g == other.g
            && self.k == other.k
            && self.f == other.f
    }
}

impl Eq for Butterfly {}

impl Butterfly {
    /// Verifies every butterfly axiom exhaustively.
    pub fn new(
        src: Arc<CrossedModule>,
        dst: Arc<CrossedModule>,
        e: Arc<FiniteGroup>,
        t: GroupHom,
        g: GroupHom,
        k: GroupHom,
        f: GroupHom,
    ) -> Result<Self, ButterflyError> {
        if t.src() != &e || t.dst() != dst.m() {
            return Err(ButterflyError::StructureMismatch {
                context: "t must map E to M2",
            });
        }
        if g.src() != &e || g.dst() != src.m() {
            return Err(ButterflyError::StructureMismatch {
                context: "g must map E to M1",
            });
        }
        if k.src() != dst.n() || k.dst() != &e {
            return Err(ButterflyError::StructureMismatch {
                context: "k must map N2 to E",
            });
        }
        if f.src() != src.n() || f.dst() != &e {
            return Err(ButterflyError::StructureMismatch {
                context: "f must map N1 to E",
            });
        }

        for n in src.n().elements() {
            if g.apply(f.apply(n)) != src.boundary().apply(n) {
                return Err(ButterflyError::DiagramFails {
                    leg: "g∘f = h1",
                    witness: n,
                });
            }
        }
        for n in dst.n().elements() {
            if t.apply(k.apply(n)) != dst.boundary().apply(n) {
                return Err(ButterflyError::DiagramFails {
                    leg: "t∘k = h2",
                    witness: n,
                });
            }
        }
        for n in src.n().elements() {
            if t.apply(f.apply(n)) != 0 {
                return Err(ButterflyError::ComplexFails {
                    diagonal: "NW-SE",
                    witness: n,
                });
            }
        }
        for n in dst.n().elements() {
            if g.apply(k.apply(n)) != 0 {
                return Err(ButterflyError::ComplexFails {
                    diagonal: "NE-SW",
                    witness: n,
                });
            }
        }
        let check = is_extension(&k, &g)?;
        if let Some(failure) = check.failure {
            return Err(ButterflyError::NotExtension { failure });
        }
        for x in e.elements() {
            for n in dst.n().elements() {
                if k.apply(dst.act(t.apply(x), n)) != e.conj(x, k.apply(n)) {
                    return Err(ButterflyError::ConjugationFails {
                        which: "k",
                        x,
                        n,
                    });
                }
            }
            for n in src.n().elements() {
                if f.apply(src.act(g.apply(x), n)) != e.conj(x, f.apply(n)) {
                    return Err(ButterflyError::ConjugationFails {
                        which: "f",
                        x,
                        n,
                    });
                }
            }
        }

        Ok(Butterfly {
            src,
            dst,
            e,
            t,
            g,
            k,
            f,
            canonical_section: None,
        })
    }

    pub fn src(&self) -> &Arc<CrossedModule> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<CrossedModule> {
        &self.dst
    }

    pub fn e(&self) -> &Arc<FiniteGroup> {
        &self.e
    }

    pub fn t(&self) -> &GroupHom {
        &self.t
    }

    pub fn g(&self) -> &GroupHom {
        &self.g
    }

    pub fn k(&self) -> &GroupHom {
        &self.k
    }

    pub fn f(&self) -> &GroupHom {
        &self.f
    }

    pub fn canonical_section(&self) -> Option<&GroupHom> {
        self.canonical_section.as_ref()
    }

    /// True when the NW-SE diagonal `N₁ → E → M₂` is also an extension;
    /// the witness names the first failure otherwise.
    pub fn is_reversible(&self) -> ExtensionCheck {
        is_extension(&self.f, &self.t).expect("diagonal endpoints always match")
    }

    /// All sections `s: M₁ → E` with `g∘s = id`, in deterministic order.
    /// An empty result means the butterfly is not splittable.
    pub fn find_sections(&self, budget: u64) -> Result<Vec<GroupHom>, GroupError> {
        let homs = enumerate_homs(self.src.m(), &self.e, budget)?;
        Ok(homs
            .into_iter()
            .filter(|s| {
                self.src
                    .m()
                    .elements()
                    .all(|m| self.g.apply(s.apply(m)) == m)
            })
            .collect())
    }

    /// The split butterfly of a strict morphism: `E = N₂ ⋊ M₁` with `M₁`
    /// acting through `f₁`, `g` the projection, `k(n) = (n, 1)`,
    /// `f(n) = (f₂(n⁻¹), h₁(n))`, and `t(n, m) = h₂(n)·f₁(m)`.
    ///
    /// The construction is total on verified morphisms; the result carries
    /// its canonical section `m ↦ (1, m)`.
    pub fn from_strict(morphism: &StrictMorphism) -> Result<Self, ButterflyError> {
        let src = morphism.src().clone();
        let dst = morphism.dst().clone();
        let n2 = dst.n();
        let m1 = src.m();
        let action = dst.action().pullback(morphism.f1())?;
        let (e, k, g) = semidirect_product(n2, m1, &action)?;

        let mo = m1.order();
        let pair = |n: usize, m: usize| n * mo + m;
        let f = GroupHom::new(
            src.n().clone(),
            e.clone(),
            src.n()
                .elements()
                .map(|n| {
                    pair(
                        morphism.f2().apply(src.n().inv(n)),
                        src.boundary().apply(n),
                    )
                })
                .collect(),
        )?;
        let t = GroupHom::new(
            e.clone(),
            dst.m().clone(),
            e.elements()
                .map(|x| {
                    let (n, m) = (x / mo, x % mo);
                    dst.m()
                        .mul(dst.boundary().apply(n), morphism.f1().apply(m))
                })
                .collect(),
        )?;
        let section = GroupHom::new(
            m1.clone(),
            e.clone(),
            m1.elements().map(|m| pair(0, m)).collect(),
        )?;

        let mut butterfly = Butterfly::new(src, dst, e, t, g, k, f).map_err(|err| {
            ButterflyError::InternalVerificationFailure {
                context: format!("butterfly of a strict morphism failed verification: {err}"),
            }
        })?;
        butterfly.canonical_section = Some(section);
        Ok(butterfly)
    }

    /// Recovers the strict morphism of a split butterfly from a section:
    /// `f₁ = t∘s` and `f₂(n)` is the unique solution of
    /// `s(h₁(n)) = f(n)·k(f₂(n))`, which exists and is unique because `k`
    /// embeds `N₂` as the kernel of `g`.
    pub fn to_strict(&self, section: &GroupHom) -> Result<StrictMorphism, ButterflyError> {
        if section.src() != self.src.m() || section.dst() != &self.e {
            return Err(ButterflyError::StructureMismatch {
                context: "a section must map M1 into E",
            });
        }
        if let Some(witness) = self
            .src
            .m()
            .elements()
            .find(|&m| self.g.apply(section.apply(m)) != m)
        {
            return Err(ButterflyError::NotASection { witness });
        }

        let f1 = self.t.compose(section)?;

        let n1 = self.src.n();
        let n2 = self.dst.n();
        let h1 = self.src.boundary();
        let mut f2_map = Vec::with_capacity(n1.order());
        for n in n1.elements() {
            let target = self
                .e
                .mul(self.e.inv(self.f.apply(n)), section.apply(h1.apply(n)));
            let mut solutions = n2.elements().filter(|&c| self.k.apply(c) == target);
            let solution = solutions.next().ok_or(ButterflyError::NoSolution { n })?;
            if solutions.next().is_some() {
                return Err(ButterflyError::NotUnique { n });
            }
            f2_map.push(solution);
        }
        let f2 = GroupHom::new(n1.clone(), n2.clone(), f2_map).map_err(|err| {
            ButterflyError::InternalVerificationFailure {
                context: format!("recovered f2 is not a homomorphism: {err}"),
            }
        })?;
        StrictMorphism::new(self.src.clone(), self.dst.clone(), f1, f2).map_err(|err| {
            ButterflyError::InternalVerificationFailure {
                context: format!("recovered morphism failed verification: {err}"),
            }
        })
    }

    /// The inverse butterfly, with the two wings swapped: from `𝔠₂` to `𝔠₁`
    /// with data `(E, g, t, f, k)`. Requires reversibility, since the NW-SE
    /// diagonal becomes the extension of the swapped diagram.
    pub fn invert(&self) -> Result<Self, ButterflyError> {
        let check = self.is_reversible();
        if let Some(failure) = check.failure {
            return Err(ButterflyError::NotReversible { failure });
        }
        Butterfly::new(
            self.dst.clone(),
            self.src.clone(),
            self.e.clone(),
            self.g.clone(),
            self.t.clone(),
            self.f.clone(),
            self.k.clone(),
        )
        .map_err(|err| ButterflyError::InternalVerificationFailure {
            context: format!("inverse of a reversible butterfly failed verification: {err}"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::xmod::enumerate_strict_morphisms;
    use crate::DEFAULT_BUDGET;

    #[test]
    fn butterfly_of_the_identity_on_a3_s3() {
        let c = catalog::inclusion_a3_s3();
        let id = StrictMorphism::identity(&c);
        let b = Butterfly::from_strict(&id).unwrap();
        assert_eq!(b.e().order(), 18);
        assert!(b.is_reversible().exact);
        let sections = b.find_sections(DEFAULT_BUDGET).unwrap();
        assert!(sections.contains(b.canonical_section().unwrap()));
    }

    #[test]
    fn corrupting_t_breaks_the_diagram() {
        let c = catalog::inclusion_a3_s3();
        let id = StrictMorphism::identity(&c);
        let b = Butterfly::from_strict(&id).unwrap();
        let trivial_t = GroupHom::trivial(b.e(), c.m());
        let err = Butterfly::new(
            b.src().clone(),
            b.dst().clone(),
            b.e().clone(),
            trivial_t,
            b.g().clone(),
            b.k().clone(),
            b.f().clone(),
        )
        .unwrap_err();
        assert!(matches!(
            err,
            ButterflyError::DiagramFails { leg: "t∘k = h2", .. }
        ));
    }

    #[test]
    fn collapse_with_trivial_f2_is_not_reversible() {
        // [Z2 -triv-> Z2] to itself with f1 = id, f2 trivial: f lands on the
        // identity, so the NW-SE diagonal cannot be exact.
        let c = catalog::z2_boundary();
        let f1 = GroupHom::identity(c.m());
        let f2 = GroupHom::trivial(c.n(), c.n());
        let morphism = StrictMorphism::new(c.clone(), c.clone(), f1, f2).unwrap();
        let b = Butterfly::from_strict(&morphism).unwrap();
        let check = b.is_reversible();
        assert!(!check.exact);
        assert!(matches!(
            check.failure,
            Some(ExtensionFailure::NotInjective { .. })
        ));
        assert!(matches!(
            b.invert(),
            Err(ButterflyError::NotReversible { .. })
        ));
    }

    #[test]
    fn identity_on_the_trivial_module_gives_a_one_element_linking_group() {
        let one = catalog::trivial_xmod();
        let b = Butterfly::from_strict(&StrictMorphism::identity(&one)).unwrap();
        assert_eq!(b.e().order(), 1);
        // Reversible vacuously.
        assert!(b.is_reversible().exact);
    }

    #[test]
    fn nonsplit_butterfly_has_no_sections() {
        let b = catalog::nonsplit_butterfly();
        assert!(b.find_sections(DEFAULT_BUDGET).unwrap().is_empty());
        assert!(!b.is_reversible().exact);
    }

    #[test]
    fn trivial_m1_has_exactly_one_section() {
        // The nonsplit butterfly reversed in source: use the butterfly of the
        // unique morphism from the trivial crossed module.
        let one = catalog::trivial_xmod();
        let c = catalog::z2_boundary();
        let morphism = StrictMorphism::new(
            one.clone(),
            c.clone(),
            GroupHom::trivial(one.m(), c.m()),
            GroupHom::trivial(one.n(), c.n()),
        )
        .unwrap();
        let b = Butterfly::from_strict(&morphism).unwrap();
        let sections = b.find_sections(DEFAULT_BUDGET).unwrap();
        assert_eq!(sections.len(), 1);
        assert!(sections[0].map().iter().all(|&v| v == 0));
    }

    #[test]
    fn round_trip_recovers_every_catalog_morphism() {
        let xmods = catalog::xmod_catalog();
        for (_, src) in &xmods {
            for (_, dst) in &xmods {
                for morphism in
                    enumerate_strict_morphisms(src, dst, DEFAULT_BUDGET).unwrap()
                {
                    let b = Butterfly::from_strict(&morphism).unwrap();
                    let section = b.canonical_section().unwrap().clone();
                    assert!(b.find_sections(DEFAULT_BUDGET).unwrap().contains(&section));
                    let recovered = b.to_strict(&section).unwrap();
                    assert_eq!(recovered, morphism);
                    // t∘f is trivial by construction.
                    for n in src.n().elements() {
                        assert_eq!(b.t().apply(b.f().apply(n)), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn identity_round_trip_on_a3_s3() {
        let c = catalog::inclusion_a3_s3();
        let id = StrictMorphism::identity(&c);
        let b = Butterfly::from_strict(&id).unwrap();
        let recovered = b.to_strict(&b.canonical_section().unwrap().clone()).unwrap();
        assert_eq!(recovered, id);
    }

    #[test]
    fn non_sections_are_rejected() {
        let c = catalog::z2_boundary();
        let id = StrictMorphism::identity(&c);
        let b = Butterfly::from_strict(&id).unwrap();
        let not_section = GroupHom::trivial(c.m(), b.e());
        assert!(matches!(
            b.to_strict(&not_section),
            Err(ButterflyError::NotASection { witness: 1 })
        ));
    }

    #[test]
    fn inverse_of_identity_butterfly_verifies_and_is_involutive() {
        let c = catalog::inclusion_a3_s3();
        let id = StrictMorphism::identity(&c);
        let b = Butterfly::from_strict(&id).unwrap();
        let inv = b.invert().unwrap();
        assert_eq!(inv.src(), b.dst());
        assert_eq!(inv.invert().unwrap(), b);
    }
}
