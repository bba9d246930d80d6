//! Crossed modules, their homotopy invariants, and strict morphisms.
//!
//! A crossed module is a boundary homomorphism `h: N → M` together with an
//! action of `M` on `N` satisfying equivariance (`h(ᵐn) = m·h(n)·m⁻¹`) and
//! the Peiffer identity (`ʰ⁽ⁿ⁾n' = n·n'·n⁻¹`). Both are checked over all
//! pairs at construction.

mod pnt;

pub use pnt::PointedNaturalTransformation;

use crate::group::{
    enumerate_homs, quotient, FiniteGroup, GroupAction, GroupError, GroupHom,
};
use serde::Serialize;
use std::sync::Arc;
use thiserror::Error;

/// Errors raised while building crossed modules, strict morphisms, or
/// pointed natural transformations.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum XModError {
    #[error("boundary and action are not over the same groups: {context}")]
    StructureMismatch { context: &'static str },

    #[error("equivariance fails at (m = {m}, n = {n})")]
    EquivarianceFails { m: usize, n: usize },

    #[error("Peiffer identity fails at (n = {n}, n' = {n_prime})")]
    PeifferFails { n: usize, n_prime: usize },

    #[error("boundary square does not commute at n = {n}")]
    SquareFails { n: usize },

    #[error("morphisms are not composable: inner target differs from outer source")]
    SourceTargetMismatch,

    #[error("transformations are not between parallel morphisms")]
    ParallelMismatch,

    #[error("transformations are not composable in the requested direction")]
    ChainMismatch,

    #[error("gamma has length {len}, expected {expected}")]
    MalformedGamma { len: usize, expected: usize },

    #[error("gamma entry at {index} is {value}, out of range for order {order}")]
    GammaEntryOutOfRange {
        index: usize,
        value: usize,
        order: usize,
    },

    #[error("crossed homomorphism identity fails at ({a}, {a_prime})")]
    CocycleFails { a: usize, a_prime: usize },

    #[error("first compatibility condition fails at a = {a}")]
    ConditionOneFails { a: usize },

    #[error("second compatibility condition fails at b = {b}")]
    ConditionTwoFails { b: usize },

    #[error("internal verification failure: {context}")]
    InternalVerificationFailure { context: String },

    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A verified crossed module `[N → M]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule {
    boundary: GroupHom,
    action: GroupAction,
}

impl CrossedModule {
    /// Checks equivariance and the Peiffer identity exhaustively.
    pub fn new(boundary: GroupHom, action: GroupAction) -> Result<Self, XModError> {
        if action.actor() != boundary.dst() {
            return Err(XModError::StructureMismatch {
                context: "the actor must be the boundary's target M",
            });
        }
        if action.acted() != boundary.src() {
            return Err(XModError::StructureMismatch {
                context: "the acted group must be the boundary's source N",
            });
        }
        let n_grp = boundary.src();
        let m_grp = boundary.dst();
        for n in n_grp.elements() {
            let hn = boundary.apply(n);
            for n_prime in n_grp.elements() {
                if action.apply(hn, n_prime) != n_grp.conj(n, n_prime) {
                    return Err(XModError::PeifferFails { n, n_prime });
                }
            }
        }
        for m in m_grp.elements() {
            for n in n_grp.elements() {
                if boundary.apply(action.apply(m, n)) != m_grp.conj(m, boundary.apply(n)) {
                    return Err(XModError::EquivarianceFails { m, n });
                }
            }
        }
        Ok(CrossedModule { boundary, action })
    }

    pub fn n(&self) -> &Arc<FiniteGroup> {
        self.boundary.src()
    }

    pub fn m(&self) -> &Arc<FiniteGroup> {
        self.boundary.dst()
    }

    pub fn boundary(&self) -> &GroupHom {
        &self.boundary
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    /// The action `ᵐn`.
    #[inline]
    pub fn act(&self, m: usize, n: usize) -> usize {
        self.action.apply(m, n)
    }

    /// Cokernel of the boundary, `M / im(h)`. The image is normal by
    /// equivariance, so the quotient always exists.
    pub fn pi1(&self) -> Arc<FiniteGroup> {
        self.pi1_with_projection().0
    }

    pub(crate) fn pi1_with_projection(&self) -> (Arc<FiniteGroup>, GroupHom) {
        let image = self.boundary.image();
        debug_assert!(image.is_normal(), "equivariance forces a normal image");
        quotient(&image).expect("the image of a crossed module boundary is normal")
    }

    /// Kernel of the boundary, re-indexed as a group. Central in `N` by the
    /// Peiffer identity, hence abelian.
    pub fn pi2(&self) -> Arc<FiniteGroup> {
        self.pi2_with_inclusion().0
    }

    pub(crate) fn pi2_with_inclusion(&self) -> (Arc<FiniteGroup>, GroupHom) {
        self.boundary.kernel().to_group()
    }
}

/// A verified strict morphism of crossed modules: a pair of homomorphisms
/// commuting with the boundaries and the actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictMorphism {
    src: Arc<CrossedModule>,
    dst: Arc<CrossedModule>,
    f1: GroupHom,
    f2: GroupHom,
}

impl StrictMorphism {
    /// Checks `h₂∘f₂ = f₁∘h₁` and `f₂(ᵐn) = ^f₁(m) f₂(n)` exhaustively.
    pub fn new(
        src: Arc<CrossedModule>,
        dst: Arc<CrossedModule>,
        f1: GroupHom,
        f2: GroupHom,
    ) -> Result<Self, XModError> {
        if f1.src() != src.m() || f1.dst() != dst.m() {
            return Err(XModError::StructureMismatch {
                context: "f1 must map M1 to M2",
            });
        }
        if f2.src() != src.n() || f2.dst() != dst.n() {
            return Err(XModError::StructureMismatch {
                context: "f2 must map N1 to N2",
            });
        }
        for n in src.n().elements() {
            if dst.boundary().apply(f2.apply(n)) != f1.apply(src.boundary().apply(n)) {
                return Err(XModError::SquareFails { n });
            }
        }
        for m in src.m().elements() {
            for n in src.n().elements() {
                if f2.apply(src.act(m, n)) != dst.act(f1.apply(m), f2.apply(n)) {
                    return Err(XModError::EquivarianceFails { m, n });
                }
            }
        }
        Ok(StrictMorphism { src, dst, f1, f2 })
    }

    pub fn identity(c: &Arc<CrossedModule>) -> Self {
        StrictMorphism {
            src: c.clone(),
            dst: c.clone(),
            f1: GroupHom::identity(c.m()),
            f2: GroupHom::identity(c.n()),
        }
    }

    /// Componentwise composite `self ∘ inner`, re-verified.
    pub fn compose(&self, inner: &StrictMorphism) -> Result<Self, XModError> {
        if inner.dst != self.src {
            return Err(XModError::SourceTargetMismatch);
        }
        StrictMorphism::new(
            inner.src.clone(),
            self.dst.clone(),
            self.f1.compose(&inner.f1)?,
            self.f2.compose(&inner.f2)?,
        )
    }

    pub fn src(&self) -> &Arc<CrossedModule> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<CrossedModule> {
        &self.dst
    }

    pub fn f1(&self) -> &GroupHom {
        &self.f1
    }

    pub fn f2(&self) -> &GroupHom {
        &self.f2
    }

    pub fn is_endo_identity(&self) -> bool {
        self.src == self.dst
            && self.f1.map().iter().enumerate().all(|(i, &v)| i == v)
            && self.f2.map().iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Decides whether the morphism is an equivalence by constructing the
    /// maps it induces on kernels and cokernels of the boundaries and
    /// testing them for bijectivity.
    ///
    /// Both induced maps are total: `f₂(ker h₁) ⊆ ker h₂` follows from the
    /// commuting square and `f₁(im h₁) ⊆ im h₂` is immediate. A failure to
    /// build either is therefore an internal error.
    pub fn is_equivalence(&self) -> Result<EquivalenceReport, XModError> {
        let internal = |context: &str| XModError::InternalVerificationFailure {
            context: context.to_string(),
        };

        let (ker1, incl1) = self.src.pi2_with_inclusion();
        let (ker2, incl2) = self.dst.pi2_with_inclusion();
        let ker2_position = |x: usize| {
            incl2
                .map()
                .iter()
                .position(|&v| v == x)
                .ok_or_else(|| internal("f2 does not restrict to the kernels"))
        };
        let mut pi2_map = Vec::with_capacity(ker1.order());
        for k in ker1.elements() {
            pi2_map.push(ker2_position(self.f2.apply(incl1.apply(k)))?);
        }
        let pi2_map = GroupHom::new(ker1, ker2, pi2_map)
            .map_err(|e| internal(&format!("induced kernel map is not a homomorphism: {e}")))?;

        let (coker1, proj1) = self.src.pi1_with_projection();
        let (coker2, proj2) = self.dst.pi1_with_projection();
        let mut pi1_map = vec![usize::MAX; coker1.order()];
        for m in self.src.m().elements() {
            let from = proj1.apply(m);
            let to = proj2.apply(self.f1.apply(m));
            if pi1_map[from] != usize::MAX && pi1_map[from] != to {
                return Err(internal("induced cokernel map is not well defined"));
            }
            pi1_map[from] = to;
        }
        let pi1_map = GroupHom::new(coker1, coker2, pi1_map)
            .map_err(|e| internal(&format!("induced cokernel map is not a homomorphism: {e}")))?;

        let pi1_bijective = pi1_map.is_injective() && pi1_map.is_surjective();
        let pi2_bijective = pi2_map.is_injective() && pi2_map.is_surjective();
        Ok(EquivalenceReport {
            is_equivalence: pi1_bijective && pi2_bijective,
            pi1_bijective,
            pi2_bijective,
            pi1_map,
            pi2_map,
        })
    }
}

/// The maps a strict morphism induces on kernels and cokernels, and whether
/// both are bijections.
#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub is_equivalence: bool,
    pub pi1_bijective: bool,
    pub pi2_bijective: bool,
    pub pi1_map: GroupHom,
    pub pi2_map: GroupHom,
}

/// Enumerates every strict morphism between two crossed modules, ordered
/// lexicographically by `(f1, f2)` maps.
pub fn enumerate_strict_morphisms(
    src: &Arc<CrossedModule>,
    dst: &Arc<CrossedModule>,
    budget: u64,
) -> Result<Vec<StrictMorphism>, XModError> {
    let f1s = enumerate_homs(src.m(), dst.m(), budget)?;
    let f2s = enumerate_homs(src.n(), dst.n(), budget)?;
    let mut out = Vec::new();
    for f1 in &f1s {
        for f2 in &f2s {
            if let Ok(m) =
                StrictMorphism::new(src.clone(), dst.clone(), f1.clone(), f2.clone())
            {
                out.push(m);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
