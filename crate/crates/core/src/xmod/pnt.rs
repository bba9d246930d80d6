//! Pointed natural transformations: the 2-cells between strict morphisms.
//!
//! A transformation `G ⇒ F` is a crossed homomorphism `γ: M₁ → N₂`
//! satisfying `γ(aa') = (^f₁(a') γ(a)) · γ(a')` together with the two
//! compatibility conditions `g₁(a) = f₁(a) · h₂(γ(a⁻¹))` and
//! `g₂(b) = f₂(b) · γ(h₁(b⁻¹))`. All three are checked over all elements.

use super::{StrictMorphism, XModError};
use crate::group::GroupError;

/// A verified pointed natural transformation between parallel strict
/// morphisms, stored as a raw map `γ: M₁ → N₂` (not a homomorphism).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedNaturalTransformation {
    from: StrictMorphism,
    to: StrictMorphism,
    gamma: Vec<usize>,
}

fn check(
    from: &StrictMorphism,
    to: &StrictMorphism,
    gamma: &[usize],
) -> Result<(), XModError> {
    if from.src() != to.src() || from.dst() != to.dst() {
        return Err(XModError::ParallelMismatch);
    }
    let m1 = from.src().m();
    let n1 = from.src().n();
    let m2 = to.dst().m();
    let n2 = to.dst().n();
    let h1 = from.src().boundary();
    let h2 = to.dst().boundary();
    let target = to.dst();

    if gamma.len() != m1.order() {
        return Err(XModError::MalformedGamma {
            len: gamma.len(),
            expected: m1.order(),
        });
    }
    for (index, &value) in gamma.iter().enumerate() {
        if value >= n2.order() {
            return Err(XModError::GammaEntryOutOfRange {
                index,
                value,
                order: n2.order(),
            });
        }
    }

    for a in m1.elements() {
        for a_prime in m1.elements() {
            let lhs = gamma[m1.mul(a, a_prime)];
            let rhs = n2.mul(
                target.act(to.f1().apply(a_prime), gamma[a]),
                gamma[a_prime],
            );
            if lhs != rhs {
                return Err(XModError::CocycleFails { a, a_prime });
            }
        }
    }
    for a in m1.elements() {
        let rhs = m2.mul(to.f1().apply(a), h2.apply(gamma[m1.inv(a)]));
        if from.f1().apply(a) != rhs {
            return Err(XModError::ConditionOneFails { a });
        }
    }
    for b in n1.elements() {
        let rhs = n2.mul(to.f2().apply(b), gamma[h1.apply(n1.inv(b))]);
        if from.f2().apply(b) != rhs {
            return Err(XModError::ConditionTwoFails { b });
        }
    }
    Ok(())
}

impl PointedNaturalTransformation {
    /// Verifies the crossed homomorphism identity and both compatibility
    /// conditions exhaustively.
    pub fn new(
        from: StrictMorphism,
        to: StrictMorphism,
        gamma: Vec<usize>,
    ) -> Result<Self, XModError> {
        check(&from, &to, &gamma)?;
        Ok(PointedNaturalTransformation { from, to, gamma })
    }

    /// Builds a transformation without verifying it. Intended for fault
    /// injection in harness self-tests; composing or re-verifying a value
    /// built this way surfaces the corruption.
    pub fn unverified(from: StrictMorphism, to: StrictMorphism, gamma: Vec<usize>) -> Self {
        PointedNaturalTransformation { from, to, gamma }
    }

    /// The trivial transformation `F ⇒ F` with `γ ≡ 1`.
    pub fn identity(f: &StrictMorphism) -> Self {
        PointedNaturalTransformation {
            from: f.clone(),
            to: f.clone(),
            gamma: vec![0; f.src().m().order()],
        }
    }

    pub fn from_morphism(&self) -> &StrictMorphism {
        &self.from
    }

    pub fn to_morphism(&self) -> &StrictMorphism {
        &self.to
    }

    pub fn gamma(&self) -> &[usize] {
        &self.gamma
    }

    pub fn is_trivial(&self) -> bool {
        self.gamma.iter().all(|&v| v == 0)
    }

    fn reverify(
        from: StrictMorphism,
        to: StrictMorphism,
        gamma: Vec<usize>,
        context: &str,
    ) -> Result<Self, XModError> {
        check(&from, &to, &gamma).map_err(|e| XModError::InternalVerificationFailure {
            context: format!("{context}: {e}"),
        })?;
        Ok(PointedNaturalTransformation { from, to, gamma })
    }

    /// Vertical composite of `p1: G ⇒ F` and `p2: F ⇒ E`, the pointwise
    /// product `γ(a) = γ₂(a) · γ₁(a)` in `N₂`, giving `G ⇒ E`.
    ///
    /// The result is re-verified; a failure means a corrupted input and is
    /// reported as an internal verification failure.
    pub fn vertical(p1: &Self, p2: &Self) -> Result<Self, XModError> {
        if p1.to != p2.from {
            return Err(XModError::ChainMismatch);
        }
        let n2 = p1.to.dst().n();
        let gamma = p1
            .gamma
            .iter()
            .zip(&p2.gamma)
            .map(|(&g1, &g2)| n2.mul(g2, g1))
            .collect();
        Self::reverify(p1.from.clone(), p2.to.clone(), gamma, "vertical composite")
    }

    /// Horizontal composite of `p1: G ⇒ F` over `𝔠₁ → 𝔠₂` and `p2: E ⇒ K`
    /// over `𝔠₂ → 𝔠₃`, with `γ₃(a) = k₂(γ₁(a)) · γ₂(g₁(a))`, giving
    /// `(E∘G) ⇒ (K∘F)`.
    pub fn horizontal(p1: &Self, p2: &Self) -> Result<Self, XModError> {
        if p1.from.dst() != p2.from.src() {
            return Err(XModError::ChainMismatch);
        }
        let n3 = p2.to.dst().n();
        let k2 = p2.to.f2();
        let gamma = p1
            .from
            .src()
            .m()
            .elements()
            .map(|a| {
                n3.mul(
                    k2.apply(p1.gamma[a]),
                    p2.gamma[p1.from.f1().apply(a)],
                )
            })
            .collect();
        let from = p2.from.compose(&p1.from)?;
        let to = p2.to.compose(&p1.to)?;
        Self::reverify(from, to, gamma, "horizontal composite")
    }

    /// The pointwise inverse `γ'(a) = γ(a)⁻¹`, a transformation `F ⇒ G`.
    /// Inverting twice returns the original transformation.
    pub fn invert(&self) -> Result<Self, XModError> {
        let n2 = self.to.dst().n();
        let gamma = self.gamma.iter().map(|&v| n2.inv(v)).collect();
        Self::reverify(self.to.clone(), self.from.clone(), gamma, "inverse")
    }

    /// Enumerates every transformation `from ⇒ to`, ordered
    /// lexicographically by `γ`.
    ///
    /// The crossed homomorphism identity determines `γ` from its values on
    /// a generating set of `M₁`, so the search space is
    /// `|N₂|^(number of generators)`; candidate generator images are pruned
    /// by the first compatibility condition before extension.
    pub fn enumerate(
        from: &StrictMorphism,
        to: &StrictMorphism,
        budget: u64,
    ) -> Result<Vec<Self>, XModError> {
        if from.src() != to.src() || from.dst() != to.dst() {
            return Err(XModError::ParallelMismatch);
        }
        let m1 = from.src().m();
        let n2 = to.dst().n();
        let m2 = to.dst().m();
        let h2 = to.dst().boundary();
        let target = to.dst();

        let gens = m1.generating_set();
        let schedule = crate::group::word_schedule(m1, &gens);

        // Condition (1) at a generator g pins h₂(γ(g⁻¹)), and the crossed
        // homomorphism identity gives γ(g⁻¹) = ^f₁(g⁻¹) (γ(g)⁻¹), so a
        // candidate image for g must satisfy it already.
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                n2.elements()
                    .filter(|&c| {
                        let gamma_inv = target.act(to.f1().apply(m1.inv(g)), n2.inv(c));
                        from.f1().apply(g)
                            == m2.mul(to.f1().apply(g), h2.apply(gamma_inv))
                    })
                    .collect()
            })
            .collect();

        if candidates.iter().any(|c| c.is_empty()) {
            return Ok(Vec::new());
        }
        let mut space: u128 = 1;
        for c in &candidates {
            space = space.saturating_mul(c.len() as u128);
        }
        if space > budget as u128 {
            return Err(XModError::Group(GroupError::BudgetExceeded {
                candidates: space,
                budget,
            }));
        }

        let mut found = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        'outer: loop {
            let mut gamma = vec![0usize; m1.order()];
            for &(x, parent) in &schedule {
                if let Some((p, gi)) = parent {
                    // γ(p·g) = (^f₁(g) γ(p)) · γ(g)
                    let img = candidates[gi][choice[gi]];
                    let g = gens[gi];
                    gamma[x] = n2.mul(target.act(to.f1().apply(g), gamma[p]), img);
                }
            }
            if check(from, to, &gamma).is_ok() {
                found.push(PointedNaturalTransformation {
                    from: from.clone(),
                    to: to.clone(),
                    gamma,
                });
            }
            for i in (0..choice.len()).rev() {
                choice[i] += 1;
                if choice[i] < candidates[i].len() {
                    continue 'outer;
                }
                choice[i] = 0;
            }
            break;
        }

        found.sort_by(|a, b| a.gamma.cmp(&b.gamma));
        found.dedup_by(|a, b| a.gamma == b.gamma);
        Ok(found)
    }
}
