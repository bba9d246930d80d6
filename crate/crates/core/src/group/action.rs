//! Group actions by automorphisms, stored as one permutation per actor.

use super::{FiniteGroup, GroupError, GroupHom};
use std::sync::Arc;

/// An action of `actor` on `acted` by automorphisms.
///
/// `maps[m]` is the permutation realizing `n ↦ ᵐn`; the action law used is
/// `maps[m·m'] = maps[m] ∘ maps[m']`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    actor: Arc<FiniteGroup>,
    acted: Arc<FiniteGroup>,
    maps: Vec<Vec<usize>>,
}

impl GroupAction {
    /// Verifies that every `maps[m]` is an automorphism, that the identity
    /// acts trivially, and that the maps compose according to the actor's
    /// multiplication.
    pub fn new(
        actor: Arc<FiniteGroup>,
        acted: Arc<FiniteGroup>,
        maps: Vec<Vec<usize>>,
    ) -> Result<Self, GroupError> {
        if maps.len() != actor.order() {
            return Err(GroupError::MalformedMap {
                len: maps.len(),
                expected: actor.order(),
            });
        }
        for (m, perm) in maps.iter().enumerate() {
            if perm.len() != acted.order() {
                return Err(GroupError::MalformedMap {
                    len: perm.len(),
                    expected: acted.order(),
                });
            }
            for (index, &value) in perm.iter().enumerate() {
                if value >= acted.order() {
                    return Err(GroupError::MapEntryOutOfRange {
                        index,
                        value,
                        order: acted.order(),
                    });
                }
            }
            let mut seen = vec![false; acted.order()];
            for &v in perm {
                if seen[v] {
                    return Err(GroupError::NotAutomorphism { actor: m, a: v, b: v });
                }
                seen[v] = true;
            }
            for a in acted.elements() {
                for b in acted.elements() {
                    if perm[acted.mul(a, b)] != acted.mul(perm[a], perm[b]) {
                        return Err(GroupError::NotAutomorphism { actor: m, a, b });
                    }
                }
            }
        }
        if let Some(n) = acted.elements().find(|&n| maps[0][n] != n) {
            return Err(GroupError::IdentityActsNontrivially { n });
        }
        for m1 in actor.elements() {
            for m2 in actor.elements() {
                let prod = actor.mul(m1, m2);
                for n in acted.elements() {
                    if maps[prod][n] != maps[m1][maps[m2][n]] {
                        return Err(GroupError::NotAction { m1, m2, n });
                    }
                }
            }
        }
        Ok(GroupAction { actor, acted, maps })
    }

    /// The action where every actor element fixes everything.
    pub fn trivial(actor: &Arc<FiniteGroup>, acted: &Arc<FiniteGroup>) -> Self {
        GroupAction {
            actor: actor.clone(),
            acted: acted.clone(),
            maps: vec![acted.elements().collect(); actor.order()],
        }
    }

    /// A group acting on itself by conjugation.
    pub fn conjugation(g: &Arc<FiniteGroup>) -> Self {
        let maps = g
            .elements()
            .map(|m| g.elements().map(|n| g.conj(m, n)).collect())
            .collect();
        GroupAction {
            actor: g.clone(),
            acted: g.clone(),
            maps,
        }
    }

    /// Conjugation action of the parent on an embedded subgroup.
    ///
    /// `incl` must be injective with an image closed under conjugation by
    /// every parent element; the resulting action of `incl.dst()` on
    /// `incl.src()` is `n ↦ ι⁻¹(m · ι(n) · m⁻¹)`.
    pub fn conjugation_through(incl: &GroupHom) -> Result<Self, GroupError> {
        let sub = incl.src();
        let parent = incl.dst();
        let mut preimage = vec![usize::MAX; parent.order()];
        for n in sub.elements() {
            let v = incl.apply(n);
            if preimage[v] != usize::MAX {
                return Err(GroupError::GroupMismatch {
                    context: "conjugation action requires an injective inclusion",
                });
            }
            preimage[v] = n;
        }
        let mut maps = Vec::with_capacity(parent.order());
        for m in parent.elements() {
            let mut perm = Vec::with_capacity(sub.order());
            for n in sub.elements() {
                let conj = parent.conj(m, incl.apply(n));
                if preimage[conj] == usize::MAX {
                    return Err(GroupError::NotNormal {
                        member: incl.apply(n),
                        by: m,
                    });
                }
                perm.push(preimage[conj]);
            }
            maps.push(perm);
        }
        GroupAction::new(parent.clone(), sub.clone(), maps)
    }

    /// Restriction of the action along a homomorphism into the actor:
    /// `along.src()` acts on the same set via `maps[along(m)]`.
    pub fn pullback(&self, along: &GroupHom) -> Result<Self, GroupError> {
        if along.dst() != &self.actor {
            return Err(GroupError::GroupMismatch {
                context: "pullback homomorphism must land in the actor",
            });
        }
        let maps = along
            .src()
            .elements()
            .map(|m| self.maps[along.apply(m)].clone())
            .collect();
        GroupAction::new(along.src().clone(), self.acted.clone(), maps)
    }

    pub fn actor(&self) -> &Arc<FiniteGroup> {
        &self.actor
    }

    pub fn acted(&self) -> &Arc<FiniteGroup> {
        &self.acted
    }

    /// The image `ᵐn`.
    #[inline]
    pub fn apply(&self, m: usize, n: usize) -> usize {
        self.maps[m][n]
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }
}
