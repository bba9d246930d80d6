//! Group homomorphisms as verified index maps, plus exact sequence checks
//! and exhaustive homomorphism enumeration.

use super::{FiniteGroup, GroupError, Subgroup};
use serde::Serialize;
use std::sync::Arc;

/// A verified homomorphism between two finite groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    src: Arc<FiniteGroup>,
    dst: Arc<FiniteGroup>,
    map: Vec<usize>,
}

impl GroupHom {
    /// Verifies `map[a·b] = map[a]·map[b]` over all pairs.
    pub fn new(
        src: Arc<FiniteGroup>,
        dst: Arc<FiniteGroup>,
        map: Vec<usize>,
    ) -> Result<Self, GroupError> {
        if map.len() != src.order() {
            return Err(GroupError::MalformedMap {
                len: map.len(),
                expected: src.order(),
            });
        }
        for (index, &value) in map.iter().enumerate() {
            if value >= dst.order() {
                return Err(GroupError::MapEntryOutOfRange {
                    index,
                    value,
                    order: dst.order(),
                });
            }
        }
        for a in src.elements() {
            for b in src.elements() {
                if map[src.mul(a, b)] != dst.mul(map[a], map[b]) {
                    return Err(GroupError::NotHomomorphism { a, b });
                }
            }
        }
        Ok(GroupHom { src, dst, map })
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> Self {
        GroupHom {
            src: g.clone(),
            dst: g.clone(),
            map: g.elements().collect(),
        }
    }

    /// The constant-identity homomorphism.
    pub fn trivial(src: &Arc<FiniteGroup>, dst: &Arc<FiniteGroup>) -> Self {
        GroupHom {
            src: src.clone(),
            dst: dst.clone(),
            map: vec![0; src.order()],
        }
    }

    pub fn src(&self) -> &Arc<FiniteGroup> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<FiniteGroup> {
        &self.dst
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// Composite `self ∘ inner`, verified on construction.
    pub fn compose(&self, inner: &GroupHom) -> Result<Self, GroupError> {
        if inner.dst != self.src {
            return Err(GroupError::MismatchedGroups);
        }
        GroupHom::new(
            inner.src.clone(),
            self.dst.clone(),
            inner.map.iter().map(|&a| self.map[a]).collect(),
        )
    }

    /// Kernel as a subgroup of the source; kernels are always normal.
    pub fn kernel(&self) -> Subgroup {
        let members: Vec<usize> = self
            .src
            .elements()
            .filter(|&a| self.map[a] == 0)
            .collect();
        Subgroup::new_known_normal(self.src.clone(), members)
    }

    /// Image as a subgroup of the target; the normality flag is computed by
    /// an explicit conjugation test.
    pub fn image(&self) -> Subgroup {
        let mut members: Vec<usize> = self.map.clone();
        members.sort_unstable();
        members.dedup();
        Subgroup::new(self.dst.clone(), members)
            .expect("the image of a homomorphism is a subgroup")
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.dst.order()];
        self.map.iter().all(|&v| {
            if seen[v] {
                false
            } else {
                seen[v] = true;
                true
            }
        })
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.dst.order()];
        for &v in &self.map {
            seen[v] = true;
        }
        seen.into_iter().all(|s| s)
    }
}

/// Why a pair of homomorphisms fails to be a short exact sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
pub enum ExtensionFailure {
    #[error("first map is not injective: {a} and {b} collide")]
    NotInjective { a: usize, b: usize },
    #[error("second map is not surjective: {missing} is not hit")]
    NotSurjective { missing: usize },
    #[error("image is not contained in the kernel: witness {witness}")]
    ImageNotInKernel { witness: usize },
    #[error("kernel is not contained in the image: witness {witness}")]
    KernelNotInImage { witness: usize },
}

/// Outcome of an exactness check, with the first failure as a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionCheck {
    pub exact: bool,
    pub failure: Option<ExtensionFailure>,
}

/// Checks whether `k` and `g` form a group extension: `k` injective, `g`
/// surjective, and `im(k) = ker(g)`. The two maps must share their middle
/// group.
pub fn is_extension(k: &GroupHom, g: &GroupHom) -> Result<ExtensionCheck, GroupError> {
    if k.dst() != g.src() {
        return Err(GroupError::MismatchedGroups);
    }
    let fail = |failure| {
        Ok(ExtensionCheck {
            exact: false,
            failure: Some(failure),
        })
    };
    for a in k.src().elements() {
        for b in (a + 1)..k.src().order() {
            if k.apply(a) == k.apply(b) {
                return fail(ExtensionFailure::NotInjective { a, b });
            }
        }
    }
    if let Some(missing) = g.dst().elements().find(|&v| !g.map().contains(&v)) {
        return fail(ExtensionFailure::NotSurjective { missing });
    }
    let image = k.image();
    let kernel = g.kernel();
    for &x in image.members() {
        if !kernel.contains(x) {
            return fail(ExtensionFailure::ImageNotInKernel { witness: x });
        }
    }
    for &x in kernel.members() {
        if !image.contains(x) {
            return fail(ExtensionFailure::KernelNotInImage { witness: x });
        }
    }
    Ok(ExtensionCheck {
        exact: true,
        failure: None,
    })
}

/// Breadth-first expression of every element of `g` as a word in `gens`.
///
/// Returns, in visit order, entries `(element, parent, generator_index)`
/// meaning `element = parent · gens[generator_index]`; the identity appears
/// first with no parent.
pub(crate) fn word_schedule(
    g: &FiniteGroup,
    gens: &[usize],
) -> Vec<(usize, Option<(usize, usize)>)> {
    let mut schedule = vec![(0, None)];
    let mut visited = vec![false; g.order()];
    visited[0] = true;
    let mut head = 0;
    while head < schedule.len() {
        let (x, _) = schedule[head];
        head += 1;
        for (gi, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            if !visited[y] {
                visited[y] = true;
                schedule.push((y, Some((x, gi))));
            }
        }
    }
    debug_assert_eq!(schedule.len(), g.order());
    schedule
}

/// Enumerates every homomorphism `src → dst`, deterministically ordered by
/// the lexicographic order of their maps.
///
/// The search assigns images to a greedily computed generating set of `src`,
/// pruned by element orders, and extends each assignment along a fixed word
/// schedule. Fails with [`GroupError::BudgetExceeded`] when the candidate
/// space after pruning is larger than `budget`.
pub fn enumerate_homs(
    src: &Arc<FiniteGroup>,
    dst: &Arc<FiniteGroup>,
    budget: u64,
) -> Result<Vec<GroupHom>, GroupError> {
    let gens = src.generating_set();
    let schedule = word_schedule(src, &gens);

    // Candidate images per generator: order must divide the generator's.
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let go = src.element_order(g);
            dst.elements()
                .filter(|&d| go % dst.element_order(d) == 0)
                .collect()
        })
        .collect();

    let mut space: u128 = 1;
    for c in &candidates {
        space = space.saturating_mul(c.len() as u128);
    }
    if space > budget as u128 {
        return Err(GroupError::BudgetExceeded {
            candidates: space,
            budget,
        });
    }

    let mut found = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    'outer: loop {
        let images: Vec<usize> = choice
            .iter()
            .zip(&candidates)
            .map(|(&c, cand)| cand[c])
            .collect();

        let mut map = vec![0usize; src.order()];
        for &(x, parent) in &schedule {
            if let Some((p, gi)) = parent {
                map[x] = dst.mul(map[p], images[gi]);
            }
        }
        let consistent = src
            .elements()
            .all(|a| src.elements().all(|b| map[src.mul(a, b)] == dst.mul(map[a], map[b])));
        if consistent {
            found.push(GroupHom {
                src: src.clone(),
                dst: dst.clone(),
                map,
            });
        }

        // Advance the mixed-radix counter over candidate choices.
        for i in (0..choice.len()).rev() {
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                continue 'outer;
            }
            choice[i] = 0;
        }
        break;
    }

    found.sort_by(|a, b| a.map.cmp(&b.map));
    Ok(found)
}
