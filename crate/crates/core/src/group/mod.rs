//! Finite groups as Cayley tables.
//!
//! A group of order `n` is stored as its full `n × n` multiplication table
//! over element indices `0..n`, with the identity pinned at index `0`.
//! Construction validates every axiom (Latin square, associativity over all
//! triples, identity at zero) and rejects anything else with a witness.

mod action;
mod hom;

pub use action::GroupAction;
pub use hom::{enumerate_homs, is_extension, ExtensionCheck, ExtensionFailure, GroupHom};
pub(crate) use hom::word_schedule;

use serde::Serialize;
use std::sync::Arc;
use thiserror::Error;

/// Errors raised while constructing or combining group-level data.
///
/// Every axiom violation names the offending elements so callers can report
/// an exact witness.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum GroupError {
    #[error("table is not square: row {row} has length {len}, expected {expected}")]
    MalformedTable {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("table entry at ({row}, {col}) is {value}, out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("table is not a Latin square: {axis} {index} contains {value} twice")]
    NotLatinSquare {
        axis: &'static str,
        index: usize,
        value: usize,
    },

    #[error("table is not associative at triple ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("element 0 is not an identity: witness {witness}")]
    NoIdentityAtZero { witness: usize },

    #[error("map has length {len}, expected source order {expected}")]
    MalformedMap { len: usize, expected: usize },

    #[error("map entry at {index} is {value}, out of range for target order {order}")]
    MapEntryOutOfRange {
        index: usize,
        value: usize,
        order: usize,
    },

    #[error("map is not a homomorphism at pair ({a}, {b})")]
    NotHomomorphism { a: usize, b: usize },

    #[error("action of element {actor} is not an automorphism: witness pair ({a}, {b})")]
    NotAutomorphism { actor: usize, a: usize, b: usize },

    #[error("action is not multiplicative at ({m1}, {m2}): witness {n}")]
    NotAction { m1: usize, m2: usize, n: usize },

    #[error("identity acts nontrivially: moves {n}")]
    IdentityActsNontrivially { n: usize },

    #[error("subgroup misses the identity")]
    MissingIdentity,

    #[error("subgroup is not closed: {a} * {b} escapes the member set")]
    NotClosed { a: usize, b: usize },

    #[error("subgroup member {member} out of range for parent order {order}")]
    MemberOutOfRange { member: usize, order: usize },

    #[error("subgroup is not normal: conjugating {member} by {by} escapes the member set")]
    NotNormal { member: usize, by: usize },

    #[error("homomorphisms do not share a middle group")]
    MismatchedGroups,

    #[error("group mismatch: {context}")]
    GroupMismatch { context: &'static str },

    #[error("enumeration budget exceeded: {candidates} candidate maps over budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },
}

/// A finite group presented by its Cayley table.
///
/// Index `0` is always the identity. The inverse of each element is cached
/// at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a multiplication table and builds the group.
    ///
    /// Checks, in order: squareness and entry range, identity at index 0,
    /// the Latin square property of every row and column, and associativity
    /// over all `order³` triples.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Arc<Self>, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::MalformedTable {
                row: 0,
                len: 0,
                expected: 1,
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::MalformedTable {
                    row: i,
                    len: row.len(),
                    expected: order,
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        order,
                    });
                }
            }
        }

        let mut table = Vec::with_capacity(order * order);
        for row in rows {
            table.extend_from_slice(row);
        }

        for a in 0..order {
            if table[a] != a {
                return Err(GroupError::NoIdentityAtZero { witness: a });
            }
            if table[a * order] != a {
                return Err(GroupError::NoIdentityAtZero { witness: a });
            }
        }

        let mut seen = vec![false; order];
        for i in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..order {
                let v = table[i * order + j];
                if seen[v] {
                    return Err(GroupError::NotLatinSquare {
                        axis: "row",
                        index: i,
                        value: v,
                    });
                }
                seen[v] = true;
            }
        }
        for j in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..order {
                let v = table[i * order + j];
                if seen[v] {
                    return Err(GroupError::NotLatinSquare {
                        axis: "column",
                        index: j,
                        value: v,
                    });
                }
                seen[v] = true;
            }
        }

        for a in 0..order {
            for b in 0..order {
                let ab = table[a * order + b];
                for c in 0..order {
                    if table[ab * order + c] != table[a * order + table[b * order + c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        let mut inverse = vec![0usize; order];
        for a in 0..order {
            // A row of a Latin square with identity at 0 always contains 0.
            let inv = (0..order).find(|&b| table[a * order + b] == 0).unwrap();
            inverse[a] = inv;
        }

        Ok(Arc::new(FiniteGroup {
            order,
            table,
            inverse,
        }))
    }

    /// The one-element group.
    pub fn trivial() -> Arc<Self> {
        FiniteGroup::from_table(&[vec![0]]).unwrap()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Product of two element indices.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// Cached inverse of an element index.
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Conjugate `x` by `g`, i.e. `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order)
            .all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The table as rows, for serialization.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| self.table[i * self.order..(i + 1) * self.order].to_vec())
            .collect()
    }

    /// A generating set computed greedily: scan elements in index order and
    /// keep those that enlarge the generated subgroup. Returns the empty set
    /// for the trivial group.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut generated = vec![false; self.order];
        generated[0] = true;
        let mut count = 1;
        for g in 1..self.order {
            if generated[g] {
                continue;
            }
            gens.push(g);
            // Close the currently generated set under products with everything
            // reachable, breadth-first.
            let mut queue: Vec<usize> = (0..self.order).filter(|&x| generated[x]).collect();
            generated[g] = true;
            queue.push(g);
            count += 1;
            while let Some(x) = queue.pop() {
                for &h in gens.iter() {
                    for y in [self.mul(x, h), self.mul(h, x)] {
                        if !generated[y] {
                            generated[y] = true;
                            count += 1;
                            queue.push(y);
                        }
                    }
                }
            }
            if count == self.order {
                break;
            }
        }
        gens
    }
}

/// A subset of a parent group's indices, closed under product and inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
    normal: bool,
}

impl Subgroup {
    /// Validates closure and computes the normality flag by an explicit
    /// conjugation test.
    pub fn new(
        parent: Arc<FiniteGroup>,
        members: impl IntoIterator<Item = usize>,
    ) -> Result<Self, GroupError> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            if m >= parent.order() {
                return Err(GroupError::MemberOutOfRange {
                    member: m,
                    order: parent.order(),
                });
            }
        }
        if members.binary_search(&0).is_err() {
            return Err(GroupError::MissingIdentity);
        }
        for &a in &members {
            for &b in &members {
                if members.binary_search(&parent.mul(a, b)).is_err() {
                    return Err(GroupError::NotClosed { a, b });
                }
            }
            // Closure under product in a finite set implies closure under
            // inverse, so no separate check is needed.
        }
        let normal = compute_normal(&parent, &members);
        Ok(Subgroup {
            parent,
            members,
            normal,
        })
    }

    pub(crate) fn new_known_normal(
        parent: Arc<FiniteGroup>,
        members: Vec<usize>,
    ) -> Self {
        Subgroup {
            parent,
            members,
            normal: true,
        }
    }

    pub fn trivial(parent: Arc<FiniteGroup>) -> Self {
        Subgroup {
            parent,
            members: vec![0],
            normal: true,
        }
    }

    pub fn whole(parent: Arc<FiniteGroup>) -> Self {
        let members = (0..parent.order()).collect();
        Subgroup {
            parent,
            members,
            normal: true,
        }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    /// Re-indexes the subgroup as a group in its own right, together with
    /// the inclusion homomorphism back into the parent.
    pub fn to_group(&self) -> (Arc<FiniteGroup>, GroupHom) {
        let n = self.members.len();
        let position = |x: usize| self.members.binary_search(&x).unwrap();
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| position(self.parent.mul(self.members[i], self.members[j])))
                    .collect()
            })
            .collect();
        let group = FiniteGroup::from_table(&rows)
            .expect("a closed subset of a group is a group");
        let incl = GroupHom::new(
            group.clone(),
            self.parent.clone(),
            self.members.clone(),
        )
        .expect("inclusion of a subgroup is a homomorphism");
        (group, incl)
    }
}

fn compute_normal(parent: &FiniteGroup, members: &[usize]) -> bool {
    members.iter().all(|&s| {
        parent
            .elements()
            .all(|g| members.binary_search(&parent.conj(g, s)).is_ok())
    })
}

/// Quotient of the subgroup's parent by a normal subgroup.
///
/// Coset representatives are the smallest index in each coset, listed in
/// increasing order, so the result is deterministic. Returns the quotient
/// group together with the projection homomorphism.
pub fn quotient(sub: &Subgroup) -> Result<(Arc<FiniteGroup>, GroupHom), GroupError> {
    if !sub.is_normal() {
        let (&member, by) = sub
            .members()
            .iter()
            .find_map(|m| {
                sub.parent()
                    .elements()
                    .find(|&g| !sub.contains(sub.parent().conj(g, *m)))
                    .map(|g| (m, g))
            })
            .expect("non-normal subgroup has a conjugation witness");
        return Err(GroupError::NotNormal { member, by });
    }
    let parent = sub.parent().clone();
    let order = parent.order();

    // Coset representative of each element: the minimum of its coset.
    let mut rep = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for a in 0..order {
        if rep[a] != usize::MAX {
            continue;
        }
        // a has the smallest index in its coset since we scan in order.
        reps.push(a);
        for &s in sub.members() {
            rep[parent.mul(a, s)] = a;
        }
    }
    let rep_index = |r: usize| reps.binary_search(&r).unwrap();

    let rows: Vec<Vec<usize>> = reps
        .iter()
        .map(|&a| {
            reps.iter()
                .map(|&b| rep_index(rep[parent.mul(a, b)]))
                .collect()
        })
        .collect();
    let quot = FiniteGroup::from_table(&rows)?;
    let projection = GroupHom::new(
        parent,
        quot.clone(),
        (0..order).map(|a| rep_index(rep[a])).collect(),
    )?;
    Ok((quot, projection))
}

/// Semidirect product `N ⋊ M` for an action of `M` on `N`.
///
/// Pairs `(n, m)` are enumerated as `n * |M| + m` and multiply by
/// `(n₁, m₁)·(n₂, m₂) = (n₁ · ᵐ¹n₂, m₁ · m₂)`. Returns the product group,
/// the inclusion `k: N → N⋊M`, and the projection `g: N⋊M → M`; the
/// resulting sequence `N → N⋊M → M` is a split extension.
pub fn semidirect_product(
    n: &Arc<FiniteGroup>,
    m: &Arc<FiniteGroup>,
    act: &GroupAction,
) -> Result<(Arc<FiniteGroup>, GroupHom, GroupHom), GroupError> {
    if act.actor() != m || act.acted() != n {
        return Err(GroupError::GroupMismatch {
            context: "semidirect product action must be the given M acting on the given N",
        });
    }
    let (no, mo) = (n.order(), m.order());
    let order = no * mo;
    let pair = |ni: usize, mi: usize| ni * mo + mi;
    let rows: Vec<Vec<usize>> = (0..order)
        .map(|x| {
            let (n1, m1) = (x / mo, x % mo);
            (0..order)
                .map(|y| {
                    let (n2, m2) = (y / mo, y % mo);
                    pair(n.mul(n1, act.apply(m1, n2)), m.mul(m1, m2))
                })
                .collect()
        })
        .collect();
    let product = FiniteGroup::from_table(&rows)?;
    let inclusion = GroupHom::new(
        n.clone(),
        product.clone(),
        (0..no).map(|ni| pair(ni, 0)).collect(),
    )?;
    let projection = GroupHom::new(
        product.clone(),
        m.clone(),
        (0..order).map(|x| x % mo).collect(),
    )?;
    Ok((product, inclusion, projection))
}
