//! Executable checks of the 2-category laws for crossed modules on finite,
//! fully enumerated instances.
//!
//! An instance is a set of objects (crossed modules) with 1-cells closed
//! under composition and identities, and with the 2-cells between every
//! parallel pair of 1-cells enumerated exhaustively. The checks verify, by
//! brute force: that each hom-category is a category (vertical composition
//! associative and unital), that horizontal composition is functorial
//! (preserves identities and satisfies interchange), and that 1-cell
//! composition is strictly associative and unital, which makes the pentagon
//! and triangle constraints degenerate.

use crate::group::GroupError;
use crate::xmod::{
    enumerate_strict_morphisms, CrossedModule, PointedNaturalTransformation, StrictMorphism,
    XModError,
};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum TwoCatError {
    #[error("morphism endpoints are not among the instance objects")]
    UnknownObject,

    #[error(transparent)]
    XMod(#[from] XModError),
}

impl From<GroupError> for TwoCatError {
    fn from(e: GroupError) -> Self {
        TwoCatError::XMod(XModError::Group(e))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// One named law check with an optional violation witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl CheckResult {
    fn pass(name: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Pass,
            witness: None,
        }
    }

    fn fail(name: impl Into<String>, witness: Value) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Fail,
            witness: Some(witness),
        }
    }

    fn skipped(name: impl Into<String>, witness: Value) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Skipped,
            witness: Some(witness),
        }
    }
}

/// Informational findings that are not laws, reported alongside the checks:
/// which 1-cells carry nontrivial self 2-cells, and 2-cell invertibility.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Observation {
    pub name: String,
    pub detail: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct HarnessReport {
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub observations: Vec<Observation>,
}

impl HarnessReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn merge(&mut self, other: HarnessReport) {
        self.checks.extend(other.checks);
        self.observations.extend(other.observations);
    }
}

/// A finite 2-categorical instance: objects, 1-cells closed under
/// composition, and exhaustively enumerated 2-cells per parallel pair.
///
/// 2-cells are keyed by `(src_object, dst_object, from_cell, to_cell)`;
/// a `None` entry records that enumeration was skipped because the search
/// space exceeded the budget, which the checks report as skipped rather
/// than silently passing.
#[derive(Debug, Clone)]
pub struct TwoCellInstance {
    objects: Vec<Arc<CrossedModule>>,
    one_cells: BTreeMap<(usize, usize), Vec<StrictMorphism>>,
    two_cells: BTreeMap<(usize, usize, usize, usize), Option<Vec<PointedNaturalTransformation>>>,
}

impl TwoCellInstance {
    /// Builds an instance from generating 1-cells: identities are added,
    /// the 1-cells are closed under composition, and the 2-cells between
    /// every parallel pair are enumerated (or marked skipped past the
    /// budget).
    pub fn closure(
        objects: Vec<Arc<CrossedModule>>,
        generators: Vec<StrictMorphism>,
        pnt_budget: u64,
    ) -> Result<Self, TwoCatError> {
        let index_of = |c: &Arc<CrossedModule>| objects.iter().position(|o| o == c);
        let mut one_cells: BTreeMap<(usize, usize), Vec<StrictMorphism>> = BTreeMap::new();
        for (i, c) in objects.iter().enumerate() {
            one_cells.entry((i, i)).or_default().push(StrictMorphism::identity(c));
        }
        for g in generators {
            let i = index_of(g.src()).ok_or(TwoCatError::UnknownObject)?;
            let j = index_of(g.dst()).ok_or(TwoCatError::UnknownObject)?;
            let cell = one_cells.entry((i, j)).or_default();
            if !cell.contains(&g) {
                cell.push(g);
            }
        }

        // Close under composition to a fixpoint.
        loop {
            let mut added = false;
            let snapshot: Vec<((usize, usize), Vec<StrictMorphism>)> = one_cells
                .iter()
                .map(|(k, v)| (*k, v.clone()))
                .collect();
            for ((i, j), inner_cells) in &snapshot {
                for ((j2, k), outer_cells) in &snapshot {
                    if j != j2 {
                        continue;
                    }
                    for inner in inner_cells {
                        for outer in outer_cells {
                            let composite = outer.compose(inner)?;
                            let cell = one_cells.entry((*i, *k)).or_default();
                            if !cell.contains(&composite) {
                                cell.push(composite);
                                added = true;
                            }
                        }
                    }
                }
            }
            if !added {
                break;
            }
        }
        for cells in one_cells.values_mut() {
            cells.sort_by(|a, b| {
                (a.f1().map(), a.f2().map()).cmp(&(b.f1().map(), b.f2().map()))
            });
        }

        let mut two_cells = BTreeMap::new();
        for ((i, j), cells) in &one_cells {
            for (a, from) in cells.iter().enumerate() {
                for (b, to) in cells.iter().enumerate() {
                    let entry = match PointedNaturalTransformation::enumerate(
                        from, to, pnt_budget,
                    ) {
                        Ok(pnts) => Some(pnts),
                        Err(XModError::Group(GroupError::BudgetExceeded { .. })) => None,
                        Err(e) => return Err(e.into()),
                    };
                    two_cells.insert((*i, *j, a, b), entry);
                }
            }
        }

        Ok(TwoCellInstance {
            objects,
            one_cells,
            two_cells,
        })
    }

    /// Builds the instance generated by every strict morphism between the
    /// given objects.
    pub fn exhaustive(
        objects: Vec<Arc<CrossedModule>>,
        hom_budget: u64,
        pnt_budget: u64,
    ) -> Result<Self, TwoCatError> {
        let mut generators = Vec::new();
        for src in &objects {
            for dst in &objects {
                generators.extend(enumerate_strict_morphisms(src, dst, hom_budget)?);
            }
        }
        Self::closure(objects, generators, pnt_budget)
    }

    pub fn objects(&self) -> &[Arc<CrossedModule>] {
        &self.objects
    }

    pub fn one_cells(&self, src: usize, dst: usize) -> &[StrictMorphism] {
        self.one_cells
            .get(&(src, dst))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// The enumerated 2-cells `from ⇒ to`, or `None` when skipped.
    pub fn two_cells(
        &self,
        src: usize,
        dst: usize,
        from: usize,
        to: usize,
    ) -> Option<&[PointedNaturalTransformation]> {
        self.two_cells
            .get(&(src, dst, from, to))
            .and_then(|v| v.as_deref())
    }

    /// Replaces one stored 2-cell, bypassing verification. Fault-injection
    /// hook for harness self-tests.
    pub fn replace_two_cell(
        &mut self,
        key: (usize, usize, usize, usize),
        index: usize,
        cell: PointedNaturalTransformation,
    ) {
        if let Some(Some(cells)) = self.two_cells.get_mut(&key) {
            cells[index] = cell;
        }
    }

    fn cell_index(&self, i: usize, j: usize, m: &StrictMorphism) -> Option<usize> {
        self.one_cells(i, j).iter().position(|c| c == m)
    }

    fn find_two_cell(
        &self,
        i: usize,
        j: usize,
        p: &PointedNaturalTransformation,
    ) -> Option<(usize, usize, usize)> {
        let a = self.cell_index(i, j, p.from_morphism())?;
        let b = self.cell_index(i, j, p.to_morphism())?;
        let idx = self
            .two_cells(i, j, a, b)?
            .iter()
            .position(|q| q.gamma() == p.gamma())?;
        Some((a, b, idx))
    }
}

fn pnt_witness(p: &PointedNaturalTransformation) -> Value {
    json!({ "gamma": p.gamma() })
}

/// Checks that the 2-cells between objects `i` and `j` form a category
/// under vertical composition: identities present and neutral,
/// composition closed and associative.
pub fn check_hom_category(inst: &TwoCellInstance, i: usize, j: usize) -> HarnessReport {
    let mut report = HarnessReport::default();
    let cells = inst.one_cells(i, j);
    let pair = format!("({i}->{j})");

    let mut skipped = Vec::new();
    for a in 0..cells.len() {
        for b in 0..cells.len() {
            if inst.two_cells(i, j, a, b).is_none() {
                skipped.push(json!([a, b]));
            }
        }
    }
    if !skipped.is_empty() {
        report.checks.push(CheckResult::skipped(
            format!("hom_category {pair}"),
            json!({ "skipped_pairs": skipped }),
        ));
        return report;
    }

    // Identity 2-cells exist in the enumeration.
    for (a, f) in cells.iter().enumerate() {
        let id = PointedNaturalTransformation::identity(f);
        if inst.find_two_cell(i, j, &id).is_none() {
            report.checks.push(CheckResult::fail(
                format!("hom_category_identity_present {pair}"),
                json!({ "cell": a }),
            ));
            return report;
        }
    }
    report
        .checks
        .push(CheckResult::pass(format!("hom_category_identity_present {pair}")));

    // Unit laws.
    let mut unit = CheckResult::pass(format!("hom_category_unit {pair}"));
    'unit: for a in 0..cells.len() {
        for b in 0..cells.len() {
            for p in inst.two_cells(i, j, a, b).unwrap() {
                let id_from = PointedNaturalTransformation::identity(&cells[a]);
                let id_to = PointedNaturalTransformation::identity(&cells[b]);
                let left = PointedNaturalTransformation::vertical(&id_from, p);
                let right = PointedNaturalTransformation::vertical(p, &id_to);
                let ok = matches!(&left, Ok(q) if q == p) && matches!(&right, Ok(q) if q == p);
                if !ok {
                    unit = CheckResult::fail(
                        format!("hom_category_unit {pair}"),
                        json!({
                            "from": a,
                            "to": b,
                            "cell": pnt_witness(p),
                            "left_error": left.err().map(|e| e.to_string()),
                            "right_error": right.err().map(|e| e.to_string()),
                        }),
                    );
                    break 'unit;
                }
            }
        }
    }
    report.checks.push(unit);

    // Closure and associativity of vertical composition.
    let mut closure = CheckResult::pass(format!("hom_category_closure {pair}"));
    let mut assoc = CheckResult::pass(format!("hom_category_associativity {pair}"));
    'outer: for a in 0..cells.len() {
        for b in 0..cells.len() {
            for p in inst.two_cells(i, j, a, b).unwrap() {
                for c in 0..cells.len() {
                    for q in inst.two_cells(i, j, b, c).unwrap() {
                        let pq = match PointedNaturalTransformation::vertical(p, q) {
                            Ok(v) => v,
                            Err(e) => {
                                closure = CheckResult::fail(
                                    format!("hom_category_closure {pair}"),
                                    json!({
                                        "from": a, "via": b, "to": c,
                                        "error": e.to_string(),
                                        "p": pnt_witness(p), "q": pnt_witness(q),
                                    }),
                                );
                                break 'outer;
                            }
                        };
                        if inst.find_two_cell(i, j, &pq).is_none() {
                            closure = CheckResult::fail(
                                format!("hom_category_closure {pair}"),
                                json!({
                                    "from": a, "via": b, "to": c,
                                    "composite": pnt_witness(&pq),
                                }),
                            );
                            break 'outer;
                        }
                        for d in 0..cells.len() {
                            for r in inst.two_cells(i, j, c, d).unwrap() {
                                let left = PointedNaturalTransformation::vertical(&pq, r);
                                let qr = PointedNaturalTransformation::vertical(q, r);
                                let right = qr.and_then(|qr| {
                                    PointedNaturalTransformation::vertical(p, &qr)
                                });
                                if !matches!((&left, &right), (Ok(l), Ok(rr)) if l == rr) {
                                    assoc = CheckResult::fail(
                                        format!("hom_category_associativity {pair}"),
                                        json!({
                                            "chain": [a, b, c, d],
                                            "p": pnt_witness(p),
                                            "q": pnt_witness(q),
                                            "r": pnt_witness(r),
                                        }),
                                    );
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.checks.push(closure);
    report.checks.push(assoc);
    report
}

/// Checks functoriality of horizontal composition across objects
/// `i → j → k`: identity preservation and the interchange law.
pub fn check_interchange(
    inst: &TwoCellInstance,
    i: usize,
    j: usize,
    k: usize,
) -> HarnessReport {
    let mut report = HarnessReport::default();
    let triple = format!("({i}->{j}->{k})");
    let inner_cells = inst.one_cells(i, j);
    let outer_cells = inst.one_cells(j, k);

    let mut skipped = false;
    for a in 0..inner_cells.len() {
        for b in 0..inner_cells.len() {
            skipped |= inst.two_cells(i, j, a, b).is_none();
        }
    }
    for a in 0..outer_cells.len() {
        for b in 0..outer_cells.len() {
            skipped |= inst.two_cells(j, k, a, b).is_none();
        }
    }
    if skipped {
        report.checks.push(CheckResult::skipped(
            format!("interchange {triple}"),
            json!("two-cell enumeration over budget"),
        ));
        return report;
    }

    // id_F ⋆ id_G = id_{F∘G}.
    let mut identity = CheckResult::pass(format!("horizontal_identity {triple}"));
    'ident: for f in inner_cells {
        for g in outer_cells {
            let composite = match g.compose(f) {
                Ok(c) => c,
                Err(e) => {
                    identity = CheckResult::fail(
                        format!("horizontal_identity {triple}"),
                        json!({ "error": e.to_string() }),
                    );
                    break 'ident;
                }
            };
            let id_f = PointedNaturalTransformation::identity(f);
            let id_g = PointedNaturalTransformation::identity(g);
            let star = PointedNaturalTransformation::horizontal(&id_f, &id_g);
            let expected = PointedNaturalTransformation::identity(&composite);
            if !matches!(&star, Ok(s) if *s == expected) {
                identity = CheckResult::fail(
                    format!("horizontal_identity {triple}"),
                    json!({
                        "error": star.err().map(|e| e.to_string()),
                    }),
                );
                break 'ident;
            }
        }
    }
    report.checks.push(identity);

    // (q₂ ∘ q₁) ⋆ (p₂ ∘ p₁) = (q₂ ⋆ p₂) ∘ (q₁ ⋆ p₁).
    let mut interchange = CheckResult::pass(format!("interchange {triple}"));
    'inter: for a in 0..inner_cells.len() {
        for b in 0..inner_cells.len() {
            for p1 in inst.two_cells(i, j, a, b).unwrap() {
                for c in 0..inner_cells.len() {
                    for p2 in inst.two_cells(i, j, b, c).unwrap() {
                        for d in 0..outer_cells.len() {
                            for e in 0..outer_cells.len() {
                                for q1 in inst.two_cells(j, k, d, e).unwrap() {
                                    for f in 0..outer_cells.len() {
                                        for q2 in inst.two_cells(j, k, e, f).unwrap() {
                                            let lhs = PointedNaturalTransformation::vertical(
                                                p1, p2,
                                            )
                                            .and_then(|p| {
                                                PointedNaturalTransformation::vertical(q1, q2)
                                                    .map(|q| (p, q))
                                            })
                                            .and_then(|(p, q)| {
                                                PointedNaturalTransformation::horizontal(&p, &q)
                                            });
                                            let rhs = PointedNaturalTransformation::horizontal(
                                                p1, q1,
                                            )
                                            .and_then(|s1| {
                                                PointedNaturalTransformation::horizontal(p2, q2)
                                                    .map(|s2| (s1, s2))
                                            })
                                            .and_then(|(s1, s2)| {
                                                PointedNaturalTransformation::vertical(&s1, &s2)
                                            });
                                            if !matches!(
                                                (&lhs, &rhs),
                                                (Ok(l), Ok(r)) if l == r
                                            ) {
                                                interchange = CheckResult::fail(
                                                    format!("interchange {triple}"),
                                                    json!({
                                                        "inner_chain": [a, b, c],
                                                        "outer_chain": [d, e, f],
                                                        "p1": pnt_witness(p1),
                                                        "p2": pnt_witness(p2),
                                                        "q1": pnt_witness(q1),
                                                        "q2": pnt_witness(q2),
                                                    }),
                                                );
                                                break 'inter;
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.checks.push(interchange);
    report
}

/// Checks that 1-cell composition is strictly associative and unital, so
/// the associator and unit 2-cells are identities and the pentagon and
/// triangle commute degenerately.
pub fn check_strict_laws(inst: &TwoCellInstance) -> HarnessReport {
    let mut report = HarnessReport::default();
    let n = inst.objects().len();

    let mut unit = CheckResult::pass("one_cell_units".to_string());
    'unit: for i in 0..n {
        for j in 0..n {
            let id_i = StrictMorphism::identity(&inst.objects()[i]);
            let id_j = StrictMorphism::identity(&inst.objects()[j]);
            for f in inst.one_cells(i, j) {
                let left = f.compose(&id_i);
                let right = id_j.compose(f);
                if !matches!(&left, Ok(l) if l == f) || !matches!(&right, Ok(r) if r == f) {
                    unit = CheckResult::fail(
                        "one_cell_units".to_string(),
                        json!({ "pair": [i, j] }),
                    );
                    break 'unit;
                }
            }
        }
    }
    report.checks.push(unit);

    let mut assoc = CheckResult::pass("one_cell_associativity".to_string());
    let mut pentagon = CheckResult::pass("pentagon_triangle_degenerate".to_string());
    'assoc: for i in 0..n {
        for j in 0..n {
            for h in inst.one_cells(i, j) {
                for k in 0..n {
                    for g in inst.one_cells(j, k) {
                        let gh = match g.compose(h) {
                            Ok(c) => c,
                            Err(e) => {
                                assoc = CheckResult::fail(
                                    "one_cell_associativity".to_string(),
                                    json!({ "error": e.to_string() }),
                                );
                                break 'assoc;
                            }
                        };
                        for l in 0..n {
                            for f in inst.one_cells(k, l) {
                                let fg = f.compose(g).expect("endpoints match");
                                let left = fg.compose(h).expect("endpoints match");
                                let right = f.compose(&gh).expect("endpoints match");
                                if left != right {
                                    assoc = CheckResult::fail(
                                        "one_cell_associativity".to_string(),
                                        json!({ "chain": [i, j, k, l] }),
                                    );
                                    break 'assoc;
                                }
                                // The associator 2-cell between the equal
                                // composites is the identity; both pentagon
                                // routes are identity 2-cells on the nose.
                                let assoc_cell = PointedNaturalTransformation::identity(&left);
                                if !assoc_cell.is_trivial() {
                                    pentagon = CheckResult::fail(
                                        "pentagon_triangle_degenerate".to_string(),
                                        json!({ "chain": [i, j, k, l] }),
                                    );
                                    break 'assoc;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.checks.push(assoc);
    report.checks.push(pentagon);
    report
}

/// Runs every check over all object pairs and triples, and reports the
/// self-2-cell and invertibility observations.
pub fn check_all(inst: &TwoCellInstance) -> HarnessReport {
    let mut report = HarnessReport::default();
    let n = inst.objects().len();
    for i in 0..n {
        for j in 0..n {
            report.merge(check_hom_category(inst, i, j));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                report.merge(check_interchange(inst, i, j, k));
            }
        }
    }
    report.merge(check_strict_laws(inst));

    // Observation: are the only self 2-cells G ⇒ G the trivial ones?
    let mut nontrivial = Vec::new();
    let mut invertible = 0usize;
    let mut total = 0usize;
    let mut failures = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let cells = inst.one_cells(i, j);
            for a in 0..cells.len() {
                if let Some(pnts) = inst.two_cells(i, j, a, a) {
                    let extra = pnts.iter().filter(|p| !p.is_trivial()).count();
                    if extra > 0 {
                        nontrivial.push(json!({ "pair": [i, j], "cell": a, "count": extra }));
                    }
                }
                for b in 0..cells.len() {
                    if let Some(pnts) = inst.two_cells(i, j, a, b) {
                        for p in pnts {
                            total += 1;
                            match p.invert() {
                                Ok(_) => invertible += 1,
                                Err(e) => failures.push(json!({
                                    "pair": [i, j],
                                    "cells": [a, b],
                                    "error": e.to_string(),
                                })),
                            }
                        }
                    }
                }
            }
        }
    }
    report.observations.push(Observation {
        name: "self_two_cells_trivial".to_string(),
        detail: json!({
            "holds": nontrivial.is_empty(),
            "nontrivial": nontrivial,
        }),
    });
    report.observations.push(Observation {
        name: "two_cell_invertibility".to_string(),
        detail: json!({
            "invertible": invertible,
            "total": total,
            "failures": failures,
        }),
    });
    report
}
