//! JSON document schemas for every structure the toolkit exchanges, plus
//! parsing entry points that build the verified domain values.
//!
//! Index conventions: all element indices are 0-based; group documents
//! carry the full multiplication table; homomorphism, action, and gamma
//! documents carry bare maps with their source and target supplied by the
//! surrounding document. Cocycle tables are flat, in lexicographic tuple
//! order. Graded object dimensions are keyed by comma-joined grade tuples.

use crate::butterfly::{Butterfly, ButterflyError};
use crate::graded::{AbelianThreeCocycle, GradedError, GradedObject, GradingGroup};
use crate::group::{FiniteGroup, GroupAction, GroupError, GroupHom};
use crate::twocat::{TwoCellInstance, TwoCatError};
use crate::xmod::{CrossedModule, PointedNaturalTransformation, StrictMorphism, XModError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

/// Failures while reading a document: either the JSON itself is malformed
/// or the described structure fails verification.
#[derive(Debug, Error)]
pub enum DocError {
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("schema error: {0}")]
    Schema(String),

    #[error(transparent)]
    Group(#[from] GroupError),

    #[error(transparent)]
    XMod(#[from] XModError),

    #[error(transparent)]
    Butterfly(#[from] ButterflyError),

    #[error(transparent)]
    Graded(#[from] GradedError),
}

impl From<TwoCatError> for DocError {
    fn from(e: TwoCatError) -> Self {
        match e {
            TwoCatError::XMod(x) => DocError::XMod(x),
            TwoCatError::UnknownObject => {
                DocError::Schema("morphism endpoints are not instance objects".to_string())
            }
        }
    }
}

impl DocError {
    /// True when the failure is malformed input (bad JSON, bad shapes,
    /// exceeded budgets) rather than a verification failure with a witness.
    pub fn is_schema_level(&self) -> bool {
        match self {
            DocError::Parse(_) | DocError::Schema(_) => true,
            DocError::Group(e) => group_schema_level(e),
            DocError::XMod(e) => xmod_schema_level(e),
            DocError::Butterfly(e) => match e {
                ButterflyError::StructureMismatch { .. } => true,
                ButterflyError::Group(g) => group_schema_level(g),
                ButterflyError::XMod(x) => xmod_schema_level(x),
                _ => false,
            },
            DocError::Graded(e) => matches!(
                e,
                GradedError::BadFactor { .. }
                    | GradedError::BadModulus { .. }
                    | GradedError::OrderTooLarge
                    | GradedError::DimensionTooLarge
                    | GradedError::MalformedTable { .. }
                    | GradedError::PhaseOutOfRange { .. }
                    | GradedError::GradingMismatch
            ),
        }
    }
}

fn group_schema_level(e: &GroupError) -> bool {
    matches!(
        e,
        GroupError::MalformedTable { .. }
            | GroupError::EntryOutOfRange { .. }
            | GroupError::MalformedMap { .. }
            | GroupError::MapEntryOutOfRange { .. }
            | GroupError::MemberOutOfRange { .. }
            | GroupError::GroupMismatch { .. }
            | GroupError::MismatchedGroups
            | GroupError::BudgetExceeded { .. }
    )
}

fn xmod_schema_level(e: &XModError) -> bool {
    match e {
        XModError::StructureMismatch { .. }
        | XModError::MalformedGamma { .. }
        | XModError::GammaEntryOutOfRange { .. } => true,
        XModError::Group(g) => group_schema_level(g),
        _ => false,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl GroupDoc {
    pub fn build(&self) -> Result<Arc<FiniteGroup>, DocError> {
        if self.table.len() != self.order {
            return Err(DocError::Schema(format!(
                "declared order {} does not match table height {}",
                self.order,
                self.table.len()
            )));
        }
        Ok(FiniteGroup::from_table(&self.table)?)
    }

    pub fn of(group: &FiniteGroup) -> Self {
        GroupDoc {
            order: group.order(),
            table: group.table_rows(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomDoc {
    pub map: Vec<usize>,
}

impl HomDoc {
    pub fn build(
        &self,
        src: &Arc<FiniteGroup>,
        dst: &Arc<FiniteGroup>,
    ) -> Result<GroupHom, DocError> {
        Ok(GroupHom::new(src.clone(), dst.clone(), self.map.clone())?)
    }

    pub fn of(hom: &GroupHom) -> Self {
        HomDoc {
            map: hom.map().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDoc {
    pub maps: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XModDoc {
    #[serde(rename = "N")]
    pub n: GroupDoc,
    #[serde(rename = "M")]
    pub m: GroupDoc,
    pub h: HomDoc,
    pub action: ActionDoc,
}

impl XModDoc {
    pub fn build(&self) -> Result<Arc<CrossedModule>, DocError> {
        let n = self.n.build()?;
        let m = self.m.build()?;
        let h = self.h.build(&n, &m)?;
        let action = GroupAction::new(m, n, self.action.maps.clone())?;
        Ok(Arc::new(CrossedModule::new(h, action)?))
    }

    pub fn of(xmod: &CrossedModule) -> Self {
        XModDoc {
            n: GroupDoc::of(xmod.n()),
            m: GroupDoc::of(xmod.m()),
            h: HomDoc::of(xmod.boundary()),
            action: ActionDoc {
                maps: xmod.action().maps().to_vec(),
            },
        }
    }
}

/// A strict morphism with its source and target crossed modules inline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismBundleDoc {
    pub src: XModDoc,
    pub dst: XModDoc,
    pub f1: HomDoc,
    pub f2: HomDoc,
}

impl MorphismBundleDoc {
    pub fn build(&self) -> Result<StrictMorphism, DocError> {
        let src = self.src.build()?;
        let dst = self.dst.build()?;
        let f1 = self.f1.build(src.m(), dst.m())?;
        let f2 = self.f2.build(src.n(), dst.n())?;
        Ok(StrictMorphism::new(src, dst, f1, f2)?)
    }

    pub fn of(m: &StrictMorphism) -> Self {
        MorphismBundleDoc {
            src: XModDoc::of(m.src()),
            dst: XModDoc::of(m.dst()),
            f1: HomDoc::of(m.f1()),
            f2: HomDoc::of(m.f2()),
        }
    }
}

/// A morphism given by its two maps only, against contextual endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub f1: HomDoc,
    pub f2: HomDoc,
}

impl MorphismDoc {
    pub fn build(
        &self,
        src: &Arc<CrossedModule>,
        dst: &Arc<CrossedModule>,
    ) -> Result<StrictMorphism, DocError> {
        let f1 = self.f1.build(src.m(), dst.m())?;
        let f2 = self.f2.build(src.n(), dst.n())?;
        Ok(StrictMorphism::new(src.clone(), dst.clone(), f1, f2)?)
    }

    pub fn of(m: &StrictMorphism) -> Self {
        MorphismDoc {
            f1: HomDoc::of(m.f1()),
            f2: HomDoc::of(m.f2()),
        }
    }
}

/// A pointed natural transformation `from ⇒ to` with full context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PntBundleDoc {
    pub src: XModDoc,
    pub dst: XModDoc,
    pub from: MorphismDoc,
    pub to: MorphismDoc,
    pub gamma: Vec<usize>,
}

impl PntBundleDoc {
    pub fn build(&self) -> Result<PointedNaturalTransformation, DocError> {
        let src = self.src.build()?;
        let dst = self.dst.build()?;
        let from = self.from.build(&src, &dst)?;
        let to = self.to.build(&src, &dst)?;
        Ok(PointedNaturalTransformation::new(
            from,
            to,
            self.gamma.clone(),
        )?)
    }
}

/// Two parallel morphisms whose transformations are to be enumerated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PntPairDoc {
    pub src: XModDoc,
    pub dst: XModDoc,
    pub from: MorphismDoc,
    pub to: MorphismDoc,
}

/// One leg of a composition document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PntLegDoc {
    pub from: MorphismDoc,
    pub to: MorphismDoc,
    pub gamma: Vec<usize>,
}

impl PntLegDoc {
    pub fn build(
        &self,
        src: &Arc<CrossedModule>,
        dst: &Arc<CrossedModule>,
    ) -> Result<PointedNaturalTransformation, DocError> {
        let from = self.from.build(src, dst)?;
        let to = self.to.build(src, dst)?;
        Ok(PointedNaturalTransformation::new(
            from,
            to,
            self.gamma.clone(),
        )?)
    }
}

/// Vertical composition input: `p1: G ⇒ F` then `p2: F ⇒ E`, all over the
/// same pair of crossed modules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComposeVerticalDoc {
    pub src: XModDoc,
    pub dst: XModDoc,
    pub p1: PntLegDoc,
    pub p2: PntLegDoc,
}

/// Horizontal composition input: `p1` over `c1 → c2` and `p2` over
/// `c2 → c3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComposeHorizontalDoc {
    pub c1: XModDoc,
    pub c2: XModDoc,
    pub c3: XModDoc,
    pub p1: PntLegDoc,
    pub p2: PntLegDoc,
}

/// Either composition document; distinguished by field names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComposeDoc {
    Horizontal(ComposeHorizontalDoc),
    Vertical(ComposeVerticalDoc),
}

/// A butterfly with its crossed modules alongside; `section` optionally
/// carries a splitting used by the unsplit command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ButterflyBundleDoc {
    pub src: XModDoc,
    pub dst: XModDoc,
    #[serde(rename = "E")]
    pub e: GroupDoc,
    pub t: HomDoc,
    pub g: HomDoc,
    pub k: HomDoc,
    pub f: HomDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section: Option<HomDoc>,
}

impl ButterflyBundleDoc {
    pub fn build(&self) -> Result<Butterfly, DocError> {
        let src = self.src.build()?;
        let dst = self.dst.build()?;
        let e = self.e.build()?;
        let t = self.t.build(&e, dst.m())?;
        let g = self.g.build(&e, src.m())?;
        let k = self.k.build(dst.n(), &e)?;
        let f = self.f.build(src.n(), &e)?;
        Ok(Butterfly::new(src, dst, e, t, g, k, f)?)
    }

    pub fn of(b: &Butterfly) -> Self {
        ButterflyBundleDoc {
            src: XModDoc::of(b.src()),
            dst: XModDoc::of(b.dst()),
            e: GroupDoc::of(b.e()),
            t: HomDoc::of(b.t()),
            g: HomDoc::of(b.g()),
            k: HomDoc::of(b.k()),
            f: HomDoc::of(b.f()),
            section: b.canonical_section().map(HomDoc::of),
        }
    }
}

/// Abelian 3-cocycle tables, flat in lexicographic tuple order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleDoc {
    pub factors: Vec<u64>,
    pub phase_modulus: u64,
    pub f: Vec<u64>,
    pub h: Vec<u64>,
}

impl CocycleDoc {
    pub fn grading(&self) -> Result<GradingGroup, DocError> {
        Ok(GradingGroup::new(self.factors.clone())?)
    }

    pub fn build(&self) -> Result<AbelianThreeCocycle, DocError> {
        Ok(AbelianThreeCocycle::new(
            self.grading()?,
            self.phase_modulus,
            self.f.clone(),
            self.h.clone(),
        )?)
    }

    pub fn of(c: &AbelianThreeCocycle) -> Self {
        CocycleDoc {
            factors: c.grading().factors().to_vec(),
            phase_modulus: c.modulus(),
            f: c.f_table().to_vec(),
            h: c.h_table().to_vec(),
        }
    }
}

/// A graded object as a sparse dimension map keyed by comma-joined tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedObjectDoc {
    pub dims: BTreeMap<String, usize>,
}

impl GradedObjectDoc {
    pub fn build(&self, grading: &GradingGroup) -> Result<GradedObject, DocError> {
        let mut dims = vec![0usize; grading.order()];
        for (key, &dim) in &self.dims {
            let tuple: Vec<u64> = key
                .split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u64>()
                        .map_err(|_| DocError::Schema(format!("bad grade tuple {key:?}")))
                })
                .collect::<Result<_, _>>()?;
            let index = grading
                .index_of(&tuple)
                .ok_or_else(|| DocError::Schema(format!("grade {key:?} out of range")))?;
            dims[index] = dim;
        }
        Ok(GradedObject::new(grading.clone(), dims)?)
    }

    pub fn of(obj: &GradedObject) -> Self {
        let mut dims = BTreeMap::new();
        for g in obj.grading().elements() {
            if obj.dim(g) > 0 {
                let key = obj
                    .grading()
                    .element(g)
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                dims.insert(key, obj.dim(g));
            }
        }
        GradedObjectDoc { dims }
    }
}

/// A 2-categorical instance: objects and generating morphisms by index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub objects: Vec<XModDoc>,
    #[serde(default)]
    pub morphisms: Vec<InstanceMorphismDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceMorphismDoc {
    pub src: usize,
    pub dst: usize,
    pub f1: HomDoc,
    pub f2: HomDoc,
}

impl InstanceDoc {
    pub fn build(&self, pnt_budget: u64) -> Result<TwoCellInstance, DocError> {
        let objects: Vec<Arc<CrossedModule>> = self
            .objects
            .iter()
            .map(|doc| doc.build())
            .collect::<Result<_, _>>()?;
        let mut generators = Vec::new();
        for m in &self.morphisms {
            let src = objects
                .get(m.src)
                .ok_or_else(|| DocError::Schema(format!("object index {} out of range", m.src)))?;
            let dst = objects
                .get(m.dst)
                .ok_or_else(|| DocError::Schema(format!("object index {} out of range", m.dst)))?;
            let doc = MorphismDoc {
                f1: m.f1.clone(),
                f2: m.f2.clone(),
            };
            generators.push(doc.build(src, dst)?);
        }
        Ok(TwoCellInstance::closure(objects, generators, pnt_budget)?)
    }
}

macro_rules! from_json {
    ($name:ident, $doc:ty, $out:ty, $build:expr) => {
        /// Parses and builds from a JSON string; used by the CLI and the
        /// fuzz targets.
        pub fn $name(json: &str) -> Result<$out, DocError> {
            let doc: $doc = serde_json::from_str(json)?;
            #[allow(clippy::redundant_closure_call)]
            ($build)(doc)
        }
    };
}

from_json!(group_from_json, GroupDoc, Arc<FiniteGroup>, |d: GroupDoc| d.build());
from_json!(xmod_from_json, XModDoc, Arc<CrossedModule>, |d: XModDoc| d.build());
from_json!(
    morphism_from_json,
    MorphismBundleDoc,
    StrictMorphism,
    |d: MorphismBundleDoc| d.build()
);
from_json!(
    pnt_from_json,
    PntBundleDoc,
    PointedNaturalTransformation,
    |d: PntBundleDoc| d.build()
);
from_json!(
    butterfly_from_json,
    ButterflyBundleDoc,
    Butterfly,
    |d: ButterflyBundleDoc| d.build()
);
from_json!(
    cocycle_from_json,
    CocycleDoc,
    AbelianThreeCocycle,
    |d: CocycleDoc| d.build()
);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn group_round_trips() {
        let g = catalog::sym3();
        let doc = GroupDoc::of(&g);
        let back = doc.build().unwrap();
        assert_eq!(*back, *g);
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(*group_from_json(&json).unwrap(), *g);
    }

    #[test]
    fn xmod_round_trips() {
        for (_, xmod) in catalog::xmod_catalog() {
            let doc = XModDoc::of(&xmod);
            let back = doc.build().unwrap();
            assert_eq!(*back, *xmod);
        }
    }

    #[test]
    fn butterfly_round_trips_with_section() {
        let b = crate::butterfly::Butterfly::from_strict(&catalog::inclusion_to_s3_identity())
            .unwrap();
        let doc = ButterflyBundleDoc::of(&b);
        assert!(doc.section.is_some());
        let back = doc.build().unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn cocycle_and_object_round_trip() {
        let c = catalog::semion_cocycle();
        let doc = CocycleDoc::of(&c);
        assert_eq!(doc.build().unwrap(), c);

        let grading = c.grading().clone();
        let obj = GradedObject::new(grading.clone(), vec![2, 1]).unwrap();
        let odoc = GradedObjectDoc::of(&obj);
        assert_eq!(odoc.build(&grading).unwrap(), obj);
    }

    #[test]
    fn schema_violations_are_schema_level() {
        let err = group_from_json("{\"order\": 2, \"table\": [[0, 1]]}").unwrap_err();
        assert!(err.is_schema_level());
        let err = group_from_json("not json").unwrap_err();
        assert!(err.is_schema_level());
        // An axiom violation is not schema level: it is a verification
        // failure with a witness.
        let err =
            group_from_json("{\"order\": 2, \"table\": [[0, 1], [1, 1]]}").unwrap_err();
        assert!(!err.is_schema_level());
    }

    #[test]
    fn compose_doc_disambiguates_by_fields() {
        let vertical = serde_json::json!({
            "src": XModDoc::of(&catalog::z2_boundary()),
            "dst": XModDoc::of(&catalog::z2_boundary()),
            "p1": { "from": { "f1": { "map": [0, 1] }, "f2": { "map": [0, 1] } },
                     "to": { "f1": { "map": [0, 1] }, "f2": { "map": [0, 1] } },
                     "gamma": [0, 0] },
            "p2": { "from": { "f1": { "map": [0, 1] }, "f2": { "map": [0, 1] } },
                     "to": { "f1": { "map": [0, 1] }, "f2": { "map": [0, 1] } },
                     "gamma": [0, 0] },
        });
        let doc: ComposeDoc = serde_json::from_value(vertical).unwrap();
        assert!(matches!(doc, ComposeDoc::Vertical(_)));
    }
}
