//! Exact computational verification of crossed modules and braided graded
//! categories over finite groups.
//!
//! Everything in this crate is finite and checked by enumeration: groups are
//! Cayley tables, homomorphisms are index maps, and every axiom (crossed
//! module conditions, butterfly axioms, 2-category laws, pentagon/hexagon
//! coherence) is verified over all tuples. There is no floating point
//! anywhere; phases are elements of `Z_m` written additively.
//!
//! The main entry points:
//!
//! - [`group`]: finite groups as multiplication tables, homomorphisms,
//!   actions, kernels/images/quotients, semidirect products, extensions.
//! - [`xmod`]: crossed modules, strict morphisms, and pointed natural
//!   transformations with vertical and horizontal composition.
//! - [`butterfly`]: butterflies between crossed modules, reversibility,
//!   splittings, and the split-butterfly/strict-morphism correspondence.
//! - [`twocat`]: an executable harness checking the 2-category laws on
//!   fully enumerated instances.
//! - [`graded`]: abelian 3-cocycle data on a finite abelian grading group,
//!   monomial matrices over roots of unity, and exact pentagon/hexagon
//!   checks for the associated skeletal braided category.
//! - [`doc`]: JSON document schemas for all of the above.
//! - [`catalog`]: the named instances used throughout the test suite and
//!   shipped with the command line tool.

pub mod butterfly;
pub mod catalog;
pub mod doc;
pub mod graded;
pub mod group;
pub mod twocat;
pub mod xmod;

pub use butterfly::{Butterfly, ButterflyError};
pub use graded::{
    AbelianThreeCocycle, CocycleReport, GradedError, GradedObject, GradingGroup, MonomialMatrix,
};
pub use group::{
    is_extension, quotient, semidirect_product, ExtensionCheck, ExtensionFailure, FiniteGroup,
    GroupAction, GroupError, GroupHom, Subgroup,
};
pub use twocat::{CheckResult, CheckStatus, HarnessReport, TwoCatError, TwoCellInstance};
pub use xmod::{
    CrossedModule, EquivalenceReport, PointedNaturalTransformation, StrictMorphism, XModError,
};

/// Default cap on the number of candidate maps any enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1_000_000;
