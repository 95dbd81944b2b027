//! Finite ordered semigroups: a validated table-and-order core, the closure
//! calculus on subsets, Green's relations and their starred variants,
//! pi-regularity predicates with witnesses, semilattice congruences,
//! exhaustive enumeration, and a harness that checks characterisation
//! theorems on every small model.
//!
//! ```
//! use ordsgp::{fixtures, harness::{verify, TheoremId, Verdict}};
//!
//! let report = verify(&fixtures::n2(), TheoremId::Thm2).unwrap();
//! assert_eq!(report.verdict, Verdict::Equivalent);
//! ```

pub mod analysis;
pub mod cli;
pub mod congruences;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod harness;
pub mod predicates;
pub mod relations;
pub mod structure;
pub mod witness;

pub use analysis::Analysis;
pub use error::Error;
pub use predicates::{Predicate, Readings};
pub use relations::{GreenKind, Partition};
pub use structure::{check, validate, OrderedSemigroup, PowerProfile, StructureJson, SubsetMask, ValidationReport};
pub use witness::PredicateResult;
