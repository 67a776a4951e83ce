//! Construction and exhaustive axiom checking of finite homogeneous
//! algebraic systems: semigroup and group systems, racks and quandles,
//! dimonoids, skew braces and n-valued products.

pub mod automorphism;
pub mod carrier;
pub mod claims;
pub mod constructions;
pub mod dsl;
pub mod element;
pub mod engine;
pub mod error;
pub mod field;
pub mod matrix;
pub mod run;
pub mod table;

pub use automorphism::{make_automorphism, AutomorphismRule, GroupAutomorphism};
pub use carrier::{Carrier, CarrierKind, GroupSpec, GroupView, DEFAULT_GUARD};
pub use element::Element;
pub use engine::{AxiomReport, CheckMode, Checker, EngineError, Multiset, Side, Verdict, Witness};
pub use error::AlgebraError;
pub use field::{Fe, PrimeField};
pub use matrix::Matrix;
pub use table::{build_op_table, OpTable};
