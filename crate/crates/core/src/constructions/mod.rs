//! Builders for every concrete operation: matrix semigroup and group
//! products, the group-derived quandles, the operations on `V x G`,
//! dimonoids and skew braces.

mod brace;
mod dimonoid;
mod matrix_ops;
mod quandle;

use thiserror::Error;

use crate::engine::EngineError;
use crate::error::AlgebraError;

pub use brace::{brace_ops, z_parity_brace, z_parity_brace_mod, BraceVariant, ZBraceMode, ZParityBrace, ZWindow};
pub use dimonoid::{
    action_dimonoid, action_dimonoid_on, natural_monoid, pair_dimonoid, pair_dimonoid_on, ActionVariant, GSet,
};
pub use matrix_ops::{gl_group_op, matrix_op, MatrixOpParams};
pub use quandle::{
    alexander_quandle, conj_quandle, core_quandle, group_op, opposite_op, trivial_quandle, vxg_conj_op, vxg_phi_op,
    ConjExponent,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("{construction} does not apply to carrier {carrier}: {reason}")]
    WrongCarrier { construction: &'static str, carrier: String, reason: String },
    #[error("monoid has no two-sided unit")]
    NoUnit,
    #[error("operation is not associative")]
    NotAssociative,
    #[error("not a group action: ({g} {h}) . {x} differs from {g} . ({h} . {x})")]
    NotAnAction { g: String, h: String, x: String },
    #[error("modulus {0} is odd; parity is not defined on Z_{0}")]
    OddModulus(u64),
}

fn wrong(construction: &'static str, carrier: &crate::carrier::Carrier, reason: &str) -> ConstructionError {
    ConstructionError::WrongCarrier { construction, carrier: carrier.label().to_string(), reason: reason.to_string() }
}
