//! A small declarative language for carriers, operation families and checks.
//!
//! ```text
//! carrier gl(2,2);
//! op g = gl_group_op(M=[[0,1],[1,0]]);
//! check group g;
//! ```

mod ast;
mod compile;
mod diag;
mod lexer;
mod parser;
mod pretty;
mod validate;

use std::path::Path;
use std::sync::Arc;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::carrier::Carrier;
use crate::error::AlgebraError;

pub use ast::{CarrierExpr, CheckDecl, Ident, NamedArg, OpDecl, Span, Spanned, SpecDraft, Value};
pub use compile::{compile_spec, CheckKind, CompileError, DeclaredCheck, NamedOp, SystemClass, SystemSpec};
pub use diag::{Diagnostic, DiagnosticKind, Severity};
pub use pretty::pretty;

/// Specification text plus where it came from (a path or an inline tag).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecSource {
    pub text: String,
    pub origin: String,
}

impl SpecSource {
    pub fn new(text: impl Into<String>, origin: impl Into<String>) -> SpecSource {
        SpecSource { text: text.into(), origin: origin.into() }
    }

    pub fn from_file(path: &Path) -> std::io::Result<SpecSource> {
        Ok(SpecSource::new(std::fs::read_to_string(path)?, path.display().to_string()))
    }

    /// Hex SHA-256 of the text.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.text.as_bytes()))
    }
}

/// Parses and validates a document. On failure every diagnostic found is
/// returned, errors and warnings alike.
pub fn parse_spec(src: &SpecSource) -> Result<SpecDraft, Vec<Diagnostic>> {
    let (stmts, diags) = parser::parse_statements(&src.text);
    validate::validate(stmts, &src.origin, diags)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("{} error(s) in specification", .0.iter().filter(|d| d.is_error()).count())]
    Parse(Vec<Diagnostic>),
    #[error(transparent)]
    Compile(#[from] CompileError),
}

pub fn load_spec(src: &SpecSource, guard: u64) -> Result<SystemSpec, SpecError> {
    let draft = parse_spec(src).map_err(SpecError::Parse)?;
    Ok(compile_spec(&draft, guard)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CarrierExprError {
    #[error("{}", .0.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n"))]
    Parse(Vec<Diagnostic>),
    #[error(transparent)]
    Build(#[from] AlgebraError),
}

/// Builds the carrier named by an expression such as `gl(2,3)`.
pub fn build_carrier_expr(text: &str, guard: u64) -> Result<Arc<Carrier>, CarrierExprError> {
    let expr = parser::parse_carrier_text(text).map_err(CarrierExprError::Parse)?;
    let mut diags = Vec::new();
    let shape = validate::shape_of(&expr, &mut diags).ok_or(CarrierExprError::Parse(diags))?;
    Ok(compile::build_carrier(&shape, guard)?)
}

#[cfg(test)]
mod tests;
