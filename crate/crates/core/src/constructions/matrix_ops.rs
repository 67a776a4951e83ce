use std::sync::Arc;

use super::{wrong, ConstructionError};
use crate::carrier::Carrier;
use crate::element::Element;
use crate::error::AlgebraError;
use crate::field::Fe;
use crate::matrix::Matrix;
use crate::table::{build_op_table, OpTable};

/// Parameters of `A * B = s A M1 B + t A M2 B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixOpParams {
    pub s: Fe,
    pub t: Fe,
    pub m1: Matrix,
    pub m2: Matrix,
}

impl MatrixOpParams {
    pub fn new(s: Fe, t: Fe, m1: Matrix, m2: Matrix) -> Result<Self, AlgebraError> {
        if m1.dim() != m2.dim() {
            return Err(AlgebraError::DimensionMismatch { left: m1.dim(), right: m2.dim() });
        }
        if m1.modulus() != m2.modulus() {
            return Err(AlgebraError::ModulusMismatch { left: m1.modulus(), right: m2.modulus() });
        }
        if s.value() >= m1.modulus() || t.value() >= m1.modulus() {
            return Err(AlgebraError::Unsupported("scalars must be reduced mod p".into()));
        }
        Ok(Self { s, t, m1, m2 })
    }

    pub fn label(&self) -> String {
        format!("*[s={},t={},M1={},M2={}]", self.s, self.t, self.m1, self.m2)
    }
}

fn expect_matrices(name: &'static str, carrier: &Carrier, m: &Matrix) -> Result<(), ConstructionError> {
    match carrier.kind().matrix_shape() {
        Some((n, p)) if n == m.dim() && p == m.modulus() => Ok(()),
        Some(_) => Err(wrong(name, carrier, "matrix shape or modulus differs from the parameters")),
        None => Err(wrong(name, carrier, "carrier elements are not matrices")),
    }
}

pub fn matrix_op(params: &MatrixOpParams, carrier: &Arc<Carrier>) -> Result<OpTable, ConstructionError> {
    expect_matrices("matrix_op", carrier, &params.m1)?;
    let MatrixOpParams { s, t, m1, m2 } = params;
    let table = build_op_table(carrier, &params.label(), |a, b| {
        let (a, b) = (a.as_matrix().unwrap(), b.as_matrix().unwrap());
        let left = &(a * m1) * b;
        let right = &(a * m2) * b;
        Element::Matrix(Matrix::add_scaled(*s, &left, *t, &right).expect("shapes checked"))
    })?;
    Ok(table)
}

/// `A *_M B = A M B` for invertible `M`.
pub fn gl_group_op(m: &Matrix, carrier: &Arc<Carrier>) -> Result<OpTable, ConstructionError> {
    expect_matrices("gl_group_op", carrier, m)?;
    if !m.is_invertible() {
        return Err(AlgebraError::Singular.into());
    }
    let table = build_op_table(carrier, &format!("*_{m}"), |a, b| {
        let (a, b) = (a.as_matrix().unwrap(), b.as_matrix().unwrap());
        Element::Matrix(&(a * m) * b)
    })?;
    Ok(table)
}
