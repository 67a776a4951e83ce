use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use super::ast::{OpDecl, Span, SpecDraft, Value};
use super::validate::{shape_of, Shape};
use crate::automorphism::{make_automorphism, AutomorphismRule, GroupAutomorphism};
use crate::carrier::{
    direct_product, enumerate_matrices_with_guard, group_carrier_with_guard, pair_carrier_with_guard,
    trivial_matrix_group, vector_space, Carrier, GroupSpec,
};
use crate::constructions::{
    action_dimonoid_on, alexander_quandle, brace_ops, conj_quandle, core_quandle, gl_group_op, group_op, matrix_op,
    pair_dimonoid_on, trivial_quandle, vxg_conj_op, vxg_phi_op, z_parity_brace_mod, ActionVariant, BraceVariant,
    ConstructionError, GSet, MatrixOpParams,
};
use crate::element::Element;
use crate::engine::{op_product, Side};
use crate::error::AlgebraError;
use crate::field::PrimeField;
use crate::matrix::Matrix;
use crate::table::OpTable;

#[derive(Debug, Clone)]
pub struct NamedOp {
    pub name: String,
    pub table: OpTable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Assoc,
    Interchange,
    Idempotent,
    Divisibility(Side),
    Distrib(Side),
    Group,
    Rack(Side),
    Quandle(Side),
    Dimonoid,
    SkewBrace,
    Multiquandle,
    NValuedAssoc,
}

impl CheckKind {
    pub(crate) fn from_name(name: &str) -> Option<CheckKind> {
        use CheckKind::*;
        Some(match name {
            "assoc" => Assoc,
            "interchange" => Interchange,
            "idempotent" => Idempotent,
            "divisibility_left" => Divisibility(Side::Left),
            "divisibility_right" => Divisibility(Side::Right),
            "distrib_left" => Distrib(Side::Left),
            "distrib_right" => Distrib(Side::Right),
            "group" => Group,
            "rack_left" => Rack(Side::Left),
            "rack_right" | "rack" => Rack(Side::Right),
            "quandle_left" => Quandle(Side::Left),
            "quandle_right" | "quandle" => Quandle(Side::Right),
            "dimonoid" => Dimonoid,
            "skew_brace" => SkewBrace,
            "multiquandle" => Multiquandle,
            "nvalued_assoc" => NValuedAssoc,
            _ => return None,
        })
    }
}

/// A declared check with its operations resolved to positions in `SystemSpec::ops`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeclaredCheck {
    pub kind: CheckKind,
    pub ops: Vec<usize>,
    /// Source form, e.g. `interchange a b`.
    pub label: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SystemClass {
    SemigroupSystem,
    GroupSystem,
    RackSystem,
    QuandleSystem,
    Dimonoid,
    SkewBrace,
    Unclassified,
}

impl SystemClass {
    fn infer(checks: &[DeclaredCheck]) -> SystemClass {
        let any = |f: &dyn Fn(CheckKind) -> bool| checks.iter().any(|c| f(c.kind));
        if any(&|k| k == CheckKind::SkewBrace) {
            SystemClass::SkewBrace
        } else if any(&|k| k == CheckKind::Dimonoid) {
            SystemClass::Dimonoid
        } else if any(&|k| matches!(k, CheckKind::Quandle(_))) {
            SystemClass::QuandleSystem
        } else if any(&|k| matches!(k, CheckKind::Rack(_))) {
            SystemClass::RackSystem
        } else if any(&|k| k == CheckKind::Group) {
            SystemClass::GroupSystem
        } else if any(&|k| matches!(k, CheckKind::Assoc | CheckKind::Interchange | CheckKind::NValuedAssoc)) {
            SystemClass::SemigroupSystem
        } else {
            SystemClass::Unclassified
        }
    }
}

/// A compiled specification: one carrier and a named family of tables on it.
#[derive(Debug, Clone)]
pub struct SystemSpec {
    pub origin: String,
    pub carrier: Arc<Carrier>,
    pub ops: Vec<NamedOp>,
    pub checks: Vec<DeclaredCheck>,
    pub declared_class: SystemClass,
}

impl SystemSpec {
    pub fn op(&self, name: &str) -> Option<&OpTable> {
        self.ops.iter().find(|o| o.name == name).map(|o| &o.table)
    }

    /// Same carrier, same tables in the same order, same checks.
    pub fn same_system(&self, other: &SystemSpec) -> bool {
        *self.carrier == *other.carrier
            && self.ops.len() == other.ops.len()
            && self.ops.iter().zip(&other.ops).all(|(a, b)| a.name == b.name && a.table.same_entries(&b.table))
            && self.checks == other.checks
            && self.declared_class == other.declared_class
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {source}")]
pub struct CompileError {
    pub line: usize,
    pub column: usize,
    #[source]
    pub source: ConstructionError,
}

impl CompileError {
    fn at(span: Span, source: impl Into<ConstructionError>) -> CompileError {
        CompileError { line: span.line, column: span.col, source: source.into() }
    }
}

pub(crate) fn build_carrier(shape: &Shape, guard: u64) -> Result<Arc<Carrier>, AlgebraError> {
    match shape {
        Shape::Matrices { n, p } => enumerate_matrices_with_guard(*n, *p, false, guard),
        Shape::Gl { n, p } => enumerate_matrices_with_guard(*n, *p, true, guard),
        Shape::TrivialGl { n, p } => trivial_matrix_group(*n, *p),
        Shape::Cyclic(n) => group_carrier_with_guard(&GroupSpec::Cyclic(*n), guard),
        Shape::Symmetric(d) => group_carrier_with_guard(&GroupSpec::Symmetric(*d), guard),
        Shape::Vector { n, p } => vector_space(*n, *p, guard),
        Shape::Pair { n, p, group } => {
            let v = vector_space(*n, *p, guard)?;
            let g = build_carrier(group, guard)?;
            pair_carrier_with_guard(&v, &g, guard)
        }
        Shape::Product(a, b) => direct_product(&build_carrier(a, guard)?, &build_carrier(b, guard)?, guard),
    }
}

fn int_arg(op: &OpDecl, name: &str, default: i64) -> i64 {
    match op.arg(name).map(|a| &a.value.node) {
        Some(Value::Int(v)) => *v,
        _ => default,
    }
}

fn word_arg<'a>(op: &'a OpDecl, name: &str, default: &'a str) -> &'a str {
    match op.arg(name).map(|a| &a.value.node) {
        Some(Value::Ident(w)) => w,
        _ => default,
    }
}

fn matrix_arg(op: &OpDecl, name: &str, p: u32) -> Result<Option<Matrix>, AlgebraError> {
    match op.arg(name).map(|a| &a.value.node) {
        Some(Value::Matrix(rows)) => Matrix::from_rows(p, rows).map(Some),
        _ => Ok(None),
    }
}

fn element_index(g: &Carrier, value: &Value) -> Result<usize, AlgebraError> {
    match value {
        Value::Int(i) if (*i as u64) < g.len() as u64 && *i >= 0 => Ok(*i as usize),
        Value::Int(i) => Err(AlgebraError::NotInCarrier(format!("index {i} of {}", g.label()))),
        Value::Matrix(rows) => {
            let p = g.kind().matrix_shape().map_or(2, |(_, p)| p);
            let m = Matrix::from_rows(p, rows)?;
            let shown = m.to_string();
            g.index_of(&Element::Matrix(m)).ok_or(AlgebraError::NotInCarrier(shown))
        }
        Value::Ident(s) => Err(AlgebraError::NotInCarrier(s.clone())),
    }
}

fn automorphism(op: &OpDecl, g: &Arc<Carrier>) -> Result<GroupAutomorphism, AlgebraError> {
    let rule = match word_arg(op, "phi", "identity") {
        "inner" => AutomorphismRule::Inner(element_index(g, &op.arg("g").expect("validated").value.node)?),
        "power" => AutomorphismRule::PowerMap(int_arg(op, "k", 1)),
        "table" => match &op.arg("image").expect("validated").value.node {
            Value::Matrix(rows) => AutomorphismRule::Table(rows[0].iter().map(|&i| i as usize).collect()),
            _ => unreachable!("validated"),
        },
        _ => AutomorphismRule::Identity,
    };
    make_automorphism(g, rule)
}

fn pick(pair: (OpTable, OpTable), part: &str, first: &str) -> OpTable {
    if part == first {
        pair.0
    } else {
        pair.1
    }
}

fn build_op(op: &OpDecl, carrier: &Arc<Carrier>, done: &[NamedOp]) -> Result<OpTable, ConstructionError> {
    let lookup = |name: &str| -> &OpTable {
        let target = match &op.arg(name).expect("validated").value.node {
            Value::Ident(s) => s,
            _ => unreachable!("validated"),
        };
        &done.iter().find(|o| &o.name == target).expect("declared before use").table
    };
    let p = carrier.kind().matrix_shape().map(|(_, p)| p);
    Ok(match op.ctor.node.as_str() {
        "matrix_op" => {
            let (n, p) = carrier.kind().matrix_shape().expect("validated");
            let f = PrimeField::new(p)?;
            let e = Matrix::identity(n, p);
            let m1 = matrix_arg(op, "M1", p)?.unwrap_or_else(|| e.clone());
            let m2 = matrix_arg(op, "M2", p)?.unwrap_or(e);
            let params = MatrixOpParams::new(f.elem(int_arg(op, "s", 1)), f.elem(int_arg(op, "t", 0)), m1, m2)?;
            matrix_op(&params, carrier)?
        }
        "gl_group_op" => gl_group_op(&matrix_arg(op, "M", p.expect("validated"))?.expect("validated"), carrier)?,
        "group_op" => group_op(carrier)?,
        "trivial_quandle" => trivial_quandle(carrier),
        "conj_quandle" => conj_quandle(carrier, int_arg(op, "m", 1))?,
        "core_quandle" => core_quandle(carrier)?,
        "alexander_quandle" => alexander_quandle(carrier, &automorphism(op, carrier)?)?,
        "vxg_phi_op" => {
            let (_, g) = carrier.factors().expect("pair carrier");
            vxg_phi_op(carrier, &automorphism(op, g)?)?
        }
        "vxg_conj_op" => vxg_conj_op(carrier, int_arg(op, "n", 1))?,
        "opposite" => lookup("of").opposite(),
        "op_product" => op_product(lookup("i"), lookup("j"))?,
        "pair_dimonoid" => pick(pair_dimonoid_on(carrier)?, word_arg(op, "part", "dashv"), "dashv"),
        "action_dimonoid" => {
            let (x, g) = carrier.factors().expect("product carrier");
            let gset = match word_arg(op, "action", "matrix") {
                "trivial" => GSet::trivial(x, g)?,
                "regular" => GSet::regular(g)?,
                _ => GSet::matrix_action(x, g)?,
            };
            let variant = match word_arg(op, "variant", "standard") {
                "as_printed" => ActionVariant::AsPrinted,
                _ => ActionVariant::Standard,
            };
            pick(action_dimonoid_on(&gset, variant, carrier)?, word_arg(op, "part", "dashv"), "dashv")
        }
        "brace_trivial" => pick(brace_ops(carrier, BraceVariant::Trivial)?, word_arg(op, "part", "dot"), "dot"),
        "brace_opposite" => pick(brace_ops(carrier, BraceVariant::Opposite)?, word_arg(op, "part", "dot"), "dot"),
        "z_parity_brace" => {
            let (plus, circ) = z_parity_brace_mod(carrier.len() as u64)?;
            let chosen = if word_arg(op, "part", "plus") == "plus" { plus } else { circ };
            // rebuild on the declared carrier so every table shares one Arc
            let t = chosen;
            OpTable::from_fn(carrier, t.label(), |a, b| t.get(a, b))
        }
        other => unreachable!("constructor {other} passed validation"),
    })
}

/// Instantiates the carrier (subject to `guard`) and every declared table.
pub fn compile_spec(draft: &SpecDraft, guard: u64) -> Result<SystemSpec, CompileError> {
    let mut scratch = Vec::new();
    let shape = shape_of(&draft.carrier, &mut scratch).expect("draft was validated");
    let carrier = build_carrier(&shape, guard).map_err(|e| CompileError::at(draft.carrier.span(), e))?;
    let mut ops: Vec<NamedOp> = Vec::with_capacity(draft.ops.len());
    for op in &draft.ops {
        let table = build_op(op, &carrier, &ops).map_err(|e| CompileError::at(op.name.span, e))?;
        ops.push(NamedOp { name: op.name.node.clone(), table });
    }
    let checks: Vec<DeclaredCheck> = draft
        .checks
        .iter()
        .map(|c| DeclaredCheck {
            kind: CheckKind::from_name(&c.check.node).expect("validated"),
            ops: c.ops.iter().map(|o| ops.iter().position(|n| n.name == o.node).expect("validated")).collect(),
            label: std::iter::once(c.check.node.as_str())
                .chain(c.ops.iter().map(|o| o.node.as_str()))
                .collect::<Vec<_>>()
                .join(" "),
        })
        .collect();
    let declared_class = SystemClass::infer(&checks);
    Ok(SystemSpec { origin: draft.origin.clone(), carrier, ops, checks, declared_class })
}
