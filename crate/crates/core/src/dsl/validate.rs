use std::collections::{HashMap, HashSet};

use super::ast::{CarrierExpr, CheckDecl, NamedArg, OpDecl, Span, Spanned, SpecDraft, Value};
use super::diag::{Diagnostic, DiagnosticKind};
use super::parser::Stmt;
use crate::carrier::is_prime_modulus;
use crate::matrix::Matrix;

/// Carrier type as far as it can be known without enumerating elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Shape {
    Matrices {
        n: usize,
        p: u32,
    },
    Gl {
        n: usize,
        p: u32,
    },
    TrivialGl {
        n: usize,
        p: u32,
    },
    Cyclic(u64),
    Symmetric(usize),
    Vector {
        n: usize,
        p: u32,
    },
    /// `vector(n,p) x G` for a matrix group `G`.
    Pair {
        n: usize,
        p: u32,
        group: Box<Shape>,
    },
    Product(Box<Shape>, Box<Shape>),
}

impl Shape {
    pub(crate) fn is_group(&self) -> bool {
        match self {
            Shape::Matrices { .. } | Shape::Pair { .. } => false,
            Shape::Product(a, b) => a.is_group() && b.is_group(),
            _ => true,
        }
    }

    /// `(n, p)` when the elements are `n x n` matrices.
    pub(crate) fn matrix_dim(&self) -> Option<(usize, u32)> {
        match *self {
            Shape::Matrices { n, p } | Shape::Gl { n, p } | Shape::TrivialGl { n, p } => Some((n, p)),
            _ => None,
        }
    }

    pub(crate) fn describe(&self) -> String {
        match self {
            Shape::Matrices { n, p } => format!("matrices({n},{p})"),
            Shape::Gl { n, p } => format!("gl({n},{p})"),
            Shape::TrivialGl { n, p } => format!("trivial_gl({n},{p})"),
            Shape::Cyclic(n) => format!("cyclic({n})"),
            Shape::Symmetric(d) => format!("symmetric({d})"),
            Shape::Vector { n, p } => format!("vector({n},{p})"),
            Shape::Pair { n, p, group } => format!("vector({n},{p}) x {}", group.describe()),
            Shape::Product(a, b) => format!("{} x {}", a.describe(), b.describe()),
        }
    }
}

const CARRIERS: &[&str] = &["matrices", "gl", "trivial_gl", "vector", "cyclic", "symmetric"];

pub(crate) fn shape_of(expr: &CarrierExpr, diags: &mut Vec<Diagnostic>) -> Option<Shape> {
    match expr {
        CarrierExpr::Call { name, args } => {
            let arity = match name.node.as_str() {
                "matrices" | "gl" | "trivial_gl" | "vector" => 2,
                "cyclic" | "symmetric" => 1,
                other => {
                    diags.push(Diagnostic::error(
                        DiagnosticKind::UnknownIdentifier,
                        name.span,
                        format!("unknown carrier `{other}`; expected one of {}", CARRIERS.join(", ")),
                    ));
                    return None;
                }
            };
            if args.len() != arity {
                diags.push(Diagnostic::error(
                    DiagnosticKind::Arity,
                    name.span,
                    format!("carrier `{}` takes {arity} argument(s), got {}", name.node, args.len()),
                ));
                return None;
            }
            let positive = |a: &Spanned<i64>, what: &str, diags: &mut Vec<Diagnostic>| {
                if a.node >= 1 {
                    Some(a.node)
                } else {
                    diags.push(Diagnostic::error(
                        DiagnosticKind::InvalidValue,
                        a.span,
                        format!("{what} must be at least 1"),
                    ));
                    None
                }
            };
            if arity == 1 {
                let v = positive(&args[0], "size", diags)?;
                return match name.node.as_str() {
                    "cyclic" => Some(Shape::Cyclic(v as u64)),
                    _ if v <= 5 => Some(Shape::Symmetric(v as usize)),
                    _ => {
                        diags.push(Diagnostic::error(
                            DiagnosticKind::InvalidValue,
                            args[0].span,
                            "symmetric groups are supported up to degree 5",
                        ));
                        None
                    }
                };
            }
            let n = positive(&args[0], "dimension", diags);
            let p = args[1].node;
            let p_ok = p > 0 && p <= u32::MAX as i64 && is_prime_modulus(p as u32);
            if !p_ok {
                diags.push(Diagnostic::error(
                    DiagnosticKind::InvalidValue,
                    args[1].span,
                    format!("modulus {p} is not prime"),
                ));
            }
            let (n, p) = (n? as usize, if p_ok { p as u32 } else { return None });
            Some(match name.node.as_str() {
                "matrices" => Shape::Matrices { n, p },
                "gl" => Shape::Gl { n, p },
                "trivial_gl" => Shape::TrivialGl { n, p },
                _ => Shape::Vector { n, p },
            })
        }
        CarrierExpr::Product(a, b) => {
            let sa = shape_of(a, diags);
            let sb = shape_of(b, diags);
            let (sa, sb) = (sa?, sb?);
            if let (Shape::Vector { n, p }, Some((gn, gp))) = (&sa, sb.matrix_dim()) {
                if sb.is_group() {
                    if (*n, *p) != (gn, gp) {
                        diags.push(Diagnostic::error(
                            DiagnosticKind::TypeMismatch,
                            b.span(),
                            format!("{} does not act on {}", sb.describe(), sa.describe()),
                        ));
                        return None;
                    }
                    return Some(Shape::Pair { n: *n, p: *p, group: Box::new(sb) });
                }
            }
            Some(Shape::Product(Box::new(sa), Box::new(sb)))
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ArgTy {
    Int,
    Matrix,
    OpRef,
    Word(&'static [&'static str]),
    IndexOrMatrix,
    Row,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Req {
    Any,
    Matrix,
    Group,
    Pair,
    SquareProduct,
    ActionProduct,
    EvenCyclic,
}

struct Sig {
    name: &'static str,
    req: Req,
    args: &'static [(&'static str, ArgTy, bool)],
}

const PHI: &[&str] = &["identity", "inner", "power", "table"];
const PHI_ARGS: &[(&str, ArgTy, bool)] = &[
    ("phi", ArgTy::Word(PHI), false),
    ("g", ArgTy::IndexOrMatrix, false),
    ("k", ArgTy::Int, false),
    ("image", ArgTy::Row, false),
];
const DIMONOID_PART: ArgTy = ArgTy::Word(&["dashv", "vdash"]);
const BRACE_PART: (&str, ArgTy, bool) = ("part", ArgTy::Word(&["dot", "circ"]), true);

const CTORS: &[Sig] = &[
    Sig {
        name: "matrix_op",
        req: Req::Matrix,
        args: &[
            ("s", ArgTy::Int, false),
            ("t", ArgTy::Int, false),
            ("M1", ArgTy::Matrix, false),
            ("M2", ArgTy::Matrix, false),
        ],
    },
    Sig { name: "gl_group_op", req: Req::Matrix, args: &[("M", ArgTy::Matrix, true)] },
    Sig { name: "group_op", req: Req::Group, args: &[] },
    Sig { name: "trivial_quandle", req: Req::Any, args: &[] },
    Sig { name: "conj_quandle", req: Req::Group, args: &[("m", ArgTy::Int, false)] },
    Sig { name: "core_quandle", req: Req::Group, args: &[] },
    Sig { name: "alexander_quandle", req: Req::Group, args: PHI_ARGS },
    Sig { name: "vxg_phi_op", req: Req::Pair, args: PHI_ARGS },
    Sig { name: "vxg_conj_op", req: Req::Pair, args: &[("n", ArgTy::Int, false)] },
    Sig { name: "opposite", req: Req::Any, args: &[("of", ArgTy::OpRef, true)] },
    Sig { name: "op_product", req: Req::Any, args: &[("i", ArgTy::OpRef, true), ("j", ArgTy::OpRef, true)] },
    Sig { name: "pair_dimonoid", req: Req::SquareProduct, args: &[("part", DIMONOID_PART, true)] },
    Sig {
        name: "action_dimonoid",
        req: Req::ActionProduct,
        args: &[
            ("part", DIMONOID_PART, true),
            ("action", ArgTy::Word(&["matrix", "trivial", "regular"]), false),
            ("variant", ArgTy::Word(&["standard", "as_printed"]), false),
        ],
    },
    Sig { name: "brace_trivial", req: Req::Group, args: &[BRACE_PART] },
    Sig { name: "brace_opposite", req: Req::Group, args: &[BRACE_PART] },
    Sig { name: "z_parity_brace", req: Req::EvenCyclic, args: &[("part", ArgTy::Word(&["plus", "circ"]), true)] },
];

pub(crate) fn ctor_names() -> Vec<&'static str> {
    CTORS.iter().map(|s| s.name).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Arity {
    Exactly(usize),
    AtLeast(usize),
}

pub(crate) const CHECKS: &[(&str, Arity)] = &[
    ("assoc", Arity::Exactly(1)),
    ("interchange", Arity::Exactly(2)),
    ("idempotent", Arity::Exactly(1)),
    ("divisibility_left", Arity::Exactly(1)),
    ("divisibility_right", Arity::Exactly(1)),
    ("distrib_left", Arity::Exactly(1)),
    ("distrib_right", Arity::Exactly(1)),
    ("group", Arity::Exactly(1)),
    ("rack_left", Arity::Exactly(1)),
    ("rack_right", Arity::Exactly(1)),
    ("quandle_left", Arity::Exactly(1)),
    ("quandle_right", Arity::Exactly(1)),
    ("rack", Arity::Exactly(1)),
    ("quandle", Arity::Exactly(1)),
    ("dimonoid", Arity::Exactly(2)),
    ("skew_brace", Arity::Exactly(2)),
    ("multiquandle", Arity::Exactly(2)),
    ("nvalued_assoc", Arity::AtLeast(1)),
];

/// The group whose elements an automorphism or `g=` argument refers to.
fn acting_group(shape: &Shape) -> &Shape {
    match shape {
        Shape::Pair { group, .. } => group,
        other => other,
    }
}

fn req_error(req: Req, shape: &Shape) -> Option<String> {
    let d = shape.describe();
    let ok = match req {
        Req::Any => true,
        Req::Matrix => shape.matrix_dim().is_some(),
        Req::Group => shape.is_group(),
        Req::Pair => matches!(shape, Shape::Pair { .. }),
        Req::SquareProduct => {
            matches!(shape, Shape::Product(a, b) if a == b && (a.is_group() || a.matrix_dim().is_some()))
        }
        Req::ActionProduct => match shape {
            Shape::Pair { .. } => true,
            Shape::Product(_, b) => b.is_group(),
            _ => false,
        },
        Req::EvenCyclic => matches!(shape, Shape::Cyclic(n) if n % 2 == 0),
    };
    if ok {
        return None;
    }
    Some(match req {
        Req::Any => unreachable!(),
        Req::Matrix => format!("needs a matrix carrier, but {d} is not one"),
        Req::Group => format!("needs a group carrier, but {d} has no group law"),
        Req::Pair => format!("needs a carrier vector(n,p) x G, got {d}"),
        Req::SquareProduct => format!("needs a carrier M x M for a monoid M, got {d}"),
        Req::ActionProduct => format!("needs a carrier X x G for a group G, got {d}"),
        Req::EvenCyclic => format!("needs cyclic(2m), got {d}"),
    })
}

struct Validator<'a> {
    shape: Option<&'a Shape>,
    declared: HashMap<String, usize>,
    used: HashSet<String>,
    diags: Vec<Diagnostic>,
}

impl Validator<'_> {
    fn error(&mut self, kind: DiagnosticKind, span: Span, msg: impl Into<String>) {
        self.diags.push(Diagnostic::error(kind, span, msg));
    }

    fn square_matrix(
        &mut self,
        value: &Spanned<Value>,
        rows: &[Vec<i64>],
        dim: Option<(usize, u32)>,
    ) -> Option<Matrix> {
        let (n, p) = dim?;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            let got_cols = rows.first().map_or(0, Vec::len);
            self.error(
                DiagnosticKind::TypeMismatch,
                value.span,
                format!("expected a {n}x{n} matrix, got {}x{got_cols}", rows.len()),
            );
            return None;
        }
        Matrix::from_rows(p, rows).ok()
    }

    fn arg(&mut self, sig: &Sig, arg: &NamedArg) {
        let Some(&(_, ty, _)) = sig.args.iter().find(|(n, _, _)| *n == arg.name.node) else {
            let names: Vec<&str> = sig.args.iter().map(|a| a.0).collect();
            let expected = if names.is_empty() { "no arguments".to_string() } else { names.join(", ") };
            self.error(
                DiagnosticKind::UnknownIdentifier,
                arg.name.span,
                format!("`{}` has no argument `{}` (accepts {expected})", sig.name, arg.name.node),
            );
            return;
        };
        let v = &arg.value;
        let mismatch = |this: &mut Self, want: &str| {
            this.error(
                DiagnosticKind::TypeMismatch,
                v.span,
                format!("argument `{}` expects {want}, got {}", arg.name.node, v.node.type_name()),
            )
        };
        match (ty, &v.node) {
            (ArgTy::Int, Value::Int(_)) => {}
            (ArgTy::Int, _) => mismatch(self, "an integer"),
            (ArgTy::Matrix, Value::Matrix(rows)) => {
                let dim = self.shape.and_then(|s| acting_group(s).matrix_dim());
                let m = self.square_matrix(v, rows, dim);
                if sig.name == "gl_group_op" && m.as_ref().is_some_and(|m| !m.is_invertible()) {
                    self.error(DiagnosticKind::InvalidValue, v.span, "matrix M is singular (determinant 0 mod p)");
                }
            }
            (ArgTy::Matrix, _) => mismatch(self, "a matrix literal"),
            (ArgTy::OpRef, Value::Ident(name)) => {
                if self.declared.contains_key(name) {
                    self.used.insert(name.clone());
                } else {
                    self.error(DiagnosticKind::UnknownIdentifier, v.span, format!("unknown operation `{name}`"));
                }
            }
            (ArgTy::OpRef, _) => mismatch(self, "an operation name"),
            (ArgTy::Word(words), Value::Ident(w)) => {
                if !words.contains(&w.as_str()) {
                    self.error(
                        DiagnosticKind::InvalidValue,
                        v.span,
                        format!("argument `{}` must be one of {}, got `{w}`", arg.name.node, words.join(", ")),
                    );
                }
            }
            (ArgTy::Word(words), _) => mismatch(self, &format!("one of {}", words.join(", "))),
            (ArgTy::IndexOrMatrix, Value::Int(i)) => {
                if *i < 0 {
                    self.error(DiagnosticKind::InvalidValue, v.span, "element index must be non-negative");
                }
            }
            (ArgTy::IndexOrMatrix, Value::Matrix(rows)) => {
                let group = self.shape.map(acting_group);
                match group.and_then(Shape::matrix_dim) {
                    Some(dim) => {
                        if let Some(m) = self.square_matrix(v, rows, Some(dim)) {
                            if !m.is_invertible() {
                                self.error(DiagnosticKind::InvalidValue, v.span, "group element must be invertible");
                            }
                        }
                    }
                    None if group.is_some() => mismatch(self, "an element index (the group has no matrix elements)"),
                    None => {}
                }
            }
            (ArgTy::IndexOrMatrix, _) => mismatch(self, "an element index or a matrix literal"),
            (ArgTy::Row, Value::Matrix(rows)) if rows.len() == 1 => {
                if rows[0].iter().any(|&i| i < 0) {
                    self.error(DiagnosticKind::InvalidValue, v.span, "element indices must be non-negative");
                }
            }
            (ArgTy::Row, _) => mismatch(self, "a single-row list [[i0, i1, ...]]"),
        }
    }

    fn op(&mut self, op: &OpDecl) {
        let Some(sig) = CTORS.iter().find(|s| s.name == op.ctor.node) else {
            self.error(
                DiagnosticKind::UnknownIdentifier,
                op.ctor.span,
                format!("unknown constructor `{}`; expected one of {}", op.ctor.node, ctor_names().join(", ")),
            );
            self.declare(op);
            return;
        };
        if let Some(shape) = self.shape {
            if let Some(msg) = req_error(sig.req, shape) {
                self.error(DiagnosticKind::TypeMismatch, op.ctor.span, format!("`{}` {msg}", sig.name));
            }
        }
        let mut seen = HashSet::new();
        for arg in &op.args {
            if !seen.insert(arg.name.node.as_str()) {
                self.error(
                    DiagnosticKind::Duplicate,
                    arg.name.span,
                    format!("argument `{}` given twice", arg.name.node),
                );
                continue;
            }
            self.arg(sig, arg);
        }
        for (name, _, required) in sig.args {
            if *required && op.arg(name).is_none() {
                self.error(DiagnosticKind::Arity, op.ctor.span, format!("`{}` requires argument `{name}`", sig.name));
            }
        }
        if sig.args == PHI_ARGS {
            self.phi_consistency(op);
        }
        if sig.name == "action_dimonoid" {
            self.action_consistency(op);
        }
        self.declare(op);
    }

    fn phi_consistency(&mut self, op: &OpDecl) {
        let phi = match op.arg("phi").map(|a| &a.value) {
            Some(Spanned { node: Value::Ident(w), span }) => (w.as_str(), *span),
            _ => ("identity", op.ctor.span),
        };
        let needs = match phi.0 {
            "inner" => Some("g"),
            "power" => Some("k"),
            "table" => Some("image"),
            _ => None,
        };
        if let Some(n) = needs {
            if op.arg(n).is_none() {
                self.error(DiagnosticKind::Arity, phi.1, format!("phi={} requires argument `{n}`", phi.0));
            }
        }
        for extra in ["g", "k", "image"] {
            if Some(extra) != needs {
                if let Some(a) = op.arg(extra) {
                    self.diags.push(Diagnostic::warning(
                        DiagnosticKind::Unused,
                        a.name.span,
                        format!("argument `{extra}` is ignored with phi={}", phi.0),
                    ));
                }
            }
        }
    }

    fn action_consistency(&mut self, op: &OpDecl) {
        let Some(shape) = self.shape else { return };
        let action = match op.arg("action").map(|a| &a.value) {
            Some(Spanned { node: Value::Ident(w), span }) => Some((w.as_str(), *span)),
            _ => None,
        };
        match (action, shape) {
            (None, Shape::Pair { .. }) | (Some(("trivial", _)), _) => {}
            (None, _) => self.error(
                DiagnosticKind::Arity,
                op.ctor.span,
                "`action_dimonoid` needs `action=` unless the carrier is vector(n,p) x G",
            ),
            (Some(("matrix", span)), s) if !matches!(s, Shape::Pair { .. }) => {
                self.error(DiagnosticKind::TypeMismatch, span, "action=matrix needs a carrier vector(n,p) x G")
            }
            (Some(("regular", span)), s) if !matches!(s, Shape::Product(a, b) if a == b) => {
                self.error(DiagnosticKind::TypeMismatch, span, "action=regular needs a carrier G x G")
            }
            _ => {}
        }
    }

    fn declare(&mut self, op: &OpDecl) {
        if self.declared.contains_key(&op.name.node) {
            self.error(
                DiagnosticKind::Duplicate,
                op.name.span,
                format!("operation `{}` is already declared", op.name.node),
            );
        } else {
            let k = self.declared.len();
            self.declared.insert(op.name.node.clone(), k);
        }
    }

    fn check(&mut self, c: &CheckDecl) {
        let Some(&(_, arity)) = CHECKS.iter().find(|(n, _)| *n == c.check.node) else {
            let names: Vec<&str> = CHECKS.iter().map(|c| c.0).collect();
            self.error(
                DiagnosticKind::UnknownIdentifier,
                c.check.span,
                format!("unknown check `{}`; expected one of {}", c.check.node, names.join(", ")),
            );
            return;
        };
        let ok = match arity {
            Arity::Exactly(k) => c.ops.len() == k,
            Arity::AtLeast(k) => c.ops.len() >= k,
        };
        if !ok {
            let want = match arity {
                Arity::Exactly(k) => format!("{k}"),
                Arity::AtLeast(k) => format!("at least {k}"),
            };
            self.error(
                DiagnosticKind::Arity,
                c.check.span,
                format!("check `{}` takes {want} operation(s), got {}", c.check.node, c.ops.len()),
            );
        }
        for op in &c.ops {
            if self.declared.contains_key(&op.node) {
                self.used.insert(op.node.clone());
            } else {
                self.error(DiagnosticKind::UnknownIdentifier, op.span, format!("unknown operation `{}`", op.node));
            }
        }
    }
}

pub(crate) fn validate(
    stmts: Vec<Stmt>,
    origin: &str,
    mut diags: Vec<Diagnostic>,
) -> Result<SpecDraft, Vec<Diagnostic>> {
    let mut carrier: Option<(CarrierExpr, Option<Shape>)> = None;
    let mut ops = Vec::new();
    let mut checks = Vec::new();
    let mut shape_diags = Vec::new();
    for stmt in &stmts {
        match stmt {
            Stmt::Carrier { keyword, expr } => {
                if carrier.is_some() {
                    shape_diags.push(Diagnostic::error(
                        DiagnosticKind::Duplicate,
                        *keyword,
                        "a spec declares exactly one carrier",
                    ));
                } else {
                    let shape = shape_of(expr, &mut shape_diags);
                    carrier = Some((expr.clone(), shape));
                }
            }
            Stmt::Op(op) => {
                if carrier.is_none() {
                    shape_diags.push(Diagnostic::error(
                        DiagnosticKind::Syntax,
                        op.name.span,
                        "operations must follow the carrier declaration",
                    ));
                }
                ops.push(op.clone());
            }
            Stmt::Check(c) => checks.push(c.clone()),
        }
    }
    diags.extend(shape_diags);
    let shape = carrier.as_ref().and_then(|(_, s)| s.as_ref());
    let mut v = Validator { shape, declared: HashMap::new(), used: HashSet::new(), diags: Vec::new() };
    // ops and checks in source order, so references resolve only backwards
    for stmt in &stmts {
        match stmt {
            Stmt::Op(op) => v.op(op),
            Stmt::Check(c) => v.check(c),
            Stmt::Carrier { .. } => {}
        }
    }
    for op in &ops {
        if !v.used.contains(&op.name.node) {
            v.diags.push(Diagnostic::warning(
                DiagnosticKind::Unused,
                op.name.span,
                format!("operation `{}` is never checked or referenced", op.name.node),
            ));
        }
    }
    diags.extend(v.diags);
    let Some((carrier, _)) = carrier else {
        diags.push(Diagnostic::error(
            DiagnosticKind::Syntax,
            Span { line: 1, col: 1, len: 1 },
            "spec declares no carrier",
        ));
        return Err(diags);
    };
    if diags.iter().any(Diagnostic::is_error) {
        return Err(diags);
    }
    Ok(SpecDraft { origin: origin.to_string(), carrier, ops, checks, warnings: diags })
}
