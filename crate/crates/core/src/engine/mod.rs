//! Exhaustive axiom checking over operation tables.
//!
//! Every triple-quantified law is scanned in lexicographic carrier order, so
//! the reported witness is the first violating tuple. The scan is split
//! across rayon workers by first coordinate and merged with
//! `find_map_first`, which keeps the witness independent of scheduling.

mod multiset;
mod report;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::table::OpTable;

pub use multiset::{nvalued_product, Multiset, NValuedProduct};
pub use report::{AxiomReport, Verdict, Witness};

/// Carriers strictly larger than this may opt into randomized checking.
pub const SAMPLING_THRESHOLD: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("operation leaves the carrier: {x} * {y} = {result}")]
    NotClosed { x: String, y: String, result: String },
    #[error("operations live on different carriers ({left} vs {right})")]
    CarrierMismatch { left: String, right: String },
    #[error("{0} is not a two-sided unit")]
    NotAUnit(String),
    #[error("the {which} operation is not a group")]
    NotAGroup { which: String, report: Box<AxiomReport> },
    #[error("operation family is empty")]
    EmptyFamily,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CheckMode {
    #[default]
    Exhaustive,
    /// Uniform random triples from a seeded stream. Only takes effect on
    /// carriers above [`SAMPLING_THRESHOLD`]; reports are marked non-exhaustive.
    Sampled { samples: u64, seed: u64 },
}

/// A named identity; the closure reports a violation at a triple.
type Law<'a> = Box<dyn Fn(usize, usize, usize) -> bool + Sync + 'a>;

struct Scan {
    witness: Option<[usize; 3]>,
    checked: u64,
    exhaustive: bool,
}

pub(crate) fn same_carrier(a: &OpTable, b: &OpTable) -> Result<(), EngineError> {
    if std::sync::Arc::ptr_eq(a.carrier(), b.carrier()) || **a.carrier() == **b.carrier() {
        Ok(())
    } else {
        Err(EngineError::CarrierMismatch {
            left: a.carrier().label().to_string(),
            right: b.carrier().label().to_string(),
        })
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Checker {
    mode: CheckMode,
}

impl Checker {
    pub fn new(mode: CheckMode) -> Checker {
        Checker { mode }
    }

    fn scan3<F>(&self, n: usize, violated: F) -> Scan
    where
        F: Fn(usize, usize, usize) -> bool + Sync,
    {
        if let CheckMode::Sampled { samples, seed } = self.mode {
            if n > SAMPLING_THRESHOLD {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for k in 0..samples {
                    let (a, b, c) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
                    if violated(a, b, c) {
                        return Scan { witness: Some([a, b, c]), checked: k + 1, exhaustive: false };
                    }
                }
                return Scan { witness: None, checked: samples, exhaustive: false };
            }
        }
        let hit = (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                for c in 0..n {
                    if violated(a, b, c) {
                        return Some([a, b, c]);
                    }
                }
            }
            None
        });
        let n64 = n as u64;
        let checked = match hit {
            Some([a, b, c]) => (a as u64 * n64 + b as u64) * n64 + c as u64 + 1,
            None => n64 * n64 * n64,
        };
        Scan { witness: hit, checked, exhaustive: true }
    }

    fn triple_report<F>(&self, axiom: &str, op: &OpTable, violated: F) -> AxiomReport
    where
        F: Fn(usize, usize, usize) -> bool + Sync,
    {
        let scan = self.scan3(op.size(), violated);
        let report = match scan.witness {
            None => AxiomReport::pass(axiom, scan.checked),
            Some(w) => AxiomReport::fail(axiom, Witness::new(op.carrier(), &w), scan.checked),
        };
        if scan.exhaustive {
            report
        } else {
            let note = match self.mode {
                CheckMode::Sampled { samples, seed } => format!("randomized: {samples} samples, seed {seed}"),
                CheckMode::Exhaustive => unreachable!(),
            };
            report.sampled(false).with_note(note)
        }
    }

    /// `(a*b)*c = a*(b*c)`.
    pub fn associativity(&self, op: &OpTable) -> AxiomReport {
        self.triple_report("associativity", op, |a, b, c| op.get(op.get(a, b), c) != op.get(a, op.get(b, c)))
    }

    /// `(a *i b) *j c = a *i (b *j c)`.
    pub fn interchange(&self, op_i: &OpTable, op_j: &OpTable) -> Result<AxiomReport, EngineError> {
        same_carrier(op_i, op_j)?;
        Ok(self
            .triple_report("interchange", op_i, |a, b, c| op_j.get(op_i.get(a, b), c) != op_i.get(a, op_j.get(b, c))))
    }

    /// `x*x = x`.
    pub fn idempotency(&self, op: &OpTable) -> AxiomReport {
        let n = op.size();
        match (0..n).find(|&x| op.get(x, x) != x) {
            None => AxiomReport::pass("idempotency", n as u64),
            Some(x) => AxiomReport::fail("idempotency", Witness::new(op.carrier(), &[x]), x as u64 + 1),
        }
    }

    /// Right: for each `(x, y)` count `z` with `z*y = x`. Left: for each
    /// `(a, b)` count `u` with `a*u = b`.
    pub fn divisibility(&self, op: &OpTable, side: Side, unique: bool) -> AxiomReport {
        let n = op.size();
        let mut counts = vec![0u32; n * n];
        for u in 0..n {
            for v in 0..n {
                let r = op.get(u, v);
                match side {
                    // u = z, v = y: equation x = z*y with x = r
                    Side::Right => counts[r * n + v] += 1,
                    // u = a, v = unknown: a*unknown = b with b = r
                    Side::Left => counts[u * n + r] += 1,
                }
            }
        }
        let axiom = format!("{side} divisibility");
        let (mut unique_pairs, mut none, mut multiple) = (0u64, 0u64, 0u64);
        let (mut first_none, mut first_multi) = (None, None);
        for (k, &c) in counts.iter().enumerate() {
            match c {
                0 => {
                    none += 1;
                    first_none.get_or_insert(k);
                }
                1 => unique_pairs += 1,
                _ => {
                    multiple += 1;
                    first_multi.get_or_insert(k);
                }
            }
        }
        let note = format!("unique: {unique_pairs}, none: {none}, multiple: {multiple}");
        let pair = |k: usize| Witness::new(op.carrier(), &[k / n, k % n]);
        let checked = (n * n) as u64;
        let report = match (unique, first_multi, first_none) {
            (_, None, None) => AxiomReport::pass(&axiom, checked),
            (true, Some(k), _) => AxiomReport::fail(&axiom, pair(k), checked).with_verdict(Verdict::ExistsButNotUnique),
            (false, Some(_), None) => AxiomReport::pass(&axiom, checked),
            (_, _, Some(k)) => AxiomReport::fail(&axiom, pair(k), checked),
        };
        report.with_note(note)
    }

    /// Right: `(x*y)*z = (x*z)*(y*z)`. Left: `x*(y*z) = (x*y)*(x*z)`.
    pub fn self_distributivity(&self, op: &OpTable, side: Side) -> AxiomReport {
        let axiom = format!("{side} self-distributivity");
        match side {
            Side::Right => {
                self.triple_report(&axiom, op, |x, y, z| op.get(op.get(x, y), z) != op.get(op.get(x, z), op.get(y, z)))
            }
            Side::Left => {
                self.triple_report(&axiom, op, |x, y, z| op.get(x, op.get(y, z)) != op.get(op.get(x, y), op.get(x, z)))
            }
        }
    }

    /// All two-sided units. A magma has at most one.
    pub fn find_units(&self, op: &OpTable) -> Vec<usize> {
        let n = op.size();
        let units: Vec<usize> = (0..n).filter(|&e| (0..n).all(|x| op.get(e, x) == x && op.get(x, e) == x)).collect();
        debug_assert!(units.len() <= 1);
        units
    }

    pub fn find_inverses(&self, op: &OpTable, unit: usize) -> Result<(AxiomReport, Vec<Option<usize>>), EngineError> {
        let n = op.size();
        if unit >= n || !(0..n).all(|x| op.get(unit, x) == x && op.get(x, unit) == x) {
            let shown = if unit < n { op.carrier().element(unit).to_string() } else { format!("index {unit}") };
            return Err(EngineError::NotAUnit(shown));
        }
        let map: Vec<Option<usize>> =
            (0..n).map(|a| (0..n).find(|&b| op.get(a, b) == unit && op.get(b, a) == unit)).collect();
        let report = match map.iter().position(Option::is_none) {
            None => AxiomReport::pass("inverses", n as u64),
            Some(a) => AxiomReport::fail("inverses", Witness::new(op.carrier(), &[a]), a as u64 + 1),
        };
        Ok((report, map))
    }

    /// Associativity, then a two-sided unit, then two-sided inverses.
    pub fn group(&self, op: &OpTable) -> AxiomReport {
        let n = op.size() as u64;
        let assoc = self.associativity(op);
        if !assoc.passed() {
            let checked = assoc.checked;
            return assoc.into_composite("group", "associativity", checked);
        }
        let mut checked = assoc.checked + n * n;
        let Some(&unit) = self.find_units(op).first() else {
            return AxiomReport::fail("group", Witness::new(op.carrier(), &[]), checked)
                .at("unit")
                .with_note("no two-sided unit exists");
        };
        let (inv, _) = self.find_inverses(op, unit).expect("unit was just verified");
        checked += inv.checked;
        inv.into_composite("group", "inverses", checked).sampled(assoc.exhaustive)
    }

    /// (Q1) idempotency when required, then (Q2) unique divisibility, then
    /// (Q3) self-distributivity, all on the given side. Reports the first
    /// failing sub-axiom.
    pub fn rack_quandle(&self, op: &OpTable, side: Side, require_idempotent: bool) -> AxiomReport {
        let axiom = format!("{side} {}", if require_idempotent { "quandle" } else { "rack" });
        let mut checked = 0;
        let mut exhaustive = true;
        if require_idempotent {
            let q1 = self.idempotency(op);
            checked += q1.checked;
            if !q1.passed() {
                return q1.into_composite(&axiom, "Q1 idempotency", checked);
            }
        }
        let q2 = self.divisibility(op, side, true);
        checked += q2.checked;
        if !q2.passed() {
            return q2.into_composite(&axiom, &format!("Q2 {side} divisibility"), checked);
        }
        let q3 = self.self_distributivity(op, side);
        checked += q3.checked;
        exhaustive &= q3.exhaustive;
        q3.into_composite(&axiom, &format!("Q3 {side} self-distributivity"), checked).sampled(exhaustive)
    }

    /// The five dimonoid identities, numbered:
    /// `x⊣(y⊣z) =1= (x⊣y)⊣z =2= x⊣(y⊢z)`, `(x⊢y)⊣z =3= x⊢(y⊣z)`,
    /// `(x⊣y)⊢z =4= x⊢(y⊢z) =5= (x⊢y)⊢z`.
    pub fn dimonoid(&self, dashv: &OpTable, vdash: &OpTable) -> Result<AxiomReport, EngineError> {
        same_carrier(dashv, vdash)?;
        let l = |a, b| dashv.get(a, b);
        let r = |a, b| vdash.get(a, b);
        let identities: [(&str, Law<'_>); 5] = [
            ("axiom 1", Box::new(|x, y, z| l(x, l(y, z)) != l(l(x, y), z))),
            ("axiom 2", Box::new(|x, y, z| l(l(x, y), z) != l(x, r(y, z)))),
            ("axiom 3", Box::new(|x, y, z| l(r(x, y), z) != r(x, l(y, z)))),
            ("axiom 4", Box::new(|x, y, z| r(l(x, y), z) != r(x, r(y, z)))),
            ("axiom 5", Box::new(|x, y, z| r(x, r(y, z)) != r(r(x, y), z))),
        ];
        self.sequence("dimonoid", dashv, identities)
    }

    fn sequence<const K: usize>(
        &self,
        axiom: &str,
        op: &OpTable,
        identities: [(&str, Law<'_>); K],
    ) -> Result<AxiomReport, EngineError> {
        let mut checked = 0;
        let mut exhaustive = true;
        for (name, violated) in identities {
            let sub = self.triple_report(name, op, violated);
            checked += sub.checked;
            exhaustive &= sub.exhaustive;
            if !sub.passed() {
                return Ok(sub.into_composite(axiom, name, checked));
            }
        }
        Ok(AxiomReport::pass(axiom, checked).sampled(exhaustive))
    }

    /// Elements `e` with `x⊣e = x` and `e⊢x = x` for every `x`.
    pub fn bar_units(&self, dashv: &OpTable, vdash: &OpTable) -> Result<Vec<usize>, EngineError> {
        same_carrier(dashv, vdash)?;
        let n = dashv.size();
        Ok((0..n).filter(|&e| (0..n).all(|x| dashv.get(x, e) == x && vdash.get(e, x) == x)).collect())
    }

    /// Both tables must be groups; then
    /// `g1∘(g2·g3) = (g1∘g2)·g1⁻¹·(g1∘g3)` with `g1⁻¹` taken in the dot group.
    pub fn skew_brace(&self, dot: &OpTable, circ: &OpTable) -> Result<AxiomReport, EngineError> {
        same_carrier(dot, circ)?;
        for (which, op) in [("dot", dot), ("circ", circ)] {
            let g = self.group(op);
            if !g.passed() {
                return Err(EngineError::NotAGroup { which: which.to_string(), report: Box::new(g) });
            }
        }
        let unit = self.find_units(dot)[0];
        let (_, inv) = self.find_inverses(dot, unit)?;
        let inv: Vec<usize> = inv.into_iter().map(|x| x.expect("dot is a group")).collect();
        Ok(self.triple_report("skew brace", dot, |a, b, c| {
            circ.get(a, dot.get(b, c)) != dot.get(dot.get(circ.get(a, b), inv[a]), circ.get(a, c))
        }))
    }

    /// `(x*i y)*j z = (x*j z)*i (y*j z)` and `(x*j y)*i z = (x*i z)*j (y*i z)`.
    pub fn multiquandle_pair(&self, op_i: &OpTable, op_j: &OpTable) -> Result<AxiomReport, EngineError> {
        same_carrier(op_i, op_j)?;
        let i = |a, b| op_i.get(a, b);
        let j = |a, b| op_j.get(a, b);
        let identities: [(&str, Law<'_>); 2] = [
            ("(x*i y)*j z = (x*j z)*i (y*j z)", Box::new(|x, y, z| j(i(x, y), z) != i(j(x, z), j(y, z)))),
            ("(x*j y)*i z = (x*i z)*j (y*i z)", Box::new(|x, y, z| i(j(x, y), z) != j(i(x, z), i(y, z)))),
        ];
        self.sequence("multiquandle pair", op_i, identities)
    }

    /// Multiset equality `(a*b)*c = a*(b*c)` for the n-valued product of the
    /// family, where a product with a multiset is the multiset union over all
    /// intermediate values.
    pub fn nvalued_associativity(&self, ops: &[OpTable]) -> Result<AxiomReport, EngineError> {
        let product = nvalued_product(ops)?;
        Ok(self.triple_report("n-valued associativity", &ops[0], |a, b, c| {
            product.left_assoc(a, b, c) != product.right_assoc(a, b, c)
        }))
    }
}

/// `p (*i *j) q = (p *i q) *j q`.
pub fn op_product(op_i: &OpTable, op_j: &OpTable) -> Result<OpTable, EngineError> {
    same_carrier(op_i, op_j)?;
    let label = format!("({})({})", op_i.label(), op_j.label());
    Ok(OpTable::from_fn(op_i.carrier(), &label, |p, q| op_j.get(op_i.get(p, q), q)))
}

pub fn check_associativity(op: &OpTable) -> AxiomReport {
    Checker::default().associativity(op)
}

pub fn check_interchange(op_i: &OpTable, op_j: &OpTable) -> Result<AxiomReport, EngineError> {
    Checker::default().interchange(op_i, op_j)
}

pub fn check_idempotency(op: &OpTable) -> AxiomReport {
    Checker::default().idempotency(op)
}

pub fn check_divisibility(op: &OpTable, side: Side, unique: bool) -> AxiomReport {
    Checker::default().divisibility(op, side, unique)
}

pub fn check_self_distributivity(op: &OpTable, side: Side) -> AxiomReport {
    Checker::default().self_distributivity(op, side)
}

pub fn find_units(op: &OpTable) -> Vec<usize> {
    Checker::default().find_units(op)
}

pub fn find_inverses(op: &OpTable, unit: usize) -> Result<(AxiomReport, Vec<Option<usize>>), EngineError> {
    Checker::default().find_inverses(op, unit)
}

pub fn check_group(op: &OpTable) -> AxiomReport {
    Checker::default().group(op)
}

pub fn check_rack_quandle(op: &OpTable, side: Side, require_idempotent: bool) -> AxiomReport {
    Checker::default().rack_quandle(op, side, require_idempotent)
}

pub fn check_dimonoid(dashv: &OpTable, vdash: &OpTable) -> Result<AxiomReport, EngineError> {
    Checker::default().dimonoid(dashv, vdash)
}

pub fn find_bar_units(dashv: &OpTable, vdash: &OpTable) -> Result<Vec<usize>, EngineError> {
    Checker::default().bar_units(dashv, vdash)
}

pub fn check_skew_brace(dot: &OpTable, circ: &OpTable) -> Result<AxiomReport, EngineError> {
    Checker::default().skew_brace(dot, circ)
}

pub fn check_multiquandle_pair(op_i: &OpTable, op_j: &OpTable) -> Result<AxiomReport, EngineError> {
    Checker::default().multiquandle_pair(op_i, op_j)
}

pub fn check_nvalued_associativity(ops: &[OpTable]) -> Result<AxiomReport, EngineError> {
    Checker::default().nvalued_associativity(ops)
}
