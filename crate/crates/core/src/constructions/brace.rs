use std::sync::Arc;

use super::{group_op, ConstructionError};
use crate::carrier::{group_carrier, Carrier, GroupSpec};
use crate::table::OpTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraceVariant {
    /// `a ∘ b = a b`.
    Trivial,
    /// `a ∘ b = b a`.
    Opposite,
}

/// `(dot, circ)` where `dot` is the group law of `g`.
pub fn brace_ops(g: &Arc<Carrier>, variant: BraceVariant) -> Result<(OpTable, OpTable), ConstructionError> {
    let dot = group_op(g)?;
    let circ = match variant {
        BraceVariant::Trivial => dot.clone().with_label("o"),
        BraceVariant::Opposite => dot.opposite().with_label("o"),
    };
    Ok((dot, circ))
}

fn parity_circ(a: i64, b: i64) -> i64 {
    if a.rem_euclid(2) == 0 {
        a + b
    } else {
        a - b
    }
}

/// Exact evaluation of `a ∘ b = a + (-1)^a b`, `a ⊢ b = a + b` and `a ⊣ b = a ∘ b`
/// on the integers `lo..=hi`. Any input or result outside the window gives `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZWindow {
    pub lo: i64,
    pub hi: i64,
}

impl ZWindow {
    pub fn new(lo: i64, hi: i64) -> ZWindow {
        ZWindow { lo, hi }
    }

    pub fn contains(&self, a: i64) -> bool {
        (self.lo..=self.hi).contains(&a)
    }

    fn guarded(&self, a: i64, b: i64, r: Option<i64>) -> Option<i64> {
        (self.contains(a) && self.contains(b)).then_some(r?).filter(|&r| self.contains(r))
    }

    pub fn circ(&self, a: i64, b: i64) -> Option<i64> {
        let r = if a.rem_euclid(2) == 0 { a.checked_add(b) } else { a.checked_sub(b) };
        self.guarded(a, b, r)
    }

    pub fn vdash(&self, a: i64, b: i64) -> Option<i64> {
        self.guarded(a, b, a.checked_add(b))
    }

    pub fn dashv(&self, a: i64, b: i64) -> Option<i64> {
        self.circ(a, b)
    }
}

/// `(+, ∘)` on `Z_{2m}`; parity is well defined because the modulus is even.
pub fn z_parity_brace_mod(modulus: u64) -> Result<(OpTable, OpTable), ConstructionError> {
    if modulus == 0 || modulus % 2 == 1 {
        return Err(ConstructionError::OddModulus(modulus));
    }
    let zn = group_carrier(&GroupSpec::Cyclic(modulus))?;
    let plus = group_op(&zn)?.with_label("+");
    let value = |i: usize| zn.element(i).as_int().expect("cyclic carrier");
    let m = modulus as i64;
    let circ = OpTable::from_fn(&zn, "o", |a, b| {
        let r = parity_circ(value(a), value(b)).rem_euclid(m);
        zn.index_of(&crate::element::Element::Int(r)).expect("residue")
    });
    Ok((plus, circ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZBraceMode {
    Window { lo: i64, hi: i64 },
    Modulus(u64),
}

#[derive(Debug, Clone)]
pub enum ZParityBrace {
    Window(ZWindow),
    Modular { plus: OpTable, circ: OpTable },
}

pub fn z_parity_brace(mode: ZBraceMode) -> Result<ZParityBrace, ConstructionError> {
    match mode {
        ZBraceMode::Window { lo, hi } => Ok(ZParityBrace::Window(ZWindow::new(lo, hi))),
        ZBraceMode::Modulus(m) => {
            let (plus, circ) = z_parity_brace_mod(m)?;
            Ok(ZParityBrace::Modular { plus, circ })
        }
    }
}
