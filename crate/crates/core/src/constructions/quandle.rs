use std::sync::Arc;

use super::{wrong, ConstructionError};
use crate::automorphism::GroupAutomorphism;
use crate::carrier::{Carrier, CarrierKind, GroupView};
use crate::table::OpTable;

/// Exponent `n` in `b^-n a b^n` and `(A^n b, A^n B A^-n)`. Negative values
/// go through the group inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConjExponent(pub i64);

impl ConjExponent {
    /// Representative in `0..exponent`.
    pub fn reduced(self, exponent: u64) -> i64 {
        self.0.rem_euclid(exponent as i64)
    }
}

impl From<i64> for ConjExponent {
    fn from(n: i64) -> Self {
        ConjExponent(n)
    }
}

fn group_of<'a>(name: &'static str, g: &'a Carrier) -> Result<GroupView<'a>, ConstructionError> {
    g.group().ok_or_else(|| wrong(name, g, "carrier has no group law"))
}

/// The carrier's own group product.
pub fn group_op(g: &Arc<Carrier>) -> Result<OpTable, ConstructionError> {
    let grp = group_of("group_op", g)?;
    Ok(OpTable::from_fn(g, &format!("{}.mul", g.label()), |a, b| grp.mul(a, b)))
}

/// `x * y = x`.
pub fn trivial_quandle(q: &Arc<Carrier>) -> OpTable {
    OpTable::from_fn(q, "x*y=x", |a, _| a)
}

/// `a * b = b^-m a b^m`.
pub fn conj_quandle(g: &Arc<Carrier>, m: impl Into<ConjExponent>) -> Result<OpTable, ConstructionError> {
    let m = m.into();
    let grp = group_of("conj_quandle", g)?;
    let k = m.reduced(grp.exponent());
    let powers: Vec<usize> = (0..g.len()).map(|b| grp.pow(b, k)).collect();
    Ok(OpTable::from_fn(g, &format!("Conj_{}({})", m.0, g.label()), |a, b| {
        let bm = powers[b];
        grp.mul(grp.mul(grp.inv(bm), a), bm)
    }))
}

/// `a * b = b a^-1 b`.
pub fn core_quandle(g: &Arc<Carrier>) -> Result<OpTable, ConstructionError> {
    let grp = group_of("core_quandle", g)?;
    Ok(OpTable::from_fn(g, &format!("Core({})", g.label()), |a, b| grp.mul(grp.mul(b, grp.inv(a)), b)))
}

fn automorphism_on<'a>(
    name: &'static str,
    g: &'a Carrier,
    phi: &GroupAutomorphism,
) -> Result<GroupView<'a>, ConstructionError> {
    let grp = group_of(name, g)?;
    if **phi.carrier() != *g {
        return Err(wrong(name, g, "automorphism is defined on a different group"));
    }
    Ok(grp)
}

/// `a * b = phi(a b^-1) b`.
pub fn alexander_quandle(g: &Arc<Carrier>, phi: &GroupAutomorphism) -> Result<OpTable, ConstructionError> {
    let grp = automorphism_on("alexander_quandle", g, phi)?;
    Ok(OpTable::from_fn(g, &format!("Alex({})", g.label()), |a, b| grp.mul(phi.apply(grp.mul(a, grp.inv(b))), b)))
}

struct PairParts<'a> {
    q: &'a Carrier,
    grp: GroupView<'a>,
    /// `action[g * |V| + v]` is the position of `g v` in `V`.
    action: Vec<usize>,
    dim_v: usize,
}

impl<'a> PairParts<'a> {
    fn new(name: &'static str, q: &'a Carrier) -> Result<PairParts<'a>, ConstructionError> {
        if !matches!(q.kind(), CarrierKind::VectorGroupPairs { .. }) {
            return Err(wrong(name, q, "expected a V x G pair carrier"));
        }
        let (v, g) = q.factors().expect("pair carrier has factors");
        let grp = group_of(name, g)?;
        let mut action = Vec::with_capacity(g.len() * v.len());
        for ge in g.elements() {
            let m = ge.as_matrix().expect("matrix group");
            for ve in v.elements() {
                let image = m.apply(ve.as_vector().expect("vector space"))?;
                action.push(v.index_of(&crate::element::Element::Vector(image)).expect("V is closed"));
            }
        }
        Ok(PairParts { q, grp, action, dim_v: v.len() })
    }

    fn act(&self, g: usize, v: usize) -> usize {
        self.action[g * self.dim_v + v]
    }
}

/// `(a, A) o (b, B) = (A b, phi(A B^-1) B)` on `V x G`.
pub fn vxg_phi_op(q: &Arc<Carrier>, phi: &GroupAutomorphism) -> Result<OpTable, ConstructionError> {
    let parts = PairParts::new("vxg_phi_op", q)?;
    let (_, g) = q.factors().unwrap();
    automorphism_on("vxg_phi_op", g, phi)?;
    let grp = parts.grp;
    Ok(OpTable::from_fn(q, &format!("phi-op({})", q.label()), |x, y| {
        let (_, ga) = parts.q.split(x);
        let (vb, gb) = parts.q.split(y);
        let second = grp.mul(phi.apply(grp.mul(ga, grp.inv(gb))), gb);
        parts.q.join(parts.act(ga, vb), second)
    }))
}

/// `(a, A) o_n (b, B) = (A^n b, A^n B A^-n)` on `V x G`.
pub fn vxg_conj_op(q: &Arc<Carrier>, n: impl Into<ConjExponent>) -> Result<OpTable, ConstructionError> {
    let n = n.into();
    let parts = PairParts::new("vxg_conj_op", q)?;
    let grp = parts.grp;
    let k = n.reduced(grp.exponent());
    let (_, g) = q.factors().unwrap();
    let powers: Vec<usize> = (0..g.len()).map(|a| grp.pow(a, k)).collect();
    Ok(OpTable::from_fn(q, &format!("o_{}({})", n.0, q.label()), |x, y| {
        let (_, ga) = parts.q.split(x);
        let (vb, gb) = parts.q.split(y);
        let an = powers[ga];
        parts.q.join(parts.act(an, vb), grp.mul(grp.mul(an, gb), grp.inv(an)))
    }))
}

/// `a op' b = b op a`.
pub fn opposite_op(op: &OpTable) -> OpTable {
    op.opposite()
}
