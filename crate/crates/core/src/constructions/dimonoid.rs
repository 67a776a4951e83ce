use std::sync::Arc;

use super::{group_op, wrong, ConstructionError};
use crate::carrier::{direct_product, pair_carrier_with_guard, Carrier, CarrierKind, GroupView};
use crate::element::Element;
use crate::engine::{check_associativity, find_units};
use crate::table::OpTable;

/// The monoid law a factor carrier comes with: its group law, or the matrix
/// product on a full matrix set.
pub fn natural_monoid(m: &Arc<Carrier>) -> Result<OpTable, ConstructionError> {
    if m.is_group() {
        return group_op(m);
    }
    if let CarrierKind::MatrixSet { .. } = m.kind() {
        let mats: Vec<_> = m.elements().iter().map(|e| e.as_matrix().expect("matrix carrier")).collect();
        return Ok(OpTable::from_fn(m, &format!("{}.mul", m.label()), |a, b| {
            let c = mats[a] * mats[b];
            m.index_of(&Element::Matrix(c)).expect("matrix set is closed")
        }));
    }
    Err(wrong("natural_monoid", m, "no monoid law is attached to this carrier"))
}

fn validate_monoid(monoid: &OpTable) -> Result<(), ConstructionError> {
    if !check_associativity(monoid).passed() {
        return Err(ConstructionError::NotAssociative);
    }
    if find_units(monoid).is_empty() {
        return Err(ConstructionError::NoUnit);
    }
    Ok(())
}

fn pair_tables(monoid: &OpTable, product: &Arc<Carrier>) -> (OpTable, OpTable) {
    let mul = |a, b| monoid.get(a, b);
    let dashv = OpTable::from_fn(product, "-|", |x, y| {
        let ((m, n), (m2, n2)) = (product.split(x), product.split(y));
        product.join(m, mul(mul(n, m2), n2))
    });
    let vdash = OpTable::from_fn(product, "|-", |x, y| {
        let ((m, n), (m2, n2)) = (product.split(x), product.split(y));
        product.join(mul(mul(m, n), m2), n2)
    });
    (dashv, vdash)
}

/// `(m,n) ⊣ (m',n') = (m, n m' n')` and `(m,n) ⊢ (m',n') = (m n m', n')` on `M x M`.
pub fn pair_dimonoid(monoid: &OpTable, guard: u64) -> Result<(OpTable, OpTable), ConstructionError> {
    validate_monoid(monoid)?;
    let m = monoid.carrier();
    let product = direct_product(m, m, guard)?;
    Ok(pair_tables(monoid, &product))
}

/// [`pair_dimonoid`] on an existing `M x M` carrier, using [`natural_monoid`] of `M`.
pub fn pair_dimonoid_on(product: &Arc<Carrier>) -> Result<(OpTable, OpTable), ConstructionError> {
    let Some((a, b)) = product.factors() else {
        return Err(wrong("pair_dimonoid", product, "expected a product M x M"));
    };
    if a != b && **a != **b {
        return Err(wrong("pair_dimonoid", product, "both factors must be the same monoid"));
    }
    if matches!(product.kind(), CarrierKind::VectorGroupPairs { .. }) {
        return Err(wrong("pair_dimonoid", product, "expected a product M x M"));
    }
    let monoid = natural_monoid(a)?;
    validate_monoid(&monoid)?;
    Ok(pair_tables(&monoid, product))
}

/// A finite left `G`-set, stored as `action[g * |X| + x] = g.x`.
#[derive(Debug, Clone)]
pub struct GSet {
    x: Arc<Carrier>,
    g: Arc<Carrier>,
    action: Vec<usize>,
}

impl GSet {
    /// Verifies `e.x = x` and `(gh).x = g.(h.x)`.
    pub fn new<F>(x: &Arc<Carrier>, g: &Arc<Carrier>, act: F) -> Result<GSet, ConstructionError>
    where
        F: Fn(usize, usize) -> usize,
    {
        let grp = g.require_group()?;
        let nx = x.len();
        let mut action = Vec::with_capacity(g.len() * nx);
        for gi in 0..g.len() {
            for xi in 0..nx {
                let y = act(gi, xi);
                if y >= nx {
                    return Err(wrong("GSet", x, "action leaves the set"));
                }
                action.push(y);
            }
        }
        let set = GSet { x: x.clone(), g: g.clone(), action };
        set.verify(&grp)?;
        Ok(set)
    }

    fn verify(&self, grp: &GroupView<'_>) -> Result<(), ConstructionError> {
        let e = grp.identity();
        let err = |g: usize, h: usize, x: usize| ConstructionError::NotAnAction {
            g: self.g.element(g).to_string(),
            h: self.g.element(h).to_string(),
            x: self.x.element(x).to_string(),
        };
        for x in 0..self.x.len() {
            if self.act(e, x) != x {
                return Err(err(e, e, x));
            }
        }
        for g in 0..self.g.len() {
            for h in 0..self.g.len() {
                let gh = grp.mul(g, h);
                for x in 0..self.x.len() {
                    if self.act(gh, x) != self.act(g, self.act(h, x)) {
                        return Err(err(g, h, x));
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrices acting on column vectors.
    pub fn matrix_action(v: &Arc<Carrier>, g: &Arc<Carrier>) -> Result<GSet, ConstructionError> {
        let (CarrierKind::VectorSpace { n, .. }, CarrierKind::MatrixGroup { n: gn, .. }) = (v.kind(), g.kind()) else {
            return Err(wrong("matrix_action", v, "expected F_p^n and a matrix group"));
        };
        if n != gn {
            return Err(crate::error::AlgebraError::ActionMismatch { vector_dim: *n, matrix_dim: *gn }.into());
        }
        let mut table = Vec::with_capacity(g.len() * v.len());
        for ge in g.elements() {
            let m = ge.as_matrix().expect("matrix group");
            for ve in v.elements() {
                let w = m.apply(ve.as_vector().expect("vector space"))?;
                table.push(v.index_of(&Element::Vector(w)).expect("vector space is closed"));
            }
        }
        let nv = v.len();
        GSet::new(v, g, |gi, xi| table[gi * nv + xi])
    }

    pub fn trivial(x: &Arc<Carrier>, g: &Arc<Carrier>) -> Result<GSet, ConstructionError> {
        GSet::new(x, g, |_, xi| xi)
    }

    /// `G` acting on itself by left multiplication.
    pub fn regular(g: &Arc<Carrier>) -> Result<GSet, ConstructionError> {
        let grp = g.require_group()?;
        GSet::new(g, g, |a, b| grp.mul(a, b))
    }

    pub fn set(&self) -> &Arc<Carrier> {
        &self.x
    }

    pub fn group(&self) -> &Arc<Carrier> {
        &self.g
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g * self.x.len() + x]
    }
}

/// Which element the group part acts on in `⊢`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ActionVariant {
    /// `(x,g) ⊢ (y,h) = (g.y, gh)`.
    #[default]
    Standard,
    /// `(x,g) ⊢ (y,h) = (g.x, gh)`. Not a dimonoid once the action is nontrivial.
    AsPrinted,
}

/// `(x,g) ⊣ (y,h) = (x, gh)` with `⊢` per [`ActionVariant`], on `X x G`.
pub fn action_dimonoid(
    gset: &GSet,
    variant: ActionVariant,
    guard: u64,
) -> Result<(OpTable, OpTable), ConstructionError> {
    let (x, g) = (gset.set(), gset.group());
    let carrier = match (x.kind(), g.kind()) {
        (CarrierKind::VectorSpace { .. }, CarrierKind::MatrixGroup { .. }) => pair_carrier_with_guard(x, g, guard)?,
        _ => direct_product(x, g, guard)?,
    };
    action_dimonoid_on(gset, variant, &carrier)
}

/// [`action_dimonoid`] on an existing `X x G` carrier.
pub fn action_dimonoid_on(
    gset: &GSet,
    variant: ActionVariant,
    carrier: &Arc<Carrier>,
) -> Result<(OpTable, OpTable), ConstructionError> {
    match carrier.factors() {
        Some((a, b)) if **a == **gset.set() && **b == **gset.group() => {}
        _ => return Err(wrong("action_dimonoid", carrier, "carrier is not X x G for this action")),
    }
    let grp = gset.group().require_group()?;
    let dashv = OpTable::from_fn(carrier, "-|", |p, q| {
        let ((x, g), (_, h)) = (carrier.split(p), carrier.split(q));
        carrier.join(x, grp.mul(g, h))
    });
    let vdash = OpTable::from_fn(carrier, "|-", |p, q| {
        let ((x, g), (y, h)) = (carrier.split(p), carrier.split(q));
        let moved = match variant {
            ActionVariant::Standard => gset.act(g, y),
            ActionVariant::AsPrinted => gset.act(g, x),
        };
        carrier.join(moved, grp.mul(g, h))
    });
    Ok((dashv, vdash))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::{
        enumerate_matrices, group_carrier, trivial_matrix_group, vector_space, GroupSpec, DEFAULT_GUARD,
    };
    use crate::engine::{check_dimonoid, find_bar_units};

    fn z(n: u64) -> Arc<Carrier> {
        group_carrier(&GroupSpec::Cyclic(n)).unwrap()
    }

    fn pos(c: &Carrier, a: i64, b: i64) -> usize {
        c.index_of(&Element::pair(Element::Int(a), Element::Int(b))).unwrap()
    }

    #[test]
    fn pair_dimonoid_z4_values() {
        let z4 = z(4);
        let (l, r) = pair_dimonoid(&group_op(&z4).unwrap(), DEFAULT_GUARD).unwrap();
        let c = l.carrier().clone();
        assert_eq!(l.get(pos(&c, 1, 2), pos(&c, 3, 0)), pos(&c, 1, 1));
        assert_eq!(r.get(pos(&c, 1, 2), pos(&c, 3, 0)), pos(&c, 2, 0));
        assert!(check_dimonoid(&l, &r).unwrap().passed());
        let bars = find_bar_units(&l, &r).unwrap();
        for m in 0..4 {
            assert!(bars.contains(&pos(&c, m, (4 - m) % 4)));
        }
    }

    #[test]
    fn pair_dimonoid_nonabelian_and_matrix_monoid() {
        let s3 = group_carrier(&GroupSpec::Symmetric(3)).unwrap();
        let (l, r) = pair_dimonoid(&group_op(&s3).unwrap(), DEFAULT_GUARD).unwrap();
        assert!(check_dimonoid(&l, &r).unwrap().passed());
        let grp = s3.group().unwrap();
        let bars = find_bar_units(&l, &r).unwrap();
        let c = l.carrier();
        for m in 0..6 {
            assert!(bars.contains(&c.join(m, grp.inv(m))));
        }

        let m2 = enumerate_matrices(2, 2, false).unwrap();
        let mono = natural_monoid(&m2).unwrap();
        let (l, r) = pair_dimonoid(&mono, DEFAULT_GUARD).unwrap();
        assert!(check_dimonoid(&l, &r).unwrap().passed());
    }

    #[test]
    fn pair_dimonoid_on_product() {
        let z3 = z(3);
        let prod = direct_product(&z3, &z3, DEFAULT_GUARD).unwrap();
        let (l, r) = pair_dimonoid_on(&prod).unwrap();
        let (l2, r2) = pair_dimonoid(&group_op(&z3).unwrap(), DEFAULT_GUARD).unwrap();
        assert!(l.same_entries(&l2) && r.same_entries(&r2));
        let other = direct_product(&z3, &z(2), DEFAULT_GUARD).unwrap();
        assert!(pair_dimonoid_on(&other).is_err());
    }

    #[test]
    fn pair_dimonoid_rejects_bad_monoids() {
        let z3 = z(3);
        let minus = OpTable::from_fn(&z3, "-", |a, b| (a + 3 - b) % 3);
        assert_eq!(pair_dimonoid(&minus, DEFAULT_GUARD).unwrap_err(), ConstructionError::NotAssociative);
        let left = OpTable::from_fn(&z3, "x", |a, _| a);
        assert_eq!(pair_dimonoid(&left, DEFAULT_GUARD).unwrap_err(), ConstructionError::NoUnit);
    }

    #[test]
    fn matrix_action_dimonoid() {
        let v = vector_space(2, 2, DEFAULT_GUARD).unwrap();
        let gl = enumerate_matrices(2, 2, true).unwrap();
        let gset = GSet::matrix_action(&v, &gl).unwrap();
        let (l, r) = action_dimonoid(&gset, ActionVariant::Standard, DEFAULT_GUARD).unwrap();
        assert!(check_dimonoid(&l, &r).unwrap().passed());
        let c = l.carrier();
        for p in 0..c.len() {
            for q in 0..c.len() {
                let (_, h) = c.split(q);
                for y in 0..v.len() {
                    assert_eq!(l.get(p, q), l.get(p, c.join(y, h)));
                }
            }
        }
        let (l, r) = action_dimonoid(&gset, ActionVariant::AsPrinted, DEFAULT_GUARD).unwrap();
        let rep = check_dimonoid(&l, &r).unwrap();
        assert_eq!(rep.failed_at.as_deref(), Some("axiom 4"));
    }

    #[test]
    fn trivial_group_dimonoid() {
        let v = vector_space(2, 2, DEFAULT_GUARD).unwrap();
        let e = trivial_matrix_group(2, 2).unwrap();
        for variant in [ActionVariant::Standard, ActionVariant::AsPrinted] {
            let gset = GSet::matrix_action(&v, &e).unwrap();
            let (l, r) = action_dimonoid(&gset, variant, DEFAULT_GUARD).unwrap();
            assert!(check_dimonoid(&l, &r).unwrap().passed());
            assert!((0..l.size()).all(|p| (0..l.size()).all(|q| l.get(p, q) == p)));
        }
    }

    #[test]
    fn regular_action_and_bad_action() {
        let s3 = group_carrier(&GroupSpec::Symmetric(3)).unwrap();
        let gset = GSet::regular(&s3).unwrap();
        let (l, r) = action_dimonoid(&gset, ActionVariant::Standard, DEFAULT_GUARD).unwrap();
        assert!(check_dimonoid(&l, &r).unwrap().passed());
        let grp = s3.group().unwrap();
        // right multiplication is not a left action on a nonabelian group
        let err = GSet::new(&s3, &s3, |g, x| grp.mul(x, g)).unwrap_err();
        assert!(matches!(err, ConstructionError::NotAnAction { .. }));
        assert!(GSet::trivial(&z(5), &s3).is_ok());
    }
}
