//! Finite carriers: ordered element sets, optionally with a group law.
//!
//! Elements are kept in canonical order and addressed by position. Product
//! carriers (`A x B`, `V x G`) keep their factors so that the pair at position
//! `i` is `(i / |B|, i % |B|)` in factor coordinates.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use itertools::Itertools;

use crate::element::Element;
use crate::error::AlgebraError;
use crate::field::{is_prime, PrimeField};
use crate::matrix::Matrix;

/// Default bound on carrier sizes (and on `p^(n^2)` for matrix enumeration).
pub const DEFAULT_GUARD: u64 = 1_000_000;

/// Group carriers up to this size get a precomputed Cayley table, which also
/// serves as the exhaustive closure check.
pub const CAYLEY_TABLE_LIMIT: usize = 2048;

const CLOSURE_SAMPLE: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CarrierKind {
    MatrixSet { n: usize, p: u32 },
    MatrixGroup { n: usize, p: u32 },
    Cyclic { order: u64 },
    Symmetric { degree: usize },
    DirectProduct(Box<CarrierKind>, Box<CarrierKind>),
    VectorSpace { n: usize, p: u32 },
    VectorGroupPairs { n: usize, p: u32 },
    IntegerWindow { lo: i64, hi: i64 },
    Explicit,
}

impl CarrierKind {
    /// `(n, p)` for carriers whose elements are matrices.
    pub fn matrix_shape(&self) -> Option<(usize, u32)> {
        match *self {
            CarrierKind::MatrixSet { n, p } | CarrierKind::MatrixGroup { n, p } => Some((n, p)),
            _ => None,
        }
    }

    fn identity(&self) -> Option<Element> {
        Some(match self {
            CarrierKind::MatrixGroup { n, p } => Matrix::identity(*n, *p).into(),
            CarrierKind::Cyclic { .. } => Element::Int(0),
            CarrierKind::Symmetric { degree } => Element::Perm((0..*degree as u8).collect()),
            CarrierKind::VectorSpace { n, .. } => Element::Vector(vec![0; *n]),
            CarrierKind::DirectProduct(a, b) => Element::pair(a.identity()?, b.identity()?),
            _ => return None,
        })
    }

    fn mul(&self, x: &Element, y: &Element) -> Option<Element> {
        Some(match (self, x, y) {
            (CarrierKind::MatrixGroup { .. }, Element::Matrix(a), Element::Matrix(b)) => (a * b).into(),
            (CarrierKind::Cyclic { order }, Element::Int(a), Element::Int(b)) => {
                Element::Int((a + b).rem_euclid(*order as i64))
            }
            // composition: apply y first, then x
            (CarrierKind::Symmetric { .. }, Element::Perm(a), Element::Perm(b)) => {
                Element::Perm(b.iter().map(|&i| a[i as usize]).collect())
            }
            (CarrierKind::VectorSpace { p, .. }, Element::Vector(a), Element::Vector(b)) => {
                Element::Vector(a.iter().zip(b).map(|(&s, &t)| (s + t) % p).collect())
            }
            (CarrierKind::DirectProduct(ka, kb), Element::Pair(a1, b1), Element::Pair(a2, b2)) => {
                Element::pair(ka.mul(a1, a2)?, kb.mul(b1, b2)?)
            }
            _ => return None,
        })
    }

    fn inv(&self, x: &Element) -> Option<Element> {
        Some(match (self, x) {
            (CarrierKind::MatrixGroup { .. }, Element::Matrix(a)) => a.inverse().ok()?.into(),
            (CarrierKind::Cyclic { order }, Element::Int(a)) => Element::Int((-a).rem_euclid(*order as i64)),
            (CarrierKind::Symmetric { .. }, Element::Perm(a)) => {
                let mut out = vec![0u8; a.len()];
                for (i, &img) in a.iter().enumerate() {
                    out[img as usize] = i as u8;
                }
                Element::Perm(out)
            }
            (CarrierKind::VectorSpace { p, .. }, Element::Vector(a)) => {
                Element::Vector(a.iter().map(|&s| (p - s) % p).collect())
            }
            (CarrierKind::DirectProduct(ka, kb), Element::Pair(a, b)) => Element::pair(ka.inv(a)?, kb.inv(b)?),
            _ => return None,
        })
    }
}

/// Group structure attached to a carrier.
#[derive(Debug)]
pub struct GroupData {
    identity: usize,
    inverse: Vec<usize>,
    table: Option<Vec<u32>>,
    exponent: OnceLock<u64>,
}

/// A finite, canonically ordered set of elements.
#[derive(Debug)]
pub struct Carrier {
    kind: CarrierKind,
    label: String,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    factors: Option<(Arc<Carrier>, Arc<Carrier>)>,
    group: Option<GroupData>,
}

impl PartialEq for Carrier {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.elements == other.elements
    }
}

impl Eq for Carrier {}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

fn check_guard(size: u128, guard: u64) -> Result<(), AlgebraError> {
    if size > guard as u128 {
        Err(AlgebraError::TooLarge { size, guard })
    } else {
        Ok(())
    }
}

fn check_prime(p: u32) -> Result<(), AlgebraError> {
    PrimeField::new(p).map(|_| ())
}

impl Carrier {
    fn assemble(
        kind: CarrierKind,
        label: String,
        mut elements: Vec<Element>,
        factors: Option<(Arc<Carrier>, Arc<Carrier>)>,
        with_group: bool,
    ) -> Result<Arc<Carrier>, AlgebraError> {
        elements.sort();
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(AlgebraError::DuplicateElement(e.to_string()));
            }
        }
        let mut carrier = Carrier { kind, label, elements, index, factors, group: None };
        if with_group {
            carrier.group = Some(carrier.derive_group()?);
        }
        Ok(Arc::new(carrier))
    }

    fn derive_group(&self) -> Result<GroupData, AlgebraError> {
        let lookup = |e: &Element| self.index_of(e).ok_or_else(|| AlgebraError::NotInCarrier(e.to_string()));
        let id_el = self.kind.identity().ok_or_else(|| AlgebraError::NotAGroupCarrier(self.label.clone()))?;
        let identity = lookup(&id_el)?;
        let inverse = self
            .elements
            .iter()
            .map(|e| {
                let inv = self.kind.inv(e).ok_or_else(|| AlgebraError::NotAGroupCarrier(self.label.clone()))?;
                lookup(&inv)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let n = self.len();
        let product = |i: usize, j: usize| -> Result<usize, AlgebraError> {
            let (a, b) = (&self.elements[i], &self.elements[j]);
            let c = self.kind.mul(a, b).ok_or_else(|| AlgebraError::NotAGroupCarrier(self.label.clone()))?;
            self.index_of(&c).ok_or_else(|| AlgebraError::GroupNotClosed(a.to_string(), b.to_string(), c.to_string()))
        };
        let table = if n <= CAYLEY_TABLE_LIMIT {
            let mut t = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    t.push(product(i, j)? as u32);
                }
            }
            Some(t)
        } else {
            let stride = (n / CLOSURE_SAMPLE).max(1);
            for i in 0..n {
                for j in (0..n).step_by(stride) {
                    product(i, j)?;
                }
            }
            None
        };
        Ok(GroupData { identity, inverse, table, exponent: OnceLock::new() })
    }

    pub fn kind(&self) -> &CarrierKind {
        &self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &Element) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn factors(&self) -> Option<(&Arc<Carrier>, &Arc<Carrier>)> {
        self.factors.as_ref().map(|(a, b)| (a, b))
    }

    /// Position of the pair `(a, b)` in a product carrier.
    pub fn join(&self, a: usize, b: usize) -> usize {
        let (_, fb) = self.factors.as_ref().expect("product carrier");
        a * fb.len() + b
    }

    /// Factor coordinates of position `i` in a product carrier.
    pub fn split(&self, i: usize) -> (usize, usize) {
        let (_, fb) = self.factors.as_ref().expect("product carrier");
        (i / fb.len(), i % fb.len())
    }

    pub fn is_group(&self) -> bool {
        self.group.is_some()
    }

    pub fn group(&self) -> Option<GroupView<'_>> {
        self.group.as_ref().map(|data| GroupView { carrier: self, data })
    }

    pub fn require_group(&self) -> Result<GroupView<'_>, AlgebraError> {
        self.group().ok_or_else(|| AlgebraError::NotAGroupCarrier(self.label.clone()))
    }
}

/// Index-level access to a carrier's group law.
#[derive(Clone, Copy)]
pub struct GroupView<'a> {
    carrier: &'a Carrier,
    data: &'a GroupData,
}

impl<'a> GroupView<'a> {
    pub fn carrier(&self) -> &'a Carrier {
        self.carrier
    }

    pub fn identity(&self) -> usize {
        self.data.identity
    }

    pub fn inv(&self, i: usize) -> usize {
        self.data.inverse[i]
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        if let Some(t) = &self.data.table {
            return t[i * self.carrier.len() + j] as usize;
        }
        if let Some((fa, fb)) = &self.carrier.factors {
            if let (Some(ga), Some(gb)) = (fa.group(), fb.group()) {
                let (a1, b1) = self.carrier.split(i);
                let (a2, b2) = self.carrier.split(j);
                return self.carrier.join(ga.mul(a1, a2), gb.mul(b1, b2));
            }
        }
        let c = self.carrier.kind.mul(&self.carrier.elements[i], &self.carrier.elements[j]).expect("group law defined");
        self.carrier.index_of(&c).expect("group carrier is closed")
    }

    pub fn order(&self, i: usize) -> u64 {
        let e = self.identity();
        let mut x = i;
        let mut k = 1;
        while x != e {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        *self.data.exponent.get_or_init(|| {
            fn gcd(a: u64, b: u64) -> u64 {
                if b == 0 {
                    a
                } else {
                    gcd(b, a % b)
                }
            }
            (0..self.carrier.len()).fold(1, |acc, i| {
                let o = self.order(i);
                acc / gcd(acc, o) * o
            })
        })
    }

    /// `x^k`, with `k` reduced mod the group exponent first.
    pub fn pow(&self, i: usize, k: i64) -> usize {
        let mut e = k.rem_euclid(self.exponent() as i64) as u64;
        let mut base = i;
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.carrier.len();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// Description of a built-in group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Symmetric(usize),
    Gl { n: usize, p: u32 },
    TrivialGl { n: usize, p: u32 },
    VectorSpace { n: usize, p: u32 },
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn product(a: GroupSpec, b: GroupSpec) -> GroupSpec {
        GroupSpec::Product(Box::new(a), Box::new(b))
    }
}

fn matrix_count(n: usize, p: u32, guard: u64) -> Result<usize, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::Unsupported("matrix dimension must be at least 1".into()));
    }
    check_prime(p)?;
    let size = (n * n) as u32;
    let count = (p as u128).checked_pow(size).unwrap_or(u128::MAX);
    check_guard(count, guard)?;
    Ok(count as usize)
}

pub fn enumerate_matrices(n: usize, p: u32, invertible_only: bool) -> Result<Arc<Carrier>, AlgebraError> {
    enumerate_matrices_with_guard(n, p, invertible_only, DEFAULT_GUARD)
}

/// All `n x n` matrices over F_p in row-major lexicographic order, optionally
/// filtered to the invertible ones (which then carry the GL group law).
pub fn enumerate_matrices_with_guard(
    n: usize,
    p: u32,
    invertible_only: bool,
    guard: u64,
) -> Result<Arc<Carrier>, AlgebraError> {
    let count = matrix_count(n, p, guard)?;
    let q = p as usize;
    let mut elements = Vec::new();
    let mut entries = vec![0u32; n * n];
    for mut code in 0..count {
        for slot in (0..n * n).rev() {
            entries[slot] = (code % q) as u32;
            code /= q;
        }
        let m = Matrix::from_entries(n, p, entries.clone());
        if !invertible_only || m.is_invertible() {
            elements.push(Element::Matrix(m));
        }
    }
    if invertible_only {
        Carrier::assemble(CarrierKind::MatrixGroup { n, p }, format!("GL({n},{p})"), elements, None, true)
    } else {
        Carrier::assemble(CarrierKind::MatrixSet { n, p }, format!("M({n},{p})"), elements, None, false)
    }
}

/// The subgroup of GL(n, p) generated by `gens` (closure under products).
pub fn matrix_group_generated(n: usize, p: u32, gens: &[Matrix]) -> Result<Arc<Carrier>, AlgebraError> {
    check_prime(p)?;
    let mut seen: HashMap<Matrix, ()> = HashMap::new();
    let id = Matrix::identity(n, p);
    let mut frontier = vec![id.clone()];
    seen.insert(id, ());
    for g in gens {
        if g.dim() != n {
            return Err(AlgebraError::DimensionMismatch { left: n, right: g.dim() });
        }
        if g.modulus() != p {
            return Err(AlgebraError::ModulusMismatch { left: p, right: g.modulus() });
        }
        if !g.is_invertible() {
            return Err(AlgebraError::Singular);
        }
    }
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = &x * g;
            if seen.insert(y.clone(), ()).is_none() {
                check_guard(seen.len() as u128, DEFAULT_GUARD)?;
                frontier.push(y);
            }
        }
    }
    let label = if gens.iter().all(|g| *g == Matrix::identity(n, p)) {
        format!("{{E}}({n},{p})")
    } else {
        format!("<{}>", gens.iter().map(|g| g.to_string()).join(", "))
    };
    let elements = seen.into_keys().map(Element::Matrix).collect();
    Carrier::assemble(CarrierKind::MatrixGroup { n, p }, label, elements, None, true)
}

pub fn trivial_matrix_group(n: usize, p: u32) -> Result<Arc<Carrier>, AlgebraError> {
    matrix_group_generated(n, p, &[])
}

/// The vector space F_p^n, lexicographically ordered, with vector addition
/// as its group law.
pub fn vector_space(n: usize, p: u32, guard: u64) -> Result<Arc<Carrier>, AlgebraError> {
    check_prime(p)?;
    if n == 0 {
        return Err(AlgebraError::Unsupported("vector dimension must be at least 1".into()));
    }
    let count = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    check_guard(count, guard)?;
    let elements = (0..n).map(|_| 0..p).multi_cartesian_product().map(Element::Vector).collect();
    Carrier::assemble(CarrierKind::VectorSpace { n, p }, format!("F_{p}^{n}"), elements, None, true)
}

pub fn group_carrier(spec: &GroupSpec) -> Result<Arc<Carrier>, AlgebraError> {
    group_carrier_with_guard(spec, DEFAULT_GUARD)
}

pub fn group_carrier_with_guard(spec: &GroupSpec, guard: u64) -> Result<Arc<Carrier>, AlgebraError> {
    match *spec {
        GroupSpec::Cyclic(order) => {
            if order == 0 {
                return Err(AlgebraError::Unsupported("cyclic group of order 0".into()));
            }
            check_guard(order as u128, guard)?;
            let elements = (0..order as i64).map(Element::Int).collect();
            Carrier::assemble(CarrierKind::Cyclic { order }, format!("Z_{order}"), elements, None, true)
        }
        GroupSpec::Symmetric(degree) => {
            if !(1..=5).contains(&degree) {
                return Err(AlgebraError::Unsupported(format!("symmetric({degree}): degree must be 1..=5")));
            }
            let elements = (0..degree as u8).permutations(degree).map(Element::Perm).collect();
            Carrier::assemble(CarrierKind::Symmetric { degree }, format!("S_{degree}"), elements, None, true)
        }
        GroupSpec::Gl { n, p } => enumerate_matrices_with_guard(n, p, true, guard),
        GroupSpec::TrivialGl { n, p } => trivial_matrix_group(n, p),
        GroupSpec::VectorSpace { n, p } => vector_space(n, p, guard),
        GroupSpec::Product(ref a, ref b) => {
            let ca = group_carrier_with_guard(a, guard)?;
            let cb = group_carrier_with_guard(b, guard)?;
            direct_product(&ca, &cb, guard)
        }
    }
}

/// `A x B` ordered lexicographically; a group exactly when both factors are.
pub fn direct_product(a: &Arc<Carrier>, b: &Arc<Carrier>, guard: u64) -> Result<Arc<Carrier>, AlgebraError> {
    check_guard(a.len() as u128 * b.len() as u128, guard)?;
    let elements =
        a.elements.iter().cartesian_product(&b.elements).map(|(x, y)| Element::pair(x.clone(), y.clone())).collect();
    let kind = CarrierKind::DirectProduct(Box::new(a.kind.clone()), Box::new(b.kind.clone()));
    let with_group = a.is_group() && b.is_group();
    Carrier::assemble(kind, format!("{} x {}", a.label, b.label), elements, Some((a.clone(), b.clone())), with_group)
}

/// `V x G` for `V = F_p^n` and a group `G` of `n x n` matrices over the same field.
pub fn pair_carrier(v: &Arc<Carrier>, g: &Arc<Carrier>) -> Result<Arc<Carrier>, AlgebraError> {
    pair_carrier_with_guard(v, g, DEFAULT_GUARD)
}

pub fn pair_carrier_with_guard(v: &Arc<Carrier>, g: &Arc<Carrier>, guard: u64) -> Result<Arc<Carrier>, AlgebraError> {
    let CarrierKind::VectorSpace { n: vn, p: vp } = v.kind else {
        return Err(AlgebraError::Unsupported(format!("{} is not a vector space", v.label)));
    };
    let CarrierKind::MatrixGroup { n: gn, p: gp } = g.kind else {
        return Err(AlgebraError::Unsupported(format!("{} is not a matrix group", g.label)));
    };
    if vn != gn {
        return Err(AlgebraError::ActionMismatch { vector_dim: vn, matrix_dim: gn });
    }
    if vp != gp {
        return Err(AlgebraError::ModulusMismatch { left: vp, right: gp });
    }
    check_guard(v.len() as u128 * g.len() as u128, guard)?;
    let elements =
        v.elements.iter().cartesian_product(&g.elements).map(|(x, y)| Element::pair(x.clone(), y.clone())).collect();
    Carrier::assemble(
        CarrierKind::VectorGroupPairs { n: vn, p: vp },
        format!("{} x {}", v.label, g.label),
        elements,
        Some((v.clone(), g.clone())),
        false,
    )
}

/// The integers `lo..=hi`, with no operation attached.
pub fn integer_window(lo: i64, hi: i64) -> Result<Arc<Carrier>, AlgebraError> {
    if lo > hi {
        return Err(AlgebraError::Unsupported(format!("empty window [{lo}, {hi}]")));
    }
    check_guard((hi - lo) as u128 + 1, DEFAULT_GUARD)?;
    let elements = (lo..=hi).map(Element::Int).collect();
    Carrier::assemble(CarrierKind::IntegerWindow { lo, hi }, format!("Z[{lo}..{hi}]"), elements, None, false)
}

/// An arbitrary finite set; elements must be pairwise distinct.
pub fn explicit(label: &str, elements: Vec<Element>) -> Result<Arc<Carrier>, AlgebraError> {
    Carrier::assemble(CarrierKind::Explicit, label.to_string(), elements, None, false)
}

/// Primality is part of every matrix/vector carrier contract; exposed for the DSL.
pub fn is_prime_modulus(p: u32) -> bool {
    is_prime(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_invertible_by_det(n: usize, p: u32) -> usize {
        enumerate_matrices(n, p, false)
            .unwrap()
            .elements()
            .iter()
            .filter(|e| !e.as_matrix().unwrap().det().is_zero())
            .count()
    }

    #[test]
    fn matrix_enumeration_counts() {
        assert_eq!(enumerate_matrices(2, 2, false).unwrap().len(), 16);
        // oracle: count det != 0 over the full matrix set
        assert_eq!(count_invertible_by_det(2, 2), 6);
        assert_eq!(count_invertible_by_det(2, 3), 48);
        assert_eq!(enumerate_matrices(2, 2, true).unwrap().len(), 6);
        assert_eq!(enumerate_matrices(2, 3, true).unwrap().len(), 48);
    }

    #[test]
    fn enumeration_guard() {
        assert!(matches!(enumerate_matrices(3, 5, true), Err(AlgebraError::TooLarge { .. })));
        assert!(matches!(
            enumerate_matrices_with_guard(2, 3, false, 80),
            Err(AlgebraError::TooLarge { size: 81, guard: 80 })
        ));
        assert_eq!(enumerate_matrices(2, 4, false).unwrap_err(), AlgebraError::NotPrime(4));
    }

    #[test]
    fn matrices_are_row_major_lexicographic() {
        let c = enumerate_matrices(2, 2, false).unwrap();
        let first = c.element(0).as_matrix().unwrap().entries().to_vec();
        let second = c.element(1).as_matrix().unwrap().entries().to_vec();
        assert_eq!(first, vec![0, 0, 0, 0]);
        assert_eq!(second, vec![0, 0, 0, 1]);
        assert!(c.elements().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn gl_is_closed_under_product_and_inverse() {
        for p in [2, 3] {
            let c = enumerate_matrices(2, p, true).unwrap();
            for a in c.elements() {
                let ma = a.as_matrix().unwrap();
                assert!(c.index_of(&ma.inverse().unwrap().into()).is_some());
                for b in c.elements() {
                    let prod = ma * b.as_matrix().unwrap();
                    assert!(c.index_of(&prod.into()).is_some());
                }
            }
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_carrier(&GroupSpec::Cyclic(6)).unwrap().len(), 6);
        assert_eq!(group_carrier(&GroupSpec::Symmetric(3)).unwrap().len(), 6);
        let prod = GroupSpec::product(GroupSpec::Cyclic(2), GroupSpec::Symmetric(3));
        let c = group_carrier(&prod).unwrap();
        assert_eq!(c.len(), 12);
        assert!(c.is_group());
        assert!(matches!(group_carrier(&GroupSpec::Symmetric(6)), Err(AlgebraError::Unsupported(_))));
    }

    #[test]
    fn group_view_laws() {
        let s3 = group_carrier(&GroupSpec::Symmetric(3)).unwrap();
        let g = s3.group().unwrap();
        assert_eq!(g.exponent(), 6);
        assert!(!g.is_abelian());
        for a in 0..6 {
            assert_eq!(g.mul(a, g.inv(a)), g.identity());
            assert_eq!(g.pow(a, -1), g.inv(a));
            assert_eq!(g.pow(a, 7), a);
        }
        let z6 = group_carrier(&GroupSpec::Cyclic(6)).unwrap();
        let g = z6.group().unwrap();
        assert_eq!(g.mul(4, 5), 3);
        assert_eq!(g.inv(2), 4);
        assert!(g.is_abelian());
    }

    #[test]
    fn product_group_uses_componentwise_law() {
        let prod = GroupSpec::product(GroupSpec::Cyclic(3), GroupSpec::Cyclic(4));
        let c = group_carrier(&prod).unwrap();
        let g = c.group().unwrap();
        let i = c.join(2, 3);
        let j = c.join(2, 2);
        assert_eq!(c.split(g.mul(i, j)), (1, 1));
    }

    #[test]
    fn pair_carrier_sizes() {
        let v = vector_space(2, 2, DEFAULT_GUARD).unwrap();
        let gl = enumerate_matrices(2, 2, true).unwrap();
        let q = pair_carrier(&v, &gl).unwrap();
        assert_eq!(q.len(), 24);
        let (v0, g0) = q.split(7);
        assert_eq!(q.element(7), &Element::pair(v.element(v0).clone(), gl.element(g0).clone()));

        let v3 = vector_space(2, 3, DEFAULT_GUARD).unwrap();
        let triv = trivial_matrix_group(2, 3).unwrap();
        assert_eq!(pair_carrier(&v3, &triv).unwrap().len(), 9);

        let gl3 = enumerate_matrices(3, 2, true).unwrap();
        assert_eq!(pair_carrier(&v, &gl3).unwrap_err(), AlgebraError::ActionMismatch { vector_dim: 2, matrix_dim: 3 });
    }

    #[test]
    fn generated_subgroup() {
        let t = Matrix::from_rows(3, &[vec![1, 1], vec![0, 1]]).unwrap();
        let c = matrix_group_generated(2, 3, &[t]).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.is_group());
    }

    #[test]
    fn large_gl_skips_cayley_table() {
        let c = enumerate_matrices(3, 3, true).unwrap();
        assert_eq!(c.len(), 11232);
        let g = c.group().unwrap();
        let a = 17;
        assert_eq!(g.mul(a, g.inv(a)), g.identity());
    }

    #[test]
    fn explicit_rejects_duplicates() {
        let err = explicit("dup", vec![Element::Int(1), Element::Int(1)]).unwrap_err();
        assert_eq!(err, AlgebraError::DuplicateElement("1".into()));
    }
}
