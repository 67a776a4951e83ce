use std::collections::BTreeMap;
use std::sync::Arc;

use crate::carrier::Carrier;
use crate::engine::{same_carrier, EngineError};
use crate::table::OpTable;

/// A finite multiset of carrier positions: sorted `(index, multiplicity)`
/// entries, every multiplicity at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Multiset {
    entries: Vec<(usize, u64)>,
}

impl Multiset {
    pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> Multiset {
        Multiset::from_weighted(items.into_iter().map(|i| (i, 1)))
    }

    fn from_weighted<I: IntoIterator<Item = (usize, u64)>>(items: I) -> Multiset {
        let mut acc: BTreeMap<usize, u64> = BTreeMap::new();
        for (i, m) in items {
            *acc.entry(i).or_default() += m;
        }
        Multiset { entries: acc.into_iter().filter(|&(_, m)| m > 0).collect() }
    }

    pub fn entries(&self) -> &[(usize, u64)] {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn multiplicity(&self, i: usize) -> u64 {
        self.entries.binary_search_by_key(&i, |&(j, _)| j).map(|k| self.entries[k].1).unwrap_or(0)
    }

    pub fn render(&self, carrier: &Carrier) -> String {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|&(i, m)| if m == 1 { carrier.element(i).to_string() } else { format!("{}^{m}", carrier.element(i)) })
            .collect();
        format!("[{}]", parts.join(", "))
    }
}

/// `a * b = [a *1 b, ..., a *n b]` for every pair of the shared carrier.
#[derive(Debug, Clone)]
pub struct NValuedProduct {
    carrier: Arc<Carrier>,
    arity: usize,
    cells: Vec<Multiset>,
}

pub fn nvalued_product(ops: &[OpTable]) -> Result<NValuedProduct, EngineError> {
    let first = ops.first().ok_or(EngineError::EmptyFamily)?;
    for op in &ops[1..] {
        same_carrier(first, op)?;
    }
    let n = first.size();
    let mut cells = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            cells.push(Multiset::from_indices(ops.iter().map(|op| op.get(a, b))));
        }
    }
    Ok(NValuedProduct { carrier: first.carrier().clone(), arity: ops.len(), cells })
}

impl NValuedProduct {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn get(&self, a: usize, b: usize) -> &Multiset {
        &self.cells[a * self.carrier.len() + b]
    }

    /// `(a*b)*c`: union of `d*c` over `d` in `a*b`, weighted by multiplicity.
    pub fn left_assoc(&self, a: usize, b: usize, c: usize) -> Multiset {
        Multiset::from_weighted(
            self.get(a, b)
                .entries()
                .iter()
                .flat_map(|&(d, m)| self.get(d, c).entries().iter().map(move |&(e, k)| (e, m * k))),
        )
    }

    /// `a*(b*c)`: union of `a*d` over `d` in `b*c`, weighted by multiplicity.
    pub fn right_assoc(&self, a: usize, b: usize, c: usize) -> Multiset {
        Multiset::from_weighted(
            self.get(b, c)
                .entries()
                .iter()
                .flat_map(|&(d, m)| self.get(a, d).entries().iter().map(move |&(e, k)| (e, m * k))),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_counts() {
        let m = Multiset::from_indices([3, 1, 3, 3]);
        assert_eq!(m.entries(), &[(1, 1), (3, 3)]);
        assert_eq!(m.total(), 4);
        assert_eq!(m.multiplicity(3), 3);
        assert_eq!(m.multiplicity(2), 0);
        assert_eq!(Multiset::from_indices([1, 3, 3, 3]), m);
    }
}
