use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::carrier::Carrier;
use crate::element::Element;
use crate::engine::EngineError;

/// A total binary operation on a carrier, stored as a dense `|Q| x |Q|`
/// table of result positions.
#[derive(Clone)]
pub struct OpTable {
    carrier: Arc<Carrier>,
    table: Vec<u32>,
    label: String,
}

impl fmt::Debug for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OpTable")
            .field("label", &self.label)
            .field("carrier", &self.carrier.label())
            .field("size", &self.carrier.len())
            .finish()
    }
}

/// Evaluates `rule` on every ordered pair of the carrier. Fails with the
/// first pair (in carrier order) whose result leaves the carrier.
pub fn build_op_table<F>(carrier: &Arc<Carrier>, label: &str, rule: F) -> Result<OpTable, EngineError>
where
    F: Fn(&Element, &Element) -> Element + Sync,
{
    let n = carrier.len();
    let rows: Vec<Result<Vec<u32>, (usize, Element)>> = (0..n)
        .into_par_iter()
        .map(|a| {
            let x = carrier.element(a);
            let mut row = Vec::with_capacity(n);
            for b in 0..n {
                let r = rule(x, carrier.element(b));
                match carrier.index_of(&r) {
                    Some(i) => row.push(i as u32),
                    None => return Err((b, r)),
                }
            }
            Ok(row)
        })
        .collect();
    let mut table = Vec::with_capacity(n * n);
    for (a, row) in rows.into_iter().enumerate() {
        match row {
            Ok(r) => table.extend(r),
            Err((b, result)) => {
                return Err(EngineError::NotClosed {
                    x: carrier.element(a).to_string(),
                    y: carrier.element(b).to_string(),
                    result: result.to_string(),
                })
            }
        }
    }
    Ok(OpTable { carrier: carrier.clone(), table, label: label.to_string() })
}

impl OpTable {
    /// Builds a table from an index-level rule. The rule must return valid
    /// carrier positions.
    pub fn from_fn<F>(carrier: &Arc<Carrier>, label: &str, f: F) -> OpTable
    where
        F: Fn(usize, usize) -> usize + Sync,
    {
        let n = carrier.len();
        let table: Vec<u32> = (0..n)
            .into_par_iter()
            .flat_map_iter(|a| {
                let f = &f;
                (0..n).map(move |b| {
                    let r = f(a, b);
                    assert!(r < n, "index rule produced {r} outside a carrier of {n}");
                    r as u32
                })
            })
            .collect();
        OpTable { carrier: carrier.clone(), table, label: label.to_string() }
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.table[a * self.carrier.len() + b] as usize
    }

    pub fn carrier(&self) -> &Arc<Carrier> {
        &self.carrier
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn with_label(mut self, label: &str) -> OpTable {
        self.label = label.to_string();
        self
    }

    /// The transposed table: `a op' b = b op a`.
    pub fn opposite(&self) -> OpTable {
        OpTable::from_fn(&self.carrier, &format!("{}^op", self.label), |a, b| self.get(b, a))
    }

    /// Same carrier and identical entries (labels ignored).
    pub fn same_entries(&self, other: &OpTable) -> bool {
        *self.carrier == *other.carrier && self.table == other.table
    }

    pub fn raw(&self) -> &[u32] {
        &self.table
    }
}
