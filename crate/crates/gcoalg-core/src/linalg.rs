//! Exact sparse linear algebra over the cyclotomic field.

use std::collections::BTreeMap;

use cyclo_field::CycScalar;
use rustc_hash::FxHashMap;

/// A sparse row vector indexed by column.
pub type SparseRow = BTreeMap<u32, CycScalar>;

/// Rank of the matrix whose rows are given, by exact sparse elimination.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut pivots: FxHashMap<u32, SparseRow> = FxHashMap::default();
    for mut row in rows {
        row.retain(|_, c| !c.is_zero());
        while let Some((&col, lead)) = row.iter().next() {
            match pivots.get(&col) {
                Some(p) => {
                    let lead = lead.clone();
                    for (k, v) in p {
                        let entry = row.entry(*k).or_insert_with(|| CycScalar::zero(v.order()));
                        *entry -= &(&lead * v);
                        if entry.is_zero() {
                            row.remove(k);
                        }
                    }
                }
                None => {
                    let inv = lead.inv().expect("leading entry is nonzero");
                    let normalized: SparseRow = row.iter().map(|(k, v)| (*k, v * &inv)).collect();
                    pivots.insert(col, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}
