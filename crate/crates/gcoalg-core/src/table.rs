//! Memoized structure constants of an associative algebra on a finite basis.

use cyclo_field::CycScalar;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::tensor::{Key, Tensor};

/// Sparse product `b_x b_y = sum_z c_z b_z` as a list of `(z, c_z)`.
pub type Row = Vec<(u32, CycScalar)>;

/// Multiplication table of an algebra on the basis `0..dim`.
///
/// Optional compatibility keys speed up tensor products: `b_x b_y` may only be
/// nonzero when `right_key[x] == left_key[y]`. Tables without a natural key
/// use the constant key `0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TableRepr", from = "TableRepr")]
pub struct ProductTable {
    dim: usize,
    rows: Vec<FxHashMap<u32, Row>>,
    left_key: Vec<u32>,
    right_key: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    dim: usize,
    left_key: Vec<u32>,
    right_key: Vec<u32>,
    products: Vec<(u32, u32, Row)>,
}

impl From<ProductTable> for TableRepr {
    fn from(t: ProductTable) -> Self {
        let mut products = Vec::new();
        for (x, row) in t.rows.iter().enumerate() {
            let mut ys: Vec<&u32> = row.keys().collect();
            ys.sort();
            for y in ys {
                products.push((x as u32, *y, row[y].clone()));
            }
        }
        TableRepr { dim: t.dim, left_key: t.left_key, right_key: t.right_key, products }
    }
}

impl From<TableRepr> for ProductTable {
    fn from(r: TableRepr) -> Self {
        let mut t = ProductTable::new(r.dim);
        t.left_key = r.left_key;
        t.right_key = r.right_key;
        for (x, y, row) in r.products {
            t.set(x, y, row);
        }
        t
    }
}

const EMPTY: &[(u32, CycScalar)] = &[];

impl ProductTable {
    /// An all-zero table of the given dimension.
    pub fn new(dim: usize) -> ProductTable {
        ProductTable { dim, rows: vec![FxHashMap::default(); dim], left_key: vec![0; dim], right_key: vec![0; dim] }
    }

    /// Installs compatibility keys.
    ///
    /// # Panics
    /// Panics when a stored nonzero product violates the key rule.
    pub fn with_keys(mut self, left_key: Vec<u32>, right_key: Vec<u32>) -> ProductTable {
        assert_eq!(left_key.len(), self.dim);
        assert_eq!(right_key.len(), self.dim);
        for (x, row) in self.rows.iter().enumerate() {
            for y in row.keys() {
                assert_eq!(right_key[x], left_key[*y as usize], "key rule violated by product {x}*{y}");
            }
        }
        self.left_key = left_key;
        self.right_key = right_key;
        self
    }

    /// Dimension of the algebra.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Left compatibility key of a basis element.
    pub fn left_key(&self, x: u32) -> u32 {
        self.left_key[x as usize]
    }

    /// Right compatibility key of a basis element.
    pub fn right_key(&self, x: u32) -> u32 {
        self.right_key[x as usize]
    }

    /// Stores `b_x b_y`; zero coefficients are dropped.
    pub fn set(&mut self, x: u32, y: u32, row: Row) {
        let row: Row = row.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if row.is_empty() {
            self.rows[x as usize].remove(&y);
        } else {
            self.rows[x as usize].insert(y, row);
        }
    }

    /// The product `b_x b_y`.
    pub fn basis_product(&self, x: u32, y: u32) -> &[(u32, CycScalar)] {
        self.rows[x as usize].get(&y).map(|r| r.as_slice()).unwrap_or(EMPTY)
    }

    /// All stored nonzero basis products `(x, y, b_x b_y)`.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &Row)> + '_ {
        self.rows.iter().enumerate().flat_map(|(x, row)| row.iter().map(move |(y, r)| (x as u32, *y, r)))
    }

    /// Left compatibility keys of all basis elements.
    pub fn left_keys(&self) -> &[u32] {
        &self.left_key
    }

    /// Right compatibility keys of all basis elements.
    pub fn right_keys(&self) -> &[u32] {
        &self.right_key
    }

    /// Number of stored nonzero basis products.
    pub fn nonzero_products(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Legwise product of two tensors of equal rank in `A^{(x) r}`.
    pub fn multiply(&self, a: &Tensor, b: &Tensor) -> Tensor {
        assert_eq!(a.rank(), b.rank(), "rank mismatch in tensor product");
        let rank = a.rank();
        let mut out = Tensor::zero(rank);
        if a.is_zero() || b.is_zero() {
            return out;
        }
        let mut groups: FxHashMap<Key, Vec<(&Key, &CycScalar)>> = FxHashMap::default();
        for (kb, cb) in b.iter() {
            let lk: Key = kb.iter().map(|y| self.left_key[*y as usize]).collect();
            groups.entry(lk).or_default().push((kb, cb));
        }
        let mut legs: Vec<&[(u32, CycScalar)]> = Vec::with_capacity(rank);
        for (ka, ca) in a.iter() {
            let rk: Key = ka.iter().map(|x| self.right_key[*x as usize]).collect();
            let Some(list) = groups.get(&rk) else { continue };
            for (kb, cb) in list {
                legs.clear();
                let mut dead = false;
                for i in 0..rank {
                    let r = self.basis_product(ka[i], kb[i]);
                    if r.is_empty() {
                        dead = true;
                        break;
                    }
                    legs.push(r);
                }
                if dead {
                    continue;
                }
                let coef = ca * *cb;
                expand(&legs, &coef, &mut out);
            }
        }
        out
    }
}

fn expand(legs: &[&[(u32, CycScalar)]], coef: &CycScalar, out: &mut Tensor) {
    if legs.iter().all(|l| l.len() == 1) {
        let mut key: Key = Key::with_capacity(legs.len());
        let mut c = coef.clone();
        for l in legs {
            key.push(l[0].0);
            if !l[0].1.is_one() {
                c = &c * &l[0].1;
            }
        }
        out.add_term(&key, c);
        return;
    }
    let mut key: Key = Key::with_capacity(legs.len());
    rec(legs, 0, &mut key, coef.clone(), out);
}

fn rec(legs: &[&[(u32, CycScalar)]], i: usize, key: &mut Key, c: CycScalar, out: &mut Tensor) {
    if i == legs.len() {
        out.add_term(key, c);
        return;
    }
    for (z, cz) in legs[i] {
        key.push(*z);
        let nc = if cz.is_one() { c.clone() } else { &c * cz };
        rec(legs, i + 1, key, nc, out);
        key.pop();
    }
}
