//! Sparse tensors over a finite basis with cyclotomic coefficients.

use cyclo_field::CycScalar;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// A multi-index naming one basis tensor `b_{k_1} (x) ... (x) b_{k_r}`.
pub type Key = SmallVec<[u32; 4]>;

/// A sparse element of `H^{(x) rank}`.
///
/// Terms map multi-indices to nonzero coefficients. Rank 1 tensors are plain
/// algebra elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TensorRepr", from = "TensorRepr")]
pub struct Tensor {
    rank: usize,
    terms: FxHashMap<Key, CycScalar>,
}

#[derive(Serialize, Deserialize)]
struct TensorRepr {
    rank: usize,
    terms: Vec<(Vec<u32>, CycScalar)>,
}

impl From<Tensor> for TensorRepr {
    fn from(t: Tensor) -> Self {
        TensorRepr { rank: t.rank, terms: t.sorted_terms().into_iter().map(|(k, c)| (k.to_vec(), c)).collect() }
    }
}

impl From<TensorRepr> for Tensor {
    fn from(r: TensorRepr) -> Self {
        let mut t = Tensor::zero(r.rank);
        for (k, c) in r.terms {
            t.add_term(&k, c);
        }
        t
    }
}

impl Tensor {
    /// The zero tensor of the given rank.
    pub fn zero(rank: usize) -> Tensor {
        Tensor { rank, terms: FxHashMap::default() }
    }

    /// A single basis tensor with coefficient `c`.
    pub fn basis(key: &[u32], c: CycScalar) -> Tensor {
        let mut t = Tensor::zero(key.len());
        t.add_term(key, c);
        t
    }

    /// A rank-0 tensor holding a scalar.
    pub fn scalar(c: CycScalar) -> Tensor {
        Tensor::basis(&[], c)
    }

    /// Rank (number of tensor legs).
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Returns `true` when all coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over `(key, coefficient)` pairs in unspecified order.
    pub fn iter(&self) -> impl Iterator<Item = (&Key, &CycScalar)> {
        self.terms.iter()
    }

    /// Coefficient of a basis tensor, if nonzero.
    pub fn get(&self, key: &[u32]) -> Option<&CycScalar> {
        self.terms.get(key)
    }

    /// The scalar held by a rank-0 tensor.
    pub fn scalar_value(&self, order_hint: u32) -> CycScalar {
        assert_eq!(self.rank, 0, "scalar_value on a tensor of positive rank");
        self.terms.get(&Key::new()).cloned().unwrap_or_else(|| CycScalar::zero(order_hint))
    }

    /// Terms sorted by key, for deterministic output.
    pub fn sorted_terms(&self) -> Vec<(Key, CycScalar)> {
        let mut v: Vec<(Key, CycScalar)> = self.terms.iter().map(|(k, c)| (k.clone(), c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    /// Adds `c` to the coefficient of `key`.
    pub fn add_term(&mut self, key: &[u32], c: CycScalar) {
        assert_eq!(key.len(), self.rank, "key rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(key) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(key);
                }
            }
            None => {
                self.terms.insert(Key::from_slice(key), c);
            }
        }
    }

    /// `self += other`.
    pub fn add_assign(&mut self, other: &Tensor) {
        assert_eq!(self.rank, other.rank, "rank mismatch in tensor addition");
        for (k, c) in &other.terms {
            self.add_term(k, c.clone());
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Tensor, c: &CycScalar) {
        assert_eq!(self.rank, other.rank, "rank mismatch in tensor addition");
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k, v * c);
        }
    }

    /// `self + other`.
    pub fn plus(&self, other: &Tensor) -> Tensor {
        let mut t = self.clone();
        t.add_assign(other);
        t
    }

    /// `self - other`.
    pub fn minus(&self, other: &Tensor) -> Tensor {
        let mut t = self.clone();
        for (k, c) in &other.terms {
            t.add_term(k, -c);
        }
        t
    }

    /// `c * self`.
    pub fn scale(&self, c: &CycScalar) -> Tensor {
        if c.is_zero() {
            return Tensor::zero(self.rank);
        }
        Tensor { rank: self.rank, terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Outer tensor product `self (x) other`.
    pub fn outer(&self, other: &Tensor) -> Tensor {
        let mut t = Tensor::zero(self.rank + other.rank);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut k = ka.clone();
                k.extend_from_slice(kb);
                t.add_term(&k, ca * cb);
            }
        }
        t
    }

    /// Reorders legs: leg `i` of the result is leg `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.rank, "permutation length mismatch");
        let terms = self.terms.iter().map(|(k, c)| (perm.iter().map(|&i| k[i]).collect::<Key>(), c.clone())).collect();
        Tensor { rank: self.rank, terms }
    }

    /// Keeps the terms whose key satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&[u32]) -> bool) -> Tensor {
        let terms = self.terms.iter().filter(|(k, _)| pred(k)).map(|(k, c)| (k.clone(), c.clone())).collect();
        Tensor { rank: self.rank, terms }
    }

    /// Replaces leg `leg` by the tensor `image(k)` for each basis index `k`,
    /// inserting the image's legs in place. The images must share one rank.
    pub fn map_leg<'a>(&self, leg: usize, image_rank: usize, image: impl Fn(u32) -> &'a Tensor) -> Tensor {
        assert!(leg < self.rank, "leg out of range");
        let mut out = Tensor::zero(self.rank - 1 + image_rank);
        for (k, c) in &self.terms {
            let img = image(k[leg]);
            debug_assert_eq!(img.rank, image_rank);
            for (ki, ci) in &img.terms {
                let mut nk: Key = Key::with_capacity(out.rank);
                nk.extend_from_slice(&k[..leg]);
                nk.extend_from_slice(ki);
                nk.extend_from_slice(&k[leg + 1..]);
                out.add_term(&nk, c * ci);
            }
        }
        out
    }

    /// Applies the functional `f` to leg `leg`, lowering the rank by one.
    pub fn contract_leg(&self, leg: usize, f: impl Fn(u32) -> CycScalar) -> Tensor {
        assert!(leg < self.rank, "leg out of range");
        let mut out = Tensor::zero(self.rank - 1);
        for (k, c) in &self.terms {
            let v = f(k[leg]);
            if v.is_zero() {
                continue;
            }
            let mut nk: Key = Key::with_capacity(out.rank);
            nk.extend_from_slice(&k[..leg]);
            nk.extend_from_slice(&k[leg + 1..]);
            out.add_term(&nk, c * &v);
        }
        out
    }

    /// Applies a linear functional to a rank-1 tensor; `order` tags the zero result.
    pub fn evaluate(&self, order: u32, f: impl Fn(u32) -> CycScalar) -> CycScalar {
        assert_eq!(self.rank, 1, "evaluate expects a rank-1 tensor");
        let mut acc = CycScalar::zero(order);
        for (k, c) in &self.terms {
            let v = f(k[0]);
            if !v.is_zero() {
                acc.add_mul_assign(c, &v);
            }
        }
        acc
    }

    /// Largest coefficient error bound of the floating-point view, for diagnostics.
    pub fn max_float_error(&self) -> f64 {
        self.terms.values().map(|c| c.to_complex_with_error().1).fold(0.0, f64::max)
    }
}
