//! Finite abelian groups presented as products of cyclic groups.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::CoreError;

/// A finite abelian group `Z/n_1 x ... x Z/n_k`.
///
/// Elements are tuples of residues; they are also numbered `0..order()` in
/// mixed radix (first factor least significant), and index `0` is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    factors: Vec<u32>,
}

impl FiniteAbelianGroup {
    /// Builds the group from its cyclic orders; every order must be at least 1.
    pub fn new(factors: Vec<u32>) -> Result<Self, CoreError> {
        if factors.iter().any(|n| *n == 0) {
            return Err(CoreError::InvalidGroup(format!("{factors:?}")));
        }
        Ok(FiniteAbelianGroup { factors })
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: Vec::new() }
    }

    /// `Z/2Z`.
    pub fn z2() -> Self {
        FiniteAbelianGroup { factors: vec![2] }
    }

    /// The cyclic orders.
    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.factors.iter().map(|n| *n as usize).product()
    }

    /// Returns `true` for the one-element group.
    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Residue tuple of the element with the given index.
    pub fn element(&self, mut idx: usize) -> Vec<u32> {
        self.factors
            .iter()
            .map(|n| {
                let r = (idx % *n as usize) as u32;
                idx /= *n as usize;
                r
            })
            .collect()
    }

    /// Index of a residue tuple (residues are reduced first).
    pub fn index(&self, elem: &[i64]) -> usize {
        assert_eq!(elem.len(), self.factors.len(), "element has wrong arity");
        let mut idx = 0usize;
        for (r, n) in elem.iter().zip(&self.factors).rev() {
            idx = idx * *n as usize + r.rem_euclid(*n as i64) as usize;
        }
        idx
    }

    /// Sum of two element indices.
    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.element(a), self.element(b));
        let s: Vec<i64> = x.iter().zip(&y).map(|(u, v)| (*u + *v) as i64).collect();
        self.index(&s)
    }

    /// Inverse of an element index.
    pub fn neg(&self, a: usize) -> usize {
        let s: Vec<i64> = self.element(a).iter().map(|u| -(*u as i64)).collect();
        self.index(&s)
    }

    /// Difference `a - b` of element indices.
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Iterator over all element indices.
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Renders an element as `0`, `1` for cyclic groups or `(a,b)` otherwise.
    pub fn format_element(&self, idx: usize) -> String {
        let e = self.element(idx);
        match e.as_slice() {
            [] => "0".to_string(),
            [x] => x.to_string(),
            _ => format!("({})", e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")),
        }
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "Z1");
        }
        let first = self.factors[0];
        if self.factors.iter().all(|n| *n == first) && self.factors.len() > 1 {
            write!(f, "Z{}^{}", first, self.factors.len())
        } else {
            let parts: Vec<String> = self.factors.iter().map(|n| format!("Z{n}")).collect();
            write!(f, "{}", parts.join("x"))
        }
    }
}

impl FromStr for FiniteAbelianGroup {
    type Err = CoreError;

    /// Parses `Z<n>`, `Z<n>^<m>` or `x`-separated products such as `Z2xZ3`.
    fn from_str(s: &str) -> Result<Self, CoreError> {
        let bad = || CoreError::InvalidGroup(s.to_string());
        let mut factors = Vec::new();
        for part in s.trim().split('x') {
            let part = part.trim().strip_prefix('Z').ok_or_else(bad)?;
            let (n, m) = match part.split_once('^') {
                Some((n, m)) => (n, m.parse::<u32>().map_err(|_| bad())?),
                None => (part, 1),
            };
            let n: u32 = n.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            if n > 1 {
                factors.extend(std::iter::repeat(n).take(m as usize));
            }
        }
        Ok(FiniteAbelianGroup { factors })
    }
}
