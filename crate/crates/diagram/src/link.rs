//! Linking matrices, signatures and mod-2 sublinks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::diagram::GKirbyDiagram;

/// The framed link data of the undotted components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkData {
    lk: Vec<Vec<i64>>,
}

impl LinkData {
    /// Link data from a symmetric integer matrix.
    ///
    /// # Panics
    /// Panics if the matrix is not square and symmetric.
    pub fn from_matrix(lk: Vec<Vec<i64>>) -> Self {
        let n = lk.len();
        for (i, row) in lk.iter().enumerate() {
            assert_eq!(row.len(), n, "linking matrix must be square");
            for j in 0..n {
                assert_eq!(row[j], lk[j][i], "linking matrix must be symmetric");
            }
        }
        LinkData { lk }
    }

    /// Number of components.
    pub fn n(&self) -> usize {
        self.lk.len()
    }

    /// The linking matrix; diagonal entries are framings.
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.lk
    }

    /// `lk(L_i, L_j)`.
    pub fn lk(&self, i: usize, j: usize) -> i64 {
        self.lk[i][j]
    }

    /// `lk(L_i, ω) = Σ_j ω_j lk(L_i, L_j)` for an integer vector `ω`.
    pub fn lk_with(&self, i: usize, omega: &[u32]) -> i64 {
        self.lk[i].iter().zip(omega).map(|(a, &w)| a * w as i64).sum()
    }

    /// Signature of the linking matrix over the rationals.
    pub fn signature(&self) -> i64 {
        let (pos, neg) = self.inertia();
        pos as i64 - neg as i64
    }

    /// Numbers of positive and negative eigenvalues.
    pub fn inertia(&self) -> (usize, usize) {
        let n = self.n();
        let mut a: Vec<Vec<BigRational>> = self
            .lk
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        let (mut pos, mut neg) = (0, 0);
        let mut alive: Vec<usize> = (0..n).collect();
        while !alive.is_empty() {
            let pivot = match alive.iter().copied().find(|&i| !a[i][i].is_zero()) {
                Some(i) => i,
                None => {
                    let pair = alive
                        .iter()
                        .flat_map(|&i| alive.iter().map(move |&j| (i, j)))
                        .find(|&(i, j)| i != j && !a[i][j].is_zero());
                    let Some((i, j)) = pair else { break };
                    for k in 0..n {
                        let v = a[j][k].clone();
                        a[i][k] += v;
                    }
                    for k in 0..n {
                        let v = a[k][j].clone();
                        a[k][i] += v;
                    }
                    i
                }
            };
            let d = a[pivot][pivot].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            alive.retain(|&i| i != pivot);
            for &i in &alive {
                let f = &a[i][pivot] / &d;
                if f.is_zero() {
                    continue;
                }
                for &k in &alive {
                    let v = &f * &a[pivot][k];
                    a[i][k] -= v;
                }
            }
            for &i in &alive {
                a[i][pivot] = BigRational::zero();
                a[pivot][i] = BigRational::zero();
            }
        }
        (pos, neg)
    }

    /// Rank of the linking matrix over `Z/2`.
    pub fn rank_mod2(&self) -> usize {
        let mut rows: Vec<Vec<u8>> =
            self.lk.iter().map(|r| r.iter().map(|x| x.rem_euclid(2) as u8).collect()).collect();
        let n = self.n();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| rows[r][col] == 1) else { continue };
            rows.swap(rank, p);
            for r in 0..n {
                if r != rank && rows[r][col] == 1 {
                    let pivot = rows[rank].clone();
                    for (x, y) in rows[r].iter_mut().zip(&pivot) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Whether `ω` is characteristic: `lk(L_i, ω) ≡ lk(L_i, L_i) (mod 2)` for all `i`.
    pub fn is_characteristic(&self, omega: &[u32]) -> bool {
        omega.len() == self.n() && (0..self.n()).all(|i| (self.lk_with(i, omega) - self.lk[i][i]).rem_euclid(2) == 0)
    }

    /// Whether `ω` is even: `lk(L_i, ω) ≡ 0 (mod 2)` for all `i`.
    pub fn is_even(&self, omega: &[u32]) -> bool {
        omega.len() == self.n() && (0..self.n()).all(|i| self.lk_with(i, omega).rem_euclid(2) == 0)
    }

    /// All sublinks `ω ∈ (Z/2)^n`, in lexicographic order.
    pub fn sublinks(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        (0..1u64 << n).map(|m| (0..n).map(|i| ((m >> (n - 1 - i)) & 1) as u32).collect()).collect()
    }

    /// All characteristic sublinks, in lexicographic order.
    pub fn characteristic_sublinks(&self) -> Vec<Vec<u32>> {
        self.sublinks().into_iter().filter(|w| self.is_characteristic(w)).collect()
    }

    /// All even sublinks, in lexicographic order.
    pub fn even_sublinks(&self) -> Vec<Vec<u32>> {
        self.sublinks().into_iter().filter(|w| self.is_even(w)).collect()
    }
}

/// The linking matrix of the undotted components of a diagram.
///
/// Off-diagonal entries are half the signed count of crossings between two
/// components; diagonal entries are writhes.
pub fn linking_matrix(d: &GKirbyDiagram) -> LinkData {
    let n = d.component_count();
    let mut twice = vec![vec![0i64; n]; n];
    for c in d.crossings() {
        let (i, j) = (c.left.component, c.right.component);
        if i == j {
            twice[i][i] += 2 * c.sign;
        } else {
            twice[i][j] += c.sign;
            twice[j][i] += c.sign;
        }
    }
    let lk = twice
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    debug_assert_eq!(x % 2, 0, "closed components cross an even number of times");
                    x / 2
                })
                .collect()
        })
        .collect();
    LinkData { lk }
}

/// Signature of the linking matrix of a diagram.
pub fn signature(d: &GKirbyDiagram) -> i64 {
    linking_matrix(d).signature()
}
