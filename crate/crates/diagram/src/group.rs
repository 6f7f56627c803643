//! Finite abelian label groups `(Z/n)^m`.

use std::fmt;

/// The label group `(Z/n)^m` of a G-Kirby diagram; `m = 0` is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabelGroup {
    modulus: u32,
    rank: usize,
}

/// An element of a [`LabelGroup`], one residue per cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub Vec<u32>);

impl LabelGroup {
    /// The trivial group.
    pub fn trivial() -> Self {
        LabelGroup { modulus: 1, rank: 0 }
    }

    /// The group `Z/2`.
    pub fn z2() -> Self {
        LabelGroup { modulus: 2, rank: 1 }
    }

    /// The group `(Z/n)^m`; `n ≤ 1` or `m = 0` give the trivial group.
    pub fn cyclic_power(modulus: u32, rank: usize) -> Self {
        if modulus <= 1 || rank == 0 {
            Self::trivial()
        } else {
            LabelGroup { modulus, rank }
        }
    }

    /// The common order `n` of the cyclic factors.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// The number `m` of cyclic factors.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Whether this is the trivial group.
    pub fn is_trivial(&self) -> bool {
        self.rank == 0
    }

    /// Whether this is `Z/2`.
    pub fn is_z2(&self) -> bool {
        self.modulus == 2 && self.rank == 1
    }

    /// The number of elements.
    pub fn order(&self) -> usize {
        (self.modulus as usize).pow(self.rank as u32)
    }

    /// The identity element.
    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank])
    }

    /// The element of `Z/n` (rank one) with the given residue.
    pub fn cyclic(&self, value: u32) -> GroupElement {
        GroupElement(vec![value % self.modulus.max(1); self.rank.min(1)])
    }

    /// Whether `x` is a valid element of this group.
    pub fn contains(&self, x: &GroupElement) -> bool {
        x.0.len() == self.rank && x.0.iter().all(|&v| v < self.modulus)
    }

    /// The sum `x + y`.
    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        GroupElement(x.0.iter().zip(&y.0).map(|(a, b)| (a + b) % self.modulus).collect())
    }

    /// The inverse `-x`.
    pub fn neg(&self, x: &GroupElement) -> GroupElement {
        GroupElement(x.0.iter().map(|a| (self.modulus - a) % self.modulus).collect())
    }

    /// `x` or `-x` according to `positive`.
    pub fn signed(&self, x: &GroupElement, positive: bool) -> GroupElement {
        if positive {
            x.clone()
        } else {
            self.neg(x)
        }
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = vec![GroupElement(Vec::new())];
        for _ in 0..self.rank {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..self.modulus).map(move |v| {
                        let mut next = e.0.clone();
                        next.push(v);
                        GroupElement(next)
                    })
                })
                .collect();
        }
        out
    }

    /// All vectors of `n` elements, in lexicographic order.
    pub fn vectors(&self, n: usize) -> Vec<Vec<GroupElement>> {
        let elems = self.elements();
        let mut out: Vec<Vec<GroupElement>> = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v| {
                    elems.iter().map(move |e| {
                        let mut next = v.clone();
                        next.push(e.clone());
                        next
                    })
                })
                .collect();
        }
        out
    }

    /// Parses an element written as `3` (rank one) or `(1,0,2)`.
    pub fn parse_element(&self, text: &str) -> Option<GroupElement> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let values: Vec<u32> = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(|s| s.trim().parse().ok()).collect::<Option<_>>()?
        };
        let x = if self.rank == 0 && values == [0] { GroupElement(Vec::new()) } else { GroupElement(values) };
        self.contains(&x).then_some(x)
    }

    /// Formats an element the way [`LabelGroup::parse_element`] reads it.
    pub fn format_element(&self, x: &GroupElement) -> String {
        match x.0.len() {
            0 => "0".to_string(),
            1 => x.0[0].to_string(),
            _ => format!("({})", x.0.iter().map(u32::to_string).collect::<Vec<_>>().join(",")),
        }
    }
}

impl fmt::Display for LabelGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rank {
            0 => write!(f, "Z1"),
            1 => write!(f, "Z{}", self.modulus),
            m => write!(f, "Z{}^{}", self.modulus, m),
        }
    }
}

impl std::str::FromStr for LabelGroup {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().strip_prefix('Z').ok_or_else(|| format!("expected Z<n> or Z<n>^<m>, found `{s}`"))?;
        let (n, m) = match body.split_once('^') {
            Some((n, m)) => (n, m),
            None => (body, "1"),
        };
        let n: u32 = n.parse().map_err(|_| format!("bad modulus `{n}`"))?;
        let m: usize = m.parse().map_err(|_| format!("bad rank `{m}`"))?;
        if n == 0 {
            return Err("modulus must be positive".to_string());
        }
        Ok(LabelGroup::cyclic_power(n, m))
    }
}
