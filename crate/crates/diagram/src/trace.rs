//! Tracing components and orientations through a Morse word.

use crate::error::ValidationError;
use crate::word::{Event, Slice};

/// A strand crossing a slice boundary: its component and direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StrandEnd {
    /// Index of the undotted component.
    pub component: usize,
    /// Whether the component is oriented upward here.
    pub up: bool,
}

/// Location of a dotted disc marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DotSite {
    /// Index of the slice holding the marker.
    pub slice: usize,
    /// First pierced position in the boundary below the slice.
    pub position: usize,
    /// Number of pierced strands.
    pub width: usize,
}

/// Derived structure of a validated Morse word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Trace {
    ends: Vec<Vec<StrandEnd>>,
    anchors: Vec<(usize, usize)>,
    dots: Vec<DotSite>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl Trace {
    /// Checks widths and orientations and partitions strands into components.
    pub fn build(slices: &[Slice]) -> Result<Trace, ValidationError> {
        let mut widths = vec![0usize];
        for (s, slice) in slices.iter().enumerate() {
            let open = *widths.last().expect("nonempty");
            if slice.width_in() != open {
                return Err(ValidationError::WidthMismatch { slice: s, expected: open, found: slice.width_in() });
            }
            widths.push(slice.width_out());
        }
        let top = *widths.last().expect("nonempty");
        if top != 0 {
            return Err(ValidationError::OpenStrands(top));
        }
        let mut offsets = Vec::with_capacity(widths.len());
        let mut total = 0;
        for w in &widths {
            offsets.push(total);
            total += w;
        }
        let seg = |b: usize, k: usize| offsets[b] + k;

        let mut strands = UnionFind::new(total);
        let mut comps = UnionFind::new(total);
        let mut fixed: Vec<(usize, bool, usize, usize)> = Vec::new();
        let mut dots = Vec::new();
        for (s, slice) in slices.iter().enumerate() {
            for (event, i, o) in slice.placed() {
                let mut join = |a: usize, b: usize, same_strand: bool| {
                    comps.union(a, b);
                    if same_strand {
                        strands.union(a, b);
                    }
                };
                match event {
                    Event::Id => join(seg(s, i), seg(s + 1, o), true),
                    Event::Cross(_) => {
                        join(seg(s, i), seg(s + 1, o + 1), true);
                        join(seg(s, i + 1), seg(s + 1, o), true);
                    }
                    Event::Dot(k) => {
                        for j in 0..k {
                            join(seg(s, i + j), seg(s + 1, o + j), true);
                        }
                        dots.push(DotSite { slice: s, position: i, width: k });
                    }
                    Event::Cup(t) => {
                        join(seg(s + 1, o), seg(s + 1, o + 1), false);
                        fixed.push((seg(s + 1, o), t.left_up(), s, o));
                        fixed.push((seg(s + 1, o + 1), !t.left_up(), s, o + 1));
                    }
                    Event::Cap(t) => {
                        join(seg(s, i), seg(s, i + 1), false);
                        fixed.push((seg(s, i), t.left_up(), s, i));
                        fixed.push((seg(s, i + 1), !t.left_up(), s, i + 1));
                    }
                }
            }
        }

        let mut direction: Vec<Option<bool>> = vec![None; total];
        for &(x, up, s, k) in &fixed {
            let r = strands.find(x);
            match direction[r] {
                None => direction[r] = Some(up),
                Some(d) if d != up => return Err(ValidationError::Orientation { slice: s, position: k }),
                Some(_) => {}
            }
        }

        let mut index_of_root = vec![usize::MAX; total];
        let mut anchors = Vec::new();
        let mut ends = Vec::with_capacity(widths.len());
        for (b, &w) in widths.iter().enumerate() {
            let mut row = Vec::with_capacity(w);
            for k in 0..w {
                let x = seg(b, k);
                let root = comps.find(x);
                if index_of_root[root] == usize::MAX {
                    index_of_root[root] = anchors.len();
                    anchors.push((b, k));
                }
                let up = direction[strands.find(x)].expect("every strand ends at an extremum");
                row.push(StrandEnd { component: index_of_root[root], up });
            }
            ends.push(row);
        }
        Ok(Trace { ends, anchors, dots })
    }

    /// Number of undotted components.
    pub fn component_count(&self) -> usize {
        self.anchors.len()
    }

    /// Strands crossing boundary `b`, which lies below slice `b`.
    pub fn ends(&self, boundary: usize) -> &[StrandEnd] {
        &self.ends[boundary]
    }

    /// Number of slice boundaries (slices plus one).
    pub fn boundary_count(&self) -> usize {
        self.ends.len()
    }

    /// The first strand `(boundary, position)` of each component.
    pub fn anchors(&self) -> &[(usize, usize)] {
        &self.anchors
    }

    /// Component containing the strand at `(boundary, position)`.
    pub fn component_at(&self, boundary: usize, position: usize) -> Option<usize> {
        self.ends.get(boundary)?.get(position).map(|e| e.component)
    }

    /// Dotted disc markers in slice order.
    pub fn dots(&self) -> &[DotSite] {
        &self.dots
    }
}
