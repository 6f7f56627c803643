//! Diagram transforms: orientation reversal, handle trading, stabilizations
//! and disjoint union.

use crate::diagram::GKirbyDiagram;
use crate::error::{DiagramError, ValidationError};
use crate::group::GroupElement;
use crate::trace::Trace;
use crate::word::{Event, Sign, Slice, Turn};

/// Where [`stabilize_gk2`] inserts a canceling 1-/2-handle pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gk2Site {
    /// A disjoint pair between strands `position - 1` and `position` at a boundary.
    Disjoint {
        /// Slice boundary (`0` is the bottom).
        boundary: usize,
        /// Insertion position, at most the number of open strands.
        position: usize,
    },
    /// A pair whose 2-handle is a meridian of the strand at `strand`.
    Meridian {
        /// Slice boundary (`0` is the bottom).
        boundary: usize,
        /// Position of the encircled strand.
        strand: usize,
    },
}

/// A diagram after a splice, with the component correspondence.
struct Spliced {
    diagram: GKirbyDiagram,
    old_to_new: Vec<usize>,
    fresh: Vec<usize>,
}

/// Rebuilds a diagram from edited slices, carrying labels through `map_boundary`.
fn splice(
    d: &GKirbyDiagram,
    slices: Vec<Slice>,
    map_boundary: impl Fn(usize) -> usize,
    fresh_label: impl Fn(usize) -> GroupElement,
) -> Result<Spliced, DiagramError> {
    let trace = Trace::build(&slices)?;
    let n = trace.component_count();
    let old_to_new: Vec<usize> = d
        .trace()
        .anchors()
        .iter()
        .map(|&(b, k)| trace.component_at(map_boundary(b), k).expect("anchor survives the edit"))
        .collect();
    let fresh: Vec<usize> = (0..n).filter(|i| !old_to_new.contains(i)).collect();
    let mut labels = vec![d.group().zero(); n];
    for (old, &new) in old_to_new.iter().enumerate() {
        labels[new] = d.labels()[old].clone();
    }
    for (j, &f) in fresh.iter().enumerate() {
        labels[f] = fresh_label(j);
    }
    let diagram = GKirbyDiagram::new(d.group().clone(), slices, labels)?;
    Ok(Spliced { diagram, old_to_new, fresh })
}

fn width_at(d: &GKirbyDiagram, boundary: usize) -> Result<usize, DiagramError> {
    if boundary >= d.trace().boundary_count() {
        return Err(DiagramError::InvalidSite(format!("boundary {boundary} does not exist")));
    }
    Ok(d.trace().ends(boundary).len())
}

fn insert_block(d: &GKirbyDiagram, boundary: usize, block: Vec<Slice>, fresh_label: impl Fn(usize) -> GroupElement) -> Result<Spliced, DiagramError> {
    let len = block.len();
    let mut slices = d.slices()[..boundary].to_vec();
    slices.extend(block);
    slices.extend_from_slice(&d.slices()[boundary..]);
    splice(d, slices, |b| if b > boundary { b + len } else { b }, fresh_label)
}

/// Reverses the orientation of one undotted component and negates its label.
pub fn reverse_component(d: &GKirbyDiagram, component: usize) -> Result<GKirbyDiagram, DiagramError> {
    if component >= d.component_count() {
        return Err(ValidationError::UnknownComponent(format!("C{}", component + 1)).into());
    }
    let t = d.trace();
    let slices = d
        .slices()
        .iter()
        .enumerate()
        .map(|(s, slice)| {
            let events = slice
                .placed()
                .into_iter()
                .map(|(e, i, o)| match e {
                    Event::Cup(turn) if t.ends(s + 1)[o].component == component => Event::Cup(turn.flip()),
                    Event::Cap(turn) if t.ends(s)[i].component == component => Event::Cap(turn.flip()),
                    Event::Cross(sign) => {
                        let (l, r) = (t.ends(s)[i].component, t.ends(s)[i + 1].component);
                        if (l == component) != (r == component) {
                            Event::Cross(sign.flip())
                        } else {
                            e
                        }
                    }
                    other => other,
                })
                .collect();
            Slice::new(events)
        })
        .collect();
    let mut labels = d.labels().to_vec();
    labels[component] = d.group().neg(&labels[component]);
    GKirbyDiagram::new(d.group().clone(), slices, labels)
}

/// Crossing token for two adjacent strands with the lower-left one over or under.
fn crossing(left_over: bool, left_up: bool, right_up: bool) -> Event {
    let s = |b: bool| if b { 1 } else { -1 };
    Event::Cross(Sign::from_value(s(left_over) * s(left_up) * s(right_up)))
}

/// Slices drawing a 0-framed circle around the `up.len()` strands at `position`.
///
/// The circle passes over every strand on one side and under it on the other,
/// so it links each strand once with linking number `+1`.
fn encircle(width: usize, position: usize, up: &[bool]) -> Vec<Slice> {
    let k = up.len();
    let right = width - position - k;
    let mut block = vec![Slice::padded(position, &[Event::Cup(Turn::Counterclockwise)], width - position)];
    for (m, &u) in up.iter().enumerate() {
        let mut events = vec![Event::Id; width + 2];
        events.splice(position + 1 + m..position + 3 + m, [crossing(true, true, u)]);
        block.push(Slice::new(events));
    }
    for (m, &u) in up.iter().enumerate() {
        let mut events = vec![Event::Id; width + 2];
        events.splice(position + m..position + m + 2, [crossing(false, false, u)]);
        block.push(Slice::new(events));
    }
    block.push(Slice::padded(position + k, &[Event::Cap(Turn::Counterclockwise)], right));
    block
}

/// Result of trading every dotted disc for a 0-framed undotted circle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TradedHandles {
    /// The dot-free diagram `L`.
    pub link: GKirbyDiagram,
    /// Index in `link` of each undotted component of the original diagram.
    pub kept: Vec<usize>,
    /// Index in `link` of the circle replacing each dotted disc, in disc order.
    pub fresh: Vec<usize>,
}

impl TradedHandles {
    /// All labelings of `link` extending `omega` on the kept components.
    pub fn extensions(&self, omega: &[GroupElement]) -> Vec<Vec<GroupElement>> {
        let group = self.link.group();
        group
            .vectors(self.fresh.len())
            .into_iter()
            .map(|choice| {
                let mut psi = vec![group.zero(); self.link.component_count()];
                for (old, &new) in self.kept.iter().enumerate() {
                    psi[new] = omega[old].clone();
                }
                for (x, &new) in choice.into_iter().zip(&self.fresh) {
                    psi[new] = x;
                }
                psi
            })
            .collect()
    }

    /// All labelings of `link`.
    pub fn all_extensions(&self) -> Vec<Vec<GroupElement>> {
        self.link.group().vectors(self.link.component_count())
    }
}

/// Trades every dotted disc for a 0-framed circle around the same strands.
///
/// New circles are labeled zero in `link`; use [`TradedHandles::extensions`]
/// to enumerate their labels.
pub fn trade_handles(d: &GKirbyDiagram) -> TradedHandles {
    let mut current = d.clone();
    let mut kept: Vec<usize> = (0..d.component_count()).collect();
    let mut fresh: Vec<usize> = Vec::new();
    while let Some(site) = current.trace().dots().first().copied() {
        let s = site.slice;
        let width = current.trace().ends(s).len();
        let up: Vec<bool> = current.trace().ends(s)[site.position..site.position + site.width].iter().map(|e| e.up).collect();
        let block = encircle(width, site.position, &up);
        let len = block.len();
        let mut slices = current.slices()[..s].to_vec();
        slices.extend(block);
        let mut replaced = Vec::new();
        let mut seen = false;
        for e in &current.slices()[s].events {
            match e {
                Event::Dot(k) if !seen => {
                    seen = true;
                    replaced.extend(std::iter::repeat(Event::Id).take(*k));
                }
                other => replaced.push(*other),
            }
        }
        slices.push(Slice::new(replaced));
        slices.extend_from_slice(&current.slices()[s + 1..]);
        let spliced = splice(&current, slices, |b| if b > s { b + len } else { b }, |_| current.group().zero())
            .expect("trading a disc keeps the word valid");
        kept = kept.iter().map(|&i| spliced.old_to_new[i]).collect();
        fresh = fresh.iter().map(|&i| spliced.old_to_new[i]).collect();
        fresh.extend(spliced.fresh);
        current = spliced.diagram;
    }
    TradedHandles { link: current, kept, fresh }
}

/// Inserts a canceling dotted/undotted pair; the new 2-handle is labeled zero.
pub fn stabilize_gk2(d: &GKirbyDiagram, site: Gk2Site) -> Result<GKirbyDiagram, DiagramError> {
    let zero = d.group().zero();
    let (boundary, block) = match site {
        Gk2Site::Disjoint { boundary, position } => {
            let w = width_at(d, boundary)?;
            if position > w {
                return Err(DiagramError::InvalidSite(format!("position {position} exceeds width {w}")));
            }
            let block = vec![
                Slice::padded(position, &[Event::Cup(Turn::Counterclockwise)], w - position),
                Slice::padded(position, &[Event::Dot(1)], w - position + 1),
                Slice::padded(position, &[Event::Cap(Turn::Counterclockwise)], w - position),
            ];
            (boundary, block)
        }
        Gk2Site::Meridian { boundary, strand } => {
            let w = width_at(d, boundary)?;
            if strand >= w {
                return Err(DiagramError::InvalidSite(format!("strand {strand} does not exist at boundary {boundary}")));
            }
            let up = d.trace().ends(boundary)[strand].up;
            let j = strand;
            let block = vec![
                Slice::padded(j, &[Event::Cup(Turn::Counterclockwise)], w - j),
                Slice::padded(j + 1, &[Event::Dot(1)], w - j),
                Slice::padded(j + 1, &[crossing(true, true, up)], w - j - 1),
                Slice::padded(j, &[crossing(false, false, up)], w - j),
                Slice::padded(j + 1, &[Event::Cap(Turn::Counterclockwise)], w - j - 1),
            ];
            (boundary, block)
        }
    };
    Ok(insert_block(d, boundary, block, |_| zero.clone())?.diagram)
}

/// Adds a disjoint `±1`-framed unknot with the given label at the top.
pub fn connected_sum_cp2(d: &GKirbyDiagram, sign: i64, label: GroupElement) -> Result<GKirbyDiagram, DiagramError> {
    if !d.group().contains(&label) {
        return Err(ValidationError::BadLabels(format!("{label:?} is not in {}", d.group())).into());
    }
    let block = vec![
        Slice::new(vec![Event::Cup(Turn::Clockwise)]),
        Slice::new(vec![Event::Cross(Sign::from_value(sign))]),
        Slice::new(vec![Event::Cap(Turn::Counterclockwise)]),
    ];
    let top = d.slices().len();
    Ok(insert_block(d, top, block, |_| label.clone())?.diagram)
}

/// Places two diagrams over the same group one above the other.
pub fn disjoint_union(a: &GKirbyDiagram, b: &GKirbyDiagram) -> Result<GKirbyDiagram, DiagramError> {
    if a.group() != b.group() {
        return Err(ValidationError::GroupMismatch(a.group().to_string(), b.group().to_string()).into());
    }
    let mut slices = a.slices().to_vec();
    slices.extend_from_slice(b.slices());
    let mut labels = a.labels().to_vec();
    labels.extend_from_slice(b.labels());
    GKirbyDiagram::new(a.group().clone(), slices, labels)
}
