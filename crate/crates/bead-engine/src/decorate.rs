//! Bead decoration: crossings, right-oriented extrema and dotted discs.

use cyclo_field::CycScalar;
use diagram::{Event, GKirbyDiagram, Turn};
use gcoalg_core::Tensor;

use crate::engine::BeadEngine;
use crate::error::BeadError;

/// Which strand of a crossing carries the first tensor leg of the R-matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RLeg {
    /// The over strand carries `R'`.
    Over,
    /// The under strand carries `R'`.
    Under,
}

/// How a bead on a strand running downward is transformed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reversal {
    /// Apply the antipode `S`.
    Antipode,
    /// Apply the inverse antipode `S⁻¹`.
    InverseAntipode,
}

/// In which order the beads of a component are multiplied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductOrder {
    /// Beads met later along the orientation stand further left.
    AgainstOrientation,
    /// Beads met later along the orientation stand further right.
    AlongOrientation,
}

/// Which strand piercing a disc receives the first coproduct leg.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiscLegs {
    /// The leftmost strand gets the first leg.
    LeftToRight,
    /// The rightmost strand gets the first leg.
    RightToLeft,
}

/// The placement conventions of the bead algorithm.
///
/// The default is the convention under which the invariant is unchanged by
/// all G-Kirby moves; the other values exist so that this can be tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BeadConventions {
    /// Leg assignment at crossings.
    pub r_leg: RLeg,
    /// Transformation of crossing beads on downward strands.
    pub reversal: Reversal,
    /// Transformation of disc beads on downward strands.
    pub disc_reversal: Reversal,
    /// Exponent of `g` at a clockwise maximum; a counterclockwise minimum gets the opposite.
    pub cap_exponent: i64,
    /// Multiplication order along a component.
    pub order: ProductOrder,
    /// Leg assignment at dotted discs.
    pub disc_legs: DiscLegs,
}

impl Default for BeadConventions {
    fn default() -> Self {
        BeadConventions {
            r_leg: RLeg::Under,
            reversal: Reversal::InverseAntipode,
            disc_reversal: Reversal::Antipode,
            cap_exponent: -1,
            order: ProductOrder::AgainstOrientation,
            disc_legs: DiscLegs::LeftToRight,
        }
    }
}

impl BeadConventions {
    /// All combinations of the convention choices.
    pub fn all() -> Vec<BeadConventions> {
        let mut out = Vec::new();
        for r_leg in [RLeg::Over, RLeg::Under] {
            for reversal in [Reversal::Antipode, Reversal::InverseAntipode] {
                for disc_reversal in [Reversal::Antipode, Reversal::InverseAntipode] {
                    for cap_exponent in [1, -1] {
                        for order in [ProductOrder::AgainstOrientation, ProductOrder::AlongOrientation] {
                            for disc_legs in [DiscLegs::LeftToRight, DiscLegs::RightToLeft] {
                                out.push(BeadConventions { r_leg, reversal, disc_reversal, cap_exponent, order, disc_legs });
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// A bead slot: a component and a position in its product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slot {
    /// Undotted component index.
    pub component: usize,
    /// Position in the component's product, counted from the left.
    pub position: usize,
}

/// A sum of bead tuples placed on a set of slots.
#[derive(Debug, Clone, PartialEq)]
pub struct BeadFactor {
    /// Slice that produced the factor.
    pub slice: usize,
    /// One tensor leg per slot.
    pub tensor: Tensor,
    /// Where each leg sits.
    pub slots: Vec<Slot>,
}

/// A diagram with all beads inserted and dotted discs removed.
///
/// The formal bead sum is the product of the factors' tensor sums; every
/// slot of every component is filled by exactly one factor leg.
#[derive(Debug, Clone, PartialEq)]
pub struct DecoratedDiagram {
    /// The original diagram.
    pub base: GKirbyDiagram,
    /// Scalar in front of the bead sum.
    pub prefactor: CycScalar,
    /// Bead factors in slice order.
    pub factors: Vec<BeadFactor>,
    /// Number of beads on each component.
    pub bead_counts: Vec<usize>,
}

impl DecoratedDiagram {
    /// Total number of beads.
    pub fn bead_count(&self) -> usize {
        self.bead_counts.iter().sum()
    }
}

/// A place along a component where a bead sits, keyed by the producing event.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Site {
    slice: usize,
    event: usize,
    leg: usize,
}

/// Slice events with their input and output positions.
struct Layout {
    placed: Vec<Vec<(Event, usize, usize)>>,
    in_owner: Vec<Vec<usize>>,
    out_owner: Vec<Vec<usize>>,
}

impl Layout {
    fn new(d: &GKirbyDiagram) -> Layout {
        let mut placed = Vec::new();
        let mut in_owner = Vec::new();
        let mut out_owner = Vec::new();
        for slice in d.slices() {
            let events = slice.placed();
            let mut ins = vec![0; slice.width_in()];
            let mut outs = vec![0; slice.width_out()];
            for (idx, &(e, i, o)) in events.iter().enumerate() {
                let (a, b) = e.arity();
                ins[i..i + a].fill(idx);
                outs[o..o + b].fill(idx);
            }
            placed.push(events);
            in_owner.push(ins);
            out_owner.push(outs);
        }
        Layout { placed, in_owner, out_owner }
    }
}

fn is_right_oriented(e: Event) -> bool {
    matches!(e, Event::Cap(Turn::Clockwise) | Event::Cup(Turn::Counterclockwise))
}

/// Walks every component along its orientation and lists the bead sites met.
fn walk(d: &GKirbyDiagram, layout: &Layout) -> Vec<Vec<Site>> {
    let trace = d.trace();
    let mut out = Vec::with_capacity(d.component_count());
    for &(b0, k0) in trace.anchors() {
        let up0 = trace.ends(b0)[k0].up;
        let start = (b0, k0, up0);
        let (mut b, mut k, mut up) = start;
        let mut sites = Vec::new();
        loop {
            if up {
                let s = b;
                let idx = layout.in_owner[s][k];
                let (e, i, o) = layout.placed[s][idx];
                match e {
                    Event::Id => (b, k) = (b + 1, o),
                    Event::Cross(_) => {
                        let leg = k - i;
                        sites.push(Site { slice: s, event: idx, leg });
                        (b, k) = (b + 1, o + 1 - leg);
                    }
                    Event::Dot(_) => {
                        let leg = k - i;
                        sites.push(Site { slice: s, event: idx, leg });
                        (b, k) = (b + 1, o + leg);
                    }
                    Event::Cap(_) => {
                        if is_right_oriented(e) {
                            sites.push(Site { slice: s, event: idx, leg: 0 });
                        }
                        k = if k == i { i + 1 } else { i };
                        up = false;
                    }
                    Event::Cup(_) => unreachable!("cups have no inputs"),
                }
            } else {
                let s = b - 1;
                let idx = layout.out_owner[s][k];
                let (e, i, o) = layout.placed[s][idx];
                match e {
                    Event::Id => (b, k) = (s, i),
                    Event::Cross(_) => {
                        let leg = 1 - (k - o);
                        sites.push(Site { slice: s, event: idx, leg });
                        (b, k) = (s, i + leg);
                    }
                    Event::Dot(_) => {
                        let leg = k - o;
                        sites.push(Site { slice: s, event: idx, leg });
                        (b, k) = (s, i + leg);
                    }
                    Event::Cup(_) => {
                        if is_right_oriented(e) {
                            sites.push(Site { slice: s, event: idx, leg: 0 });
                        }
                        k = if k == o { o + 1 } else { o };
                        up = true;
                    }
                    Event::Cap(_) => unreachable!("caps have no outputs"),
                }
            }
            if (b, k, up) == start {
                break;
            }
        }
        out.push(sites);
    }
    out
}

/// Inserts beads into a diagram.
pub fn decorate(engine: &BeadEngine, d: &GKirbyDiagram) -> Result<DecoratedDiagram, BeadError> {
    decorate_with(engine, d, engine.conventions())
}

/// Inserts beads into a diagram using explicit conventions.
pub fn decorate_with(engine: &BeadEngine, d: &GKirbyDiagram, conv: BeadConventions) -> Result<DecoratedDiagram, BeadError> {
    engine.check_group(d)?;
    let layout = Layout::new(d);
    let sites = walk(d, &layout);
    let bead_counts: Vec<usize> = sites.iter().map(Vec::len).collect();

    let mut slot_of = std::collections::HashMap::new();
    for (c, list) in sites.iter().enumerate() {
        let n = list.len();
        for (w, site) in list.iter().enumerate() {
            let position = match conv.order {
                ProductOrder::AgainstOrientation => n - 1 - w,
                ProductOrder::AlongOrientation => w,
            };
            slot_of.insert((site.slice, site.event, site.leg), Slot { component: c, position });
        }
    }

    let trace = d.trace();
    let mut prefactor = engine.one();
    let mut factors = Vec::new();
    for (s, events) in layout.placed.iter().enumerate() {
        for (idx, &(e, i, _)) in events.iter().enumerate() {
            let (tensor, legs) = match e {
                Event::Id => continue,
                Event::Cross(sign) => {
                    let (l, r) = (trace.ends(s)[i], trace.ends(s)[i + 1]);
                    let dir = |u: bool| if u { 1 } else { -1 };
                    let left_over = sign.value() * dir(l.up) * dir(r.up) > 0;
                    let base = engine.crossing_tensor(left_over)?;
                    let left_gets_first = left_over == (conv.r_leg == RLeg::Over);
                    let mut t = if left_gets_first { base.clone() } else { base.permute(&[1, 0]) };
                    for (leg, end) in [(0, l), (1, r)] {
                        if !end.up {
                            t = engine.reverse_leg(&t, leg, conv.reversal);
                        }
                    }
                    (t, vec![0, 1])
                }
                Event::Cap(_) | Event::Cup(_) => {
                    if !is_right_oriented(e) {
                        continue;
                    }
                    let exp = if matches!(e, Event::Cap(_)) { conv.cap_exponent } else { -conv.cap_exponent };
                    (engine.pivotal_power(exp), vec![0])
                }
                Event::Dot(0) => {
                    prefactor = &prefactor * &engine.cointegral_counit();
                    continue;
                }
                Event::Dot(k) => {
                    let mut t = engine.cointegral_coproduct(k).clone();
                    if conv.disc_legs == DiscLegs::RightToLeft {
                        let perm: Vec<usize> = (0..k).rev().collect();
                        t = t.permute(&perm);
                    }
                    for j in 0..k {
                        if !trace.ends(s)[i + j].up {
                            t = engine.reverse_leg(&t, j, conv.disc_reversal);
                        }
                    }
                    (t, (0..k).collect())
                }
            };
            let slots = legs.iter().map(|&leg| slot_of[&(s, idx, leg)]).collect();
            factors.push(BeadFactor { slice: s, tensor, slots });
        }
    }
    Ok(DecoratedDiagram { base: d.clone(), prefactor, factors, bead_counts })
}
