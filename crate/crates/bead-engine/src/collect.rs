//! Collecting beads into one element per component.
//!
//! [`collect`] contracts the bead factors slice by slice. The running state is
//! a sparse tensor with one leg per run: a maximal block of consecutive slots
//! of one component whose beads are already known. A leg holds the product of
//! its run's beads. New factor legs are appended and merged with adjacent
//! runs right away, so the state never stores more legs than there are gaps.

use cyclo_field::CycScalar;
use gcoalg_core::{Key, Tensor};
use rustc_hash::FxHashMap;

use crate::decorate::DecoratedDiagram;
use crate::engine::BeadEngine;
use crate::presentation::BeadPresentation;

#[derive(Debug, Clone, Copy)]
struct Run {
    component: usize,
    start: usize,
    end: usize,
}

type State = FxHashMap<Key, CycScalar>;

fn accumulate(map: &mut State, key: Key, c: CycScalar) {
    match map.get_mut(&key) {
        Some(v) => {
            *v += &c;
            if v.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            if !c.is_zero() {
                map.insert(key, c);
            }
        }
    }
}

/// Runs after a factor is appended, and the merges that produce them.
///
/// Each merge `(a, b)` replaces leg `a` by the product `leg a · leg b` and
/// removes leg `b`.
fn plan(runs: &mut Vec<Run>, first_new: usize) -> Vec<(usize, usize)> {
    let mut merges = Vec::new();
    let mut pending: Vec<usize> = (first_new..runs.len()).collect();
    while let Some(r) = pending.pop() {
        let run = runs[r];
        let left = runs.iter().position(|x| x.component == run.component && x.end + 1 == run.start);
        let right = runs.iter().position(|x| x.component == run.component && x.start == run.end + 1);
        let (a, b) = match (left, right) {
            (Some(l), _) => (l, r),
            (None, Some(rt)) => (r, rt),
            (None, None) => continue,
        };
        merges.push((a, b));
        runs[a].end = runs[b].end;
        runs.remove(b);
        let shift = |i: usize| if i > b { i - 1 } else { i };
        pending = pending.into_iter().filter(|&i| i != b).map(shift).collect();
        pending.push(shift(a));
    }
    merges
}

/// Applies merges to one key and accumulates the expansion.
fn expand(engine: &BeadEngine, key: Key, coeff: CycScalar, merges: &[(usize, usize)], out: &mut State) {
    let Some((&(a, b), rest)) = merges.split_first() else {
        accumulate(out, key, coeff);
        return;
    };
    for (z, c) in engine.algebra().engine().basis_product(key[a], key[b]) {
        let mut nk = key.clone();
        nk[a] = *z;
        nk.remove(b);
        expand(engine, nk, &coeff * c, rest, out);
    }
}

/// Contracts the factors of a decorated diagram into a bead presentation.
pub fn collect(engine: &BeadEngine, dd: &DecoratedDiagram) -> BeadPresentation {
    let n = engine.algebra().field_order();
    let mut state = State::default();
    state.insert(Key::new(), CycScalar::one(n));
    let mut runs: Vec<Run> = Vec::new();
    for factor in &dd.factors {
        let first_new = runs.len();
        runs.extend(factor.slots.iter().map(|s| Run { component: s.component, start: s.position, end: s.position }));
        let merges = plan(&mut runs, first_new);
        let (head, tail) = merges.split_at(merges.len().min(1));
        let mut next = State::default();
        for (k1, c1) in &state {
            for (k2, c2) in factor.tensor.iter() {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                expand(engine, k, c1 * c2, head, &mut next);
            }
        }
        for merge in tail {
            let mut after = State::default();
            for (k, c) in next {
                expand(engine, k, c, std::slice::from_ref(merge), &mut after);
            }
            next = after;
        }
        state = next;
        if state.is_empty() {
            break;
        }
    }
    finish(engine, dd, state, &runs)
}

/// Orders the legs by component and inserts units for bead-free components.
fn finish(engine: &BeadEngine, dd: &DecoratedDiagram, state: State, runs: &[Run]) -> BeadPresentation {
    let alg = engine.algebra();
    let unit = alg.engine().index(0, 0, 0);
    let k = dd.bead_counts.len();
    let mut tensor = Tensor::zero(k);
    if !state.is_empty() {
        let mut leg_of = vec![None; k];
        for (leg, run) in runs.iter().enumerate() {
            debug_assert_eq!((run.start, run.end + 1), (0, dd.bead_counts[run.component]));
            leg_of[run.component] = Some(leg);
        }
        for (key, c) in state {
            let nk: Vec<u32> = leg_of.iter().map(|l| l.map_or(unit, |l| key[l])).collect();
            tensor.add_term(&nk, c);
        }
    }
    BeadPresentation::new(engine, dd, tensor)
}

/// Collects beads by expanding the full formal bead sum.
///
/// Every term of the product of all factors is materialized and each
/// component's beads are multiplied in slot order. This is exponentially
/// slower than [`collect`] and exists to cross-check it on small diagrams.
pub fn collect_naive(engine: &BeadEngine, dd: &DecoratedDiagram) -> BeadPresentation {
    let alg = engine.algebra();
    let n = alg.field_order();
    let mut all = Tensor::scalar(CycScalar::one(n));
    let mut slots = Vec::new();
    for f in &dd.factors {
        all = all.outer(&f.tensor);
        slots.extend(f.slots.iter().copied());
    }
    let k = dd.bead_counts.len();
    let mut legs_of: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for (leg, s) in slots.iter().enumerate() {
        legs_of[s.component].push((s.position, leg));
    }
    for l in &mut legs_of {
        l.sort_unstable();
    }
    let mut tensor = Tensor::scalar(CycScalar::one(n));
    let mut first = true;
    for (key, c) in all.iter() {
        let mut term = Tensor::scalar(c.clone());
        for legs in &legs_of {
            let mut x = alg.unit_tensor(1);
            for &(_, leg) in legs {
                x = alg.mul(&x, &Tensor::basis(&[key[leg]], CycScalar::one(n)));
            }
            term = term.outer(&x);
        }
        if first {
            tensor = term;
            first = false;
        } else {
            tensor.add_assign(&term);
        }
    }
    if first {
        tensor = Tensor::zero(k);
    }
    BeadPresentation::new(engine, dd, tensor)
}
