#![allow(dead_code)]

use std::collections::BTreeMap;

use bead_engine::{evaluate, presentation, BeadEngine, Mode};
use cyclo_field::CycScalar;
use diagram::{parse, GKirbyDiagram, LabelGroup};
use quantum_sl2::Variant;

/// Reads a diagram from the shared corpus.
pub fn load(name: &str) -> GKirbyDiagram {
    let path = format!("{}/../../corpus/{name}.kd", env!("CARGO_MANIFEST_DIR"));
    parse(&std::fs::read_to_string(&path).unwrap()).unwrap_or_else(|e| panic!("{path}: {e}"))
}

/// Evaluates a diagram on every labeling accepted by the engine.
///
/// For `U` the labels range over the cocycle labelings in `Z2`; for `Ū` only
/// the zero labeling is used.
pub fn values(engine: &BeadEngine, d: &GKirbyDiagram, mode: Mode) -> BTreeMap<Vec<u32>, CycScalar> {
    let bp = presentation(engine, d).unwrap();
    let labelings: Vec<Vec<u32>> = match engine.variant() {
        Variant::Small => vec![vec![0; d.component_count()]],
        _ => {
            let z2 = d.with_group(LabelGroup::z2(), vec![LabelGroup::z2().zero(); d.component_count()]).unwrap();
            z2.cocycle_labelings().iter().map(|l| l.iter().map(|x| x.0[0]).collect()).collect()
        }
    };
    labelings
        .into_iter()
        .map(|l| {
            let degrees = l.iter().map(|&x| x as usize).collect();
            let v = evaluate(engine, &bp.with_degrees(degrees).unwrap(), mode).unwrap();
            (l, v)
        })
        .collect()
}

/// Values of `d` at every labeling, with each labeling transformed by `relabel`.
pub fn relabeled(
    engine: &BeadEngine,
    d: &GKirbyDiagram,
    relabel: impl Fn(&[u32]) -> Vec<u32>,
) -> BTreeMap<Vec<u32>, CycScalar> {
    values(engine, d, Mode::GradedInU).into_iter().map(|(l, v)| (relabel(&l), v)).collect()
}

/// Both engines used for invariance checks at `p`.
pub fn engines(p: u32) -> Vec<BeadEngine> {
    vec![BeadEngine::new(Variant::Small, p).unwrap(), BeadEngine::new(Variant::Restricted, p).unwrap()]
}

/// Closure of a braid on `n` strands; each letter is a generator index and a sign.
pub fn braid_text(n: usize, word: &[(usize, bool)]) -> String {
    let bar = |k: usize| vec!["|"; k].join(" ");
    let mut lines = Vec::new();
    for k in 0..n {
        lines.push(format!("{} cup> {}", bar(k), bar(k)).trim().to_string());
    }
    for &(i, positive) in word {
        let sign = if positive { "x+" } else { "x-" };
        lines.push(format!("{} {sign} {}", bar(i), bar(2 * n - i - 2)).trim().to_string());
    }
    for k in (0..n).rev() {
        lines.push(format!("{} cap> {}", bar(k), bar(k)).trim().to_string());
    }
    lines.join("\n")
}
