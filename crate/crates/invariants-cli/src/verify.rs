//! The verification suite: algebra identities, corpus checks and the
//! decomposition, rescaling and stabilization identities, per `p`.
//!
//! Every section returns a [`Report`]; errors inside a section become failed
//! checks. For `U` at `p ≥ 4`, diagrams with more than three crossings are
//! left out of the corpus sections to keep run times short.

use std::collections::BTreeMap;

use bead_engine::{presentation, Mode};
use cyclo_field::{gauss_sum, gauss_sum_closed_form, CycScalar};
use diagram::{connected_sum_cp2, disjoint_union, linking_matrix, reverse_component, stabilize_gk2, trade_handles, GKirbyDiagram, Gk2Site, GroupElement};
use gcoalg_core::check_all;
use quantum_sl2::{QuantumGroupInstance, Variant};

use crate::boundary::{boundary_invariant, StructureKind};
use crate::calc::{Calculator, VariantChoice};
use crate::corpus::{load, CORPUS};
use crate::decompose::decomposition_check;
use crate::error::CliError;
use crate::report::Report;
use crate::rescale::{default_factors, rescale_check};

/// Isotopic pairs of corpus diagrams with matching component order.
pub const ISOTOPY_PAIRS: &[(&str, &str)] = &[
    ("unknot", "unknot_ccw"),
    ("unknot", "unknot_snake"),
    ("unknot", "unknot_r2"),
    ("plus_one", "plus_one_ccw"),
    ("plus_one", "plus_one_braid"),
    ("minus_one", "minus_one_braid"),
    ("hopf", "hopf_braid"),
    ("braid3_a", "braid3_b"),
];

/// Pairs related by sliding the first component over the second; labels
/// `(a, b)` on the first diagram match `(a, a + b)` on the second.
pub const SLIDE_PAIRS: &[(&str, &str)] = &[("hopf", "hopf_20"), ("unknot_plus_one", "hopf_11")];

/// Diagrams whose components are reversed one at a time.
pub const REVERSAL_CORPUS: &[&str] = &["hopf", "hopf_01", "trefoil", "plus_one", "braid3_a", "plus_one_dotted"];

/// Diagrams with dotted circles.
pub const DOTTED_CORPUS: &[&str] = &["cancel_pair", "dot_pierced_twice", "plus_one_dotted"];

/// Dot-free diagrams used for the boundary decompositions.
pub const DOT_FREE_CORPUS: &[&str] = &["unknot", "plus_one", "minus_one", "hopf", "hopf_01", "trefoil"];

/// Largest number of crossings evaluated with `U` at this `p`.
pub fn crossing_budget(p: u32) -> usize {
    if p <= 2 {
        usize::MAX
    } else {
        3
    }
}

fn affordable(calc: &Calculator, d: &GKirbyDiagram) -> bool {
    calc.choice() == VariantChoice::Small || d.crossing_count() <= crossing_budget(calc.p())
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn table(calc: &Calculator, d: &GKirbyDiagram) -> Result<BTreeMap<Vec<u32>, CycScalar>, CliError> {
    Ok(calc.refined_table(d)?.into_iter().collect())
}

fn calculators(p: u32) -> Result<Vec<Calculator>, CliError> {
    Ok(vec![Calculator::new(VariantChoice::Small, p, Mode::GradedInU)?, Calculator::new(VariantChoice::Restricted, p, Mode::GradedInU)?])
}

/// Quadratic Gauss sums against their closed forms.
pub fn gauss_sums(p: u32) -> Report {
    let mut r = Report::new();
    for sign in [1, -1] {
        let failures: Vec<i64> = (0..4 * p as i64).filter(|&d| gauss_sum(p, sign, d) != gauss_sum_closed_form(p, sign, d)).collect();
        r.push("gauss", format!("p={p} sign={sign:+} d=0..{}", 4 * p - 1), failures.is_empty(), format!("failing d: {failures:?}"));
    }
    r
}

/// The Hopf, ribbon and unimodular axioms on every split algebra at `p`.
pub fn axiom_suites(p: u32) -> Report {
    let mut r = Report::new();
    for variant in [Variant::Restricted, Variant::Tilde, Variant::Small] {
        let outcome = QuantumGroupInstance::new(variant, p).and_then(|inst| inst.graded()).map_err(err).and_then(|g| {
            let report = check_all(&g);
            let failed: Vec<String> = report.failures().iter().map(|c| format!("{} {}", c.axiom, c.instance)).collect();
            if failed.is_empty() {
                Ok(format!("{} instances pass, {} not applicable", report.passed(), report.not_applicable()))
            } else {
                Err(failed.join("; "))
            }
        });
        r.record("axioms", format!("{variant} at p={p}"), outcome);
    }
    r
}

/// Closed forms of the ribbon element, M-matrix and copairing against
/// brute-force computations from the R-matrix.
pub fn oracle_equivalences(p: u32) -> Report {
    let mut r = Report::new();
    let both = QuantumGroupInstance::tilde(p).and_then(|t| Ok((t, QuantumGroupInstance::restricted(p)?)));
    let (t, u) = match both {
        Ok(pair) => pair,
        Err(e) => {
            r.push("oracles", format!("instances at p={p}"), false, e.to_string());
            return r;
        }
    };
    r.record(
        "oracles",
        format!("ribbon element at p={p}"),
        (|| {
            let brute = t.restrict_to_restricted(&t.ribbon_from_r().map_err(err)?).map_err(err)?;
            let (vp, vm) = u.ribbon_elements().map_err(err)?;
            if brute != u.to_tensor(&vp) {
                return Err("v₊ differs from the R-matrix computation".into());
            }
            if u.product(&vp, &vm).map_err(err)? != u.one() {
                return Err("v₊ v₋ is not 1".into());
            }
            Ok(format!("{} terms", brute.len()))
        })(),
    );
    r.record(
        "oracles",
        format!("monodromy at p={p}"),
        (|| {
            let brute = t.restrict_to_restricted(&t.monodromy_from_r().map_err(err)?).map_err(err)?;
            let (mp, _) = u.m_matrix().map_err(err)?;
            if &brute != mp {
                return Err("M differs from R₂₁R".into());
            }
            Ok(format!("{} terms", brute.len()))
        })(),
    );
    r.record(
        "oracles",
        format!("copairing at p={p}"),
        (|| {
            let brute = u.copairing_from_m().map_err(err)?;
            if &brute != u.copairing().map_err(err)? {
                return Err("w differs from (S ⊗ id)M".into());
            }
            Ok(format!("{} terms", brute.len()))
        })(),
    );
    r
}

/// Degree-wise closed forms of the ribbon element and copairing against
/// projections by the central idempotents.
pub fn graded_closed_forms(p: u32) -> Report {
    let mut r = Report::new();
    for variant in [Variant::Restricted, Variant::Tilde] {
        let inst = match QuantumGroupInstance::new(variant, p) {
            Ok(i) => i,
            Err(e) => {
                r.push("graded-closed-forms", format!("{variant} at p={p}"), false, e.to_string());
                continue;
            }
        };
        for inverse in [false, true] {
            for alpha in 0..2 {
                let outcome = (|| {
                    let (vp, vm) = inst.ribbon_tensors().map_err(err)?;
                    let v = if inverse { vm } else { vp };
                    let proj = inst.project(v, &[alpha]).map_err(err)?;
                    if proj == inst.graded_ribbon(alpha, inverse).map_err(err)? {
                        Ok(format!("{} terms", proj.len()))
                    } else {
                        Err("closed form differs from the projection".to_string())
                    }
                })();
                let name = if inverse { "v₋" } else { "v₊" };
                r.record("graded-closed-forms", format!("{variant} {name} 1_{alpha} at p={p}"), outcome);
            }
        }
    }
    if let Ok(u) = QuantumGroupInstance::restricted(p) {
        for alpha in 0..2 {
            for beta in 0..2 {
                let outcome = (|| {
                    let proj = u.project(u.copairing().map_err(err)?, &[alpha, beta]).map_err(err)?;
                    if proj == u.graded_copairing(alpha, beta).map_err(err)? {
                        Ok(format!("{} terms", proj.len()))
                    } else {
                        Err("closed form differs from the projection".to_string())
                    }
                })();
                r.record("graded-closed-forms", format!("U w(1_{alpha} ⊗ 1_{beta}) at p={p}"), outcome);
            }
        }
    }
    r
}

/// The values `λ(v_± 1_α)` against `±((1 ∓ i)/√2) t^{±3}` and their products.
pub fn lambda_table(p: u32) -> Report {
    let mut r = Report::new();
    let outcome = (|| {
        let u = QuantumGroupInstance::restricted(p).map_err(err)?;
        let table = u.lambda_v_values().map_err(err)?;
        let k = u.consts();
        let one = u.one_scalar();
        let kind = StructureKind::for_p(p).map_err(err)?;
        let alpha = kind.degree();
        let sign = if kind == StructureKind::Spin { one.clone() } else { -&one };
        let plus = &sign * &(&(&one - &k.i(1)).div(&k.named.sqrt_2).map_err(err)? * &k.t(3));
        let minus = &sign * &(&(&one + &k.i(1)).div(&k.named.sqrt_2).map_err(err)? * &k.t(-3));
        let mut problems = Vec::new();
        if table.get(1, alpha) != &plus {
            problems.push(format!("λ(v₊ 1_{alpha}) = {}", table.get(1, alpha)));
        }
        if table.get(-1, alpha) != &minus {
            problems.push(format!("λ(v₋ 1_{alpha}) = {}", table.get(-1, alpha)));
        }
        if !(table.get(1, alpha) * table.get(-1, alpha)).is_one() {
            problems.push("λ(v₊ 1_α) λ(v₋ 1_α) is not 1".into());
        }
        if !table.get(1, 1 - alpha).is_zero() || !table.get(-1, 1 - alpha).is_zero() {
            problems.push(format!("degree {} does not vanish", 1 - alpha));
        }
        if problems.is_empty() {
            Ok(format!("λ(v₊ 1_{alpha}) = {plus}, λ(v₋ 1_{alpha}) = {minus}"))
        } else {
            Err(problems.join("; "))
        }
    })();
    r.record("lambda-table", format!("p={p}"), outcome);
    r
}

/// Corpus diagrams evaluated with `U` at this `p`.
pub fn corpus_for(p: u32) -> Vec<(&'static str, GKirbyDiagram)> {
    CORPUS.iter().map(|(n, _)| (*n, load(n))).filter(|(_, d)| d.crossing_count() <= crossing_budget(p)).collect()
}

/// Beads of `U` diagrams stay in `U`, and both evaluation modes agree.
pub fn restricted_membership(p: u32) -> Report {
    let mut r = Report::new();
    let graded = Calculator::new(VariantChoice::Restricted, p, Mode::GradedInU);
    let full = Calculator::new(VariantChoice::Restricted, p, Mode::FullTilde);
    let (graded, full) = match (graded, full) {
        (Ok(g), Ok(f)) => (g, f),
        (Err(e), _) | (_, Err(e)) => {
            r.push("membership", format!("engines at p={p}"), false, e.to_string());
            return r;
        }
    };
    for (name, d) in corpus_for(p) {
        let outcome = (|| {
            let bp = presentation(graded.engine(), &d).map_err(err)?;
            if bp.has_odd_cartan_power(graded.engine()) {
                return Err("a collected bead has an odd power of K̃".into());
            }
            let a = table(&graded, &d).map_err(err)?;
            let b = table(&full, &d).map_err(err)?;
            if a != b {
                return Err("graded-in-U and full-tilde evaluations differ".into());
            }
            Ok(format!("{} terms, {} labelings", bp.tensor.len(), a.len()))
        })();
        r.record("membership", format!("{name} at p={p}"), outcome);
    }
    r
}

/// `J_U(W, 0) = J_Ū(W)` on the corpus diagrams within the crossing budget.
pub fn restricted_vs_small(p: u32) -> Report {
    restricted_vs_small_on(p, corpus_for(p))
}

/// `J_U(W, 0) = J_Ū(W)` on the given diagrams.
pub fn restricted_vs_small_on(p: u32, diagrams: Vec<(&str, GKirbyDiagram)>) -> Report {
    let mut r = Report::new();
    let calcs = match calculators(p) {
        Ok(c) => c,
        Err(e) => {
            r.push("restricted-vs-small", format!("engines at p={p}"), false, e.to_string());
            return r;
        }
    };
    for (name, d) in diagrams {
        let zero = vec![0; d.component_count()];
        let outcome = (|| {
            let small = calcs[0].refined_at(&d, &zero).map_err(err)?;
            let restricted = calcs[1].refined_at(&d, &zero).map_err(err)?;
            if small == restricted {
                Ok(small.to_string())
            } else {
                Err(format!("U gives {restricted}, Ū gives {small}"))
            }
        })();
        r.record("restricted-vs-small", format!("{name} at p={p}"), outcome);
    }
    r
}

/// The published values of `Ū` on the two `S²`-bundles over `S²` minus a ball.
pub fn published_values(p: u32) -> Report {
    let mut r = Report::new();
    let outcome = Calculator::new(VariantChoice::Small, p, Mode::GradedInU).and_then(|c| {
        let trivial = c.unrefined(&load("hopf"))?;
        let twisted = c.unrefined(&load("hopf_01"))?;
        Ok((c.one(), c.zero(), trivial, twisted))
    });
    match outcome {
        Ok((one, zero, trivial, twisted)) => {
            r.expect_eq("published", format!("J_Ū(S²×S² minus a ball) at p={p}"), &trivial, &one);
            let expected = if p % 4 == 2 { one } else { zero };
            r.expect_eq("published", format!("J_Ū(twisted S²-bundle minus a ball) at p={p}"), &twisted, &expected);
        }
        Err(e) => r.push("published", format!("p={p}"), false, e.to_string()),
    }
    r
}

/// Isotopy and G-Kirby move invariance on the corpus for `Ū` and `U`.
pub fn gk_moves(p: u32) -> Report {
    let mut r = Report::new();
    let calcs = match calculators(p) {
        Ok(c) => c,
        Err(e) => {
            r.push("gk-moves", format!("engines at p={p}"), false, e.to_string());
            return r;
        }
    };
    for calc in &calcs {
        let v = calc.choice().name();
        let compare = |r: &mut Report, name: String, a: &GKirbyDiagram, b: &GKirbyDiagram, relabel: &dyn Fn(&[u32]) -> Vec<u32>| {
            if !affordable(calc, a) || !affordable(calc, b) {
                return;
            }
            let outcome = (|| {
                let ta = table(calc, a).map_err(err)?;
                let tb: BTreeMap<Vec<u32>, CycScalar> = table(calc, b).map_err(err)?.into_iter().map(|(l, x)| (relabel(&l), x)).collect();
                if ta == tb {
                    Ok(format!("{} labelings agree", ta.len()))
                } else {
                    Err(ta.iter().filter(|(l, x)| tb.get(*l) != Some(x)).map(|(l, x)| format!("{l:?}: {x} vs {:?}", tb.get(l).map(|y| y.to_string()))).collect::<Vec<_>>().join("; "))
                }
            })();
            r.record("gk-moves", format!("{v} p={p}: {name}"), outcome);
        };
        let same = |l: &[u32]| l.to_vec();
        for (a, b) in ISOTOPY_PAIRS {
            compare(&mut r, format!("isotopy {a} ~ {b}"), &load(a), &load(b), &same);
        }
        let slide = |l: &[u32]| vec![l[0], (l[0] + l[1]) % 2];
        for (a, b) in SLIDE_PAIRS {
            compare(&mut r, format!("GK1 {a} ~ {b}"), &load(a), &load(b), &slide);
        }
        let extend = |l: &[u32]| l[..l.len() - 1].to_vec();
        for (name, site) in [
            ("plus_one", Gk2Site::Meridian { boundary: 1, strand: 0 }),
            ("hopf", Gk2Site::Meridian { boundary: 2, strand: 1 }),
            ("plus_one", Gk2Site::Disjoint { boundary: 1, position: 1 }),
        ] {
            let d = load(name);
            let s = stabilize_gk2(&d, site).expect("corpus site exists");
            compare(&mut r, format!("GK2 {name} at {site:?}"), &d, &s, &extend);
        }
        let cancel = calc.unrefined(&load("cancel_pair")).map_err(err).and_then(|x| if x.is_one() { Ok("1".to_string()) } else { Err(x.to_string()) });
        r.record("gk-moves", format!("{v} p={p}: GK2 cancel_pair ~ empty"), cancel);
        for name in REVERSAL_CORPUS {
            let d = load(name);
            for c in 0..d.component_count() {
                let rev = reverse_component(&d, c).expect("component exists");
                compare(&mut r, format!("GK3 {name} reversing C{}", c + 1), &d, &rev, &same);
            }
        }
    }
    r
}

/// `Σ_α λ_α(v_α⁻¹) λ_α(v_α) = 1`, from the ribbon values and from the framed unknots.
pub fn stabilization_identity(p: u32) -> Report {
    let mut r = Report::new();
    let outcome = (|| {
        let calc = Calculator::new(VariantChoice::Restricted, p, Mode::GradedInU).map_err(err)?;
        let lv = calc.lambda_v().map_err(err)?;
        let mut from_table = calc.zero();
        for alpha in 0..2 {
            from_table += &(lv.get(-1, alpha) * lv.get(1, alpha));
        }
        let plus = table(&calc, &load("plus_one")).map_err(err)?;
        let minus = table(&calc, &load("minus_one")).map_err(err)?;
        let mut from_beads = calc.zero();
        for (alpha, v) in &plus {
            from_beads += &(v * &minus[alpha]);
        }
        if from_table.is_one() && from_beads.is_one() {
            Ok("both sums are 1".to_string())
        } else {
            Err(format!("from λ(v): {from_table}, from diagrams: {from_beads}"))
        }
    })();
    r.record("stabilization", format!("p={p}"), outcome);
    r
}

/// Decomposition formulas on dotted and dot-free corpus diagrams.
pub fn decompositions(p: u32) -> Report {
    let mut r = Report::new();
    let calc = match Calculator::new(VariantChoice::Restricted, p, Mode::GradedInU) {
        Ok(c) => c,
        Err(e) => {
            r.push("decomposition", format!("engine at p={p}"), false, e.to_string());
            return r;
        }
    };
    for name in DOTTED_CORPUS.iter().chain(DOT_FREE_CORPUS) {
        let d = load(name);
        if !affordable(&calc, &trade_handles(&d).link) {
            continue;
        }
        match decomposition_check(&calc, &d, name) {
            Ok(rep) => r.extend(rep),
            Err(e) => r.push("decomposition", format!("{name} at p={p}"), false, e.to_string()),
        }
    }
    r
}

/// Boundary invariants are unchanged by blowing up and, at `p = 2`, by handle slides.
pub fn boundary_invariance(p: u32) -> Report {
    let mut r = Report::new();
    let calc = match Calculator::new(VariantChoice::Restricted, p, Mode::GradedInU) {
        Ok(c) => c,
        Err(e) => {
            r.push("boundary", format!("engine at p={p}"), false, e.to_string());
            return r;
        }
    };
    let kind = match StructureKind::for_p(p) {
        Ok(k) => k,
        Err(e) => {
            r.push("boundary", format!("p={p}"), false, e.to_string());
            return r;
        }
    };
    let blow_label = if kind == StructureKind::Spin { 1 } else { 0 };
    for name in ["unknot", "plus_one", "hopf", "hopf_01"] {
        let d = load(name);
        let lk = linking_matrix(&d);
        for omega in kind.sublinks(&lk) {
            for sign in [1, -1] {
                let outcome = (|| {
                    let before = boundary_invariant(&calc, &d, &omega, Some(kind)).map_err(err)?;
                    let blown = connected_sum_cp2(&d, sign, GroupElement(vec![])).map_err(err)?;
                    let mut psi = omega.clone();
                    psi.push(blow_label);
                    let after = boundary_invariant(&calc, &blown, &psi, Some(kind)).map_err(err)?;
                    if before.value == after.value {
                        Ok(before.value.to_string())
                    } else {
                        Err(format!("{} before, {} after", before.value, after.value))
                    }
                })();
                let labels: String = omega.iter().map(u32::to_string).collect();
                r.record("boundary", format!("{kind} p={p}: {name} ω={labels} blown up by {sign:+}"), outcome);
            }
        }
    }
    if p == 2 {
        for (a, b) in SLIDE_PAIRS {
            let (da, db) = (load(a), load(b));
            for omega in kind.sublinks(&linking_matrix(&da)) {
                let slid = vec![omega[0], (omega[0] + omega[1]) % 2];
                let outcome = (|| {
                    let x = boundary_invariant(&calc, &da, &omega, Some(kind)).map_err(err)?;
                    let y = boundary_invariant(&calc, &db, &slid, Some(kind)).map_err(err)?;
                    if x.value == y.value {
                        Ok(x.value.to_string())
                    } else {
                        Err(format!("{} vs {}", x.value, y.value))
                    }
                })();
                r.record("boundary", format!("{kind} p={p}: slide {a} ~ {b} ω={omega:?}"), outcome);
            }
        }
    }
    r
}

/// Diagrams used for the rescaling checks.
pub fn rescaling_corpus() -> Vec<(String, GKirbyDiagram)> {
    let union = disjoint_union(&load("hopf"), &load("plus_one_dotted")).expect("same group");
    let mut out: Vec<(String, GKirbyDiagram)> =
        ["unknot", "hopf", "trefoil", "plus_one_dotted", "dot_pierced_twice"].iter().map(|n| (n.to_string(), load(n))).collect();
    out.push(("hopf ⊔ plus_one_dotted".into(), union));
    out
}

/// `J_ξ(W) = ξ^{χ(W)-1} J(W)` for `ξ ∈ {-1, i, i^{p-1}}`.
pub fn rescaling(p: u32) -> Report {
    let mut r = Report::new();
    let calcs = match calculators(p) {
        Ok(c) => c,
        Err(e) => {
            r.push("rescaling", format!("engines at p={p}"), false, e.to_string());
            return r;
        }
    };
    let corpus = rescaling_corpus();
    for calc in &calcs {
        for (xi_name, xi) in default_factors(calc) {
            for (name, d) in &corpus {
                if !affordable(calc, d) || (calc.choice() == VariantChoice::Restricted && p > 2 && d.component_count() > 2) {
                    continue;
                }
                let label = format!("{} {name}", calc.choice().name());
                match rescale_check(calc, d, &label, &xi, &xi_name) {
                    Ok(rep) => r.extend(rep),
                    Err(e) => r.push("rescaling", format!("{label} ξ={xi_name}"), false, e.to_string()),
                }
            }
        }
    }
    let (a, b) = (load("hopf"), load("plus_one_dotted"));
    let u = disjoint_union(&a, &b).expect("same group");
    let lhs = u.euler_characteristic() - 1;
    let rhs = (a.euler_characteristic() - 1) + (b.euler_characteristic() - 1);
    r.push("rescaling", "χ - 1 is additive under boundary connected sum", lhs == rhs, format!("{lhs} = {rhs}"));
    r
}

/// The full suite at one `p`.
///
/// Odd `p` runs only the Gauss sums, the axiom suites and the oracle
/// comparisons.
pub fn verify_suite(p: u32) -> Report {
    let mut r = Report::new();
    r.extend(gauss_sums(p));
    r.extend(axiom_suites(p));
    r.extend(oracle_equivalences(p));
    if p % 2 == 1 {
        return r;
    }
    r.extend(graded_closed_forms(p));
    r.extend(lambda_table(p));
    r.extend(restricted_membership(p));
    r.extend(restricted_vs_small(p));
    r.extend(published_values(p));
    r.extend(gk_moves(p));
    r.extend(stabilization_identity(p));
    r.extend(decompositions(p));
    r.extend(boundary_invariance(p));
    r.extend(rescaling(p));
    r
}
