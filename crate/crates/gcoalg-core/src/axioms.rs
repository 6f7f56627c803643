//! Exhaustive checkers for the Hopf, ribbon and unimodular G-coalgebra axioms.
//!
//! Each identity is tested on every basis vector (or pair of basis vectors)
//! of the relevant graded pieces. Identities are evaluated once on the packed
//! tables and the difference is sorted into degree components, so every
//! instance `(α, β, ...)` gets its own verdict.

use std::fmt;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::graded::GradedHopfData;
use crate::tensor::Tensor;

/// Verdict on one axiom instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    /// The identity holds on the whole basis.
    Pass,
    /// The identity fails; the witness names a basis input and a nonzero term of the difference.
    Fail {
        /// Description of the failure.
        witness: String,
    },
    /// The identity cannot be stated for the given data.
    NotApplicable {
        /// Why the instance was skipped.
        reason: String,
    },
}

/// One axiom instance and its verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    /// Short name of the axiom, such as `hopf 4 (counit)`.
    pub axiom: String,
    /// The degree tuple, such as `α=1, β=0`, or `-` for ungraded identities.
    pub instance: String,
    /// The verdict.
    pub outcome: Outcome,
}

impl AxiomCheck {
    /// True unless the instance failed.
    pub fn is_ok(&self) -> bool {
        !matches!(self.outcome, Outcome::Fail { .. })
    }
}

/// The verdicts of one family of axioms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    /// Name of the family (`hopf`, `ribbon` or `unimodular`).
    pub family: String,
    /// One entry per axiom instance.
    pub entries: Vec<AxiomCheck>,
}

impl AxiomReport {
    fn new(family: &str) -> Self {
        AxiomReport { family: family.into(), entries: Vec::new() }
    }

    /// True when no instance failed.
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(AxiomCheck::is_ok)
    }

    /// The failing instances.
    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.entries.iter().filter(|e| !e.is_ok()).collect()
    }

    /// Number of passing instances.
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.outcome == Outcome::Pass).count()
    }

    /// Number of skipped instances.
    pub fn not_applicable(&self) -> usize {
        self.entries.iter().filter(|e| matches!(e.outcome, Outcome::NotApplicable { .. })).count()
    }

    /// Entries whose axiom name starts with `prefix`.
    pub fn axiom(&self, prefix: &str) -> Vec<&AxiomCheck> {
        self.entries.iter().filter(|e| e.axiom.starts_with(prefix)).collect()
    }

    /// Appends the entries of another report.
    pub fn merge(&mut self, other: AxiomReport) {
        self.entries.extend(other.entries);
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match &e.outcome {
                Outcome::Pass => writeln!(f, "PASS {} [{}]", e.axiom, e.instance)?,
                Outcome::Fail { witness } => writeln!(f, "FAIL {} [{}]: {}", e.axiom, e.instance, witness)?,
                Outcome::NotApplicable { reason } => writeln!(f, "N/A  {} [{}]: {}", e.axiom, e.instance, reason)?,
            }
        }
        Ok(())
    }
}

const NAMES: [&str; 4] = ["α", "β", "γ", "δ"];

struct Checker<'a> {
    g: &'a GradedHopfData,
    units: Vec<Tensor>,
    report: AxiomReport,
}

impl<'a> Checker<'a> {
    fn new(g: &'a GradedHopfData, family: &str) -> Self {
        let units = g.group().elements().map(|a| g.unit(a)).collect();
        Checker { g, units, report: AxiomReport::new(family) }
    }

    fn tuples(&self, arity: usize) -> Vec<Vec<usize>> {
        let n = self.g.group().order();
        let mut out = vec![Vec::new()];
        for _ in 0..arity {
            out = out.into_iter().flat_map(|t| (0..n).map(move |a| [t.clone(), vec![a]].concat())).collect();
        }
        out
    }

    fn instance_name(&self, t: &[usize]) -> String {
        if t.is_empty() {
            return "-".into();
        }
        t.iter().enumerate().map(|(i, a)| format!("{}={}", NAMES[i], self.g.group().format_element(*a))).collect::<Vec<_>>().join(", ")
    }

    fn label(&self, x: u32) -> &str {
        &self.g.tables().labels[x as usize]
    }

    fn describe(&self, input: &str, diff: &Tensor) -> String {
        let (k, c) = diff.sorted_terms().into_iter().next().expect("nonzero difference");
        let legs: Vec<&str> = k.iter().map(|x| self.label(*x)).collect();
        format!("{input}: sides differ by {c} * {}", legs.join(" ⊗ "))
    }

    /// Sorts the nonzero components of `diff` into failures keyed by `key(degrees)`.
    fn bucket(
        &self,
        fails: &mut FxHashMap<Vec<usize>, String>,
        input: &str,
        diff: &Tensor,
        key: impl Fn(&[usize]) -> Vec<usize>,
    ) {
        for (ds, part) in self.g.components(diff) {
            let k = key(&ds);
            fails.entry(k).or_insert_with(|| self.describe(input, &part));
        }
    }

    fn record(&mut self, axiom: &str, arity: usize, fails: FxHashMap<Vec<usize>, String>) {
        for t in self.tuples(arity) {
            let outcome = match fails.get(&t) {
                Some(w) => Outcome::Fail { witness: w.clone() },
                None => Outcome::Pass,
            };
            let instance = self.instance_name(&t);
            self.report.entries.push(AxiomCheck { axiom: axiom.into(), instance, outcome });
        }
    }

    fn skip(&mut self, axiom: &str, arity: usize, reason: &str) {
        for t in self.tuples(arity) {
            let instance = self.instance_name(&t);
            self.report.entries.push(AxiomCheck {
                axiom: axiom.into(),
                instance,
                outcome: Outcome::NotApplicable { reason: reason.into() },
            });
        }
    }
}

fn same(d: &[usize]) -> Vec<usize> {
    d.to_vec()
}

/// Checks the nine Hopf G-coalgebra axioms on every basis vector.
pub fn check_hopf_axioms(g: &GradedHopfData) -> AxiomReport {
    let mut c = Checker::new(g, "hopf");
    let h = g.tables();
    let dim = h.dim() as u32;
    let grp = g.group();
    let basis: Vec<Tensor> = (0..dim).map(|x| h.basis_element(x)).collect();
    let products: Vec<Vec<Tensor>> =
        (0..dim).map(|x| (0..dim).map(|y| g.product(x, y)).collect()).collect();
    let times = |t: &Tensor, z: u32, left: bool| {
        let mut out = Tensor::zero(1);
        for (k, s) in t.iter() {
            let p = if left { &products[k[0] as usize][z as usize] } else { &products[z as usize][k[0] as usize] };
            out.add_scaled(p, s);
        }
        out
    };

    let mut fails = FxHashMap::default();
    for a in grp.elements() {
        let b = g.basis(a);
        'outer: for &x in &b {
            for &y in &b {
                let xy = &products[x as usize][y as usize];
                for &z in &b {
                    let yz = &products[y as usize][z as usize];
                    if xy.is_zero() && yz.is_zero() {
                        continue;
                    }
                    let diff = times(xy, z, true).minus(&times(yz, x, false));
                    if !diff.is_zero() {
                        let input = format!("({} {}) {}", c.label(x), c.label(y), c.label(z));
                        c.bucket(&mut fails, &input, &diff, same);
                        break 'outer;
                    }
                }
            }
        }
    }
    c.record("hopf 1 (associativity)", 1, fails);

    let mut fails = FxHashMap::default();
    for x in 0..dim {
        let a = g.degree(x);
        let u = &c.units[a];
        for diff in [h.mul(u, &basis[x as usize]).minus(&basis[x as usize]), h.mul(&basis[x as usize], u).minus(&basis[x as usize])] {
            if !diff.is_zero() {
                fails.entry(vec![a]).or_insert_with(|| c.describe(c.label(x), &diff));
            }
        }
    }
    c.record("hopf 2 (unit)", 1, fails);

    let coproducts: Vec<Tensor> = (0..dim).map(|x| h.coproduct[x as usize].clone()).collect();
    let mut fails = FxHashMap::default();
    for x in 0..dim {
        let d = &coproducts[x as usize];
        let diff = h.coproduct_on(d, 0).minus(&h.coproduct_on(d, 1));
        c.bucket(&mut fails, c.label(x), &diff, same);
    }
    c.record("hopf 3 (coassociativity)", 3, fails);

    let mut fails = FxHashMap::default();
    for x in 0..dim {
        let a = g.degree(x);
        let d = &coproducts[x as usize];
        let left = g.component(d, &[0, a]);
        let right = g.component(d, &[a, 0]);
        for diff in [h.counit_on(&left, 0).minus(&basis[x as usize]), h.counit_on(&right, 1).minus(&basis[x as usize])] {
            if !diff.is_zero() {
                fails.entry(vec![a]).or_insert_with(|| c.describe(c.label(x), &diff));
            }
        }
    }
    c.record("hopf 4 (counit)", 1, fails);

    let mut fails: FxHashMap<Vec<usize>, String> = FxHashMap::default();
    for x in 0..dim {
        for y in 0..dim {
            if g.degree(x) != g.degree(y) {
                continue;
            }
            let xy = &products[x as usize][y as usize];
            let lhs = h.delta(xy);
            let rhs = h.mul(&coproducts[x as usize], &coproducts[y as usize]);
            let diff = lhs.minus(&rhs);
            if !diff.is_zero() {
                let input = format!("{} * {}", c.label(x), c.label(y));
                c.bucket(&mut fails, &input, &diff, same);
            }
        }
    }
    c.record("hopf 5 (multiplicativity of coproduct)", 2, fails);

    let mut fails = FxHashMap::default();
    let zero_basis = g.basis(0);
    for &x in &zero_basis {
        for &y in &zero_basis {
            let lhs = h.epsilon(&products[x as usize][y as usize]);
            let rhs = g.counit(x) * g.counit(y);
            if lhs != rhs {
                fails.entry(Vec::new()).or_insert_with(|| format!("{} * {}: {} vs {}", c.label(x), c.label(y), lhs, rhs));
            }
        }
    }
    c.record("hopf 6 (multiplicativity of counit)", 0, fails);

    let mut fails = FxHashMap::default();
    let lhs = h.delta(&h.unit);
    let rhs = h.unit.outer(&h.unit);
    c.bucket(&mut fails, "unit", &lhs.minus(&rhs), same);
    c.record("hopf 7 (coproduct of unit)", 2, fails);

    let mut fails = FxHashMap::default();
    let e = h.epsilon(&c.units[0]);
    if !e.is_one() {
        fails.insert(Vec::new(), format!("counit of the unit of degree 0 is {e}"));
    }
    c.record("hopf 8 (counit of unit)", 0, fails);

    let mut fails = FxHashMap::default();
    for &x in &zero_basis {
        let eps = g.counit(x);
        for a in grp.elements() {
            let na = grp.neg(a);
            let rhs = c.units[a].scale(&eps);
            let left = h.multiply_legs(&h.antipode_on(&g.coproduct(na, a, x), 0));
            let right = h.multiply_legs(&h.antipode_on(&g.coproduct(a, na, x), 1));
            for diff in [left.minus(&rhs), right.minus(&rhs)] {
                if !diff.is_zero() {
                    fails.entry(vec![a]).or_insert_with(|| c.describe(c.label(x), &diff));
                }
            }
        }
    }
    c.record("hopf 9 (antipode)", 1, fails);
    c.report
}

/// Checks the seven ribbon axioms together with centrality and invertibility
/// of `v`, and the pivotal relation `g_α v_α = u_α`.
///
/// Data without an R-matrix skip the axioms that mention `R`; the inverse
/// M-matrix then comes from the stored one and `u_α` is taken to be `g_α v_α`.
pub fn check_ribbon_axioms(g: &GradedHopfData) -> AxiomReport {
    let mut c = Checker::new(g, "ribbon");
    let h = g.tables();
    let dim = h.dim() as u32;
    let grp = g.group();
    let Some(v) = h.ribbon.clone() else {
        for (name, arity) in RIBBON_AXIOMS {
            c.skip(name, arity, "no ribbon element");
        }
        return c.report;
    };
    let r = h.r_matrix.clone();
    let one = h.unit.clone();

    if let Some(r) = &r {
        let mut fails = FxHashMap::default();
        for x in 0..dim {
            let d = &h.coproduct[x as usize];
            let diff = h.mul(r, d).minus(&h.mul(&d.permute(&[1, 0]), r));
            c.bucket(&mut fails, c.label(x), &diff, same);
        }
        c.record(RIBBON_AXIOMS[0].0, 2, fails);

        let r12 = r.outer(&one);
        let r13 = r12.permute(&[0, 2, 1]);
        let r23 = one.outer(r);
        let mut fails = FxHashMap::default();
        c.bucket(&mut fails, "R", &h.coproduct_on(r, 1).minus(&h.mul(&r13, &r12)), same);
        c.record(RIBBON_AXIOMS[1].0, 3, fails);
        let mut fails = FxHashMap::default();
        c.bucket(&mut fails, "R", &h.coproduct_on(r, 0).minus(&h.mul(&r13, &r23)), same);
        c.record(RIBBON_AXIOMS[2].0, 3, fails);
    } else {
        for (name, arity) in &RIBBON_AXIOMS[..3] {
            c.skip(name, *arity, "no R-matrix");
        }
    }

    let u = match (&r, &h.pivotal) {
        (Some(_), _) => h.drinfeld_element().ok(),
        (None, Some(piv)) => Some(h.mul(piv, &v)),
        (None, None) => None,
    };
    match &u {
        Some(u) => {
            let mut fails = FxHashMap::default();
            let diff = h.mul(&v, &v).minus(&h.mul(u, &h.antipode_on(u, 0)));
            c.bucket(&mut fails, "v", &diff, same);
            let name = if r.is_some() { RIBBON_AXIOMS[3].0.to_string() } else { format!("{} with u = g v", RIBBON_AXIOMS[3].0) };
            c.record(&name, 1, fails);
        }
        None => c.skip(RIBBON_AXIOMS[3].0, 1, "no R-matrix or pivotal element"),
    }

    let m_minus = match &r {
        Some(r) => {
            let a = h.antipode_on(r, 0);
            let b = h.antipode_on(&r.permute(&[1, 0]), 1);
            Some(h.mul(&a, &b))
        }
        None => h.m_minus.clone(),
    };
    match &m_minus {
        Some(m) => {
            let mut fails = FxHashMap::default();
            let diff = h.delta(&v).minus(&h.mul(&v.outer(&v), m));
            c.bucket(&mut fails, "v", &diff, same);
            c.record(RIBBON_AXIOMS[4].0, 2, fails);
        }
        None => c.skip(RIBBON_AXIOMS[4].0, 2, "no R-matrix or inverse M-matrix"),
    }

    let mut fails = FxHashMap::default();
    let e = h.epsilon(&g.component(&v, &[0]));
    if !e.is_one() {
        fails.insert(Vec::new(), format!("counit of v in degree 0 is {e}"));
    }
    c.record(RIBBON_AXIOMS[5].0, 0, fails);

    let mut fails = FxHashMap::default();
    c.bucket(&mut fails, "v", &h.antipode_on(&v, 0).minus(&v), |d| vec![grp.neg(d[0])]);
    c.record(RIBBON_AXIOMS[6].0, 1, fails);

    let mut fails = FxHashMap::default();
    for x in 0..dim {
        let b = h.basis_element(x);
        let diff = h.mul(&v, &b).minus(&h.mul(&b, &v));
        c.bucket(&mut fails, c.label(x), &diff, same);
    }
    c.record(RIBBON_AXIOMS[7].0, 1, fails);

    match &h.ribbon_inverse {
        Some(vi) => {
            let mut fails = FxHashMap::default();
            c.bucket(&mut fails, "v v^-1", &h.mul(&v, vi).minus(&one), same);
            c.bucket(&mut fails, "v^-1 v", &h.mul(vi, &v).minus(&one), same);
            c.record(RIBBON_AXIOMS[8].0, 1, fails);
        }
        None => c.skip(RIBBON_AXIOMS[8].0, 1, "no inverse ribbon element"),
    }

    match (&h.pivotal, &r, &u) {
        (Some(piv), Some(_), Some(u)) => {
            let mut fails = FxHashMap::default();
            c.bucket(&mut fails, "g", &h.mul(piv, &v).minus(u), same);
            c.record(RIBBON_AXIOMS[9].0, 1, fails);
        }
        (None, _, _) => c.skip(RIBBON_AXIOMS[9].0, 1, "no pivotal element"),
        _ => c.skip(RIBBON_AXIOMS[9].0, 1, "no R-matrix to define u"),
    }
    c.report
}

const RIBBON_AXIOMS: [(&str, usize); 10] = [
    ("ribbon 1 (quasi-cocommutativity)", 2),
    ("ribbon 2 ((id ⊗ Δ)R = R13 R12)", 3),
    ("ribbon 3 ((Δ ⊗ id)R = R13 R23)", 3),
    ("ribbon 4 (v² = u S(u))", 1),
    ("ribbon 5 (coproduct of v)", 2),
    ("ribbon 6 (counit of v)", 0),
    ("ribbon 7 (S(v_α) = v_-α)", 1),
    ("ribbon centrality of v", 1),
    ("ribbon invertibility of v", 1),
    ("ribbon pivotal g v = u", 1),
];

/// Checks the two unimodularity axioms and the normalization `λ(Λ) = 1`.
pub fn check_unimodular_axioms(g: &GradedHopfData) -> AxiomReport {
    let mut c = Checker::new(g, "unimodular");
    let h = g.tables();
    let dim = h.dim() as u32;
    let grp = g.group();
    let (Some(lam), Some(cl)) = (h.integral.clone(), h.cointegral.clone()) else {
        c.skip("unimodular 1 (left integral)", 2, "no integral or cointegral");
        c.skip("unimodular 2 (two-sided cointegral)", 0, "no integral or cointegral");
        c.skip("unimodular normalization λ(Λ) = 1", 0, "no integral or cointegral");
        return c.report;
    };
    let mut fails = FxHashMap::default();
    for x in 0..dim {
        let gamma = g.degree(x);
        let lx = &lam[x as usize];
        for a in grp.elements() {
            let b = grp.sub(gamma, a);
            let part = h.coproduct[x as usize]
                .filter(|k| g.degree(k[0]) == a && g.degree(k[1]) == b)
                .contract_leg(1, |y| lam[y as usize].clone());
            let diff = part.minus(&c.units[a].scale(lx));
            if !diff.is_zero() {
                fails.entry(vec![a, b]).or_insert_with(|| c.describe(c.label(x), &diff));
            }
        }
    }
    c.record("unimodular 1 (left integral)", 2, fails);

    let mut fails = FxHashMap::default();
    for x in g.basis(0) {
        let b = h.basis_element(x);
        let rhs = cl.scale(&g.counit(x));
        for diff in [h.mul(&b, &cl).minus(&rhs), h.mul(&cl, &b).minus(&rhs)] {
            if !diff.is_zero() {
                fails.entry(Vec::new()).or_insert_with(|| c.describe(c.label(x), &diff));
            }
        }
    }
    c.record("unimodular 2 (two-sided cointegral)", 0, fails);

    let mut fails = FxHashMap::default();
    let val = h.lambda(&cl).expect("integral present");
    if !val.is_one() {
        fails.insert(Vec::new(), format!("λ(Λ) = {val}"));
    }
    c.record("unimodular normalization λ(Λ) = 1", 0, fails);
    c.report
}

/// Runs all three checkers.
pub fn check_all(g: &GradedHopfData) -> AxiomReport {
    let mut r = check_hopf_axioms(g);
    r.merge(check_ribbon_axioms(g));
    r.merge(check_unimodular_axioms(g));
    r.family = "all".into();
    r
}
