//! Decomposition formulas: trading 1-handles, and splitting the invariant
//! over structures on the boundary.

use std::collections::BTreeMap;

use cyclo_field::CycScalar;
use diagram::{linking_matrix, trade_handles, GKirbyDiagram, TradedHandles};

use crate::boundary::{normalization, StructureKind};
use crate::calc::{Calculator, VariantChoice};
use crate::error::CliError;
use crate::report::Report;

fn fmt_labels(l: &[u32]) -> String {
    l.iter().map(u32::to_string).collect()
}

/// Label vectors of the traded link that restrict to `omega` on the kept components.
fn extensions(traded: &TradedHandles, omega: &[u32]) -> Vec<Vec<u32>> {
    let n = traded.link.component_count();
    let k = traded.fresh.len();
    (0..1u32 << k)
        .map(|bits| {
            let mut psi = vec![0; n];
            for (old, &new) in traded.kept.iter().enumerate() {
                psi[new] = omega[old];
            }
            for (j, &new) in traded.fresh.iter().enumerate() {
                psi[new] = (bits >> j) & 1;
            }
            psi
        })
        .collect()
}

fn sum<'a>(zero: &CycScalar, values: impl IntoIterator<Item = &'a CycScalar>) -> CycScalar {
    let mut s = zero.clone();
    for v in values {
        s += v;
    }
    s
}

/// Checks `J(W, ω) = Σ_ψ J(E, ψ)` over extensions `ψ` of `ω` to the traded
/// link, for every `ω`, and the unrefined version.
///
/// The identity needs a factorizable algebra, so it is checked for `U` only.
pub fn general_decomposition(calc: &Calculator, d: &GKirbyDiagram, name: &str) -> Result<Report, CliError> {
    let mut report = Report::new();
    if calc.choice() != VariantChoice::Restricted {
        return Ok(report);
    }
    let traded = trade_handles(d);
    let w: BTreeMap<Vec<u32>, CycScalar> = calc.refined_table(d)?.into_iter().collect();
    let e: BTreeMap<Vec<u32>, CycScalar> = calc.refined_table(&traded.link)?.into_iter().collect();
    let zero = calc.zero();
    for (omega, lhs) in &w {
        let rhs = sum(&zero, extensions(&traded, omega).iter().map(|psi| &e[psi]));
        report.expect_eq("general-decomposition", format!("{name} ω={}", fmt_labels(omega)), lhs, &rhs);
    }
    let lhs = sum(&zero, w.values());
    let rhs = sum(&zero, e.values());
    report.expect_eq("general-decomposition", format!("{name} unrefined"), &lhs, &rhs);
    Ok(report)
}

/// Checks the spin (`p ≡ 0 mod 4`) or cohomological (`p ≡ 2 mod 4`)
/// decomposition of `J(W, ω)` and `J(W)`, and that `J(E, ψ)` vanishes on
/// sublinks that are not characteristic (respectively even).
pub fn structure_decomposition(calc: &Calculator, d: &GKirbyDiagram, name: &str) -> Result<Report, CliError> {
    let mut report = Report::new();
    if calc.choice() != VariantChoice::Restricted {
        return Ok(report);
    }
    let kind = StructureKind::for_p(calc.p())?;
    let group = match kind {
        StructureKind::Spin => "spin-decomposition",
        StructureKind::Cohomological => "cohomological-decomposition",
    };
    let traded = trade_handles(d);
    let lk = linking_matrix(&traded.link);
    let sigma = lk.signature();
    let table = calc.lambda_v()?;
    let minus = table.get(-1, kind.degree()).pow(sigma)?;
    let plus = normalization(calc, kind, sigma)?;
    let w: BTreeMap<Vec<u32>, CycScalar> = calc.refined_table(d)?.into_iter().collect();
    let e: BTreeMap<Vec<u32>, CycScalar> = calc.refined_table(&traded.link)?.into_iter().collect();
    let boundary = |psi: &Vec<u32>| &plus * &e[psi];
    let zero = calc.zero();
    let mut total = zero.clone();
    for (omega, lhs) in &w {
        let structures: Vec<CycScalar> =
            extensions(&traded, omega).iter().filter(|psi| kind.admits(&lk, psi)).map(boundary).collect();
        let rhs = &minus * &sum(&zero, &structures);
        total += &rhs;
        report.expect_eq(group, format!("{name} ω={}", fmt_labels(omega)), lhs, &rhs);
    }
    report.expect_eq(group, format!("{name} unrefined"), &sum(&zero, w.values()), &total);
    let all_structures: Vec<CycScalar> = kind.sublinks(&lk).iter().map(boundary).collect();
    report.expect_eq(group, format!("{name} unrefined over all structures"), &total, &(&minus * &sum(&zero, &all_structures)));
    for (psi, v) in &e {
        if !kind.admits(&lk, psi) {
            report.push("vanishing", format!("{name} traded ψ={}", fmt_labels(psi)), v.is_zero(), v.to_string());
        }
    }
    Ok(report)
}

/// Every decomposition check that applies to `d` at the calculator's `p`.
pub fn decomposition_check(calc: &Calculator, d: &GKirbyDiagram, name: &str) -> Result<Report, CliError> {
    let mut report = general_decomposition(calc, d, name)?;
    if calc.p() % 2 == 0 {
        report.extend(structure_decomposition(calc, d, name)?);
    }
    Ok(report)
}
