//! Behaviour of the invariant when the integral is rescaled.
//!
//! Replacing `λ` by `ξλ` and `Λ` by `ξ⁻¹Λ` multiplies the invariant of `W`
//! by `ξ^{χ(W) - 1}`.

use cyclo_field::CycScalar;
use diagram::GKirbyDiagram;

use crate::calc::Calculator;
use crate::error::CliError;
use crate::report::Report;

/// Parses `1`, `-1`, `i`, `-i`, `i^k` or `z^k`, where `z` generates the
/// roots of unity of the coefficient field.
pub fn parse_scalar(calc: &Calculator, text: &str) -> Result<CycScalar, CliError> {
    let t = text.trim();
    let bad = || CliError::BadScalar(text.to_string());
    let exponent = |s: &str| s.parse::<i64>().map_err(|_| bad());
    let n = calc.engine().algebra().field_order();
    match t {
        "1" => Ok(calc.one()),
        "-1" => Ok(-&calc.one()),
        "i" => Ok(calc.i_pow(1)),
        "-i" => Ok(calc.i_pow(3)),
        _ => {
            if let Some(k) = t.strip_prefix("i^") {
                Ok(calc.i_pow(exponent(k)?))
            } else if let Some(k) = t.strip_prefix("z^") {
                Ok(CycScalar::zeta_pow(n, exponent(k)?))
            } else {
                Err(bad())
            }
        }
    }
}

/// The factors `-1`, `i` and `i^{p-1}` used by default.
pub fn default_factors(calc: &Calculator) -> Vec<(String, CycScalar)> {
    let p = calc.p() as i64;
    vec![("-1".into(), -&calc.one()), ("i".into(), calc.i_pow(1)), (format!("i^{}", p - 1), calc.i_pow(p - 1))]
}

/// Compares the rescaled invariants of `d` with `ξ^{χ-1}` times the original
/// ones, refined and unrefined.
pub fn rescale_check(calc: &Calculator, d: &GKirbyDiagram, name: &str, xi: &CycScalar, xi_name: &str) -> Result<Report, CliError> {
    let scaled = calc.rescaled(xi)?;
    let factor = xi.pow(d.euler_characteristic() - 1)?;
    let mut report = Report::new();
    let before = calc.refined_table(d)?;
    let after = scaled.refined_table(d)?;
    let mut total_before = calc.zero();
    let mut total_after = calc.zero();
    for ((omega, b), (_, a)) in before.iter().zip(&after) {
        total_before += b;
        total_after += a;
        let labels: String = omega.iter().map(u32::to_string).collect();
        report.expect_eq("rescaling", format!("{name} ξ={xi_name} ω={labels}"), a, &(b * &factor));
    }
    report.expect_eq("rescaling", format!("{name} ξ={xi_name} unrefined"), &total_after, &(&total_before * &factor));
    Ok(report)
}
