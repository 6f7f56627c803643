//! Machine-readable and text output of invariant computations.

use cyclo_field::CycScalar;
use serde::Serialize;

/// One computed invariant, in the JSON layout of the tool.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantOutput {
    /// The parameter `p`.
    pub p: u32,
    /// `restricted` or `small`.
    pub variant: String,
    /// `refined`, `unrefined`, `boundary-spin` or `boundary-coh`.
    pub mode: String,
    /// The label vector or sublink, when one applies.
    pub omega: Option<Vec<u32>>,
    /// The exact value in canonical form.
    pub value_exact: String,
    /// Real and imaginary parts of the value.
    pub value_approx: [f64; 2],
    /// Signature of the diagram after trading 1-handles.
    pub sigma: i64,
    /// Euler characteristic of the 2-handlebody.
    pub chi: i64,
    /// Notes about the computation.
    pub diagnostics: Vec<String>,
}

/// Floating-point approximation of an exact value.
pub fn approx(x: &CycScalar) -> [f64; 2] {
    let ((re, im), _) = x.to_complex_with_error();
    let clean = |v: f64| if v.abs() < 1e-12 { 0.0 } else { v };
    [clean(re), clean(im)]
}

impl InvariantOutput {
    /// Pretty-printed JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Human-readable text.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} invariant, {} quantum group, p = {}\n", self.mode, self.variant, self.p);
        if let Some(omega) = &self.omega {
            out.push_str(&format!("omega: {}\n", omega.iter().map(u32::to_string).collect::<Vec<_>>().join(",")));
        }
        out.push_str(&format!("value: {}\n", self.value_exact));
        out.push_str(&format!("approx: {:.12} {:+.12}i\n", self.value_approx[0], self.value_approx[1]));
        out.push_str(&format!("sigma: {}\nchi: {}\n", self.sigma, self.chi));
        for d in &self.diagnostics {
            out.push_str(&format!("note: {d}\n"));
        }
        out
    }
}
