//! Log-gamma and the skew-parameter boundary `s_max`.

use crate::error::{Error, Result};

// Lanczos approximation, g = 7, n = 9 (Godfrey coefficients).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

const HALF_LN_2PI: f64 = 0.91893853320467274178; // ln(2*pi)/2

fn lanczos_sum(x: f64) -> f64 {
    let mut sum = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS[1..].iter().enumerate() {
        sum += c / (x + (i + 1) as f64);
    }
    sum
}

/// `ln Γ(x)` for `x > 0`. Relative error stays below 1e-13 on `[0.5, 200]`
/// (absolute near the zeros at x = 1, 2).
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    if x < 0.5 {
        // ln Γ(x) = ln Γ(x+1) - ln x
        return Ok(log_gamma(x + 1.0)? - x.ln());
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    Ok(HALF_LN_2PI + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln())
}

/// Largest admissible skew magnitude `2 Γ(p/2+1) / Γ((p+1)/2)` for `p > -1`.
pub fn s_max(p: f64) -> Result<f64> {
    if !(p > -1.0) {
        return Err(Error::Domain(format!("s_max requires p > -1, got {p}")));
    }
    Ok(2.0 * (log_gamma(p / 2.0 + 1.0)? - log_gamma((p + 1.0) / 2.0)?).exp())
}
