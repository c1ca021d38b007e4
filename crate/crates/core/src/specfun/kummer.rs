//! Confluent hypergeometric function Φ(a,c;z) = Σ (a)ₙ/(c)ₙ · zⁿ/n!.
//!
//! The production path (`kummer_m`) sums the series in scaled `f64`
//! arithmetic; every call site has a > 0, c > 0, z ≥ 0, so all terms are
//! positive and nothing cancels. The transformation diagnostic needs the
//! alternating series at -z, which is summed exactly in fixed point instead.

use crate::bigfixed::{exp_fixed, BigFixed};
use crate::error::{Error, Result};
use crate::scaled::ScaledReal;
use crate::specfun::gamma::log_gamma;

/// Terms are cut once `|term| / |sum| < SERIES_TOL` past the series peak.
const SERIES_TOL: f64 = 1e-17;
const SERIES_CAP: usize = 2000;

/// Arguments of the confluent hypergeometric equation.
///
/// `c` must not be a non-positive integer (poles of the series).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerArgs {
    pub a: f64,
    pub c: f64,
    pub z: f64,
}

impl KummerArgs {
    pub fn new(a: f64, c: f64, z: f64) -> Result<Self> {
        if !(a.is_finite() && c.is_finite() && z.is_finite()) {
            return Err(Error::Domain("Kummer arguments must be finite".into()));
        }
        if c <= 0.0 && c.fract() == 0.0 {
            return Err(Error::Domain(format!(
                "c must not be a non-positive integer, got {c}"
            )));
        }
        Ok(KummerArgs { a, c, z })
    }
}

/// Positive-term series in scaled f64: returns `(mantissa_sum, ln_scale)`
/// with the value equal to `mantissa_sum * exp(ln_scale)`.
fn series_scaled(a: f64, c: f64, z: f64) -> Result<(f64, f64)> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut ln_scale = 0.0f64;
    // Past this index the term ratio (a+n)z/((c+n)(n+1)) is safely below 1.
    let peak = z + (a - c).max(0.0);
    for n in 0..SERIES_CAP {
        let nf = n as f64;
        term *= (a + nf) * z / ((c + nf) * (nf + 1.0));
        sum += term;
        if (nf + 1.0) >= peak && term < SERIES_TOL * sum {
            return Ok((sum, ln_scale));
        }
        if sum > 1e250 {
            let down = (2.0f64).powi(-512);
            sum *= down;
            term *= down;
            ln_scale += 512.0 * std::f64::consts::LN_2;
        }
    }
    Err(Error::Convergence(format!(
        "Kummer series did not converge within {SERIES_CAP} terms (a={a}, c={c}, z={z})"
    )))
}

/// Φ(a,c;z) for a > 0, c > 0, z ≥ 0 as a [`ScaledReal`] (always positive).
///
/// Relative error ≤ 1e-12 for z ≤ 200 with the library's argument ranges.
pub fn kummer_m(args: &KummerArgs) -> Result<ScaledReal> {
    let KummerArgs { a, c, z } = *args;
    if !(a > 0.0 && c > 0.0) {
        return Err(Error::Domain(format!(
            "kummer_m requires a > 0 and c > 0, got a={a}, c={c}"
        )));
    }
    if z < 0.0 {
        return Err(Error::Domain(
            "kummer_m requires z >= 0 (alternating arguments are unsupported here)".into(),
        ));
    }
    let (sum, ln_scale) = series_scaled(a, c, z)?;
    Ok(ScaledReal::compose(1, sum.ln() + ln_scale))
}

/// dΦ/dz = (a/c) Φ(a+1, c+1; z).
pub fn kummer_m_deriv(args: &KummerArgs) -> Result<ScaledReal> {
    let shifted = KummerArgs::new(args.a + 1.0, args.c + 1.0, args.z)?;
    Ok(kummer_m(&shifted)?.mul(ScaledReal::from_f64(args.a / args.c)))
}

/// Leading large-z behaviour `Γ(c)/Γ(a) · e^z · z^(a-c)`.
///
/// Diagnostic only: used by tests probing tail shapes and the skew boundary,
/// never as an evaluation path.
pub fn kummer_m_asymptotic(args: &KummerArgs) -> Result<ScaledReal> {
    let KummerArgs { a, c, z } = *args;
    if !(a > 0.0 && c > 0.0 && z > 0.0) {
        return Err(Error::Domain(
            "asymptotic form needs a > 0, c > 0, z > 0".into(),
        ));
    }
    let ln = log_gamma(c)? - log_gamma(a)? + z + (a - c) * z.ln();
    Ok(ScaledReal::compose(1, ln))
}

/// Exact fixed-point series Σ (a)ₙ/(c)ₙ zⁿ/n! for half-integer `2c = two_c`.
///
/// `z` may be negative (alternating sum). `a` arrives as a fixed-point value
/// so callers can build exactly related parameter offsets (a+1/2, a+1, …);
/// every series factor is then applied exactly and cancellation costs no
/// precision beyond the 2^-192 truncation floor.
pub(crate) fn kummer_series_fixed(a: &BigFixed, two_c: u64, z: f64) -> Result<BigFixed> {
    let a_hint = a.to_f64();
    let mut term = BigFixed::one();
    let mut sum = BigFixed::one();
    let floor = BigFixed::from_f64(1e-45);
    let az = z.abs();
    for n in 0..(SERIES_CAP as u64) {
        let a_plus_n = a.add(&BigFixed::from_u64(n));
        // t_{n+1} = t_n * (a+n) * 2z / ((2c+2n)(n+1)); 2z and the shift by 2
        // are exact, the divisors are machine words.
        term = term
            .mul(&a_plus_n)
            .mul_f64(2.0 * z)
            .div_u64(two_c + 2 * n)
            .div_u64(n + 1);
        sum = sum.add(&term);
        if (n + 1) as f64 >= az + (a_hint - two_c as f64 / 2.0).max(0.0)
            && floor.abs_gt(&term.abs())
        {
            return Ok(sum);
        }
    }
    Err(Error::Convergence(format!(
        "fixed-point Kummer series did not converge (a={a_hint}, 2c={two_c}, z={z})"
    )))
}

/// Relative residual of the transformation Φ(a,c;-z) = e^(-z) Φ(c-a,c;z).
///
/// Returns `|Φ(a,c;-z) - e^(-z)Φ(c-a,c;z)| / |e^(-z)Φ(c-a,c;z)|`.
///
/// The left side alternates with terms up to ~e^z·poly(z) while the value is
/// only ~z^(-a); it is summed in exact fixed point. The right side is summed
/// through the production `kummer_m` path whenever its parameters are in
/// range (c > a), so the residual genuinely cross-checks that path.
pub fn kummer_transform_check(a: f64, c: f64, z: f64) -> Result<f64> {
    if !(a.is_finite() && z.is_finite()) || z < 0.0 || z > 80.0 {
        return Err(Error::Domain(
            "transform check requires finite a and 0 <= z <= 80".into(),
        ));
    }
    let two_c = 2.0 * c;
    if !(two_c > 0.0 && two_c.fract() == 0.0 && two_c <= 1e6) {
        return Err(Error::Domain(format!(
            "transform check supports positive integer or half-integer c, got {c}"
        )));
    }
    let two_c = two_c as u64;
    if z == 0.0 {
        return Ok(0.0);
    }

    let lhs = kummer_series_fixed(&BigFixed::from_f64(a), two_c, -z)?;
    if c - a > 0.0 {
        let rhs = kummer_m(&KummerArgs::new(c - a, c, z)?)?
            .scale_exp(-z)
            .to_f64();
        Ok((lhs.to_f64() - rhs).abs() / rhs.abs())
    } else {
        // Compare lhs * e^z against Φ(c-a,c;z), the same ratio with both
        // sides scaled by e^z > 0.
        let c_minus_a = BigFixed::from_f64(c).sub(&BigFixed::from_f64(a));
        let rhs = kummer_series_fixed(&c_minus_a, two_c, z)?;
        let num = lhs.mul(&exp_fixed(z)).sub(&rhs);
        Ok((num.to_f64() / rhs.to_f64()).abs())
    }
}
