//! Bose-Einstein condensation in a dimple trap.
//!
//! The trap's spectrum is a harmonic ladder whose ground level sits 2p·(ħω/2)
//! lower, so with the chemical potential pinned at the ground level the
//! excited-level gap of level n is (n+p)·ħω. The critical temperature for N
//! atoms solves N = Σ_{n≥1} 1/(e^{(n+p)βħω} - 1). Everything here is
//! dimensionless: `beta` means ħωβ and temperatures are in units of ħω/k_B.

use crate::error::{Error, Result};

/// Atom number and dimple depth for a critical-temperature calculation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapSpec {
    n_atoms: u64,
    p: f64,
}

impl TrapSpec {
    pub fn new(n_atoms: u64, p: f64) -> Result<Self> {
        if n_atoms < 2 {
            return Err(Error::Domain(format!(
                "atom number must be at least 2, got {n_atoms}"
            )));
        }
        if !p.is_finite() || p < 0.0 {
            return Err(Error::Domain(format!(
                "dimple depth parameter must satisfy p >= 0, got {p}"
            )));
        }
        Ok(TrapSpec { n_atoms, p })
    }

    pub fn n_atoms(&self) -> u64 {
        self.n_atoms
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

/// Which occupation function the root solve uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TcMethod {
    /// Direct sum over excited levels (exact, slower at small beta).
    Sum,
    /// Integral approximation of the sum in closed form.
    ClosedForm,
}

/// Exact excited-level occupation Σ_{n≥1} 1/(e^{(n+p)β} - 1), truncated when
/// a term drops below 1e-16 of the partial sum.
pub fn occupation_sum(beta: f64, p: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::Domain(format!("beta must be positive, got {beta}")));
    }
    if beta < 1e-9 {
        return Err(Error::Range(format!(
            "beta = {beta} below 1e-9: the sum would need more than ~1e10 terms"
        )));
    }
    // Neumaier-compensated accumulation; terms decay like e^{-n·beta}.
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut n = 1u64;
    loop {
        let gap = (n as f64 + p) * beta;
        let term = 1.0 / gap.exp_m1();
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
        // The second branch also ends the fully-underflowed case sum = 0.
        if term < 1e-16 * sum || term == 0.0 {
            return Ok(sum + comp);
        }
        n += 1;
    }
}

/// Closed-form occupation (1/β)·ln[1/(1 - e^{-(p+1)β})].
pub fn occupation_closedform(beta: f64, p: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::Domain(format!("beta must be positive, got {beta}")));
    }
    let gap = (p + 1.0) * beta;
    // ln(1 - e^{-gap}) needs exp_m1 accuracy for small gaps and ln_1p
    // accuracy deep in the tail.
    let ln_depleted = if gap < 0.5 {
        (-(-gap).exp_m1()).ln()
    } else {
        (-(-gap).exp()).ln_1p()
    };
    Ok(-ln_depleted / beta)
}

fn occupation(method: TcMethod, beta: f64, p: f64) -> Result<f64> {
    match method {
        TcMethod::Sum => occupation_sum(beta, p),
        TcMethod::ClosedForm => occupation_closedform(beta, p),
    }
}

const BETA_LO: f64 = 1e-9;
const BETA_HI: f64 = 50.0;

/// Critical temperature in units ħω/k_B: the β solving occupation(β) = N,
/// found by bisection in log-β over [1e-9, 50] to relative tolerance 1e-10.
pub fn critical_temperature(trap: &TrapSpec, method: TcMethod) -> Result<f64> {
    let n = trap.n_atoms as f64;
    let p = trap.p;
    // The occupation is strictly decreasing in beta. Check achievability at
    // the bracket ends; the closed form lower-bounds the sum, so this test
    // is safe for both methods.
    if occupation_closedform(BETA_LO, p)? <= n {
        return Err(Error::Bracket(format!(
            "atom number {n} not reachable for beta >= {BETA_LO}"
        )));
    }
    if occupation(method, BETA_HI, p)? >= n {
        return Err(Error::Bracket(format!(
            "atom number {n} already exceeded at beta = {BETA_HI}"
        )));
    }
    let mut lo = BETA_LO.ln();
    let mut hi = BETA_HI.ln();
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if hi - lo < 1e-10 {
            break;
        }
        if occupation(method, mid.exp(), p)? > n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((-0.5 * (lo + hi)).exp())
}

/// Table of (p, T_c(p)/T_c(0)) at fixed atom number, closed-form method.
pub fn tc_curve(n_atoms: u64, p_values: &[f64]) -> Result<Vec<(f64, f64)>> {
    if p_values.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::Domain("p values must be sorted ascending".into()));
    }
    let base = critical_temperature(&TrapSpec::new(n_atoms, 0.0)?, TcMethod::ClosedForm)?;
    p_values
        .iter()
        .map(|&p| {
            let tc = critical_temperature(&TrapSpec::new(n_atoms, p)?, TcMethod::ClosedForm)?;
            Ok((p, tc / base))
        })
        .collect()
}
