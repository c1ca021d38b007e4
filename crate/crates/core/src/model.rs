//! Analytic construction of the partner-potential family.
//!
//! A nodeless seed solution φ(x) = [Φ₁ + s·x·Φ₂]·e^{-x²/2} of the harmonic
//! Schrödinger equation at pseudo-energy λ = -(2p+1) generates a
//! superpotential W = φ'/φ, the partner potential V = 2W² - x² - 4p, and the
//! full normalized eigenbasis. The spectrum is the oscillator ladder
//! {3, 5, 7, …} plus a ground level at 1 - 2p that tunes with p; the skew
//! parameter deforms the potential without moving any level.

use crate::error::{Error, Result};
use crate::scaled::ScaledReal;
use crate::specfun::{hermite_poly, kummer_m, log_gamma, s_max, KummerArgs};

/// Highest supported excited-state index (Hermite overflow guard).
pub const MAX_LEVEL: i32 = 30;

const SQRT_PI: f64 = 1.7724538509055160273;

/// Family coordinates: depth parameter `p > -1` and rescaled skew
/// `|s_hat| < 1` (so the valid domain is a fixed box for every p).
///
/// Raw skew `s_raw = s_hat * s_max(p)` appears only inside formulas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartnerParams {
    p: f64,
    s_hat: f64,
    s_raw: f64,
    s_max: f64,
}

impl PartnerParams {
    pub fn new(p: f64, s_hat: f64) -> Result<Self> {
        if !p.is_finite() || !(p > -1.0) {
            return Err(Error::Domain(format!(
                "depth parameter must satisfy p > -1, got {p}"
            )));
        }
        if !s_hat.is_finite() || s_hat.abs() >= 1.0 {
            return Err(Error::Domain(format!(
                "rescaled skew must satisfy |s_hat| < 1, got {s_hat}"
            )));
        }
        let s_max = s_max(p)?;
        Ok(PartnerParams {
            p,
            s_hat,
            s_raw: s_hat * s_max,
            s_max,
        })
    }

    /// Even member of the family (s = 0).
    pub fn symmetric(p: f64) -> Result<Self> {
        Self::new(p, 0.0)
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn s_hat(&self) -> f64 {
        self.s_hat
    }

    pub fn s_raw(&self) -> f64 {
        self.s_raw
    }

    pub fn s_max(&self) -> f64 {
        self.s_max
    }

    /// Pseudo-energy of the seed solution, λ = -(2p+1); automatically below
    /// the oscillator ground level for p > -1.
    pub fn lambda(&self) -> f64 {
        -(2.0 * self.p + 1.0)
    }
}

/// The e^{+x²/2}-scaled seed ξ(x) and its derivative ξ'(x), where
/// φ(x) = ξ(x) e^{-x²/2}.
///
/// ξ  = Φ₁ + s x Φ₂
/// ξ' = 2(p+1)x Φ₃ + s Φ₂ + (2/3)(p+2) s x² Φ₄
///
/// with Φ₁ = Φ((p+1)/2, 1/2; x²), Φ₂ = Φ(p/2+1, 3/2; x²),
/// Φ₃ = Φ((p+3)/2, 3/2; x²), Φ₄ = Φ(p/2+2, 5/2; x²); ξ' comes from
/// term-wise differentiation via dΦ/dz = (a/c)Φ(a+1,c+1;z).
fn seed_xi(params: &PartnerParams, x: f64) -> ScaledReal {
    let p = params.p;
    let s = params.s_raw;
    let z = x * x;
    let phi1 = kummer_m(&KummerArgs {
        a: (p + 1.0) / 2.0,
        c: 0.5,
        z,
    })
    .expect("seed series converges for validated params");
    if s == 0.0 {
        return phi1;
    }
    let phi2 = kummer_m(&KummerArgs {
        a: p / 2.0 + 1.0,
        c: 1.5,
        z,
    })
    .expect("seed series converges for validated params");
    phi1.add(phi2.mul(ScaledReal::from_f64(s * x)))
}

fn seed_parts(params: &PartnerParams, x: f64) -> (ScaledReal, ScaledReal) {
    let p = params.p;
    let s = params.s_raw;
    let z = x * x;
    let phi1 = kummer_m(&KummerArgs {
        a: (p + 1.0) / 2.0,
        c: 0.5,
        z,
    })
    .expect("seed series converges for validated params");
    let phi3 = kummer_m(&KummerArgs {
        a: (p + 3.0) / 2.0,
        c: 1.5,
        z,
    })
    .expect("seed series converges for validated params");
    if s == 0.0 {
        let dxi = phi3.mul(ScaledReal::from_f64(2.0 * (p + 1.0) * x));
        return (phi1, dxi);
    }
    let phi2 = kummer_m(&KummerArgs {
        a: p / 2.0 + 1.0,
        c: 1.5,
        z,
    })
    .expect("seed series converges for validated params");
    let phi4 = kummer_m(&KummerArgs {
        a: p / 2.0 + 2.0,
        c: 2.5,
        z,
    })
    .expect("seed series converges for validated params");
    let xi = phi1.add(phi2.mul(ScaledReal::from_f64(s * x)));
    let dxi = phi3
        .mul(ScaledReal::from_f64(2.0 * (p + 1.0) * x))
        .add(phi2.mul(ScaledReal::from_f64(s)))
        .add(phi4.mul(ScaledReal::from_f64(2.0 / 3.0 * (p + 2.0) * s * z)));
    (xi, dxi)
}

/// Seed solution φ_{p,s}(x); strictly positive over the whole line for
/// valid parameters (nodelessness defines the valid range).
pub fn seed_solution(params: &PartnerParams, x: f64) -> ScaledReal {
    let xi = seed_xi(params, x);
    debug_assert_eq!(xi.sign(), 1, "seed solution must stay positive");
    xi.scale_exp(-x * x / 2.0)
}

/// Logarithmic derivative of the scaled seed, w(x) = ξ'(x)/ξ(x) = W(x) + x.
pub fn w_func(params: &PartnerParams, x: f64) -> f64 {
    let (xi, dxi) = seed_parts(params, x);
    dxi.ratio_f64(xi)
}

/// Superpotential W(x) = d/dx ln φ_{p,s}(x); behaves like x - p/x at
/// large |x|.
pub fn superpotential(params: &PartnerParams, x: f64) -> f64 {
    w_func(params, x) - x
}

/// Partner potential V_{p,s}(x) = 2W²(x) - x² - 4p.
///
/// One uniform formula for even and skewed members; the offset makes
/// V approach x² asymptotically. At the origin V(0) = 2·s_raw² - 4p.
pub fn partner_potential(params: &PartnerParams, x: f64) -> f64 {
    let w = superpotential(params, x);
    2.0 * w * w - x * x - 4.0 * params.p
}

/// Energy of level k (k = -1 is the tunable ground level). Units ħω/2.
pub fn energy(k: i32, params: &PartnerParams) -> Result<f64> {
    match k {
        -1 => Ok(1.0 - 2.0 * params.p),
        k if k >= 0 => Ok(2.0 * f64::from(k) + 3.0),
        _ => Err(Error::Domain(format!("level index must be >= -1, got {k}"))),
    }
}

/// Closed-form normalization integral I_{p,s} = ∫ dx/φ_{p,s}² =
/// √π Γ(p+1) / (2^p [Γ(p/2+1)² - (s²/4)Γ((p+1)/2)²]).
///
/// Monotonically increasing in |s_hat| and divergent at the skew boundary;
/// equivalently I_{p,0} / (1 - s_hat²).
pub fn normalization_integral(params: &PartnerParams) -> f64 {
    let p = params.p;
    let i_p0 = SQRT_PI
        * (log_gamma(p + 1.0).unwrap()
            - p * std::f64::consts::LN_2
            - 2.0 * log_gamma(p / 2.0 + 1.0).unwrap())
        .exp();
    i_p0 / (1.0 - params.s_hat * params.s_hat)
}

/// Normalized ground-state wavefunction ψ_{-1}(x) = I_{p,s}^{-1/2} / φ_{p,s}(x).
pub fn eigenstate_ground(params: &PartnerParams, x: f64) -> f64 {
    let norm = normalization_integral(params).sqrt().recip();
    norm * seed_solution(params, x).recip().to_f64()
}

/// Normalized k-th excited state (k ≥ 0), energy 2k+3:
/// ψ_k(x) = [2^{k+1} k! (k+p+1) √π]^{-1/2} [w(x)H_k(x) - 2k H_{k-1}(x)] e^{-x²/2}.
pub fn eigenstate_excited(k: i32, params: &PartnerParams, x: f64) -> Result<f64> {
    if !(0..=MAX_LEVEL).contains(&k) {
        return Err(Error::Domain(format!(
            "excited level index must be in 0..={MAX_LEVEL}, got {k}"
        )));
    }
    let kf = f64::from(k);
    let ln_norm_sq = (kf + 1.0) * std::f64::consts::LN_2
        + log_gamma(kf + 1.0)?
        + (kf + params.p + 1.0).ln()
        + SQRT_PI.ln();
    let norm = (-0.5 * ln_norm_sq).exp();
    let ku = k as u32;
    let h_k = hermite_poly(ku, x);
    let h_km1 = if k == 0 { 0.0 } else { hermite_poly(ku - 1, x) };
    let w = w_func(params, x);
    Ok(norm * (w * h_k - 2.0 * kf * h_km1) * (-x * x / 2.0).exp())
}

/// A single level of the family: index, energy, and a pointwise-evaluable
/// normalized wavefunction.
#[derive(Debug, Clone)]
pub struct Eigenstate {
    k: i32,
    energy: f64,
    norm_constant: f64,
    params: PartnerParams,
}

impl Eigenstate {
    pub fn new(params: PartnerParams, k: i32) -> Result<Self> {
        if !(-1..=MAX_LEVEL).contains(&k) {
            return Err(Error::Domain(format!(
                "level index must be in -1..={MAX_LEVEL}, got {k}"
            )));
        }
        let norm_constant = if k == -1 {
            normalization_integral(&params).sqrt().recip()
        } else {
            let kf = f64::from(k);
            (-0.5
                * ((kf + 1.0) * std::f64::consts::LN_2
                    + log_gamma(kf + 1.0)?
                    + (kf + params.p() + 1.0).ln()
                    + SQRT_PI.ln()))
            .exp()
        };
        Ok(Eigenstate {
            k,
            energy: energy(k, &params)?,
            norm_constant,
            params,
        })
    }

    pub fn k(&self) -> i32 {
        self.k
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn norm_constant(&self) -> f64 {
        self.norm_constant
    }

    pub fn params(&self) -> &PartnerParams {
        &self.params
    }

    /// Pointwise value of the normalized wavefunction.
    pub fn eval(&self, x: f64) -> f64 {
        if self.k == -1 {
            self.norm_constant * seed_solution(&self.params, x).recip().to_f64()
        } else {
            let ku = self.k as u32;
            let kf = f64::from(self.k);
            let h_k = hermite_poly(ku, x);
            let h_km1 = if self.k == 0 {
                0.0
            } else {
                hermite_poly(ku - 1, x)
            };
            let w = w_func(&self.params, x);
            self.norm_constant * (w * h_k - 2.0 * kf * h_km1) * (-x * x / 2.0).exp()
        }
    }
}

/// Values of several states at one point, sharing the seed-series work.
///
/// Batch convenience over the pointwise contract; all states must belong to
/// the same parameter set.
pub fn eval_states(states: &[Eigenstate], x: f64) -> Vec<f64> {
    let Some(first) = states.first() else {
        return Vec::new();
    };
    debug_assert!(
        states.iter().all(|s| s.params == first.params),
        "eval_states needs a single parameter set"
    );
    let params = &first.params;
    let z = x * x;
    let (xi, dxi) = seed_parts(params, x);
    let w = dxi.ratio_f64(xi);
    let gauss = (-z / 2.0).exp();
    let inv_phi = xi.scale_exp(-z / 2.0).recip().to_f64();
    states
        .iter()
        .map(|st| {
            if st.k == -1 {
                st.norm_constant * inv_phi
            } else {
                let ku = st.k as u32;
                let kf = f64::from(st.k);
                let h_k = hermite_poly(ku, x);
                let h_km1 = if st.k == 0 {
                    0.0
                } else {
                    hermite_poly(ku - 1, x)
                };
                st.norm_constant * (w * h_k - 2.0 * kf * h_km1) * gauss
            }
        })
        .collect()
}
