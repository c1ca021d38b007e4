//! Independent numerical verification of the closed forms: a
//! finite-difference grid eigensolver, composite quadrature, and the exact
//! Wronskian constancy check. Nothing here trusts the analytic spectrum or
//! normalization constants.

mod quadrature;
mod tridiag;

pub use quadrature::{integrate, simpson};
pub use tridiag::{inverse_iteration, lowest_eigenvalues, residual_norm, sturm_count};

use crate::bigfixed::{exp_fixed, BigFixed};
use crate::error::{Error, Result};
use crate::model::{
    energy, eval_states, normalization_integral, seed_solution, Eigenstate, PartnerParams,
};
use crate::report::{CheckResult, FamilyReport};
use crate::specfun::{kummer_series_fixed, s_max};

/// Discretized Hamiltonian -d²/dx² + V on [-L, L] with Dirichlet walls.
///
/// `n_points` uniform interior points, step h = 2L/(n_points+1). Certified
/// tolerance claims assume L >= 8 and n_points >= 2000.
pub struct GridProblem<F> {
    pub half_width: f64,
    pub n_points: usize,
    pub potential: F,
}

impl<F: Fn(f64) -> f64> GridProblem<F> {
    pub fn new(half_width: f64, n_points: usize, potential: F) -> Self {
        GridProblem {
            half_width,
            n_points,
            potential,
        }
    }

    pub fn h(&self) -> f64 {
        2.0 * self.half_width / (self.n_points as f64 + 1.0)
    }

    /// Interior grid nodes.
    pub fn xs(&self) -> Vec<f64> {
        let h = self.h();
        (1..=self.n_points)
            .map(|i| -self.half_width + i as f64 * h)
            .collect()
    }

    fn tridiagonal(&self) -> (Vec<f64>, Vec<f64>) {
        let h = self.h();
        let inv_h2 = 1.0 / (h * h);
        let diag: Vec<f64> = self
            .xs()
            .iter()
            .map(|&x| 2.0 * inv_h2 + (self.potential)(x))
            .collect();
        let off = vec![-inv_h2; self.n_points - 1];
        (diag, off)
    }
}

/// Output of [`solve_lowest`]: Richardson-extrapolated eigenvalues plus the
/// fine-grid eigenpairs they came from.
pub struct SpectrumReport {
    /// Two-grid extrapolated eigenvalues, strictly increasing.
    pub eigenvalues: Vec<f64>,
    /// Raw fine-grid eigenvalues (what the residuals are measured against).
    pub discrete_eigenvalues: Vec<f64>,
    /// Fine-grid eigenvectors, normalized so that Σ v²·h = 1, sign fixed
    /// positive at the largest-magnitude node.
    pub eigenvectors: Vec<Vec<f64>>,
    /// ‖H v - λ v‖₂ / ‖v‖₂ per fine-grid pair.
    pub residual_norms: Vec<f64>,
    /// Fine-grid interior nodes matching `eigenvectors`.
    pub xs: Vec<f64>,
    /// Fine-grid step.
    pub h: f64,
}

/// Lowest `m` eigenpairs of the discretized Hamiltonian.
///
/// Eigenvalues are solved on the given grid and on one with `2n` points,
/// then Richardson-extrapolated (the discretization is O(h²), so the
/// combined estimate is O(h⁴)). Fails if the requested levels run into the
/// spectral ceiling induced by the Dirichlet walls.
pub fn solve_lowest<F: Fn(f64) -> f64>(
    problem: &GridProblem<F>,
    m: usize,
) -> Result<SpectrumReport> {
    if m == 0 || m > 30 {
        return Err(Error::Domain(format!(
            "eigenpair count must be in 1..=30, got {m}"
        )));
    }
    if problem.n_points < 4 * m + 8 {
        return Err(Error::Domain(format!(
            "grid too coarse: {} points for {m} eigenpairs",
            problem.n_points
        )));
    }
    let coarse = problem;
    let fine = GridProblem {
        half_width: problem.half_width,
        n_points: 2 * problem.n_points,
        potential: &problem.potential,
    };

    let (diag_c, off_c) = coarse.tridiagonal();
    let (diag_f, off_f) = fine.tridiagonal();
    let ev_c = lowest_eigenvalues(&diag_c, &off_c, m);
    let ev_f = lowest_eigenvalues(&diag_f, &off_f, m);

    // General-ratio Richardson: error ~ C h^2.
    let r = (coarse.h() / fine.h()).powi(2);
    let eigenvalues: Vec<f64> = ev_c
        .iter()
        .zip(ev_f.iter())
        .map(|(&lc, &lf)| (r * lf - lc) / (r - 1.0))
        .collect();
    debug_assert!(
        eigenvalues.windows(2).all(|w| w[0] < w[1]),
        "extrapolated eigenvalues must stay strictly increasing"
    );

    // The walls at ±L distort anything at or above the boundary potential.
    let ceiling =
        (problem.potential)(-problem.half_width).min((problem.potential)(problem.half_width));
    if eigenvalues[m - 1] >= ceiling {
        return Err(Error::Bracket(format!(
            "level {} at {:.6} reaches the boundary-induced spectral ceiling {:.6}; \
             enlarge the domain",
            m - 1,
            eigenvalues[m - 1],
            ceiling
        )));
    }

    let h = fine.h();
    let mut eigenvectors: Vec<Vec<f64>> = Vec::with_capacity(m);
    let mut residual_norms = Vec::with_capacity(m);
    for (k, &lambda) in ev_f.iter().enumerate() {
        let close: Vec<&[f64]> = (0..k)
            .filter(|&j| (ev_f[j] - lambda).abs() < 1e-4 * lambda.abs().max(1.0))
            .map(|j| eigenvectors[j].as_slice())
            .collect();
        // `close` holds h-normalized vectors; rescale to unit L2 for the
        // orthogonalization inside inverse iteration.
        let close_unit: Vec<Vec<f64>> = close
            .iter()
            .map(|v| {
                let n: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                v.iter().map(|x| x / n).collect()
            })
            .collect();
        let close_refs: Vec<&[f64]> = close_unit.iter().map(|v| v.as_slice()).collect();
        let v = inverse_iteration(&diag_f, &off_f, lambda, &close_refs);
        residual_norms.push(residual_norm(&diag_f, &off_f, lambda, &v));
        // Rescale to the continuum normalization Σ v² h = 1.
        let scale = h.sqrt().recip();
        eigenvectors.push(v.into_iter().map(|x| x * scale).collect());
    }

    Ok(SpectrumReport {
        eigenvalues,
        discrete_eigenvalues: ev_f,
        eigenvectors,
        residual_norms,
        xs: fine.xs(),
        h,
    })
}

/// Max over `x_list` of |φ_{p,s1} φ'_{p,s2} - φ'_{p,s1} φ_{p,s2} - (s2-s1)|.
///
/// The Wronskian of two seed solutions is the constant s2 - s1; evaluated
/// naively the products lose ~e^{x²} digits to cancellation, so the whole
/// combination is assembled in exact fixed-point arithmetic from the four
/// underlying series (the e^{-x²/2} prefactors and the x·ξ₁ξ₂ cross terms
/// cancel identically and are dropped algebraically).
pub fn wronskian_check(p: f64, s1: f64, s2: f64, x_list: &[f64]) -> Result<f64> {
    let smax = s_max(p)?;
    for (label, s) in [("s1", s1), ("s2", s2)] {
        if !s.is_finite() || s.abs() >= smax {
            return Err(Error::Domain(format!(
                "{label} = {s} outside the nodeless range |s| < {smax}"
            )));
        }
    }
    let one = BigFixed::one();
    let half = BigFixed::from_f64(0.5);
    // a1 = (p+1)/2 exactly, and exactly related offsets.
    let a1 = BigFixed::from_f64(p).add(&one).mul_f64(0.5);
    let a2 = a1.add(&half);
    let a3 = a1.add(&one);
    let a4 = a2.add(&one);

    let mut worst = 0.0f64;
    for &x in x_list {
        if !(x.abs() <= 8.0) {
            return Err(Error::Range(format!(
                "wronskian check supports |x| <= 8, got {x}"
            )));
        }
        let z = x * x;
        let phi1 = kummer_series_fixed(&a1, 1, z)?;
        let phi2 = kummer_series_fixed(&a2, 3, z)?;
        let phi3 = kummer_series_fixed(&a3, 3, z)?;
        let phi4 = kummer_series_fixed(&a4, 5, z)?;

        // ξ = Φ₁ + s·x·Φ₂ and ξ' = 4a₁xΦ₃ + s[Φ₂ + (4/3)a₂zΦ₄], all factors
        // exact in fixed point.
        let b = phi2.mul_f64(x);
        let da = phi3.mul(&a1).mul_f64(4.0 * x);
        let db = phi2.add(&phi4.mul(&a2).mul_f64(4.0 * z).div_u64(3));

        let xi1 = phi1.add(&b.mul_f64(s1));
        let xi2 = phi1.add(&b.mul_f64(s2));
        let dxi1 = da.add(&db.mul_f64(s1));
        let dxi2 = da.add(&db.mul_f64(s2));

        let k = xi1.mul(&dxi2).sub(&dxi1.mul(&xi2));
        let e_z = exp_fixed(z);
        let d = k.add(&e_z.mul_f64(s1)).sub(&e_z.mul_f64(s2));
        let deviation = (d.to_f64() / e_z.to_f64()).abs();
        worst = worst.max(deviation);
    }
    Ok(worst)
}

/// Grid configuration for [`verify_family`].
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub grid_half_width: f64,
    pub grid_points: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        // Certified configuration: h = 0.004 on [-12, 12].
        VerifyConfig {
            grid_half_width: 12.0,
            grid_points: 6000,
        }
    }
}

/// Quadrature layout tied to a verification grid: same half-width, node
/// count forced odd for composite Simpson.
pub fn seed_norm_config(config: &VerifyConfig) -> (f64, usize) {
    let n = config.grid_points;
    let n_odd = if n % 2 == 1 { n + 2 } else { n + 1 };
    (config.grid_half_width, n_odd)
}

/// One-pass verification bundle for a parameter set: oracle spectrum vs the
/// closed-form energies, quadrature vs the closed-form normalization, Gram
/// matrix vs identity, and pointwise Schrödinger residuals.
///
/// Tolerance misses are reported in the result, never panicked on.
pub fn verify_family(
    params: &PartnerParams,
    levels: usize,
    config: &VerifyConfig,
) -> Result<FamilyReport> {
    if levels == 0 || levels > 10 {
        return Err(Error::Domain(format!(
            "levels must be in 1..=10, got {levels}"
        )));
    }
    let l = config.grid_half_width;
    let n = config.grid_points;

    // Oracle spectrum vs closed-form energies.
    let problem = GridProblem::new(l, n, |x| crate::model::partner_potential(params, x));
    let spectrum = solve_lowest(&problem, levels)?;
    let mut spec_dev = 0.0f64;
    for (i, &ev) in spectrum.eigenvalues.iter().enumerate() {
        let exact = energy(i as i32 - 1, params)?;
        spec_dev = spec_dev.max((ev - exact).abs());
    }

    // Quadrature of 1/φ² vs the closed-form normalization integral.
    let (_, n_quad) = seed_norm_config(config);
    let quad = integrate(
        |x| seed_solution(params, x).recip().to_f64().powi(2),
        -l,
        l,
        n_quad,
    );
    let norm_dev = (quad / normalization_integral(params) - 1.0).abs();

    // Gram matrix of the analytic states under quadrature.
    let states: Vec<Eigenstate> = (-1..levels as i32 - 1)
        .map(|k| Eigenstate::new(*params, k))
        .collect::<Result<_>>()?;
    let hq = 2.0 * l / (n_quad - 1) as f64;
    let mut sampled: Vec<Vec<f64>> = vec![Vec::with_capacity(n_quad); states.len()];
    for i in 0..n_quad {
        let vals = eval_states(&states, -l + i as f64 * hq);
        for (col, v) in sampled.iter_mut().zip(vals) {
            col.push(v);
        }
    }
    let mut gram_dev = 0.0f64;
    for i in 0..states.len() {
        for j in i..states.len() {
            let prod: Vec<f64> = sampled[i]
                .iter()
                .zip(sampled[j].iter())
                .map(|(a, b)| a * b)
                .collect();
            let g = simpson(&prod, hq);
            let target = if i == j { 1.0 } else { 0.0 };
            gram_dev = gram_dev.max((g - target).abs());
        }
    }

    // Schrödinger residual |−ψ'' + Vψ − Eψ| on the grid restricted to
    // |x| ≤ 6, with the 5-point second difference at step 1e-3.
    let grid_xs: Vec<f64> = problem
        .xs()
        .into_iter()
        .filter(|x| x.abs() <= 6.0)
        .collect();
    let resid_dev = max_schrodinger_residual(&states, params, &grid_xs);

    let report = FamilyReport {
        p: params.p(),
        s_hat: params.s_hat(),
        levels,
        grid_half_width: l,
        grid_points: n,
        checks: vec![
            CheckResult::new("spectrum_vs_energy", spec_dev, 1e-3),
            CheckResult::new("normalization_vs_quadrature", norm_dev, 1e-8),
            CheckResult::new("orthonormality", gram_dev, 1e-7),
            CheckResult::new("schrodinger_residual", resid_dev, 1e-5),
        ],
        pass: false,
    };
    Ok(report.finish())
}

/// −ψ''(x) + V(x)ψ(x) − Eψ(x) with ψ'' from the 5-point stencil at h = 1e-3.
pub fn schrodinger_residual(state: &Eigenstate, params: &PartnerParams, x: f64) -> f64 {
    let h = 1e-3;
    let psi_m2 = state.eval(x - 2.0 * h);
    let psi_m1 = state.eval(x - h);
    let psi_0 = state.eval(x);
    let psi_p1 = state.eval(x + h);
    let psi_p2 = state.eval(x + 2.0 * h);
    let second = (-psi_m2 + 16.0 * psi_m1 - 30.0 * psi_0 + 16.0 * psi_p1 - psi_p2) / (12.0 * h * h);
    let v = crate::model::partner_potential(params, x);
    -second + v * psi_0 - state.energy() * psi_0
}

/// Worst |−ψ'' + Vψ − Eψ| over `xs`, per state rescaled by its peak
/// amplitude on the scan, maximized over all states.
pub fn max_schrodinger_residual(states: &[Eigenstate], params: &PartnerParams, xs: &[f64]) -> f64 {
    if states.is_empty() || xs.is_empty() {
        return 0.0;
    }
    let h = 1e-3;
    let m = states.len();
    let mut worst = vec![0.0f64; m];
    let mut amp = vec![0.0f64; m];
    for &x in xs {
        let m2 = eval_states(states, x - 2.0 * h);
        let m1 = eval_states(states, x - h);
        let c0 = eval_states(states, x);
        let p1 = eval_states(states, x + h);
        let p2 = eval_states(states, x + 2.0 * h);
        let v = crate::model::partner_potential(params, x);
        for i in 0..m {
            let second =
                (-m2[i] + 16.0 * m1[i] - 30.0 * c0[i] + 16.0 * p1[i] - p2[i]) / (12.0 * h * h);
            let r = -second + (v - states[i].energy()) * c0[i];
            worst[i] = worst[i].max(r.abs());
            amp[i] = amp[i].max(c0[i].abs());
        }
    }
    worst
        .iter()
        .zip(amp.iter())
        .map(|(w, a)| w / a)
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oscillator_spectrum() {
        let problem = GridProblem::new(10.0, 4000, |x: f64| x * x);
        let report = solve_lowest(&problem, 4).unwrap();
        for (k, &ev) in report.eigenvalues.iter().enumerate() {
            let exact = 2.0 * k as f64 + 1.0;
            assert!((ev - exact).abs() < 1e-3, "k={k}: {ev}");
        }
        assert!(report.eigenvalues.windows(2).all(|w| w[1] > w[0]));
        for (&r, &_lam) in report
            .residual_norms
            .iter()
            .zip(&report.discrete_eigenvalues)
        {
            assert!(r < 1e-8, "residual {r}");
        }
    }

    #[test]
    fn partner_spectrum_p1() {
        let params = PartnerParams::symmetric(1.0).unwrap();
        let problem = GridProblem::new(12.0, 4000, |x| crate::model::partner_potential(&params, x));
        let report = solve_lowest(&problem, 4).unwrap();
        let want = [-1.0, 3.0, 5.0, 7.0];
        for (got, want) in report.eigenvalues.iter().zip(want.iter()) {
            assert!((got - want).abs() < 1e-3, "{got} vs {want}");
        }
    }

    #[test]
    fn skewed_spectrum_unchanged() {
        let params = PartnerParams::new(0.5, 0.9).unwrap();
        let problem = GridProblem::new(12.0, 4000, |x| crate::model::partner_potential(&params, x));
        let report = solve_lowest(&problem, 3).unwrap();
        let want = [0.0, 3.0, 5.0];
        for (got, want) in report.eigenvalues.iter().zip(want.iter()) {
            assert!((got - want).abs() < 1e-3, "{got} vs {want}");
        }
    }

    #[test]
    fn grid_convergence_is_second_order() {
        // Halving h cuts the raw (non-extrapolated) eigenvalue error ~4x.
        let coarse = GridProblem::new(10.0, 1999, |x: f64| x * x);
        let fine = GridProblem::new(10.0, 3999, |x: f64| x * x);
        let (dc, oc) = coarse.tridiagonal();
        let (df, of) = fine.tridiagonal();
        let ec = lowest_eigenvalues(&dc, &oc, 1)[0] - 1.0;
        let ef = lowest_eigenvalues(&df, &of, 1)[0] - 1.0;
        let ratio = ec / ef;
        assert!((3.3..4.7).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn boundary_insensitivity() {
        // Same h, larger box: eigenvalues move by less than 1e-8.
        let p10 = GridProblem::new(10.0, 4999, |x: f64| x * x);
        let p14 = GridProblem::new(14.0, 6999, |x: f64| x * x);
        assert!((p10.h() - p14.h()).abs() < 1e-15);
        let r10 = solve_lowest(&p10, 3).unwrap();
        let r14 = solve_lowest(&p14, 3).unwrap();
        for (a, b) in r10.eigenvalues.iter().zip(r14.eigenvalues.iter()) {
            assert!((a - b).abs() < 1e-8, "{a} vs {b}");
        }
    }

    #[test]
    fn ceiling_rejection() {
        // A tiny box cannot hold 4 oscillator levels.
        let problem = GridProblem::new(1.5, 200, |x: f64| x * x);
        assert!(matches!(solve_lowest(&problem, 4), Err(Error::Bracket(_))));
    }

    #[test]
    fn wronskian_examples() {
        // Constant value s2 - s1 at several points.
        let dev = wronskian_check(1.0, 0.0, 0.5, &[0.0, 1.0, -1.0, 2.0, -2.0]).unwrap();
        assert!(dev <= 1e-9, "{dev}");
        // Dependent solutions: identically zero.
        let dev0 = wronskian_check(2.0, 0.3, 0.3, &[0.0, 1.5, 3.0]).unwrap();
        assert!(dev0 <= 1e-12, "{dev0}");
        // p=0 closed form: s_max = 2/√π, raw s2 = 1 is inside.
        let dev1 = wronskian_check(0.0, 0.0, 1.0, &[0.0, 0.5, 1.0, 2.0, 4.0]).unwrap();
        assert!(dev1 <= 1e-9, "{dev1}");
    }

    #[test]
    fn wronskian_rejects_invalid_skew() {
        assert!(wronskian_check(0.0, 0.0, 1.2, &[0.0]).is_err());
        assert!(wronskian_check(-2.0, 0.0, 0.1, &[0.0]).is_err());
    }

    #[test]
    fn quadrature_normalization_round_trip() {
        let params = PartnerParams::symmetric(2.0).unwrap();
        let norm = integrate(
            |x| {
                let g = crate::model::eigenstate_ground(&params, x);
                g * g
            },
            -12.0,
            12.0,
            4001,
        );
        assert!((norm - 1.0).abs() < 1e-8, "{norm}");
    }

    #[test]
    fn quadrature_orthogonality() {
        let params = PartnerParams::new(4.0, 0.5).unwrap();
        let s0 = Eigenstate::new(params, 0).unwrap();
        let s1 = Eigenstate::new(params, 1).unwrap();
        let dot = integrate(|x| s0.eval(x) * s1.eval(x), -12.0, 12.0, 6001);
        assert!(dot.abs() < 1e-7, "{dot}");
    }

    #[test]
    fn verify_family_harmonic() {
        let params = PartnerParams::symmetric(0.0).unwrap();
        let config = VerifyConfig {
            grid_half_width: 10.0,
            grid_points: 3000,
        };
        let report = verify_family(&params, 5, &config).unwrap();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn verify_family_rejects_levels() {
        let params = PartnerParams::symmetric(1.0).unwrap();
        assert!(verify_family(&params, 11, &VerifyConfig::default()).is_err());
        assert!(verify_family(&params, 0, &VerifyConfig::default()).is_err());
    }
}
