#![allow(clippy::excessive_precision)]

//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with the measured extreme against its pinned tolerance.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use partnerpot::bec::{critical_temperature, TcMethod, TrapSpec};
use partnerpot::model::{
    energy, eval_states, normalization_integral, partner_potential, seed_solution, Eigenstate,
    PartnerParams,
};
use partnerpot::oracle::{
    integrate, max_schrodinger_residual, simpson, solve_lowest, wronskian_check, GridProblem,
};
use partnerpot::specfun::{
    hermite_poly, kummer_m, kummer_m_deriv, kummer_transform_check, log_gamma, pseudo_hermite,
    s_max, KummerArgs,
};

const SQRT_PI: f64 = 1.7724538509055160273;

/// Criterion-1 parameter grid, shared by criteria 4 and 5.
fn parameter_grid() -> Vec<PartnerParams> {
    let mut sets = Vec::new();
    for &p in &[0.5, 1.0, 2.0, 4.0, -0.3, -0.9] {
        for &s_hat in &[0.0, 0.5, 0.9] {
            sets.push(PartnerParams::new(p, s_hat).unwrap());
        }
    }
    sets
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Lowest five oracle eigenvalues match {1-2p, 3, 5, 7, 9} within 1e-3 on
/// the certified grid.
#[test]
fn criterion_1_spectrum_reproduction() {
    let tol = 1e-3;
    let mut worst = 0.0f64;
    for params in parameter_grid() {
        let problem = GridProblem::new(12.0, 6000, |x| partner_potential(&params, x));
        let report = solve_lowest(&problem, 5).unwrap();
        for (i, &ev) in report.eigenvalues.iter().enumerate() {
            let exact = energy(i as i32 - 1, &params).unwrap();
            worst = worst.max((ev - exact).abs());
        }
    }
    let pass = worst <= tol;
    println!(
        "acceptance 1 (spectrum reproduction): {} (max |dE| = {worst:.3e}, tol {tol:.0e})",
        status(pass)
    );
    assert!(pass, "max eigenvalue deviation {worst} exceeds {tol}");
}

/// Quadrature of 1/φ² matches the closed-form normalization to 1e-8 for 20
/// parameter sets including (0,0); the superseded even-case display fails.
#[test]
fn criterion_2_normalization_closed_form() {
    let tol = 1e-8;
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    let mut pairs = vec![(0.0, 0.0)];
    for _ in 0..19 {
        pairs.push((rng.random_range(-0.95..6.0), rng.random_range(-0.99..0.99)));
    }
    let mut worst = 0.0f64;
    for &(p, s_hat) in &pairs {
        let params = PartnerParams::new(p, s_hat).unwrap();
        let quad = integrate(
            |x| {
                let v = seed_solution(&params, x).recip().to_f64();
                v * v
            },
            -12.0,
            12.0,
            48001,
        );
        let closed = normalization_integral(&params);
        worst = worst.max((quad / closed - 1.0).abs());
        if p == 0.0 && s_hat == 0.0 {
            assert!((closed - SQRT_PI).abs() < 1e-14, "I(0,0) must be sqrt(pi)");
        }
    }
    // The alternative even-case constant sqrt(pi)Γ(p+1)/(2^p Γ((p+1)/2)^2)
    // disagrees with the quadrature (checked at p = 0 where it gives
    // 1/sqrt(pi) instead of sqrt(pi)).
    let display_form = SQRT_PI / std::f64::consts::PI;
    let mismatch = (display_form / SQRT_PI - 1.0).abs();
    let pass = worst <= tol && mismatch > 1e-3;
    println!(
        "acceptance 2 (normalization closed form): {} (max rel dev = {worst:.3e}, tol {tol:.0e}; superseded display off by {mismatch:.2})",
        status(pass)
    );
    assert!(pass, "normalization deviation {worst} exceeds {tol}");
}

/// Wronskian of two seed solutions is constant and equals s2 - s1 to 1e-9.
#[test]
fn criterion_3_wronskian() {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let xs = [0.0, 1.0, -1.0, 2.0, -2.0, 4.0, -4.0];
    let mut worst = 0.0f64;
    let mut pass = true;
    for _ in 0..10 {
        let p = rng.random_range(-0.9..5.0);
        let smax = s_max(p).unwrap();
        let s1 = rng.random_range(-0.9..0.9) * smax;
        let s2 = rng.random_range(-0.9..0.9) * smax;
        let dev = wronskian_check(p, s1, s2, &xs).unwrap();
        let tol = 1e-9 * (s2 - s1).abs().max(1.0);
        worst = worst.max(dev / tol);
        pass &= dev <= tol;
    }
    println!(
        "acceptance 3 (wronskian constancy): {} (worst dev/tol = {worst:.3e})",
        status(pass)
    );
    assert!(pass, "wronskian deviation exceeded tolerance");
}

/// Gram matrix of the first seven states is the identity to 1e-7 per entry.
#[test]
fn criterion_4_orthonormality() {
    let tol = 1e-7;
    let l = 12.0;
    let n = 6001;
    let h = 2.0 * l / (n - 1) as f64;
    let mut worst = 0.0f64;
    for params in parameter_grid() {
        let states: Vec<Eigenstate> = (-1..=5)
            .map(|k| Eigenstate::new(params, k).unwrap())
            .collect();
        let mut sampled = vec![Vec::with_capacity(n); states.len()];
        for i in 0..n {
            let vals = eval_states(&states, -l + i as f64 * h);
            for (col, v) in sampled.iter_mut().zip(vals) {
                col.push(v);
            }
        }
        for i in 0..states.len() {
            for j in i..states.len() {
                let prod: Vec<f64> = sampled[i]
                    .iter()
                    .zip(sampled[j].iter())
                    .map(|(a, b)| a * b)
                    .collect();
                let g = simpson(&prod, h);
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g - target).abs());
            }
        }
    }
    let pass = worst <= tol;
    println!(
        "acceptance 4 (orthonormality): {} (max |G - I| = {worst:.3e}, tol {tol:.0e})",
        status(pass)
    );
    assert!(pass, "Gram deviation {worst} exceeds {tol}");
}

/// Pointwise Schrödinger residual below 1e-5 of the peak amplitude for all
/// states of the criterion-1 set on the |x| <= 6 grid.
#[test]
fn criterion_5_schrodinger_residual() {
    let tol = 1e-5;
    let mut worst = 0.0f64;
    for params in parameter_grid() {
        let problem = GridProblem::new(12.0, 6000, |x| partner_potential(&params, x));
        let xs: Vec<f64> = problem
            .xs()
            .into_iter()
            .filter(|x| x.abs() <= 6.0)
            .collect();
        let states: Vec<Eigenstate> = (-1..=5)
            .map(|k| Eigenstate::new(params, k).unwrap())
            .collect();
        worst = worst.max(max_schrodinger_residual(&states, &params, &xs));
    }
    let pass = worst <= tol;
    println!(
        "acceptance 5 (schrodinger residual): {} (max rel residual = {worst:.3e}, tol {tol:.0e})",
        status(pass)
    );
    assert!(pass, "residual {worst} exceeds {tol}");
}

/// The p = 0, s = 0 member is the textbook oscillator: potential, energies,
/// and eigenfunctions, analytically to 1e-10 and through the oracle to 1e-3.
#[test]
fn criterion_6_harmonic_reduction() {
    let params = PartnerParams::symmetric(0.0).unwrap();
    let mut worst_analytic = 0.0f64;

    // Potential and wavefunctions on a uniform scan.
    let harmonic_state = |n: u32, x: f64| -> f64 {
        let nf = f64::from(n);
        let norm = (-0.5
            * (nf * std::f64::consts::LN_2 + log_gamma(nf + 1.0).unwrap() + SQRT_PI.ln()))
        .exp();
        norm * hermite_poly(n, x) * (-x * x / 2.0).exp()
    };
    let states: Vec<Eigenstate> = (-1..=5)
        .map(|k| Eigenstate::new(params, k).unwrap())
        .collect();
    for i in 0..=1200 {
        let x = -6.0 + 0.01 * i as f64;
        worst_analytic = worst_analytic.max((partner_potential(&params, x) - x * x).abs());
        let vals = eval_states(&states, x);
        for (st, v) in states.iter().zip(vals) {
            let n = (st.k() + 1) as u32;
            worst_analytic = worst_analytic.max((v - harmonic_state(n, x)).abs());
        }
    }
    // Energy ladder is exactly {1, 3, 5, ...}.
    for k in -1..=8i32 {
        let want = 2.0 * f64::from(k) + 3.0;
        assert_eq!(
            energy(k, &params).unwrap(),
            if k == -1 { 1.0 } else { want }
        );
    }

    // Oracle path.
    let problem = GridProblem::new(12.0, 6000, |x| partner_potential(&params, x));
    let report = solve_lowest(&problem, 5).unwrap();
    let mut worst_oracle = 0.0f64;
    for (i, &ev) in report.eigenvalues.iter().enumerate() {
        worst_oracle = worst_oracle.max((ev - (2.0 * i as f64 + 1.0)).abs());
    }
    for (i, vec) in report.eigenvectors.iter().enumerate() {
        let imax = (0..vec.len())
            .max_by(|&a, &b| vec[a].abs().total_cmp(&vec[b].abs()))
            .unwrap();
        let sign = if harmonic_state(i as u32, report.xs[imax]) * vec[imax] < 0.0 {
            -1.0
        } else {
            1.0
        };
        for (&x, &v) in report.xs.iter().zip(vec.iter()) {
            worst_oracle = worst_oracle.max((sign * harmonic_state(i as u32, x) - v).abs());
        }
    }
    let pass = worst_analytic <= 1e-10 && worst_oracle <= 1e-3;
    println!(
        "acceptance 6 (harmonic reduction): {} (analytic dev = {worst_analytic:.3e} tol 1e-10, oracle dev = {worst_oracle:.3e} tol 1e-3)",
        status(pass)
    );
    assert!(pass, "analytic {worst_analytic}, oracle {worst_oracle}");
}

/// BEC: T_c doubles at p = 200 +/- 10% for N = 1e5, and T_c(0) is compared
/// against the large-N approximation N/ln N at the 5% level.
#[test]
fn criterion_7_bec_doubling() {
    let n_atoms = 100_000u64;
    let tc0 =
        critical_temperature(&TrapSpec::new(n_atoms, 0.0).unwrap(), TcMethod::ClosedForm).unwrap();

    // Bisect the monotone ratio curve for the doubling point.
    let ratio_at = |p: f64| -> f64 {
        let tc = critical_temperature(&TrapSpec::new(n_atoms, p).unwrap(), TcMethod::ClosedForm)
            .unwrap();
        tc / tc0
    };
    let (mut lo, mut hi) = (0.0f64, 400.0f64);
    assert!(ratio_at(hi) > 2.0 && ratio_at(lo) < 2.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if ratio_at(mid) < 2.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let p_double = 0.5 * (lo + hi);
    let doubling_pass = (p_double - 200.0).abs() <= 20.0;
    println!(
        "acceptance 7a (Tc doubling point): {} (p* = {p_double:.2}, required 200 +/- 20)",
        status(doubling_pass)
    );

    // Round trip of the root solve.
    let occ = partnerpot::bec::occupation_closedform(1.0 / tc0, 0.0).unwrap();
    let round_trip_pass = ((occ - n_atoms as f64) / n_atoms as f64).abs() < 1e-8;
    println!(
        "acceptance 7b (root-solve round trip): {} (occupation(1/Tc) = {occ:.6})",
        status(round_trip_pass)
    );

    // Large-N comparison: k_B T_c(p=0) within 5% of N/ln N. The exact root
    // of the closed-form occupation equation sits ~24% above N/ln N at
    // N = 1e5 (N/ln N is only the leading term of the inversion of
    // N = T ln T), so this check measures that gap honestly.
    let n_over_ln = n_atoms as f64 / (n_atoms as f64).ln();
    let rel = (tc0 - n_over_ln).abs() / n_over_ln;
    let large_n_pass = rel <= 0.05;
    println!(
        "acceptance 7c (Tc(0) vs N/ln N at 5%): {} (Tc(0) = {tc0:.1}, N/ln N = {n_over_ln:.1}, rel dev = {rel:.3})",
        status(large_n_pass)
    );

    assert!(
        doubling_pass,
        "doubling point {p_double} outside 200 +/- 20"
    );
    assert!(round_trip_pass, "occupation round trip failed: {occ}");
    assert!(
        large_n_pass,
        "Tc(0) = {tc0:.1} deviates from N/ln N = {n_over_ln:.1} by {rel:.3} (> 0.05); \
         the doubling checks above pass, and this gap is an intrinsic property \
         of the asymptotic approximation at N = 1e5"
    );
}

/// Special-function identities at their contracted tolerances.
#[test]
fn criterion_8_special_function_identities() {
    // Kummer transformation, 100 random points.
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    let cs = [0.5, 1.5, 2.5];
    let mut worst_transform = 0.0f64;
    for _ in 0..100 {
        let a = rng.random_range(1e-6..=5.0);
        let c = cs[rng.random_range(0..3)];
        let z = rng.random_range(0.0..=50.0);
        worst_transform = worst_transform.max(kummer_transform_check(a, c, z).unwrap());
    }
    let transform_pass = worst_transform <= 1e-11;
    println!(
        "acceptance 8a (Kummer transformation): {} (max residual = {worst_transform:.3e}, tol 1e-11)",
        status(transform_pass)
    );

    // Derivative identity vs central differences, 50 random points.
    let mut worst_deriv = 0.0f64;
    for _ in 0..50 {
        let a = rng.random_range(0.05..=5.0);
        let c = cs[rng.random_range(0..3)];
        let z = rng.random_range(0.1..=50.0);
        let h = 1e-5;
        let d = kummer_m_deriv(&KummerArgs::new(a, c, z).unwrap())
            .unwrap()
            .to_f64();
        let hi = kummer_m(&KummerArgs::new(a, c, z + h).unwrap())
            .unwrap()
            .to_f64();
        let lo = kummer_m(&KummerArgs::new(a, c, z - h).unwrap())
            .unwrap()
            .to_f64();
        let fd = (hi - lo) / (2.0 * h);
        worst_deriv = worst_deriv.max(((d - fd) / fd).abs());
    }
    let deriv_pass = worst_deriv <= 1e-6;
    println!(
        "acceptance 8b (derivative identity): {} (max rel dev = {worst_deriv:.3e}, tol 1e-6)",
        status(deriv_pass)
    );

    // Pseudo-Hermite recurrence vs the Rodrigues expansion, p <= 6, exact
    // to 1e-12.
    let mut worst_ph = 0.0f64;
    for p in 0..=6usize {
        let mut q = vec![1.0f64];
        for _ in 0..p {
            let mut next = vec![0.0; q.len() + 1];
            for (k, &coef) in q.iter().enumerate() {
                if k >= 1 {
                    next[k - 1] += coef * k as f64;
                }
                next[k + 1] += 2.0 * coef;
            }
            q = next;
        }
        for &x in &[0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0] {
            let want = q.iter().rev().fold(0.0, |acc, &c| acc * x + c);
            let got = pseudo_hermite(p as u32, x);
            worst_ph = worst_ph.max((got - want).abs() / want.abs().max(1.0));
        }
    }
    let ph_pass = worst_ph <= 1e-12;
    println!(
        "acceptance 8c (pseudo-Hermite vs Rodrigues): {} (max rel dev = {worst_ph:.3e}, tol 1e-12)",
        status(ph_pass)
    );

    assert!(transform_pass, "transform residual {worst_transform}");
    assert!(deriv_pass, "derivative identity deviation {worst_deriv}");
    assert!(ph_pass, "pseudo-Hermite deviation {worst_ph}");
}

/// Figure datasets regenerate with their qualitative invariants intact.
#[test]
fn criterion_9_figure_data_regeneration() {
    let started = std::time::Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path();
    for which in 1..=5u8 {
        partnerpot_cli::figures::emit_figure(which, out, None, None).unwrap();
    }

    let read = |name: &str| -> (Vec<String>, Vec<Vec<f64>>) {
        let text = std::fs::read_to_string(out.join(name)).unwrap();
        let mut header = Vec::new();
        let mut cols: Vec<Vec<f64>> = Vec::new();
        for line in text.lines() {
            if line.starts_with('#') {
                continue;
            }
            if header.is_empty() {
                header = line.split(',').map(str::to_string).collect();
                cols = vec![Vec::new(); header.len()];
            } else {
                for (i, field) in line.split(',').enumerate() {
                    cols[i].push(field.parse().unwrap());
                }
            }
        }
        (header, cols)
    };
    let x_index = |cols: &[Vec<f64>], x: f64| -> usize {
        (0..cols[0].len())
            .min_by(|&i, &j| (cols[0][i] - x).abs().total_cmp(&(cols[0][j] - x).abs()))
            .unwrap()
    };

    // Figure 1: V(0) = -4p for p in {0.5, 1, 2, 4}.
    let (header1, cols1) = read("fig1_potentials.csv");
    let fig1_ps = [0.5, 1.0, 2.0, 4.0];
    let i0 = x_index(&cols1, 0.0);
    let mut fig1_pass = cols1[0][i0] == 0.0;
    for (col, &p) in header1.iter().skip(1).zip(fig1_ps.iter()) {
        let idx = header1.iter().position(|h| h == col).unwrap();
        fig1_pass &= (cols1[idx][i0] + 4.0 * p).abs() < 1e-12;
    }
    println!(
        "acceptance 9 fig1 (dimple depth V(0) = -4p): {}",
        status(fig1_pass)
    );

    // Figure 2: V(0) = -4p > 0 and exactly two wells below the bump.
    let (header2, cols2) = read("fig2_potentials.csv");
    let fig2_ps = [-0.3, -0.5, -0.7, -0.9];
    let mut fig2_pass = true;
    for (ci, &p) in (1..header2.len()).zip(fig2_ps.iter()) {
        let v0 = cols2[ci][i0];
        fig2_pass &= (v0 + 4.0 * p).abs() < 1e-12 && v0 > 0.0;
        let v = &cols2[ci];
        let mut wells = 0;
        for i in 1..v.len() - 1 {
            if v[i] < v[i - 1] && v[i] < v[i + 1] && v[i] < v0 {
                wells += 1;
            }
        }
        fig2_pass &= wells == 2;
    }
    println!(
        "acceptance 9 fig2 (double-well signature): {}",
        status(fig2_pass)
    );

    // Figures 3 and 4: ground-state peak displacement grows strictly with
    // the skew.
    let mut fig34_pass = true;
    for name in ["fig3_ground_state.csv", "fig4_ground_state.csv"] {
        let (header, cols) = read(name);
        let mut prev = -1.0f64;
        for ci in 1..header.len() {
            let imax = (0..cols[ci].len())
                .max_by(|&i, &j| cols[ci][i].abs().total_cmp(&cols[ci][j].abs()))
                .unwrap();
            let peak = cols[0][imax].abs();
            fig34_pass &= peak > prev || (prev == 0.0 && peak == 0.0);
            if ci == 1 {
                fig34_pass &= peak < 2.0; // unskewed member peaks near the origin
            }
            prev = peak;
        }
    }
    println!(
        "acceptance 9 fig3/4 (ground peak tracks skew): {}",
        status(fig34_pass)
    );

    // Figure 5: monotone ratio through ~2 near p = 200.
    let (_, cols5) = read("fig5_tc_ratio.csv");
    let ratios = &cols5[1];
    let mut fig5_pass = ratios.windows(2).all(|w| w[1] >= w[0]);
    let crossing = cols5[0]
        .iter()
        .zip(ratios.iter())
        .find(|(_, &r)| r >= 2.0)
        .map(|(&p, _)| p);
    match crossing {
        Some(p) => fig5_pass &= (180.0..=220.0).contains(&p),
        None => fig5_pass = false,
    }
    println!(
        "acceptance 9 fig5 (Tc ratio doubles near p = 200): {} (crossing at {:?})",
        status(fig5_pass),
        crossing
    );

    let elapsed = started.elapsed();
    let runtime_pass = elapsed.as_secs() < 60;
    println!(
        "acceptance 9 runtime: {} ({:.1}s, budget 60s)",
        status(runtime_pass),
        elapsed.as_secs_f64()
    );

    assert!(fig1_pass, "figure 1 depth check failed");
    assert!(fig2_pass, "figure 2 double-well check failed");
    assert!(fig34_pass, "figure 3/4 peak-location check failed");
    assert!(fig5_pass, "figure 5 ratio check failed");
    assert!(runtime_pass, "figures exceeded runtime budget");
}
