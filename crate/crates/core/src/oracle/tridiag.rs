//! Symmetric tridiagonal eigensolver: Sturm-sequence bisection for
//! eigenvalues, inverse iteration for eigenvectors. No external numerical
//! dependencies; only the lowest few pairs are ever requested.

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly below
/// `lambda`, counted through the LDLᵀ Sturm sequence.
pub fn sturm_count(diag: &[f64], off: &[f64], lambda: f64) -> usize {
    let n = diag.len();
    if n == 0 {
        return 0;
    }
    let guard = 1e-300;
    let mut count = 0;
    let mut q = diag[0] - lambda;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let q_safe = if q.abs() < guard {
            if q >= 0.0 {
                guard
            } else {
                -guard
            }
        } else {
            q
        };
        q = (diag[i] - lambda) - off[i - 1] * off[i - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing the whole spectrum.
pub fn gershgorin(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for i in 0..n {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    (lo - 1.0, hi + 1.0)
}

/// The `m` smallest eigenvalues, ascending. Each is bisected until the
/// bracket narrows below `4·eps·max(|λ|,1)` or 1e-13 absolute.
pub fn lowest_eigenvalues(diag: &[f64], off: &[f64], m: usize) -> Vec<f64> {
    let (lo, hi) = gershgorin(diag, off);
    let mut out: Vec<f64> = Vec::with_capacity(m);
    for k in 0..m {
        let mut a = if k == 0 { lo } else { out[k - 1] - 1e-12 };
        let mut b = hi;
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            let width = b - a;
            if width < 1e-13 || width < 4.0 * f64::EPSILON * mid.abs().max(1.0) {
                break;
            }
            if sturm_count(diag, off, mid) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        out.push(0.5 * (a + b));
    }
    out
}

/// Solve (T - shift·I) x = rhs by Gaussian elimination with partial
/// pivoting (LINPACK dgtsl scheme); near-singular pivots are guarded, which
/// is exactly what inverse iteration wants.
fn shifted_solve(diag: &[f64], off: &[f64], shift: f64, rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    assert!(n >= 2 && off.len() == n - 1 && rhs.len() == n);
    // Row k carries (cc, dd, ee) = entries in columns (k, k+1, k+2) after
    // elimination; before step k, cc[k+1] holds the subdiagonal entry.
    let mut cc = vec![0.0; n];
    let mut dd = vec![0.0; n];
    let mut ee = vec![0.0; n];
    let mut b = rhs.to_vec();
    cc[0] = diag[0] - shift;
    dd[0] = off[0];
    for k in 1..n {
        cc[k] = off[k - 1];
        dd[k] = diag[k] - shift;
        if k <= n - 2 {
            ee[k] = off[k];
        }
    }
    for k in 0..n - 1 {
        if cc[k + 1].abs() >= cc[k].abs() {
            cc.swap(k, k + 1);
            dd.swap(k, k + 1);
            ee.swap(k, k + 1);
            b.swap(k, k + 1);
        }
        let pivot = if cc[k] == 0.0 { 1e-300 } else { cc[k] };
        let t = -cc[k + 1] / pivot;
        cc[k] = pivot;
        cc[k + 1] = dd[k + 1] + t * dd[k];
        dd[k + 1] = ee[k + 1] + t * ee[k];
        ee[k + 1] = 0.0;
        b[k + 1] += t * b[k];
    }
    if cc[n - 1] == 0.0 {
        cc[n - 1] = 1e-300;
    }
    b[n - 1] /= cc[n - 1];
    b[n - 2] = (b[n - 2] - dd[n - 2] * b[n - 1]) / cc[n - 2];
    for k in (0..n - 2).rev() {
        b[k] = (b[k] - dd[k] * b[k + 1] - ee[k] * b[k + 2]) / cc[k];
    }
    b
}

/// ‖T v - λ v‖₂ for a unit vector v.
pub fn residual_norm(diag: &[f64], off: &[f64], lambda: f64, v: &[f64]) -> f64 {
    let n = diag.len();
    let mut sum = 0.0;
    for i in 0..n {
        let mut r = (diag[i] - lambda) * v[i];
        if i > 0 {
            r += off[i - 1] * v[i - 1];
        }
        if i + 1 < n {
            r += off[i] * v[i + 1];
        }
        sum += r * r;
    }
    sum.sqrt()
}

fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Deterministic pseudo-random start vector (xorshift64*).
fn start_vector(n: usize, seed: u64) -> Vec<f64> {
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).max(1);
    let mut v = Vec::with_capacity(n);
    for _ in 0..n {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        let r = state.wrapping_mul(0x2545f4914f6cdd1d);
        v.push((r >> 11) as f64 / (1u64 << 53) as f64 - 0.5);
    }
    v
}

/// Unit eigenvector for a bisection-accurate eigenvalue, via inverse
/// iteration; `previous` holds already-computed vectors of nearby
/// eigenvalues to re-orthogonalize against.
pub fn inverse_iteration(diag: &[f64], off: &[f64], lambda: f64, previous: &[&[f64]]) -> Vec<f64> {
    let n = diag.len();
    let mut v = start_vector(n, n as u64 ^ lambda.to_bits());
    let nv = norm2(&v);
    for x in &mut v {
        *x /= nv;
    }
    let mut best = v.clone();
    let mut best_resid = f64::INFINITY;
    for _ in 0..4 {
        let mut w = shifted_solve(diag, off, lambda, &v);
        for prev in previous {
            let dot: f64 = w.iter().zip(prev.iter()).map(|(a, b)| a * b).sum();
            for (wi, pi) in w.iter_mut().zip(prev.iter()) {
                *wi -= dot * pi;
            }
        }
        let nw = norm2(&w);
        if !nw.is_finite() || nw == 0.0 {
            break;
        }
        for x in &mut w {
            *x /= nw;
        }
        let resid = residual_norm(diag, off, lambda, &w);
        if resid < best_resid {
            best_resid = resid;
            best = w.clone();
        }
        let scale = diag.iter().fold(0.0f64, |m, d| m.max(d.abs()));
        if resid <= 1e-13 * scale.max(1.0) {
            break;
        }
        v = w;
    }
    // Fix the overall sign: positive at the largest-magnitude component.
    let (imax, _) = best
        .iter()
        .enumerate()
        .fold((0, 0.0f64), |(bi, bv), (i, &x)| {
            if x.abs() > bv {
                (i, x.abs())
            } else {
                (bi, bv)
            }
        });
    if best[imax] < 0.0 {
        for x in &mut best {
            *x = -*x;
        }
    }
    best
}
