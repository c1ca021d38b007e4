//! Composite Simpson quadrature on uniform grids.

/// Composite Simpson integral of uniformly spaced samples.
///
/// Requires an odd sample count of at least 9; error is O(h⁴) for smooth
/// integrands.
pub fn simpson(samples: &[f64], h: f64) -> f64 {
    assert!(
        samples.len() >= 9 && samples.len() % 2 == 1,
        "composite Simpson needs an odd sample count >= 9, got {}",
        samples.len()
    );
    let n = samples.len();
    let mut sum = samples[0] + samples[n - 1];
    let mut four = 0.0;
    let mut two = 0.0;
    for (i, &s) in samples.iter().enumerate().take(n - 1).skip(1) {
        if i % 2 == 1 {
            four += s;
        } else {
            two += s;
        }
    }
    sum += 4.0 * four + 2.0 * two;
    sum * h / 3.0
}

/// Sample `f` on `n` uniform nodes spanning `[a, b]` (inclusive) and
/// integrate. `n` must be odd and >= 9.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / (n - 1) as f64;
    let samples: Vec<f64> = (0..n).map(|i| f(a + i as f64 * h)).collect();
    simpson(&samples, h)
}
