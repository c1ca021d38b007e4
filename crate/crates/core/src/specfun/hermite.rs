//! Physicists' Hermite polynomials and their all-positive-sign companions.

/// H_k(x) via the recurrence H_{k+1} = 2x H_k - 2k H_{k-1}.
///
/// Values overflow f64 around k ≈ 300 on the supported coordinate range;
/// the library only ever asks for k ≤ 31.
pub fn hermite_poly(k: u32, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * x;
    for n in 1..k {
        let next = 2.0 * x * cur - 2.0 * f64::from(n) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Hermite polynomial with every minus sign removed: the value of
/// `e^{-x^2} (d/dx)^p e^{x^2}`, grown by the sign-free recurrence
/// ℋ_{k+1} = 2x ℋ_k + 2k ℋ_{k-1}, ℋ_0 = 1, ℋ_1 = 2x.
///
/// Supported for p ≤ 200 (beyond that the values overflow f64).
pub fn pseudo_hermite(p: u32, x: f64) -> f64 {
    if p == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * x;
    for n in 1..p {
        let next = 2.0 * x * cur + 2.0 * f64::from(n) * prev;
        prev = cur;
        cur = next;
    }
    cur
}
