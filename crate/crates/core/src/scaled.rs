//! Sign/log-magnitude representation for quantities that grow like `e^{x^2}`.
//!
//! Seed solutions and their Kummer-series building blocks overflow `f64`
//! well inside the supported coordinate range, so intermediate values are
//! carried as a sign together with the natural log of the absolute value.

/// A real number stored as `sign * exp(log_abs)`.
///
/// `sign == 0` encodes exact zero; `log_abs` is meaningless in that case.
#[derive(Debug, Clone, Copy)]
pub struct ScaledReal {
    sign: i8,
    log_abs: f64,
}

impl ScaledReal {
    pub const ZERO: ScaledReal = ScaledReal {
        sign: 0,
        log_abs: f64::NEG_INFINITY,
    };

    pub const ONE: ScaledReal = ScaledReal {
        sign: 1,
        log_abs: 0.0,
    };

    /// Build from an explicit sign and log-magnitude.
    pub fn compose(sign: i8, log_abs: f64) -> Self {
        assert!(matches!(sign, -1..=1), "sign must be -1, 0 or +1");
        if sign == 0 {
            Self::ZERO
        } else {
            Self { sign, log_abs }
        }
    }

    pub fn from_f64(value: f64) -> Self {
        if value == 0.0 {
            Self::ZERO
        } else {
            Self {
                sign: if value > 0.0 { 1 } else { -1 },
                log_abs: value.abs().ln(),
            }
        }
    }

    /// Convert back to `f64`; saturates to `0` / `±inf` outside range.
    pub fn to_f64(self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => f64::from(s) * self.log_abs.exp(),
        }
    }

    pub fn sign(self) -> i8 {
        self.sign
    }

    pub fn log_abs(self) -> f64 {
        self.log_abs
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn abs(self) -> Self {
        Self {
            sign: self.sign.abs(),
            log_abs: self.log_abs,
        }
    }

    pub fn neg(self) -> Self {
        Self {
            sign: -self.sign,
            log_abs: self.log_abs,
        }
    }

    pub fn mul(self, rhs: Self) -> Self {
        let sign = self.sign * rhs.sign;
        if sign == 0 {
            Self::ZERO
        } else {
            Self {
                sign,
                log_abs: self.log_abs + rhs.log_abs,
            }
        }
    }

    pub fn recip(self) -> Self {
        assert!(self.sign != 0, "reciprocal of zero");
        Self {
            sign: self.sign,
            log_abs: -self.log_abs,
        }
    }

    pub fn div(self, rhs: Self) -> Self {
        self.mul(rhs.recip())
    }

    /// Multiply by `e^delta` without touching the sign.
    pub fn scale_exp(self, delta: f64) -> Self {
        if self.sign == 0 {
            self
        } else {
            Self {
                sign: self.sign,
                log_abs: self.log_abs + delta,
            }
        }
    }

    /// Addition via max-shifted exponents; never overflows for operands with
    /// `log_abs <= 700`.
    pub fn add(self, rhs: Self) -> Self {
        match (self.sign, rhs.sign) {
            (0, _) => rhs,
            (_, 0) => self,
            (a, b) if a == b => {
                let (hi, lo) = if self.log_abs >= rhs.log_abs {
                    (self.log_abs, rhs.log_abs)
                } else {
                    (rhs.log_abs, self.log_abs)
                };
                Self {
                    sign: a,
                    log_abs: hi + (lo - hi).exp().ln_1p(),
                }
            }
            _ => {
                // Opposite signs: the larger magnitude wins.
                if self.log_abs == rhs.log_abs {
                    return Self::ZERO;
                }
                let (win, hi, lo) = if self.log_abs > rhs.log_abs {
                    (self.sign, self.log_abs, rhs.log_abs)
                } else {
                    (rhs.sign, rhs.log_abs, self.log_abs)
                };
                Self {
                    sign: win,
                    log_abs: hi + (-((lo - hi).exp())).ln_1p(),
                }
            }
        }
    }

    pub fn sub(self, rhs: Self) -> Self {
        self.add(rhs.neg())
    }

    /// `self / rhs` evaluated directly as an `f64`.
    pub fn ratio_f64(self, rhs: Self) -> f64 {
        assert!(rhs.sign != 0, "division by zero");
        if self.sign == 0 {
            return 0.0;
        }
        f64::from(self.sign * rhs.sign) * (self.log_abs - rhs.log_abs).exp()
    }
}
