//! Sign/log-magnitude representation for quantities built from cosh/sinh
//! factors at large axial coordinate, where the raw products overflow f64.

/// A real number stored as (sign, ln|x|). Zero is sign 0 with ln_abs = -inf.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogScaled {
    pub sign: i8,
    pub ln_abs: f64,
}

impl LogScaled {
    pub const ZERO: LogScaled = LogScaled { sign: 0, ln_abs: f64::NEG_INFINITY };

    pub fn new(sign: i8, ln_abs: f64) -> Self {
        if sign == 0 {
            Self::ZERO
        } else {
            Self { sign: sign.signum(), ln_abs }
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            Self { sign: if x > 0.0 { 1 } else { -1 }, ln_abs: x.abs().ln() }
        }
    }

    /// ln cosh with the large-argument expansion; exact for all finite v.
    pub fn ln_cosh(v: f64) -> f64 {
        let a = v.abs();
        if a > 30.0 {
            a - std::f64::consts::LN_2 + (-2.0 * a).exp().ln_1p()
        } else {
            v.cosh().ln()
        }
    }

    /// ln |sinh| with the large-argument expansion.
    pub fn ln_sinh_abs(v: f64) -> f64 {
        let a = v.abs();
        if a == 0.0 {
            f64::NEG_INFINITY
        } else if a > 30.0 {
            a - std::f64::consts::LN_2 + (-(-2.0 * a).exp()).ln_1p()
        } else {
            a.sinh().ln()
        }
    }

    /// Recover the f64 value when representable, `None` on overflow.
    pub fn to_f64(self) -> Option<f64> {
        if self.sign == 0 {
            return Some(0.0);
        }
        let v = self.ln_abs.exp();
        if v.is_finite() {
            Some(self.sign as f64 * v)
        } else {
            None
        }
    }

    pub fn mul(self, other: Self) -> Self {
        Self::new(self.sign * other.sign, self.ln_abs + other.ln_abs)
    }

    pub fn div(self, other: Self) -> Self {
        assert!(other.sign != 0, "division by log-scaled zero");
        Self::new(self.sign * other.sign, self.ln_abs - other.ln_abs)
    }

    pub fn powi(self, k: i32) -> Self {
        if self.sign == 0 {
            return if k == 0 { Self::from_f64(1.0) } else { Self::ZERO };
        }
        let sign = if k % 2 == 0 { 1 } else { self.sign };
        Self::new(sign, self.ln_abs * k as f64)
    }

    /// Addition by log-sum-exp on the dominant magnitude.
    pub fn add(self, other: Self) -> Self {
        if self.sign == 0 {
            return other;
        }
        if other.sign == 0 {
            return self;
        }
        let (big, small) = if self.ln_abs >= other.ln_abs { (self, other) } else { (other, self) };
        let r = (small.ln_abs - big.ln_abs).exp();
        if big.sign == small.sign {
            Self::new(big.sign, big.ln_abs + r.ln_1p())
        } else if r == 1.0 {
            Self::ZERO
        } else {
            Self::new(big.sign, big.ln_abs + (-r).ln_1p())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn roundtrip_and_arithmetic() {
        let a = LogScaled::from_f64(3.5);
        let b = LogScaled::from_f64(-2.0);
        assert_relative_eq!(a.mul(b).to_f64().unwrap(), -7.0, max_relative = 1e-15);
        assert_relative_eq!(a.add(b).to_f64().unwrap(), 1.5, max_relative = 1e-14);
        assert_relative_eq!(a.powi(3).to_f64().unwrap(), 42.875, max_relative = 1e-14);
    }

    #[test]
    fn ln_cosh_large_argument() {
        // cosh(1000) overflows f64 but its log is representable.
        let l = LogScaled::ln_cosh(1000.0);
        assert_relative_eq!(l, 1000.0 - std::f64::consts::LN_2, max_relative = 1e-15);
        assert!(LogScaled::new(1, l).to_f64().is_none());
    }

    #[test]
    fn ln_cosh_matches_direct_at_moderate_v() {
        for v in [0.0, 1.0, 10.0, 29.0, 31.0, 50.0] {
            assert_relative_eq!(LogScaled::ln_cosh(v), v.cosh().ln(), max_relative = 1e-14);
        }
    }
}
