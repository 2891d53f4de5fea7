//! Complete elliptic integrals K(m), E(m), Π(n, m) in the parameter
//! convention m = k².

use crate::error::{domain, Result};
use crate::scalar::{lit, to_f64, Real};

use super::carlson::{rd, rf, rj};

/// Squared modulus m = k², validated to lie in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EllipticModulus<T>(T);

impl<T: Real> EllipticModulus<T> {
    pub fn new(m: T) -> Result<Self> {
        if m.is_finite() && m >= T::zero() && m <= T::one() {
            Ok(Self(m))
        } else {
            Err(domain(
                "elliptic parameter m",
                format!("{} not in [0, 1]", to_f64(m)),
            ))
        }
    }

    #[inline]
    pub fn m(self) -> T {
        self.0
    }

    /// The complementary parameter m' = 1 − m.
    #[inline]
    pub fn complement(self) -> Self {
        Self(T::one() - self.0)
    }
}

/// Characteristic n of the third-kind integral; restricted to n < 1.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Characteristic<T>(T);

impl<T: Real> Characteristic<T> {
    pub fn new(n: T) -> Result<Self> {
        if n.is_finite() && n < T::one() {
            Ok(Self(n))
        } else {
            Err(domain(
                "characteristic n",
                format!("{} must be finite and < 1", to_f64(n)),
            ))
        }
    }

    #[inline]
    pub fn n(self) -> T {
        self.0
    }
}

/// K(m). Diverges at m = 1, which is rejected.
pub fn ellip_k<T: Real>(m: EllipticModulus<T>) -> Result<T> {
    let m = m.m();
    if m >= T::one() {
        return Err(domain("K(m)", "logarithmic singularity at m = 1"));
    }
    Ok(rf(T::zero(), T::one() - m, T::one()))
}

/// E(m) on the closed interval [0, 1].
pub fn ellip_e<T: Real>(m: EllipticModulus<T>) -> Result<T> {
    let m = m.m();
    if m == T::one() {
        return Ok(T::one());
    }
    let y = T::one() - m;
    Ok(rf(T::zero(), y, T::one()) - m / lit(3.0) * rd(T::zero(), y, T::one()))
}

/// Π(n, m) = ∫₀^{π/2} dθ / [(1 − n sin²θ) √(1 − m sin²θ)].
pub fn ellip_pi<T: Real>(n: Characteristic<T>, m: EllipticModulus<T>) -> Result<T> {
    let (n, m) = (n.n(), m.m());
    if m >= T::one() {
        return Err(domain("Π(n, m)", "m = 1 is singular"));
    }
    let y = T::one() - m;
    let k = rf(T::zero(), y, T::one());
    if n == T::zero() {
        return Ok(k);
    }
    Ok(k + n / lit(3.0) * rj(T::zero(), y, T::one(), T::one() - n))
}
