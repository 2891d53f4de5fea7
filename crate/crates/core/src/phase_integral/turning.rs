use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::DimensionlessCase;
use crate::scalar::{lit, to_f64, Real};

/// Roots x₀ < 0 < x₁ < x₂ of z³ − A z² − B z + (l+½)², with x₀ = S − T,
/// x₁ = S + T, and the elliptic parameters d² = x₂ − x₀,
/// k² = (x₂ − x₁)/(x₂ − x₀), α² = (x₂ − x₁)/x₂.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TurningPoints<T> {
    pub x0: T,
    pub x1: T,
    pub x2: T,
    pub s: T,
    pub t: T,
    pub d2: T,
    pub k2: T,
    pub alpha2: T,
}

impl<T: Real> TurningPoints<T> {
    /// Turning points for a given outer root x₂ of the case.
    pub fn from_x2(x2: T, case: &DimensionlessCase<T>) -> Result<Self> {
        if !(x2 > T::zero() && x2.is_finite()) {
            return Err(Error::Ordering(format!(
                "x2 = {} must be positive",
                to_f64(x2)
            )));
        }
        let lang = case.langer();
        let s = lang / (lit::<T>(2.0) * x2 * x2) - case.b / (lit::<T>(2.0) * x2);
        let t = (s * s + lang / x2).sqrt();
        let x1 = s + t;
        // x₂ − x₁ without cancellation: (x₂³ + B x₂ − 2L) / (x₂ (x₂ − S + T)).
        let gap = (x2 * x2 * x2 + case.b * x2 - lit::<T>(2.0) * lang) / (x2 * (x2 - s + t));
        if !(gap > T::zero()) {
            return Err(Error::Ordering(format!(
                "x1 = {} is not below x2 = {}",
                to_f64(x1),
                to_f64(x2)
            )));
        }
        let d2 = x2 - s + t;
        Ok(Self {
            x0: s - t,
            x1,
            x2,
            s,
            t,
            d2,
            k2: gap / d2,
            alpha2: gap / x2,
        })
    }

    /// Turning points from three explicit roots.
    pub fn from_roots(x0: T, x1: T, x2: T) -> Result<Self> {
        if !(x0 < T::zero() && T::zero() < x1 && x1 < x2) {
            return Err(Error::Ordering(format!(
                "need x0 < 0 < x1 < x2, got {}, {}, {}",
                to_f64(x0),
                to_f64(x1),
                to_f64(x2)
            )));
        }
        let s = (x0 + x1) / lit(2.0);
        let t = (x1 - x0) / lit(2.0);
        let d2 = x2 - x0;
        Ok(Self {
            x0,
            x1,
            x2,
            s,
            t,
            d2,
            k2: (x2 - x1) / d2,
            alpha2: (x2 - x1) / x2,
        })
    }

    /// A = x₀ + x₁ + x₂.
    pub fn eigenvalue(&self) -> T {
        self.x0 + self.x1 + self.x2
    }

    /// Coefficients (c₃, c₂, c₁, c₀) of (z − x₀)(z − x₁)(z − x₂).
    pub fn cubic(&self) -> [T; 4] {
        let (a, b, c) = (self.x0, self.x1, self.x2);
        [T::one(), -(a + b + c), a * b + b * c + c * a, -(a * b * c)]
    }

    /// d³.
    pub fn d3(&self) -> T {
        self.d2 * self.d2.sqrt()
    }

    /// Roots rebuilt from (d², k², α²).
    pub fn reconstructed_roots(&self) -> [T; 3] {
        let (d2, k2, a2) = (self.d2, self.k2, self.alpha2);
        [
            d2 * (k2 / a2 - T::one()),
            (T::one() / a2 - T::one()) * k2 * d2,
            k2 * d2 / a2,
        ]
    }
}

/// A = x₂ − B/x₂ + (l+½)²/x₂².
pub fn eigenvalue_from_x2<T: Real>(x2: T, case: &DimensionlessCase<T>) -> T {
    x2 - case.b / x2 + case.langer() / (x2 * x2)
}

/// Smallest admissible x₂: the positive root of z³ + B z − 2(l+½)² = 0.
/// For x₂ above it, 0 < x₁ < x₂.
pub fn x2_min<T: Real>(case: &DimensionlessCase<T>) -> T {
    let (b, two_l) = (case.b, lit::<T>(2.0) * case.langer());
    let f = |z: T| z * z * z + b * z - two_l;
    let mut z = two_l.cbrt().min(two_l / b.max(T::min_positive_value()));
    for _ in 0..100 {
        let step = f(z) / (lit::<T>(3.0) * z * z + b);
        z -= step;
        if step.abs() <= T::epsilon() * z.abs() {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vieta_and_ordering() {
        let case = DimensionlessCase::<f64>::new(2.0, 1, 0, 0).unwrap();
        let tp = TurningPoints::from_x2(3.1, &case).unwrap();
        assert!(tp.x0 < 0.0 && tp.x1 > 0.0 && tp.x1 < tp.x2);
        let a = eigenvalue_from_x2(3.1, &case);
        assert!((tp.eigenvalue() - a).abs() < 1e-14);
        assert!((tp.x0 * tp.x1 * tp.x2 + case.langer()).abs() < 1e-13);
        let [x0, x1, x2] = tp.reconstructed_roots();
        assert!(
            (x0 - tp.x0).abs() < 1e-13 && (x1 - tp.x1).abs() < 1e-13 && (x2 - 3.1).abs() < 1e-13
        );
    }

    #[test]
    fn threshold_separates_valid_region() {
        for (b, l) in [(0.0, 0), (2.0, 2), (10.0, 0)] {
            let case = DimensionlessCase::<f64>::new(b, l, 0, 0).unwrap();
            let z = x2_min(&case);
            assert!((z * z * z + b * z - 2.0 * case.langer()).abs() < 1e-12);
            assert!(TurningPoints::from_x2(z * 0.999, &case).is_err());
            assert!(TurningPoints::from_x2(z * 1.001, &case).is_ok());
        }
    }

    #[test]
    fn symmetric_pair() {
        let tp = TurningPoints::<f64>::from_roots(-1.5, 1.5, 4.0).unwrap();
        assert_eq!(tp.s, 0.0);
        assert_eq!(tp.x0, -tp.x1);
        assert!(TurningPoints::<f64>::from_roots(0.5, 1.5, 4.0).is_err());
    }
}
