//! Independent evaluations used to cross-check the closed forms.

use num_complex::Complex;

use crate::error::Result;
use crate::quadrature::integrate;
use crate::scalar::{lit, tol_floor, Real};
use crate::special::{ellip_k, jacobi_complex, ComplexPoint, EllipticModulus};

use super::TurningPoints;

/// z(u) = (k²d²/α²)(1 − α² sn²(u)).
pub fn z_of_u<T: Real>(tp: &TurningPoints<T>, sn: T) -> T {
    tp.k2 * tp.d2 / tp.alpha2 * (T::one() - tp.alpha2 * sn * sn)
}

/// P(z) = −(z − x₀)(z − x₁)(z − x₂).
pub fn p_of_z<T: Real>(tp: &TurningPoints<T>, z: T) -> T {
    -(z - tp.x0) * (z - tp.x1) * (z - tp.x2)
}

/// ∫ from u₀ to u₀ + K of (1 − α² sn²)(1 + m − 3m sn²)/(sn² cn² dn²) du, divided
/// by 12 d³ m α², integrated along u₀ → u₀ + ih → u₀ + ih + K → u₀ + K with
/// h chosen so the horizontal leg sits at Im u = ±K'/2.
pub fn l3_path_quadrature<T: Real>(
    tp: &TurningPoints<T>,
    u0: ComplexPoint<T>,
) -> Result<Complex<T>> {
    let (m, a2) = (tp.k2, tp.alpha2);
    let em = EllipticModulus::new(m)?;
    let k = ellip_k(em)?;
    let kp = ellip_k(em.complement())?;
    let level = if u0.im >= T::zero() {
        kp / lit(2.0)
    } else {
        -kp / lit(2.0)
    };
    let p0 = u0;
    let p1 = Complex::new(u0.re, level);
    let p2 = p1 + k;
    let p3 = u0 + k;

    let integrand = |u: Complex<T>| -> Complex<T> {
        match jacobi_complex(u, em) {
            Ok(t) => {
                let x = t.sn * t.sn;
                let one = Complex::new(T::one(), T::zero());
                (one - x * a2) * (one * (T::one() + m) - x * (lit::<T>(3.0) * m))
                    / (x * t.cn * t.cn * t.dn * t.dn)
            }
            Err(_) => Complex::new(T::nan(), T::nan()),
        }
    };
    let tol = tol_floor::<T>(1e-13, 64.0);
    let mut total = Complex::new(T::zero(), T::zero());
    for (a, b) in [(p0, p1), (p1, p2), (p2, p3)] {
        let d = b - a;
        if d.norm() == T::zero() {
            continue;
        }
        let re = integrate(
            |s: T| (integrand(a + d * s) * d).re,
            T::zero(),
            T::one(),
            tol,
            tol,
        )?;
        let im = integrate(
            |s: T| (integrand(a + d * s) * d).im,
            T::zero(),
            T::one(),
            tol,
            tol,
        )?;
        total += Complex::new(re.value, im.value);
    }
    Ok(total / (lit::<T>(12.0) * tp.d3() * m * a2))
}
