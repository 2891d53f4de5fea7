use crate::error::{domain, Result};
use crate::quadrature::integrate;
use crate::scalar::{lit, tol_floor, Real};
use crate::special::{
    ellip_e, ellip_k, ellip_pi, jacobi_sn_cn_dn, Characteristic, EllipticModulus,
};

use super::TurningPoints;

fn f1<T: Real>(m: T, a2: T) -> T {
    let a4 = a2 * a2;
    lit::<T>(2.0) * m * ((T::one() - m) * a4 + lit::<T>(3.0) * m * m * (a2 - T::one()))
        / (lit::<T>(3.0) * a4)
}

/// First-order quantization integral in closed form:
///
/// L⁽¹⁾ = d³ [ f₁(m, α²)(K − E)/m + f₁(1 − m, α′²) E/(1 − m)
///        + 2m(1 − m)(α² − 1)/(α² α′²) Π(α², m) ],
///
/// f₁(m, α²) = 2m[(1 − m)α⁴ + 3m²(α² − 1)]/(3α⁴), α′² = α²(1 − m)/(α² − m).
pub fn l1_closed<T: Real>(tp: &TurningPoints<T>) -> Result<T> {
    let (m, a2) = (tp.k2, tp.alpha2);
    if (a2 - m).abs() <= lit::<T>(1e-10) * a2.abs().max(T::one()) {
        return Err(domain("L1", "α² = m makes α′² singular"));
    }
    let em = EllipticModulus::new(m)?;
    let (k, e) = (ellip_k(em)?, ellip_e(em)?);
    let pi = ellip_pi(Characteristic::new(a2)?, em)?;
    let one = T::one();
    let ap2 = a2 * (one - m) / (a2 - m);
    let value = f1(m, a2) * (k - e) / m
        + f1(one - m, ap2) * e / (one - m)
        + lit::<T>(2.0) * m * (one - m) * (a2 - one) / (a2 * ap2) * pi;
    Ok(tp.d3() * value)
}

/// L⁽¹⁾ = 2k²d³α² ∫₀^K sn²cn²dn² / (1 − α² sn²) du by adaptive quadrature.
pub fn l1_quadrature<T: Real>(tp: &TurningPoints<T>) -> Result<T> {
    let em = EllipticModulus::new(tp.k2)?;
    let k = ellip_k(em)?;
    let a2 = tp.alpha2;
    let integrand = |u: T| match jacobi_sn_cn_dn(u, em) {
        Ok(j) => {
            let s2 = j.sn * j.sn;
            s2 * j.cn * j.cn * j.dn * j.dn / (T::one() - a2 * s2)
        }
        Err(_) => T::nan(),
    };
    let tol = tol_floor::<T>(1e-13, 64.0);
    let r = integrate(integrand, T::zero(), k, tol * lit(1e-3), tol)?;
    Ok(lit::<T>(2.0) * tp.k2 * tp.d3() * a2 * r.value)
}

/// L⁽¹⁾ = ∫_{x₁}^{x₂} √P(z)/z dz with P = −(z − x₀)(z − x₁)(z − x₂), straight in z.
pub fn l1_z_quadrature<T: Real>(tp: &TurningPoints<T>) -> Result<T> {
    let (x0, x1, x2) = (tp.x0, tp.x1, tp.x2);
    // z = x₁ + (x₂ − x₁) sin²θ removes the square-root endpoint behaviour.
    let w = x2 - x1;
    let integrand = |th: T| {
        let (s, c) = th.sin_cos();
        let z = x1 + w * s * s;
        let p = (z - x0) * (w * s * s) * (w * c * c);
        p.max(T::zero()).sqrt() / z * lit::<T>(2.0) * w * s * c
    };
    let tol = tol_floor::<T>(1e-13, 64.0);
    Ok(integrate(integrand, T::zero(), T::FRAC_PI_2(), tol * lit(1e-3), tol)?.value)
}
