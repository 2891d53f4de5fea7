//! Jacobi's epsilon function ℰ(u, m) = ∫₀ᵘ dn²(t, m) dt and the three
//! antiderivatives Z₁ = ∫du/sn², Z₂ = ∫du/cn², Z₃ = ∫du/dn².

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{lit, to_f64, Real};

use super::carlson::{rd, rf};
use super::complete::{ellip_e, ellip_k, EllipticModulus};
use super::jacobi::{jacobi_complex, jacobi_sn_cn_dn, ComplexPoint};

/// ℰ(u, m) for real u.
pub fn jacobi_epsilon<T: Real>(u: T, m: EllipticModulus<T>) -> Result<T> {
    let mm = m.m();
    if mm == T::zero() {
        return Ok(u);
    }
    if mm == T::one() {
        return Ok(u.tanh());
    }
    let k = ellip_k(m)?;
    let two_k = lit::<T>(2.0) * k;
    let periods = (u / two_k).round();
    let r = u - periods * two_k;
    let t = jacobi_sn_cn_dn(r, m)?;
    let (c2, d2) = (t.cn * t.cn, t.dn * t.dn);
    let base =
        t.sn * rf(c2, d2, T::one()) - mm / lit(3.0) * t.sn * t.sn * t.sn * rd(c2, d2, T::one());
    Ok(base + lit::<T>(2.0) * periods * ellip_e(m)?)
}

/// ℰ(u, m) for complex u, via ℰ(iy, m) = i[y − ℰ(y, m') + sn·dn/cn(y, m')]
/// and ℰ(x + iy) = ℰ(x) + ℰ(iy) − m sn(x) sn(iy) sn(x + iy).
pub fn jacobi_epsilon_complex<T: Real>(
    u: ComplexPoint<T>,
    m: EllipticModulus<T>,
) -> Result<Complex<T>> {
    let ex = jacobi_epsilon(u.re, m)?;
    if u.im == T::zero() {
        return Ok(Complex::new(ex, T::zero()));
    }
    let mc = m.complement();
    let t1 = jacobi_sn_cn_dn(u.im, mc)?;
    if t1.cn.abs() <= T::epsilon() * T::epsilon() {
        return Err(Error::Singular(format!(
            "ℰ has a pole at im(u) = {}",
            to_f64(u.im)
        )));
    }
    let eiy = Complex::new(
        T::zero(),
        u.im - jacobi_epsilon(u.im, mc)? + t1.sn * t1.dn / t1.cn,
    );
    if u.re == T::zero() {
        return Ok(eiy);
    }
    let snx = jacobi_sn_cn_dn(u.re, m)?.sn;
    let sniy = Complex::new(T::zero(), t1.sn / t1.cn);
    let snu = jacobi_complex(u, m)?.sn;
    Ok(Complex::new(ex, T::zero()) + eiy - sniy * snu * (m.m() * snx))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZIntegrals<T> {
    pub z1: Complex<T>,
    pub z2: Complex<T>,
    pub z3: Complex<T>,
}

/// Z₁, Z₂, Z₃ at u. Needs m < 1 and sn, cn, dn away from zero.
pub fn z_integrals<T: Real>(u: ComplexPoint<T>, m: EllipticModulus<T>) -> Result<ZIntegrals<T>> {
    let mm = m.m();
    if mm >= T::one() {
        return Err(crate::error::domain(
            "Z integrals",
            "m = 1 makes Z₂, Z₃ singular",
        ));
    }
    let t = jacobi_complex(u, m)?;
    let tiny: T = lit(1e-12);
    if t.min_abs() <= tiny {
        return Err(Error::Singular(format!(
            "sn, cn or dn vanishes at u = {} + {}i",
            to_f64(u.re),
            to_f64(u.im)
        )));
    }
    let e = jacobi_epsilon_complex(u, m)?;
    let mc = T::one() - mm;
    let z1 = -(t.cn * t.dn / t.sn) + u - e;
    let z2 = t.dn * t.sn / t.cn / mc + u - e / mc;
    let z3 = -(t.cn * t.sn / t.dn) * (mm / mc) + e / mc;
    Ok(ZIntegrals { z1, z2, z3 })
}
