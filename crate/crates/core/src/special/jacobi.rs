//! Jacobi elliptic functions for real argument (descending Landen / AGM)
//! and complex argument (addition theorem plus the imaginary transformation).

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{lit, to_f64, Real};

use super::complete::{ellip_k, EllipticModulus};

/// Point in the complex u-plane.
pub type ComplexPoint<T> = Complex<T>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiTriple<T> {
    pub sn: T,
    pub cn: T,
    pub dn: T,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexJacobiTriple<T> {
    pub sn: Complex<T>,
    pub cn: Complex<T>,
    pub dn: Complex<T>,
}

impl<T: Real> ComplexJacobiTriple<T> {
    /// Smallest of |sn|, |cn|, |dn|.
    pub fn min_abs(&self) -> T {
        self.sn.norm().min(self.cn.norm()).min(self.dn.norm())
    }
}

const AGM_LEVELS: usize = 40;

/// sn, cn, dn for real u. Returns a domain error only for non-finite u.
pub fn jacobi_sn_cn_dn<T: Real>(u: T, m: EllipticModulus<T>) -> Result<JacobiTriple<T>> {
    if !u.is_finite() {
        return Err(crate::error::domain("u", "argument must be finite"));
    }
    let mm = m.m();
    if mm == T::zero() {
        return Ok(JacobiTriple {
            sn: u.sin(),
            cn: u.cos(),
            dn: T::one(),
        });
    }
    if mm == T::one() {
        let sech = T::one() / u.cosh();
        return Ok(JacobiTriple {
            sn: u.tanh(),
            cn: sech,
            dn: sech,
        });
    }

    // Reduce modulo the real period 4K to keep the amplitude small.
    let four_k = lit::<T>(4.0) * ellip_k(m)?;
    let u = u - four_k * (u / four_k).round();

    let mut a = [T::zero(); AGM_LEVELS + 1];
    let mut c = [T::zero(); AGM_LEVELS + 1];
    a[0] = T::one();
    let mut b = (T::one() - mm).sqrt();
    c[0] = mm.sqrt();
    let mut n = 0;
    while n < AGM_LEVELS && c[n].abs() > T::epsilon() {
        let an = a[n];
        a[n + 1] = (an + b) / lit(2.0);
        c[n + 1] = (an - b) / lit(2.0);
        b = (an * b).sqrt();
        n += 1;
    }
    let mut phi = lit::<T>(2.0).powi(n as i32) * a[n] * u;
    for k in (1..=n).rev() {
        phi = (phi + (c[k] / a[k] * phi.sin()).asin()) / lit(2.0);
    }
    let (sn, cn) = (phi.sin(), phi.cos());
    // dn² = cn² + m' sn² has no cancellation for real u.
    let dn = (cn * cn + (T::one() - mm) * sn * sn).sqrt();
    Ok(JacobiTriple { sn, cn, dn })
}

/// sn, cn, dn at complex u = x + iy.
///
/// With s, c, d at (x, m) and s1, c1, d1 at (y, 1 − m):
/// sn = (s d1 + i c d s1 c1)/δ, cn = (c c1 − i s d s1 d1)/δ,
/// dn = (d c1 d1 − i m s c s1)/δ, δ = c1² + m s² s1².
pub fn jacobi_complex<T: Real>(
    u: ComplexPoint<T>,
    m: EllipticModulus<T>,
) -> Result<ComplexJacobiTriple<T>> {
    if !(u.re.is_finite() && u.im.is_finite()) {
        return Err(crate::error::domain("u", "argument must be finite"));
    }
    let r = jacobi_sn_cn_dn(u.re, m)?;
    if u.im == T::zero() {
        let z = T::zero();
        return Ok(ComplexJacobiTriple {
            sn: Complex::new(r.sn, z),
            cn: Complex::new(r.cn, z),
            dn: Complex::new(r.dn, z),
        });
    }
    let i = jacobi_sn_cn_dn(u.im, m.complement())?;
    let mm = m.m();
    let delta = i.cn * i.cn + mm * r.sn * r.sn * i.sn * i.sn;
    if delta.abs() <= T::epsilon() * T::epsilon() {
        return Err(Error::Singular(format!(
            "u = {} + {}i is at a pole (denominator {:e})",
            to_f64(u.re),
            to_f64(u.im),
            to_f64(delta)
        )));
    }
    let sn = Complex::new(r.sn * i.dn, r.cn * r.dn * i.sn * i.cn) / delta;
    let cn = Complex::new(r.cn * i.cn, -r.sn * r.dn * i.sn * i.dn) / delta;
    let dn = Complex::new(r.dn * i.cn * i.dn, -mm * r.sn * r.cn * i.sn) / delta;
    Ok(ComplexJacobiTriple { sn, cn, dn })
}
