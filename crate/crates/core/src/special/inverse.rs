//! Inverse of sn in the complex plane with a deterministic branch choice.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{lit, to_f64, tol_floor, Real};

use super::carlson::rf_complex;
use super::complete::{ellip_k, EllipticModulus};
use super::jacobi::{jacobi_complex, ComplexPoint};

const NEWTON_STEPS: usize = 12;

/// A u with sn(u, m) = w.
///
/// Among the preimages, the one with re(u) ∈ [0, K] and im(u) ∈ [0, K'] of
/// smallest modulus is returned. If no preimage lies in that quarter cell the
/// smallest-modulus preimage in [−K, K] × [−K', K'] is returned instead.
pub fn inverse_sn<T: Real>(w: Complex<T>, m: EllipticModulus<T>) -> Result<ComplexPoint<T>> {
    if !(w.re.is_finite() && w.im.is_finite()) {
        return Err(crate::error::domain("inverse_sn", "w must be finite"));
    }
    let zero = Complex::new(T::zero(), T::zero());
    if w == zero {
        return Ok(zero);
    }
    let one = Complex::new(T::one(), T::zero());
    let mm = m.m();
    let w2 = w * w;
    let mut u = w * rf_complex(one - w2, one - w2 * mm, one);
    u = polish(u, w, m)?;
    let u = canonical_branch(u, m)?;

    let t = jacobi_complex(u, m)?;
    let err = (t.sn - w).norm();
    let tol = tol_floor::<T>(1e-10, 64.0) * w.norm().max(T::one());
    if !(err <= tol) {
        return Err(Error::NoConvergence {
            method: "inverse_sn",
            iterations: NEWTON_STEPS,
            residual: to_f64(err),
        });
    }
    Ok(u)
}

fn polish<T: Real>(mut u: Complex<T>, w: Complex<T>, m: EllipticModulus<T>) -> Result<Complex<T>> {
    let mut t = jacobi_complex(u, m)?;
    let mut err = (t.sn - w).norm();
    for _ in 0..NEWTON_STEPS {
        let slope = t.cn * t.dn;
        if slope.norm() <= T::epsilon() || err == T::zero() {
            break;
        }
        let next = u - (t.sn - w) / slope;
        let tn = match jacobi_complex(next, m) {
            Ok(tn) => tn,
            Err(_) => break,
        };
        let en = (tn.sn - w).norm();
        if !(en < err) {
            break;
        }
        u = next;
        t = tn;
        err = en;
    }
    Ok(u)
}

fn canonical_branch<T: Real>(u: Complex<T>, m: EllipticModulus<T>) -> Result<Complex<T>> {
    let mm = m.m();
    let k = if mm < T::one() {
        Some(ellip_k(m)?)
    } else {
        None
    };
    let kp = if mm > T::zero() {
        Some(ellip_k(m.complement())?)
    } else {
        None
    };

    let mut seeds = vec![u];
    if let Some(k) = k {
        seeds.push(Complex::new(lit::<T>(2.0) * k, T::zero()) - u);
    }
    let mut candidates = Vec::new();
    for s in seeds {
        let mut s = s;
        if let Some(k) = k {
            let p = lit::<T>(4.0) * k;
            s.re = s.re - p * (s.re / p).round();
        }
        if let Some(kp) = kp {
            let p = lit::<T>(2.0) * kp;
            s.im = s.im - p * (s.im / p).round();
        }
        candidates.push(s);
    }

    let slack = lit::<T>(1e3) * T::epsilon();
    let inside = |c: &Complex<T>, lo_re: T, lo_im: T| {
        let re_ok = match k {
            Some(k) => c.re >= lo_re * k - slack && c.re <= k * (T::one() + slack),
            None => lo_re < T::zero() || c.re >= -slack,
        };
        let im_ok = match kp {
            Some(kp) => c.im >= lo_im * kp - slack && c.im <= kp * (T::one() + slack),
            None => lo_im < T::zero() || c.im >= -slack,
        };
        re_ok && im_ok
    };
    let smallest = |pred: &dyn Fn(&Complex<T>) -> bool| {
        candidates
            .iter()
            .copied()
            .filter(|c| pred(c))
            .min_by(|a, b| {
                a.norm()
                    .partial_cmp(&b.norm())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
    };
    let one = T::one();
    let preferred = smallest(&|c| inside(c, T::zero(), T::zero()));
    let fallback = || smallest(&|c| inside(c, -one, -one));
    Ok(preferred.or_else(fallback).unwrap_or(candidates[0]))
}
