//! Bracketed scalar root finding: bisection and Brent's method.

use crate::error::{Error, Result};
use crate::scalar::{lit, to_f64, Real};

/// A bracketing interval `[lo, hi]` with function values of opposite sign.
#[derive(Debug, Clone, Copy)]
pub struct Bracket<T> {
    pub lo: T,
    pub hi: T,
    pub f_lo: T,
    pub f_hi: T,
}

impl<T: Real> Bracket<T> {
    pub fn new<F: FnMut(T) -> Result<T>>(f: &mut F, lo: T, hi: T) -> Result<Self> {
        let f_lo = f(lo)?;
        let f_hi = f(hi)?;
        if f_lo * f_hi > T::zero() {
            return Err(Error::Domain {
                what: "bracket",
                detail: format!(
                    "f({}) = {} and f({}) = {} have the same sign",
                    to_f64(lo),
                    to_f64(f_lo),
                    to_f64(hi),
                    to_f64(f_hi)
                ),
            });
        }
        Ok(Bracket { lo, hi, f_lo, f_hi })
    }
}

/// Halves the bracket until its width is below `width`.
pub fn bisect<T, F>(f: &mut F, mut br: Bracket<T>, width: T) -> Result<Bracket<T>>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    for _ in 0..200 {
        if (br.hi - br.lo).abs() <= width || br.f_lo == T::zero() || br.f_hi == T::zero() {
            break;
        }
        let mid = (br.lo + br.hi) * lit(0.5);
        let fm = f(mid)?;
        if (fm < T::zero()) == (br.f_lo < T::zero()) {
            br.lo = mid;
            br.f_lo = fm;
        } else {
            br.hi = mid;
            br.f_hi = fm;
        }
    }
    Ok(br)
}

/// Brent's method. Stops when `|f(x)| <= ftol` or the bracket shrinks to
/// rounding level around the root.
pub fn brent<T, F>(f: &mut F, br: Bracket<T>, ftol: T, max_iter: usize) -> Result<(T, T)>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    let two: T = lit(2.0);
    let half: T = lit(0.5);
    let (mut a, mut b, mut fa, mut fb) = (br.lo, br.hi, br.f_lo, br.f_hi);
    if fa.abs() < fb.abs() {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut fa, &mut fb);
    }
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..max_iter {
        if fb.abs() <= ftol {
            return Ok((b, fb));
        }
        if (fb > T::zero()) == (fc > T::zero()) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = two * T::epsilon() * b.abs() + lit::<T>(1e-300).max(T::min_positive_value());
        let m = half * (c - b);
        if m.abs() <= tol {
            return Ok((b, fb));
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = two * m * s;
                q = T::one() - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (two * m * qa * (qa - r) - (b - a) * (r - T::one()));
                q = (qa - T::one()) * (r - T::one()) * (s - T::one());
            }
            if p > T::zero() {
                q = -q;
            } else {
                p = -p;
            }
            let three: T = lit(3.0);
            if two * p < (three * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b = if d.abs() > tol {
            b + d
        } else if m > T::zero() {
            b + tol
        } else {
            b - tol
        };
        fb = f(b)?;
    }
    Err(Error::NoConvergence {
        method: "brent",
        iterations: max_iter,
        residual: to_f64(fb.abs()),
    })
}
