//! Carlson symmetric elliptic integrals R_F, R_D, R_J, R_C by the duplication
//! theorem with a fifth-order Taylor tail.

use num_complex::Complex;

use crate::scalar::{lit, Real};

const MAX_DUPLICATIONS: usize = 200;

fn max3<T: Real>(a: T, b: T, c: T) -> T {
    a.max(b).max(c)
}

/// R_F(x, y, z) for non-negative arguments, at most one of them zero.
pub fn rf<T: Real>(x: T, y: T, z: T) -> T {
    let (x0, y0) = (x, y);
    let (mut x, mut y, mut z) = (x, y, z);
    let a0 = (x + y + z) / lit(3.0);
    let q = (lit::<T>(3.0) * T::epsilon()).powf(lit(-1.0 / 6.0))
        * max3((a0 - x).abs(), (a0 - y).abs(), (a0 - z).abs());
    let mut a = a0;
    let mut scale = T::one();
    for _ in 0..MAX_DUPLICATIONS {
        if q * scale < a.abs() {
            break;
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lam = sx * sy + sy * sz + sz * sx;
        x = (x + lam) / lit(4.0);
        y = (y + lam) / lit(4.0);
        z = (z + lam) / lit(4.0);
        a = (a + lam) / lit(4.0);
        scale /= lit(4.0);
    }
    let xx = (a0 - x0) * scale / a;
    let yy = (a0 - y0) * scale / a;
    let zz = -(xx + yy);
    let e2 = xx * yy - zz * zz;
    let e3 = xx * yy * zz;
    (T::one() - e2 / lit(10.0) + e3 / lit(14.0) + e2 * e2 / lit(24.0)
        - lit::<T>(3.0) * e2 * e3 / lit(44.0))
        / a.sqrt()
}

/// R_D(x, y, z): x, y non-negative (at most one zero), z positive.
pub fn rd<T: Real>(x: T, y: T, z: T) -> T {
    let (x0, y0) = (x, y);
    let (mut x, mut y, mut z) = (x, y, z);
    let a0 = (x + y + lit::<T>(3.0) * z) / lit(5.0);
    let q = (T::epsilon() / lit(4.0)).powf(lit(-1.0 / 6.0))
        * max3((a0 - x).abs(), (a0 - y).abs(), (a0 - z).abs());
    let mut a = a0;
    let mut scale = T::one();
    let mut sum = T::zero();
    for _ in 0..MAX_DUPLICATIONS {
        if q * scale < a.abs() {
            break;
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lam = sx * sy + sy * sz + sz * sx;
        sum += scale / (sz * (z + lam));
        x = (x + lam) / lit(4.0);
        y = (y + lam) / lit(4.0);
        z = (z + lam) / lit(4.0);
        a = (a + lam) / lit(4.0);
        scale /= lit(4.0);
    }
    let xx = (a0 - x0) * scale / a;
    let yy = (a0 - y0) * scale / a;
    let zz = -(xx + yy) / lit(3.0);
    let xy = xx * yy;
    let z2 = zz * zz;
    let e2 = xy - lit::<T>(6.0) * z2;
    let e3 = (lit::<T>(3.0) * xy - lit::<T>(8.0) * z2) * zz;
    let e4 = lit::<T>(3.0) * (xy - z2) * z2;
    let e5 = xy * z2 * zz;
    let series = T::one() - lit::<T>(3.0) * e2 / lit(14.0)
        + e3 / lit(6.0)
        + lit::<T>(9.0) * e2 * e2 / lit(88.0)
        - lit::<T>(3.0) * e4 / lit(22.0)
        - lit::<T>(9.0) * e2 * e3 / lit(52.0)
        + lit::<T>(3.0) * e5 / lit(26.0);
    scale * series / (a * a.sqrt()) + lit::<T>(3.0) * sum
}

/// R_C(1, 1 + e) for e > -1, the only degenerate form R_J needs.
fn rc_one<T: Real>(e: T) -> T {
    if e.abs() < lit(1e-4) {
        // 1 - e/3 + e²/5 - e³/7 + e⁴/9
        let mut term = T::one();
        let mut acc = T::zero();
        for k in 0..12 {
            acc += term / lit(2.0 * k as f64 + 1.0);
            term = -term * e;
        }
        acc
    } else if e > T::zero() {
        let r = e.sqrt();
        r.atan() / r
    } else {
        let r = (-e).sqrt();
        r.atanh() / r
    }
}

/// R_J(x, y, z, p): x, y, z non-negative (at most one zero), p positive.
pub fn rj<T: Real>(x: T, y: T, z: T, p: T) -> T {
    let (x0, y0, z0) = (x, y, z);
    let (mut x, mut y, mut z, mut p) = (x, y, z, p);
    let a0 = (x + y + z + lit::<T>(2.0) * p) / lit(5.0);
    let delta = (p - x) * (p - y) * (p - z);
    let q = (T::epsilon() / lit(4.0)).powf(lit(-1.0 / 6.0))
        * max3((a0 - x).abs(), (a0 - y).abs(), (a0 - z).abs()).max((a0 - p).abs());
    let mut a = a0;
    let mut scale = T::one();
    let mut sum = T::zero();
    for _ in 0..MAX_DUPLICATIONS {
        if q * scale < a.abs() {
            break;
        }
        let (sx, sy, sz, sp) = (x.sqrt(), y.sqrt(), z.sqrt(), p.sqrt());
        let lam = sx * sy + sy * sz + sz * sx;
        let d = (sp + sx) * (sp + sy) * (sp + sz);
        let e = delta * scale * scale * scale / (d * d);
        sum += scale * rc_one(e) / d;
        x = (x + lam) / lit(4.0);
        y = (y + lam) / lit(4.0);
        z = (z + lam) / lit(4.0);
        p = (p + lam) / lit(4.0);
        a = (a + lam) / lit(4.0);
        scale /= lit(4.0);
    }
    let xx = (a0 - x0) * scale / a;
    let yy = (a0 - y0) * scale / a;
    let zz = (a0 - z0) * scale / a;
    let pp = -(xx + yy + zz) / lit(2.0);
    let e2 = xx * yy + xx * zz + yy * zz - lit::<T>(3.0) * pp * pp;
    let e3 = xx * yy * zz + lit::<T>(2.0) * e2 * pp + lit::<T>(4.0) * pp * pp * pp;
    let e4 = (lit::<T>(2.0) * xx * yy * zz + e2 * pp + lit::<T>(3.0) * pp * pp * pp) * pp;
    let e5 = xx * yy * zz * pp * pp;
    let series = T::one() - lit::<T>(3.0) * e2 / lit(14.0)
        + e3 / lit(6.0)
        + lit::<T>(9.0) * e2 * e2 / lit(88.0)
        - lit::<T>(3.0) * e4 / lit(22.0)
        - lit::<T>(9.0) * e2 * e3 / lit(52.0)
        + lit::<T>(3.0) * e5 / lit(26.0);
    scale * series / (a * a.sqrt()) + lit::<T>(6.0) * sum
}

/// R_F with complex arguments in the plane cut along the non-positive real
/// axis (at most one argument zero).
pub fn rf_complex<T: Real>(x: Complex<T>, y: Complex<T>, z: Complex<T>) -> Complex<T> {
    let (x0, y0) = (x, y);
    let (mut x, mut y, mut z) = (x, y, z);
    let three: T = lit(3.0);
    let four: T = lit(4.0);
    let a0 = (x + y + z) / three;
    let q = (three * T::epsilon()).powf(lit(-1.0 / 6.0))
        * max3((a0 - x).norm(), (a0 - y).norm(), (a0 - z).norm());
    let mut a = a0;
    let mut scale = T::one();
    for _ in 0..MAX_DUPLICATIONS {
        if q * scale < a.norm() {
            break;
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lam = sx * sy + sy * sz + sz * sx;
        x = (x + lam) / four;
        y = (y + lam) / four;
        z = (z + lam) / four;
        a = (a + lam) / four;
        scale /= four;
    }
    let xx = (a0 - x0) * scale / a;
    let yy = (a0 - y0) * scale / a;
    let zz = -(xx + yy);
    let e2 = xx * yy - zz * zz;
    let e3 = xx * yy * zz;
    let one = Complex::new(T::one(), T::zero());
    (one - e2 / lit::<T>(10.0) + e3 / lit::<T>(14.0) + e2 * e2 / lit::<T>(24.0)
        - e2 * e3 * lit::<T>(3.0) / lit::<T>(44.0))
        / a.sqrt()
}
