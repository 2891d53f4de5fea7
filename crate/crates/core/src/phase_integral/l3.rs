use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::scalar::{lit, to_f64, tol_floor, Real};
use crate::special::{
    ellip_e, ellip_k, inverse_sn, jacobi_complex, z_integrals, ComplexPoint, EllipticModulus,
};

use super::TurningPoints;

/// Coefficients of the third-order integral: partial fractions F₁, F₂, F₃,
/// the E and K weights 𝒜 and ℬ, and G of the boundary term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct L3Coefficients<T> {
    pub f1: T,
    pub f2: T,
    pub f3: T,
    pub a_cal: T,
    pub b_cal: T,
    pub g: T,
}

fn unit_gap<T: Real>(m: T) -> Result<T> {
    let gap = T::one() - m;
    if gap.abs() <= lit(1e-10) {
        return Err(domain("third-order coefficients", "m = 1 is singular"));
    }
    Ok(gap)
}

pub fn l3_coefficients<T: Real>(m: T, alpha2: T) -> Result<L3Coefficients<T>> {
    let gap = unit_gap(m)?;
    let (one, two, three, four) = (T::one(), lit::<T>(2.0), lit::<T>(3.0), lit::<T>(4.0));
    let a2 = alpha2;
    let m2 = m * m;
    let gamma = m2 * m - three * m2 + two * m + m * (m2 - one) * a2;
    Ok(L3Coefficients {
        f1: one + m,
        f2: (one - a2) * (one - two * m) / gap,
        f3: (a2 - m) * m * (m - two) / gap,
        a_cal: -(two * m2 * m - (a2 + three) * m2 + (four * a2 - three) * m + two - a2)
            / (gap * gap),
        b_cal: (-m2 + two * (a2 - one) * m + two - a2) / gap,
        g: gamma / (gap * gap),
    })
}

/// Coefficients κ₂, κ₁, κ₀ of κ₂x² + κ₁x + κ₀ = 0 for x = sn²(u₀).
pub fn kappa<T: Real>(m: T, alpha2: T) -> [T; 3] {
    let (one, two, three) = (T::one(), lit::<T>(2.0), lit::<T>(3.0));
    let m2 = m * m;
    let m3 = m2 * m;
    let m4 = m2 * m2;
    [
        m4 - two * m3 + (two - m) * m2 * alpha2,
        -two * m4 + three * m3 - m2 + m * (m2 - one) * alpha2,
        m * (m2 - m + one) + (one - two * m) * alpha2,
    ]
}

/// C(u₀) = F/(cn dn sn) + G cn sn/dn with
/// F = (m² + m)cn⁴ − m² + 1 + (α² − 1)(2m − 1)(m sn⁴ − 1)/(1 − m)².
pub fn c_term<T: Real>(u0: ComplexPoint<T>, m: T, alpha2: T) -> Result<Complex<T>> {
    let gap = unit_gap(m)?;
    let t = jacobi_complex(u0, EllipticModulus::new(m)?)?;
    check_nonzero(&t, u0)?;
    let one = T::one();
    let cn2 = t.cn * t.cn;
    let sn2 = t.sn * t.sn;
    let f = cn2 * cn2 * (m * m + m)
        + (one - m * m)
        + (sn2 * sn2 * m - one) * ((alpha2 - one) * (lit::<T>(2.0) * m - one) / (gap * gap));
    let g = l3_coefficients(m, alpha2)?.g;
    Ok(f / (t.cn * t.dn * t.sn) + t.cn * t.sn / t.dn * g)
}

/// The boundary term obtained directly from the antiderivative differences,
/// Σ Fᵢ [Zᵢ(u₀ + K) − Zᵢ(u₀)] − 𝒜E − ℬK.
pub fn c_term_from_z<T: Real>(u0: ComplexPoint<T>, m: T, alpha2: T) -> Result<Complex<T>> {
    let c = l3_coefficients(m, alpha2)?;
    let em = EllipticModulus::new(m)?;
    let (k, e) = (ellip_k(em)?, ellip_e(em)?);
    let lo = z_integrals(u0, em)?;
    let hi = z_integrals(u0 + k, em)?;
    Ok(
        (hi.z1 - lo.z1) * c.f1 + (hi.z2 - lo.z2) * c.f2 + (hi.z3 - lo.z3) * c.f3
            - Complex::new(c.a_cal * e + c.b_cal * k, T::zero()),
    )
}

const NONZERO: f64 = 1e-12;
const C_TOLERANCE: f64 = 1e-8;

fn check_nonzero<T: Real>(
    t: &crate::special::ComplexJacobiTriple<T>,
    u0: ComplexPoint<T>,
) -> Result<()> {
    if t.min_abs() <= lit(NONZERO) {
        return Err(Error::Singular(format!(
            "sn, cn or dn vanishes at u0 = {} + {}i",
            to_f64(u0.re),
            to_f64(u0.im)
        )));
    }
    Ok(())
}

/// A verified zero of the boundary term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct U0Root<T> {
    pub u0: ComplexPoint<T>,
    /// sn²(u₀).
    pub x: Complex<T>,
    pub c_abs: T,
    /// min(|sn|, |cn|, |dn|) at u₀.
    pub min_jacobi: T,
    /// Position in the branch order that passed (0..4).
    pub branch: usize,
}

/// u₀ with C(u₀, m, α²) = 0.
///
/// Branches are tried in the order (+ root, +√), (− root, +√), (+ root, −√),
/// (− root, −√); the first u₀ with |sn|, |cn|, |dn| > 1e-12 and |C| ≤ max(1e-8, 64ε) wins.
/// At m = 1 the boundary term reduces to sn(u₀) = i, u₀ = iπ/4.
pub fn solve_u0<T: Real>(m: T, alpha2: T) -> Result<U0Root<T>> {
    let em = EllipticModulus::new(m)?;
    if (T::one() - m).abs() <= lit(1e-10) {
        let u0 = Complex::new(T::zero(), T::FRAC_PI_4());
        let t = jacobi_complex(u0, EllipticModulus::new(T::one())?)?;
        return Ok(U0Root {
            u0,
            x: t.sn * t.sn,
            c_abs: T::zero(),
            min_jacobi: t.min_abs(),
            branch: 0,
        });
    }
    let g = l3_coefficients(m, alpha2)?.g;
    if g.abs() <= T::epsilon() {
        return Err(domain("solve_u0", "G(m, α²) = 0"));
    }
    let [k2, k1, k0] = kappa(m, alpha2);
    let zero = T::zero();
    let roots: [Complex<T>; 2] = if k2.abs() <= T::epsilon() * (k1.abs() + k0.abs()) {
        if k1 == zero {
            return Err(domain("solve_u0", "κ₂ = κ₁ = 0"));
        }
        let x = Complex::new(-k0 / k1, zero);
        [x, x]
    } else {
        let disc = Complex::new(k1 * k1 - lit::<T>(4.0) * k0 * k2, zero).sqrt();
        let two_k2 = lit::<T>(2.0) * k2;
        [(disc - k1) / two_k2, (-disc - k1) / two_k2]
    };

    let mut best = T::infinity();
    let order = [(0, T::one()), (1, T::one()), (0, -T::one()), (1, -T::one())];
    for (branch, &(which, sign)) in order.iter().enumerate() {
        let x = roots[which];
        let w = x.sqrt() * sign;
        let Ok(u0) = inverse_sn(w, em) else { continue };
        let Ok(t) = jacobi_complex(u0, em) else {
            continue;
        };
        if t.min_abs() <= lit(NONZERO) {
            continue;
        }
        let Ok(c) = c_term(u0, m, alpha2) else {
            continue;
        };
        let c_abs = c.norm();
        if c_abs <= tol_floor(C_TOLERANCE, 64.0) {
            return Ok(U0Root {
                u0,
                x,
                c_abs,
                min_jacobi: t.min_abs(),
                branch,
            });
        }
        best = best.min(c_abs);
    }
    Err(Error::NoValidRoot { best: to_f64(best) })
}

/// L⁽³⁾ = (𝒜E + ℬK)/(12 d³ m α²), the value of the third-order integral once
/// u₀ is placed where the boundary term vanishes.
pub fn l3_closed<T: Real>(tp: &TurningPoints<T>) -> Result<T> {
    let (m, a2) = (tp.k2, tp.alpha2);
    let c = l3_coefficients(m, a2)?;
    let em = EllipticModulus::new(m)?;
    let (k, e) = (ellip_k(em)?, ellip_e(em)?);
    Ok((c.a_cal * e + c.b_cal * k) / (lit::<T>(12.0) * tp.d3() * m * a2))
}

/// L⁽³⁾ with its u₀ and the boundary-term check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct L3Evaluation<T> {
    pub value: T,
    pub root: U0Root<T>,
}

pub fn l3_with_u0<T: Real>(tp: &TurningPoints<T>) -> Result<L3Evaluation<T>> {
    Ok(L3Evaluation {
        value: l3_closed(tp)?,
        root: solve_u0(tp.k2, tp.alpha2)?,
    })
}
