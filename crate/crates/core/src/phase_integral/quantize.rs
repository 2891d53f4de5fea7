use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{DimensionlessCase, Order};
use crate::roots::{bisect, brent, Bracket};
use crate::scalar::{lit, to_f64, tol_floor, Real};
use crate::special::ComplexPoint;

use super::l1::l1_closed;
use super::l3::{c_term, l3_closed, solve_u0};
use super::turning::{eigenvalue_from_x2, x2_min};
use super::TurningPoints;

/// Converged phase-integral level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantizationResult<T> {
    pub case: DimensionlessCase<T>,
    pub x2: T,
    #[serde(rename = "A")]
    pub a: T,
    pub u0: ComplexPoint<T>,
    /// |Σ L − (s + ½)π| at the returned x₂.
    pub residual: T,
    /// |C(u₀, m, α²)|.
    pub c_abs: T,
    pub l1: T,
    /// L⁽³⁾ at x₂ (reported for both orders).
    pub l3: T,
    pub turning_points: TurningPoints<T>,
    /// Residual increases through x₂ on both sides.
    pub monotone: bool,
}

/// Root-search settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantizeOptions {
    pub scan_points: usize,
    pub bisection_width: f64,
    pub residual_tolerance: f64,
    pub max_iterations: usize,
    pub x2_limit: f64,
}

impl Default for QuantizeOptions {
    fn default() -> Self {
        Self {
            scan_points: 96,
            bisection_width: 1e-6,
            residual_tolerance: 1e-10,
            max_iterations: 200,
            x2_limit: 1e6,
        }
    }
}

/// Σ L^{(2j+1)} − (s + ½)π as a function of x₂.
pub fn quantization_residual<T: Real>(case: &DimensionlessCase<T>, x2: T) -> Result<T> {
    let tp = TurningPoints::from_x2(x2, case)?;
    let mut total = l1_closed(&tp)?;
    if case.j == Order::Third {
        total += l3_closed(&tp)?;
    }
    Ok(total - target(case))
}

fn target<T: Real>(case: &DimensionlessCase<T>) -> T {
    (lit::<T>(case.s as f64) + lit(0.5)) * T::PI()
}

pub fn quantize<T: Real>(case: &DimensionlessCase<T>) -> Result<QuantizationResult<T>> {
    quantize_with(case, &QuantizeOptions::default())
}

pub fn quantize_with<T: Real>(
    case: &DimensionlessCase<T>,
    opts: &QuantizeOptions,
) -> Result<QuantizationResult<T>> {
    let mut f = |x2: T| quantization_residual(case, x2);
    let bracket = find_bracket(case, &mut f, opts)?;
    let width = lit::<T>(opts.bisection_width) * bracket.hi.abs().max(T::one());
    let narrowed = bisect(&mut f, bracket, width)?;
    let ftol = tol_floor::<T>(opts.residual_tolerance * 1e-2, 64.0);
    let (x2, res) = brent(&mut f, narrowed, ftol, opts.max_iterations)?;

    let tp = TurningPoints::from_x2(x2, case)?;
    let l1 = l1_closed(&tp)?;
    let l3 = l3_closed(&tp)?;
    let root = solve_u0(tp.k2, tp.alpha2)?;
    let c_abs = if (T::one() - tp.k2).abs() <= lit(1e-10) {
        root.c_abs
    } else {
        c_term(root.u0, tp.k2, tp.alpha2)?.norm()
    };
    let h = lit::<T>(1e-4) * x2;
    let monotone = match (f(x2 - h), f(x2 + h)) {
        (Ok(lo), Ok(hi)) => lo < res && res < hi,
        _ => false,
    };
    Ok(QuantizationResult {
        case: *case,
        x2,
        a: eigenvalue_from_x2(x2, case),
        u0: root.u0,
        residual: res.abs(),
        c_abs,
        l1,
        l3,
        turning_points: tp,
        monotone,
    })
}

/// First upward sign change of the residual on a geometric scan of x₂,
/// doubling the upper end until the hard limit.
fn find_bracket<T: Real, F: FnMut(T) -> Result<T>>(
    case: &DimensionlessCase<T>,
    f: &mut F,
    opts: &QuantizeOptions,
) -> Result<Bracket<T>> {
    let lo = x2_min(case) * (T::one() + lit(1e-6));
    // Linear-wall estimate: (2/3) A^{3/2} ≈ (s + ½)π with x₂ ≈ A.
    let wall = (lit::<T>(1.5) * target(case)).powf(lit(2.0 / 3.0));
    let limit: T = lit(opts.x2_limit);
    let mut hi = (lit::<T>(2.0) * (wall + case.b.sqrt()))
        .max(lit::<T>(4.0) * lo)
        .min(limit);
    let points = opts.scan_points.max(8);
    loop {
        let ratio = (hi / lo).powf(T::one() / lit((points - 1) as f64));
        let mut prev: Option<(T, T)> = None;
        let mut x = lo;
        for _ in 0..points {
            if let Ok(v) = f(x) {
                if let Some((px, pv)) = prev {
                    if pv < T::zero() && v >= T::zero() {
                        return Ok(Bracket {
                            lo: px,
                            hi: x,
                            f_lo: pv,
                            f_hi: v,
                        });
                    }
                }
                prev = Some((x, v));
            }
            x *= ratio;
        }
        if hi >= limit {
            return Err(Error::BracketNotFound {
                limit: to_f64(limit),
            });
        }
        hi = (hi * lit(2.0)).min(limit);
    }
}
