//! Adaptive Gauss–Kronrod (7/15) quadrature on a finite interval.

use crate::error::{Error, Result};
use crate::scalar::{lit, to_f64, Real};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct Integral<T> {
    pub value: T,
    pub error_estimate: T,
    pub evaluations: usize,
}

#[derive(Clone, Copy)]
struct Segment<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

fn gk15<T: Real, F: FnMut(T) -> T>(f: &mut F, a: T, b: T) -> Segment<T> {
    let half = (b - a) * lit(0.5);
    let center = (a + b) * lit(0.5);
    let fc = f(center);
    let mut kronrod = fc * lit(WGK[7]);
    let mut gauss = fc * lit(WG[3]);
    for (j, &x) in XGK.iter().take(7).enumerate() {
        let dx = half * lit(x);
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * lit(WGK[j]);
        if j % 2 == 1 {
            gauss += pair * lit(WG[j / 2]);
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    Segment { a, b, value, error }
}

/// Integrates `f` over `[a, b]` until the summed error estimate drops below
/// `max(abs_tol, rel_tol * |I|)`.
pub fn integrate<T, F>(mut f: F, a: T, b: T, abs_tol: T, rel_tol: T) -> Result<Integral<T>>
where
    T: Real,
    F: FnMut(T) -> T,
{
    const MAX_SEGMENTS: usize = 2000;
    let mut segments = vec![gk15(&mut f, a, b)];
    let mut evaluations = 15;
    loop {
        let value = segments.iter().fold(T::zero(), |s, g| s + g.value);
        let error = segments.iter().fold(T::zero(), |s, g| s + g.error);
        if !value.is_finite() {
            return Err(Error::NoConvergence {
                method: "adaptive quadrature",
                iterations: segments.len(),
                residual: f64::INFINITY,
            });
        }
        let floor = T::epsilon() * lit(50.0) * value.abs();
        if error <= abs_tol.max(rel_tol * value.abs()).max(floor) {
            return Ok(Integral {
                value,
                error_estimate: error,
                evaluations,
            });
        }
        if segments.len() >= MAX_SEGMENTS {
            return Err(Error::NoConvergence {
                method: "adaptive quadrature",
                iterations: segments.len(),
                residual: to_f64(error),
            });
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|x, y| {
                x.1.error
                    .partial_cmp(&y.1.error)
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .map(|(i, _)| i)
            .unwrap_or(0);
        let seg = segments.swap_remove(worst);
        let mid = (seg.a + seg.b) * lit(0.5);
        segments.push(gk15(&mut f, seg.a, mid));
        segments.push(gk15(&mut f, mid, seg.b));
        evaluations += 30;
    }
}
