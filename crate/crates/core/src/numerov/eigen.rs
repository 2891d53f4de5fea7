use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::model::DimensionlessCase;
use crate::scalar::{lit, to_f64, Real};

use super::system::{assemble, NumerovSystem};
use super::Grid;

/// Lowest eigenvalues of a Numerov pencil, ascending.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Spectrum<T> {
    pub grid: Grid<T>,
    pub eigenvalues: Vec<T>,
    /// Unit 2-norm node values, one vector per eigenvalue, when requested.
    pub eigenvectors: Option<Vec<Vec<T>>>,
}

/// Which eigenvalue of a spectrum to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelSelection {
    /// The level with this index in the ascending spectrum.
    Index(usize),
    /// The eigenvalue closest to zero.
    SmallestMagnitude,
}

const BISECTION_STEPS: usize = 256;
const INVERSE_ITERATIONS: usize = 4;

/// Number of eigenvalues of the pencil strictly below `lambda`.
///
/// With S = (12/δ²)(B̂⁻¹ − I) + V̂ the symmetric form of the pencil and
/// D = diag(V_i − λ − 12/δ²), the inertia of S − λ follows from a Schur
/// complement: #neg(S − λ) = #neg(D) − #neg(δ²B̂/12 + D⁻¹), where the second
/// matrix is symmetric tridiagonal.
pub fn sturm_count<T: Real>(sys: &NumerovSystem<T>, lambda: T) -> usize {
    let d2 = sys.grid.delta() * sys.grid.delta();
    let shift = lit::<T>(12.0) / d2;
    let diag0 = lit::<T>(10.0) * d2 / lit(144.0);
    let off = d2 / lit(144.0);
    let off2 = off * off;
    let tiny = T::min_positive_value().sqrt();
    let mut neg_d = 0usize;
    let mut neg_t = 0usize;
    let mut q = T::one();
    for (i, &v) in sys.potential.iter().enumerate() {
        let mut d = v - lambda - shift;
        if d == T::zero() {
            d = -tiny;
        }
        if d < T::zero() {
            neg_d += 1;
        }
        let a = diag0 + T::one() / d;
        q = if i == 0 { a } else { a - off2 / q };
        if q == T::zero() {
            q = -tiny;
        }
        if q < T::zero() {
            neg_t += 1;
        }
    }
    neg_d.saturating_sub(neg_t)
}

/// Interval that contains the whole spectrum.
fn spectral_bounds<T: Real>(sys: &NumerovSystem<T>) -> (T, T) {
    let (lo, hi) = sys
        .potential
        .iter()
        .fold((T::infinity(), T::neg_infinity()), |(a, b), &v| {
            (a.min(v), b.max(v))
        });
    let width = lit::<T>(6.0) / (sys.grid.delta() * sys.grid.delta());
    let pad = T::one() + (lo.abs() + hi.abs() + width) * lit(1e-12);
    (lo - pad, hi + width + pad)
}

/// Bisection for the eigenvalue with the given index, inside [lo, hi].
fn bisect_index<T: Real>(sys: &NumerovSystem<T>, index: usize, mut lo: T, mut hi: T) -> Result<T> {
    for _ in 0..BISECTION_STEPS {
        let mid = (lo + hi) * lit(0.5);
        if mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let scale = lo.abs().max(hi.abs()).max(T::one());
        if hi - lo <= lit::<T>(2.0) * T::epsilon() * scale {
            return Ok(mid);
        }
        if sturm_count(sys, mid) > index {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Err(Error::NoConvergence {
        method: "Sturm bisection",
        iterations: BISECTION_STEPS,
        residual: to_f64(hi - lo),
    })
}

/// The `count` lowest eigenvalues of an assembled system.
pub fn eigenvalues<T: Real>(sys: &NumerovSystem<T>, count: usize) -> Result<Vec<T>> {
    eigenvalue_range(sys, 0, count)
}

/// Eigenvalues with indices first..first+count.
pub fn eigenvalue_range<T: Real>(
    sys: &NumerovSystem<T>,
    first: usize,
    count: usize,
) -> Result<Vec<T>> {
    if first + count > sys.len() {
        return Err(domain(
            "eigenvalue count",
            format!(
                "{} requested, system has {} unknowns",
                first + count,
                sys.len()
            ),
        ));
    }
    let (mut lo, hi) = spectral_bounds(sys);
    let mut out = Vec::with_capacity(count);
    for k in first..first + count {
        let v = bisect_index(sys, k, lo, hi)?;
        out.push(v);
        lo = v - (v.abs() * T::epsilon() * lit(8.0));
    }
    Ok(out)
}

/// Inverse iteration on L − λR with partial pivoting; returns a unit vector
/// whose largest component is positive.
pub fn eigenvector<T: Real>(sys: &NumerovSystem<T>, lambda: T) -> Result<Vec<T>> {
    let n = sys.len();
    let lower: Vec<T> = sys
        .lhs_lower
        .iter()
        .map(|&l| l - lambda * sys.rhs_off)
        .collect();
    let upper: Vec<T> = sys
        .lhs_upper
        .iter()
        .map(|&u| u - lambda * sys.rhs_off)
        .collect();
    let diag: Vec<T> = sys
        .lhs_diag
        .iter()
        .map(|&d| d - lambda * sys.rhs_diag)
        .collect();
    let lu = TriLu::factor(&lower, &diag, &upper, sys.lhs_norm() * T::epsilon());

    let mut x: Vec<T> = (0..n)
        .map(|i| T::one() + lit::<T>(0.1) * lit::<T>(((i * 7919) % 13) as f64 / 13.0))
        .collect();
    normalize(&mut x);
    for _ in 0..INVERSE_ITERATIONS {
        let rhs = sys.apply_rhs(&x);
        x = lu.solve(&rhs);
        if !normalize(&mut x) {
            return Err(Error::Singular(
                "inverse iteration produced a zero vector".into(),
            ));
        }
    }
    let (imax, _) = x
        .iter()
        .enumerate()
        .fold((0, T::zero()), |(bi, bv), (i, &v)| {
            if v.abs() > bv {
                (i, v.abs())
            } else {
                (bi, bv)
            }
        });
    if x[imax] < T::zero() {
        x.iter_mut().for_each(|v| *v = -*v);
    }
    Ok(x)
}

fn normalize<T: Real>(x: &mut [T]) -> bool {
    let norm = x.iter().fold(T::zero(), |s, &v| s + v * v).sqrt();
    if !(norm > T::zero() && norm.is_finite()) {
        return false;
    }
    x.iter_mut().for_each(|v| *v /= norm);
    true
}

/// LU factorization of a tridiagonal matrix with row interchanges.
struct TriLu<T> {
    // U has up to two superdiagonals after pivoting.
    u0: Vec<T>,
    u1: Vec<T>,
    u2: Vec<T>,
    l: Vec<T>,
    swapped: Vec<bool>,
}

impl<T: Real> TriLu<T> {
    fn factor(lower: &[T], diag: &[T], upper: &[T], floor: T) -> Self {
        let n = diag.len();
        let floor = if floor > T::zero() {
            floor
        } else {
            T::min_positive_value()
        };
        let mut u0 = diag.to_vec();
        let mut u1: Vec<T> = upper.to_vec();
        u1.push(T::zero());
        let mut u2 = vec![T::zero(); n];
        let mut l = vec![T::zero(); n];
        let mut swapped = vec![false; n];
        let mut sub: Vec<T> = lower.to_vec();
        sub.push(T::zero());
        for i in 0..n.saturating_sub(1) {
            let below = sub[i];
            if below.abs() > u0[i].abs() {
                swapped[i] = true;
                let (a0, a1, a2) = (u0[i], u1[i], u2[i]);
                u0[i] = below;
                u1[i] = u0[i + 1];
                u2[i] = if i + 1 < n - 1 { u1[i + 1] } else { T::zero() };
                let f = a0 / below;
                l[i] = f;
                u0[i + 1] = a1 - f * u1[i];
                let next_u1 = a2 - f * u2[i];
                if i + 1 < n - 1 {
                    u1[i + 1] = next_u1;
                }
            } else {
                if u0[i] == T::zero() {
                    u0[i] = floor;
                }
                let f = below / u0[i];
                l[i] = f;
                u0[i + 1] -= f * u1[i];
            }
        }
        if n > 0 && u0[n - 1].abs() < floor {
            u0[n - 1] = if u0[n - 1] < T::zero() { -floor } else { floor };
        }
        Self {
            u0,
            u1,
            u2,
            l,
            swapped,
        }
    }

    fn solve(&self, b: &[T]) -> Vec<T> {
        let n = b.len();
        let mut y = b.to_vec();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                y.swap(i, i + 1);
            }
            let yi = y[i];
            y[i + 1] -= self.l[i] * yi;
        }
        let mut x = vec![T::zero(); n];
        for i in (0..n).rev() {
            let mut acc = y[i];
            if i + 1 < n {
                acc -= self.u1[i] * x[i + 1];
            }
            if i + 2 < n {
                acc -= self.u2[i] * x[i + 2];
            }
            x[i] = acc / self.u0[i];
        }
        x
    }
}

/// The `count` lowest levels of the case on the grid (no eigenvectors).
pub fn solve<T: Real>(
    case: &DimensionlessCase<T>,
    grid: &Grid<T>,
    count: usize,
) -> Result<Spectrum<T>> {
    let sys = assemble(case, grid)?;
    Ok(Spectrum {
        grid: *grid,
        eigenvalues: eigenvalues(&sys, count)?,
        eigenvectors: None,
    })
}

/// As [`solve`], with eigenvectors from inverse iteration.
pub fn solve_with_vectors<T: Real>(
    case: &DimensionlessCase<T>,
    grid: &Grid<T>,
    count: usize,
) -> Result<Spectrum<T>> {
    let sys = assemble(case, grid)?;
    let values = eigenvalues(&sys, count)?;
    let vectors = values
        .iter()
        .map(|&v| eigenvector(&sys, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(Spectrum {
        grid: *grid,
        eigenvalues: values,
        eigenvectors: Some(vectors),
    })
}

/// A single selected eigenvalue.
pub fn select_level<T: Real>(
    case: &DimensionlessCase<T>,
    grid: &Grid<T>,
    selection: LevelSelection,
) -> Result<T> {
    let sys = assemble(case, grid)?;
    match selection {
        LevelSelection::Index(k) => Ok(eigenvalue_range(&sys, k, 1)?[0]),
        LevelSelection::SmallestMagnitude => {
            let below = sturm_count(&sys, T::zero());
            let first = below.saturating_sub(1);
            let take = (below + 1).min(sys.len()) - first;
            let vals = eigenvalue_range(&sys, first, take)?;
            Ok(vals
                .into_iter()
                .min_by(|a, b| {
                    a.abs()
                        .partial_cmp(&b.abs())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
                .expect("at least one eigenvalue"))
        }
    }
}

/// Selected eigenvalue on each grid, as (N, A) pairs.
pub fn convergence_table<T: Real>(
    case: &DimensionlessCase<T>,
    grids: &[Grid<T>],
    selection: LevelSelection,
) -> Result<Vec<(usize, T)>> {
    if grids.len() < 3 {
        return Err(domain(
            "convergence table",
            "at least three grids are needed",
        ));
    }
    grids
        .iter()
        .map(|g| Ok((g.n(), select_level(case, g, selection)?)))
        .collect()
}
