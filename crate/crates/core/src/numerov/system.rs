use crate::error::{domain, Result};
use crate::model::DimensionlessCase;
use crate::scalar::{lit, Real};

use super::Grid;

/// V_eff(z) = z − B/z + l(l+1)/z², so that R(z) = A − V_eff(z).
pub fn effective_potential<T: Real>(case: &DimensionlessCase<T>, z: T) -> Result<T> {
    if !(z > T::zero()) {
        return Err(domain("z", "effective potential needs z > 0"));
    }
    Ok(z - case.b / z + case.centrifugal() / (z * z))
}

/// Tridiagonal pencil (L, R) with L ψ = A R ψ:
/// L = −Â + B̂V̂ and R = B̂, Â = tridiag(1, −2, 1)/δ², B̂ = tridiag(1, 10, 1)/12.
///
/// L is not symmetric: row i carries V_{i−1} and V_{i+1} on its off-diagonals.
#[derive(Debug, Clone)]
pub struct NumerovSystem<T> {
    pub grid: Grid<T>,
    pub potential: Vec<T>,
    pub lhs_diag: Vec<T>,
    /// L[i][i+1], length n − 1.
    pub lhs_upper: Vec<T>,
    /// L[i+1][i], length n − 1.
    pub lhs_lower: Vec<T>,
    pub rhs_diag: T,
    pub rhs_off: T,
}

pub fn assemble<T: Real>(case: &DimensionlessCase<T>, grid: &Grid<T>) -> Result<NumerovSystem<T>> {
    let potential = grid
        .interior_nodes()
        .map(|z| effective_potential(case, z))
        .collect::<Result<Vec<T>>>()?;
    let inv_d2 = T::one() / (grid.delta() * grid.delta());
    let twelfth: T = lit(1.0 / 12.0);
    let lhs_diag = potential
        .iter()
        .map(|&v| lit::<T>(2.0) * inv_d2 + lit::<T>(10.0) * v * twelfth)
        .collect();
    let lhs_upper = potential[1..]
        .iter()
        .map(|&v| -inv_d2 + v * twelfth)
        .collect();
    let lhs_lower = potential[..potential.len() - 1]
        .iter()
        .map(|&v| -inv_d2 + v * twelfth)
        .collect();
    Ok(NumerovSystem {
        grid: *grid,
        potential,
        lhs_diag,
        lhs_upper,
        lhs_lower,
        rhs_diag: lit(10.0 / 12.0),
        rhs_off: twelfth,
    })
}

impl<T: Real> NumerovSystem<T> {
    pub fn len(&self) -> usize {
        self.lhs_diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lhs_diag.is_empty()
    }

    pub fn apply_lhs(&self, x: &[T]) -> Vec<T> {
        tri_apply(&self.lhs_lower, &self.lhs_diag, &self.lhs_upper, x)
    }

    pub fn apply_rhs(&self, x: &[T]) -> Vec<T> {
        let n = x.len();
        (0..n)
            .map(|i| {
                let mut acc = self.rhs_diag * x[i];
                if i > 0 {
                    acc += self.rhs_off * x[i - 1];
                }
                if i + 1 < n {
                    acc += self.rhs_off * x[i + 1];
                }
                acc
            })
            .collect()
    }

    /// max_i |(L ψ − A R ψ)_i|.
    pub fn residual(&self, a: T, psi: &[T]) -> T {
        let l = self.apply_lhs(psi);
        let r = self.apply_rhs(psi);
        l.iter()
            .zip(&r)
            .fold(T::zero(), |m, (&x, &y)| m.max((x - a * y).abs()))
    }

    /// Infinity norm of L.
    pub fn lhs_norm(&self) -> T {
        let n = self.len();
        (0..n).fold(T::zero(), |m, i| {
            let mut s = self.lhs_diag[i].abs();
            if i > 0 {
                s += self.lhs_lower[i - 1].abs();
            }
            if i + 1 < n {
                s += self.lhs_upper[i].abs();
            }
            m.max(s)
        })
    }

    /// Dense copies of L and R, row-major. Intended for small systems.
    pub fn to_dense(&self) -> (Vec<Vec<T>>, Vec<Vec<T>>) {
        let n = self.len();
        let mut l = vec![vec![T::zero(); n]; n];
        let mut r = vec![vec![T::zero(); n]; n];
        for i in 0..n {
            l[i][i] = self.lhs_diag[i];
            r[i][i] = self.rhs_diag;
            if i + 1 < n {
                l[i][i + 1] = self.lhs_upper[i];
                l[i + 1][i] = self.lhs_lower[i];
                r[i][i + 1] = self.rhs_off;
                r[i + 1][i] = self.rhs_off;
            }
        }
        (l, r)
    }
}

fn tri_apply<T: Real>(lower: &[T], diag: &[T], upper: &[T], x: &[T]) -> Vec<T> {
    let n = diag.len();
    (0..n)
        .map(|i| {
            let mut acc = diag[i] * x[i];
            if i > 0 {
                acc += lower[i - 1] * x[i - 1];
            }
            if i + 1 < n {
                acc += upper[i] * x[i + 1];
            }
            acc
        })
        .collect()
}
