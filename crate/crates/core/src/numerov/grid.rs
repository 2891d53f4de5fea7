use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::scalar::{lit, to_f64, Real};

/// Uniform lattice z_i = z_min + i δ, i = 0..=N, with δ = (z_max − z_min)/N.
///
/// The wavefunction is pinned to zero at i = 0 and i = N, so the unknowns are
/// the N − 1 interior nodes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid<T> {
    z_min: T,
    z_max: T,
    n: usize,
}

impl<T: Real> Grid<T> {
    pub const MIN_POINTS: usize = 8;

    pub fn new(z_min: T, z_max: T, n: usize) -> Result<Self> {
        if !(z_min > T::zero() && z_min.is_finite()) {
            return Err(domain(
                "grid",
                format!("z_min = {} must be positive", to_f64(z_min)),
            ));
        }
        if !(z_max > z_min && z_max.is_finite()) {
            return Err(domain("grid", "z_max must exceed z_min"));
        }
        if n < Self::MIN_POINTS {
            return Err(domain(
                "grid",
                format!("N = {n} is below {}", Self::MIN_POINTS),
            ));
        }
        Ok(Self { z_min, z_max, n })
    }

    pub fn z_min(&self) -> T {
        self.z_min
    }

    pub fn z_max(&self) -> T {
        self.z_max
    }

    /// The mesh parameter N.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of unknowns, N − 1.
    pub fn interior(&self) -> usize {
        self.n - 1
    }

    pub fn delta(&self) -> T {
        (self.z_max - self.z_min) / lit(self.n as f64)
    }

    /// Interior node z_i for i = 1..N−1.
    pub fn node(&self, i: usize) -> T {
        self.z_min + self.delta() * lit(i as f64)
    }

    pub fn interior_nodes(&self) -> impl Iterator<Item = T> + '_ {
        (1..self.n).map(move |i| self.node(i))
    }

    /// Same box, different mesh.
    pub fn with_n(&self, n: usize) -> Result<Self> {
        Self::new(self.z_min, self.z_max, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spacing_and_nodes() {
        let g = Grid::new(1.0, 9.0, 8).unwrap();
        assert_eq!(g.delta(), 1.0);
        assert_eq!(g.interior(), 7);
        let z: Vec<f64> = g.interior_nodes().collect();
        assert_eq!(z, vec![2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]);
    }

    #[test]
    fn rejects_bad_boxes() {
        assert!(Grid::new(0.0, 1.0, 16).is_err());
        assert!(Grid::new(1.0, 1.0, 16).is_err());
        assert!(Grid::new(1e-4, 50.0, 7).is_err());
    }
}
