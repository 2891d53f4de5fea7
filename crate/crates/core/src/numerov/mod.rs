//! Numerov matrix method: the radial equation on a uniform grid becomes the
//! tridiagonal pencil (−Â + B̂V̂) ψ = A B̂ ψ.

mod eigen;
mod grid;
mod system;

pub use eigen::{
    convergence_table, eigenvalue_range, eigenvalues, eigenvector, select_level, solve,
    solve_with_vectors, sturm_count, LevelSelection, Spectrum,
};
pub use grid::Grid;
pub use system::{assemble, effective_potential, NumerovSystem};
