//! Phase-integral quantization with the base function Q²(z) = A − z + B/z − (l+½)²/z².
//!
//! The first- and third-order integrals reduce to complete elliptic integrals
//! once the turning points x₀ < 0 < x₁ < x₂ are known; the quantization
//! condition is solved for x₂ and A follows from Q²(x₂) = 0.

mod chi;
mod l1;
mod l3;
pub mod oracle;
mod quantize;
mod turning;

pub use chi::{chi0, chi0_diagnostic};
pub use l1::{l1_closed, l1_quadrature, l1_z_quadrature};
pub use l3::{
    c_term, c_term_from_z, kappa, l3_closed, l3_coefficients, l3_with_u0, solve_u0, L3Coefficients,
    L3Evaluation, U0Root,
};
pub use quantize::{
    quantization_residual, quantize, quantize_with, QuantizationResult, QuantizeOptions,
};
pub use turning::{eigenvalue_from_x2, x2_min, TurningPoints};
