//! Bound states of the radial Schrödinger equation with the potential
//! V(r) = a r − b/r, computed two ways: the Numerov matrix method and
//! phase-integral quantization through L⁽¹⁾ and L⁽³⁾.
//!
//! Numerical code is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix the scalar for the common cases.

// `!(x > 0)` style guards also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod model;
pub mod numerov;
pub mod phase_integral;
pub mod quadrature;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod special;

pub use error::{Error, Result};
pub use scalar::Real;

pub type DimensionlessCase64 = model::DimensionlessCase<f64>;
pub type PhysicalParams64 = model::PhysicalParams<f64>;
pub type LevelResult64 = model::LevelResult<f64>;
pub type Grid64 = numerov::Grid<f64>;
pub type Spectrum64 = numerov::Spectrum<f64>;
pub type TurningPoints64 = phase_integral::TurningPoints<f64>;
pub type QuantizationResult64 = phase_integral::QuantizationResult<f64>;
pub type ComplexPoint64 = special::ComplexPoint<f64>;

pub type DimensionlessCase32 = model::DimensionlessCase<f32>;
pub type Grid32 = numerov::Grid<f32>;
pub type Spectrum32 = numerov::Spectrum<f32>;
pub type TurningPoints32 = phase_integral::TurningPoints<f32>;
pub type QuantizationResult32 = phase_integral::QuantizationResult<f32>;
