//! Elliptic integrals and Jacobi elliptic functions.

pub mod carlson;
mod complete;
mod epsilon;
mod inverse;
mod jacobi;
pub mod oracle;

pub use complete::{ellip_e, ellip_k, ellip_pi, Characteristic, EllipticModulus};
pub use epsilon::{jacobi_epsilon, jacobi_epsilon_complex, z_integrals, ZIntegrals};
pub use inverse::inverse_sn;
pub use jacobi::{
    jacobi_complex, jacobi_sn_cn_dn, ComplexJacobiTriple, ComplexPoint, JacobiTriple,
};
