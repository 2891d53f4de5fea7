//! Slow reference evaluations straight from the defining integrals. Used to
//! cross-check the fast routines; not meant for production paths.

use crate::error::Result;
use crate::quadrature::integrate;
use crate::scalar::{lit, Real};

use super::jacobi::jacobi_sn_cn_dn;
use super::EllipticModulus;

fn tol<T: Real>() -> T {
    crate::scalar::tol_floor(1e-14, 16.0)
}

/// K(m) = ∫₀^{π/2} dθ / √(1 − m sin²θ).
pub fn k_quadrature<T: Real>(m: T) -> Result<T> {
    let f = |t: T| T::one() / (T::one() - m * t.sin().powi(2)).sqrt();
    Ok(integrate(f, T::zero(), T::FRAC_PI_2(), tol(), tol())?.value)
}

/// E(m) = ∫₀^{π/2} √(1 − m sin²θ) dθ.
pub fn e_quadrature<T: Real>(m: T) -> Result<T> {
    let f = |t: T| (T::one() - m * t.sin().powi(2)).sqrt();
    Ok(integrate(f, T::zero(), T::FRAC_PI_2(), tol(), tol())?.value)
}

/// Π(n, m) = ∫₀^{π/2} dθ / [(1 − n sin²θ) √(1 − m sin²θ)].
pub fn pi_quadrature<T: Real>(n: T, m: T) -> Result<T> {
    let f = |t: T| {
        let s2 = t.sin().powi(2);
        T::one() / ((T::one() - n * s2) * (T::one() - m * s2).sqrt())
    };
    Ok(integrate(f, T::zero(), T::FRAC_PI_2(), tol(), tol())?.value)
}

/// ℰ(u, m) = ∫₀ᵘ dn²(t, m) dt.
pub fn epsilon_quadrature<T: Real>(u: T, m: EllipticModulus<T>) -> Result<T> {
    let f = |t: T| {
        let d = jacobi_sn_cn_dn(t, m)
            .map(|j| j.dn)
            .unwrap_or_else(|_| T::nan());
        d * d
    };
    Ok(integrate(f, T::zero(), u, tol(), lit(0.0))?.value)
}
