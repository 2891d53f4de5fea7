use crate::error::{domain, Result};
use crate::model::{q2_of_z, DimensionlessCase};
use crate::scalar::{lit, to_f64, Real};

/// χ₀ = [5 (Q²′)² − 4 Q² Q²″]/(16 Q⁶) + R/Q² − 1 at a single point.
pub fn chi0<T: Real>(a: T, case: &DimensionlessCase<T>, z: T) -> Result<T> {
    let q2 = q2_of_z(a, case, z)?;
    if q2.abs() <= lit::<T>(1e-12) * (a.abs() + z + T::one()) {
        return Err(domain("chi0", format!("Q² vanishes at z = {}", to_f64(z))));
    }
    let lang = case.langer();
    let z2 = z * z;
    let z3 = z2 * z;
    let dq2 = -T::one() - case.b / z2 + lit::<T>(2.0) * lang / z3;
    let ddq2 = lit::<T>(2.0) * case.b / z3 - lit::<T>(6.0) * lang / (z3 * z);
    // R − Q² = 1/(4z²) exactly.
    let tail = T::one() / (lit::<T>(4.0) * z2 * q2);
    Ok(
        (lit::<T>(5.0) * dq2 * dq2 - lit::<T>(4.0) * q2 * ddq2) / (lit::<T>(16.0) * q2 * q2 * q2)
            + tail,
    )
}

/// max |χ₀| over the samples.
pub fn chi0_diagnostic<T: Real>(a: T, case: &DimensionlessCase<T>, z_samples: &[T]) -> Result<T> {
    z_samples
        .iter()
        .try_fold(T::zero(), |acc, &z| Ok(acc.max(chi0(a, case, z)?.abs())))
}
