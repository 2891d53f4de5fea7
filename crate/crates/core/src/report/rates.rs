use crate::error::{domain, Error, Result};
use crate::scalar::{lit, Real};

fn coincide<T: Real>(a: T, b: T) -> bool {
    (a - b).abs() <= lit::<T>(4.0) * T::epsilon() * a.abs().max(b.abs())
}

/// Observed order from successive mesh halvings:
/// N_k = log₂(|A_{k−2} − A_{k−1}| / |A_{k−1} − A_k|), k = 2..len.
pub fn rate_n<T: Real>(values: &[T]) -> Result<Vec<T>> {
    if values.len() < 3 {
        return Err(domain("rate_N", "needs at least three values"));
    }
    for (i, w) in values.windows(2).enumerate() {
        if coincide(w[0], w[1]) {
            return Err(Error::DegenerateDifference { index: i + 1 });
        }
    }
    Ok(values
        .windows(3)
        .map(|w| ((w[0] - w[1]).abs() / (w[1] - w[2]).abs()).log2())
        .collect())
}

/// Rate of approach to a reference value:
/// M_k = log₂(|A_{k−1} − A_ref| / |A_k − A_ref|), k = 1..len.
pub fn rate_m<T: Real>(values: &[T], reference: T) -> Result<Vec<T>> {
    if values.len() < 2 {
        return Err(domain("rate_M", "needs at least two values"));
    }
    if let Some(i) = values.iter().position(|&v| coincide(v, reference)) {
        return Err(Error::DegenerateDifference { index: i });
    }
    Ok(values
        .windows(2)
        .map(|w| ((w[0] - reference).abs() / (w[1] - reference).abs()).log2())
        .collect())
}
