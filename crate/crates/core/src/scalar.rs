use std::fmt;

/// Floating-point scalar the numeric core is generic over: `f32` or `f64`.
///
/// The crate-root aliases pin everything to `f64`, which is what the file
/// formats and the CLI use; `f32` remains available through the generic API.
pub trait Real:
    num_traits::Float + num_traits::FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Arithmetic mean computed as deviations from the first element.
///
/// Exact for constant input (a column of identical values has that value as
/// its mean, with no rounding residue), which the tie rules of the attacks
/// rely on.
///
/// Panics on an empty slice; callers guarantee non-emptiness.
pub(crate) fn mean<F: Real>(values: &[F]) -> F {
    let first = values[0];
    let deviations = values
        .iter()
        .fold(F::zero(), |acc, &v| acc + (v - first));
    first + deviations / F::from(values.len()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mean_of_constant_column_is_exact() {
        // 0.1 is not exactly representable; a running sum divided by the
        // length would land one ulp off.
        let values = vec![0.1f64; 230];
        assert_eq!(mean(&values), 0.1);
    }

    #[test]
    fn mean_matches_arithmetic_mean() {
        let values = [1.0f64, 3.0, 2.0, 2.0];
        assert_eq!(mean(&values), 2.0);
    }

    #[test]
    fn mean_is_affine() {
        let values: Vec<f64> = (0..57).map(|i| (i as f64) * 0.75 - 11.0).collect();
        let transformed: Vec<f64> = values.iter().map(|v| 2.5 * v + 4.0).collect();
        let lhs = mean(&transformed);
        let rhs = 2.5 * mean(&values) + 4.0;
        assert!((lhs - rhs).abs() <= 1e-9 * rhs.abs().max(1.0));
    }
}
