use num::Signed;

use crate::error::{Error, Result};
use crate::exact::{check_len, Rational, Ray};

/// A point of the affine chart `{x : chart·x = 1}`, in ambient coordinates.
pub type AffinePoint = Vec<Rational>;

/// Central projection of `q` onto the chart plane of `chart`: `q / (chart·q)`.
///
/// The plane is `{x : chart·x = 1}` for the chart exactly as given, which is a
/// positive rescaling of the tangent plane at the unit chart point.
pub fn central_project(chart: &Ray, q: &Ray) -> Result<AffinePoint> {
    let value = chart.dot(q)?;
    if !value.is_positive() {
        return Err(Error::ChartViolation { value });
    }
    Ok(q.coords().iter().map(|c| c / &value).collect())
}

/// Inverse of [`central_project`] up to ray equality.
pub fn central_unproject(chart: &Ray, x: &[Rational]) -> Result<Ray> {
    check_len(chart.len(), x.len())?;
    let value: Rational = chart.coords().iter().zip(x).map(|(a, b)| a * b).sum();
    if !value.is_positive() {
        return Err(Error::ChartViolation { value });
    }
    Ray::new(x.to_vec())
}
