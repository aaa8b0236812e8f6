//! Central finite differences with one level of Richardson extrapolation.
//!
//! These back the verification helpers (stiffness vs work curvature, ODE residual); the
//! models themselves only use analytic derivatives.

use crate::error::Result;

/// Relative step for first derivatives.
pub const FIRST_DERIVATIVE_STEP: f64 = 1e-5;
/// Relative step for second derivatives. A second difference loses about
/// eps/h² to cancellation, so it needs a larger step than a first difference.
pub const SECOND_DERIVATIVE_STEP: f64 = 1e-3;

/// `rel · max(1, |x|)`, shrunk so that `x − 2h` stays above `lower`.
pub fn step(x: f64, rel: f64, lower: f64) -> f64 {
    let h = rel * x.abs().max(1.0);
    if lower.is_finite() {
        h.min(0.25 * (x - lower))
    } else {
        h
    }
}

pub fn first_derivative<F>(f: F, x: f64, h: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let central = |h: f64| -> Result<f64> { Ok((f(x + h)? - f(x - h)?) / (2.0 * h)) };
    Ok((4.0 * central(0.5 * h)? - central(h)?) / 3.0)
}

pub fn second_derivative<F>(f: F, x: f64, h: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let fx = f(x)?;
    let central = |h: f64| -> Result<f64> { Ok((f(x + h)? - 2.0 * fx + f(x - h)?) / (h * h)) };
    Ok((4.0 * central(0.5 * h)? - central(h)?) / 3.0)
}

/// ∂²f/∂x∂y by the four-point cross stencil.
pub fn mixed_derivative<F>(f: F, x: f64, y: f64, hx: f64, hy: f64) -> Result<f64>
where
    F: Fn(f64, f64) -> Result<f64>,
{
    let cross = |hx: f64, hy: f64| -> Result<f64> {
        Ok((f(x + hx, y + hy)? - f(x + hx, y - hy)? - f(x - hx, y + hy)? + f(x - hx, y - hy)?)
            / (4.0 * hx * hy))
    };
    Ok((4.0 * cross(0.5 * hx, 0.5 * hy)? - cross(hx, hy)?) / 3.0)
}
