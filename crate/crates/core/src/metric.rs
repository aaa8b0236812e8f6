//! The Weinhold metric in (s, v) coordinates.
//!
//! Two independent constructions are provided: the Hessian of `u(s, v)` from
//! the model's analytic profile derivatives, and the response-coefficient
//! matrix `(1/cv) [[T, −Tα/κ_T], [−Tα/κ_T, cp/(v κ_T)]]` built from a
//! [`ThermoPoint`]. They agree wherever the coefficients are consistent.

use crate::eos::{GasModel, State, ThermoPoint};
use crate::error::{Error, Result};

/// Symmetric 2×2 metric. `stable` is false when the tensor is not positive
/// definite (e.g. inside the Van der Waals spinodal).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MetricTensor {
    pub g_ss: f64,
    pub g_sv: f64,
    pub g_vv: f64,
    stable: bool,
}

impl MetricTensor {
    pub fn new(g_ss: f64, g_sv: f64, g_vv: f64) -> Self {
        let det = g_ss * g_vv - g_sv * g_sv;
        let stable = g_ss.is_finite() && g_sv.is_finite() && g_vv.is_finite() && g_ss > 0.0 && det > 0.0;
        Self { g_ss, g_sv, g_vv, stable }
    }

    pub fn determinant(&self) -> f64 {
        self.g_ss * self.g_vv - self.g_sv * self.g_sv
    }

    pub fn is_stable(&self) -> bool {
        self.stable
    }

    /// `g_ss ds² + 2 g_sv ds dv + g_vv dv²`, unchecked.
    pub fn quadratic_form(&self, ds: f64, dv: f64) -> f64 {
        self.g_ss * ds * ds + 2.0 * self.g_sv * ds * dv + self.g_vv * dv * dv
    }

    /// Largest componentwise relative difference to `other`.
    pub fn max_relative_difference(&self, other: &MetricTensor) -> f64 {
        [
            (self.g_ss, other.g_ss),
            (self.g_sv, other.g_sv),
            (self.g_vv, other.g_vv),
        ]
        .into_iter()
        .map(|(a, b)| {
            let scale = a.abs().max(b.abs());
            if scale == 0.0 {
                0.0
            } else {
                (a - b).abs() / scale
            }
        })
        .fold(0.0, f64::max)
    }
}

/// Metric as the analytic Hessian of the internal energy.
pub fn metric_from_hessian(model: &GasModel, state: State) -> Result<MetricTensor> {
    model.check_state(state)?;
    let p = model.profile(state.v)?;
    let e = model.entropy_factor(state.s);
    let cv = model.cv();
    Ok(MetricTensor::new(
        p.f1 * e / (cv * cv),
        p.f1p * e / cv,
        p.f1pp * e - cv * p.f2pp,
    ))
}

/// Metric from response coefficients at a state of molar volume `v`.
pub fn metric_from_coefficients(tp: &ThermoPoint, v: f64) -> Result<MetricTensor> {
    if tp.kappa_t.is_nan() || tp.kappa_t <= 0.0 {
        return Err(Error::Singularity(format!(
            "isothermal compressibility {} is not positive",
            tp.kappa_t
        )));
    }
    let cv = tp.cv;
    Ok(MetricTensor::new(
        tp.temperature / cv,
        -tp.temperature * tp.alpha / (cv * tp.kappa_t),
        tp.cp / (v * cv * tp.kappa_t),
    ))
}

/// (∂²u/∂v²)_s, the isentropic metric component.
pub fn isentropic_stiffness(model: &GasModel, state: State) -> Result<f64> {
    model.check_state(state)?;
    let p = model.profile(state.v)?;
    Ok(p.f1pp * model.entropy_factor(state.s) - model.cv() * p.f2pp)
}

/// Squared length element for the displacement `(ds, dv)`.
///
/// Values that are negative only at rounding level (relative 1e-14 of the
/// summed term magnitudes) are clamped to zero.
pub fn line_element(m: &MetricTensor, ds: f64, dv: f64) -> Result<f64> {
    let q = m.quadratic_form(ds, dv);
    if q >= 0.0 {
        return Ok(q);
    }
    let scale = (m.g_ss * ds * ds).abs() + (2.0 * m.g_sv * ds * dv).abs() + (m.g_vv * dv * dv).abs();
    if -q <= 1e-14 * scale {
        Ok(0.0)
    } else {
        Err(Error::NegativeQuadraticForm(q))
    }
}
