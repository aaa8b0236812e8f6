//! Isentropic work and its relation to isentropic length.
//!
//! Along an isentrope `dW = du = −p dv`, so the work per mole between two
//! volumes is an internal-energy difference. For the ideal-like models the
//! isentropic length `L` and the work are tied by
//!
//! ```text
//! W_in = (R L / 4 cp) (L + 4 √(cp u2 / R))      L = 2 √(cp/R) (√u1 − √u2)
//! ```
//!
//! where `u1`, `u2` are the energies at the smaller and larger volume.
//! Work is positive when done on the gas.

use crate::eos::{GasModel, State, Variant};
use crate::error::{Error, Result};
use crate::metric::isentropic_stiffness;
use crate::numdiff::{second_derivative, step, SECOND_DERIVATIVE_STEP};
use crate::quadrature::{integrate, QuadratureConfig};

/// Isentropic work along a traversal from `v_initial` to `v_final`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WorkResult {
    /// `u(v_final) − u(v_initial)`.
    pub w: f64,
    pub u_initial: f64,
    pub u_final: f64,
    pub v_initial: f64,
    pub v_final: f64,
}

impl WorkResult {
    /// Work done on the gas when compressed from the larger to the smaller volume.
    pub fn w_in(&self) -> f64 {
        if self.v_final <= self.v_initial {
            self.w
        } else {
            -self.w
        }
    }

    /// Work done by the gas when expanding from the smaller to the larger volume.
    pub fn w_out(&self) -> f64 {
        -self.w_in()
    }

    /// Energy at the smaller volume.
    pub fn u_small_volume(&self) -> f64 {
        if self.v_initial <= self.v_final {
            self.u_initial
        } else {
            self.u_final
        }
    }

    /// Energy at the larger volume.
    pub fn u_large_volume(&self) -> f64 {
        if self.v_initial <= self.v_final {
            self.u_final
        } else {
            self.u_initial
        }
    }
}

pub fn isentropic_work(model: &GasModel, s: f64, v_start: f64, v_end: f64) -> Result<WorkResult> {
    let u_initial = model.internal_energy(State::new(s, v_start))?;
    let u_final = model.internal_energy(State::new(s, v_end))?;
    let e = model.entropy_factor(s);
    let k = model.r() / model.cv();
    // f1(v_end) − f1(v_start) for the (v − b)^(−k) profile, without cancellation
    let power_law_diff = |b: f64| {
        let x = v_start - b;
        x.powf(-k) * (-k * ((v_end - v_start) / x).ln_1p()).exp_m1()
    };
    let w = match model.variant() {
        Variant::Ideal => e * power_law_diff(0.0),
        Variant::QuasiIdeal { b } => e * power_law_diff(*b),
        Variant::VanDerWaals { a, b } => {
            e * power_law_diff(*b) - a * (v_start - v_end) / (v_start * v_end)
        }
        Variant::Custom(_) => u_final - u_initial,
    };
    Ok(WorkResult {
        w,
        u_initial,
        u_final,
        v_initial: v_start,
        v_final: v_end,
    })
}

/// `|Δu − (−∫ p dv)|` along the isentrope from `v1` to `v2`.
pub fn pressure_integral_check(
    model: &GasModel,
    s: f64,
    v1: f64,
    v2: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let work = isentropic_work(model, s, v1, v2)?;
    let integral = integrate(|v| model.pressure(State::new(s, v)), v1, v2, cfg)?;
    Ok((work.w + integral.value).abs())
}

/// Both sides of `(dL/dv)² = d²W/dv²` at one state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LemmaCheck {
    /// Analytic `(∂²u/∂v²)_s`.
    pub lhs: f64,
    /// Finite-difference second derivative of the work function.
    pub rhs: f64,
}

impl LemmaCheck {
    pub fn relative_gap(&self) -> f64 {
        (self.lhs - self.rhs).abs() / (1.0 + self.lhs.abs())
    }

    pub fn holds(&self) -> bool {
        self.relative_gap() <= 1e-5
    }
}

pub fn lemma_check(model: &GasModel, s: f64, v: f64) -> Result<LemmaCheck> {
    lemma_check_with_reference(model, s, v, v)
}

/// Lemma check with the work measured from the reference volume `v_ref`.
pub fn lemma_check_with_reference(model: &GasModel, s: f64, v: f64, v_ref: f64) -> Result<LemmaCheck> {
    let lhs = isentropic_stiffness(model, State::new(s, v))?;
    if lhs < 0.0 {
        return Err(Error::Instability(format!("(∂²u/∂v²)_s = {lhs} < 0 at v = {v}")));
    }
    let u_ref = model.internal_energy(State::new(s, v_ref))?;
    let work = |x: f64| model.internal_energy(State::new(s, x)).map(|u| u - u_ref);
    let h = step(v, SECOND_DERIVATIVE_STEP, model.lower_volume_bound());
    let rhs = second_derivative(work, v, h)?;
    Ok(LemmaCheck { lhs, rhs })
}

fn cp_over_r(model: &GasModel, operation: &'static str) -> Result<f64> {
    model
        .constant_cp()
        .map(|cp| cp / model.r())
        .ok_or_else(|| model.unsupported(operation))
}

/// `W_in` from the isentropic length and the energy `u2` at the larger volume.
pub fn work_from_length(model: &GasModel, length: f64, u2: f64) -> Result<f64> {
    let ratio = cp_over_r(model, "work from length")?;
    if !(length.is_finite() && length >= 0.0) {
        return Err(Error::Domain(format!("length {length} must be non-negative")));
    }
    if !(u2.is_finite() && u2 > 0.0) {
        return Err(Error::Domain(format!("u2 = {u2} must be positive")));
    }
    Ok(length / (4.0 * ratio) * (length + 4.0 * (ratio * u2).sqrt()))
}

/// `W_out = −W_in`.
pub fn work_out_from_length(model: &GasModel, length: f64, u2: f64) -> Result<f64> {
    work_from_length(model, length, u2).map(|w| -w)
}

/// `L² + 4 √(cp u2/R) L − 4 (cp/R) W_in`, zero for consistent inputs.
pub fn theorem_residual_in(model: &GasModel, length: f64, u2: f64, w_in: f64) -> Result<f64> {
    let ratio = cp_over_r(model, "work-length quadratic")?;
    Ok(length * length + 4.0 * (ratio * u2).sqrt() * length - 4.0 * ratio * w_in)
}

/// `L² + 4 √(cp u2/R) L + 4 (cp/R) W_out`, zero for consistent inputs.
pub fn theorem_residual_out(model: &GasModel, length: f64, u2: f64, w_out: f64) -> Result<f64> {
    let ratio = cp_over_r(model, "work-length quadratic")?;
    Ok(length * length + 4.0 * (ratio * u2).sqrt() * length + 4.0 * ratio * w_out)
}

/// Isentropic length from the energies at the smaller (`u1`) and larger (`u2`) volume.
pub fn length_from_work(model: &GasModel, u1: f64, u2: f64) -> Result<f64> {
    let ratio = cp_over_r(model, "length from work")?;
    if !(u1.is_finite() && u2.is_finite() && u2 > 0.0) {
        return Err(Error::Domain(format!("energies must be positive, got u1 = {u1}, u2 = {u2}")));
    }
    if u1 < u2 {
        return Err(Error::Domain(format!(
            "u1 = {u1} (smaller volume) must not be below u2 = {u2}"
        )));
    }
    Ok(2.0 * ratio.sqrt() * (u1.sqrt() - u2.sqrt()))
}

/// Work and length of an isothermal step, `(Δu, √(1/RT) Δu)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IsothermRemark {
    pub work: f64,
    pub length: f64,
}

/// Along an isotherm the ideal-like energy `u = cv T` does not change, so
/// the work, and with it `√(1/RT) W`, vanish.
pub fn isotherm_remark_check(model: &GasModel, temperature: f64, v1: f64, v2: f64) -> Result<IsothermRemark> {
    if !model.is_ideal_like() {
        return Err(model.unsupported("isotherm work check"));
    }
    let (s1, _) = model.isotherm_entropy(temperature, v1)?;
    let (s2, _) = model.isotherm_entropy(temperature, v2)?;
    let work = model.internal_energy(State::new(s2, v2))? - model.internal_energy(State::new(s1, v1))?;
    Ok(IsothermRemark {
        work,
        length: (1.0 / (model.r() * temperature)).sqrt() * work,
    })
}
