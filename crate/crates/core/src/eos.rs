//! Constant-heat-capacity constitutive models.
//!
//! Every model in this module has a fundamental relation of the form
//!
//! ```text
//! u(s, v) = f1(v) · exp((s − s0) / cv) − cv · f2(v)
//! ```
//!
//! which is the general solution of `∂²u/∂s² − (1/cv) ∂u/∂s = 0`. The named
//! variants only differ in the volume profiles `f1` and `f2`:
//!
//! | variant       | f1(v)              | f2(v)          |
//! |---------------|--------------------|----------------|
//! | Ideal         | v^(−R/cv)          | 0              |
//! | QuasiIdeal    | (v − b)^(−R/cv)    | 0              |
//! | VanDerWaals   | (v − b)^(−R/cv)    | a / (cv · v)   |
//! | Custom        | caller supplied    | caller supplied|
//!
//! Reference energy and volume are normalized to one, so only `s0` is exposed.
//! All quantities are molar.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// States closer than this (in volume units) to a domain boundary are rejected.
pub const DOMAIN_MARGIN: f64 = 1e-12;

/// A scalar function of molar volume.
pub type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Caller-supplied volume profiles for the [`Variant::Custom`] model, with
/// their analytic first and second derivatives.
#[derive(Clone)]
pub struct CustomProfile {
    pub f1: ScalarFn,
    pub f1_prime: ScalarFn,
    pub f1_second: ScalarFn,
    pub f2: ScalarFn,
    pub f2_prime: ScalarFn,
    pub f2_second: ScalarFn,
    /// Lower end of the valid volume domain (exclusive).
    pub v_min: f64,
}

impl CustomProfile {
    pub fn new(
        f1: impl Fn(f64) -> f64 + Send + Sync + 'static,
        f1_prime: impl Fn(f64) -> f64 + Send + Sync + 'static,
        f1_second: impl Fn(f64) -> f64 + Send + Sync + 'static,
        f2: impl Fn(f64) -> f64 + Send + Sync + 'static,
        f2_prime: impl Fn(f64) -> f64 + Send + Sync + 'static,
        f2_second: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            f1: Arc::new(f1),
            f1_prime: Arc::new(f1_prime),
            f1_second: Arc::new(f1_second),
            f2: Arc::new(f2),
            f2_prime: Arc::new(f2_prime),
            f2_second: Arc::new(f2_second),
            v_min: 0.0,
        }
    }

    pub fn with_v_min(mut self, v_min: f64) -> Self {
        self.v_min = v_min;
        self
    }
}

impl fmt::Debug for CustomProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomProfile")
            .field("v_min", &self.v_min)
            .finish_non_exhaustive()
    }
}

#[derive(Clone, Debug)]
pub enum Variant {
    Ideal,
    QuasiIdeal { b: f64 },
    VanDerWaals { a: f64, b: f64 },
    Custom(CustomProfile),
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::Ideal => "Ideal",
            Variant::QuasiIdeal { .. } => "QuasiIdeal",
            Variant::VanDerWaals { .. } => "VanDerWaals",
            Variant::Custom(_) => "Custom",
        }
    }
}

/// A point in molar entropy / molar volume space.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct State {
    pub s: f64,
    pub v: f64,
}

impl State {
    pub fn new(s: f64, v: f64) -> Self {
        Self { s, v }
    }
}

/// Scalar thermodynamic fields at one state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThermoPoint {
    pub u: f64,
    pub temperature: f64,
    pub pressure: f64,
    pub cv: f64,
    pub cp: f64,
    /// Thermal expansion coefficient (1/v)(∂v/∂T)_p.
    pub alpha: f64,
    /// Isothermal compressibility −(1/v)(∂v/∂p)_T.
    pub kappa_t: f64,
}

impl ThermoPoint {
    /// Heat capacity ratio cp/cv.
    pub fn gamma(&self) -> f64 {
        self.cp / self.cv
    }
}

/// f1, f2 and their derivatives at one volume.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Profile {
    pub f1: f64,
    pub f1p: f64,
    pub f1pp: f64,
    pub f2: f64,
    pub f2p: f64,
    pub f2pp: f64,
}

/// A constant-heat-capacity gas model.
#[derive(Clone, Debug)]
pub struct GasModel {
    variant: Variant,
    cv: f64,
    r: f64,
    s0: f64,
}

fn positive(name: &str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidModel(format!("{name} must be positive and finite, got {x}")))
    }
}

fn non_negative(name: &str, x: f64) -> Result<()> {
    if x.is_finite() && x >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidModel(format!("{name} must be non-negative and finite, got {x}")))
    }
}

impl GasModel {
    pub fn new(variant: Variant, cv: f64, r: f64, s0: f64) -> Result<Self> {
        positive("cv", cv)?;
        positive("R", r)?;
        if !s0.is_finite() {
            return Err(Error::InvalidModel(format!("s0 must be finite, got {s0}")));
        }
        match &variant {
            Variant::Ideal => {}
            Variant::QuasiIdeal { b } => non_negative("b", *b)?,
            Variant::VanDerWaals { a, b } => {
                non_negative("a", *a)?;
                non_negative("b", *b)?;
            }
            Variant::Custom(p) => {
                if !p.v_min.is_finite() {
                    return Err(Error::InvalidModel("custom v_min must be finite".into()));
                }
            }
        }
        Ok(Self { variant, cv, r, s0 })
    }

    pub fn ideal(cv: f64, r: f64) -> Result<Self> {
        Self::new(Variant::Ideal, cv, r, 0.0)
    }

    pub fn quasi_ideal(cv: f64, r: f64, b: f64) -> Result<Self> {
        Self::new(Variant::QuasiIdeal { b }, cv, r, 0.0)
    }

    pub fn van_der_waals(cv: f64, r: f64, a: f64, b: f64) -> Result<Self> {
        Self::new(Variant::VanDerWaals { a, b }, cv, r, 0.0)
    }

    pub fn custom(cv: f64, r: f64, profile: CustomProfile) -> Result<Self> {
        Self::new(Variant::Custom(profile), cv, r, 0.0)
    }

    pub fn with_s0(self, s0: f64) -> Result<Self> {
        Self::new(self.variant, self.cv, self.r, s0)
    }

    pub fn variant(&self) -> &Variant {
        &self.variant
    }

    pub fn cv(&self) -> f64 {
        self.cv
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn s0(&self) -> f64 {
        self.s0
    }

    /// True for the variants whose isentropic length and work have closed forms.
    pub fn is_ideal_like(&self) -> bool {
        matches!(self.variant, Variant::Ideal | Variant::QuasiIdeal { .. })
    }

    /// Constant cp = cv + R of the ideal-like variants.
    pub fn constant_cp(&self) -> Option<f64> {
        self.is_ideal_like().then_some(self.cv + self.r)
    }

    /// Excluded volume `b` (zero for Ideal and Custom).
    pub fn excluded_volume(&self) -> f64 {
        match self.variant {
            Variant::QuasiIdeal { b } | Variant::VanDerWaals { b, .. } => b,
            _ => 0.0,
        }
    }

    /// Exclusive lower bound of the volume domain.
    pub fn lower_volume_bound(&self) -> f64 {
        match &self.variant {
            Variant::Ideal => 0.0,
            Variant::QuasiIdeal { b } | Variant::VanDerWaals { b, .. } => *b,
            Variant::Custom(p) => p.v_min,
        }
    }

    pub(crate) fn unsupported(&self, operation: &'static str) -> Error {
        Error::UnsupportedModel {
            operation,
            variant: self.variant.name(),
        }
    }

    pub fn check_volume(&self, v: f64) -> Result<()> {
        let lo = self.lower_volume_bound();
        if v.is_finite() && v > lo + DOMAIN_MARGIN {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "v = {v} must exceed {lo} for the {} model",
                self.variant.name()
            )))
        }
    }

    pub fn check_state(&self, state: State) -> Result<()> {
        if !state.s.is_finite() {
            return Err(Error::Domain(format!("s = {} is not finite", state.s)));
        }
        self.check_volume(state.v)
    }

    /// exp((s − s0)/cv), the common entropy factor of every term.
    pub(crate) fn entropy_factor(&self, s: f64) -> f64 {
        ((s - self.s0) / self.cv).exp()
    }

    pub(crate) fn profile(&self, v: f64) -> Result<Profile> {
        self.check_volume(v)?;
        let k = self.r / self.cv;
        let power_law = |b: f64| {
            let x = v - b;
            let f1 = x.powf(-k);
            (f1, -k * f1 / x, k * (k + 1.0) * f1 / (x * x))
        };
        let profile = match &self.variant {
            Variant::Ideal => {
                let (f1, f1p, f1pp) = power_law(0.0);
                Profile { f1, f1p, f1pp, f2: 0.0, f2p: 0.0, f2pp: 0.0 }
            }
            Variant::QuasiIdeal { b } => {
                let (f1, f1p, f1pp) = power_law(*b);
                Profile { f1, f1p, f1pp, f2: 0.0, f2p: 0.0, f2pp: 0.0 }
            }
            Variant::VanDerWaals { a, b } => {
                let (f1, f1p, f1pp) = power_law(*b);
                let c = a / self.cv;
                Profile {
                    f1,
                    f1p,
                    f1pp,
                    f2: c / v,
                    f2p: -c / (v * v),
                    f2pp: 2.0 * c / (v * v * v),
                }
            }
            Variant::Custom(p) => Profile {
                f1: (p.f1)(v),
                f1p: (p.f1_prime)(v),
                f1pp: (p.f1_second)(v),
                f2: (p.f2)(v),
                f2p: (p.f2_prime)(v),
                f2pp: (p.f2_second)(v),
            },
        };
        if !(profile.f1.is_finite() && profile.f1 > 0.0) {
            return Err(Error::Domain(format!("f1({v}) = {} is not positive", profile.f1)));
        }
        Ok(profile)
    }

    pub fn internal_energy(&self, state: State) -> Result<f64> {
        self.check_state(state)?;
        let p = self.profile(state.v)?;
        Ok(p.f1 * self.entropy_factor(state.s) - self.cv * p.f2)
    }

    pub fn temperature(&self, state: State) -> Result<f64> {
        self.check_state(state)?;
        let p = self.profile(state.v)?;
        Ok(p.f1 / self.cv * self.entropy_factor(state.s))
    }

    /// p = −(∂u/∂v)_s.
    pub fn pressure(&self, state: State) -> Result<f64> {
        self.check_state(state)?;
        let p = self.profile(state.v)?;
        Ok(self.cv * p.f2p - p.f1p * self.entropy_factor(state.s))
    }

    pub fn thermo_point(&self, state: State) -> Result<ThermoPoint> {
        self.check_state(state)?;
        let prof = self.profile(state.v)?;
        let e = self.entropy_factor(state.s);
        let cv = self.cv;
        let v = state.v;
        let u = prof.f1 * e - cv * prof.f2;
        let temperature = prof.f1 / cv * e;
        let pressure = cv * prof.f2p - prof.f1p * e;

        let (cp, alpha, kappa_t) = if self.is_ideal_like() {
            // p (v − b) = R T
            let x = v - self.excluded_volume();
            (cv + self.r, x / (v * temperature), x / (pressure * v))
        } else {
            // p(T, v) = −cv T f1'/f1 + cv f2'
            let dp_dt = -cv * prof.f1p / prof.f1;
            let log_curv = (prof.f1pp * prof.f1 - prof.f1p * prof.f1p) / (prof.f1 * prof.f1);
            let dp_dv = -cv * temperature * log_curv + cv * prof.f2pp;
            if dp_dv == 0.0 || !dp_dv.is_finite() {
                return Err(Error::Singularity(format!(
                    "(∂p/∂v)_T = {dp_dv} at v = {v}, compressibility undefined"
                )));
            }
            let kappa_t = -1.0 / (v * dp_dv);
            let alpha = kappa_t * dp_dt;
            (cv + temperature * v * alpha * alpha / kappa_t, alpha, kappa_t)
        };
        Ok(ThermoPoint { u, temperature, pressure, cv, cp, alpha, kappa_t })
    }

    /// Inverse of [`GasModel::internal_energy`] in `s` at fixed `v`.
    pub fn entropy_from_uv(&self, u: f64, v: f64) -> Result<f64> {
        let prof = self.profile(v)?;
        let arg = (u + self.cv * prof.f2) / prof.f1;
        if !(arg.is_finite() && arg > 0.0) {
            return Err(Error::Domain(format!(
                "u = {u} at v = {v} is below the model's energy floor"
            )));
        }
        Ok(self.s0 + self.cv * arg.ln())
    }

    /// Entropy on the isotherm `T` at volume `v`, with its slope ds/dv.
    pub fn isotherm_entropy(&self, temperature: f64, v: f64) -> Result<(f64, f64)> {
        if !(temperature.is_finite() && temperature > 0.0) {
            return Err(Error::Domain(format!("temperature {temperature} must be positive")));
        }
        let prof = self.profile(v)?;
        let s = self.s0 + self.cv * (self.cv * temperature / prof.f1).ln();
        Ok((s, -self.cv * prof.f1p / prof.f1))
    }

    pub fn record(&self) -> Option<ModelRecord> {
        let (variant, a, b) = match self.variant {
            Variant::Ideal => ("ideal", None, None),
            Variant::QuasiIdeal { b } => ("quasi-ideal", None, Some(b)),
            Variant::VanDerWaals { a, b } => ("van-der-waals", Some(a), Some(b)),
            Variant::Custom(_) => return None,
        };
        Some(ModelRecord {
            variant: variant.to_string(),
            cv: self.cv,
            r: self.r,
            s0: self.s0,
            a,
            b,
        })
    }
}

/// Flat key-value description of a built-in model.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelRecord {
    pub variant: String,
    pub cv: f64,
    #[serde(rename = "R")]
    pub r: f64,
    #[serde(default)]
    pub s0: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
}

impl ModelRecord {
    pub fn to_model(&self) -> Result<GasModel> {
        let name = self.variant.to_ascii_lowercase().replace(['_', ' '], "-");
        let reject = |field: &str| {
            Err(Error::InvalidModel(format!(
                "parameter {field} does not apply to the {} model",
                self.variant
            )))
        };
        let require = |field: &str, x: Option<f64>| {
            x.ok_or_else(|| {
                Error::InvalidModel(format!("the {} model requires {field}", self.variant))
            })
        };
        let variant = match name.as_str() {
            "ideal" => {
                if self.a.is_some() {
                    return reject("a");
                }
                if self.b.is_some() {
                    return reject("b");
                }
                Variant::Ideal
            }
            "quasi-ideal" | "quasiideal" => {
                if self.a.is_some() {
                    return reject("a");
                }
                Variant::QuasiIdeal { b: require("b", self.b)? }
            }
            "van-der-waals" | "vanderwaals" | "vdw" => Variant::VanDerWaals {
                a: require("a", self.a)?,
                b: require("b", self.b)?,
            },
            other => {
                return Err(Error::InvalidModel(format!("unknown model variant '{other}'")));
            }
        };
        GasModel::new(variant, self.cv, self.r, self.s0)
    }
}
