//! Paths in (s, v) space and their thermodynamic length.
//!
//! A [`Path`] is a chain of [`Segment`]s, each parametrized over ξ ∈ [0, 1]
//! with exact derivatives. Length is the integral of the square root of the
//! metric line element along the chain. Closed forms are provided for
//! isentropes of the ideal-like models, together with the rarefaction-wave
//! expression written in (p, V) variables.

use serde::{Deserialize, Serialize};

use crate::eos::{GasModel, State};
use crate::error::{Error, Result};
use crate::metric::{isentropic_stiffness, line_element, metric_from_hessian};
use crate::quadrature::{integrate, QuadratureConfig};

/// Maximum coordinate mismatch (scaled by `max(1, |x|)`) between consecutive segments.
pub const CONNECTION_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Segment {
    /// Constant entropy, volume from `v1` to `v2`.
    Isentrope { s: f64, v1: f64, v2: f64 },
    /// Constant volume, entropy from `s1` to `s2`.
    Isochore { v: f64, s1: f64, s2: f64 },
    /// Constant temperature, volume from `v1` to `v2`.
    Isotherm {
        #[serde(alias = "T")]
        temperature: f64,
        v1: f64,
        v2: f64,
    },
    /// Straight line from `(s1, v1)` to `(s2, v2)`.
    Linear { s1: f64, v1: f64, s2: f64, v2: f64 },
}

/// A point on a segment with the tangent (ds/dξ, dv/dξ).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SegmentPoint {
    pub state: State,
    pub ds: f64,
    pub dv: f64,
}

impl Segment {
    /// An isentrope that is also required to be an isotherm.
    ///
    /// Temperature along an isentrope is proportional to `f1(v)`, so this only
    /// succeeds when `f1` is constant over the interval; for the Ideal and
    /// QuasiIdeal models that means `v1 == v2`.
    pub fn isentropic_isotherm(model: &GasModel, s: f64, v1: f64, v2: f64) -> Result<Segment> {
        let segment = Segment::Isentrope { s, v1, v2 };
        segment.validate(model)?;
        let t1 = model.temperature(State::new(s, v1))?;
        for i in 1..=16 {
            let v = v1 + (v2 - v1) * i as f64 / 16.0;
            let t = model.temperature(State::new(s, v))?;
            if (t - t1).abs() > 1e-12 * t1 {
                return Err(Error::DegenerateProcess(format!(
                    "the {} isentrope s = {s} is not isothermal between v = {v1} and v = {v2}",
                    model.variant().name()
                )));
            }
        }
        Ok(segment)
    }

    pub fn evaluate(&self, model: &GasModel, xi: f64) -> Result<SegmentPoint> {
        let lerp = |a: f64, b: f64| a + (b - a) * xi;
        let point = match *self {
            Segment::Isentrope { s, v1, v2 } => SegmentPoint {
                state: State::new(s, lerp(v1, v2)),
                ds: 0.0,
                dv: v2 - v1,
            },
            Segment::Isochore { v, s1, s2 } => SegmentPoint {
                state: State::new(lerp(s1, s2), v),
                ds: s2 - s1,
                dv: 0.0,
            },
            Segment::Isotherm { temperature, v1, v2 } => {
                let v = lerp(v1, v2);
                let (s, ds_dv) = model.isotherm_entropy(temperature, v)?;
                SegmentPoint {
                    state: State::new(s, v),
                    ds: ds_dv * (v2 - v1),
                    dv: v2 - v1,
                }
            }
            Segment::Linear { s1, v1, s2, v2 } => SegmentPoint {
                state: State::new(lerp(s1, s2), lerp(v1, v2)),
                ds: s2 - s1,
                dv: v2 - v1,
            },
        };
        Ok(point)
    }

    pub fn start(&self, model: &GasModel) -> Result<State> {
        self.evaluate(model, 0.0).map(|p| p.state)
    }

    pub fn end(&self, model: &GasModel) -> Result<State> {
        self.evaluate(model, 1.0).map(|p| p.state)
    }

    pub fn reversed(&self) -> Segment {
        match *self {
            Segment::Isentrope { s, v1, v2 } => Segment::Isentrope { s, v1: v2, v2: v1 },
            Segment::Isochore { v, s1, s2 } => Segment::Isochore { v, s1: s2, s2: s1 },
            Segment::Isotherm { temperature, v1, v2 } => Segment::Isotherm { temperature, v1: v2, v2: v1 },
            Segment::Linear { s1, v1, s2, v2 } => Segment::Linear { s1: s2, v1: v2, s2: s1, v2: v1 },
        }
    }

    fn is_point(&self) -> bool {
        match *self {
            Segment::Isentrope { v1, v2, .. } | Segment::Isotherm { v1, v2, .. } => v1 == v2,
            Segment::Isochore { s1, s2, .. } => s1 == s2,
            Segment::Linear { s1, v1, s2, v2 } => s1 == s2 && v1 == v2,
        }
    }

    /// Volume varies linearly in ξ on every kind, so checking the endpoints
    /// covers the whole segment.
    pub fn validate(&self, model: &GasModel) -> Result<()> {
        if let Segment::Isotherm { temperature, .. } = *self {
            if !(temperature.is_finite() && temperature > 0.0) {
                return Err(Error::Domain(format!("isotherm temperature {temperature} must be positive")));
            }
        }
        model.check_state(self.start(model)?)?;
        model.check_state(self.end(model)?)?;
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Path {
    pub segments: Vec<Segment>,
}

impl Path {
    pub fn new(segments: Vec<Segment>) -> Self {
        Self { segments }
    }

    pub fn reversed(&self) -> Path {
        Path::new(self.segments.iter().rev().map(Segment::reversed).collect())
    }

    pub fn validate(&self, model: &GasModel) -> Result<()> {
        if self.segments.is_empty() {
            return Err(Error::InvalidPath("a path needs at least one segment".into()));
        }
        for seg in &self.segments {
            seg.validate(model)?;
        }
        for (i, pair) in self.segments.windows(2).enumerate() {
            let end = pair[0].end(model)?;
            let start = pair[1].start(model)?;
            let gap_s = (end.s - start.s).abs() / end.s.abs().max(1.0);
            let gap_v = (end.v - start.v).abs() / end.v.abs().max(1.0);
            if gap_s >= CONNECTION_TOLERANCE || gap_v >= CONNECTION_TOLERANCE {
                return Err(Error::InvalidPath(format!(
                    "segment {i} ends at ({}, {}) but segment {} starts at ({}, {})",
                    end.s,
                    end.v,
                    i + 1,
                    start.s,
                    start.v
                )));
            }
        }
        Ok(())
    }
}

/// A computed length with its quadrature diagnostics.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct LengthResult {
    pub value: f64,
    pub estimated_error: f64,
    pub panels_used: usize,
}

fn segment_length(model: &GasModel, segment: &Segment, cfg: &QuadratureConfig) -> Result<LengthResult> {
    if segment.is_point() {
        return Ok(LengthResult::default());
    }
    let integrand = |xi: f64| -> Result<f64> {
        let pt = segment.evaluate(model, xi)?;
        let metric = metric_from_hessian(model, pt.state)?;
        if !metric.is_stable() {
            return Err(Error::Instability(format!(
                "metric is not positive definite at s = {}, v = {}",
                pt.state.s, pt.state.v
            )));
        }
        line_element(&metric, pt.ds, pt.dv)
            .map(f64::sqrt)
            .map_err(|e| Error::Instability(e.to_string()))
    };
    let r = integrate(integrand, 0.0, 1.0, cfg)?;
    Ok(LengthResult {
        value: r.value,
        estimated_error: r.estimated_error,
        panels_used: r.panels_used,
    })
}

/// Thermodynamic length of `path`, summed segment by segment.
pub fn path_length(model: &GasModel, path: &Path, cfg: &QuadratureConfig) -> Result<LengthResult> {
    cfg.validate()?;
    path.validate(model)?;
    path.segments
        .iter()
        .try_fold(LengthResult::default(), |acc, seg| {
            let r = segment_length(model, seg, cfg)?;
            Ok(LengthResult {
                value: acc.value + r.value,
                estimated_error: acc.estimated_error + r.estimated_error,
                panels_used: acc.panels_used + r.panels_used,
            })
        })
}

fn ordered(v1: f64, v2: f64) -> (f64, f64) {
    if v1 <= v2 {
        (v1, v2)
    } else {
        (v2, v1)
    }
}

/// Closed-form isentropic length for the Ideal and QuasiIdeal models,
/// `2 √(cp/R) |x1^(−R/2cv) − x2^(−R/2cv)| exp((s − s0)/2cv)` with `x = v − b`.
pub fn isentropic_length_closed(model: &GasModel, s: f64, v1: f64, v2: f64) -> Result<f64> {
    let cp = model.constant_cp().ok_or_else(|| model.unsupported("closed-form isentropic length"))?;
    model.check_state(State::new(s, v1))?;
    model.check_state(State::new(s, v2))?;
    let (lo, hi) = ordered(v1, v2);
    let half_k = 0.5 * model.r() / model.cv();
    let x_lo = lo - model.excluded_volume();
    // x_lo^(−k/2) − x_hi^(−k/2) without cancellation
    let diff = -x_lo.powf(-half_k) * (-half_k * ((hi - lo) / x_lo).ln_1p()).exp_m1();
    let scale = (0.5 * (s - model.s0()) / model.cv()).exp();
    Ok(2.0 * (cp / model.r()).sqrt() * diff * scale)
}

/// Closed-form isentropic length carrying the traversal sign: negative when
/// the isentrope is traversed toward smaller volume.
pub fn isentropic_length_signed(model: &GasModel, s: f64, v_start: f64, v_end: f64) -> Result<f64> {
    let length = isentropic_length_closed(model, s, v_start, v_end)?;
    Ok(if v_end < v_start { -length } else { length })
}

/// Isentropic length by quadrature of `√((∂²u/∂v²)_s)`; valid for every variant.
pub fn isentropic_length_numeric(
    model: &GasModel,
    s: f64,
    v1: f64,
    v2: f64,
    cfg: &QuadratureConfig,
) -> Result<LengthResult> {
    model.check_state(State::new(s, v1))?;
    model.check_state(State::new(s, v2))?;
    let (lo, hi) = ordered(v1, v2);
    let integrand = |v: f64| -> Result<f64> {
        let eta = isentropic_stiffness(model, State::new(s, v))?;
        if eta < 0.0 {
            return Err(Error::Instability(format!("(∂²u/∂v²)_s = {eta} < 0 at v = {v}")));
        }
        Ok(eta.sqrt())
    };
    let r = integrate(integrand, lo, hi, cfg)?;
    Ok(LengthResult {
        value: r.value,
        estimated_error: r.estimated_error,
        panels_used: r.panels_used,
    })
}

/// Isentropic length by quadrature of `√(cp / (cv v κ_T))` built from the
/// response coefficients. For the Ideal model κ_T = 1/p and the integrand is
/// `√(cp p / (cv v))`.
pub fn isentropic_length_coefficients(
    model: &GasModel,
    s: f64,
    v1: f64,
    v2: f64,
    cfg: &QuadratureConfig,
) -> Result<LengthResult> {
    model.check_state(State::new(s, v1))?;
    model.check_state(State::new(s, v2))?;
    let (lo, hi) = ordered(v1, v2);
    let integrand = |v: f64| -> Result<f64> {
        let tp = model.thermo_point(State::new(s, v))?;
        if tp.kappa_t.is_nan() || tp.kappa_t <= 0.0 {
            return Err(Error::Instability(format!("κ_T = {} is not positive at v = {v}", tp.kappa_t)));
        }
        Ok((tp.cp / (tp.cv * v * tp.kappa_t)).sqrt())
    };
    let r = integrate(integrand, lo, hi, cfg)?;
    Ok(LengthResult {
        value: r.value,
        estimated_error: r.estimated_error,
        panels_used: r.panels_used,
    })
}

/// Length of a quasi-static isentropic expansion written in (p, V):
/// `(2/(γ−1)) √(γ p0 V0) [1 − (p1/p0)^((γ−1)/2γ)]`, for one mole.
///
/// Negative when `p1 > p0` (compression).
pub fn rarefaction_length(gamma: f64, p0: f64, v0: f64, p1: f64) -> Result<f64> {
    if !(gamma.is_finite() && gamma > 1.0) {
        return Err(Error::Domain(format!("gamma = {gamma} must exceed 1")));
    }
    for (name, x) in [("p0", p0), ("V0", v0), ("p1", p1)] {
        if !(x.is_finite() && x > 0.0) {
            return Err(Error::Domain(format!("{name} = {x} must be positive")));
        }
    }
    let exponent = (gamma - 1.0) / (2.0 * gamma);
    let bracket = -(exponent * (p1 / p0).ln()).exp_m1();
    Ok(2.0 / (gamma - 1.0) * (gamma * p0 * v0).sqrt() * bracket)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // 2 √2.5 (1 − 2^(−1/3)), confirmed by high-precision quadrature.
    const CANONICAL_LENGTH: f64 = 0.652_376_217_984_968_5;

    fn ideal() -> GasModel {
        GasModel::ideal(1.5, 1.0).unwrap()
    }

    fn vdw() -> GasModel {
        GasModel::van_der_waals(1.5, 1.0, 0.5, 0.1).unwrap()
    }

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn canonical_isentrope() {
        let closed = isentropic_length_closed(&ideal(), 0.0, 1.0, 2.0).unwrap();
        assert!(rel(closed, CANONICAL_LENGTH) < 1e-15);
        let quad = isentropic_length_numeric(&ideal(), 0.0, 1.0, 2.0, &cfg()).unwrap();
        assert!(rel(quad.value, CANONICAL_LENGTH) < 1e-10);
        let path = Path::new(vec![Segment::Isentrope { s: 0.0, v1: 1.0, v2: 2.0 }]);
        let full = path_length(&ideal(), &path, &cfg()).unwrap();
        assert!(rel(full.value, CANONICAL_LENGTH) < 1e-10);
        assert!(full.panels_used >= 1);
    }

    #[test]
    fn zero_length_isentrope() {
        let path = Path::new(vec![Segment::Isentrope { s: 0.0, v1: 1.5, v2: 1.5 }]);
        assert_eq!(path_length(&ideal(), &path, &cfg()).unwrap().value, 0.0);
        assert_eq!(isentropic_length_closed(&ideal(), 0.0, 1.5, 1.5).unwrap(), 0.0);
        assert_eq!(isentropic_length_numeric(&vdw(), 0.0, 1.5, 1.5, &cfg()).unwrap().value, 0.0);
    }

    #[test]
    fn other_segment_kinds_match_high_precision_oracle() {
        // Values from 40-digit quadrature of the finite-difference Hessian line element.
        let cases = [
            (Segment::Isochore { v: 1.0, s1: 0.0, s2: 1.0 }, 0.791_224_850_172_179_1),
            (Segment::Linear { s1: 0.0, v1: 1.0, s2: 1.0, v2: 2.0 }, 0.636_215_778_082_065_3),
            (Segment::Isotherm { temperature: 2.0 / 3.0, v1: 1.0, v2: 2.0 }, 0.565_952_303_006_888_5),
        ];
        for (seg, expected) in cases {
            let r = path_length(&ideal(), &Path::new(vec![seg]), &cfg()).unwrap();
            assert!(rel(r.value, expected) < 1e-10, "{seg:?}: {}", r.value);
        }
    }

    #[test]
    fn multi_segment_path_and_reversal() {
        let model = vdw();
        let (s_iso, _) = model.isotherm_entropy(1.6, 2.0).unwrap();
        let path = Path::new(vec![
            Segment::Isentrope { s: 1.5, v1: 1.0, v2: 2.0 },
            Segment::Isochore { v: 2.0, s1: 1.5, s2: s_iso },
            Segment::Isotherm { temperature: 1.6, v1: 2.0, v2: 3.0 },
        ]);
        let fwd = path_length(&model, &path, &cfg()).unwrap();
        let back = path_length(&model, &path.reversed(), &cfg()).unwrap();
        assert!(rel(back.value, fwd.value) < 1e-12);
        let parts: f64 = path
            .segments
            .iter()
            .map(|s| path_length(&model, &Path::new(vec![*s]), &cfg()).unwrap().value)
            .sum();
        assert!(rel(parts, fwd.value) < 1e-14);
    }

    #[test]
    fn disconnected_path_is_rejected() {
        let path = Path::new(vec![
            Segment::Isentrope { s: 0.0, v1: 1.0, v2: 2.0 },
            Segment::Isentrope { s: 0.0, v1: 2.0 + 1e-9, v2: 3.0 },
        ]);
        assert!(matches!(path_length(&ideal(), &path, &cfg()), Err(Error::InvalidPath(_))));
        assert!(matches!(path_length(&ideal(), &Path::default(), &cfg()), Err(Error::InvalidPath(_))));
    }

    #[test]
    fn domain_exit_is_rejected() {
        let path = Path::new(vec![Segment::Isentrope { s: 0.0, v1: 1.0, v2: 0.05 }]);
        assert!(matches!(path_length(&vdw(), &path, &cfg()), Err(Error::Domain(_))));
        let path = Path::new(vec![Segment::Isotherm { temperature: -1.0, v1: 1.0, v2: 2.0 }]);
        assert!(matches!(path_length(&ideal(), &path, &cfg()), Err(Error::Domain(_))));
    }

    #[test]
    fn unstable_region_is_refused() {
        let model = GasModel::van_der_waals(1.5, 1.0, 3.0, 0.5).unwrap();
        let path = Path::new(vec![Segment::Isotherm { temperature: 0.3, v1: 1.0, v2: 4.0 }]);
        assert!(matches!(path_length(&model, &path, &cfg()), Err(Error::Instability(_))));
    }

    #[test]
    fn closed_forms_reject_van_der_waals() {
        assert!(matches!(
            isentropic_length_closed(&vdw(), 0.0, 1.0, 2.0),
            Err(Error::UnsupportedModel { variant: "VanDerWaals", .. })
        ));
    }

    #[test]
    fn van_der_waals_isentrope_regression() {
        // 40-digit quadrature of √(∂²u/∂v²) for a = 0.5, b = 0.1.
        let r = isentropic_length_numeric(&vdw(), 0.0, 1.0, 2.0, &cfg()).unwrap();
        assert!(rel(r.value, 0.422_091_492_826_542_6) < 1e-10);
        assert!(matches!(
            isentropic_length_coefficients(&vdw(), 0.0, 1.0, 2.0, &cfg()),
            Err(Error::Instability(_))
        ));
        // η22 stays positive but the full metric is indefinite along this isentrope
        let path = Path::new(vec![Segment::Isentrope { s: 0.0, v1: 1.0, v2: 2.0 }]);
        assert!(matches!(path_length(&vdw(), &path, &cfg()), Err(Error::Instability(_))));
        let hot = isentropic_length_numeric(&vdw(), 1.5, 1.0, 2.0, &cfg()).unwrap();
        let path = Path::new(vec![Segment::Isentrope { s: 1.5, v1: 1.0, v2: 2.0 }]);
        assert!(rel(path_length(&vdw(), &path, &cfg()).unwrap().value, hot.value) < 1e-10);
        let coeff = isentropic_length_coefficients(&vdw(), 1.5, 1.0, 2.0, &cfg()).unwrap();
        assert!(rel(coeff.value, hot.value) < 1e-10);
    }

    #[test]
    fn quasi_ideal_shift() {
        let q = GasModel::quasi_ideal(1.5, 1.0, 0.1).unwrap();
        let shifted = isentropic_length_closed(&q, 0.0, 1.1, 2.1).unwrap();
        assert!(rel(shifted, CANONICAL_LENGTH) < 1e-14);
    }

    #[test]
    fn signed_length() {
        let fwd = isentropic_length_signed(&ideal(), 0.0, 1.0, 2.0).unwrap();
        let back = isentropic_length_signed(&ideal(), 0.0, 2.0, 1.0).unwrap();
        assert_eq!(fwd, -back);
        assert!(fwd > 0.0);
    }

    #[test]
    fn rarefaction_examples() {
        assert_eq!(rarefaction_length(1.4, 2.0, 1.0, 2.0).unwrap(), 0.0);
        let m = ideal();
        let p0 = m.pressure(State::new(0.0, 1.0)).unwrap();
        let p1 = m.pressure(State::new(0.0, 2.0)).unwrap();
        let l = rarefaction_length(5.0 / 3.0, p0, 1.0, p1).unwrap();
        assert!(rel(l, CANONICAL_LENGTH) < 1e-14);
        let gamma = 1.4f64;
        let limit = 2.0 / (gamma - 1.0) * (gamma * 3.0 * 0.5f64).sqrt();
        let near_vacuum = rarefaction_length(gamma, 3.0, 0.5, 1e-300).unwrap();
        assert!(rel(near_vacuum, limit) < 1e-12);
        assert!(rarefaction_length(1.0, 1.0, 1.0, 0.5).is_err());
        assert!(rarefaction_length(1.4, 0.0, 1.0, 0.5).is_err());
        assert!(rarefaction_length(1.4, 1.0, 1.0, -0.5).is_err());
    }

    #[test]
    fn isothermal_isentrope_is_degenerate_for_ideal_like_models() {
        for m in [ideal(), GasModel::quasi_ideal(1.5, 1.0, 0.2).unwrap()] {
            assert!(matches!(
                Segment::isentropic_isotherm(&m, 0.0, 1.0, 2.0),
                Err(Error::DegenerateProcess(_))
            ));
            assert!(Segment::isentropic_isotherm(&m, 0.0, 1.0, 1.0).is_ok());
        }
        let flat = crate::eos::CustomProfile::new(|_| 2.0, |_| 0.0, |_| 0.0, |v| -1.0 / v, |v| 1.0 / (v * v), |v| -2.0 / (v * v * v));
        let m = GasModel::custom(1.5, 1.0, flat).unwrap();
        assert!(Segment::isentropic_isotherm(&m, 0.0, 1.0, 2.0).is_ok());
    }

    #[test]
    fn segment_config_parses() {
        let seg: Segment = serde_json::from_str(r#"{"kind":"isotherm","T":1.2,"v1":1.0,"v2":2.0}"#)
            .unwrap_or_else(|e| panic!("{e}"));
        assert_eq!(seg, Segment::Isotherm { temperature: 1.2, v1: 1.0, v2: 2.0 });
    }

    proptest! {
        #[test]
        fn closed_form_matches_quadrature(
            cv in 1.0f64..5.0, s in -2.0f64..2.0, v1 in 0.1f64..10.0, v2 in 0.1f64..10.0, frac in 0.0f64..0.5,
        ) {
            let b = frac * v1.min(v2);
            for m in [GasModel::ideal(cv, 1.0).unwrap(), GasModel::quasi_ideal(cv, 1.0, b).unwrap()] {
                let closed = isentropic_length_closed(&m, s, v1, v2).unwrap();
                let quad = isentropic_length_numeric(&m, s, v1, v2, &cfg()).unwrap().value;
                prop_assert!((quad - closed).abs() <= 1e-8 * (1.0 + closed));
                let coeff = isentropic_length_coefficients(&m, s, v1, v2, &cfg()).unwrap().value;
                prop_assert!((coeff - closed).abs() <= 1e-8 * (1.0 + closed));
            }
        }

        #[test]
        fn numeric_length_is_additive(v1 in 0.5f64..3.0, d1 in 0.01f64..3.0, d2 in 0.01f64..3.0) {
            let m = vdw();
            let l = |a, b| isentropic_length_numeric(&m, 0.0, a, b, &cfg()).unwrap().value;
            let (v2, v3) = (v1 + d1, v1 + d1 + d2);
            prop_assert!((l(v1, v2) + l(v2, v3) - l(v1, v3)).abs() <= 1e-9 * l(v1, v3));
        }

        #[test]
        fn length_increases_with_end_volume(cv in 1.0f64..5.0, s in -2.0f64..2.0, v1 in 0.1f64..5.0, d in 1e-3f64..5.0, e in 1e-3f64..5.0) {
            let m = GasModel::ideal(cv, 1.0).unwrap();
            let a = isentropic_length_closed(&m, s, v1, v1 + d).unwrap();
            let b = isentropic_length_closed(&m, s, v1, v1 + d + e).unwrap();
            prop_assert!(b > a);
        }
    }
}
