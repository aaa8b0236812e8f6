//! Seeded identity checks over random instances of the model family.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thermolength::numdiff::{first_derivative, step, FIRST_DERIVATIVE_STEP};
use thermolength::work::{theorem_residual_in, theorem_residual_out};
use thermolength::{
    isentropic_length_closed, isentropic_length_coefficients, isentropic_length_numeric,
    isentropic_work, isotherm_remark_check, lemma_check, length_from_work, metric_from_coefficients,
    metric_from_hessian, pressure_integral_check, rarefaction_length, work_from_length, CustomProfile,
    Error, GasModel, QuadratureConfig, Result, State, Variant,
};

use crate::output::{Cell, Document, Record};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Scope {
    All,
    IdealLike,
    Ideal,
}

impl Scope {
    fn name(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::IdealLike => "ideal-like",
            Scope::Ideal => "ideal",
        }
    }

    fn admits(self, model: &GasModel) -> bool {
        match self {
            Scope::All => true,
            Scope::IdealLike => model.is_ideal_like(),
            Scope::Ideal => matches!(model.variant(), Variant::Ideal),
        }
    }

    /// Variants cycled through when no model is fixed.
    fn variants(self) -> &'static [usize] {
        match self {
            Scope::All => &[0, 1, 2, 3],
            Scope::IdealLike => &[0, 1],
            Scope::Ideal => &[0],
        }
    }
}

#[derive(Clone, Copy)]
enum Run {
    /// Draws its own inputs.
    Sampled(fn(&GasModel, &mut ChaCha8Rng) -> Result<f64>),
    /// Evaluated at a state where the metric is positive definite.
    Stable(fn(&GasModel, State) -> Result<f64>),
}

struct Check {
    name: &'static str,
    scope: Scope,
    tolerance: f64,
    run: Run,
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

fn volume(model: &GasModel, rng: &mut ChaCha8Rng) -> f64 {
    model.lower_volume_bound() + rng.gen_range(0.1..10.0)
}

fn entropy(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(-2.0..2.0)
}

/// A state where the metric is positive definite, if one turns up.
fn stable_state(model: &GasModel, rng: &mut ChaCha8Rng) -> Result<Option<State>> {
    for _ in 0..200 {
        let st = State::new(entropy(rng), volume(model, rng));
        if metric_from_hessian(model, st)?.is_stable() {
            return Ok(Some(st));
        }
    }
    Ok(None)
}

fn no_stable_state() -> Error {
    Error::Instability("no stable state found in the sampled region".into())
}

fn quad() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn metric_routes(model: &GasModel, st: State) -> Result<f64> {
    let hessian = metric_from_hessian(model, st)?;
    let coefficients = metric_from_coefficients(&model.thermo_point(st)?, st.v)?;
    Ok(hessian.max_relative_difference(&coefficients))
}

fn determinant(model: &GasModel, st: State) -> Result<f64> {
    let tp = model.thermo_point(st)?;
    let det = metric_from_hessian(model, st)?.determinant();
    Ok(rel(det, tp.temperature / (tp.cv * st.v * tp.kappa_t)))
}

fn closed_vs_quadrature(model: &GasModel, rng: &mut ChaCha8Rng) -> Result<f64> {
    let (s, v1, v2) = (entropy(rng), volume(model, rng), volume(model, rng));
    let closed = isentropic_length_closed(model, s, v1, v2)?;
    Ok(rel(closed, isentropic_length_numeric(model, s, v1, v2, &quad())?.value))
}

fn coefficient_integrand(model: &GasModel, rng: &mut ChaCha8Rng) -> Result<f64> {
    let (s, v1, v2) = (entropy(rng), volume(model, rng), volume(model, rng));
    let closed = isentropic_length_closed(model, s, v1, v2)?;
    Ok(rel(closed, isentropic_length_coefficients(model, s, v1, v2, &quad())?.value))
}

fn rarefaction(model: &GasModel, rng: &mut ChaCha8Rng) -> Result<f64> {
    let (s, v1, v2) = (entropy(rng), volume(model, rng), volume(model, rng));
    let (lo, hi) = (v1.min(v2), v1.max(v2));
    let start = model.thermo_point(State::new(s, lo))?;
    let end = model.thermo_point(State::new(s, hi))?;
    let pv = rarefaction_length(start.gamma(), start.pressure, lo, end.pressure)?;
    Ok(rel(pv, isentropic_length_closed(model, s, lo, hi)?))
}

fn theorem(model: &GasModel, rng: &mut ChaCha8Rng) -> Result<f64> {
    let (s, v1, v2) = (entropy(rng), volume(model, rng), volume(model, rng));
    let w = isentropic_work(model, s, v1, v2)?;
    let l = isentropic_length_closed(model, s, v1, v2)?;
    Ok(rel(work_from_length(model, l, w.u_large_volume())?, w.w_in()))
}

fn quadratic_residuals(model: &GasModel, rng: &mut ChaCha8Rng) -> Result<f64> {
    let (s, v1, v2) = (entropy(rng), volume(model, rng), volume(model, rng));
    let w = isentropic_work(model, s, v1, v2)?;
    let l = isentropic_length_closed(model, s, v1, v2)?;
    let u2 = w.u_large_volume();
    let worst = theorem_residual_in(model, l, u2, w.w_in())?
        .abs()
        .max(theorem_residual_out(model, l, u2, w.w_out())?.abs());
    Ok(worst / (1.0 + w.w.abs()))
}

fn corollary(model: &GasModel, rng: &mut ChaCha8Rng) -> Result<f64> {
    let (s, v1, v2) = (entropy(rng), volume(model, rng), volume(model, rng));
    let w = isentropic_work(model, s, v1, v2)?;
    let l = isentropic_length_closed(model, s, v1, v2)?;
    Ok(rel(length_from_work(model, w.u_small_volume(), w.u_large_volume())?, l))
}

/// Counts violations of L = 0 exactly when W = 0.
fn zero_iff(model: &GasModel, rng: &mut ChaCha8Rng) -> Result<f64> {
    let (s, v1, v2) = (entropy(rng), volume(model, rng), volume(model, rng));
    let mut violations = 0.0;
    for (a, b) in [(v1, v1), (v2, v2), (v1, v2)] {
        let l = isentropic_length_closed(model, s, a, b)?;
        let w = isentropic_work(model, s, a, b)?.w_in();
        let consistent = if a == b { l == 0.0 && w == 0.0 } else { l > 0.0 && w > 0.0 };
        if !consistent {
            violations += 1.0;
        }
    }
    Ok(violations)
}

/// Counts violations of growth of L and W_in as the far endpoint moves out.
fn monotonicity(model: &GasModel, rng: &mut ChaCha8Rng) -> Result<f64> {
    let s = entropy(rng);
    let mut v = [volume(model, rng), volume(model, rng), volume(model, rng)];
    v.sort_by(f64::total_cmp);
    let l_near = isentropic_length_closed(model, s, v[0], v[1])?;
    let l_far = isentropic_length_closed(model, s, v[0], v[2])?;
    let w_near = isentropic_work(model, s, v[0], v[1])?.w_in();
    let w_far = isentropic_work(model, s, v[0], v[2])?.w_in();
    Ok(f64::from(u8::from(l_near > l_far) + u8::from(w_near > w_far)))
}

fn lemma(model: &GasModel, st: State) -> Result<f64> {
    let c = lemma_check(model, st.s, st.v)?;
    Ok((c.lhs - c.rhs).abs() / c.lhs.abs())
}

fn pressure_integral(model: &GasModel, rng: &mut ChaCha8Rng) -> Result<f64> {
    let (s, v1, v2) = (entropy(rng), volume(model, rng), volume(model, rng));
    let w = isentropic_work(model, s, v1, v2)?.w;
    Ok(pressure_integral_check(model, s, v1, v2, &quad())? / (1.0 + w.abs()))
}

/// `u_ss − u_s/cv` by Richardson-extrapolated central differences in s.
fn constant_cv_ode(model: &GasModel, rng: &mut ChaCha8Rng) -> Result<f64> {
    let (s, v) = (entropy(rng), volume(model, rng));
    let u = |s: f64| model.internal_energy(State::new(s, v));
    let h = 1e-3 * s.abs().max(model.cv());
    let first = |h: f64| -> Result<f64> { Ok((u(s + h)? - u(s - h)?) / (2.0 * h)) };
    let second = |h: f64| -> Result<f64> { Ok((u(s + h)? - 2.0 * u(s)? + u(s - h)?) / (h * h)) };
    let us = (4.0 * first(0.5 * h)? - first(h)?) / 3.0;
    let uss = (4.0 * second(0.5 * h)? - second(h)?) / 3.0;
    let drift = us / model.cv();
    Ok((uss - drift).abs() / (uss.abs() + drift.abs()))
}

/// `T = ∂u/∂s` and `p = −∂u/∂v` against finite differences.
fn field_derivatives(model: &GasModel, rng: &mut ChaCha8Rng) -> Result<f64> {
    let (s, v) = (entropy(rng), volume(model, rng));
    let st = State::new(s, v);
    let t_fd = first_derivative(
        |x| model.internal_energy(State::new(x, v)),
        s,
        step(s, FIRST_DERIVATIVE_STEP, f64::NEG_INFINITY),
    )?;
    let p_fd = -first_derivative(
        |x| model.internal_energy(State::new(s, x)),
        v,
        step(v, FIRST_DERIVATIVE_STEP, model.lower_volume_bound()),
    )?;
    let t = model.temperature(st)?;
    let p = model.pressure(st)?;
    Ok(((t - t_fd).abs() / t.abs()).max((p - p_fd).abs() / (1.0 + p.abs())))
}

fn entropy_roundtrip(model: &GasModel, rng: &mut ChaCha8Rng) -> Result<f64> {
    let (s, v) = (entropy(rng), volume(model, rng));
    let u = model.internal_energy(State::new(s, v))?;
    Ok((model.entropy_from_uv(u, v)? - s).abs() / (1.0 + s.abs()))
}

/// Along an isotherm of an ideal-like gas the energy, and so the work, stays put.
fn isotherm_work(model: &GasModel, rng: &mut ChaCha8Rng) -> Result<f64> {
    let t = rng.gen_range(0.1..10.0);
    let r = isotherm_remark_check(model, t, volume(model, rng), volume(model, rng))?;
    Ok((r.work.abs() / (model.cv() * t)).max(r.length.abs()))
}

/// QuasiIdeal with b = 0 is Ideal and VanDerWaals with a = 0 is QuasiIdeal, bit for bit.
fn degeneracy_chain(model: &GasModel, rng: &mut ChaCha8Rng) -> Result<f64> {
    let (cv, r, s0) = (model.cv(), model.r(), model.s0());
    let b = rng.gen_range(0.0..0.5);
    let pairs = [
        (GasModel::ideal(cv, r)?, GasModel::quasi_ideal(cv, r, 0.0)?),
        (GasModel::quasi_ideal(cv, r, b)?, GasModel::van_der_waals(cv, r, 0.0, b)?),
    ];
    let st = State::new(entropy(rng), b + rng.gen_range(0.1..10.0));
    let mut worst: f64 = 0.0;
    for (x, y) in pairs {
        let (x, y) = (x.with_s0(s0)?, y.with_s0(s0)?);
        for f in [GasModel::internal_energy, GasModel::temperature, GasModel::pressure] {
            worst = worst.max((f(&x, st)? - f(&y, st)?).abs());
        }
    }
    Ok(worst)
}

const CHECKS: &[Check] = &[
    Check { name: "metric_route_agreement", scope: Scope::All, tolerance: 1e-10, run: Run::Stable(metric_routes) },
    Check { name: "metric_determinant", scope: Scope::All, tolerance: 1e-10, run: Run::Stable(determinant) },
    Check { name: "closed_vs_quadrature", scope: Scope::IdealLike, tolerance: 1e-8, run: Run::Sampled(closed_vs_quadrature) },
    Check { name: "coefficient_integrand", scope: Scope::IdealLike, tolerance: 1e-8, run: Run::Sampled(coefficient_integrand) },
    Check { name: "rarefaction_length", scope: Scope::Ideal, tolerance: 1e-10, run: Run::Sampled(rarefaction) },
    Check { name: "work_from_length", scope: Scope::IdealLike, tolerance: 1e-10, run: Run::Sampled(theorem) },
    Check { name: "quadratic_residuals", scope: Scope::IdealLike, tolerance: 1e-9, run: Run::Sampled(quadratic_residuals) },
    Check { name: "length_from_work", scope: Scope::IdealLike, tolerance: 1e-10, run: Run::Sampled(corollary) },
    Check { name: "zero_length_iff_zero_work", scope: Scope::IdealLike, tolerance: 0.0, run: Run::Sampled(zero_iff) },
    Check { name: "monotonicity", scope: Scope::IdealLike, tolerance: 0.0, run: Run::Sampled(monotonicity) },
    Check { name: "stiffness_vs_work_curvature", scope: Scope::All, tolerance: 1e-5, run: Run::Stable(lemma) },
    Check { name: "work_is_pressure_integral", scope: Scope::All, tolerance: 1e-10, run: Run::Sampled(pressure_integral) },
    Check { name: "constant_cv_ode", scope: Scope::All, tolerance: 1e-5, run: Run::Sampled(constant_cv_ode) },
    Check { name: "field_derivatives", scope: Scope::All, tolerance: 1e-6, run: Run::Sampled(field_derivatives) },
    Check { name: "entropy_roundtrip", scope: Scope::All, tolerance: 1e-10, run: Run::Sampled(entropy_roundtrip) },
    Check { name: "isotherm_work", scope: Scope::IdealLike, tolerance: 1e-12, run: Run::Sampled(isotherm_work) },
    Check { name: "degeneracy_chain", scope: Scope::All, tolerance: 0.0, run: Run::Sampled(degeneracy_chain) },
];

fn demo_custom(cv: f64, r: f64, c: f64, d: f64) -> Result<GasModel> {
    let k = r / cv;
    let profile = CustomProfile::new(
        move |v| v.powf(-k) + c * v.powf(-k - 1.0),
        move |v| -k * v.powf(-k - 1.0) - c * (k + 1.0) * v.powf(-k - 2.0),
        move |v| k * (k + 1.0) * v.powf(-k - 2.0) + c * (k + 1.0) * (k + 2.0) * v.powf(-k - 3.0),
        move |v| d * v.ln(),
        move |v| d / v,
        move |v| -d / (v * v),
    );
    GasModel::custom(cv, r, profile)
}

fn random_model(rng: &mut ChaCha8Rng, which: usize) -> Result<GasModel> {
    let r = rng.gen_range(0.5..8.5);
    let cv = rng.gen_range(1.0..5.0) * r;
    let b = rng.gen_range(0.0..0.2);
    let s0 = rng.gen_range(-1.0..1.0);
    let model = match which {
        0 => GasModel::ideal(cv, r)?,
        1 => GasModel::quasi_ideal(cv, r, b)?,
        2 => GasModel::van_der_waals(cv, r, rng.gen_range(0.0..1.0), b)?,
        _ => demo_custom(cv, r, rng.gen_range(0.0..0.5), rng.gen_range(0.0..0.5))?,
    };
    model.with_s0(s0)
}

struct Tally {
    evaluated: u64,
    failures: u64,
    worst: f64,
    first_error: Option<String>,
}

/// Up to this many random models are drawn in search of a stable state.
const MODEL_DRAWS: usize = 100;

fn evaluate(run: Run, fixed: Option<&GasModel>, variant: usize, rng: &mut ChaCha8Rng) -> Result<f64> {
    match (run, fixed) {
        (Run::Sampled(f), Some(m)) => f(m, rng),
        (Run::Sampled(f), None) => f(&random_model(rng, variant)?, rng),
        (Run::Stable(f), Some(m)) => f(m, stable_state(m, rng)?.ok_or_else(no_stable_state)?),
        (Run::Stable(f), None) => {
            for _ in 0..MODEL_DRAWS {
                let m = random_model(rng, variant)?;
                if let Some(st) = stable_state(&m, rng)? {
                    return f(&m, st);
                }
            }
            Err(no_stable_state())
        }
    }
}

fn run_check(check: &Check, index: usize, fixed: Option<&GasModel>, seed: u64, trials: u64) -> Option<Tally> {
    if fixed.is_some_and(|m| !check.scope.admits(m)) {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let mut tally = Tally { evaluated: 0, failures: 0, worst: 0.0, first_error: None };
    let variants = check.scope.variants();
    for trial in 0..trials {
        let variant = variants[trial as usize % variants.len()];
        let outcome = evaluate(check.run, fixed, variant, &mut rng);
        tally.evaluated += 1;
        match outcome {
            Ok(residual) if residual <= check.tolerance => tally.worst = tally.worst.max(residual),
            Ok(residual) => {
                tally.failures += 1;
                tally.worst = if residual.is_nan() { f64::NAN } else { tally.worst.max(residual) };
            }
            Err(e) => {
                tally.failures += 1;
                tally.first_error.get_or_insert_with(|| e.to_string());
            }
        }
    }
    Some(tally)
}

/// Summary of a verification run.
pub struct Report {
    pub document: Document,
    pub passed: bool,
}

pub fn run(fixed: Option<&GasModel>, seed: u64, trials: u64) -> Report {
    let mut rows = Vec::with_capacity(CHECKS.len());
    let mut failed = 0usize;
    for (index, check) in CHECKS.iter().enumerate() {
        let mut row = Record::new()
            .with("identity", check.name)
            .with("applies_to", check.scope.name())
            .with("tolerance", check.tolerance);
        match run_check(check, index, fixed, seed, trials) {
            None => {
                row.push("evaluated", 0u64);
                row.push("failures", 0u64);
                row.push("max_residual", Cell::Missing);
                row.push("status", "skipped");
                row.push("first_error", Cell::Missing);
            }
            Some(t) => {
                let pass = t.failures == 0;
                failed += usize::from(!pass);
                row.push("evaluated", t.evaluated);
                row.push("failures", t.failures);
                row.push("max_residual", t.worst);
                row.push("status", if pass { "pass" } else { "fail" });
                row.push("first_error", t.first_error);
            }
        }
        rows.push(row);
    }
    let summary = Record::new()
        .with("seed", seed)
        .with("trials", trials)
        .with("model", fixed.map_or("random", |m| m.variant().name()))
        .with("identities", CHECKS.len())
        .with("failed", failed)
        .with("passed", failed == 0);
    Report {
        document: Document::with_rows(summary, "identities", rows),
        passed: failed == 0,
    }
}

/// Report for a model that did not validate; no identities are run.
pub fn invalid_model(seed: u64, trials: u64, error: &str) -> Document {
    Document::record(
        Record::new()
            .with("seed", seed)
            .with("trials", trials)
            .with("model", "invalid")
            .with("validation_error", error)
            .with("passed", false),
    )
}
