//! Acceptance criteria. Each test prints one PASS/FAIL line; run with
//! `cargo test -p thermolength --test acceptance -- --nocapture` to see them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thermolength::work::{theorem_residual_in, theorem_residual_out};
use thermolength::{
    isentropic_length_closed, isentropic_length_numeric, isentropic_work, lemma_check,
    length_from_work, metric_from_coefficients, metric_from_hessian, pressure_integral_check,
    rarefaction_length, work_from_length, CustomProfile, GasModel, QuadratureConfig, State, Variant,
};

const SEED: u64 = 0x5eed_1e49;

fn report(id: u32, name: &str, worst: f64, tol: f64) {
    let ok = worst <= tol;
    println!(
        "[{}] criterion {id:>2}: {name}: worst {worst:.3e} (tolerance {tol:.0e})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {id} ({name}) failed: {worst:e} > {tol:e}");
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / b.abs()
    }
}

/// An Ideal or QuasiIdeal isentrope with `0.1 ≤ v1 < v2 ≤ 10`.
struct Isentrope {
    model: GasModel,
    s: f64,
    v1: f64,
    v2: f64,
}

fn ideal_like(rng: &mut ChaCha8Rng, quasi: bool) -> (GasModel, f64) {
    let r = rng.gen_range(0.5..8.5);
    let cv = rng.gen_range(1.0..5.0) * r;
    let s = rng.gen_range(-2.0..2.0);
    let model = if quasi {
        GasModel::quasi_ideal(cv, r, 0.0).unwrap()
    } else {
        GasModel::ideal(cv, r).unwrap()
    };
    (model, s)
}

fn isentropes(n: usize, seed: u64) -> Vec<Isentrope> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|i| {
            let quasi = i % 2 == 1;
            let (base, s) = ideal_like(&mut rng, quasi);
            let mut v1: f64 = rng.gen_range(0.1..10.0);
            let mut v2: f64 = rng.gen_range(0.1..10.0);
            if v1 > v2 {
                std::mem::swap(&mut v1, &mut v2);
            }
            let model = if quasi {
                let b = rng.gen_range(0.0..0.5) * v1;
                GasModel::quasi_ideal(base.cv(), base.r(), b).unwrap()
            } else {
                base
            };
            Isentrope { model, s, v1, v2 }
        })
        .collect()
}

fn custom_model(cv: f64, r: f64, c: f64, d: f64) -> GasModel {
    let k = r / cv;
    let profile = CustomProfile::new(
        move |v| v.powf(-k) + c * v.powf(-k - 1.0),
        move |v| -k * v.powf(-k - 1.0) - c * (k + 1.0) * v.powf(-k - 2.0),
        move |v| k * (k + 1.0) * v.powf(-k - 2.0) + c * (k + 1.0) * (k + 2.0) * v.powf(-k - 3.0),
        move |v| d * v.ln(),
        move |v| d / v,
        move |v| -d / (v * v),
    );
    GasModel::custom(cv, r, profile).unwrap()
}

/// Random state of one of the four variants, resampled until the metric is
/// positive definite.
fn stable_state(rng: &mut ChaCha8Rng, which: usize) -> (GasModel, State) {
    loop {
        let r = rng.gen_range(0.5..8.5);
        let cv = rng.gen_range(1.0..5.0) * r;
        let b = rng.gen_range(0.0..0.2);
        let model = match which % 4 {
            0 => GasModel::ideal(cv, r).unwrap(),
            1 => GasModel::quasi_ideal(cv, r, b).unwrap(),
            2 => GasModel::van_der_waals(cv, r, rng.gen_range(0.0..1.0), b).unwrap(),
            _ => custom_model(cv, r, rng.gen_range(0.0..0.5), rng.gen_range(0.0..0.5)),
        };
        let state = State::new(rng.gen_range(-2.0..2.0), model.lower_volume_bound() + rng.gen_range(0.1..10.0));
        if metric_from_hessian(&model, state).map(|m| m.is_stable()).unwrap_or(false) {
            return (model, state);
        }
    }
}

#[test]
fn criterion_01_metric_route_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst: f64 = 0.0;
    for i in 0..1000 {
        let (base, s) = ideal_like(&mut rng, i % 2 == 1);
        let v = rng.gen_range(0.1..10.0);
        let model = if i % 2 == 1 {
            GasModel::quasi_ideal(base.cv(), base.r(), rng.gen_range(0.0..0.5) * v).unwrap()
        } else {
            base
        };
        let st = State::new(s, v);
        let h = metric_from_hessian(&model, st).unwrap();
        let c = metric_from_coefficients(&model.thermo_point(st).unwrap(), v).unwrap();
        worst = worst.max(h.max_relative_difference(&c));
    }
    report(1, "Hessian vs coefficient metric, 1000 Ideal/QuasiIdeal states", worst, 1e-10);
}

#[test]
fn criterion_02_closed_form_vs_quadrature() {
    let cfg = QuadratureConfig::default();
    let worst = isentropes(500, SEED + 2)
        .iter()
        .map(|c| {
            let closed = isentropic_length_closed(&c.model, c.s, c.v1, c.v2).unwrap();
            let quad = isentropic_length_numeric(&c.model, c.s, c.v1, c.v2, &cfg).unwrap();
            rel(quad.value, closed)
        })
        .fold(0.0, f64::max);
    report(2, "closed-form vs quadrature isentropic length, 500 isentropes", worst, 1e-8);
}

#[test]
fn criterion_03_work_from_length_roundtrip() {
    let mut worst_work: f64 = 0.0;
    let mut worst_quadratic: f64 = 0.0;
    for c in isentropes(500, SEED + 3) {
        let length = isentropic_length_closed(&c.model, c.s, c.v1, c.v2).unwrap();
        let work = isentropic_work(&c.model, c.s, c.v1, c.v2).unwrap();
        let u2 = work.u_large_volume();
        let w_in = work_from_length(&c.model, length, u2).unwrap();
        worst_work = worst_work.max(rel(w_in, work.w.abs()));
        let scale = 1.0 + work.w.abs();
        let r_in = theorem_residual_in(&c.model, length, u2, work.w_in()).unwrap();
        let r_out = theorem_residual_out(&c.model, length, u2, work.w_out()).unwrap();
        worst_quadratic = worst_quadratic.max(r_in.abs() / scale).max(r_out.abs() / scale);
    }
    report(3, "work from length vs |isentropic work|, 500 instances", worst_work, 1e-10);
    report(3, "quadratic residuals (in/out) / (1+|W|)", worst_quadratic, 1e-9);
}

#[test]
fn criterion_04_length_from_energies() {
    let worst = isentropes(500, SEED + 3)
        .iter()
        .map(|c| {
            let work = isentropic_work(&c.model, c.s, c.v1, c.v2).unwrap();
            let from_work = length_from_work(&c.model, work.u_small_volume(), work.u_large_volume()).unwrap();
            let closed = isentropic_length_closed(&c.model, c.s, c.v1, c.v2).unwrap();
            rel(from_work, closed)
        })
        .fold(0.0, f64::max);
    report(4, "length from energies vs closed form, 500 instances", worst, 1e-10);
}

#[test]
fn criterion_05_zero_length_iff_zero_work() {
    let mut violations = 0usize;
    for c in isentropes(500, SEED + 5) {
        for v in [c.v1, c.v2] {
            let l = isentropic_length_closed(&c.model, c.s, v, v).unwrap();
            let w = isentropic_work(&c.model, c.s, v, v).unwrap();
            if l != 0.0 || w.w != 0.0 || w.w_in() != 0.0 {
                violations += 1;
            }
        }
        let l = isentropic_length_closed(&c.model, c.s, c.v1, c.v2).unwrap();
        let w = isentropic_work(&c.model, c.s, c.v1, c.v2).unwrap();
        if !(c.v1 != c.v2 && l > 0.0 && w.w_in() > 0.0) {
            violations += 1;
        }
    }
    report(5, "L = 0 <=> W = 0 (violations)", violations as f64, 0.0);
}

#[test]
fn criterion_06_stiffness_vs_work_curvature() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let (model, st) = stable_state(&mut rng, i);
        let check = lemma_check(&model, st.s, st.v).unwrap();
        worst = worst.max((check.lhs - check.rhs).abs() / check.lhs.abs());
    }
    report(6, "(dL/dv)^2 vs finite-difference d2W/dv2, 200 states, 4 variants", worst, 1e-5);
}

#[test]
fn criterion_07_rarefaction_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let (model, s) = ideal_like(&mut rng, false);
        let mut v1: f64 = rng.gen_range(0.1..10.0);
        let mut v2: f64 = rng.gen_range(0.1..10.0);
        if v1 > v2 {
            std::mem::swap(&mut v1, &mut v2);
        }
        let start = model.thermo_point(State::new(s, v1)).unwrap();
        let end = model.thermo_point(State::new(s, v2)).unwrap();
        let l_pv = rarefaction_length(start.gamma(), start.pressure, v1, end.pressure).unwrap();
        let l_closed = isentropic_length_closed(&model, s, v1, v2).unwrap();
        worst = worst.max(rel(l_pv, l_closed));
    }
    report(7, "rarefaction (p,V) length vs closed-form length, 200 Ideal isentropes", worst, 1e-10);
}

fn any_variant(rng: &mut ChaCha8Rng, which: usize) -> GasModel {
    let r = rng.gen_range(0.5..8.5);
    let cv = rng.gen_range(1.0..5.0) * r;
    let b = rng.gen_range(0.0..0.09);
    match which % 4 {
        0 => GasModel::ideal(cv, r).unwrap(),
        1 => GasModel::quasi_ideal(cv, r, b).unwrap(),
        2 => GasModel::van_der_waals(cv, r, rng.gen_range(0.0..1.0), b).unwrap(),
        _ => custom_model(cv, r, rng.gen_range(0.0..0.5), rng.gen_range(0.0..0.5)),
    }
}

#[test]
fn criterion_08_work_is_pressure_integral() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    let cfg = QuadratureConfig::default();
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let model = any_variant(&mut rng, i);
        let s = rng.gen_range(-2.0..2.0);
        let v1 = rng.gen_range(0.1..10.0);
        let v2 = rng.gen_range(0.1..10.0);
        let w = isentropic_work(&model, s, v1, v2).unwrap().w;
        let residual = pressure_integral_check(&model, s, v1, v2, &cfg).unwrap();
        worst = worst.max(residual / (1.0 + w.abs()));
    }
    report(8, "|du - (-int p dv)| / (1+|du|), 200 instances, 4 variants", worst, 1e-10);
}

#[test]
fn criterion_09_constant_cv_ode() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let model = any_variant(&mut rng, i);
        let s0 = rng.gen_range(-1.0..1.0);
        let model = model.with_s0(s0).unwrap();
        let s: f64 = rng.gen_range(-2.0..2.0);
        let v = rng.gen_range(0.1..10.0);
        let u = |s: f64| model.internal_energy(State::new(s, v)).unwrap();
        // entropy enters only through (s - s0)/cv, so step on that scale
        let h = 1e-3 * s.abs().max(model.cv());
        let first = |h: f64| (u(s + h) - u(s - h)) / (2.0 * h);
        let second = |h: f64| (u(s + h) - 2.0 * u(s) + u(s - h)) / (h * h);
        let us = (4.0 * first(h / 2.0) - first(h)) / 3.0;
        let uss = (4.0 * second(h / 2.0) - second(h)) / 3.0;
        let residual = (uss - us / model.cv()).abs() / (uss.abs() + (us / model.cv()).abs());
        worst = worst.max(residual);
    }
    report(9, "u_ss - u_s/cv residual (finite differences), 200 states, 4 variants", worst, 1e-5);
}

#[test]
fn criterion_10_canonical_example() {
    // 2 √2.5 (1 − 2^(−1/3)), reproduced by 40-digit quadrature of √(∂²u/∂v²)
    const LENGTH: f64 = 0.652_376_217_984_968_5;
    const WORK_OUT: f64 = -0.370_039_475_052_563_4;
    let model = GasModel::ideal(1.5, 1.0).unwrap();
    assert!(matches!(model.variant(), Variant::Ideal));
    let cfg = QuadratureConfig::default();
    let closed = isentropic_length_closed(&model, 0.0, 1.0, 2.0).unwrap();
    let quad = isentropic_length_numeric(&model, 0.0, 1.0, 2.0, &cfg).unwrap().value;
    let work = isentropic_work(&model, 0.0, 1.0, 2.0).unwrap();
    let u2 = 2f64.powf(-2.0 / 3.0);
    // u2 recovered by inverting the entropy relation at s = 0, v = 2
    let s_back = model.entropy_from_uv(u2, 2.0).unwrap();
    let worst = [
        rel(closed, LENGTH),
        rel(quad, LENGTH),
        rel(work.w, WORK_OUT),
        rel(work.w_out(), WORK_OUT),
        rel(work.u_final, u2),
        s_back.abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    report(10, "golden example L=0.6523762, W_out=-0.3700395, u2=2^(-2/3)", worst, 1e-10);
}
