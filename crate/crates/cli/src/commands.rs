//! The single-computation subcommands.

use std::path::Path as FsPath;

use serde::Deserialize;
use thermolength::work::{theorem_residual_in, theorem_residual_out, work_out_from_length};
use thermolength::{
    isentropic_length_closed, isentropic_length_numeric, isentropic_work, length_from_work,
    metric_from_coefficients, metric_from_hessian, path_length, pressure_integral_check,
    work_from_length, GasModel, ModelRecord, Path, QuadratureConfig, Segment, State,
};

use crate::args::{read_toml, Grid, IsentropeArgs, ModelArgs, QuadratureArgs, StateArgs};
use crate::error::{CliError, CliResult};
use crate::output::{Cell, Document, Record};

fn model_record(model: &GasModel) -> Record {
    let mut rec = Record::new().with("model", model.variant().name());
    rec.push("cv", model.cv());
    rec.push("R", model.r());
    rec.push("s0", model.s0());
    rec
}

pub fn point(model: &ModelArgs, state: &StateArgs) -> CliResult<Document> {
    let model = model.require()?;
    let tp = model.thermo_point(State::new(state.s, state.v))?;
    let mut rec = model_record(&model);
    rec.push("s", state.s);
    rec.push("v", state.v);
    rec.push("u", tp.u);
    rec.push("T", tp.temperature);
    rec.push("p", tp.pressure);
    rec.push("cp", tp.cp);
    rec.push("alpha", tp.alpha);
    rec.push("kappa_T", tp.kappa_t);
    rec.push("gamma", tp.gamma());
    Ok(Document::record(rec))
}

pub fn metric(model: &ModelArgs, state: &StateArgs) -> CliResult<Document> {
    let model = model.require()?;
    let st = State::new(state.s, state.v);
    let hessian = metric_from_hessian(&model, st)?;
    let mut rec = model_record(&model);
    rec.push("s", state.s);
    rec.push("v", state.v);
    rec.push("g_ss", hessian.g_ss);
    rec.push("g_sv", hessian.g_sv);
    rec.push("g_vv", hessian.g_vv);
    rec.push("determinant", hessian.determinant());
    rec.push("stable", hessian.is_stable());
    let coefficients = model
        .thermo_point(st)
        .and_then(|tp| metric_from_coefficients(&tp, state.v));
    match coefficients {
        Ok(c) => {
            rec.push("coefficient_g_ss", c.g_ss);
            rec.push("coefficient_g_sv", c.g_sv);
            rec.push("coefficient_g_vv", c.g_vv);
            rec.push("route_difference", hessian.max_relative_difference(&c));
        }
        Err(e) => rec.push("coefficient_route_error", e.to_string()),
    }
    Ok(Document::record(rec))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PathFile {
    model: Option<ModelRecord>,
    quadrature: Option<QuadratureConfig>,
    #[serde(default, rename = "segment")]
    segments: Vec<Segment>,
}

pub fn length(
    model_args: &ModelArgs,
    quadrature: &QuadratureArgs,
    isentrope: Option<IsentropeArgs>,
    path_file: Option<&FsPath>,
) -> CliResult<Document> {
    let (model, cfg, path) = match (isentrope, path_file) {
        (_, Some(file)) => {
            let parsed: PathFile = read_toml(file)?;
            let model = match (parsed.model, model_args.record()?) {
                (Some(_), Some(_)) => {
                    return Err(CliError::Usage(
                        "the path file already names a model; drop the model flags".into(),
                    ))
                }
                (Some(rec), None) | (None, Some(rec)) => rec.to_model()?,
                (None, None) => return Err(CliError::Usage("the path file names no model".into())),
            };
            let cfg = quadrature.config(parsed.quadrature.unwrap_or_default())?;
            (model, cfg, Path::new(parsed.segments))
        }
        (Some(i), None) => {
            let model = model_args.require()?;
            let cfg = quadrature.config(QuadratureConfig::default())?;
            return isentrope_length(&model, &cfg, &i);
        }
        (None, None) => return Err(CliError::Usage("give --s, --v1, --v2 or --path".into())),
    };

    let result = path_length(&model, &path, &cfg)?;
    let mut rec = model_record(&model);
    rec.push("segments", path.segments.len());
    rec.push("value", result.value);
    rec.push("quadrature", result.value);
    if let [Segment::Isentrope { s, v1, v2 }] = path.segments.as_slice() {
        if model.is_ideal_like() {
            let closed = isentropic_length_closed(&model, *s, *v1, *v2)?;
            rec.push("closed_form", closed);
            rec.push("abs_difference", (closed - result.value).abs());
        }
    }
    rec.push("estimated_error", result.estimated_error);
    rec.push("panels_used", result.panels_used);
    Ok(Document::record(rec))
}

fn isentrope_length(model: &GasModel, cfg: &QuadratureConfig, i: &IsentropeArgs) -> CliResult<Document> {
    let (s, v1, v2) = (i.s, i.v1, i.v2);
    let quad = isentropic_length_numeric(model, s, v1, v2, cfg)?;
    let mut rec = model_record(model);
    rec.push("s", s);
    rec.push("v1", v1);
    rec.push("v2", v2);
    rec.push("value", quad.value);
    rec.push("quadrature", quad.value);
    if model.is_ideal_like() {
        let closed = isentropic_length_closed(model, s, v1, v2)?;
        rec.push("closed_form", closed);
        rec.push("abs_difference", (closed - quad.value).abs());
    }
    rec.push("estimated_error", quad.estimated_error);
    rec.push("panels_used", quad.panels_used);
    Ok(Document::record(rec))
}

pub fn work(model: &ModelArgs, quadrature: &QuadratureArgs, i: &IsentropeArgs) -> CliResult<Document> {
    let model = model.require()?;
    let cfg = quadrature.config(QuadratureConfig::default())?;
    let w = isentropic_work(&model, i.s, i.v1, i.v2)?;
    let residual = pressure_integral_check(&model, i.s, i.v1, i.v2, &cfg)?;
    let mut rec = model_record(&model);
    rec.push("s", i.s);
    rec.push("v_initial", w.v_initial);
    rec.push("v_final", w.v_final);
    rec.push("u_initial", w.u_initial);
    rec.push("u_final", w.u_final);
    rec.push("w", w.w);
    rec.push("W_in", w.w_in());
    rec.push("W_out", w.w_out());
    rec.push("pressure_integral_residual", residual);
    if model.is_ideal_like() {
        let length = isentropic_length_closed(&model, i.s, i.v1, i.v2)?;
        let u2 = w.u_large_volume();
        rec.push("length_closed", length);
        rec.push("W_in_from_length", work_from_length(&model, length, u2)?);
        rec.push("W_out_from_length", work_out_from_length(&model, length, u2)?);
        rec.push("length_from_work", length_from_work(&model, w.u_small_volume(), u2)?);
        rec.push("theorem_residual_in", theorem_residual_in(&model, length, u2, w.w_in())?);
        rec.push("theorem_residual_out", theorem_residual_out(&model, length, u2, w.w_out())?);
    }
    Ok(Document::record(rec))
}

struct TableRow {
    u1: f64,
    u2: f64,
    closed: Option<f64>,
    quadrature: f64,
    w_in: f64,
    theorem_residual: Option<f64>,
}

fn table_row(model: &GasModel, cfg: &QuadratureConfig, s: f64, v1: f64, v2: f64) -> thermolength::Result<TableRow> {
    let w = isentropic_work(model, s, v1, v2)?;
    let quadrature = isentropic_length_numeric(model, s, v1, v2, cfg)?.value;
    let (closed, theorem_residual) = if model.is_ideal_like() {
        let l = isentropic_length_closed(model, s, v1, v2)?;
        (Some(l), Some(theorem_residual_in(model, l, w.u_large_volume(), w.w_in())?))
    } else {
        (None, None)
    };
    Ok(TableRow {
        u1: w.u_initial,
        u2: w.u_final,
        closed,
        quadrature,
        w_in: w.w_in(),
        theorem_residual,
    })
}

/// One row per (v1, v2) pair; failures land in the `error` column.
pub fn table(model: &ModelArgs, quadrature: &QuadratureArgs, s: f64, v1: &Grid, v2: &Grid) -> CliResult<Document> {
    let model = model.require()?;
    let cfg = quadrature.config(QuadratureConfig::default())?;
    let mut rows = Vec::with_capacity(v1.0.len() * v2.0.len());
    let mut failed = 0usize;
    for &a in &v1.0 {
        for &b in &v2.0 {
            let mut rec = Record::new().with("v1", a).with("v2", b);
            match table_row(&model, &cfg, s, a, b) {
                Ok(row) => {
                    rec.push("u1", row.u1);
                    rec.push("u2", row.u2);
                    rec.push("L_closed", row.closed);
                    rec.push("L_quadrature", row.quadrature);
                    rec.push("W", row.w_in);
                    rec.push("theorem_residual", row.theorem_residual);
                    rec.push("error", Cell::Missing);
                }
                Err(e) => {
                    failed += 1;
                    for key in ["u1", "u2", "L_closed", "L_quadrature", "W", "theorem_residual"] {
                        rec.push(key, Cell::Missing);
                    }
                    rec.push("error", e.to_string());
                }
            }
            rows.push(rec);
        }
    }
    let mut summary = model_record(&model);
    summary.push("s", s);
    summary.push("row_count", rows.len());
    summary.push("failed_rows", failed);
    Ok(Document::with_rows(summary, "rows", rows))
}
