use std::path::Path;

use anyhow::{Context, Result};
use gorenstein::graded::{DividedPower, Form, Ordinary};
use gorenstein::json::{
    complex_from_json, dual_generator_from_json, form_from_json, points_from_json, poly_grid_from_json,
    ComplexJson, PointsJson, PolyJson,
};
use gorenstein::resolution::{PolyGrid, ResolutionComplex};
use gorenstein::inverse::DualGenerator;
use gorenstein::{FieldSpec, HilbertSequence, Scalar, VariableFrame};
use serde::de::DeserializeOwned;

use crate::report::InputLog;

/// Reads a JSON argument: inline when it starts with `{` or `[`, otherwise a file path.
pub fn read_json<T: DeserializeOwned>(log: &mut InputLog, name: &str, arg: &str) -> Result<T> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg)).with_context(|| format!("reading {arg}"))?
    };
    log.record(name, text.as_bytes());
    serde_json::from_str(&text).with_context(|| format!("malformed JSON in {name}"))
}

pub fn scalar_arg(log: &mut InputLog, name: &str, value: &str) {
    log.record(name, value.as_bytes());
}

pub fn sequence(log: &mut InputLog, name: &str, arg: &str) -> Result<HilbertSequence> {
    scalar_arg(log, name, arg);
    Ok(HilbertSequence::parse(arg)?)
}

pub fn dual_generator(log: &mut InputLog, name: &str, arg: &str, field: Option<FieldSpec>) -> Result<DualGenerator> {
    let p: PolyJson = read_json(log, name, arg)?;
    Ok(dual_generator_from_json(&p, field)?)
}

pub fn dual_form(log: &mut InputLog, name: &str, arg: &str, field: Option<FieldSpec>) -> Result<Form<DividedPower>> {
    let p: PolyJson = read_json(log, name, arg)?;
    Ok(form_from_json(&p, field)?)
}

pub fn poly(log: &mut InputLog, name: &str, arg: &str, field: Option<FieldSpec>) -> Result<Form<Ordinary>> {
    let p: PolyJson = read_json(log, name, arg)?;
    Ok(form_from_json(&p, field)?)
}

pub fn polys(log: &mut InputLog, name: &str, arg: &str, field: Option<FieldSpec>) -> Result<Vec<Form<Ordinary>>> {
    let ps: Vec<PolyJson> = read_json(log, name, arg)?;
    Ok(ps.iter().map(|p| form_from_json(p, field)).collect::<gorenstein::Result<_>>()?)
}

pub fn points(
    log: &mut InputLog,
    name: &str,
    arg: &str,
    field: Option<FieldSpec>,
) -> Result<(VariableFrame, FieldSpec, Vec<Vec<Scalar>>)> {
    let p: PointsJson = read_json(log, name, arg)?;
    Ok(points_from_json(&p, field)?)
}

pub fn grid(
    log: &mut InputLog,
    name: &str,
    arg: &str,
    field: Option<FieldSpec>,
) -> Result<(VariableFrame, FieldSpec, PolyGrid)> {
    let rows: Vec<Vec<PolyJson>> = read_json(log, name, arg)?;
    Ok(poly_grid_from_json(&rows, field)?)
}

pub fn complex(log: &mut InputLog, name: &str, arg: &str, field: Option<FieldSpec>) -> Result<ResolutionComplex> {
    let c: ComplexJson = read_json(log, name, arg)?;
    Ok(complex_from_json(&c, field)?)
}
