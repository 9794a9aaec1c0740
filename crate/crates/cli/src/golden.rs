//! Golden fixtures: commands run in-process with expected values at JSON pointers.
//!
//! A fixture file holds a list of fixtures:
//! `{"name", "args", "inputs"?, "expect"?, "exit"?}`. An argument `@key` is replaced by
//! `inputs[key]` serialized inline; an input `{"$ref": "other#/pointer"}` takes the value
//! at `pointer` in the report of an earlier fixture in the same file.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::report::InputLog;
use crate::{GoldenArgs, Outcome};

pub const BUILTIN: &[(&str, &str)] = &[
    ("anoninv.json", include_str!("../golden/anoninv.json")),
    ("six_powers.json", include_str!("../golden/six_powers.json")),
    ("socle8.json", include_str!("../golden/socle8.json")),
    ("lambda.json", include_str!("../golden/lambda.json")),
    ("sequences.json", include_str!("../golden/sequences.json")),
    ("nets.json", include_str!("../golden/nets.json")),
    ("resolution.json", include_str!("../golden/resolution.json")),
    ("witness.json", include_str!("../golden/witness.json")),
];

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub args: Vec<String>,
    #[serde(default)]
    pub inputs: BTreeMap<String, Value>,
    #[serde(default)]
    pub expect: BTreeMap<String, Value>,
    #[serde(default)]
    pub exit: i32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub pointer: String,
    pub expected: Value,
    pub actual: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FixtureResult {
    pub file: String,
    pub name: String,
    pub passed: bool,
    pub exit: i32,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GoldenSummary {
    pub passed: usize,
    pub failed: usize,
    pub fixtures: Vec<FixtureResult>,
}

fn resolve(v: &Value, done: &BTreeMap<String, Value>) -> Result<Value> {
    let Some(r) = v.get("$ref").and_then(Value::as_str) else {
        return Ok(v.clone());
    };
    let (name, pointer) = r.split_once('#').ok_or_else(|| anyhow!("bad $ref {r:?}"))?;
    done.get(name)
        .and_then(|rep| rep.pointer(pointer))
        .cloned()
        .ok_or_else(|| anyhow!("$ref {r:?} does not resolve"))
}

fn run_fixture(file: &str, f: &Fixture, done: &mut BTreeMap<String, Value>) -> FixtureResult {
    let mut result = FixtureResult {
        file: file.to_string(),
        name: f.name.clone(),
        passed: false,
        exit: -1,
        mismatches: Vec::new(),
        error: None,
    };
    let args: Result<Vec<String>> = f
        .args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(key) => {
                let v = f.inputs.get(key).ok_or_else(|| anyhow!("missing input {key:?}"))?;
                Ok(serde_json::to_string(&resolve(v, done)?)?)
            }
            None => Ok(a.clone()),
        })
        .collect();
    let args = match args {
        Ok(a) => a,
        Err(e) => {
            result.error = Some(format!("{e:#}"));
            return result;
        }
    };
    if args.first().map(String::as_str) == Some("golden") {
        result.error = Some("fixtures cannot run the golden suite".into());
        return result;
    }
    let run = crate::run(args);
    result.exit = run.code;
    let report: Option<Value> = serde_json::from_str(&run.stdout).ok();
    if run.code != f.exit {
        result.error = Some(format!("exit {} (expected {}): {}", run.code, f.exit, run.stderr.trim()));
    }
    for (pointer, expected) in &f.expect {
        let actual = report.as_ref().and_then(|r| r.pointer(pointer)).cloned();
        if actual.as_ref() != Some(expected) {
            result.mismatches.push(Mismatch {
                pointer: pointer.clone(),
                expected: expected.clone(),
                actual,
            });
        }
    }
    if let Some(r) = report {
        done.insert(f.name.clone(), r);
    }
    result.passed = result.error.is_none() && result.mismatches.is_empty();
    result
}

fn parse_file(name: &str, text: &str) -> Result<Vec<Fixture>> {
    serde_json::from_str(text).with_context(|| format!("malformed fixture file {name}"))
}

/// Runs every fixture file, in name order; each file's fixtures run in order.
pub fn run_suite(files: &[(String, String)]) -> Result<GoldenSummary> {
    let mut fixtures = Vec::new();
    for (name, text) in files {
        let mut done = BTreeMap::new();
        for f in parse_file(name, text)? {
            fixtures.push(run_fixture(name, &f, &mut done));
        }
    }
    let passed = fixtures.iter().filter(|f| f.passed).count();
    Ok(GoldenSummary {
        passed,
        failed: fixtures.len() - passed,
        fixtures,
    })
}

pub fn builtin_files() -> Vec<(String, String)> {
    BUILTIN.iter().map(|(n, t)| (n.to_string(), t.to_string())).collect()
}

fn files_in(dir: &Path) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for entry in std::fs::read_dir(dir).with_context(|| format!("reading {}", dir.display()))? {
        let path = entry?.path();
        if path.extension().and_then(|e| e.to_str()) == Some("json") {
            let name = path.file_name().expect("file").to_string_lossy().into_owned();
            out.push((name, std::fs::read_to_string(&path)?));
        }
    }
    if out.is_empty() {
        bail!("no fixture files in {}", dir.display());
    }
    out.sort();
    Ok(out)
}

pub fn command(a: &GoldenArgs, log: &mut InputLog) -> Result<Outcome> {
    if let Some(dir) = &a.export {
        std::fs::create_dir_all(dir)?;
        for (name, text) in BUILTIN {
            std::fs::write(dir.join(name), text)?;
        }
        return Ok(Outcome {
            results: json!({"exported": BUILTIN.iter().map(|(n, _)| *n).collect::<Vec<_>>()}),
            seed: None,
            failed: false,
        });
    }
    let files = match &a.dir {
        Some(d) => files_in(d)?,
        None => builtin_files(),
    };
    for (name, text) in &files {
        log.record(name, text.as_bytes());
    }
    let summary = run_suite(&files)?;
    Ok(Outcome {
        failed: summary.failed > 0,
        results: serde_json::to_value(&summary)?,
        seed: None,
    })
}
