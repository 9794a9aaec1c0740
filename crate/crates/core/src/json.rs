//! JSON forms of polynomials, point sets, matrices and complexes.
//!
//! A polynomial is `{"frame":["w","x","y","z"], "char":0, "degree":d, "dual":bool,
//! "terms":[{"coef":"num/den","exp":[..]}]}`. Coefficients are emitted as strings and
//! accepted as strings or JSON integers. On input, `"text"` (e.g. `"X^[4]Z^[2] - WZ^[5]"`)
//! may replace `"terms"`, and `"degree"` may then be omitted.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::{BasisKind, Form, Monomial, VariableFrame};
use crate::inverse::DualGenerator;
use crate::resolution::{ComplexLabel, GradedFreeModule, GradedMatrix, PolyGrid, ResolutionComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoefJson {
    Int(i64),
    Text(String),
}

impl CoefJson {
    fn to_scalar(&self, field: FieldSpec) -> Result<Scalar> {
        match self {
            CoefJson::Int(n) => Ok(field.from_i64(*n)),
            CoefJson::Text(s) => field.parse(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coef: CoefJson,
    pub exp: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub frame: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    #[serde(default)]
    pub dual: bool,
    #[serde(default)]
    pub terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
}

/// Field from an optional `"char"` entry and an optional command-line override; they must agree.
pub fn resolve_field(json_char: Option<u64>, flag: Option<FieldSpec>) -> Result<FieldSpec> {
    match (json_char, flag) {
        (Some(c), Some(f)) if c != f.characteristic() => Err(Error::InvalidField(format!(
            "input declares characteristic {c} but --char is {}",
            f.characteristic()
        ))),
        (Some(c), _) => FieldSpec::from_characteristic(c),
        (None, Some(f)) => Ok(f),
        (None, None) => Ok(FieldSpec::rationals()),
    }
}

pub fn form_to_json<B: BasisKind>(f: &Form<B>) -> PolyJson {
    PolyJson {
        frame: f.frame().names().iter().map(|s| s.to_string()).collect(),
        char: Some(f.field().characteristic()),
        degree: Some(f.degree()),
        dual: B::DUAL,
        terms: f
            .terms()
            .iter()
            .rev()
            .map(|(m, c)| TermJson {
                coef: CoefJson::Text(c.to_string()),
                exp: m.0.clone(),
            })
            .collect(),
        text: None,
    }
}

pub fn form_from_json<B: BasisKind>(p: &PolyJson, flag: Option<FieldSpec>) -> Result<Form<B>> {
    if p.dual != B::DUAL {
        return Err(Error::Parse(format!(
            "expected {} form, got \"dual\": {}",
            if B::DUAL { "a divided-power" } else { "an ordinary" },
            p.dual
        )));
    }
    let frame = VariableFrame::from_names(&p.frame)?;
    let field = resolve_field(p.char, flag)?;
    if let Some(text) = &p.text {
        if !p.terms.is_empty() {
            return Err(Error::Parse("give either \"text\" or \"terms\", not both".into()));
        }
        let f = Form::<B>::parse(frame, field, text)?;
        return match p.degree {
            Some(d) if f.is_zero() => Ok(Form::zero(frame, field, d)),
            Some(d) if d != f.degree() => Err(Error::DegreeOutOfRange {
                degree: f.degree() as i64,
                range: format!("declared degree {d}"),
            }),
            _ => Ok(f),
        };
    }
    let degree = p
        .degree
        .ok_or_else(|| Error::Parse("\"degree\" is required with \"terms\"".into()))?;
    let terms = p
        .terms
        .iter()
        .map(|t| Ok((Monomial(t.exp.clone()), t.coef.to_scalar(field)?)))
        .collect::<Result<Vec<_>>>()?;
    Form::from_terms(frame, field, degree, terms)
}

/// A dual generator, with the characteristic checked against its degree.
pub fn dual_generator_from_json(p: &PolyJson, flag: Option<FieldSpec>) -> Result<DualGenerator> {
    DualGenerator::new(form_from_json(p, flag)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointsJson {
    pub frame: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub char: Option<u64>,
    pub points: Vec<Vec<CoefJson>>,
}

pub fn points_from_json(p: &PointsJson, flag: Option<FieldSpec>) -> Result<(VariableFrame, FieldSpec, Vec<Vec<Scalar>>)> {
    let frame = VariableFrame::from_names(&p.frame)?;
    let field = resolve_field(p.char, flag)?;
    let pts = p
        .points
        .iter()
        .map(|pt| {
            if pt.len() != frame.r() {
                return Err(Error::FrameMismatch(format!(
                    "point has {} coordinates, frame needs {}",
                    pt.len(),
                    frame.r()
                )));
            }
            pt.iter().map(|c| c.to_scalar(field)).collect()
        })
        .collect::<Result<_>>()?;
    Ok((frame, field, pts))
}

pub fn points_to_json(frame: VariableFrame, field: FieldSpec, pts: &[Vec<Scalar>]) -> PointsJson {
    PointsJson {
        frame: frame.names().iter().map(|s| s.to_string()).collect(),
        char: Some(field.characteristic()),
        points: pts
            .iter()
            .map(|p| p.iter().map(|c| CoefJson::Text(c.to_string())).collect())
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub source: Vec<i64>,
    pub target: Vec<i64>,
    pub entries: Vec<Vec<PolyJson>>,
}

pub fn matrix_to_json(m: &GradedMatrix) -> MatrixJson {
    MatrixJson {
        source: m.source.degrees.clone(),
        target: m.target.degrees.clone(),
        entries: m.entries.iter().map(|r| r.iter().map(form_to_json).collect()).collect(),
    }
}

fn grid_from_json(rows: &[Vec<PolyJson>], flag: Option<FieldSpec>) -> Result<(VariableFrame, FieldSpec, PolyGrid)> {
    let first = rows
        .iter()
        .flatten()
        .next()
        .ok_or_else(|| Error::Parse("empty matrix".into()))?;
    let frame = VariableFrame::from_names(&first.frame)?;
    let field = resolve_field(first.char, flag)?;
    let grid: PolyGrid = rows
        .iter()
        .map(|r| r.iter().map(|p| form_from_json(p, Some(field))).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    if grid.iter().flatten().any(|p| p.frame() != frame) {
        return Err(Error::FrameMismatch("matrix entries use different frames".into()));
    }
    Ok((frame, field, grid))
}

pub fn matrix_from_json(m: &MatrixJson, flag: Option<FieldSpec>) -> Result<GradedMatrix> {
    let (frame, field, grid) = grid_from_json(&m.entries, flag)?;
    GradedMatrix::new(
        frame,
        field,
        GradedFreeModule::new(m.target.clone()),
        GradedFreeModule::new(m.source.clone()),
        grid,
    )
}

/// A bare square grid of polynomials, as used for `phi`.
pub fn poly_grid_from_json(rows: &[Vec<PolyJson>], flag: Option<FieldSpec>) -> Result<(VariableFrame, FieldSpec, PolyGrid)> {
    grid_from_json(rows, flag)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub label: ComplexLabel,
    pub maps: Vec<MatrixJson>,
}

pub fn complex_to_json(c: &ResolutionComplex) -> ComplexJson {
    ComplexJson {
        label: c.label,
        maps: c.maps.iter().map(matrix_to_json).collect(),
    }
}

pub fn complex_from_json(c: &ComplexJson, flag: Option<FieldSpec>) -> Result<ResolutionComplex> {
    let maps = c
        .maps
        .iter()
        .map(|m| matrix_from_json(m, flag))
        .collect::<Result<Vec<_>>>()?;
    ResolutionComplex::new(c.label, maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{DividedPowerForm, GradedPoly};
    use crate::resolution::{build_f_complex, PfaffianSystem};

    #[test]
    fn polynomial_round_trip() {
        let q = FieldSpec::rationals();
        let f = DividedPowerForm::parse(VariableFrame::Wxyz, q, "X^[4]Z^[2] - X^[4]YZ + 1/2WZ^[5]").unwrap();
        let j = form_to_json(&f);
        let text = serde_json::to_string(&j).unwrap();
        let back: PolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(form_from_json::<crate::graded::DividedPower>(&back, None).unwrap(), f);
        assert!(form_from_json::<crate::graded::Ordinary>(&back, None).is_err());
    }

    #[test]
    fn rejects_bad_inputs() {
        let bad_degree = r#"{"frame":["x","y","z"],"degree":3,"dual":false,"terms":[{"coef":"1","exp":[1,1,0]}]}"#;
        let p: PolyJson = serde_json::from_str(bad_degree).unwrap();
        assert!(form_from_json::<crate::graded::Ordinary>(&p, None).is_err());
        let small_char = r#"{"frame":["x","y","z"],"char":5,"degree":6,"dual":true,"terms":[{"coef":1,"exp":[2,2,2]}]}"#;
        let p: PolyJson = serde_json::from_str(small_char).unwrap();
        let e = dual_generator_from_json(&p, None).unwrap_err();
        assert!(e.to_string().contains("char K = 0 or char K > j"), "{e}");
        assert!(resolve_field(Some(7), Some(FieldSpec::prime(11).unwrap())).is_err());
    }

    #[test]
    fn text_form() {
        let p: PolyJson = serde_json::from_str(
            r#"{"frame":["w","x","y","z"],"dual":true,"text":"X^[4]Z^[2] - X^[4]YZ + WZ^[5]"}"#,
        )
        .unwrap();
        let f = form_from_json::<crate::graded::DividedPower>(&p, None).unwrap();
        assert_eq!(f.degree(), 6);
        let p: PolyJson =
            serde_json::from_str(r#"{"frame":["x","y","z"],"degree":3,"text":"x^2"}"#).unwrap();
        assert!(form_from_json::<crate::graded::Ordinary>(&p, None).is_err());
    }

    #[test]
    fn complex_round_trip() {
        let q = FieldSpec::rationals();
        let t = |s| GradedPoly::parse(VariableFrame::Xyz, q, s).unwrap();
        let phi = vec![
            vec![t("0"), t("z^3"), t("-y^3")],
            vec![t("-z^3"), t("0"), t("x^3")],
            vec![t("y^3"), t("-x^3"), t("0")],
        ];
        let sys = PfaffianSystem::from_phi(phi, VariableFrame::Xyz, q).unwrap();
        let fc = build_f_complex(&sys, &t("x^2y^2z^2"), 6).unwrap();
        let j = complex_to_json(&fc.complex);
        let text = serde_json::to_string(&j).unwrap();
        let back = complex_from_json(&serde_json::from_str(&text).unwrap(), None).unwrap();
        assert_eq!(back.maps.iter().map(|m| &m.entries).collect::<Vec<_>>(), fc.complex.maps.iter().map(|m| &m.entries).collect::<Vec<_>>());
    }
}
