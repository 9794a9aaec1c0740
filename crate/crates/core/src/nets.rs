//! Nets of quadrics: three-dimensional subspaces of `R_2`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::{monomial_basis, monomial_index, GradedPoly, Monomial, VariableFrame};
use crate::inverse::{hilbert_from_generators, IdealSlice};
use crate::linalg::{ExactMatrix, RowSpace};
use crate::macaulay::HilbertSequence;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetOfQuadrics {
    basis: [GradedPoly; 3],
}

impl NetOfQuadrics {
    pub fn new(basis: [GradedPoly; 3]) -> Result<Self> {
        let frame = basis[0].frame();
        let field = basis[0].field();
        for b in &basis {
            if b.frame() != frame || b.field() != field {
                return Err(Error::FrameMismatch("net members must share frame and field".into()));
            }
            if b.is_zero() || b.degree() != 2 {
                return Err(Error::InvalidArgument(format!("{b} is not a nonzero quadric")));
            }
        }
        let s = IdealSlice::from_polys(frame, field, 2, &basis)?;
        if s.dim() != 3 {
            return Err(Error::InvalidArgument(
                "net basis is not linearly independent".into(),
            ));
        }
        Ok(NetOfQuadrics { basis })
    }

    pub fn from_slice(s: &IdealSlice) -> Result<Self> {
        let b = s.basis();
        if b.len() != 3 || s.degree() != 2 {
            return Err(Error::InvalidArgument(format!(
                "a net needs a 3-dimensional space of quadrics, got dimension {} in degree {}",
                b.len(),
                s.degree()
            )));
        }
        Self::new([b[0].clone(), b[1].clone(), b[2].clone()])
    }

    pub fn parse(frame: VariableFrame, field: FieldSpec, texts: [&str; 3]) -> Result<Self> {
        let b: Vec<GradedPoly> = texts
            .iter()
            .map(|t| GradedPoly::parse(frame, field, t))
            .collect::<Result<_>>()?;
        Self::new([b[0].clone(), b[1].clone(), b[2].clone()])
    }

    pub fn basis(&self) -> &[GradedPoly; 3] {
        &self.basis
    }

    pub fn frame(&self) -> VariableFrame {
        self.basis[0].frame()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis[0].field()
    }

    fn span(&self) -> RowSpace {
        let mut rs = RowSpace::new(self.field(), monomial_basis(self.frame(), 2).len());
        for b in &self.basis {
            rs.insert(b.to_vector());
        }
        rs
    }

    /// Substitutes every member by the linear change of variables `m`.
    pub fn transform(&self, m: &[Vec<Scalar>]) -> Result<Self> {
        let b: Vec<GradedPoly> = self
            .basis
            .iter()
            .map(|p| p.substitute(m))
            .collect::<Result<_>>()?;
        Self::new([b[0].clone(), b[1].clone(), b[2].clone()])
    }
}

/// Columns `v·f_k` for each variable `v` and member `f_k`, in cubic coordinates.
fn relation_matrix(polys: &[GradedPoly]) -> ExactMatrix {
    let frame = polys[0].frame();
    let field = polys[0].field();
    let mut cols = Vec::new();
    for p in polys {
        for v in 0..frame.r() {
            cols.push(GradedPoly::var(frame, field, v).multiply(p).expect("same frame").to_vector());
        }
    }
    ExactMatrix::from_rows(field, cols).expect("uniform").transpose()
}

/// Dimension of `{(ℓ_1, ℓ_2, ℓ_3) linear : ℓ_1 f + ℓ_2 g + ℓ_3 h = 0}`.
pub fn linear_relation_count(v: &NetOfQuadrics) -> usize {
    relation_matrix(v.basis()).kernel_basis().len()
}

/// A common linear factor `ℓ` (first nonzero coefficient 1) and `U = {u : ℓu ∈ V}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonFactor {
    pub ell: GradedPoly,
    pub cofactors: Vec<GradedPoly>,
}

fn linear_from(frame: VariableFrame, field: FieldSpec, v: &[Scalar]) -> GradedPoly {
    GradedPoly::from_vector(frame, field, 1, v)
}

pub fn common_linear_factor(v: &NetOfQuadrics) -> Option<CommonFactor> {
    let frame = v.frame();
    let field = v.field();
    let r = frame.r();
    let [f, g, h] = v.basis();
    // m2·f − m1·g = 0: the kernel of [ v·f | −v·g ] over 2r unknowns (m2 first).
    let neg_g = g.neg();
    let k = relation_matrix(&[f.clone(), neg_g]).kernel_basis();
    let sol = k.first()?;
    let m1 = linear_from(frame, field, &sol[r..]);
    let ell = f.divide(&m1).ok()??;
    if ell.degree() != 1 || h.divide(&ell).ok()?.is_none() || g.divide(&ell).ok()?.is_none() {
        return None;
    }
    let lead = ell.to_vector().into_iter().find(|c| !c.is_zero())?;
    let ell = ell.scale(&lead.inv()?);
    // U: u with ℓu ∈ V, i.e. every functional vanishing on V vanishes on ℓu.
    let ann = v.span().annihilator();
    let idx = monomial_index(frame, 2);
    let ups: Vec<GradedPoly> = (0..r)
        .map(|i| ell.multiply(&GradedPoly::var(frame, field, i)).expect("same frame"))
        .collect();
    let rows: Vec<Vec<Scalar>> = ann
        .iter()
        .map(|a| {
            ups.iter()
                .map(|p| {
                    p.terms()
                        .iter()
                        .fold(field.zero(), |acc, (m, c)| &acc + &(c * &a[idx[m]]))
                })
                .collect()
        })
        .collect();
    let cofactors = ExactMatrix::from_rows(field, rows)
        .ok()?
        .kernel_basis()
        .iter()
        .map(|u| linear_from(frame, field, u))
        .collect();
    Some(CommonFactor { ell, cofactors })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Stratum {
    F0,
    F1,
    F2,
    F3,
    Fsp,
}

impl std::fmt::Display for Stratum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetClassification {
    pub relation_count: usize,
    pub stratum: Stratum,
    pub common_factor: Option<CommonFactor>,
    /// `H(R/(V))` in degrees `0..=6`.
    pub hilbert_prefix: HilbertSequence,
    /// For `F1`: `H_i = 2i+3` for `2 ≤ i ≤ 6`. For `F2`: `H_i = 3i+1` (height-two evidence).
    pub hilbert_pattern: Option<bool>,
}

pub fn classify_net(v: &NetOfQuadrics) -> Result<NetClassification> {
    let s = linear_relation_count(v);
    let common_factor = common_linear_factor(v);
    let hilbert_prefix = hilbert_from_generators(v.basis(), 6)?;
    let stratum = match s {
        0 => Stratum::F0,
        1 => Stratum::F1,
        2 => Stratum::F2,
        3 => {
            let cf = common_factor.as_ref().ok_or_else(|| {
                Error::Verification("three linear relations but no common linear factor".into())
            })?;
            let u = IdealSlice::from_polys(v.frame(), v.field(), 1, &cf.cofactors)?;
            if u.contains(&cf.ell) {
                Stratum::Fsp
            } else {
                Stratum::F3
            }
        }
        _ => {
            return Err(Error::Verification(format!(
                "{s} linear relations exceed the bound of 3"
            )))
        }
    };
    if s < 3 && common_factor.is_some() {
        return Err(Error::Verification(format!(
            "common linear factor found with only {s} linear relations"
        )));
    }
    let h = &hilbert_prefix;
    let hilbert_pattern = match stratum {
        Stratum::F1 => Some((2..=6).all(|i| h.get(i) == 2 * i as i64 + 3)),
        Stratum::F2 => Some((0..=6).all(|i| h.get(i) == 3 * i as i64 + 1)),
        _ => None,
    };
    Ok(NetClassification {
        relation_count: s,
        stratum,
        common_factor,
        hilbert_prefix,
        hilbert_pattern,
    })
}

/// Rank of `D ↦ (v ↦ D(v) mod V)` over the derivations `x_i ∂/∂x_j`.
pub fn net_orbit_dimension(v: &NetOfQuadrics) -> usize {
    let frame = v.frame();
    let field = v.field();
    let r = frame.r();
    let span = v.span();
    let width = 3 * span.width();
    let mut image = RowSpace::new(field, width);
    for i in 0..r {
        for jv in 0..r {
            let xi = GradedPoly::var(frame, field, i);
            let mut row = Vec::with_capacity(width);
            for b in v.basis() {
                let d = xi.multiply(&b.derivative(jv)).expect("same frame");
                let d = if d.is_zero() {
                    GradedPoly::zero(frame, field, 2)
                } else {
                    d
                };
                row.extend(span.reduce(d.to_vector()));
            }
            image.insert(row);
        }
    }
    image.dim()
}

/// Monomial `x_i x_j` of degree two.
pub fn quadric_monomial(frame: VariableFrame, i: usize, j: usize) -> Monomial {
    Monomial::var(frame, i).mul(&Monomial::var(frame, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }
    fn net(t: [&str; 3]) -> NetOfQuadrics {
        NetOfQuadrics::parse(VariableFrame::Wxyz, q(), t).unwrap()
    }
    const CUBIC: [&str; 3] = ["wy - x^2", "wz - xy", "xz - y^2"];

    #[test]
    fn relation_counts() {
        assert_eq!(linear_relation_count(&net(["wx", "wy", "wz"])), 3);
        assert_eq!(linear_relation_count(&net(["wx", "wy", "z^2"])), 1);
        assert_eq!(linear_relation_count(&net(CUBIC)), 2);
    }

    #[test]
    fn common_factors() {
        let p = |s| GradedPoly::parse(VariableFrame::Wxyz, q(), s).unwrap();
        let cf = common_linear_factor(&net(["wx", "wy", "wz"])).unwrap();
        assert_eq!(cf.ell, p("w"));
        let u = IdealSlice::from_polys(VariableFrame::Wxyz, q(), 1, &cf.cofactors).unwrap();
        let expect = IdealSlice::from_polys(VariableFrame::Wxyz, q(), 1, &[p("x"), p("y"), p("z")]).unwrap();
        assert!(u.same_space(&expect));
        let cf = common_linear_factor(&net(["w^2", "wx", "wy"])).unwrap();
        assert_eq!(cf.ell, p("w"));
        assert!(common_linear_factor(&net(CUBIC)).is_none());
        let cf = common_linear_factor(&net(["2wx + 2x^2", "wy + xy", "wz + xz"])).unwrap();
        assert_eq!(cf.ell, p("w + x"));
    }

    #[test]
    fn strata() {
        assert_eq!(classify_net(&net(["w^2", "wx", "wy"])).unwrap().stratum, Stratum::Fsp);
        assert_eq!(classify_net(&net(["wx", "wy", "wz"])).unwrap().stratum, Stratum::F3);
        assert_eq!(classify_net(&net(["wx", "wy", "xz"])).unwrap().stratum, Stratum::F2);
        let c = classify_net(&net(["wx", "wy", "z^2"])).unwrap();
        assert_eq!(c.stratum, Stratum::F1);
        assert_eq!(c.hilbert_prefix.0, vec![1, 4, 7, 9, 11, 13, 15]);
        assert_eq!(c.hilbert_pattern, Some(true));
        let c = classify_net(&net(CUBIC)).unwrap();
        assert_eq!(c.stratum, Stratum::F2);
        assert_eq!(c.hilbert_pattern, Some(true));
    }

    #[test]
    fn orbit_dimensions() {
        assert_eq!(net_orbit_dimension(&net(["wx", "wy", "wz"])), 6);
        assert_eq!(net_orbit_dimension(&net(["w^2", "wx", "wy"])), 5);
        assert_eq!(net_orbit_dimension(&net(["wx", "wy", "xz"])), 10);
        assert_eq!(net_orbit_dimension(&net(CUBIC)), 12);
    }

    #[test]
    fn rejects_dependent_basis() {
        assert!(NetOfQuadrics::parse(VariableFrame::Wxyz, q(), ["wx", "2wx", "wz"]).is_err());
    }
}
