//! Macaulay inverse systems: catalecticants, annihilator ideals degree by degree,
//! and ideals presented by generators.

mod w2;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::{
    graded_dim, monomial_basis, monomial_index, DividedPowerForm, GradedPoly, Monomial,
    VariableFrame,
};
use crate::linalg::{dot, ExactMatrix, RowSpace};
use crate::macaulay::HilbertSequence;

pub use w2::{
    alpha_invariant, build_vw_member, h_alpha, h_zero, lambda_analysis, normalize_z_term,
    power_sum, w2_analysis, AlphaReport, ConstructedGorensteinIdeal, DifferenceCase,
    LambdaReport, LambdaStep, Provenance, W2Report,
};

/// A nonzero dual generator `F` of socle degree `j = deg F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGenerator {
    form: DividedPowerForm,
}

impl DualGenerator {
    pub fn new(form: DividedPowerForm) -> Result<Self> {
        if form.is_zero() {
            return Err(Error::Degenerate("dual generator is zero".into()));
        }
        form.field().check_socle_degree(form.degree())?;
        Ok(DualGenerator { form })
    }

    pub fn form(&self) -> &DividedPowerForm {
        &self.form
    }

    pub fn socle_degree(&self) -> u32 {
        self.form.degree()
    }

    pub fn frame(&self) -> VariableFrame {
        self.form.frame()
    }

    pub fn field(&self) -> FieldSpec {
        self.form.field()
    }
}

/// Matrix of `R_i → 𝒟_{j-i}`, `h ↦ h∘F`. Rows follow the basis of `𝒟_{j-i}`, columns that of `R_i`.
pub fn catalecticant(f: &DualGenerator, i: u32) -> Result<ExactMatrix> {
    let j = f.socle_degree();
    if i > j {
        return Err(Error::DegreeOutOfRange {
            degree: i as i64,
            range: format!("0..={j}"),
        });
    }
    let frame = f.frame();
    let field = f.field();
    let cols = monomial_basis(frame, i);
    let row_idx = monomial_index(frame, j - i);
    let mut m = ExactMatrix::zeros(field, row_idx.len(), cols.len());
    for (c, mono) in cols.iter().enumerate() {
        for (n, coef) in f.form().terms() {
            if let Some(q) = mono.quotient(n) {
                m.set(row_idx[&q], c, coef.clone());
            }
        }
    }
    Ok(m)
}

/// Catalecticant ranks in degrees `0..=j`.
pub fn hilbert_function(f: &DualGenerator) -> HilbertSequence {
    let j = f.socle_degree();
    HilbertSequence(
        (0..=j)
            .map(|i| catalecticant(f, i).expect("in range").rank() as i64)
            .collect(),
    )
}

/// A homogeneous component of an ideal, kept in reduced echelon form.
#[derive(Clone, Debug)]
pub struct IdealSlice {
    frame: VariableFrame,
    degree: u32,
    space: RowSpace,
}

impl IdealSlice {
    pub fn zero(frame: VariableFrame, field: FieldSpec, degree: u32) -> Self {
        IdealSlice {
            frame,
            degree,
            space: RowSpace::new(field, graded_dim(frame, degree as i64)),
        }
    }

    pub fn full(frame: VariableFrame, field: FieldSpec, degree: u32) -> Self {
        let mut s = Self::zero(frame, field, degree);
        for m in monomial_basis(frame, degree) {
            s.insert(&GradedPoly::monomial(frame, field, m));
        }
        s
    }

    pub fn from_polys(frame: VariableFrame, field: FieldSpec, degree: u32, polys: &[GradedPoly]) -> Result<Self> {
        let mut s = Self::zero(frame, field, degree);
        for p in polys {
            if p.frame() != frame {
                return Err(Error::FrameMismatch(format!("{p} is not in {frame:?}")));
            }
            if !p.is_zero() && p.degree() != degree {
                return Err(Error::NotHomogeneous(format!("{p} is not of degree {degree}")));
            }
            s.insert(p);
        }
        Ok(s)
    }

    pub fn frame(&self) -> VariableFrame {
        self.frame
    }

    pub fn field(&self) -> FieldSpec {
        self.space.field()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Codimension in `R_d`.
    pub fn codim(&self) -> usize {
        self.space.width() - self.space.dim()
    }

    pub fn space(&self) -> &RowSpace {
        &self.space
    }

    pub fn insert(&mut self, p: &GradedPoly) -> bool {
        if p.is_zero() {
            return false;
        }
        self.space.insert(p.to_vector())
    }

    pub fn contains(&self, p: &GradedPoly) -> bool {
        p.is_zero() || (p.degree() == self.degree && self.space.contains(&p.to_vector()))
    }

    /// Echelonized basis as polynomials.
    pub fn basis(&self) -> Vec<GradedPoly> {
        self.space
            .basis()
            .iter()
            .map(|v| GradedPoly::from_vector(self.frame, self.field(), self.degree, v))
            .collect()
    }

    pub fn is_subspace_of(&self, other: &IdealSlice) -> bool {
        self.degree == other.degree && self.space.basis().iter().all(|v| other.space.contains(v))
    }

    pub fn same_space(&self, other: &IdealSlice) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }

    /// `R_1 · S` in degree `d + 1`.
    pub fn times_linear(&self) -> IdealSlice {
        let mut out = IdealSlice::zero(self.frame, self.field(), self.degree + 1);
        let vars: Vec<GradedPoly> = (0..self.frame.r())
            .map(|v| GradedPoly::var(self.frame, self.field(), v))
            .collect();
        for b in self.basis() {
            for v in &vars {
                out.insert(&b.multiply(v).expect("same frame"));
            }
        }
        out
    }
}

/// `Ann(F)_i`: the kernel of the catalecticant (all of `R_i` when `i > j`).
pub fn ann_slice(f: &DualGenerator, i: u32) -> IdealSlice {
    let frame = f.frame();
    let field = f.field();
    if i > f.socle_degree() {
        return IdealSlice::full(frame, field, i);
    }
    let cat = catalecticant(f, i).expect("in range");
    let mut s = IdealSlice::zero(frame, field, i);
    for v in cat.kernel_basis() {
        s.space.insert(v);
    }
    s
}

/// `Ann(F)_i` for `i = 0..=up_to`.
pub fn ann_slices(f: &DualGenerator, up_to: u32) -> Vec<IdealSlice> {
    (0..=up_to).map(|i| ann_slice(f, i)).collect()
}

/// `{h ∈ R_u : h·R_{i-u} ⊆ S}`.
pub fn colon_slice(s: &IdealSlice, u: u32) -> Result<IdealSlice> {
    let i = s.degree();
    if u > i {
        return Err(Error::DegreeOutOfRange {
            degree: u as i64,
            range: format!("0..={i}"),
        });
    }
    let frame = s.frame();
    let field = s.field();
    let ann = s.space.annihilator();
    let hs = monomial_basis(frame, u);
    let ms = monomial_basis(frame, i - u);
    let idx = monomial_index(frame, i);
    let mut rows = Vec::new();
    for a in &ann {
        for m in &ms {
            rows.push(hs.iter().map(|h| a[idx[&h.mul(m)]].clone()).collect::<Vec<Scalar>>());
        }
    }
    let mut out = IdealSlice::zero(frame, field, u);
    if rows.is_empty() {
        return Ok(IdealSlice::full(frame, field, u));
    }
    for v in ExactMatrix::from_rows(field, rows)?.kernel_basis() {
        out.space.insert(v);
    }
    Ok(out)
}

fn check_generators(gens: &[GradedPoly]) -> Result<(VariableFrame, FieldSpec)> {
    let first = gens
        .iter()
        .find(|g| !g.is_zero())
        .ok_or_else(|| Error::Degenerate("no nonzero generators".into()))?;
    let (frame, field) = (first.frame(), first.field());
    for g in gens {
        if g.frame() != frame {
            return Err(Error::FrameMismatch(format!("{g} is not in {frame:?}")));
        }
        if g.field() != field {
            return Err(Error::InvalidField(format!("{g} is over {}", g.field())));
        }
    }
    Ok((frame, field))
}

/// Degree-`d` component of the ideal generated by `gens`.
pub fn ideal_slice_from_generators(gens: &[GradedPoly], d: u32) -> Result<IdealSlice> {
    let (frame, field) = check_generators(gens)?;
    let mut s = IdealSlice::zero(frame, field, d);
    for g in gens.iter().filter(|g| !g.is_zero() && g.degree() <= d) {
        for m in monomial_basis(frame, d - g.degree()) {
            s.insert(&GradedPoly::monomial(frame, field, m).multiply(g)?);
        }
    }
    Ok(s)
}

/// Components in degrees `0..=up_to`, built incrementally as `R_1·I_{d-1} + ⟨gens of degree d⟩`.
pub fn slices_from_generators(gens: &[GradedPoly], up_to: u32) -> Result<Vec<IdealSlice>> {
    let (frame, field) = check_generators(gens)?;
    let mut out: Vec<IdealSlice> = Vec::new();
    for d in 0..=up_to {
        let mut s = match out.last() {
            Some(prev) => prev.times_linear(),
            None => IdealSlice::zero(frame, field, 0),
        };
        for g in gens.iter().filter(|g| !g.is_zero() && g.degree() == d) {
            s.insert(g);
        }
        out.push(s);
    }
    Ok(out)
}

/// `H(R/(gens))_d = dim R_d − dim I_d` for `d = 0..=up_to`.
pub fn hilbert_from_generators(gens: &[GradedPoly], up_to: u32) -> Result<HilbertSequence> {
    Ok(HilbertSequence(
        slices_from_generators(gens, up_to)?
            .iter()
            .map(|s| s.codim() as i64)
            .collect(),
    ))
}

/// Number of minimal generators in each degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct GeneratorProfile {
    pub counts: BTreeMap<u32, usize>,
}

impl GeneratorProfile {
    pub fn nu(&self, i: u32) -> usize {
        self.counts.get(&i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

/// Minimal generators from consecutive slices `I_0, I_1, …`: in each degree, a complement
/// of `R_1·I_{i-1}` inside `I_i`, taken greedily from the echelon basis.
pub fn minimal_generators(slices: &[IdealSlice]) -> Vec<GradedPoly> {
    let mut gens = Vec::new();
    for (k, s) in slices.iter().enumerate() {
        let mut span = if k == 0 {
            IdealSlice::zero(s.frame(), s.field(), s.degree())
        } else {
            slices[k - 1].times_linear()
        };
        for b in s.basis() {
            if span.insert(&b) {
                gens.push(b);
            }
        }
    }
    gens
}

/// `ν_i = dim I_i − dim(R_1·I_{i-1})` over consecutive slices starting at degree 0.
pub fn profile_from_slices(slices: &[IdealSlice]) -> GeneratorProfile {
    let mut counts = BTreeMap::new();
    for (k, s) in slices.iter().enumerate() {
        let below = if k == 0 { 0 } else { slices[k - 1].times_linear().dim() };
        let nu = s.dim() - below;
        if nu > 0 {
            counts.insert(s.degree(), nu);
        }
    }
    GeneratorProfile { counts }
}

/// Generator profile of `Ann(F)` through degree `cutoff ≤ j + 1`.
pub fn generator_counts(f: &DualGenerator, cutoff: u32) -> Result<GeneratorProfile> {
    if cutoff > f.socle_degree() + 1 {
        return Err(Error::DegreeOutOfRange {
            degree: cutoff as i64,
            range: format!("0..={}", f.socle_degree() + 1),
        });
    }
    Ok(profile_from_slices(&ann_slices(f, cutoff)))
}

/// Generator profile of the ideal generated by `gens`, through degree `cutoff`.
pub fn generator_counts_of(gens: &[GradedPoly], cutoff: u32) -> Result<GeneratorProfile> {
    Ok(profile_from_slices(&slices_from_generators(gens, cutoff)?))
}

/// Minimal generators of `Ann(F)` through degree `up_to`.
pub fn ann_generators(f: &DualGenerator, up_to: u32) -> Vec<GradedPoly> {
    minimal_generators(&ann_slices(f, up_to))
}

/// Whether `h∘F = 0`.
pub fn annihilates(h: &GradedPoly, f: &DualGenerator) -> Result<bool> {
    Ok(crate::graded::contract(h, f.form())?.is_zero())
}

/// Pairing `⟨h, F⟩` of equal degrees.
pub fn pairing(h: &GradedPoly, f: &DividedPowerForm) -> Result<Scalar> {
    if h.degree() != f.degree() {
        return Err(Error::Dimension(format!(
            "pairing degree {} with degree {}",
            h.degree(),
            f.degree()
        )));
    }
    Ok(dot(h.field(), &h.to_vector(), &f.to_vector()))
}

/// Whether a monomial slice contains the given monomial.
pub fn slice_contains_monomial(s: &IdealSlice, m: &Monomial) -> bool {
    s.contains(&GradedPoly::monomial(s.frame(), s.field(), m.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }
    const W: VariableFrame = VariableFrame::Wxyz;
    const T: VariableFrame = VariableFrame::Xyz;

    fn dual(frame: VariableFrame, s: &str) -> DualGenerator {
        DualGenerator::new(DividedPowerForm::parse(frame, q(), s).unwrap()).unwrap()
    }
    fn polys(frame: VariableFrame, ps: &[&str]) -> Vec<GradedPoly> {
        ps.iter().map(|p| GradedPoly::parse(frame, q(), p).unwrap()).collect()
    }

    #[test]
    fn catalecticant_ranks() {
        assert_eq!(catalecticant(&dual(W, "W^[2]"), 1).unwrap().rank(), 1);
        let f = dual(W, "X^[4]Z^[2] - X^[4]YZ + WZ^[5]");
        assert_eq!(catalecticant(&f, 2).unwrap().rank(), 6);
        assert!(catalecticant(&f, 7).is_err());
    }

    #[test]
    fn single_power_hilbert_function() {
        assert_eq!(hilbert_function(&dual(W, "W^[5]")).0, vec![1; 6]);
    }

    #[test]
    fn ann_of_power() {
        let s = ann_slice(&dual(W, "W^[3]"), 1);
        let expect = IdealSlice::from_polys(W, q(), 1, &polys(W, &["x", "y", "z"])).unwrap();
        assert!(s.same_space(&expect));
        assert_eq!(ann_slice(&dual(W, "W^[3]"), 4).codim(), 0);
    }

    #[test]
    fn rejects_small_characteristic() {
        let f5 = FieldSpec::prime(5).unwrap();
        let form = DividedPowerForm::parse(W, f5, "W^[6]").unwrap();
        assert!(matches!(
            DualGenerator::new(form),
            Err(Error::CharacteristicTooSmall { .. })
        ));
    }

    #[test]
    fn generated_hilbert_functions() {
        let h = hilbert_from_generators(&polys(W, &["wx", "wy", "z^2"]), 6).unwrap();
        assert_eq!(h.0, vec![1, 4, 7, 9, 11, 13, 15]);
        let h = hilbert_from_generators(&polys(W, &["wy - x^2", "wz - xy", "xz - y^2"]), 6).unwrap();
        assert_eq!(h.0, (0..=6).map(|i| 3 * i + 1).collect::<Vec<i64>>());
        let h = hilbert_from_generators(&polys(W, &["wx", "wy", "wz"]), 5).unwrap();
        assert_eq!(h.0, vec![1, 4, 7, 11, 16, 22]);
    }

    #[test]
    fn complete_intersection_profile() {
        let p = generator_counts_of(&polys(T, &["x^3", "y^3", "z^3"]), 6).unwrap();
        assert_eq!(p.counts, BTreeMap::from([(3, 3)]));
    }

    #[test]
    fn berman_colon_example() {
        let i = polys(T, &["x^3", "y^3", "z^3"]);
        let j = polys(T, &["x^2y^3", "y^2z^3", "x^3z^2", "x^2y^2z^2"]);
        let i5 = ideal_slice_from_generators(&i, 5).unwrap();
        let j5 = ideal_slice_from_generators(&j, 5).unwrap();
        assert!(j5.is_subspace_of(&i5));
        let i6 = ideal_slice_from_generators(&i, 6).unwrap();
        let j6 = ideal_slice_from_generators(&j, 6).unwrap();
        let g = GradedPoly::parse(T, q(), "x^2y^2z^2").unwrap();
        assert!(j6.contains(&g) && !i6.contains(&g));
    }

    #[test]
    fn colon_recovers_lower_slices() {
        let f = dual(W, "X^[4]Z^[2] - X^[4]YZ + WZ^[5]");
        let top = ann_slice(&f, 6);
        for u in 0..=6 {
            assert!(colon_slice(&top, u).unwrap().same_space(&ann_slice(&f, u)), "u={u}");
        }
        let full = IdealSlice::full(W, q(), 4);
        assert_eq!(colon_slice(&full, 2).unwrap().codim(), 0);
    }

    #[test]
    fn ideal_growth_contained() {
        let f = dual(W, "X^[4]Z^[2] - X^[4]YZ + WZ^[5]");
        for i in 0..6 {
            assert!(ann_slice(&f, i).times_linear().is_subspace_of(&ann_slice(&f, i + 1)));
        }
    }
}
