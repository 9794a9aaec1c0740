//! Dual generators of the shape `F = G + WZ^[j-1]` and `F = G + a·W^[j]` with `G` ternary.

use serde::{Deserialize, Serialize};

use super::{
    ann_generators, ann_slice, catalecticant, hilbert_from_generators, hilbert_function, pairing,
    DualGenerator, IdealSlice,
};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::graded::{DividedPowerForm, GradedPoly, Monomial, VariableFrame};
use crate::linalg::RowSpace;
use crate::macaulay::{first_difference, is_o_sequence, si_condition, HilbertSequence};

/// `H_α` for `2 ≤ α ≤ j`.
pub fn h_alpha(alpha: u32, j: u32) -> Result<HilbertSequence> {
    if alpha < 2 || alpha > j {
        return Err(Error::InvalidArgument(format!(
            "α = {alpha} outside 2..={j}"
        )));
    }
    let v = (0..=j)
        .map(|i| {
            if i == 0 || i == j {
                0
            } else if 2 * alpha <= j {
                if i >= alpha && i <= j - alpha {
                    2
                } else {
                    1
                }
            } else if i <= j - alpha || i >= alpha {
                1
            } else {
                0
            }
        })
        .collect();
    Ok(HilbertSequence(v))
}

/// `H_0 = (0, 1, …, 1, 0)` of length `j + 1`.
pub fn h_zero(j: u32) -> HilbertSequence {
    HilbertSequence(
        (0..=j)
            .map(|i| if i == 0 || i == j { 0 } else { 1 })
            .collect(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DifferenceCase {
    HAlpha,
    HZero,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaReport {
    pub alpha: u32,
    pub j: u32,
    /// `H(B)` indexed as an `R`-module from degree 0.
    pub hb: HilbertSequence,
    pub hc: HilbertSequence,
    /// Number of 1's in `H(C) = (1,…,1,0,…)`: `α` in the `H_α` case, `j+1−α` in the `H_0` case.
    pub c: u32,
    pub case: DifferenceCase,
    /// `H(R/I)` for `F = G + WZ^[j-1]`.
    pub h_i: HilbertSequence,
    /// `H(R'/J')` for `J' = Ann(G)` in three variables.
    pub h_j: HilbertSequence,
    /// `H(B)` has the shape `(1,2,…,2_{j-α},1,…,1,0)` and `H(C)` the shape `(1,…,1_c,0,…)`.
    pub shapes_ok: bool,
}

fn ternary(g: &DividedPowerForm) -> Result<DividedPowerForm> {
    g.restrict()
}

fn dual(frame: VariableFrame, g: &DividedPowerForm, text: &str) -> DividedPowerForm {
    DividedPowerForm::parse(frame, g.field(), text).expect("fixed monomial")
}

/// `Z^[i]` in the ternary dual ring.
fn z_power(g: &DividedPowerForm, i: u32) -> DividedPowerForm {
    DividedPowerForm::monomial(VariableFrame::Xyz, g.field(), Monomial(vec![0, 0, i]))
}

/// Column space of the degree-`i` catalecticant of `f`, i.e. `R_i∘F ⊆ 𝒟_{j-i}`.
fn image(f: &DualGenerator, i: u32) -> RowSpace {
    let cat = catalecticant(f, i).expect("in range");
    let mut rs = RowSpace::new(f.field(), cat.rows());
    for c in 0..cat.cols() {
        rs.insert(cat.column(c));
    }
    rs
}

/// Least `i` with `Z^[i] ∉ R'_{j-i}∘G`.
fn alpha_of(gt: &DualGenerator) -> Result<u32> {
    let j = gt.socle_degree();
    for i in 1..=j {
        let img = image(gt, j - i);
        if !img.contains(&z_power(gt.form(), i).to_vector()) {
            return Ok(i);
        }
    }
    Err(Error::Degenerate(format!(
        "{} is a multiple of Z^[{j}], so α is undefined",
        gt.form()
    )))
}

/// `G` with its `Z^[j]` term removed, and the removed coefficient.
pub fn normalize_z_term(g: &DividedPowerForm) -> Result<(DividedPowerForm, Scalar)> {
    let gt = ternary(g)?;
    let zj = z_power(&gt, gt.degree());
    let c = gt.coeff(&Monomial(vec![0, 0, gt.degree()]));
    Ok((gt.sub(&zj.scale(&c))?, c))
}

/// α(J), the modules `B`, `C`, and the resulting difference `H(R/I) − H(R'/J')`.
pub fn alpha_invariant(g: &DividedPowerForm) -> Result<AlphaReport> {
    let gt = DualGenerator::new(ternary(g)?)?;
    let j = gt.socle_degree();
    if j < 2 {
        return Err(Error::InvalidArgument(format!("socle degree {j} < 2")));
    }
    let alpha = alpha_of(&gt)?;
    let frame = VariableFrame::Wxyz;
    let g4 = DualGenerator::new(gt.form().embed())?;
    let wz = DualGenerator::new(dual(frame, gt.form(), &format!("WZ^[{}]", j - 1)))?;
    let f = DualGenerator::new(g4.form().add(wz.form())?)?;
    let mut hb = Vec::new();
    let mut hc = Vec::new();
    let mut h_i = Vec::new();
    for k in 0..=j {
        let ig = image(&g4, k);
        let iw = image(&wz, k);
        let i_f = image(&f, k);
        let mut both = ig.clone();
        for v in iw.basis() {
            both.insert(v);
        }
        hb.push((both.dim() - ig.dim()) as i64);
        hc.push((both.dim() - i_f.dim()) as i64);
        h_i.push(i_f.dim() as i64);
    }
    let h_i = HilbertSequence(h_i);
    let h_j = hilbert_function(&gt);
    let c = hc.iter().take_while(|&&v| v == 1).count() as u32;
    let hb_expected: Vec<i64> = (0..=j)
        .map(|k| match k {
            0 => 1,
            k if k == j => 0,
            k if k <= j - alpha => 2,
            _ => 1,
        })
        .collect();
    let hc_expected: Vec<i64> = (0..=j).map(|k| i64::from(k < c)).collect();
    let shapes_ok = hb == hb_expected && hc == hc_expected;
    let diff = h_i.sub(&h_j);
    let case = if alpha >= 2 && diff == h_alpha(alpha, j)? {
        DifferenceCase::HAlpha
    } else if diff == h_zero(j) {
        DifferenceCase::HZero
    } else {
        return Err(Error::Verification(format!(
            "H(R/I) − H(R'/J') = {diff} is neither H_{alpha} nor H_0"
        )));
    };
    Ok(AlphaReport {
        alpha,
        j,
        hb: HilbertSequence(hb),
        hc: HilbertSequence(hc),
        c,
        case,
        h_i,
        h_j,
        shapes_ok,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct W2Report {
    pub g: String,
    pub f: String,
    pub alpha: AlphaReport,
    /// `⟨w², wx, wy⟩ = I_2`; only containment is required.
    pub i2_equals_w: bool,
    /// `ΔH_{≤ j/2}` is an O-sequence.
    pub delta_half_is_o_sequence: bool,
    /// `H' = H(R/I) − H_0`.
    pub h_prime: HilbertSequence,
    pub h_prime_is_height3_gorenstein: bool,
    /// Equals `H(R'/J')` exactly when `c = j − α`.
    pub h_prime_equals_h_j: bool,
    pub z_coefficient: String,
    pub normalized_g: String,
}

/// Analysis of `F = G + WZ^[j-1]`.
pub fn w2_analysis(g: &DividedPowerForm) -> Result<W2Report> {
    let alpha = alpha_invariant(g)?;
    let gt = ternary(g)?;
    let j = gt.degree();
    let frame = VariableFrame::Wxyz;
    let f_form = gt.embed().add(&dual(frame, &gt, &format!("WZ^[{}]", j - 1)))?;
    let f = DualGenerator::new(f_form.clone())?;
    let i2 = ann_slice(&f, 2);
    let w = IdealSlice::from_polys(
        frame,
        gt.field(),
        2,
        &["w^2", "wx", "wy"]
            .iter()
            .map(|s| GradedPoly::parse(frame, gt.field(), s).expect("fixed"))
            .collect::<Vec<_>>(),
    )?;
    if !w.is_subspace_of(&i2) {
        return Err(Error::Verification(
            "⟨w², wx, wy⟩ is not contained in I_2".into(),
        ));
    }
    let h = &alpha.h_i;
    let half = &h.values()[..=(j as usize / 2)];
    let delta_ok = is_o_sequence(first_difference(half).values()).admissible;
    let h_prime = h.sub(&h_zero(j));
    let (normalized, zc) = normalize_z_term(&gt)?;
    Ok(W2Report {
        g: gt.to_string(),
        f: f_form.to_string(),
        i2_equals_w: w.same_space(&i2),
        delta_half_is_o_sequence: delta_ok,
        h_prime_is_height3_gorenstein: h_prime.get(1) == 3 && si_condition(h_prime.values()),
        h_prime_equals_h_j: h_prime == alpha.h_j,
        h_prime,
        z_coefficient: zc.to_string(),
        normalized_g: normalized.to_string(),
        alpha,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaStep {
    pub lambda: String,
    pub alpha: u32,
    pub h_j: HilbertSequence,
    pub h_i: HilbertSequence,
    /// `H(R/I(λ)) = H(R/I)`.
    pub h_i_invariant: bool,
    /// Which alternative of the dichotomy was observed.
    pub outcome: String,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaReport {
    pub alpha: u32,
    pub j: u32,
    pub h_i: HilbertSequence,
    pub h_j: HilbertSequence,
    pub steps: Vec<LambdaStep>,
}

impl LambdaReport {
    pub fn all_consistent(&self) -> bool {
        self.steps.iter().all(|s| s.consistent)
    }
}

fn indicator(j: u32, lo: u32, hi: u32) -> HilbertSequence {
    HilbertSequence((0..=j).map(|i| i64::from(i >= lo && i <= hi)).collect())
}

/// Effect of replacing `G` by `G + λZ^[j]` for each sample `λ`.
pub fn lambda_analysis(g: &DividedPowerForm, lambdas: &[Scalar]) -> Result<LambdaReport> {
    let base = alpha_invariant(g)?;
    let gt = ternary(g)?;
    let j = gt.degree();
    let a = base.alpha;
    let mut steps = Vec::new();
    for lam in lambdas {
        let lam = gt.field().convert(lam)?;
        let gl = gt.add(&z_power(&gt, j).scale(&lam))?;
        let rep = alpha_invariant(&gl)?;
        let h_i_invariant = rep.h_i == base.h_i;
        let (outcome, ok) = if lam.is_zero() {
            (
                "unchanged".to_string(),
                rep.alpha == a && rep.h_j == base.h_j,
            )
        } else if 2 * a <= j {
            let ok = rep.alpha == j + 1 - a
                && rep.h_j == base.h_j.add(&indicator(j, a, j - a))
                && rep.h_i == rep.h_j.add(&h_zero(j));
            ("alpha_reflected".to_string(), ok)
        } else if rep.alpha == a {
            ("alpha_kept".to_string(), rep.h_j == base.h_j)
        } else {
            let ok = rep.alpha == j + 1 - a
                && rep.h_j == base.h_j.sub(&indicator(j, j + 1 - a, a - 1))
                && base.case == DifferenceCase::HZero;
            ("alpha_reflected".to_string(), ok)
        };
        steps.push(LambdaStep {
            lambda: lam.to_string(),
            alpha: rep.alpha,
            h_j: rep.h_j,
            h_i: rep.h_i,
            h_i_invariant,
            outcome,
            consistent: ok && h_i_invariant,
        });
    }
    Ok(LambdaReport {
        alpha: a,
        j,
        h_i: base.h_i,
        h_j: base.h_j,
        steps,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    VwConstruction,
    W2Construction,
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructedGorensteinIdeal {
    pub generators: Vec<GradedPoly>,
    pub socle_degree: u32,
    pub provenance: Provenance,
    pub dual_generator: DividedPowerForm,
    /// `H(R/(generators))` through degree `j + 1`.
    pub hilbert: HilbertSequence,
    /// `H(R'/J')` of the ternary part.
    pub h_prime: HilbertSequence,
}

/// `I = (J', wx, wy, wz, w^j − g)` with dual generator `F = G + (g∘G)·W^[j]`.
pub fn build_vw_member(g_dual: &DividedPowerForm, g: &GradedPoly) -> Result<ConstructedGorensteinIdeal> {
    let gt = DualGenerator::new(ternary(g_dual)?)?;
    let j = gt.socle_degree();
    let gp = g.restrict()?;
    if gp.degree() != j || gp.field() != gt.field() {
        return Err(Error::InvalidArgument(format!(
            "g must be a ternary form of degree {j} over {}",
            gt.field()
        )));
    }
    let a = pairing(&gp, gt.form())?;
    if a.is_zero() {
        return Err(Error::Degenerate(
            "g∘G = 0, so g lies in Ann(G) and w^(j-1) would be in the socle".into(),
        ));
    }
    let frame = VariableFrame::Wxyz;
    let field = gt.field();
    let wj = DividedPowerForm::monomial(frame, field, Monomial(vec![j, 0, 0, 0]));
    let f = DualGenerator::new(gt.form().embed().add(&wj.scale(&a))?)?;
    let mut generators: Vec<GradedPoly> = ann_generators(&gt, j).iter().map(GradedPoly::embed).collect();
    for s in ["wx", "wy", "wz"] {
        generators.push(GradedPoly::parse(frame, field, s)?);
    }
    let wpow = GradedPoly::monomial(frame, field, Monomial(vec![j, 0, 0, 0]));
    generators.push(wpow.sub(&gp.embed())?);
    let hilbert = hilbert_from_generators(&generators, j + 1)?;
    let h_prime = hilbert_function(&gt);
    let mut expected = h_prime.add(&h_zero(j)).0;
    expected.push(0);
    let mut from_f = hilbert_function(&f).0;
    from_f.push(0);
    if hilbert.0 != expected || from_f != expected {
        return Err(Error::Verification(format!(
            "H(R/I) = {hilbert} from generators, {} from F, expected H' + H_0 = {}",
            HilbertSequence(from_f),
            HilbertSequence(expected)
        )));
    }
    Ok(ConstructedGorensteinIdeal {
        generators,
        socle_degree: j,
        provenance: Provenance::VwConstruction,
        dual_generator: f.form().clone(),
        hilbert,
        h_prime,
    })
}

/// `Σ_k L_k^[j]` where `L_k` is the dual linear form with coordinates `points[k]`.
pub fn power_sum(
    frame: VariableFrame,
    field: crate::field::FieldSpec,
    points: &[Vec<Scalar>],
    j: u32,
) -> Result<DualGenerator> {
    let mut f = DividedPowerForm::zero(frame, field, j);
    for p in points {
        if p.iter().all(Scalar::is_zero) {
            return Err(Error::Degenerate("zero point".into()));
        }
        f = f.add(&DividedPowerForm::linear_power(frame, field, p, j)?)?;
    }
    DualGenerator::new(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }
    fn tern(s: &str) -> DividedPowerForm {
        DividedPowerForm::parse(VariableFrame::Xyz, q(), s).unwrap()
    }

    #[test]
    fn h_alpha_shapes() {
        assert_eq!(h_alpha(2, 6).unwrap().0, vec![0, 1, 2, 2, 2, 1, 0]);
        assert_eq!(h_alpha(4, 6).unwrap().0, vec![0, 1, 1, 0, 1, 1, 0]);
        assert_eq!(h_alpha(4, 7).unwrap(), h_zero(7));
        assert!(h_alpha(1, 6).is_err());
        assert!(h_alpha(7, 6).is_err());
    }

    #[test]
    fn anoninv_alpha() {
        let r = alpha_invariant(&tern("X^[4]Z^[2] - X^[4]YZ")).unwrap();
        assert_eq!(r.alpha, 2);
        assert_eq!(r.h_j.0, vec![1, 3, 4, 4, 4, 3, 1]);
        assert_eq!(r.h_i.0, vec![1, 4, 6, 6, 6, 4, 1]);
        assert_eq!(r.case, DifferenceCase::HAlpha);
        assert!(r.shapes_ok);
        assert_eq!(r.c, 2);
        let r1 = alpha_invariant(&tern("X^[4]Z^[2] - X^[4]YZ + Z^[6]")).unwrap();
        assert_eq!(r1.alpha, 5);
        assert_eq!(r1.h_j.0, vec![1, 3, 5, 5, 5, 3, 1]);
        assert_eq!(r1.case, DifferenceCase::HZero);
        assert_eq!(r1.c, 2);
        assert!(r1.shapes_ok);
    }

    #[test]
    fn b_module_example() {
        // F = X^[2]Z^[2] + WZ^[3] has H(B) = (1,2,1,1).
        let r = alpha_invariant(&tern("X^[2]Z^[2]")).unwrap();
        assert_eq!(r.hb.0, vec![1, 2, 1, 1, 0]);
    }

    #[test]
    fn lambda_zero_is_identity() {
        let g = tern("X^[4]Z^[2] - X^[4]YZ");
        let r = lambda_analysis(&g, &[q().zero(), q().one()]).unwrap();
        assert!(r.all_consistent());
        assert_eq!(r.steps[1].alpha, 5);
        assert_eq!(r.steps[1].h_j.0, vec![1, 3, 5, 5, 5, 3, 1]);
    }

    #[test]
    fn vw_member_complete_intersection() {
        let g = tern("X^[2]Y^[2]Z^[2]");
        let gp = GradedPoly::parse(VariableFrame::Xyz, q(), "x^2y^2z^2").unwrap();
        let c = build_vw_member(&g, &gp).unwrap();
        assert_eq!(c.hilbert.0, vec![1, 4, 7, 8, 7, 4, 1, 0]);
        let bad = GradedPoly::parse(VariableFrame::Xyz, q(), "x^3y^3").unwrap();
        assert!(matches!(build_vw_member(&g, &bad), Err(Error::Degenerate(_))));
    }

    #[test]
    fn power_sum_single_point() {
        let p = vec![vec![q().one(), q().from_i64(2), q().from_i64(-1), q().from_i64(3)]];
        let f = power_sum(VariableFrame::Wxyz, q(), &p, 5).unwrap();
        assert_eq!(hilbert_function(&f).0, vec![1; 6]);
    }
}
