//! Gorenstein sequences `(1,4,…)`: decisions, bounds, tangent spaces and component witnesses.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::graded::{binomial, graded_dim, DividedPowerForm, GradedPoly, Monomial, VariableFrame};
use crate::inverse::{
    ann_slices, build_vw_member, h_zero, hilbert_from_generators, hilbert_function,
    minimal_generators, profile_from_slices, ConstructedGorensteinIdeal,
    DualGenerator, IdealSlice,
};
use crate::macaulay::{first_difference, is_o_sequence, si_condition, symmetrize, HilbertSequence};
use crate::nets::{classify_net, linear_relation_count, NetOfQuadrics, Stratum};
use crate::random::{SeededRng, MAX_REDRAWS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Gorenstein,
    NotGorenstein,
    OutOfScope,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecisionRule {
    Symmetry,
    MacaulayBound,
    SiCondition,
    Aless7,
    H3Structure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinDecision {
    pub sequence: HilbertSequence,
    pub verdict: Verdict,
    pub reason: DecisionRule,
}

pub fn decide_gorenstein(h: &HilbertSequence) -> GorensteinDecision {
    let seq = h.trimmed();
    let v = seq.values();
    let out = |verdict, reason| GorensteinDecision {
        sequence: seq.clone(),
        verdict,
        reason,
    };
    if v.first() != Some(&1) || !is_o_sequence(v).admissible {
        return out(Verdict::NotGorenstein, DecisionRule::MacaulayBound);
    }
    if !seq.is_symmetric() {
        return out(Verdict::NotGorenstein, DecisionRule::Symmetry);
    }
    let h1 = seq.get(1);
    let h2 = seq.get(2);
    let si = if si_condition(v) || v.len() == 1 {
        Verdict::Gorenstein
    } else {
        Verdict::NotGorenstein
    };
    match h1 {
        0..=3 => out(si, DecisionRule::H3Structure),
        4 if h2 <= 6 => out(si, DecisionRule::Aless7),
        4 if h2 == 7 => out(si, DecisionRule::SiCondition),
        _ => out(Verdict::OutOfScope, DecisionRule::SiCondition),
    }
}

fn check_h_range(h: i64) -> Result<()> {
    if !(7..=11).contains(&h) {
        return Err(Error::DegreeOutOfRange {
            degree: h,
            range: "7..=11".into(),
        });
    }
    Ok(())
}

/// Largest `b = H_4` following `(1,4,7,h)` when `j ≥ 7`.
pub fn bmax(h: i64) -> Result<i64> {
    check_h_range(h)?;
    Ok([7, 9, 11, 13, 16][(h - 7) as usize])
}

/// Smallest `b = H_4` following `(1,4,7,h)` when `j ≥ 7`.
pub fn b_min(h: i64) -> Result<i64> {
    check_h_range(h)?;
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChReport {
    pub nonempty: bool,
    pub h_prime: HilbertSequence,
}

/// Whether `H − (0,1,…,1,0)` is a height-three Gorenstein sequence.
pub fn ch_nonempty(h: &HilbertSequence) -> Result<ChReport> {
    let h = h.trimmed();
    if h.get(0) != 1 || h.get(1) != 4 {
        return Err(Error::InvalidArgument(format!("{h} does not start (1,4,…)")));
    }
    if !h.is_symmetric() {
        return Err(Error::InvalidArgument(format!("{h} is not symmetric")));
    }
    let j = h.socle_degree().expect("nonzero") as u32;
    let h_prime = h.sub(&h_zero(j));
    let nonempty = h_prime.get(1) == 3 && si_condition(h_prime.values());
    Ok(ChReport { nonempty, h_prime })
}

/// `34 − C(h^∨+1, 2)` with `h^∨ = 11 − h`, for socle degree 6.
pub fn dim_ch_socle6(h: i64) -> Result<i64> {
    check_h_range(h)?;
    Ok(34 - binomial(12 - h as u64, 2) as i64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessCertificate {
    pub value: i64,
    pub certified: bool,
}

fn check_147_shape(h: &HilbertSequence) -> Result<(u32, i64, i64)> {
    let h = h.trimmed();
    let j = h.socle_degree().unwrap_or(0);
    if j < 6 || h.get(0) != 1 || h.get(1) != 4 || h.get(2) != 7 || !h.is_symmetric() {
        return Err(Error::InvalidArgument(format!(
            "{h} is not a symmetric sequence (1,4,7,h,b,…) of socle degree ≥ 6"
        )));
    }
    Ok((j as u32, h.get(3), h.get(4)))
}

/// `3h − b − 17 ≥ 0`: a generic `J` with Hilbert function `H'` has no degree-4 relations.
pub fn smoothness_certificate(h: &HilbertSequence) -> Result<SmoothnessCertificate> {
    let (_, hh, b) = check_147_shape(h)?;
    let value = 3 * hh - b - 17;
    Ok(SmoothnessCertificate {
        value,
        certified: value >= 0,
    })
}

/// `dim (I²)_j` from the minimal generators and slices of `I`.
fn square_dim(slices: &[IdealSlice], frame: VariableFrame, field: FieldSpec, j: u32) -> usize {
    let gens = minimal_generators(slices);
    let mut sq = IdealSlice::zero(frame, field, j);
    for g in gens {
        let d = g.degree();
        if d == 0 || d >= j {
            continue;
        }
        for b in slices[(j - d) as usize].basis() {
            sq.insert(&g.multiply(&b).expect("same frame"));
        }
    }
    sq.dim()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentReport {
    pub j: u32,
    /// `dim R_j/(I²)_j`.
    pub dim_r_mod_i2: usize,
    /// `dim R'_j/(J²)_j` for `J = I ∩ K[x,y,z]`, when `F = G + cW^[j]`.
    pub dim_r3_mod_j2: Option<usize>,
    pub nu_jm1: Option<usize>,
    pub identity_holds: Option<bool>,
}

/// Splits `F = G + cW^[j]` with `G` free of `W` and `c ≠ 0`.
fn vw_split(f: &DividedPowerForm) -> Option<DividedPowerForm> {
    if f.frame() != VariableFrame::Wxyz {
        return None;
    }
    let j = f.degree();
    let wj = Monomial(vec![j, 0, 0, 0]);
    if f.coeff(&wj).is_zero() {
        return None;
    }
    let mut g = Vec::new();
    for (m, c) in f.terms() {
        if *m == wj {
            continue;
        }
        if m.0[0] > 0 {
            return None;
        }
        g.push((m.clone(), c.clone()));
    }
    let g = DividedPowerForm::from_terms(f.frame(), f.field(), j, g).ok()?;
    if g.is_zero() {
        return None;
    }
    g.restrict().ok()
}

pub fn tangent_dimension(f: &DualGenerator) -> Result<TangentReport> {
    let j = f.socle_degree();
    let frame = f.frame();
    let field = f.field();
    let slices = ann_slices(f, j);
    let dim_r_mod_i2 = graded_dim(frame, j as i64) as usize - square_dim(&slices, frame, field, j);
    let mut report = TangentReport {
        j,
        dim_r_mod_i2,
        dim_r3_mod_j2: None,
        nu_jm1: None,
        identity_holds: None,
    };
    if let Some(g) = vw_split(f.form()) {
        let g = DualGenerator::new(g)?;
        let tslices = ann_slices(&g, j);
        let t = graded_dim(VariableFrame::Xyz, j as i64) as usize
            - square_dim(&tslices, VariableFrame::Xyz, field, j);
        let nu = profile_from_slices(&tslices).nu(j - 1);
        report.dim_r3_mod_j2 = Some(t);
        report.nu_jm1 = Some(nu);
        report.identity_holds = Some(dim_r_mod_i2 == 7 + t + nu);
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessFamily {
    /// `(xy, xz, yz, x^a, y^c, z^d)`.
    J { a: u32, c: u32, d: u32 },
    /// `(x², xy, z², y^(a−1)z, y^c)`.
    K { a: u32, c: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialWitness {
    pub family: WitnessFamily,
    pub generators: Vec<GradedPoly>,
    pub hilbert: HilbertSequence,
    /// Linear relations among the three quadric generators.
    pub linear_relations: usize,
}

fn mono(field: FieldSpec, e: [u32; 3]) -> GradedPoly {
    GradedPoly::monomial(VariableFrame::Xyz, field, Monomial(e.to_vec()))
}

impl WitnessFamily {
    /// `T'_i` for `i ≥ 0`, up to and including the first zero.
    pub fn target(&self) -> HilbertSequence {
        let (a, c, d, k) = match *self {
            WitnessFamily::J { a, c, d } => (a, c, d, false),
            WitnessFamily::K { a, c } => (a, c, 0, true),
        };
        let end = if k { c } else { d };
        HilbertSequence(
            (0..=end)
                .map(|i| match i {
                    0 => 1,
                    1 | 2 => 3,
                    _ if k => (i < a) as i64 + (i < c) as i64,
                    _ => (i < a) as i64 + (i < c) as i64 + (i < d) as i64,
                })
                .collect(),
        )
    }

    pub fn generators(&self, field: FieldSpec) -> Vec<GradedPoly> {
        match *self {
            WitnessFamily::J { a, c, d } => vec![
                mono(field, [1, 1, 0]),
                mono(field, [1, 0, 1]),
                mono(field, [0, 1, 1]),
                mono(field, [a, 0, 0]),
                mono(field, [0, c, 0]),
                mono(field, [0, 0, d]),
            ],
            WitnessFamily::K { a, c } => vec![
                mono(field, [2, 0, 0]),
                mono(field, [1, 1, 0]),
                mono(field, [0, 0, 2]),
                mono(field, [0, a - 1, 1]),
                mono(field, [0, c, 0]),
            ],
        }
    }

    /// Exponents of the standard monomials, used as distraction lattice points.
    pub fn standard_monomials(&self) -> Vec<[u32; 3]> {
        match *self {
            WitnessFamily::J { a, c, d } => {
                let mut v = vec![[0, 0, 0]];
                v.extend((1..a).map(|i| [i, 0, 0]));
                v.extend((1..c).map(|i| [0, i, 0]));
                v.extend((1..d).map(|i| [0, 0, i]));
                v
            }
            WitnessFamily::K { a, c } => {
                let mut v = vec![[1, 0, 0], [1, 0, 1]];
                v.extend((0..c).map(|q| [0, q, 0]));
                v.extend((0..a - 1).map(|q| [0, q, 1]));
                v
            }
        }
    }

    fn matching(t: &HilbertSequence) -> Vec<WitnessFamily> {
        let t = t.trimmed();
        let v = t.values();
        if v.len() < 4 || v[0] != 1 || v[1] != 3 || v[2] != 3 {
            return Vec::new();
        }
        let d = v.len() as u32;
        let first = |p: &dyn Fn(i64) -> bool| (3..d).find(|&i| p(v[i as usize])).unwrap_or(d);
        let a = first(&|x| x < 3);
        let c = first(&|x| x <= 1);
        let mut out = Vec::new();
        for fam in [WitnessFamily::J { a, c, d }, WitnessFamily::K { a: c, c: d }] {
            if fam.target().trimmed() == t {
                out.push(fam);
            }
        }
        out
    }
}

/// A monomial ideal in `K[x,y,z]` with Hilbert function `T'`, verified by direct computation.
pub fn monomial_witness(t: &HilbertSequence, family: Option<char>) -> Result<MonomialWitness> {
    let field = FieldSpec::rationals();
    let fam = WitnessFamily::matching(t)
        .into_iter()
        .find(|f| match family {
            None => true,
            Some('J') => matches!(f, WitnessFamily::J { .. }),
            Some('K') => matches!(f, WitnessFamily::K { .. }),
            Some(_) => false,
        })
        .ok_or_else(|| {
            Error::InvalidArgument(format!(
                "{t} is not of the shape (1,3,3,…,2_a,…,1_c,…,0_d) or (1,3,3,2,…,1_a,…,0_c) with 3 ≤ a ≤ c"
            ))
        })?;
    let generators = fam.generators(field);
    let target = fam.target();
    let hilbert = hilbert_from_generators(&generators, target.values().len() as u32 - 1)?;
    if hilbert != target {
        return Err(Error::Verification(format!(
            "monomial ideal has Hilbert function {hilbert}, expected {target}"
        )));
    }
    let quadrics: Vec<GradedPoly> = generators[..3].to_vec();
    let net = NetOfQuadrics::new([quadrics[0].clone(), quadrics[1].clone(), quadrics[2].clone()])?;
    Ok(MonomialWitness {
        family: fam,
        generators,
        hilbert,
        linear_relations: linear_relation_count(&net),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointConfiguration {
    TwistedCubic,
    Distraction(WitnessFamily),
}

#[derive(Clone, Debug)]
pub struct ComponentWitness {
    pub h: HilbertSequence,
    pub member_c: ConstructedGorensteinIdeal,
    pub member_c_stratum: Stratum,
    pub member_other: DualGenerator,
    pub member_other_points: Vec<Vec<Scalar>>,
    pub member_other_configuration: PointConfiguration,
    pub member_other_stratum: Stratum,
    pub certificate: i64,
    pub seed: u64,
}

fn scalars(field: FieldSpec, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| field.from_i64(x)).collect()
}

/// Redraws coefficients `c_P` of `Σ c_P L_P^[j]` until the Hilbert function is `target`.
fn generic_power_sum(
    rng: &mut SeededRng,
    frame: VariableFrame,
    field: FieldSpec,
    points: &[Vec<Scalar>],
    j: u32,
    target: &HilbertSequence,
    what: &str,
) -> Result<DualGenerator> {
    for _ in 0..MAX_REDRAWS {
        let mut f = DividedPowerForm::zero(frame, field, j);
        for p in points {
            let c = rng.nonzero_scalar(field);
            f = f.add(&DividedPowerForm::linear_power(frame, field, p, j)?.scale(&c))?;
        }
        if f.is_zero() {
            continue;
        }
        let g = DualGenerator::new(f)?;
        if hilbert_function(&g).trimmed() == target.trimmed() {
            return Ok(g);
        }
    }
    Err(Error::Genericity {
        attempts: MAX_REDRAWS,
        seed: rng.seed(),
        what: what.into(),
    })
}

fn quadric_net(gens: &[GradedPoly]) -> Result<NetOfQuadrics> {
    let q: Vec<GradedPoly> = gens.iter().filter(|g| g.degree() == 2).cloned().collect();
    let frame = gens.first().map(|g| g.frame()).unwrap_or(VariableFrame::Wxyz);
    let field = gens.first().map(|g| g.field()).unwrap_or(FieldSpec::rationals());
    let s = IdealSlice::from_polys(frame, field, 2, &q)?;
    NetOfQuadrics::from_slice(&s)
}

/// Two Gorenstein algebras with Hilbert function `H` whose quadric nets lie in different strata.
pub fn two_component_witness(h: &HilbertSequence, field: FieldSpec, seed: u64) -> Result<ComponentWitness> {
    let h = h.trimmed();
    let (j, hh, _) = check_147_shape(&h)?;
    let cert = smoothness_certificate(&h)?;
    if !(8..=10).contains(&hh) || !cert.certified {
        return Err(Error::InvalidArgument(format!(
            "{h} needs 8 ≤ h ≤ 10 and 3h − b − 17 ≥ 0 (got h = {hh}, certificate {})",
            cert.value
        )));
    }
    if decide_gorenstein(&h).verdict != Verdict::Gorenstein {
        return Err(Error::InvalidArgument(format!("{h} is not a Gorenstein sequence")));
    }
    field.check_socle_degree(j)?;
    let mut rng = SeededRng::new(seed);

    // Member of C(H): ternary G from lattice points [1:p:k−p] of a two-variable staircase.
    let h_prime = h.sub(&h_zero(j));
    let t2 = first_difference(&h_prime.values()[..=(j / 2) as usize]);
    let mut tpoints = Vec::new();
    for (k, &n) in t2.values().iter().enumerate() {
        for p in 0..n {
            tpoints.push(scalars(field, &[1, p, k as i64 - p]));
        }
    }
    let g = generic_power_sum(&mut rng, VariableFrame::Xyz, field, &tpoints, j, &h_prime, "ternary G with H(G) = H'")?;
    let mut member_c = None;
    for _ in 0..MAX_REDRAWS {
        let gpoly: GradedPoly = rng.form(VariableFrame::Xyz, field, j);
        match build_vw_member(g.form(), &gpoly.embed()) {
            Ok(m) => {
                member_c = Some(m);
                break;
            }
            Err(Error::Degenerate(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    let member_c = member_c.ok_or_else(|| Error::Genericity {
        attempts: MAX_REDRAWS,
        seed,
        what: "g with g∘G ≠ 0".into(),
    })?;
    let member_c_stratum = classify_net(&quadric_net(&member_c.generators)?)?.stratum;

    // Member outside C(H): a power sum over points with Sym(H_Z, j) = H.
    let t = first_difference(&h.values()[..=(j / 2) as usize]);
    let s: i64 = t.values().iter().sum();
    let cubic: Vec<i64> = (0..=(j / 2) as i64).map(|i| (3 * i + 1).min(s)).collect();
    let (configuration, points): (PointConfiguration, Vec<Vec<Scalar>>) = if symmetrize(&cubic, j as usize).trimmed() == h {
        let pts = (0..s).map(|t| scalars(field, &[1, t, t * t, t * t * t])).collect();
        (PointConfiguration::TwistedCubic, pts)
    } else {
        let fam = WitnessFamily::matching(&t)
            .into_iter()
            .next()
            .ok_or_else(|| Error::InvalidArgument(format!("ΔH = {t} has no monomial witness")))?;
        let pts = fam
            .standard_monomials()
            .iter()
            .map(|e| scalars(field, &[1, e[0] as i64, e[1] as i64, e[2] as i64]))
            .collect();
        (PointConfiguration::Distraction(fam), pts)
    };
    let other = generic_power_sum(&mut rng, VariableFrame::Wxyz, field, &points, j, &h, "power sum with H(F) = H")?;
    let other_gens: Vec<GradedPoly> = ann_slices(&other, 2)[2].basis();
    let member_other_stratum = classify_net(&quadric_net(&other_gens)?)?.stratum;

    if member_c.hilbert.trimmed() != h || hilbert_function(&other).trimmed() != h {
        return Err(Error::Verification("witness Hilbert functions differ from H".into()));
    }
    if member_c_stratum != Stratum::F3 || matches!(member_other_stratum, Stratum::F3 | Stratum::Fsp) {
        return Err(Error::Verification(format!(
            "unexpected strata: C member {member_c_stratum}, other member {member_other_stratum}"
        )));
    }
    Ok(ComponentWitness {
        h,
        member_c,
        member_c_stratum,
        member_other: other,
        member_other_points: points,
        member_other_configuration: configuration,
        member_other_stratum,
        certificate: cert.value,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(s: &str) -> HilbertSequence {
        HilbertSequence::parse(s).unwrap()
    }

    #[test]
    fn decisions() {
        for h in 0..=12 {
            let d = decide_gorenstein(&HilbertSequence(vec![1, 4, 7, h, 7, 4, 1]));
            assert_eq!(d.verdict == Verdict::Gorenstein, (7..=11).contains(&h), "h = {h}");
        }
        for s in ["1,4,2,2,4,1", "1,4,3,3,4,1", "1,4,3,4,1", "1,4,6,9,9,6,4,1"] {
            assert_eq!(decide_gorenstein(&hs(s)).verdict, Verdict::NotGorenstein, "{s}");
        }
        assert_eq!(decide_gorenstein(&hs("1,4,1")).verdict, Verdict::Gorenstein);
        assert_eq!(decide_gorenstein(&hs("1,4,8,4,1")).verdict, Verdict::OutOfScope);
        assert_eq!(decide_gorenstein(&hs("1,5,5,1")).verdict, Verdict::OutOfScope);
        assert_eq!(decide_gorenstein(&hs("1,3,6,10,6,3,1")).verdict, Verdict::Gorenstein);
        assert_eq!(decide_gorenstein(&hs("1,3,6,11,6,3,1")).verdict, Verdict::NotGorenstein);
        assert_eq!(decide_gorenstein(&hs("1,4,5,4,1")).reason, DecisionRule::Aless7);
        assert_eq!(decide_gorenstein(&hs("1,4,7,5,4,1")).reason, DecisionRule::Symmetry);
    }

    #[test]
    fn tables() {
        let b: Vec<i64> = (7..=11).map(|h| bmax(h).unwrap()).collect();
        assert_eq!(b, vec![7, 9, 11, 13, 16]);
        assert!(bmax(6).is_err() && bmax(12).is_err());
        assert_eq!(b_min(9).unwrap(), 9);
        assert_eq!(dim_ch_socle6(11).unwrap(), 34);
        assert_eq!(dim_ch_socle6(8).unwrap(), 28);
        assert_eq!(dim_ch_socle6(7).unwrap(), 24);
    }

    #[test]
    fn ch_and_certificates() {
        let r = ch_nonempty(&hs("1,4,7,12,7,4,1")).unwrap();
        assert!(!r.nonempty);
        assert_eq!(r.h_prime, hs("1,3,6,11,6,3,1"));
        let r = ch_nonempty(&hs("1,4,7,11,7,4,1")).unwrap();
        assert!(r.nonempty);
        assert_eq!(r.h_prime, hs("1,3,6,10,6,3,1"));
        let r = ch_nonempty(&hs("1,4,4,4,4,1")).unwrap();
        assert!(r.nonempty);
        assert_eq!(r.h_prime, hs("1,3,3,3,3,1"));
        assert!(ch_nonempty(&hs("1,4,7,4")).is_err());
        let c = |s| smoothness_certificate(&hs(s)).unwrap();
        assert_eq!(c("1,4,7,8,7,4,1"), SmoothnessCertificate { value: 0, certified: true });
        assert_eq!(c("1,4,7,10,13,13,10,7,4,1").value, 0);
        assert_eq!(c("1,4,7,8,9,8,7,4,1"), SmoothnessCertificate { value: -2, certified: false });
    }

    #[test]
    fn monomial_witnesses() {
        let w = monomial_witness(&WitnessFamily::J { a: 4, c: 4, d: 5 }.target(), None).unwrap();
        assert_eq!(w.hilbert.trimmed(), hs("1,3,3,3,1"));
        assert_eq!(w.linear_relations, 2);
        let w = monomial_witness(&hs("1,3,3,1"), None).unwrap();
        assert_eq!(w.family, WitnessFamily::J { a: 3, c: 3, d: 4 });
        let w = monomial_witness(&hs("1,3,3,2,1,1"), Some('K')).unwrap();
        assert_eq!(w.family, WitnessFamily::K { a: 4, c: 6 });
        assert_eq!(w.linear_relations, 1);
        assert!(monomial_witness(&hs("1,3,4,2"), None).is_err());
    }

    #[test]
    fn tangent_of_generic_sextic() {
        let q = FieldSpec::rationals();
        let mut rng = SeededRng::new(7);
        let g: DividedPowerForm = rng.form(VariableFrame::Xyz, q, 6);
        let w6 = DividedPowerForm::monomial(VariableFrame::Wxyz, q, Monomial(vec![6, 0, 0, 0]));
        let f = DualGenerator::new(g.embed().add(&w6).unwrap()).unwrap();
        let r = tangent_dimension(&f).unwrap();
        assert_eq!(r.dim_r3_mod_j2, Some(28));
        assert_eq!(r.nu_jm1, Some(0));
        assert_eq!(r.dim_r_mod_i2, 35);
        assert_eq!(r.identity_holds, Some(true));
    }

    #[test]
    fn witness_1478741() {
        let w = two_component_witness(&hs("1,4,7,8,7,4,1"), FieldSpec::rationals(), 1).unwrap();
        assert_eq!(w.member_c_stratum, Stratum::F3);
        assert_eq!(w.member_other_stratum, Stratum::F2);
        assert_eq!(w.member_other_configuration, PointConfiguration::TwistedCubic);
        assert!(two_component_witness(&hs("1,4,7,8,9,8,7,4,1"), FieldSpec::rationals(), 1).is_err());
    }
}
