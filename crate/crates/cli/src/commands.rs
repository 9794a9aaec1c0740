use anyhow::{anyhow, Result};
use gorenstein::gorseq::{
    b_min, bmax, ch_nonempty, decide_gorenstein, dim_ch_socle6, monomial_witness, smoothness_certificate,
    tangent_dimension, two_component_witness,
};
use gorenstein::graded::BasisKind;
use gorenstein::graded::Form;
use gorenstein::inverse::{
    alpha_invariant, ann_generators, ann_slice, build_vw_member, generator_counts, hilbert_function,
    lambda_analysis, power_sum, w2_analysis, DualGenerator,
};
use gorenstein::json::{complex_to_json, form_to_json, points_to_json};
use gorenstein::macaulay::{
    gotzmann_regularity, gotzmann_representation, hilbert_polynomial, is_o_sequence, is_symmetric,
    macaulay_expand, macaulay_growth, si_condition, RationalPoly,
};
use gorenstein::nets::{classify_net, net_orbit_dimension, NetOfQuadrics};
use gorenstein::resolution::{
    build_f_complex, fitting_minor_check, koszul_complex, verify_complex, PfaffianSystem,
};
use gorenstein::{FieldSpec, GradedPoly, Scalar, VariableFrame};
use serde::Serialize;
use serde_json::{json, Value};

use crate::input;
use crate::report::InputLog;
use crate::{Command, GorCmd, InvCmd, NetCmd, OseqCmd, Outcome, ResCmd};

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

fn poly<B: BasisKind>(f: &Form<B>) -> Value {
    to_value(&form_to_json(f))
}

fn polys<B: BasisKind>(fs: &[Form<B>]) -> Value {
    Value::Array(fs.iter().map(poly).collect())
}

fn done(results: Value) -> Result<Outcome> {
    Ok(Outcome {
        results,
        seed: None,
        failed: false,
    })
}

pub fn dispatch(cmd: &Command, field: Option<FieldSpec>, seed: u64, log: &mut InputLog) -> Result<Outcome> {
    match cmd {
        Command::Oseq(c) => oseq(c, log),
        Command::Inv(c) => inv(c, field, log),
        Command::Net(c) => net(c, field, log),
        Command::Gor(c) => gor(c, field, seed, log),
        Command::Res(c) => res(c, field, log),
        Command::Golden(a) => crate::golden::command(a, log),
    }
}

fn oseq(cmd: &OseqCmd, log: &mut InputLog) -> Result<Outcome> {
    match cmd {
        OseqCmd::Expand { c, d } => {
            input::scalar_arg(log, "c", &c.to_string());
            input::scalar_arg(log, "d", &d.to_string());
            let e = macaulay_expand(*c, *d)?;
            let terms: Vec<Value> = e.terms().map(|(k, i)| json!({"k": k, "i": i})).collect();
            done(json!({"c": c, "d": d, "terms": terms, "growth": e.growth()}))
        }
        OseqCmd::Growth { c, d } => {
            input::scalar_arg(log, "c", &c.to_string());
            input::scalar_arg(log, "d", &d.to_string());
            done(json!({"c": c, "d": d, "growth": macaulay_growth(*c, *d)?}))
        }
        OseqCmd::Check { h } => {
            let h = input::sequence(log, "H", h)?;
            let r = is_o_sequence(h.values());
            done(json!({"sequence": h, "admissible": r.admissible, "failing_degree": r.failing_degree}))
        }
        OseqCmd::Si { h } => {
            let h = input::sequence(log, "H", h)?;
            done(json!({
                "sequence": h,
                "symmetric": is_symmetric(h.values()),
                "si": si_condition(h.values()),
            }))
        }
        OseqCmd::Regularity { poly, c, d } => match (poly, c, d) {
            (Some(p), _, _) => {
                input::scalar_arg(log, "poly", p);
                let rp = RationalPoly::parse(p)?;
                let g = gotzmann_representation(&rp)?;
                done(json!({"polynomial": rp.to_string(), "a": g.a, "regularity": g.regularity()}))
            }
            (None, Some(c), Some(d)) => {
                input::scalar_arg(log, "c", &c.to_string());
                input::scalar_arg(log, "d", &d.to_string());
                let hp = hilbert_polynomial(*c, *d)?;
                done(json!({
                    "c": c,
                    "d": d,
                    "polynomial": hp.polynomial.to_string(),
                    "regularity": gotzmann_regularity(&hp),
                }))
            }
            _ => Err(anyhow!("give --poly or both -c and -d")),
        },
    }
}

fn hilbert_summary(f: &DualGenerator) -> Result<Value> {
    let h = hilbert_function(f);
    let j = f.socle_degree();
    let profile = generator_counts(f, j + 1)?;
    Ok(json!({
        "hilbert": h,
        "socle_degree": j,
        "symmetric": h.is_symmetric(),
        "generator_counts": profile.counts,
        "generators": polys(&ann_generators(f, j + 1)),
    }))
}

fn inv(cmd: &InvCmd, field: Option<FieldSpec>, log: &mut InputLog) -> Result<Outcome> {
    match cmd {
        InvCmd::Hilbert { f } => {
            let f = input::dual_generator(log, "F", f, field)?;
            let mut v = hilbert_summary(&f)?;
            v["dual_generator"] = poly(f.form());
            done(v)
        }
        InvCmd::Ann { f, d } => {
            let f = input::dual_generator(log, "F", f, field)?;
            input::scalar_arg(log, "d", &d.to_string());
            let s = ann_slice(&f, *d);
            done(json!({"degree": d, "dim": s.dim(), "codim": s.codim(), "basis": polys(&s.basis())}))
        }
        InvCmd::Alpha { g } => {
            let g = input::dual_form(log, "G", g, field)?;
            done(to_value(&alpha_invariant(&g)?))
        }
        InvCmd::W2 { g, lambda } => {
            let g = input::dual_form(log, "G", g, field)?;
            let w2 = w2_analysis(&g)?;
            let mut v = json!({"w2": w2, "lambda": null});
            if !lambda.is_empty() {
                input::scalar_arg(log, "lambda", &lambda.join(","));
                let lams = lambda
                    .iter()
                    .map(|s| g.field().parse(s.trim()))
                    .collect::<gorenstein::Result<Vec<Scalar>>>()?;
                let rep = lambda_analysis(&g, &lams)?;
                v["lambda_consistent"] = json!(rep.all_consistent());
                v["lambda"] = to_value(&rep);
            }
            done(v)
        }
        InvCmd::BuildVw { g, gpoly } => {
            let gd = input::dual_form(log, "G", g, field)?;
            let gp = input::poly(log, "g", gpoly, Some(gd.field()))?;
            let c = build_vw_member(&gd, &gp)?;
            done(json!({
                "generators": polys(&c.generators),
                "dual_generator": poly(&c.dual_generator),
                "hilbert": c.hilbert,
                "h_prime": c.h_prime,
                "socle_degree": c.socle_degree,
                "provenance": c.provenance,
            }))
        }
        InvCmd::Powersum { p, j } => {
            let (frame, fld, pts) = input::points(log, "points", p, field)?;
            input::scalar_arg(log, "j", &j.to_string());
            let f = power_sum(frame, fld, &pts, *j)?;
            let mut v = hilbert_summary(&f)?;
            v["dual_generator"] = poly(f.form());
            done(v)
        }
    }
}

fn net_of(log: &mut InputLog, arg: &str, field: Option<FieldSpec>) -> Result<NetOfQuadrics> {
    let ps = input::polys(log, "V", arg, field)?;
    let n = ps.len();
    let basis: [GradedPoly; 3] = ps
        .try_into()
        .map_err(|_| gorenstein::Error::InvalidArgument(format!("a net needs 3 quadrics, got {n}")))?;
    Ok(NetOfQuadrics::new(basis)?)
}

fn net(cmd: &NetCmd, field: Option<FieldSpec>, log: &mut InputLog) -> Result<Outcome> {
    match cmd {
        NetCmd::Classify { v } => {
            let net = net_of(log, v, field)?;
            let c = classify_net(&net)?;
            let factor = c.common_factor.as_ref().map(|cf| {
                json!({"ell": poly(&cf.ell), "cofactors": polys(&cf.cofactors)})
            });
            done(json!({
                "relation_count": c.relation_count,
                "stratum": c.stratum,
                "common_factor": factor,
                "hilbert_prefix": c.hilbert_prefix,
                "hilbert_pattern": c.hilbert_pattern,
                "orbit_dimension": net_orbit_dimension(&net),
            }))
        }
        NetCmd::OrbitDim { v } => {
            let net = net_of(log, v, field)?;
            done(json!({"orbit_dimension": net_orbit_dimension(&net)}))
        }
    }
}

fn gor(cmd: &GorCmd, field: Option<FieldSpec>, seed: u64, log: &mut InputLog) -> Result<Outcome> {
    match cmd {
        GorCmd::Decide { h } => {
            let h = input::sequence(log, "H", h)?;
            done(to_value(&decide_gorenstein(&h)))
        }
        GorCmd::Bmax { h } => {
            input::scalar_arg(log, "h", &h.to_string());
            done(json!({
                "h": h,
                "bmax": bmax(*h)?,
                "bmin": b_min(*h)?,
                "dim_ch_socle6": dim_ch_socle6(*h)?,
            }))
        }
        GorCmd::Ch { h } => {
            let h = input::sequence(log, "H", h)?;
            let ch = ch_nonempty(&h)?;
            let cert = smoothness_certificate(&h).ok();
            done(json!({"sequence": h, "nonempty": ch.nonempty, "h_prime": ch.h_prime, "smoothness_certificate": cert}))
        }
        GorCmd::Tangent { f } => {
            let f = input::dual_generator(log, "F", f, field)?;
            done(to_value(&tangent_dimension(&f)?))
        }
        GorCmd::Witness { h } => {
            let h = input::sequence(log, "H", h)?;
            let w = two_component_witness(&h, field.unwrap_or_else(FieldSpec::rationals), seed)?;
            let other_h = hilbert_function(&w.member_other);
            let results = json!({
                "h": w.h,
                "certificate": w.certificate,
                "seed": w.seed,
                "member_c": {
                    "generators": polys(&w.member_c.generators),
                    "dual_generator": poly(&w.member_c.dual_generator),
                    "hilbert": w.member_c.hilbert,
                    "h_prime": w.member_c.h_prime,
                    "stratum": w.member_c_stratum,
                },
                "member_other": {
                    "dual_generator": poly(w.member_other.form()),
                    "generators": polys(&ann_generators(&w.member_other, w.member_other.socle_degree() + 1)),
                    "points": points_to_json(w.member_other.frame(), w.member_other.field(), &w.member_other_points),
                    "configuration": w.member_other_configuration,
                    "hilbert": other_h,
                    "stratum": w.member_other_stratum,
                },
            });
            Ok(Outcome {
                results,
                seed: Some(seed),
                failed: false,
            })
        }
        GorCmd::Monomial { t, family } => {
            let t = input::sequence(log, "T", t)?;
            if let Some(c) = family {
                input::scalar_arg(log, "family", &c.to_string());
            }
            let w = monomial_witness(&t, *family)?;
            done(json!({
                "family": w.family,
                "generators": polys(&w.generators),
                "hilbert": w.hilbert,
                "linear_relations": w.linear_relations,
            }))
        }
    }
}

fn res(cmd: &ResCmd, field: Option<FieldSpec>, log: &mut InputLog) -> Result<Outcome> {
    match cmd {
        ResCmd::Build { phi, g, j } => {
            let (frame, fld, grid) = input::grid(log, "phi", phi, field)?;
            let g = input::poly(log, "g", g, Some(fld))?;
            input::scalar_arg(log, "j", &j.to_string());
            let sys = PfaffianSystem::from_phi(grid, frame, fld)?;
            let fc = build_f_complex(&sys, &g, *j)?;
            let fitting = if fc.m == 3 {
                let checks = (0..fc.m)
                    .map(|i| fitting_minor_check(&fc, i))
                    .collect::<gorenstein::Result<Vec<bool>>>()?;
                json!(checks)
            } else {
                Value::Null
            };
            done(json!({
                "complex": complex_to_json(&fc.complex),
                "ranks": fc.complex.ranks(),
                "betti": fc.complex.betti_table(),
                "pfaffians": polys(&sys.alpha),
                "socle_degree_j": sys.socle_degree(),
                "gamma": fc.lift.gamma.to_string(),
                "signs": fc.signs,
                "m": fc.m,
                "j": fc.j,
                "fitting_minor_checks": fitting,
            }))
        }
        ResCmd::Verify { c, h, up_to } => {
            let cx = input::complex(log, "complex", c, field)?;
            let h = input::sequence(log, "H", h)?;
            let j = h.trimmed().socle_degree().unwrap_or(0) as i64;
            let up_to = up_to.unwrap_or(j + 4);
            input::scalar_arg(log, "up_to", &up_to.to_string());
            let rep = verify_complex(&cx, &h, up_to)?;
            let pass = rep.all_pass();
            let mut v = to_value(&rep);
            v["all_pass"] = json!(pass);
            Ok(Outcome {
                results: v,
                seed: None,
                failed: !pass,
            })
        }
        ResCmd::Koszul => {
            let fld = field.unwrap_or_else(FieldSpec::rationals);
            let k = koszul_complex(VariableFrame::Xyz, fld)?;
            done(json!({"complex": complex_to_json(&k), "ranks": k.ranks()}))
        }
    }
}
