use gorenstein::graded::{graded_dim, DividedPower, Ordinary};
use gorenstein::inverse::{
    ann_generators, catalecticant, hilbert_from_generators, hilbert_function, DualGenerator,
};
use gorenstein::json::{form_from_json, form_to_json, PolyJson};
use gorenstein::macaulay::{is_o_sequence, macaulay_growth};
use gorenstein::nets::{classify_net, common_linear_factor, linear_relation_count, NetOfQuadrics, Stratum};
use gorenstein::random::SeededRng;
use gorenstein::{DividedPowerForm, FieldSpec, GradedPoly, Scalar, VariableFrame};
use proptest::prelude::*;

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

fn random_net(rng: &mut SeededRng) -> Option<NetOfQuadrics> {
    let k = rng.int(1, 4) as usize;
    let b: [GradedPoly; 3] = std::array::from_fn(|_| rng.sparse_form(VariableFrame::Wxyz, q(), 2, k));
    NetOfQuadrics::new(b).ok()
}

fn invertible(rng: &mut SeededRng) -> Vec<Vec<Scalar>> {
    loop {
        let m: Vec<Vec<Scalar>> = (0..4).map(|_| rng.vector(q(), 4)).collect();
        let rank = gorenstein::ExactMatrix::from_rows(q(), m.clone()).unwrap().rank();
        if rank == 4 {
            return m;
        }
    }
}

#[test]
fn random_nets_obey_relation_bounds() {
    let mut rng = SeededRng::new(500);
    let mut seen = 0;
    let mut generic_checked = 0;
    while seen < 500 {
        let Some(v) = random_net(&mut rng) else { continue };
        seen += 1;
        let s = linear_relation_count(&v);
        assert!(s <= 3, "{s} relations for {:?}", v.basis());
        assert_eq!(s == 3, common_linear_factor(&v).is_some(), "{:?}", v.basis());
        let c = classify_net(&v).unwrap();
        if c.stratum == Stratum::F0 {
            assert_eq!(c.hilbert_prefix.get(3), 8, "{:?}", v.basis());
            generic_checked += 1;
        }
    }
    // Dense nets have no linear relations.
    for _ in 0..20 {
        let b: [GradedPoly; 3] = std::array::from_fn(|_| rng.form(VariableFrame::Wxyz, q(), 2));
        let v = NetOfQuadrics::new(b).unwrap();
        assert_eq!(linear_relation_count(&v), 0);
        assert_eq!(classify_net(&v).unwrap().hilbert_prefix.get(3), 8);
        generic_checked += 1;
    }
    assert!(generic_checked >= 20);
}

#[test]
fn classification_is_invariant_under_substitution() {
    let named: [[&str; 3]; 5] = [
        ["wx", "wy", "wz"],
        ["w^2", "wx", "wy"],
        ["wx", "wy", "xz"],
        ["wx", "wy", "z^2"],
        ["wy-x^2", "wz-xy", "xz-y^2"],
    ];
    let mut rng = SeededRng::new(77);
    for texts in named {
        let v = NetOfQuadrics::parse(VariableFrame::Wxyz, q(), texts).unwrap();
        let base = classify_net(&v).unwrap();
        for _ in 0..50 {
            let m = invertible(&mut rng);
            let c = classify_net(&v.transform(&m).unwrap()).unwrap();
            assert_eq!(c.stratum, base.stratum, "{texts:?}");
            assert_eq!(c.relation_count, base.relation_count, "{texts:?}");
            assert_eq!(c.hilbert_prefix, base.hilbert_prefix, "{texts:?}");
        }
    }
}

/// Dual generators of the worked examples.
fn golden_forms() -> Vec<DividedPowerForm> {
    let w = |s: &str| DividedPowerForm::parse(VariableFrame::Wxyz, q(), s).unwrap();
    vec![
        w("X^[4]Z^[2] - X^[4]YZ + WZ^[5]"),
        w("X^[4]Z^[2] - X^[4]YZ + Z^[6] + WZ^[5]"),
        w("X^[3]Y^[5] + X^[2]Y^[4]Z^[2] + Y^[5]Z^[3] + WZ^[7]"),
        w("X^[3]Z^[3] - X^[2]Y^[4] + Y^[2]Z^[4] + XY^[2]Z^[3] + Z^[6] + WZ^[5]"),
    ]
}

#[test]
fn prime_field_ranks_match_rationals() {
    const PRIMES: [u64; 8] = [11, 13, 17, 19, 23, 29, 31, 101];
    let mut rng = SeededRng::new(20);
    for seed in 0..20 {
        for f in golden_forms() {
            let j = f.degree();
            let candidates: Vec<u64> = PRIMES.iter().copied().filter(|&p| p > j as u64).collect();
            let p = candidates[rng.int(0, candidates.len() as i64 - 1) as usize];
            let fp = FieldSpec::prime(p).unwrap();
            let gq = DualGenerator::new(f.clone()).unwrap();
            let gp = DualGenerator::new(f.to_field(fp).unwrap()).unwrap();
            for i in 0..=j {
                assert_eq!(
                    catalecticant(&gq, i).unwrap().rank(),
                    catalecticant(&gp, i).unwrap().rank(),
                    "seed {seed}, p={p}, i={i}, F={f}"
                );
            }
        }
    }
}

#[test]
fn hilbert_function_agrees_with_generator_oracle() {
    let mut rng = SeededRng::new(3);
    for k in 0..30 {
        let j = 2 + (k % 5) as u32;
        let f: DividedPowerForm = if k % 2 == 0 {
            rng.form(VariableFrame::Wxyz, q(), j)
        } else {
            rng.sparse_form(VariableFrame::Wxyz, q(), j, 3)
        };
        let f = DualGenerator::new(f).unwrap();
        let h = hilbert_function(&f);
        assert!(h.is_symmetric(), "{h}");
        let gens = ann_generators(&f, j + 1);
        let from_gens = hilbert_from_generators(&gens, j + 1).unwrap();
        assert_eq!(from_gens.trimmed(), h.trimmed(), "F = {}", f.form());
    }
}

fn arb_form(frame: VariableFrame, max_deg: u32) -> impl Strategy<Value = (u32, Vec<i64>)> {
    (0..=max_deg).prop_flat_map(move |d| {
        let n = graded_dim(frame, d as i64) as usize;
        (Just(d), prop::collection::vec(-5i64..=5, n))
    })
}

fn build<B: gorenstein::graded::BasisKind>(frame: VariableFrame, d: u32, c: &[i64]) -> gorenstein::graded::Form<B> {
    let v: Vec<Scalar> = c.iter().map(|&x| q().from_i64(x)).collect();
    gorenstein::graded::Form::from_vector(frame, q(), d, &v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_round_trip_dual((d, c) in arb_form(VariableFrame::Wxyz, 5)) {
        let f = build::<DividedPower>(VariableFrame::Wxyz, d, &c);
        let text = serde_json::to_string(&form_to_json(&f)).unwrap();
        let p: PolyJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(form_from_json::<DividedPower>(&p, None).unwrap(), f);
    }

    #[test]
    fn json_round_trip_ordinary((d, c) in arb_form(VariableFrame::Xyz, 6)) {
        let f = build::<Ordinary>(VariableFrame::Xyz, d, &c);
        let text = serde_json::to_string(&form_to_json(&f)).unwrap();
        let p: PolyJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(form_from_json::<Ordinary>(&p, None).unwrap(), f);
    }

    #[test]
    fn text_round_trip((d, c) in arb_form(VariableFrame::Wxyz, 4)) {
        let f = build::<DividedPower>(VariableFrame::Wxyz, d, &c);
        prop_assume!(!f.is_zero());
        let back = DividedPowerForm::parse(VariableFrame::Wxyz, q(), &f.to_string()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn monomial_ideals_give_o_sequences(
        gens in prop::collection::vec(prop::collection::vec(0u32..=3, 3), 1..6),
    ) {
        let gens: Vec<GradedPoly> = gens
            .into_iter()
            .filter(|e| e.iter().sum::<u32>() > 0)
            .map(|e| GradedPoly::monomial(VariableFrame::Xyz, q(), gorenstein::Monomial(e)))
            .collect();
        prop_assume!(!gens.is_empty());
        let h = hilbert_from_generators(&gens, 7).unwrap();
        prop_assert!(is_o_sequence(h.values()).admissible, "{}", h);
    }

    #[test]
    fn growth_is_monotone(c in 1i64..200, d in 1i64..8) {
        prop_assert!(macaulay_growth(c, d).unwrap() <= macaulay_growth(c + 1, d).unwrap());
        prop_assert!(macaulay_growth(c, d).unwrap() >= c as u64);
    }
}
