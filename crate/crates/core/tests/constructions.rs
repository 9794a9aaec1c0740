use gorenstein::gorseq::{two_component_witness, PointConfiguration};
use gorenstein::inverse::{hilbert_from_generators, hilbert_function};
use gorenstein::nets::Stratum;
use gorenstein::random::SeededRng;
use gorenstein::resolution::{build_f_complex, pfaffians, verify_complex, PfaffianSystem, PolyGrid};
use gorenstein::{FieldSpec, GradedPoly, HilbertSequence, VariableFrame};

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

/// A seeded alternating 5×5 matrix whose entries have the given degree.
fn alternating(rng: &mut SeededRng, deg: u32) -> PolyGrid {
    let frame = VariableFrame::Xyz;
    let mut m: PolyGrid = vec![vec![GradedPoly::zero(frame, q(), deg); 5]; 5];
    for i in 0..5 {
        for k in i + 1..5 {
            let e: GradedPoly = rng.form(frame, q(), deg);
            m[k][i] = e.neg();
            m[i][k] = e;
        }
    }
    m
}

/// `(J, wx, wy, wz, w^j − g)` as an independent route to `H(R/I)`.
fn vw_hilbert(sys: &PfaffianSystem, g: &GradedPoly, j: u32) -> HilbertSequence {
    let frame = VariableFrame::Wxyz;
    let mut gens: Vec<GradedPoly> = sys.alpha.iter().map(GradedPoly::embed).collect();
    for s in ["wx", "wy", "wz"] {
        gens.push(GradedPoly::parse(frame, q(), s).unwrap());
    }
    let wj = GradedPoly::monomial(frame, q(), gorenstein::Monomial(vec![j, 0, 0, 0]));
    gens.push(wj.sub(&g.embed()).unwrap());
    hilbert_from_generators(&gens, j + 4).unwrap()
}

#[test]
fn five_pfaffians_of_linear_matrix() {
    let mut rng = SeededRng::new(5);
    let phi = alternating(&mut rng, 1);
    let alpha = pfaffians(&phi, VariableFrame::Xyz, q()).unwrap();
    assert!(alpha.iter().all(|a| a.degree() == 2 && !a.is_zero()));
    let sys = PfaffianSystem::from_phi(phi, VariableFrame::Xyz, q()).unwrap();
    assert_eq!(sys.socle_degree(), 2);
    let hj = hilbert_from_generators(&sys.alpha, 4).unwrap();
    assert_eq!(hj.trimmed(), HilbertSequence(vec![1, 3, 1]));

    let g = loop {
        let g: GradedPoly = rng.form(VariableFrame::Xyz, q(), 2);
        if build_f_complex(&sys, &g, 2).is_ok() {
            break g;
        }
    };
    let fc = build_f_complex(&sys, &g, 2).unwrap();
    assert_eq!(fc.m, 5);
    assert_eq!(fc.complex.ranks(), vec![1, 9, 16, 9, 1]);
    let h = vw_hilbert(&sys, &g, 2);
    assert_eq!(h.trimmed(), HilbertSequence(vec![1, 4, 1]));
    let rep = verify_complex(&fc.complex, &h, 6).unwrap();
    assert!(rep.all_pass(), "{rep:?}");
}

#[test]
fn five_pfaffians_of_quadratic_matrix() {
    let mut rng = SeededRng::new(55);
    let phi = alternating(&mut rng, 2);
    let sys = PfaffianSystem::from_phi(phi, VariableFrame::Xyz, q()).unwrap();
    assert!(sys.alpha.iter().all(|a| a.degree() == 4));
    let j = sys.socle_degree() as u32;
    assert_eq!(j, 7);
    let g: GradedPoly = rng.form(VariableFrame::Xyz, q(), j);
    let fc = build_f_complex(&sys, &g, j).unwrap();
    assert_eq!(fc.complex.ranks(), vec![1, 9, 16, 9, 1]);
    let h = vw_hilbert(&sys, &g, j);
    assert!(h.trimmed().is_symmetric(), "{h}");
    let rep = verify_complex(&fc.complex, &h, j as i64 + 4).unwrap();
    assert!(rep.compositions_zero, "{:?}", rep.composition_failures);
    assert!(rep.euler_holds, "{:?}", rep.euler);
    assert!(rep.minimal && rep.betti_symmetric, "{rep:?}");
}

#[test]
fn pfaffian_ideal_element_gives_degenerate_lift() {
    let mut rng = SeededRng::new(5);
    let phi = alternating(&mut rng, 1);
    let sys = PfaffianSystem::from_phi(phi, VariableFrame::Xyz, q()).unwrap();
    let g = sys.alpha[0].clone();
    let err = build_f_complex(&sys, &g, 2).unwrap_err();
    assert!(matches!(err, gorenstein::Error::Degenerate(_)), "{err}");
}

#[test]
fn witness_through_distraction() {
    let h = HilbertSequence(vec![1, 4, 7, 9, 10, 10, 9, 7, 4, 1]);
    let w = two_component_witness(&h, q(), 3).unwrap();
    assert!(matches!(w.member_other_configuration, PointConfiguration::Distraction(_)));
    assert_eq!(hilbert_function(&w.member_other).trimmed(), h);
    assert_eq!(w.member_c.hilbert.trimmed(), h);
    assert_eq!(w.member_c_stratum, Stratum::F3);
    assert_eq!(w.member_other_stratum, Stratum::F2);
    assert!(w.certificate >= 0);
}

#[test]
fn witness_is_reproducible() {
    let h = HilbertSequence(vec![1, 4, 7, 9, 7, 4, 1]);
    let a = two_component_witness(&h, q(), 42).unwrap();
    let b = two_component_witness(&h, q(), 42).unwrap();
    assert_eq!(a.member_c.dual_generator, b.member_c.dual_generator);
    assert_eq!(a.member_other.form(), b.member_other.form());
    assert_eq!(a.seed, 42);
}

#[test]
fn witness_rejects_out_of_range() {
    for h in [vec![1, 4, 7, 7, 7, 4, 1], vec![1, 4, 7, 11, 7, 4, 1], vec![1, 4, 6, 6, 6, 4, 1]] {
        assert!(two_component_witness(&HilbertSequence(h.clone()), q(), 1).is_err(), "{h:?}");
    }
}
