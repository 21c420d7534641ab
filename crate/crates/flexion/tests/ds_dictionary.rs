use flexion::ds::*;
use flexion::exact::{int, rat, Rational};
use flexion::mould::swap;
use flexion::random::Generator;
use flexion::symmetry::{classify, is_alternal};
use flexion::Mould;

fn p(s: &str) -> NcPoly {
    NcPoly::parse(s).unwrap()
}

#[test]
fn lie_membership_routes_agree() {
    let mut g = Generator::new(31);
    for _ in 0..10 {
        let f = g.lie(2, 6).unwrap();
        assert!(is_lie(&f), "{f}");
        assert!(is_lie_lyndon(&f), "{f}");
        let mut bent = f.clone();
        bent.add_term(Word::parse("xxyy").unwrap(), int(1));
        assert_eq!(is_lie(&bent), is_lie_lyndon(&bent));
        assert!(!is_lie(&bent));
    }
    assert_eq!(lie_bracket(&NcPoly::x(), &NcPoly::y()), p("xy - yx"));
}

#[test]
fn lyndon_basis_dimensions() {
    // Witt's formula for two generators.
    let dims: Vec<usize> = (1..=7).map(|n| lie_basis(n).len()).collect();
    assert_eq!(dims, vec![2, 1, 2, 3, 6, 9, 18]);
    for b in lie_basis(5) {
        assert!(is_lie(&b));
    }
}

#[test]
fn poisson_and_derivations() {
    let f = p("xy - yx");
    assert!(derivation(&f, &NcPoly::x()).is_zero());
    assert!(poisson(&f, &f).is_zero());
    let mut g = Generator::new(32);
    for _ in 0..5 {
        let f = g.lie(2, 5).unwrap();
        let h = g.lie(2, 5).unwrap();
        assert!(check_derivation_identity(&f, &h).passed());
        assert_eq!(poisson(&f, &h), poisson(&h, &f).scale(&int(-1)));
        assert!(is_lie(&poisson(&f, &h)));
    }
}

#[test]
fn f_star_examples() {
    assert_eq!(f_star(&p("xy - yx")).to_string(), "y2 - 1/2*y1y1");
    assert!(f_star(&p("yx + xx")).is_zero());
    let a = p("xxy - 2*xyx + yxx");
    let b = p("xyy - yyx + 3*xxy");
    let sum = f_star(&(&a + &b));
    let parts = YPoly::from_terms(
        f_star(&a)
            .terms()
            .chain(f_star(&b).terms())
            .map(|(w, c)| (w.clone(), c.clone())),
    );
    assert_eq!(sum, parts);
}

#[test]
fn relation_checks() {
    let x = NcPoly::x();
    let y = NcPoly::y();
    let xy = x.bracket(&y);
    for lambda in [int(0), int(1), rat(-3, 2)] {
        let f = &x.bracket(&xy) + &y.bracket(&xy).scale(&lambda);
        assert!(shuffle_relations_check(&f).holds());
    }
    let fs = YPoly::parse("y1y1 + y2").unwrap();
    let d = stuffle_relations_check(&fs);
    assert_eq!(d.failures.len(), 1);
    assert_eq!(d.failures[0].value.constant_value(), Some(int(3)));
    let fs = YPoly::parse("y1y1 - 2*y2").unwrap();
    assert!(stuffle_relations_check(&fs).holds());
    assert!(shuffle_relations_check(&NcPoly::zero()).holds());
    assert!(stuffle_relations_check(&YPoly::zero()).holds());
    assert!(!is_in_ds(&NcPoly::zero()));
}

#[test]
fn ds_basis_small_weights() {
    let x = NcPoly::x();
    let y = NcPoly::y();
    let xy = x.bracket(&y);
    let f3 = &x.bracket(&xy) + &xy.bracket(&y);
    let b3 = ds_basis(3).unwrap();
    assert_eq!(b3.len(), 1);
    let lead = b3[0].terms().next().unwrap();
    let scale = lead.1 / f3.coeff(lead.0);
    assert_eq!(b3[0], f3.scale(&scale));
    assert_eq!(ds_basis(4).unwrap().len(), 0);
    for w in 3..=6 {
        let basis = ds_basis(w).unwrap();
        assert_eq!(basis, ds_basis(w).unwrap());
        for f in &basis {
            assert!(is_in_ds(f), "weight {w}: {f}");
            // A nonzero depth-one coefficient forces odd weight.
            let c = f.coeff(&Word::parse(&format!("{}y", "x".repeat(w - 1))).unwrap());
            assert!(c == Rational::from_integer(0.into()) || w % 2 == 1);
        }
    }
    assert!(ds_basis(2).is_err());
}

#[test]
fn c_basis_roundtrip() {
    assert_eq!(c_generator(2), p("xy - yx"));
    let mut g = Generator::new(33);
    for _ in 0..10 {
        let f = g.lie(2, 6).unwrap();
        let c = to_c_basis(&f).unwrap();
        assert!(c.x == int(0));
        assert_eq!(from_c_basis(&c), f);
    }
    let e = to_c_basis(&p("xy")).unwrap_err();
    assert!(e.to_string().contains("yx"));
}

#[test]
fn ma_examples() {
    let m = ma(&c_generator(2), 2).unwrap();
    assert_eq!(m.component(1).to_string(), "-u1");
    let m = ma(&p("yy"), 2).unwrap();
    assert_eq!(m.component(2).to_string(), "1");
    let mut g = Generator::new(34);
    for _ in 0..10 {
        let f = g.lie(2, 6).unwrap();
        let m = ma(&f, 6).unwrap();
        assert!(m.is_polynomial());
        assert!(is_alternal(&m).unwrap().holds());
        assert_eq!(ma_inverse(&m).unwrap(), f);
        assert_eq!(mi(&f, 6).unwrap(), swap(&m).unwrap());
    }
    let bad = Mould::parse_components(flexion::Alphabet::U, &["0", "1/u1"]).unwrap();
    assert!(ma_inverse(&bad).is_err());
}

#[test]
fn ma_is_a_lie_morphism() {
    let mut g = Generator::new(35);
    for _ in 0..5 {
        let f = g.lie(2, 4).unwrap();
        let h = g.lie(2, 4).unwrap();
        assert!(check_ma_homomorphism(&f, &h).unwrap().passed());
    }
    let c2 = c_generator(2);
    let c3 = c_generator(3);
    assert!(check_ma_homomorphism(&c2, &c3).unwrap().passed());
    assert!(check_ma_homomorphism(&c2, &c2).unwrap().passed());
}

#[test]
fn correction_and_transcription() {
    let f = ds_basis(3).unwrap().remove(0);
    let c = f.coeff(&Word::parse("xxy").unwrap());
    let corr = correction_mould(&f, 3).unwrap();
    assert_eq!(corr.component(3).constant_value(), Some(&c / int(3)));
    assert!(check_transcription(&f).unwrap().passed());
    assert!(correction_mould(&p("xy - yx + xxy"), 3).is_err());
    assert!(correction_mould(&p("xyy - yyx"), 3).unwrap().is_zero());
}

#[test]
fn ds_weight_three_classifies() {
    let f = ds_basis(3).unwrap().remove(0);
    let class = classify(&ma(&f, 3).unwrap()).unwrap();
    assert!(class.al_star_il() && class.even, "{class}");
    assert_eq!(class.to_string(), "al*il (underline) verified to depth 3");
}

#[test]
fn odot_adjudication() {
    let mut g = Generator::new(36);
    let samples: Vec<(NcPoly, NcPoly)> = (0..3).map(|_| (g.lie(2, 4).unwrap(), g.lie(2, 4).unwrap())).collect();
    let (rep, passing) = adjudicate_odot(&samples, 4).unwrap();
    assert!(rep.passed(), "{}", rep.to_text());
    assert_eq!(passing, vec![OdotConvention::Right]);
}

#[test]
fn twisted_magnus_group() {
    let mut g = Generator::new(37);
    let f = g.lie(2, 3).unwrap();
    let h = g.lie(2, 3).unwrap();
    let rep = check_group_isomorphism(&f, &h, 5).unwrap();
    assert!(rep.passed(), "{}", rep.to_text());
    let one = NcPoly::one();
    assert_eq!(
        mt_group_mul(&one, &exp_odot(&h, OdotConvention::Right, 5), 5).unwrap(),
        exp_odot(&h, OdotConvention::Right, 5)
    );
    assert!(mt_group_mul(&NcPoly::zero(), &one, 5).is_err());
}

#[test]
fn racinet_closure_small() {
    let rep = check_racinet_closure(3, 3).unwrap();
    assert!(rep.passed(), "{}", rep.to_text());
}
