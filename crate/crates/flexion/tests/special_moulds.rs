use flexion::exact::{int, rat, Lfd};
use flexion::gari::adari;
use flexion::mould::{neg, push_symmetrize, swap};
use flexion::random::Generator;
use flexion::special::*;
use flexion::symmetry::is_symmetral;
use flexion::Alphabet::{U, V};
use flexion::Mould;

fn u(s: &str) -> Lfd {
    Lfd::parse(s, U).unwrap()
}

#[test]
fn bernoulli_numbers() {
    let b = bernoulli_table(8, B1Convention::Minus);
    let expected = [
        int(1),
        rat(-1, 2),
        rat(1, 6),
        int(0),
        rat(-1, 30),
        int(0),
        rat(1, 42),
        int(0),
        rat(-1, 30),
    ];
    assert_eq!(b, expected);
    assert_eq!(bernoulli(1, B1Convention::Plus), rat(1, 2));
    assert_eq!(bernoulli(2, B1Convention::Plus), rat(1, 6));
    assert_eq!(bernoulli(0, B1Convention::Plus), int(1));
}

#[test]
fn dupal_components() {
    let d = dupal(4, B1Convention::Minus).unwrap();
    assert!(d.component(0).is_zero());
    assert_eq!(d.component(1), &u("-1/2"));
    assert_eq!(d.component(2), &u("(u1 - u2)/(12*u1*u2)"));
    assert!(d.component(3).is_zero());
    assert_eq!(dupal(1, B1Convention::Plus).unwrap().component(1), &u("1/2"));
}

#[test]
fn pal_values() {
    let p = pal(3, B1Convention::Minus).unwrap();
    assert_eq!(p.component(0), &u("1"));
    assert_eq!(p.component(1), &u("-1/(2*u1)"));
    assert_eq!(p.component(2), &u("(u1 + 2*u2)/(12*u1*u2*(u1 + u2))"));
    assert_eq!(p.component(3), &u("-1/(24*u1*u3*(u1 + u2))"));
    let p = pal(2, B1Convention::Plus).unwrap();
    assert_eq!(p.component(1), &u("1/(2*u1)"));
    assert_eq!(p.component(2), &u("(u1 + 2*u2)/(12*u1*u2*(u1 + u2))"));
}

#[test]
fn pal_recursion_by_hand() {
    // u1 pal(u1) = dupal(u1), (u1+u2) pal(u1,u2) = pal(u1) dupal(u2) + dupal(u1,u2).
    let c = PalCache::new(2, B1Convention::Minus).unwrap();
    let p = c.pal();
    let d = c.dupal();
    assert_eq!(&(p.component(1) * &u("u1")), d.component(1));
    let lhs = p.component(2) * &u("u1 + u2");
    let rhs = &(p.component(1) * &u("-1/2")) + d.component(2);
    assert_eq!(lhs, rhs);
    assert!(c.verify().unwrap());
}

#[test]
fn pal_and_pil_are_symmetral() {
    for conv in [B1Convention::Minus, B1Convention::Plus] {
        let rep = check_pal_symmetrality(4, conv).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
    }
    let pil = pil(3, B1Convention::Minus).unwrap();
    assert_eq!(pil.alphabet(), V);
    assert_eq!(swap(&pil).unwrap(), pal(3, B1Convention::Minus).unwrap());
    // The two conventions differ by neg.
    let minus = pal(4, B1Convention::Minus).unwrap();
    assert_eq!(neg(&minus).unwrap(), pal(4, B1Convention::Plus).unwrap());
    let mut p = minus.truncate(2);
    p.set_component(2, p.component(2).scale(&int(2))).unwrap();
    assert!(!is_symmetral(&p).unwrap().holds());
}

#[test]
fn fundamental_identity_depth_three() {
    let mut g = Generator::new(41);
    for _ in 0..2 {
        let a = push_symmetrize(&g.lfd_mould(U, 3).unwrap()).unwrap();
        assert!(is_push_invariant(&a).unwrap());
        let rep = check_fundamental_identity(&a, B1Convention::Minus).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
    }
    let rep = check_fundamental_identity(&Mould::zero(U, 3), B1Convention::Minus).unwrap();
    assert!(rep.passed());
}

#[test]
fn plus_convention_breaks_the_identities() {
    let mut g = Generator::new(44);
    let a = push_symmetrize(&g.lfd_mould(U, 2).unwrap()).unwrap();
    assert!(!check_fundamental_identity(&a, B1Convention::Plus).unwrap().passed());
    assert!(!check_constant_fixed_points(&constant_cases(2), B1Convention::Plus)
        .unwrap()
        .passed());
    assert!(!check_dar_dupal_series(2, B1Convention::Plus).unwrap().passed());
}

#[test]
fn fundamental_identity_needs_push_invariance() {
    let mut g = Generator::new(42);
    let a = g.lfd_mould(U, 3).unwrap();
    let rep = check_fundamental_identity(&a, B1Convention::Minus).unwrap();
    assert!(rep.to_text().contains("not push-invariant"));
}

#[test]
fn constants_are_fixed() {
    let rep = check_constant_fixed_points(&constant_cases(4), B1Convention::Minus).unwrap();
    assert!(rep.passed(), "{}", rep.to_text());
    let c = Mould::constant(U, &[int(0), int(2), rat(-1, 3), int(5)]);
    let p = pal(3, B1Convention::Minus).unwrap();
    assert_eq!(adari(&p, &c).unwrap(), c);
}

#[test]
fn adari_pal_round_trip() {
    let mut g = Generator::new(43);
    let a = g.lfd_mould(U, 3).unwrap();
    let (rep, _) = check_adari_pal_roundtrip(&a, B1Convention::Minus).unwrap();
    assert!(rep.passed(), "{}", rep.to_text());
    let fwd = adari_pal_map(&a, Direction::Forward, B1Convention::Minus).unwrap();
    assert_eq!(fwd.component(1), a.component(1));
}

#[test]
fn dar_dupal_matches_series() {
    let rep = check_dar_dupal_series(4, B1Convention::Minus).unwrap();
    assert!(rep.passed(), "{}", rep.to_text());
}
