use flexion::exact::Alphabet::{U, V};
use flexion::mould::*;
use flexion::{Lfd, Mould};

fn m(al: Alphabet, comps: &[&str]) -> Mould {
    Mould::parse_components(al, comps).unwrap()
}

fn lfd(s: &str) -> Lfd {
    Lfd::parse(s, U).unwrap()
}

// depth-1 concentrated test moulds A(u1) = f(u1), B(u1) = g(u1)
fn a1(al: Alphabet) -> Mould {
    let x = if al == U { "u1" } else { "v1" };
    m(al, &["0", &format!("1/{x}"), "0", "0"])
}

fn b1(al: Alphabet) -> Mould {
    let x = if al == U { "u1" } else { "v1" };
    m(al, &["0", &format!("{x}^2 + 3"), "0", "0"])
}

#[test]
fn unary_examples() {
    let a = m(U, &["5", "(u1^2 + 3)/u1", "u1/(u2 + 2*u1)"]);
    let p = push(&a).unwrap();
    assert_eq!(p.component(0), a.component(0));
    assert_eq!(p.component(1), &lfd("-(u1^2+3)/u1"));
    assert_eq!(p.component(2), &lfd("-(u1+u2)/(u1 - 2*u1 - 2*u2)"));
    let mt = mantar(&a).unwrap();
    assert_eq!(mt.component(2), &lfd("-u2/(u1 + 2*u2)"));
    let pal1 = m(U, &["1", "1/(2*u1)"]);
    assert_eq!(dar(&pal1).unwrap().component(1), &lfd("1/2"));
    assert!(matches!(
        neg(&a.with_alphabet(V)),
        Err(flexion::Error::WrongAlphabet { .. })
    ));
    assert!(mantar(&a.with_alphabet(V)).is_ok());
}

#[test]
fn swap_examples() {
    let a = m(U, &["0", "1/(2*u1)"]);
    assert_eq!(swap(&a).unwrap().component(1), &Lfd::parse("1/(2*v1)", V).unwrap());
    let pal2 = m(U, &["1", "-1/(2*u1)", "(u1+2*u2)/(12*u1*u2*(u1+u2))"]);
    let pil = swap(&pal2).unwrap();
    assert_eq!(pil.alphabet(), V);
    // u1 -> v2, u2 -> v1 - v2
    let expect = Lfd::parse("(v2 + 2*(v1 - v2))/(12*v2*(v1 - v2)*v1)", V).unwrap();
    assert_eq!(pil.component(2), &expect);
    assert_eq!(swap(&pil).unwrap(), pal2);
}

#[test]
fn mu_and_lu_examples() {
    for al in [U, V] {
        let (a, b) = (a1(al), b1(al));
        let unit = Mould::unit(al, 3);
        assert_eq!(mu(&unit, &a).unwrap(), a);
        assert!(mu(&a, &b).unwrap().component(1).is_zero());
        let l = lu(&a, &b).unwrap();
        let x = if al == U { "u" } else { "v" };
        let expect = Lfd::parse(&format!("1/{x}1*({x}2^2+3) - ({x}1^2+3)/{x}2"), al).unwrap();
        assert_eq!(l.component(2), &expect);
        assert!(lu(&a, &a).unwrap().is_zero());
        assert_eq!(lu(&b, &a).unwrap(), l.neg_values());
    }
    let pal = m(U, &["1", "-1/(2*u1)"]);
    let dupal = m(U, &["0", "-1/2"]);
    assert_eq!(mu(&pal, &dupal).unwrap().component(1), &lfd("-1/2"));
}

#[test]
fn amit_anit_u_examples() {
    let (a, b) = (a1(U), b1(U));
    assert_eq!(amit(&b, &a).unwrap().component(2), &lfd("(u1^2+3)/(u1+u2)"));
    assert_eq!(anit(&b, &a).unwrap().component(2), &lfd("(u2^2+3)/(u1+u2)"));
    assert!(amit(&b, &a).unwrap().component(1).is_zero());
    assert!(anit(&b, &a).unwrap().component(1).is_zero());
    assert_eq!(arit(&b, &a).unwrap().component(2), &lfd("(u1^2 - u2^2)/(u1+u2)"));
    let c = m(U, &["0", "7*u1", "0", "0"]);
    assert_eq!(
        axit(&b, &c, &a).unwrap().component(2),
        &lfd("(u1^2 + 3 + 7*u2)/(u1+u2)")
    );
    let p = preari(&a, &b).unwrap();
    assert_eq!(p.component(2), &lfd("(u1^2 - u2^2)/(u1+u2) + (u2^2+3)/u1"));
}

#[test]
fn amit_anit_v_examples() {
    let (a, b) = (a1(V), b1(V));
    let v = |s: &str| Lfd::parse(s, V).unwrap();
    // amit: a = (), b = (v1), c = (v2): A(v2) B(v1 - v2)
    assert_eq!(amit(&b, &a).unwrap().component(2), &v("((v1-v2)^2+3)/v2"));
    // anit: a = (v1), b = (v2), c = (): A(v1) B(v2 - v1)
    assert_eq!(anit(&b, &a).unwrap().component(2), &v("((v2-v1)^2+3)/v1"));
}

#[test]
fn constant_mould_rules() {
    let a = m(U, &["0", "1/u1", "u1/(u1+u2)", "u3"]);
    let c = Mould::constant(
        U,
        &[0.into(), 2.into(), 3.into(), 5.into()].map(flexion::Rational::from_integer),
    );
    assert!(arit(&c, &a).unwrap().is_zero());
    assert_eq!(arit(&a, &c).unwrap(), lu(&a, &c).unwrap());
    assert!(ari(&a, &c).unwrap().is_zero());
}

#[test]
fn ari_on_ari_moulds_kills_depth_one() {
    let a = m(U, &["0", "1/u1", "u1/(u1+u2)", "u3"]);
    let b = m(U, &["0", "u1^2", "1/(u1-u2)", "1"]);
    let r = ari(&a, &b).unwrap();
    assert!(r.component(1).is_zero());
    assert!(ari(&a, &a).unwrap().is_zero());
    assert_eq!(ari(&b, &a).unwrap(), r.neg_values());
}

#[test]
fn identity_3_2_on_samples() {
    let a = m(U, &["0", "1/u1", "u1/(u1+u2)", "u3/(u1+u2+u3)"]);
    let b = m(U, &["0", "u1^2", "1/(u1-u2)", "1/u2"]);
    let rep = swap_ari_identity_check(&a, &b).unwrap();
    assert!(rep.passed(), "{}", rep.to_text());
}
