use flexion::ds::{ds_basis, f_star, NcPoly, YPoly};
use flexion::io::*;
use flexion::random::Generator;
use flexion::special::{pal, B1Convention};
use flexion::Alphabet::{U, V};
use flexion::{Error, Mould};
use proptest::prelude::*;

fn line_of(e: Error) -> usize {
    match e {
        Error::Parse { line, .. } => line,
        other => panic!("expected a parse error, got {other}"),
    }
}

#[test]
fn pal_roundtrip_is_bit_exact() {
    for d in 0..=4 {
        let p = pal(d, B1Convention::Minus).unwrap();
        let text = write_mould(&p);
        let back = read_mould(&text).unwrap();
        assert_eq!(back, p);
        assert_eq!(write_mould(&back), text);
    }
}

#[test]
fn golden_encoding() {
    let text = write_mould(&pal(2, B1Convention::Minus).unwrap());
    let expected = "flexion-mouldfile 1\nmould u 2\ndepth 0 1 0\nterm 1 1\ndepth 1 1 1\nterm -1 2 0\nfactor 1 1\n\
                    depth 2 2 3\nterm 1 6 0 1\nterm 1 12 1 0\nfactor 1 1 0\nfactor 1 0 1\nfactor 1 1 1\nend\n";
    assert_eq!(text, expected);
}

#[test]
fn zero_mould_has_explicit_markers() {
    let text = write_mould(&Mould::zero(V, 2));
    assert_eq!(
        text,
        "flexion-mouldfile 1\nmould v 2\ndepth 0 zero\ndepth 1 zero\ndepth 2 zero\nend\n"
    );
    assert_eq!(read_mould(&text).unwrap(), Mould::zero(V, 2));
    assert_eq!(write_ncpoly(&NcPoly::zero()), "flexion-mouldfile 1\nncpoly zero\nend\n");
}

#[test]
fn polynomials_roundtrip() {
    let mut objs: Vec<Object> = ds_basis(5).unwrap().into_iter().map(Object::from).collect();
    objs.push(NcPoly::parse("2 - 1/3*xy + yyx").unwrap().into());
    objs.push(f_star(&NcPoly::parse("xy - yx").unwrap()).into());
    objs.push(YPoly::zero().into());
    let text = write_objects(&objs);
    assert_eq!(read_objects(&text).unwrap(), objs);
    for o in &objs {
        assert_eq!(&read_object(&write_object(o)).unwrap(), o);
    }
}

#[test]
fn malformed_records_name_the_line() {
    let good = write_mould(&pal(2, B1Convention::Minus).unwrap());
    let with = |from: &str, to: &str| good.replacen(from, to, 1);

    // exponent vector of the wrong length
    assert_eq!(
        line_of(read_mould(&with("term 1 6 0 1", "term 1 6 0 1 0")).unwrap_err()),
        9
    );
    // non-numeric exponent
    assert_eq!(
        line_of(read_mould(&with("term 1 6 0 1", "term 1 6 0 x")).unwrap_err()),
        9
    );
    // unreduced coefficient
    assert_eq!(
        line_of(read_mould(&with("term 1 6 0 1", "term 2 12 0 1")).unwrap_err()),
        9
    );
    // wrong term order
    let swapped = with("term 1 6 0 1\nterm 1 12 1 0", "term 1 12 1 0\nterm 1 6 0 1");
    assert_eq!(line_of(read_mould(&swapped).unwrap_err()), 9);
    // factor that is not normalized
    assert_eq!(
        line_of(read_mould(&with("factor 1 1 1", "factor 1 -1 -1")).unwrap_err()),
        13
    );
    // missing end
    assert!(matches!(
        read_mould(good.trim_end_matches("end\n")),
        Err(Error::Parse { .. })
    ));
    // version
    assert!(matches!(
        read_mould(&with("mouldfile 1", "mouldfile 2")),
        Err(Error::Version(_))
    ));
    // trailing content
    assert_eq!(line_of(read_mould(&format!("{good}end\n")).unwrap_err()), 15);
}

#[test]
fn cancellable_factor_is_rejected() {
    // u1/u1 is not canonical.
    let text = "flexion-mouldfile 1\nmould u 1\ndepth 0 zero\ndepth 1 1 1\nterm 1 1 1\nfactor 1 1\nend\n";
    assert!(matches!(read_mould(text), Err(Error::Parse { line: 4, .. })));
}

#[test]
fn wrong_object_kind() {
    let text = write_ncpoly(&NcPoly::x());
    assert!(read_mould(&text).is_err());
    assert!(read_ncpoly(&text).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn random_moulds_roundtrip(seed in any::<u64>(), depth in 0usize..4, v in any::<bool>()) {
        let mut g = Generator::new(seed);
        let m = g.lfd_mould(if v { V } else { U }, depth).unwrap();
        let text = write_mould(&m);
        let back = read_mould(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(write_mould(&back), text);
    }

    #[test]
    fn random_lie_roundtrip(seed in any::<u64>()) {
        let f = Generator::new(seed).lie(2, 6).unwrap();
        prop_assert_eq!(read_ncpoly(&write_ncpoly(&f)).unwrap(), f);
    }
}
