//! Named verification suites.

use rayon::prelude::*;

use crate::ds::{
    check_derivation_identity, check_ma_homomorphism, check_racinet_closure, check_transcription, ds_basis, ma, NcPoly,
};
use crate::error::{Error, Result};
use crate::exact::Alphabet::{U, V};
use crate::gari::{compare_adari, compare_ganit, ganit_explicit};
use crate::mould::{ari, arit, lu, mantar, neg, push, swap, swap_ari_identity_check, Mould};
use crate::random::Generator;
use crate::report::VerificationReport;
use crate::special::{
    adari_pal_map, check_adari_pal_roundtrip, check_constant_fixed_points, check_dar_dupal_series,
    check_fundamental_identity, check_pal_symmetrality, constant_cases, B1Convention, Direction,
};
use crate::symmetry::{
    alternility_sum, classify, e_alternality_sum, invariance_checks, is_alternal, is_alternil, pic, FlexionUnit,
};

pub const SUITES: &[&str] = &[
    "theorem-3.1",
    "prop-3.4",
    "prop-6.2",
    "fundamental-identity",
    "lemma-7.1",
    "theorem-7.2",
    "racinet-closure",
    "appendix-A",
    "appendix-B",
    "ganit-consistency",
    "adari-consistency",
    "dar-dupal",
    "pal-symmetrality",
    "swap-ari-identity",
    "dictionary",
];

/// Inputs of a suite run. Equal specs give byte-identical reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteSpec {
    pub name: String,
    pub seed: u64,
    pub cases: usize,
    pub depth: usize,
    /// Weight bound for polynomial inputs.
    pub weight: usize,
    pub b1: B1Convention,
}

impl SuiteSpec {
    /// Settings with the suite's default bounds.
    pub fn new(name: &str) -> Result<SuiteSpec> {
        if !SUITES.contains(&name) {
            return Err(Error::UnknownSuite(name.to_string()));
        }
        let (cases, depth, weight) = match name {
            "theorem-3.1" | "appendix-A" => (20, 4, 8),
            "appendix-B" => (20, 4, 6),
            "prop-3.4" => (3, 5, 5),
            "prop-6.2" => (10, 4, 6),
            "fundamental-identity" => (10, 3, 0),
            "lemma-7.1" | "pal-symmetrality" | "dar-dupal" => (5, 4, 0),
            "theorem-7.2" => (5, 3, 3),
            "racinet-closure" => (0, 0, 8),
            "dictionary" => (10, 0, 4),
            _ => (10, 3, 0),
        };
        Ok(SuiteSpec {
            name: name.to_string(),
            seed: 0,
            cases,
            depth,
            weight,
            b1: B1Convention::default(),
        })
    }
}

fn start(spec: &SuiteSpec) -> VerificationReport {
    let mut rep = VerificationReport::new(spec.name.clone()).with_conventions(spec.b1.conventions());
    rep.bound("seed", spec.seed)
        .bound("cases", spec.cases)
        .bound("depth", spec.depth);
    rep
}

fn absorb_all(rep: &mut VerificationReport, parts: Vec<VerificationReport>) {
    for p in parts {
        rep.absorb(p);
    }
}

fn alternal_inputs(g: &mut Generator, n: usize, depth: usize, weight: usize) -> Result<Vec<(Mould, Mould)>> {
    (0..n)
        .map(|_| Ok((g.alternal(depth, weight)?, g.alternal(depth, weight)?)))
        .collect()
}

fn alternal_report(label: String, m: &Mould) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(label);
    let d = is_alternal(m)?;
    rep.check("alternal", d.holds(), (!d.holds()).then(|| d.summary()));
    Ok(rep)
}

/// Alternality of `lu`, `arit` and/or `ari` on seeded alternal pairs, in
/// both alphabets. The v-alphabet inputs are the same moulds read in `v`.
fn alternality_suite(spec: &SuiteSpec, ops: &[&'static str]) -> Result<VerificationReport> {
    let mut rep = start(spec);
    rep.bound("weight", spec.weight);
    rep.note("v-alphabet inputs", "the u-inputs relabelled u_i -> v_i");
    let mut g = Generator::new(spec.seed);
    let inputs = alternal_inputs(&mut g, spec.cases, spec.depth, spec.weight)?;
    let parts = inputs
        .par_iter()
        .enumerate()
        .map(|(i, (a, b))| {
            let mut rep = VerificationReport::new(format!("case {i}"));
            for (al, a, b) in [(U, a.clone(), b.clone()), (V, a.with_alphabet(V), b.with_alphabet(V))] {
                for op in ops {
                    let out = match *op {
                        "lu" => lu(&a, &b)?,
                        "arit" => arit(&b, &a)?,
                        _ => ari(&a, &b)?,
                    };
                    rep.absorb(alternal_report(format!("{al}: {op}"), &out)?);
                }
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    absorb_all(&mut rep, parts);
    Ok(rep)
}

fn appendix_b(spec: &SuiteSpec) -> Result<VerificationReport> {
    let mut rep = start(spec);
    rep.bound("weight", spec.weight);
    let mut g = Generator::new(spec.seed);
    let alt_depth = spec.depth + 1;
    rep.bound("alternal depth", alt_depth);
    let alternals = (0..spec.cases)
        .map(|_| g.alternal(alt_depth, spec.weight))
        .collect::<Result<Vec<_>>>()?;
    let randoms = (0..spec.cases)
        .map(|_| g.lfd_mould(U, spec.depth))
        .collect::<Result<Vec<_>>>()?;
    let parts = alternals
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            let mut rep = VerificationReport::new(format!("alternal {i}"));
            rep.check_moulds("mantar-invariant", &mantar(a)?, a);
            let v = a.with_alphabet(V);
            rep.check_moulds("mantar-invariant (v)", &mantar(&v)?, &v);
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    absorb_all(&mut rep, parts);
    let parts = randoms
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            let mut rep = VerificationReport::new(format!("random {i}"));
            let lhs = neg(&push(a)?)?;
            let rhs = mantar(&swap(&mantar(&swap(a)?)?)?)?;
            rep.check_moulds("neg∘push = mantar∘swap∘mantar∘swap", &lhs, &rhs);
            let mut p = a.clone();
            let mut powers = vec![a.clone()];
            for _ in 0..=a.max_depth() {
                p = push(&p)?;
                powers.push(p.clone());
            }
            for r in 0..=a.max_depth() {
                rep.check(
                    format!("push^{} = id at depth {r}", r + 1),
                    powers[r + 1].component(r) == a.component(r),
                    None,
                );
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    absorb_all(&mut rep, parts);
    Ok(rep)
}

/// Images of ds elements under `adari(invgari(pal))`: these are al*al and
/// must be neg- and push-invariant.
fn prop_3_4(spec: &SuiteSpec) -> Result<VerificationReport> {
    let mut rep = start(spec);
    rep.bound("weight", spec.weight);
    let mut g = Generator::new(spec.seed);
    for w in 3..=spec.weight.max(3) {
        let basis = ds_basis(w)?;
        rep.note(format!("dim ds_{w}"), basis.len().to_string());
        if w > spec.depth {
            continue;
        }
        for (i, f) in basis.iter().enumerate() {
            let a = adari_pal_map(&ma(f, spec.depth)?, Direction::Inverse, spec.b1)?;
            let mut part = invariance_checks(&a)?;
            part.name = format!("ds_{w}[{i}]");
            let class = classify(&a)?;
            part.check("al*al", class.al_star_al(), Some(class.to_string()));
            rep.absorb(part);
        }
    }
    for i in 0..spec.cases {
        let c = g.constant(U, spec.depth);
        rep.check_moulds(format!("constant {i}: push-invariant"), &push(&c)?, &c);
    }
    Ok(rep)
}

fn prop_6_2(spec: &SuiteSpec) -> Result<VerificationReport> {
    let mut rep = start(spec);
    rep.bound("weight", spec.weight);
    rep.note("inputs", "ma of random Lie polynomials, relabelled u_i -> v_i");
    let mut g = Generator::new(spec.seed);
    let inputs = (0..spec.cases)
        .map(|_| Ok(g.alternal(spec.depth, spec.weight)?.with_alphabet(V)))
        .collect::<Result<Vec<_>>>()?;
    let e = FlexionUnit::standard();
    let pc = pic(spec.depth);
    let parts = inputs
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            let mut rep = VerificationReport::new(format!("case {i}"));
            let alt = is_alternal(a)?;
            rep.check("input alternal", alt.holds(), None);
            let c = ganit_explicit(&pc, a)?;
            let d = is_alternil(&c, false)?;
            rep.check("ganit(pic)·A alternil", d.holds(), (!d.holds()).then(|| d.summary()));
            for total in 2..=spec.depth {
                for r in 1..=total / 2 {
                    let s = total - r;
                    let plain = alternility_sum(&c, r, s)?;
                    let twisted = e_alternality_sum(&c, &e, r, s)?;
                    rep.check(
                        format!("e-alternality = alternility termwise ({r},{s})"),
                        plain == twisted,
                        None,
                    );
                }
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    absorb_all(&mut rep, parts);
    Ok(rep)
}

fn fundamental(spec: &SuiteSpec) -> Result<VerificationReport> {
    let mut rep = start(spec);
    let const_depth = spec.depth + 1;
    rep.bound("constant depth", const_depth);
    let mut g = Generator::new(spec.seed);
    let mut inputs = (0..spec.cases)
        .map(|_| g.push_invariant(spec.depth))
        .collect::<Result<Vec<_>>>()?;
    let n_random = inputs.len();
    inputs.extend(
        constant_cases(const_depth)
            .into_iter()
            .map(|c| c.with_alphabet(U))
            .filter(|c| c.in_ari()),
    );
    inputs.extend((0..spec.cases).map(|_| g.constant(U, const_depth)));
    let parts = inputs
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            let mut part = check_fundamental_identity(a, spec.b1)?;
            part.name = if i < n_random {
                format!("push-invariant {i}")
            } else {
                format!("constant {}", i - n_random)
            };
            Ok(part)
        })
        .collect::<Result<Vec<_>>>()?;
    absorb_all(&mut rep, parts);
    Ok(rep)
}

fn lemma_7_1(spec: &SuiteSpec) -> Result<VerificationReport> {
    let mut rep = start(spec);
    let mut g = Generator::new(spec.seed);
    let mut cases = constant_cases(spec.depth);
    cases.extend((0..spec.cases).map(|_| g.constant(V, spec.depth)));
    let mut part = check_constant_fixed_points(&cases, spec.b1)?;
    part.name = "constant moulds".into();
    rep.absorb(part);
    Ok(rep)
}

fn theorem_7_2(spec: &SuiteSpec) -> Result<VerificationReport> {
    let mut rep = start(spec);
    rep.bound("weight", spec.weight);
    let mut g = Generator::new(spec.seed);
    let inputs = (0..spec.cases)
        .map(|_| g.lfd_mould(U, spec.depth))
        .collect::<Result<Vec<_>>>()?;
    let parts = inputs
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            let (mut part, _) = check_adari_pal_roundtrip(a, spec.b1)?;
            part.name = format!("random {i}");
            Ok(part)
        })
        .collect::<Result<Vec<_>>>()?;
    absorb_all(&mut rep, parts);
    let w = spec.weight.max(3);
    for (i, f) in ds_basis(w)?.iter().enumerate() {
        let depth = spec.depth.max(w);
        let al_il = ma(f, depth)?;
        let pre = adari_pal_map(&al_il, Direction::Inverse, spec.b1)?;
        let class_pre = classify(&pre)?;
        rep.check(
            format!("ds_{w}[{i}]: inverse image al*al"),
            class_pre.al_star_al(),
            Some(class_pre.to_string()),
        );
        let image = adari_pal_map(&pre, Direction::Forward, spec.b1)?;
        rep.check_moulds(format!("ds_{w}[{i}]: forward(inverse(ma f)) = ma f"), &image, &al_il);
        let class = classify(&image)?;
        rep.check(
            format!("ds_{w}[{i}]: forward image al*il (underline)"),
            class.al_star_il() && class.even,
            Some(class.to_string()),
        );
    }
    Ok(rep)
}

fn racinet(spec: &SuiteSpec) -> Result<VerificationReport> {
    let mut rep = start(spec);
    rep.bound("weight", spec.weight);
    let mut pairs = Vec::new();
    for w1 in 3..=spec.weight / 2 {
        for w2 in w1..=spec.weight - w1 {
            pairs.push((w1, w2));
        }
    }
    let parts = pairs
        .par_iter()
        .map(|&(w1, w2)| {
            let mut part = check_racinet_closure(w1, w2)?;
            part.name = format!("({w1},{w2})");
            Ok(part)
        })
        .collect::<Result<Vec<_>>>()?;
    for w in 3..=spec.weight.saturating_sub(3) {
        rep.note(format!("dim ds_{w}"), ds_basis(w)?.len().to_string());
    }
    absorb_all(&mut rep, parts);
    Ok(rep)
}

fn consistency(spec: &SuiteSpec, ganit: bool) -> Result<VerificationReport> {
    let mut rep = start(spec);
    let mut g = Generator::new(spec.seed);
    let mut inputs = Vec::new();
    for _ in 0..spec.cases {
        if ganit {
            inputs.push((g.gari_mould(V, spec.depth)?, g.lfd_mould(V, spec.depth)?));
        } else {
            let al = if inputs.len() % 2 == 0 { U } else { V };
            inputs.push((g.gari_mould(al, spec.depth)?, g.lfd_mould(al, spec.depth)?));
        }
    }
    let parts = inputs
        .par_iter()
        .enumerate()
        .map(|(i, (a, b))| {
            let mut part = if ganit {
                compare_ganit(a, b)?
            } else {
                compare_adari(a, b)?
            };
            part.name = format!("case {i} ({})", a.alphabet());
            Ok(part)
        })
        .collect::<Result<Vec<_>>>()?;
    absorb_all(&mut rep, parts);
    Ok(rep)
}

fn swap_ari(spec: &SuiteSpec) -> Result<VerificationReport> {
    let mut rep = start(spec);
    let mut g = Generator::new(spec.seed);
    let inputs = (0..spec.cases)
        .map(|_| Ok((g.lfd_mould(U, spec.depth)?, g.lfd_mould(U, spec.depth)?)))
        .collect::<Result<Vec<_>>>()?;
    let parts = inputs
        .par_iter()
        .enumerate()
        .map(|(i, (a, b))| {
            let mut part = swap_ari_identity_check(a, b)?;
            part.name = format!("case {i}");
            Ok(part)
        })
        .collect::<Result<Vec<_>>>()?;
    absorb_all(&mut rep, parts);
    Ok(rep)
}

fn dictionary(spec: &SuiteSpec) -> Result<VerificationReport> {
    let mut rep = start(spec);
    rep.bound("weight", spec.weight);
    let mut g = Generator::new(spec.seed);
    let inputs = (0..spec.cases)
        .map(|_| Ok((g.lie(2, spec.weight)?, g.lie(2, spec.weight)?)))
        .collect::<Result<Vec<(NcPoly, NcPoly)>>>()?;
    let parts = inputs
        .par_iter()
        .enumerate()
        .map(|(i, (f, h))| {
            let mut part = check_ma_homomorphism(f, h)?;
            part.name = format!("pair {i}");
            Ok(part)
        })
        .collect::<Result<Vec<_>>>()?;
    absorb_all(&mut rep, parts);
    let (x, y) = (NcPoly::x(), NcPoly::y());
    let mut part = check_derivation_identity(&x, &y);
    part.name = "derivations on generators".into();
    rep.absorb(part);
    for (i, f) in ds_basis(3)?.iter().enumerate() {
        let mut part = check_transcription(f)?;
        part.name = format!("ds_3[{i}]");
        rep.absorb(part);
    }
    Ok(rep)
}

pub fn run_suite(spec: &SuiteSpec) -> Result<VerificationReport> {
    match spec.name.as_str() {
        "theorem-3.1" => alternality_suite(spec, &["ari"]),
        "appendix-A" => alternality_suite(spec, &["lu", "arit", "ari"]),
        "appendix-B" => appendix_b(spec),
        "prop-3.4" => prop_3_4(spec),
        "prop-6.2" => prop_6_2(spec),
        "fundamental-identity" => fundamental(spec),
        "lemma-7.1" => lemma_7_1(spec),
        "theorem-7.2" => theorem_7_2(spec),
        "racinet-closure" => racinet(spec),
        "ganit-consistency" => consistency(spec, true),
        "adari-consistency" => consistency(spec, false),
        "dar-dupal" => {
            let mut rep = start(spec);
            rep.absorb(check_dar_dupal_series(spec.depth, spec.b1)?);
            Ok(rep)
        }
        "pal-symmetrality" => {
            let mut rep = start(spec);
            rep.absorb(check_pal_symmetrality(spec.depth, spec.b1)?);
            Ok(rep)
        }
        "swap-ari-identity" => swap_ari(spec),
        "dictionary" => dictionary(spec),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}
