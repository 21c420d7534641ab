//! Parser for rational expressions such as `(u1 + 2*u2)/(12*u1*u2*(u1 + u2))`.
//! Divisors must be products of constants and linear forms.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Alphabet, Lfd, LinExpr, Poly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(Alphabet, usize),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let err = |msg: String| Error::Parse { line: 1, msg };
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Num(t.parse().map_err(|_| err(format!("bad integer {t}")))?));
        } else if c == 'u' || c == 'v' {
            i += 1;
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            let idx: usize = t.parse().map_err(|_| err(format!("bad variable {c}{t}")))?;
            if idx == 0 {
                return Err(err(format!("variable indices start at 1: {c}0")));
            }
            out.push(Tok::Var(Alphabet::parse(&c.to_string()).unwrap(), idx - 1));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(err(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

#[derive(Debug)]
enum Ast {
    Num(BigInt),
    Var(usize),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            line: 1,
            msg: format!("{msg} at token {}", self.pos + 1),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Ast::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Ast> {
        if self.eat('-') {
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    return Ok(Ast::Pow(Box::new(base), e));
                }
                _ => return Err(self.err("expected an integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Ast::Num(n))
            }
            Some(Tok::Var(_, i)) => {
                self.pos += 1;
                Ok(Ast::Var(i))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}

fn eval(ast: &Ast, a: Alphabet) -> Result<Lfd> {
    Ok(match ast {
        Ast::Num(n) => Lfd::constant(a, Rational::from_integer(n.clone())),
        Ast::Var(i) => Lfd::from_poly(Poly::var(a, *i)),
        Ast::Add(x, y) => eval(x, a)?.checked_add(&eval(y, a)?)?,
        Ast::Sub(x, y) => eval(x, a)?.checked_sub(&eval(y, a)?)?,
        Ast::Mul(x, y) => eval(x, a)?.checked_mul(&eval(y, a)?)?,
        Ast::Neg(x) => -&eval(x, a)?,
        Ast::Pow(x, e) => {
            let b = eval(x, a)?;
            let mut acc = Lfd::one(a);
            for _ in 0..*e {
                acc = acc.checked_mul(&b)?;
            }
            acc
        }
        Ast::Div(x, y) => {
            let mut acc = eval(x, a)?;
            for (f, e) in factors(y) {
                let v = eval(f, a)?;
                for _ in 0..e {
                    acc = divide(&acc, &v)?;
                }
            }
            acc
        }
    })
}

fn factors(ast: &Ast) -> Vec<(&Ast, u32)> {
    match ast {
        Ast::Mul(x, y) => {
            let mut v = factors(x);
            v.extend(factors(y));
            v
        }
        Ast::Pow(x, e) => factors(x).into_iter().map(|(f, k)| (f, k * e)).collect(),
        _ => vec![(ast, 1)],
    }
}

fn divide(x: &Lfd, d: &Lfd) -> Result<Lfd> {
    let inv_err = || Error::Parse {
        line: 1,
        msg: format!("cannot divide by `{d}`: divisors must be products of linear forms"),
    };
    if d.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let n = d.numerator();
    let mut out = x.clone();
    for (f, m) in d.denominator() {
        let p = Poly::from_form(f);
        for _ in 0..m {
            out = out.mul_poly(&p);
        }
    }
    if let Some(c) = n.constant_value() {
        return Ok(out.scale(&c.recip()));
    }
    if n.terms().any(|(m, _)| m.degree() != 1) {
        return Err(inv_err());
    }
    let nv = n.n_vars();
    let mut coeffs = vec![Rational::zero(); nv];
    for (m, c) in n.terms() {
        let i = m.exponents().iter().position(|&e| e == 1).unwrap();
        coeffs[i] = c.clone();
    }
    // scale to integer coefficients
    let l = coeffs
        .iter()
        .fold(BigInt::one(), |l, c| num_integer::lcm(l, c.denom().clone()));
    let ints: Vec<i64> = coeffs
        .iter()
        .map(|c| {
            (c * Rational::from_integer(l.clone()))
                .to_integer()
                .try_into()
                .map_err(|_| inv_err())
        })
        .collect::<Result<_>>()?;
    let q = out.div_linear(&LinExpr::from_coeffs(&ints))?;
    Ok(q.scale(&Rational::from_integer(l)))
}

impl Lfd {
    /// Parses a rational expression; the alphabet comes from the variables
    /// used, or `default` when there are none.
    pub fn parse(s: &str, default: Alphabet) -> Result<Lfd> {
        let toks = lex(s)?;
        let mut alph = None;
        for t in &toks {
            if let Tok::Var(a, _) = t {
                if alph.is_some_and(|b| b != *a) {
                    return Err(Error::Parse {
                        line: 1,
                        msg: "expression mixes u and v variables".into(),
                    });
                }
                alph = Some(*a);
            }
        }
        let mut p = Parser { toks, pos: 0 };
        let ast = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(p.err("trailing input"));
        }
        eval(&ast, alph.unwrap_or(default))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_displayed_values() {
        let x = Lfd::parse("(u1+2*u2)/(12*u1*u2*(u1+u2))", Alphabet::U).unwrap();
        assert_eq!(x.to_string(), "(u1 + 2*u2)/(12*u1*u2*(u1 + u2))");
        let y = Lfd::parse("-1/(24*u1*u3*(u1+u2))", Alphabet::U).unwrap();
        assert_eq!(y.to_string(), "-1/(24*u1*u3*(u1 + u2))");
        let z = Lfd::parse("(v1^2 - v2^2)/(v1 - v2)", Alphabet::U).unwrap();
        assert_eq!(z.to_string(), "v1 + v2");
        let w = Lfd::parse("1/(2*v1 - 4*v2)^2", Alphabet::U).unwrap();
        assert_eq!(w.to_string(), "1/(4*(v1 - 2*v2)^2)");
        assert_eq!(Lfd::parse("3/6", Alphabet::V).unwrap().to_string(), "1/2");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Lfd::parse("1/(u1^2+u2^2)", Alphabet::U).is_err());
        assert!(Lfd::parse("u1 + v1", Alphabet::U).is_err());
        assert!(Lfd::parse("(u1", Alphabet::U).is_err());
        assert!(Lfd::parse("u0", Alphabet::U).is_err());
        assert!(matches!(Lfd::parse("1/(u1-u1)", Alphabet::U), Err(Error::ZeroDivisor)));
    }
}
