use crate::error::{Error, Result};
use crate::exact::{Alphabet, Lfd, LinExpr};
use crate::mould::Mould;
use crate::report::VerificationReport;

/// A depth-1 v-function `e(v_1)`, meant to be odd and to satisfy the
/// tripartite identity `e(v1)e(v2) = e(v1-v2)e(v2) + e(v1)e(v2-v1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlexionUnit {
    e: Lfd,
}

impl FlexionUnit {
    pub fn new(e: Lfd) -> Result<Self> {
        if e.alphabet() != Alphabet::V {
            return Err(Error::WrongAlphabet {
                op: "FlexionUnit",
                expected: Alphabet::V,
            });
        }
        if e.n_vars() > 1 {
            return Err(Error::InvalidArgument(format!(
                "flexion unit must depend on v1 only: {e}"
            )));
        }
        Ok(FlexionUnit { e })
    }

    /// `e(v1) = 1/v1`.
    pub fn standard() -> Self {
        FlexionUnit {
            e: Lfd::recip_linear(Alphabet::V, &LinExpr::var(0)).unwrap(),
        }
    }

    pub fn value(&self) -> &Lfd {
        &self.e
    }

    /// `e(l)` for a linear expression `l`.
    pub fn at(&self, l: &LinExpr) -> Result<Lfd> {
        self.e.substitute(Alphabet::V, std::slice::from_ref(l))
    }

    /// Verifies oddness and the tripartite identity.
    pub fn check(&self) -> VerificationReport {
        let mut rep = VerificationReport::new("flexion unit");
        rep.bound("e(v1)", &self.e);
        let v1 = LinExpr::var(0);
        let v2 = LinExpr::var(1);
        let run = || -> Result<(Lfd, Lfd)> {
            let odd = &self.at(&v1)? + &self.at(&v1.neg())?;
            let lhs = &self.at(&v1)? * &self.at(&v2)?;
            let rhs = &(&self.at(&v1.sub(&v2))? * &self.at(&v2)?) + &(&self.at(&v1)? * &self.at(&v2.sub(&v1))?);
            Ok((odd, &lhs - &rhs))
        };
        match run() {
            Ok((odd, tri)) => {
                rep.check_zero("oddness e(v1) + e(-v1) = 0", &odd);
                rep.check_zero("tripartite identity", &tri);
            }
            Err(e) => rep.fail("evaluation", e.to_string()),
        }
        rep
    }
}

/// `ez(v_1..v_r) = e(v_1)⋯e(v_r)`, with `ez(∅) = 1`.
pub fn ez_mould(e: &FlexionUnit, depth: usize) -> Result<Mould> {
    Mould::from_fn(Alphabet::V, depth, |r| {
        let mut acc = Lfd::one(Alphabet::V);
        for i in 0..r {
            acc = &acc * &e.at(&LinExpr::var(i))?;
        }
        Ok(acc)
    })
}

/// `pic(v_1..v_r) = 1/(v_1⋯v_r)`.
pub fn pic(depth: usize) -> Mould {
    ez_mould(&FlexionUnit::standard(), depth).expect("1/v1 is a flexion unit")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_unit_passes() {
        assert!(FlexionUnit::standard().check().passed());
        assert_eq!(pic(2).component(2).to_string(), "1/(v1*v2)");
    }

    #[test]
    fn identity_fails_tripartite() {
        let e = FlexionUnit::new(Lfd::parse("v1", Alphabet::V).unwrap()).unwrap();
        let rep = e.check();
        assert!(!rep.passed());
        assert!(rep.checks[0].passed && !rep.checks[1].passed);
    }
}
