//! Laurent polynomials in one distinguished variable with rational-function
//! coefficients in the remaining ones.

use std::collections::BTreeMap;
use std::fmt;

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::var::Var;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    var: Var,
    terms: BTreeMap<i64, RatFunc>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> LaurentPoly {
        LaurentPoly {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(var: Var, terms: BTreeMap<i64, RatFunc>) -> LaurentPoly {
        let mut l = LaurentPoly { var, terms };
        l.terms.retain(|_, c| !c.is_zero());
        l
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &RatFunc)> {
        self.terms.iter()
    }

    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let lo = *self.terms.keys().next()?;
        let hi = *self.terms.keys().next_back()?;
        Some((lo, hi))
    }

    /// Interprets a rational function whose denominator is a pure monomial
    /// in `var` (times a `var`-free polynomial) as a Laurent polynomial.
    /// Returns `None` when the function genuinely has a non-monomial pole
    /// in `var`.
    pub fn from_ratfunc(f: &RatFunc, var: Var) -> Option<LaurentPoly> {
        let den_coeffs = f.den().coeffs_in(var);
        let nonzero: Vec<(usize, &Poly)> = den_coeffs
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .collect();
        if nonzero.len() != 1 {
            return None;
        }
        let (shift, divisor) = nonzero[0];
        let divisor = RatFunc::from_poly((*divisor).clone());
        let num_coeffs = f.num().coeffs_in(var);
        let mut terms = BTreeMap::new();
        for (e, c) in num_coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = RatFunc::from_poly(c).div(&divisor).ok()?;
            if coeff.vars().contains(var) {
                return None;
            }
            terms.insert(e as i64 - shift as i64, coeff);
        }
        Some(LaurentPoly { var, terms })
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (e, c) in &self.terms {
            let pow = RatFunc::var(self.var).pow(*e).expect("variable is invertible");
            acc = acc.add(&c.mul(&pow));
        }
        acc
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.var, other.var);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(*e).or_insert_with(RatFunc::zero);
            *entry = entry.add(c);
        }
        LaurentPoly::from_terms(self.var, terms)
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.var, other.var);
        let mut terms: BTreeMap<i64, RatFunc> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                let prod = ca.mul(cb);
                let entry = terms.entry(e).or_insert_with(RatFunc::zero);
                *entry = entry.add(&prod);
            }
        }
        LaurentPoly::from_terms(self.var, terms)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*{}", self.var)?,
                _ => write!(f, "({c})*{}^{}", self.var, e)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_ratfunc;

    #[test]
    fn ratfunc_to_laurent() {
        let f = parse_ratfunc("(T2^3+2*T2-1)/(T2^2)").unwrap();
        let l = LaurentPoly::from_ratfunc(&f, Var::CapT2).unwrap();
        assert_eq!(l.degree_range(), Some((-2, 1)));
        assert_eq!(l.to_ratfunc(), f);
    }

    #[test]
    fn true_pole_rejected() {
        let f = parse_ratfunc("1/(T2-1)").unwrap();
        assert!(LaurentPoly::from_ratfunc(&f, Var::CapT2).is_none());
    }
}
