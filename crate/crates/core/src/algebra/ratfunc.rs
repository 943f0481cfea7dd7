//! Normalized rational functions: the exact scalar type of all symbolic
//! matrices.
//!
//! Invariants: the denominator is nonzero, coprime to the numerator
//! (multivariate gcd divided out), and monic under graded-lex order, so
//! structural equality is semantic equality.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::gcd::poly_gcd;
use super::poly::{Poly, Rat};
use super::var::{Var, VarSet};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(Poly::one())
    }

    pub fn int(n: i64) -> RatFunc {
        RatFunc::from_poly(Poly::int(n))
    }

    pub fn constant(c: Rat) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc::from_poly(Poly::var(v))
    }

    pub fn from_poly(num: Poly) -> RatFunc {
        RatFunc {
            num,
            den: Poly::one(),
        }
    }

    /// Builds `num/den` in canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let (mut num, mut den) = (num, den);
        if den.as_constant().is_none() {
            let g = poly_gcd(&num, &den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let lc = den.leading_coeff();
        debug_assert!(!lc.is_zero());
        let inv = lc.recip();
        Ok(RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.num.is_zero() {
            return Some(Rat::zero());
        }
        if self.den.is_one() {
            return self.num.as_constant().cloned();
        }
        None
    }

    pub fn vars(&self) -> VarSet {
        self.num.vars().union(self.den.vars())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return RatFunc::new(self.num.add(&other.num), self.den.clone())
                .expect("nonzero denominator");
        }
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFunc::new(num, den).expect("nonzero denominator")
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        // Cross-reduce before multiplying to keep intermediates small.
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatFunc::new(n1.mul(&n2), d1.mul(&d2)).expect("nonzero denominator")
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.mul(&other.recip()?))
    }

    pub fn recip(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFunc {
        self.mul(&RatFunc::from_poly(p.clone()))
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        if e < 0 {
            return self.recip()?.pow(-e);
        }
        let mut acc = RatFunc::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// The bar involution: `t1 -> -t1, t2 -> -t2`, all other variables fixed.
    pub fn bar(&self) -> RatFunc {
        let tw = [Var::T1, Var::T2];
        RatFunc::new(self.num.twist_sign(&tw), self.den.twist_sign(&tw))
            .expect("sign twist preserves nonzero")
    }

    /// Exchanges `t1` and `t2`.
    pub fn swap_t(&self) -> RatFunc {
        RatFunc::new(
            self.num.swap_vars(Var::T1, Var::T2),
            self.den.swap_vars(Var::T1, Var::T2),
        )
        .expect("swap preserves nonzero")
    }

    /// Substitutes a polynomial for a variable.
    pub fn subst_poly(&self, v: Var, image: &Poly) -> Result<RatFunc> {
        let num = self.num.subst_poly(v, image);
        let den = self.den.subst_poly(v, image);
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RatFunc::new(num, den)
    }

    /// Substitutes a rational function for a variable.
    pub fn subst(&self, v: Var, image: &RatFunc) -> Result<RatFunc> {
        let sub_half = |p: &Poly| -> RatFunc {
            let coeffs = p.coeffs_in(v);
            // Horner in the image.
            let mut acc = RatFunc::zero();
            for c in coeffs.iter().rev() {
                acc = acc.mul(image).add(&RatFunc::from_poly(c.clone()));
            }
            acc
        };
        let num = sub_half(&self.num);
        let den = sub_half(&self.den);
        num.div(&den)
    }

    /// Substitutes `v -> 1/v` (coefficient reversal).
    pub fn subst_inverse(&self, v: Var) -> RatFunc {
        let rev = |p: &Poly| -> (Poly, u32) {
            let coeffs = p.coeffs_in(v);
            let d = coeffs.len() as u32 - 1;
            let mut rev: Vec<Poly> = coeffs.into_iter().rev().collect();
            while rev.len() > 1 && rev.last().unwrap().is_zero() {
                rev.pop();
            }
            (Poly::from_coeffs_in(v, &rev), d)
        };
        let (rn, dn) = rev(&self.num);
        let (rd, dd) = rev(&self.den);
        // f(1/v) = rev(num) * v^(dd-dn) / rev(den)
        let (num, den) = if dd >= dn {
            (rn.mul(&Poly::var_pow(v, dd - dn)), rd)
        } else {
            (rn, rd.mul(&Poly::var_pow(v, dn - dd)))
        };
        RatFunc::new(num, den).expect("reversal preserves nonzero")
    }

    /// Evaluates at a rational point binding all variables.
    pub fn eval_rat(&self, point: &BTreeMap<Var, Rat>) -> Result<Rat> {
        let d = self.den.eval_rat(point);
        if d.is_zero() {
            return Err(Error::PoleAtPoint { magnitude: 0.0 });
        }
        Ok(self.num.eval_rat(point) / d)
    }

    pub fn derivative(&self, v: Var) -> RatFunc {
        // (n/d)' = (n'd - nd')/d^2
        let num = self
            .num
            .derivative(v)
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative(v)));
        RatFunc::new(num, self.den.mul(&self.den)).expect("nonzero denominator")
    }

    /// First `order+1` Taylor coefficients around a rational center of the
    /// chosen variable; coefficients are rational functions of the others.
    pub fn taylor(&self, v: Var, center: &Rat, order: usize) -> Result<Vec<RatFunc>> {
        let shift = |p: &Poly| -> Vec<RatFunc> {
            let mut coeffs: Vec<Poly> = p.coeffs_in(v);
            // Synthetic shift p(x) -> p(x + c): repeated Horner.
            let n = coeffs.len();
            if !center.is_zero() {
                for i in 0..n {
                    for j in (i..n.saturating_sub(1)).rev() {
                        let add = coeffs[j + 1].scale(center);
                        coeffs[j] = coeffs[j].add(&add);
                    }
                }
            }
            coeffs.into_iter().map(RatFunc::from_poly).collect()
        };
        let num = shift(&self.num);
        let den = shift(&self.den);
        if den[0].is_zero() {
            return Err(Error::PoleAtCenter);
        }
        // Power series division num/den to the requested order.
        let d0_inv = den[0].recip()?;
        let mut out: Vec<RatFunc> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = if k < num.len() {
                num[k].clone()
            } else {
                RatFunc::zero()
            };
            for j in 1..=k.min(den.len() - 1) {
                acc = acc.sub(&den[j].mul(&out[k - j]));
            }
            out.push(acc.mul(&d0_inv));
        }
        Ok(out)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::rat_int;

    fn q() -> Poly {
        Poly::var(Var::Q)
    }
    fn qr() -> RatFunc {
        RatFunc::var(Var::Q)
    }

    #[test]
    fn normalize_common_factor() {
        // (q^2-1)/(q-1) -> q+1
        let f = RatFunc::new(q().pow(2).sub(&Poly::one()), q().sub(&Poly::one())).unwrap();
        assert_eq!(f, RatFunc::from_poly(q().add(&Poly::one())));
    }

    #[test]
    fn normalize_constant_scaling() {
        // (2*t1)/4 -> t1/2 with unit denominator polynomial.
        let f = RatFunc::new(
            Poly::var(Var::T1).scale(&rat_int(2)),
            Poly::int(4),
        )
        .unwrap();
        assert!(f.den().is_one());
        assert_eq!(
            f.num(),
            &Poly::var(Var::T1).scale(&Rat::new(1.into(), 2.into()))
        );
    }

    #[test]
    fn normalize_coprime_unchanged() {
        let num = q().pow(2).sub(&Poly::one());
        let den = q().pow(2).sub(&q()).add(&Poly::one());
        let f = RatFunc::new(num.clone(), den.clone()).unwrap();
        assert_eq!(f.num(), &num);
        assert_eq!(f.den(), &den);
    }

    #[test]
    fn normalize_equal_inputs_bit_identical() {
        let a = RatFunc::new(
            q().pow(2).sub(&Poly::one()).scale(&rat_int(3)),
            q().sub(&Poly::one()).scale(&rat_int(6)),
        )
        .unwrap();
        let b = RatFunc::new(
            q().pow(2).sub(&Poly::one()),
            q().sub(&Poly::one()).scale(&rat_int(2)),
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            RatFunc::new(q(), Poly::zero()),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn eval_simple() {
        // (q+1)/(q-1) at q=-1 -> 0; at q=1 -> pole.
        let f = RatFunc::new(q().add(&Poly::one()), q().sub(&Poly::one())).unwrap();
        let mut pt = BTreeMap::new();
        pt.insert(Var::Q, rat_int(-1));
        assert!(f.eval_rat(&pt).unwrap().is_zero());
        pt.insert(Var::Q, rat_int(1));
        assert!(f.eval_rat(&pt).is_err());
        // (q^2-1)/(q^2-q+1) at q=0 -> -1
        let g = RatFunc::new(
            q().pow(2).sub(&Poly::one()),
            q().pow(2).sub(&q()).add(&Poly::one()),
        )
        .unwrap();
        pt.insert(Var::Q, rat_int(0));
        assert_eq!(g.eval_rat(&pt).unwrap(), rat_int(-1));
    }

    #[test]
    fn taylor_geometric() {
        // 1/(1-q): 1, 1, 1
        let f = RatFunc::new(Poly::one(), Poly::one().sub(&q())).unwrap();
        let c = f.taylor(Var::Q, &Rat::zero(), 2).unwrap();
        assert!(c.iter().all(|x| x.is_one()));
    }

    #[test]
    fn taylor_diagonal_factor() {
        // ((-q)+1)/((-q)-1) = -1 - 2 sum_{m>=1} (-q)^m, so the q-coefficient
        // list is -1, +2, -2, +2 (geometric series oracle).
        let f = RatFunc::new(
            Poly::one().sub(&q()),
            q().neg().sub(&Poly::one()),
        )
        .unwrap();
        let c = f.taylor(Var::Q, &Rat::zero(), 3).unwrap();
        let expect = [-1i64, 2, -2, 2];
        for (got, want) in c.iter().zip(expect) {
            assert_eq!(got, &RatFunc::int(want));
        }
    }

    #[test]
    fn taylor_long_division() {
        // (q^2+1)/(q^2-1) around 0 -> -1, 0, -2 (long-division oracle).
        let f = RatFunc::new(q().pow(2).add(&Poly::one()), q().pow(2).sub(&Poly::one())).unwrap();
        let c = f.taylor(Var::Q, &Rat::zero(), 2).unwrap();
        assert_eq!(c[0], RatFunc::int(-1));
        assert_eq!(c[1], RatFunc::zero());
        assert_eq!(c[2], RatFunc::int(-2));
    }

    #[test]
    fn taylor_pole_at_center() {
        let f = RatFunc::new(Poly::one(), q()).unwrap();
        assert!(matches!(
            f.taylor(Var::Q, &Rat::zero(), 3),
            Err(Error::PoleAtCenter)
        ));
    }

    #[test]
    fn subst_inverse_involution() {
        let f = RatFunc::new(
            q().pow(2).add(&Poly::var(Var::T1)),
            q().sub(&Poly::one()),
        )
        .unwrap();
        assert_eq!(f.subst_inverse(Var::Q).subst_inverse(Var::Q), f);
    }

    #[test]
    fn normalize_product_cancellation() {
        // normalize(a*c, b*c) == normalize(a, b)
        let a = q().add(&Poly::var(Var::T1));
        let b = q().sub(&Poly::var(Var::T2)).scale(&rat_int(3));
        let c = q().mul(&Poly::var(Var::T1)).add(&Poly::int(7));
        let lhs = RatFunc::new(a.mul(&c), b.mul(&c)).unwrap();
        let rhs = RatFunc::new(a, b).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn arithmetic_field_ops() {
        let f = qr().add(&RatFunc::one()).div(&qr().sub(&RatFunc::one())).unwrap();
        let g = f.recip().unwrap();
        assert!(f.mul(&g).is_one());
        assert_eq!(f.pow(-2).unwrap(), g.mul(&g));
    }
}
