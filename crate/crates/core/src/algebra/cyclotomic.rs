//! Arithmetic in cyclotomic extensions of the rational-function field:
//! elements of Q(t1,t2)[x]/(Phi_d(x)), used for exact residue computations
//! at roots of unity.

use num_traits::One;

use super::poly::{Poly, Rat};
use super::ratfunc::RatFunc;
use super::var::Var;
use crate::error::{Error, Result};

/// The d-th cyclotomic polynomial as integer coefficients (index = degree).
pub fn cyclotomic_coeffs(d: u32) -> Vec<Rat> {
    assert!(d >= 1);
    // x^d - 1 divided by the product of Phi_e for proper divisors e of d.
    let mut num = vec![Rat::zero(); d as usize + 1];
    num[0] = -Rat::one();
    num[d as usize] = Rat::one();
    for e in 1..d {
        if d % e == 0 {
            let phi = cyclotomic_coeffs(e);
            num = poly_div_exact_univ(&num, &phi);
        }
    }
    num
}

fn poly_div_exact_univ(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let mut rem: Vec<Rat> = num.to_vec();
    let dd = den.len() - 1;
    let dn = rem.len() - 1;
    assert!(dn >= dd);
    let mut quo = vec![Rat::zero(); dn - dd + 1];
    for k in (0..=(dn - dd)).rev() {
        let c = rem[k + dd].clone() / den[dd].clone();
        quo[k] = c.clone();
        for j in 0..=dd {
            let sub = den[j].clone() * c.clone();
            rem[k + j] -= sub;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact division");
    quo
}

use num_traits::Zero;

/// The field Q(t1,t2)(eta) with eta a primitive d-th root of unity.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    pub order: u32,
    /// Phi_d coefficients, degree ascending.
    modulus: Vec<Rat>,
}

/// An element, as coefficients of 1, eta, ..., eta^(phi(d)-1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycElem(pub Vec<RatFunc>);

impl CyclotomicField {
    pub fn new(order: u32) -> CyclotomicField {
        CyclotomicField {
            order,
            modulus: cyclotomic_coeffs(order),
        }
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> CycElem {
        CycElem(vec![RatFunc::zero(); self.degree()])
    }

    pub fn scalar(&self, c: RatFunc) -> CycElem {
        let mut e = self.zero();
        e.0[0] = c;
        e
    }

    /// eta^k reduced mod Phi_d.
    pub fn eta_pow(&self, k: i64) -> CycElem {
        let k = k.rem_euclid(self.order as i64) as usize;
        let mut raw = vec![RatFunc::zero(); k + 1];
        raw[k] = RatFunc::one();
        self.reduce(raw)
    }

    fn reduce(&self, mut raw: Vec<RatFunc>) -> CycElem {
        let deg = self.degree();
        while raw.len() > deg {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            // The popped entry was the coefficient of x^L, L = raw.len();
            // x^L == -sum_j Phi[j] x^(L-deg+j) modulo Phi (Phi is monic).
            let k = raw.len() - deg;
            for j in 0..deg {
                if self.modulus[j].is_zero() {
                    continue;
                }
                let sub = top.scale(&self.modulus[j]);
                raw[k + j] = raw[k + j].sub(&sub);
            }
        }
        raw.resize(deg, RatFunc::zero());
        CycElem(raw)
    }

    pub fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| x.add(y))
                .collect(),
        )
    }

    pub fn sub(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(x, y)| x.sub(y))
                .collect(),
        )
    }

    pub fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        let deg = self.degree();
        let mut raw = vec![RatFunc::zero(); 2 * deg - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                raw[i + j] = raw[i + j].add(&x.mul(y));
            }
        }
        self.reduce(raw)
    }

    pub fn is_zero(&self, a: &CycElem) -> bool {
        a.0.iter().all(|c| c.is_zero())
    }

    /// Inverse via extended Euclid on polynomials over Q(t1,t2).
    pub fn inv(&self, a: &CycElem) -> Result<CycElem> {
        if self.is_zero(a) {
            return Err(Error::ZeroDenominator);
        }
        // Work with coefficient vectors (degree ascending).
        let trim = |v: &mut Vec<RatFunc>| {
            while v.len() > 1 && v.last().unwrap().is_zero() {
                v.pop();
            }
            if v.is_empty() {
                v.push(RatFunc::zero());
            }
        };
        let mut r0: Vec<RatFunc> = self
            .modulus
            .iter()
            .map(|c| RatFunc::constant(c.clone()))
            .collect();
        let mut r1 = a.0.clone();
        trim(&mut r1);
        let mut s0 = vec![RatFunc::zero()];
        let mut s1 = vec![RatFunc::one()];
        while r1.len() > 1 || !r1[0].is_zero() {
            // Divide r0 by r1.
            let mut rem = r0.clone();
            let mut quo = vec![RatFunc::zero(); rem.len().saturating_sub(r1.len()) + 1];
            let lead = r1.last().unwrap().clone();
            let lead_inv = lead.recip()?;
            while rem.len() >= r1.len() && !(rem.len() == 1 && rem[0].is_zero()) {
                let k = rem.len() - r1.len();
                let c = rem.last().unwrap().mul(&lead_inv);
                quo[k] = quo[k].add(&c);
                for j in 0..r1.len() {
                    let sub = r1[j].mul(&c);
                    rem[k + j] = rem[k + j].sub(&sub);
                }
                rem.pop();
                trim(&mut rem);
            }
            // s_next = s0 - quo*s1
            let mut s_next = s0.clone();
            let prod_len = quo.len() + s1.len() - 1;
            s_next.resize(s_next.len().max(prod_len), RatFunc::zero());
            for (i, qc) in quo.iter().enumerate() {
                if qc.is_zero() {
                    continue;
                }
                for (j, sc) in s1.iter().enumerate() {
                    let sub = qc.mul(sc);
                    s_next[i + j] = s_next[i + j].sub(&sub);
                }
            }
            trim(&mut s_next);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s_next;
            trim(&mut r1);
        }
        // r0 is the gcd: a unit of Q(t1,t2) since Phi_d is squarefree and
        // a is nonzero mod Phi_d.
        if r0.len() != 1 {
            return Err(Error::InvalidArgument(
                "element not invertible in cyclotomic field".into(),
            ));
        }
        let unit_inv = r0[0].recip()?;
        let mut out = vec![RatFunc::zero(); self.degree()];
        for (i, c) in s0.iter().enumerate() {
            if i < out.len() {
                out[i] = c.mul(&unit_inv);
            }
        }
        Ok(CycElem(out))
    }

    /// Evaluates a polynomial in one variable at `x = elem`, coefficients
    /// being rational functions free of that variable.
    pub fn eval_poly_at(&self, p: &Poly, var: Var, elem: &CycElem) -> CycElem {
        let coeffs = p.coeffs_in(var);
        let mut acc = self.zero();
        for c in coeffs.iter().rev() {
            acc = self.mul(&acc, elem);
            acc = self.add(&acc, &self.scalar(RatFunc::from_poly(c.clone())));
        }
        acc
    }

    /// Sum of the Galois conjugates: the trace down to Q(t1,t2).
    /// Computed via power sums of primitive d-th roots of unity
    /// (Ramanujan sums restricted to exact order d).
    pub fn trace(&self, a: &CycElem) -> RatFunc {
        let d = self.order;
        let mut acc = RatFunc::zero();
        for (k, c) in a.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // Sum over primitive d-th roots z of z^k: Ramanujan sum c_d(k).
            let s = ramanujan_sum(d, k as u32);
            acc = acc.add(&c.scale(&Rat::from_integer(s.into())));
        }
        acc
    }
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

fn moebius(n: u32) -> i64 {
    let mut n = n;
    let mut mu = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| gcd_u32(*k, n) == 1).count() as u32
}

/// Ramanujan sum c_d(k) = sum over primitive d-th roots of unity z of z^k.
fn ramanujan_sum(d: u32, k: u32) -> i64 {
    let g = gcd_u32(d, k);
    let m = d / g;
    // c_d(k) = mu(m) * phi(d) / phi(m)
    moebius(m) * (euler_phi(d) as i64) / (euler_phi(m) as i64)
}
