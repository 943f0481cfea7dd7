//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! Terms are kept in graded-lexicographic order (total degree first, then
//! exponents compared variable by variable in alphabet order). No zero
//! coefficients are stored, and variables that no longer occur are dropped,
//! so structural equality is semantic equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::var::{Var, VarSet};

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exponent vector; its length always matches the owning polynomial's
/// variable-set arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    vars: VarSet,
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly {
            vars: VarSet::EMPTY,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(vec![]), c);
        }
        Poly {
            vars: VarSet::EMPTY,
            terms,
        }
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(rat_int(n))
    }

    pub fn var(v: Var) -> Poly {
        Poly::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Poly {
        if e == 0 {
            return Poly::one();
        }
        let mut terms = BTreeMap::new();
        terms.insert(Mono(vec![e]), Rat::one());
        Poly {
            vars: VarSet::single(v),
            terms,
        }
    }

    /// Builds from (variable set, term map), restoring all invariants.
    pub fn from_terms(vars: VarSet, terms: BTreeMap<Mono, Rat>) -> Poly {
        let mut p = Poly { vars, terms };
        p.prune();
        p
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        // Drop variables that no longer occur.
        let arity = self.vars.len();
        let mut used = vec![false; arity];
        for m in self.terms.keys() {
            for (i, e) in m.0.iter().enumerate() {
                if *e > 0 {
                    used[i] = true;
                }
            }
        }
        if used.iter().all(|u| *u) {
            return;
        }
        let keep: Vec<usize> = (0..arity).filter(|i| used[*i]).collect();
        let new_vars: VarSet = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| used[*i])
            .map(|(_, v)| v)
            .collect();
        let old = std::mem::take(&mut self.terms);
        for (m, c) in old {
            let nm = Mono(keep.iter().map(|&i| m.0[i]).collect());
            self.terms.insert(nm, c);
        }
        self.vars = new_vars;
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<&Rat> {
        if self.terms.is_empty() {
            return None;
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.total_degree() == 0 {
                return Some(c);
            }
        }
        None
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        match self.vars.position(v) {
            None => 0,
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
        }
    }

    /// Re-expresses the polynomial over a superset of its variables.
    pub fn with_vars(&self, vars: VarSet) -> Poly {
        if vars == self.vars {
            return self.clone();
        }
        debug_assert!(self.vars.union(vars) == vars);
        let positions: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.position(v).expect("superset"))
            .collect();
        let arity = vars.len();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut nm = vec![0u32; arity];
            for (i, e) in m.0.iter().enumerate() {
                nm[positions[i]] = *e;
            }
            terms.insert(Mono(nm), c.clone());
        }
        Poly { vars, terms }
    }

    fn aligned(&self, other: &Poly) -> (Poly, Poly, VarSet) {
        let u = self.vars.union(other.vars);
        (self.with_vars(u), other.with_vars(u), u)
    }

    pub fn neg(&self) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        Poly {
            vars: self.vars,
            terms,
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (mut a, b, vars) = self.aligned(other);
        for (m, c) in b.terms {
            match a.terms.get_mut(&m) {
                Some(ac) => {
                    *ac += c;
                    if ac.is_zero() {
                        a.terms.remove(&m);
                    }
                }
                None => {
                    a.terms.insert(m, c);
                }
            }
        }
        let mut out = Poly {
            vars,
            terms: a.terms,
        };
        out.prune();
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(c);
        }
        let (a, b, vars) = self.aligned(other);
        let arity = vars.len();
        let mut terms: BTreeMap<Mono, Rat> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let mut m = vec![0u32; arity];
                for i in 0..arity {
                    m[i] = ma.0[i] + mb.0[i];
                }
                let prod = ca * cb;
                let key = Mono(m);
                match terms.get_mut(&key) {
                    Some(t) => *t += prod,
                    None => {
                        terms.insert(key, prod);
                    }
                }
            }
        }
        Poly::from_terms(vars, terms)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.clone(), k * c))
            .collect();
        Poly {
            vars: self.vars,
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Graded-lex leading term.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero)
    }

    /// Substitutes every variable with a rational value.
    pub fn eval_rat(&self, point: &BTreeMap<Var, Rat>) -> Rat {
        let vars: Vec<Var> = self.vars.iter().collect();
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.0.iter().enumerate() {
                if *e > 0 {
                    let v = point
                        .get(&vars[i])
                        .unwrap_or_else(|| panic!("unbound variable {}", vars[i]));
                    let mut p = Rat::one();
                    for _ in 0..*e {
                        p *= v;
                    }
                    t *= p;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes one variable with a polynomial.
    pub fn subst_poly(&self, v: Var, image: &Poly) -> Poly {
        let pos = match self.vars.position(v) {
            None => return self.clone(),
            Some(p) => p,
        };
        // Cache powers of the image.
        let max_e = self.terms.keys().map(|m| m.0[pos]).max().unwrap_or(0);
        let mut powers = Vec::with_capacity(max_e as usize + 1);
        powers.push(Poly::one());
        for i in 1..=max_e {
            let next = powers[i as usize - 1].mul(image);
            powers.push(next);
        }
        let mut rest_vars = self.vars;
        rest_vars.remove(v);
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.0[pos];
            let stripped: Vec<u32> = m
                .0
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != pos)
                .map(|(_, x)| *x)
                .collect();
            let mut tm = BTreeMap::new();
            tm.insert(Mono(stripped), c.clone());
            let base = Poly::from_terms(rest_vars, tm);
            acc = acc.add(&base.mul(&powers[e as usize]));
        }
        acc
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Poly {
        if !self.vars.contains(a) && !self.vars.contains(b) {
            return self.clone();
        }
        let vars = {
            let mut v = self.vars;
            if self.vars.contains(a) {
                v.insert(b);
            } else {
                v.remove(b);
            }
            if self.vars.contains(b) {
                v.insert(a);
            } else {
                v.remove(a);
            }
            v
        };
        let old_vars: Vec<Var> = self.vars.iter().collect();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps: BTreeMap<Var, u32> = BTreeMap::new();
            for (i, e) in m.0.iter().enumerate() {
                let var = old_vars[i];
                let target = if var == a {
                    b
                } else if var == b {
                    a
                } else {
                    var
                };
                *exps.entry(target).or_insert(0) += e;
            }
            let nm: Vec<u32> = vars.iter().map(|v| *exps.get(&v).unwrap_or(&0)).collect();
            terms.insert(Mono(nm), c.clone());
        }
        Poly::from_terms(vars, terms)
    }

    /// Applies `v -> -v` for each listed variable (sign twist by parity).
    pub fn twist_sign(&self, twisted: &[Var]) -> Poly {
        let positions: Vec<Option<usize>> =
            twisted.iter().map(|v| self.vars.position(*v)).collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let parity: u32 = positions
                    .iter()
                    .flatten()
                    .map(|&i| m.0[i])
                    .sum::<u32>()
                    & 1;
                let nc = if parity == 1 { -c.clone() } else { c.clone() };
                (m.clone(), nc)
            })
            .collect();
        Poly {
            vars: self.vars,
            terms,
        }
    }

    pub fn derivative(&self, v: Var) -> Poly {
        let pos = match self.vars.position(v) {
            None => return Poly::zero(),
            Some(p) => p,
        };
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[pos];
            if e == 0 {
                continue;
            }
            let mut nm = m.0.clone();
            nm[pos] -= 1;
            terms.insert(Mono(nm), c * rat_int(e as i64));
        }
        Poly::from_terms(self.vars, terms)
    }

    /// Dense coefficient list in `v` (index = exponent), coefficients free of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![Poly::zero(); deg + 1];
        let pos = match self.vars.position(v) {
            None => {
                out[0] = self.clone();
                return out;
            }
            Some(p) => p,
        };
        let mut rest = self.vars;
        rest.remove(v);
        let mut maps: Vec<BTreeMap<Mono, Rat>> = vec![BTreeMap::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.0[pos] as usize;
            let stripped: Vec<u32> = m
                .0
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != pos)
                .map(|(_, x)| *x)
                .collect();
            maps[e].insert(Mono(stripped), c.clone());
        }
        for (e, map) in maps.into_iter().enumerate() {
            out[e] = Poly::from_terms(rest, map);
        }
        out
    }

    /// Rebuilds from a dense coefficient list in `v`.
    pub fn from_coeffs_in(v: Var, coeffs: &[Poly]) -> Poly {
        let mut acc = Poly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            acc = acc.add(&c.mul(&Poly::var_pow(v, e as u32)));
        }
        acc
    }

    /// Scales into an integer-coefficient polynomial: returns (p, s) with
    /// `self = p / s`, p having integer, collectively coprime coefficients
    /// and positive graded-lex leading coefficient.
    pub fn integer_normal(&self) -> (Poly, Rat) {
        if self.is_zero() {
            return (Poly::zero(), Rat::one());
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_integer::gcd(num_gcd, scaled);
        }
        if num_gcd.is_zero() {
            num_gcd = BigInt::one();
        }
        let mut scale = Rat::new(num_gcd, den_lcm);
        if self.leading_coeff().is_negative() {
            scale = -scale;
        }
        let inv = scale.recip();
        (self.scale(&inv), scale)
    }

    /// Exact division; `None` when the divisor does not divide exactly.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (mut rem, div, vars) = self.aligned(divisor);
        let arity = vars.len();
        let (dm, dc) = {
            let (m, c) = div.leading().unwrap();
            (m.clone(), c.clone())
        };
        let mut quo: BTreeMap<Mono, Rat> = BTreeMap::new();
        while !rem.terms.is_empty() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let mut qm = vec![0u32; arity];
            let mut divisible = true;
            for i in 0..arity {
                if rm.0[i] < dm.0[i] {
                    divisible = false;
                    break;
                }
                qm[i] = rm.0[i] - dm.0[i];
            }
            if !divisible {
                return None;
            }
            let qc = &rc / &dc;
            let mut tm = BTreeMap::new();
            tm.insert(Mono(qm.clone()), qc.clone());
            let qterm = Poly { vars, terms: tm };
            // Keep the working remainder on the aligned variable set:
            // arithmetic normalization may otherwise drop variables.
            rem = rem.sub(&qterm.mul(&div)).with_vars(vars);
            quo.insert(Mono(qm), qc);
        }
        Some(Poly::from_terms(vars, quo))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

fn write_rat(f: &mut fmt::Formatter<'_>, c: &Rat) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let vars: Vec<Var> = self.vars.iter().collect();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str("-")?;
            } else {
                f.write_str("+")?;
            }
            let abs = c.abs();
            let is_const_term = m.total_degree() == 0;
            let mut wrote_factor = false;
            if !abs.is_one() || is_const_term {
                write_rat(f, &abs)?;
                wrote_factor = true;
            }
            for (j, e) in m.0.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                if wrote_factor {
                    f.write_str("*")?;
                }
                write!(f, "{}", vars[j])?;
                if *e > 1 {
                    write!(f, "^{}", e)?;
                }
                wrote_factor = true;
            }
        }
        Ok(())
    }
}
