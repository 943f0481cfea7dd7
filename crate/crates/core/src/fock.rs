//! The Fock space: basis vectors |mu>, creation/annihilation operators,
//! the energy grading, and both Hermitian products (the (t1,t2) product
//! and the Macdonald-type product in T1, T2).
//!
//! Under the identification with symmetric functions, the power sum p_mu
//! maps to z(mu)|mu>; only this bookkeeping is materialized, never the
//! underlying variables.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{RatFunc, Var};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A finite formal sum of basis vectors |mu> of a single energy, with
/// rational-function coefficients. Zero coefficients are not stored.
#[derive(Clone, PartialEq, Eq)]
pub struct FockVector {
    energy: usize,
    coeffs: BTreeMap<Partition, RatFunc>,
}

impl FockVector {
    pub fn zero(energy: usize) -> FockVector {
        FockVector {
            energy,
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit basis vector |mu>.
    pub fn basis_vector(mu: &Partition) -> FockVector {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(mu.clone(), RatFunc::one());
        FockVector {
            energy: mu.size(),
            coeffs,
        }
    }

    pub fn from_coeffs(
        energy: usize,
        coeffs: BTreeMap<Partition, RatFunc>,
    ) -> Result<FockVector> {
        for mu in coeffs.keys() {
            if mu.size() != energy {
                return Err(Error::MixedEnergy {
                    left: energy,
                    right: mu.size(),
                });
            }
        }
        let mut v = FockVector { energy, coeffs };
        v.coeffs.retain(|_, c| !c.is_zero());
        Ok(v)
    }

    pub fn energy(&self) -> usize {
        self.energy
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, mu: &Partition) -> RatFunc {
        self.coeffs.get(mu).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &FockVector) -> Result<FockVector> {
        // The zero vector carries no energy information.
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.energy != other.energy {
            return Err(Error::MixedEnergy {
                left: self.energy,
                right: other.energy,
            });
        }
        let mut coeffs = self.coeffs.clone();
        for (mu, c) in &other.coeffs {
            let entry = coeffs.entry(mu.clone()).or_insert_with(RatFunc::zero);
            *entry = entry.add(c);
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(FockVector {
            energy: self.energy,
            coeffs,
        })
    }

    pub fn sub(&self, other: &FockVector) -> Result<FockVector> {
        self.add(&other.scale(&RatFunc::int(-1)))
    }

    pub fn scale(&self, f: &RatFunc) -> FockVector {
        if f.is_zero() {
            return FockVector::zero(self.energy);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(mu, c)| (mu.clone(), c.mul(f)))
            .collect();
        FockVector {
            energy: self.energy,
            coeffs,
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> FockVector {
        let mut coeffs: BTreeMap<Partition, RatFunc> = BTreeMap::new();
        for (mu, c) in &self.coeffs {
            let nc = f(c);
            if !nc.is_zero() {
                coeffs.insert(mu.clone(), nc);
            }
        }
        FockVector {
            energy: self.energy,
            coeffs,
        }
    }

    /// Applies alpha_k: creation for k < 0 (prepends a part |k| with the
    /// factor |k| (m_{|k|}(mu)+1) fixed by the commutation relations and
    /// the basis normalization), annihilation for k > 0 (removes a part k,
    /// factor 1; absent parts annihilate to zero).
    pub fn apply_alpha(&self, k: i64) -> FockVector {
        assert!(k != 0, "alpha_0 is not defined");
        let m = k.unsigned_abs() as u32;
        let new_energy = if k < 0 {
            self.energy + m as usize
        } else {
            match self.energy.checked_sub(m as usize) {
                Some(e) => e,
                None => return FockVector::zero(0),
            }
        };
        let mut coeffs: BTreeMap<Partition, RatFunc> = BTreeMap::new();
        for (mu, c) in &self.coeffs {
            if k < 0 {
                let factor = RatFunc::int(m as i64 * (mu.multiplicity(m) as i64 + 1));
                let target = mu.with_part(m);
                let add = c.mul(&factor);
                let entry = coeffs.entry(target).or_insert_with(RatFunc::zero);
                *entry = entry.add(&add);
            } else if let Some(target) = mu.without_part(m) {
                let entry = coeffs.entry(target).or_insert_with(RatFunc::zero);
                *entry = entry.add(c);
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        FockVector {
            energy: new_energy,
            coeffs,
        }
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (mu, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*|{mu}>")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FockVector({self})")
    }
}

/// The bar involution on scalars: t1 -> -t1, t2 -> -t2, q fixed.
pub fn bar(f: &RatFunc) -> RatFunc {
    f.bar()
}

/// Hermitian product <mu|nu> = delta / (z(mu) (t1 t2)^{l(mu)}), antilinear
/// in the first argument via `bar`.
pub fn inner_herm(v: &FockVector, w: &FockVector) -> Result<RatFunc> {
    if v.energy != w.energy {
        return Err(Error::MixedEnergy {
            left: v.energy,
            right: w.energy,
        });
    }
    let t1t2 = RatFunc::var(Var::T1).mul(&RatFunc::var(Var::T2));
    let mut acc = RatFunc::zero();
    for (mu, vc) in &v.coeffs {
        let wc = match w.coeffs.get(mu) {
            Some(wc) => wc,
            None => continue,
        };
        let weight = t1t2
            .pow(-(mu.len() as i64))
            .expect("t1 t2 invertible")
            .scale(&mu.zmu().recip());
        acc = acc.add(&bar(vc).mul(wc).mul(&weight));
    }
    Ok(acc)
}

/// The Macdonald-type Hermitian product in T1, T2, represented over the
/// half-power variables s_i = T_i^(1/2). Coefficients of the inputs may be
/// written in T1, T2 or s1, s2; T's are rewritten as squares of s's. The
/// involution sends s_i to 1/s_i.
pub fn inner_kt(v: &FockVector, w: &FockVector) -> Result<RatFunc> {
    if v.energy != w.energy {
        return Err(Error::MixedEnergy {
            left: v.energy,
            right: w.energy,
        });
    }
    let to_half = |f: &RatFunc| -> RatFunc {
        f.subst_poly(Var::CapT1, &crate::algebra::Poly::var_pow(Var::HalfT1, 2))
            .and_then(|g| {
                g.subst_poly(Var::CapT2, &crate::algebra::Poly::var_pow(Var::HalfT2, 2))
            })
            .expect("polynomial substitution cannot fail")
    };
    let bar_half = |f: &RatFunc| -> RatFunc {
        f.subst_inverse(Var::HalfT1).subst_inverse(Var::HalfT2)
    };
    let s1 = RatFunc::var(Var::HalfT1);
    let s2 = RatFunc::var(Var::HalfT2);
    let mut acc = RatFunc::zero();
    for (mu, vc) in &v.coeffs {
        let wc = match w.coeffs.get(mu) {
            Some(wc) => wc,
            None => continue,
        };
        let mut weight = RatFunc::constant(mu.zmu().recip());
        for &part in mu.parts() {
            let e = part as i64;
            let f1 = s1.pow(e).unwrap().sub(&s1.pow(-e).unwrap());
            let f2 = s2.pow(e).unwrap().sub(&s2.pow(-e).unwrap());
            weight = weight.mul(&f1).mul(&f2);
        }
        acc = acc.add(&bar_half(&to_half(vc)).mul(&to_half(wc)).mul(&weight));
    }
    Ok(acc)
}

/// Verifies (alpha_k)* = (t1 t2)^sgn(k) alpha_(-k) against the Hermitian
/// product, exhaustively over basis pairs at energies up to `n_max`.
/// Returns the first failing pair if any.
pub fn adjoint_check(k: i64, n_max: usize) -> Result<()> {
    assert!(k != 0);
    let t1t2 = RatFunc::var(Var::T1).mul(&RatFunc::var(Var::T2));
    let factor = t1t2.pow(k.signum()).expect("t1 t2 invertible");
    for n in 0..=n_max {
        // <alpha_k v, w> with v of energy n needs w of energy n - k.
        let wn = n as i64 - k;
        if wn < 0 || wn as usize > n_max {
            continue;
        }
        for v_mu in Partition::enumerate(n) {
            let v = FockVector::basis_vector(&v_mu);
            for w_mu in Partition::enumerate(wn as usize) {
                let w = FockVector::basis_vector(&w_mu);
                let lhs = inner_herm(&v.apply_alpha(k), &w)?;
                let rhs = inner_herm(&v, &w.apply_alpha(-k).scale(&factor))?;
                if lhs != rhs {
                    return Err(Error::InvalidArgument(format!(
                        "adjoint identity fails for k={k} at <a_k {v_mu}|{w_mu}>: {lhs} vs {rhs}"
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_ratfunc, rat_int};

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn basis_and_vacuum() {
        let v = FockVector::basis_vector(&part(&[2, 1]));
        assert_eq!(v.energy(), 3);
        assert!(v.coeff(&part(&[2, 1])).is_one());
        let vac = FockVector::basis_vector(&Partition::empty());
        assert_eq!(vac.energy(), 0);
    }

    #[test]
    fn alpha_actions() {
        let vac = FockVector::basis_vector(&Partition::empty());
        // alpha_{-1} vac = |1>
        let v1 = vac.apply_alpha(-1);
        assert_eq!(v1, FockVector::basis_vector(&part(&[1])));
        // alpha_1 |1> = vac
        assert_eq!(v1.apply_alpha(1), vac);
        // alpha_2 |2> = vac: |2> = alpha_{-2} vac / 2
        let v2 = vac.apply_alpha(-2).scale(&RatFunc::constant(rat_int(2).recip()));
        assert_eq!(v2, FockVector::basis_vector(&part(&[2])));
        assert_eq!(v2.apply_alpha(2), vac);
        // annihilating an absent part gives zero
        assert!(v2.apply_alpha(3).is_zero());
    }

    #[test]
    fn commutation_relations_exhaustive() {
        // [alpha_k, alpha_l] = k delta_{k+l} on all basis vectors, energy <= 8.
        for n in 0..=8usize {
            for mu in Partition::enumerate(n) {
                let v = FockVector::basis_vector(&mu);
                for k in -4i64..=4 {
                    if k == 0 {
                        continue;
                    }
                    for l in -4i64..=4 {
                        if l == 0 {
                            continue;
                        }
                        let ab = v.apply_alpha(l).apply_alpha(k);
                        let ba = v.apply_alpha(k).apply_alpha(l);
                        let comm = ab.sub(&ba).unwrap();
                        if k + l == 0 {
                            let want = v.scale(&RatFunc::int(k));
                            assert_eq!(comm, want, "[a_{k}, a_{l}] on |{mu}>");
                        } else {
                            assert!(comm.is_zero(), "[a_{k}, a_{l}] on |{mu}>");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn energy_operator_eigenvalue() {
        // sum_{k>0} alpha_{-k} alpha_k |mu> = |mu| |mu| for |mu| <= 8.
        for n in 0..=8usize {
            for mu in Partition::enumerate(n) {
                let v = FockVector::basis_vector(&mu);
                let mut acc = FockVector::zero(n);
                for k in 1..=n as i64 {
                    acc = acc.add(&v.apply_alpha(k).apply_alpha(-k)).unwrap();
                }
                assert_eq!(acc, v.scale(&RatFunc::int(n as i64)));
            }
        }
    }

    #[test]
    fn inner_herm_values() {
        let one = part(&[1]);
        let v = FockVector::basis_vector(&one);
        // <(1)|(1)> = 1/(t1 t2)
        let got = inner_herm(&v, &v).unwrap();
        assert_eq!(got, parse_ratfunc("1/(t1*t2)").unwrap());
        // <(2)|(1,1)> = 0
        let a = FockVector::basis_vector(&part(&[2]));
        let b = FockVector::basis_vector(&part(&[1, 1]));
        assert!(inner_herm(&a, &b).unwrap().is_zero());
        // <J^(1), J^(1)> = t1 t2 with J^(1) = t1 t2 |1>
        let j1 = v.scale(&parse_ratfunc("t1*t2").unwrap());
        assert_eq!(inner_herm(&j1, &j1).unwrap(), parse_ratfunc("t1*t2").unwrap());
        // mixed energies rejected
        assert!(inner_herm(&v, &a).is_err());
    }

    #[test]
    fn inner_herm_antilinearity_and_symmetry() {
        let a = parse_ratfunc("(t1+2*t2)/(t1-3)").unwrap();
        for mu in Partition::enumerate(3) {
            for nu in Partition::enumerate(3) {
                let v = FockVector::basis_vector(&mu);
                let w = FockVector::basis_vector(&nu).scale(&parse_ratfunc("t1-t2").unwrap());
                let lhs = inner_herm(&v.scale(&a), &w).unwrap();
                let rhs = bar(&a).mul(&inner_herm(&v, &w).unwrap());
                assert_eq!(lhs, rhs);
                // <v,w> = bar(<w,v>)
                assert_eq!(
                    inner_herm(&v, &w).unwrap(),
                    bar(&inner_herm(&w, &v).unwrap())
                );
            }
        }
    }

    #[test]
    fn inner_kt_values() {
        // <<(2)|(2)>> = (1/2)(T1-1/T1)(T2-1/T2)
        let two = FockVector::basis_vector(&part(&[2]));
        let got = inner_kt(&two, &two).unwrap();
        let want = parse_ratfunc("1/2*(s1^2-s1^-2)*(s2^2-s2^-2)").unwrap();
        assert_eq!(got, want);
        // <<(1)|(1)>> = (T1^(1/2)-T1^(-1/2))(T2^(1/2)-T2^(-1/2))
        let one = FockVector::basis_vector(&part(&[1]));
        let got = inner_kt(&one, &one).unwrap();
        let want = parse_ratfunc("(s1-1/s1)*(s2-1/s2)").unwrap();
        assert_eq!(got, want);
        // <<(2)|(1,1)>> = 0
        let b = FockVector::basis_vector(&part(&[1, 1]));
        assert!(inner_kt(&two, &b).unwrap().is_zero());
    }

    #[test]
    fn adjoint_identity() {
        adjoint_check(1, 3).unwrap();
        adjoint_check(-2, 3).unwrap();
        adjoint_check(5, 3).unwrap();
    }
}
