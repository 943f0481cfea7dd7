//! Monic Macdonald polynomials P^lambda over the parameters (Q, T), by
//! Gram-Schmidt in the monomial basis against the deformed power-sum
//! product <p_lambda, p_mu> = delta z(lambda) prod (1-Q^lambda_i)/(1-T^lambda_i).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{Poly, Rat, RatFunc, Var};
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::partition::Partition;

use super::msp::{basis_tables, BasisTables};
use super::schur::schur;

/// A Macdonald polynomial in the monomial basis; monic on m_lambda and
/// triangular with respect to dominance.
#[derive(Clone, Debug)]
pub struct MacdonaldVector {
    pub lambda: Partition,
    pub m_coeffs: BTreeMap<Partition, RatFunc>,
}

fn pairing_weight(nu: &Partition) -> RatFunc {
    // z(nu) prod_i (1 - Q^nu_i) / (1 - T^nu_i)
    let mut w = RatFunc::constant(nu.zmu());
    for &part in nu.parts() {
        let qn = Poly::one().sub(&Poly::var_pow(Var::MacQ, part));
        let tn = Poly::one().sub(&Poly::var_pow(Var::MacT, part));
        w = w.mul(&RatFunc::new(qn, tn).expect("1 - T^k is nonzero"));
    }
    w
}

/// The deformed product of two symmetric functions given in m-coordinates.
fn pairing(tables: &BasisTables, a: &BTreeMap<Partition, RatFunc>, b: &BTreeMap<Partition, RatFunc>) -> RatFunc {
    let pa = tables.m_coords_to_p(a);
    let pb = tables.m_coords_to_p(b);
    let mut acc = RatFunc::zero();
    for (j, nu) in tables.basis.iter().enumerate() {
        if pa[j].is_zero() || pb[j].is_zero() {
            continue;
        }
        acc = acc.add(&pa[j].mul(&pb[j]).mul(&pairing_weight(nu)));
    }
    acc
}

/// All P^mu for mu of size n, in the fixed decreasing-lex order.
pub fn macdonald_all(n: usize) -> Result<Vec<MacdonaldVector>> {
    let tables = basis_tables(n);
    let basis = tables.basis.clone();
    // Build from the dominance-smallest up: reverse of decreasing-lex.
    let mut built: Vec<MacdonaldVector> = Vec::new();
    for lam in basis.iter().rev() {
        let mut coeffs: BTreeMap<Partition, RatFunc> = BTreeMap::new();
        coeffs.insert(lam.clone(), RatFunc::one());
        for prev in &built {
            let proj = pairing(&tables, &coeffs, &prev.m_coeffs);
            if proj.is_zero() {
                continue;
            }
            // Orthogonalization must only move along strict dominance.
            if prev.lambda.dominance_cmp(lam) != Some(std::cmp::Ordering::Less) {
                return Err(Error::InvalidArgument(format!(
                    "Gram-Schmidt projection onto incomparable {} while building {}",
                    prev.lambda, lam
                )));
            }
            let norm = pairing(&tables, &prev.m_coeffs, &prev.m_coeffs);
            let f = proj.div(&norm)?;
            for (mu, c) in &prev.m_coeffs {
                let sub = f.mul(c);
                let entry = coeffs.entry(mu.clone()).or_insert_with(RatFunc::zero);
                *entry = entry.sub(&sub);
            }
            coeffs.retain(|_, c| !c.is_zero());
        }
        built.push(MacdonaldVector {
            lambda: lam.clone(),
            m_coeffs: coeffs,
        });
    }
    built.reverse();
    Ok(built)
}

/// The monic Macdonald polynomial P^lambda.
pub fn macdonald_p(lambda: &Partition) -> Result<MacdonaldVector> {
    let all = macdonald_all(lambda.size())?;
    Ok(all
        .into_iter()
        .find(|v| &v.lambda == lambda)
        .expect("every partition of its size"))
}

impl MacdonaldVector {
    /// Expansion in the Fock basis, coefficients rational in (Q, T).
    pub fn to_fock(&self) -> FockVector {
        let n = self.lambda.size();
        let tables = basis_tables(n);
        let p_coords = tables.m_coords_to_p(&self.m_coeffs);
        let mut coeffs = BTreeMap::new();
        for (j, nu) in tables.basis.iter().enumerate() {
            if p_coords[j].is_zero() {
                continue;
            }
            coeffs.insert(nu.clone(), p_coords[j].scale(&nu.zmu()));
        }
        FockVector::from_coeffs(n, coeffs).expect("homogeneous")
    }

    /// The pairing of this vector with another, both of the same size.
    pub fn pair(&self, other: &MacdonaldVector) -> RatFunc {
        let tables = basis_tables(self.lambda.size());
        pairing(&tables, &self.m_coeffs, &other.m_coeffs)
    }
}

/// Orthogonality of the family at one degree.
pub fn check_orthogonality(n: usize) -> Result<()> {
    let all = macdonald_all(n)?;
    for (i, a) in all.iter().enumerate() {
        for b in all.iter().skip(i + 1) {
            if !a.pair(b).is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "<P^{}, P^{}> != 0",
                    a.lambda, b.lambda
                )));
            }
        }
    }
    Ok(())
}

/// At Q = T the Macdonald polynomial degenerates to the Schur function.
pub fn check_schur_limit(n: usize) -> Result<()> {
    for v in macdonald_all(n)? {
        let fock = v.to_fock().map_coeffs(|c| {
            c.subst_poly(Var::MacT, &Poly::var(Var::MacQ))
                .expect("polynomial substitution")
        });
        let want = schur(&v.lambda);
        if fock != want {
            return Err(Error::InvalidArgument(format!(
                "P^{}(Q,Q) != s_{}",
                v.lambda, v.lambda
            )));
        }
    }
    Ok(())
}

/// Monic Jack limit: Q = eps^alpha', T = eps, eps -> 1 turns P^lambda into
/// the monic Jack polynomial with parameter alpha'. Tested numerically by
/// the caller; here we expose the specialization at rational eps.
pub fn specialize_qt(v: &MacdonaldVector, q_val: &Rat, t_val: &Rat) -> Result<BTreeMap<Partition, Rat>> {
    let mut point = BTreeMap::new();
    point.insert(Var::MacQ, q_val.clone());
    point.insert(Var::MacT, t_val.clone());
    let mut out = BTreeMap::new();
    for (mu, c) in &v.m_coeffs {
        let val = c.eval_rat(&point)?;
        if !val.is_zero() {
            out.insert(mu.clone(), val);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ratfunc;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn p1_is_m1() {
        let v = macdonald_p(&part(&[1])).unwrap();
        assert_eq!(v.m_coeffs.len(), 1);
        assert!(v.m_coeffs[&part(&[1])].is_one());
    }

    #[test]
    fn p2_gram_schmidt_oracle() {
        // 2x2 Gram-Schmidt in the p-basis gives
        // P_(2) = m_(2) + (1+Q)(1-T)/(1-QT) m_(1,1).
        let v = macdonald_p(&part(&[2])).unwrap();
        assert!(v.m_coeffs[&part(&[2])].is_one());
        let want = parse_ratfunc("(1+Q)*(1-T)/(1-Q*T)").unwrap();
        assert_eq!(v.m_coeffs[&part(&[1, 1])], want);
        // P_(1,1) = m_(1,1): dominance-minimal.
        let v = macdonald_p(&part(&[1, 1])).unwrap();
        assert_eq!(v.m_coeffs.len(), 1);
    }

    #[test]
    fn orthogonality_to_5() {
        for n in 1..=5 {
            check_orthogonality(n).unwrap();
        }
    }

    #[test]
    fn dominance_triangularity() {
        for n in 1..=5 {
            for v in macdonald_all(n).unwrap() {
                for mu in v.m_coeffs.keys() {
                    assert!(
                        mu.dominance_leq(&v.lambda),
                        "m_{mu} appears in P^{}",
                        v.lambda
                    );
                }
            }
        }
    }

    #[test]
    fn schur_limit_to_4() {
        for n in 1..=4 {
            check_schur_limit(n).unwrap();
        }
    }
}
