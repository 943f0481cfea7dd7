//! Exact transition matrices between the monomial and power-sum bases of
//! symmetric functions of a fixed degree.

use num_traits::{One, Zero};
use std::collections::BTreeMap;

use crate::algebra::linsolve::rat_inverse;
use crate::algebra::{Rat, RatFunc};
use crate::fock::FockVector;
use crate::partition::Partition;

/// Multiplies a symmetric function written in the m-basis by the power sum
/// p_r: m_lambda p_r = sum over ways of growing one part (possibly a new
/// part) by r, the coefficient being the multiplicity of the grown part in
/// the result.
fn mul_by_power_sum(coeffs: &BTreeMap<Partition, Rat>, r: u32) -> BTreeMap<Partition, Rat> {
    let mut out: BTreeMap<Partition, Rat> = BTreeMap::new();
    for (lam, c) in coeffs {
        // Distinct part values of lam, plus 0 for "append a new part".
        let mut values: Vec<u32> = lam.parts().to_vec();
        values.dedup();
        values.push(0);
        for v in values {
            let grown = v + r;
            let mu = if v == 0 {
                lam.with_part(grown)
            } else {
                lam.without_part(v).expect("value present").with_part(grown)
            };
            let mult = mu.multiplicity(grown) as i64;
            let add = c * Rat::from_integer(mult.into());
            *out.entry(mu).or_insert_with(Rat::zero) += add;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Transition data at one degree: `p_in_m[i][j]` is the coefficient of
/// m_(basis[j]) in p_(basis[i]), and `m_in_p` its inverse.
pub struct BasisTables {
    pub basis: Vec<Partition>,
    pub p_in_m: Vec<Vec<Rat>>,
    pub m_in_p: Vec<Vec<Rat>>,
}

pub fn basis_tables(n: usize) -> BasisTables {
    let basis = Partition::enumerate(n);
    let index: BTreeMap<Partition, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let p = basis.len();
    let mut p_in_m = vec![vec![Rat::zero(); p]; p];
    for (i, mu) in basis.iter().enumerate() {
        let mut acc: BTreeMap<Partition, Rat> = BTreeMap::new();
        acc.insert(Partition::empty(), Rat::one());
        for &part in mu.parts() {
            acc = mul_by_power_sum(&acc, part);
        }
        for (lam, c) in acc {
            p_in_m[i][index[&lam]] = c;
        }
    }
    let m_in_p = rat_inverse(&p_in_m).expect("power sums are a basis");
    BasisTables {
        basis,
        p_in_m,
        m_in_p,
    }
}

impl BasisTables {
    pub fn index_of(&self, mu: &Partition) -> usize {
        self.basis
            .iter()
            .position(|p| p == mu)
            .expect("partition of the right size")
    }

    /// The monomial symmetric function m_mu as a Fock vector, via
    /// p_nu -> z(nu) |nu>.
    pub fn monomial_fock(&self, mu: &Partition) -> FockVector {
        let i = self.index_of(mu);
        let n = mu.size();
        let mut coeffs = BTreeMap::new();
        for (j, nu) in self.basis.iter().enumerate() {
            let c = &self.m_in_p[i][j];
            if c.is_zero() {
                continue;
            }
            coeffs.insert(nu.clone(), RatFunc::constant(c * nu.zmu()));
        }
        FockVector::from_coeffs(n, coeffs).expect("homogeneous")
    }

    /// Coefficients in the p-basis of a symmetric function given in the
    /// m-basis with rational-function coefficients.
    pub fn m_coords_to_p(&self, m_coeffs: &BTreeMap<Partition, RatFunc>) -> Vec<RatFunc> {
        let p = self.basis.len();
        let mut out = vec![RatFunc::zero(); p];
        for (mu, c) in m_coeffs {
            let i = self.index_of(mu);
            for (j, _) in self.basis.iter().enumerate() {
                let t = &self.m_in_p[i][j];
                if t.is_zero() {
                    continue;
                }
                out[j] = out[j].add(&c.scale(t));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ratfunc;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn p_in_m_degree_2() {
        // p_(2) = m_(2) ... wait: p_2 = sum x_i^2 = m_(2);
        // p_(1,1) = p_1^2 = m_(2)... oracle by 2-variable expansion:
        // (x+y)^2 = x^2+y^2 + 2xy = m_2 + 2 m_11.
        let t = basis_tables(2);
        let i2 = t.index_of(&part(&[2]));
        let i11 = t.index_of(&part(&[1, 1]));
        let ip2 = t.index_of(&part(&[2]));
        let ip11 = t.index_of(&part(&[1, 1]));
        assert_eq!(t.p_in_m[ip2][i2], Rat::one());
        assert!(t.p_in_m[ip2][i11].is_zero());
        assert_eq!(t.p_in_m[ip11][i2], Rat::one());
        assert_eq!(t.p_in_m[ip11][i11], Rat::from_integer(2.into()));
    }

    #[test]
    fn m_in_p_degree_2() {
        // m_(1,1) = (p_1^2 - p_2)/2  [classical oracle]
        let t = basis_tables(2);
        let i = t.index_of(&part(&[1, 1]));
        let j2 = t.index_of(&part(&[2]));
        let j11 = t.index_of(&part(&[1, 1]));
        assert_eq!(t.m_in_p[i][j11], Rat::new(1.into(), 2.into()));
        assert_eq!(t.m_in_p[i][j2], Rat::new((-1).into(), 2.into()));
    }

    #[test]
    fn monomial_fock_values() {
        // m_(1) = p_(1) -> |1>
        let t = basis_tables(1);
        let m1 = t.monomial_fock(&part(&[1]));
        assert_eq!(m1, FockVector::basis_vector(&part(&[1])));
        // m_(1,1) = (p_11 - p_2)/2 -> (1/2)(2|1,1>) - (1/2)(2|2>) = |1,1>-|2>
        let t = basis_tables(2);
        let m11 = t.monomial_fock(&part(&[1, 1]));
        assert_eq!(m11.coeff(&part(&[1, 1])), parse_ratfunc("1").unwrap());
        assert_eq!(m11.coeff(&part(&[2])), parse_ratfunc("-1").unwrap());
    }

    #[test]
    fn inverse_consistency_to_degree_6() {
        for n in 1..=6 {
            let t = basis_tables(n);
            let p = t.basis.len();
            for i in 0..p {
                for j in 0..p {
                    let mut acc = Rat::zero();
                    for k in 0..p {
                        acc += &t.p_in_m[i][k] * &t.m_in_p[k][j];
                    }
                    let want = if i == j { Rat::one() } else { Rat::zero() };
                    assert_eq!(acc, want);
                }
            }
        }
    }
}
