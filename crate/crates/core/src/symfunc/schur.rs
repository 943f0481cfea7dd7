//! Schur functions in the Fock basis via Murnaghan-Nakayama characters.

use crate::fock::FockVector;
use crate::partition::Partition;
use std::collections::BTreeMap;

use crate::algebra::RatFunc;

/// Removes a border strip of size `r` from `lambda` in all possible ways;
/// yields (remaining partition, height of the strip).
fn strip_removals(lambda: &Partition, r: u32) -> Vec<(Partition, u32)> {
    let k = lambda.len();
    if k == 0 {
        return vec![];
    }
    // Beta numbers: b_i = lambda_i + (k - i), strictly decreasing.
    let betas: Vec<i64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (k - 1 - i) as i64)
        .collect();
    let mut out = Vec::new();
    for (i, &b) in betas.iter().enumerate() {
        let nb = b - r as i64;
        if nb < 0 || betas.contains(&nb) {
            continue;
        }
        let mut new_betas = betas.clone();
        new_betas[i] = nb;
        // Height = number of beta values strictly between nb and b.
        let height = betas
            .iter()
            .filter(|&&x| x > nb && x < b)
            .count() as u32;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = new_betas
            .iter()
            .enumerate()
            .map(|(j, &bj)| (bj - (k - 1 - j) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        out.push((
            Partition::new(parts).expect("beta numbers give a partition"),
            height,
        ));
    }
    out
}

/// The irreducible symmetric-group character chi^lambda(mu) by the
/// Murnaghan-Nakayama rule.
pub fn character(lambda: &Partition, mu: &Partition) -> i64 {
    debug_assert_eq!(lambda.size(), mu.size());
    if mu.is_empty() {
        return 1;
    }
    let r = mu.parts()[0];
    let rest = Partition::new(mu.parts()[1..].to_vec()).expect("suffix is a partition");
    let mut acc = 0i64;
    for (rem, height) in strip_removals(lambda, r) {
        let sign = if height % 2 == 0 { 1 } else { -1 };
        acc += sign * character(&rem, &rest);
    }
    acc
}

/// The Schur function s_lambda as a Fock vector: under p_mu -> z(mu)|mu>,
/// s_lambda = sum_mu chi^lambda(mu) / z(mu) p_mu = sum_mu chi^lambda(mu) |mu>.
pub fn schur(lambda: &Partition) -> FockVector {
    let n = lambda.size();
    let mut coeffs = BTreeMap::new();
    for mu in Partition::enumerate(n) {
        let chi = character(lambda, &mu);
        if chi != 0 {
            coeffs.insert(mu, RatFunc::int(chi));
        }
    }
    FockVector::from_coeffs(n, coeffs).expect("homogeneous")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::inner_herm;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn schur_small() {
        // s_(1) = |1>
        assert_eq!(schur(&part(&[1])), FockVector::basis_vector(&part(&[1])));
        // s_(2) = |2> + |1,1>, s_(1,1) = -|2> + |1,1>  [classical]
        let s2 = schur(&part(&[2]));
        assert!(s2.coeff(&part(&[2])).is_one());
        assert!(s2.coeff(&part(&[1, 1])).is_one());
        let s11 = schur(&part(&[1, 1]));
        assert_eq!(s11.coeff(&part(&[2])), RatFunc::int(-1));
        assert!(s11.coeff(&part(&[1, 1])).is_one());
    }

    #[test]
    fn character_table_s3() {
        // Classical character table of S_3, rows (3), (2,1), (1,1,1).
        let rows = [
            (part(&[3]), [1i64, 1, 1]),
            (part(&[2, 1]), [-1, 0, 2]),
            (part(&[1, 1, 1]), [1, -1, 1]),
        ];
        let cols = [part(&[3]), part(&[2, 1]), part(&[1, 1, 1])];
        for (lam, want) in rows {
            for (j, mu) in cols.iter().enumerate() {
                assert_eq!(character(&lam, mu), want[j], "chi^{lam}({mu})");
            }
        }
    }

    #[test]
    fn hook_dimension_formula() {
        // chi^lambda(1^n) = n! / hook product  [hook length formula oracle]
        for n in 1..=7usize {
            let ones = Partition::new(vec![1; n]).unwrap();
            let mut fact = num_bigint::BigInt::from(1);
            for k in 2..=n {
                fact *= num_bigint::BigInt::from(k);
            }
            for lam in Partition::enumerate(n) {
                let dim = character(&lam, &ones);
                assert_eq!(
                    num_bigint::BigInt::from(dim) * lam.hook_product(),
                    fact,
                    "dimension of {lam}"
                );
            }
        }
    }

    #[test]
    fn schur_orthonormal_under_specialized_product() {
        // At t1 t2 = 1 the product <.|.> has <mu|nu> = delta/z(mu); Schur
        // functions are orthonormal for it (classical character
        // orthogonality). Verify sum_mu chi_mu^2 / z(mu) = 1 via inner_herm
        // with t2 -> 1/t1 substituted afterwards.
        for n in 1..=5usize {
            for lam in Partition::enumerate(n) {
                let s = schur(&lam);
                let g = inner_herm(&s, &s).unwrap();
                // g = sum chi^2 / (z (t1 t2)^l); substitute t2 = 1/t1.
                let subst = g
                    .subst(
                        crate::algebra::Var::T2,
                        &RatFunc::var(crate::algebra::Var::T1).recip().unwrap(),
                    )
                    .unwrap();
                assert!(subst.is_one(), "norm of s_{lam}");
            }
        }
    }
}
