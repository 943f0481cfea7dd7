//! Jack polynomials in the integral normalization: eigenvectors of M_D(0)
//! computed by exact linear algebra, scaled so the coefficient of |1^n> is
//! n! (t1 t2)^n.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::linsolve::kernel_vector;
use crate::algebra::{poly_gcd, Poly, Rat, RatFunc, Var};
use crate::error::{Error, Result};
use crate::fock::{inner_herm, FockVector};
use crate::partition::Partition;
use crate::qde::{build_m0, OperatorMatrix};

/// A Jack vector J^lambda together with its eigenvalue data.
#[derive(Clone, Debug)]
pub struct JackVector {
    pub lambda: Partition,
    pub vector: FockVector,
}

fn ones_partition(n: usize) -> Partition {
    Partition::new(vec![1; n]).expect("column partition")
}

/// All J^lambda at energy n, solved from a single M_D(0).
pub fn jack_all(n: usize) -> Result<Vec<JackVector>> {
    let m0 = build_m0(n);
    m0.basis()
        .iter()
        .map(|lam| jack_from_m0(&m0, lam))
        .collect()
}

fn jack_from_m0(m0: &OperatorMatrix, lambda: &Partition) -> Result<JackVector> {
    let n = m0.energy();
    let p = m0.dim();
    let c = RatFunc::from_poly(lambda.content_sum());
    // (M0 + c(lambda)) v = 0
    let mut mat = vec![vec![RatFunc::zero(); p]; p];
    for r in 0..p {
        for cidx in 0..p {
            let mut e = m0.entry(r, cidx).clone();
            if r == cidx {
                e = e.add(&c);
            }
            mat[r][cidx] = e;
        }
    }
    let v = kernel_vector(&mat).map_err(|_| Error::DegenerateEigenvalue(lambda.to_string()))?;
    // Normalize: coefficient of |1^n> equals n! (t1 t2)^n.
    let ones = ones_partition(n);
    let ones_idx = m0
        .basis()
        .iter()
        .position(|mu| mu == &ones)
        .expect("column partition in basis");
    if v[ones_idx].is_zero() {
        return Err(Error::DegenerateEigenvalue(format!(
            "kernel vector for {lambda} has zero leading coefficient"
        )));
    }
    let mut fact = BigInt::one();
    for k in 2..=n {
        fact *= BigInt::from(k);
    }
    let target = RatFunc::from_poly(
        Poly::var(Var::T1)
            .mul(&Poly::var(Var::T2))
            .pow(n as u32)
            .scale(&Rat::from_integer(fact)),
    );
    let scale = target.div(&v[ones_idx])?;
    let mut coeffs = std::collections::BTreeMap::new();
    for (i, mu) in m0.basis().iter().enumerate() {
        let cval = v[i].mul(&scale);
        if !cval.is_zero() {
            coeffs.insert(mu.clone(), cval);
        }
    }
    Ok(JackVector {
        lambda: lambda.clone(),
        vector: FockVector::from_coeffs(n, coeffs)?,
    })
}

/// J^lambda in the integral normalization.
pub fn jack(lambda: &Partition) -> Result<JackVector> {
    let m0 = build_m0(lambda.size().max(1));
    if lambda.is_empty() {
        return Ok(JackVector {
            lambda: lambda.clone(),
            vector: FockVector::basis_vector(lambda),
        });
    }
    jack_from_m0(&m0, lambda)
}

/// The squared norm prod of tangent weights.
pub fn jack_norm(lambda: &Partition) -> Poly {
    let mut acc = Poly::one();
    for w in lambda.tangent_weights() {
        acc = acc.mul(&w);
    }
    acc
}

/// Verifies <J^lambda, J^lambda> = prod of tangent weights, exactly.
pub fn check_jack_norm(j: &JackVector) -> Result<()> {
    let got = inner_herm(&j.vector, &j.vector)?;
    let want = RatFunc::from_poly(jack_norm(&j.lambda));
    if got != want {
        return Err(Error::InvalidArgument(format!(
            "norm of J^{} is {got}, expected {want}",
            j.lambda
        )));
    }
    Ok(())
}

/// Verifies the eigen-equation M_D(0) J = -c(lambda) J exactly.
pub fn check_jack_eigen(m0: &OperatorMatrix, j: &JackVector) -> Result<()> {
    let lhs = m0.apply(&j.vector)?;
    let rhs = j
        .vector
        .scale(&RatFunc::from_poly(j.lambda.content_sum().neg()));
    if lhs != rhs {
        return Err(Error::InvalidArgument(format!(
            "J^{} is not an eigenvector",
            j.lambda
        )));
    }
    Ok(())
}

/// Verifies each coefficient of J^lambda is (t1 t2)^l(mu) times a
/// homogeneous polynomial of degree |lambda| - l(mu).
pub fn check_degree_structure(j: &JackVector) -> Result<()> {
    let n = j.lambda.size() as u32;
    for (mu, c) in j.vector.coeffs() {
        if !c.den().is_one() {
            return Err(Error::InvalidArgument(format!(
                "coefficient of |{mu}| in J^{} is not polynomial",
                j.lambda
            )));
        }
        let l = mu.len() as u32;
        let divisor = Poly::var(Var::T1).mul(&Poly::var(Var::T2)).pow(l);
        let quot = c.num().div_exact(&divisor).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "coefficient of |{mu}| in J^{} lacks the (t1 t2)^{l} factor",
                j.lambda
            ))
        })?;
        let want_deg = n - l;
        let homogeneous = quot.terms().all(|(m, _)| m.total_degree() == want_deg);
        if !homogeneous {
            return Err(Error::InvalidArgument(format!(
                "coefficient of |{mu}| in J^{}: quotient not homogeneous of degree {want_deg}",
                j.lambda
            )));
        }
    }
    Ok(())
}

/// Verifies J^lambda(t2,t1) = J^(lambda') (t1,t2).
pub fn check_jack_symmetry(n: usize) -> Result<()> {
    let all = jack_all(n)?;
    let find = |lam: &Partition| -> &JackVector {
        all.iter().find(|j| &j.lambda == lam).expect("all built")
    };
    for j in &all {
        let swapped = j.vector.map_coeffs(|c| c.swap_t());
        let other = find(&j.lambda.transpose());
        if swapped != other.vector {
            return Err(Error::InvalidArgument(format!(
                "symmetry fails for {}",
                j.lambda
            )));
        }
    }
    Ok(())
}

/// The matrix whose columns are J^lambda in the Fock basis.
pub fn jack_matrix(n: usize) -> Result<OperatorMatrix> {
    let all = jack_all(n)?;
    let cols: Vec<FockVector> = all.into_iter().map(|j| j.vector).collect();
    Ok(OperatorMatrix::from_columns(n, &cols))
}

/// The monic Jack polynomial in m-coordinates at a rational Jack parameter
/// `alpha`, obtained from the eigenvector construction by specializing
/// (t1, t2) = (alpha, -1) and scaling the m_lambda coordinate to one. Used
/// by the Macdonald degeneration cross-check.
pub fn monic_jack_m_coords(
    lambda: &Partition,
    alpha: &Rat,
) -> Result<std::collections::BTreeMap<Partition, Rat>> {
    use std::collections::BTreeMap;
    let j = jack(lambda)?;
    let mut point = BTreeMap::new();
    point.insert(Var::T1, alpha.clone());
    point.insert(Var::T2, -Rat::one());
    // Fock coefficients -> p-coords -> m-coords.
    let tables = super::msp::basis_tables(lambda.size());
    let mut p_coords = vec![Rat::zero(); tables.basis.len()];
    for (mu, c) in j.vector.coeffs() {
        let idx = tables.index_of(mu);
        p_coords[idx] = c.eval_rat(&point)? / mu.zmu();
    }
    // m_coords[j] = sum_i p_coords[i] * p_in_m[i][j]
    let mut m_coords = vec![Rat::zero(); tables.basis.len()];
    for (i, c) in p_coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (jj, t) in tables.p_in_m[i].iter().enumerate() {
            if !t.is_zero() {
                m_coords[jj] += c * t;
            }
        }
    }
    let lead = m_coords[tables.index_of(lambda)].clone();
    if lead.is_zero() {
        return Err(Error::DegenerateEigenvalue(lambda.to_string()));
    }
    let mut out = BTreeMap::new();
    for (jj, c) in m_coords.into_iter().enumerate() {
        if !c.is_zero() {
            out.insert(tables.basis[jj].clone(), c / lead.clone());
        }
    }
    Ok(out)
}

/// Squared-norm denominators never vanish identically: guard used before
/// numeric work.
pub fn norms_nonzero(n: usize) -> bool {
    Partition::enumerate(n)
        .iter()
        .all(|lam| !jack_norm(lam).is_zero())
}

/// Content polynomial gcd of a family; exposed for diagnostics.
pub fn family_content(n: usize) -> Result<Poly> {
    let mut acc = Poly::zero();
    for j in jack_all(n)? {
        for (_, c) in j.vector.coeffs() {
            acc = poly_gcd(&acc, c.num());
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ratfunc;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn jack_examples() {
        // J^(1) = t1 t2 |1>
        let j = jack(&part(&[1])).unwrap();
        assert_eq!(j.vector.coeff(&part(&[1])), parse_ratfunc("t1*t2").unwrap());
        // J^(2) = 2 t1^2 t2^2 |1,1> - 2 t1^2 t2 |2>
        let j = jack(&part(&[2])).unwrap();
        assert_eq!(
            j.vector.coeff(&part(&[1, 1])),
            parse_ratfunc("2*t1^2*t2^2").unwrap()
        );
        assert_eq!(
            j.vector.coeff(&part(&[2])),
            parse_ratfunc("-2*t1^2*t2").unwrap()
        );
        // J^(1,1) = 2 t1^2 t2^2 |1,1> - 2 t1 t2^2 |2>
        let j = jack(&part(&[1, 1])).unwrap();
        assert_eq!(
            j.vector.coeff(&part(&[1, 1])),
            parse_ratfunc("2*t1^2*t2^2").unwrap()
        );
        assert_eq!(
            j.vector.coeff(&part(&[2])),
            parse_ratfunc("-2*t1*t2^2").unwrap()
        );
    }

    #[test]
    fn row_jack_closed_form() {
        // J^((k)) = k! t1^k sum_{|mu|=k} (-1)^(k-l(mu)) t2^l(mu) |mu>.
        for k in 1..=5usize {
            let j = jack(&part(&[k as u32])).unwrap();
            let mut fact = BigInt::one();
            for i in 2..=k {
                fact *= BigInt::from(i);
            }
            for mu in Partition::enumerate(k) {
                let sign = if (k - mu.len()) % 2 == 0 { 1 } else { -1 };
                let want = RatFunc::from_poly(
                    Poly::var_pow(Var::T1, k as u32)
                        .mul(&Poly::var_pow(Var::T2, mu.len() as u32))
                        .scale(&(Rat::from_integer(fact.clone()) * crate::algebra::rat_int(sign))),
                );
                assert_eq!(j.vector.coeff(&mu), want, "mu={mu}");
            }
        }
    }

    #[test]
    fn jack_norm_examples() {
        // ||J^(1)||^2 = t1 t2; ||J^(2)||^2 = 2 t1^2 t2 (t2 - t1).
        assert_eq!(
            RatFunc::from_poly(jack_norm(&part(&[1]))),
            parse_ratfunc("t1*t2").unwrap()
        );
        assert_eq!(
            RatFunc::from_poly(jack_norm(&part(&[2]))),
            parse_ratfunc("2*t1^2*t2*(t2-t1)").unwrap()
        );
        for n in 1..=4usize {
            for j in jack_all(n).unwrap() {
                check_jack_norm(&j).unwrap();
            }
        }
    }

    #[test]
    fn jack_orthogonality_small() {
        for n in 1..=4usize {
            let all = jack_all(n).unwrap();
            for a in &all {
                for b in &all {
                    if a.lambda != b.lambda {
                        assert!(
                            inner_herm(&a.vector, &b.vector).unwrap().is_zero(),
                            "<J^{}, J^{}>",
                            a.lambda,
                            b.lambda
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn eigen_symmetry_degree_small() {
        for n in 1..=4usize {
            let m0 = build_m0(n);
            for j in jack_all(n).unwrap() {
                check_jack_eigen(&m0, &j).unwrap();
                check_degree_structure(&j).unwrap();
            }
            check_jack_symmetry(n).unwrap();
        }
    }
}
