//! Haiman's polynomials H^lambda: the transform of the monic Macdonald
//! polynomial by the Upsilon scaling, the arm/leg box product, and the
//! T2^n(lambda) prefactor, with parameters identified as (q, t) = (T1, T2).

use crate::algebra::{Poly, RatFunc, Var};
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::partition::Partition;
use crate::qde::OperatorMatrix;

use super::macdonald::macdonald_p;

/// The diagonal operator Upsilon |mu> = prod_i (1 - T2^(-mu_i))^(-1) |mu>,
/// or its inverse.
pub fn upsilon(v: &FockVector, invert: bool) -> FockVector {
    let n = v.energy();
    let mut coeffs = std::collections::BTreeMap::new();
    for (mu, c) in v.coeffs() {
        // prod (1 - T2^(-m)) = prod (T2^m - 1)/T2^m
        let mut factor = RatFunc::one();
        for &part in mu.parts() {
            let t2m = Poly::var_pow(Var::CapT2, part);
            let f = RatFunc::new(t2m.sub(&Poly::one()), t2m).expect("nonzero");
            factor = factor.mul(&f);
        }
        let scaled = if invert {
            c.mul(&factor)
        } else {
            c.div(&factor).expect("factor nonzero")
        };
        if !scaled.is_zero() {
            coeffs.insert(mu.clone(), scaled);
        }
    }
    FockVector::from_coeffs(n, coeffs).expect("homogeneous")
}

/// H^lambda as a Fock vector with coefficients Laurent in (T1, T2):
/// T2^n(lambda) prod_boxes (1 - T1^a T2^(-l-1)) Upsilon P^lambda(T1, T2^(-1)).
pub fn haiman_h(lambda: &Partition) -> Result<FockVector> {
    let p = macdonald_p(lambda)?.to_fock();
    // (Q, T) -> (T1, T2^(-1))
    let t2_inv = RatFunc::var(Var::CapT2).recip()?;
    let substituted = p.map_coeffs(|c| {
        c.subst_poly(Var::MacQ, &Poly::var(Var::CapT1))
            .expect("rename")
            .subst(Var::MacT, &t2_inv)
            .expect("inverse substitution")
    });
    let upsiloned = upsilon(&substituted, false);
    // Scalar prefactor.
    let mut scalar = RatFunc::var(Var::CapT2).pow(lambda.nstat())?;
    for (i, &part) in lambda.parts().iter().enumerate() {
        for j in 1..=part as usize {
            let (a, l) = lambda.arm_leg(i + 1, j)?;
            // 1 - T1^a T2^(-l-1) = (T2^(l+1) - T1^a) / T2^(l+1)
            let t2l = Poly::var_pow(Var::CapT2, l + 1);
            let f = RatFunc::new(t2l.sub(&Poly::var_pow(Var::CapT1, a)), t2l)?;
            scalar = scalar.mul(&f);
        }
    }
    Ok(upsiloned.scale(&scalar))
}

/// The matrix with columns H^lambda over the decreasing-lex basis.
pub fn haiman_matrix(n: usize) -> Result<OperatorMatrix> {
    let basis = Partition::enumerate(n);
    let cols: Result<Vec<FockVector>> = basis.iter().map(haiman_h).collect();
    Ok(OperatorMatrix::from_columns(n, &cols?))
}

/// Invertibility of the Haiman family as rational functions of (T1, T2).
pub fn check_haiman_invertible(n: usize) -> Result<()> {
    let m = haiman_matrix(n)?;
    let p = m.dim();
    let rows: Vec<Vec<RatFunc>> = (0..p)
        .map(|r| (0..p).map(|c| m.entry(r, c).clone()).collect())
        .collect();
    let det = crate::algebra::linsolve::ratfunc_det(&rows);
    if det.is_zero() {
        return Err(Error::SingularHMatrix);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ratfunc;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn upsilon_values() {
        let v = FockVector::basis_vector(&part(&[1]));
        let got = upsilon(&v, false);
        // (1 - T2^(-1))^(-1) = T2/(T2-1)
        assert_eq!(
            got.coeff(&part(&[1])),
            parse_ratfunc("T2/(T2-1)").unwrap()
        );
        // Upsilon^(-1) Upsilon = id on energy <= 5.
        for n in 1..=5usize {
            for mu in Partition::enumerate(n) {
                let v = FockVector::basis_vector(&mu).scale(&parse_ratfunc("T1-2*T2").unwrap());
                assert_eq!(upsilon(&upsilon(&v, false), true), v);
            }
        }
        // Upsilon |2,1> scales by (1-T2^(-2))^(-1) (1-T2^(-1))^(-1).
        let v = FockVector::basis_vector(&part(&[2, 1]));
        let got = upsilon(&v, false);
        let want = parse_ratfunc("T2^2/(T2^2-1) * T2/(T2-1)").unwrap();
        assert_eq!(got.coeff(&part(&[2, 1])), want);
    }

    #[test]
    fn haiman_h1_is_basis_vector() {
        // Hand evaluation: n(lambda)=0, box product (1-T2^(-1)), Upsilon
        // contributes (1-T2^(-1))^(-1), P=|1>.
        let h = haiman_h(&part(&[1])).unwrap();
        assert_eq!(h, FockVector::basis_vector(&part(&[1])));
    }

    #[test]
    fn haiman_energy_and_invertibility() {
        for n in 1..=4usize {
            for lam in Partition::enumerate(n) {
                let h = haiman_h(&lam).unwrap();
                assert_eq!(h.energy(), n);
                assert!(!h.is_zero());
            }
            check_haiman_invertible(n).unwrap();
        }
    }
}
