//! Multivariate polynomial gcd via recursive content / primitive-part
//! reduction and a primitive pseudo-remainder sequence.
//!
//! Results are integer-primitive with positive graded-lex leading
//! coefficient; for coprime inputs the result is 1.

use super::poly::Poly;
use super::var::Var;

/// Content of `p` viewed in `v`: gcd of its `v`-coefficients.
fn content_in(p: &Poly, v: Var) -> Poly {
    let coeffs = p.coeffs_in(v);
    let mut acc = Poly::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        acc = poly_gcd(&acc, &c);
        if acc.is_one() {
            return acc;
        }
    }
    acc
}

/// Pseudo-remainder of `a` by `b` in the variable `v` (deg_v a >= deg_v b).
fn pseudo_rem(a: &Poly, b: &Poly, v: Var) -> Poly {
    let db = b.degree_in(v);
    let bc = b.coeffs_in(v);
    let lb = bc[db as usize].clone();
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree_in(v);
        if dr < db {
            break;
        }
        let rc = r.coeffs_in(v);
        let lr = rc[dr as usize].clone();
        // r <- lb*r - lr*x^(dr-db)*b
        let shift = Poly::var_pow(v, dr - db);
        r = r.mul(&lb).sub(&lr.mul(&shift).mul(b));
        debug_assert!(r.is_zero() || r.degree_in(v) < dr);
    }
    r
}

/// Greatest common divisor, normalized to integer-primitive form with
/// positive leading coefficient.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.integer_normal().0;
    }
    if b.is_zero() {
        return a.integer_normal().0;
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    let (a, _) = a.integer_normal();
    let (b, _) = b.integer_normal();
    // Main variable: present in both, smallest max degree; a variable
    // present in only one polynomial forces that side into its content.
    let common: Vec<Var> = a
        .vars()
        .iter()
        .filter(|v| b.vars().contains(*v))
        .collect();
    let v = match common
        .into_iter()
        .min_by_key(|v| a.degree_in(*v).max(b.degree_in(*v)))
    {
        Some(v) => v,
        None => {
            // Disjoint variable sets: gcd of contents only.
            return Poly::one();
        }
    };
    let ca = content_in(&a, v);
    let cb = content_in(&b, v);
    let cont = poly_gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");

    let (mut f, mut g) = if pa.degree_in(v) >= pb.degree_in(v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            break;
        }
        // Primitive PRS: strip content each step to contain growth.
        let rc = content_in(&r, v);
        let rp = r.div_exact(&rc).expect("content divides");
        f = g;
        g = rp;
        if g.degree_in(v) == 0 {
            g = Poly::one();
            break;
        }
    }
    let gp = g
        .div_exact(&content_in(&g, v))
        .expect("content divides");
    cont.mul(&gp).integer_normal().0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::rat_int;

    fn q() -> Poly {
        Poly::var(Var::Q)
    }
    fn t1() -> Poly {
        Poly::var(Var::T1)
    }
    fn t2() -> Poly {
        Poly::var(Var::T2)
    }

    #[test]
    fn univariate_common_factor() {
        let a = q().pow(2).sub(&Poly::one());
        let b = q().sub(&Poly::one());
        assert_eq!(poly_gcd(&a, &b), b);
    }

    #[test]
    fn coprime_pair() {
        // q^2-1 and q^2-q+1 share no factor.
        let a = q().pow(2).sub(&Poly::one());
        let b = q().pow(2).sub(&q()).add(&Poly::one());
        assert!(poly_gcd(&a, &b).is_one());
    }

    #[test]
    fn multivariate_factor() {
        // (t1+t2)^2*(t1-t2) and (t1+t2)*(t1*t2+1)
        let s = t1().add(&t2());
        let a = s.pow(2).mul(&t1().sub(&t2()));
        let b = s.mul(&t1().mul(&t2()).add(&Poly::one()));
        assert_eq!(poly_gcd(&a, &b), s);
    }

    #[test]
    fn scaling_invariance() {
        let s = t1().add(&t2()).mul(&q().sub(&Poly::int(3)));
        let a = s.scale(&rat_int(6));
        let b = s.scale(&rat_int(-15));
        assert_eq!(poly_gcd(&a, &b), s.integer_normal().0);
    }
}
