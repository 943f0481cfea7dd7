//! Exact linear algebra: fraction-free determinants over the polynomial
//! ring, Gaussian elimination over the rational-function field, and exact
//! rational solves.

use num_traits::{One, Zero};

use super::poly::{Poly, Rat};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Determinant by Bareiss one-step fraction-free elimination; all interior
/// divisions are exact in the polynomial ring.
pub fn bareiss_det(mat: &[Vec<Poly>]) -> Poly {
    let n = mat.len();
    if n == 0 {
        return Poly::one();
    }
    let mut a: Vec<Vec<Poly>> = mat.to_vec();
    let mut prev = Poly::one();
    let mut sign = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !a[r][k].is_zero());
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Kernel vector of a square matrix over the rational-function field whose
/// nullity is exactly one. Returns the vector scaled to polynomial entries
/// with no common factor.
pub fn kernel_vector(mat: &[Vec<RatFunc>]) -> Result<Vec<RatFunc>> {
    let n = mat.len();
    let mut a: Vec<Vec<RatFunc>> = mat.to_vec();
    // Forward elimination with column pivoting; record pivot column per row.
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let pr = (row..n).find(|&r| !a[r][col].is_zero());
        let pr = match pr {
            Some(pr) => pr,
            None => continue,
        };
        a.swap(row, pr);
        let inv = a[row][col].recip()?;
        for j in col..n {
            a[row][j] = a[row][j].mul(&inv);
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..n {
                    let sub = f.mul(&a[row][j]);
                    a[r][j] = a[r][j].sub(&sub);
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let rank = row;
    if rank != n - 1 {
        return Err(Error::DegenerateEigenvalue(format!(
            "nullity {} != 1",
            n - rank
        )));
    }
    let free_col = (0..n)
        .find(|c| !pivot_cols.contains(c))
        .expect("one free column");
    let mut v = vec![RatFunc::zero(); n];
    v[free_col] = RatFunc::one();
    for (r, &pc) in pivot_cols.iter().enumerate() {
        // x_pc = -a[r][free_col]
        v[pc] = a[r][free_col].neg();
    }
    // Clear denominators and content.
    let mut den = Poly::one();
    for x in &v {
        if !x.is_zero() {
            den = den
                .mul(x.den())
                .div_exact(&super::gcd::poly_gcd(&den, x.den()))
                .expect("gcd divides");
        }
    }
    let mut out: Vec<Poly> = v
        .iter()
        .map(|x| {
            x.mul(&RatFunc::from_poly(den.clone()))
                .num()
                .clone()
        })
        .collect();
    let mut content = Poly::zero();
    for p in &out {
        content = super::gcd::poly_gcd(&content, p);
        if content.is_one() {
            break;
        }
    }
    if !content.is_zero() && !content.is_one() {
        for p in &mut out {
            *p = p.div_exact(&content).expect("content divides");
        }
    }
    Ok(out.into_iter().map(RatFunc::from_poly).collect())
}

/// Determinant over the rational-function field by Gaussian elimination.
pub fn ratfunc_det(mat: &[Vec<RatFunc>]) -> RatFunc {
    let n = mat.len();
    let mut a: Vec<Vec<RatFunc>> = mat.to_vec();
    let mut det = RatFunc::one();
    for col in 0..n {
        let pr = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(pr) => pr,
            None => return RatFunc::zero(),
        };
        if pr != col {
            a.swap(col, pr);
            det = det.neg();
        }
        det = det.mul(&a[col][col]);
        let inv = a[col][col].recip().expect("pivot nonzero");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].mul(&inv);
            for j in col..n {
                let sub = f.mul(&a[col][j]);
                a[r][j] = a[r][j].sub(&sub);
            }
        }
    }
    det
}

/// Exact solve of a square rational system; `None` if singular.
pub fn rat_solve(mat: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let n = mat.len();
    let mut a: Vec<Vec<Rat>> = mat.to_vec();
    let mut b: Vec<Rat> = rhs.to_vec();
    for col in 0..n {
        let pr = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pr);
        b.swap(col, pr);
        let inv = a[col][col].clone().recip();
        for j in col..n {
            a[col][j] = &a[col][j] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..n {
                    let sub = &f * &a[col][j];
                    a[r][j] -= sub;
                }
                let sub = &f * &b[col];
                b[r] -= sub;
            }
        }
    }
    Some(b)
}

/// Exact inverse of a square rational matrix; `None` if singular.
pub fn rat_inverse(mat: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = mat.len();
    let mut a: Vec<Vec<Rat>> = mat.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pr = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pr);
        inv.swap(col, pr);
        let pinv = a[col][col].clone().recip();
        for j in 0..n {
            a[col][j] = &a[col][j] * &pinv;
            inv[col][j] = &inv[col][j] * &pinv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let s1 = &f * &a[col][j];
                    a[r][j] -= s1;
                    let s2 = &f * &inv[col][j];
                    inv[r][j] -= s2;
                }
            }
        }
    }
    Some(inv)
}
