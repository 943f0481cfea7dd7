//! The operator M(q,t1,t2) of the quantum differential equation, its
//! variants M_D and M(0), the Calogero-Sutherland form, residues at the
//! roots of unity, and the structural symmetry checks — all as exact
//! matrices over the rational-function field, one energy level at a time.

use num_traits::One;

use crate::algebra::cyclotomic::{CycElem, CyclotomicField};
use crate::algebra::linsolve::bareiss_det;
use crate::algebra::{rat_int, Poly, Rat, RatFunc, Var};
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::partition::Partition;

/// A p(n) x p(n) matrix over the rational-function field in the fixed
/// decreasing-lex basis; entry (r,c) is the coefficient of |basis[r]> in
/// Op |basis[c]>.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperatorMatrix {
    energy: usize,
    basis: Vec<Partition>,
    entries: Vec<RatFunc>,
}

impl OperatorMatrix {
    pub fn from_columns(energy: usize, columns: &[FockVector]) -> OperatorMatrix {
        let basis = Partition::enumerate(energy);
        let p = basis.len();
        assert_eq!(columns.len(), p);
        let mut entries = vec![RatFunc::zero(); p * p];
        for (c, col) in columns.iter().enumerate() {
            for (r, mu) in basis.iter().enumerate() {
                entries[r * p + c] = col.coeff(mu);
            }
        }
        OperatorMatrix {
            energy,
            basis,
            entries,
        }
    }

    pub fn zero(energy: usize) -> OperatorMatrix {
        let basis = Partition::enumerate(energy);
        let p = basis.len();
        OperatorMatrix {
            energy,
            basis,
            entries: vec![RatFunc::zero(); p * p],
        }
    }

    pub fn identity(energy: usize) -> OperatorMatrix {
        let mut m = OperatorMatrix::zero(energy);
        let p = m.dim();
        for i in 0..p {
            m.entries[i * p + i] = RatFunc::one();
        }
        m
    }

    pub fn diagonal(energy: usize, diag: &[RatFunc]) -> OperatorMatrix {
        let mut m = OperatorMatrix::zero(energy);
        let p = m.dim();
        assert_eq!(diag.len(), p);
        for i in 0..p {
            m.entries[i * p + i] = diag[i].clone();
        }
        m
    }

    pub fn energy(&self) -> usize {
        self.energy
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn entry(&self, r: usize, c: usize) -> &RatFunc {
        &self.entries[r * self.dim() + c]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, v: RatFunc) {
        let p = self.dim();
        self.entries[r * p + c] = v;
    }

    pub fn map(&self, f: impl Fn(&RatFunc) -> RatFunc) -> OperatorMatrix {
        OperatorMatrix {
            energy: self.energy,
            basis: self.basis.clone(),
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.energy, other.energy);
        OperatorMatrix {
            energy: self.energy,
            basis: self.basis.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &OperatorMatrix) -> OperatorMatrix {
        self.add(&other.map(|e| e.neg()))
    }

    pub fn mul(&self, other: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.energy, other.energy);
        let p = self.dim();
        let mut out = OperatorMatrix::zero(self.energy);
        for r in 0..p {
            for c in 0..p {
                let mut acc = RatFunc::zero();
                for k in 0..p {
                    acc = acc.add(&self.entry(r, k).mul(other.entry(k, c)));
                }
                out.entries[r * p + c] = acc;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Conjugation D M D^(-1) by a diagonal matrix.
    pub fn conj_by_diag(&self, diag: &[RatFunc]) -> Result<OperatorMatrix> {
        let p = self.dim();
        let mut out = self.clone();
        for r in 0..p {
            for c in 0..p {
                let v = diag[r].mul(self.entry(r, c)).div(&diag[c])?;
                out.entries[r * p + c] = v;
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &FockVector) -> Result<FockVector> {
        if v.energy() != self.energy {
            return Err(Error::MixedEnergy {
                left: self.energy,
                right: v.energy(),
            });
        }
        let p = self.dim();
        let mut out = FockVector::zero(self.energy);
        for (c, sigma) in self.basis.iter().enumerate() {
            let vc = v.coeff(sigma);
            if vc.is_zero() {
                continue;
            }
            for r in 0..p {
                let e = self.entry(r, c);
                if e.is_zero() {
                    continue;
                }
                let term = FockVector::basis_vector(&self.basis[r]).scale(&e.mul(&vc));
                out = out.add(&term)?;
            }
        }
        Ok(out)
    }

    /// Substitutes q = 0 entrywise.
    pub fn eval_q0(&self) -> OperatorMatrix {
        self.map(|e| {
            e.subst_poly(Var::Q, &Poly::zero())
                .expect("q=0 is regular for these entries")
        })
    }

    /// Substitutes q -> 1/q entrywise.
    pub fn subst_q_inverse(&self) -> OperatorMatrix {
        self.map(|e| e.subst_inverse(Var::Q))
    }

    /// Entries as polynomials, when no denominators remain.
    pub fn to_poly_matrix(&self) -> Option<Vec<Vec<Poly>>> {
        let p = self.dim();
        let mut out = vec![vec![Poly::zero(); p]; p];
        for r in 0..p {
            for c in 0..p {
                let e = self.entry(r, c);
                if !e.den().is_one() {
                    return None;
                }
                out[r][c] = e.num().clone();
            }
        }
        Some(out)
    }

    pub fn trace(&self) -> RatFunc {
        let mut t = RatFunc::zero();
        for i in 0..self.dim() {
            t = t.add(self.entry(i, i));
        }
        t
    }
}

/// The diagonal factor A_k(q) = ((-q)^k + 1) / ((-q)^k - 1).
pub fn a_factor(k: u32) -> RatFunc {
    let mq_k = Poly::var_pow(Var::Q, k).scale(&rat_int(if k % 2 == 0 { 1 } else { -1 }));
    RatFunc::new(mq_k.add(&Poly::one()), mq_k.sub(&Poly::one())).expect("denominator nonzero")
}

/// The operator (1/2) sum_{k,l>0} [t1 t2 a_{k+l} a_{-k} a_{-l} -
/// a_{-k-l} a_k a_l] applied to |sigma>: the splitting and joining terms.
fn splitting_joining_column(sigma: &Partition) -> FockVector {
    let n = sigma.size();
    let v = FockVector::basis_vector(sigma);
    let t1t2 = RatFunc::var(Var::T1).mul(&RatFunc::var(Var::T2));
    let half = RatFunc::constant(Rat::new(1.into(), 2.into()));
    let mut out = FockVector::zero(n);
    for k in 1..=n as i64 {
        for l in 1..=n as i64 {
            if k + l > n as i64 {
                continue;
            }
            // splitting: a_{k+l} a_{-k} a_{-l}
            let split = v.apply_alpha(-l).apply_alpha(-k).apply_alpha(k + l);
            out = out
                .add(&split.scale(&half.mul(&t1t2)))
                .expect("energy preserved");
            // joining: -a_{-k-l} a_k a_l
            let join = v.apply_alpha(l).apply_alpha(k).apply_alpha(-(k + l));
            out = out
                .add(&join.scale(&half.neg()))
                .expect("energy preserved");
        }
    }
    out
}

/// The operator M(q,t1,t2) at energy n.
pub fn build_m(n: usize) -> OperatorMatrix {
    assert!(n >= 1);
    let t_sum = RatFunc::var(Var::T1).add(&RatFunc::var(Var::T2));
    let basis = Partition::enumerate(n);
    let columns: Vec<FockVector> = basis
        .iter()
        .map(|sigma| {
            let mut diag = RatFunc::zero();
            for &part in sigma.parts() {
                let coeff = Rat::new((part as i64 * part as i64).into(), 2.into());
                diag = diag.add(&a_factor(part).scale(&coeff));
            }
            let mut col = splitting_joining_column(sigma);
            col = col
                .add(&FockVector::basis_vector(sigma).scale(&diag.mul(&t_sum)))
                .expect("energy preserved");
            col
        })
        .collect();
    OperatorMatrix::from_columns(n, &columns)
}

/// M_D = M - (t1+t2)/2 A_1(q) |.| ; q = -1 is a regular point of this form.
pub fn build_md(n: usize) -> OperatorMatrix {
    let m = build_m(n);
    let t_sum = RatFunc::var(Var::T1).add(&RatFunc::var(Var::T2));
    let shift = a_factor(1)
        .mul(&t_sum)
        .scale(&Rat::new((n as i64).into(), 2.into()));
    let p = m.dim();
    let mut out = m;
    for i in 0..p {
        let v = out.entry(i, i).sub(&shift);
        out.set_entry(i, i, v);
    }
    out
}

/// M_D evaluated at q = 0 (every A_k becomes -1).
pub fn build_m0(n: usize) -> OperatorMatrix {
    build_md(n).eval_q0()
}

/// The Fock-space Calogero-Sutherland operator
/// Delta_CS = (1-theta)/2 sum k a_{-k} a_k
///          + 1/2 sum [a_{-k-l} a_k a_l + theta a_{k+l} a_{-k} a_{-l}].
pub fn build_cs(n: usize, theta: &RatFunc) -> OperatorMatrix {
    assert!(n >= 1);
    let basis = Partition::enumerate(n);
    let half = Rat::new(1.into(), 2.into());
    let diag_coeff = RatFunc::one().sub(theta).scale(&half);
    let columns: Vec<FockVector> = basis
        .iter()
        .map(|sigma| {
            let v = FockVector::basis_vector(sigma);
            // Diagonal: sum_k k a_{-k} a_k has eigenvalue sum_i sigma_i^2.
            let sq: i64 = sigma.parts().iter().map(|&p| (p as i64) * (p as i64)).sum();
            let mut col = v.scale(&diag_coeff.scale(&rat_int(sq)));
            let nn = sigma.size() as i64;
            for k in 1..=nn {
                for l in 1..=nn {
                    if k + l > nn {
                        continue;
                    }
                    let join = v.apply_alpha(l).apply_alpha(k).apply_alpha(-(k + l));
                    col = col
                        .add(&join.scale(&RatFunc::constant(half.clone())))
                        .expect("energy preserved");
                    let split = v.apply_alpha(-l).apply_alpha(-k).apply_alpha(k + l);
                    col = col
                        .add(&split.scale(&theta.scale(&half)))
                        .expect("energy preserved");
                }
            }
            col
        })
        .collect();
    OperatorMatrix::from_columns(n, &columns)
}

/// Verifies M(0) = -t1^(l(.)+1) Delta_CS|_(theta=-t2/t1) t1^(-l(.)) as an
/// exact matrix identity; returns the diagonal shift (a multiple of the
/// identity) needed to make it hold — zero when the identity is exact.
pub fn check_mdcs(n: usize) -> Result<RatFunc> {
    let m0_full = build_m(n).eval_q0();
    let theta = RatFunc::var(Var::T2).neg().div(&RatFunc::var(Var::T1))?;
    let cs = build_cs(n, &theta);
    let t1 = RatFunc::var(Var::T1);
    let diag: Vec<RatFunc> = cs
        .basis()
        .iter()
        .map(|mu| t1.pow(mu.len() as i64).expect("t1 invertible"))
        .collect();
    let rhs = cs.conj_by_diag(&diag)?.map(|e| e.mul(&t1).neg());
    let diff = m0_full.sub(&rhs);
    // Exact equality leaves zero; otherwise accept only a scalar multiple
    // of the identity and report it.
    let shift = diff.entry(0, 0).clone();
    let p = diff.dim();
    for r in 0..p {
        for c in 0..p {
            let want = if r == c { &shift } else { &RatFunc::zero() };
            if diff.entry(r, c) != want {
                return Err(Error::InvalidArgument(format!(
                    "CS relation fails beyond a scalar shift at entry ({r},{c}): {}",
                    diff.entry(r, c)
                )));
            }
        }
    }
    Ok(shift)
}

/// Verifies the theta <-> 1/theta duality: conjugating Delta_CS at
/// theta = -t2/t1 by t1^(l(.)) agrees with conjugating the t-swapped
/// operator at theta = -t1/t2 with t2 in place of t1 (both equal -M(0)).
pub fn check_cs_duality(n: usize) -> Result<()> {
    let make = |num: Var, den: Var| -> Result<OperatorMatrix> {
        let theta = RatFunc::var(num).neg().div(&RatFunc::var(den))?;
        let cs = build_cs(n, &theta);
        let scalar = RatFunc::var(den);
        let diag: Vec<RatFunc> = cs
            .basis()
            .iter()
            .map(|mu| scalar.pow(mu.len() as i64).expect("invertible"))
            .collect();
        Ok(cs.conj_by_diag(&diag)?.map(|e| e.mul(&scalar).neg()))
    };
    let lhs = make(Var::T2, Var::T1)?;
    let rhs = make(Var::T1, Var::T2)?;
    if lhs != rhs {
        return Err(Error::InvalidArgument(
            "CS duality: conjugated operators disagree".into(),
        ));
    }
    Ok(())
}

/// A singular point of the level-n equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingularPoint {
    Zero,
    Infinity,
    /// zeta = -eta with eta = exp(2 pi i j / d) a primitive d-th root of
    /// unity, 2 <= d <= n.
    RootOfUnity {
        order: u32,
        index: u32,
    },
}

impl std::fmt::Display for SingularPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SingularPoint::Zero => f.write_str("0"),
            SingularPoint::Infinity => f.write_str("inf"),
            SingularPoint::RootOfUnity { order, index } => {
                write!(f, "-exp(2*pi*i*{index}/{order})")
            }
        }
    }
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// All singular points of the energy-n block: 0, infinity, and the roots
/// zeta != -1 with (-zeta)^m = 1 for some 2 <= m <= n.
pub fn singular_points(n: usize) -> Vec<SingularPoint> {
    let mut out = vec![SingularPoint::Zero, SingularPoint::Infinity];
    for d in 2..=n as u32 {
        for j in 1..=d {
            if gcd_u32(j, d) == 1 {
                out.push(SingularPoint::RootOfUnity { order: d, index: j % d });
            }
        }
    }
    out
}

/// The claimed residue of q^(-1) M_D at a root of unity: the diagonal
/// operator (t1+t2) sum_{k : d | k} a_{-k} a_k, with eigenvalue
/// (t1+t2) sum_{d | k} k m_k(mu) on |mu>.
pub fn residue_at_root(n: usize, point: &SingularPoint) -> Result<OperatorMatrix> {
    let d = match point {
        SingularPoint::RootOfUnity { order, .. } => *order,
        other => {
            return Err(Error::NotASingularRoot(other.to_string()));
        }
    };
    if d < 2 || d as usize > n {
        return Err(Error::NotASingularRoot(point.to_string()));
    }
    let t_sum = RatFunc::var(Var::T1).add(&RatFunc::var(Var::T2));
    let basis = Partition::enumerate(n);
    let diag: Vec<RatFunc> = basis
        .iter()
        .map(|mu| {
            let s: i64 = mu
                .parts()
                .iter()
                .filter(|&&p| p % d == 0)
                .map(|&p| p as i64)
                .sum();
            t_sum.scale(&rat_int(s))
        })
        .collect();
    Ok(OperatorMatrix::diagonal(n, &diag))
}

/// The exact residue of q^(-1) M_D(q) at zeta = -eta, computed in the
/// cyclotomic field Q(t1,t2)(eta); one computation per order d covers all
/// primitive eta simultaneously.
pub fn symbolic_residue(md: &OperatorMatrix, d: u32) -> Result<Vec<CycElem>> {
    let field = CyclotomicField::new(d);
    // zeta = -eta
    let zeta = {
        let mut e = field.eta_pow(1);
        for c in e.0.iter_mut() {
            *c = c.neg();
        }
        e
    };
    let p = md.dim();
    let mut out = Vec::with_capacity(p * p);
    for r in 0..p {
        for c in 0..p {
            let e = md.entry(r, c);
            let den_at = field.eval_poly_at(e.den(), Var::Q, &zeta);
            if !field.is_zero(&den_at) {
                out.push(field.zero());
                continue;
            }
            // Simple pole: residue of N/(q D) is N(zeta) / (zeta D'(zeta)).
            let dprime = e.den().derivative(Var::Q);
            let dp_at = field.eval_poly_at(&dprime, Var::Q, &zeta);
            if field.is_zero(&dp_at) {
                return Err(Error::InvalidArgument(format!(
                    "higher-order pole at order-{d} root in entry ({r},{c})"
                )));
            }
            let num_at = field.eval_poly_at(e.num(), Var::Q, &zeta);
            let denom = field.mul(&zeta, &dp_at);
            let res = field.mul(&num_at, &field.inv(&denom)?);
            out.push(res);
        }
    }
    Ok(out)
}

/// Checks the residue formula exactly for every singular root of unity of
/// the level-n equation.
pub fn check_residues(n: usize) -> Result<()> {
    let md = build_md(n);
    for d in 2..=n as u32 {
        let field = CyclotomicField::new(d);
        let got = symbolic_residue(&md, d)?;
        let claimed = residue_at_root(
            n,
            &SingularPoint::RootOfUnity { order: d, index: 1 },
        )?;
        let p = md.dim();
        for r in 0..p {
            for c in 0..p {
                let want = field.scalar(claimed.entry(r, c).clone());
                if got[r * p + c] != want {
                    return Err(Error::InvalidArgument(format!(
                        "residue mismatch at order d={d}, entry ({r},{c})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Fuchsian residue sum: residues of q^(-1) M_D dq over all points of the
/// Riemann sphere add to zero. Residues at conjugate roots are summed via
/// the cyclotomic trace.
pub fn check_residue_sum(n: usize) -> Result<()> {
    let md = build_md(n);
    let p = md.dim();
    // Residue at 0 is M_D(0).
    let mut total = build_m0(n);
    // Residue at infinity: -[M_D(1/w)]_{w=0}.
    let at_inf = md.subst_q_inverse().eval_q0().map(|e| e.neg());
    total = total.add(&at_inf);
    for d in 2..=n as u32 {
        let field = CyclotomicField::new(d);
        let res = symbolic_residue(&md, d)?;
        for r in 0..p {
            for c in 0..p {
                let s = field.trace(&res[r * p + c]);
                let v = total.entry(r, c).add(&s);
                total.set_entry(r, c, v);
            }
        }
    }
    if !total.is_zero() {
        return Err(Error::InvalidArgument(
            "Fuchsian residue sum is nonzero".into(),
        ));
    }
    Ok(())
}

/// Skew-Hermiticity of M: <Mv, w> + <v, Mw> = 0 exactly on all basis
/// pairs, with the bar involution fixing q.
pub fn check_skew(n: usize) -> Result<()> {
    let m = build_m(n);
    let p = m.dim();
    let t1t2 = RatFunc::var(Var::T1).mul(&RatFunc::var(Var::T2));
    let basis = m.basis();
    let weight = |mu: &Partition| -> RatFunc {
        t1t2.pow(-(mu.len() as i64))
            .expect("invertible")
            .scale(&mu.zmu().recip())
    };
    for (r, rho) in basis.iter().enumerate() {
        for (c, sigma) in basis.iter().enumerate() {
            // <M|rho>, |sigma>> = bar(e_{sigma,rho}) w(sigma)
            // <|rho>, M|sigma>> = e_{rho,sigma} w(rho)
            let lhs = m.entry(c, r).bar().mul(&weight(sigma));
            let rhs = m.entry(r, c).mul(&weight(rho));
            if !lhs.add(&rhs).is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "skew-Hermiticity fails at pair ({rho},{sigma})"
                )));
            }
        }
    }
    Ok(())
}

/// Inversion symmetry M_D(1/q) = -(-1)^l(.) M_D(q) (-1)^l(.) as an exact
/// identity of rational functions.
pub fn check_inversion(n: usize) -> Result<()> {
    let md = build_md(n);
    let inv = md.subst_q_inverse();
    let basis = md.basis();
    let p = md.dim();
    for r in 0..p {
        for c in 0..p {
            let sign = if (basis[r].len() + basis[c].len()) % 2 == 0 {
                -1
            } else {
                1
            };
            let want = md.entry(r, c).scale(&rat_int(sign));
            if inv.entry(r, c) != &want {
                return Err(Error::InvalidArgument(format!(
                    "inversion symmetry fails at entry ({r},{c})"
                )));
            }
        }
    }
    Ok(())
}

/// Exact spectrum check: det(M0 + c(lambda)) = 0 for every lambda of size
/// n, and trace M0 = -sum c(lambda).
pub fn check_m0_spectrum(n: usize) -> Result<()> {
    let m0 = build_m0(n);
    let mat = m0
        .to_poly_matrix()
        .ok_or_else(|| Error::InvalidArgument("M0 should be polynomial".into()))?;
    let p = m0.dim();
    let mut c_sum = Poly::zero();
    for lam in m0.basis() {
        let c = lam.content_sum();
        c_sum = c_sum.add(&c);
        let mut shifted = mat.clone();
        for i in 0..p {
            shifted[i][i] = shifted[i][i].add(&c);
        }
        let det = bareiss_det(&shifted);
        if !det.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "-c({lam}) is not an eigenvalue of M0"
            )));
        }
    }
    let tr = m0.trace();
    if tr != RatFunc::from_poly(c_sum.neg()) {
        return Err(Error::InvalidArgument("trace of M0 mismatch".into()));
    }
    Ok(())
}

/// The displayed n = 3 matrix of M_D: a golden fixture.
pub fn golden_md3() -> OperatorMatrix {
    use crate::algebra::parse_ratfunc as rf;
    let parse = |s: &str| rf(s).expect("fixture parses");
    let rows = [
        ["3*(t1+t2)*(q^2-1)/(q^2-q+1)", "-3", "0"],
        ["2*t1*t2", "(t1+t2)*(q+1)/(q-1)", "-1"],
        ["0", "3*t1*t2", "0"],
    ];
    let mut m = OperatorMatrix::zero(3);
    for (r, row) in rows.iter().enumerate() {
        for (c, s) in row.iter().enumerate() {
            m.set_entry(r, c, parse(s));
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_ratfunc;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn md3_matches_golden_fixture() {
        assert_eq!(build_md(3), golden_md3());
    }

    #[test]
    fn m_offdiagonal_n2() {
        let m = build_m(2);
        // coefficient of |1,1> in M|2> is t1 t2; of |2> in M|1,1> is -1.
        let i2 = 0; // (2) comes first in decreasing lex
        let i11 = 1;
        assert_eq!(m.entry(i11, i2), &parse_ratfunc("t1*t2").unwrap());
        assert_eq!(m.entry(i2, i11), &RatFunc::int(-1));
    }

    #[test]
    fn m_offdiagonal_n3() {
        let m = build_m(3);
        // coefficient of |3> in M|2,1> is -3; of |1,1,1> in M|2,1> is 3 t1 t2.
        assert_eq!(m.entry(0, 1), &RatFunc::int(-3));
        assert_eq!(m.entry(2, 1), &parse_ratfunc("3*t1*t2").unwrap());
    }

    #[test]
    fn md_n1_is_zero() {
        assert!(build_md(1).is_zero());
    }

    #[test]
    fn md_n2_diagonal() {
        let md = build_md(2);
        // diagonal on |2> simplifies to (t1+t2)(q+1)/(q-1); on |1,1> to 0.
        assert_eq!(
            md.entry(0, 0),
            &parse_ratfunc("(t1+t2)*(q+1)/(q-1)").unwrap()
        );
        assert!(md.entry(1, 1).is_zero());
    }

    #[test]
    fn m0_matrices() {
        let m0 = build_m0(2);
        assert_eq!(m0.entry(0, 0), &parse_ratfunc("-(t1+t2)").unwrap());
        assert_eq!(m0.entry(0, 1), &RatFunc::int(-1));
        assert_eq!(m0.entry(1, 0), &parse_ratfunc("t1*t2").unwrap());
        assert!(m0.entry(1, 1).is_zero());
        let m0 = build_m0(3);
        let want = [
            ["-3*(t1+t2)", "-3", "0"],
            ["2*t1*t2", "-(t1+t2)", "-1"],
            ["0", "3*t1*t2", "0"],
        ];
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(m0.entry(r, c), &parse_ratfunc(want[r][c]).unwrap());
            }
        }
        // trace at n=3 is -4(t1+t2) = -sum of content sums.
        assert_eq!(m0.trace(), parse_ratfunc("-4*(t1+t2)").unwrap());
    }

    #[test]
    fn mdcs_identity_holds_exactly() {
        for n in 1..=5 {
            let shift = check_mdcs(n).unwrap();
            assert!(shift.is_zero(), "n={n} needs shift {shift}");
        }
    }

    #[test]
    fn cs_duality() {
        for n in 1..=4 {
            check_cs_duality(n).unwrap();
        }
    }

    #[test]
    fn singular_point_lists() {
        // n=3: {0, inf} plus zeta = 1 (d=2) and -e^{2 pi i/3}, -e^{4 pi i/3} (d=3).
        let pts = singular_points(3);
        assert_eq!(pts.len(), 5);
        assert!(pts.contains(&SingularPoint::RootOfUnity { order: 2, index: 1 }));
        assert!(pts.contains(&SingularPoint::RootOfUnity { order: 3, index: 1 }));
        assert!(pts.contains(&SingularPoint::RootOfUnity { order: 3, index: 2 }));
        // n=1: no roots of unity at all.
        assert_eq!(singular_points(1).len(), 2);
    }

    #[test]
    fn residue_diagonal_n2() {
        // zeta = 1 at n=2: diag(2(t1+t2), 0) in the order (2), (1,1).
        let r = residue_at_root(2, &SingularPoint::RootOfUnity { order: 2, index: 1 }).unwrap();
        assert_eq!(r.entry(0, 0), &parse_ratfunc("2*(t1+t2)").unwrap());
        assert!(r.entry(1, 1).is_zero());
        assert!(r.entry(0, 1).is_zero());
        assert!(residue_at_root(2, &SingularPoint::Zero).is_err());
    }

    #[test]
    fn residues_exact_small() {
        for n in 2..=4 {
            check_residues(n).unwrap();
            check_residue_sum(n).unwrap();
        }
    }

    #[test]
    fn skew_and_inversion_small() {
        for n in 1..=4 {
            check_skew(n).unwrap();
            check_inversion(n).unwrap();
        }
    }

    #[test]
    fn m0_spectrum_small() {
        for n in 1..=5 {
            check_m0_spectrum(n).unwrap();
        }
    }

    #[test]
    fn apply_matches_columns() {
        let m = build_m(3);
        let v = FockVector::basis_vector(&part(&[2, 1]));
        let got = m.apply(&v).unwrap();
        for (r, mu) in m.basis().iter().enumerate() {
            assert_eq!(&got.coeff(mu), m.entry(r, 1));
        }
    }
}
