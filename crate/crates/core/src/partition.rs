//! Integer partitions: enumeration in the fixed basis order, hooks,
//! contents, tangent weights, and the orders used by the symmetric-function
//! layer.
//!
//! The basis order everywhere is decreasing lexicographic, largest part
//! first: for n = 3 it is (3), (2,1), (1,1,1). `Ord` sorts first by size,
//! then by this basis order, so sorted containers enumerate basis vectors
//! in matrix row/column order.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{rat_int, Poly, Rat, Var};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidArgument("zero part in partition".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(vec![])
    }

    /// Builds from unsorted positive parts.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Partition> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum::<u32>() as usize
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of the part `k`.
    pub fn multiplicity(&self, k: u32) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn enumerate(n: usize) -> Vec<Partition> {
        fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            let hi = max_part.min(remaining);
            for p in (1..=hi).rev() {
                prefix.push(p);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n as u32, n as u32, &mut Vec::new(), &mut out);
        out
    }

    /// Index of this partition within `enumerate(self.size())`.
    pub fn basis_index(&self) -> usize {
        Partition::enumerate(self.size())
            .iter()
            .position(|p| p == self)
            .expect("partition indexes its own size")
    }

    /// The normalization factor z(mu) = |Aut(mu)| * prod(mu_i).
    pub fn zmu(&self) -> Rat {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let mut count = 0u32;
            while i < self.0.len() && self.0[i] == part {
                count += 1;
                i += 1;
            }
            // count! * part^count
            for c in 1..=count {
                z *= BigInt::from(c);
            }
            for _ in 0..count {
                z *= BigInt::from(part);
            }
        }
        Rat::from_integer(z)
    }

    /// Arm and leg length of the 1-based box (row i, column j).
    pub fn arm_leg(&self, row: usize, col: usize) -> Result<(u32, u32)> {
        if row == 0 || col == 0 || row > self.0.len() || col as u32 > self.0[row - 1] {
            return Err(Error::BoxOutsideDiagram { row, col });
        }
        let arm = self.0[row - 1] - col as u32;
        let leg = self.transpose().0[col - 1] - row as u32;
        Ok((arm, leg))
    }

    /// Sum of box contents: c(lambda) = sum over boxes of (j-1) t1 + (i-1) t2.
    pub fn content_sum(&self) -> Poly {
        let (a, b) = self.content_coeffs();
        Poly::var(Var::T1)
            .scale(&rat_int(a))
            .add(&Poly::var(Var::T2).scale(&rat_int(b)))
    }

    /// (n(lambda'), n(lambda)): the integer coefficients of t1 and t2 in
    /// the content sum.
    pub fn content_coeffs(&self) -> (i64, i64) {
        let mut a = 0i64;
        let mut b = 0i64;
        for (i, &part) in self.0.iter().enumerate() {
            // row i+1 contributes columns 1..=part
            a += (0..part as i64).sum::<i64>();
            b += i as i64 * part as i64;
        }
        (a, b)
    }

    /// The 2|lambda| tangent weights t1(a+1) - t2 l and -t1 a + t2(l+1).
    pub fn tangent_weights(&self) -> Vec<Poly> {
        let t1 = Poly::var(Var::T1);
        let t2 = Poly::var(Var::T2);
        let mut out = Vec::with_capacity(2 * self.size());
        for (i, &part) in self.0.iter().enumerate() {
            for j in 1..=part as usize {
                let (a, l) = self.arm_leg(i + 1, j).expect("box inside diagram");
                out.push(
                    t1.scale(&rat_int(a as i64 + 1))
                        .sub(&t2.scale(&rat_int(l as i64))),
                );
                out.push(
                    t1.scale(&rat_int(-(a as i64)))
                        .add(&t2.scale(&rat_int(l as i64 + 1))),
                );
            }
        }
        out
    }

    /// Product of all hook lengths a + l + 1.
    pub fn hook_product(&self) -> BigInt {
        let mut h = BigInt::one();
        for (i, &part) in self.0.iter().enumerate() {
            for j in 1..=part as usize {
                let (a, l) = self.arm_leg(i + 1, j).expect("box inside diagram");
                h *= BigInt::from(a + l + 1);
            }
        }
        h
    }

    /// n(lambda) = sum (i-1) lambda_i.
    pub fn nstat(&self) -> i64 {
        self.content_coeffs().1
    }

    pub fn transpose(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let parts = (1..=cols)
            .map(|j| self.0.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// f2(lambda): the sum of contents j - i over all boxes.
    pub fn f2(&self) -> i64 {
        let (a, b) = self.content_coeffs();
        a - b
    }

    /// `true` when self is dominated by `other` (both of the same size).
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let mut sa = 0u64;
        let mut sb = 0u64;
        let rows = self.0.len().max(other.0.len());
        for i in 0..rows {
            sa += *self.0.get(i).unwrap_or(&0) as u64;
            sb += *other.0.get(i).unwrap_or(&0) as u64;
            if sa > sb {
                return false;
            }
        }
        true
    }

    /// Dominance comparison; `None` for incomparable pairs.
    pub fn dominance_cmp(&self, other: &Partition) -> Option<Ordering> {
        let le = self.dominance_leq(other);
        let ge = other.dominance_leq(self);
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }

    /// The content-order refinement: lambda <_c mu iff f2(lambda) < f2(mu).
    pub fn content_order_lt(&self, other: &Partition) -> bool {
        self.f2() < other.f2()
    }

    /// Partition with one extra part `k`.
    pub fn with_part(&self, k: u32) -> Partition {
        let mut parts = self.0.clone();
        let pos = parts.partition_point(|&p| p >= k);
        parts.insert(pos, k);
        Partition(parts)
    }

    /// Partition with one part `k` removed; `None` if there is none.
    pub fn without_part(&self, k: u32) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == k)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|_| Error::Parse(format!("bad partition `{s}`")))?;
        Partition::new(parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for (i, part) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_order_n3() {
        let got = Partition::enumerate(3);
        assert_eq!(got, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn enumerate_n0_and_counts() {
        assert_eq!(Partition::enumerate(0), vec![Partition::empty()]);
        assert_eq!(Partition::enumerate(5).len(), 7);
        // Oracle: partition counts p(n) for n <= 20.
        let table = [
            1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385,
            490, 627,
        ];
        for (n, want) in table.iter().enumerate() {
            assert_eq!(Partition::enumerate(n).len(), *want, "p({n})");
        }
    }

    #[test]
    fn zmu_values() {
        assert_eq!(p(&[2, 1]).zmu(), rat_int(2));
        assert_eq!(p(&[1, 1, 1]).zmu(), rat_int(6));
        assert_eq!(Partition::empty().zmu(), rat_int(1));
    }

    #[test]
    fn arm_leg_values() {
        assert_eq!(p(&[2]).arm_leg(1, 1).unwrap(), (1, 0));
        assert_eq!(p(&[1]).arm_leg(1, 1).unwrap(), (0, 0));
        assert_eq!(p(&[2, 1]).arm_leg(1, 1).unwrap(), (1, 1));
        assert!(matches!(
            p(&[2, 1]).arm_leg(2, 2),
            Err(Error::BoxOutsideDiagram { .. })
        ));
    }

    #[test]
    fn content_sum_values() {
        let t1 = Poly::var(Var::T1);
        let t2 = Poly::var(Var::T2);
        assert!(p(&[1]).content_sum().is_zero());
        assert_eq!(p(&[3]).content_sum(), t1.scale(&rat_int(3)));
        assert_eq!(p(&[2, 1]).content_sum(), t1.add(&t2));
    }

    #[test]
    fn tangent_weight_values() {
        let t1 = Poly::var(Var::T1);
        let t2 = Poly::var(Var::T2);
        let sort_strings = |ws: Vec<Poly>| {
            let mut v: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
            v.sort();
            v
        };
        assert_eq!(
            sort_strings(p(&[1]).tangent_weights()),
            sort_strings(vec![t1.clone(), t2.clone()])
        );
        assert_eq!(
            sort_strings(p(&[2]).tangent_weights()),
            sort_strings(vec![
                t1.scale(&rat_int(2)),
                t1.neg().add(&t2),
                t1.clone(),
                t2.clone()
            ])
        );
        assert!(Partition::empty().tangent_weights().is_empty());
    }

    #[test]
    fn hooks_transpose_f2() {
        assert_eq!(p(&[2, 1]).hook_product(), BigInt::from(3));
        assert_eq!(p(&[3]).transpose(), p(&[1, 1, 1]));
        assert_eq!(p(&[2]).f2(), 1);
        assert_eq!(p(&[1, 1]).f2(), -1);
        assert!(p(&[1, 1]).content_order_lt(&p(&[2])));
    }

    #[test]
    fn transpose_involution_and_size() {
        for n in 0..=8 {
            for lam in Partition::enumerate(n) {
                let t = lam.transpose();
                assert_eq!(t.size(), lam.size());
                assert_eq!(t.transpose(), lam);
            }
        }
    }

    #[test]
    fn content_symmetry_under_transpose() {
        for n in 0..=8 {
            for lam in Partition::enumerate(n) {
                // c(lambda; t2, t1) = c(lambda'; t1, t2)
                let swapped = lam.content_sum().swap_vars(Var::T1, Var::T2);
                assert_eq!(swapped, lam.transpose().content_sum());
                // tangent weights swap as multisets
                let mut a: Vec<String> = lam
                    .tangent_weights()
                    .iter()
                    .map(|w| w.swap_vars(Var::T1, Var::T2).to_string())
                    .collect();
                let mut b: Vec<String> = lam
                    .transpose()
                    .tangent_weights()
                    .iter()
                    .map(|w| w.to_string())
                    .collect();
                a.sort();
                b.sort();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn dominance_refines_content_order() {
        for n in 0..=10 {
            let parts = Partition::enumerate(n);
            for a in &parts {
                for b in &parts {
                    if a != b && a.dominance_leq(b) && b.dominance_leq(a) {
                        panic!("distinct comparable-equal partitions");
                    }
                    if a.dominance_leq(b) {
                        assert!(a.f2() <= b.f2());
                        if a.f2() == b.f2() {
                            assert_eq!(a, b);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in ["2,1", "-", "5", "3,3,1"] {
            let lam = Partition::parse(s).unwrap();
            assert_eq!(lam.to_string(), s);
        }
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("0").is_err());
    }
}
