//! The fixed variable alphabet of the symbolic layer.

use std::fmt;

use crate::error::{Error, Result};

/// A symbolic variable. The alphabet is fixed: `q` is the differential
/// equation variable, `t1`/`t2` the equivariant parameters, `Q`/`T` the
/// Macdonald parameters, `T1`/`T2` their exponentiated counterparts, and
/// `s1`/`s2` stand for `T1^(1/2)`/`T2^(1/2)` (half-integer exponent
/// lattices are represented through these square roots).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Var {
    Q = 0,
    T1 = 1,
    T2 = 2,
    MacQ = 3,
    MacT = 4,
    CapT1 = 5,
    CapT2 = 6,
    HalfT1 = 7,
    HalfT2 = 8,
}

pub const VAR_COUNT: usize = 9;

impl Var {
    pub const ALL: [Var; VAR_COUNT] = [
        Var::Q,
        Var::T1,
        Var::T2,
        Var::MacQ,
        Var::MacT,
        Var::CapT1,
        Var::CapT2,
        Var::HalfT1,
        Var::HalfT2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T1 => "t1",
            Var::T2 => "t2",
            Var::MacQ => "Q",
            Var::MacT => "T",
            Var::CapT1 => "T1",
            Var::CapT2 => "T2",
            Var::HalfT1 => "s1",
            Var::HalfT2 => "s2",
        }
    }

    pub fn from_name(name: &str) -> Result<Var> {
        for v in Var::ALL {
            if v.name() == name {
                return Ok(v);
            }
        }
        Err(Error::Parse(format!("unknown variable `{name}`")))
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An ordered subset of the alphabet, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VarSet(u16);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn single(v: Var) -> VarSet {
        VarSet(1 << v.index())
    }

    pub fn insert(&mut self, v: Var) {
        self.0 |= 1 << v.index();
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v.index()) != 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn remove(&mut self, v: Var) {
        self.0 &= !(1 << v.index());
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Variables in canonical (enum) order.
    pub fn iter(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |v| self.contains(*v))
    }

    /// Position of `v` within this set's canonical ordering.
    pub fn position(self, v: Var) -> Option<usize> {
        if !self.contains(v) {
            return None;
        }
        Some((self.0 & ((1 << v.index()) - 1)).count_ones() as usize)
    }
}

impl FromIterator<Var> for VarSet {
    fn from_iter<T: IntoIterator<Item = Var>>(iter: T) -> Self {
        let mut s = VarSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}
