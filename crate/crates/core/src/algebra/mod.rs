//! Exact scalar arithmetic: arbitrary-precision rationals, sparse
//! multivariate polynomials, normalized rational functions, Laurent
//! polynomials, cyclotomic extensions, and exact linear algebra.

pub mod cyclotomic;
pub mod gcd;
pub mod laurent;
pub mod linsolve;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod var;

pub use gcd::poly_gcd;
pub use laurent::LaurentPoly;
pub use parse::{parse_poly, parse_ratfunc, rat_from_str};
pub use poly::{rat_int, Mono, Poly, Rat};
pub use ratfunc::RatFunc;
pub use var::{Var, VarSet};
