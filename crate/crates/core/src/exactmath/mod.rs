//! Exact integer/rational arithmetic and univariate polynomial algebra.
//!
//! Integers and rationals are `num-bigint` / `num-rational` values; every
//! polynomial routine on top of them is exact.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub mod factor;
pub mod identity;
pub mod intfactor;
pub mod intpoly;
pub mod matrix;
pub mod modp;
pub mod poly;

pub use factor::{factor_over_q, rational_roots, squarefree_decomposition, Factorization};
pub use identity::{identity_check_grid, GridOutcome};
pub use intpoly::IntPoly;
pub use matrix::{bezout_cofactors, discriminant, sylvester_matrix, sylvester_resultant, RatMatrix};
pub use poly::{poly_eval, poly_gcd, UniPoly};

/// Arbitrary-precision integer.
pub type Int = BigInt;
/// Normalized fraction of big integers (denominator positive, gcd 1).
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat_from_int(n: &Int) -> Rat {
    Rat::from_integer(n.clone())
}

/// Parse `"p/q"` or an integer literal. Decimal notation is rejected.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::usage(format!("cannot parse rational {s:?} (expected p/q or an integer)"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = Int::from_str(n.trim()).map_err(|_| bad())?;
            let d = Int::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::usage(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(n, d))
        }
        None => Int::from_str(s).map(Rat::from_integer).map_err(|_| bad()),
    }
}

pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    num_traits::pow(base.clone(), exp as usize)
}

/// `Some(n)` when `q` is an integer.
pub fn as_integer(q: &Rat) -> Option<Int> {
    q.is_integer().then(|| q.to_integer())
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rat>) -> Int {
    values
        .into_iter()
        .fold(Int::one(), |acc, q| acc.lcm(q.denom()))
}

/// Exact integer k-th root of a non-negative integer, if one exists.
pub fn exact_root(n: &Int, k: u32) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let r = n.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a Int>) -> Int {
    values.into_iter().fold(Int::zero(), |acc, v| acc.gcd(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("-149/29").unwrap(), rat(-149, 29));
        assert_eq!(parse_rat("12").unwrap(), rat_int(12));
        assert_eq!(parse_rat(" 4/-6 ").unwrap(), rat(-2, 3));
        assert!(parse_rat("q").is_err());
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn sixth_roots() {
        assert_eq!(exact_root(&int(729), 6), Some(int(3)));
        assert_eq!(exact_root(&int(730), 6), None);
        assert_eq!(exact_root(&int(0), 6), Some(int(0)));
        assert_eq!(exact_root(&int(-64), 6), None);
        let big = num_traits::pow(int(123_456_789), 6);
        assert_eq!(exact_root(&big, 6), Some(int(123_456_789)));
    }
}
