//! From a solution `(x, y)` to the parameter
//! `N = m + (m^2+3m+9) xy(x+y)(x-y)(x+2y)(2x+y) / F_m(x, y)`, whose sextic
//! field equals that of `m`.

use std::fmt;

use num_traits::Zero;

use super::norm_int;
use crate::exactmath::{rat_from_int, Int, Rat};
use crate::family::{eval_form_int, is_trivial, LatticePoint};
use crate::resolvent::iso_test;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NValue {
    pub n: Rat,
    pub integral: bool,
    /// Integral and different from `m` and `-m-3`.
    pub admissible: bool,
}

pub fn n_from_solution(m: &Int, p: &LatticePoint) -> Result<NValue> {
    let f = eval_form_int(m, &p.x, &p.y);
    if f.is_zero() {
        return Err(Error::ZeroFormValue);
    }
    let n = rat_from_int(m) + Rat::new(norm_int(m) * p.trivial_product(), f);
    let integral = n.is_integer();
    let admissible = integral && n.to_integer() != *m && n.to_integer() != -m - 3;
    Ok(NValue { n, integral, admissible })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Trivial,
    /// `F_m(x, y)` does not divide `27(m^2+3m+9)`.
    RefutedNonDivisor { value: Int },
    /// A nontrivial solution with a divisor value: `N` is integral,
    /// admissible and its field equals that of `m`. Impossible for integer
    /// `m`; reaching it would contradict the sextic isomorphism theorem.
    WouldBeCoincidence { n: Rat },
    /// A step of the argument failed (non-integral `N`, or fields differ).
    Contradiction { n: Rat, reason: &'static str },
}

impl Verdict {
    /// True when the verdict signals a violated property.
    pub fn is_violation(&self) -> bool {
        matches!(self, Verdict::WouldBeCoincidence { .. } | Verdict::Contradiction { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Trivial => write!(f, "trivial"),
            Verdict::RefutedNonDivisor { value } => write!(f, "refuted: {value} does not divide 27(m^2+3m+9)"),
            Verdict::WouldBeCoincidence { n } => write!(f, "would-be coincidence with N={n}"),
            Verdict::Contradiction { n, reason } => write!(f, "contradiction at N={n}: {reason}"),
        }
    }
}

/// Follow a primitive candidate through the argument linking nontrivial
/// solutions to sextic field coincidences.
pub fn correspondence_check(m: &Int, p: &LatticePoint) -> Result<Verdict> {
    if !p.is_primitive() {
        return Err(Error::usage(format!("{p} is not primitive")));
    }
    if is_trivial(p) {
        return Ok(Verdict::Trivial);
    }
    let value = eval_form_int(m, &p.x, &p.y);
    if value.is_zero() {
        return Err(Error::ZeroFormValue);
    }
    let modulus: Int = norm_int(m) * 27;
    if !(modulus % &value).is_zero() {
        return Ok(Verdict::RefutedNonDivisor { value });
    }
    let nv = n_from_solution(m, p)?;
    if !nv.integral {
        return Ok(Verdict::Contradiction { n: nv.n, reason: "N is not an integer" });
    }
    if !nv.admissible {
        return Ok(Verdict::Contradiction { n: nv.n, reason: "N is m or -m-3 for a nontrivial point" });
    }
    if iso_test(&rat_from_int(m), &nv.n)?.0 {
        Ok(Verdict::WouldBeCoincidence { n: nv.n })
    } else {
        Ok(Verdict::Contradiction { n: nv.n, reason: "sextic fields of m and N differ" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat, rat_int};
    use crate::resolvent::param_from_z;

    #[test]
    fn n_values() {
        let nv = n_from_solution(&int(5), &LatticePoint::from_i64(1, 1)).unwrap();
        assert_eq!((nv.n, nv.integral, nv.admissible), (rat_int(5), true, false));
        let nv = n_from_solution(&int(1), &LatticePoint::from_i64(1, 2)).unwrap();
        assert_eq!(nv.n, rat_int(1) - rat(1560, 157));
        assert!(!nv.integral);
        let nv = n_from_solution(&int(-1), &LatticePoint::from_i64(2, 1)).unwrap();
        assert_eq!(nv.n, rat(-149, 29));
        assert_eq!(nv.n, param_from_z(&rat_int(-1), &rat_int(2)).unwrap());
        assert_eq!(n_from_solution(&int(1), &LatticePoint::from_i64(0, 0)), Err(Error::ZeroFormValue));
    }

    #[test]
    fn verdicts() {
        let v = correspondence_check(&int(3), &LatticePoint::from_i64(1, 2)).unwrap();
        assert_eq!(v, Verdict::RefutedNonDivisor { value: int(397) });
        assert_eq!(correspondence_check(&int(3), &LatticePoint::from_i64(1, 1)).unwrap(), Verdict::Trivial);
        assert!(correspondence_check(&int(3), &LatticePoint::from_i64(2, 4)).unwrap_err().is_usage());
    }

    #[test]
    fn small_fuzz_never_reaches_a_coincidence() {
        for m in -6..=6 {
            for x in -8i64..=8 {
                for y in -8i64..=8 {
                    let p = LatticePoint::from_i64(x, y);
                    if p.is_primitive() {
                        assert!(!correspondence_check(&int(m), &p).unwrap().is_violation());
                    }
                }
            }
        }
    }
}
