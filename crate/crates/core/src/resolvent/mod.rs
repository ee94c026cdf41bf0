//! Multi-resolvents of a pair of simplest sextics.
//!
//! For parameters `a, b` the two resolvents are `f^C6_{A1}` and `f^C6_{A2}`
//! with `A1 = -(ab+3a+9)/(a-b)` and `A2 = (ab-9)/(a+b+3)`. Their
//! decomposition types, together with the Galois groups of `f^C6_a` and
//! `f^C6_b`, determine the intersection of the two splitting fields.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exactmath::{discriminant, factor_over_q, rat_int, rational_roots, Rat, UniPoly};
use crate::family::{quadratic_norm, sextic_value, simplest_sextic_poly};
use crate::{Error, Result};

mod scan;
mod table1;
mod table2;
mod theta;

pub use scan::{
    cubic_scan, prefilter_prunes, scan_row, sextic_scan, ScanConfig, ScanKind, ScanOutcome, ScanStats,
};
pub use table1::{classify_intersection, IntersectionResult, Relation, Table1Row, TABLE1};
pub use table2::reproduce_table2;
pub use theta::{theta_action, verify_theta, Theta};

/// The pair `(a, b)` with its resolvent parameters, absent when the defining
/// denominator vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolventPair {
    pub a: Rat,
    pub b: Rat,
    pub a1: Option<Rat>,
    pub a2: Option<Rat>,
}

impl ResolventPair {
    pub fn param(&self, i: u8) -> Result<&Rat> {
        match i {
            1 => self.a1.as_ref().ok_or(Error::ResolventUndefined { index: 1 }),
            2 => self.a2.as_ref().ok_or(Error::ResolventUndefined { index: 2 }),
            _ => Err(Error::usage(format!("resolvent index must be 1 or 2, got {i}"))),
        }
    }
}

pub fn resolvent_params(a: &Rat, b: &Rat) -> ResolventPair {
    let nine = rat_int(9);
    let d1 = a - b;
    let d2 = a + b + rat_int(3);
    let a1 = (!d1.is_zero()).then(|| -(a * b + rat_int(3) * a + &nine) / &d1);
    let a2 = (!d2.is_zero()).then(|| (a * b - &nine) / &d2);
    ResolventPair { a: a.clone(), b: b.clone(), a1, a2 }
}

/// `f^C6_{A_i}`.
pub fn resolvent_poly(a: &Rat, b: &Rat, i: u8) -> Result<UniPoly> {
    Ok(simplest_sextic_poly(resolvent_params(a, b).param(i)?))
}

/// Compare both resolvent discriminants with
/// `6^6 (a^2+3a+9)^5 (b^2+3b+9)^5 / d_i^10`, `d_1 = a - b`, `d_2 = a + b + 3`.
pub fn resolvent_disc_check(a: &Rat, b: &Rat) -> Result<bool> {
    let pair = resolvent_params(a, b);
    let top = rat_int(46656) * num_traits::pow(quadratic_norm(a) * quadratic_norm(b), 5);
    let dens = [a - b, a + b + rat_int(3)];
    for (i, den) in [1u8, 2].into_iter().zip(dens) {
        let disc = discriminant(&simplest_sextic_poly(pair.param(i)?))?;
        if disc != &top / num_traits::pow(den, 10) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Partition of 6 by irreducible factor degrees, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DecompositionType {
    pub parts: Vec<usize>,
}

impl DecompositionType {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        DecompositionType { parts }
    }

    pub fn max_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_split(&self) -> bool {
        self.parts.iter().all(|&d| d == 1)
    }
}

impl fmt::Display for DecompositionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Decomposition type of a squarefree sextic.
pub fn decomposition_type(p: &UniPoly) -> Result<DecompositionType> {
    let degree = p.degree().unwrap_or(0);
    if degree != 6 {
        return Err(Error::UnsupportedDegree { op: "decomposition_type", degree, min: 6, max: 6 });
    }
    let fac = factor_over_q(p)?;
    if !fac.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    Ok(DecompositionType::new(fac.degrees()))
}

/// A resolvent with six rational roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub which: u8,
    pub roots: Vec<Rat>,
}

fn check_norms(a: &Rat, b: &Rat) -> Result<()> {
    if quadratic_norm(a).is_zero() || quadratic_norm(b).is_zero() {
        return Err(Error::usage("a^2+3a+9 and b^2+3b+9 must be nonzero"));
    }
    Ok(())
}

/// Indices `i` for which `f^C6_{A_i}` has six rational roots, with the roots.
pub fn split_resolvents(a: &Rat, b: &Rat) -> Result<Vec<IsoWitness>> {
    let pair = resolvent_params(a, b);
    let mut out = Vec::new();
    for i in [1u8, 2] {
        if let Ok(param) = pair.param(i) {
            let roots = rational_roots(&simplest_sextic_poly(param));
            if roots.len() == 6 {
                out.push(IsoWitness { which: i, roots });
            }
        }
    }
    Ok(out)
}

/// Whether `f^C6_a` and `f^C6_b` have the same splitting field.
///
/// `a = b` and `a + b + 3 = 0` are equal without a witness. Otherwise the
/// fields agree exactly when one of the two resolvents splits completely; the
/// witness names the first such resolvent.
pub fn iso_test(a: &Rat, b: &Rat) -> Result<(bool, Option<IsoWitness>)> {
    check_norms(a, b)?;
    if a == b || (a + b + rat_int(3)).is_zero() {
        return Ok((true, None));
    }
    let mut split = split_resolvents(a, b)?;
    if split.is_empty() {
        Ok((false, None))
    } else {
        Ok((true, Some(split.swap_remove(0))))
    }
}

/// `B = a + (a^2+3a+9) z(z+1)(z-1)(z+2)(2z+1) / f^C6_a(z)`.
pub fn param_from_z(a: &Rat, z: &Rat) -> Result<Rat> {
    let fz = sextic_value(a, z);
    if fz.is_zero() {
        return Err(Error::RootOfFamily(z.clone()));
    }
    let one = Rat::one();
    let prod = z * (z + &one) * (z - &one) * (z + rat_int(2)) * (rat_int(2) * z + &one);
    Ok(a + quadratic_norm(a) * prod / fz)
}

/// Whether the cubic subfields of the two splitting fields coincide, read
/// off the intersection degree.
pub fn cubic_iso_test(a: &Rat, b: &Rat) -> Result<bool> {
    check_norms(a, b)?;
    if a == b || (a + b + rat_int(3)).is_zero() {
        return Ok(true);
    }
    Ok(matches!(classify_intersection(a, b)?.degree, 3 | 6))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::family::galois_group;
    use crate::family::GaloisTag;

    #[test]
    fn params() {
        let p = resolvent_params(&rat_int(-1), &rat_int(5));
        assert_eq!(p.a1, Some(rat(1, 6)));
        assert_eq!(p.a2, Some(rat_int(-2)));
        assert_eq!(resolvent_params(&rat(2, 3), &rat(2, 3)).a1, None);
        assert_eq!(resolvent_params(&rat_int(4), &rat_int(-7)).a2, None);
        assert_eq!(
            resolvent_poly(&rat_int(1), &rat_int(1), 1),
            Err(Error::ResolventUndefined { index: 1 })
        );
    }

    #[test]
    fn swapped_parameters() {
        // A1(b,a) = -A1(a,b) - 3 and A2 is symmetric.
        let (a, b) = (rat(7, 2), rat_int(-11));
        let p = resolvent_params(&a, &b);
        let q = resolvent_params(&b, &a);
        assert_eq!(q.a1.unwrap(), -p.a1.unwrap() - rat_int(3));
        assert_eq!(q.a2, p.a2);
    }

    #[test]
    fn disc_formulas() {
        for (a, b) in [(1, 2), (-1, 12), (0, 4)] {
            assert!(resolvent_disc_check(&rat_int(a), &rat_int(b)).unwrap());
        }
    }

    #[test]
    fn decomposition_types() {
        assert_eq!(decomposition_type(&simplest_sextic_poly(&rat(1, 6))).unwrap().parts, vec![2, 2, 2]);
        assert_eq!(decomposition_type(&simplest_sextic_poly(&rat_int(7))).unwrap().parts, vec![6]);
        assert_eq!(decomposition_type(&simplest_sextic_poly(&rat_int(-8))).unwrap().parts, vec![3, 3]);
        let square = UniPoly::from_ints(&[1, 0, 1]).pow(3);
        assert_eq!(decomposition_type(&square), Err(Error::NotSquarefree));
    }

    #[test]
    fn resolvent_factorizations() {
        let f = factor_over_q(&resolvent_poly(&rat_int(-1), &rat_int(12), 2).unwrap()).unwrap();
        assert_eq!(f.factor_string(), "(X^2-2*X-2)(X^2+X-1/2)(X^2+4*X+1)");
        let f = factor_over_q(&resolvent_poly(&rat_int(-1), &rat_int(5), 1).unwrap()).unwrap();
        assert_eq!(f.factor_string(), "(X^2-4*X-3)(X^2+2/3*X-2/3)(X^2+3*X+1/2)");
    }

    #[test]
    fn z_parameters() {
        assert_eq!(param_from_z(&rat_int(4), &rat_int(0)).unwrap(), rat_int(4));
        assert_eq!(param_from_z(&rat_int(-1), &rat_int(2)).unwrap(), rat(-149, 29));
        assert_eq!(param_from_z(&rat_int(-1), &rat_int(3)).unwrap(), rat(-6047, 167));
        // z = 2 is a root of f^C6_{s(2)} with s(2) = -323/120.
        let s = rat(-323, 120);
        let roots = rational_roots(&simplest_sextic_poly(&s));
        assert_eq!(roots.len(), 6);
        assert!(matches!(param_from_z(&s, &rat_int(2)), Err(Error::RootOfFamily(_))));
    }

    #[test]
    fn iso_examples() {
        assert_eq!(iso_test(&rat_int(2), &rat_int(-5)).unwrap(), (true, None));
        assert!(!iso_test(&rat_int(-1), &rat_int(12)).unwrap().0);
        let (eq, w) = iso_test(&rat_int(-1), &rat(-149, 29)).unwrap();
        assert!(eq);
        let w = w.unwrap();
        assert_eq!(w.roots.len(), 6);
        assert!(w.roots.contains(&rat_int(2)));
        let param = resolvent_params(&rat_int(-1), &rat(-149, 29)).param(w.which).unwrap().clone();
        assert!(w.roots.iter().all(|r| sextic_value(&param, r).is_zero()));
    }

    #[test]
    fn cubic_iso_examples() {
        assert!(cubic_iso_test(&rat_int(-1), &rat_int(12)).unwrap());
        assert!(cubic_iso_test(&rat_int(0), &rat_int(3)).unwrap());
        assert!(!cubic_iso_test(&rat_int(1), &rat_int(2)).unwrap());
        assert!(!cubic_iso_test(&rat_int(0), &rat_int(5)).unwrap());
    }

    #[test]
    fn both_split_for_degenerate_group() {
        let a = rat(-3, 2);
        assert_eq!(galois_group(&a).unwrap().tag, GaloisTag::C2);
        let b = param_from_z(&a, &rat_int(2)).unwrap();
        let split = split_resolvents(&a, &b).unwrap();
        assert_eq!(split.iter().map(|w| w.which).collect::<Vec<_>>(), vec![1, 2]);
    }
}
