//! The intersection table: `(G1, G2, DT(R1), DT(R2))` determines the
//! compositum group and the intersection of the two splitting fields.

use std::fmt;

use serde::Serialize;

use super::{decomposition_type, resolvent_poly, DecompositionType};
use crate::exactmath::{rat_int, Rat};
use crate::family::{galois_group, quadratic_norm, GaloisTag};
use crate::{Error, Result};

/// Shape of `L1 ∩ L2` as printed in a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Meet {
    /// `L1 ∩ L2 = K`
    Base,
    /// `[L1 ∩ L2 : K] = 2`
    Quadratic,
    /// `[L1 ∩ L2 : K] = 3`
    Cubic,
    /// `L1 = L2`
    Equal,
    /// `L1 ⊃ L2`
    Contains,
    /// `L1 ⊃ L2 = K`
    ContainsBase,
    /// `L1 = L2 = K`
    EqualBase,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub g1: GaloisTag,
    pub g2: GaloisTag,
    pub compositum: &'static str,
    pub meet: Meet,
    pub dt1: &'static [usize],
    pub dt2: &'static [usize],
}

impl Table1Row {
    /// `[L1 ∩ L2 : K]`.
    pub fn degree(&self) -> usize {
        match self.meet {
            Meet::Base | Meet::ContainsBase | Meet::EqualBase => 1,
            Meet::Quadratic => 2,
            Meet::Cubic => 3,
            Meet::Equal => self.g1.order(),
            Meet::Contains => self.g2.order(),
        }
    }
}

const S6: &[usize] = &[6];
const S33: &[usize] = &[3, 3];
const S222: &[usize] = &[2, 2, 2];
const S1: &[usize] = &[1, 1, 1, 1, 1, 1];

macro_rules! row {
    ($g1:ident, $g2:ident, $comp:expr, $meet:ident, $d1:expr, $d2:expr) => {
        Table1Row { g1: GaloisTag::$g1, g2: GaloisTag::$g2, compositum: $comp, meet: Meet::$meet, dt1: $d1, dt2: $d2 }
    };
}

/// One entry per printed line; rows with two alternative type pairs appear
/// twice.
pub const TABLE1: [Table1Row; 21] = [
    row!(C6, C6, "C6xC6", Base, S6, S6),
    row!(C6, C6, "C6xC3", Quadratic, S33, S33),
    row!(C6, C6, "C6xC2", Cubic, S6, S222),
    row!(C6, C6, "C6xC2", Cubic, S222, S6),
    row!(C6, C6, "C6", Equal, S33, S1),
    row!(C6, C6, "C6", Equal, S1, S33),
    row!(C6, C3, "C6xC3", Base, S6, S6),
    row!(C6, C3, "C6", Contains, S6, S222),
    row!(C6, C3, "C6", Contains, S222, S6),
    row!(C6, C2, "C6xC2", Base, S6, S6),
    row!(C6, C2, "C6", Contains, S33, S33),
    row!(C6, Trivial, "C6", ContainsBase, S6, S6),
    row!(C3, C3, "C3xC3", Base, S33, S33),
    row!(C3, C3, "C3", Equal, S33, S1),
    row!(C3, C3, "C3", Equal, S1, S33),
    row!(C3, C2, "C6", Base, S6, S6),
    row!(C3, Trivial, "C3", ContainsBase, S33, S33),
    row!(C2, C2, "C2xC2", Base, S222, S222),
    row!(C2, C2, "C2", Equal, S1, S1),
    row!(C2, Trivial, "C2", ContainsBase, S222, S222),
    row!(Trivial, Trivial, "1", EqualBase, S1, S1),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Disjoint,
    QuadraticOverlap,
    CubicOverlap,
    Equal,
    /// The field of the first argument contains the other.
    #[serde(rename = "contains-1⊃2")]
    Contains12,
    #[serde(rename = "contains-2⊃1")]
    Contains21,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Disjoint => "disjoint",
            Relation::QuadraticOverlap => "quadratic-overlap",
            Relation::CubicOverlap => "cubic-overlap",
            Relation::Equal => "equal",
            Relation::Contains12 => "contains-1⊃2",
            Relation::Contains21 => "contains-2⊃1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionResult {
    pub degree: usize,
    pub relation: Relation,
    pub compositum_group: &'static str,
    /// Types of the resolvents for the (possibly swapped) ordered pair.
    pub dt1: DecompositionType,
    pub dt2: DecompositionType,
    /// Groups of `f^C6_a` and `f^C6_b`, in argument order.
    pub group_a: GaloisTag,
    pub group_b: GaloisTag,
    /// Whether the pair was swapped so that the first group is the larger.
    pub swapped: bool,
    pub row: usize,
}

/// Intersection of the splitting fields of `f^C6_a` and `f^C6_b`.
///
/// Requires `(a-b)(a+b+3) != 0`. Arguments may come in either order: the pair
/// is swapped internally when `#G(a) < #G(b)`.
pub fn classify_intersection(a: &Rat, b: &Rat) -> Result<IntersectionResult> {
    if a == b || (a + b + rat_int(3)) == rat_int(0) {
        return Err(Error::usage("classification needs (a-b)(a+b+3) != 0"));
    }
    if quadratic_norm(a) == rat_int(0) || quadratic_norm(b) == rat_int(0) {
        return Err(Error::usage("a^2+3a+9 and b^2+3b+9 must be nonzero"));
    }
    let group_a = galois_group(a)?.tag;
    let group_b = galois_group(b)?.tag;
    let swapped = group_a.order() < group_b.order();
    let (first, second, g1, g2) = if swapped { (b, a, group_b, group_a) } else { (a, b, group_a, group_b) };
    let dt1 = decomposition_type(&resolvent_poly(first, second, 1)?)?;
    let dt2 = decomposition_type(&resolvent_poly(first, second, 2)?)?;
    let matches: Vec<usize> = TABLE1
        .iter()
        .enumerate()
        .filter(|(_, r)| r.g1 == g1 && r.g2 == g2 && r.dt1 == dt1.parts.as_slice() && r.dt2 == dt2.parts.as_slice())
        .map(|(i, _)| i)
        .collect();
    let [row] = matches.as_slice() else {
        return Err(Error::internal(format!(
            "no unique intersection-table row for G1={g1} G2={g2} DT1={dt1} DT2={dt2} ({} matches)",
            matches.len()
        )));
    };
    let r = &TABLE1[*row];
    let relation = match r.meet {
        Meet::Base => Relation::Disjoint,
        Meet::Quadratic => Relation::QuadraticOverlap,
        Meet::Cubic => Relation::CubicOverlap,
        Meet::Equal | Meet::EqualBase => Relation::Equal,
        Meet::Contains | Meet::ContainsBase if swapped => Relation::Contains21,
        Meet::Contains | Meet::ContainsBase => Relation::Contains12,
    };
    Ok(IntersectionResult {
        degree: r.degree(),
        relation,
        compositum_group: r.compositum,
        dt1,
        dt2,
        group_a,
        group_b,
        swapped,
        row: *row,
    })
}
