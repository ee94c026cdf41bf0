//! The Thue equations `F_m(x, y) = λ` with `λ | 27(m^2+3m+9)`.
//!
//! The solver is exhaustive over a box; it certifies the absence of
//! nontrivial solutions at desk scale and does not attempt a complete
//! (Baker-type) resolution.

use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::exactmath::intfactor::positive_divisors;
use crate::exactmath::{rat_from_int, Int};
use crate::family::{c6_orbit, eval_form_int, is_trivial, trivial_solutions, LatticePoint};
use crate::{Error, Result};

mod certificate;
mod correspondence;

pub use certificate::{
    bezout_certificate, h_poly, hpq_homogeneous_check, mod3_lemma_check, p_closed_form, q_closed_form,
    resultant_check, BezoutCertificate,
};
pub use correspondence::{correspondence_check, n_from_solution, NValue, Verdict};

/// `m^2 + 3m + 9` over the integers.
pub fn norm_int(m: &Int) -> Int {
    m * m + m * 3 + 9
}

/// Signed divisors of `27(m^2+3m+9)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorSet {
    pub m: Int,
    pub modulus: Int,
    /// Ascending.
    pub divisors: Vec<Int>,
}

impl DivisorSet {
    /// Search order: ascending absolute value, positive before negative.
    pub fn search_order(&self) -> Vec<Int> {
        let mut v = self.divisors.clone();
        v.sort_by(|a, b| a.abs().cmp(&b.abs()).then_with(|| b.cmp(a)));
        v
    }

    pub fn contains(&self, d: &Int) -> bool {
        self.divisors.binary_search(d).is_ok()
    }
}

pub fn divisors_27(m: &Int) -> DivisorSet {
    let modulus = norm_int(m) * 27;
    let pos = positive_divisors(&modulus);
    let mut divisors: Vec<Int> = pos.iter().map(|d| -d).chain(pos.iter().cloned()).collect();
    divisors.sort();
    DivisorSet { m: m.clone(), modulus, divisors }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionRecord {
    pub m: Int,
    pub point: LatticePoint,
    pub lambda: Int,
    pub trivial: bool,
    /// Smallest point of the C6 orbit.
    pub orbit_id: LatticePoint,
}

impl SolutionRecord {
    fn new(m: &Int, point: LatticePoint, lambda: Int) -> Self {
        let trivial = is_trivial(&point);
        let orbit_id = c6_orbit(&point).canonical;
        SolutionRecord { m: m.clone(), point, lambda, trivial, orbit_id }
    }
}

/// Which values count as hits.
enum Want<T> {
    Value(T),
    DividesModulus(T),
}

impl Want<i128> {
    fn accepts(&self, v: i128) -> bool {
        match self {
            Want::Value(l) => v == *l,
            Want::DividesModulus(n) => v != 0 && n % v == 0,
        }
    }
}

impl Want<Int> {
    fn accepts(&self, v: &Int) -> bool {
        match self {
            Want::Value(l) => v == l,
            Want::DividesModulus(n) => !v.is_zero() && n.is_multiple_of(v),
        }
    }

    fn to_i128(&self) -> Option<Want<i128>> {
        Some(match self {
            Want::Value(l) => Want::Value(l.to_i128()?),
            Want::DividesModulus(n) => Want::DividesModulus(n.to_i128()?),
        })
    }
}

/// Coefficients of `F_m` from `X^6` down to `Y^6`, when every value on the
/// box fits comfortably in an `i128`.
fn fast_coeffs(m: &Int, bound: u64) -> Option<[i128; 7]> {
    let m = m.to_i128()?;
    if m.abs() > 1 << 40 || bound > 1 << 12 {
        return None;
    }
    Some([1, -2 * m, -5 * (m + 3), -20, 5 * m, 2 * (m + 3), 1])
}

/// The half-box `y > 0` or `y = 0, x > 0`, one row per `y`.
fn half_row(bound: i64, y: i64) -> std::ops::RangeInclusive<i64> {
    if y == 0 {
        1..=bound
    } else {
        -bound..=bound
    }
}

fn box_search(m: &Int, bound: u64, want: &Want<Int>) -> Vec<(LatticePoint, Int)> {
    let b = bound as i64;
    let mut hits: Vec<(i64, i64, Int)> = match (fast_coeffs(m, bound), want.to_i128()) {
        (Some(c), Some(w)) => {
            let w = &w;
            (0..=b)
            .into_par_iter()
            .flat_map_iter(|y| {
                let yp: [i128; 7] = std::array::from_fn(|i| (y as i128).pow(i as u32));
                half_row(b, y).filter_map(move |x| {
                    let x = x as i128;
                    let v = (1..7).fold(c[0], |acc, i| acc * x + c[i] * yp[i]);
                    w.accepts(v).then(|| (x as i64, y, Int::from(v)))
                })
            })
            .collect()
        }
        _ => (0..=b)
            .into_par_iter()
            .flat_map_iter(|y| {
                half_row(b, y).filter_map(move |x| {
                    let v = eval_form_int(m, &Int::from(x), &Int::from(y));
                    want.accepts(&v).then_some((x, y, v))
                })
            })
            .collect(),
    };
    let mirrored: Vec<_> = hits.iter().map(|(x, y, v)| (-x, -y, v.clone())).collect();
    hits.extend(mirrored);
    hits.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    hits.into_iter().map(|(x, y, v)| (LatticePoint::from_i64(x, y), v)).collect()
}

fn check_bound(bound: u64) -> Result<()> {
    if bound == 0 || bound > i64::MAX as u64 / 4 {
        return Err(Error::usage(format!("bound must be in 1..=2^61, got {bound}")));
    }
    Ok(())
}

/// All `(x, y)` with `|x|, |y| <= bound` and `F_m(x, y) = λ`, sorted.
pub fn solve_thue(m: &Int, lambda: &Int, bound: u64) -> Result<Vec<SolutionRecord>> {
    if lambda.is_zero() {
        return Err(Error::usage("lambda must be nonzero"));
    }
    check_bound(bound)?;
    Ok(box_search(m, bound, &Want::Value(lambda.clone()))
        .into_iter()
        .map(|(p, v)| SolutionRecord::new(m, p, v))
        .collect())
}

/// Solutions for one `(m, λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaEntry {
    pub m: Int,
    pub lambda: Int,
    pub solutions: Vec<SolutionRecord>,
    /// The solution set equals the trivial solutions inside the box.
    pub matches_trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub m_range: (Int, Int),
    pub bound: u64,
    pub entries: Vec<LambdaEntry>,
    pub elapsed: Duration,
    /// Nontrivial solutions; empty if the theorem holds on the box.
    pub counterexamples: Vec<SolutionRecord>,
}

impl SearchReport {
    pub fn all_trivial(&self) -> bool {
        self.counterexamples.is_empty() && self.entries.iter().all(|e| e.matches_trivial)
    }

    pub fn solution_count(&self) -> usize {
        self.entries.iter().map(|e| e.solutions.len()).sum()
    }
}

fn in_box(p: &LatticePoint, bound: u64) -> bool {
    let b = Int::from(bound);
    p.x.abs() <= b && p.y.abs() <= b
}

fn search_one(m: &Int, bound: u64) -> Result<(Vec<LambdaEntry>, Vec<SolutionRecord>)> {
    let divs = divisors_27(m);
    let hits = box_search(m, bound, &Want::DividesModulus(divs.modulus.clone()));
    let mut entries = Vec::new();
    let mut counterexamples = Vec::new();
    for lambda in divs.search_order() {
        let solutions: Vec<SolutionRecord> = hits
            .iter()
            .filter(|(_, v)| *v == lambda)
            .map(|(p, v)| SolutionRecord::new(m, p.clone(), v.clone()))
            .collect();
        let expected: Vec<LatticePoint> =
            trivial_solutions(&rat_from_int(m), &lambda)?.into_iter().filter(|p| in_box(p, bound)).collect();
        let found: Vec<LatticePoint> = solutions.iter().map(|s| s.point.clone()).collect();
        counterexamples.extend(solutions.iter().filter(|s| !s.trivial).cloned());
        entries.push(LambdaEntry { m: m.clone(), lambda, matches_trivial: found == expected, solutions });
    }
    Ok((entries, counterexamples))
}

/// Box search for every divisor `λ` of `27(m^2+3m+9)`.
pub fn solve_all_divisors(m: &Int, bound: u64) -> Result<SearchReport> {
    solve_range(m, m, bound)
}

/// [`solve_all_divisors`] for every `m` in `lo..=hi`.
pub fn solve_range(lo: &Int, hi: &Int, bound: u64) -> Result<SearchReport> {
    check_bound(bound)?;
    if lo > hi {
        return Err(Error::usage(format!("empty range {lo}..{hi}")));
    }
    let start = Instant::now();
    let mut report = SearchReport {
        m_range: (lo.clone(), hi.clone()),
        bound,
        entries: Vec::new(),
        elapsed: Duration::ZERO,
        counterexamples: Vec::new(),
    };
    let mut m = lo.clone();
    while &m <= hi {
        let (entries, cex) = search_one(&m, bound)?;
        report.entries.extend(entries);
        report.counterexamples.extend(cex);
        m += 1;
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
