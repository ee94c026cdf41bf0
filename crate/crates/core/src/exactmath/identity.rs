//! Deterministic polynomial identity testing on integer grids.
//!
//! A polynomial of degree at most `d_i` in variable `i` that vanishes on a
//! product grid `S_1 x ... x S_k` with `|S_i| = d_i + 1` is identically zero.
//! Both sides are supplied as closures; a closure returns `None` at a point
//! where a cleared denominator vanishes, and the whole grid is then shifted.

use itertools::Itertools;

use super::Rat;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GridOutcome {
    /// Both sides agree on a full grid; `offset` is the shift that was used.
    Identical { points: usize, offset: usize },
    /// A point where the two sides differ.
    Differs { witness: Vec<(String, Rat)>, lhs: Rat, rhs: Rat },
}

impl GridOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, GridOutcome::Identical { .. })
    }

    pub fn witness_string(&self) -> Option<String> {
        match self {
            GridOutcome::Identical { .. } => None,
            GridOutcome::Differs { witness, lhs, rhs } => Some(format!(
                "{} : lhs={lhs} rhs={rhs}",
                witness.iter().map(|(v, x)| format!("{v}={x}")).join(", ")
            )),
        }
    }
}

/// Decide `lhs == rhs` as polynomials in `vars`, given per-variable degree
/// bounds.
///
/// Variable `i` ranges over `{(i+1)o, ..., (i+1)o + d_i}` for the first offset
/// `o = 0, 1, ...` at which both sides are defined on the whole grid. The
/// distinct strides keep shifted grids off diagonals like `z = w`. No valid
/// grid within `o <= 10 max(d_i)` is an internal error.
pub fn identity_check_grid<L, R>(lhs: L, rhs: R, vars: &[&str], bounds: &[usize]) -> Result<GridOutcome>
where
    L: Fn(&[Rat]) -> Option<Rat>,
    R: Fn(&[Rat]) -> Option<Rat>,
{
    assert_eq!(vars.len(), bounds.len(), "one degree bound per variable");
    assert!(!vars.is_empty(), "at least one variable");
    let max_offset = 10 * bounds.iter().copied().max().unwrap_or(0);
    let points: usize = bounds.iter().map(|d| d + 1).product();
    'offset: for o in 0..=max_offset {
        let axes: Vec<Vec<Rat>> = bounds
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let start = ((i + 1) * o) as i64;
                (0..=d as i64).map(|j| Rat::from_integer((start + j).into())).collect()
            })
            .collect();
        let mut values = Vec::with_capacity(points);
        for point in axes.iter().multi_cartesian_product() {
            let point: Vec<Rat> = point.into_iter().cloned().collect();
            let (Some(l), Some(r)) = (lhs(&point), rhs(&point)) else {
                continue 'offset;
            };
            values.push((point, l, r));
        }
        for (point, l, r) in values {
            if l != r {
                let witness = vars.iter().map(|v| v.to_string()).zip(point).collect();
                return Ok(GridOutcome::Differs { witness, lhs: l, rhs: r });
            }
        }
        return Ok(GridOutcome::Identical { points, offset: o });
    }
    Err(Error::GridExhausted(max_offset))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat_int;

    #[test]
    fn detects_identity_and_difference() {
        // (x+y)^2 == x^2 + 2xy + y^2
        let out = identity_check_grid(
            |v| Some((&v[0] + &v[1]) * (&v[0] + &v[1])),
            |v| Some(&v[0] * &v[0] + rat_int(2) * &v[0] * &v[1] + &v[1] * &v[1]),
            &["x", "y"],
            &[2, 2],
        )
        .unwrap();
        assert!(out.holds());

        let out = identity_check_grid(|v| Some(&v[0] + rat_int(1)), |v| Some(v[0].clone()), &["X"], &[1]).unwrap();
        assert!(!out.holds());
        assert!(out.witness_string().unwrap().contains("X=0"));
    }

    #[test]
    fn too_small_bound_can_miss() {
        // x^2 - x vanishes at 0 and 1; a linear bound is not a true bound.
        let out = identity_check_grid(|v| Some(&v[0] * &v[0] - &v[0]), |_| Some(rat_int(0)), &["x"], &[1]).unwrap();
        assert!(out.holds());
        let out = identity_check_grid(|v| Some(&v[0] * &v[0] - &v[0]), |_| Some(rat_int(0)), &["x"], &[2]).unwrap();
        assert!(!out.holds());
    }

    #[test]
    fn shifts_past_poles() {
        // (x^2-1)/(x-1) == x+1, undefined at x=1.
        let out = identity_check_grid(
            |v| {
                let d = &v[0] - rat_int(1);
                (d != rat_int(0)).then(|| (&v[0] * &v[0] - rat_int(1)) / d)
            },
            |v| Some(&v[0] + rat_int(1)),
            &["x"],
            &[2],
        )
        .unwrap();
        assert_eq!(out, GridOutcome::Identical { points: 3, offset: 2 });
    }

    #[test]
    fn exhausted_grid_is_an_error() {
        let out = identity_check_grid(|_| None, |_| Some(rat_int(0)), &["x"], &[1]);
        assert!(matches!(out, Err(Error::GridExhausted(10))));
    }
}
