//! The two-variable invariants `Θ1 = -(zw+z+1)/(z-w)` and
//! `Θ2 = (zw-1)/(z+w+1)` under `U = <σ, τ>`, where `σ` moves `z` and `τ`
//! moves `w`, both by the Möbius map `M: z ↦ (z-1)/(z+2)`.
//!
//! Everything is handled projectively: a point `z` is a pair `(zn, zd)`, and
//! two rational functions are equal when `N1 D2 - N2 D1` vanishes.

use crate::exactmath::{identity_check_grid, rat_int, GridOutcome, Rat};
use crate::report::IdentityReport;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theta {
    One,
    Two,
}

type Proj = (Rat, Rat);

/// `M^k` applied to a projective point.
fn mobius_pow(k: usize, p: &Proj) -> Proj {
    let (mut n, mut d) = p.clone();
    for _ in 0..k % 6 {
        let (nn, nd) = (&n - &d, &n + rat_int(2) * &d);
        n = nn;
        d = nd;
    }
    (n, d)
}

fn theta_proj(theta: Theta, z: &Proj, w: &Proj) -> Proj {
    let ((zn, zd), (wn, wd)) = (z, w);
    match theta {
        Theta::One => (-(zn * wn + zn * wd + zd * wd), zn * wd - wn * zd),
        Theta::Two => (zn * wn - zd * wd, zn * wd + wn * zd + zd * wd),
    }
}

/// `Θ ∘ (σ^i τ^j) == M^k ∘ Θ`, checked on a grid (both sides are bilinear
/// in `z, w` before cross-multiplication).
fn acts_as(theta: Theta, i: usize, j: usize, k: usize) -> Result<GridOutcome> {
    let one = || rat_int(1);
    identity_check_grid(
        |v| {
            let (z, w) = ((v[0].clone(), one()), (v[1].clone(), one()));
            let moved = theta_proj(theta, &mobius_pow(i, &z), &mobius_pow(j, &w));
            let image = mobius_pow(k, &theta_proj(theta, &z, &w));
            Some(&moved.0 * &image.1)
        },
        |v| {
            let (z, w) = ((v[0].clone(), one()), (v[1].clone(), one()));
            let moved = theta_proj(theta, &mobius_pow(i, &z), &mobius_pow(j, &w));
            let image = mobius_pow(k, &theta_proj(theta, &z, &w));
            Some(&moved.1 * &image.0)
        },
        &["z", "w"],
        &[2, 2],
    )
}

/// The unique `k` with `Θ(σ^i z, τ^j w) = M^k(Θ(z, w))`, if there is one.
pub fn theta_action(theta: Theta, i: usize, j: usize) -> Result<Option<usize>> {
    let mut found = Vec::new();
    for k in 0..6 {
        if acts_as(theta, i, j, k)?.holds() {
            found.push(k);
        }
    }
    Ok(match found.as_slice() {
        [k] => Some(*k),
        _ => None,
    })
}

fn expected(theta: Theta, i: usize, j: usize) -> usize {
    match theta {
        Theta::One => (i + 6 - j) % 6,
        Theta::Two => (i + j) % 6,
    }
}

/// Invariance and orbit structure of `Θ1` and `Θ2`.
///
/// `mutate` names an item whose expected value is deliberately wrong, so the
/// harness can show that it catches a false claim.
pub fn verify_theta(mutate: Option<&str>) -> IdentityReport {
    let mut report = IdentityReport::new("theta invariants");
    let bump = |item: &str| usize::from(mutate == Some(item));
    let single = [
        ("theta1-fixed", "Θ1 is fixed by στ", Theta::One, 1, 1, 0),
        ("theta2-fixed", "Θ2 is fixed by στ^5", Theta::Two, 1, 5, 0),
        ("theta2-moved", "στ sends Θ2 to M^2(Θ2)", Theta::Two, 1, 1, 2),
        ("theta1-sigma", "σ sends Θ1 to (Θ1-1)/(Θ1+2)", Theta::One, 1, 0, 1),
    ];
    for (item, desc, theta, i, j, k) in single {
        report.push_grid(item, desc, acts_as(theta, i, j, (k + bump(item)) % 6));
    }
    for (item, theta, name) in [("theta1-orbit", Theta::One, "Θ1"), ("theta2-orbit", Theta::Two, "Θ2")] {
        let mut bad = Vec::new();
        let mut orbit = [false; 6];
        for i in 0..6 {
            for j in 0..6 {
                match theta_action(theta, i, j) {
                    Ok(Some(k)) if k == (expected(theta, i, j) + bump(item)) % 6 => orbit[k] = true,
                    Ok(k) => bad.push(format!("(i,j)=({i},{j}) gives {k:?}")),
                    Err(e) => bad.push(e.to_string()),
                }
            }
        }
        let size = orbit.iter().filter(|&&b| b).count();
        let passed = bad.is_empty() && size == 6;
        let detail = if passed { "36 elements, orbit of size 6".to_string() } else { bad.join("; ") };
        report.push(item, &format!("U-orbit of {name} is the 6-element orbit of M"), passed, detail);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stabilizers() {
        for k in 0..6 {
            assert_eq!(theta_action(Theta::One, k, k).unwrap(), Some(0));
            assert_eq!(theta_action(Theta::Two, k, (6 - k) % 6).unwrap(), Some(0));
        }
        assert_eq!(theta_action(Theta::Two, 0, 1).unwrap(), Some(1));
        assert_eq!(theta_action(Theta::One, 0, 1).unwrap(), Some(5));
    }

    #[test]
    fn full_report_and_mutation() {
        let r = verify_theta(None);
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.checks.len(), 6);
        for item in ["theta1-fixed", "theta2-orbit"] {
            let r = verify_theta(Some(item));
            let failed: Vec<_> = r.failures().map(|c| c.item.as_str()).collect();
            assert_eq!(failed, vec![item]);
        }
    }
}
