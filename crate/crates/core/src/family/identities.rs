//! Grid-checked identities of the family.

use num_traits::{One, Zero};

use super::{cubic_value, form_value, quadratic_norm, sextic_discriminant_formula, sextic_value, simplest_sextic_poly};
use crate::exactmath::{discriminant, identity_check_grid, rat_int, Rat, RatMatrix};
use crate::golden::spot_values;
use crate::report::IdentityReport;

/// Labels of the items checked by [`verify_family_identities`].
pub const FAMILY_ITEMS: [&str; 9] = ["a", "b", "c", "d", "e", "f", "g", "h", "i"];

/// `z(z+1)(z-1)(z+2)(2z+1)`, the denominator of `s(z)`.
fn d_of(z: &Rat) -> Rat {
    let one = Rat::one();
    z * (z + &one) * (z - &one) * (z + rat_int(2)) * (rat_int(2) * z + &one)
}

/// Numerator of `s(z)`: `z^6 - 15z^4 - 20z^3 + 6z + 1`.
fn n_of(z: &Rat) -> Rat {
    let z2 = z * z;
    let z3 = &z2 * z;
    &z3 * &z3 - rat_int(15) * &z2 * &z2 - rat_int(20) * &z3 + rat_int(6) * z + Rat::one()
}

/// `s(z)`, undefined where its denominator vanishes.
fn s_of(z: &Rat) -> Option<Rat> {
    let d = d_of(z);
    (!d.is_zero()).then(|| n_of(z) / d)
}

/// Gras's form `g_t`.
fn g_value(t: &Rat, x: &Rat) -> Rat {
    let six = rat_int(6);
    let coeffs = [
        Rat::one(),
        -(t - &six) / rat_int(2),
        -rat_int(5) * (t + &six) / rat_int(4),
        rat_int(-20),
        rat_int(5) * (t - &six) / rat_int(4),
        (t + &six) / rat_int(2),
        Rat::one(),
    ];
    coeffs.iter().fold(Rat::zero(), |acc, c| acc * x + c)
}

fn mat(rows: [[i64; 2]; 2]) -> RatMatrix {
    RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat_int(v)).collect()).collect())
}

/// `a = c b` for some nonzero rational `c`.
fn proportional(a: &RatMatrix, b: &RatMatrix) -> bool {
    let mut ratio: Option<Rat> = None;
    for i in 0..2 {
        for j in 0..2 {
            let (x, y) = (a.get(i, j), b.get(i, j));
            if x.is_zero() != y.is_zero() {
                return false;
            }
            if y.is_zero() {
                continue;
            }
            let r = x / y;
            match &ratio {
                Some(q) if *q != r => return false,
                Some(_) => {}
                None => ratio = Some(r),
            }
        }
    }
    ratio.is_some()
}

/// Run items (a)-(i). `mutate` names one item whose right-hand side is
/// deliberately perturbed, to show the harness can fail.
pub fn verify_family_identities(mutate: Option<&str>) -> IdentityReport {
    let mut report = IdentityReport::new("family identities");
    let hit = |item: &str| mutate == Some(item);
    let bump = |item: &str, v: Rat| if hit(item) { v + Rat::one() } else { v };

    report.push_grid(
        "a",
        "F_m(x+y,-x) = F_m(x,y)",
        identity_check_grid(
            |v| Some(form_value(&v[0], &(&v[1] + &v[2]), &-v[1].clone())),
            |v| Some(bump("a", form_value(&v[0], &v[1], &v[2]))),
            &["m", "x", "y"],
            &[1, 6, 6],
        ),
    );

    let factor_b = if hit("b") { rat_int(-26) } else { rat_int(-27) };
    report.push_grid(
        "b",
        "F_m(2x+y,-x+y) = -27 F_m(x,y)",
        identity_check_grid(
            |v| Some(form_value(&v[0], &(rat_int(2) * &v[1] + &v[2]), &(&v[2] - &v[1]))),
            |v| Some(&factor_b * form_value(&v[0], &v[1], &v[2])),
            &["m", "x", "y"],
            &[1, 6, 6],
        ),
    );

    report.push_grid(
        "c",
        "f^C6_s = (f^C3_s)^2 - (s^2+3s+9) X^2 (X+1)^2",
        identity_check_grid(
            |v| Some(sextic_value(&v[0], &v[1])),
            |v| {
                let (s, x) = (&v[0], &v[1]);
                let c = cubic_value(s, x);
                let q = x * (x + Rat::one());
                Some(bump("c", &c * &c - quadratic_norm(s) * &q * &q))
            },
            &["s", "X"],
            &[2, 6],
        ),
    );

    // The discriminant is a form of degree 10 in the coefficients, which are
    // linear in s.
    report.push_grid(
        "d",
        "disc f^C6_s = 6^6 (s^2+3s+9)^5",
        identity_check_grid(
            |v| discriminant(&simplest_sextic_poly(&v[0])).ok(),
            |v| Some(bump("d", sextic_discriminant_formula(&v[0]))),
            &["s"],
            &[10],
        ),
    );

    report.push_grid(
        "e",
        "D(z) f^C6_{s(z)}(z) = 0",
        identity_check_grid(
            |v| s_of(&v[0]).map(|s| d_of(&v[0]) * sextic_value(&s, &v[0])),
            |_| Some(bump("e", Rat::zero())),
            &["z"],
            &[11],
        ),
    );

    let z2 = |z: &Rat| {
        let den = z * (z + Rat::one());
        (!den.is_zero()).then(|| (z * z * z - rat_int(3) * z - Rat::one()) / den)
    };
    let cube = |z: &Rat| {
        let q = z * z + z + Rat::one();
        &q * &q * &q
    };
    let f1 = identity_check_grid(
        |v| Some((z2(&v[0])? - s_of(&v[0])?) * d_of(&v[0])),
        |v| Some(bump("f", cube(&v[0]))),
        &["z"],
        &[6],
    );
    let f2 = identity_check_grid(
        |v| {
            let d = d_of(&v[0]);
            let w = z2(&v[0])? - s_of(&v[0])?;
            Some(&w * &w * &d * &d)
        },
        |v| {
            let d = d_of(&v[0]);
            Some(quadratic_norm(&s_of(&v[0])?) * &d * &d)
        },
        &["z"],
        &[12],
    );
    match (f1, f2) {
        (Ok(a), Ok(b)) if a.holds() && b.holds() => report.push(
            "f",
            "(z2 - s) D = (z^2+z+1)^3 and (z2 - s)^2 = s^2+3s+9",
            true,
            "",
        ),
        (a, b) => {
            let detail = [a, b]
                .into_iter()
                .filter_map(|o| match o {
                    Ok(o) => o.witness_string(),
                    Err(e) => Some(e.to_string()),
                })
                .collect::<Vec<_>>()
                .join("; ");
            report.push("f", "(z2 - s) D = (z^2+z+1)^3 and (z2 - s)^2 = s^2+3s+9", false, detail)
        }
    }

    report.push_grid(
        "g",
        "f^C3_{s(z)}(z3) = 0 with z3 = -z(z+2)/((z+1)(z-1))",
        identity_check_grid(
            |v| {
                let z = &v[0];
                let w = (z + Rat::one()) * (z - Rat::one());
                if w.is_zero() {
                    return None;
                }
                let z3 = -(z * (z + rat_int(2))) / &w;
                Some(d_of(z) * &w * &w * &w * cubic_value(&s_of(z)?, &z3))
            },
            |_| Some(bump("g", Rat::zero())),
            &["z"],
            &[12],
        ),
    );

    report.push_grid(
        "h",
        "g_{4s+6}(X) = f^C6_s(X)",
        identity_check_grid(
            |v| Some(g_value(&(rat_int(4) * &v[0] + rat_int(6)), &v[1])),
            |v| Some(bump("h", sextic_value(&v[0], &v[1]))),
            &["s", "X"],
            &[1, 6],
        ),
    );

    // Moebius matrices of the listed orbit z -> (z-1)/(z+2) -> -1/(z+1) -> ...
    let m = mat([[1, -1], [1, 2]]);
    let listed = [
        mat([[1, -1], [1, 2]]),
        mat([[0, -1], [1, 1]]),
        mat([[-1, -2], [2, 1]]),
        mat([[-1, -1], [1, 0]]),
        mat([[-2, -1], [1, -1]]),
    ];
    let mut power = m.clone();
    let mut ok = true;
    let mut detail = String::new();
    for (k, l) in listed.iter().enumerate() {
        if !proportional(&power, l) {
            ok = false;
            detail = format!("M^{} does not match the listed map", k + 1);
        }
        power = power.mul(&m);
    }
    let target = if hit("i") { -26 } else { -27 };
    let scalar = mat([[target, 0], [0, target]]);
    if power != scalar {
        ok = false;
        detail = format!("M^6 = [[{}, {}], [{}, {}]]", power.get(0, 0), power.get(0, 1), power.get(1, 0), power.get(1, 1));
    }
    report.push("i", "M^6 = -27 I for z -> (z-1)/(z+2), orbit as listed", ok, detail);
    report
}

/// Spot values of `F_m` at the twelve points `(±1,±2)`-type as linear
/// functions of `m`, and the twelve trivial values with a symbolic scale `e`.
pub fn verify_spot_values(mutate: Option<&str>) -> IdentityReport {
    let mut report = IdentityReport::new("spot values");
    let spots = match spot_values() {
        Ok(s) => s,
        Err(e) => {
            report.push("data", "load spot values", false, e.to_string());
            return report;
        }
    };
    for s in &spots.linear {
        let item = format!("linear({},{})", s.x, s.y);
        let shift = if mutate == Some(item.as_str()) { 1 } else { 0 };
        let (x, y) = (rat_int(s.x), rat_int(s.y));
        report.push_grid(
            &item,
            &format!("F_m({},{}) = {}m{:+}", s.x, s.y, s.slope, s.intercept),
            identity_check_grid(
                |v| Some(form_value(&v[0], &x, &y)),
                |v| Some(rat_int(s.slope) * &v[0] + rat_int(s.intercept + shift)),
                &["m"],
                &[1],
            ),
        );
    }
    for t in &spots.trivial {
        let item = format!("trivial({},{})", t.x, t.y);
        let shift = if mutate == Some(item.as_str()) { 1 } else { 0 };
        let (x, y) = (rat_int(t.x), rat_int(t.y));
        report.push_grid(
            &item,
            &format!("F_m({}e,{}e) = {}e^6", t.x, t.y, t.factor),
            identity_check_grid(
                |v| Some(form_value(&v[0], &(&x * &v[1]), &(&y * &v[1]))),
                |v| Some(rat_int(t.factor + shift) * num_traits::pow(v[1].clone(), 6)),
                &["m", "e"],
                &[1, 6],
            ),
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_passes() {
        let r = verify_family_identities(None);
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.checks.len(), 9);
    }

    #[test]
    fn each_mutation_is_caught() {
        for item in FAMILY_ITEMS {
            let r = verify_family_identities(Some(item));
            let failed: Vec<&str> = r.failures().map(|c| c.item.as_str()).collect();
            assert_eq!(failed, vec![item]);
        }
        let r = verify_family_identities(Some("b"));
        assert!(!r.get("b").unwrap().detail.is_empty());
    }

    #[test]
    fn spot_values_pass_and_mutate() {
        let r = verify_spot_values(None);
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.checks.len(), 24);
        let r = verify_spot_values(Some("linear(1,2)"));
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn discriminant_at_one() {
        let d = discriminant(&simplest_sextic_poly(&rat_int(1))).unwrap();
        assert_eq!(d, rat_int(46656) * num_traits::pow(rat_int(13), 5));
    }
}
