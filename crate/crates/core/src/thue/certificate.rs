//! The coprimality certificate for `h(z) = (m^2+3m+9) z(z+1)(z-1)(z+2)(2z+1)`
//! and `f^C6_m(z)`, and the congruences that make `N` integral.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::norm_int;
use crate::exactmath::{
    bezout_cofactors, identity_check_grid, rat_from_int, rat_int, sylvester_resultant, Int, Rat, UniPoly,
};
use crate::family::{eval_form_int, simplest_sextic_poly};
use crate::report::IdentityReport;
use crate::{Error, Result};

pub fn h_poly(m: &Int) -> UniPoly {
    let k = rat_from_int(&norm_int(m));
    // z(z+1)(z-1)(z+2)(2z+1) = 2z^5 + 5z^4 - 5z^2 - 2z
    UniPoly::from_ints(&[0, -2, -5, 0, 5, 2]).scale(&k)
}

pub fn p_closed_form(m: &Int) -> UniPoly {
    let c = |v: Int| rat_from_int(&v);
    UniPoly::new(vec![
        c(m * 27 + 242),
        c((m * 161 + 219) * 2),
        c((m * 22 - 153) * 7),
        c((m * 3 + 11) * -112),
        c((m * 4 + 1) * -42),
        rat_int(84),
    ])
}

pub fn q_closed_form(m: &Int) -> UniPoly {
    UniPoly::from_ints(&[27, 322, 154, -336, -168]).scale(&rat_from_int(&norm_int(m)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub m: Int,
    /// Degree 5, leading coefficient 84.
    pub p: UniPoly,
    /// Degree 4, leading coefficient `-168(m^2+3m+9)`.
    pub q: UniPoly,
    /// `27(m^2+3m+9)`.
    pub constant: Int,
    /// Coefficient gcd of the raw Sylvester cofactors, `3^6 (m^2+3m+9)^5`.
    pub cofactor_gcd: Int,
}

impl BezoutCertificate {
    /// `h p + f q == constant`, by exact expansion.
    pub fn holds(&self) -> bool {
        let lhs = &h_poly(&self.m) * &self.p + &simplest_sextic_poly(&rat_from_int(&self.m)) * &self.q;
        lhs == UniPoly::constant(rat_from_int(&self.constant))
    }
}

fn integer_coeffs(p: &UniPoly) -> Option<Vec<Int>> {
    p.coeffs().iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
}

/// Build the certificate from the closed forms and, independently, from
/// the Sylvester cofactors divided by minus their coefficient gcd; the two
/// must agree.
pub fn bezout_certificate(m: &Int) -> Result<BezoutCertificate> {
    let (p, q) = (p_closed_form(m), q_closed_form(m));
    let f = simplest_sextic_poly(&rat_from_int(m));
    let (u, v) = bezout_cofactors(&h_poly(m), &f)?;
    let coeffs: Vec<Int> = integer_coeffs(&u)
        .into_iter()
        .chain(integer_coeffs(&v))
        .flatten()
        .collect();
    if coeffs.len() != u.coeffs().len() + v.coeffs().len() {
        return Err(Error::internal(format!("non-integral Sylvester cofactors at m={m}")));
    }
    let g = coeffs.iter().fold(Int::zero(), |g, c| g.gcd(c));
    let minus_g = rat_from_int(&-&g);
    let (pb, qb) = (u.scale(&minus_g.recip()), v.scale(&minus_g.recip()));
    if pb != p || qb != q {
        return Err(Error::internal(format!(
            "certificate routes disagree at m={m}: closed form p={p}, q={q}; cofactors give p={pb}, q={qb}"
        )));
    }
    let cert = BezoutCertificate { m: m.clone(), p, q, constant: norm_int(m) * 27, cofactor_gcd: g };
    if !cert.holds() {
        return Err(Error::internal(format!("h p + f q != 27(m^2+3m+9) at m={m}")));
    }
    Ok(cert)
}

/// `Res(h, f^C6_m) == -3^9 (m^2+3m+9)^6`.
pub fn resultant_check(m: &Int) -> Result<bool> {
    let res = sylvester_resultant(&h_poly(m), &simplest_sextic_poly(&rat_from_int(m)))?;
    let expected = -rat_int(19683) * num_traits::pow(rat_from_int(&norm_int(m)), 6);
    Ok(res == expected)
}

/// `sum c_i x^i y^(deg - i)`.
fn homogenize(p: &UniPoly, deg: usize, x: &Rat, y: &Rat) -> Rat {
    p.coeffs()
        .iter()
        .enumerate()
        .fold(Rat::zero(), |acc, (i, c)| acc + c * num_traits::pow(x.clone(), i) * num_traits::pow(y.clone(), deg - i))
}

/// The homogenized certificate `H P + F Q = 27(m^2+3m+9) y^11` and the
/// shape of `H`, both as grid identities in `(x, y)`.
///
/// `mutate` accepts `"hpq"` (constant `26(m^2+3m+9)`) and `"h-product"`.
pub fn hpq_homogeneous_check(m: &Int, mutate: Option<&str>) -> IdentityReport {
    let mut report = IdentityReport::new(format!("homogeneous certificate at m={m}"));
    let k = rat_from_int(&norm_int(m));
    let (h, p, q) = (h_poly(m), p_closed_form(m), q_closed_form(m));
    let f = simplest_sextic_poly(&rat_from_int(m));
    let c = if mutate == Some("hpq") { rat_int(26) } else { rat_int(27) } * &k;
    report.push_grid(
        "hpq",
        "H P + F Q = 27(m^2+3m+9) y^11",
        identity_check_grid(
            |v| Some(homogenize(&h, 6, &v[0], &v[1]) * homogenize(&p, 5, &v[0], &v[1]) + homogenize(&f, 6, &v[0], &v[1]) * homogenize(&q, 5, &v[0], &v[1])),
            |v| Some(&c * num_traits::pow(v[1].clone(), 11)),
            &["x", "y"],
            &[11, 11],
        ),
    );
    let bump = if mutate == Some("h-product") { Rat::one() } else { Rat::zero() };
    report.push_grid(
        "h-product",
        "H = (m^2+3m+9) xy(x+y)(x-y)(x+2y)(2x+y)",
        identity_check_grid(
            |v| Some(homogenize(&h, 6, &v[0], &v[1])),
            |v| {
                let (x, y) = (&v[0], &v[1]);
                let two = rat_int(2);
                Some(&k * x * y * (x + y) * (x - y) * (x + &two * y) * (&two * x + y) + &bump)
            },
            &["x", "y"],
            &[6, 6],
        ),
    );
    report
}

/// Both congruences behind the integrality of `N`, by exhaustive residues:
/// `27 | xy(x+y)(x-y)(x+2y)(2x+y)` when `x ≡ y (mod 3)` (residues mod 27),
/// and `F_m(x, y) ≡ 1 (mod 3)` otherwise (residues of `x, y, m` mod 3).
pub fn mod3_lemma_check() -> IdentityReport {
    let mut report = IdentityReport::new("mod 3 lemmas");
    let mut bad = Vec::new();
    let mut count = 0;
    for x in 0..27i64 {
        for y in (0..27i64).filter(|y| (x - y) % 3 == 0) {
            count += 1;
            let prod = x * y * (x + y) * (x - y) * (x + 2 * y) * (2 * x + y);
            if prod % 27 != 0 {
                bad.push(format!("({x},{y})"));
            }
        }
    }
    let detail = if bad.is_empty() { format!("{count} residue pairs") } else { bad.join(" ") };
    report.push("mod3-equal", "x ≡ y (mod 3) implies 27 | xy(x+y)(x-y)(x+2y)(2x+y)", bad.is_empty(), detail);

    let mut bad = Vec::new();
    let mut count = 0;
    for m in 0..3i64 {
        for x in 0..3i64 {
            for y in (0..3i64).filter(|&y| y != x) {
                count += 1;
                let v = eval_form_int(&Int::from(m), &Int::from(x), &Int::from(y));
                if !(v - 1i64).mod_floor(&Int::from(3)).is_zero() {
                    bad.push(format!("(x,y,m)=({x},{y},{m})"));
                }
            }
        }
    }
    let detail = if bad.is_empty() { format!("{count} residue triples") } else { bad.join(" ") };
    report.push("mod3-unequal", "x ≢ y (mod 3) implies F_m(x,y) ≡ 1 (mod 3)", bad.is_empty(), detail);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;
    use crate::family::LatticePoint;

    #[test]
    fn certificate_examples() {
        let c = bezout_certificate(&int(0)).unwrap();
        assert_eq!(c.constant, int(243));
        assert_eq!(c.p, UniPoly::from_ints(&[242, 438, -1071, -1232, -42, 84]));
        assert_eq!(c.q, UniPoly::from_ints(&[27, 322, 154, -336, -168]).scale(&rat_int(9)));
        assert_eq!(c.cofactor_gcd, int(729) * int(9).pow(5u32));
        let c = bezout_certificate(&int(1)).unwrap();
        assert_eq!(c.constant, int(351));
        assert_eq!(c.p.leading_coeff(), Some(&rat_int(84)));
        assert_eq!(c.q.leading_coeff(), Some(&rat_int(-168 * 13)));
    }

    #[test]
    fn resultants() {
        let r = sylvester_resultant(&h_poly(&int(0)), &simplest_sextic_poly(&rat_int(0))).unwrap();
        assert_eq!(r, rat_int(-10460353203));
        for m in [-7, 0, 1, 12] {
            assert!(resultant_check(&int(m)).unwrap());
        }
    }

    #[test]
    fn homogeneous_identity_and_mutations() {
        for m in [0, 7] {
            assert!(hpq_homogeneous_check(&int(m), None).all_passed());
        }
        for item in ["hpq", "h-product"] {
            let r = hpq_homogeneous_check(&int(0), Some(item));
            let failed: Vec<_> = r.failures().map(|c| c.item.as_str()).collect();
            assert_eq!(failed, vec![item]);
        }
    }

    #[test]
    fn mod3() {
        let r = mod3_lemma_check();
        assert!(r.all_passed(), "{r}");
        assert_eq!(LatticePoint::from_i64(1, 4).trivial_product(), int(-3240));
        assert_eq!(eval_form_int(&int(0), &int(1), &int(2)), int(37));
    }
}
