//! The simplest sextic family: the binary form `F_m`, the polynomials
//! `f^C6_s` and `f^C3_s`, the C6 action on lattice points, trivial solutions
//! and the Galois group of a specialization.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactmath::{exact_root, factor_over_q, rat_int, Factorization, Int, Rat, UniPoly};
use crate::{Error, Result};

mod identities;

pub use identities::{verify_family_identities, verify_spot_values, FAMILY_ITEMS};

/// `F_m(X,Y) = sum c_i X^(6-i) Y^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SexticForm {
    param: Rat,
    coeffs: [Rat; 7],
}

impl SexticForm {
    pub fn param(&self) -> &Rat {
        &self.param
    }

    /// Coefficients of `X^6, X^5 Y, ..., Y^6`.
    pub fn coeffs(&self) -> &[Rat; 7] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        // Homogeneous Horner: ((c0 x + c1 y) x + c2 y^2) ...
        let mut acc = Rat::zero();
        let mut ypow = Rat::one();
        for c in &self.coeffs {
            acc = acc * x + c * &ypow;
            ypow *= y;
        }
        acc
    }
}

pub fn sextic_form(m: &Rat) -> SexticForm {
    let three = rat_int(3);
    let coeffs = [
        Rat::one(),
        -rat_int(2) * m,
        -rat_int(5) * (m + &three),
        rat_int(-20),
        rat_int(5) * m,
        rat_int(2) * (m + &three),
        Rat::one(),
    ];
    SexticForm { param: m.clone(), coeffs }
}

/// `F_m(x, y)` for arbitrary rational arguments.
pub fn form_value(m: &Rat, x: &Rat, y: &Rat) -> Rat {
    sextic_form(m).eval(x, y)
}

pub fn eval_form(m: &Rat, p: &LatticePoint) -> Rat {
    form_value(m, &Rat::from_integer(p.x.clone()), &Rat::from_integer(p.y.clone()))
}

/// `F_m(x, y)` over the integers.
pub fn eval_form_int(m: &Int, x: &Int, y: &Int) -> Int {
    let m3 = m + 3;
    let x2 = x * x;
    let y2 = y * y;
    let x3 = &x2 * x;
    let y3 = &y2 * y;
    &x3 * &x3 - Int::from(2) * m * &x2 * &x3 * y - Int::from(5) * &m3 * &x2 * &x2 * &y2 - Int::from(20) * &x3 * &y3
        + Int::from(5) * m * &x2 * &y2 * &y2
        + Int::from(2) * &m3 * x * &y2 * &y3
        + &y3 * &y3
}

/// `s^2 + 3s + 9`.
pub fn quadratic_norm(s: &Rat) -> Rat {
    s * s + rat_int(3) * s + rat_int(9)
}

/// `f^C6_s(X) = F_s(X, 1)`.
pub fn simplest_sextic_poly(s: &Rat) -> UniPoly {
    let mut c = sextic_form(s).coeffs.to_vec();
    c.reverse();
    UniPoly::new(c)
}

/// `f^C6_s(x)` without building the polynomial.
pub fn sextic_value(s: &Rat, x: &Rat) -> Rat {
    form_value(s, x, &Rat::one())
}

/// Shanks's simplest cubic `X^3 - sX^2 - (s+3)X - 1`.
pub fn simplest_cubic_poly(s: &Rat) -> UniPoly {
    UniPoly::new(vec![-Rat::one(), -(s + rat_int(3)), -s.clone(), Rat::one()])
}

pub fn cubic_value(s: &Rat, x: &Rat) -> Rat {
    ((x - s) * x - (s + rat_int(3))) * x - Rat::one()
}

/// `6^6 (s^2+3s+9)^5`.
pub fn sextic_discriminant_formula(s: &Rat) -> Rat {
    rat_int(46656) * num_traits::pow(quadratic_norm(s), 5)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: Int,
    pub y: Int,
}

impl LatticePoint {
    pub fn new(x: Int, y: Int) -> Self {
        LatticePoint { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        LatticePoint { x: x.into(), y: y.into() }
    }

    /// `sigma(x, y) = (x + y, -x)`.
    pub fn sigma(&self) -> Self {
        LatticePoint { x: &self.x + &self.y, y: -&self.x }
    }

    pub fn neg(&self) -> Self {
        LatticePoint { x: -&self.x, y: -&self.y }
    }

    pub fn scale(&self, e: &Int) -> Self {
        LatticePoint { x: &self.x * e, y: &self.y * e }
    }

    /// `xy(x+y)(x-y)(x+2y)(2x+y)`.
    pub fn trivial_product(&self) -> Int {
        let (x, y) = (&self.x, &self.y);
        x * y * (x + y) * (x - y) * (x + y * 2) * (x * 2 + y)
    }

    pub fn is_primitive(&self) -> bool {
        self.x.gcd(&self.y).is_one()
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The C6 orbit of a lattice point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitClass {
    /// Distinct iterates `p, sigma(p), ...` in iteration order.
    pub points: Vec<LatticePoint>,
    /// Lexicographically smallest point.
    pub canonical: LatticePoint,
}

impl OrbitClass {
    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.contains(p)
    }
}

pub fn c6_orbit(p: &LatticePoint) -> OrbitClass {
    let mut points = vec![p.clone()];
    let mut q = p.sigma();
    while &q != p {
        points.push(q.clone());
        q = q.sigma();
    }
    let canonical = points.iter().min().unwrap().clone();
    OrbitClass { points, canonical }
}

pub fn is_trivial(p: &LatticePoint) -> bool {
    p.trivial_product().is_zero()
}

/// The trivial solutions of `F_m(x, y) = lambda`, sorted.
///
/// Only `lambda = e^6` and `lambda = -27 e^6` (with `e > 0`) have any; the
/// value does not depend on `m`.
pub fn trivial_solutions(_m: &Rat, lambda: &Int) -> Result<Vec<LatticePoint>> {
    if lambda.is_zero() {
        return Err(Error::usage("lambda must be nonzero"));
    }
    let base: [(i64, i64); 6];
    let e = if lambda.is_positive() {
        base = [(0, 1), (0, -1), (1, 0), (-1, 0), (1, -1), (-1, 1)];
        exact_root(lambda, 6)
    } else {
        base = [(1, 1), (-1, -1), (2, -1), (-2, 1), (1, -2), (-1, 2)];
        let (q, r) = (-lambda).div_rem(&Int::from(27));
        if r.is_zero() {
            exact_root(&q, 6)
        } else {
            None
        }
    };
    let Some(e) = e else {
        return Ok(Vec::new());
    };
    let mut pts: Vec<LatticePoint> = base.iter().map(|&(x, y)| LatticePoint::from_i64(x, y).scale(&e)).collect();
    pts.sort();
    Ok(pts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GaloisTag {
    Trivial,
    C2,
    C3,
    C6,
}

impl GaloisTag {
    pub fn order(self) -> usize {
        match self {
            GaloisTag::Trivial => 1,
            GaloisTag::C2 => 2,
            GaloisTag::C3 => 3,
            GaloisTag::C6 => 6,
        }
    }

    pub fn from_order(n: usize) -> Option<Self> {
        match n {
            1 => Some(GaloisTag::Trivial),
            2 => Some(GaloisTag::C2),
            3 => Some(GaloisTag::C3),
            6 => Some(GaloisTag::C6),
            _ => None,
        }
    }
}

impl fmt::Display for GaloisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GaloisTag::Trivial => "1",
            GaloisTag::C2 => "C2",
            GaloisTag::C3 => "C3",
            GaloisTag::C6 => "C6",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisClass {
    pub tag: GaloisTag,
    /// `(t1, t2)`, descending, when `f^C6_s = f^C3_t1 * f^C3_t2`.
    pub cubic_factor_params: Option<(Rat, Rat)>,
    pub factorization: Factorization,
}

/// `t` with `f^C3_t = p`, if `p` has that shape.
fn simplest_cubic_param(p: &UniPoly) -> Option<Rat> {
    let c = p.coeffs();
    let shaped = c.len() == 4 && c[3].is_one() && c[0] == -Rat::one() && c[1] == &c[2] - rat_int(3);
    shaped.then(|| -c[2].clone())
}

/// Galois group of `f^C6_s` over the rationals, read off the factorization:
/// the group is cyclic, so its order is the lcm of the factor degrees.
pub fn galois_group(s: &Rat) -> Result<GaloisClass> {
    let factorization = factor_over_q(&simplest_sextic_poly(s))?;
    let order = factorization.degrees().into_iter().fold(1usize, |acc, d| acc.lcm(&d));
    let tag = GaloisTag::from_order(order)
        .ok_or_else(|| Error::internal(format!("factor degrees of f^C6_{s} have lcm {order}")))?;
    let cubic_factor_params = match factorization.factors.as_slice() {
        [(f, 1), (g, 1)] => match (simplest_cubic_param(f), simplest_cubic_param(g)) {
            (Some(a), Some(b)) => Some(if a >= b { (a, b) } else { (b, a) }),
            _ => None,
        },
        _ => None,
    };
    Ok(GaloisClass { tag, cubic_factor_params, factorization })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rational_roots};

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::from_i64(x, y)
    }

    #[test]
    fn form_coefficients() {
        let c: Vec<Rat> = sextic_form(&rat_int(0)).coeffs().to_vec();
        assert_eq!(c, [1, 0, -15, -20, 0, 6, 1].map(rat_int).to_vec());
        let c: Vec<Rat> = sextic_form(&rat_int(1)).coeffs().to_vec();
        assert_eq!(c, [1, -2, -20, -20, 5, 8, 1].map(rat_int).to_vec());
    }

    #[test]
    fn form_values() {
        assert_eq!(eval_form(&rat_int(3), &p(1, 2)), rat_int(397));
        assert_eq!(eval_form(&rat_int(7), &p(1, 0)), rat_int(1));
        assert_eq!(eval_form(&rat_int(2), &p(1, 1)), rat_int(-27));
        assert_eq!(eval_form(&rat_int(0), &p(2, 1)), rat_int(-323));
        for m in -5..5 {
            for (x, y) in [(3, -7), (2, 5), (-4, 1)] {
                let v = eval_form_int(&m.into(), &x.into(), &y.into());
                assert_eq!(Rat::from_integer(v), eval_form(&rat_int(m), &p(x, y)));
            }
        }
    }

    #[test]
    fn family_polys() {
        assert_eq!(simplest_sextic_poly(&rat_int(-1)).to_string(), "X^6+2*X^5-10*X^4-20*X^3-5*X^2+4*X+1");
        assert_eq!(simplest_cubic_poly(&rat_int(0)).to_string(), "X^3-3*X-1");
        let s = rat(5, 7);
        assert_eq!(simplest_sextic_poly(&s).eval(&rat_int(1)), rat_int(-27));
        assert_eq!(simplest_cubic_poly(&s).eval(&rat_int(-1)), rat_int(1));
        assert_eq!(cubic_value(&s, &rat(2, 3)), simplest_cubic_poly(&s).eval(&rat(2, 3)));
        let roots = rational_roots(&simplest_cubic_poly(&rat(-3, 2)));
        assert_eq!(roots, vec![rat_int(-2), rat(-1, 2), rat_int(1)]);
    }

    #[test]
    fn orbits() {
        let o = c6_orbit(&p(1, 2));
        assert_eq!(o.points, vec![p(1, 2), p(3, -1), p(2, -3), p(-1, -2), p(-3, 1), p(-2, 3)]);
        assert_eq!(o.canonical, p(-3, 1));
        assert_eq!(c6_orbit(&p(0, 0)).points, vec![p(0, 0)]);
        assert_eq!(c6_orbit(&p(1, 0)).points, vec![p(1, 0), p(1, -1), p(0, -1), p(-1, 0), p(-1, 1), p(0, 1)]);
    }

    #[test]
    fn triviality() {
        assert!(is_trivial(&p(1, 1)));
        assert!(!is_trivial(&p(1, 2)));
        assert_eq!(p(1, 2).trivial_product(), Int::from(-120));
        assert!(is_trivial(&p(2, -1)));
    }

    #[test]
    fn trivial_solution_sets() {
        let m = rat_int(4);
        let one = trivial_solutions(&m, &1.into()).unwrap();
        assert_eq!(one, vec![p(-1, 0), p(-1, 1), p(0, -1), p(0, 1), p(1, -1), p(1, 0)]);
        let minus = trivial_solutions(&m, &(-27).into()).unwrap();
        assert_eq!(minus.len(), 6);
        assert!(minus.contains(&p(-2, 1)) && minus.contains(&p(1, 1)));
        assert!(trivial_solutions(&m, &5.into()).unwrap().is_empty());
        let sixty_four = trivial_solutions(&m, &64.into()).unwrap();
        assert!(sixty_four.iter().all(|q| eval_form(&m, q) == rat_int(64)));
        assert!(trivial_solutions(&m, &0.into()).is_err());
        assert!(trivial_solutions(&m, &(-54).into()).unwrap().is_empty());
    }

    #[test]
    fn galois_groups() {
        assert_eq!(galois_group(&rat_int(7)).unwrap().tag, GaloisTag::C6);
        let g = galois_group(&rat_int(-8)).unwrap();
        assert_eq!(g.tag, GaloisTag::C3);
        assert_eq!(g.cubic_factor_params, Some((rat_int(-1), rat_int(-15))));
        assert_eq!(galois_group(&rat(-3, 2)).unwrap().tag, GaloisTag::C2);
        for (s, pair) in [(-3, (0, -6)), (0, (3, -3)), (5, (12, -2))] {
            let g = galois_group(&rat_int(s)).unwrap();
            assert_eq!(g.cubic_factor_params, Some((rat_int(pair.0), rat_int(pair.1))));
        }
    }
}
