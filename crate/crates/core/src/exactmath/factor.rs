//! Complete factorization over the rationals for degree <= 12.
//!
//! Pipeline: squarefree decomposition (Yun), then for each squarefree part
//! clear denominators, strip rational roots, and run Zassenhaus on what is
//! left: factor modulo the smallest suitable prime, Hensel-lift to a
//! Mignotte-style bound, and recombine over subsets of the lifted factors.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::intfactor::positive_divisors;
use super::intpoly::{self, eval_homogeneous, norm2_ceil, symmetric_mod, IntPoly};
use super::modp::{primes_from, ModPoly, PrimeField};
use super::{poly_gcd, Int, Rat, UniPoly};
use crate::{Error, Result};

pub const MAX_FACTOR_DEGREE: usize = 12;

/// `unit * prod factor^mult` with monic irreducible factors sorted by degree
/// and then by coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rat,
    pub factors: Vec<(UniPoly, usize)>,
}

impl Factorization {
    /// Multiply everything back out.
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (f, e)| &acc * &f.pow(*e as u32))
    }

    /// Factor degrees with multiplicity, largest first.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, e)| std::iter::repeat(f.degree().unwrap_or(0)).take(*e))
            .collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }

    /// Roots of the linear factors, with multiplicity, ascending.
    pub fn linear_roots(&self) -> Vec<Rat> {
        let mut r: Vec<Rat> = self
            .factors
            .iter()
            .filter(|(f, _)| f.degree() == Some(1))
            .flat_map(|(f, e)| std::iter::repeat(-f.coeff(0)).take(*e))
            .collect();
        r.sort();
        r
    }

    /// `(f1)(f2)...` using the canonical polynomial display.
    pub fn factor_string(&self) -> String {
        self.factors
            .iter()
            .map(|(f, e)| if *e == 1 { format!("({f})") } else { format!("({f})^{e}") })
            .collect()
    }
}

/// Yun's squarefree decomposition of a nonconstant polynomial: pairwise
/// coprime monic `(a_i, i)` with `monic(p) = prod a_i^i`.
pub fn squarefree_decomposition(p: &UniPoly) -> Vec<(UniPoly, usize)> {
    let a = p.monic();
    if a.is_constant() {
        return Vec::new();
    }
    let b = a.derivative();
    let c = poly_gcd(&a, &b).expect("nonzero");
    let mut w = a.exact_div(&c).expect("gcd divides");
    let mut y = b.exact_div(&c).expect("gcd divides");
    let mut out = Vec::new();
    let mut i = 1;
    while !w.is_constant() {
        let z = &y - &w.derivative();
        let g = poly_gcd(&w, &z).expect("w nonzero");
        if !g.is_constant() {
            out.push((g.clone(), i));
        }
        w = w.exact_div(&g).expect("gcd divides");
        y = z.exact_div(&g).expect("gcd divides");
        i += 1;
    }
    out
}

/// All rational roots with multiplicity, ascending. Constants (including the
/// zero polynomial) have none.
///
/// Candidates `u/v` come from divisors of the trailing and leading
/// coefficients of the cleared polynomial, filtered by a root bound, by the
/// values at `±1`, and by roots modulo a few small primes.
pub fn rational_roots(p: &UniPoly) -> Vec<Rat> {
    if p.is_constant() {
        return Vec::new();
    }
    let (_, ip) = IntPoly::from_rational(p);
    let mut f = ip.primitive().to_vec();
    let mut roots = Vec::new();
    while f[0].is_zero() {
        f.remove(0);
        roots.push(Rat::zero());
    }
    for r in distinct_integer_poly_roots(&f) {
        let lin = [-r.numer().clone(), r.denom().clone()];
        while let Some(q) = intpoly::exact_div(&f, &lin) {
            f = q;
            roots.push(r.clone());
        }
    }
    roots.sort();
    roots
}

/// Distinct rational roots of a primitive integer polynomial with nonzero
/// constant term.
fn distinct_integer_poly_roots(f: &[Int]) -> Vec<Rat> {
    let n = f.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lc = &f[n];
    let a0 = &f[0];
    let at_one: Int = f.iter().sum();
    let at_minus_one: Int = f
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
        .sum();
    // |r| <= 1 + max |a_i / lc|
    let max_ratio = f[..n].iter().map(|c| Rat::new(c.abs(), lc.abs())).max().unwrap_or_else(Rat::zero);
    let bound = max_ratio + Rat::one();

    let filters: Vec<(PrimeField, Vec<bool>)> = primes_from(3)
        .filter(|&q| !(lc % q).is_zero())
        .take(3)
        .map(|q| {
            let fp = PrimeField::new(q);
            let fm = f.iter().map(|c| fp.reduce(c)).collect::<Vec<_>>();
            let is_root = (0..q)
                .map(|x| fm.iter().rev().fold(0, |acc, &c| fp.add(fp.mul(acc, x), c)) == 0)
                .collect();
            (fp, is_root)
        })
        .collect();

    let divides = |d: &Int, v: &Int| -> bool {
        if d.is_zero() {
            v.is_zero()
        } else {
            (v % d).is_zero()
        }
    };

    let vs = positive_divisors(lc);
    let us = positive_divisors(a0);
    let mut found = BTreeSet::new();
    for v in &vs {
        let limit = &bound * Rat::from_integer(v.clone());
        for u in us.iter().take_while(|u| Rat::from_integer((*u).clone()) <= limit) {
            if !u.gcd(v).is_one() {
                continue;
            }
            for u in [u.clone(), -u] {
                if !divides(&(v - &u), &at_one) || !divides(&(v + &u), &at_minus_one) {
                    continue;
                }
                let passes_mod = filters.iter().all(|(fp, is_root)| {
                    let x = fp.mul(fp.reduce(&u), fp.inv(fp.reduce(v)));
                    is_root[x as usize]
                });
                if passes_mod && eval_homogeneous(f, &u, v).is_zero() {
                    found.insert(Rat::new(u, v.clone()));
                }
            }
        }
    }
    found.into_iter().collect()
}

/// Factor over the rationals. Degree must lie in `1..=12`.
pub fn factor_over_q(p: &UniPoly) -> Result<Factorization> {
    let degree = p.degree().unwrap_or(0);
    if p.is_zero() || !(1..=MAX_FACTOR_DEGREE).contains(&degree) {
        return Err(Error::UnsupportedDegree {
            op: "factor_over_q",
            degree,
            min: 1,
            max: MAX_FACTOR_DEGREE,
        });
    }
    let unit = p.leading_coeff().unwrap().clone();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(p) {
        for f in factor_squarefree(&part) {
            factors.push((f, mult));
        }
    }
    factors.sort();
    Ok(Factorization { unit, factors })
}

/// Monic irreducible factors of a squarefree rational polynomial.
fn factor_squarefree(p: &UniPoly) -> Vec<UniPoly> {
    let (_, ip) = IntPoly::from_rational(p);
    let mut f = ip.primitive().to_vec();
    let mut out = Vec::new();
    if f[0].is_zero() {
        f.remove(0);
        out.push(UniPoly::x());
    }
    for r in distinct_integer_poly_roots(&f) {
        let lin = [-r.numer().clone(), r.denom().clone()];
        f = intpoly::exact_div(&f, &lin).expect("root divides");
        out.push(UniPoly::linear_root(&r));
    }
    match f.len() - 1 {
        0 => {}
        // No rational roots left, so degree 2 and 3 remainders are irreducible.
        1..=3 => out.push(to_monic(&f)),
        _ => out.extend(zassenhaus(&f).iter().map(|g| to_monic(g))),
    }
    out
}

fn to_monic(f: &[Int]) -> UniPoly {
    UniPoly::from_int_coeffs(f).monic()
}

/// Smallest prime `p >= 3` with `p` not dividing the leading coefficient and
/// `f mod p` squarefree.
fn choose_prime(f: &[Int]) -> (PrimeField, ModPoly) {
    let lc = f.last().unwrap();
    for p in primes_from(3) {
        if (lc % p).is_zero() {
            continue;
        }
        let fp = PrimeField::new(p);
        let image = fp.reduce_poly(f);
        if fp.is_squarefree(&image) {
            return (fp, image);
        }
    }
    unreachable!("a squarefree integer polynomial stays squarefree modulo almost every prime")
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// primitive squarefree integer polynomial of degree >= 2.
fn zassenhaus(f: &[Int]) -> Vec<Vec<Int>> {
    let n = f.len() - 1;
    let lc = f[n].clone();
    let (fp, image) = choose_prime(f);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c6c6);
    let modular = fp.factor_squarefree(&fp.monic(&image), &mut rng);
    if modular.len() == 1 {
        return vec![intpoly::primitive_part(f)];
    }

    // Lift past twice the bound 2^n * ||f||_2 * |lc| on coefficients of lc * g.
    let bound: Int = (Int::one() << n) * norm2_ceil(f) * lc.abs();
    let p = Int::from(fp.modulus());
    let mut k = 1u32;
    let mut pk = p.clone();
    while pk <= &bound * 2 {
        pk *= &p;
        k += 1;
    }

    let lc_inv = lc.extended_gcd(&pk).x.mod_floor(&pk);
    let monic_target: Vec<Int> = f.iter().map(|c| (c * &lc_inv).mod_floor(&pk)).collect();
    let lifted = hensel_lift(&monic_target, &modular, fp, k);
    recombine(f, lifted, &pk)
}

/// Lift monic factors `g_1 ... g_r` of `target mod p` to monic factors
/// modulo `p^k` by repeated linear two-factor lifting.
fn hensel_lift(target: &[Int], factors: &[ModPoly], fp: PrimeField, k: u32) -> Vec<Vec<Int>> {
    let p = Int::from(fp.modulus());
    let mut current = target.to_vec();
    let mut out = Vec::with_capacity(factors.len());
    for i in 0..factors.len() - 1 {
        let g0 = &factors[i];
        let h0 = factors[i + 1..]
            .iter()
            .fold(vec![1u64], |acc, g| fp.poly_mul(&acc, g));
        let (g, h) = lift_pair(&current, g0, &h0, fp, &p, k);
        out.push(g);
        current = h;
    }
    out.push(current);
    out
}

fn lift_pair(
    target: &[Int],
    g0: &[u64],
    h0: &[u64],
    fp: PrimeField,
    p: &Int,
    k: u32,
) -> (Vec<Int>, Vec<Int>) {
    let (one, s, t) = fp.poly_xgcd(g0, h0);
    debug_assert_eq!(one, vec![1], "modular factors must be coprime");
    let mut g: Vec<Int> = g0.iter().map(|&c| Int::from(c)).collect();
    let mut h: Vec<Int> = h0.iter().map(|&c| Int::from(c)).collect();
    let mut pj = p.clone();
    for _ in 1..k {
        let gh = intpoly::mul(&g, &h);
        let len = target.len().max(gh.len());
        let e: Vec<Int> = (0..len)
            .map(|i| {
                let a = target.get(i).cloned().unwrap_or_default();
                let b = gh.get(i).cloned().unwrap_or_default();
                let d = a - b;
                debug_assert!((&d % &pj).is_zero());
                d / &pj
            })
            .collect();
        let e_mod = fp.reduce_poly(&e);
        let (q, dg) = fp.poly_divrem(&fp.poly_mul(&t, &e_mod), g0);
        let dh = fp.poly_add(&fp.poly_mul(&s, &e_mod), &fp.poly_mul(&q, h0));
        for (i, c) in dg.iter().enumerate() {
            g[i] += &pj * c;
        }
        for (i, c) in dh.iter().enumerate() {
            if i < h.len() {
                h[i] += &pj * c;
            } else {
                h.push(&pj * c);
            }
        }
        pj *= p;
    }
    (g, h)
}

fn mul_mod_all(polys: &[&Vec<Int>], scale: &Int, pk: &Int) -> Vec<Int> {
    let mut acc = vec![scale.mod_floor(pk)];
    for g in polys {
        acc = intpoly::mul(&acc, g).iter().map(|c| c.mod_floor(pk)).collect();
    }
    acc.iter().map(|c| symmetric_mod(c, pk)).collect()
}

/// Zassenhaus recombination: try products of `s` lifted factors for growing
/// `s`, accepting a candidate when it and its cofactor multiply back to
/// `lc * f` exactly.
fn recombine(f: &[Int], mut lifted: Vec<Vec<Int>>, pk: &Int) -> Vec<Vec<Int>> {
    let mut rest = f.to_vec();
    let mut found = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= lifted.len() {
        let lc = rest.last().unwrap().clone();
        let target: Vec<Int> = rest.iter().map(|c| c * &lc).collect();
        for subset in (0..lifted.len()).combinations(s) {
            let chosen: Vec<&Vec<Int>> = subset.iter().map(|&i| &lifted[i]).collect();
            let g = mul_mod_all(&chosen, &lc, pk);
            if g[0].is_zero() || !(&target[0] % &g[0]).is_zero() {
                continue;
            }
            let others: Vec<&Vec<Int>> = (0..lifted.len())
                .filter(|i| !subset.contains(i))
                .map(|i| &lifted[i])
                .collect();
            let h = mul_mod_all(&others, &lc, pk);
            let mut gh = intpoly::mul(&g, &h);
            intpoly::trim(&mut gh);
            if gh == target {
                found.push(intpoly::primitive_part(&g));
                rest = intpoly::primitive_part(&h);
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
                continue 'outer;
            }
        }
        s += 1;
    }
    found.push(intpoly::primitive_part(&rest));
    found
}
