//! Polynomials over a small prime field `GF(p)`, `p < 2^32`.
//!
//! Coefficients are stored lowest degree first as `u64` residues. Used by the
//! Zassenhaus factorizer and by the modular decomposition-type prefilter.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

pub type ModPoly = Vec<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 32), "prime out of range");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.p as i128) as u64
    }

    pub fn reduce(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn reduce_poly(&self, coeffs: &[BigInt]) -> ModPoly {
        let mut v: ModPoly = coeffs.iter().map(|c| self.reduce(c)).collect();
        trim(&mut v);
        v
    }

    pub fn monic(&self, f: &[u64]) -> ModPoly {
        let mut v = f.to_vec();
        trim(&mut v);
        if let Some(&lc) = v.last() {
            if lc != 1 {
                let inv = self.inv(lc);
                for c in &mut v {
                    *c = self.mul(*c, inv);
                }
            }
        }
        v
    }

    pub fn poly_add(&self, a: &[u64], b: &[u64]) -> ModPoly {
        let n = a.len().max(b.len());
        let mut v: ModPoly = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(&mut v);
        v
    }

    pub fn poly_sub(&self, a: &[u64], b: &[u64]) -> ModPoly {
        let n = a.len().max(b.len());
        let mut v: ModPoly = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(&mut v);
        v
    }

    pub fn poly_mul(&self, a: &[u64], b: &[u64]) -> ModPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim(&mut out);
        out
    }

    pub fn poly_scale(&self, a: &[u64], c: u64) -> ModPoly {
        let mut v: ModPoly = a.iter().map(|&x| self.mul(x, c)).collect();
        trim(&mut v);
        v
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn poly_divrem(&self, a: &[u64], b: &[u64]) -> (ModPoly, ModPoly) {
        let db = b.len() - 1;
        let mut rem = a.to_vec();
        trim(&mut rem);
        if rem.len() < b.len() {
            return (Vec::new(), rem);
        }
        let inv = self.inv(b[db]);
        let mut quot = vec![0u64; rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = self.mul(rem[k + db], inv);
            if c == 0 {
                continue;
            }
            quot[k] = c;
            for (j, &d) in b.iter().enumerate() {
                rem[k + j] = self.sub(rem[k + j], self.mul(c, d));
            }
        }
        trim(&mut rem);
        trim(&mut quot);
        (quot, rem)
    }

    pub fn poly_rem(&self, a: &[u64], b: &[u64]) -> ModPoly {
        self.poly_divrem(a, b).1
    }

    pub fn poly_mulmod(&self, a: &[u64], b: &[u64], m: &[u64]) -> ModPoly {
        self.poly_rem(&self.poly_mul(a, b), m)
    }

    /// `base^e mod m`.
    pub fn poly_powmod(&self, base: &[u64], mut e: u128, m: &[u64]) -> ModPoly {
        let mut result: ModPoly = vec![1];
        let mut b = self.poly_rem(base, m);
        result = self.poly_rem(&result, m);
        while e > 0 {
            if e & 1 == 1 {
                result = self.poly_mulmod(&result, &b, m);
            }
            e >>= 1;
            if e > 0 {
                b = self.poly_mulmod(&b, &b, m);
            }
        }
        result
    }

    /// Monic gcd.
    pub fn poly_gcd(&self, a: &[u64], b: &[u64]) -> ModPoly {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = self.poly_rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn poly_xgcd(&self, a: &[u64], b: &[u64]) -> (ModPoly, ModPoly, ModPoly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        trim(&mut r0);
        trim(&mut r1);
        let (mut s0, mut s1): (ModPoly, ModPoly) = (vec![1], Vec::new());
        let (mut t0, mut t1): (ModPoly, ModPoly) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.poly_divrem(&r0, &r1);
            let s2 = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            let t2 = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let lc = *r0.last().expect("xgcd of two zero polynomials");
        let inv = self.inv(lc);
        (self.poly_scale(&r0, inv), self.poly_scale(&s0, inv), self.poly_scale(&t0, inv))
    }

    pub fn derivative(&self, f: &[u64]) -> ModPoly {
        let mut v: ModPoly = f
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul(c, i as u64 % self.p))
            .collect();
        trim(&mut v);
        v
    }

    /// True when `f` (degree >= 1) has no repeated factor over `GF(p)`.
    pub fn is_squarefree(&self, f: &[u64]) -> bool {
        let d = self.derivative(f);
        if d.is_empty() {
            return false;
        }
        self.poly_gcd(f, &d).len() == 1
    }

    /// Distinct-degree factorization of a monic squarefree `f`:
    /// pairs `(product of all irreducible factors of degree d, d)`.
    pub fn distinct_degree(&self, f: &[u64]) -> Vec<(ModPoly, usize)> {
        let mut out = Vec::new();
        let mut rest = self.monic(f);
        let x: ModPoly = vec![0, 1];
        let mut h = x.clone();
        let mut d = 0;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                let deg = rest.len() - 1;
                out.push((rest, deg));
                break;
            }
            h = self.poly_powmod(&h, self.p as u128, &rest);
            let g = self.poly_gcd(&rest, &self.poly_sub(&h, &x));
            if g.len() > 1 {
                rest = self.poly_divrem(&rest, &g).0;
                h = self.poly_rem(&h, &rest);
                out.push((g, d));
            }
        }
        out
    }

    /// Split a monic squarefree product of irreducibles of equal degree `d`
    /// (Cantor-Zassenhaus; `p` odd).
    pub fn equal_degree<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R) -> Vec<ModPoly> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        let exp = (u128::from(self.p).pow(d as u32) - 1) / 2;
        loop {
            let mut a: ModPoly = (0..n).map(|_| rng.gen_range(0..self.p)).collect();
            trim(&mut a);
            if a.len() < 2 {
                continue;
            }
            let b = self.poly_powmod(&a, exp, f);
            let g = self.poly_gcd(f, &self.poly_sub(&b, &[1]));
            if g.len() > 1 && g.len() < f.len() {
                let other = self.poly_divrem(f, &g).0;
                let mut parts = self.equal_degree(&g, d, rng);
                parts.extend(self.equal_degree(&self.monic(&other), d, rng));
                return parts;
            }
        }
    }

    /// Monic irreducible factors of a squarefree `f` over `GF(p)`, sorted.
    pub fn factor_squarefree<R: Rng>(&self, f: &[u64], rng: &mut R) -> Vec<ModPoly> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, rng));
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev())));
        out
    }

    /// Degrees of the irreducible factors of a squarefree `f`, without
    /// splitting the equal-degree parts.
    pub fn degree_pattern(&self, f: &[u64]) -> Vec<usize> {
        let mut pat = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            let k = (g.len() - 1) / d;
            pat.extend(std::iter::repeat(d).take(k));
        }
        pat.sort_unstable_by(|a, b| b.cmp(a));
        pat
    }

    /// Degree of the product of all linear and quadratic irreducible factors
    /// of a monic squarefree `f` (the degree of `gcd(f, X^(p^2) - X)`).
    pub fn low_degree_part(&self, f: &[u64]) -> usize {
        let x: ModPoly = vec![0, 1];
        let h1 = self.poly_powmod(&x, self.p as u128, f);
        let h2 = self.poly_powmod(&h1, self.p as u128, f);
        self.poly_gcd(f, &self.poly_sub(&h2, &x)).len() - 1
    }

    /// Number of distinct roots in `GF(p)` (degree of `gcd(f, X^p - X)`).
    pub fn root_count(&self, f: &[u64]) -> usize {
        let x: ModPoly = vec![0, 1];
        let h1 = self.poly_powmod(&x, self.p as u128, f);
        self.poly_gcd(f, &self.poly_sub(&h1, &x)).len() - 1
    }
}

pub fn trim(v: &mut ModPoly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Deterministic primality test for `n < 2^64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Odd primes in increasing order starting at `from`.
pub fn primes_from(from: u64) -> impl Iterator<Item = u64> {
    (from.max(3)..).filter(|&n| is_prime_u64(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn factor_small() {
        let f = PrimeField::new(5);
        // (x+1)(x+2)(x^2+2) mod 5; x^2 + 2 is irreducible mod 5
        let g = f.poly_mul(&f.poly_mul(&[1, 1], &[2, 1]), &[2, 0, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fac = f.factor_squarefree(&g, &mut rng);
        assert_eq!(fac, vec![vec![1, 1], vec![2, 1], vec![2, 0, 1]]);
        assert_eq!(f.degree_pattern(&g), vec![2, 1, 1]);
        assert_eq!(f.root_count(&g), 2);
        assert_eq!(f.low_degree_part(&g), 4);
    }

    #[test]
    fn xgcd_identity() {
        let f = PrimeField::new(7);
        let a = vec![3, 0, 1, 1];
        let b = vec![1, 5, 2];
        let (g, s, t) = f.poly_xgcd(&a, &b);
        let lhs = f.poly_add(&f.poly_mul(&s, &a), &f.poly_mul(&t, &b));
        assert_eq!(lhs, g);
    }

    #[test]
    fn squarefree_detection() {
        let f = PrimeField::new(3);
        assert!(!f.is_squarefree(&f.poly_mul(&[1, 1], &[1, 1])));
        assert!(f.is_squarefree(&[1, 0, 1]));
    }

    #[test]
    fn primality() {
        let ps: Vec<u64> = primes_from(3).take(6).collect();
        assert_eq!(ps, vec![3, 5, 7, 11, 13, 17]);
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(3_215_031_751));
    }
}
