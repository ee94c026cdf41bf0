//! Integer factorization by trial division with a Pollard-rho fallback, and
//! divisor enumeration.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u32 = 10_000;

/// Prime factorization of `|n|` as sorted `(prime, exponent)` pairs.
/// `n = 0` and `n = ±1` give an empty list.
pub fn factorize(n: &BigInt) -> Vec<(BigUint, u32)> {
    let mut n = n.magnitude().clone();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut d = 2u32;
    while d <= TRIAL_LIMIT {
        let dd = BigUint::from(d);
        if &dd * &dd > n {
            break;
        }
        let mut e = 0;
        while (&n % &dd).is_zero() {
            n /= &dd;
            e += 1;
        }
        if e > 0 {
            out.push((dd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        let mut stack = vec![n];
        let mut big: Vec<BigUint> = Vec::new();
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if is_probable_prime(&m) {
                big.push(m);
                continue;
            }
            let f = pollard_brent(&m);
            let g = &m / &f;
            stack.push(f);
            stack.push(g);
        }
        big.sort();
        for p in big {
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
    }
    out
}

/// All positive divisors of `|n|` in increasing order (`n != 0`).
pub fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut divs = vec![BigUint::one()];
    for (p, e) in factorize(n) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.into_iter().map(BigInt::from).collect()
}

/// Miller-Rabin with the first twelve prime bases; deterministic below
/// 3.3 * 10^24 and a strong probable-prime test above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        let p = BigUint::from(p);
        if (n % &p).is_zero() {
            return *n == p;
        }
    }
    let n1 = n - 1u32;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for a in BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of an odd composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut x, mut y) = (BigUint::from(2u32), BigUint::from(2u32));
        let mut g = BigUint::one();
        let mut q = BigUint::one();
        let mut r = 1u64;
        let mut ys = y.clone();
        let m = 64u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1u32;
    }
}

pub fn small_value(n: &BigUint) -> Option<u64> {
    n.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: i64) -> Vec<(u64, u32)> {
        factorize(&BigInt::from(n))
            .into_iter()
            .map(|(p, e)| (small_value(&p).unwrap(), e))
            .collect()
    }

    #[test]
    fn small_factorizations() {
        assert_eq!(f(351), vec![(3, 3), (13, 1)]);
        assert_eq!(f(-243), vec![(3, 5)]);
        assert!(f(1).is_empty());
        assert_eq!(f(1_000_000_007), vec![(1_000_000_007, 1)]);
    }

    #[test]
    fn rho_splits_semiprime() {
        let p = BigInt::from(1_000_000_007u64);
        let q = BigInt::from(998_244_353u64);
        let fac = factorize(&(&p * &q * 9));
        let primes: Vec<BigInt> = fac.iter().map(|(p, _)| BigInt::from(p.clone())).collect();
        assert_eq!(primes, vec![BigInt::from(3), q, p]);
    }

    #[test]
    fn divisors_of_351() {
        let d: Vec<i64> = positive_divisors(&BigInt::from(351))
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect();
        assert_eq!(d, vec![1, 3, 9, 13, 27, 39, 117, 351]);
    }
}
