//! Coincidence scans over integer parameter ranges.
//!
//! Most pairs are discarded by a modular prefilter: if `den * f^C6_A`
//! reduced mod `p` (with `p ∤ den` and a squarefree image) has an
//! irreducible factor of degree `> t`, then `f^C6_A` has a rational factor
//! of degree `> t`. A pair whose two resolvents are both ruled out this way
//! cannot be a coincidence:
//!
//! * sextic fields coincide only when a resolvent splits, so `t = 1`;
//! * for integer parameters both groups lie in `{C6, C3}` (the simplest
//!   cubic has no rational root at an integer parameter), and then every
//!   intersection row of degree 3 or 6 has a resolvent of type `(2,2,2)` or
//!   `(1,1,1,1,1,1)`, so the cubic scan uses `t = 2`.
//!
//! Survivors are classified exactly.

use std::ops::AddAssign;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{classify_intersection, decomposition_type, iso_test, resolvent_poly};
use crate::exactmath::modp::{primes_from, PrimeField};
use crate::exactmath::rat_int;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanKind {
    /// Pairs with the same cubic subfield.
    Cubic,
    /// Pairs with the same sextic field, excluding `n = m` and `n = -m-3`.
    Sextic,
}

impl ScanKind {
    pub fn name(self) -> &'static str {
        match self {
            ScanKind::Cubic => "cubic",
            ScanKind::Sextic => "sextic",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Primes tried per resolvent before giving up on pruning it.
    pub max_primes: usize,
    /// Upper limit on the number of pairs in one scan.
    pub max_pairs: u64,
    /// Sextic scan only: also report pairs with a resolvent of type
    /// `(2,2,2)`. Used to show the harness can find something.
    pub accept_quadratic_split: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig { jobs: 0, max_primes: 12, max_pairs: 60_000_000, accept_quadratic_split: false }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanStats {
    pub pairs: u64,
    pub pruned: u64,
    pub classified: u64,
    pub found: u64,
}

impl AddAssign for ScanStats {
    fn add_assign(&mut self, o: ScanStats) {
        self.pairs += o.pairs;
        self.pruned += o.pruned;
        self.classified += o.classified;
        self.found += o.found;
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanOutcome {
    /// Sorted lexicographically.
    pub pairs: Vec<(i64, i64)>,
    pub stats: ScanStats,
}

fn prefilter_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_from(5).take(64).collect())
}

/// Whether some prime proves that `f^C6_{num/den}` has an irreducible
/// factor of degree `> threshold`.
fn resolvent_exceeds(num: i128, den: i128, threshold: usize, max_primes: usize) -> bool {
    let mut tried = 0;
    for &p in prefilter_primes() {
        if tried == max_primes {
            break;
        }
        let f = PrimeField::new(p);
        let (n, d) = (f.reduce_i128(num), f.reduce_i128(den));
        if d == 0 {
            continue;
        }
        let n3d = f.add(n, f.mul(3, d));
        let neg = |v: u64| f.sub(0, v);
        let poly = vec![
            d,
            f.mul(2, n3d),
            f.mul(5, n),
            neg(f.mul(20, d)),
            neg(f.mul(5, n3d)),
            neg(f.mul(2, n)),
            d,
        ];
        let poly = f.monic(&poly);
        if !f.is_squarefree(&poly) {
            continue;
        }
        tried += 1;
        let exceeds = match threshold {
            0 => true,
            1 => f.root_count(&poly) < 6,
            2 => f.low_degree_part(&poly) < 6,
            t => f.degree_pattern(&poly).first().is_some_and(|&d| d > t),
        };
        if exceeds {
            return true;
        }
    }
    false
}

/// True when both resolvents of `(m, n)` provably have an irreducible
/// factor of degree `> threshold`. Pairs with `n = m` or `n = -m-3` are
/// never pruned.
pub fn prefilter_prunes(m: i64, n: i64, threshold: usize, max_primes: usize) -> bool {
    let (a, b) = (m as i128, n as i128);
    if a == b || a + b + 3 == 0 {
        return false;
    }
    let (num1, den1) = (-(a * b + 3 * a + 9), a - b);
    let (num2, den2) = (a * b - 9, a + b + 3);
    resolvent_exceeds(num1, den1, threshold, max_primes) && resolvent_exceeds(num2, den2, threshold, max_primes)
}

fn threshold(kind: ScanKind, cfg: &ScanConfig) -> usize {
    match kind {
        ScanKind::Cubic => 2,
        ScanKind::Sextic if cfg.accept_quadratic_split => 2,
        ScanKind::Sextic => 1,
    }
}

fn exact_hit(kind: ScanKind, m: i64, n: i64, cfg: &ScanConfig) -> Result<bool> {
    let (a, b) = (rat_int(m), rat_int(n));
    match kind {
        ScanKind::Cubic => Ok(classify_intersection(&a, &b)?.degree % 3 == 0),
        ScanKind::Sextic if cfg.accept_quadratic_split => {
            for i in [1u8, 2] {
                if decomposition_type(&resolvent_poly(&a, &b, i)?)?.max_part() <= 2 {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        ScanKind::Sextic => Ok(iso_test(&a, &b)?.0),
    }
}

/// All hits `(m, n)` with `m < n <= hi` for one fixed `m`.
pub fn scan_row(kind: ScanKind, m: i64, hi: i64, cfg: &ScanConfig) -> Result<ScanOutcome> {
    let t = threshold(kind, cfg);
    let mut out = ScanOutcome::default();
    for n in m.saturating_add(1)..=hi {
        out.stats.pairs += 1;
        if m + n + 3 == 0 {
            match kind {
                ScanKind::Cubic => {
                    out.stats.found += 1;
                    out.pairs.push((m, n));
                }
                ScanKind::Sextic => out.stats.pruned += 1,
            }
            continue;
        }
        if prefilter_prunes(m, n, t, cfg.max_primes) {
            out.stats.pruned += 1;
            continue;
        }
        out.stats.classified += 1;
        if exact_hit(kind, m, n, cfg)? {
            out.stats.found += 1;
            out.pairs.push((m, n));
        }
    }
    Ok(out)
}

/// Run a full scan of all pairs `lo <= m < n <= hi`.
pub fn scan(kind: ScanKind, lo: i64, hi: i64, cfg: &ScanConfig) -> Result<ScanOutcome> {
    if lo > hi {
        return Err(Error::usage(format!("empty range {lo}..{hi}")));
    }
    let width = (hi as i128 - lo as i128 + 1) as u128;
    let pairs = width * (width - 1) / 2;
    if pairs > cfg.max_pairs as u128 {
        return Err(Error::usage(format!("range {lo}..{hi} has {pairs} pairs, limit is {}", cfg.max_pairs)));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::internal(format!("thread pool: {e}")))?;
    let rows: Vec<ScanOutcome> =
        pool.install(|| (lo..=hi).into_par_iter().map(|m| scan_row(kind, m, hi, cfg)).collect::<Result<_>>())?;
    let mut out = ScanOutcome::default();
    for row in rows {
        out.stats += row.stats;
        out.pairs.extend(row.pairs);
    }
    out.pairs.sort_unstable();
    Ok(out)
}

/// Pairs `lo <= m < n <= hi` whose cubic subfields coincide, including the
/// trivial shape `n = -m-3` when it falls in range.
pub fn cubic_scan(lo: i64, hi: i64, cfg: &ScanConfig) -> Result<ScanOutcome> {
    scan(ScanKind::Cubic, lo, hi, cfg)
}

/// Pairs `lo <= m < n <= hi`, `n != -m-3`, whose sextic fields coincide.
pub fn sextic_scan(lo: i64, hi: i64, cfg: &ScanConfig) -> Result<ScanOutcome> {
    scan(ScanKind::Sextic, lo, hi, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::expected_cubic_pairs;

    #[test]
    fn prefilter_never_prunes_known_pairs() {
        for (m, n) in expected_cubic_pairs(-1, i64::MAX).unwrap() {
            assert!(!prefilter_prunes(m, n, 2, 12), "({m},{n})");
        }
        assert!(prefilter_prunes(1, 2, 1, 12));
        assert!(!prefilter_prunes(3, -6, 1, 12));
    }

    #[test]
    fn prefilter_agrees_with_factorization() {
        for (m, n) in [(1, 2), (-1, 12), (4, 9), (0, 7), (-1, 5)] {
            let (a, b) = (rat_int(m), rat_int(n));
            let worst = [1u8, 2]
                .iter()
                .map(|&i| decomposition_type(&resolvent_poly(&a, &b, i).unwrap()).unwrap().max_part())
                .min()
                .unwrap();
            for t in 1..=3 {
                if prefilter_prunes(m, n, t, 12) {
                    assert!(worst > t, "({m},{n}) t={t}");
                }
            }
        }
    }

    #[test]
    fn small_cubic_scan() {
        let cfg = ScanConfig::default();
        let out = cubic_scan(-1, 100, &cfg).unwrap();
        assert_eq!(out.pairs, expected_cubic_pairs(-1, 100).unwrap());
        assert_eq!(out.stats.pairs, 102 * 101 / 2);
        assert!(cubic_scan(6, 11, &cfg).unwrap().pairs.is_empty());
    }

    #[test]
    fn sextic_scan_and_mutation() {
        let cfg = ScanConfig::default();
        let out = sextic_scan(-10, 10, &cfg).unwrap();
        assert!(out.pairs.is_empty());
        let mutated = ScanConfig { accept_quadratic_split: true, ..cfg };
        let out = sextic_scan(-1, 12, &mutated).unwrap();
        assert!(out.pairs.contains(&(-1, 12)), "{:?}", out.pairs);
    }

    #[test]
    fn trivial_shape_counts_in_cubic_scan() {
        let out = cubic_scan(-4, 1, &ScanConfig::default()).unwrap();
        assert!(out.pairs.contains(&(-4, 1)));
        assert!(out.pairs.contains(&(-3, 0)));
    }

    #[test]
    fn range_limits() {
        let cfg = ScanConfig { max_pairs: 10, ..ScanConfig::default() };
        assert!(cubic_scan(0, 100, &cfg).unwrap_err().is_usage());
        assert!(cubic_scan(5, 4, &cfg).unwrap_err().is_usage());
    }
}
