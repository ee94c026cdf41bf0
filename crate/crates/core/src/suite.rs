//! The complete exact identity suite, as run by `sextic verify identities`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmath::{int, rat, rat_int, Rat};
use crate::family::verify_family_identities;
use crate::report::IdentityReport;
use crate::resolvent::{resolvent_disc_check, verify_theta};
use crate::thue::{bezout_certificate, hpq_homogeneous_check, mod3_lemma_check, resultant_check};

/// Parameters for the certificate checks.
pub const CERTIFICATE_RANGE: (i64, i64) = (-50, 50);

/// Number of random pairs for the resolvent discriminant formulas.
pub const DISC_PAIRS: usize = 20;

/// Seeded random rational pairs with `(a-b)(a+b+3) != 0`.
pub fn random_pairs(count: usize, seed: u64) -> Vec<(Rat, Rat)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut draw = || rat(rng.gen_range(-40..=40), rng.gen_range(1..=6));
        let (a, b) = (draw(), draw());
        if a != b && &a + &b + rat_int(3) != rat_int(0) {
            out.push((a, b));
        }
    }
    out
}

/// Every identity, invariant and certificate check. `mutate` is forwarded
/// to the sub-suites that support it and flips exactly that item.
pub fn identity_suite(mutate: Option<&str>) -> IdentityReport {
    let mut report = IdentityReport::new("identity suite");
    report.extend(verify_family_identities(mutate));
    report.extend(verify_theta(mutate));

    let pairs = random_pairs(DISC_PAIRS, 0x00d1_5c00);
    let bad: Vec<String> = pairs
        .iter()
        .filter(|(a, b)| !matches!(resolvent_disc_check(a, b), Ok(true)) || mutate == Some("resolvent-disc"))
        .map(|(a, b)| format!("({a},{b})"))
        .collect();
    report.push(
        "resolvent-disc",
        "disc R^i = 6^6 (a^2+3a+9)^5 (b^2+3b+9)^5 / d_i^10 on random pairs",
        bad.is_empty(),
        if bad.is_empty() { format!("{DISC_PAIRS} pairs") } else { bad.join(" ") },
    );

    let (lo, hi) = CERTIFICATE_RANGE;
    let mut res_bad = Vec::new();
    let mut cert_bad = Vec::new();
    let mut hpq = IdentityReport::new("");
    for m in lo..=hi {
        let mi = int(m);
        if !matches!(resultant_check(&mi), Ok(true)) {
            res_bad.push(m.to_string());
        }
        if let Err(e) = bezout_certificate(&mi) {
            cert_bad.push(format!("m={m}: {e}"));
        }
        for c in hpq_homogeneous_check(&mi, mutate).checks {
            if !c.passed {
                hpq.push(&c.item, &c.description, false, format!("m={m}: {}", c.detail));
            }
        }
    }
    let range = format!("m in [{lo},{hi}]");
    report.push(
        "resultant",
        "Res(h, f^C6_m) = -3^9 (m^2+3m+9)^6",
        res_bad.is_empty(),
        if res_bad.is_empty() { range.clone() } else { format!("fails at m = {}", res_bad.join(",")) },
    );
    report.push(
        "bezout",
        "closed-form p, q equal the reduced Sylvester cofactors",
        cert_bad.is_empty(),
        if cert_bad.is_empty() { range.clone() } else { cert_bad.join("; ") },
    );
    for (item, desc) in [
        ("hpq", "H P + F Q = 27(m^2+3m+9) y^11"),
        ("h-product", "H = (m^2+3m+9) xy(x+y)(x-y)(x+2y)(2x+y)"),
    ] {
        let fails: Vec<&str> = hpq.checks.iter().filter(|c| c.item == item).map(|c| c.detail.as_str()).collect();
        report.push(item, desc, fails.is_empty(), if fails.is_empty() { range.clone() } else { fails.join("; ") });
    }
    report.extend(mod3_lemma_check());
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_pairs_are_valid_and_reproducible() {
        let p = random_pairs(DISC_PAIRS, 1);
        assert_eq!(p, random_pairs(DISC_PAIRS, 1));
        assert!(p.iter().all(|(a, b)| a != b));
    }
}
