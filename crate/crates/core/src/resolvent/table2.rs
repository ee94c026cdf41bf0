//! Recomputing the split resolvents of the known cubic coincidences.

use super::resolvent_poly;
use crate::exactmath::{factor_over_q, rat_int};
use crate::golden::table2;
use crate::report::IdentityReport;

/// For every stored row `(m, n, i)`: factor `f^C6_{A_i}` and compare the
/// factor strings with the stored ones as multisets, then check that the
/// other resolvent is irreducible.
///
/// `mutate = Some("m,n")` drops one factor of that row's expectation.
pub fn reproduce_table2(mutate: Option<&str>) -> IdentityReport {
    let mut report = IdentityReport::new("split resolvents of cubic coincidences");
    let rows = match table2() {
        Ok(rows) => rows,
        Err(e) => {
            report.push("data", "load reference rows", false, e.to_string());
            return report;
        }
    };
    for row in rows {
        let label = format!("{},{}", row.m, row.n);
        let (a, b) = (rat_int(row.m), rat_int(row.n));
        let mut want = row.factors.clone();
        if mutate == Some(label.as_str()) {
            want.pop();
        }
        want.sort();
        let got = resolvent_poly(&a, &b, row.i).and_then(|p| factor_over_q(&p));
        let (passed, detail) = match got {
            Ok(f) => {
                let mut have: Vec<String> = f.factors.iter().map(|(g, e)| format!("{g}^{e}")).collect();
                have.iter_mut().for_each(|s| {
                    if let Some(t) = s.strip_suffix("^1") {
                        *s = t.to_string();
                    }
                });
                have.sort();
                (have == want, f.factor_string())
            }
            Err(e) => (false, e.to_string()),
        };
        report.push(&format!("{label}:R{}", row.i), &format!("factors of R{} at ({label})", row.i), passed, detail);

        let j = 3 - row.i;
        let (passed, detail) = match resolvent_poly(&a, &b, j).and_then(|p| factor_over_q(&p)) {
            Ok(f) => (f.is_irreducible(), f.factor_string()),
            Err(e) => (false, e.to_string()),
        };
        report.push(&format!("{label}:R{j}"), &format!("R{j} at ({label}) is irreducible"), passed, detail);
    }
    report
}
