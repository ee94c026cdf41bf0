use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use sextic_thue::exactmath::{factor_over_q, parse_rat, rat_int, Factorization, UniPoly};
use sextic_thue::family::{
    c6_orbit, eval_form, is_trivial, simplest_cubic_poly, simplest_sextic_poly, verify_spot_values, LatticePoint,
};
use sextic_thue::golden::{cubic_pairs, expected_cubic_pairs};
use sextic_thue::report::IdentityReport;
use sextic_thue::resolvent::{
    classify_intersection, decomposition_type, iso_test, param_from_z, reproduce_table2, resolvent_poly, scan_row,
    DecompositionType, ScanConfig, ScanKind, ScanStats,
};
use sextic_thue::suite::identity_suite;
use sextic_thue::thue::{divisors_27, solve_range, solve_thue};
use sextic_thue::{Int, Rat};

use crate::args::{
    parse_range, Command, FormCmd, GlobalOpts, PairArgs, PolyCmd, ScanArgs, ScanCmd, ThueCmd, VerifyCmd,
};
use crate::checkpoint::{self, Block, Checkpoint, Header};
use crate::render::{status, Cell, Record, Sink};
use crate::{cache_dir, Failure, Verdict};

/// CSV header per command.
pub fn columns(cmd: &Command) -> &'static [&'static str] {
    match cmd {
        Command::Form(_) => &["m", "x", "y", "value", "trivial", "orbit"],
        Command::Poly(_) => &["poly", "unit", "factors", "degrees"],
        Command::Iso(_) => &["a", "b", "equal", "witness_resolvent", "witness_roots", "degree", "dt1", "dt2"],
        Command::Intersect(_) => {
            &["a", "b", "g_a", "g_b", "dt1", "dt2", "degree", "relation", "compositum", "swapped"]
        }
        Command::Thue(ThueCmd::Solve { .. }) => &["m", "lambda", "x", "y", "trivial", "orbit"],
        Command::Thue(ThueCmd::Verify { .. }) => &["m", "lambda", "solutions", "trivial", "nontrivial"],
        Command::Scan(_) => &["kind", "m", "n", "dt1", "dt2", "degree"],
        Command::Verify(_) => &["suite", "item", "passed", "description", "detail"],
    }
}

fn rat_arg(name: &str, s: &str) -> Result<Rat, Failure> {
    parse_rat(s).map_err(|e| Failure::usage(format!("--{name}: {e}")))
}

fn int_arg(name: &str, s: &str) -> Result<Int, Failure> {
    let q = rat_arg(name, s)?;
    if !q.is_integer() {
        return Err(Failure::usage(format!("--{name} must be an integer, got {q}")));
    }
    Ok(q.to_integer())
}

fn dt_cell(dt: &DecompositionType) -> Cell {
    Cell::List(dt.parts.iter().map(|&d| Cell::int(d as i64)).collect())
}

fn point_cells(points: &[LatticePoint]) -> Cell {
    Cell::List(points.iter().map(|p| Cell::str(p.to_string())).collect())
}

pub fn form(cmd: &FormCmd, sink: &mut Sink) -> Verdict {
    let FormCmd::Eval { m, x, y } = cmd;
    let m = rat_arg("m", m)?;
    let p = LatticePoint::new(int_arg("x", x)?, int_arg("y", y)?);
    let value = eval_form(&m, &p);
    let trivial = is_trivial(&p);
    let orbit = c6_orbit(&p).points;
    let rec: Record = vec![
        ("kind", Cell::str("form")),
        ("m", Cell::Rat(m.clone())),
        ("x", Cell::Int(p.x.clone())),
        ("y", Cell::Int(p.y.clone())),
        ("value", Cell::Rat(value.clone())),
        ("trivial", Cell::Bool(trivial)),
        ("orbit", point_cells(&orbit)),
    ];
    let orbit_text: Vec<String> = orbit.iter().map(ToString::to_string).collect();
    let text = format!(
        "F_{m}{p} = {value}\n{}\norbit: {}",
        if trivial { "trivial" } else { "nontrivial" },
        orbit_text.join(" ")
    );
    sink.row(&rec, &text)?;
    Ok(true)
}

fn parse_coeffs(s: &str) -> Result<UniPoly, Failure> {
    let mut c = s.split(',').map(|t| rat_arg("coeffs", t)).collect::<Result<Vec<_>, _>>()?;
    c.reverse();
    let p = UniPoly::new(c);
    if p.is_zero() {
        return Err(Failure::usage("--coeffs describes the zero polynomial"));
    }
    Ok(p)
}

pub fn poly(cmd: &PolyCmd, sink: &mut Sink) -> Verdict {
    let PolyCmd::Factor { s, cubic, coeffs } = cmd;
    let p = match (s, coeffs) {
        (Some(s), _) => {
            let s = rat_arg("s", s)?;
            if *cubic {
                simplest_cubic_poly(&s)
            } else {
                simplest_sextic_poly(&s)
            }
        }
        (None, Some(c)) => parse_coeffs(c)?,
        (None, None) => return Err(Failure::usage("give --s or --coeffs")),
    };
    let f: Factorization = factor_over_q(&p)?;
    let factors: Vec<String> = f
        .factors
        .iter()
        .map(|(g, e)| if *e == 1 { g.to_string() } else { format!("({g})^{e}") })
        .collect();
    let rec: Record = vec![
        ("kind", Cell::str("factorization")),
        ("poly", Cell::str(p.to_string())),
        ("unit", Cell::Rat(f.unit.clone())),
        ("factors", Cell::List(factors.iter().map(Cell::str).collect())),
        ("degrees", Cell::List(f.degrees().into_iter().map(|d| Cell::int(d as i64)).collect())),
    ];
    let unit = if f.unit == rat_int(1) { String::new() } else { format!("{} * ", f.unit) };
    sink.row(&rec, &format!("{p} = {unit}{}", f.factor_string()))?;
    Ok(true)
}

fn pair(args: &PairArgs) -> Result<(Rat, Rat), Failure> {
    let a = rat_arg("a", &args.a)?;
    let b = match (&args.b, &args.z) {
        (Some(b), _) => rat_arg("b", b)?,
        (None, Some(z)) => param_from_z(&a, &rat_arg("z", z)?)?,
        (None, None) => return Err(Failure::usage("give --b or --z")),
    };
    Ok((a, b))
}

fn nondegenerate(a: &Rat, b: &Rat) -> bool {
    a != b && !(a + b + rat_int(3)).is_zero()
}

pub fn iso(args: &PairArgs, sink: &mut Sink) -> Verdict {
    let (a, b) = pair(args)?;
    let (equal, witness) = iso_test(&a, &b)?;
    let class = if nondegenerate(&a, &b) { Some(classify_intersection(&a, &b)?) } else { None };
    let rec: Record = vec![
        ("kind", Cell::str("iso")),
        ("a", Cell::Rat(a.clone())),
        ("b", Cell::Rat(b.clone())),
        ("equal", Cell::Bool(equal)),
        ("witness_resolvent", witness.as_ref().map_or(Cell::Null, |w| Cell::int(w.which as i64))),
        (
            "witness_roots",
            witness.as_ref().map_or(Cell::Null, |w| Cell::List(w.roots.iter().cloned().map(Cell::Rat).collect())),
        ),
        ("degree", class.as_ref().map_or(Cell::Null, |c| Cell::int(c.degree as i64))),
        ("dt1", class.as_ref().map_or(Cell::Null, |c| dt_cell(&c.dt1))),
        ("dt2", class.as_ref().map_or(Cell::Null, |c| dt_cell(&c.dt2))),
    ];
    let mut text = format!("a = {a}, b = {b}: {}", if equal { "equal" } else { "not equal" });
    match (&witness, &class) {
        (Some(w), _) => {
            let roots: Vec<String> = w.roots.iter().map(ToString::to_string).collect();
            text += &format!("\nresolvent R{} splits with roots {}", w.which, roots.join(", "));
        }
        (None, None) => text += "\n(trivial pair: b = a or b = -a-3)",
        (None, Some(_)) => {}
    }
    if let Some(c) = &class {
        text += &format!("\nintersection degree {}, DT(R1) = {}, DT(R2) = {}", c.degree, c.dt1, c.dt2);
    }
    sink.row(&rec, &text)?;
    Ok(true)
}

pub fn intersect(args: &PairArgs, sink: &mut Sink) -> Verdict {
    let (a, b) = pair(args)?;
    let c = classify_intersection(&a, &b)?;
    let rec: Record = vec![
        ("kind", Cell::str("intersection")),
        ("a", Cell::Rat(a.clone())),
        ("b", Cell::Rat(b.clone())),
        ("g_a", Cell::str(c.group_a.to_string())),
        ("g_b", Cell::str(c.group_b.to_string())),
        ("dt1", dt_cell(&c.dt1)),
        ("dt2", dt_cell(&c.dt2)),
        ("degree", Cell::int(c.degree as i64)),
        ("relation", Cell::str(c.relation.to_string())),
        ("compositum", Cell::str(c.compositum_group)),
        ("swapped", Cell::Bool(c.swapped)),
    ];
    let text = format!(
        "a = {a} (G = {}), b = {b} (G = {})\nDT(R1) = {}, DT(R2) = {}{}\n[L1 ∩ L2 : Q] = {}, {}, compositum group {}",
        c.group_a,
        c.group_b,
        c.dt1,
        c.dt2,
        if c.swapped { " (pair swapped so that #G1 >= #G2)" } else { "" },
        c.degree,
        c.relation,
        c.compositum_group
    );
    sink.row(&rec, &text)?;
    Ok(true)
}

pub fn thue(cmd: &ThueCmd, sink: &mut Sink) -> Verdict {
    match cmd {
        ThueCmd::Solve { m, lambda, bound } => {
            let m = int_arg("m", m)?;
            let lambda = int_arg("lambda", lambda)?;
            let sols = solve_thue(&m, &lambda, *bound)?;
            for s in &sols {
                let rec: Record = vec![
                    ("kind", Cell::str("solution")),
                    ("m", Cell::Int(m.clone())),
                    ("lambda", Cell::Int(lambda.clone())),
                    ("x", Cell::Int(s.point.x.clone())),
                    ("y", Cell::Int(s.point.y.clone())),
                    ("trivial", Cell::Bool(s.trivial)),
                    ("orbit", Cell::str(s.orbit_id.to_string())),
                ];
                let tag = if s.trivial { "trivial" } else { "nontrivial" };
                sink.row(&rec, &format!("{} {tag} orbit {}", s.point, s.orbit_id))?;
            }
            let divisor = divisors_27(&m).contains(&lambda);
            let nontrivial = sols.iter().filter(|s| !s.trivial).count();
            let rec: Record = vec![
                ("kind", Cell::str("summary")),
                ("m", Cell::Int(m.clone())),
                ("lambda", Cell::Int(lambda.clone())),
                ("bound", Cell::int(*bound)),
                ("solutions", Cell::int(sols.len() as i64)),
                ("nontrivial", Cell::int(nontrivial as i64)),
                ("divisor", Cell::Bool(divisor)),
            ];
            let kind = if divisor { "divisor of 27(m^2+3m+9)" } else { "not a divisor of 27(m^2+3m+9); informational" };
            let text = format!(
                "F_{m}(x,y) = {lambda}, |x|,|y| <= {bound}: {} solutions, {nontrivial} nontrivial ({kind})",
                sols.len()
            );
            sink.summary(&rec, &text)?;
            Ok(!(divisor && nontrivial > 0))
        }
        ThueCmd::Verify { m, m_range, bound } => {
            let (lo, hi) = match (m, m_range) {
                (Some(m), _) => {
                    let m = int_arg("m", m)?;
                    (m.clone(), m)
                }
                (None, Some(r)) => {
                    let (a, b) = parse_range(r).map_err(Failure::usage)?;
                    (Int::from(a), Int::from(b))
                }
                (None, None) => return Err(Failure::usage("give --m or --m-range")),
            };
            let report = solve_range(&lo, &hi, *bound)?;
            let mut last_m: Option<Int> = None;
            for e in &report.entries {
                let nontrivial = e.solutions.iter().filter(|s| !s.trivial).count();
                let rec: Record = vec![
                    ("kind", Cell::str("thue")),
                    ("m", Cell::Int(e.m.clone())),
                    ("lambda", Cell::Int(e.lambda.clone())),
                    ("solutions", Cell::int(e.solutions.len() as i64)),
                    ("trivial", Cell::int((e.solutions.len() - nontrivial) as i64)),
                    ("nontrivial", Cell::int(nontrivial as i64)),
                ];
                // Text mode prints one line per m instead of one per lambda.
                let first_of_m = last_m.as_ref() != Some(&e.m);
                let text = if first_of_m {
                    let of_m: Vec<_> = report.entries.iter().filter(|x| x.m == e.m).collect();
                    let count: usize = of_m.iter().map(|x| x.solutions.len()).sum();
                    let ok = of_m.iter().all(|x| x.matches_trivial && x.solutions.iter().all(|s| s.trivial));
                    format!(
                        "{} m={}: {} divisors, {count} solutions, {}",
                        status(ok, sink.color),
                        e.m,
                        of_m.len(),
                        if ok { "exactly the trivial ones" } else { "UNEXPECTED SOLUTIONS" }
                    )
                } else {
                    String::new()
                };
                sink_row_if(sink, &rec, &text, first_of_m)?;
                last_m = Some(e.m.clone());
            }
            for s in &report.counterexamples {
                let rec: Record = vec![
                    ("kind", Cell::str("counterexample")),
                    ("m", Cell::Int(s.m.clone())),
                    ("lambda", Cell::Int(s.lambda.clone())),
                    ("x", Cell::Int(s.point.x.clone())),
                    ("y", Cell::Int(s.point.y.clone())),
                ];
                sink.summary(&rec, &format!("nontrivial solution: m={} lambda={} at {}", s.m, s.lambda, s.point))?;
            }
            let ok = report.all_trivial();
            let rec: Record = vec![
                ("kind", Cell::str("summary")),
                ("m_lo", Cell::Int(lo.clone())),
                ("m_hi", Cell::Int(hi.clone())),
                ("bound", Cell::int(*bound)),
                ("lambdas", Cell::int(report.entries.len() as i64)),
                ("solutions", Cell::int(report.solution_count() as i64)),
                ("nontrivial", Cell::int(report.counterexamples.len() as i64)),
                ("all_trivial", Cell::Bool(ok)),
            ];
            let text = format!(
                "m in [{lo},{hi}], |x|,|y| <= {bound}: {} (m, lambda) pairs, {} solutions, {}",
                report.entries.len(),
                report.solution_count(),
                if ok { "all trivial" } else { "NONTRIVIAL SOLUTIONS FOUND" }
            );
            sink.summary(&rec, &text)?;
            eprintln!("search took {:.2?}", report.elapsed);
            Ok(ok)
        }
    }
}

/// Rows always go to JSON/CSV; in text mode only when `show_text`.
fn sink_row_if(sink: &mut Sink, rec: &Record, text: &str, show_text: bool) -> std::io::Result<()> {
    if show_text {
        sink.row(rec, text)
    } else {
        sink.row_silent(rec)
    }
}

fn pair_record(kind: ScanKind, m: i64, n: i64) -> Result<(Record, String), Failure> {
    let (a, b) = (rat_int(m), rat_int(n));
    let (dt1, dt2, degree) = if m + n + 3 == 0 {
        (decomposition_type(&resolvent_poly(&a, &b, 1)?)?, None, 6)
    } else {
        let c = classify_intersection(&a, &b)?;
        (c.dt1, Some(c.dt2), c.degree)
    };
    let rec: Record = vec![
        ("kind", Cell::str(kind.name())),
        ("m", Cell::int(m)),
        ("n", Cell::int(n)),
        ("dt1", dt_cell(&dt1)),
        ("dt2", dt2.as_ref().map_or(Cell::Null, dt_cell)),
        ("degree", Cell::int(degree as i64)),
    ];
    let dt2_text = dt2.map_or("-".to_string(), |d| d.to_string());
    Ok((rec, format!("({m},{n})  DT(R1)={dt1}  DT(R2)={dt2_text}  degree {degree}")))
}

pub fn scan(cmd: &ScanCmd, global: &GlobalOpts, sink: &mut Sink) -> Verdict {
    let (kind, args): (ScanKind, &ScanArgs) = match cmd {
        ScanCmd::Cubic(a) => (ScanKind::Cubic, a),
        ScanCmd::Sextic(a) => (ScanKind::Sextic, a),
    };
    let (lo, hi) = parse_range(&args.range).map_err(Failure::usage)?;
    let accept_quadratic_split = match args.mutate.as_deref() {
        None => false,
        Some("accept-222") if kind == ScanKind::Sextic => true,
        Some(other) => return Err(Failure::usage(format!("unknown scan mutation {other:?}"))),
    };
    let cfg = ScanConfig {
        jobs: global.jobs.unwrap_or(0) as usize,
        accept_quadratic_split,
        ..ScanConfig::default()
    };
    let width = (hi as i128 - lo as i128 + 1) as u128;
    if width * (width - 1) / 2 > cfg.max_pairs as u128 {
        return Err(Failure::usage(format!("range {lo}..{hi} exceeds the limit of {} pairs", cfg.max_pairs)));
    }
    let header = Header {
        format: Header::FORMAT.into(),
        version: env!("CARGO_PKG_VERSION").into(),
        kind: kind.name().into(),
        lo,
        hi,
        max_primes: cfg.max_primes,
        accept_quadratic_split,
    };
    let (mut ckpt, done) = if args.no_checkpoint {
        (None, Vec::new())
    } else {
        let path = checkpoint::path_for(&cache_dir(global.cache_dir.as_ref()), &header);
        if args.fresh && path.exists() {
            std::fs::remove_file(&path)?;
        }
        let (c, blocks) = Checkpoint::open(&path, &header)?;
        (Some(c), blocks)
    };

    let start = Instant::now();
    let mut stats = ScanStats::default();
    let mut found = Vec::new();
    let mut next = lo;
    for block in &done {
        stats += block.stats;
        for &(m, n) in &block.pairs {
            let (rec, text) = pair_record(kind, m, n)?;
            sink.row(&rec, &text)?;
        }
        found.extend(block.pairs.iter().copied());
        next = block.rows.1 + 1;
    }
    if !done.is_empty() {
        eprintln!("resumed at m = {next} from {} checkpoint blocks", done.len());
    }
    let mut rows_this_run = 0u64;
    while next <= hi {
        let mut end = (next as i128 + args.checkpoint_interval as i128 - 1).min(hi as i128) as i64;
        if let Some(limit) = args.halt_after_rows {
            if rows_this_run >= limit {
                return Err(Failure::internal(format!("halted after {rows_this_run} rows; rerun to resume")));
            }
            end = end.min(next + (limit - rows_this_run) as i64 - 1);
        }
        let rows: Vec<_> = (next..=end)
            .into_par_iter()
            .map(|m| scan_row(kind, m, hi, &cfg))
            .collect::<Result<_, _>>()?;
        let mut block = Block { rows: (next, end), pairs: Vec::new(), stats: ScanStats::default() };
        for r in rows {
            block.stats += r.stats;
            block.pairs.extend(r.pairs);
        }
        block.pairs.sort_unstable();
        if let Some(c) = ckpt.as_mut() {
            c.append(&block)?;
        }
        for &(m, n) in &block.pairs {
            let (rec, text) = pair_record(kind, m, n)?;
            sink.row(&rec, &text)?;
        }
        stats += block.stats;
        found.extend(block.pairs);
        rows_this_run += (end - next + 1) as u64;
        next = end + 1;
    }
    eprintln!("scan took {:.2?}", start.elapsed());

    let expected: Option<Vec<(i64, i64)>> = match kind {
        ScanKind::Sextic => Some(Vec::new()),
        ScanKind::Cubic => {
            let (vlo, vhi) = cubic_pairs()?.verified_range;
            (vlo <= lo && hi <= vhi).then(|| expected_cubic_pairs(lo, hi)).transpose()?
        }
    };
    let matches = expected.as_ref().map(|e| *e == found);
    let rec: Record = vec![
        ("kind", Cell::str("summary")),
        ("scan", Cell::str(kind.name())),
        ("lo", Cell::int(lo)),
        ("hi", Cell::int(hi)),
        ("pairs", Cell::int(stats.pairs)),
        ("pruned", Cell::int(stats.pruned)),
        ("classified", Cell::int(stats.classified)),
        ("found", Cell::int(stats.found)),
        ("expected", expected.as_ref().map_or(Cell::Null, |e| Cell::int(e.len() as i64))),
        ("matches_expected", matches.map_or(Cell::Null, Cell::Bool)),
    ];
    let verdict_text = match (&expected, matches) {
        (Some(e), Some(true)) => format!("matches the known list ({} pairs)", e.len()),
        (Some(e), _) => format!("DIFFERS from the known list ({} pairs)", e.len()),
        (None, _) => "range not covered by the known list".to_string(),
    };
    let text = format!(
        "{} scan {lo}..{hi}: {} pairs, {} pruned, {} classified, {} found; {verdict_text}",
        kind.name(),
        stats.pairs,
        stats.pruned,
        stats.classified,
        stats.found
    );
    sink.summary(&rec, &text)?;
    Ok(matches != Some(false))
}

fn emit_report(suite: &str, report: &IdentityReport, sink: &mut Sink) -> std::io::Result<()> {
    for c in &report.checks {
        let rec: Record = vec![
            ("kind", Cell::str("check")),
            ("suite", Cell::str(suite)),
            ("item", Cell::str(c.item.as_str())),
            ("passed", Cell::Bool(c.passed)),
            ("description", Cell::str(c.description.as_str())),
            ("detail", Cell::str(c.detail.as_str())),
        ];
        let detail = if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) };
        sink.row(&rec, &format!("{} [{}] {}{detail}", status(c.passed, sink.color), c.item, c.description))?;
    }
    Ok(())
}

pub fn verify(cmd: &VerifyCmd, sink: &mut Sink) -> Verdict {
    let reports = match cmd {
        VerifyCmd::Identities { mutate } => {
            vec![("identities", identity_suite(mutate.as_deref())), ("spot-values", verify_spot_values(mutate.as_deref()))]
        }
        VerifyCmd::Table2 { mutate } => vec![("table2", reproduce_table2(mutate.as_deref()))],
    };
    let mut passed = 0;
    let mut total = 0;
    for (suite, r) in &reports {
        emit_report(suite, r, sink)?;
        passed += r.checks.iter().filter(|c| c.passed).count();
        total += r.checks.len();
    }
    let rec: Record = vec![
        ("kind", Cell::str("summary")),
        ("passed", Cell::int(passed as i64)),
        ("total", Cell::int(total as i64)),
    ];
    sink.summary(&rec, &format!("{passed}/{total} passed"))?;
    Ok(passed == total)
}
