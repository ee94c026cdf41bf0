use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "sextic", version, about = "Exact computations for the simplest sextic Thue family")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,
    /// Checkpoint directory; overrides the CACHE_DIR environment variable.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the binary form F_m.
    #[command(subcommand)]
    Form(FormCmd),
    /// Polynomial utilities.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Do f^C6_a and f^C6_b have the same splitting field?
    Iso(PairArgs),
    /// Intersection of the splitting fields of f^C6_a and f^C6_b.
    Intersect(PairArgs),
    /// Exhaustive box search for F_m(x,y) = lambda.
    #[command(subcommand)]
    Thue(ThueCmd),
    /// Coincidence scans over integer parameters.
    #[command(subcommand)]
    Scan(ScanCmd),
    /// Exact identity and reference-data checks.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Debug, Subcommand)]
pub enum FormCmd {
    /// Print F_m(x,y), whether (x,y) is trivial, and its C6 orbit.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum PolyCmd {
    /// Factor over the rationals: f^C6_s, f^C3_s (--cubic), or explicit
    /// coefficients, highest degree first.
    Factor {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "coeffs", required_unless_present = "coeffs")]
        s: Option<String>,
        #[arg(long, requires = "s")]
        cubic: bool,
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long, visible_alias = "m", allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, visible_alias = "n", allow_hyphen_values = true, required_unless_present = "z", conflicts_with = "z")]
    pub b: Option<String>,
    /// Use b = param_from_z(a, z).
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum ThueCmd {
    /// All solutions of F_m(x,y) = lambda with |x|,|y| <= bound.
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        bound: u64,
    },
    /// Search every divisor lambda of 27(m^2+3m+9); exit 1 on a nontrivial solution.
    Verify {
        #[arg(long, allow_hyphen_values = true, required_unless_present = "m_range", conflicts_with = "m_range")]
        m: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        m_range: Option<String>,
        #[arg(long)]
        bound: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ScanCmd {
    /// Pairs m < n with the same cubic subfield.
    Cubic(ScanArgs),
    /// Pairs m < n, n != -m-3, with the same sextic field.
    Sextic(ScanArgs),
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Inclusive range A..B.
    #[arg(long, allow_hyphen_values = true)]
    pub range: String,
    /// Rows of m per checkpoint record.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    pub checkpoint_interval: u64,
    /// Do not read or write a checkpoint.
    #[arg(long)]
    pub no_checkpoint: bool,
    /// Discard an existing checkpoint for this scan.
    #[arg(long)]
    pub fresh: bool,
    /// Stop after this many rows, leaving the checkpoint behind.
    #[arg(long, hide = true)]
    pub halt_after_rows: Option<u64>,
    /// Test hook: `accept-222` makes the sextic scan also accept resolvents of type (2,2,2).
    #[arg(long, hide = true)]
    pub mutate: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// Family identities, invariants, certificates, congruences and spot values.
    Identities {
        #[arg(long, hide = true)]
        mutate: Option<String>,
    },
    /// Split resolvents of the known cubic coincidences.
    Table2 {
        #[arg(long, hide = true)]
        mutate: Option<String>,
    },
}

/// Parse `A..B` (inclusive).
pub fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("range {s:?} must look like A..B"))?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    if a > b {
        return Err(format!("range {s:?} is empty"));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_is_well_formed() {
        Cli::command().debug_assert();
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-1..2500"), Ok((-1, 2500)));
        assert_eq!(parse_range("-10..-3"), Ok((-10, -3)));
        assert!(parse_range("5..4").is_err());
        assert!(parse_range("1-4").is_err());
    }
}
