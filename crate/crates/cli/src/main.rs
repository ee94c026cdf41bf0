//! `sextic`: command-line front end.
//!
//! Exit codes: 0 all properties hold, 1 a mathematical property was violated,
//! 2 usage error, 3 internal fault (including unreadable checkpoints and
//! interrupted scans).

mod args;
mod checkpoint;
mod commands;
mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use render::Sink;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Failure { code: 2, message: msg.into() }
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Failure { code: 3, message: msg.into() }
    }
}

impl From<sextic_thue::Error> for Failure {
    fn from(e: sextic_thue::Error) -> Self {
        Failure { code: if e.is_usage() { 2 } else { 3 }, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::internal(format!("i/o: {e}"))
    }
}

/// Whether the command found every checked property to hold.
pub type Verdict = Result<bool, Failure>;

pub fn cache_dir(flag: Option<&PathBuf>) -> PathBuf {
    flag.cloned()
        .or_else(|| std::env::var_os("CACHE_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(".sextic-cache"))
}

fn run(cli: &Cli) -> Verdict {
    if let Some(jobs) = cli.global.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
            .map_err(|e| Failure::internal(format!("thread pool: {e}")))?;
    }
    let to_file = cli.global.out.is_some();
    let tmp = cli.global.out.as_ref().map(|p| p.with_extension("partial"));
    let out: Box<dyn Write> = match &tmp {
        Some(p) => Box::new(io::BufWriter::new(fs::File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    };
    let columns = commands::columns(&cli.command);
    let mut sink = Sink::new(cli.global.format, out, columns, render::use_color(to_file));
    let verdict = match &cli.command {
        Command::Form(c) => commands::form(c, &mut sink),
        Command::Poly(c) => commands::poly(c, &mut sink),
        Command::Iso(p) => commands::iso(p, &mut sink),
        Command::Intersect(p) => commands::intersect(p, &mut sink),
        Command::Thue(c) => commands::thue(c, &mut sink),
        Command::Scan(c) => commands::scan(c, &cli.global, &mut sink),
        Command::Verify(c) => commands::verify(c, &mut sink),
    };
    sink.finish()?;
    if let (Some(tmp), Some(out)) = (tmp, &cli.global.out) {
        fs::rename(tmp, out)?;
    }
    verdict
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("sextic: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
