//! Append-only JSON-lines checkpoints for scans.
//!
//! The first line identifies the scan; every further line records one
//! finished block of rows with its hits and counters. Blocks are contiguous
//! from the start of the range, so resuming means skipping the recorded rows
//! and replaying their hits.

use std::fs::{self, File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sextic_thue::resolvent::ScanStats;

use crate::Failure;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub format: String,
    pub version: String,
    pub kind: String,
    pub lo: i64,
    pub hi: i64,
    pub max_primes: usize,
    pub accept_quadratic_split: bool,
}

impl Header {
    pub const FORMAT: &'static str = "sextic-scan-checkpoint/1";
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    /// Inclusive rows of `m`.
    pub rows: (i64, i64),
    pub pairs: Vec<(i64, i64)>,
    pub stats: ScanStats,
}

pub struct Checkpoint {
    path: PathBuf,
    file: File,
}

pub fn path_for(dir: &Path, header: &Header) -> PathBuf {
    let tag = if header.accept_quadratic_split { "-q" } else { "" };
    dir.join(format!("scan-{}{tag}-{}_{}.jsonl", header.kind, header.lo, header.hi))
}

fn corrupt(path: &Path, what: impl std::fmt::Display) -> Failure {
    Failure::internal(format!("checkpoint {}: {what}", path.display()))
}

impl Checkpoint {
    /// Open or create the checkpoint at `path`, returning the blocks already
    /// done. A torn final line (no trailing newline) is dropped; anything
    /// else unreadable is an error, as is a header for a different scan.
    pub fn open(path: &Path, header: &Header) -> Result<(Checkpoint, Vec<Block>), Failure> {
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir).map_err(|e| corrupt(path, e))?;
        }
        let mut blocks = Vec::new();
        if path.exists() {
            let text = fs::read_to_string(path).map_err(|e| corrupt(path, e))?;
            let complete = text.rfind('\n').map_or(0, |i| i + 1);
            let mut lines = text[..complete].lines();
            let first = lines.next().ok_or_else(|| corrupt(path, "missing header"))?;
            let found: Header = serde_json::from_str(first).map_err(|e| corrupt(path, format!("bad header: {e}")))?;
            if &found != header {
                return Err(corrupt(
                    path,
                    format!("belongs to a different scan ({first}); rerun with --fresh to discard it"),
                ));
            }
            let mut next = header.lo;
            for (i, line) in lines.enumerate() {
                let block: Block =
                    serde_json::from_str(line).map_err(|e| corrupt(path, format!("line {}: {e}", i + 2)))?;
                if block.rows.0 != next || block.rows.1 < block.rows.0 || block.rows.1 > header.hi {
                    return Err(corrupt(path, format!("line {}: rows {:?} out of sequence", i + 2, block.rows)));
                }
                next = block.rows.1 + 1;
                blocks.push(block);
            }
            if complete < text.len() {
                let f = OpenOptions::new().write(true).open(path).map_err(|e| corrupt(path, e))?;
                f.set_len(complete as u64).map_err(|e| corrupt(path, e))?;
            }
        } else {
            let mut f = File::create(path).map_err(|e| corrupt(path, e))?;
            let line = serde_json::to_string(header).map_err(|e| corrupt(path, e))?;
            writeln!(f, "{line}").and_then(|_| f.sync_all()).map_err(|e| corrupt(path, e))?;
        }
        let file = OpenOptions::new().append(true).open(path).map_err(|e| corrupt(path, e))?;
        Ok((Checkpoint { path: path.to_path_buf(), file }, blocks))
    }

    pub fn append(&mut self, block: &Block) -> Result<(), Failure> {
        let line = serde_json::to_string(block).map_err(|e| corrupt(&self.path, e))?;
        writeln!(self.file, "{line}")
            .and_then(|_| self.file.sync_data())
            .map_err(|e| corrupt(&self.path, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn header() -> Header {
        Header {
            format: Header::FORMAT.into(),
            version: "test".into(),
            kind: "cubic".into(),
            lo: 0,
            hi: 9,
            max_primes: 12,
            accept_quadratic_split: false,
        }
    }

    #[test]
    fn round_trip_and_torn_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = path_for(dir.path(), &header());
        let (mut ck, blocks) = Checkpoint::open(&path, &header()).unwrap();
        assert!(blocks.is_empty());
        let b = Block { rows: (0, 4), pairs: vec![(0, 3)], stats: ScanStats::default() };
        ck.append(&b).unwrap();
        drop(ck);
        fs::OpenOptions::new().append(true).open(&path).unwrap().write_all(b"{\"rows\":[5,").unwrap();
        let (_, blocks) = Checkpoint::open(&path, &header()).unwrap();
        assert_eq!(blocks, vec![b]);
        assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), 2);
    }

    #[test]
    fn mismatch_and_corruption_are_refused() {
        let dir = tempfile::tempdir().unwrap();
        let path = path_for(dir.path(), &header());
        Checkpoint::open(&path, &header()).unwrap();
        let other = Header { max_primes: 3, ..header() };
        assert_eq!(Checkpoint::open(&path, &other).err().unwrap().code, 3);
        fs::OpenOptions::new().append(true).open(&path).unwrap().write_all(b"garbage\n").unwrap();
        assert_eq!(Checkpoint::open(&path, &header()).err().unwrap().code, 3);
    }
}
