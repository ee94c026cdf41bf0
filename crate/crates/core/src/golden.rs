//! Reference data embedded from `data/*.json`.

use std::sync::OnceLock;

use serde::Deserialize;

use crate::{Error, Result};

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct Table2Row {
    pub m: i64,
    pub n: i64,
    /// Index of the resolvent that splits (1 or 2).
    pub i: u8,
    /// Monic factors in canonical display form.
    pub factors: Vec<String>,
}

#[derive(Debug, Deserialize)]
struct Table2File {
    rows: Vec<Table2Row>,
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct CubicPairs {
    pub verified_range: (i64, i64),
    pub pairs: Vec<(i64, i64)>,
    pub classes: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct LinearSpot {
    pub x: i64,
    pub y: i64,
    pub slope: i64,
    pub intercept: i64,
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct TrivialSpot {
    pub x: i64,
    pub y: i64,
    pub factor: i64,
}

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct SpotValues {
    pub linear: Vec<LinearSpot>,
    pub trivial: Vec<TrivialSpot>,
}

fn load<T: for<'de> Deserialize<'de>>(
    cell: &'static OnceLock<std::result::Result<T, String>>,
    name: &str,
    text: &str,
) -> Result<&'static T> {
    cell.get_or_init(|| serde_json::from_str(text).map_err(|e| format!("{name}: {e}")))
        .as_ref()
        .map_err(|e| Error::GoldenData(e.clone()))
}

pub fn table2() -> Result<&'static [Table2Row]> {
    static CELL: OnceLock<std::result::Result<Table2File, String>> = OnceLock::new();
    load(&CELL, "table2.json", include_str!("../data/table2.json")).map(|f| f.rows.as_slice())
}

pub fn cubic_pairs() -> Result<&'static CubicPairs> {
    static CELL: OnceLock<std::result::Result<CubicPairs, String>> = OnceLock::new();
    load(&CELL, "cubic_pairs.json", include_str!("../data/cubic_pairs.json"))
}

pub fn spot_values() -> Result<&'static SpotValues> {
    static CELL: OnceLock<std::result::Result<SpotValues, String>> = OnceLock::new();
    load(&CELL, "spot_values.json", include_str!("../data/spot_values.json"))
}

/// Known cubic coincidences `(m, n)` with both ends inside `[lo, hi]`.
pub fn expected_cubic_pairs(lo: i64, hi: i64) -> Result<Vec<(i64, i64)>> {
    let mut v: Vec<(i64, i64)> = cubic_pairs()?
        .pairs
        .iter()
        .copied()
        .filter(|&(m, n)| lo <= m && n <= hi)
        .collect();
    v.sort_unstable();
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn data_files_parse() {
        assert_eq!(table2().unwrap().len(), 11);
        assert_eq!(cubic_pairs().unwrap().pairs.len(), 11);
        let spots = spot_values().unwrap();
        assert_eq!(spots.linear.len(), 12);
        assert_eq!(spots.trivial.len(), 12);
    }

    #[test]
    fn pairs_follow_from_classes() {
        let data = cubic_pairs().unwrap();
        let mut from_classes = Vec::new();
        for class in &data.classes {
            for (i, &m) in class.iter().enumerate() {
                for &n in &class[i + 1..] {
                    from_classes.push((m.min(n), m.max(n)));
                }
            }
        }
        from_classes.sort_unstable();
        assert_eq!(from_classes, expected_cubic_pairs(-1, i64::MAX).unwrap());
        assert_eq!(expected_cubic_pairs(-1, 100).unwrap().len(), 7);
        assert!(expected_cubic_pairs(6, 11).unwrap().is_empty());
    }
}
