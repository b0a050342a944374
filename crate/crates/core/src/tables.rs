//! Published count tables, loaded from the data files under `data/`.
//!
//! The values are comparison targets only; they are never used as ground
//! truth.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::Count;

pub const CYCLE_TABLE_SRC: &str = include_str!("../data/table1_cycles.csv");
pub const PATH_TABLE_SRC: &str = include_str!("../data/table2_paths.csv");

/// Cells `(n, j) -> count` of one published table.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CountTable {
    cells: BTreeMap<(usize, usize), Count>,
}

impl CountTable {
    /// Parses the row layout `n,c_1,c_2,...,c_n`; `#` lines and the header
    /// line starting with `n,` are skipped.
    pub fn parse(src: &str) -> Result<CountTable> {
        let mut cells = BTreeMap::new();
        for (idx, raw) in src.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with("n,") {
                continue;
            }
            let err = |msg: String| Error::Parse { line: idx + 1, msg };
            let mut fields = line.split(',').map(str::trim);
            let n: usize = fields
                .next()
                .and_then(|f| f.parse().ok())
                .ok_or_else(|| err(format!("bad row label in `{line}`")))?;
            for (j, f) in fields.enumerate() {
                let c: Count = f.parse().map_err(|_| err(format!("bad count `{f}`")))?;
                cells.insert((n, j + 1), c);
            }
        }
        Ok(CountTable { cells })
    }

    pub fn get(&self, n: usize, j: usize) -> Option<&Count> {
        self.cells.get(&(n, j))
    }

    /// Row orders present, ascending.
    pub fn orders(&self) -> Vec<usize> {
        let mut ns: Vec<usize> = self.cells.keys().map(|&(n, _)| n).collect();
        ns.dedup();
        ns
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), &Count)> {
        self.cells.iter().map(|(&k, v)| (k, v))
    }
}

/// Both published tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperTables {
    /// `d_f(C_n, j)`, `3 <= n <= 12`.
    pub cycles: CountTable,
    /// `d_f(P_n, j)`, `1 <= n <= 12`.
    pub paths: CountTable,
}

impl PaperTables {
    pub fn embedded() -> PaperTables {
        PaperTables {
            cycles: CountTable::parse(CYCLE_TABLE_SRC).expect("embedded cycle table parses"),
            paths: CountTable::parse(PATH_TABLE_SRC).expect("embedded path table parses"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_shapes() {
        let t = PaperTables::embedded();
        assert_eq!(t.cycles.orders(), (3..=12).collect::<Vec<_>>());
        assert_eq!(t.paths.orders(), (1..=12).collect::<Vec<_>>());
        // every row n has exactly n entries
        assert_eq!(t.cycles.len(), (3..=12).sum::<usize>());
        assert_eq!(t.paths.len(), (1..=12).sum::<usize>());
        assert_eq!(t.cycles.get(8, 4), Some(&Count::from(14u8)));
        assert_eq!(t.paths.get(1, 1), Some(&Count::from(1u8)));
        assert_eq!(t.paths.get(12, 13), None);
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert!(matches!(CountTable::parse("# c\nx,1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(CountTable::parse("3,1,y\n"), Err(Error::Parse { line: 1, .. })));
    }
}
