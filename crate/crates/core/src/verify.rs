//! Cross-validation of closed forms and published tables against the oracle.
//!
//! Ground truth is fixed: oracle > closed form > published table. A row
//! never marks the oracle value as wrong. Every disagreement becomes a
//! [`Discrepancy`]; the set of discrepancies over a sweep is compared with
//! the committed expected-errata list, so a new disagreement and a vanished
//! one both show up as a failure.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::closed_forms::{
    cactus_claims, cactus_count, complete_count, cycle_claims, cycle_count, friendship_claims,
    friendship_count, knn_count, path_claims, path_special, FormulaResult,
};
use crate::combinatorics::{paper_cycle_formula, BlockParts};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::poly::{Count, FairDomPolynomial};
use crate::tables::PaperTables;

pub const EXPECTED_ERRATA_SRC: &str = include_str!("../data/expected_errata.csv");

/// Families with closed forms to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Cycle,
    Path,
    Knn,
    Friendship,
    Cactus,
    Complete,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Cycle,
        Family::Path,
        Family::Knn,
        Family::Friendship,
        Family::Cactus,
        Family::Complete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Knn => "knn",
            Family::Friendship => "friendship",
            Family::Cactus => "cactus",
            Family::Complete => "complete",
        }
    }

    /// Graph for parameter `n` (part size for `knn`, triangle count for
    /// friendship and cactus graphs).
    pub fn spec(self, n: usize) -> FamilySpec {
        match self {
            Family::Cycle => FamilySpec::Cycle(n),
            Family::Path => FamilySpec::Path(n),
            Family::Knn => FamilySpec::CompleteBipartite(n, n),
            Family::Friendship => FamilySpec::Friendship(n),
            Family::Cactus => FamilySpec::TriangularCactus(n),
            Family::Complete => FamilySpec::Complete(n),
        }
    }

    /// Parameter range covered by the default sweep.
    pub fn default_range(self) -> RangeInclusive<usize> {
        match self {
            Family::Cycle => 3..=12,
            Family::Path => 1..=12,
            Family::Knn => 1..=6,
            Family::Friendship => 1..=6,
            Family::Cactus => 1..=6,
            Family::Complete => 1..=12,
        }
    }

    fn min_param(self) -> usize {
        match self {
            Family::Cycle => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Input(format!("no verifiable family named `{s}`")))
    }
}

/// One formula's statement about a cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub source: String,
    /// `Err` when the formula could not be evaluated to an integer.
    pub value: std::result::Result<Count, String>,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Ok(v) => write!(f, "{}:{v}", self.source),
            Err(e) => write!(f, "{}:failed({e})", self.source),
        }
    }
}

/// Outcome of one row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    AllAgree,
    FormulaErratum,
    TableErratum,
    FormulaAndTableConflict,
    Skipped(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::AllAgree => f.write_str("AllAgree"),
            Status::FormulaErratum => f.write_str("FormulaErratum"),
            Status::TableErratum => f.write_str("TableErratum"),
            Status::FormulaAndTableConflict => f.write_str("FormulaAndTableConflict"),
            Status::Skipped(r) => write!(f, "Skipped({r})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiscrepancyKind {
    Table,
    Formula,
}

/// A published value that disagrees with the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Discrepancy {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub kind: DiscrepancyKind,
    /// Table name or formula label.
    pub source: String,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            DiscrepancyKind::Table => "table",
            DiscrepancyKind::Formula => "formula",
        };
        write!(f, "{},{},{},{kind},{}", self.family, self.n, self.k, self.source)
    }
}

impl FromStr for Discrepancy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Discrepancy> {
        let bad = || Error::Parse {
            line: 0,
            msg: format!("expected `family,n,k,kind,source`, got `{s}`"),
        };
        let fields: Vec<&str> = s.split(',').map(str::trim).collect();
        let [family, n, k, kind, source] = fields.as_slice() else {
            return Err(bad());
        };
        Ok(Discrepancy {
            family: family.parse()?,
            n: n.parse().map_err(|_| bad())?,
            k: k.parse().map_err(|_| bad())?,
            kind: match *kind {
                "table" => DiscrepancyKind::Table,
                "formula" => DiscrepancyKind::Formula,
                _ => return Err(bad()),
            },
            source: source.to_string(),
        })
    }
}

/// Parses an errata list: one discrepancy per line, `#` comments allowed.
pub fn parse_errata(src: &str) -> Result<BTreeSet<Discrepancy>> {
    src.lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| {
            l.parse().map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: i + 1, msg },
                other => other,
            })
        })
        .collect()
}

/// The committed expected-errata list.
pub fn expected_errata() -> BTreeSet<Discrepancy> {
    parse_errata(EXPECTED_ERRATA_SRC).expect("committed errata list parses")
}

/// Comparison of one `(n, k)` cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    /// Brute-force count; `None` only when skipped.
    pub oracle: Option<Count>,
    /// The family's closed-form evaluator, when it covers the cell.
    pub closed_form: Option<Count>,
    pub paper_table: Option<Count>,
    /// Every published formula statement about the cell.
    pub claims: Vec<Claim>,
    pub status: Status,
}

impl VerifyRow {
    /// Disagreements with the oracle, in a fixed order.
    pub fn discrepancies(&self) -> Vec<Discrepancy> {
        let Some(oracle) = &self.oracle else {
            return Vec::new();
        };
        let mut out = Vec::new();
        let mut push = |kind, source: &str| {
            out.push(Discrepancy {
                family: self.family,
                n: self.n,
                k: self.k,
                kind,
                source: source.to_string(),
            })
        };
        if let Some(t) = &self.paper_table {
            if t != oracle {
                let name = match self.family {
                    Family::Cycle => "table1",
                    _ => "table2",
                };
                push(DiscrepancyKind::Table, name);
            }
        }
        for c in &self.claims {
            if c.value.as_ref() != Ok(oracle) {
                push(DiscrepancyKind::Formula, &c.source);
            }
        }
        out
    }

    fn derive_status(&mut self) {
        if self.oracle.is_none() {
            return;
        }
        let d = self.discrepancies();
        let table = d.iter().any(|x| x.kind == DiscrepancyKind::Table);
        let formula = d.iter().any(|x| x.kind == DiscrepancyKind::Formula);
        self.status = match (formula, table) {
            (false, false) => Status::AllAgree,
            (true, false) => Status::FormulaErratum,
            (false, true) => Status::TableErratum,
            (true, true) => Status::FormulaAndTableConflict,
        };
    }
}

fn opt(c: &Option<Count>) -> String {
    c.as_ref().map_or_else(|| "-".to_string(), |v| v.to_string())
}

impl fmt::Display for VerifyRow {
    /// Tab-separated, fields in [`ROW_HEADER`] order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let claims: Vec<String> = self.claims.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.family,
            self.n,
            self.k,
            opt(&self.oracle),
            opt(&self.closed_form),
            opt(&self.paper_table),
            if claims.is_empty() { "-".to_string() } else { claims.join(";") },
            self.status
        )
    }
}

pub const ROW_HEADER: &str = "family\tn\tk\toracle\tclosed_form\tpaper_table\tclaims\tstatus";

fn claim_of(r: FormulaResult) -> Option<Claim> {
    r.is_applicable().then(|| Claim {
        source: r.source.to_string(),
        value: r.value.ok_or_else(|| "no value".to_string()),
    })
}

fn applicable_value(r: FormulaResult) -> Option<Count> {
    if r.is_applicable() {
        r.value
    } else {
        None
    }
}

/// Closed-form value and published claims for one cell.
fn formulas(family: Family, n: usize, k: usize, engine: &Engine) -> (Option<Count>, Vec<Claim>) {
    match family {
        Family::Cycle => {
            let structural = applicable_value(cycle_count(n, k));
            let mut claims = Vec::new();
            if k < n {
                claims.push(Claim {
                    source: "cycle-theorem".into(),
                    value: paper_cycle_formula(n, k, BlockParts::Positive).map_err(|e| e.to_string()),
                });
            }
            claims.extend(cycle_claims(n, k).into_iter().filter_map(claim_of));
            (structural, claims)
        }
        Family::Path => (
            applicable_value(path_special(n, k)),
            path_claims(n, k).into_iter().filter_map(claim_of).collect(),
        ),
        Family::Knn => {
            let r = knn_count(n, k);
            (applicable_value(r.clone()), claim_of(r).into_iter().collect())
        }
        Family::Friendship => (
            applicable_value(friendship_count(n, k)),
            friendship_claims(n, k).into_iter().filter_map(claim_of).collect(),
        ),
        Family::Cactus => (
            applicable_value(cactus_count(n, k, engine)),
            cactus_claims(n, k, engine).into_iter().filter_map(claim_of).collect(),
        ),
        Family::Complete => {
            let r = complete_count(n, k);
            (applicable_value(r.clone()), claim_of(r).into_iter().collect())
        }
    }
}

/// One row per `(n, k)`, ordered by `n` then `k`. `k_range` defaults to
/// every size `1..=|V|`.
pub fn verify_family(
    family: Family,
    n_range: RangeInclusive<usize>,
    k_range: Option<RangeInclusive<usize>>,
    engine: &Engine,
    tables: &PaperTables,
) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for n in n_range {
        if n < family.min_param() {
            continue;
        }
        let spec = family.spec(n);
        let order = spec.order();
        let ks: Vec<usize> = match &k_range {
            Some(r) => r.clone().filter(|&k| k >= 1 && k <= order).collect(),
            None => (1..=order).collect(),
        };
        let poly: Option<FairDomPolynomial> = if order <= engine.cap() {
            Some(engine.fd_polynomial(&spec.build()?)?)
        } else {
            None
        };
        for k in ks {
            let (closed_form, claims) = formulas(family, n, k, engine);
            let paper_table = match family {
                Family::Cycle => tables.cycles.get(n, k).cloned(),
                Family::Path => tables.paths.get(n, k).cloned(),
                _ => None,
            };
            let mut row = VerifyRow {
                family,
                n,
                k,
                oracle: poly.as_ref().map(|p| p.coefficient(k)),
                closed_form,
                paper_table,
                claims,
                status: Status::Skipped(format!("order {order} exceeds cap {}", engine.cap())),
            };
            row.derive_status();
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Every family over its default range.
pub fn verify_all(engine: &Engine, tables: &PaperTables) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for f in Family::ALL {
        rows.extend(verify_family(f, f.default_range(), None, engine, tables)?);
    }
    Ok(rows)
}

/// Result of comparing a sweep with the expected-errata list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrataReport {
    pub rows: Vec<VerifyRow>,
    /// Every discrepancy found, sorted.
    pub found: BTreeSet<Discrepancy>,
    /// Found but not in the expected list.
    pub unexpected: BTreeSet<Discrepancy>,
    /// Expected for a swept cell but not found.
    pub missing: BTreeSet<Discrepancy>,
}

impl ErrataReport {
    /// True when the discrepancies are exactly the expected ones.
    pub fn matches_expected(&self) -> bool {
        self.unexpected.is_empty() && self.missing.is_empty()
    }

    /// One line per row, tab-separated, with a header.
    pub fn rows_text(&self) -> String {
        let mut out = String::new();
        if !self.rows.is_empty() {
            out.push_str(ROW_HEADER);
            out.push('\n');
        }
        for r in &self.rows {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }

    /// Discrepancies in errata-file format, one per line.
    pub fn errata_text(&self) -> String {
        self.found.iter().map(|d| format!("{d}\n")).collect()
    }

    /// Human-readable summary grouped by row status.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let count = |s: &Status| self.rows.iter().filter(|r| &r.status == s).count();
        let skipped = self
            .rows
            .iter()
            .filter(|r| matches!(r.status, Status::Skipped(_)))
            .count();
        out.push_str(&format!(
            "rows: {}  agree: {}  formula errata: {}  table errata: {}  both: {}  skipped: {}\n",
            self.rows.len(),
            count(&Status::AllAgree),
            count(&Status::FormulaErratum),
            count(&Status::TableErratum),
            count(&Status::FormulaAndTableConflict),
            skipped
        ));
        for (title, kind) in [
            ("formula errata", DiscrepancyKind::Formula),
            ("table errata", DiscrepancyKind::Table),
        ] {
            let group: Vec<&VerifyRow> = self
                .rows
                .iter()
                .filter(|r| r.discrepancies().iter().any(|d| d.kind == kind))
                .collect();
            if group.is_empty() {
                continue;
            }
            out.push_str(&format!("{title}:\n"));
            for r in group {
                let sources: Vec<String> = r
                    .discrepancies()
                    .into_iter()
                    .filter(|d| d.kind == kind)
                    .map(|d| d.source)
                    .collect();
                let published: Vec<String> = match kind {
                    DiscrepancyKind::Table => vec![opt(&r.paper_table)],
                    DiscrepancyKind::Formula => r
                        .claims
                        .iter()
                        .filter(|c| sources.contains(&c.source))
                        .map(|c| c.to_string())
                        .collect(),
                };
                out.push_str(&format!(
                    "  {} n={} k={}: oracle {} vs {} [{}]\n",
                    r.family,
                    r.n,
                    r.k,
                    opt(&r.oracle),
                    published.join(", "),
                    sources.join(", ")
                ));
            }
        }
        if !self.unexpected.is_empty() {
            out.push_str("unexpected discrepancies:\n");
            for d in &self.unexpected {
                out.push_str(&format!("  {d}\n"));
            }
        }
        if !self.missing.is_empty() {
            out.push_str("expected errata not reproduced:\n");
            for d in &self.missing {
                out.push_str(&format!("  {d}\n"));
            }
        }
        out
    }
}

/// Compares the discrepancies of `rows` with `expected`, restricted to the
/// cells the rows actually checked.
pub fn errata_report(rows: Vec<VerifyRow>, expected: &BTreeSet<Discrepancy>) -> ErrataReport {
    let found: BTreeSet<Discrepancy> = rows.iter().flat_map(|r| r.discrepancies()).collect();
    let checked: BTreeSet<(Family, usize, usize)> = rows
        .iter()
        .filter(|r| r.oracle.is_some())
        .map(|r| (r.family, r.n, r.k))
        .collect();
    let relevant: BTreeSet<Discrepancy> = expected
        .iter()
        .filter(|d| checked.contains(&(d.family, d.n, d.k)))
        .cloned()
        .collect();
    ErrataReport {
        unexpected: found.difference(&relevant).cloned().collect(),
        missing: relevant.difference(&found).cloned().collect(),
        found,
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(family: Family, n: usize, k: usize) -> Vec<VerifyRow> {
        verify_family(family, n..=n, Some(k..=k), &Engine::new(), &PaperTables::embedded()).unwrap()
    }

    #[test]
    fn cycle_8_4_only_corollary_disagrees() {
        let r = &rows(Family::Cycle, 8, 4)[0];
        assert_eq!(r.oracle, Some(Count::from(14u8)));
        assert_eq!(r.closed_form, Some(Count::from(14u8)));
        let theorem = r.claims.iter().find(|c| c.source == "cycle-theorem").unwrap();
        assert_eq!(theorem.value, Ok(Count::from(14u8)));
        let sources: Vec<String> = r.discrepancies().into_iter().map(|d| d.source).collect();
        assert_eq!(sources, ["cycle-corollary(iii)"]);
        assert_eq!(r.status, Status::FormulaErratum);
    }

    #[test]
    fn cycle_6_4_is_a_table_erratum() {
        let r = &rows(Family::Cycle, 6, 4)[0];
        assert_eq!(r.status, Status::TableErratum);
        assert_eq!(r.oracle, Some(Count::from(15u8)));
        assert_eq!(r.paper_table, Some(Count::from(9u8)));
        let corollary = r.claims.iter().find(|c| c.source == "cycle-corollary(i)").unwrap();
        assert_eq!(corollary.value, Ok(Count::from(15u8)));
    }

    #[test]
    fn path_9_5_agrees() {
        let r = &rows(Family::Path, 9, 5)[0];
        assert_eq!(r.status, Status::AllAgree);
        assert_eq!(r.oracle, Some(Count::from(11u8)));
    }

    #[test]
    fn cap_violations_are_skipped() {
        let e = Engine::new().with_cap(10).unwrap();
        let rs = verify_family(Family::Cycle, 11..=11, Some(3..=3), &e, &PaperTables::embedded()).unwrap();
        assert!(matches!(rs[0].status, Status::Skipped(_)));
        assert!(rs[0].discrepancies().is_empty());
        let report = errata_report(rs, &expected_errata());
        assert!(report.matches_expected());
    }

    #[test]
    fn empty_report_succeeds() {
        let report = errata_report(Vec::new(), &expected_errata());
        assert!(report.matches_expected());
        assert_eq!(report.rows_text(), "");
        assert!(report.found.is_empty());
    }

    #[test]
    fn agreeing_rows_succeed() {
        let rs = verify_family(Family::Complete, 1..=8, None, &Engine::new(), &PaperTables::embedded()).unwrap();
        assert!(rs.iter().all(|r| r.status == Status::AllAgree));
        assert!(errata_report(rs, &BTreeSet::new()).matches_expected());
    }

    #[test]
    fn discrepancy_lines_round_trip() {
        for d in expected_errata() {
            assert_eq!(d.to_string().parse::<Discrepancy>().unwrap(), d);
        }
        assert!("cycle,6,4,weird,table1".parse::<Discrepancy>().is_err());
        assert!(parse_errata("# ok\ncycle,6,4,table,table1\nbogus\n").is_err());
    }
}
