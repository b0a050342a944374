//! `fairdom`: count, list and verify fair dominating sets from the shell.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 capacity error,
//! 3 verification found discrepancies other than the committed errata.

mod config;
mod render;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fairdom::closed_forms::{
    cactus_claims, complete_count, complete_poly, cycle_count, friendship_claims, knn_count, path_claims,
    FormulaResult,
};
use fairdom::edgelist::parse_edge_list;
use fairdom::tables::PaperTables;
use fairdom::verify::{self, errata_report, Discrepancy, DiscrepancyKind, ErrataReport, Family};
use fairdom::{Count, Engine, FamilySpec, Graph, VertexSet, DEFAULT_CAP};
use serde_json::{json, Value};

use config::Config;
use render::{aligned, braces, csv_text, json_text, num, spaced};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(fairdom::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(fairdom::Error::Capacity { .. }) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<fairdom::Error> for CliError {
    fn from(e: fairdom::Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "fairdom", version, about = "Fair dominating sets: counts, listings, polynomials and checks")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    /// Worker threads for enumeration (0 = one per core).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Largest graph order the oracle will enumerate (at most 64).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Settings file with `cap=` and `workers=` lines.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of fair dominating sets of one size.
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        size: usize,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Also list the sets (forces the oracle).
        #[arg(long)]
        list: bool,
        #[arg(long)]
        zero_based: bool,
    },
    /// List fair dominating sets, of one size or of every size.
    Enum {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        zero_based: bool,
    },
    /// Fair domination polynomial.
    Poly {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Fair domination number, or the k-fair one with `--k`.
    Fd {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Table of d_f(G_n, j) for cycles or paths, zero-filled.
    Table {
        #[arg(value_enum)]
        family: TableFamily,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Compare closed forms and published tables with the oracle.
    Verify {
        /// cycle, path, knn, friendship, cactus, complete or all.
        family: String,
        /// Parameter range, e.g. `3..12`.
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeInclusive<usize>>,
        /// Size range, e.g. `1..4`.
        #[arg(long, value_parser = parse_range)]
        k: Option<RangeInclusive<usize>>,
        /// Errata list to compare against instead of the built-in one.
        #[arg(long)]
        expected: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Family string such as `cycle:9`, `kmn:2,3` or `corona(path:3,complete:1)`.
    graph: Option<String>,
    /// Edge-list file (`n <count>` header, 1-based endpoints).
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Oracle,
    Formula,
    Auto,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TableFamily {
    Cycle,
    Path,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad number `{t}` in range `{s}`"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok(a..=b)
}

/// A resolved graph source: the family (when given as one) and a label.
struct Resolved {
    spec: Option<FamilySpec>,
    label: String,
    graph: Option<Graph>,
}

impl Resolved {
    fn new(src: &Source) -> CliResult<Resolved> {
        match (&src.graph, &src.edges) {
            (Some(s), None) => {
                let spec: FamilySpec = s.parse()?;
                Ok(Resolved { label: spec.to_string(), spec: Some(spec), graph: None })
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                let g = parse_edge_list(&text)?;
                Ok(Resolved { spec: None, label: format!("edges:{}", path.display()), graph: Some(g) })
            }
            _ => Err(CliError::Usage("give either a family string or --edges".into())),
        }
    }

    fn order(&self) -> usize {
        match (&self.spec, &self.graph) {
            (_, Some(g)) => g.order(),
            (Some(s), None) => s.order(),
            (None, None) => 0,
        }
    }

    fn graph(&mut self) -> CliResult<&Graph> {
        if self.graph.is_none() {
            let spec = self.spec.as_ref().expect("family source");
            self.graph = Some(spec.build()?);
        }
        Ok(self.graph.as_ref().expect("just built"))
    }
}

/// Family and closed-form statements covering `d_f(spec, size)`, in the
/// order they are preferred.
fn formula_candidates(spec: &FamilySpec, size: usize, engine: &Engine) -> (Option<Family>, Vec<FormulaResult>) {
    match *spec {
        FamilySpec::Cycle(n) => (Some(Family::Cycle), vec![cycle_count(n, size)]),
        FamilySpec::Path(n) => (Some(Family::Path), path_claims(n, size)),
        FamilySpec::CompleteBipartite(m, n) if m == n => (Some(Family::Knn), vec![knn_count(n, size)]),
        FamilySpec::Friendship(n) => (Some(Family::Friendship), friendship_claims(n, size)),
        FamilySpec::TriangularCactus(n) => (Some(Family::Cactus), cactus_claims(n, size, engine)),
        FamilySpec::Complete(n) => (Some(Family::Complete), vec![complete_count(n, size)]),
        _ => (None, Vec::new()),
    }
}

fn is_known_erratum(family: Family, n: usize, k: usize, source: &str) -> bool {
    let d = Discrepancy { family, n, k, kind: DiscrepancyKind::Formula, source: source.to_string() };
    verify::expected_errata().contains(&d)
}

fn family_param(spec: &FamilySpec) -> usize {
    match *spec {
        FamilySpec::Cycle(n)
        | FamilySpec::Path(n)
        | FamilySpec::Friendship(n)
        | FamilySpec::TriangularCactus(n)
        | FamilySpec::Complete(n)
        | FamilySpec::Empty(n)
        | FamilySpec::CompleteBipartite(_, n) => n,
        _ => 0,
    }
}

/// Picks a formula value. `strict` takes the first applicable statement as
/// published; otherwise statements known to be wrong at this cell are skipped.
fn formula_value(spec: &FamilySpec, size: usize, engine: &Engine, strict: bool) -> Option<(&'static str, Count)> {
    let (family, candidates) = formula_candidates(spec, size, engine);
    let n = family_param(spec);
    candidates.into_iter().find_map(|r| {
        if !r.is_applicable() {
            return None;
        }
        let known_bad = family.is_some_and(|f| is_known_erratum(f, n, size, r.source));
        if known_bad && !strict {
            return None;
        }
        if known_bad {
            eprintln!("note: {} disagrees with enumeration at this size (listed erratum)", r.source);
        }
        r.value.map(|v| (r.source, v))
    })
}

struct Ctx {
    engine: Engine,
    format: Format,
}

fn sets_json(sets: &[VertexSet], zero_based: bool) -> Value {
    Value::Array(sets.iter().map(|s| json!(render::labels(*s, zero_based))).collect())
}

fn cmd_count(ctx: &Ctx, source: &Source, size: usize, method: Method, list: bool, zero_based: bool) -> CliResult<String> {
    let mut r = Resolved::new(source)?;
    if size > r.order() {
        return Err(CliError::Usage(format!("size {size} exceeds the order {} of {}", r.order(), r.label)));
    }
    if list && method == Method::Formula {
        return Err(CliError::Usage("--list needs enumeration; use --method oracle or auto".into()));
    }
    let formula = match (&r.spec, method, list) {
        (_, Method::Oracle, _) | (_, _, true) | (None, _, _) => None,
        (Some(spec), m, false) => formula_value(spec, size, &ctx.engine, m == Method::Formula),
    };
    if method == Method::Formula && formula.is_none() {
        return Err(CliError::Usage(format!("no closed form covers {} at size {size}", r.label)));
    }
    let (used, count, sets) = match formula {
        Some((src, v)) => (format!("formula:{src}"), v, None),
        None => {
            let engine = &ctx.engine;
            let g = r.graph()?;
            if list {
                let sets = engine.enumerate_fd(g, size)?;
                (String::from("oracle"), Count::from(sets.len()), Some(sets))
            } else {
                (String::from("oracle"), engine.count_fd(g, size)?, None)
            }
        }
    };
    Ok(match ctx.format {
        Format::Plain => {
            let mut out = String::new();
            for s in sets.iter().flatten() {
                out.push_str(&braces(*s, zero_based));
                out.push('\n');
            }
            out.push_str(&format!("{count}\n"));
            out
        }
        Format::Json => {
            let mut v = json!({
                "graph": r.label,
                "order": r.order(),
                "size": size,
                "method": used,
                "count": num(&count),
            });
            if let Some(sets) = &sets {
                v["sets"] = sets_json(sets, zero_based);
            }
            json_text(&v)
        }
        Format::Csv => match &sets {
            Some(sets) => csv_text(&["size", "set"], sets.iter().map(|s| vec![size.to_string(), spaced(*s, zero_based)])),
            None => csv_text(
                &["graph", "size", "method", "count"],
                [vec![r.label.clone(), size.to_string(), used, count.to_string()]],
            ),
        },
    })
}

fn cmd_enum(ctx: &Ctx, source: &Source, size: Option<usize>, zero_based: bool) -> CliResult<String> {
    let mut r = Resolved::new(source)?;
    let order = r.order();
    if let Some(s) = size {
        if s > order {
            return Err(CliError::Usage(format!("size {s} exceeds the order {order} of {}", r.label)));
        }
    }
    let g = r.graph()?;
    let sizes: Vec<usize> = match size {
        Some(s) => vec![s],
        None => (1..=order).collect(),
    };
    let mut sets = Vec::new();
    for s in sizes {
        sets.extend(ctx.engine.enumerate_fd(g, s)?);
    }
    Ok(match ctx.format {
        Format::Plain => sets.iter().map(|s| format!("{}\n", braces(*s, zero_based))).collect(),
        Format::Json => json_text(&json!({
            "graph": r.label,
            "order": order,
            "size": size,
            "count": sets.len(),
            "sets": sets_json(&sets, zero_based),
        })),
        Format::Csv => csv_text(
            &["size", "set"],
            sets.iter().map(|s| vec![s.len().to_string(), spaced(*s, zero_based)]),
        ),
    })
}

fn cmd_poly(ctx: &Ctx, source: &Source, method: Method) -> CliResult<String> {
    let mut r = Resolved::new(source)?;
    let closed = match (&r.spec, method) {
        (Some(FamilySpec::Complete(n)), Method::Formula | Method::Auto) => Some(complete_poly(*n)),
        _ => None,
    };
    if method == Method::Formula && closed.is_none() {
        return Err(CliError::Usage(format!("no closed-form polynomial for {}", r.label)));
    }
    let (used, poly) = match closed {
        Some(p) => ("formula", p),
        None => ("oracle", ctx.engine.fd_polynomial(r.graph()?)?),
    };
    Ok(match ctx.format {
        Format::Plain => poly.terms().map(|(i, c)| format!("d_f({i})={c}\n")).collect(),
        Format::Json => {
            let coeffs: serde_json::Map<String, Value> = poly.terms().map(|(i, c)| (i.to_string(), num(c))).collect();
            json_text(&json!({
                "graph": r.label,
                "order": poly.order(),
                "method": used,
                "coefficients": coeffs,
            }))
        }
        Format::Csv => csv_text(&["i", "count"], poly.terms().map(|(i, c)| vec![i.to_string(), c.to_string()])),
    })
}

fn cmd_fd(ctx: &Ctx, source: &Source, k: Option<usize>) -> CliResult<String> {
    let mut r = Resolved::new(source)?;
    let g = r.graph()?;
    let value = match k {
        Some(k) => ctx.engine.fd_k_number(g, k)?,
        None => ctx.engine.fd_number(g)?,
    };
    Ok(match ctx.format {
        Format::Plain => format!("{value}\n"),
        Format::Json => {
            let mut v = json!({ "graph": r.label, "order": r.order() });
            match k {
                Some(k) => {
                    v["k"] = json!(k);
                    v["fd_k"] = json!(value);
                }
                None => v["fd"] = json!(value),
            }
            json_text(&v)
        }
        Format::Csv => match k {
            Some(k) => csv_text(&["graph", "k", "fd_k"], [vec![r.label, k.to_string(), value.to_string()]]),
            None => csv_text(&["graph", "fd"], [vec![r.label, value.to_string()]]),
        },
    })
}

fn cmd_table(ctx: &Ctx, family: TableFamily, max_n: usize) -> CliResult<String> {
    let (name, first) = match family {
        TableFamily::Cycle => ("cycle", 3),
        TableFamily::Path => ("path", 1),
    };
    if max_n < first {
        return Err(CliError::Usage(format!("{name} tables start at n = {first}")));
    }
    let mut rows: Vec<(usize, Vec<Count>)> = Vec::new();
    for n in first..=max_n {
        let spec = match family {
            TableFamily::Cycle => FamilySpec::Cycle(n),
            TableFamily::Path => FamilySpec::Path(n),
        };
        let poly = ctx.engine.fd_polynomial(&spec.build()?)?;
        rows.push((n, (1..=max_n).map(|j| poly.coefficient(j)).collect()));
    }
    Ok(match ctx.format {
        Format::Plain => {
            let mut grid = vec![std::iter::once("n\\j".to_string()).chain((1..=max_n).map(|j| j.to_string())).collect()];
            for (n, counts) in &rows {
                grid.push(std::iter::once(n.to_string()).chain(counts.iter().map(|c| c.to_string())).collect());
            }
            aligned(&grid)
        }
        Format::Json => json_text(&json!({
            "family": name,
            "max_n": max_n,
            "rows": rows.iter().map(|(n, counts)| json!({
                "n": n,
                "counts": counts.iter().map(num).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let header: Vec<String> = std::iter::once("n".to_string()).chain((1..=max_n).map(|j| j.to_string())).collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            csv_text(
                &header,
                rows.iter().map(|(n, counts)| std::iter::once(n.to_string()).chain(counts.iter().map(|c| c.to_string())).collect()),
            )
        }
    })
}

fn opt_json(c: &Option<Count>) -> Value {
    c.as_ref().map_or(Value::Null, num)
}

fn verify_json(family: &str, report: &ErrataReport) -> Value {
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|r| {
            json!({
                "family": r.family.name(),
                "n": r.n,
                "k": r.k,
                "oracle": opt_json(&r.oracle),
                "closed_form": opt_json(&r.closed_form),
                "paper_table": opt_json(&r.paper_table),
                "claims": r.claims.iter().map(|c| match &c.value {
                    Ok(v) => json!({ "source": c.source, "value": num(v) }),
                    Err(e) => json!({ "source": c.source, "error": e }),
                }).collect::<Vec<_>>(),
                "status": r.status.to_string(),
            })
        })
        .collect();
    let lines = |s: &BTreeSet<Discrepancy>| s.iter().map(|d| d.to_string()).collect::<Vec<_>>();
    json!({
        "family": family,
        "matches_expected": report.matches_expected(),
        "rows": rows,
        "discrepancies": lines(&report.found),
        "unexpected": lines(&report.unexpected),
        "missing": lines(&report.missing),
    })
}

fn cmd_verify(
    ctx: &Ctx,
    family: &str,
    n: Option<RangeInclusive<usize>>,
    k: Option<RangeInclusive<usize>>,
    expected: Option<&Path>,
) -> CliResult<(String, bool)> {
    let families: Vec<Family> = if family == "all" { Family::ALL.to_vec() } else { vec![family.parse()?] };
    let expected = match expected {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?;
            verify::parse_errata(&text)?
        }
        None => verify::expected_errata(),
    };
    let tables = PaperTables::embedded();
    let mut rows = Vec::new();
    for f in families {
        let range = n.clone().unwrap_or_else(|| f.default_range());
        rows.extend(verify::verify_family(f, range, k.clone(), &ctx.engine, &tables)?);
    }
    let report = errata_report(rows, &expected);
    let text = match ctx.format {
        Format::Plain => format!("{}\n{}", report.rows_text(), report.summary()),
        Format::Json => json_text(&verify_json(family, &report)),
        Format::Csv => {
            let header: Vec<&str> = verify::ROW_HEADER.split('\t').collect();
            csv_text(&header, report.rows.iter().map(|r| r.to_string().split('\t').map(String::from).collect()))
        }
    };
    Ok((text, report.matches_expected()))
}

fn build_engine(cli: &Cli) -> CliResult<Engine> {
    let cfg = Config::load(cli.config.as_deref())?;
    let cap = cli.cap.or(cfg.cap).unwrap_or(DEFAULT_CAP);
    let workers = cli.workers.or(cfg.workers);
    let mut engine = Engine::new().with_cap(cap)?;
    if cap > DEFAULT_CAP {
        eprintln!("warning: enumeration cap raised to {cap} (default {DEFAULT_CAP}); large graphs can take very long");
    }
    if let Some(w) = workers {
        engine = engine.with_workers(w);
    }
    Ok(engine)
}

fn run(cli: Cli) -> CliResult<(String, u8)> {
    let ctx = Ctx { engine: build_engine(&cli)?, format: cli.format };
    let out = match &cli.command {
        Command::Count { source, size, method, list, zero_based } => {
            cmd_count(&ctx, source, *size, *method, *list, *zero_based)?
        }
        Command::Enum { source, size, zero_based } => cmd_enum(&ctx, source, *size, *zero_based)?,
        Command::Poly { source, method } => cmd_poly(&ctx, source, *method)?,
        Command::Fd { source, k } => cmd_fd(&ctx, source, *k)?,
        Command::Table { family, max_n } => cmd_table(&ctx, *family, *max_n)?,
        Command::Verify { family, n, k, expected } => {
            let (text, ok) = cmd_verify(&ctx, family, n.clone(), k.clone(), expected.as_deref())?;
            return Ok((text, if ok { 0 } else { 3 }));
        }
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
