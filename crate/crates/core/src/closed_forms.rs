//! Counting theorems for named families, evaluated without enumeration.
//!
//! Every evaluator reports where its value comes from and whether the
//! parameters fall inside the range the theorem covers. Nothing is
//! extrapolated: out-of-range and explicitly excluded parameters come back
//! without a value, and the caller decides whether to ask the oracle.
//!
//! The `*_claims` functions return every theorem part that speaks about a
//! given (order, size) cell, so that overlapping statements are each checked.

use std::fmt;

use num_traits::{One, Zero};

use crate::combinatorics::{
    binomial, block_count, composition_count, cycle_block_count, cycle_block_count_by_rotation,
    Gap,
};
use crate::engine::Engine;
use crate::families;
use crate::poly::{Count, FairDomPolynomial};

/// Largest number of compositions the cycle evaluator enumerates before
/// switching to the rotation identity.
pub const STRUCTURAL_LIMIT: u64 = 200_000;

/// Whether a theorem speaks about the requested parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Applicability {
    InRange,
    /// A stated precondition fails; the reason names it.
    OutOfRange(String),
    /// The theorem explicitly excludes these orders.
    Excluded(Vec<usize>),
    /// The value needs an oracle count the engine cap does not allow.
    OracleDependent(String),
}

/// A closed-form value with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaResult {
    /// Which theorem part produced the value, e.g. `cactus(vii)`.
    pub source: &'static str,
    pub value: Option<Count>,
    pub applicability: Applicability,
}

impl FormulaResult {
    fn value(source: &'static str, v: impl Into<Count>) -> Self {
        FormulaResult {
            source,
            value: Some(v.into()),
            applicability: Applicability::InRange,
        }
    }

    fn out_of_range(source: &'static str, reason: impl Into<String>) -> Self {
        FormulaResult {
            source,
            value: None,
            applicability: Applicability::OutOfRange(reason.into()),
        }
    }

    fn excluded(source: &'static str, orders: &[usize]) -> Self {
        FormulaResult {
            source,
            value: None,
            applicability: Applicability::Excluded(orders.to_vec()),
        }
    }

    pub fn is_applicable(&self) -> bool {
        self.applicability == Applicability::InRange
    }
}

impl fmt::Display for FormulaResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.value, &self.applicability) {
            (Some(v), _) => write!(f, "{v} [{}]", self.source),
            (None, Applicability::OutOfRange(r)) => write!(f, "out of range [{}]: {r}", self.source),
            (None, Applicability::Excluded(ns)) => {
                write!(f, "excluded for n in {ns:?} [{}]", self.source)
            }
            (None, Applicability::OracleDependent(r)) => {
                write!(f, "oracle-dependent [{}]: {r}", self.source)
            }
            (None, Applicability::InRange) => write!(f, "undefined [{}]", self.source),
        }
    }
}

/// First applicable claim, or a combined out-of-range result.
fn first_applicable(claims: Vec<FormulaResult>, family: &'static str, n: usize, size: usize) -> FormulaResult {
    if let Some(c) = claims.iter().find(|c| c.is_applicable()) {
        return c.clone();
    }
    claims.into_iter().next().unwrap_or_else(|| {
        FormulaResult::out_of_range(family, format!("no theorem covers order {n}, size {size}"))
    })
}

fn int(v: i128) -> Count {
    Count::try_from(v).expect("closed form produced a negative count")
}

// ---- K_{n,n} -------------------------------------------------------------

/// `d_f(K_{n,n}, r)`.
///
/// Odd `r > 2`: `2` if `r = n`, `0` if `r < n`, `2 C(n, r-n)` if `r > n`.
/// Even `r >= 2`: `C(n, r/2)^2`, plus `2` when `r = n`, plus `C(n, r-n)^2`
/// when `r > n`. `r = 1` with `n >= 2` is answered with `0` (a single vertex
/// dominates only the opposite part), outside the theorem's own range.
pub fn knn_count(n: usize, r: usize) -> FormulaResult {
    if n == 0 {
        return FormulaResult::out_of_range("knn", "part size must be positive");
    }
    if r == 0 || r > 2 * n {
        return FormulaResult::out_of_range("knn", format!("size {r} outside 1..={}", 2 * n));
    }
    let (ni, ri) = (n as i64, r as i64);
    if r == 1 {
        return if n >= 2 {
            FormulaResult::value("knn(r=1)", 0u8)
        } else {
            FormulaResult::out_of_range("knn(r=1)", "K_{1,1} with r = 1 is not covered")
        };
    }
    if r % 2 == 1 {
        let v = match r.cmp(&n) {
            std::cmp::Ordering::Equal => Count::from(2u8),
            std::cmp::Ordering::Less => Count::zero(),
            std::cmp::Ordering::Greater => binomial(ni, ri - ni) * 2u8,
        };
        FormulaResult::value("knn(i)", v)
    } else {
        let half = binomial(ni, ri / 2);
        let base = &half * &half;
        let v = match r.cmp(&n) {
            std::cmp::Ordering::Less => base,
            std::cmp::Ordering::Equal => base + 2u8,
            std::cmp::Ordering::Greater => {
                let extra = binomial(ni, ri - ni);
                base + &extra * &extra
            }
        };
        FormulaResult::value("knn(ii)", v)
    }
}

// ---- cycles ---------------------------------------------------------------

/// `d_f(C_n, k)` from the run structure of fair sets on a cycle: runs of
/// chosen vertices separated by gaps of one vertex (family A) or of two
/// vertices (family B), never mixed.
pub fn cycle_count(n: usize, k: usize) -> FormulaResult {
    if n < 3 {
        return FormulaResult::out_of_range("cycle", "cycle needs n >= 3");
    }
    if k == 0 || k > n {
        return FormulaResult::out_of_range("cycle", format!("size {k} outside 1..={n}"));
    }
    if k == n {
        return FormulaResult::value("cycle(full)", 1u8);
    }
    FormulaResult::value("cycle(structural)", cycle_family_count(n, k, Gap::One) + cycle_family_count(n, k, Gap::Two))
}

/// Size of one run family, enumerated when small, by rotation identity otherwise.
pub fn cycle_family_count(n: usize, k: usize, gap: Gap) -> Count {
    let Some(b) = block_count(n, k, gap) else {
        return Count::zero();
    };
    let small = composition_count(k, b) <= Count::from(STRUCTURAL_LIMIT);
    if small {
        cycle_block_count(n, k, gap)
    } else {
        cycle_block_count_by_rotation(n, k, gap)
    }
}

/// `fd(C_n)`: `⌈n/3⌉`, one more when `n ≡ 2 (mod 3)` and `n >= 5`.
pub fn cycle_fd_number(n: usize) -> FormulaResult {
    if n < 3 {
        return FormulaResult::out_of_range("cycle-fd", "cycle needs n >= 3");
    }
    let base = n.div_ceil(3);
    let fd = if n % 3 == 2 && n >= 5 { base + 1 } else { base };
    FormulaResult::value("cycle-fd", fd)
}

/// The three polynomial corollaries for cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleCorollary {
    /// `d_f(C_n, n-2) = (n-1)n/2`, `n >= 3`.
    I,
    /// `d_f(C_n, n-3) = (n-5)(n-4)n/6`, `n >= 6`.
    II,
    /// `d_f(C_n, fd(C_n)) = (n-8)(n-7)n/6`, `n >= 7`.
    III,
}

impl CycleCorollary {
    pub const ALL: [CycleCorollary; 3] = [CycleCorollary::I, CycleCorollary::II, CycleCorollary::III];

    fn source(self) -> &'static str {
        match self {
            CycleCorollary::I => "cycle-corollary(i)",
            CycleCorollary::II => "cycle-corollary(ii)",
            CycleCorollary::III => "cycle-corollary(iii)",
        }
    }

    fn min_order(self) -> usize {
        match self {
            CycleCorollary::I => 3,
            CycleCorollary::II => 6,
            CycleCorollary::III => 7,
        }
    }

    /// The cardinality the corollary is about, for a cycle of order `n`.
    pub fn size(self, n: usize) -> Option<usize> {
        if n < self.min_order() {
            return None;
        }
        match self {
            CycleCorollary::I => Some(n - 2),
            CycleCorollary::II => Some(n - 3),
            CycleCorollary::III => cycle_fd_number(n).value.map(|v| v.try_into().unwrap()),
        }
    }
}

impl std::str::FromStr for CycleCorollary {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "i" => Ok(CycleCorollary::I),
            "ii" => Ok(CycleCorollary::II),
            "iii" => Ok(CycleCorollary::III),
            _ => Err(crate::Error::Input(format!("unknown corollary `{s}`"))),
        }
    }
}

pub fn cycle_corollary(n: usize, which: CycleCorollary) -> FormulaResult {
    let src = which.source();
    if n < which.min_order() {
        return FormulaResult::out_of_range(src, format!("needs n >= {}", which.min_order()));
    }
    let m = n as i128;
    let v = match which {
        CycleCorollary::I => (m - 1) * m / 2,
        CycleCorollary::II => (m - 5) * (m - 4) * m / 6,
        CycleCorollary::III => (m - 8) * (m - 7) * m / 6,
    };
    FormulaResult::value(src, int(v))
}

/// Corollaries that speak about `d_f(C_n, k)`.
pub fn cycle_claims(n: usize, k: usize) -> Vec<FormulaResult> {
    CycleCorollary::ALL
        .iter()
        .filter(|c| c.size(n) == Some(k))
        .map(|&c| cycle_corollary(n, c))
        .collect()
}

// ---- paths ----------------------------------------------------------------

/// Every path statement covering `d_f(P_n, j)`.
pub fn path_claims(n: usize, j: usize) -> Vec<FormulaResult> {
    let mut out = Vec::new();
    if n < 2 || j == 0 || j > n {
        return out;
    }
    let m = n as i128;
    if j == n {
        out.push(FormulaResult::value("path(i)", 1u8));
    }
    if j == n - 1 {
        out.push(FormulaResult::value("path(i)", n));
    }
    if j + 2 == n {
        out.push(FormulaResult::value("path(ii)", int((m - 3) * (m - 2) / 2 + 1)));
    }
    if j + 4 == n {
        let v: Count = (1..=(m as i64 - 3))
            .map(|i| binomial(m as i64 - 3 - i, m as i64 - 3 - 3 * i))
            .sum();
        out.push(FormulaResult::value("path(iii)", v));
    }
    let k = n / 3;
    if k >= 2 {
        match n % 3 {
            0 if j == k => out.push(FormulaResult::value("path-3k", 1u8)),
            1 if j == k + 1 => out.push(FormulaResult::value("path-3k+1", 3u8)),
            2 if j == k + 1 => out.push(FormulaResult::value("path-3k+2", 2u8)),
            _ => {}
        }
    }
    out
}

/// `d_f(P_n, j)` from the first path statement that covers it.
pub fn path_special(n: usize, j: usize) -> FormulaResult {
    first_applicable(path_claims(n, j), "path", n, j)
}

// ---- friendship graphs ----------------------------------------------------

/// Every friendship statement covering `d_f(F_n, size)`.
pub fn friendship_claims(n: usize, size: usize) -> Vec<FormulaResult> {
    let mut out = Vec::new();
    if n == 0 || size == 0 || size > 2 * n + 1 {
        return out;
    }
    if size == 2 * n + 1 {
        out.push(FormulaResult::value("friendship(full)", 1u8));
    }
    if size == 2 * n {
        out.push(FormulaResult::value("friendship(full-1)", 2 * n + 1));
    }
    if size.is_multiple_of(2) && size / 2 <= n / 2 {
        out.push(FormulaResult::value("friendship(even)", 0u8));
    }
    if size == 3 {
        out.push(if n >= 3 {
            FormulaResult::value("friendship(3)", n)
        } else {
            FormulaResult::out_of_range("friendship(3)", "needs n >= 3")
        });
    }
    if size == 5 {
        out.push(if n >= 5 {
            FormulaResult::value("friendship(5)", n * (n - 1) / 2)
        } else {
            FormulaResult::out_of_range("friendship(5)", "needs n >= 5")
        });
    }
    out
}

pub fn friendship_count(n: usize, size: usize) -> FormulaResult {
    first_applicable(friendship_claims(n, size), "friendship", n, size)
}

// ---- triangular cactus ----------------------------------------------------

/// `d_f(P_m, j)` through the oracle, zero for `j < 0`.
fn path_oracle(engine: &Engine, m: usize, j: i64) -> Result<Count, String> {
    if j < 0 {
        return Ok(Count::zero());
    }
    let p = families::path(m).map_err(|e| e.to_string())?;
    engine.count_fd(&p, j as usize).map_err(|e| e.to_string())
}

/// Every cactus statement covering `d_f(T_n, size)`. Parts (v) and (vi)
/// need a path count, taken from `engine`.
pub fn cactus_claims(n: usize, size: usize, engine: &Engine) -> Vec<FormulaResult> {
    let mut out = Vec::new();
    if n == 0 || size == 0 || size > 2 * n + 1 {
        return out;
    }
    let (ni, si) = (n as i64, size as i64);
    let oracle_part = |src: &'static str, base: Count, path_size: i64| -> FormulaResult {
        match path_oracle(engine, n + 1, path_size) {
            Ok(p) => FormulaResult::value(src, base + p),
            Err(e) => FormulaResult {
                source: src,
                value: None,
                applicability: Applicability::OracleDependent(e),
            },
        }
    };
    if si == 2 * ni + 1 {
        out.push(FormulaResult::value("cactus(i)", 1u8));
    }
    if si == 2 * ni {
        out.push(FormulaResult::value("cactus(ii)", binomial(2 * ni + 1, 1)));
    }
    if si == 2 * ni - 1 {
        let v = binomial(ni, ni - 2) + binomial(ni - 1, ni - 3) + Count::from(2 * n);
        out.push(FormulaResult::value("cactus(iii)", v));
    }
    if si == 2 * ni - 2 {
        let v = binomial(ni, ni - 3) + binomial(ni - 1, ni - 3) * 2u8;
        out.push(FormulaResult::value("cactus(iv)", v));
    }
    if si == 2 * ni - 3 {
        out.push(if n == 4 {
            FormulaResult::excluded("cactus(v)", &[4])
        } else {
            oracle_part("cactus(v)", binomial(ni, ni - 4) + Count::one(), ni - 3)
        });
    }
    if si == 2 * ni - 4 {
        out.push(match n {
            0..=5 => FormulaResult::out_of_range("cactus(vi)", "needs n >= 6"),
            6..=9 => FormulaResult::value("cactus(vi)", binomial(ni, ni - 5)),
            _ => oracle_part("cactus(vi)", binomial(ni, ni - 5), ni - 4),
        });
    }
    if size == n + 1 {
        out.push(if [1, 2, 4].contains(&n) {
            FormulaResult::excluded("cactus(vii)", &[1, 2, 4])
        } else {
            FormulaResult::value("cactus(vii)", 4u8)
        });
    }
    if size == n {
        out.push(if [1, 3].contains(&n) {
            FormulaResult::excluded("cactus(viii)", &[1, 3])
        } else {
            FormulaResult::value("cactus(viii)", 0u8)
        });
    }
    out
}

pub fn cactus_count(n: usize, size: usize, engine: &Engine) -> FormulaResult {
    first_applicable(cactus_claims(n, size, engine), "cactus", n, size)
}

// ---- complete graphs ------------------------------------------------------

/// `(1+x)^n - 1`.
pub fn complete_poly(n: usize) -> FairDomPolynomial {
    FairDomPolynomial::from_dense(
        n,
        (0..=n).map(|i| if i == 0 { Count::zero() } else { binomial(n as i64, i as i64) }),
    )
}

pub fn complete_count(n: usize, size: usize) -> FormulaResult {
    if n == 0 || size == 0 || size > n {
        return FormulaResult::out_of_range("complete", format!("size {size} outside 1..={n}"));
    }
    FormulaResult::value("complete", binomial(n as i64, size as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(r: FormulaResult) -> u64 {
        match &r.value {
            Some(c) => c.try_into().unwrap(),
            None => panic!("no value: {r}"),
        }
    }

    #[test]
    fn knn_examples() {
        assert_eq!(v(knn_count(4, 2)), 16);
        assert_eq!(v(knn_count(4, 3)), 0);
        assert_eq!(v(knn_count(4, 4)), 38);
        assert_eq!(v(knn_count(3, 5)), 6);
        assert_eq!(v(knn_count(3, 1)), 0);
        assert!(!knn_count(1, 1).is_applicable());
        assert!(!knn_count(3, 7).is_applicable());
    }

    #[test]
    fn knn_odd_case_counts_both_parts() {
        // r > n odd: one full part plus r - n from the other, either way round
        for n in 1..=8usize {
            for r in (n + 1..=2 * n).filter(|r| r % 2 == 1 && *r > 2) {
                let one_side = binomial(n as i64, (r - n) as i64);
                assert_eq!(knn_count(n, r).value.unwrap(), &one_side + &one_side);
            }
        }
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(v(cycle_count(8, 4)), 14);
        assert_eq!(v(cycle_count(9, 3)), 3);
        assert_eq!(v(cycle_count(6, 4)), 15);
        assert_eq!(v(cycle_count(7, 7)), 1);
        assert_eq!(v(cycle_count(7, 6)), 7);
        assert!(!cycle_count(2, 1).is_applicable());
        assert!(!cycle_count(5, 6).is_applicable());
    }

    #[test]
    fn cycle_count_large_orders() {
        // n - k odd with n > 2k admits neither family
        assert_eq!(v(cycle_count(201, 100)), 0);
        assert_eq!(v(cycle_count(300, 299)), 300);
        // far beyond the enumeration limit the rotation identity takes over
        let r = cycle_count(120, 70);
        assert_eq!(r.value.unwrap(), cycle_block_count_by_rotation(120, 70, Gap::One) + cycle_block_count_by_rotation(120, 70, Gap::Two));
    }

    #[test]
    fn cycle_fd_examples() {
        assert_eq!(v(cycle_fd_number(9)), 3);
        assert_eq!(v(cycle_fd_number(5)), 3);
        assert_eq!(v(cycle_fd_number(3)), 1);
        assert_eq!(v(cycle_fd_number(8)), 4);
        assert!(!cycle_fd_number(2).is_applicable());
    }

    #[test]
    fn corollary_examples() {
        assert_eq!(v(cycle_corollary(7, CycleCorollary::I)), 21);
        assert_eq!(v(cycle_corollary(8, CycleCorollary::II)), 16);
        assert_eq!(v(cycle_corollary(11, CycleCorollary::III)), 22);
        assert_eq!(v(cycle_corollary(7, CycleCorollary::III)), 0);
        assert!(!cycle_corollary(5, CycleCorollary::II).is_applicable());
        assert_eq!(CycleCorollary::III.size(10), Some(4));
        assert_eq!("ii".parse::<CycleCorollary>().unwrap(), CycleCorollary::II);
    }

    #[test]
    fn path_examples() {
        assert_eq!(v(path_special(8, 4)), 6);
        assert_eq!(v(path_special(9, 3)), 1);
        assert_eq!(v(path_special(7, 3)), 3);
        assert_eq!(v(path_special(6, 4)), 7);
        assert_eq!(path_special(8, 4).source, "path(iii)");
        assert!(!path_special(12, 6).is_applicable());
        assert!(!path_special(1, 1).is_applicable());
        // both the n-4 sum and the 3k pattern cover P_6 at size 2
        let sources: Vec<_> = path_claims(6, 2).iter().map(|c| c.source).collect();
        assert_eq!(sources, vec!["path(iii)", "path-3k"]);
    }

    #[test]
    fn friendship_examples() {
        assert_eq!(v(friendship_count(3, 3)), 3);
        assert_eq!(v(friendship_count(5, 5)), 10);
        assert_eq!(v(friendship_count(4, 4)), 0);
        assert_eq!(v(friendship_count(3, 7)), 1);
        assert_eq!(v(friendship_count(3, 6)), 7);
        assert!(!friendship_count(2, 3).is_applicable());
        assert!(!friendship_count(3, 4).is_applicable());
    }

    #[test]
    fn cactus_examples() {
        let e = Engine::new();
        assert_eq!(v(cactus_count(5, 11, &e)), 1);
        assert_eq!(v(cactus_count(5, 10, &e)), 11);
        assert_eq!(v(cactus_count(5, 9, &e)), 26);
        assert_eq!(v(cactus_count(5, 6, &e)), 4);
        assert_eq!(v(cactus_count(5, 5, &e)), 0);
        assert_eq!(cactus_count(4, 5, &e).applicability, Applicability::Excluded(vec![4]));
        assert_eq!(cactus_count(3, 3, &e).source, "cactus(v)");
        assert_eq!(
            cactus_claims(3, 3, &e).last().unwrap().applicability,
            Applicability::Excluded(vec![1, 3])
        );
        // (v) at n = 5 uses d_f(P_6, 2) = 1
        assert_eq!(v(cactus_count(5, 7, &e)), 5 + 1 + 1);
    }

    #[test]
    fn cactus_oracle_dependence_respects_cap() {
        let tight = Engine::new().with_cap(8).unwrap();
        let r = cactus_count(10, 16, &tight);
        assert_eq!(r.source, "cactus(vi)");
        assert!(matches!(r.applicability, Applicability::OracleDependent(_)));
        let roomy = Engine::new();
        // C(10,5) + d_f(P_11, 6)
        assert_eq!(v(cactus_count(10, 16, &roomy)), 252 + 21);
    }

    #[test]
    fn complete_examples() {
        assert_eq!(complete_poly(1).to_dense(), vec![Count::zero(), Count::one()]);
        assert_eq!(
            complete_poly(4).to_dense(),
            [0u8, 4, 6, 4, 1].map(Count::from).to_vec()
        );
        assert_eq!(complete_poly(10).coefficient(5), Count::from(252u16));
        assert_eq!(v(complete_count(10, 5)), 252);
    }
}
