//! Exact integer combinatorics: binomials, multinomials, partitions,
//! compositions, and counts of block arrangements on a cycle.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Count;

/// `C(n, r)`, zero outside `0 <= r <= n`.
pub fn binomial(n: i64, r: i64) -> Count {
    if n < 0 || r < 0 || r > n {
        return Count::zero();
    }
    let r = r.min(n - r) as u64;
    let n = n as u64;
    let mut acc = Count::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> Count {
    (1..=n).fold(Count::one(), |acc, i| acc * i)
}

/// `m! / (t_1! t_2! ... t_j!)`; the parts must sum to `m`.
pub fn multinomial(m: u64, parts: &[u64]) -> Result<Count> {
    let sum: u64 = parts.iter().sum();
    if sum != m {
        return Err(Error::Domain(format!(
            "multinomial header {m} does not match the sum {sum} of {parts:?}"
        )));
    }
    // product of binomials avoids the big intermediate m!
    let mut acc = Count::one();
    let mut used = 0i64;
    for &t in parts {
        used += t as i64;
        acc *= binomial(used, t as i64);
    }
    Ok(acc)
}

/// Integer partition: parts in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` into canonical (non-increasing) order.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// How often each distinct part value occurs, largest value first.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        let mut prev = None;
        for &p in &self.parts {
            if prev == Some(p) {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
                prev = Some(p);
            }
        }
        out
    }

    /// Number of distinct orderings of the parts (compositions with this
    /// multiset of parts).
    pub fn arrangements(&self) -> Count {
        let mult: Vec<u64> = self.multiplicities().into_iter().map(|m| m as u64).collect();
        multinomial(self.len() as u64, &mult).expect("multiplicities sum to the part count")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("+"))
    }
}

/// All partitions of `k` into exactly `m` parts, each `>= min_part`, in
/// reverse lexicographic order.
pub fn partitions(k: usize, m: usize, min_part: usize) -> Vec<Partition> {
    fn rec(left: usize, slots: usize, max: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if slots == 0 {
            if left == 0 {
                out.push(Partition { parts: cur.clone() });
            }
            return;
        }
        // the remaining slots - 1 parts need at least min each
        let Some(rest_min) = (slots - 1).checked_mul(min) else { return };
        if left < rest_min {
            return;
        }
        let hi = max.min(left - rest_min);
        // the current part must leave room for at most `slots - 1` parts of size `<= part`
        for part in (min..=hi).rev() {
            if part * slots < left {
                break;
            }
            cur.push(part);
            rec(left - part, slots - 1, part, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if k == 0 {
            out.push(Partition { parts: vec![] });
        }
        return out;
    }
    rec(k, m, k, min_part, &mut Vec::with_capacity(m), &mut out);
    out
}

/// All compositions (ordered) of `k` into `m` positive parts, in
/// lexicographic order.
pub fn compositions(k: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for part in 1..=left - (slots - 1) {
            cur.push(part);
            rec(left - part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        if k == 0 {
            out.push(vec![]);
        }
        return out;
    }
    if k < m {
        return out;
    }
    rec(k, m, &mut Vec::with_capacity(m), &mut out);
    out
}

/// Separation between consecutive runs of chosen vertices on a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gap {
    /// One unchosen vertex between runs: every outside vertex sees two members.
    One,
    /// Two unchosen vertices between runs: every outside vertex sees one member.
    Two,
}

impl Gap {
    pub fn width(self) -> usize {
        match self {
            Gap::One => 1,
            Gap::Two => 2,
        }
    }

    pub fn from_width(w: usize) -> Result<Gap> {
        match w {
            1 => Ok(Gap::One),
            2 => Ok(Gap::Two),
            _ => Err(Error::Input(format!("gap must be 1 or 2, got {w}"))),
        }
    }
}

/// Number of runs a `k`-subset of the `n`-cycle has when every gap has the
/// given width, or `None` when no such subset exists.
pub fn block_count(n: usize, k: usize, gap: Gap) -> Option<usize> {
    if n < 3 || k == 0 || k >= n {
        return None;
    }
    let unchosen = n - k;
    if !unchosen.is_multiple_of(gap.width()) {
        return None;
    }
    let b = unchosen / gap.width();
    (b >= 1 && b <= k).then_some(b)
}

/// Lexicographically least rotation of a bit string (Booth's algorithm).
pub fn least_rotation(bits: &[bool]) -> Vec<bool> {
    let n = bits.len();
    if n == 0 {
        return Vec::new();
    }
    let s: Vec<bool> = bits.iter().chain(bits.iter()).copied().collect();
    let mut fail = vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        // false < true: a later false beats an earlier true
        let sj = s[j];
        let mut i = fail[j - k - 1];
        while i != usize::MAX && sj != s[k + i + 1] {
            if !sj && s[k + i + 1] {
                k = j - i - 1;
            }
            i = fail[i];
        }
        if i == usize::MAX && sj != s[k] {
            if !sj && s[k] {
                k = j;
            }
            fail[j - k] = usize::MAX;
        } else {
            fail[j - k] = if i == usize::MAX { 0 } else { i + 1 };
        }
    }
    s[k..k + n].to_vec()
}

/// Number of distinct rotations of a bit string (its smallest period).
pub fn rotation_orbit(bits: &[bool]) -> usize {
    let n = bits.len();
    (1..=n)
        .filter(|p| n.is_multiple_of(*p))
        .find(|&p| (0..n).all(|i| bits[i] == bits[(i + p) % n]))
        .unwrap_or(n)
}

/// Lays out `blocks` runs of chosen vertices starting at position 0,
/// separated by `gap` unchosen vertices.
fn lay_blocks(blocks: &[usize], gap: Gap) -> Vec<bool> {
    let mut bits = Vec::new();
    for &t in blocks {
        bits.extend(std::iter::repeat_n(true, t));
        bits.extend(std::iter::repeat_n(false, gap.width()));
    }
    bits
}

/// Distinct `k`-subsets of the `n`-cycle whose runs are separated by gaps of
/// exactly `gap`, grouped by the partition formed by their run lengths.
///
/// Enumerates compositions of `k` into runs, lays them around the cycle, and
/// collapses rotations through their least rotation.
pub fn cycle_block_breakdown(n: usize, k: usize, gap: Gap) -> Vec<(Partition, Count)> {
    let Some(b) = block_count(n, k, gap) else {
        return Vec::new();
    };
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let mut by_partition: HashMap<Partition, usize> = HashMap::new();
    for comp in compositions(k, b) {
        let bits = lay_blocks(&comp, gap);
        let canon = least_rotation(&bits);
        if seen.insert(canon) {
            *by_partition.entry(Partition::new(comp)).or_default() += rotation_orbit(&bits);
        }
    }
    let mut out: Vec<(Partition, Count)> = by_partition
        .into_iter()
        .map(|(p, c)| (p, Count::from(c)))
        .collect();
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// Total of [`cycle_block_breakdown`].
pub fn cycle_block_count(n: usize, k: usize, gap: Gap) -> Count {
    cycle_block_breakdown(n, k, gap).into_iter().map(|(_, c)| c).sum()
}

/// Same count as [`cycle_block_count`] without enumeration.
///
/// Pairs (subset, marked run) number `n * C(k-1, b-1)`: place the marked
/// run's first vertex, then pick the run lengths in cyclic order starting
/// from it. Each subset has exactly `b` runs.
pub fn cycle_block_count_by_rotation(n: usize, k: usize, gap: Gap) -> Count {
    let Some(b) = block_count(n, k, gap) else {
        return Count::zero();
    };
    let pairs = binomial(k as i64 - 1, b as i64 - 1) * n;
    let (q, r) = pairs.div_rem(&Count::from(b));
    debug_assert!(r.is_zero());
    q
}

/// Which of the two run families of the cycle theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleFamily {
    /// Runs separated by one vertex; `n - k` runs.
    A,
    /// Runs separated by two vertices; `(n - k) / 2` runs.
    B,
}

impl CycleFamily {
    pub fn gap(self) -> Gap {
        match self {
            CycleFamily::A => Gap::One,
            CycleFamily::B => Gap::Two,
        }
    }
}

/// Smallest part allowed when summing over partitions for family B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockParts {
    Positive,
    NonNegative,
}

/// Family size as the published partition sum, kept as an exact rational.
///
/// For each partition of `k` into the number of runs `b`, the summand is
/// `(1/b) * b! / (m_1! m_2! ...)` where the `m_i` are the multiplicities of
/// the distinct part values. That is the multinomial with a header equal to
/// the number of runs, which is the only reading under which the header and
/// the lower entries sum to the same value. (`1/(n-k)` for family A and
/// `2/(n-k)` for family B are both `1/b`.)
pub fn paper_family_size(n: usize, k: usize, family: CycleFamily, parts: BlockParts) -> Result<BigRational> {
    if n < 3 || k == 0 || k > n {
        return Err(Error::Domain(format!("no cycle family for n = {n}, k = {k}")));
    }
    let unchosen = n - k;
    if unchosen == 0 {
        return Err(Error::Domain("n - k = 0: the 1/(n-k) prefactor is undefined".into()));
    }
    let b = match family {
        CycleFamily::A => unchosen,
        CycleFamily::B if unchosen.is_multiple_of(2) => unchosen / 2,
        CycleFamily::B => {
            return Err(Error::Domain(format!("family B needs n - k even, got {unchosen}")))
        }
    };
    let min_part = match (family, parts) {
        (CycleFamily::B, BlockParts::NonNegative) => 0,
        _ => 1,
    };
    let mut total = BigRational::zero();
    let b_big = BigInt::from(b);
    for p in partitions(k, b, min_part) {
        total += BigRational::new(BigInt::from(p.arrangements()), b_big.clone());
    }
    Ok(total)
}

/// `d_f(C_n, k)` as `n * (|A| + |B|)` following the published parity/size
/// case split. Errors when the value is undefined or fails to be an integer.
pub fn paper_cycle_formula(n: usize, k: usize, parts: BlockParts) -> Result<Count> {
    if n < 3 || k == 0 || k > n {
        return Err(Error::Domain(format!("no cycle formula for n = {n}, k = {k}")));
    }
    let even = (n - k).is_multiple_of(2);
    let small = n <= 2 * k;
    let families: &[CycleFamily] = match (even, small) {
        (true, true) => &[CycleFamily::A, CycleFamily::B],
        (true, false) => &[CycleFamily::B],
        (false, true) => &[CycleFamily::A],
        (false, false) => &[],
    };
    let mut sum = BigRational::zero();
    for &f in families {
        sum += paper_family_size(n, k, f, parts)?;
    }
    let value = sum * BigRational::from_integer(BigInt::from(n));
    if !value.is_integer() {
        return Err(Error::Domain(format!("n(|A|+|B|) = {value} is not an integer")));
    }
    value
        .to_integer()
        .to_biguint()
        .ok_or_else(|| Error::Domain("negative family size".into()))
}

/// `C(k-1, m-1)`: compositions of `k` into `m` positive parts.
pub fn composition_count(k: usize, m: usize) -> Count {
    if m == 0 {
        return if k == 0 { Count::one() } else { Count::zero() };
    }
    binomial(k as i64 - 1, m as i64 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    /// Subsets of Z_n whose runs are all separated by exactly `gap` unchosen
    /// vertices, by scanning all bit masks.
    fn brute_block_subsets(n: usize, k: usize, gap: usize) -> u64 {
        let mut count = 0;
        for m in 0u64..1 << n {
            if m.count_ones() as usize != k || k == n {
                continue;
            }
            let bit = |i: usize| (m >> (i % n)) & 1 == 1;
            // measure every maximal run of zeros
            let start = (0..n).find(|&i| bit(i) && !bit(i + n - 1)).unwrap();
            let mut ok = true;
            let mut zeros = 0;
            for i in start..start + n {
                if bit(i) {
                    if zeros > 0 && zeros != gap {
                        ok = false;
                    }
                    zeros = 0;
                } else {
                    zeros += 1;
                }
            }
            if zeros > 0 && zeros != gap {
                ok = false;
            }
            if ok {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(5, 2), c(10));
        assert_eq!(binomial(3, -1), c(0));
        assert_eq!(binomial(4, 2), c(6));
        assert_eq!(binomial(-2, 1), c(0));
        assert_eq!(binomial(2, 3), c(0));
        // sum_{i} C(5-i, 5-3i) over i = 1..5
        let s: Count = (1..=5).map(|i| binomial(5 - i, 5 - 3 * i)).sum();
        assert_eq!(s, c(6));
    }

    #[test]
    fn binomial_symmetry_and_pascal() {
        for n in 0..=40i64 {
            for r in 0..=n {
                assert_eq!(binomial(n, r), binomial(n, n - r));
                if n > 0 {
                    assert_eq!(binomial(n, r), binomial(n - 1, r - 1) + binomial(n - 1, r));
                }
            }
        }
    }

    #[test]
    fn large_arguments_are_exact() {
        assert_eq!(binomial(200, 100).to_string(), "90548514656103281165404177077484163874504589675413336841320");
        assert_eq!(factorial(25).to_string(), "15511210043330985984000000");
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(4, &[1, 1, 1, 1]).unwrap(), c(24));
        assert_eq!(multinomial(2, &[1, 1]).unwrap(), c(2));
        assert_eq!(multinomial(4, &[2, 2]).unwrap(), c(6));
        assert_eq!(multinomial(0, &[]).unwrap(), c(1));
        assert!(matches!(multinomial(4, &[1, 1]), Err(Error::Domain(_))));
        assert_eq!(
            multinomial(12, &[3, 4, 5]).unwrap(),
            factorial(12) / (factorial(3) * factorial(4) * factorial(5))
        );
    }

    #[test]
    fn partition_examples() {
        let p = |k, m, min| -> Vec<Vec<usize>> {
            partitions(k, m, min).into_iter().map(|p| p.parts().to_vec()).collect()
        };
        assert_eq!(p(4, 2, 1), vec![vec![3, 1], vec![2, 2]]);
        assert_eq!(p(4, 4, 1), vec![vec![1, 1, 1, 1]]);
        assert!(p(3, 5, 1).is_empty());
        assert_eq!(p(2, 2, 0), vec![vec![2, 0], vec![1, 1]]);
        assert_eq!(p(0, 0, 1), vec![Vec::<usize>::new()]);
        assert_eq!(Partition::new(vec![1, 3, 1]).to_string(), "3+1+1");
    }

    #[test]
    fn partition_arrangements_sum_to_composition_count() {
        for k in 1..=12 {
            for m in 1..=12 {
                let total: Count = partitions(k, m, 1).iter().map(|p| p.arrangements()).sum();
                assert_eq!(total, composition_count(k, m), "k={k} m={m}");
                assert_eq!(Count::from(compositions(k, m).len()), total);
            }
        }
    }

    #[test]
    fn partitions_are_canonical_and_distinct() {
        for k in 0..=14 {
            for m in 1..=8 {
                for min in [0, 1] {
                    let ps = partitions(k, m, min);
                    let mut sorted = ps.clone();
                    sorted.sort();
                    sorted.dedup();
                    assert_eq!(sorted.len(), ps.len());
                    for p in &ps {
                        assert_eq!(p.sum(), k);
                        assert_eq!(p.len(), m);
                        assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
                        assert!(p.parts().iter().all(|&x| x >= min));
                    }
                }
            }
        }
    }

    #[test]
    fn least_rotation_is_minimal() {
        for n in 1..=10usize {
            for m in 0u32..1 << n {
                let bits: Vec<bool> = (0..n).map(|i| (m >> i) & 1 == 1).collect();
                let best = (0..n)
                    .map(|r| (0..n).map(|i| bits[(i + r) % n]).collect::<Vec<_>>())
                    .min()
                    .unwrap();
                assert_eq!(least_rotation(&bits), best);
            }
        }
    }

    #[test]
    fn cycle_block_examples() {
        let breakdown = cycle_block_breakdown(8, 4, Gap::Two);
        let shown: Vec<(String, Count)> = breakdown.iter().map(|(p, c)| (p.to_string(), c.clone())).collect();
        assert_eq!(shown, vec![("3+1".to_string(), c(8)), ("2+2".to_string(), c(4))]);
        assert_eq!(cycle_block_count(8, 4, Gap::Two), c(12));
        assert_eq!(cycle_block_count(8, 4, Gap::One), c(2));
        assert_eq!(cycle_block_count(6, 3, Gap::One), c(2));
        assert_eq!(cycle_block_count(6, 3, Gap::Two), c(0));
        assert_eq!(cycle_block_count(9, 9, Gap::One), c(0));
    }

    #[test]
    fn cycle_blocks_match_bit_scan() {
        for n in 3..=14 {
            for k in 1..n {
                for gap in [Gap::One, Gap::Two] {
                    let want = c(brute_block_subsets(n, k, gap.width()));
                    assert_eq!(cycle_block_count(n, k, gap), want, "n={n} k={k} {gap:?}");
                }
            }
        }
    }

    #[test]
    fn rotation_identity_matches_enumeration() {
        for n in 3..=22 {
            for k in 1..n {
                for gap in [Gap::One, Gap::Two] {
                    assert_eq!(
                        cycle_block_count_by_rotation(n, k, gap),
                        cycle_block_count(n, k, gap),
                        "n={n} k={k} {gap:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn literal_formula_worked_example() {
        let a = paper_family_size(8, 4, CycleFamily::A, BlockParts::Positive).unwrap();
        let b = paper_family_size(8, 4, CycleFamily::B, BlockParts::Positive).unwrap();
        assert_eq!(a * BigRational::from_integer(8.into()), BigRational::from_integer(2.into()));
        assert_eq!(b * BigRational::from_integer(8.into()), BigRational::from_integer(12.into()));
        assert_eq!(paper_cycle_formula(8, 4, BlockParts::Positive).unwrap(), c(14));
        // admitting empty runs in family B adds the partition 4+0 and breaks the example
        assert_eq!(paper_cycle_formula(8, 4, BlockParts::NonNegative).unwrap(), c(22));
    }

    #[test]
    fn paper_formula_edge_cases() {
        assert_eq!(paper_cycle_formula(9, 3, BlockParts::Positive).unwrap(), c(3));
        // n = 2k: family A alone is the two alternating sets
        let a = paper_family_size(10, 5, CycleFamily::A, BlockParts::Positive).unwrap();
        assert_eq!(a * BigRational::from_integer(10.into()), BigRational::from_integer(2.into()));
        assert!(paper_cycle_formula(7, 7, BlockParts::Positive).is_err());
        assert!(paper_family_size(7, 4, CycleFamily::B, BlockParts::Positive).is_err());
        // n - k odd and n > 2k
        assert_eq!(paper_cycle_formula(9, 2, BlockParts::Positive).unwrap(), c(0));
    }
}
