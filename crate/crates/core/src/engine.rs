//! Brute-force oracle for fair dominating sets.
//!
//! Subsets are generated by fixed-cardinality combination search in
//! increasing vertex order. A partial choice is abandoned as soon as the
//! vertices still available cannot dominate what is left undominated;
//! fairness itself is only tested on complete sets, since a superset of a
//! fair set need not be fair.
//!
//! The search space is split into strata by the first one or two chosen
//! vertices. Strata are independent, so with the `parallel` feature they are
//! spread over a rayon pool; results are merged in stratum order and are
//! identical for every worker count.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::poly::{Count, FairDomPolynomial};

/// Default upper bound on the order of graphs the oracle will enumerate.
pub const DEFAULT_CAP: usize = 28;

/// Outcome of testing one vertex set for fair domination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fairness {
    /// Some vertex outside the set has no neighbor in it.
    NotDominating,
    /// Dominating, but outside vertices see different numbers of set members.
    NotFair,
    /// Every outside vertex has exactly `k >= 1` neighbors in the set.
    FairWith(usize),
    /// The set is the whole vertex set; the fairness condition is vacuous.
    VacuouslyFair,
}

impl Fairness {
    /// True for `FairWith(_)` and `VacuouslyFair`.
    pub fn is_fair(self) -> bool {
        matches!(self, Fairness::FairWith(_) | Fairness::VacuouslyFair)
    }

    /// True when the set is a `k`-fair dominating set (the full vertex set
    /// qualifies for every `k`).
    pub fn is_k_fair(self, k: usize) -> bool {
        match self {
            Fairness::FairWith(j) => j == k,
            Fairness::VacuouslyFair => true,
            _ => false,
        }
    }
}

/// Classifies `d` as a (fair) dominating set of `g`.
pub fn classify(g: &Graph, d: VertexSet) -> Result<Fairness> {
    if !d.is_subset(g.vertices()) {
        return Err(Error::Input(format!(
            "set {d:?} has members outside 0..{}",
            g.order()
        )));
    }
    Ok(classify_unchecked(g.adjacency(), g.vertices(), d))
}

#[inline]
fn classify_unchecked(adj: &[VertexSet], all: VertexSet, d: VertexSet) -> Fairness {
    let outside = all.difference(d);
    let mut iter = outside.iter();
    let Some(first) = iter.next() else {
        return Fairness::VacuouslyFair;
    };
    let k = adj[first].intersection(d).len();
    if k == 0 {
        return Fairness::NotDominating;
    }
    let mut fair = true;
    for v in iter {
        let c = adj[v].intersection(d).len();
        if c == 0 {
            return Fairness::NotDominating;
        }
        fair &= c == k;
    }
    if fair {
        Fairness::FairWith(k)
    } else {
        Fairness::NotFair
    }
}

/// Precomputed tables shared by every search over one graph.
struct SearchCtx<'g> {
    n: usize,
    all: VertexSet,
    adj: &'g [VertexSet],
    closed: Vec<VertexSet>,
    /// `suffix_cover[j]` = union of closed neighborhoods of vertices `>= j`.
    suffix_cover: Vec<VertexSet>,
    /// `suffix_reach[j]` = largest closed-neighborhood size among vertices `>= j`.
    suffix_reach: Vec<usize>,
}

impl<'g> SearchCtx<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        let adj = g.adjacency();
        let closed: Vec<_> = (0..n)
            .map(|v| adj[v].union(VertexSet::singleton(v)))
            .collect();
        let mut suffix_cover = vec![VertexSet::EMPTY; n + 1];
        let mut suffix_reach = vec![0; n + 1];
        for v in (0..n).rev() {
            suffix_cover[v] = suffix_cover[v + 1].union(closed[v]);
            suffix_reach[v] = suffix_reach[v + 1].max(closed[v].len());
        }
        SearchCtx {
            n,
            all: g.vertices(),
            adj,
            closed,
            suffix_cover,
            suffix_reach,
        }
    }

    /// Can `remaining` more picks from `next..n` still dominate everything?
    #[inline]
    fn feasible(&self, dominated: VertexSet, next: usize, remaining: usize) -> bool {
        let undominated = self.all.difference(dominated);
        if undominated.is_empty() {
            return true;
        }
        if remaining == 0 || !undominated.is_subset(self.suffix_cover[next]) {
            return false;
        }
        undominated.len() <= remaining * self.suffix_reach[next]
    }

    /// Visits every dominating `target`-subset extending `chosen` with
    /// vertices `>= next`.
    fn search<F>(
        &self,
        chosen: VertexSet,
        dominated: VertexSet,
        next: usize,
        target: usize,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(VertexSet) -> ControlFlow<()>,
    {
        let remaining = target - chosen.len();
        if remaining == 0 {
            return if dominated == self.all {
                visit(chosen)
            } else {
                ControlFlow::Continue(())
            };
        }
        if !self.feasible(dominated, next, remaining) {
            return ControlFlow::Continue(());
        }
        for v in next..=self.n - remaining {
            let mut with = chosen;
            with.insert(v);
            self.search(with, dominated.union(self.closed[v]), v + 1, target, visit)?;
        }
        ControlFlow::Continue(())
    }

    /// Visits every dominating subset (any size) whose members below `next`
    /// are exactly `chosen`, including `chosen` itself.
    fn search_all<F>(&self, chosen: VertexSet, dominated: VertexSet, next: usize, visit: &mut F)
    where
        F: FnMut(VertexSet),
    {
        if dominated == self.all {
            visit(chosen);
        } else if !dominated.union(self.suffix_cover[next]).eq(&self.all) {
            return;
        }
        for v in next..self.n {
            let mut with = chosen;
            with.insert(v);
            self.search_all(with, dominated.union(self.closed[v]), v + 1, visit);
        }
    }

    /// Prefixes that partition the `target`-subsets: all chosen prefixes of
    /// length `min(target, 2)`, each paired with the next free index.
    fn strata(&self, target: usize) -> Vec<(VertexSet, VertexSet, usize)> {
        let depth = target.min(2);
        let mut out = Vec::new();
        match depth {
            0 => out.push((VertexSet::EMPTY, VertexSet::EMPTY, 0)),
            1 => {
                for a in 0..=self.n - target {
                    out.push((VertexSet::singleton(a), self.closed[a], a + 1));
                }
            }
            _ => {
                for a in 0..=self.n - target {
                    for b in a + 1..=self.n - target + 1 {
                        let s = VertexSet::singleton(a).union(VertexSet::singleton(b));
                        out.push((s, self.closed[a].union(self.closed[b]), b + 1));
                    }
                }
            }
        }
        out
    }
}

/// Configurable oracle: enumeration cap and worker count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Engine {
    cap: usize,
    workers: Option<usize>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            cap: DEFAULT_CAP,
            workers: None,
        }
    }
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Single-threaded engine, regardless of the `parallel` feature.
    pub fn sequential() -> Self {
        Engine {
            workers: Some(1),
            ..Self::default()
        }
    }

    /// Raises or lowers the cap; anything above 64 is rejected.
    pub fn with_cap(mut self, cap: usize) -> Result<Self> {
        if cap > MAX_VERTICES {
            return Err(Error::Capacity {
                n: cap,
                cap: MAX_VERTICES,
            });
        }
        self.cap = cap;
        Ok(self)
    }

    /// Number of worker threads; `0` means the rayon default.
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = (workers > 0).then_some(workers);
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn workers(&self) -> Option<usize> {
        self.workers
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if g.order() > self.cap {
            Err(Error::Capacity {
                n: g.order(),
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    fn check_size(g: &Graph, i: usize) -> Result<()> {
        if i > g.order() {
            Err(Error::Input(format!(
                "cardinality {i} exceeds the order {}",
                g.order()
            )))
        } else {
            Ok(())
        }
    }

    /// Applies `f` to every item, in parallel when enabled, preserving order.
    fn map_strata<S, T, F>(&self, items: &[S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&S) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            match self.workers {
                Some(1) => items.iter().map(f).collect(),
                Some(w) => match rayon::ThreadPoolBuilder::new().num_threads(w).build() {
                    Ok(pool) => pool.install(|| items.par_iter().map(f).collect()),
                    Err(_) => items.iter().map(f).collect(),
                },
                None => items.par_iter().map(f).collect(),
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            items.iter().map(f).collect()
        }
    }

    /// Number of fair dominating sets of size `i`.
    pub fn count_fd(&self, g: &Graph, i: usize) -> Result<Count> {
        self.check(g)?;
        Self::check_size(g, i)?;
        let ctx = SearchCtx::new(g);
        let strata = ctx.strata(i);
        let counts = self.map_strata(&strata, |&(chosen, dominated, next)| {
            let mut c = 0u64;
            let _ = ctx.search(chosen, dominated, next, i, &mut |d| {
                if classify_unchecked(ctx.adj, ctx.all, d).is_fair() {
                    c += 1;
                }
                ControlFlow::Continue(())
            });
            c
        });
        Ok(counts.into_iter().map(Count::from).sum())
    }

    /// All fair dominating sets of size `i`, in lexicographic order of their
    /// sorted members.
    pub fn enumerate_fd(&self, g: &Graph, i: usize) -> Result<Vec<VertexSet>> {
        self.check(g)?;
        Self::check_size(g, i)?;
        let ctx = SearchCtx::new(g);
        let strata = ctx.strata(i);
        let chunks = self.map_strata(&strata, |&(chosen, dominated, next)| {
            let mut found = Vec::new();
            let _ = ctx.search(chosen, dominated, next, i, &mut |d| {
                if classify_unchecked(ctx.adj, ctx.all, d).is_fair() {
                    found.push(d);
                }
                ControlFlow::Continue(())
            });
            found
        });
        let mut all: Vec<VertexSet> = chunks.into_iter().flatten().collect();
        all.sort_unstable_by(|a, b| a.iter().cmp(b.iter()));
        Ok(all)
    }

    /// Fair domination polynomial from a single pass over all dominating sets.
    pub fn fd_polynomial(&self, g: &Graph) -> Result<FairDomPolynomial> {
        self.check(g)?;
        let ctx = SearchCtx::new(g);
        let n = ctx.n;
        let firsts: Vec<usize> = (0..n).collect();
        let partials = self.map_strata(&firsts, |&a| {
            let mut counts = vec![0u64; n + 1];
            ctx.search_all(VertexSet::singleton(a), ctx.closed[a], a + 1, &mut |d| {
                if classify_unchecked(ctx.adj, ctx.all, d).is_fair() {
                    counts[d.len()] += 1;
                }
            });
            counts
        });
        let mut dense = vec![0u64; n + 1];
        // the empty set is fair only on the empty graph
        if n == 0 {
            dense[0] = 1;
        }
        for part in partials {
            for (acc, c) in dense.iter_mut().zip(part) {
                *acc += c;
            }
        }
        Ok(FairDomPolynomial::from_dense(n, dense.into_iter().map(Count::from)))
    }

    /// Does some `i`-subset satisfy `pred`? Searches strata in order and
    /// stops at the first hit.
    fn exists(&self, g: &Graph, i: usize, pred: impl Fn(VertexSet) -> bool + Sync) -> bool {
        let ctx = SearchCtx::new(g);
        let strata = ctx.strata(i);
        let hits = self.map_strata(&strata, |&(chosen, dominated, next)| {
            ctx.search(chosen, dominated, next, i, &mut |d| {
                if pred(d) {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })
            .is_break()
        });
        hits.into_iter().any(|h| h)
    }

    /// Fair domination number `fd(G)`; `n` for the edgeless graph.
    pub fn fd_number(&self, g: &Graph) -> Result<usize> {
        self.check(g)?;
        let adj = g.adjacency();
        let all = g.vertices();
        Ok((1..=g.order())
            .find(|&i| self.exists(g, i, |d| classify_unchecked(adj, all, d).is_fair()))
            .unwrap_or(g.order()))
    }

    /// Smallest `k`-fair dominating set; the whole vertex set always qualifies.
    pub fn fd_k_number(&self, g: &Graph, k: usize) -> Result<usize> {
        if k == 0 {
            return Err(Error::Input("fairness constant k must be positive".into()));
        }
        self.check(g)?;
        let adj = g.adjacency();
        let all = g.vertices();
        Ok((1..g.order())
            .find(|&i| self.exists(g, i, |d| classify_unchecked(adj, all, d).is_k_fair(k)))
            .unwrap_or(g.order()))
    }

    /// Domination number `γ(G)`.
    pub fn gamma(&self, g: &Graph) -> Result<usize> {
        self.check(g)?;
        Ok((1..=g.order())
            .find(|&i| self.exists(g, i, |_| true))
            .unwrap_or(g.order()))
    }
}
