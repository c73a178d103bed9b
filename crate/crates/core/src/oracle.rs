//! Exhaustive ground truth for small instances.
//!
//! `f(p, n, t)` is the largest `min_star_colors(c, n)` over all `t`-colorings
//! `c` of `K_p`; then `R_{s,t}(K_{1,n}) <= p` exactly when `f(p, n, t) <= s`.
//! The search assigns colors to edges in lexicographic order. Two prunings
//! keep it small:
//!
//! * canonical color introduction: color `c` may be used only once colors
//!   `1..c-1` have appeared, which quotients out the `t!` relabelings;
//! * branch and bound: at each vertex the remaining uncolored edges are
//!   spread over its smallest color classes, which minimises every top-`k`
//!   sum at once and so bounds that vertex's final star color count from
//!   above. A node whose bound cannot beat the incumbent is cut.
//!
//! The tree is split at a fixed depth into independent subtrees. Each
//! subtree keeps its own incumbent (seeded from the same deterministic
//! coloring), so results and node counts do not depend on the thread count.

use rayon::prelude::*;

use crate::constructions::{
    balanced_class_sizes, partitioned_factorization_coloring, trivial_cycle_coloring,
};
use crate::error::{invalid, Error, Result};
use crate::graph::{edge_count, edges_of};
use crate::verify::{min_star_colors, StarColors};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `p(p-1)/2` the oracle will search.
    pub edge_budget: usize,
    /// Largest color count the oracle will search.
    pub max_colors: usize,
    /// Worker threads; 0 uses the global rayon pool.
    pub threads: usize,
    /// Edges fixed before the tree is split into parallel subtrees.
    pub split_depth: usize,
    pub canonical_colors: bool,
    pub branch_and_bound: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            edge_budget: 21,
            max_colors: 4,
            threads: 0,
            split_depth: 6,
            canonical_colors: true,
            branch_and_bound: true,
        }
    }
}

impl OracleConfig {
    /// Full enumeration with both prunings off.
    pub fn plain() -> Self {
        OracleConfig {
            canonical_colors: false,
            branch_and_bound: false,
            ..Self::default()
        }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
    /// Branches skipped by the canonical color-introduction rule.
    pub canonical_prunes: u64,
    /// Nodes cut by the bound.
    pub bound_prunes: u64,
    pub subtrees: u64,
}

impl SearchStats {
    fn add(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.leaves += other.leaves;
        self.canonical_prunes += other.canonical_prunes;
        self.bound_prunes += other.bound_prunes;
        self.subtrees += other.subtrees;
    }
}

/// Search state: per-vertex color counts for the assigned prefix.
#[derive(Clone)]
struct State {
    n: usize,
    t: usize,
    edges: Vec<(usize, usize)>,
    counts: Vec<u16>,
    remaining: Vec<u16>,
    colors_used: usize,
    canonical: bool,
    bound: bool,
    cap: usize,
    stop_above: Option<usize>,
}

impl State {
    fn new(p: usize, n: usize, t: usize, config: &OracleConfig, stop_above: Option<usize>) -> Self {
        let edges: Vec<(usize, usize)> = edges_of(p)
            .map(|e| (e.u().index() - 1, e.v().index() - 1))
            .collect();
        State {
            n,
            t,
            edges,
            counts: vec![0; p * t],
            remaining: vec![p.saturating_sub(1) as u16; p],
            colors_used: 0,
            canonical: config.canonical_colors,
            bound: config.branch_and_bound,
            cap: if config.branch_and_bound {
                n.min(t)
            } else {
                usize::MAX
            },
            stop_above,
        }
    }

    fn assign(&mut self, edge: usize, c: usize) {
        let (u, v) = self.edges[edge];
        self.counts[u * self.t + c] += 1;
        self.counts[v * self.t + c] += 1;
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
    }

    fn unassign(&mut self, edge: usize, c: usize) {
        let (u, v) = self.edges[edge];
        self.counts[u * self.t + c] -= 1;
        self.counts[v * self.t + c] -= 1;
        self.remaining[u] += 1;
        self.remaining[v] += 1;
    }

    /// Largest star color count vertex `v` can still reach.
    fn vertex_bound(&self, v: usize, scratch: &mut [u16]) -> usize {
        scratch.copy_from_slice(&self.counts[v * self.t..(v + 1) * self.t]);
        for _ in 0..self.remaining[v] {
            let min = scratch.iter_mut().min().expect("at least one color");
            *min += 1;
        }
        top_k_reach(scratch, self.n)
    }

    fn leaf_value(&self, scratch: &mut [u16]) -> usize {
        let p = self.remaining.len();
        (0..p)
            .map(|v| {
                scratch.copy_from_slice(&self.counts[v * self.t..(v + 1) * self.t]);
                top_k_reach(scratch, self.n)
            })
            .min()
            .unwrap_or(usize::MAX)
    }

    fn upper_bound(&self, scratch: &mut [u16]) -> usize {
        let p = self.remaining.len();
        (0..p)
            .map(|v| self.vertex_bound(v, scratch))
            .min()
            .unwrap_or(usize::MAX)
    }

    fn done(&self, best: usize) -> bool {
        best >= self.cap || self.stop_above.is_some_and(|s| best > s)
    }

    fn dfs(&mut self, edge: usize, best: &mut usize, stats: &mut SearchStats, scratch: &mut [u16]) {
        stats.nodes += 1;
        if edge == self.edges.len() {
            stats.leaves += 1;
            let value = self.leaf_value(scratch);
            if value > *best {
                *best = value;
            }
            return;
        }
        if self.bound && self.upper_bound(scratch) <= *best {
            stats.bound_prunes += 1;
            return;
        }
        for c in 0..self.t {
            if self.done(*best) {
                return;
            }
            if self.canonical && c > self.colors_used {
                stats.canonical_prunes += (self.t - c) as u64;
                break;
            }
            let prev_used = self.colors_used;
            self.colors_used = self.colors_used.max(c + 1);
            self.assign(edge, c);
            self.dfs(edge + 1, best, stats, scratch);
            self.unassign(edge, c);
            self.colors_used = prev_used;
        }
    }

    /// All canonical prefixes of length `depth`.
    fn prefixes(&mut self, depth: usize, stats: &mut SearchStats) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(depth);
        self.collect_prefixes(depth, &mut current, &mut out, stats);
        out
    }

    fn collect_prefixes(
        &mut self,
        depth: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        stats: &mut SearchStats,
    ) {
        let edge = current.len();
        if edge == depth {
            out.push(current.clone());
            return;
        }
        stats.nodes += 1;
        for c in 0..self.t {
            if self.canonical && c > self.colors_used {
                stats.canonical_prunes += (self.t - c) as u64;
                break;
            }
            let prev_used = self.colors_used;
            self.colors_used = self.colors_used.max(c + 1);
            self.assign(edge, c);
            current.push(c);
            self.collect_prefixes(depth, current, out, stats);
            current.pop();
            self.unassign(edge, c);
            self.colors_used = prev_used;
        }
    }

    fn replay(&mut self, prefix: &[usize]) {
        for (edge, &c) in prefix.iter().enumerate() {
            self.colors_used = self.colors_used.max(c + 1);
            self.assign(edge, c);
        }
    }
}

/// Least `k` such that the `k` largest entries reach `n`; sorts in place.
fn top_k_reach(degrees: &mut [u16], n: usize) -> usize {
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let mut covered = 0usize;
    for (k, &d) in degrees.iter().enumerate() {
        covered += d as usize;
        if covered >= n {
            return k + 1;
        }
    }
    usize::MAX
}

fn check_budget(p: usize, t: usize, config: &OracleConfig) -> Result<()> {
    if t == 0 {
        return Err(invalid("need at least one color"));
    }
    if edge_count(p) > config.edge_budget {
        return Err(Error::Infeasible(format!(
            "K_{p} has {} edges, over the edge budget of {}",
            edge_count(p),
            config.edge_budget
        )));
    }
    if t > config.max_colors {
        return Err(Error::Infeasible(format!(
            "{t} colors exceed the color budget of {}",
            config.max_colors
        )));
    }
    Ok(())
}

/// Value of a fixed good coloring, used as every subtree's starting incumbent.
fn seed_value(p: usize, n: usize, t: usize) -> usize {
    let mut candidates = Vec::new();
    if let Ok(c) = trivial_cycle_coloring(p, t) {
        candidates.push(c);
    }
    if p >= 2 && p.is_multiple_of(2) {
        if let Ok(c) = partitioned_factorization_coloring(p, &balanced_class_sizes(p, t)) {
            candidates.push(c);
        }
    }
    candidates
        .iter()
        .filter_map(|c| match min_star_colors(c, n) {
            StarColors::Colors(k) => Some(k),
            StarColors::NoStar => None,
        })
        .max()
        .unwrap_or(1)
}

fn run<T: Send>(threads: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    if threads == 0 {
        return Ok(job());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| invalid(format!("thread pool: {e}")))?;
    Ok(pool.install(job))
}

fn search(
    p: usize,
    n: usize,
    t: usize,
    config: &OracleConfig,
    stop_above: Option<usize>,
) -> Result<(usize, SearchStats)> {
    let mut root = State::new(p, n, t, config, stop_above);
    let seed = if config.branch_and_bound {
        seed_value(p, n, t)
    } else {
        0
    };
    let depth = config.split_depth.min(root.edges.len());
    let mut stats = SearchStats::default();
    let prefixes = root.prefixes(depth, &mut stats);
    let results: Vec<(usize, SearchStats)> = run(config.threads, || {
        prefixes
            .par_iter()
            .map(|prefix| {
                let mut state = root.clone();
                state.replay(prefix);
                let mut best = seed;
                let mut local = SearchStats {
                    subtrees: 1,
                    ..SearchStats::default()
                };
                let mut scratch = vec![0u16; t];
                if !state.done(best) {
                    state.dfs(depth, &mut best, &mut local, &mut scratch);
                }
                (best, local)
            })
            .collect()
    })?;
    let mut value = seed;
    for (best, local) in &results {
        value = value.max(*best);
        stats.add(local);
    }
    Ok((value, stats))
}

/// Exact `f(p, n, t)`. Returns `NoStar` when `p - 1 < n`.
pub fn oracle_max_min_star_colors(
    p: usize,
    n: usize,
    t: usize,
    config: &OracleConfig,
) -> Result<(StarColors, SearchStats)> {
    if n == 0 {
        return Err(invalid("star size n must be at least 1"));
    }
    if p == 0 || p - 1 < n {
        return Ok((StarColors::NoStar, SearchStats::default()));
    }
    check_budget(p, t, config)?;
    let (value, stats) = search(p, n, t, config, None)?;
    Ok((StarColors::Colors(value), stats))
}

/// Decides `f(p, n, t) <= s`, stopping as soon as a coloring beats `s`.
pub fn oracle_exceeds(
    p: usize,
    n: usize,
    t: usize,
    s: usize,
    config: &OracleConfig,
) -> Result<(bool, SearchStats)> {
    if n == 0 {
        return Err(invalid("star size n must be at least 1"));
    }
    if p == 0 || p - 1 < n {
        return Ok((true, SearchStats::default()));
    }
    check_budget(p, t, config)?;
    let (value, stats) = search(p, n, t, config, Some(s))?;
    Ok((value > s, stats))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleOutcome {
    Value(usize),
    ExceedsMax(usize),
}

/// Smallest `p <= p_max` with `f(p, n, t) <= s`, trying `p = 1, 2, ...`.
pub fn oracle_ramsey(
    n: usize,
    t: usize,
    s: usize,
    p_max: usize,
    config: &OracleConfig,
) -> Result<(OracleOutcome, SearchStats)> {
    if s == 0 || s >= t {
        return Err(invalid(format!("need 1 <= s < t, got s={s}, t={t}")));
    }
    let mut total = SearchStats::default();
    for p in 1..=p_max {
        let (exceeds, stats) = oracle_exceeds(p, n, t, s, config)?;
        total.add(&stats);
        if !exceeds {
            return Ok((OracleOutcome::Value(p), total));
        }
    }
    Ok((OracleOutcome::ExceedsMax(p_max), total))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: usize, n: usize, t: usize) -> StarColors {
        oracle_max_min_star_colors(p, n, t, &OracleConfig::default())
            .unwrap()
            .0
    }

    #[test]
    fn max_min_examples() {
        assert_eq!(f(3, 2, 2), StarColors::Colors(1));
        // a 2-star never shows more than 2 colors; the proper coloring reaches that
        assert_eq!(f(4, 2, 3), StarColors::Colors(2));
        assert_eq!(f(4, 3, 4), StarColors::Colors(3));
        assert_eq!(f(3, 3, 2), StarColors::NoStar);
    }

    #[test]
    fn ramsey_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(
            oracle_ramsey(2, 2, 1, 6, &cfg).unwrap().0,
            OracleOutcome::Value(3)
        );
        assert_eq!(
            oracle_ramsey(2, 3, 1, 6, &cfg).unwrap().0,
            OracleOutcome::Value(5)
        );
        assert_eq!(
            oracle_ramsey(3, 4, 2, 5, &cfg).unwrap().0,
            OracleOutcome::Value(5)
        );
        assert_eq!(
            oracle_ramsey(3, 4, 2, 4, &cfg).unwrap().0,
            OracleOutcome::ExceedsMax(4)
        );
    }

    #[test]
    fn budgets_are_enforced() {
        let cfg = OracleConfig {
            edge_budget: 15,
            ..OracleConfig::default()
        };
        assert!(matches!(
            oracle_max_min_star_colors(7, 3, 2, &cfg),
            Err(Error::Infeasible(_))
        ));
        assert!(matches!(
            oracle_max_min_star_colors(4, 2, 5, &cfg),
            Err(Error::Infeasible(_))
        ));
    }
}
