//! Exhaustive computation of σ_q(G) and σ_f(G) for small graphs.
//!
//! Edge partitions are enumerated as restricted-growth strings (an edge may
//! only open color `used`, never skip one), so each partition is visited once
//! up to relabeling. A branch dies as soon as some palette exceeds its
//! capacity. Edges are processed in an order that keeps the set of partially
//! colored vertices small, and subproblems are memoized on that frontier: the
//! best completion only depends on the frontier palettes (up to relabeling)
//! and on how many colors are open.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{ColoringError, EdgeColoring, ValidityProfile};
use crate::graph::Graph;

pub const DEFAULT_EDGE_LIMIT: usize = 12;

/// Colors are tracked in `u64` masks.
const MAX_CLASSES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("graph has {edges} edges, above the oracle limit of {limit}")]
    EdgeLimit { edges: usize, limit: usize },
    #[error("exact search supports at most {MAX_CLASSES} color classes, graph has {0} edges")]
    TooManyClasses(usize),
    #[error(transparent)]
    Profile(#[from] ColoringError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaResult {
    pub sigma: usize,
    /// Valid under the profile, using exactly `sigma` colors.
    pub witness: EdgeColoring,
}

pub fn sigma_exact(
    g: &Graph,
    profile: &ValidityProfile,
    edge_limit: usize,
) -> Result<SigmaResult, OracleError> {
    admit(g, profile, edge_limit)?;
    if g.m() > MAX_CLASSES {
        return Err(OracleError::TooManyClasses(g.m()));
    }
    let mut search = Search::new(g, profile, g.m());
    let witness = search.run().expect("any graph has a valid monochromatic coloring");
    let sigma = witness.num_colors();
    if profile.max_capacity() <= 2 {
        assert!(sigma <= g.n(), "sigma {sigma} exceeds vertex count {}", g.n());
    }
    Ok(SigmaResult { sigma, witness })
}

/// Whether some valid coloring uses at least `k` colors.
pub fn sigma_threshold(
    g: &Graph,
    k: usize,
    profile: &ValidityProfile,
    edge_limit: usize,
) -> Result<bool, OracleError> {
    Ok(threshold_witness(g, k, profile, edge_limit)?.is_some())
}

/// A valid coloring with exactly `k` colors, if one exists. For `k == 0` this
/// is the trivial one-class coloring.
///
/// Merging color classes keeps a coloring valid, so capping the search at `k`
/// open classes loses nothing.
pub fn threshold_witness(
    g: &Graph,
    k: usize,
    profile: &ValidityProfile,
    edge_limit: usize,
) -> Result<Option<EdgeColoring>, OracleError> {
    admit(g, profile, edge_limit)?;
    if k > g.m() {
        return Ok(None);
    }
    if k == 0 {
        return Ok(Some(EdgeColoring::monochromatic(g.m())));
    }
    if k > MAX_CLASSES {
        return Err(OracleError::TooManyClasses(k));
    }
    let mut search = Search::new(g, profile, k);
    Ok(search.run().filter(|c| c.num_colors() == k))
}

fn admit(g: &Graph, profile: &ValidityProfile, edge_limit: usize) -> Result<(), OracleError> {
    profile.check(g)?;
    if g.m() > edge_limit {
        return Err(OracleError::EdgeLimit {
            edges: g.m(),
            limit: edge_limit,
        });
    }
    Ok(())
}

type Key = (usize, usize, Vec<u64>);

struct Search<'a> {
    g: &'a Graph,
    caps: Vec<u32>,
    order: Vec<usize>,
    /// `frontier[i]`: vertices with colored and uncolored edges once
    /// `order[..i]` is colored.
    frontier: Vec<Vec<usize>>,
    class_cap: usize,
    palettes: Vec<u64>,
    memo: BTreeMap<Key, Option<usize>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, profile: &ValidityProfile, class_cap: usize) -> Self {
        let caps = (0..g.n()).map(|v| profile.capacity(v) as u32).collect();
        let order = edge_order(g);
        let frontier = frontiers(g, &order);
        Search {
            g,
            caps,
            order,
            frontier,
            class_cap,
            palettes: vec![0; g.n()],
            memo: BTreeMap::new(),
        }
    }

    /// Best coloring with at most `class_cap` colors, `None` if nothing is
    /// valid (only possible under a cap of zero).
    fn run(&mut self) -> Option<EdgeColoring> {
        let target = self.best(0, 0)?;
        let m = self.order.len();
        let mut colors = vec![0; self.g.m()];
        let mut used = 0;
        let mut left = target;
        for i in 0..m {
            let e = self.order[i];
            let (u, v) = self.g.endpoints(e);
            let mut chosen = None;
            for c in self.candidates(i, used) {
                let gain = usize::from(c == used);
                if gain > left {
                    continue;
                }
                let (pu, pv) = (self.palettes[u], self.palettes[v]);
                self.palettes[u] |= 1 << c;
                self.palettes[v] |= 1 << c;
                let rest = self.best(i + 1, used + gain);
                if rest == Some(left - gain) {
                    chosen = Some(c);
                    break;
                }
                self.palettes[u] = pu;
                self.palettes[v] = pv;
            }
            let c = chosen.expect("memoized optimum is reproducible");
            colors[e] = c;
            if c == used {
                used += 1;
                left -= 1;
            }
        }
        Some(EdgeColoring::new(colors).expect("restricted growth colors are surjective"))
    }

    fn fits(&self, x: usize, c: usize) -> bool {
        let p = self.palettes[x];
        p & (1 << c) != 0 || p.count_ones() < self.caps[x]
    }

    /// Colors worth trying for `order[i]`: every open color already live on
    /// the frontier, plus one fresh color. A brand-new class dominates reusing
    /// a color nobody live carries, so the latter is only tried at the cap.
    fn candidates(&self, i: usize, used: usize) -> Vec<usize> {
        let (u, v) = self.g.endpoints(self.order[i]);
        let mut live = self.palettes[u] | self.palettes[v];
        for &x in &self.frontier[i] {
            live |= self.palettes[x];
        }
        let mut out: Vec<usize> = (0..used)
            .filter(|&c| live & (1 << c) != 0 && self.fits(u, c) && self.fits(v, c))
            .collect();
        let room = self.palettes[u].count_ones() < self.caps[u]
            && self.palettes[v].count_ones() < self.caps[v];
        if room {
            if used < self.class_cap {
                out.push(used);
            } else if let Some(c) = (0..used).find(|&c| live & (1 << c) == 0) {
                out.push(c);
            }
        }
        out
    }

    fn key(&self, i: usize, used: usize) -> Key {
        let mut relabel = [u8::MAX; MAX_CLASSES];
        let mut next = 0u8;
        let mut pals = Vec::with_capacity(self.frontier[i].len());
        for &x in &self.frontier[i] {
            let mut p = self.palettes[x];
            let mut q = 0u64;
            while p != 0 {
                let c = p.trailing_zeros() as usize;
                p &= p - 1;
                if relabel[c] == u8::MAX {
                    relabel[c] = next;
                    next += 1;
                }
                q |= 1 << relabel[c];
            }
            pals.push(q);
        }
        (i, used, pals)
    }

    /// Most classes that `order[i..]` can add on top of `used`, or `None` if
    /// no valid completion exists.
    fn best(&mut self, i: usize, used: usize) -> Option<usize> {
        if i == self.order.len() {
            return Some(0);
        }
        let key = self.key(i, used);
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let ceiling = (self.class_cap - used).min(self.order.len() - i);
        let (u, v) = self.g.endpoints(self.order[i]);
        let mut result: Option<usize> = None;
        for c in self.candidates(i, used) {
            let gain = usize::from(c == used);
            let (pu, pv) = (self.palettes[u], self.palettes[v]);
            self.palettes[u] |= 1 << c;
            self.palettes[v] |= 1 << c;
            let rest = self.best(i + 1, used + gain);
            self.palettes[u] = pu;
            self.palettes[v] = pv;
            if let Some(rest) = rest {
                let total = rest + gain;
                if result.is_none_or(|r| total > r) {
                    result = Some(total);
                }
                if total == ceiling {
                    break;
                }
            }
        }
        self.memo.insert(key, result);
        result
    }
}

/// Greedy order that grows one connected region at a time: prefer edges
/// touching already-colored vertices, then edges that finish a vertex.
fn edge_order(g: &Graph) -> Vec<usize> {
    let m = g.m();
    let mut placed = vec![false; m];
    let mut touched = vec![false; g.n()];
    let mut left: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let mut best: Option<(usize, usize)> = None;
        for (e, _) in placed.iter().enumerate().filter(|(_, &p)| !p) {
            let (u, v) = g.endpoints(e);
            let attach = usize::from(touched[u]) + usize::from(touched[v]);
            let closes = usize::from(left[u] == 1) + usize::from(left[v] == 1);
            // untouched components start from their highest-degree vertex
            let seed = if attach == 0 { g.degree(u).max(g.degree(v)) } else { 0 };
            let score = attach * 1_000_000 + closes * 100_000 + seed;
            if best.is_none_or(|(s, _)| score > s) {
                best = Some((score, e));
            }
        }
        let (_, e) = best.expect("an unplaced edge remains");
        let (u, v) = g.endpoints(e);
        placed[e] = true;
        touched[u] = true;
        touched[v] = true;
        left[u] -= 1;
        left[v] -= 1;
        order.push(e);
    }
    order
}

fn frontiers(g: &Graph, order: &[usize]) -> Vec<Vec<usize>> {
    let mut colored = vec![0usize; g.n()];
    let mut out = Vec::with_capacity(order.len() + 1);
    out.push(Vec::new());
    for &e in order {
        let (u, v) = g.endpoints(e);
        colored[u] += 1;
        colored[v] += 1;
        out.push(
            (0..g.n())
                .filter(|&x| colored[x] > 0 && colored[x] < g.degree(x))
                .collect(),
        );
    }
    out
}
