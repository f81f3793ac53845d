//! Kernelizations for the standard parameter (target k), the dual parameter
//! (deficit k below n) and C4-free inputs, with liftings that carry any
//! valid coloring of the reduced graph back to the original one.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::EdgeColoring;
use crate::graph::Graph;
use crate::matching::{matching_preprocess, Preprocess};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Reduced { graph: Graph, k: usize },
    /// A witness on the original graph.
    ForcedYes(EdgeColoring),
    ForcedNo,
}

/// One reduction step, in original vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftOp {
    /// `v` was removed while some survivor had the same neighborhood.
    Delete(usize),
    /// `v` had degree two with neighbors `u` and `via`; it was removed and the
    /// edge `u`–`via` added.
    Contract { v: usize, u: usize, via: usize },
    /// A cycle component, vertices in cycle order, was removed.
    DropCycle(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiftError {
    #[error("coloring has {found} entries but the reduced graph has {expected} edges")]
    WrongLength { expected: usize, found: usize },
    #[error("reduced graph has {found} vertices but the lifting expects {expected}")]
    WrongReducedSize { expected: usize, found: usize },
    #[error("original graph has {found} vertices but the lifting expects {expected}")]
    WrongOriginalSize { expected: usize, found: usize },
    #[error("deleted vertex {0} has no surviving twin")]
    NoTwin(usize),
    #[error("edge {0}-{1} is missing when undoing a contraction")]
    MissingEdge(usize, usize),
    #[error("lifted edges do not match the original graph")]
    EdgeMismatch,
}

/// The sequence of reduction steps applied to a graph on `original_n`
/// vertices. Survivors keep their relative order in the reduced graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lifting {
    pub original_n: usize,
    pub ops: Vec<LiftOp>,
}

impl Lifting {
    pub fn identity(n: usize) -> Self {
        Lifting {
            original_n: n,
            ops: Vec::new(),
        }
    }

    /// Original ids of the reduced graph's vertices, ascending.
    pub fn survivors(&self) -> Vec<usize> {
        let mut alive = vec![true; self.original_n];
        for op in &self.ops {
            match op {
                LiftOp::Delete(v) | LiftOp::Contract { v, .. } => alive[*v] = false,
                LiftOp::DropCycle(cycle) => cycle.iter().for_each(|&v| alive[v] = false),
            }
        }
        (0..self.original_n).filter(|&v| alive[v]).collect()
    }

    /// Turns a coloring of `reduced` into one of `original`.
    ///
    /// Deleted vertices copy the colors of a surviving twin, a contraction
    /// moves the color of `u`–`via` onto `v`–`via` and gives `u`–`v` a fresh
    /// color, and dropped cycles get fresh colors throughout. The result is
    /// valid whenever the input is, and gains one color per contraction and
    /// one per dropped cycle vertex.
    pub fn lift(
        &self,
        original: &Graph,
        reduced: &Graph,
        coloring: &EdgeColoring,
    ) -> Result<EdgeColoring, LiftError> {
        if original.n() != self.original_n {
            return Err(LiftError::WrongOriginalSize {
                expected: self.original_n,
                found: original.n(),
            });
        }
        let survivors = self.survivors();
        if reduced.n() != survivors.len() {
            return Err(LiftError::WrongReducedSize {
                expected: survivors.len(),
                found: reduced.n(),
            });
        }
        if coloring.len() != reduced.m() {
            return Err(LiftError::WrongLength {
                expected: reduced.m(),
                found: coloring.len(),
            });
        }
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let mut colored: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (e, &(a, b)) in reduced.edges().iter().enumerate() {
            colored.insert(key(survivors[a], survivors[b]), coloring.color(e));
        }
        let mut fresh = coloring.num_colors();
        let mut present = vec![false; self.original_n];
        survivors.iter().for_each(|&v| present[v] = true);
        for op in self.ops.iter().rev() {
            match op {
                LiftOp::Delete(v) => {
                    let twin = original
                        .neighbors(*v)
                        .next()
                        .map(|s| {
                            original
                                .neighbors(s)
                                .find(|&w| w != *v && present[w] && same_neighbors(original, *v, w))
                                .ok_or(LiftError::NoTwin(*v))
                        })
                        .transpose()?;
                    if let Some(w) = twin {
                        for s in original.neighbors(*v) {
                            let c = colored[&key(w, s)];
                            colored.insert(key(*v, s), c);
                        }
                    }
                    present[*v] = true;
                }
                LiftOp::Contract { v, u, via } => {
                    let c = colored
                        .remove(&key(*u, *via))
                        .ok_or(LiftError::MissingEdge(*u, *via))?;
                    colored.insert(key(*v, *via), c);
                    colored.insert(key(*u, *v), fresh);
                    fresh += 1;
                    present[*v] = true;
                }
                LiftOp::DropCycle(cycle) => {
                    for (i, &a) in cycle.iter().enumerate() {
                        let b = cycle[(i + 1) % cycle.len()];
                        colored.insert(key(a, b), fresh);
                        fresh += 1;
                        present[a] = true;
                    }
                }
            }
        }
        if colored.len() != original.m() {
            return Err(LiftError::EdgeMismatch);
        }
        let labels = original
            .edges()
            .iter()
            .map(|e| colored.get(e).copied().ok_or(LiftError::EdgeMismatch))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(EdgeColoring::relabeled(&labels))
    }
}

fn same_neighbors(g: &Graph, a: usize, b: usize) -> bool {
    g.neighbors(a).eq(g.neighbors(b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    pub verdict: Verdict,
    pub lifting: Lifting,
}

/// Vertices of I sharing the neighborhood `t` in the cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodClass {
    pub t: Vec<usize>,
    pub members: Vec<usize>,
}

/// Classes of the vertices outside `cover` (sorted) by neighborhood, ordered
/// by neighborhood. Only neighborhoods that occur are listed.
pub fn neighborhood_classes(g: &Graph, cover: &[usize]) -> Vec<NeighborhoodClass> {
    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in (0..g.n()).filter(|v| cover.binary_search(v).is_err()) {
        classes.entry(g.neighbors(v).collect()).or_default().push(v);
    }
    classes
        .into_iter()
        .map(|(t, members)| NeighborhoodClass { t, members })
        .collect()
}

/// Largest class size the standard kernel keeps for a neighborhood of size
/// `t`.
pub fn class_bound(t: usize) -> usize {
    10.max(t + 1)
}

fn preprocess(g: &Graph, k: usize) -> Result<Vec<usize>, KernelResult> {
    let verdict = match matching_preprocess(g, k) {
        Preprocess::ForcedNo => Verdict::ForcedNo,
        Preprocess::ForcedYes(w) => Verdict::ForcedYes(w),
        Preprocess::Continue(m) => return Ok(m.saturated().to_vec()),
    };
    Err(KernelResult {
        verdict,
        lifting: Lifting::identity(g.n()),
    })
}

/// Standard-parameter kernel: after matching preprocessing, keeps the
/// `max(10, |T| + 1)` lowest-id vertices of each neighborhood class.
pub fn kernelize_standard(g: &Graph, k: usize) -> KernelResult {
    let cover = match preprocess(g, k) {
        Ok(cover) => cover,
        Err(done) => return done,
    };
    let mut ops = Vec::new();
    for class in neighborhood_classes(g, &cover) {
        let keep = class_bound(class.t.len());
        ops.extend(class.members.iter().skip(keep).map(|&v| LiftOp::Delete(v)));
    }
    finish(g, k, ops)
}

/// Standard-parameter kernel bound for a cover of size `s`.
pub fn standard_size_bound(s: usize) -> usize {
    let classes = 1usize.checked_shl(s as u32).unwrap_or(usize::MAX);
    s.saturating_add(classes.saturating_mul(class_bound(s)))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("graph contains the 4-cycle {0:?}")]
    HasC4([usize; 4]),
}

/// Kernel for C4-free graphs: after matching preprocessing, each cover vertex
/// keeps at most two of its private (degree-one) neighbors outside the cover.
/// Isolated vertices are dropped.
pub fn kernelize_c4free(g: &Graph, k: usize) -> Result<KernelResult, KernelError> {
    if let Some(cycle) = has_c4(g) {
        return Err(KernelError::HasC4(cycle));
    }
    let cover = match preprocess(g, k) {
        Ok(cover) => cover,
        Err(done) => return Ok(done),
    };
    let outside = |v: &usize| cover.binary_search(v).is_err();
    let mut ops: Vec<LiftOp> = (0..g.n())
        .filter(|v| outside(v) && g.degree(*v) == 0)
        .map(LiftOp::Delete)
        .collect();
    for &v in &cover {
        let private = g.neighbors(v).filter(|z| outside(z) && g.degree(*z) == 1);
        ops.extend(private.skip(2).map(LiftOp::Delete));
    }
    Ok(finish(g, k, ops))
}

pub fn c4free_size_bound(k: usize) -> usize {
    2 * k * (2 * k + 2)
}

/// Some 4-cycle `[a, b, c, d]` (edges a-b, b-c, c-d, d-a), if any. Found as
/// the first pair of vertices with two common neighbors.
pub fn has_c4(g: &Graph) -> Option<[usize; 4]> {
    let mut middle: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for w in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(w).collect();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if let Some(&other) = middle.get(&(x, y)) {
                    return Some([x, other, y, w]);
                }
                middle.insert((x, y), w);
            }
        }
    }
    None
}

/// Mutable graph used by the dual kernel.
#[derive(Debug, Clone)]
struct WorkGraph {
    adj: Vec<BTreeSet<usize>>,
    alive: Vec<bool>,
}

impl WorkGraph {
    fn from_graph(g: &Graph) -> Self {
        WorkGraph {
            adj: (0..g.n()).map(|v| g.neighbors(v).collect()).collect(),
            alive: vec![true; g.n()],
        }
    }

    fn remove(&mut self, v: usize) {
        for w in core::mem::take(&mut self.adj[v]) {
            self.adj[w].remove(&v);
        }
        self.alive[v] = false;
    }

    /// The first contractible pair in ascending order of `u`, then `v`.
    fn r2_candidate(&self) -> Option<LiftOp> {
        for u in (0..self.adj.len()).filter(|&u| self.alive[u] && self.adj[u].len() == 2) {
            for &v in self.adj[u].iter().filter(|&&v| self.adj[v].len() == 2) {
                let via = *self.adj[v].iter().find(|&&w| w != u).expect("degree two");
                if !self.adj[u].contains(&via) {
                    return Some(LiftOp::Contract { v, u, via });
                }
            }
        }
        None
    }

    fn apply(&mut self, op: &LiftOp) {
        match op {
            LiftOp::Contract { v, u, via } => {
                self.remove(*v);
                self.adj[*u].insert(*via);
                self.adj[*via].insert(*u);
            }
            LiftOp::Delete(v) => self.remove(*v),
            LiftOp::DropCycle(cycle) => cycle.iter().for_each(|&v| self.remove(v)),
        }
    }

    /// Cycle components in order of their smallest vertex.
    fn cycle_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.adj.len()];
        let mut out = Vec::new();
        for start in (0..self.adj.len()).filter(|&v| self.alive[v]) {
            if seen[start] || self.adj[start].len() != 2 {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut prev = start;
            let mut cur = *self.adj[start].iter().next().expect("degree two");
            let mut closed = true;
            while cur != start {
                if seen[cur] || self.adj[cur].len() != 2 {
                    closed = false;
                    break;
                }
                seen[cur] = true;
                cycle.push(cur);
                let next = *self.adj[cur].iter().find(|&&w| w != prev).expect("degree two");
                prev = cur;
                cur = next;
            }
            if closed {
                out.push(cycle);
            }
        }
        out
    }

    fn to_graph(&self) -> Graph {
        let survivors: Vec<usize> = (0..self.adj.len()).filter(|&v| self.alive[v]).collect();
        let index = |v: usize| survivors.binary_search(&v).expect("survivor");
        let mut edges = Vec::new();
        for &u in &survivors {
            for &w in self.adj[u].range(u + 1..) {
                edges.push((index(u), index(w)));
            }
        }
        Graph::new(survivors.len(), edges).expect("reduction keeps the graph simple")
    }
}

fn finish(g: &Graph, k: usize, ops: Vec<LiftOp>) -> KernelResult {
    let mut work = WorkGraph::from_graph(g);
    ops.iter().for_each(|op| work.apply(op));
    KernelResult {
        verdict: Verdict::Reduced {
            graph: work.to_graph(),
            k,
        },
        lifting: Lifting {
            original_n: g.n(),
            ops,
        },
    }
}

/// Degree above which no coloring reaches `n - k` colors.
pub fn dual_degree_bound(k: usize) -> usize {
    3 * k + 6
}

/// Dual-parameter kernel for the question "σ(G) ≥ n − k".
///
/// Answers NO when the maximum degree exceeds `3k + 6`. Otherwise removes
/// every cycle component (each contributes as many colors as vertices) and
/// contracts adjacent degree-two pairs until none is left, skipping pairs
/// that would close a triangle. Each contraction lowers both n and σ by one,
/// so the deficit is unchanged.
pub fn kernelize_dual(g: &Graph, k: usize) -> KernelResult {
    if g.max_degree() > dual_degree_bound(k) {
        return KernelResult {
            verdict: Verdict::ForcedNo,
            lifting: Lifting::identity(g.n()),
        };
    }
    let mut work = WorkGraph::from_graph(g);
    let mut ops: Vec<LiftOp> = work
        .cycle_components()
        .into_iter()
        .map(LiftOp::DropCycle)
        .collect();
    ops.iter().for_each(|op| work.apply(op));
    while let Some(op) = work.r2_candidate() {
        work.apply(&op);
        ops.push(op);
    }
    KernelResult {
        verdict: Verdict::Reduced {
            graph: work.to_graph(),
            k,
        },
        lifting: Lifting {
            original_n: g.n(),
            ops,
        },
    }
}

/// A single contraction of the first eligible degree-two pair, if any.
pub fn apply_r2_once(g: &Graph) -> Option<(Graph, Lifting)> {
    let mut work = WorkGraph::from_graph(g);
    let op = work.r2_candidate()?;
    work.apply(&op);
    Some((
        work.to_graph(),
        Lifting {
            original_n: g.n(),
            ops: vec![op],
        },
    ))
}
