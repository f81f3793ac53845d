//! Instance builders: the Multi-Colored Independent Set reduction, the
//! pendant transform from per-vertex capacities to the plain problem, and
//! seeded random generators.
//!
//! Random graphs use `ChaCha8Rng::seed_from_u64(seed)`; outputs are stable
//! for a given seed and crate version.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{ColoringError, ValidityProfile};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GenError {
    #[error("class list covers {found} vertices but the graph has {expected}")]
    ClassCount { expected: usize, found: usize },
    #[error("vertex {vertex} has class {class}, outside 0..{k}")]
    ClassOutOfRange { vertex: usize, class: usize, k: usize },
    #[error("class {0} is empty")]
    EmptyClass(usize),
    #[error("edge probability {0} is outside [0, 1]")]
    BadProbability(f64),
    #[error("a two-factor needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error(transparent)]
    Capacity(#[from] ColoringError),
}

/// A graph whose vertices are split into `k` nonempty classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MCISInstance {
    graph: Graph,
    class: Vec<usize>,
    k: usize,
}

impl MCISInstance {
    /// `class[v]` is the class of vertex `v`, in `0..k`.
    pub fn new(graph: Graph, class: Vec<usize>, k: usize) -> Result<Self, GenError> {
        if class.len() != graph.n() {
            return Err(GenError::ClassCount {
                expected: graph.n(),
                found: class.len(),
            });
        }
        let mut size = vec![0usize; k];
        for (vertex, &c) in class.iter().enumerate() {
            if c >= k {
                return Err(GenError::ClassOutOfRange { vertex, class: c, k });
            }
            size[c] += 1;
        }
        if let Some(empty) = size.iter().position(|&s| s == 0) {
            return Err(GenError::EmptyClass(empty));
        }
        Ok(MCISInstance { graph, class, k })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class[v]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Members of class `i`, ascending.
    pub fn part(&self, i: usize) -> Vec<usize> {
        (0..self.graph.n()).filter(|&v| self.class[v] == i).collect()
    }

    /// An independent set with one vertex per class, found by trying every
    /// choice. Exponential; meant for tiny instances.
    pub fn solve_brute_force(&self) -> Option<Vec<usize>> {
        let parts: Vec<Vec<usize>> = (0..self.k).map(|i| self.part(i)).collect();
        let mut pick = Vec::with_capacity(self.k);
        self.pick_from(&parts, &mut pick).then_some(pick)
    }

    fn pick_from(&self, parts: &[Vec<usize>], pick: &mut Vec<usize>) -> bool {
        let Some(part) = parts.get(pick.len()) else {
            return true;
        };
        for &v in part {
            if pick.iter().all(|&w| !self.graph.has_edge(v, w)) {
                pick.push(v);
                if self.pick_from(parts, pick) {
                    return true;
                }
                pick.pop();
            }
        }
        false
    }
}

/// A graph with per-vertex capacities in {1, 2} and a color target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedInstance {
    pub graph: Graph,
    pub f: Vec<usize>,
    pub threshold: usize,
}

impl AnnotatedInstance {
    pub fn new(graph: Graph, f: Vec<usize>, threshold: usize) -> Result<Self, GenError> {
        ValidityProfile::per_vertex(f.clone())?.check(&graph)?;
        Ok(AnnotatedInstance { graph, f, threshold })
    }

    pub fn profile(&self) -> ValidityProfile {
        ValidityProfile::PerVertex(self.f.clone())
    }
}

/// Builds the capacity-annotated graph H whose {1,2}-colorings with `k + 1`
/// colors correspond to multicolored independent sets.
///
/// Vertex layout: the original vertices, then one gate per class, then the
/// apex, then five vertices `e_u, e_u', e_3, e_v', e_v` per original edge
/// `(u, v)` with `u < v`, in edge order. Gates and every `e_3` have capacity
/// 2, all other vertices capacity 1.
pub fn reduce_mcis(inst: &MCISInstance) -> AnnotatedInstance {
    let g = inst.graph();
    let (n, k) = (g.n(), inst.k());
    let gate = |i: usize| n + i;
    let apex = n + k;
    let total = n + k + 1 + 5 * g.m();
    let mut edges = Vec::with_capacity(k + n + 7 * g.m());
    for i in 0..k {
        edges.extend(inst.part(i).into_iter().map(|v| (gate(i), v)));
    }
    edges.extend((0..k).map(|i| (apex, gate(i))));
    let mut f = vec![1; total];
    for i in 0..k {
        f[gate(i)] = 2;
    }
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        let base = n + k + 1 + 5 * j;
        let (eu, eu2, e3, ev2, ev) = (base, base + 1, base + 2, base + 3, base + 4);
        edges.extend([
            (u, eu),
            (apex, e3),
            (v, ev),
            (eu, eu2),
            (eu2, e3),
            (e3, ev2),
            (ev2, ev),
        ]);
        f[e3] = 2;
    }
    AnnotatedInstance {
        graph: Graph::new(total, edges).expect("gadget graph is simple"),
        f,
        threshold: k + 1,
    }
}

/// Attaches a new degree-one neighbor to every capacity-1 vertex, in vertex
/// order.
///
/// Each pendant edge can carry a color of its own, so the plain maximum of
/// the result is the annotated maximum plus the number of pendants; the
/// returned threshold is shifted by that amount.
pub fn pendant_transform(inst: &AnnotatedInstance) -> (Graph, usize) {
    let g = &inst.graph;
    let ones: Vec<usize> = (0..g.n()).filter(|&v| inst.f[v] == 1).collect();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(ones.iter().enumerate().map(|(i, &v)| (v, g.n() + i)));
    let h = Graph::new(g.n() + ones.len(), edges).expect("pendants keep the graph simple");
    (h, inst.threshold + ones.len())
}

/// Each pair `u < v`, in lexicographic order, becomes an edge with
/// probability `p`.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::BadProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, edges).expect("pairs are distinct"))
}

/// A random disjoint union of cycles, each of length at least 3, covering
/// all `n` vertices.
pub fn gen_two_factor(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::TooFewVertices(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lengths = Vec::new();
    let mut left = n;
    while left > 0 {
        // a piece must leave either nothing or room for another cycle
        let len = if left < 6 {
            left
        } else {
            let pick = rng.gen_range(3..=left - 2);
            if pick > left - 3 {
                left
            } else {
                pick
            }
        };
        lengths.push(len);
        left -= len;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::with_capacity(n);
    let mut start = 0;
    for len in lengths {
        let cycle = &order[start..start + len];
        for i in 0..len {
            edges.push((cycle[i], cycle[(i + 1) % len]));
        }
        start += len;
    }
    Ok(Graph::new(n, edges).expect("cycles are disjoint"))
}
