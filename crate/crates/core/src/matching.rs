//! Matchings: the greedy matching behind preprocessing and the vertex cover,
//! the matching coloring lower bound, and bipartite maximum matching.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{compress_colors, EdgeColoring};
use crate::graph::Graph;

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<usize>,
    saturated: Vec<usize>,
}

impl Matching {
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Both endpoints of every matching edge, ascending. For an inclusion-
    /// maximal matching this is a vertex cover.
    pub fn saturated(&self) -> &[usize] {
        &self.saturated
    }
}

/// Greedy inclusion-maximal matching over ascending edge ids.
pub fn maximal_matching(g: &Graph) -> Matching {
    let mut used = vec![false; g.n()];
    let mut edges = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            edges.push(e);
        }
    }
    let saturated = (0..g.n()).filter(|&v| used[v]).collect();
    Matching { edges, saturated }
}

/// Matching edge `i` gets color `i`, every other edge the extra color `r`.
///
/// Uses `r + 1` colors when some edge is unmatched and `r` otherwise. Any
/// vertex sees at most its own matching color plus the shared color.
pub fn matching_coloring(g: &Graph, matching: &Matching) -> EdgeColoring {
    let r = matching.len();
    let mut colors = vec![r; g.m()];
    for (i, &e) in matching.edges().iter().enumerate() {
        colors[e] = i;
    }
    EdgeColoring::new(colors).expect("matching coloring is surjective")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preprocess {
    ForcedNo,
    /// 2-valid witness with exactly `k` colors (the trivial coloring when
    /// `k == 0`).
    ForcedYes(EdgeColoring),
    /// The matching has at most `k - 2` edges; its saturated vertices form a
    /// vertex cover of size at most `2k - 4`.
    Continue(Matching),
}

pub fn matching_preprocess(g: &Graph, k: usize) -> Preprocess {
    if g.m() < k {
        return Preprocess::ForcedNo;
    }
    if k == 0 {
        return Preprocess::ForcedYes(EdgeColoring::monochromatic(g.m()));
    }
    let matching = maximal_matching(g);
    if matching.len() + 1 >= k {
        let full = matching_coloring(g, &matching);
        let witness = compress_colors(&full, k).expect("matching coloring has at least k colors");
        return Preprocess::ForcedYes(witness);
    }
    Preprocess::Continue(matching)
}

/// Bipartite graph with `left` and `right` sides indexed from zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteGraph {
            right,
            adj: vec![Vec::new(); left],
        }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(b < self.right, "right vertex {b} out of range");
        if !self.adj[a].contains(&b) {
            self.adj[a].push(b);
        }
    }

    pub fn left(&self) -> usize {
        self.adj.len()
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn neighbors(&self, a: usize) -> &[usize] {
        &self.adj[a]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteMatching {
    /// Partner of each left vertex.
    pub mate: Vec<Option<usize>>,
}

impl BipartiteMatching {
    pub fn size(&self) -> usize {
        self.mate.iter().flatten().count()
    }

    pub fn saturates_left(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(a, b)| b.map(|b| (a, b)))
    }
}

/// Maximum matching by repeated augmenting-path search from each left vertex.
pub fn max_bipartite_matching(b: &BipartiteGraph) -> BipartiteMatching {
    let mut mate_of_right: Vec<Option<usize>> = vec![None; b.right()];
    let mut visited = vec![false; b.right()];
    for a in 0..b.left() {
        visited.iter_mut().for_each(|x| *x = false);
        augment(b, a, &mut visited, &mut mate_of_right);
    }
    let mut mate = vec![None; b.left()];
    for (r, l) in mate_of_right.iter().enumerate() {
        if let Some(l) = *l {
            mate[l] = Some(r);
        }
    }
    BipartiteMatching { mate }
}

fn augment(
    b: &BipartiteGraph,
    a: usize,
    visited: &mut [bool],
    mate_of_right: &mut [Option<usize>],
) -> bool {
    for &r in b.neighbors(a) {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        let free = match mate_of_right[r] {
            None => true,
            Some(other) => augment(b, other, visited, mate_of_right),
        };
        if free {
            mate_of_right[r] = Some(a);
            return true;
        }
    }
    false
}
