#![allow(dead_code)]

use maxedge_core::Graph;

/// Largest number of colors over all colorings respecting `cap`, by trying
/// every set partition of the edges (in edge order, pruned on capacity).
pub fn naive_sigma(g: &Graph, cap: &[usize]) -> usize {
    fn go(g: &Graph, cap: &[usize], e: usize, colors: &mut Vec<usize>, k: usize, best: &mut usize) {
        if k + (g.m() - e) <= *best {
            return;
        }
        if e == g.m() {
            *best = k;
            return;
        }
        let (u, v) = g.endpoints(e);
        for c in 0..=k {
            colors.push(c);
            if fits(g, cap, colors, u) && fits(g, cap, colors, v) {
                go(g, cap, e + 1, colors, k.max(c + 1), best);
            }
            colors.pop();
        }
    }
    fn fits(g: &Graph, cap: &[usize], colors: &[usize], v: usize) -> bool {
        let mut seen: Vec<usize> = g
            .incident(v)
            .iter()
            .filter(|&&(_, e)| e < colors.len())
            .map(|&(_, e)| colors[e])
            .collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len() <= cap[v]
    }
    let mut best = 0;
    go(g, cap, 0, &mut Vec::new(), 0, &mut best);
    best
}

pub fn naive_sigma2(g: &Graph) -> usize {
    naive_sigma(g, &vec![2; g.n()])
}

/// Every labeled simple graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Graph::new(n, edges).unwrap()
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One connected graph per isomorphism class on `n` vertices.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for g in all_graphs(n).filter(Graph::is_connected) {
        let canon = perms
            .iter()
            .map(|p| {
                g.edges()
                    .iter()
                    .fold(0u64, |acc, &(u, v)| acc | 1 << index(p[u], p[v]))
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(g);
        }
    }
    out
}

/// Small deterministic generator so tests do not depend on the crate's own.
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    /// Random graph on `n` vertices with at most `max_m` edges.
    pub fn graph(&mut self, n: usize, max_m: usize) -> Graph {
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for i in (1..pairs.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            pairs.swap(i, j);
        }
        let m = self.below(max_m.min(pairs.len()) as u64 + 1) as usize;
        pairs.truncate(m);
        Graph::new(n, pairs).unwrap()
    }
}
