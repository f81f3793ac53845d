//! Exact decision procedure for "does G have a 2-valid coloring with exactly
//! k colors", parameterized by k.
//!
//! After matching preprocessing, the saturated vertices S of a greedy matching
//! form a vertex cover with |S| <= 2k - 4, and I = V \ S is independent. The
//! search then guesses
//!
//! 1. a palette assignment τ on S (each τ(v) has one or two colors, enumerated
//!    up to relabeling),
//! 2. the exact set X of colors realized inside G[S],
//!
//! colors G[S] by forced moves plus two-way branches that each consume one
//! color of X ([`check_top`]), and finally realizes the colors outside X on
//! the S–I edges ([`check_across`]): every vertex of I picks one of its
//! feasible palettes, either by forcing, by branching over at most ten
//! candidates, or through a bipartite matching between the still-missing
//! colors and the vertices whose candidates share a common color.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;
use core::sync::atomic::{AtomicBool, Ordering};

use crate::coloring::EdgeColoring;
use crate::graph::Graph;
use crate::matching::{matching_preprocess, max_bipartite_matching, BipartiteGraph, Preprocess};

/// Largest `k` the search supports once preprocessing is inconclusive.
pub const MAX_COLORS: usize = 64;

/// Branch width bound for [`check_across`]: candidates of a list without a
/// common color all lie inside a four-color set.
pub const ACROSS_WIDTH_BOUND: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    No,
    /// 2-valid coloring with exactly `k` colors (for `k == 0`, the trivial
    /// coloring).
    Yes(EdgeColoring),
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("k = {0} exceeds the supported maximum of {MAX_COLORS} colors")]
    TooManyColors(usize),
}

/// Search counters. Widths are the largest fan-out seen at any branch point.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub palette_guesses: u64,
    pub subset_guesses: u64,
    pub top_branch_points: u64,
    pub top_max_width: usize,
    pub across_branch_points: u64,
    pub across_max_width: usize,
}

impl SolveStats {
    pub fn merge(&mut self, other: &SolveStats) {
        self.palette_guesses += other.palette_guesses;
        self.subset_guesses += other.subset_guesses;
        self.top_branch_points += other.top_branch_points;
        self.top_max_width = self.top_max_width.max(other.top_max_width);
        self.across_branch_points += other.across_branch_points;
        self.across_max_width = self.across_max_width.max(other.across_max_width);
    }
}

/// Splits the palette guesses across workers: this run only evaluates guesses
/// whose index is `shard` modulo `shards`, and gives up once `cancel` is set.
#[derive(Debug, Clone, Copy)]
pub struct SolveControl<'a> {
    pub cancel: Option<&'a AtomicBool>,
    pub shard: usize,
    pub shards: usize,
}

impl Default for SolveControl<'_> {
    fn default() -> Self {
        SolveControl {
            cancel: None,
            shard: 0,
            shards: 1,
        }
    }
}

impl SolveControl<'_> {
    fn cancelled(&self) -> bool {
        self.cancel.is_some_and(|c| c.load(Ordering::Relaxed))
    }
}

/// A set of colors below 64.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn full(k: usize) -> Self {
        if k >= 64 {
            ColorSet(u64::MAX)
        } else {
            ColorSet((1u64 << k) - 1)
        }
    }

    pub fn singleton(c: usize) -> Self {
        ColorSet(1 << c)
    }

    pub fn pair(a: usize, b: usize) -> Self {
        ColorSet((1 << a) | (1 << b))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, c: usize) -> bool {
        self.0 & (1 << c) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, o: ColorSet) -> Self {
        ColorSet(self.0 | o.0)
    }

    pub fn intersection(self, o: ColorSet) -> Self {
        ColorSet(self.0 & o.0)
    }

    pub fn difference(self, o: ColorSet) -> Self {
        ColorSet(self.0 & !o.0)
    }

    pub fn intersects(self, o: ColorSet) -> bool {
        self.0 & o.0 != 0
    }

    pub fn is_subset(self, o: ColorSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            (bits != 0).then(|| {
                let c = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                c
            })
        })
    }
}

/// Guessed palettes on the vertex cover: `sets[i]` belongs to `cover[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaletteAssignment {
    pub cover: Vec<usize>,
    pub sets: Vec<ColorSet>,
}

impl PaletteAssignment {
    pub fn palette(&self, v: usize) -> Option<ColorSet> {
        self.cover
            .binary_search(&v)
            .ok()
            .map(|i| self.sets[i])
    }
}

/// Colors of the G[S] edges once [`check_top`] has consumed all of X.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopColoring {
    /// Parallel to [`Instance::top_edges`].
    pub colors: Vec<usize>,
}

/// The cover-side structure shared by every guess.
#[derive(Debug, Clone)]
pub struct Instance<'g> {
    g: &'g Graph,
    k: usize,
    cover: Vec<usize>,
    position: Vec<Option<usize>>,
    /// Edges with both endpoints in the cover, ascending.
    top_edges: Vec<usize>,
    /// Cover positions of each top edge's endpoints.
    top_ends: Vec<(usize, usize)>,
    /// Vertices outside the cover with at least one neighbor.
    outer: Vec<usize>,
    /// Top edges whose later endpoint sits at each cover position.
    top_closing: Vec<Vec<usize>>,
    /// Outer vertices whose last neighbor sits at each cover position.
    outer_closing: Vec<Vec<usize>>,
}

impl<'g> Instance<'g> {
    /// `cover` must be a sorted vertex cover of `g`.
    pub fn new(g: &'g Graph, cover: &[usize], k: usize) -> Self {
        let mut position = vec![None; g.n()];
        for (i, &v) in cover.iter().enumerate() {
            position[v] = Some(i);
        }
        let mut top_edges = Vec::new();
        let mut top_ends = Vec::new();
        let mut top_closing = vec![Vec::new(); cover.len()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            match (position[u], position[v]) {
                (Some(a), Some(b)) => {
                    top_closing[a.max(b)].push(top_edges.len());
                    top_edges.push(e);
                    top_ends.push((a, b));
                }
                (None, None) => panic!("edge {u}-{v} misses the vertex cover"),
                _ => {}
            }
        }
        let outer: Vec<usize> = (0..g.n())
            .filter(|&v| position[v].is_none() && g.degree(v) > 0)
            .collect();
        let mut outer_closing = vec![Vec::new(); cover.len()];
        for (i, &u) in outer.iter().enumerate() {
            let last = g
                .neighbors(u)
                .map(|w| position[w].expect("independent outside the cover"))
                .max()
                .expect("outer vertices have neighbors");
            outer_closing[last].push(i);
        }
        Instance {
            g,
            k,
            cover: cover.to_vec(),
            position,
            top_edges,
            top_ends,
            outer,
            top_closing,
            outer_closing,
        }
    }

    pub fn top_edges(&self) -> &[usize] {
        &self.top_edges
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    fn neighbor_sets(&self, u: usize, sets: &[ColorSet]) -> Vec<ColorSet> {
        self.g
            .neighbors(u)
            .map(|w| sets[self.position[w].expect("neighbor in cover")])
            .collect()
    }
}

/// Candidate palettes of a vertex outside the cover, given its neighbors'
/// guessed palettes: every set Y of one or two colors that meets each
/// neighbor palette and whose colors can all actually appear (two colors need
/// two distinct neighbors to carry them). Sorted singletons first.
pub fn feasibility_list(neighbor_sets: &[ColorSet]) -> Vec<ColorSet> {
    let universe = neighbor_sets
        .iter()
        .fold(ColorSet::EMPTY, |acc, &s| acc.union(s));
    let mut out = Vec::new();
    for a in universe.iter() {
        let y = ColorSet::singleton(a);
        if neighbor_sets.iter().all(|s| s.intersects(y)) {
            out.push(y);
        }
    }
    for a in universe.iter() {
        for b in universe.iter().filter(|&b| b > a) {
            let y = ColorSet::pair(a, b);
            if neighbor_sets.iter().all(|s| s.intersects(y)) && distinct_carriers(neighbor_sets, a, b).is_some() {
                out.push(y);
            }
        }
    }
    out
}

/// Indices of two different neighbors carrying `a` and `b` respectively.
fn distinct_carriers(sets: &[ColorSet], a: usize, b: usize) -> Option<(usize, usize)> {
    for (i, s) in sets.iter().enumerate() {
        if !s.contains(a) {
            continue;
        }
        if let Some(j) = sets
            .iter()
            .enumerate()
            .position(|(j, t)| j != i && t.contains(b))
        {
            return Some((i, j));
        }
    }
    None
}

/// Visits every palette assignment on the cover exactly once up to color
/// relabeling, keeping those whose palettes cover all `k` colors, meet along
/// every cover edge, and leave every outer vertex a nonempty candidate list.
///
/// Canonical form: walking the cover in ascending order, a color may only
/// appear after all smaller colors have appeared, and two colors introduced
/// together stay interchangeable until a palette holds exactly one of them,
/// which must then be the smaller.
pub fn enumerate_palettes<F>(inst: &Instance<'_>, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&PaletteAssignment) -> ControlFlow<()>,
{
    if inst.cover.is_empty() {
        return ControlFlow::Continue(());
    }
    let mut sets = vec![ColorSet::EMPTY; inst.cover.len()];
    palettes_from(inst, 0, 0, ColorSet::EMPTY, &mut sets, &mut visit)
}

fn palettes_from<F>(
    inst: &Instance<'_>,
    p: usize,
    next: usize,
    twins: ColorSet,
    sets: &mut Vec<ColorSet>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&PaletteAssignment) -> ControlFlow<()>,
{
    let s = inst.cover.len();
    if p == s {
        if next == inst.k {
            return visit(&PaletteAssignment {
                cover: inst.cover.clone(),
                sets: sets.clone(),
            });
        }
        return ControlFlow::Continue(());
    }
    if next + 2 * (s - p) < inst.k {
        return ControlFlow::Continue(());
    }
    let k = inst.k;
    let mut options: Vec<(ColorSet, usize)> = Vec::new();
    for a in 0..next {
        options.push((ColorSet::singleton(a), next));
    }
    if next < k {
        options.push((ColorSet::singleton(next), next + 1));
    }
    for a in 0..next {
        for b in a + 1..next {
            options.push((ColorSet::pair(a, b), next));
        }
        if next < k {
            options.push((ColorSet::pair(a, next), next + 1));
        }
    }
    if next + 2 <= k {
        options.push((ColorSet::pair(next, next + 1), next + 2));
    }
    'options: for (set, after) in options {
        // `twins` holds the smaller color a of each undistinguished pair (a, a + 1)
        let mut still = twins;
        for a in twins.iter() {
            match (set.contains(a), set.contains(a + 1)) {
                (false, true) => continue 'options,
                (true, false) => still = still.difference(ColorSet::singleton(a)),
                _ => {}
            }
        }
        if after == next + 2 {
            still = still.union(ColorSet::singleton(next));
        }
        sets[p] = set;
        let edges_ok = inst.top_closing[p].iter().all(|&t| {
            let (a, b) = inst.top_ends[t];
            sets[a].intersects(sets[b])
        });
        if !edges_ok {
            continue;
        }
        let outer_ok = inst.outer_closing[p].iter().all(|&i| {
            !feasibility_list(&inst.neighbor_sets(inst.outer[i], sets)).is_empty()
        });
        if !outer_ok {
            continue;
        }
        palettes_from(inst, p + 1, after, still, sets, visit)?;
    }
    sets[p] = ColorSet::EMPTY;
    ControlFlow::Continue(())
}

/// Colors every G[S] edge inside τ, using only colors of `x` and every color
/// of `x` at least once. Calls `emit` on each completion.
///
/// Edges whose allowed colors contain at most one still-unused color of `x`
/// are forced (an unused color dominates an already-used one, and a color
/// already used may recur); the rest branch two ways, each consuming one
/// unused color.
pub fn check_top<F>(
    inst: &Instance<'_>,
    tau: &PaletteAssignment,
    x: ColorSet,
    stats: &mut SolveStats,
    mut emit: F,
) -> ControlFlow<()>
where
    F: FnMut(&TopColoring, &mut SolveStats) -> ControlFlow<()>,
{
    let mut allowed = Vec::with_capacity(inst.top_edges.len());
    for &(a, b) in &inst.top_ends {
        let avail = tau.sets[a].intersection(tau.sets[b]).intersection(x);
        if avail.is_empty() {
            return ControlFlow::Continue(());
        }
        allowed.push(avail);
    }
    let mut colors = vec![None; inst.top_edges.len()];
    top_from(&allowed, &mut colors, x, stats, &mut emit)
}

fn top_from<F>(
    allowed: &[ColorSet],
    colors: &mut [Option<usize>],
    mut unused: ColorSet,
    stats: &mut SolveStats,
    emit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&TopColoring, &mut SolveStats) -> ControlFlow<()>,
{
    let mut trail = Vec::new();
    let mut changed = true;
    while changed {
        changed = false;
        for t in 0..allowed.len() {
            if colors[t].is_some() {
                continue;
            }
            let fresh = allowed[t].intersection(unused);
            let pick = match fresh.len() {
                0 => allowed[t].min(),
                1 => fresh.min(),
                _ => None,
            };
            if let Some(c) = pick {
                colors[t] = Some(c);
                unused = unused.difference(ColorSet::singleton(c));
                trail.push(t);
                changed = true;
            }
        }
    }
    let open: Vec<usize> = (0..allowed.len()).filter(|&t| colors[t].is_none()).collect();
    let result = if unused.len() > open.len() {
        ControlFlow::Continue(())
    } else if let Some(&t) = open.first() {
        let fresh = allowed[t].intersection(unused);
        stats.top_branch_points += 1;
        stats.top_max_width = stats.top_max_width.max(fresh.len());
        let mut flow = ControlFlow::Continue(());
        for c in fresh.iter() {
            colors[t] = Some(c);
            flow = top_from(allowed, colors, unused.difference(ColorSet::singleton(c)), stats, emit);
            colors[t] = None;
            if flow.is_break() {
                break;
            }
        }
        flow
    } else if unused.is_empty() {
        let done = TopColoring {
            colors: colors.iter().map(|c| c.expect("all top edges colored")).collect(),
        };
        emit(&done, stats)
    } else {
        ControlFlow::Continue(())
    };
    for t in trail {
        colors[t] = None;
    }
    result
}

/// How one outer vertex's candidate list was classified for a guess τ.
#[derive(Debug, Clone, PartialEq, Eq)]
enum OuterKind {
    /// Exactly one candidate.
    Forced(ColorSet),
    /// Every candidate contains this color, so it is realized regardless.
    Common(usize),
    /// No common color; at most ten candidates.
    Free,
}

/// Per-guess data for [`check_across`], independent of X.
#[derive(Debug, Clone)]
pub struct AcrossPlan {
    lists: Vec<Vec<ColorSet>>,
    kinds: Vec<OuterKind>,
    /// Colors realized by forced and common vertices no matter what.
    settled: ColorSet,
    /// Every color some outer vertex could realize.
    reachable: ColorSet,
}

impl AcrossPlan {
    /// `None` if some outer vertex has no candidate at all.
    pub fn new(inst: &Instance<'_>, tau: &PaletteAssignment) -> Option<Self> {
        let mut lists = Vec::with_capacity(inst.outer.len());
        let mut kinds = Vec::with_capacity(inst.outer.len());
        let mut settled = ColorSet::EMPTY;
        let mut reachable = ColorSet::EMPTY;
        for &u in &inst.outer {
            let list = feasibility_list(&inst.neighbor_sets(u, &tau.sets));
            if list.is_empty() {
                return None;
            }
            let common = list
                .iter()
                .fold(ColorSet::full(64), |acc, &y| acc.intersection(y));
            let kind = if list.len() == 1 {
                settled = settled.union(list[0]);
                OuterKind::Forced(list[0])
            } else if let Some(c) = common.min() {
                settled = settled.union(ColorSet::singleton(c));
                OuterKind::Common(c)
            } else {
                OuterKind::Free
            };
            for y in &list {
                reachable = reachable.union(*y);
            }
            lists.push(list);
            kinds.push(kind);
        }
        Some(AcrossPlan {
            lists,
            kinds,
            settled,
            reachable,
        })
    }

    pub fn reachable(&self) -> ColorSet {
        self.reachable
    }

    pub fn list(&self, i: usize) -> &[ColorSet] {
        &self.lists[i]
    }
}

/// Chooses a realized palette for every outer vertex so that together they
/// cover `remaining`. Returns the choices, parallel to [`Instance::outer`].
pub fn check_across(
    plan: &AcrossPlan,
    remaining: ColorSet,
    stats: &mut SolveStats,
) -> Option<Vec<ColorSet>> {
    let remaining = remaining.difference(plan.settled);
    if !remaining.is_subset(plan.reachable) {
        return None;
    }
    let free: Vec<usize> = (0..plan.kinds.len())
        .filter(|&i| plan.kinds[i] == OuterKind::Free)
        .collect();
    let mut chosen: Vec<Option<ColorSet>> = plan
        .kinds
        .iter()
        .map(|k| match k {
            OuterKind::Forced(y) => Some(*y),
            _ => None,
        })
        .collect();
    if across_from(plan, &free, remaining, &mut chosen, stats) {
        Some(chosen.into_iter().map(|c| c.expect("every outer vertex chosen")).collect())
    } else {
        None
    }
}

fn across_from(
    plan: &AcrossPlan,
    free: &[usize],
    mut remaining: ColorSet,
    chosen: &mut [Option<ColorSet>],
    stats: &mut SolveStats,
) -> bool {
    // A vertex whose candidates hit `remaining` at most once takes that one;
    // choices of different vertices never interact except through coverage.
    let mut trail = Vec::new();
    let mut changed = true;
    while changed {
        changed = false;
        for &i in free {
            if chosen[i].is_some() {
                continue;
            }
            let mut hits = plan.lists[i].iter().filter(|y| y.intersects(remaining));
            let pick = match (hits.next(), hits.next()) {
                (None, _) => Some(plan.lists[i][0]),
                (Some(y), None) => Some(*y),
                _ => None,
            };
            if let Some(y) = pick {
                chosen[i] = Some(y);
                remaining = remaining.difference(y);
                trail.push(i);
                changed = true;
            }
        }
    }
    let found = across_branch(plan, free, remaining, chosen, stats);
    if !found {
        for i in trail {
            chosen[i] = None;
        }
    }
    found
}

fn across_branch(
    plan: &AcrossPlan,
    free: &[usize],
    remaining: ColorSet,
    chosen: &mut [Option<ColorSet>],
    stats: &mut SolveStats,
) -> bool {
    let mut coverable = ColorSet::EMPTY;
    for (i, kind) in plan.kinds.iter().enumerate() {
        let open = match kind {
            OuterKind::Common(_) => true,
            OuterKind::Free => chosen[i].is_none(),
            OuterKind::Forced(_) => false,
        };
        if open {
            for y in &plan.lists[i] {
                coverable = coverable.union(*y);
            }
        }
    }
    if !remaining.is_subset(coverable) {
        return false;
    }
    if let Some(&i) = free.iter().find(|&&i| chosen[i].is_none()) {
        let options: Vec<ColorSet> = plan.lists[i]
            .iter()
            .copied()
            .filter(|y| y.intersects(remaining))
            .collect();
        assert!(
            options.len() <= ACROSS_WIDTH_BOUND,
            "candidate list without a common color has {} members",
            options.len()
        );
        stats.across_branch_points += 1;
        stats.across_max_width = stats.across_max_width.max(options.len());
        for y in options {
            chosen[i] = Some(y);
            if across_from(plan, free, remaining.difference(y), chosen, stats) {
                return true;
            }
        }
        chosen[i] = None;
        return false;
    }
    finish_with_matching(plan, remaining, chosen)
}

/// Matches each still-missing color to a distinct common-color vertex that
/// can carry it next to its common color.
fn finish_with_matching(
    plan: &AcrossPlan,
    remaining: ColorSet,
    chosen: &mut [Option<ColorSet>],
) -> bool {
    let colors: Vec<usize> = remaining.iter().collect();
    let commons: Vec<(usize, usize)> = plan
        .kinds
        .iter()
        .enumerate()
        .filter_map(|(i, k)| match k {
            OuterKind::Common(c) => Some((i, *c)),
            _ => None,
        })
        .collect();
    let mut b = BipartiteGraph::new(colors.len(), commons.len());
    for (a, &j) in colors.iter().enumerate() {
        for (r, &(i, c)) in commons.iter().enumerate() {
            if plan.lists[i].contains(&ColorSet::pair(c, j)) {
                b.add_edge(a, r);
            }
        }
    }
    let m = max_bipartite_matching(&b);
    if !m.saturates_left() {
        return false;
    }
    for &(i, _) in &commons {
        chosen[i] = Some(plan.lists[i][0]);
    }
    for (a, r) in m.pairs() {
        let (i, c) = commons[r];
        chosen[i] = Some(ColorSet::pair(c, colors[a]));
    }
    true
}

pub fn solve_exact(g: &Graph, k: usize) -> Result<Decision, SolveError> {
    solve_exact_with(g, k, SolveControl::default()).map(|(d, _)| d)
}

/// [`solve_exact`] restricted to one shard of the palette guesses, with
/// counters. A `No` from a shard only speaks for that shard.
pub fn solve_exact_with(
    g: &Graph,
    k: usize,
    control: SolveControl<'_>,
) -> Result<(Decision, SolveStats), SolveError> {
    let mut stats = SolveStats::default();
    if k == 0 {
        return Ok((Decision::Yes(EdgeColoring::monochromatic(g.m())), stats));
    }
    if k == 1 {
        let d = if g.m() >= 1 {
            Decision::Yes(EdgeColoring::monochromatic(g.m()))
        } else {
            Decision::No
        };
        return Ok((d, stats));
    }
    // a character subgraph has max degree 2, so at most n edges
    if k > g.n() {
        return Ok((Decision::No, stats));
    }
    let matching = match matching_preprocess(g, k) {
        Preprocess::ForcedNo => return Ok((Decision::No, stats)),
        Preprocess::ForcedYes(w) => return Ok((Decision::Yes(w), stats)),
        Preprocess::Continue(m) => m,
    };
    // one representative edge per color, each touching the cover, at most
    // two per cover vertex
    if k > 2 * matching.saturated().len() {
        return Ok((Decision::No, stats));
    }
    if k > MAX_COLORS {
        return Err(SolveError::TooManyColors(k));
    }
    let inst = Instance::new(g, matching.saturated(), k);
    let full = ColorSet::full(k);
    let mut index = 0usize;
    let mut found = None;
    let _ = enumerate_palettes(&inst, |tau| {
        let mine = index % control.shards == control.shard;
        index += 1;
        if !mine {
            return ControlFlow::Continue(());
        }
        if control.cancelled() {
            return ControlFlow::Break(());
        }
        stats.palette_guesses += 1;
        if let Some(w) = solve_guess(&inst, tau, full, &mut stats) {
            found = Some(w);
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    let decision = match found {
        Some(w) => Decision::Yes(w),
        None => Decision::No,
    };
    Ok((decision, stats))
}

fn solve_guess(
    inst: &Instance<'_>,
    tau: &PaletteAssignment,
    full: ColorSet,
    stats: &mut SolveStats,
) -> Option<EdgeColoring> {
    let plan = AcrossPlan::new(inst, tau)?;
    let mut top_union = ColorSet::EMPTY;
    let mut required = full.difference(plan.reachable());
    for &(a, b) in &inst.top_ends {
        let shared = tau.sets[a].intersection(tau.sets[b]);
        top_union = top_union.union(shared);
        if shared.len() == 1 {
            required = required.union(shared);
        }
    }
    if !required.is_subset(top_union) || required.len() > inst.top_edges.len() {
        return None;
    }
    let optional = top_union.difference(required).bits();
    // all submasks of `optional`, largest first
    let mut sub = optional;
    loop {
        let x = required.union(ColorSet(sub));
        if x.len() <= inst.top_edges.len() {
            stats.subset_guesses += 1;
            let mut witness = None;
            let _ = check_top(inst, tau, x, stats, |top, stats| {
                match check_across(&plan, full.difference(x), stats) {
                    Some(choices) => {
                        witness = Some(assemble(inst, tau, top, &choices));
                        ControlFlow::Break(())
                    }
                    None => ControlFlow::Continue(()),
                }
            });
            if witness.is_some() {
                return witness;
            }
        }
        if sub == 0 {
            return None;
        }
        sub = (sub - 1) & optional;
    }
}

/// Colors every cut edge so that outer vertex `u` realizes exactly its chosen
/// palette, taking the smaller color wherever there is a choice.
fn assemble(
    inst: &Instance<'_>,
    tau: &PaletteAssignment,
    top: &TopColoring,
    choices: &[ColorSet],
) -> EdgeColoring {
    let g = inst.g;
    let mut colors = vec![usize::MAX; g.m()];
    for (t, &e) in inst.top_edges.iter().enumerate() {
        colors[e] = top.colors[t];
    }
    for (i, &u) in inst.outer.iter().enumerate() {
        let y = choices[i];
        let incident = g.incident(u);
        let sets: Vec<ColorSet> = incident
            .iter()
            .map(|&(w, _)| tau.sets[inst.position[w].expect("neighbor in cover")])
            .collect();
        for (j, &(_, e)) in incident.iter().enumerate() {
            colors[e] = sets[j].intersection(y).min().expect("candidate meets every neighbor");
        }
        if y.len() == 2 {
            let mut it = y.iter();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            let (ia, ib) = distinct_carriers(&sets, a, b).expect("candidate is realizable");
            colors[incident[ia].1] = a;
            colors[incident[ib].1] = b;
        }
    }
    let coloring = EdgeColoring::new(colors).expect("all k colors realized");
    debug_assert_eq!(coloring.num_colors(), inst.k);
    debug_assert!(
        crate::coloring::verify_coloring(g, &coloring, &crate::coloring::ValidityProfile::TWO)
            .map(|r| r.valid)
            .unwrap_or(false)
    );
    coloring
}
