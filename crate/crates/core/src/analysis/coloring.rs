//! Exact vertex, edge and total coloring.
//!
//! All three reduce to vertex coloring of a conflict graph (the graph itself,
//! its line graph, its total graph). The colorer is a DSATUR decision search
//! over increasing `k`, starting from `max(clique, ceil(N / alpha))`.

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ColoringKind {
    Vertex,
    Edge,
    Total,
}

/// A coloring of the vertices, the edges, or both. `edge_colors` follows
/// `SimpleGraph::edges()` order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringAssignment {
    pub kind: ColoringKind,
    pub vertex_colors: Vec<usize>,
    pub edge_colors: Vec<((usize, usize), usize)>,
    pub color_count: usize,
}

impl ColoringAssignment {
    pub(crate) fn from_conflict(g: &SimpleGraph, kind: ColoringKind, colors: &[usize]) -> Self {
        let n = g.len();
        let edges = g.edges();
        let (vertex_colors, edge_part) = match kind {
            ColoringKind::Vertex => (colors.to_vec(), &[][..]),
            ColoringKind::Edge => (Vec::new(), colors),
            ColoringKind::Total => (colors[..n].to_vec(), &colors[n..]),
        };
        let edge_colors = edges.into_iter().zip(edge_part.iter().copied()).collect();
        Self::new(kind, vertex_colors, edge_colors)
    }

    pub fn new(
        kind: ColoringKind,
        vertex_colors: Vec<usize>,
        edge_colors: Vec<((usize, usize), usize)>,
    ) -> Self {
        let mut used: Vec<usize> = vertex_colors
            .iter()
            .copied()
            .chain(edge_colors.iter().map(|e| e.1))
            .collect();
        used.sort_unstable();
        used.dedup();
        Self {
            kind,
            vertex_colors,
            edge_colors,
            color_count: used.len(),
        }
    }

    pub fn color_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edge_colors.iter().find(|e| e.0 == key).map(|e| e.1)
    }
}

/// An exact value, or bounds when the search was cut short or refused.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Value {
    Exact(usize),
    Range { lower: usize, upper: usize },
}

impl Value {
    pub fn exact(self) -> Option<usize> {
        match self {
            Value::Exact(v) => Some(v),
            Value::Range { .. } => None,
        }
    }

    pub fn upper(self) -> usize {
        match self {
            Value::Exact(v) => v,
            Value::Range { upper, .. } => upper,
        }
    }

    pub fn lower(self) -> usize {
        match self {
            Value::Exact(v) => v,
            Value::Range { lower, .. } => lower,
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Exact(v) => write!(f, "{v}"),
            Value::Range { lower, upper } => write!(f, "[{lower};{upper}]"),
        }
    }
}

/// Search limits for the exact colorers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactLimits {
    /// Largest graph (vertices) the exact total colorer accepts.
    pub max_total_vertices: usize,
    /// Largest graph (edges) the exact total colorer accepts.
    pub max_total_edges: usize,
    /// Search nodes per decision before giving up with bounds.
    pub node_budget: u64,
}

impl Default for ExactLimits {
    fn default() -> Self {
        Self {
            max_total_vertices: 14,
            max_total_edges: 40,
            node_budget: 20_000_000,
        }
    }
}

/// Result of an optimisation. `assignment` always passes the checker; it is
/// optimal exactly when `value` is exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringOutcome {
    pub value: Value,
    pub assignment: ColoringAssignment,
    /// Set when the instance exceeded the exact-search cap.
    pub refused: bool,
}

pub(crate) struct Conflict {
    adj: Vec<FixedBitSet>,
}

impl Conflict {
    pub(crate) fn of(g: &SimpleGraph) -> Self {
        Self {
            adj: (0..g.len()).map(|v| g.neighbors(v).clone()).collect(),
        }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    fn complement(&self) -> Self {
        let n = self.len();
        let adj = (0..n)
            .map(|v| {
                let mut row = self.adj[v].clone();
                row.toggle_range(..);
                row.set(v, false);
                row
            })
            .collect();
        Self { adj }
    }

    /// Largest clique found within `budget` nodes and whether it is proven maximum.
    pub(crate) fn max_clique(&self, budget: u64) -> (Vec<usize>, bool) {
        let n = self.len();
        let mut search = CliqueSearch {
            adj: &self.adj,
            best: Vec::new(),
            current: Vec::new(),
            nodes: 0,
            budget,
        };
        let mut all = FixedBitSet::with_capacity(n);
        all.insert_range(..);
        let complete = search.expand(all);
        (search.best, complete)
    }

    /// Proper coloring greedily in DSATUR order.
    fn greedy(&self) -> Vec<usize> {
        let n = self.len();
        let mut colors = vec![usize::MAX; n];
        let mut sat: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n + 1); n];
        let degree: Vec<usize> = self.adj.iter().map(|r| r.count_ones(..)).collect();
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| colors[v] == usize::MAX)
                .max_by_key(|&v| (sat[v].count_ones(..), degree[v], std::cmp::Reverse(v)))
                .expect("uncolored vertex left");
            let c = (0..=n)
                .find(|&c| !sat[v].contains(c))
                .expect("a free color");
            colors[v] = c;
            for w in self.adj[v].ones() {
                sat[w].insert(c);
            }
        }
        colors
    }

    /// Chromatic number with bounds. `lower_hint` is a known lower bound.
    /// `seed`, if given, is a proper coloring used when it beats greedy.
    fn chromatic(
        &self,
        lower_hint: usize,
        budget: u64,
        seed: Option<Vec<usize>>,
        independence: bool,
    ) -> (Value, Vec<usize>) {
        let n = self.len();
        if n == 0 {
            return (Value::Exact(0), Vec::new());
        }
        let width = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
        let start = match (self.greedy(), seed) {
            (g, Some(s)) if width(&s) < width(&g) => s,
            (g, _) => g,
        };
        let (clique, _) = self.max_clique(budget);
        let mut lb = clique.len().max(lower_hint).max(1);
        if independence && n <= 256 {
            let (indep, proven) = self.complement().max_clique(budget);
            if proven && !indep.is_empty() {
                lb = lb.max(n.div_ceil(indep.len()));
            }
        }
        let mut best = self.descend(start, lb);
        let ub = width(&best);
        for k in lb..ub {
            match self.decide(k, &clique, budget) {
                Decision::Colorable(colors) => return (Value::Exact(k), colors),
                Decision::Impossible => continue,
                Decision::Unknown => {
                    best = self.improve_upper(best, k + 1, ub, &clique, budget);
                    let upper = best.iter().max().map_or(0, |m| m + 1);
                    return (Value::Range { lower: k, upper }, best);
                }
            }
        }
        (Value::Exact(ub), best)
    }

    /// Lowers the width of a proper coloring by tabu search, one color at a
    /// time, stopping at `lb` or at the first failure.
    fn descend(&self, mut best: Vec<usize>, lb: usize) -> Vec<usize> {
        let mut ub = best.iter().max().map_or(0, |m| m + 1);
        while ub > lb {
            match self.tabu(ub - 1, TABU_MOVES) {
                Some(colors) => {
                    best = colors;
                    ub -= 1;
                }
                None => break,
            }
        }
        best
    }

    /// Tabu search for a proper `k`-coloring, seeded per instance so runs
    /// repeat exactly. `None` when `moves` run out first.
    fn tabu(&self, k: usize, moves: usize) -> Option<Vec<usize>> {
        let n = self.len();
        if k == 0 {
            return None;
        }
        let mut rng = ChaCha8Rng::seed_from_u64((n as u64) << 32 | k as u64);
        let nbrs: Vec<Vec<usize>> = self.adj.iter().map(|r| r.ones().collect()).collect();
        let mut color: Vec<usize> = (0..n).map(|_| rng.random_range(0..k)).collect();
        // gamma[v * k + c]: neighbours of v colored c
        let mut gamma = vec![0usize; n * k];
        for v in 0..n {
            for &w in &nbrs[v] {
                gamma[v * k + color[w]] += 1;
            }
        }
        let mut conflicts: usize = (0..n).map(|v| gamma[v * k + color[v]]).sum::<usize>() / 2;
        let mut best_seen = conflicts;
        let mut tabu = vec![0usize; n * k];
        for it in 1..=moves {
            if conflicts == 0 {
                return Some(color);
            }
            let mut pick: Option<(usize, usize)> = None;
            let mut pick_delta = isize::MAX;
            let mut ties = 0u32;
            for v in 0..n {
                let own = gamma[v * k + color[v]];
                if own == 0 {
                    continue;
                }
                for c in (0..k).filter(|&c| c != color[v]) {
                    let delta = gamma[v * k + c] as isize - own as isize;
                    let allowed =
                        tabu[v * k + c] < it || (conflicts as isize + delta) < best_seen as isize;
                    if !allowed || delta > pick_delta {
                        continue;
                    }
                    if delta < pick_delta {
                        pick_delta = delta;
                        pick = Some((v, c));
                        ties = 1;
                    } else {
                        ties += 1;
                        if rng.random_range(0..ties) == 0 {
                            pick = Some((v, c));
                        }
                    }
                }
            }
            let Some((v, c)) = pick else { continue };
            let old = color[v];
            color[v] = c;
            for &w in &nbrs[v] {
                gamma[w * k + old] -= 1;
                gamma[w * k + c] += 1;
            }
            conflicts = (conflicts as isize + pick_delta) as usize;
            best_seen = best_seen.min(conflicts);
            tabu[v * k + old] = it + conflicts * 3 / 5 + rng.random_range(0..10);
        }
        (conflicts == 0).then_some(color)
    }

    /// Tries budgeted searches from the top down to tighten an upper bound.
    fn improve_upper(
        &self,
        mut best: Vec<usize>,
        from: usize,
        ub: usize,
        clique: &[usize],
        budget: u64,
    ) -> Vec<usize> {
        for k in (from..ub).rev() {
            match self.decide(k, clique, budget) {
                Decision::Colorable(c) => best = c,
                _ => break,
            }
        }
        best
    }

    pub(crate) fn decide(&self, k: usize, clique: &[usize], budget: u64) -> Decision {
        let n = self.len();
        if k == 0 {
            return if n == 0 {
                Decision::Colorable(Vec::new())
            } else {
                Decision::Impossible
            };
        }
        if clique.len() > k {
            return Decision::Impossible;
        }
        if k > 128 {
            return Decision::Unknown;
        }
        let mut s = Dsatur {
            adj: &self.adj,
            degree: self.adj.iter().map(|r| r.count_ones(..)).collect(),
            k,
            colors: vec![u8::MAX; n],
            forbidden: vec![0u128; n],
            nodes: 0,
            budget,
        };
        for (c, &v) in clique.iter().enumerate() {
            s.assign(v, c);
        }
        let start_max = clique.len();
        match s.search(clique.len(), start_max) {
            Some(true) => Decision::Colorable(s.colors.iter().map(|&c| c as usize).collect()),
            Some(false) => Decision::Impossible,
            None => Decision::Unknown,
        }
    }
}

const TABU_MOVES: usize = 20_000;

pub(crate) enum Decision {
    Colorable(Vec<usize>),
    Impossible,
    Unknown,
}

struct CliqueSearch<'a> {
    adj: &'a [FixedBitSet],
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl CliqueSearch<'_> {
    /// Returns false when the budget ran out.
    fn expand(&mut self, mut cand: FixedBitSet) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        if cand.is_clear() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return true;
        }
        // greedy coloring of the candidates bounds the clique size
        let (order, bounds) = self.color_sort(&cand);
        for i in (0..order.len()).rev() {
            if self.current.len() + bounds[i] <= self.best.len() {
                return true;
            }
            let v = order[i];
            self.current.push(v);
            let mut next = cand.clone();
            next.intersect_with(&self.adj[v]);
            if !self.expand(next) {
                return false;
            }
            self.current.pop();
            cand.set(v, false);
        }
        true
    }

    fn color_sort(&self, cand: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = cand.clone();
        let mut order = Vec::new();
        let mut bounds = Vec::new();
        let mut color = 0;
        while !uncolored.is_clear() {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = avail.ones().next() {
                avail.set(v, false);
                avail.difference_with(&self.adj[v]);
                uncolored.set(v, false);
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }
}

struct Dsatur<'a> {
    adj: &'a [FixedBitSet],
    degree: Vec<usize>,
    k: usize,
    colors: Vec<u8>,
    forbidden: Vec<u128>,
    nodes: u64,
    budget: u64,
}

impl Dsatur<'_> {
    fn assign(&mut self, v: usize, c: usize) -> Vec<usize> {
        self.colors[v] = c as u8;
        let bit = 1u128 << c;
        let mut touched = Vec::new();
        for w in self.adj[v].ones() {
            if self.colors[w] == u8::MAX && self.forbidden[w] & bit == 0 {
                self.forbidden[w] |= bit;
                touched.push(w);
            }
        }
        touched
    }

    fn unassign(&mut self, v: usize, c: usize, touched: &[usize]) {
        self.colors[v] = u8::MAX;
        for &w in touched {
            self.forbidden[w] &= !(1u128 << c);
        }
    }

    /// `None` when the node budget is exhausted.
    fn search(&mut self, colored: usize, used: usize) -> Option<bool> {
        if colored == self.colors.len() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let mut pick = usize::MAX;
        let mut key = (0u32, 0usize);
        for v in 0..self.colors.len() {
            if self.colors[v] != u8::MAX {
                continue;
            }
            let k = (self.forbidden[v].count_ones(), self.degree[v]);
            if pick == usize::MAX || k > key {
                pick = v;
                key = k;
            }
        }
        let v = pick;
        // colors 0..used are in play; one fresh color is enough by symmetry
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.forbidden[v] >> c & 1 == 1 {
                continue;
            }
            let touched = self.assign(v, c);
            match self.search(colored + 1, used.max(c + 1)) {
                Some(false) => self.unassign(v, c, &touched),
                other => return other,
            }
        }
        Some(false)
    }
}

pub fn max_clique(g: &SimpleGraph) -> Vec<usize> {
    Conflict::of(g).max_clique(u64::MAX).0
}

pub fn clique_number(g: &SimpleGraph) -> usize {
    max_clique(g).len()
}

pub fn independence_number(g: &SimpleGraph) -> usize {
    Conflict::of(&g.complement()).max_clique(u64::MAX).0.len()
}

fn outcome(
    g: &SimpleGraph,
    kind: ColoringKind,
    conflict: &SimpleGraph,
    lower: usize,
    budget: u64,
    seed: Option<Vec<usize>>,
) -> ColoringOutcome {
    let independence = kind != ColoringKind::Edge;
    let (value, colors) = Conflict::of(conflict).chromatic(lower, budget, seed, independence);
    ColoringOutcome {
        value,
        assignment: ColoringAssignment::from_conflict(g, kind, &colors),
        refused: false,
    }
}

pub fn chromatic_number(g: &SimpleGraph) -> ColoringOutcome {
    chromatic_number_with(g, &ExactLimits::default())
}

pub fn chromatic_number_with(g: &SimpleGraph, limits: &ExactLimits) -> ColoringOutcome {
    outcome(g, ColoringKind::Vertex, g, 0, limits.node_budget, None)
}

pub fn edge_chromatic_number(g: &SimpleGraph) -> ColoringOutcome {
    edge_chromatic_number_with(g, &ExactLimits::default())
}

pub fn edge_chromatic_number_with(g: &SimpleGraph, limits: &ExactLimits) -> ColoringOutcome {
    let delta = g.max_degree();
    let lower = if overfull(g) { delta + 1 } else { delta };
    outcome(
        g,
        ColoringKind::Edge,
        &g.line_graph(),
        lower,
        limits.node_budget,
        Some(misra_gries(g)),
    )
}

/// Some subgraph on an odd number `k` of vertices has more than
/// `Delta * (k - 1) / 2` edges, so no color class covers enough of it and
/// `chi' = Delta + 1`. Checks `G` and `G - v` for each `v`.
pub fn overfull(g: &SimpleGraph) -> bool {
    let (n, m, delta) = (g.len(), g.edge_count(), g.max_degree());
    if delta == 0 {
        return false;
    }
    if n % 2 == 1 {
        return 2 * m > delta * (n - 1);
    }
    (0..n).any(|v| 2 * (m - g.degree(v)) > delta * (n - 2))
}

const NONE: usize = usize::MAX;

/// Partial edge coloring with per-vertex color lookups.
struct EdgeTable {
    /// `at[x][c]`: neighbour joined to `x` by an edge of color `c`
    at: Vec<Vec<usize>>,
    color: Vec<Vec<usize>>,
    palette: usize,
}

impl EdgeTable {
    fn new(n: usize, palette: usize) -> Self {
        Self {
            at: vec![vec![NONE; palette]; n],
            color: vec![vec![NONE; n]; n],
            palette,
        }
    }

    fn set(&mut self, x: usize, y: usize, c: usize) {
        let old = self.color[x][y];
        if old != NONE {
            self.at[x][old] = NONE;
            self.at[y][old] = NONE;
        }
        self.color[x][y] = c;
        self.color[y][x] = c;
        if c != NONE {
            self.at[x][c] = y;
            self.at[y][c] = x;
        }
    }

    fn free(&self, x: usize, c: usize) -> bool {
        self.at[x][c] == NONE
    }

    fn first_free(&self, x: usize, below: usize) -> Option<usize> {
        (0..below).find(|&c| self.free(x, c))
    }

    /// The maximal path from `x` alternating colors `a`, `b`, starting with `a`.
    fn chain(&self, x: usize, a: usize, b: usize) -> Vec<(usize, usize, usize)> {
        let mut path = Vec::new();
        let (mut x, mut want) = (x, a);
        while self.at[x][want] != NONE {
            let y = self.at[x][want];
            path.push((x, y, want));
            x = y;
            want = if want == a { b } else { a };
        }
        path
    }

    fn swap(&mut self, path: &[(usize, usize, usize)], a: usize, b: usize) {
        for &(x, y, _) in path {
            self.set(x, y, NONE);
        }
        for &(x, y, k) in path {
            self.set(x, y, if k == a { b } else { a });
        }
    }
}

/// Misra-Gries edge coloring with at most `Delta + 1` colors, in `edges()`
/// order, followed by Kempe-chain swaps that try to empty the last color.
pub fn misra_gries(g: &SimpleGraph) -> Vec<usize> {
    let n = g.len();
    let delta = g.max_degree();
    let mut t = EdgeTable::new(n, delta + 1);
    let edges = g.edges();
    for &(u, v) in &edges {
        let mut fan = vec![v];
        let mut in_fan = FixedBitSet::with_capacity(n);
        in_fan.insert(v);
        loop {
            let last = *fan.last().expect("non-empty fan");
            let next = g.neighbors(u).ones().find(|&w| {
                !in_fan.contains(w) && t.color[u][w] != NONE && t.free(last, t.color[u][w])
            });
            match next {
                Some(w) => {
                    fan.push(w);
                    in_fan.insert(w);
                }
                None => break,
            }
        }
        let c = t.first_free(u, t.palette).expect("Delta + 1 colors");
        let d = t
            .first_free(*fan.last().expect("non-empty fan"), t.palette)
            .expect("Delta + 1 colors");
        if !t.free(u, d) {
            let path = t.chain(u, d, c);
            t.swap(&path, d, c);
        }
        // first w in the still valid fan prefix with d free
        let mut end = 0;
        for i in 0..fan.len() {
            if i > 0 {
                let k = t.color[u][fan[i]];
                if k == NONE || !t.free(fan[i - 1], k) {
                    break;
                }
            }
            if t.free(fan[i], d) {
                end = i;
                break;
            }
        }
        let shifted: Vec<usize> = (0..end).map(|j| t.color[u][fan[j + 1]]).collect();
        for &f in &fan[..=end] {
            t.set(u, f, NONE);
        }
        for (j, &k) in shifted.iter().enumerate() {
            t.set(u, fan[j], k);
        }
        t.set(u, fan[end], d);
    }
    if delta > 0 {
        drop_last_color(&mut t, &edges, delta);
    }
    edges.iter().map(|&(u, v)| t.color[u][v]).collect()
}

/// Recolors edges of color `delta` into `0..delta` where one Kempe swap
/// frees a common color. Leaves the rest untouched.
fn drop_last_color(t: &mut EdgeTable, edges: &[(usize, usize)], delta: usize) {
    for _round in 0..4 {
        let mut stuck = false;
        for &(u, v) in edges {
            if t.color[u][v] != delta {
                continue;
            }
            t.set(u, v, NONE);
            if !recolor_edge(t, u, v, delta) {
                t.set(u, v, delta);
                stuck = true;
            }
        }
        if !stuck {
            return;
        }
    }
}

fn recolor_edge(t: &mut EdgeTable, u: usize, v: usize, delta: usize) -> bool {
    if let Some(c) = (0..delta).find(|&c| t.free(u, c) && t.free(v, c)) {
        t.set(u, v, c);
        return true;
    }
    for (x, y) in [(u, v), (v, u)] {
        for a in (0..delta).filter(|&a| t.free(x, a)) {
            for b in (0..delta).filter(|&b| t.free(y, b)) {
                // make `a` free at `y` by swapping the a/b chain from y
                let path = t.chain(y, a, b);
                if path.last().is_some_and(|&(_, end, _)| end == x) {
                    continue;
                }
                t.swap(&path, a, b);
                t.set(x, y, a);
                return true;
            }
        }
    }
    false
}

pub fn within_total_cap(g: &SimpleGraph, limits: &ExactLimits) -> bool {
    g.len() <= limits.max_total_vertices && g.edge_count() <= limits.max_total_edges
}

/// Exact total chromatic number. Above the cap the search is refused and a
/// heuristic total coloring is returned with `refused` set; its color count
/// is only an upper bound and may exceed `Delta + 2`. A heuristic coloring
/// with `Delta + 1` colors is optimal, so that case is reported as exact.
pub fn total_chromatic_number(g: &SimpleGraph, limits: &ExactLimits) -> ColoringOutcome {
    let delta = g.max_degree();
    let lower = if g.is_empty() { 0 } else { delta + 1 };
    let total = g.total_graph();
    if !within_total_cap(g, limits) {
        let conflict = Conflict::of(&total);
        let colors = conflict.descend(conflict.greedy(), lower);
        let assignment = ColoringAssignment::from_conflict(g, ColoringKind::Total, &colors);
        let upper = assignment.color_count;
        if upper <= lower {
            return ColoringOutcome {
                value: Value::Exact(upper),
                assignment,
                refused: false,
            };
        }
        return ColoringOutcome {
            value: Value::Range { lower, upper },
            assignment,
            refused: true,
        };
    }
    outcome(
        g,
        ColoringKind::Total,
        &total,
        lower,
        limits.node_budget,
        Some(split_palette_seed(g, limits)),
    )
}

/// A total coloring from a vertex coloring and an edge coloring on disjoint
/// palettes (`chi + chi'` colors), in total-graph vertex order.
fn split_palette_seed(g: &SimpleGraph, limits: &ExactLimits) -> Vec<usize> {
    let vertex = chromatic_number_with(g, limits).assignment;
    let edge = edge_chromatic_number_with(g, limits).assignment;
    let offset = vertex.color_count;
    let mut seed = vertex.vertex_colors.clone();
    for (u, v) in g.edges() {
        seed.push(offset + edge.color_of_edge(u, v).expect("every edge colored"));
    }
    seed
}

/// Looks for a total coloring with exactly `k` colors available, within the
/// node budget. Used where only the conjectured bound needs certifying.
pub fn total_coloring_with(g: &SimpleGraph, k: usize, budget: u64) -> Option<ColoringAssignment> {
    let total = Conflict::of(&g.total_graph());
    let (clique, _) = total.max_clique(budget);
    match total.decide(k, &clique, budget) {
        Decision::Colorable(colors) => Some(ColoringAssignment::from_conflict(
            g,
            ColoringKind::Total,
            &colors,
        )),
        _ => None,
    }
}

/// Whether exact chi'' lies in `{Delta + 1, Delta + 2}`. Refuses above the cap.
pub fn verify_tcc(g: &SimpleGraph, limits: &ExactLimits) -> Result<bool> {
    if g.is_empty() {
        return Ok(true);
    }
    let out = total_chromatic_number(g, limits);
    if out.refused {
        return Err(Error::SearchRefused(format!(
            "{} vertices, {} edges exceeds cap {} + {}",
            g.len(),
            g.edge_count(),
            limits.max_total_vertices,
            limits.max_total_edges
        )));
    }
    let delta = g.max_degree();
    match out.value {
        Value::Exact(x) => Ok(x == delta + 1 || x == delta + 2),
        Value::Range { .. } => Err(Error::SearchRefused("node budget exhausted".into())),
    }
}

/// `Delta`-edge-colorable (class one) or not (class two).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeClass {
    One,
    Two,
}

/// `chi'' = Delta + 1` (type I) or `Delta + 2` (type II).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TotalType {
    I,
    II,
}

pub fn edge_class(chi_prime: usize, delta: usize) -> Option<EdgeClass> {
    match chi_prime.checked_sub(delta) {
        Some(0) => Some(EdgeClass::One),
        Some(1) => Some(EdgeClass::Two),
        _ => None,
    }
}

pub fn total_type(chi_double_prime: usize, delta: usize) -> Option<TotalType> {
    match chi_double_prime.checked_sub(delta) {
        Some(1) => Some(TotalType::I),
        Some(2) => Some(TotalType::II),
        _ => None,
    }
}
