//! Forbidden-pattern detection.
//!
//! A [`PatternSpec`] is either a single forbidden graph `G` or the family of
//! all 2-regular graphs. Containment of a single graph is decided by
//! backtracking over injective vertex maps with a connectivity-first vertex
//! order and degree pruning. For the 2-regular family a host contains a
//! member exactly when it contains a cycle, so that case is plain cycle
//! detection.
//!
//! All searches run on `u64` adjacency rows restricted to a vertex mask,
//! which lets the colouring solver ask "does this class contain a copy?"
//! without materialising subgraphs.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formats::graph6::encode_graph6;
use crate::graph::{mask_vertices, Graph, BITSET_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Containment {
    /// Any subgraph isomorphic to the pattern.
    #[default]
    Subgraph,
    /// Only induced subgraphs isomorphic to the pattern.
    Induced,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternKind {
    Single(Graph),
    /// Every 2-regular graph; a class avoiding all of them is a forest.
    AllTwoRegular,
}

#[derive(Debug, Clone)]
pub struct PatternSpec {
    kind: PatternKind,
    mode: Containment,
    label: String,
}

impl PatternSpec {
    /// A single forbidden graph. Patterns need at least two vertices.
    pub fn single(g: Graph) -> Result<PatternSpec> {
        if g.n() < 2 {
            return Err(Error::InvalidParameter(format!(
                "forbidden graph needs at least 2 vertices, got {}",
                g.n()
            )));
        }
        if g.n() > BITSET_LIMIT {
            return Err(Error::TooLarge { n: g.n(), limit: BITSET_LIMIT });
        }
        let label = g.name().map(str::to_string).unwrap_or_else(|| encode_graph6(&g));
        Ok(PatternSpec { kind: PatternKind::Single(g), mode: Containment::Subgraph, label })
    }

    pub fn all_two_regular() -> PatternSpec {
        PatternSpec {
            kind: PatternKind::AllTwoRegular,
            mode: Containment::Subgraph,
            label: "cycles".into(),
        }
    }

    pub fn with_mode(mut self, mode: Containment) -> PatternSpec {
        self.mode = mode;
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> PatternSpec {
        self.label = label.into();
        self
    }

    pub fn kind(&self) -> &PatternKind {
        &self.kind
    }

    pub fn mode(&self) -> Containment {
        self.mode
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn graph(&self) -> Option<&Graph> {
        match &self.kind {
            PatternKind::Single(g) => Some(g),
            PatternKind::AllTwoRegular => None,
        }
    }

    /// Minimum degree of the pattern; 2 for the 2-regular family.
    pub fn delta(&self) -> usize {
        match &self.kind {
            PatternKind::Single(g) => g.min_degree(),
            PatternKind::AllTwoRegular => 2,
        }
    }

    /// Maximum degree of the pattern; 2 for the 2-regular family.
    pub fn max_degree(&self) -> usize {
        match &self.kind {
            PatternKind::Single(g) => g.max_degree(),
            PatternKind::AllTwoRegular => 2,
        }
    }

    /// True for the family itself and for any single 2-regular graph.
    pub fn is_two_regular(&self) -> bool {
        match &self.kind {
            PatternKind::Single(g) => g.is_regular(2),
            PatternKind::AllTwoRegular => true,
        }
    }

    /// `Some(t)` when the pattern is the complete graph `K_t`.
    pub fn clique_order(&self) -> Option<usize> {
        match &self.kind {
            PatternKind::Single(g) if g.is_complete() => Some(g.n()),
            _ => None,
        }
    }

    pub(crate) fn matcher(&self) -> Matcher {
        match &self.kind {
            PatternKind::Single(g) => Matcher::Single(SingleMatcher::new(g, self.mode)),
            PatternKind::AllTwoRegular => Matcher::Cycles,
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mode {
            Containment::Subgraph => f.write_str(&self.label),
            Containment::Induced => write!(f, "{} (induced)", self.label),
        }
    }
}

/// Evidence that a host contains the pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    /// `map[i]` is the host vertex playing pattern vertex `i`.
    Embedding(Vec<usize>),
    /// Host vertices of a cycle, in cyclic order.
    Cycle(Vec<usize>),
}

impl Witness {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Witness::Embedding(v) | Witness::Cycle(v) => v,
        }
    }
}

pub fn find_copy(host: &Graph, pat: &PatternSpec) -> Result<Option<Witness>> {
    let rows = host.bit_rows()?;
    Ok(pat.matcher().find_in(rows, host.full_mask()))
}

/// True iff `host` contains a copy of some member of `pat`.
pub fn contains_copy(host: &Graph, pat: &PatternSpec) -> Result<bool> {
    Ok(find_copy(host, pat)?.is_some())
}

#[derive(Debug, Clone)]
pub(crate) enum Matcher {
    Single(SingleMatcher),
    Cycles,
}

impl Matcher {
    /// A copy inside the vertex set `mask`.
    pub(crate) fn find_in(&self, rows: &[u64], mask: u64) -> Option<Witness> {
        match self {
            Matcher::Single(m) => m.find_in(rows, mask),
            Matcher::Cycles => find_cycle_in(rows, mask),
        }
    }

    /// A copy inside `mask` that uses `v`; `v` must be in `mask`.
    pub(crate) fn find_through(&self, rows: &[u64], mask: u64, v: usize) -> Option<Witness> {
        debug_assert!(mask >> v & 1 == 1);
        match self {
            Matcher::Single(m) => m.find_through(rows, mask, v),
            Matcher::Cycles => find_cycle_through(rows, mask, v),
        }
    }

    /// Whether adding `v` to the pattern-free class `class` keeps it pattern-free.
    pub(crate) fn can_join(&self, rows: &[u64], class: u64, v: usize) -> bool {
        self.find_through(rows, class | 1 << v, v).is_none()
    }
}

#[derive(Debug, Clone)]
struct Step {
    vertex: usize,
    degree: u32,
    /// Earlier positions this vertex must be adjacent to.
    adjacent: Vec<usize>,
    /// Earlier positions this vertex must not be adjacent to (induced mode).
    non_adjacent: Vec<usize>,
}

#[derive(Debug, Clone)]
pub(crate) struct SingleMatcher {
    n: usize,
    min_degree: u32,
    induced: bool,
    global: Vec<Step>,
    rooted: Vec<Vec<Step>>,
}

impl SingleMatcher {
    fn new(g: &Graph, mode: Containment) -> SingleMatcher {
        let n = g.n();
        let induced = mode == Containment::Induced;
        let root = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap_or(0);
        SingleMatcher {
            n,
            min_degree: g.min_degree() as u32,
            induced,
            global: search_order(g, root, induced),
            rooted: (0..n).map(|r| search_order(g, r, induced)).collect(),
        }
    }

    fn find_in(&self, rows: &[u64], mask: u64) -> Option<Witness> {
        if (mask.count_ones() as usize) < self.n {
            return None;
        }
        let mut map = vec![0; self.n];
        self.extend(&self.global, 0, rows, mask, 0, &mut map)
            .then(|| self.witness(&self.global, &map))
    }

    fn find_through(&self, rows: &[u64], mask: u64, v: usize) -> Option<Witness> {
        if (mask.count_ones() as usize) < self.n
            || (rows[v] & mask).count_ones() < self.min_degree
        {
            return None;
        }
        let degree_v = (rows[v] & mask).count_ones();
        let mut map = vec![0; self.n];
        for order in &self.rooted {
            if order[0].degree > degree_v {
                continue;
            }
            map[0] = v;
            if self.extend(order, 1, rows, mask, 1 << v, &mut map) {
                return Some(self.witness(order, &map));
            }
        }
        None
    }

    fn extend(
        &self,
        order: &[Step],
        depth: usize,
        rows: &[u64],
        mask: u64,
        used: u64,
        map: &mut [usize],
    ) -> bool {
        let Some(step) = order.get(depth) else {
            return true;
        };
        let mut candidates = mask & !used;
        for &p in &step.adjacent {
            candidates &= rows[map[p]];
        }
        if self.induced {
            for &p in &step.non_adjacent {
                candidates &= !rows[map[p]];
            }
        }
        while candidates != 0 {
            let h = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            if (rows[h] & mask).count_ones() < step.degree {
                continue;
            }
            map[depth] = h;
            if self.extend(order, depth + 1, rows, mask, used | 1 << h, map) {
                return true;
            }
        }
        false
    }

    fn witness(&self, order: &[Step], map: &[usize]) -> Witness {
        let mut embedding = vec![0; self.n];
        for (pos, step) in order.iter().enumerate() {
            embedding[step.vertex] = map[pos];
        }
        Witness::Embedding(embedding)
    }
}

/// Connectivity-first order starting at `root`: each next vertex has the most
/// already-placed neighbours, then the highest degree.
fn search_order(g: &Graph, root: usize, induced: bool) -> Vec<Step> {
    let n = g.n();
    let mut placed: Vec<usize> = Vec::with_capacity(n);
    let mut position = vec![usize::MAX; n];
    let mut next = Some(root);
    while let Some(v) = next {
        position[v] = placed.len();
        placed.push(v);
        next = (0..n)
            .filter(|&w| position[w] == usize::MAX)
            .max_by_key(|&w| {
                let back = g.neighbors(w).iter().filter(|&&x| position[x] != usize::MAX).count();
                (back, g.degree(w), std::cmp::Reverse(w))
            });
    }
    placed
        .iter()
        .enumerate()
        .map(|(pos, &v)| {
            let (adjacent, non_adjacent) = (0..pos).partition(|&p| g.has_edge(v, placed[p]));
            Step {
                vertex: v,
                degree: g.degree(v) as u32,
                adjacent,
                non_adjacent: if induced { non_adjacent } else { Vec::new() },
            }
        })
        .collect()
}

/// BFS inside `mask` from `start`; returns the reached set and parent links.
fn bfs(rows: &[u64], mask: u64, start: usize, parent: &mut [usize]) -> u64 {
    let mut seen = 1u64 << start;
    let mut queue = VecDeque::from([start]);
    parent[start] = start;
    while let Some(u) = queue.pop_front() {
        let mut fresh = rows[u] & mask & !seen;
        seen |= fresh;
        while fresh != 0 {
            let w = fresh.trailing_zeros() as usize;
            fresh &= fresh - 1;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    seen
}

fn path_to_root(parent: &[usize], mut v: usize) -> Vec<usize> {
    let mut path = vec![v];
    while parent[v] != v {
        v = parent[v];
        path.push(v);
    }
    path
}

fn find_cycle_through(rows: &[u64], mask: u64, v: usize) -> Option<Witness> {
    let rest = mask & !(1 << v);
    let neighbours = rows[v] & rest;
    if neighbours.count_ones() < 2 {
        return None;
    }
    let mut parent = [0usize; BITSET_LIMIT];
    let mut pending = neighbours;
    while pending != 0 {
        let u = pending.trailing_zeros() as usize;
        let component = bfs(rows, rest, u, &mut parent);
        let hits = component & neighbours & !(1 << u);
        if hits != 0 {
            let w = hits.trailing_zeros() as usize;
            // Path w -> ... -> u inside the component, closed through v.
            let mut cycle = vec![v];
            cycle.extend(path_to_root(&parent, w));
            return Some(Witness::Cycle(cycle));
        }
        pending &= !component;
    }
    None
}

fn find_cycle_in(rows: &[u64], mask: u64) -> Option<Witness> {
    let mut remaining = mask;
    let mut parent = [0usize; BITSET_LIMIT];
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        let component = bfs(rows, mask, start, &mut parent);
        let vertices = component.count_ones();
        let edges: u32 =
            mask_vertices(component).iter().map(|&u| (rows[u] & component).count_ones()).sum::<u32>() / 2;
        if edges >= vertices {
            // Some vertex lies on a cycle; find one that does.
            for u in mask_vertices(component) {
                if let Some(w) = find_cycle_through(rows, component, u) {
                    return Some(w);
                }
            }
            unreachable!("component with a cycle has a vertex on it");
        }
        remaining &= !component;
    }
    None
}

/// Size of a maximum clique, by branch and bound with greedy-colouring bounds.
pub fn clique_number(g: &Graph) -> Result<usize> {
    let rows = g.bit_rows()?;
    let mut best = 0;
    expand_clique(rows, g.full_mask(), 0, &mut best);
    Ok(best)
}

/// Clique number of the subgraph induced by `mask`.
pub(crate) fn clique_number_in(rows: &[u64], mask: u64) -> usize {
    let mut best = 0;
    expand_clique(rows, mask, 0, &mut best);
    best
}

fn expand_clique(rows: &[u64], candidates: u64, size: usize, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    let (order, colors) = colour_sort(rows, candidates);
    let mut remaining = candidates;
    for i in (0..order.len()).rev() {
        if size + colors[i] <= *best {
            return;
        }
        let v = order[i];
        expand_clique(rows, remaining & rows[v], size + 1, best);
        remaining &= !(1 << v);
    }
}

/// Greedy colouring of `candidates`; vertices come out grouped by colour,
/// each tagged with its (1-based) colour number.
fn colour_sort(rows: &[u64], candidates: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(candidates.count_ones() as usize);
    let mut colors = Vec::with_capacity(order.capacity());
    let mut uncoloured = candidates;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut available = uncoloured;
        while available != 0 {
            let v = available.trailing_zeros() as usize;
            available &= !rows[v] & !(1 << v);
            uncoloured &= !(1 << v);
            order.push(v);
            colors.push(colour);
        }
    }
    (order, colors)
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] >= b) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}
