//! Exact G-free colouring and the constructive upper bounds.
//!
//! [`decide_k_colorable`] backtracks over vertices in reverse degeneracy
//! order. Only copies through the newly placed vertex are searched when it
//! joins a class, since the class was pattern-free before. Colour symmetry
//! is broken by letting a vertex open at most one new class.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DegreeBounds, Graph};
use crate::lovasz::lovasz_decomposition;
use crate::pattern::{Matcher, PatternKind, PatternSpec, Witness};

/// Assignment of a colour in `0..num_colors` to every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>, num_colors: usize) -> Result<Coloring> {
        if let Some(&c) = assignment.iter().find(|&&c| c >= num_colors) {
            return Err(Error::InvalidParameter(format!(
                "colour {c} out of range for {num_colors} colours"
            )));
        }
        Ok(Coloring { assignment, num_colors })
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    /// Number of non-empty classes.
    pub fn used_colors(&self) -> usize {
        self.classes().iter().filter(|c| !c.is_empty()).count()
    }

    /// The first class (with a copy inside it) that is not pattern-free, if any.
    pub fn violation(&self, host: &Graph, pat: &PatternSpec) -> Result<Option<(usize, Witness)>> {
        if self.assignment.len() != host.n() {
            return Err(Error::InvalidParameter(format!(
                "colouring covers {} vertices, graph has {}",
                self.assignment.len(),
                host.n()
            )));
        }
        let rows = host.bit_rows()?;
        let matcher = pat.matcher();
        for (c, class) in self.classes().iter().enumerate() {
            let mask = class.iter().fold(0u64, |m, &v| m | 1 << v);
            if let Some(w) = matcher.find_in(rows, mask) {
                return Ok(Some((c, w)));
            }
        }
        Ok(None)
    }

    pub fn is_valid(&self, host: &Graph, pat: &PatternSpec) -> Result<bool> {
        Ok(self.violation(host, pat)?.is_none())
    }
}

/// Wall-clock budget for a search.
#[derive(Debug, Clone, Copy, Default)]
pub struct Limits {
    deadline: Option<Instant>,
}

impl Limits {
    pub fn none() -> Limits {
        Limits::default()
    }

    pub fn timeout(after: Duration) -> Limits {
        Limits { deadline: Some(Instant::now() + after) }
    }

    pub(crate) fn check(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::Timeout),
            _ => Ok(()),
        }
    }
}

struct Search<'a> {
    rows: &'a [u64],
    matcher: &'a Matcher,
    order: Vec<usize>,
    k: usize,
    classes: Vec<u64>,
    assignment: Vec<usize>,
    limits: &'a Limits,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, used: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            self.limits.check()?;
        }
        let v = self.order[depth];
        for c in 0..self.k.min(used + 1) {
            if !self.matcher.can_join(self.rows, self.classes[c], v) {
                continue;
            }
            self.classes[c] |= 1 << v;
            self.assignment[v] = c;
            if self.run(depth + 1, used.max(c + 1))? {
                return Ok(true);
            }
            self.classes[c] &= !(1 << v);
        }
        Ok(false)
    }
}

/// Vertices in reverse peel order: the dense core first.
fn search_order(h: &Graph) -> Vec<usize> {
    let mut order = h.degeneracy().ordering;
    order.reverse();
    order
}

/// A G-free colouring of `h` with at most `k` colours, if one exists.
pub fn decide_k_colorable(h: &Graph, pat: &PatternSpec, k: usize) -> Result<Option<Coloring>> {
    decide_k_colorable_within(h, pat, k, &Limits::none())
}

pub fn decide_k_colorable_within(
    h: &Graph,
    pat: &PatternSpec,
    k: usize,
    limits: &Limits,
) -> Result<Option<Coloring>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let matcher = pat.matcher();
    decide_with(h, &matcher, k, limits)
}

fn decide_with(h: &Graph, matcher: &Matcher, k: usize, limits: &Limits) -> Result<Option<Coloring>> {
    let rows = h.bit_rows()?;
    let mut search = Search {
        rows,
        matcher,
        order: search_order(h),
        k,
        classes: vec![0; k],
        assignment: vec![0; h.n()],
        limits,
        nodes: 0,
    };
    if search.run(0, 0)? {
        Ok(Some(Coloring { assignment: search.assignment, num_colors: k }))
    } else {
        Ok(None)
    }
}

/// χ_G(h) together with an optimal colouring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiResult {
    pub value: usize,
    pub coloring: Coloring,
}

/// χ_G(h): 0 for the null graph, otherwise the least `k` admitting a G-free `k`-colouring.
pub fn chi_g_exact(h: &Graph, pat: &PatternSpec) -> Result<ChiResult> {
    chi_g_exact_within(h, pat, &Limits::none())
}

pub fn chi_g_exact_within(h: &Graph, pat: &PatternSpec, limits: &Limits) -> Result<ChiResult> {
    let rows = h.bit_rows()?;
    if h.is_empty() {
        return Ok(ChiResult { value: 0, coloring: Coloring { assignment: vec![], num_colors: 0 } });
    }
    let matcher = pat.matcher();
    let mut k = if matcher.find_in(rows, h.full_mask()).is_some() { 2 } else { 1 };
    loop {
        limits.check()?;
        if let Some(coloring) = decide_with(h, &matcher, k, limits)? {
            return Ok(ChiResult { value: k, coloring });
        }
        // A single vertex never contains a pattern, so k = n always succeeds.
        debug_assert!(k < h.n());
        k += 1;
    }
}

/// Greedy colouring in reverse peel order: each vertex joins the first class
/// that stays pattern-free. Uses at most `1 + ceil(degeneracy / delta)`
/// colours when the pattern's minimum degree `delta` is positive.
pub fn greedy_degeneracy_coloring(h: &Graph, pat: &PatternSpec) -> Result<Coloring> {
    let rows = h.bit_rows()?;
    let matcher = pat.matcher();
    let mut classes: Vec<u64> = Vec::new();
    let mut assignment = vec![0; h.n()];
    for v in search_order(h) {
        let c = match classes.iter().position(|&class| matcher.can_join(rows, class, v)) {
            Some(c) => c,
            None => {
                classes.push(0);
                classes.len() - 1
            }
        };
        classes[c] |= 1 << v;
        assignment[v] = c;
    }
    Ok(Coloring { assignment, num_colors: classes.len() })
}

/// `1 + ceil(degeneracy(h) / delta(pat))`; `None` when `delta(pat) = 0`.
pub fn bound_degeneracy(h: &Graph, pat: &PatternSpec) -> Option<usize> {
    let delta = pat.delta();
    (delta > 0).then(|| 1 + h.degeneracy().value.div_ceil(delta))
}

/// The maximum-degree bound with the colouring that certifies it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxDegreeBound {
    pub value: usize,
    pub coloring: Coloring,
}

/// `ceil((Δ(h) + 1) / Δ(pat))`, certified by a degree-capped decomposition
/// into that many classes, each with maximum degree below `Δ(pat)`.
pub fn bound_maxdeg(h: &Graph, pat: &PatternSpec) -> Result<MaxDegreeBound> {
    let pattern_max = pat.max_degree();
    if pattern_max == 0 {
        return Err(Error::NotApplicable("pattern has no edges".into()));
    }
    let value = (h.max_degree() + 1).div_ceil(pattern_max);
    let bounds = DegreeBounds::uniform(value, pattern_max - 1)?;
    let partition = lovasz_decomposition(h, &bounds)?;
    Ok(MaxDegreeBound {
        value,
        coloring: Coloring { assignment: partition.assignment, num_colors: value },
    })
}

/// `ceil(χ(h) / (χ(G) - 1))` for a single pattern `G` with `χ(G) >= 2`.
pub fn bound_chromatic(h: &Graph, pat: &PatternSpec) -> Result<usize> {
    let PatternKind::Single(g) = pat.kind() else {
        return Err(Error::NotApplicable("chromatic bound needs a single pattern graph".into()));
    };
    let pattern_chi = chromatic_number(g)?;
    if pattern_chi < 2 {
        return Err(Error::NotApplicable("pattern is edgeless".into()));
    }
    Ok(chromatic_number(h)?.div_ceil(pattern_chi - 1))
}

/// Ordinary chromatic number, as the K2-free chromatic number.
pub fn chromatic_number(h: &Graph) -> Result<usize> {
    let k2 = PatternSpec::single(crate::named::complete(2))?;
    Ok(chi_g_exact(h, &k2)?.value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// `1 + ceil(degeneracy / delta)`.
    Degeneracy,
    /// `ceil((Δ(H) + 1) / Δ(G))`.
    MaxDegree,
    /// `ceil(χ(H) / (χ(G) - 1))`; audited, never enforced.
    Chromatic,
    /// `ceil(n / delta)`.
    Size,
}

impl BoundKind {
    /// Whether a failure of this bound is a hard error.
    pub fn enforced(self) -> bool {
        !matches!(self, BoundKind::Chromatic)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub kind: BoundKind,
    pub value: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub exact: usize,
    pub degeneracy: usize,
    pub bound_degeneracy: Option<usize>,
    pub bound_maxdeg: Option<usize>,
    pub bound_chromatic: Option<usize>,
    pub size_bound: Option<usize>,
    pub checks: Vec<BoundCheck>,
}

impl BoundReport {
    /// Enforced bounds that the exact value exceeds.
    pub fn failures(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| c.kind.enforced() && !c.holds)
    }
}

pub fn bound_report(h: &Graph, pat: &PatternSpec) -> Result<BoundReport> {
    let exact = chi_g_exact(h, pat)?.value;
    bound_report_for(h, pat, exact)
}

/// Bound report when χ_G(h) is already known.
pub fn bound_report_for(h: &Graph, pat: &PatternSpec, exact: usize) -> Result<BoundReport> {
    let delta = pat.delta();
    let bound_degeneracy = bound_degeneracy(h, pat);
    let bound_maxdeg = match bound_maxdeg(h, pat) {
        Ok(b) => Some(b.value),
        Err(Error::NotApplicable(_)) => None,
        Err(e) => return Err(e),
    };
    let bound_chromatic = match bound_chromatic(h, pat) {
        Ok(b) => Some(b),
        Err(Error::NotApplicable(_)) => None,
        Err(e) => return Err(e),
    };
    let size_bound = (delta > 0).then(|| h.n().div_ceil(delta));
    let checks = [
        (BoundKind::Degeneracy, bound_degeneracy),
        (BoundKind::MaxDegree, bound_maxdeg),
        (BoundKind::Chromatic, bound_chromatic),
        (BoundKind::Size, size_bound),
    ]
    .into_iter()
    .filter_map(|(kind, value)| value.map(|value| BoundCheck { kind, value, holds: exact <= value }))
    .collect();
    Ok(BoundReport {
        n: h.n(),
        exact,
        degeneracy: h.degeneracy().value,
        bound_degeneracy,
        bound_maxdeg,
        bound_chromatic,
        size_bound,
        checks,
    })
}
