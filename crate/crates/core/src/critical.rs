//! G-free critical subgraphs.
//!
//! A graph `F` with `χ_G(F) = k` is G-free `k`-critical when every proper
//! subgraph has `χ_G <= k - 1`. Since `χ_G` is monotone under subgraphs it
//! suffices to delete single vertices and single edges. Extraction deletes
//! vertices in increasing degree order, then edges in lexicographic order,
//! keeping each deletion that leaves `χ_G` at `k`. The result is critical:
//! every surviving element was essential in a supergraph of the final `F`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::coloring::{chi_g_exact_within, decide_k_colorable_within, Coloring, Limits};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::PatternSpec;

/// A subgraph of a host, labelled by host vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subgraph {
    /// Host vertices; vertex `i` of [`Subgraph::graph`] is `vertices[i]`.
    pub vertices: Vec<usize>,
    /// Host edges `(u, v)`, `u < v`, lexicographic.
    pub edges: Vec<(usize, usize)>,
    #[serde(skip)]
    graph: Graph,
}

impl Subgraph {
    pub fn new(vertices: Vec<usize>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Subgraph> {
        let position = |v: usize| {
            vertices
                .iter()
                .position(|&w| w == v)
                .ok_or(Error::InvalidParameter(format!("edge endpoint {v} not in subgraph")))
        };
        let mut local = Vec::new();
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        edges.dedup();
        for &(u, v) in &edges {
            local.push((position(u)?, position(v)?));
        }
        let graph = Graph::from_edges(vertices.len(), local)?;
        Ok(Subgraph { vertices, edges, graph })
    }

    /// The whole host.
    pub fn full(h: &Graph) -> Subgraph {
        Subgraph { vertices: (0..h.n()).collect(), edges: h.edges().collect(), graph: h.clone() }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn without_vertex(&self, v: usize) -> Result<Subgraph> {
        let vertices = self.vertices.iter().copied().filter(|&w| w != v).collect();
        let edges = self.edges.iter().copied().filter(|&(a, b)| a != v && b != v);
        Subgraph::new(vertices, edges.collect::<Vec<_>>())
    }

    pub fn without_edge(&self, e: (usize, usize)) -> Result<Subgraph> {
        let edges = self.edges.iter().copied().filter(|&x| x != e);
        Subgraph::new(self.vertices.clone(), edges.collect::<Vec<_>>())
    }

    /// Whether every vertex and edge also belongs to `host`.
    pub fn is_subgraph_of(&self, host: &Graph) -> bool {
        let vs: BTreeSet<_> = self.vertices.iter().collect();
        vs.len() == self.vertices.len()
            && self.vertices.iter().all(|&v| v < host.n())
            && self.edges.iter().all(|&(u, v)| host.has_edge(u, v))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Element {
    Vertex(usize),
    Edge(usize, usize),
}

/// χ_G after deleting one element, with an optimal colouring of what remains
/// (in the local labelling of the reduced subgraph).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionEvidence {
    pub element: Element,
    pub chi: usize,
    pub coloring: Coloring,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalCertificate {
    pub subgraph: Subgraph,
    pub k: usize,
    pub vertex_evidence: Vec<DeletionEvidence>,
    pub edge_evidence: Vec<DeletionEvidence>,
    pub min_degree: usize,
    pub pattern_delta: usize,
    /// `δ(F) >= δ(G) (k - 1)`.
    pub mindeg_check: bool,
}

impl CriticalCertificate {
    /// Every recorded deletion drops χ_G below `k` and the evidence covers all elements.
    pub fn is_consistent(&self) -> bool {
        let drops = |e: &DeletionEvidence| e.chi < self.k && e.coloring.num_colors < self.k.max(1);
        self.vertex_evidence.len() == self.subgraph.vertices.len()
            && self.edge_evidence.len() == self.subgraph.edges.len()
            && self.vertex_evidence.iter().chain(&self.edge_evidence).all(drops)
    }
}

/// Does deleting from `current` keep χ_G at `k`?
fn still_needs_k(g: &Subgraph, pat: &PatternSpec, k: usize, limits: &Limits) -> Result<bool> {
    if k <= 1 {
        // χ_G >= 1 iff the subgraph has a vertex.
        return Ok(k == 0 || !g.vertices.is_empty());
    }
    Ok(decide_k_colorable_within(g.graph(), pat, k - 1, limits)?.is_none())
}

pub fn extract_critical(h: &Graph, pat: &PatternSpec) -> Result<CriticalCertificate> {
    extract_critical_within(h, pat, &Limits::none())
}

pub fn extract_critical_within(h: &Graph, pat: &PatternSpec, limits: &Limits) -> Result<CriticalCertificate> {
    let k = chi_g_exact_within(h, pat, limits)?.value;
    let current = critical_core(h, pat, k, limits)?;
    certify(current, pat, k, limits)
}

fn critical_core(h: &Graph, pat: &PatternSpec, k: usize, limits: &Limits) -> Result<Subgraph> {
    let mut current = Subgraph::full(h);
    let mut by_degree: Vec<usize> = (0..h.n()).collect();
    by_degree.sort_by_key(|&v| (h.degree(v), v));
    for v in by_degree {
        let candidate = current.without_vertex(v)?;
        if still_needs_k(&candidate, pat, k, limits)? {
            current = candidate;
        }
    }
    for e in current.edges.clone() {
        let candidate = current.without_edge(e)?;
        if still_needs_k(&candidate, pat, k, limits)? {
            current = candidate;
        }
    }
    Ok(current)
}

fn certify(f: Subgraph, pat: &PatternSpec, k: usize, limits: &Limits) -> Result<CriticalCertificate> {
    let evidence = |element: Element, reduced: Subgraph| -> Result<DeletionEvidence> {
        let chi = chi_g_exact_within(reduced.graph(), pat, limits)?;
        Ok(DeletionEvidence { element, chi: chi.value, coloring: chi.coloring })
    };
    let vertex_evidence = f
        .vertices
        .iter()
        .map(|&v| evidence(Element::Vertex(v), f.without_vertex(v)?))
        .collect::<Result<Vec<_>>>()?;
    let edge_evidence = f
        .edges
        .iter()
        .map(|&(u, v)| evidence(Element::Edge(u, v), f.without_edge((u, v))?))
        .collect::<Result<Vec<_>>>()?;
    let min_degree = f.graph().min_degree();
    let pattern_delta = pat.delta();
    Ok(CriticalCertificate {
        mindeg_check: min_degree >= pattern_delta * k.saturating_sub(1),
        subgraph: f,
        k,
        vertex_evidence,
        edge_evidence,
        min_degree,
        pattern_delta,
    })
}

/// Whether `h` itself is G-free `χ_G(h)`-critical. The null graph is not.
pub fn is_critical(h: &Graph, pat: &PatternSpec) -> Result<bool> {
    is_critical_within(h, pat, &Limits::none())
}

pub fn is_critical_within(h: &Graph, pat: &PatternSpec, limits: &Limits) -> Result<bool> {
    if h.is_empty() {
        return Ok(false);
    }
    let k = chi_g_exact_within(h, pat, limits)?.value;
    if k == 1 {
        return Ok(h.n() == 1);
    }
    let drops = |g: &Graph| -> Result<bool> {
        Ok(decide_k_colorable_within(g, pat, k - 1, limits)?.is_some())
    };
    for v in 0..h.n() {
        if !drops(&h.remove_vertex(v)?)? {
            return Ok(false);
        }
    }
    for (u, v) in h.edges() {
        if !drops(&h.remove_edge(u, v)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Full re-audit of a certificate: recomputes χ_G of `F` and of every
/// single-vertex and single-edge deletion from scratch.
pub fn audit_certificate(cert: &CriticalCertificate, pat: &PatternSpec) -> Result<bool> {
    let f = &cert.subgraph;
    let chi = |g: &Graph| chi_g_exact_within(g, pat, &Limits::none()).map(|r| r.value);
    if chi(f.graph())? != cert.k {
        return Ok(false);
    }
    for &v in &f.vertices {
        if chi(f.without_vertex(v)?.graph())? >= cert.k {
            return Ok(false);
        }
    }
    for &e in &f.edges {
        if chi(f.without_edge(e)?.graph())? >= cert.k {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A subgraph of `h` with χ_G exactly `target`, for `0 <= target <= χ_G(h)`:
/// take a critical subgraph, drop one vertex (which lowers χ_G by exactly
/// one), and repeat.
pub fn subgraph_with_chi(h: &Graph, pat: &PatternSpec, target: usize) -> Result<Subgraph> {
    let limits = Limits::none();
    let mut k = chi_g_exact_within(h, pat, &limits)?.value;
    if target > k {
        return Err(Error::InvalidParameter(format!("target {target} exceeds χ_G = {k}")));
    }
    let mut current = critical_core(h, pat, k, &limits)?;
    while k > target {
        let v = current.vertices[0];
        current = current.without_vertex(v)?;
        k -= 1;
        // Re-root on the smaller graph so the next deletion again drops χ_G by one.
        let local = critical_core(current.graph(), pat, k, &limits)?;
        current = Subgraph::new(
            local.vertices.iter().map(|&i| current.vertices[i]).collect(),
            local.edges.iter().map(|&(a, b)| (current.vertices[a], current.vertices[b])).collect::<Vec<_>>(),
        )?;
    }
    Ok(current)
}
