//! Isomorphism classes of small graphs.
//!
//! Graphs on `n` vertices are grown from the classes on `n - 1` vertices by
//! adding one vertex with every possible neighbourhood, then deduplicated by
//! canonical code. The canonical code is the smallest upper-triangle bit
//! string (graph6 column order, first bit most significant) over all vertex
//! orders compatible with the stable colour-refinement partition. That
//! partition and its cell order are isomorphism invariants, so isomorphic
//! graphs get the same code.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::formats::graph6::encode_graph6;
use crate::graph::Graph;

/// Largest order supported by [`enumerate_small_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Largest order whose code fits in a `u64`.
const MAX_CODE_ORDER: usize = 11;

/// One representative per isomorphism class on `n` vertices, in canonical
/// labelling, sorted by graph6 string.
pub fn enumerate_small_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidParameter(format!(
            "enumeration is limited to n <= {MAX_ENUMERATION_ORDER}; \
             feed larger corpora as graph6 input instead (e.g. from nauty's geng)"
        )));
    }
    let mut layer = vec![Graph::empty(0)];
    for order in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &layer {
            for neighbourhood in 0u64..1 << (order - 1) {
                let edges = g
                    .edges()
                    .chain((0..order - 1).filter(|&v| neighbourhood >> v & 1 == 1).map(|v| (v, order - 1)));
                let candidate = Graph::from_edges(order, edges)?;
                let (code, labelling) = canonical_form(&candidate)?;
                if seen.insert(code) {
                    next.push(candidate.induced_subgraph(&labelling)?);
                }
            }
        }
        layer = next;
    }
    let mut keyed: Vec<(String, Graph)> = layer.into_iter().map(|g| (encode_graph6(&g), g)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

/// Canonical code, and the vertex order (`order[i]` becomes vertex `i`) that realises it.
pub fn canonical_form(g: &Graph) -> Result<(u64, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CODE_ORDER {
        return Err(Error::TooLarge { n, limit: MAX_CODE_ORDER });
    }
    let colours = refine(g);
    let mut search = CanonSearch {
        g,
        colours: &colours,
        slots: {
            let mut s: Vec<usize> = colours.clone();
            s.sort_unstable();
            s
        },
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.place(0, 0);
    let (code, order) = search.best.expect("at least one labelling");
    Ok((code, order))
}

/// Stable colour refinement starting from degrees. Colours are ranks of
/// sorted signatures, so they do not depend on the input labelling.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colours: Vec<usize> = g.degrees();
    let mut classes = distinct(&colours);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| colours[w]).collect();
                around.sort_unstable();
                (colours[v], around)
            })
            .collect();
        let mut ranked = signatures.clone();
        ranked.sort();
        ranked.dedup();
        colours = signatures
            .iter()
            .map(|s| ranked.binary_search(s).expect("present"))
            .collect();
        let refined = distinct(&colours);
        if refined == classes {
            return colours;
        }
        classes = refined;
    }
}

fn distinct(colours: &[usize]) -> usize {
    colours.iter().collect::<HashSet<_>>().len()
}

struct CanonSearch<'a> {
    g: &'a Graph,
    colours: &'a [usize],
    /// Colour required at each position.
    slots: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<(u64, Vec<usize>)>,
}

impl CanonSearch<'_> {
    /// `code` holds the bits of columns `1..pos`, most significant first.
    fn place(&mut self, pos: usize, code: u64) {
        let n = self.g.n();
        if pos == n {
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        let bits_after = n * (n - 1) / 2 - pos * (pos + 1) / 2;
        for v in 0..n {
            if self.used[v] || self.colours[v] != self.slots[pos] {
                continue;
            }
            let column = self
                .order
                .iter()
                .fold(0u64, |acc, &u| acc << 1 | self.g.has_edge(u, v) as u64);
            let prefix = code << pos | column;
            if let Some((best, _)) = &self.best {
                if prefix > best >> bits_after {
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.place(pos + 1, prefix);
            self.order.pop();
            self.used[v] = false;
        }
    }
}
