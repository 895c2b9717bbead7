//! Brute-force reference implementations. They share nothing with the
//! library beyond the `Graph` type and are only meant for tiny inputs.

#![allow(dead_code)]

use gfree::named;
use gfree::{Graph, PatternSpec};

/// What a class must avoid.
#[derive(Clone, Debug)]
pub enum Forbidden {
    Copy(Graph),
    InducedCopy(Graph),
    AnyCycle,
}

impl Forbidden {
    pub fn spec(&self) -> PatternSpec {
        match self {
            Forbidden::Copy(g) => PatternSpec::single(g.clone()).unwrap(),
            Forbidden::InducedCopy(g) => {
                PatternSpec::single(g.clone()).unwrap().with_mode(gfree::Containment::Induced)
            }
            Forbidden::AnyCycle => PatternSpec::all_two_regular(),
        }
    }

    pub fn occurs_in(&self, host: &Graph, vertices: &[usize]) -> bool {
        match self {
            Forbidden::Copy(p) => has_embedding(host, vertices, p, false),
            Forbidden::InducedCopy(p) => has_embedding(host, vertices, p, true),
            Forbidden::AnyCycle => has_cycle(host, vertices),
        }
    }
}

/// The pattern set used by the exhaustive checks.
pub fn standard_patterns() -> Vec<(&'static str, Forbidden)> {
    vec![
        ("K2", Forbidden::Copy(named::complete(2))),
        ("K3", Forbidden::Copy(named::complete(3))),
        ("K4", Forbidden::Copy(named::complete(4))),
        ("C4", Forbidden::Copy(named::cycle(4).unwrap())),
        ("C5", Forbidden::Copy(named::cycle(5).unwrap())),
        ("cycles", Forbidden::AnyCycle),
    ]
}

/// Tries every injective map from pattern vertices into `vertices`.
pub fn has_embedding(host: &Graph, vertices: &[usize], pattern: &Graph, induced: bool) -> bool {
    fn extend(host: &Graph, vertices: &[usize], pattern: &Graph, induced: bool, image: &mut Vec<usize>) -> bool {
        let i = image.len();
        if i == pattern.n() {
            return true;
        }
        for &v in vertices {
            if image.contains(&v) {
                continue;
            }
            let fits = (0..i).all(|j| {
                let want = pattern.has_edge(i, j);
                let have = host.has_edge(v, image[j]);
                if induced {
                    want == have
                } else {
                    !want || have
                }
            });
            if fits {
                image.push(v);
                if extend(host, vertices, pattern, induced, image) {
                    return true;
                }
                image.pop();
            }
        }
        false
    }
    pattern.n() <= vertices.len() && extend(host, vertices, pattern, induced, &mut Vec::new())
}

/// Union-find: an edge inside an existing component closes a cycle.
pub fn has_cycle(host: &Graph, vertices: &[usize]) -> bool {
    let mut parent: Vec<usize> = (0..host.n()).collect();
    fn root(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for (a, &u) in vertices.iter().enumerate() {
        for &v in &vertices[a + 1..] {
            if host.has_edge(u, v) {
                let (ru, rv) = (root(&mut parent, u), root(&mut parent, v));
                if ru == rv {
                    return true;
                }
                parent[ru] = rv;
            }
        }
    }
    false
}

/// Every set partition of `0..n` as a restricted growth string.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn grow(n: usize, current: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for b in 0..=blocks {
            current.push(b);
            grow(n, current, blocks.max(b + 1), out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    grow(n, &mut Vec::new(), 0, &mut out);
    out
}

/// Minimum number of blocks over all partitions whose blocks avoid `forbidden`.
pub fn chi_brute(host: &Graph, forbidden: &Forbidden) -> usize {
    let n = host.n();
    set_partitions(n)
        .into_iter()
        .filter_map(|labels| {
            let blocks = labels.iter().max().map_or(0, |m| m + 1);
            let ok = (0..blocks).all(|b| {
                let class: Vec<usize> = (0..n).filter(|&v| labels[v] == b).collect();
                !forbidden.occurs_in(host, &class)
            });
            ok.then_some(blocks)
        })
        .min()
        .expect("singletons always work")
}

/// Proper colouring number by trying k = 0, 1, ... with plain backtracking.
pub fn chromatic_brute(host: &Graph) -> usize {
    fn fill(host: &Graph, k: usize, colours: &mut Vec<usize>) -> bool {
        let v = colours.len();
        if v == host.n() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !host.has_edge(u, v) || colours[u] != c) {
                colours.push(c);
                if fill(host, k, colours) {
                    return true;
                }
                colours.pop();
            }
        }
        false
    }
    (0..).find(|&k| fill(host, k, &mut Vec::new())).unwrap()
}

/// Lexicographically smallest upper-triangle bit string over all `n!` orders.
pub fn full_canonical_code(g: &Graph) -> Vec<bool> {
    fn permute(items: &mut Vec<usize>, k: usize, g: &Graph, best: &mut Option<Vec<bool>>) {
        if k == items.len() {
            let n = items.len();
            let bits: Vec<bool> =
                (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).map(|(i, j)| g.has_edge(items[i], items[j])).collect();
            if best.as_ref().is_none_or(|b| bits < *b) {
                *best = Some(bits);
            }
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, g, best);
            items.swap(k, i);
        }
    }
    let mut best = None;
    permute(&mut (0..g.n()).collect(), 0, g, &mut best);
    best.unwrap_or_default()
}

/// Is every proper subgraph obtained by one deletion below `k`?
pub fn critical_brute(g: &Graph, forbidden: &Forbidden) -> bool {
    let k = chi_brute(g, forbidden);
    let vertices_drop = (0..g.n()).all(|v| chi_brute(&g.remove_vertex(v).unwrap(), forbidden) < k);
    let edges_drop = g.edges().all(|(u, v)| chi_brute(&g.remove_edge(u, v).unwrap(), forbidden) < k);
    g.n() > 0 && vertices_drop && edges_drop
}

/// Graph on `n <= 11` vertices from the low bits of `bits`, pairs in lexicographic order.
pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<(usize, usize)> = pairs.enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, e)| e).collect();
    Graph::from_edges(n, edges).unwrap()
}
