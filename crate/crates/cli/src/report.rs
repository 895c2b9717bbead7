//! Output records. Text and JSON are rendered from the same structs.

use gfree::coloring::{BoundKind, BoundReport, ChiResult, Coloring};
use gfree::critical::CriticalCertificate;
use gfree::lovasz::class_max_degrees;
use gfree::ng::{AuditReport, NgRecord, WitnessOutcome};
use gfree::{encode_graph6, DegreeBounds, Graph, LovaszPartition, PatternSpec};
use serde::Serialize;

/// `println!` that exits quietly when stdout is closed (e.g. piped into `head`).
macro_rules! emit {
    ($($arg:tt)*) => {
        write_line(format_args!($($arg)*))
    };
}

fn write_line(args: std::fmt::Arguments<'_>) {
    use std::io::Write;
    if let Err(e) = writeln!(std::io::stdout().lock(), "{args}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Format {
    Text,
    Json,
}

pub struct Printer {
    format: Format,
}

#[derive(Serialize)]
struct BoundLine {
    kind: BoundKind,
    value: usize,
    slack: i64,
    enforced: bool,
}

#[derive(Serialize)]
struct ChiOutput {
    graph: String,
    pattern: String,
    n: usize,
    chi: usize,
    classes: Vec<Vec<usize>>,
    degeneracy: usize,
    bounds: Vec<BoundLine>,
}

#[derive(Serialize)]
struct DecisionOutput {
    graph: String,
    pattern: String,
    k: usize,
    colorable: bool,
    classes: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize)]
struct CriticalOutput {
    graph: String,
    pattern: String,
    k: usize,
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
    min_degree: usize,
    pattern_min_degree: usize,
    min_degree_check: bool,
    vertex_deletions_checked: usize,
    edge_deletions_checked: usize,
    audited: bool,
}

#[derive(Serialize)]
struct AuditOutput<'a> {
    summary: &'a gfree::ng::AuditSummary,
    violations: &'a [gfree::ng::Violation],
    chromatic_violations: &'a [gfree::ng::Violation],
    sharp: &'a [gfree::ng::SharpInstance],
    warnings: &'a [String],
    #[serde(skip_serializing_if = "Option::is_none")]
    records: Option<&'a [gfree::ng::AuditRecord]>,
}

#[derive(Serialize)]
struct DecompositionOutput {
    graph: String,
    caps: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_max_degrees: Vec<usize>,
    moves: usize,
    potential: Vec<i64>,
}

fn non_empty_classes(c: &Coloring) -> Vec<Vec<usize>> {
    c.classes().into_iter().filter(|class| !class.is_empty()).collect()
}

fn list(classes: &[Vec<usize>]) -> String {
    classes.iter().map(|c| format!("{c:?}")).collect::<Vec<_>>().join(" ")
}

impl Printer {
    pub fn new(format: Format) -> Printer {
        Printer { format }
    }

    fn json<T: Serialize>(&self, value: &T) {
        emit!("{}", serde_json::to_string(value).expect("serializable"));
    }

    pub fn chi(&self, g: &Graph, pat: &PatternSpec, best: &ChiResult, report: &BoundReport) {
        let out = ChiOutput {
            graph: encode_graph6(g),
            pattern: pat.to_string(),
            n: g.n(),
            chi: best.value,
            classes: non_empty_classes(&best.coloring),
            degeneracy: report.degeneracy,
            bounds: report
                .checks
                .iter()
                .map(|c| BoundLine {
                    kind: c.kind,
                    value: c.value,
                    slack: c.value as i64 - report.exact as i64,
                    enforced: c.kind.enforced(),
                })
                .collect(),
        };
        match self.format {
            Format::Json => self.json(&out),
            Format::Text => {
                emit!("graph {} (n = {}), pattern {}", out.graph, out.n, out.pattern);
                emit!("chi = {}", out.chi);
                emit!("classes: {}", list(&out.classes));
                emit!("degeneracy = {}", out.degeneracy);
                for b in &out.bounds {
                    let note = if b.enforced { "" } else { " (report only)" };
                    emit!("  {:?} bound {} (slack {}){note}", b.kind, b.value, b.slack);
                }
            }
        }
    }

    pub fn decision(&self, g: &Graph, pat: &PatternSpec, k: usize, coloring: Option<&Coloring>) {
        let out = DecisionOutput {
            graph: encode_graph6(g),
            pattern: pat.to_string(),
            k,
            colorable: coloring.is_some(),
            classes: coloring.map(non_empty_classes),
        };
        match self.format {
            Format::Json => self.json(&out),
            Format::Text => {
                let verdict = if out.colorable { "yes" } else { "no" };
                emit!("graph {}, pattern {}: {} classes suffice: {verdict}", out.graph, out.pattern, k);
                if let Some(classes) = &out.classes {
                    emit!("classes: {}", list(classes));
                }
            }
        }
    }

    pub fn ng(&self, r: &NgRecord) {
        match self.format {
            Format::Json => self.json(r),
            Format::Text => {
                emit!("graph {} (n = {}), pattern {} (min degree {})", r.graph, r.n, r.pattern, r.delta);
                emit!("chi = {}, chi of complement = {}, sum = {}", r.chi, r.chi_complement, r.sum);
                emit!("critical: host {}, complement {}", r.host_critical, r.complement_critical);
                match (r.bound, r.slack) {
                    (Some(b), Some(s)) => {
                        let sharp = if r.sharp { ", sharp" } else { "" };
                        emit!("branch {:?}: bound {b}, slack {s}{sharp}", r.branch);
                    }
                    _ => emit!("branch {:?}: no bound", r.branch),
                }
                if let Some(g) = r.general_bound {
                    emit!("general bound {g}");
                }
                if let Some(c) = &r.refined {
                    emit!(
                        "refined (k = {}, d = {}): critical {}, both sides free on {:?}, spanning cycle on {:?}",
                        c.k, c.d, c.cond_critical, c.cond_both_free, c.cond_girth
                    );
                }
                let verdict = if r.holds() { "holds" } else { "VIOLATED" };
                emit!("{verdict}");
            }
        }
    }

    pub fn critical(&self, g: &Graph, pat: &PatternSpec, cert: &CriticalCertificate, labels: &[usize], audited: bool) {
        let host = |v: usize| labels[cert.subgraph.vertices[v]];
        let index = |v: usize| cert.subgraph.vertices.iter().position(|&w| w == v).expect("subgraph vertex");
        let out = CriticalOutput {
            graph: encode_graph6(g),
            pattern: pat.to_string(),
            k: cert.k,
            vertices: (0..cert.subgraph.vertices.len()).map(host).collect(),
            edges: cert.subgraph.edges.iter().map(|&(u, v)| (host(index(u)), host(index(v)))).collect(),
            min_degree: cert.min_degree,
            pattern_min_degree: cert.pattern_delta,
            min_degree_check: cert.mindeg_check,
            vertex_deletions_checked: cert.vertex_evidence.len(),
            edge_deletions_checked: cert.edge_evidence.len(),
            audited,
        };
        match self.format {
            Format::Json => self.json(&out),
            Format::Text => {
                emit!("graph {}, pattern {}", out.graph, out.pattern);
                emit!("critical subgraph with chi = {} on vertices {:?}", out.k, out.vertices);
                emit!("edges: {:?}", out.edges);
                emit!(
                    "min degree {} >= {} * ({} - 1): {}",
                    out.min_degree, out.pattern_min_degree, out.k, out.min_degree_check
                );
                emit!(
                    "deletions checked: {} vertices, {} edges; audit {}",
                    out.vertex_deletions_checked,
                    out.edge_deletions_checked,
                    if out.audited { "passed" } else { "FAILED" }
                );
            }
        }
    }

    pub fn audit(&self, report: &AuditReport, records: bool) {
        let out = AuditOutput {
            summary: &report.summary,
            violations: &report.violations,
            chromatic_violations: &report.chromatic_violations,
            sharp: &report.sharp,
            warnings: &report.warnings,
            records: records.then_some(report.records.as_slice()),
        };
        match self.format {
            Format::Json => self.json(&out),
            Format::Text => {
                let s = out.summary;
                emit!(
                    "{} graphs, {} pairs, {} skipped lines, {} timeouts",
                    s.graphs, s.pairs, s.skipped_lines, s.timeouts
                );
                emit!("{} violations", s.violations);
                for v in out.violations {
                    emit!("  {} {} {:?}: {}", v.graph, v.pattern, v.kind, v.detail);
                }
                emit!("{} chromatic bound exceedances (report only)", s.chromatic_violations);
                for v in out.chromatic_violations {
                    emit!("  {} {}: {}", v.graph, v.pattern, v.detail);
                }
                emit!("{} sharp instances, {} certificates checked", s.sharp, s.certificates);
                if let Some(m) = s.max_slack {
                    emit!("largest slack {m}");
                }
                for w in out.warnings {
                    emit!("warning: {w}");
                }
                if let Some(records) = out.records {
                    for r in records {
                        emit!(
                            "  {} {} chi {}+{} = {} {:?} bound {:?}",
                            r.ng.graph, r.ng.pattern, r.ng.chi, r.ng.chi_complement, r.ng.sum, r.ng.branch, r.ng.bound
                        );
                    }
                }
            }
        }
    }

    pub fn witnesses(&self, outcomes: &[WitnessOutcome]) {
        match self.format {
            Format::Json => {
                for o in outcomes {
                    self.json(o);
                }
            }
            Format::Text => {
                for o in outcomes {
                    let r = &o.record;
                    emit!(
                        "{} {}: chi {}+{} = {} (expected {}+{}), {:?} bound {}",
                        if o.reproduced { "PASS" } else { "FAIL" },
                        o.name,
                        r.chi,
                        r.chi_complement,
                        r.sum,
                        o.expected_chi,
                        o.expected_complement,
                        r.branch,
                        r.bound.map_or("none".to_string(), |b| b.to_string())
                    );
                }
                let passed = outcomes.iter().filter(|o| o.reproduced).count();
                emit!("{passed}/{} reproduced", outcomes.len());
            }
        }
    }

    pub fn decomposition(&self, g: &Graph, bounds: &DegreeBounds, p: &LovaszPartition) {
        let k = bounds.classes();
        let out = DecompositionOutput {
            graph: encode_graph6(g),
            caps: bounds.as_slice().to_vec(),
            classes: p.classes(k),
            class_max_degrees: class_max_degrees(g, &p.assignment, k),
            moves: p.moves.len(),
            potential: p.potential_trace(),
        };
        match self.format {
            Format::Json => self.json(&out),
            Format::Text => {
                emit!("graph {}, caps {:?}", out.graph, out.caps);
                for ((class, max), cap) in out.classes.iter().zip(&out.class_max_degrees).zip(&out.caps) {
                    emit!("  {class:?}: max inner degree {max} <= {cap}");
                }
                emit!("{} moves, potential {:?}", out.moves, out.potential);
            }
        }
    }
}
