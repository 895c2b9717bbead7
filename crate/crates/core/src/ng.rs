//! Nordhaus–Gaddum sums `χ_G(H) + χ_G(H̄)` and their audit.
//!
//! Every record carries the bound of the branch whose hypothesis holds:
//!
//! | branch               | hypothesis                                   | bound            |
//! |----------------------|----------------------------------------------|------------------|
//! | `TwoRegular`         | pattern is 2-regular or the 2-regular family | `⌈n/2⌉ + 1`      |
//! | `Critical`           | `H` or `H̄` is G-free critical                | `⌈n/δ⌉ + 1`      |
//! | `CliqueIndivisible`  | `G = K_{δ+1}`, `n ≠ kδ` for `k, δ >= 3`      | `⌈n/δ⌉ + 1`      |
//! | `CliqueRefined`      | `G = K_{d+1}`, `n = kd`, a refined condition | `k + 1`          |
//! | `CliqueDivisible`    | `G = K_{d+1}`, `n = kd`                      | `k + 2`          |
//! | `General`            | none of the above                            | `⌈n/δ⌉ + 2`      |
//!
//! The general `⌈n/δ⌉ + 2` bound is checked on every record as well.

use std::time::Duration;

use log::warn;
use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{bound_report_for, chi_g_exact_within, BoundKind, BoundReport, Limits};
use crate::critical::{audit_certificate, extract_critical_within, is_critical_within};
use crate::error::{Error, Result};
use crate::formats::graph6::encode_graph6;
use crate::graph::Graph;
use crate::named;
use crate::pattern::{clique_number_in, PatternSpec};

/// Largest order for the exhaustive `2d`-subset scan of the refined conditions.
pub const REFINED_SCAN_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NgBranch {
    TwoRegular,
    Critical,
    CliqueIndivisible,
    CliqueRefined,
    CliqueDivisible,
    General,
    /// Pattern with an isolated vertex; no bound is defined.
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NgRecord {
    pub graph: String,
    pub pattern: String,
    pub n: usize,
    pub delta: usize,
    pub chi: usize,
    pub chi_complement: usize,
    pub sum: usize,
    pub host_critical: bool,
    pub complement_critical: bool,
    pub branch: NgBranch,
    pub bound: Option<usize>,
    pub general_bound: Option<usize>,
    pub slack: Option<i64>,
    pub sharp: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refined: Option<RefinedConditionReport>,
}

impl NgRecord {
    /// Whether the sum respects both the branch bound and the general bound.
    pub fn holds(&self) -> bool {
        self.slack.is_none_or(|s| s >= 0) && self.general_bound.is_none_or(|b| self.sum <= b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinedConditionReport {
    pub d: usize,
    pub k: usize,
    /// `H` or `H̄` is `K_{d+1}`-free critical.
    pub cond_critical: bool,
    /// Some `2d`-set `S` with `H[S]` and `H̄[S]` both `K_{d+1}`-free.
    pub cond_both_free: Option<Vec<usize>>,
    /// Some `2d`-set `S` with `girth(H[S]) = 2d` or `girth(H̄[S]) = 2d`.
    pub cond_girth: Option<Vec<usize>>,
    pub sum: usize,
    /// `k + 1` when any condition holds, else `k + 2`.
    pub bound: usize,
    pub holds: bool,
}

impl RefinedConditionReport {
    pub fn any(&self) -> bool {
        self.cond_critical || self.cond_both_free.is_some() || self.cond_girth.is_some()
    }
}

pub fn ng_sum(h: &Graph, pat: &PatternSpec) -> Result<NgRecord> {
    ng_sum_within(h, pat, &Limits::none())
}

pub fn ng_sum_within(h: &Graph, pat: &PatternSpec, limits: &Limits) -> Result<NgRecord> {
    let complement = h.complement();
    let chi = chi_g_exact_within(h, pat, limits)?.value;
    let chi_complement = chi_g_exact_within(&complement, pat, limits)?.value;
    let host_critical = is_critical_within(h, pat, limits)?;
    let complement_critical = is_critical_within(&complement, pat, limits)?;
    let facts = Facts { h, complement: &complement, chi, chi_complement, host_critical, complement_critical };
    select_branch(&facts, pat, limits)
}

struct Facts<'a> {
    h: &'a Graph,
    complement: &'a Graph,
    chi: usize,
    chi_complement: usize,
    host_critical: bool,
    complement_critical: bool,
}

fn select_branch(f: &Facts<'_>, pat: &PatternSpec, limits: &Limits) -> Result<NgRecord> {
    let n = f.h.n();
    let delta = pat.delta();
    let sum = f.chi + f.chi_complement;
    let mut refined = None;
    let (branch, bound) = if delta == 0 {
        (NgBranch::Unbounded, None)
    } else {
        let plus_one = n.div_ceil(delta) + 1;
        let divisible = delta >= 3 && n.is_multiple_of(delta) && n / delta >= 3;
        if pat.is_two_regular() {
            (NgBranch::TwoRegular, Some(plus_one))
        } else if f.host_critical || f.complement_critical {
            (NgBranch::Critical, Some(plus_one))
        } else if pat.clique_order().is_some() && !divisible {
            (NgBranch::CliqueIndivisible, Some(plus_one))
        } else if pat.clique_order().is_some() {
            let k = n / delta;
            let report = if n <= REFINED_SCAN_LIMIT {
                Some(refined_conditions(f, delta, limits)?)
            } else {
                None
            };
            let branch = if report.as_ref().is_some_and(RefinedConditionReport::any) {
                (NgBranch::CliqueRefined, Some(k + 1))
            } else {
                (NgBranch::CliqueDivisible, Some(k + 2))
            };
            refined = report;
            branch
        } else {
            (NgBranch::General, Some(plus_one + 1))
        }
    };
    let general_bound = (delta > 0).then(|| n.div_ceil(delta) + 2);
    let slack = bound.map(|b| b as i64 - sum as i64);
    Ok(NgRecord {
        graph: encode_graph6(f.h),
        pattern: pat.to_string(),
        n,
        delta,
        chi: f.chi,
        chi_complement: f.chi_complement,
        sum,
        host_critical: f.host_critical,
        complement_critical: f.complement_critical,
        branch,
        bound,
        general_bound,
        slack,
        sharp: slack == Some(0),
        refined,
    })
}

/// The three refinement conditions for `G = K_{d+1}` and `n = kd` with `k, d >= 3`.
pub fn check_refined_conditions(h: &Graph, d: usize) -> Result<RefinedConditionReport> {
    let n = h.n();
    if d < 3 || !n.is_multiple_of(d) || n / d < 3 {
        return Err(Error::NotApplicable(format!("need n = kd with k, d >= 3; got n = {n}, d = {d}")));
    }
    if n > REFINED_SCAN_LIMIT {
        return Err(Error::TooLarge { n, limit: REFINED_SCAN_LIMIT });
    }
    let pat = PatternSpec::single(named::complete(d + 1))?;
    let limits = Limits::none();
    let complement = h.complement();
    let facts = Facts {
        h,
        complement: &complement,
        chi: chi_g_exact_within(h, &pat, &limits)?.value,
        chi_complement: chi_g_exact_within(&complement, &pat, &limits)?.value,
        host_critical: is_critical_within(h, &pat, &limits)?,
        complement_critical: is_critical_within(&complement, &pat, &limits)?,
    };
    refined_conditions(&facts, d, &limits)
}

fn refined_conditions(f: &Facts<'_>, d: usize, limits: &Limits) -> Result<RefinedConditionReport> {
    let n = f.h.n();
    let k = n / d;
    let rows = f.h.bit_rows()?;
    let co_rows = f.complement.bit_rows()?;
    let mut cond_both_free = None;
    let mut cond_girth = None;
    for subset in subsets_of_size(n, 2 * d) {
        if cond_both_free.is_some() && cond_girth.is_some() {
            break;
        }
        limits.check()?;
        if cond_both_free.is_none()
            && clique_number_in(rows, subset) <= d
            && clique_number_in(co_rows, subset) <= d
        {
            cond_both_free = Some(crate::graph::mask_vertices(subset));
        }
        if cond_girth.is_none() && (is_spanning_cycle(rows, subset) || is_spanning_cycle(co_rows, subset)) {
            cond_girth = Some(crate::graph::mask_vertices(subset));
        }
    }
    let sum = f.chi + f.chi_complement;
    let cond_critical = f.host_critical || f.complement_critical;
    let any = cond_critical || cond_both_free.is_some() || cond_girth.is_some();
    let bound = if any { k + 1 } else { k + 2 };
    Ok(RefinedConditionReport { d, k, cond_critical, cond_both_free, cond_girth, sum, bound, holds: sum <= bound })
}

/// Girth of the induced subgraph equals its order: every vertex has exactly
/// two neighbours inside and the subgraph is connected, i.e. it is a chordless
/// Hamiltonian cycle.
fn is_spanning_cycle(rows: &[u64], mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (rows[v] & mask).count_ones() != 2 {
            return false;
        }
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = rows[v] & mask & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == mask && mask.count_ones() >= 3
}

/// All `size`-element subsets of `0..n` as bitmasks, in increasing order (Gosper's hack).
fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if size == 0 { 0 } else { (1u64 << size) - 1 };
    let mut next = (size <= n).then_some(first);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            let c = current & current.wrapping_neg();
            let r = current + c;
            let candidate = (((r ^ current) >> 2) / c) | r;
            (candidate < limit).then_some(candidate)
        };
        Some(current)
    })
}

/// An extremal example with its expected pair `(χ_G(H), χ_G(H̄))`.
#[derive(Debug, Clone)]
pub struct WitnessCase {
    pub name: String,
    pub graph: Graph,
    pub pattern: PatternSpec,
    pub expected_chi: usize,
    pub expected_complement: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessOutcome {
    pub name: String,
    pub expected_chi: usize,
    pub expected_complement: usize,
    pub record: NgRecord,
    pub reproduced: bool,
}

/// The known sharp examples: `K_{4,4}` and `C_5` against themselves,
/// `K_3 + 3K_1` against `K_3`, and `K_{(k-1)δ} + (δ+1)K_1` against
/// `K_{δ+1}` for `(k, δ)` in `{(3,3), (3,4), (4,3)}`.
pub fn sharp_examples() -> Vec<WitnessCase> {
    let k44 = named::complete_bipartite(4, 4);
    let c5 = named::cycle(5).expect("valid");
    let mut cases = vec![
        WitnessCase {
            name: "K4,4 vs itself".into(),
            pattern: PatternSpec::single(k44.clone()).expect("valid"),
            graph: k44,
            expected_chi: 2,
            expected_complement: 1,
        },
        WitnessCase {
            name: "C5 vs itself".into(),
            pattern: PatternSpec::single(c5.clone()).expect("valid"),
            graph: c5,
            expected_chi: 2,
            expected_complement: 2,
        },
        WitnessCase {
            name: "K3+3K1 vs K3".into(),
            graph: named::clique_join_independent(3, 3),
            pattern: PatternSpec::single(named::complete(3)).expect("valid"),
            expected_chi: 2,
            expected_complement: 2,
        },
    ];
    for (k, delta) in [(3, 3), (3, 4), (4, 3)] {
        let graph = named::clique_join_independent((k - 1) * delta, delta + 1);
        cases.push(WitnessCase {
            name: format!("K{}+{}K1 vs K{}", (k - 1) * delta, delta + 1, delta + 1),
            graph,
            pattern: PatternSpec::single(named::complete(delta + 1)).expect("valid"),
            expected_chi: k,
            expected_complement: 2,
        });
    }
    cases
}

pub fn evaluate_witnesses(cases: &[WitnessCase]) -> Result<Vec<WitnessOutcome>> {
    cases
        .iter()
        .map(|case| {
            let record = ng_sum(&case.graph, &case.pattern)?;
            let reproduced = record.chi == case.expected_chi
                && record.chi_complement == case.expected_complement
                && record.sharp;
            Ok(WitnessOutcome {
                name: case.name.clone(),
                expected_chi: case.expected_chi,
                expected_complement: case.expected_complement,
                record,
                reproduced,
            })
        })
        .collect()
}

/// Evaluates [`sharp_examples`]; fails on the first example whose values
/// differ from the expected ones or that misses its bound.
pub fn witness_suite() -> Result<Vec<NgRecord>> {
    evaluate_witnesses(&sharp_examples())?
        .into_iter()
        .map(|o| {
            if o.reproduced {
                Ok(o.record)
            } else {
                Err(Error::WitnessMismatch {
                    name: o.name,
                    expected_chi: o.expected_chi,
                    expected_complement: o.expected_complement,
                    chi: o.record.chi,
                    chi_complement: o.record.chi_complement,
                })
            }
        })
        .collect()
}

/// One corpus entry: its 1-based line number (0 for generated graphs) and the parsed graph.
#[derive(Debug, Clone)]
pub struct CorpusItem {
    pub line: usize,
    pub graph: Result<Graph>,
}

impl CorpusItem {
    pub fn generated(graph: Graph) -> CorpusItem {
        CorpusItem { line: 0, graph: Ok(graph) }
    }
}

#[derive(Debug, Clone)]
pub struct AuditOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Budget per (graph, pattern) pair.
    pub time_limit: Option<Duration>,
    /// Extract and check a critical subgraph for every pair.
    pub certify_critical: bool,
    /// Fully re-audit certificates with at most this many vertices.
    pub reaudit_up_to: usize,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions { threads: None, time_limit: None, certify_critical: true, reaudit_up_to: 8 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    InvalidColoring,
    DegeneracyBound,
    MaxDegreeBound,
    SizeBound,
    /// Chromatic bound; reported, never fails a run.
    ChromaticBound,
    NgBranch,
    NgGeneral,
    CriticalMinDegree,
    CriticalityAudit,
}

impl ViolationKind {
    pub fn enforced(self) -> bool {
        self != ViolationKind::ChromaticBound
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph: String,
    pub pattern: String,
    pub kind: ViolationKind,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateSummary {
    pub order: usize,
    pub size: usize,
    pub k: usize,
    pub min_degree: usize,
    pub mindeg_check: bool,
    /// Full recomputation result; `None` when the certificate was too large.
    pub reaudited: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRecord {
    pub ng: NgRecord,
    pub bounds: BoundReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpInstance {
    pub graph: String,
    pub pattern: String,
    pub branch: NgBranch,
    pub sum: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AuditSummary {
    pub graphs: usize,
    pub pairs: usize,
    pub skipped_lines: usize,
    pub timeouts: usize,
    pub violations: usize,
    pub chromatic_violations: usize,
    pub sharp: usize,
    pub max_slack: Option<i64>,
    pub certificates: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub summary: AuditSummary,
    pub violations: Vec<Violation>,
    pub chromatic_violations: Vec<Violation>,
    pub sharp: Vec<SharpInstance>,
    pub records: Vec<AuditRecord>,
    pub warnings: Vec<String>,
}

impl AuditReport {
    /// True when a proved inequality failed somewhere.
    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }
}

struct PairOutcome {
    record: AuditRecord,
    violations: Vec<Violation>,
}

fn audit_pair(h: &Graph, pat: &PatternSpec, opts: &AuditOptions) -> Result<PairOutcome> {
    let limits = opts.time_limit.map_or_else(Limits::none, Limits::timeout);
    let complement = h.complement();
    let best = chi_g_exact_within(h, pat, &limits)?;
    let best_complement = chi_g_exact_within(&complement, pat, &limits)?;
    let facts = Facts {
        h,
        complement: &complement,
        chi: best.value,
        chi_complement: best_complement.value,
        host_critical: is_critical_within(h, pat, &limits)?,
        complement_critical: is_critical_within(&complement, pat, &limits)?,
    };
    let ng = select_branch(&facts, pat, &limits)?;
    let bounds = bound_report_for(h, pat, best.value)?;

    let mut violations = Vec::new();
    let mut flag = |kind: ViolationKind, detail: String| {
        violations.push(Violation { graph: ng.graph.clone(), pattern: ng.pattern.clone(), kind, detail });
    };
    for (graph, result) in [(h, &best), (&complement, &best_complement)] {
        if let Some((class, _)) = result.coloring.violation(graph, pat)? {
            flag(ViolationKind::InvalidColoring, format!("class {class} of an optimal colouring contains the pattern"));
        }
    }
    for check in bounds.checks.iter().filter(|c| !c.holds) {
        let kind = match check.kind {
            BoundKind::Degeneracy => ViolationKind::DegeneracyBound,
            BoundKind::MaxDegree => ViolationKind::MaxDegreeBound,
            BoundKind::Size => ViolationKind::SizeBound,
            BoundKind::Chromatic => ViolationKind::ChromaticBound,
        };
        flag(kind, format!("χ_G = {} exceeds {:?} bound {}", bounds.exact, check.kind, check.value));
    }
    if let (Some(bound), Some(slack)) = (ng.bound, ng.slack) {
        if slack < 0 {
            flag(ViolationKind::NgBranch, format!("sum {} exceeds {:?} bound {bound}", ng.sum, ng.branch));
        }
    }
    if let Some(general) = ng.general_bound {
        if ng.sum > general {
            flag(ViolationKind::NgGeneral, format!("sum {} exceeds general bound {general}", ng.sum));
        }
    }

    let certificate = if opts.certify_critical {
        let cert = extract_critical_within(h, pat, &limits)?;
        let reaudited = if cert.subgraph.vertices.len() <= opts.reaudit_up_to {
            Some(cert.is_consistent() && audit_certificate(&cert, pat)?)
        } else {
            None
        };
        if !cert.mindeg_check {
            flag(
                ViolationKind::CriticalMinDegree,
                format!("critical subgraph has δ = {} < {}·({} - 1)", cert.min_degree, cert.pattern_delta, cert.k),
            );
        }
        if reaudited == Some(false) {
            flag(ViolationKind::CriticalityAudit, format!("certificate on {:?} is not critical", cert.subgraph.vertices));
        }
        Some(CertificateSummary {
            order: cert.subgraph.vertices.len(),
            size: cert.subgraph.edges.len(),
            k: cert.k,
            min_degree: cert.min_degree,
            mindeg_check: cert.mindeg_check,
            reaudited,
        })
    } else {
        None
    };

    Ok(PairOutcome { record: AuditRecord { ng, bounds, certificate }, violations })
}

/// Audits every (graph, pattern) pair. Unreadable entries are skipped with a
/// warning; pairs that exceed the time limit are counted and skipped.
pub fn verify_corpus(corpus: Vec<CorpusItem>, patterns: &[PatternSpec], opts: &AuditOptions) -> Result<AuditReport> {
    let mut report = AuditReport::default();
    let mut graphs = Vec::new();
    for item in corpus {
        match item.graph {
            Ok(g) => graphs.push(g),
            Err(e) => {
                warn!("skipping line {}: {e}", item.line);
                report.summary.skipped_lines += 1;
                report.warnings.push(format!("line {}: {e}", item.line));
            }
        }
    }
    report.summary.graphs = graphs.len();

    let pairs: Vec<(&Graph, &PatternSpec)> =
        graphs.iter().flat_map(|g| patterns.iter().map(move |p| (g, p))).collect();
    let run = || -> Vec<(usize, Result<PairOutcome>)> {
        pairs.par_iter().enumerate().map(|(i, (g, p))| (i, audit_pair(g, p, opts))).collect()
    };
    let mut outcomes = match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    outcomes.sort_by_key(|(i, _)| *i);

    for (i, outcome) in outcomes {
        let (g, p) = pairs[i];
        match outcome {
            Ok(PairOutcome { record, violations }) => {
                for v in violations {
                    if v.kind.enforced() {
                        report.violations.push(v);
                    } else {
                        report.chromatic_violations.push(v);
                    }
                }
                if let (true, Some(bound)) = (record.ng.sharp, record.ng.bound) {
                    report.sharp.push(SharpInstance {
                        graph: record.ng.graph.clone(),
                        pattern: record.ng.pattern.clone(),
                        branch: record.ng.branch,
                        sum: record.ng.sum,
                        bound,
                    });
                }
                if record.certificate.is_some() {
                    report.summary.certificates += 1;
                }
                report.records.push(record);
            }
            Err(Error::Timeout) => {
                report.summary.timeouts += 1;
                report.warnings.push(format!("timeout on {} with pattern {p}", encode_graph6(g)));
            }
            Err(e) => return Err(e),
        }
    }

    let key = |graph: &str, pattern: &str| (graph.to_string(), pattern.to_string());
    report.records.sort_by_key(|r| key(&r.ng.graph, &r.ng.pattern));
    report.sharp.sort_by_key(|s| key(&s.graph, &s.pattern));
    report.violations.sort_by_key(|v| key(&v.graph, &v.pattern));
    report.chromatic_violations.sort_by_key(|v| key(&v.graph, &v.pattern));

    let s = &mut report.summary;
    s.pairs = report.records.len();
    s.violations = report.violations.len();
    s.chromatic_violations = report.chromatic_violations.len();
    s.sharp = report.sharp.len();
    s.max_slack = report.records.iter().filter_map(|r| r.ng.slack).max();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(g: Graph) -> PatternSpec {
        PatternSpec::single(g).unwrap()
    }

    #[test]
    fn k44_against_itself() {
        let k44 = named::complete_bipartite(4, 4);
        let r = ng_sum(&k44, &single(k44.clone())).unwrap();
        assert_eq!((r.chi, r.chi_complement, r.sum), (2, 1, 3));
        assert_eq!(r.branch, NgBranch::Critical);
        assert_eq!(r.bound, Some(3));
        assert!(r.sharp);
    }

    #[test]
    fn c5_against_itself() {
        let c5 = named::cycle(5).unwrap();
        let r = ng_sum(&c5, &single(c5.clone())).unwrap();
        assert_eq!((r.chi, r.chi_complement, r.sum), (2, 2, 4));
        assert_eq!(r.branch, NgBranch::TwoRegular);
        assert!(r.sharp);
    }

    #[test]
    fn k5_vertex_arboricity() {
        let r = ng_sum(&named::complete(5), &PatternSpec::all_two_regular()).unwrap();
        assert_eq!((r.chi, r.chi_complement), (3, 1));
        assert_eq!(r.bound, Some(4));
        assert!(r.sharp);
    }

    #[test]
    fn classic_bound_for_k2() {
        let c5 = named::cycle(5).unwrap();
        let r = ng_sum(&c5, &single(named::complete(2))).unwrap();
        assert_eq!(r.sum, 6);
        assert_eq!(r.bound, Some(6));
        assert!(r.sharp);
    }

    #[test]
    fn null_graph() {
        let r = ng_sum(&Graph::empty(0), &single(named::complete(3))).unwrap();
        assert_eq!(r.sum, 0);
        assert!(r.holds());
    }

    #[test]
    fn gosper_subsets() {
        let all: Vec<u64> = subsets_of_size(5, 2).collect();
        assert_eq!(all.len(), 10);
        assert!(all.iter().all(|m| m.count_ones() == 2 && *m < 32));
        assert_eq!(subsets_of_size(4, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of_size(3, 3).collect::<Vec<_>>(), vec![7]);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
    }

    #[test]
    fn refined_conditions_preconditions() {
        assert!(check_refined_conditions(&named::complete(8), 3).is_err());
        assert!(check_refined_conditions(&named::complete(6), 3).is_err());
        assert!(check_refined_conditions(&named::complete(8), 2).is_err());
    }

    #[test]
    fn complete_graph_fails_condition_two() {
        let r = check_refined_conditions(&named::complete(9), 3).unwrap();
        assert!(r.cond_both_free.is_none());
        assert!(r.cond_girth.is_none());
    }

    #[test]
    fn spanning_cycle_detection() {
        let h = named::cycle(6).unwrap().disjoint_union(&named::complete(3));
        let r = check_refined_conditions(&h, 3).unwrap();
        assert_eq!(r.cond_girth, Some(vec![0, 1, 2, 3, 4, 5]));
        assert!(r.cond_both_free.is_some());
        assert!(r.holds);
    }

    #[test]
    fn empty_witness_list() {
        assert!(evaluate_witnesses(&[]).unwrap().is_empty());
    }

    #[test]
    fn empty_corpus() {
        let report = verify_corpus(vec![], &[single(named::complete(3))], &AuditOptions::default()).unwrap();
        assert_eq!(report.summary.pairs, 0);
        assert!(!report.has_violations());
    }

    #[test]
    fn unreadable_lines_are_skipped() {
        let corpus = crate::formats::graph6::parse_graph6_lines("A_\nzz!\nBw\n")
            .into_iter()
            .map(|(line, graph)| CorpusItem { line, graph })
            .collect();
        let report = verify_corpus(corpus, &[single(named::complete(3))], &AuditOptions::default()).unwrap();
        assert_eq!(report.summary.graphs, 2);
        assert_eq!(report.summary.skipped_lines, 1);
        assert!(report.warnings[0].starts_with("line 2"));
    }
}
