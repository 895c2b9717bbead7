use std::fs;
use std::path::Path;

use gfree::formats::dimacs::looks_like_dimacs;
use gfree::formats::graph6::parse_graph6_lines;
use gfree::named::parse_descriptor;
use gfree::ng::CorpusItem;
use gfree::{enumerate_small_graphs, parse_dimacs, Containment, Graph, PatternSpec};

use crate::CliError;

/// A pattern argument; `self` is resolved per host.
#[derive(Debug, Clone)]
pub enum PatternArg {
    Fixed(PatternSpec),
    SelfPattern,
}

impl PatternArg {
    pub fn parse(text: &str, induced: bool) -> Result<PatternArg, CliError> {
        let mode = if induced { Containment::Induced } else { Containment::Subgraph };
        let trimmed = text.trim();
        let spec = match trimmed {
            "self" => return Ok(PatternArg::SelfPattern),
            "cycles" => PatternSpec::all_two_regular(),
            _ => {
                let g = parse_descriptor(trimmed).map_err(|e| CliError::Usage(format!("pattern: {e}")))?;
                PatternSpec::single(g).map_err(|e| CliError::Usage(format!("pattern `{trimmed}`: {e}")))?.with_label(trimmed)
            }
        };
        Ok(PatternArg::Fixed(spec.with_mode(mode)))
    }

    pub fn resolve(&self, host: &Graph, induced: bool) -> Result<PatternSpec, CliError> {
        match self {
            PatternArg::Fixed(spec) => Ok(spec.clone()),
            PatternArg::SelfPattern => {
                let mode = if induced { Containment::Induced } else { Containment::Subgraph };
                Ok(PatternSpec::single(host.clone())
                    .map_err(|e| CliError::Usage(format!("pattern `self`: {e}")))?
                    .with_label("self")
                    .with_mode(mode))
            }
        }
    }
}

/// Reads a graph6 or DIMACS file into corpus items, one per graph.
pub fn read_corpus(path: &Path) -> Result<Vec<CorpusItem>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    if looks_like_dimacs(&text) {
        let graph = parse_dimacs(&text)?;
        return Ok(vec![CorpusItem { line: 1, graph: Ok(graph) }]);
    }
    Ok(parse_graph6_lines(&text).into_iter().map(|(line, graph)| CorpusItem { line, graph }).collect())
}

/// Graphs for the single-graph commands. Any parse failure is fatal.
pub fn host_graphs(descriptor: Option<&str>, input: Option<&Path>) -> Result<Vec<Graph>, CliError> {
    match (descriptor, input) {
        (Some(d), None) => Ok(vec![parse_descriptor(d)?]),
        (None, Some(path)) => read_corpus(path)?
            .into_iter()
            .map(|item| {
                item.graph.map_err(|e| CliError::Usage(format!("{} line {}: {e}", path.display(), item.line)))
            })
            .collect(),
        _ => Err(CliError::Usage("give exactly one of --graph or --input".into())),
    }
}

/// Corpus for `verify`: a file (bad lines become warnings) or all graphs up to `n` vertices.
pub fn audit_corpus(input: Option<&Path>, enumerate: Option<usize>) -> Result<Vec<CorpusItem>, CliError> {
    match (input, enumerate) {
        (Some(path), None) => read_corpus(path),
        (None, Some(n)) => {
            let mut items = Vec::new();
            for order in 0..=n {
                items.extend(enumerate_small_graphs(order)?.into_iter().map(CorpusItem::generated));
            }
            Ok(items)
        }
        _ => Err(CliError::Usage("give exactly one of --input or --enumerate".into())),
    }
}
