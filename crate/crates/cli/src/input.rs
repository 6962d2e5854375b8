use std::fs;
use std::path::PathBuf;

use anyhow::Context;
use clap::Args;

use compedge::graph::io::{from_edge_list, from_graph6};
use compedge::{Error, Graph, MonomialIdeal};

#[derive(Args)]
pub struct GraphInput {
    /// Graph in graph6.
    #[arg(long, conflicts_with_all = ["edges", "input"])]
    pub graph6: Option<String>,
    /// Edge list: `<n> <m>` then one 1-based pair per line. A literal `\n`
    /// also separates lines.
    #[arg(long, conflicts_with = "input")]
    pub edges: Option<String>,
    /// File holding a graph6 line or an edge list.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

impl GraphInput {
    pub fn read(&self) -> anyhow::Result<Option<Graph>> {
        if let Some(code) = &self.graph6 {
            return Ok(Some(from_graph6(code.trim())?));
        }
        if let Some(text) = &self.edges {
            return Ok(Some(from_edge_list(&text.replace("\\n", "\n"))?));
        }
        let Some(path) = &self.input else {
            return Ok(None);
        };
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Ok(Some(parse_graph_text(&text)?))
    }
}

/// A single token on one line is graph6, anything else an edge list.
pub fn parse_graph_text(text: &str) -> compedge::Result<Graph> {
    let body: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    match body[..] {
        [line] if !line.contains(char::is_whitespace) => from_graph6(line),
        _ => from_edge_list(text),
    }
}

#[derive(Args)]
pub struct IdealInput {
    /// Ideal as JSON: `{"ambient": n, "generators": [[exponents], ...]}`.
    #[arg(long, conflicts_with_all = ["ideal_file", "ideal_text"])]
    pub ideal: Option<String>,
    /// File holding the JSON form.
    #[arg(long, conflicts_with = "ideal_text")]
    pub ideal_file: Option<PathBuf>,
    /// Generators as text, e.g. `(x1*x2, x1*x3*x4)`; needs --vars.
    #[arg(long, requires = "vars")]
    pub ideal_text: Option<String>,
    #[arg(long)]
    pub vars: Option<usize>,
}

impl IdealInput {
    pub fn read(&self) -> anyhow::Result<Option<MonomialIdeal>> {
        let json = match (&self.ideal, &self.ideal_file) {
            (Some(s), _) => Some(s.clone()),
            (None, Some(p)) => Some(fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?),
            (None, None) => None,
        };
        if let Some(json) = json {
            let ideal = serde_json::from_str(&json).map_err(|e| Error::Parse(format!("ideal JSON: {e}")))?;
            return Ok(Some(ideal));
        }
        match (&self.ideal_text, self.vars) {
            (Some(t), Some(n)) => Ok(Some(MonomialIdeal::parse(t, n)?)),
            _ => Ok(None),
        }
    }
}
