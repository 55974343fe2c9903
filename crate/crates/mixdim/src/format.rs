//! The edge-list text format.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v        (m lines, 0-indexed endpoints)
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. The declared edge
//! count must match the number of edge lines exactly.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use mixdim_core::Graph;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] mixdim_core::Error),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

fn pair(line: usize, text: &str) -> Result<(usize, usize), FormatError> {
    let mut it = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, FormatError> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if let Some(extra) = it.next() {
        return Err(parse_err(line, format!("unexpected token `{extra}`")));
    }
    Ok((a, b))
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(text.lines().count().max(1), "missing `n m` header"))?;
    let (n, m) = pair(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last = header_line;
    for (line, l) in lines {
        if edges.len() == m {
            return Err(parse_err(line, format!("more than the declared {m} edges")));
        }
        edges.push(pair(line, l)?);
        last = line;
    }
    if edges.len() != m {
        return Err(parse_err(
            last,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }
    Ok(Graph::new(n, edges)?)
}

pub fn parse_graph_file(path: &Path) -> Result<Graph, FormatError> {
    let text = std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_graph(&text)
}

/// Canonical text form: header then edges in sorted order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}
