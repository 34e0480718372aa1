//! Reading and writing digraphs.
//!
//! JSON is the exact format: `{"n": 3, "edges": [[0, 1], ...], "names": [...]}`
//! with edges sorted on output. The plain-text format has the vertex count
//! on the first line and one `u v` pair per following line; blank lines and
//! lines starting with `#` are skipped. DOT is write-only.

use std::fmt::Write as _;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub fn to_json(d: &Digraph) -> String {
    serde_json::to_string(d).expect("digraphs always serialise")
}

pub fn from_json(s: &str) -> Result<Digraph> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_text(d: &Digraph) -> String {
    let mut out = format!("{}\n", d.n());
    for (u, v) in d.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn from_text(s: &str) -> Result<Digraph> {
    let mut lines = s
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, first) = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let n = first
        .parse()
        .map_err(|_| Error::Parse(format!("line 1: expected a vertex count, got `{first}`")))?;
    let mut edges = Vec::new();
    for (no, line) in lines {
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("line {no}: expected `u v`, got `{line}`")))?;
        match nums[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(Error::Parse(format!("line {no}: expected `u v`, got `{line}`"))),
        }
    }
    Digraph::new(n, edges)
}

/// Picks the format from the first non-blank character: `{` means JSON.
pub fn parse(s: &str) -> Result<Digraph> {
    if s.trim_start().starts_with('{') {
        from_json(s)
    } else {
        from_text(s)
    }
}

/// Graphviz rendering. Loops are drawn as self-edges; vertex names become
/// labels when present.
pub fn to_dot(d: &Digraph, title: &str) -> String {
    let mut out = format!("digraph \"{}\" {{\n", title.replace('"', "\\\""));
    for v in 0..d.n() {
        match d.names() {
            Some(names) => {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", names[v].replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in d.edges() {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue::t4;

    #[test]
    fn json_is_sorted_and_exact() {
        let d = Digraph::new(3, [(2, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(to_json(&d), r#"{"n":3,"edges":[[0,1],[1,2],[2,0]]}"#);
        let named = d.clone().with_names(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        assert_eq!(from_json(&to_json(&named)).unwrap(), named);
    }

    #[test]
    fn text_round_trip() {
        let d = t4();
        assert_eq!(from_text(&to_text(&d)).unwrap(), d);
        assert_eq!(parse("# comment\n2\n\n0 1\n").unwrap(), Digraph::new(2, [(0, 1)]).unwrap());
    }

    #[test]
    fn bad_input() {
        assert!(matches!(parse("x"), Err(Error::Parse(_))));
        assert!(matches!(parse("2\n0 1 2"), Err(Error::Parse(_))));
        assert!(matches!(parse("2\n0 5"), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn dot_lists_every_edge() {
        let d = t4();
        let dot = to_dot(&d, "T4");
        assert_eq!(dot.matches("->").count(), d.edge_count());
    }
}
