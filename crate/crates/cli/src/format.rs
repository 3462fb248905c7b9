//! Plain-text diagram files and DOT output.
//!
//! ```text
//! # comment
//! vertices 3
//! edge 0 1 1
//! edge 1 2 4
//! ```

use std::collections::HashSet;
use std::fmt::Write;

use cluster_recog::{Diagram, DiagramError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid diagram: {0}")]
    Invalid(#[from] DiagramError),
}

pub fn parse_diagram(text: &str) -> Result<Diagram, FormatError> {
    let syntax = |line: usize, message: String| FormatError::Syntax { line, message };
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str, what: &str| s.parse::<i64>().map_err(|_| syntax(ln, format!("{what} {s:?} is not an integer")));
        match fields[0] {
            "vertices" => {
                if n.is_some() {
                    return Err(syntax(ln, "repeated vertices line".into()));
                }
                let [_, v] = fields[..] else {
                    return Err(syntax(ln, "expected `vertices N`".into()));
                };
                let v = num(v, "vertex count")?;
                if v < 1 {
                    return Err(syntax(ln, "vertex count must be positive".into()));
                }
                n = Some(v as usize);
            }
            "edge" => {
                let Some(n) = n else {
                    return Err(syntax(ln, "edge before the vertices line".into()));
                };
                let [_, t, h, w] = fields[..] else {
                    return Err(syntax(ln, "expected `edge TAIL HEAD WEIGHT`".into()));
                };
                let (t, h, w) = (num(t, "tail")?, num(h, "head")?, num(w, "weight")?);
                for v in [t, h] {
                    if v < 0 || v as usize >= n {
                        return Err(syntax(ln, format!("vertex {v} out of range 0..{n}")));
                    }
                }
                if t == h {
                    return Err(syntax(ln, format!("self-loop at vertex {t}")));
                }
                if w <= 0 {
                    return Err(syntax(ln, format!("weight {w} is not positive")));
                }
                let (t, h) = (t as usize, h as usize);
                if !seen.insert((t.min(h), t.max(h))) {
                    return Err(syntax(ln, format!("second edge between {t} and {h}")));
                }
                edges.push((t, h, w));
            }
            other => return Err(syntax(ln, format!("unknown directive {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| syntax(text.lines().count().max(1), "missing vertices line".into()))?;
    Ok(Diagram::new(n, edges)?)
}

/// Edges sorted by tail, then head.
pub fn render_diagram(d: &Diagram) -> String {
    let mut s = format!("vertices {}\n", d.n());
    for (t, h, w) in d.edges() {
        writeln!(s, "edge {t} {h} {w}").unwrap();
    }
    s
}

/// Weight labels only on edges heavier than 1.
pub fn render_dot(d: &Diagram) -> String {
    let mut s = String::from("digraph diagram {\n");
    for v in 0..d.n() {
        writeln!(s, "  {v};").unwrap();
    }
    for (t, h, w) in d.edges() {
        if w == 1 {
            writeln!(s, "  {t} -> {h};").unwrap();
        } else {
            writeln!(s, "  {t} -> {h} [label=\"{w}\"];").unwrap();
        }
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let d = parse_diagram("# a path\nvertices 3\n\nedge 1 2 1 # trailing\nedge 0 1 2\n").unwrap();
        assert_eq!(render_diagram(&d), "vertices 3\nedge 0 1 2\nedge 1 2 1\n");
        assert_eq!(parse_diagram(&render_diagram(&d)).unwrap(), d);
    }

    #[test]
    fn positioned_errors() {
        for (text, line) in [
            ("vertices 2\nedge 0 1\n", 2),
            ("vertices 2\nedge 0 2 1\n", 2),
            ("edge 0 1 1\n", 1),
            ("vertices 2\nedge 0 1 1\nedge 1 0 1\n", 3),
            ("vertices 2\n\nnode 3\n", 3),
            ("vertices x\n", 1),
        ] {
            match parse_diagram(text) {
                Err(FormatError::Syntax { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!(matches!(
            parse_diagram("vertices 3\nedge 0 1 1\nedge 1 2 1\nedge 2 0 2\n"),
            Err(FormatError::Invalid(DiagramError::CycleNotSquare { .. }))
        ));
    }

    #[test]
    fn dot() {
        let d = Diagram::new(2, [(0, 1, 4)]).unwrap();
        assert_eq!(render_dot(&d), "digraph diagram {\n  0;\n  1;\n  0 -> 1 [label=\"4\"];\n}\n");
        let d = Diagram::new(2, [(1, 0, 1)]).unwrap();
        assert!(render_dot(&d).contains("  1 -> 0;\n"));
    }
}
