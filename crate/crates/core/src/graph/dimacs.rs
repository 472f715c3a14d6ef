use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

/// Parses the DIMACS edge format (`c` comments, one `p edge <n> <m>` header,
/// `e <u> <v>` lines). The `col` format tag is accepted as a synonym for `edge`.
/// The header edge count is informational; duplicate edges collapse.
pub fn load_dimacs(text: &str) -> Result<Graph> {
    let err = |line: usize, message: String| Error::Dimacs { line, message };
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let mut tokens = raw.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if n.is_some() {
                    return Err(err(lineno, "duplicate header".into()));
                }
                let format = tokens.next();
                if !matches!(format, Some("edge" | "col")) {
                    return Err(err(lineno, format!("expected `p edge <n> <m>`, got `{raw}`")));
                }
                let nv = parse_count(tokens.next(), lineno, "vertex count")?;
                parse_count(tokens.next(), lineno, "edge count")?;
                if tokens.next().is_some() {
                    return Err(err(lineno, "trailing tokens after header".into()));
                }
                n = Some(nv);
            }
            "e" => {
                let Some(nv) = n else {
                    return Err(err(lineno, "edge line before header".into()));
                };
                let u = parse_count(tokens.next(), lineno, "edge endpoint")?;
                let v = parse_count(tokens.next(), lineno, "edge endpoint")?;
                if tokens.next().is_some() {
                    return Err(err(lineno, "trailing tokens after edge".into()));
                }
                for x in [u, v] {
                    if x == 0 || x > nv {
                        return Err(err(lineno, format!("endpoint {x} out of range 1..={nv}")));
                    }
                }
                if u == v {
                    return Err(err(lineno, format!("self-loop at vertex {u}")));
                }
                edges.push((u, v));
            }
            other => return Err(err(lineno, format!("unknown line type `{other}`"))),
        }
    }

    let n = n.ok_or_else(|| err(0, "missing `p edge` header".into()))?;
    Graph::from_edges(n, edges)
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Dimacs {
        line,
        message: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| Error::Dimacs {
        line,
        message: format!("invalid {what} `{tok}`"),
    })
}

/// Writes `g` in DIMACS edge format with edges in lexicographic order.
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}
