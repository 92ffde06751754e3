//! Line-oriented text formats.
//!
//! Hypergraph files: `v <name>` declares a vertex, `e <name> <name> ...`
//! declares a hyperedge of at least two distinct names. Digraph files:
//! `v <name>` and `a <src> <dst>`. `#` starts a comment line, blank
//! lines are ignored, undeclared names are declared in order of first
//! appearance. Names starting with `_` are reserved for added vertices.

use std::fmt::Write as _;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

fn check_name(name: &str, line: usize) -> Result<()> {
    if name.starts_with('_') {
        return Err(Error::Parse {
            line,
            msg: format!("vertex name `{name}` is reserved (leading underscore)"),
        });
    }
    Ok(())
}

pub fn parse_hypergraph(input: &str) -> Result<Hypergraph> {
    let mut h = Hypergraph::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = lineno + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let mut tokens = text.split_whitespace();
        let directive = tokens.next().unwrap();
        let rest: Vec<&str> = tokens.collect();
        match directive {
            "v" => {
                if rest.len() != 1 {
                    return Err(Error::Parse {
                        line,
                        msg: "`v` takes exactly one vertex name".into(),
                    });
                }
                check_name(rest[0], line)?;
                h.ensure_vertex(rest[0]);
            }
            "e" => {
                if rest.len() < 2 {
                    return Err(Error::Parse {
                        line,
                        msg: format!(
                            "hyperedge needs at least two vertices, got {} (loops are forbidden)",
                            rest.len()
                        ),
                    });
                }
                for name in &rest {
                    check_name(name, line)?;
                }
                h.add_edge(&rest).map_err(|e| Error::Parse {
                    line,
                    msg: e.to_string(),
                })?;
            }
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown directive `{other}`"),
                });
            }
        }
    }
    Ok(h)
}

pub fn parse_digraph(input: &str) -> Result<Digraph> {
    let mut d = Digraph::new();
    for (lineno, raw) in input.lines().enumerate() {
        let line = lineno + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let mut tokens = text.split_whitespace();
        let directive = tokens.next().unwrap();
        let rest: Vec<&str> = tokens.collect();
        match directive {
            "v" => {
                if rest.len() != 1 {
                    return Err(Error::Parse {
                        line,
                        msg: "`v` takes exactly one vertex name".into(),
                    });
                }
                d.ensure_vertex(rest[0]);
            }
            "a" => {
                if rest.len() != 2 {
                    return Err(Error::Parse {
                        line,
                        msg: "`a` takes exactly two vertex names".into(),
                    });
                }
                d.add_arc(rest[0], rest[1]).map_err(|e| Error::Parse {
                    line,
                    msg: e.to_string(),
                })?;
            }
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown directive `{other}`"),
                });
            }
        }
    }
    Ok(d)
}

/// Emit a hypergraph: every vertex as a `v` line in declaration order,
/// then edges sorted lexicographically. Parsing the output reproduces
/// the input hypergraph exactly.
pub fn emit_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    for v in h.vertices() {
        let _ = writeln!(out, "v {v}");
    }
    for e in 0..h.edge_count() {
        let _ = writeln!(out, "e {}", h.edge_names(e).join(" "));
    }
    out
}

/// Emit a digraph: vertices in declaration order, arcs in insertion order.
pub fn emit_digraph(d: &Digraph) -> String {
    let mut out = String::new();
    for v in d.vertices() {
        let _ = writeln!(out, "v {v}");
    }
    for &(s, t) in d.arcs() {
        let _ = writeln!(out, "a {} {}", d.vertex_name(s), d.vertex_name(t));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic_hypergraph() {
        let h = parse_hypergraph("# triangle\nv a\ne a b\ne b c\ne a c\n").unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(h.vertices(), &["a", "b", "c"]);
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = parse_hypergraph("v a\ne a\n").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("loops"), "{msg}");
            }
            other => panic!("unexpected: {other}"),
        }
    }

    #[test]
    fn reserved_names_rejected() {
        assert!(parse_hypergraph("v _z1\n").is_err());
        assert!(parse_hypergraph("e _z1 a\n").is_err());
    }

    #[test]
    fn unknown_directive_rejected() {
        let err = parse_hypergraph("x a b\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn parse_emit_parse_is_identity() {
        let src = "v d\ne c b\ne a b\nv x\n";
        let h1 = parse_hypergraph(src).unwrap();
        let h2 = parse_hypergraph(&emit_hypergraph(&h1)).unwrap();
        assert_eq!(h1, h2);
    }

    #[test]
    fn digraph_roundtrip() {
        let src = "v z\na a b\na b c\n";
        let d1 = parse_digraph(src).unwrap();
        let d2 = parse_digraph(&emit_digraph(&d1)).unwrap();
        assert_eq!(d1, d2);
    }

    #[test]
    fn digraph_self_arc_rejected() {
        assert!(matches!(
            parse_digraph("a x x\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
