//! Line-based instance format.
//!
//! ```text
//! # triangle with two terminals
//! v 0
//! v 1
//! v 2
//! t 0
//! t 2
//! e 0 0 1
//! e 1 1 2
//! e 2 2 0
//! rot 0 0 2
//! rot 1 1 0
//! rot 2 2 1
//! ```

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::planar_core::EmbeddedGraph;

fn num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::Parse {
        line,
        msg: format!("missing {what}"),
    })?;
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("bad {what} '{tok}'"),
    })
}

/// Parses an instance without checking Euler's formula.
pub fn parse_unchecked(text: &str) -> Result<EmbeddedGraph> {
    let mut g = EmbeddedGraph::new();
    let mut terminals = Vec::new();
    let mut edges = Vec::new();
    let mut rots = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let mut toks = body.split_whitespace();
        match toks.next().unwrap() {
            "v" => g.add_vertex(num(toks.next(), line, "vertex id")?),
            "t" => terminals.push((line, num(toks.next(), line, "vertex id")?)),
            "e" => {
                let e = num(toks.next(), line, "edge id")?;
                let u = num(toks.next(), line, "endpoint")?;
                let v = num(toks.next(), line, "endpoint")?;
                edges.push((line, e, u, v));
            }
            "rot" => {
                let v = num(toks.next(), line, "vertex id")?;
                let order = toks
                    .map(|t| num(Some(t), line, "edge id"))
                    .collect::<Result<Vec<_>>>()?;
                rots.push((line, v, order));
                continue;
            }
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown record '{other}'"),
                })
            }
        }
        if toks.next().is_some() {
            return Err(Error::Parse {
                line,
                msg: "trailing tokens".into(),
            });
        }
    }
    for (line, e, u, v) in edges {
        g.insert_edge_record(e, u, v).map_err(|err| Error::Parse {
            line,
            msg: err.to_string(),
        })?;
    }
    let mut has_rot = vec![false; g.vertex_bound()];
    for (line, v, order) in rots {
        if !g.contains(v) {
            return Err(Error::Parse {
                line,
                msg: format!("rotation for unknown vertex {v}"),
            });
        }
        if has_rot[v] {
            return Err(Error::Parse {
                line,
                msg: format!("second rotation for vertex {v}"),
            });
        }
        has_rot[v] = true;
        g.set_rotation(v, order);
    }
    for (line, t) in terminals {
        if !g.contains(t) {
            return Err(Error::Parse {
                line,
                msg: format!("terminal {t} is not a vertex"),
            });
        }
        g.set_terminal(t, true);
    }
    let mut degree = vec![0usize; g.vertex_bound()];
    for (_, u, v) in g.edges() {
        degree[u] += 1;
        degree[v] += 1;
    }
    if let Some(v) = g.vertices().find(|&v| degree[v] > 0 && !has_rot[v]) {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("vertex {v} has edges but no rotation record"),
        });
    }
    Ok(g)
}

/// Parses and validates an instance.
pub fn parse(text: &str) -> Result<EmbeddedGraph> {
    let g = parse_unchecked(text)?;
    g.validate()?;
    Ok(g)
}

/// Canonical text: vertices, terminals, edges, rotations, each ascending.
pub fn serialize(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        writeln!(out, "v {v}").unwrap();
    }
    for t in g.terminals() {
        writeln!(out, "t {t}").unwrap();
    }
    for (e, u, v) in g.edges() {
        writeln!(out, "e {e} {u} {v}").unwrap();
    }
    for v in g.vertices() {
        if g.degree(v) > 0 {
            write!(out, "rot {v}").unwrap();
            for e in g.rotation(v) {
                write!(out, " {e}").unwrap();
            }
            out.push('\n');
        }
    }
    out
}
