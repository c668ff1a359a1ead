//! Plain-text file formats.
//!
//! Edge list: first line `n m [multi]`, then `m` lines `u v` with 0-based
//! vertices; edge ids follow line order. Lines starting with `#` and blank
//! lines are skipped.
//!
//! Ordering: whitespace-separated tokens `u-v`, or `u-v#j` for the `j`-th
//! parallel copy (`#0` may be omitted), listed in label order.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::ordering::{EdgeOrdering, OrderingMode};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected {what}, found {tok:?}"),
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header `n m`".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let multi = match fields.as_slice() {
        [_, _] => false,
        [_, _, "multi"] => true,
        _ => {
            return Err(Error::Parse {
                line: hline,
                msg: format!("bad header {header:?}, expected `n m [multi]`"),
            })
        }
    };
    let n = parse_num(fields[0], hline, "vertex count")?;
    let m = parse_num(fields[1], hline, "edge count")?;

    let mut pairs = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    let mut last_line = hline;
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("expected `u v`, found {body:?}"),
            });
        }
        let u = parse_num(toks[0], line, "vertex")?;
        let v = parse_num(toks[1], line, "vertex")?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("vertex out of range 0..{n}"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line,
                msg: format!("loop at vertex {u}"),
            });
        }
        if !multi && !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse {
                line,
                msg: format!(
                    "edge {{{u},{v}}} repeated; add `multi` to the header for multigraphs"
                ),
            });
        }
        pairs.push((u, v));
        last_line = line;
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("header declares {m} edges, found {}", pairs.len()),
        });
    }
    Graph::from_edges(n, pairs, multi)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}", g.order(), g.edge_count());
    if g.allow_parallel() {
        out.push_str(" multi");
    }
    out.push('\n');
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

/// Ordering-file token of one edge.
pub fn edge_token(g: &Graph, id: EdgeId) -> String {
    let e = &g.edges()[id];
    match g.copy_index(id).expect("valid id") {
        0 => format!("{}-{}", e.u, e.v),
        j => format!("{}-{}#{j}", e.u, e.v),
    }
}

pub fn write_ordering(o: &EdgeOrdering) -> String {
    let toks: Vec<String> = o
        .sequence()
        .iter()
        .map(|&id| edge_token(o.graph(), id))
        .collect();
    toks.join(" ") + "\n"
}

fn parse_token(g: &Graph, tok: &str, line: usize) -> Result<EdgeId> {
    let bad = || Error::Parse {
        line,
        msg: format!("bad edge token {tok:?}, expected u-v or u-v#j"),
    };
    let (pair, copy) = match tok.split_once('#') {
        Some((p, j)) => (p, j.parse::<usize>().map_err(|_| bad())?),
        None => (tok, 0),
    };
    let (a, b) = pair.split_once('-').ok_or_else(bad)?;
    let a: usize = a.parse().map_err(|_| bad())?;
    let b: usize = b.parse().map_err(|_| bad())?;
    g.find_edge(a, b, copy).ok_or_else(|| Error::Parse {
        line,
        msg: format!("{tok:?} is not an edge of the graph"),
    })
}

pub fn parse_ordering(text: &str, g: Arc<Graph>, mode: OrderingMode) -> Result<EdgeOrdering> {
    let m = g.edge_count();
    let mut seen: Vec<Option<usize>> = vec![None; m];
    let mut sequence = Vec::with_capacity(m);
    for (line, body) in content_lines(text) {
        for tok in body.split_whitespace() {
            let id = parse_token(&g, tok, line)?;
            if let Some(prev) = seen[id] {
                return Err(Error::Parse {
                    line,
                    msg: format!("{tok:?} repeats the edge already given at label {prev}"),
                });
            }
            sequence.push(id);
            seen[id] = Some(sequence.len());
        }
    }
    let missing: Vec<String> = (0..m)
        .filter(|&id| seen[id].is_none())
        .map(|id| edge_token(&g, id))
        .collect();
    if !missing.is_empty() {
        return Err(Error::NotPermutation(format!(
            "missing edges: {}",
            missing.join(" ")
        )));
    }
    EdgeOrdering::new(g, sequence, mode)
}
