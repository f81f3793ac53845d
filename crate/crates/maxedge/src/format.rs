//! Line-oriented text formats. Vertex ids and colors are 1-based on disk.
//!
//! Graph: `p edge <n> <m>` then `e <u> <v>` lines, optionally followed by
//! capacity lines `f <v> <1|2>` and a target line `t <l>`. Coloring:
//! `s coloring <k>` then `l <u> <v> <color>` per edge. Lifting sidecar:
//! `o <n>` then `del <v>`, `contract <v> into <u> via <w>` and
//! `cycle <v1> <v2> ...` lines. MCIS: `p mcis <n> <m> <k>`, `v <vertex>
//! <class>` and `e <u> <v>` lines. Lines starting with `c` are comments.

use std::collections::HashSet;
use std::fmt::Write as _;

use maxedge_core::{EdgeColoring, Graph, GraphError, LiftOp, Lifting, MCISInstance};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `p` header")]
    MissingHeader,
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("{0}")]
    Invalid(String),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Significant lines as (1-based line number, tokens).
fn tokens(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let t: Vec<&str> = raw.split_whitespace().collect();
        match t.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, t)),
        }
    })
}

fn number(line: usize, s: &str) -> Result<usize, FormatError> {
    s.parse()
        .map_err(|_| syntax(line, format!("expected a nonnegative integer, found `{s}`")))
}

/// A 1-based id in `1..=n`, returned 0-based.
fn vertex(line: usize, s: &str, n: usize) -> Result<usize, FormatError> {
    let v = number(line, s)?;
    if v == 0 || v > n {
        return Err(FormatError::Graph {
            line,
            source: GraphError::VertexOutOfRange { vertex: v, n },
        });
    }
    Ok(v - 1)
}

fn arity(line: usize, t: &[&str], want: usize) -> Result<(), FormatError> {
    if t.len() != want {
        return Err(syntax(line, format!("`{}` takes {} fields", t[0], want - 1)));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    /// Per-vertex capacities, when any `f` line is present (missing vertices
    /// default to 2).
    pub f: Option<Vec<usize>>,
    pub threshold: Option<usize>,
}

pub fn parse_graph_document(text: &str) -> Result<GraphDocument, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut lines_of = Vec::new();
    let mut f: Option<Vec<usize>> = None;
    let mut threshold = None;
    for (line, t) in tokens(text) {
        match t[0] {
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "second `p` header"));
                }
                arity(line, &t, 4)?;
                if t[1] != "edge" {
                    return Err(syntax(line, format!("expected `p edge`, found `p {}`", t[1])));
                }
                header = Some((number(line, t[2])?, number(line, t[3])?));
            }
            "e" => {
                let (n, _) = header.ok_or(FormatError::MissingHeader)?;
                arity(line, &t, 3)?;
                edges.push((vertex(line, t[1], n)?, vertex(line, t[2], n)?));
                lines_of.push(line);
            }
            "f" => {
                let (n, _) = header.ok_or(FormatError::MissingHeader)?;
                arity(line, &t, 3)?;
                let v = vertex(line, t[1], n)?;
                let cap = number(line, t[2])?;
                if cap != 1 && cap != 2 {
                    return Err(syntax(line, format!("capacity must be 1 or 2, found {cap}")));
                }
                f.get_or_insert_with(|| vec![2; n])[v] = cap;
            }
            "t" => {
                arity(line, &t, 2)?;
                threshold = Some(number(line, t[1])?);
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or(FormatError::MissingHeader)?;
    if edges.len() != m {
        return Err(FormatError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    // check simplicity here so an error can name its line
    let mut seen = HashSet::with_capacity(m);
    for (i, &(u, v)) in edges.iter().enumerate() {
        let source = if u == v {
            GraphError::SelfLoop(u + 1)
        } else if !seen.insert((u.min(v), u.max(v))) {
            GraphError::DuplicateEdge(u.min(v) + 1, u.max(v) + 1)
        } else {
            continue;
        };
        return Err(FormatError::Graph {
            line: lines_of[i],
            source,
        });
    }
    Ok(GraphDocument {
        graph: Graph::new(n, edges).expect("checked above"),
        f,
        threshold,
    })
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    parse_graph_document(text).map(|d| d.graph)
}

pub fn render_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn render_graph_document(doc: &GraphDocument) -> String {
    let mut out = render_graph(&doc.graph);
    if let Some(f) = &doc.f {
        for (v, cap) in f.iter().enumerate() {
            let _ = writeln!(out, "f {} {}", v + 1, cap);
        }
    }
    if let Some(t) = doc.threshold {
        let _ = writeln!(out, "t {t}");
    }
    out
}

/// Reads a coloring of `g`; every edge must be listed exactly once and the
/// colors must be exactly `1..=k`.
pub fn parse_coloring(text: &str, g: &Graph) -> Result<EdgeColoring, FormatError> {
    let mut k = None;
    let mut colors: Vec<Option<usize>> = vec![None; g.m()];
    for (line, t) in tokens(text) {
        match t[0] {
            "s" => {
                arity(line, &t, 3)?;
                if t[1] != "coloring" {
                    return Err(syntax(line, "expected `s coloring <k>`"));
                }
                if k.is_some() {
                    return Err(syntax(line, "second `s` header"));
                }
                k = Some(number(line, t[2])?);
            }
            "l" => {
                let k = k.ok_or(FormatError::MissingHeader)?;
                arity(line, &t, 4)?;
                let u = vertex(line, t[1], g.n())?;
                let v = vertex(line, t[2], g.n())?;
                let c = number(line, t[3])?;
                if c == 0 || c > k {
                    return Err(syntax(line, format!("color {c} outside 1..={k}")));
                }
                let e = g
                    .edge_between(u, v)
                    .ok_or_else(|| syntax(line, format!("{} {} is not an edge", u + 1, v + 1)))?;
                if colors[e].replace(c - 1).is_some() {
                    return Err(syntax(line, format!("edge {} {} colored twice", u + 1, v + 1)));
                }
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    let k = k.ok_or(FormatError::MissingHeader)?;
    let colors = colors
        .into_iter()
        .enumerate()
        .map(|(e, c)| {
            c.ok_or_else(|| {
                let (u, v) = g.endpoints(e);
                FormatError::Invalid(format!("edge {} {} has no color", u + 1, v + 1))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let c = EdgeColoring::new(colors).map_err(|e| FormatError::Invalid(e.to_string()))?;
    if c.num_colors() != k {
        return Err(FormatError::Invalid(format!(
            "header declares {k} colors but {} are used",
            c.num_colors()
        )));
    }
    Ok(c)
}

pub fn render_coloring(g: &Graph, c: &EdgeColoring) -> String {
    let mut out = format!("s coloring {}\n", c.num_colors());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "l {} {} {}", u + 1, v + 1, c.color(e) + 1);
    }
    out
}

pub fn render_lifting(l: &Lifting) -> String {
    let mut out = format!("o {}\n", l.original_n);
    for op in &l.ops {
        match op {
            LiftOp::Delete(v) => {
                let _ = writeln!(out, "del {}", v + 1);
            }
            LiftOp::Contract { v, u, via } => {
                let _ = writeln!(out, "contract {} into {} via {}", v + 1, u + 1, via + 1);
            }
            LiftOp::DropCycle(cycle) => {
                out.push_str("cycle");
                for v in cycle {
                    let _ = write!(out, " {}", v + 1);
                }
                out.push('\n');
            }
        }
    }
    out
}

pub fn parse_lifting(text: &str) -> Result<Lifting, FormatError> {
    let mut n = None;
    let mut ops = Vec::new();
    for (line, t) in tokens(text) {
        let total = n.unwrap_or(0);
        match t[0] {
            "o" => {
                arity(line, &t, 2)?;
                n = Some(number(line, t[1])?);
            }
            "del" => {
                n.ok_or(FormatError::MissingHeader)?;
                arity(line, &t, 2)?;
                ops.push(LiftOp::Delete(vertex(line, t[1], total)?));
            }
            "contract" => {
                n.ok_or(FormatError::MissingHeader)?;
                arity(line, &t, 6)?;
                if t[2] != "into" || t[4] != "via" {
                    return Err(syntax(line, "expected `contract <v> into <u> via <w>`"));
                }
                ops.push(LiftOp::Contract {
                    v: vertex(line, t[1], total)?,
                    u: vertex(line, t[3], total)?,
                    via: vertex(line, t[5], total)?,
                });
            }
            "cycle" => {
                n.ok_or(FormatError::MissingHeader)?;
                if t.len() < 4 {
                    return Err(syntax(line, "a cycle needs at least 3 vertices"));
                }
                let cycle = t[1..]
                    .iter()
                    .map(|s| vertex(line, s, total))
                    .collect::<Result<Vec<_>, _>>()?;
                ops.push(LiftOp::DropCycle(cycle));
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    Ok(Lifting {
        original_n: n.ok_or(FormatError::MissingHeader)?,
        ops,
    })
}

pub fn parse_mcis(text: &str) -> Result<MCISInstance, FormatError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut class: Vec<Option<usize>> = Vec::new();
    let mut edges = Vec::new();
    for (line, t) in tokens(text) {
        match t[0] {
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "second `p` header"));
                }
                arity(line, &t, 5)?;
                if t[1] != "mcis" {
                    return Err(syntax(line, "expected `p mcis <n> <m> <k>`"));
                }
                let n = number(line, t[2])?;
                header = Some((n, number(line, t[3])?, number(line, t[4])?));
                class = vec![None; n];
            }
            "v" => {
                let (n, _, k) = header.ok_or(FormatError::MissingHeader)?;
                arity(line, &t, 3)?;
                let v = vertex(line, t[1], n)?;
                let c = number(line, t[2])?;
                if c == 0 || c > k {
                    return Err(syntax(line, format!("class {c} outside 1..={k}")));
                }
                if class[v].replace(c - 1).is_some() {
                    return Err(syntax(line, format!("vertex {} assigned twice", v + 1)));
                }
            }
            "e" => {
                let (n, _, _) = header.ok_or(FormatError::MissingHeader)?;
                arity(line, &t, 3)?;
                edges.push((vertex(line, t[1], n)?, vertex(line, t[2], n)?));
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m, k) = header.ok_or(FormatError::MissingHeader)?;
    if edges.len() != m {
        return Err(FormatError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    let graph = Graph::new(n, edges).map_err(|e| FormatError::Invalid(e.to_string()))?;
    let class = class
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| FormatError::Invalid(format!("vertex {} has no class", v + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    MCISInstance::new(graph, class, k).map_err(|e| FormatError::Invalid(e.to_string()))
}

pub fn render_mcis(inst: &MCISInstance) -> String {
    let g = inst.graph();
    let mut out = format!("p mcis {} {} {}\n", g.n(), g.m(), inst.k());
    for v in 0..g.n() {
        let _ = writeln!(out, "v {} {}", v + 1, inst.class_of(v) + 1);
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
