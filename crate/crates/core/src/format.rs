//! Line-oriented text formats.
//!
//! Graphs:
//!
//! ```text
//! # comment
//! p <n> <m>
//! e <u> <v>     (m lines, 0-based; repeat a line for a parallel edge)
//! ```
//!
//! Edge indices are the order of the `e` lines. Decompositions and
//! certificates are written as `key=value` lines; certificate matchings
//! follow as one row of sorted edge indices each.

use std::fmt::Write as _;

use thiserror::Error;

use crate::expansion::Certificate;
use crate::graph::Multigraph;
use crate::structure::{Decomposition, Diamond};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected `p <n> <m>` before any edge")]
    MissingHeader { line: usize },
    #[error("line {line}: duplicate `p` header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: malformed {what}: {text:?}")]
    Malformed {
        line: usize,
        what: &'static str,
        text: String,
    },
    #[error("line {line}: negative count {value}")]
    NegativeCount { line: usize, value: i64 },
    #[error("line {line}: endpoint {endpoint} out of range for {n} vertices")]
    EndpointOutOfRange {
        line: usize,
        endpoint: i64,
        n: usize,
    },
    #[error("line {line}: more edges than the declared {declared}")]
    TooManyEdges { line: usize, declared: usize },
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("no `p <n> <m>` header found")]
    NoHeader,
}

fn parse_ints(line: usize, what: &'static str, fields: &[&str]) -> Result<Vec<i64>, ParseError> {
    fields
        .iter()
        .map(|f| {
            f.parse::<i64>().map_err(|_| ParseError::Malformed {
                line,
                what,
                text: fields.join(" "),
            })
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<Multigraph, ParseError> {
    let mut graph: Option<(Multigraph, usize)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if graph.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                if fields.len() != 3 {
                    return Err(ParseError::Malformed {
                        line,
                        what: "header",
                        text: content.to_string(),
                    });
                }
                let nums = parse_ints(line, "header", &fields[1..])?;
                if let Some(&value) = nums.iter().find(|&&x| x < 0) {
                    return Err(ParseError::NegativeCount { line, value });
                }
                graph = Some((Multigraph::new(nums[0] as usize), nums[1] as usize));
            }
            "e" => {
                let Some((g, declared)) = graph.as_mut() else {
                    return Err(ParseError::MissingHeader { line });
                };
                if fields.len() != 3 {
                    return Err(ParseError::Malformed {
                        line,
                        what: "edge",
                        text: content.to_string(),
                    });
                }
                let nums = parse_ints(line, "edge", &fields[1..])?;
                let n = g.vertex_count();
                if let Some(&endpoint) = nums.iter().find(|&&x| x < 0 || x as usize >= n) {
                    return Err(ParseError::EndpointOutOfRange { line, endpoint, n });
                }
                if g.edge_count() == *declared {
                    return Err(ParseError::TooManyEdges {
                        line,
                        declared: *declared,
                    });
                }
                g.add_edge(nums[0] as usize, nums[1] as usize);
            }
            _ => {
                return Err(ParseError::Malformed {
                    line,
                    what: "record",
                    text: content.to_string(),
                })
            }
        }
    }
    let (g, declared) = graph.ok_or(ParseError::NoHeader)?;
    if g.edge_count() != declared {
        return Err(ParseError::EdgeCountMismatch {
            declared,
            found: g.edge_count(),
        });
    }
    Ok(g)
}

pub fn serialize_graph(g: &Multigraph) -> String {
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn diamond_text(d: &Diamond) -> String {
    format!(
        "{}:[{},{}]:{}",
        d.ports[0], d.internals[0], d.internals[1], d.ports[1]
    )
}

pub fn serialize_decomposition(d: &Decomposition, n: usize) -> String {
    let mut out = format!("kind={}\nn={n}\n", d.kind());
    match d {
        Decomposition::K4 => {}
        Decomposition::Ring(ring) => {
            writeln!(out, "diamonds={}", ring.len()).unwrap();
            for (i, dm) in ring.iter().enumerate() {
                writeln!(out, "diamond.{i}={}", diamond_text(dm)).unwrap();
            }
        }
        Decomposition::Expanded(x) => {
            writeln!(out, "k={}", x.k()).unwrap();
            writeln!(out, "diamonds={}", x.diamond_count()).unwrap();
            writeln!(out, "lengths=[{}]", join(x.lengths(), ",")).unwrap();
            for (e, &(u, v)) in x.base.edges().iter().enumerate() {
                writeln!(out, "base.{e}={u} {v}").unwrap();
            }
            for (v, t) in x.triangles.iter().enumerate() {
                writeln!(out, "triangle.{v}={}", join(t, ",")).unwrap();
            }
            for (e, gd) in x.gadgets.iter().enumerate() {
                writeln!(
                    out,
                    "gadget.{e}=corners={} port_edges={} diamonds={}",
                    join(gd.corners, ","),
                    join(&gd.port_edges, ","),
                    join(gd.diamonds().iter().map(diamond_text), " ")
                )
                .unwrap();
            }
        }
    }
    out
}

pub fn serialize_certificate(c: &Certificate) -> String {
    let mut out = String::new();
    writeln!(out, "branch={}", c.branch).unwrap();
    writeln!(out, "n={}", c.n).unwrap();
    writeln!(out, "edges={}", c.host.edge_count()).unwrap();
    writeln!(out, "matchings={}", c.matchings.len()).unwrap();
    writeln!(out, "generated={}", c.generated).unwrap();
    writeln!(
        out,
        "bound={}^12 {} 2^{}",
        c.matchings.len(),
        if c.bound_ok { ">" } else { "<=" },
        c.n
    )
    .unwrap();
    writeln!(out, "bound_ok={}", c.bound_ok).unwrap();
    for m in &c.matchings {
        writeln!(out, "{}", join(m.iter(), " ")).unwrap();
    }
    out
}
