//! Decomposition of 2-edge-connected claw-free cubic graphs.
//!
//! Such a graph is `K4`, a ring of diamonds, or is obtained from a
//! 2-edge-connected cubic multigraph `H` by replacing every vertex with a
//! triangle and some edges with strings of diamonds. [`classify`] recovers
//! that description from a graph and [`build`] goes the other way.

mod build;
mod diamonds;

use std::collections::HashMap;

pub use build::build;
pub use diamonds::{find_diamonds, find_strings, Diamond, DiamondChains, DiamondString};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::predicates::{is_cubic, is_two_edge_connected, require_claw_free_cubic_bridgeless};

/// What replaced one edge of the base multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeGadget {
    /// Triangle corners the gadget attaches to, `corners[0] < corners[1]`.
    /// `corners[i]` belongs to the triangle of the base edge's `i`-th endpoint.
    pub corners: [usize; 2],
    /// Diamonds from the `corners[0]` side to the `corners[1]` side, or `None`
    /// for a length-0 edge.
    pub string: Option<DiamondString>,
    /// Edges of `G` leaving the corners: one edge for length 0, otherwise
    /// `[corner0-head, tail-corner1]`.
    pub port_edges: Vec<usize>,
}

impl EdgeGadget {
    pub fn length(&self) -> usize {
        self.string.as_ref().map_or(0, DiamondString::len)
    }

    pub fn diamonds(&self) -> &[Diamond] {
        self.string.as_ref().map_or(&[], |s| s.diamonds.as_slice())
    }
}

/// `G` described through its base multigraph `H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Expansion {
    /// Number of vertices of `G`.
    pub n: usize,
    pub base: Multigraph,
    /// Triangle of `G` replacing each vertex of `H`, sorted ascending.
    pub triangles: Vec<[usize; 3]>,
    /// Indexed like the edges of `base`.
    pub gadgets: Vec<EdgeGadget>,
}

impl Expansion {
    /// `k = |V(H)|`.
    pub fn k(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.gadgets.iter().map(EdgeGadget::length).collect()
    }

    pub fn diamond_count(&self) -> usize {
        self.gadgets.iter().map(EdgeGadget::length).sum()
    }

    /// The corner of `v`'s triangle where base edge `e` attaches.
    pub fn corner(&self, e: usize, v: usize) -> usize {
        let (a, _) = self.base.endpoints(e);
        self.gadgets[e].corners[if a == v { 0 } else { 1 }]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Decomposition {
    K4,
    /// Diamonds in cyclic order; `ports[1]` of each is adjacent to
    /// `ports[0]` of the next.
    Ring(Vec<Diamond>),
    Expanded(Expansion),
}

impl Decomposition {
    pub fn kind(&self) -> &'static str {
        match self {
            Decomposition::K4 => "k4",
            Decomposition::Ring(_) => "ring",
            Decomposition::Expanded(_) => "expanded",
        }
    }
}

/// Classifies a simple claw-free cubic 2-edge-connected graph.
///
/// Rings of diamonds are recognized first, then `K4`, then the general case.
pub fn classify(g: &Multigraph) -> Result<Decomposition> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    require_claw_free_cubic_bridgeless(g)?;
    let chains = find_strings(g)?;

    if let Some(ring) = chains.rings.first() {
        if chains.rings.len() != 1
            || !chains.strings.is_empty()
            || ring.len() * 4 != g.vertex_count()
        {
            return Err(Error::StructureViolation(
                "closed diamond chain in a graph that is not a ring".into(),
            ));
        }
        if ring.len() < 2 {
            return Err(Error::TooFewDiamonds(ring.len()));
        }
        return Ok(Decomposition::Ring(ring.clone()));
    }
    if g.vertex_count() == 4 {
        return Ok(Decomposition::K4);
    }
    contract_to_base(g, &chains.strings).map(Decomposition::Expanded)
}

/// Contracts every triangle of `g` and every string in `strings` to obtain
/// the base multigraph together with the maps back into `g`.
///
/// `g` must not be `K4` or a ring of diamonds.
pub fn contract_to_base(g: &Multigraph, strings: &[DiamondString]) -> Result<Expansion> {
    let n = g.vertex_count();
    let violation = |msg: String| Error::StructureViolation(msg);

    let mut in_string = vec![false; n];
    for s in strings {
        for d in &s.diamonds {
            for v in d.vertices() {
                in_string[v] = true;
            }
        }
    }

    // Every remaining vertex must lie in exactly one triangle.
    let mut triangle_of_vertex: Vec<Option<[usize; 3]>> = vec![None; n];
    for v in (0..n).filter(|&v| !in_string[v]) {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        let mut found = Vec::new();
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                if g.adjacent(nbrs[i], nbrs[j]) {
                    let mut t = [v, nbrs[i], nbrs[j]];
                    t.sort_unstable();
                    found.push(t);
                }
            }
        }
        if found.len() != 1 {
            return Err(violation(format!(
                "vertex {v} lies in {} triangles, expected 1",
                found.len()
            )));
        }
        if found[0].iter().any(|&w| in_string[w]) {
            return Err(violation(format!("triangle at {v} touches a diamond")));
        }
        triangle_of_vertex[v] = Some(found[0]);
    }

    let mut triangles: Vec<[usize; 3]> = triangle_of_vertex.iter().flatten().copied().collect();
    triangles.sort_unstable();
    triangles.dedup();
    let mut h_vertex = vec![usize::MAX; n];
    for (i, t) in triangles.iter().enumerate() {
        for &v in t {
            if h_vertex[v] != usize::MAX {
                return Err(violation(format!("vertex {v} lies in two triangles")));
            }
            h_vertex[v] = i;
        }
    }

    let outside = |v: usize| -> usize {
        let t = triangle_of_vertex[v].expect("triangle vertex");
        g.neighbors(v).find(|w| !t.contains(w)).expect("cubic")
    };
    let edge = |u: usize, v: usize| -> usize { g.edge_between(u, v).expect("adjacent") };

    let mut gadgets = Vec::new();
    for v in (0..n).filter(|&v| !in_string[v]) {
        let w = outside(v);
        if !in_string[w] && v < w {
            gadgets.push(EdgeGadget {
                corners: [v, w],
                string: None,
                port_edges: vec![edge(v, w)],
            });
        }
    }
    for s in strings {
        let corner_of = |d: &Diamond, port: usize| -> Result<usize> {
            g.neighbors(port)
                .find(|w| !d.contains(*w))
                .filter(|&w| !in_string[w])
                .ok_or_else(|| violation(format!("string end {port} is not next to a triangle")))
        };
        let first = &s.diamonds[0];
        let last = &s.diamonds[s.len() - 1];
        let (a, b) = (corner_of(first, s.head)?, corner_of(last, s.tail)?);
        let (corners, string) = if a < b {
            ([a, b], s.clone())
        } else {
            ([b, a], s.reversed())
        };
        gadgets.push(EdgeGadget {
            corners,
            port_edges: vec![edge(corners[0], string.head), edge(string.tail, corners[1])],
            string: Some(string),
        });
    }
    gadgets.sort_by_key(|gd| gd.port_edges.iter().copied().min());

    let mut base = Multigraph::new(triangles.len());
    for gd in &gadgets {
        base.add_edge(h_vertex[gd.corners[0]], h_vertex[gd.corners[1]]);
    }
    if base.has_loops() {
        return Err(violation("contracted multigraph has a loop".into()));
    }
    if !is_cubic(&base) || !is_two_edge_connected(&base) {
        return Err(violation(
            "contracted multigraph is not cubic and 2-edge-connected".into(),
        ));
    }
    Ok(Expansion {
        n,
        base,
        triangles,
        gadgets,
    })
}

/// Edges of `g` named by a decomposition, as sorted vertex pairs; used to
/// check that a decomposition describes `g` exactly.
pub fn described_edges(d: &Decomposition, g: &Multigraph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut push = |u: usize, v: usize| out.push((u.min(v), u.max(v)));
    let diamond = |d: &Diamond, push: &mut dyn FnMut(usize, usize)| {
        let [p, q] = d.ports;
        let [x, y] = d.internals;
        for (a, b) in [(p, x), (p, y), (x, y), (x, q), (y, q)] {
            push(a, b);
        }
    };
    match d {
        Decomposition::K4 => {
            for &(u, v) in g.edges() {
                push(u, v);
            }
        }
        Decomposition::Ring(ds) => {
            for (i, dm) in ds.iter().enumerate() {
                diamond(dm, &mut push);
                push(dm.ports[1], ds[(i + 1) % ds.len()].ports[0]);
            }
        }
        Decomposition::Expanded(x) => {
            for t in &x.triangles {
                push(t[0], t[1]);
                push(t[1], t[2]);
                push(t[0], t[2]);
            }
            for gd in &x.gadgets {
                match &gd.string {
                    None => push(gd.corners[0], gd.corners[1]),
                    Some(s) => {
                        push(gd.corners[0], s.head);
                        push(s.tail, gd.corners[1]);
                        for dm in &s.diamonds {
                            diamond(dm, &mut push);
                        }
                        for pair in s.diamonds.windows(2) {
                            push(pair[0].ports[1], pair[1].ports[0]);
                        }
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Lookup from sorted vertex pair to edge index, for simple graphs.
pub(crate) fn edge_index(g: &Multigraph) -> HashMap<(usize, usize), usize> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| ((u.min(v), u.max(v)), e))
        .collect()
}
