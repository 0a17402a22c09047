//! Turning cycle-space members of the base multigraph into 2-factors of `G`.
//!
//! For an even subgraph `C` of `H`:
//! - a triangle whose `H`-vertex has degree 2 in `C` is crossed by the path
//!   through its third corner; one with degree 0 contributes its 3-cycle;
//! - a diamond on an edge of `C` is crossed port to port through both
//!   internals, in one of two orders chosen by the routing bit;
//! - a diamond on an edge outside `C` contributes its 4-cycle.
//!
//! The result meets every vertex exactly twice, and its complement in a
//! cubic graph is a perfect matching.

mod certificate;
mod remark;

pub use certificate::{
    certify, certify_with, exceeds_bound, verify_certificate, Branch, Certificate, CertifyOptions,
    VerifyReport,
};
pub use remark::{verify_3ec_remark, ThreeEcReport};

use std::collections::HashMap;

use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::predicates::first_non_cubic;
use crate::structure::{edge_index, Decomposition, Diamond, Expansion};

/// One routing bit per diamond on the edges of the chosen cycle-space
/// member, ordered by base edge index and then along each string from its
/// `corners[0]` end. `false` crosses `port0 - internal0 - internal1 - port1`,
/// `true` crosses `port0 - internal1 - internal0 - port1`.
pub type RoutingChoice = [bool];

/// Precomputed edge lookups for repeated expansion against one decomposition.
pub struct Expander<'a> {
    g: &'a Multigraph,
    x: &'a Expansion,
    index: HashMap<(usize, usize), usize>,
}

impl<'a> Expander<'a> {
    pub fn new(g: &'a Multigraph, x: &'a Expansion) -> Self {
        Expander {
            g,
            x,
            index: edge_index(g),
        }
    }

    pub fn from_decomposition(g: &'a Multigraph, d: &'a Decomposition) -> Result<Self> {
        match d {
            Decomposition::Expanded(x) => Ok(Self::new(g, x)),
            _ => Err(Error::NotExpanded),
        }
    }

    pub fn expansion(&self) -> &Expansion {
        self.x
    }

    fn edge(&self, u: usize, v: usize) -> usize {
        self.index[&(u.min(v), u.max(v))]
    }

    /// Number of routing bits `c` needs: diamonds on its edges.
    pub fn routing_len(&self, c: &EdgeSet) -> usize {
        c.iter().map(|e| self.x.gadgets[e].length()).sum()
    }

    /// The 2-factor of `G` obtained from `c` under `routing`.
    pub fn expand(&self, c: &EdgeSet, routing: &RoutingChoice) -> Result<EdgeSet> {
        let h = &self.x.base;
        for v in 0..h.vertex_count() {
            let degree = h.degree_in(c, v);
            if degree != 0 && degree != 2 {
                return Err(Error::DegreeViolation {
                    vertex: v,
                    degree,
                    expected: "0 or 2",
                });
            }
        }
        let expected = self.routing_len(c);
        if routing.len() != expected {
            return Err(Error::RoutingMismatch {
                expected,
                got: routing.len(),
            });
        }

        let mut out = EdgeSet::empty(self.g.edge_count());
        for (v, tri) in self.x.triangles.iter().enumerate() {
            let active: Vec<usize> = h
                .incident(v)
                .iter()
                .filter(|&&e| c.contains(e))
                .map(|&e| self.x.corner(e, v))
                .collect();
            if active.is_empty() {
                out.insert(self.edge(tri[0], tri[1]));
                out.insert(self.edge(tri[1], tri[2]));
                out.insert(self.edge(tri[0], tri[2]));
            } else {
                let third = *tri.iter().find(|t| !active.contains(t)).unwrap();
                out.insert(self.edge(active[0], third));
                out.insert(self.edge(active[1], third));
            }
        }

        let mut bits = routing.iter().copied();
        for (e, gadget) in self.x.gadgets.iter().enumerate() {
            if c.contains(e) {
                for &pe in &gadget.port_edges {
                    out.insert(pe);
                }
                for pair in gadget.diamonds().windows(2) {
                    out.insert(self.edge(pair[0].ports[1], pair[1].ports[0]));
                }
                for d in gadget.diamonds() {
                    self.route(d, bits.next().unwrap(), &mut out);
                }
            } else {
                for d in gadget.diamonds() {
                    let [p, q] = d.ports;
                    let [a, b] = d.internals;
                    for (s, t) in [(p, a), (a, q), (q, b), (b, p)] {
                        out.insert(self.edge(s, t));
                    }
                }
            }
        }
        Ok(out)
    }

    fn route(&self, d: &Diamond, flip: bool, out: &mut EdgeSet) {
        let [p, q] = d.ports;
        let [a, b] = if flip {
            [d.internals[1], d.internals[0]]
        } else {
            d.internals
        };
        out.insert(self.edge(p, a));
        out.insert(self.edge(a, b));
        out.insert(self.edge(b, q));
    }
}

/// One-shot form of [`Expander::expand`].
pub fn expand(
    g: &Multigraph,
    d: &Decomposition,
    c: &EdgeSet,
    routing: &RoutingChoice,
) -> Result<EdgeSet> {
    Expander::from_decomposition(g, d)?.expand(c, routing)
}

/// `E(g) \ f` for a 2-factor `f` of a cubic graph.
pub fn complement_matching(g: &Multigraph, f: &EdgeSet) -> Result<EdgeSet> {
    if let Some((vertex, degree)) = first_non_cubic(g) {
        return Err(Error::NotCubic { vertex, degree });
    }
    require_degree(g, f, 2)?;
    let m = f.complement();
    debug_assert!(require_degree(g, &m, 1).is_ok());
    Ok(m)
}

/// Checks that every vertex has exactly `target` degree in `s`.
pub fn require_degree(g: &Multigraph, s: &EdgeSet, target: usize) -> Result<()> {
    for v in 0..g.vertex_count() {
        let degree = g.degree_in(s, v);
        if degree != target {
            return Err(Error::DegreeViolation {
                vertex: v,
                degree,
                expected: if target == 1 { "1" } else { "2" },
            });
        }
    }
    Ok(())
}
