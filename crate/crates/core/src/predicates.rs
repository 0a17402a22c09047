//! Basic graph predicates: cubicity, connectivity, bridges, claws.
//!
//! All of these accept arbitrary multigraphs (including `n = 0` and
//! disconnected inputs) except [`find_claw`], which is only meaningful on
//! simple graphs.

use std::fmt;

use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// An induced `K_{1,3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

impl fmt::Display for Claw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.leaves;
        write!(
            f,
            "claw centered at {} with leaves {a}, {b}, {c}",
            self.center
        )
    }
}

pub fn is_cubic(g: &Multigraph) -> bool {
    first_non_cubic(g).is_none()
}

/// The first vertex whose degree is not 3, with its degree.
pub fn first_non_cubic(g: &Multigraph) -> Option<(usize, usize)> {
    (0..g.vertex_count())
        .map(|v| (v, g.degree(v)))
        .find(|&(_, d)| d != 3)
}

/// Component label per vertex and the number of components.
pub fn components(g: &Multigraph) -> (Vec<usize>, usize) {
    let n = g.vertex_count();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                if label[u] == usize::MAX {
                    label[u] = count;
                    stack.push(u);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// True for graphs with at most one component; the empty graph counts as connected.
pub fn is_connected(g: &Multigraph) -> bool {
    components(g).1 <= 1
}

/// All bridges, found by an iterative lowpoint traversal.
///
/// The traversal skips the tree edge by index rather than by endpoint, so a
/// parallel pair never yields a bridge. Loops are never bridges.
pub fn bridges(g: &Multigraph) -> EdgeSet {
    let n = g.vertex_count();
    let mut out = EdgeSet::empty(g.edge_count());
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    // (vertex, edge used to enter it, next incidence position)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, usize::MAX, 0));

        while let Some(frame) = stack.last_mut() {
            let (v, parent_edge, pos) = *frame;
            if let Some(&e) = g.incident(v).get(pos) {
                frame.2 += 1;
                if e == parent_edge {
                    continue;
                }
                let u = g.other_end(e, v);
                if disc[u] == usize::MAX {
                    disc[u] = time;
                    low[u] = time;
                    time += 1;
                    stack.push((u, e, 0));
                } else {
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.insert(parent_edge);
                    }
                }
            }
        }
    }
    out
}

/// Connected, at least two vertices, and bridgeless.
pub fn is_two_edge_connected(g: &Multigraph) -> bool {
    g.vertex_count() >= 2 && is_connected(g) && bridges(g).is_empty()
}

/// No set of at most two edges disconnects `g`.
///
/// Checked by deleting each edge in turn and looking for a bridge in what
/// remains. Disconnected graphs report false.
pub fn is_three_edge_connected(g: &Multigraph) -> bool {
    if !is_two_edge_connected(g) {
        return false;
    }
    (0..g.edge_count()).all(|e| {
        let h = g.without_edge(e);
        is_connected(&h) && bridges(&h).is_empty()
    })
}

/// Some induced claw, or `None` if the graph is claw-free.
///
/// Rejects graphs with loops or parallel edges.
pub fn find_claw(g: &Multigraph) -> Result<Option<Claw>> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    for center in 0..g.vertex_count() {
        let nbrs: Vec<usize> = g.neighbors(center).collect();
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                if g.adjacent(nbrs[i], nbrs[j]) {
                    continue;
                }
                for k in j + 1..nbrs.len() {
                    if !g.adjacent(nbrs[i], nbrs[k]) && !g.adjacent(nbrs[j], nbrs[k]) {
                        return Ok(Some(Claw {
                            center,
                            leaves: [nbrs[i], nbrs[j], nbrs[k]],
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn is_claw_free(g: &Multigraph) -> Result<bool> {
    Ok(find_claw(g)?.is_none())
}

/// Checks the hypotheses shared by the structure and certificate code:
/// simple, cubic, claw-free and 2-edge-connected, reported in that order.
pub fn require_claw_free_cubic_bridgeless(g: &Multigraph) -> Result<()> {
    if let Some((vertex, degree)) = first_non_cubic(g) {
        return Err(Error::NotCubic { vertex, degree });
    }
    if let Some(claw) = find_claw(g)? {
        return Err(Error::NotClawFree(claw));
    }
    if !is_two_edge_connected(g) {
        return Err(Error::NotTwoEdgeConnected {
            bridge: bridges(g).iter().next(),
        });
    }
    Ok(())
}
