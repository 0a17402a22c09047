use crate::edge_set::EdgeSet;

/// An undirected multigraph on vertices `0..n` with an indexed edge list.
///
/// Parallel edges are repeated pairs and loops are pairs `(v, v)`. Edge
/// indices are stable, so parallel edges stay distinguishable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<Vec<usize>>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    /// Panics if an endpoint is out of range.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Multigraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Appends an edge and returns its index. Panics if an endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) -> usize {
        assert!(
            u < self.n && v < self.n,
            "edge ({u}, {v}) out of range for {} vertices",
            self.n
        );
        let e = self.edges.len();
        self.edges.push((u, v));
        self.incidence[u].push(e);
        if u != v {
            self.incidence[v].push(e);
        }
        e
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v` (or `v` itself for a loop).
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Edge indices incident with `v`, each loop listed once.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Neighbors of `v` with multiplicity (a loop contributes `v` once).
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(move |&e| self.other_end(e, v))
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v]
            .iter()
            .map(|&e| if self.is_loop(e) { 2 } else { 1 })
            .sum()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    pub fn has_loops(&self) -> bool {
        (0..self.edges.len()).any(|e| self.is_loop(e))
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        pairs.windows(2).any(|w| w[0] == w[1])
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_parallel_edges()
    }

    /// Lowest-index edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.incidence[u]
            .iter()
            .copied()
            .find(|&e| self.other_end(e, u) == v)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Degree of `v` inside the edge subset, loops counted twice.
    pub fn degree_in(&self, set: &EdgeSet, v: usize) -> usize {
        self.incidence[v]
            .iter()
            .filter(|&&e| set.contains(e))
            .map(|&e| if self.is_loop(e) { 2 } else { 1 })
            .sum()
    }

    /// Copy of the graph without edge `skip`; indices above `skip` shift down by one.
    pub fn without_edge(&self, skip: usize) -> Multigraph {
        let mut g = Multigraph::new(self.n);
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if e != skip {
                g.add_edge(u, v);
            }
        }
        g
    }
}
