use super::{Decomposition, Diamond, DiamondString, EdgeGadget, Expansion};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::predicates::{is_cubic, is_two_edge_connected};

/// Builds `G` from a base multigraph by replacing every vertex with a
/// triangle and every edge `e` with a string of `lengths[e]` diamonds.
///
/// Vertex `v` of `h` becomes triangle `{3v, 3v+1, 3v+2}`; the edges at `v`
/// attach to its corners in edge-index order, so parallel edges of `h` land
/// on distinct corners. Diamond vertices are numbered from `3k` upward in
/// edge order. The returned decomposition is the one [`super::classify`]
/// recovers from `G`.
pub fn build(h: &Multigraph, lengths: &[usize]) -> Result<(Multigraph, Decomposition)> {
    if lengths.len() != h.edge_count() {
        return Err(Error::LengthCount {
            expected: h.edge_count(),
            got: lengths.len(),
        });
    }
    if h.has_loops() {
        return Err(Error::InvalidBase("base has a loop".into()));
    }
    if !is_cubic(h) {
        return Err(Error::InvalidBase("base is not cubic".into()));
    }
    if !is_two_edge_connected(h) {
        return Err(Error::InvalidBase("base is not 2-edge-connected".into()));
    }

    let k = h.vertex_count();
    let n = 3 * k + 4 * lengths.iter().sum::<usize>();
    let mut g = Multigraph::new(n);

    let triangles: Vec<[usize; 3]> = (0..k).map(|v| [3 * v, 3 * v + 1, 3 * v + 2]).collect();
    for &[a, b, c] in &triangles {
        g.add_edge(a, b);
        g.add_edge(b, c);
        g.add_edge(a, c);
    }
    let corner = |e: usize, v: usize| -> usize {
        let slot = h.incident(v).iter().position(|&f| f == e).unwrap();
        triangles[v][slot]
    };

    let mut next = 3 * k;
    let mut gadgets = Vec::with_capacity(h.edge_count());
    let mut base = Multigraph::new(k);
    for (e, &(u, v)) in h.edges().iter().enumerate() {
        let (a, b) = (u.min(v), u.max(v));
        base.add_edge(a, b);
        let corners = [corner(e, a), corner(e, b)];
        if lengths[e] == 0 {
            let pe = g.add_edge(corners[0], corners[1]);
            gadgets.push(EdgeGadget {
                corners,
                string: None,
                port_edges: vec![pe],
            });
            continue;
        }
        let mut diamonds = Vec::with_capacity(lengths[e]);
        let mut prev = corners[0];
        let mut first_port_edge = None;
        for _ in 0..lengths[e] {
            let d = Diamond {
                ports: [next, next + 3],
                internals: [next + 1, next + 2],
            };
            next += 4;
            let [p, q] = d.ports;
            let [x, y] = d.internals;
            let link = g.add_edge(prev, p);
            first_port_edge.get_or_insert(link);
            for (s, t) in [(p, x), (p, y), (x, y), (x, q), (y, q)] {
                g.add_edge(s, t);
            }
            prev = q;
            diamonds.push(d);
        }
        let last = g.add_edge(prev, corners[1]);
        gadgets.push(EdgeGadget {
            corners,
            string: Some(DiamondString {
                head: diamonds[0].ports[0],
                tail: prev,
                diamonds,
            }),
            port_edges: vec![first_port_edge.unwrap(), last],
        });
    }

    if g.has_parallel_edges() {
        // Unreachable with distinct corners per edge; reports the first
        // pair of base edges sharing both endpoints.
        let pair = (0..h.edge_count())
            .flat_map(|e| (e + 1..h.edge_count()).map(move |f| (e, f)))
            .find(|&(e, f)| {
                base.endpoints(e) == base.endpoints(f) && lengths[e] == 0 && lengths[f] == 0
            })
            .unwrap_or((0, 0));
        return Err(Error::ParallelCollision(pair.0, pair.1));
    }

    let expansion = Expansion {
        n,
        base,
        triangles,
        gadgets,
    };
    Ok((g, Decomposition::Expanded(expansion)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::predicates::{find_claw, is_two_edge_connected};

    #[test]
    fn triple_bond_gives_the_prism() {
        let (g, _) = build(&generators::triple_bond(), &[0, 0, 0]).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert!(g.is_simple());
        assert_eq!(g, generators::prism());
    }

    #[test]
    fn sizes() {
        let (g, _) = build(&generators::k4(), &[0; 6]).unwrap();
        assert_eq!(g.vertex_count(), 12);
        let (g, d) = build(&generators::triple_bond(), &[1, 0, 0]).unwrap();
        assert_eq!(g.vertex_count(), 10);
        let Decomposition::Expanded(x) = d else {
            panic!()
        };
        assert_eq!(x.diamond_count(), 1);
        assert_eq!((g.vertex_count() - 3 * x.k()) / 4, 1);
    }

    #[test]
    fn output_is_claw_free_cubic_bridgeless() {
        let (g, _) = build(&generators::k4(), &[2, 0, 1, 0, 0, 1]).unwrap();
        assert!(g.is_simple());
        assert!(is_cubic(&g));
        assert_eq!(find_claw(&g).unwrap(), None);
        assert!(is_two_edge_connected(&g));
    }

    #[test]
    fn rejects_invalid_bases() {
        let loopy = Multigraph::from_edges(2, &[(0, 0), (0, 1), (1, 1)]);
        assert!(matches!(
            build(&loopy, &[0, 0, 0]),
            Err(Error::InvalidBase(_))
        ));
        let c4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(matches!(build(&c4, &[0; 4]), Err(Error::InvalidBase(_))));
        // Cubic but disconnected.
        let two = Multigraph::from_edges(4, &[(0, 1), (0, 1), (0, 1), (2, 3), (2, 3), (2, 3)]);
        assert!(matches!(build(&two, &[0; 6]), Err(Error::InvalidBase(_))));
        assert_eq!(
            build(&generators::k4(), &[0; 5]),
            Err(Error::LengthCount {
                expected: 6,
                got: 5
            })
        );
    }
}
