//! Named graphs and seeded generators for the test corpus.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::predicates::is_two_edge_connected;
use crate::structure::build;

pub fn k4() -> Multigraph {
    Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// Two vertices joined by three parallel edges.
pub fn triple_bond() -> Multigraph {
    Multigraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)])
}

/// Triangles `{0,1,2}` and `{3,4,5}` with rungs `0-3`, `1-4`, `2-5`.
pub fn prism() -> Multigraph {
    Multigraph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
}

/// `K4` with every vertex replaced by a triangle (12 vertices).
pub fn triangle_replaced_k4() -> Multigraph {
    build(&k4(), &[0; 6]).expect("K4 is a valid base").0
}

/// Appends the five edges of a diamond with ports `p`, `q` and internals `x`, `y`.
fn add_diamond(g: &mut Multigraph, p: usize, x: usize, y: usize, q: usize) {
    for (a, b) in [(p, x), (p, y), (x, y), (x, q), (y, q)] {
        g.add_edge(a, b);
    }
}

/// The ring of `d >= 2` diamonds on `4d` vertices.
///
/// Diamond `i` has ports `4i`, `4i+3` and internals `4i+1`, `4i+2`; port
/// `4i+3` is joined to port `4(i+1)` cyclically.
pub fn ring_of_diamonds(d: usize) -> Result<Multigraph> {
    if d < 2 {
        return Err(Error::TooFewDiamonds(d));
    }
    let mut g = Multigraph::new(4 * d);
    for i in 0..d {
        let b = 4 * i;
        add_diamond(&mut g, b, b + 1, b + 2, b + 3);
    }
    for i in 0..d {
        g.add_edge(4 * i + 3, 4 * ((i + 1) % d));
    }
    Ok(g)
}

/// Edge list of `figure1_graph(0)`, the 14-vertex member of the family.
pub const FIGURE1_EDGES: [(usize, usize); 21] = [
    (0, 1),
    (0, 3),
    (1, 3),
    (1, 2),
    (3, 2),
    (4, 5),
    (5, 6),
    (4, 6),
    (0, 4),
    (2, 5),
    (7, 8),
    (7, 10),
    (8, 10),
    (8, 9),
    (10, 9),
    (11, 12),
    (12, 13),
    (11, 13),
    (7, 11),
    (9, 12),
    (6, 13),
];

/// A claw-free cubic graph with cutedges and exactly 9 perfect matchings.
///
/// Each end block is a diamond whose two ports are joined to two corners of
/// a triangle (7 vertices, 3 internal matchings once the third corner is
/// matched outward). The two end blocks are joined through a chain of
/// `segments` diamonds, every link being a cutedge. `n = 14 + 4 * segments`.
pub fn figure1_graph(segments: usize) -> Multigraph {
    let n = 14 + 4 * segments;
    let mut g = Multigraph::new(n);
    // End block at `base`: diamond ports base, base+2; internals base+1,
    // base+3; triangle base+4, base+5, base+6 with base+6 the outward corner.
    let end_block = |g: &mut Multigraph, base: usize| -> usize {
        add_diamond(g, base, base + 1, base + 3, base + 2);
        let (a, b, c) = (base + 4, base + 5, base + 6);
        g.add_edge(a, b);
        g.add_edge(b, c);
        g.add_edge(a, c);
        g.add_edge(base, a);
        g.add_edge(base + 2, b);
        c
    };
    let left = end_block(&mut g, 0);
    let mut prev = left;
    for i in 0..segments {
        let b = 7 + 4 * i;
        add_diamond(&mut g, b, b + 1, b + 2, b + 3);
        g.add_edge(prev, b);
        prev = b + 3;
    }
    let right = end_block(&mut g, 7 + 4 * segments);
    g.add_edge(prev, right);
    g
}

/// A random loop-free, cubic, 2-edge-connected multigraph on `k` vertices.
///
/// Uses the pairing model on `3k` half-edges, resampling until the result
/// has no loops and no bridges. Fixed seeds give identical edge lists.
pub fn random_base(k: usize, seed: u64) -> Result<Multigraph> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::InvalidBase(format!(
            "a cubic base needs an even vertex count >= 2, got {k}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * k).collect();
    loop {
        points.shuffle(&mut rng);
        if points.chunks(2).any(|p| p[0] / 3 == p[1] / 3) {
            continue;
        }
        let mut pairs: Vec<(usize, usize)> = points
            .chunks(2)
            .map(|p| {
                let (u, v) = (p[0] / 3, p[1] / 3);
                (u.min(v), u.max(v))
            })
            .collect();
        pairs.sort_unstable();
        let g = Multigraph::from_edges(k, &pairs);
        if is_two_edge_connected(&g) {
            return Ok(g);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::{bridges, find_claw, is_cubic};

    #[test]
    fn ring_sizes() {
        for d in 2..=5 {
            let g = ring_of_diamonds(d).unwrap();
            assert_eq!(g.vertex_count(), 4 * d);
            assert!(is_cubic(&g));
            assert!(g.is_simple());
            assert_eq!(find_claw(&g).unwrap(), None);
            assert!(is_two_edge_connected(&g));
        }
        assert_eq!(ring_of_diamonds(1), Err(Error::TooFewDiamonds(1)));
    }

    #[test]
    fn figure1_family_is_claw_free_cubic_with_bridges() {
        for segments in 0..4 {
            let g = figure1_graph(segments);
            assert!(g.is_simple());
            assert!(is_cubic(&g));
            assert_eq!(find_claw(&g).unwrap(), None);
            assert_eq!(bridges(&g).len(), segments + 1);
        }
    }

    #[test]
    fn figure1_matches_frozen_edges() {
        assert_eq!(figure1_graph(0), Multigraph::from_edges(14, &FIGURE1_EDGES));
    }

    #[test]
    fn random_base_small_cases() {
        assert_eq!(random_base(2, 0).unwrap(), triple_bond());
        assert_eq!(random_base(2, 99).unwrap(), triple_bond());
        for seed in 0..20 {
            let h = random_base(4, seed).unwrap();
            assert_eq!(h.vertex_count(), 4);
            assert!(is_cubic(&h));
            assert!(!h.has_loops());
            assert!(is_two_edge_connected(&h));
        }
        assert_eq!(random_base(8, 7).unwrap(), random_base(8, 7).unwrap());
        assert!(random_base(3, 0).is_err());
        assert!(random_base(0, 0).is_err());
    }
}
