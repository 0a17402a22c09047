#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use clawfree::generators;
use clawfree::structure::build;
use clawfree::Multigraph;

/// A named test graph.
pub struct Item {
    pub name: String,
    pub graph: Multigraph,
}

/// Random lengths summing to `total` over `m` edges.
pub fn spread_lengths(m: usize, total: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut lengths = vec![0; m];
    for _ in 0..total {
        lengths[rng.gen_range(0..m)] += 1;
    }
    lengths
}

/// A seeded `(H, lengths)` instance with `k` base vertices and total length
/// at most `max_total`.
pub fn seeded_instance(k: usize, max_total: usize, seed: u64) -> (Multigraph, Vec<usize>) {
    let h = generators::random_base(k, seed).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let total = rng.gen_range(0..=max_total);
    let lengths = spread_lengths(h.edge_count(), total, &mut rng);
    (h, lengths)
}

/// Base multigraphs used for cycle-space checks (all with at most 16 edges).
pub fn base_corpus() -> Vec<Item> {
    let mut out = vec![
        Item {
            name: "triple-bond".into(),
            graph: generators::triple_bond(),
        },
        Item {
            name: "K4".into(),
            graph: generators::k4(),
        },
    ];
    for k in [2, 4, 6, 8, 10] {
        for seed in 0..4 {
            out.push(Item {
                name: format!("random-base k={k} seed={seed}"),
                graph: generators::random_base(k, seed).unwrap(),
            });
        }
    }
    out
}

/// Claw-free cubic 2-edge-connected graphs with `n <= 28`.
pub fn bridgeless_corpus() -> Vec<Item> {
    let mut out = vec![
        Item {
            name: "K4".into(),
            graph: generators::k4(),
        },
        Item {
            name: "prism".into(),
            graph: generators::prism(),
        },
        Item {
            name: "triangle-replaced K4".into(),
            graph: generators::triangle_replaced_k4(),
        },
    ];
    for d in 2..=7 {
        out.push(Item {
            name: format!("ring d={d}"),
            graph: generators::ring_of_diamonds(d).unwrap(),
        });
    }
    // (k, largest total length keeping n <= 28)
    for (k, max_total) in [(2, 5), (4, 4), (6, 2), (8, 1)] {
        for seed in 0..6u64 {
            let h = generators::random_base(k, seed).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
            for total in 0..=max_total {
                let lengths = spread_lengths(h.edge_count(), total, &mut rng);
                let (g, _) = build(&h, &lengths).unwrap();
                assert!(g.vertex_count() <= 28);
                out.push(Item {
                    name: format!("build k={k} seed={seed} lengths={lengths:?}"),
                    graph: g,
                });
            }
        }
    }
    out
}

/// Every cubic corpus graph, including bridged ones.
pub fn cubic_corpus() -> Vec<Item> {
    let mut out = bridgeless_corpus();
    for s in 0..3 {
        out.push(Item {
            name: format!("figure-1 segments={s}"),
            graph: generators::figure1_graph(s),
        });
    }
    out.push(Item {
        name: "triple-bond".into(),
        graph: generators::triple_bond(),
    });
    out
}

/// Multiset of lengths on each unordered vertex pair.
fn pair_lengths(h: &Multigraph, lengths: &[usize], a: usize, b: usize) -> Vec<usize> {
    let mut out: Vec<usize> = h
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| (u, v) == (a, b) || (u, v) == (b, a))
        .map(|(e, _)| lengths[e])
        .collect();
    out.sort_unstable();
    out
}

/// Brute-force isomorphism of edge-labelled multigraphs by backtracking
/// over vertex maps, checking every already-mapped pair.
pub fn isomorphic_with_lengths(
    h1: &Multigraph,
    l1: &[usize],
    h2: &Multigraph,
    l2: &[usize],
) -> bool {
    let n = h1.vertex_count();
    if n != h2.vertex_count() || h1.edge_count() != h2.edge_count() {
        return false;
    }
    let mut sorted1 = l1.to_vec();
    let mut sorted2 = l2.to_vec();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return false;
    }
    fn extend(
        v: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        h1: &Multigraph,
        l1: &[usize],
        h2: &Multigraph,
        l2: &[usize],
    ) -> bool {
        let n = h1.vertex_count();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] {
                continue;
            }
            let consistent = (0..=v).all(|u| {
                let image = if u == v { w } else { map[u] };
                pair_lengths(h1, l1, u, v) == pair_lengths(h2, l2, image, w)
            });
            if consistent {
                map.push(w);
                used[w] = true;
                if extend(v + 1, map, used, h1, l1, h2, l2) {
                    return true;
                }
                used[w] = false;
                map.pop();
            }
        }
        false
    }
    extend(0, &mut Vec::new(), &mut vec![false; n], h1, l1, h2, l2)
}
