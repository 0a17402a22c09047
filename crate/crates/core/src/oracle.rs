//! Exact brute-force counting of perfect matchings and 2-factors.
//!
//! Plain backtracking with no algebraic shortcuts, so the results can serve
//! as ground truth for everything the constructive side produces.

use num_bigint::BigUint;

use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::predicates::{bridges, first_non_cubic, is_two_edge_connected};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    /// Backtracking on the lowest-numbered uncovered vertex (matchings) and
    /// edge-by-edge with degree pruning (2-factors).
    Backtracking,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub perfect_matchings: BigUint,
    pub two_factors: BigUint,
    pub method: CountMethod,
}

pub fn count(g: &Multigraph) -> CountReport {
    CountReport {
        perfect_matchings: count_perfect_matchings(g),
        two_factors: count_two_factors(g),
        method: CountMethod::Backtracking,
    }
}

fn match_from(
    g: &Multigraph,
    matched: &mut [bool],
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    let Some(v) = matched.iter().position(|&m| !m) else {
        visit(chosen);
        return;
    };
    matched[v] = true;
    for &e in g.incident(v) {
        let u = g.other_end(e, v);
        if u == v || matched[u] {
            continue;
        }
        matched[u] = true;
        chosen.push(e);
        match_from(g, matched, chosen, visit);
        chosen.pop();
        matched[u] = false;
    }
    matched[v] = false;
}

fn each_perfect_matching(g: &Multigraph, visit: &mut dyn FnMut(&[usize])) {
    if g.vertex_count() % 2 == 1 {
        return;
    }
    let mut matched = vec![false; g.vertex_count()];
    match_from(g, &mut matched, &mut Vec::new(), visit);
}

pub fn count_perfect_matchings(g: &Multigraph) -> BigUint {
    let mut total: u128 = 0;
    each_perfect_matching(g, &mut |_| total += 1);
    BigUint::from(total)
}

/// All perfect matchings in canonical order.
pub fn enumerate_perfect_matchings(g: &Multigraph, cap: u64) -> Result<Vec<EdgeSet>> {
    let required = count_perfect_matchings(g);
    if required > BigUint::from(cap) {
        return Err(Error::CapExceeded { required, cap });
    }
    let m = g.edge_count();
    let mut out = Vec::new();
    each_perfect_matching(g, &mut |es| {
        out.push(EdgeSet::from_indices(m, es.iter().copied()))
    });
    out.sort();
    Ok(out)
}

struct TwoFactorSearch<'a> {
    g: &'a Multigraph,
    degree: Vec<usize>,
    undecided: Vec<usize>,
    chosen: EdgeSet,
}

impl TwoFactorSearch<'_> {
    fn weight(&self, e: usize) -> usize {
        if self.g.is_loop(e) {
            2
        } else {
            1
        }
    }

    fn run(&mut self, e: usize, visit: &mut dyn FnMut(&EdgeSet)) {
        if e == self.g.edge_count() {
            if self.degree.iter().all(|&d| d == 2) {
                visit(&self.chosen);
            }
            return;
        }
        let (u, v) = self.g.endpoints(e);
        let w = self.weight(e);
        let ends: &[usize] = if u == v { &[u] } else { &[u, v] };
        for &x in ends {
            self.undecided[x] -= w;
        }
        if ends.iter().all(|&x| self.degree[x] + w <= 2) {
            for &x in ends {
                self.degree[x] += w;
            }
            self.chosen.insert(e);
            self.run(e + 1, visit);
            self.chosen.remove(e);
            for &x in ends {
                self.degree[x] -= w;
            }
        }
        if ends
            .iter()
            .all(|&x| self.degree[x] + self.undecided[x] >= 2)
        {
            self.run(e + 1, visit);
        }
        for &x in ends {
            self.undecided[x] += w;
        }
    }
}

fn each_two_factor(g: &Multigraph, visit: &mut dyn FnMut(&EdgeSet)) {
    let n = g.vertex_count();
    let mut search = TwoFactorSearch {
        g,
        degree: vec![0; n],
        undecided: (0..n).map(|v| g.degree(v)).collect(),
        chosen: EdgeSet::empty(g.edge_count()),
    };
    if search.undecided.iter().all(|&d| d >= 2) {
        search.run(0, visit);
    }
}

/// Spanning subgraphs in which every vertex has degree exactly 2.
pub fn count_two_factors(g: &Multigraph) -> BigUint {
    let mut total: u128 = 0;
    each_two_factor(g, &mut |_| total += 1);
    BigUint::from(total)
}

/// All 2-factors in canonical order.
pub fn enumerate_two_factors(g: &Multigraph, cap: u64) -> Result<Vec<EdgeSet>> {
    let required = count_two_factors(g);
    if required > BigUint::from(cap) {
        return Err(Error::CapExceeded { required, cap });
    }
    let mut out = Vec::new();
    each_two_factor(g, &mut |s| out.push(s.clone()));
    out.sort();
    Ok(out)
}

/// A 2-factor of a cubic 2-edge-connected multigraph with the largest total
/// edge length; ties go to the canonically smallest edge set.
///
/// Found by complementing every perfect matching, which is cheap for the
/// small bases this is used on.
pub fn max_length_two_factor(h: &Multigraph, lengths: &[usize]) -> Result<EdgeSet> {
    if lengths.len() != h.edge_count() {
        return Err(Error::LengthCount {
            expected: h.edge_count(),
            got: lengths.len(),
        });
    }
    if let Some((vertex, degree)) = first_non_cubic(h) {
        return Err(Error::NotCubic { vertex, degree });
    }
    if !is_two_edge_connected(h) {
        return Err(Error::NotTwoEdgeConnected {
            bridge: bridges(h).iter().next(),
        });
    }
    let m = h.edge_count();
    let mut best: Option<(usize, EdgeSet)> = None;
    each_perfect_matching(h, &mut |pm| {
        let factor = EdgeSet::from_indices(m, pm.iter().copied()).complement();
        let len: usize = factor.iter().map(|e| lengths[e]).sum();
        let better = match &best {
            None => true,
            Some((best_len, best_set)) => {
                len > *best_len || (len == *best_len && factor < *best_set)
            }
        };
        if better {
            best = Some((len, factor));
        }
    });
    best.map(|(_, f)| f).ok_or(Error::NoTwoFactor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::predicates::is_cubic;

    fn big(x: u32) -> BigUint {
        BigUint::from(x)
    }

    /// Filters all `2^m` edge subsets by degree.
    fn brute_force(g: &Multigraph, target: usize) -> Vec<EdgeSet> {
        let m = g.edge_count();
        let mut out: Vec<EdgeSet> = (0u64..1 << m)
            .map(|mask| EdgeSet::from_indices(m, (0..m).filter(|&e| mask >> e & 1 == 1)))
            .filter(|s| (0..g.vertex_count()).all(|v| g.degree_in(s, v) == target))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn perfect_matching_counts() {
        assert_eq!(count_perfect_matchings(&generators::k4()), big(3));
        assert_eq!(count_perfect_matchings(&generators::prism()), big(4));
        for (d, expected) in [(2, 5), (3, 9), (4, 17)] {
            let g = generators::ring_of_diamonds(d).unwrap();
            assert_eq!(count_perfect_matchings(&g), big(expected));
        }
        let triangle = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(count_perfect_matchings(&triangle), big(0));
        assert_eq!(count_perfect_matchings(&Multigraph::new(0)), big(1));
    }

    #[test]
    fn enumeration_examples() {
        let k4 = enumerate_perfect_matchings(&generators::k4(), 100).unwrap();
        assert_eq!(k4.len(), 3);
        assert_eq!(k4, brute_force(&generators::k4(), 1));
        let tb = enumerate_perfect_matchings(&generators::triple_bond(), 100).unwrap();
        assert_eq!(
            tb.iter().map(EdgeSet::to_vec).collect::<Vec<_>>(),
            vec![vec![0], vec![1], vec![2]]
        );
        let triangle = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(enumerate_perfect_matchings(&triangle, 100)
            .unwrap()
            .is_empty());
        assert!(matches!(
            enumerate_perfect_matchings(&generators::k4(), 2),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn loops_never_match() {
        let g = Multigraph::from_edges(2, &[(0, 0), (0, 1), (1, 1)]);
        assert_eq!(count_perfect_matchings(&g), big(1));
    }

    #[test]
    fn two_factor_counts() {
        assert_eq!(count_two_factors(&generators::k4()), big(3));
        assert_eq!(count_two_factors(&generators::prism()), big(4));
        for g in [
            generators::k4(),
            generators::prism(),
            generators::triple_bond(),
        ] {
            assert_eq!(enumerate_two_factors(&g, 100).unwrap(), brute_force(&g, 2));
        }
        // A loop on its own is a 2-regular piece.
        let g = Multigraph::from_edges(2, &[(0, 0), (1, 1), (0, 1)]);
        assert_eq!(enumerate_two_factors(&g, 10).unwrap(), brute_force(&g, 2));
        assert_eq!(count_two_factors(&g), big(1));
    }

    #[test]
    fn cubic_counts_agree() {
        for g in [
            generators::k4(),
            generators::prism(),
            generators::triple_bond(),
            generators::ring_of_diamonds(3).unwrap(),
            generators::figure1_graph(1),
        ] {
            assert!(is_cubic(&g));
            let report = count(&g);
            assert_eq!(report.perfect_matchings, report.two_factors);
        }
    }

    #[test]
    fn long_two_factor_examples() {
        let tb = generators::triple_bond();
        let f = max_length_two_factor(&tb, &[1, 0, 0]).unwrap();
        assert_eq!(f.to_vec(), vec![0, 1]);

        let k4 = generators::k4();
        let f = max_length_two_factor(&k4, &[0; 6]).unwrap();
        assert_eq!(f.len(), 4);
        let f = max_length_two_factor(&k4, &[3, 0, 0, 0, 0, 0]).unwrap();
        assert!(f.contains(0));
        assert_eq!(f.len(), 4);
        assert!(brute_force(&k4, 2).contains(&f));

        assert!(matches!(
            max_length_two_factor(&generators::figure1_graph(0), &[0; 21]),
            Err(Error::NotTwoEdgeConnected { .. })
        ));
    }
}
