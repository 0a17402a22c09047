use num_bigint::BigUint;
use num_traits::One;

use super::Expander;
use crate::cycle_space::enumerate_cycle_space;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::oracle::{count_perfect_matchings, enumerate_two_factors};
use crate::predicates::{find_claw, first_non_cubic, is_three_edge_connected};
use crate::structure::{classify, Decomposition};

/// Outcome of checking the exact count for 3-edge-connected graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeEcReport {
    pub perfect_matchings: BigUint,
    /// `2^(n/6 + 1)`.
    pub expected: BigUint,
    pub diamond_free: bool,
    /// Expansion is injective on the base cycle space and its image is the
    /// set of all 2-factors of the graph.
    pub bijection: bool,
}

impl ThreeEcReport {
    pub fn holds(&self) -> bool {
        self.perfect_matchings == self.expected && self.diamond_free && self.bijection
    }
}

/// Checks that a 3-edge-connected claw-free cubic graph other than `K4` has
/// exactly `2^(n/6 + 1)` perfect matchings, and that its 2-factors are in
/// one-to-one correspondence with the cycle space of its contracted base.
pub fn verify_3ec_remark(g: &Multigraph) -> Result<ThreeEcReport> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if let Some((vertex, degree)) = first_non_cubic(g) {
        return Err(Error::NotCubic { vertex, degree });
    }
    if let Some(claw) = find_claw(g)? {
        return Err(Error::NotClawFree(claw));
    }
    if !is_three_edge_connected(g) {
        return Err(Error::NotThreeEdgeConnected);
    }
    let n = g.vertex_count();
    if n == 4 {
        return Err(Error::IsK4);
    }

    let perfect_matchings = count_perfect_matchings(g);
    let expected = if n.is_multiple_of(6) {
        BigUint::one() << (n / 6 + 1)
    } else {
        BigUint::default()
    };

    let decomposition = classify(g)?;
    let Decomposition::Expanded(x) = &decomposition else {
        return Ok(ThreeEcReport {
            perfect_matchings,
            expected,
            diamond_free: false,
            bijection: false,
        });
    };
    let diamond_free = x.diamond_count() == 0;
    let bijection = diamond_free && {
        let ex = Expander::new(g, x);
        let members = enumerate_cycle_space(&x.base, 1 << 24)?;
        let mut images = members
            .iter()
            .map(|c| ex.expand(c, &[]))
            .collect::<Result<Vec<_>>>()?;
        images.sort();
        images.dedup();
        images.len() == members.len() && images == enumerate_two_factors(g, 1 << 24)?
    };
    Ok(ThreeEcReport {
        perfect_matchings,
        expected,
        diamond_free,
        bijection,
    })
}
