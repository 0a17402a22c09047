//! The GF(2) cycle space of a multigraph.

use num_bigint::BigUint;

use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::predicates::components;

/// Fundamental cycles of a spanning forest, one per non-tree edge.
#[derive(Clone, Debug)]
pub struct CycleBasis {
    pub basis: Vec<EdgeSet>,
    /// The non-tree edge each basis element was built from.
    pub chords: Vec<usize>,
}

impl CycleBasis {
    /// `m - n + c`.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// `2^dimension` as an exact integer.
    pub fn size(&self) -> BigUint {
        BigUint::from(1u8) << self.dimension()
    }
}

pub fn cycle_basis(h: &Multigraph) -> CycleBasis {
    let n = h.vertex_count();
    let m = h.edge_count();
    let mut parent_edge = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree = vec![false; m];
    let mut queue = std::collections::VecDeque::new();

    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &e in h.incident(v) {
                let u = h.other_end(e, v);
                if depth[u] == usize::MAX {
                    depth[u] = depth[v] + 1;
                    parent_edge[u] = e;
                    tree[e] = true;
                    queue.push_back(u);
                }
            }
        }
    }

    let mut basis = Vec::new();
    let mut chords = Vec::new();
    for e in (0..m).filter(|&e| !tree[e]) {
        let mut cycle = EdgeSet::from_indices(m, [e]);
        let (mut a, mut b) = h.endpoints(e);
        while a != b {
            if depth[a] < depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            let pe = parent_edge[a];
            cycle.toggle(pe);
            a = h.other_end(pe, a);
        }
        basis.push(cycle);
        chords.push(e);
    }
    debug_assert_eq!(basis.len() + n, m + components(h).1);
    CycleBasis { basis, chords }
}

/// Every member of the cycle space, in Gray-code order starting from the
/// empty set; consecutive members differ by one basis element.
pub fn enumerate_cycle_space(h: &Multigraph, cap: u64) -> Result<Vec<EdgeSet>> {
    let basis = cycle_basis(h);
    let dim = basis.dimension();
    if dim >= 64 || (1u64 << dim) > cap {
        return Err(Error::CapExceeded {
            required: basis.size(),
            cap,
        });
    }
    let total = 1usize << dim;
    let mut out = Vec::with_capacity(total);
    let mut cur = EdgeSet::empty(h.edge_count());
    out.push(cur.clone());
    for i in 1..total {
        cur.xor_with(&basis.basis[i.trailing_zeros() as usize]);
        out.push(cur.clone());
    }
    Ok(out)
}

/// Every vertex has even degree in `s` (a loop contributes 2).
pub fn is_even_subgraph(h: &Multigraph, s: &EdgeSet) -> bool {
    (0..h.vertex_count()).all(|v| h.degree_in(s, v).is_multiple_of(2))
}
