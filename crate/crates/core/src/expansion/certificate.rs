use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use super::{complement_matching, Expander};
use crate::cycle_space::enumerate_cycle_space;
use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::oracle::max_length_two_factor;
use crate::structure::{classify, Decomposition, Diamond, Expansion};

/// Which case of the construction produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    K4,
    Ring,
    /// `k >= n/6`: every member of the base cycle space, default routing.
    CycleSpace,
    /// `k < n/6`: one long 2-factor of the base under every routing.
    LongTwoFactor,
    /// Union of both expansion branches.
    Combined,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::K4 => "k4",
            Branch::Ring => "ring",
            Branch::CycleSpace => "cycle-space",
            Branch::LongTwoFactor => "long-2-factor",
            Branch::Combined => "combined",
        })
    }
}

/// A family of distinct perfect matchings of `host` large enough to beat
/// `2^(n/12)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub host: Multigraph,
    pub n: usize,
    pub branch: Branch,
    /// Canonically ordered and pairwise distinct.
    pub matchings: Vec<EdgeSet>,
    /// How many matchings were produced before deduplication.
    pub generated: usize,
    /// `|matchings|^12 > 2^n`.
    pub bound_ok: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Run both expansion branches and take the union.
    pub both_branches: bool,
    /// Upper limit on the number of matchings generated.
    pub cap: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            both_branches: false,
            cap: 1 << 20,
        }
    }
}

/// `count^12 > 2^n`, in exact integer arithmetic.
pub fn exceeds_bound(count: usize, n: usize) -> bool {
    BigUint::from(count).pow(12) > BigUint::one() << n
}

pub fn certify(g: &Multigraph) -> Result<Certificate> {
    certify_with(g, CertifyOptions::default())
}

pub fn certify_with(g: &Multigraph, opts: CertifyOptions) -> Result<Certificate> {
    let decomposition = classify(g)?;
    let (branch, generated) = match &decomposition {
        Decomposition::K4 => (Branch::K4, k4_family(g)),
        Decomposition::Ring(ring) => (Branch::Ring, ring_family(g, ring, opts.cap)?),
        Decomposition::Expanded(x) => {
            let expander = Expander::new(g, x);
            if opts.both_branches {
                let mut all = cycle_space_family(g, &expander, opts.cap)?;
                all.extend(long_two_factor_family(g, &expander, opts.cap)?);
                (Branch::Combined, all)
            } else if 6 * x.k() >= g.vertex_count() {
                (
                    Branch::CycleSpace,
                    cycle_space_family(g, &expander, opts.cap)?,
                )
            } else {
                (
                    Branch::LongTwoFactor,
                    long_two_factor_family(g, &expander, opts.cap)?,
                )
            }
        }
    };

    let generated_count = generated.len();
    let mut matchings = generated;
    matchings.sort();
    matchings.dedup();
    let n = g.vertex_count();
    if !exceeds_bound(matchings.len(), n) {
        return Err(Error::BoundFailure {
            generated: generated_count,
            distinct: matchings.len(),
            n,
        });
    }
    Ok(Certificate {
        host: g.clone(),
        n,
        branch,
        matchings,
        generated: generated_count,
        bound_ok: true,
    })
}

fn k4_family(g: &Multigraph) -> Vec<EdgeSet> {
    let m = g.edge_count();
    let e = |u, v| g.edge_between(u, v).expect("K4 is complete");
    [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)]
        .into_iter()
        .map(|(a, b, c, d)| EdgeSet::from_indices(m, [e(a, b), e(c, d)]))
        .collect()
}

/// The matching using every link between diamonds, plus the `2^d`
/// matchings that pair each diamond's ports with its internals.
fn ring_family(g: &Multigraph, ring: &[Diamond], cap: u64) -> Result<Vec<EdgeSet>> {
    let d = ring.len();
    let required = (BigUint::one() << d) + 1u8;
    if required > BigUint::from(cap) {
        return Err(Error::CapExceeded { required, cap });
    }
    let m = g.edge_count();
    let e = |u, v| g.edge_between(u, v).expect("diamond edge");

    let mut out = Vec::with_capacity((1 << d) + 1);
    let mut links = EdgeSet::empty(m);
    for (i, dm) in ring.iter().enumerate() {
        links.insert(e(dm.ports[1], ring[(i + 1) % d].ports[0]));
        links.insert(e(dm.internals[0], dm.internals[1]));
    }
    out.push(links);

    for mask in 0u64..1 << d {
        let mut s = EdgeSet::empty(m);
        for (i, dm) in ring.iter().enumerate() {
            let [p, q] = dm.ports;
            let [a, b] = dm.internals;
            if mask >> i & 1 == 0 {
                s.insert(e(p, a));
                s.insert(e(q, b));
            } else {
                s.insert(e(p, b));
                s.insert(e(q, a));
            }
        }
        out.push(s);
    }
    Ok(out)
}

fn cycle_space_family(g: &Multigraph, ex: &Expander, cap: u64) -> Result<Vec<EdgeSet>> {
    let members = enumerate_cycle_space(&ex.expansion().base, cap)?;
    members
        .iter()
        .map(|c| {
            let routing = vec![false; ex.routing_len(c)];
            complement_matching(g, &ex.expand(c, &routing)?)
        })
        .collect()
}

fn long_two_factor_family(g: &Multigraph, ex: &Expander, cap: u64) -> Result<Vec<EdgeSet>> {
    let x: &Expansion = ex.expansion();
    let c = max_length_two_factor(&x.base, &x.lengths())?;
    let len = ex.routing_len(&c);
    if len >= 64 || (1u64 << len) > cap {
        return Err(Error::CapExceeded {
            required: BigUint::one() << len,
            cap,
        });
    }
    (0u64..1 << len)
        .map(|mask| {
            let routing: Vec<bool> = (0..len).map(|i| mask >> i & 1 == 1).collect();
            complement_matching(g, &ex.expand(&c, &routing)?)
        })
        .collect()
}

/// Problems found by [`verify_certificate`]; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub issues: Vec<String>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Re-checks a certificate against `g` from scratch: every member is a
/// perfect matching, members are distinct, and the bound holds.
pub fn verify_certificate(g: &Multigraph, cert: &Certificate) -> VerifyReport {
    let mut issues = Vec::new();
    if cert.host != *g {
        issues.push("certificate host differs from the graph".to_string());
    }
    if cert.n != g.vertex_count() {
        issues.push(format!(
            "certificate says n = {} but the graph has {} vertices",
            cert.n,
            g.vertex_count()
        ));
    }
    for (i, m) in cert.matchings.iter().enumerate() {
        if m.universe() != g.edge_count() {
            issues.push(format!(
                "matching {i} is over {} edges, graph has {}",
                m.universe(),
                g.edge_count()
            ));
            continue;
        }
        if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree_in(m, v) != 1) {
            issues.push(format!(
                "matching {i} covers vertex {v} {} times",
                g.degree_in(m, v)
            ));
        }
    }
    let mut sorted: Vec<&EdgeSet> = cert.matchings.iter().collect();
    sorted.sort();
    let duplicates = sorted.windows(2).filter(|w| w[0] == w[1]).count();
    if duplicates > 0 {
        issues.push(format!("{duplicates} duplicated matchings"));
    }
    let bound = exceeds_bound(cert.matchings.len(), g.vertex_count());
    if !bound {
        issues.push(format!(
            "{}^12 does not exceed 2^{}",
            cert.matchings.len(),
            g.vertex_count()
        ));
    }
    if cert.bound_ok != bound {
        issues.push("bound_ok flag disagrees with the recomputed bound".to_string());
    }
    VerifyReport { issues }
}
