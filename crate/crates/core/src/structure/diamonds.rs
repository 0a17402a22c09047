use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::predicates::{find_claw, first_non_cubic};

/// An induced `K4 - e`. `ports` are the endpoints of the missing edge.
///
/// Inside a [`DiamondString`] or a ring, `ports[0]` is the entry side and
/// `ports[1]` the exit side; `internals` are always in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Diamond {
    pub ports: [usize; 2],
    pub internals: [usize; 2],
}

impl Diamond {
    pub fn vertices(&self) -> [usize; 4] {
        [
            self.ports[0],
            self.internals[0],
            self.internals[1],
            self.ports[1],
        ]
    }

    pub fn min_vertex(&self) -> usize {
        *self.vertices().iter().min().unwrap()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices().contains(&v)
    }

    /// The same diamond with `entry` as `ports[0]`.
    pub fn entered_at(&self, entry: usize) -> Diamond {
        debug_assert!(self.ports.contains(&entry));
        if self.ports[0] == entry {
            *self
        } else {
            self.flipped()
        }
    }

    pub fn flipped(&self) -> Diamond {
        Diamond {
            ports: [self.ports[1], self.ports[0]],
            internals: self.internals,
        }
    }

    pub fn other_port(&self, port: usize) -> usize {
        if self.ports[0] == port {
            self.ports[1]
        } else {
            self.ports[0]
        }
    }
}

/// A maximal chain of diamonds joined port to port.
///
/// `diamonds[0].ports[0] == head`, the exit port of each diamond is adjacent
/// to the entry port of the next, and the last exit port is `tail`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiamondString {
    pub diamonds: Vec<Diamond>,
    pub head: usize,
    pub tail: usize,
}

impl DiamondString {
    pub fn len(&self) -> usize {
        self.diamonds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diamonds.is_empty()
    }

    pub fn reversed(&self) -> DiamondString {
        DiamondString {
            diamonds: self.diamonds.iter().rev().map(Diamond::flipped).collect(),
            head: self.tail,
            tail: self.head,
        }
    }
}

/// Result of chaining the diamonds of a graph.
///
/// Chains that close up on themselves have no head or tail; they are
/// reported separately as rings (cyclically ordered, oriented diamonds).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiamondChains {
    pub strings: Vec<DiamondString>,
    pub rings: Vec<Vec<Diamond>>,
}

fn require_simple_cubic_claw_free(g: &Multigraph) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if let Some((vertex, degree)) = first_non_cubic(g) {
        return Err(Error::NotCubic { vertex, degree });
    }
    if let Some(claw) = find_claw(g)? {
        return Err(Error::NotClawFree(claw));
    }
    Ok(())
}

/// All diamonds of a simple claw-free cubic graph, ordered by minimum vertex.
pub fn find_diamonds(g: &Multigraph) -> Result<Vec<Diamond>> {
    require_simple_cubic_claw_free(g)?;
    let n = g.vertex_count();
    let mut owner = vec![usize::MAX; n];
    let mut found = Vec::new();

    for &(u, v) in g.edges() {
        let common: Vec<usize> = g
            .neighbors(u)
            .filter(|&w| w != v && g.adjacent(w, v))
            .collect();
        if common.len() != 2 || g.adjacent(common[0], common[1]) {
            continue;
        }
        let d = Diamond {
            ports: [common[0].min(common[1]), common[0].max(common[1])],
            internals: [u.min(v), u.max(v)],
        };
        let idx = found.len();
        for w in d.vertices() {
            if owner[w] != usize::MAX {
                return Err(Error::StructureViolation(format!(
                    "vertex {w} lies in two diamonds"
                )));
            }
            owner[w] = idx;
        }
        found.push(d);
    }
    found.sort_by_key(Diamond::min_vertex);
    Ok(found)
}

/// The neighbor of a diamond port outside its diamond.
fn outside_neighbor(g: &Multigraph, d: &Diamond, port: usize) -> usize {
    g.neighbors(port)
        .find(|&w| !d.internals.contains(&w))
        .expect("diamond port has degree 3")
}

/// Partitions the diamonds of `g` into maximal strings and rings.
///
/// Each string is oriented so that its head is the smaller of its two end
/// ports; strings are sorted by head and rings start at their
/// lowest-numbered diamond.
pub fn find_strings(g: &Multigraph) -> Result<DiamondChains> {
    let diamonds = find_diamonds(g)?;
    let mut owner = vec![usize::MAX; g.vertex_count()];
    for (i, d) in diamonds.iter().enumerate() {
        for v in d.vertices() {
            owner[v] = i;
        }
    }
    let next_diamond = |d: &Diamond, port: usize| -> Option<(usize, usize)> {
        let w = outside_neighbor(g, d, port);
        (owner[w] != usize::MAX).then(|| (owner[w], w))
    };

    let mut visited = vec![false; diamonds.len()];
    let mut chains = DiamondChains::default();

    // Walks from `start` entering at `entry`; stops at a non-diamond
    // neighbor or on returning to `start`.
    let walk = |start: usize, entry: usize, visited: &mut Vec<bool>| -> (Vec<Diamond>, bool) {
        let mut out = Vec::new();
        let (mut cur, mut port) = (start, entry);
        loop {
            visited[cur] = true;
            let d = diamonds[cur].entered_at(port);
            out.push(d);
            match next_diamond(&d, d.ports[1]) {
                Some((j, _)) if j == start => return (out, true),
                Some((j, w)) => {
                    cur = j;
                    port = w;
                }
                None => return (out, false),
            }
        }
    };

    for i in 0..diamonds.len() {
        if visited[i] {
            continue;
        }
        let d = diamonds[i];
        let open: Vec<usize> = d
            .ports
            .iter()
            .copied()
            .filter(|&p| next_diamond(&d, p).is_none())
            .collect();
        if open.is_empty() {
            continue;
        }
        let (run, closed) = walk(i, open[0], &mut visited);
        debug_assert!(!closed);
        let s = DiamondString {
            head: run[0].ports[0],
            tail: run[run.len() - 1].ports[1],
            diamonds: run,
        };
        chains
            .strings
            .push(if s.tail < s.head { s.reversed() } else { s });
    }

    // Whatever is left lies on closed chains.
    for i in 0..diamonds.len() {
        if !visited[i] {
            let (run, closed) = walk(i, diamonds[i].ports[0], &mut visited);
            debug_assert!(closed);
            chains.rings.push(run);
        }
    }
    chains.strings.sort_by_key(|s| s.head);
    Ok(chains)
}
