//! Structural predicates: connectivity, bipartiteness, Eulerian, diameter,
//! claw-freeness and degree extremes.

use std::collections::VecDeque;

use serde::{Serialize, Serializer};

use crate::graph::Graph;

/// Graph diameter; disconnected graphs have an infinite diameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Structure {
    pub is_connected: bool,
    pub is_bipartite: bool,
    /// Side (0 or 1) of every vertex when bipartite.
    pub bipartition: Option<Vec<u8>>,
    pub is_tree: bool,
    pub is_eulerian: bool,
    pub diameter: Diameter,
    pub is_claw_free: bool,
    pub min_degree: usize,
    pub max_degree: usize,
}

pub fn structural_predicates(g: &Graph) -> Structure {
    let bipartition = bipartition(g);
    Structure {
        is_connected: g.is_connected(),
        is_bipartite: bipartition.is_some(),
        bipartition,
        is_tree: g.is_tree(),
        is_eulerian: is_eulerian(g),
        diameter: diameter(g),
        is_claw_free: is_claw_free(g),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
    }
}

/// Two-colouring by BFS; the smallest vertex of each component gets side 0.
pub fn bipartition(g: &Graph) -> Option<Vec<u8>> {
    let mut side = vec![u8::MAX; g.n()];
    let mut queue = VecDeque::new();
    for s in 0..g.n() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for w in g.neighbors(x) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[x];
                    queue.push_back(w);
                } else if side[w] == side[x] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

pub fn is_eulerian(g: &Graph) -> bool {
    g.is_connected() && (0..g.n()).all(|x| g.degree(x).is_multiple_of(2))
}

/// BFS distances from `source`; `usize::MAX` marks unreachable vertices.
pub fn distances_from(g: &Graph, source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::from([source]);
    dist[source] = 0;
    while let Some(x) = queue.pop_front() {
        for w in g.neighbors(x) {
            if dist[w] == usize::MAX {
                dist[w] = dist[x] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn diameter(g: &Graph) -> Diameter {
    let mut best = 0;
    for s in 0..g.n() {
        for d in distances_from(g, s) {
            if d == usize::MAX {
                return Diameter::Infinite;
            }
            best = best.max(d);
        }
    }
    Diameter::Finite(best)
}

/// No induced `K_{1,3}`.
pub fn is_claw_free(g: &Graph) -> bool {
    (0..g.n()).all(|x| find_claw_at(g, x).is_none())
}

/// Three pairwise non-adjacent neighbors of `center`, if any.
pub fn find_claw_at(g: &Graph, center: usize) -> Option<[usize; 3]> {
    let nbrs: Vec<usize> = g.neighbors(center).collect();
    for (i, &a) in nbrs.iter().enumerate() {
        for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) {
                continue;
            }
            for &c in &nbrs[j + 1..] {
                if !g.has_edge(a, c) && !g.has_edge(b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}
