//! Brute-force oracles and graph suites shared by the integration tests.
//! The oracles work straight from the definitions and share no code with
//! the library's solvers.

#![allow(dead_code)]

use eop_core::generators::gnp;
use eop_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Some edge other than `a` and `b` with one end on `a` and the other on `b`.
pub fn has_common_edge(g: &Graph, a: (usize, usize), b: (usize, usize)) -> bool {
    g.edges().iter().any(|e| {
        let e = (e.u, e.v);
        if e == a || e == b {
            return false;
        }
        let on = |x: usize, f: (usize, usize)| x == f.0 || x == f.1;
        (on(e.0, a) && on(e.1, b)) || (on(e.1, a) && on(e.0, b))
    })
}

/// Pairwise conflicts as bitmasks over edge indices (m <= 64).
pub fn conflict_masks(g: &Graph) -> Vec<u64> {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let mut masks = vec![0u64; edges.len()];
    for i in 0..edges.len() {
        for j in 0..edges.len() {
            if i != j && has_common_edge(g, edges[i], edges[j]) {
                masks[i] |= 1 << j;
            }
        }
    }
    masks
}

pub fn mask_members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Every subset of the edges, checked pairwise against the definition.
pub fn brute_eop_number(g: &Graph) -> usize {
    let m = g.m();
    assert!(m <= 20, "brute force is for small graphs");
    let masks = conflict_masks(g);
    let mut best = 0;
    for set in 0u64..1 << m {
        let size = set.count_ones() as usize;
        if size > best && mask_members(set).iter().all(|&i| masks[i] & set == 0) {
            best = size;
        }
    }
    best
}

pub fn brute_alpha(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let mut best = 0;
    for set in 0u64..1 << n {
        let size = set.count_ones() as usize;
        if size > best
            && g.edges()
                .iter()
                .all(|e| set >> e.u & 1 == 0 || set >> e.v & 1 == 0)
        {
            best = size;
        }
    }
    best
}

/// Largest set of edges that pairwise neither touch nor are joined by an edge.
pub fn brute_induced_matching(g: &Graph) -> usize {
    let m = g.m();
    assert!(m <= 20);
    let edges = g.edges();
    let close = |i: usize, j: usize| {
        let (a, b) = (edges[i], edges[j]);
        [a.u, a.v]
            .iter()
            .any(|&x| x == b.u || x == b.v || g.has_edge(x, b.u) || g.has_edge(x, b.v))
    };
    let mut best = 0;
    for set in 0u64..1 << m {
        let members = mask_members(set);
        if members.len() > best
            && members
                .iter()
                .enumerate()
                .all(|(k, &i)| members[k + 1..].iter().all(|&j| !close(i, j)))
        {
            best = members.len();
        }
    }
    best
}

/// Seeded G(n, p) graphs with `n` uniform in `1..=max_n` and `p` drawn from
/// a few densities.
pub fn random_suite(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p = [0.2, 0.35, 0.5, 0.7][rng.gen_range(0..4)];
            gnp(n, p, &mut rng)
        })
        .collect()
}

/// Seeded G(n, 1/2) graphs with `n` uniform in `1..=max_n`.
pub fn half_density_suite(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            gnp(n, 0.5, &mut rng)
        })
        .collect()
}
