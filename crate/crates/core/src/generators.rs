//! Named graph families, seeded random graphs and trees, and exhaustive
//! enumerators for small instances.

use rand::Rng;

use crate::graph::{Edge, Graph};

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    Graph::new(n, edges).unwrap()
}

/// `K_n` minus the edge `{0, 1}`.
pub fn complete_minus_edge(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&e| e != (0, 1));
    Graph::new(n, edges).unwrap()
}

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// `K_{1,t}` with center 0 and leaves `1..=t`.
pub fn star(t: usize) -> Graph {
    Graph::new(t + 1, (1..=t).map(|i| (0, i))).unwrap()
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y)));
    Graph::new(a + b, edges).unwrap()
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Decodes a Prüfer sequence of length `n - 2` into the labelled tree on
/// `n` vertices, in linear time. `n = 1` and `n = 2` take the empty sequence.
pub fn tree_from_prufer(n: usize, seq: &[usize]) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::empty(1);
    }
    assert_eq!(seq.len(), n - 2, "Prüfer sequence must have length n - 2");
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in seq {
        edges.push(Edge::new(leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push(Edge::new(leaf, n - 1));
    Graph::new(n, edges).unwrap()
}

/// Uniformly random labelled tree on `n >= 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let seq: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(0..n))
        .collect();
    tree_from_prufer(n, &seq)
}

/// All `n^(n-2)` Prüfer sequences for labelled trees on `n` vertices, in
/// lexicographic order.
pub struct PruferSequences {
    n: usize,
    current: Option<Vec<usize>>,
}

impl PruferSequences {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        PruferSequences {
            n,
            current: Some(vec![0; n.saturating_sub(2)]),
        }
    }
}

impl Iterator for PruferSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let mut i = next.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            next[i] += 1;
            if next[i] < self.n {
                self.current = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(out)
    }
}

/// Every labelled tree on `n` vertices.
pub fn all_trees(n: usize) -> impl Iterator<Item = Graph> {
    PruferSequences::new(n).map(move |seq| tree_from_prufer(n, &seq))
}

/// Every labelled graph on `n` vertices (all subsets of `E(K_n)`), isomorphic
/// copies included. Intended for `n <= 6`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    assert!(pairs.len() < 32, "too many vertex pairs to enumerate");
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}
