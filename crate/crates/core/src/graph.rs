//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Edges keep the order they were given
//! in (each normalized so that `u < v`), and adjacency is stored in
//! compressed form with every neighbor list sorted by vertex id. Each
//! adjacency entry also records the index of the edge it came from, so
//! edge lookups by endpoint pair are a binary search.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

/// An undirected edge with normalized endpoints (`u < v`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds a normalized edge. The endpoints may be given in either order.
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite to `x`. `x` must be an endpoint.
    pub fn other(&self, x: usize) -> usize {
        debug_assert!(self.contains(x));
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.contains(other.u) || self.contains(other.v)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    // (neighbor, edge index), sorted by neighbor within each vertex slice
    adjacency: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Self-loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut list = Vec::new();
        for e in edges {
            let e: Edge = e.into();
            if e.u == e.v {
                return Err(Error::SelfLoop(e.u));
            }
            if e.v >= n {
                return Err(Error::VertexOutOfRange { vertex: e.v, n });
            }
            list.push(e);
        }

        let mut offsets = vec![0usize; n + 1];
        for e in &list {
            offsets[e.u + 1] += 1;
            offsets[e.v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut adjacency = vec![(0usize, 0usize); 2 * list.len()];
        for (idx, e) in list.iter().enumerate() {
            adjacency[fill[e.u]] = (e.v, idx);
            fill[e.u] += 1;
            adjacency[fill[e.v]] = (e.u, idx);
            fill[e.v] += 1;
        }
        for x in 0..n {
            let slice = &mut adjacency[offsets[x]..offsets[x + 1]];
            slice.sort_unstable();
            if let Some(w) = slice.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::DuplicateEdge(x.min(w[0].0), x.max(w[0].0)));
            }
        }

        Ok(Graph {
            n,
            edges: list,
            offsets,
            adjacency,
        })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            offsets: vec![0; n + 1],
            adjacency: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.offsets[x + 1] - self.offsets[x]
    }

    /// Neighbors of `x` in increasing id order.
    pub fn neighbors(&self, x: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.incident(x).iter().map(|&(w, _)| w)
    }

    /// `(neighbor, edge index)` pairs around `x`, sorted by neighbor.
    /// Address of the adjacency offset of `x`, for prefetching.
    pub(crate) fn offset_ptr(&self, x: usize) -> *const usize {
        &self.offsets[x]
    }

    pub fn incident(&self, x: usize) -> &[(usize, usize)] {
        &self.adjacency[self.offsets[x]..self.offsets[x + 1]]
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        if a >= self.n || b >= self.n {
            return None;
        }
        let slice = self.incident(a);
        slice
            .binary_search_by_key(&b, |&(w, _)| w)
            .ok()
            .map(|pos| slice[pos].1)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    /// Index of `e` in the edge list, or an error if `e` is not an edge.
    pub fn require_edge(&self, e: Edge) -> Result<usize> {
        self.edge_index(e.u, e.v)
            .ok_or(Error::EdgeNotInGraph(e.u, e.v))
    }

    /// δ(G); zero for the null graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|x| self.degree(x)).min().unwrap_or(0)
    }

    /// Δ(G); zero for the null graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|x| self.degree(x)).max().unwrap_or(0)
    }

    /// Component label of every vertex, and the number of components.
    /// Labels are assigned in order of the smallest vertex of each component.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for w in self.neighbors(x) {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Vertex lists of the connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let (label, count) = self.component_labels();
        let mut out = vec![Vec::new(); count];
        for (x, &c) in label.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// Connectedness; the null graph and K_1 count as connected.
    pub fn is_connected(&self) -> bool {
        self.component_labels().1 <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        self.n >= 1 && self.m() == self.n * (self.n - 1) / 2
    }

    /// Copy of the graph with edge `index` removed. Remaining edges keep
    /// their relative order.
    pub fn without_edge(&self, index: usize) -> Self {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, &e)| e);
        Graph::new(self.n, edges).expect("subgraph of a simple graph is simple")
    }

    /// Subgraph induced by `vertices` (relabelled `0..k` in the given order),
    /// with the new-to-old vertex map.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &x) in vertices.iter().enumerate() {
            local[x] = i;
        }
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| local[e.u] != usize::MAX && local[e.v] != usize::MAX)
            .map(|e| Edge::new(local[e.u], local[e.v]))
            .collect();
        let g = Graph::new(vertices.len(), edges).expect("induced subgraph is simple");
        (g, vertices.to_vec())
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self.edges.iter().copied().chain(
            other
                .edges
                .iter()
                .map(|e| Edge::new(e.u + shift, e.v + shift)),
        );
        Graph::new(self.n + other.n, edges).expect("disjoint union of simple graphs is simple")
    }

    /// Vertex set is independent (pairwise non-adjacent, no repeats).
    pub fn check_independent(&self, set: &[usize]) -> Result<()> {
        let mut seen = vec![false; self.n];
        for &x in set {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
            seen[x] = true;
        }
        for &x in set {
            if let Some(w) = self.neighbors(x).find(|&w| seen[w]) {
                return Err(Error::NotIndependent(x.min(w), x.max(w)));
            }
        }
        Ok(())
    }
}

/// Serialized as `{"n": .., "edges": [{"u": .., "v": ..}, ..]}`.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("edges", self.edges())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_and_keeps_order() {
        let g = Graph::new(4, [(3, 2), (0, 1), (2, 1)]).unwrap();
        assert_eq!(
            g.edges(),
            &[Edge::new(2, 3), Edge::new(0, 1), Edge::new(1, 2)]
        );
        assert_eq!(g.edge(0), Edge { u: 2, v: 3 });
        assert_eq!(g.neighbors(2).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(g.edge_index(1, 0), Some(1));
        assert_eq!(g.edge_index(0, 3), None);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn degrees_and_components() {
        let g = Graph::new(6, [(0, 1), (1, 2), (4, 5)]).unwrap();
        assert_eq!(g.min_degree(), 0);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3], vec![4, 5]]);
        assert!(!g.is_connected());
        assert!(Graph::empty(1).is_tree());
        assert!(!Graph::empty(0).is_tree());
    }

    #[test]
    fn edge_removal_and_union() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = g.without_edge(1);
        assert_eq!(h.edges(), &[Edge::new(0, 1), Edge::new(0, 2)]);
        let u = g.disjoint_union(&h);
        assert_eq!((u.n(), u.m()), (6, 5));
        assert!(u.has_edge(3, 5));
    }

    #[test]
    fn independence_check() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(g.check_independent(&[0, 2]).is_ok());
        assert_eq!(
            g.check_independent(&[0, 1]),
            Err(Error::NotIndependent(0, 1))
        );
    }
}
