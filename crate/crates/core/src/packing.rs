//! The common-edge relation and edge open packing sets.
//!
//! Two distinct edges `e1`, `e2` conflict when some third edge joins an
//! endpoint of `e1` to an endpoint of `e2` (a path `e1 e e2` or a triangle).
//! An edge open packing (EOP) set is a set of pairwise non-conflicting edges.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A set of edge indices into a host graph's edge list, kept sorted and
/// free of repeats.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct EopSet {
    edges: Vec<usize>,
}

impl EopSet {
    pub fn new<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut edges: Vec<usize> = indices.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        EopSet { edges }
    }

    /// Looks up each edge in `g`; fails on the first non-edge.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(g: &Graph, edges: I) -> Result<Self> {
        let indices = edges
            .into_iter()
            .map(|e| g.require_edge(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(EopSet::new(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.edges.binary_search(&index).is_ok()
    }

    pub fn to_edges(&self, g: &Graph) -> Vec<Edge> {
        self.edges.iter().map(|&i| g.edge(i)).collect()
    }

    /// Every index must address an edge of `g`.
    pub fn check_indices(&self, g: &Graph) -> Result<()> {
        match self.edges.last() {
            Some(&i) if i >= g.m() => Err(Error::EdgeIndexOutOfRange { index: i, m: g.m() }),
            _ => Ok(()),
        }
    }
}

/// A common edge of `e1` and `e2`: an edge other than both that joins an
/// endpoint of `e1` to an endpoint of `e2`. The lexicographically smallest
/// one is returned when several exist.
pub fn common_edge(g: &Graph, e1: Edge, e2: Edge) -> Result<Option<Edge>> {
    let e1 = Edge::new(e1.u, e1.v);
    let e2 = Edge::new(e2.u, e2.v);
    g.require_edge(e1)?;
    g.require_edge(e2)?;
    if e1 == e2 {
        return Err(Error::SameEdge);
    }
    let mut best: Option<Edge> = None;
    for a in [e1.u, e1.v] {
        for b in [e2.u, e2.v] {
            if a == b || !g.has_edge(a, b) {
                continue;
            }
            let e = Edge::new(a, b);
            if e == e1 || e == e2 {
                continue;
            }
            if best.is_none_or(|cur| e < cur) {
                best = Some(e);
            }
        }
    }
    Ok(best)
}

/// A witnessed conflict inside a claimed EOP set: edge indices of the two
/// conflicting members and of their common edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Conflict {
    pub first: usize,
    pub second: usize,
    pub common: usize,
}

/// Finds a conflicting pair in `b`, if any, in time linear in `|E(g)|`.
///
/// A conflict exists iff some edge `xy` of `g` has a member of `b` other than
/// itself at `x` and another at `y`; those two members are necessarily
/// distinct because only `xy` itself contains both `x` and `y`.
pub fn find_conflict(g: &Graph, b: &EopSet) -> Result<Option<Conflict>> {
    b.check_indices(g)?;
    // First two members of b incident to each vertex, enough to find one
    // member distinct from any given edge.
    let mut at: Vec<[usize; 2]> = vec![[usize::MAX; 2]; g.n()];
    for &i in b.indices() {
        let e = g.edge(i);
        for x in [e.u, e.v] {
            let slot = &mut at[x];
            if slot[0] == usize::MAX {
                slot[0] = i;
            } else if slot[1] == usize::MAX {
                slot[1] = i;
            }
        }
    }
    let other_than = |x: usize, e: usize| -> Option<usize> {
        at[x].iter().copied().find(|&i| i != usize::MAX && i != e)
    };
    for (idx, e) in g.edges().iter().enumerate() {
        if let (Some(p), Some(q)) = (other_than(e.u, idx), other_than(e.v, idx)) {
            let (first, second) = if p < q { (p, q) } else { (q, p) };
            return Ok(Some(Conflict {
                first,
                second,
                common: idx,
            }));
        }
    }
    Ok(None)
}

/// Whether `b` is an edge open packing set of `g`. The empty set is.
pub fn is_eop_set(g: &Graph, b: &EopSet) -> Result<bool> {
    Ok(find_conflict(g, b)?.is_none())
}

/// The graph on `E(g)` (vertex `i` is `g.edges()[i]`) whose edges join
/// conflicting pairs. EOP sets of `g` are exactly its independent sets.
pub fn conflict_graph(g: &Graph) -> Graph {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (idx, e) in g.edges().iter().enumerate() {
        for &(_, p) in g.incident(e.u) {
            if p == idx {
                continue;
            }
            for &(_, q) in g.incident(e.v) {
                if q == idx {
                    continue;
                }
                pairs.push(if p < q { (p, q) } else { (q, p) });
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    Graph::new(g.m(), pairs).expect("conflict pairs are distinct edges")
}

/// `G[B]`: the subgraph induced by all endpoints of edges in `b`, together
/// with the map from new vertex ids to vertices of `g` (ascending).
pub fn induced_subgraph_by_edges(g: &Graph, b: &EopSet) -> Result<(Graph, Vec<usize>)> {
    b.check_indices(g)?;
    let mut vertices: Vec<usize> = b
        .indices()
        .iter()
        .flat_map(|&i| {
            let e = g.edge(i);
            [e.u, e.v]
        })
        .collect();
    vertices.sort_unstable();
    vertices.dedup();
    Ok(g.induced(&vertices))
}

/// Every component is a star `K_{1,s}`, isolated vertices included as `K_{1,0}`.
pub fn is_star_forest(g: &Graph) -> bool {
    g.components().iter().all(|comp| {
        let edges: usize = comp.iter().map(|&x| g.degree(x)).sum::<usize>() / 2;
        let hubs = comp.iter().filter(|&&x| g.degree(x) >= 2).count();
        edges + 1 == comp.len() && hubs <= 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};

    #[test]
    fn common_edge_examples() {
        let p4 = path(4);
        assert_eq!(
            common_edge(&p4, Edge::new(0, 1), Edge::new(2, 3)).unwrap(),
            Some(Edge::new(1, 2))
        );
        let k13 = star(3);
        assert_eq!(
            common_edge(&k13, Edge::new(0, 1), Edge::new(0, 2)).unwrap(),
            None
        );
        let k3 = complete(3);
        assert_eq!(
            common_edge(&k3, Edge::new(0, 1), Edge::new(1, 2)).unwrap(),
            Some(Edge::new(0, 2))
        );
    }

    #[test]
    fn common_edge_errors() {
        let p4 = path(4);
        assert_eq!(
            common_edge(&p4, Edge::new(0, 2), Edge::new(2, 3)),
            Err(Error::EdgeNotInGraph(0, 2))
        );
        assert_eq!(
            common_edge(&p4, Edge::new(0, 1), Edge::new(1, 0)),
            Err(Error::SameEdge)
        );
    }

    #[test]
    fn common_edge_picks_smallest() {
        // K4: edges 01 and 23 are joined by 02, 03, 12, 13.
        let k4 = complete(4);
        assert_eq!(
            common_edge(&k4, Edge::new(2, 3), Edge::new(0, 1)).unwrap(),
            Some(Edge::new(0, 2))
        );
    }

    #[test]
    fn eop_set_examples() {
        let c4 = cycle(4);
        let b = EopSet::from_edges(&c4, [Edge::new(0, 1), Edge::new(2, 3)]).unwrap();
        assert!(!is_eop_set(&c4, &b).unwrap());
        let single = EopSet::new([2]);
        assert!(is_eop_set(&c4, &single).unwrap());
        assert!(is_eop_set(&c4, &EopSet::default()).unwrap());
        let k13 = star(3);
        assert!(is_eop_set(&k13, &EopSet::new(0..3)).unwrap());
        assert_eq!(
            is_eop_set(&k13, &EopSet::new([5])),
            Err(Error::EdgeIndexOutOfRange { index: 5, m: 3 })
        );
    }

    #[test]
    fn conflict_reports_common_edge() {
        let p4 = path(4);
        let b = EopSet::new([0, 2]);
        let c = find_conflict(&p4, &b).unwrap().unwrap();
        assert_eq!((c.first, c.second), (0, 2));
        assert_eq!(p4.edge(c.common), Edge::new(1, 2));
    }

    #[test]
    fn conflict_graph_examples() {
        let k3 = conflict_graph(&complete(3));
        assert_eq!((k3.n(), k3.m()), (3, 3));
        let s = conflict_graph(&star(5));
        assert_eq!((s.n(), s.m()), (5, 0));
        // P4 edges 01, 12, 23: only the end edges conflict (via 12).
        let p = conflict_graph(&path(4));
        assert_eq!(p.edges(), &[Edge::new(0, 2)]);
    }

    #[test]
    fn induced_by_edges() {
        let p4 = path(4);
        let (h, map) = induced_subgraph_by_edges(&p4, &EopSet::default()).unwrap();
        assert_eq!((h.n(), h.m()), (0, 0));
        assert!(map.is_empty());
        let (h, map) = induced_subgraph_by_edges(&p4, &EopSet::new([0])).unwrap();
        assert_eq!((h.n(), h.m()), (2, 1));
        assert_eq!(map, vec![0, 1]);
        // two adjacent edges of C4 span three vertices inducing P3
        let c4 = cycle(4);
        let (h, _) = induced_subgraph_by_edges(&c4, &EopSet::new([0, 1])).unwrap();
        assert_eq!((h.n(), h.m()), (3, 2));
    }

    #[test]
    fn star_forests() {
        assert!(is_star_forest(&star(5)));
        assert!(!is_star_forest(&path(4)));
        assert!(is_star_forest(&star(2).disjoint_union(&complete(2))));
        assert!(is_star_forest(&Graph::empty(3)));
        assert!(!is_star_forest(&complete(3)));
    }
}
