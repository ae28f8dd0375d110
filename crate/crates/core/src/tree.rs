//! Linear-time EOP number of a tree.
//!
//! Root the tree, sweep its vertices leaves-to-root in reverse BFS order, and
//! at every vertex `v` combine five values of its children's subtrees:
//!
//! * `rho`: the EOP number of `T_v`;
//! * `rho_c`: best EOP set of `T_v` in which `v` is the center of a star;
//! * `rho_ell`: best EOP set in which `v` is a leaf of a star;
//! * `rho_prime`: best EOP set not touching `v`;
//! * `rho_dprime`: best EOP set touching neither `v` nor any child of `v`.
//!
//! A child `u` is of [`VertexType::Type1`] when `rho_dprime(u) + 1 >=
//! rho_prime(u)`, i.e. hanging it off `v` as a star leaf costs nothing. The
//! recurrences are
//!
//! ```text
//! rho_dprime(v) = Σ_u rho_prime(u)
//! rho_prime(v)  = Σ_u rho(u)
//! rho_ell(v)    = max_u [ max(rho_c(u), rho_dprime(u)) + 1 + Σ_{w≠u} rho_prime(w) ]
//! rho_c(v)      = Σ_{Type1 u} (rho_dprime(u) + 1) + Σ_{Type2 u} rho_prime(u)   if some child is Type1
//!               = Σ_u rho_prime(u) + min_u (rho_dprime(u) + 1 - rho_prime(u))  otherwise
//! rho(v)        = max(rho_c, rho_ell, rho_prime)
//! ```
//!
//! and leaves get all zeros. Each vertex does work proportional to its number
//! of children, so the sweep is linear. The choices made at each vertex are
//! kept in [`Recon`] so that an optimal set can be rebuilt top-down.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::packing::EopSet;

const NONE: usize = usize::MAX;

// How many queue entries ahead the BFS prefetches adjacency. On large random
// trees the walk is bound by cache misses on the adjacency lists.
const PREFETCH_DISTANCE: usize = 16;

#[cfg(target_arch = "x86_64")]
#[inline(always)]
fn prefetch<T>(p: *const T) {
    use std::arch::x86_64::{_mm_prefetch, _MM_HINT_T0};
    // SAFETY: sse is part of the x86_64 baseline, and a prefetch is a hint
    // that never faults, whatever the address.
    unsafe { _mm_prefetch::<_MM_HINT_T0>(p.cast()) }
}

#[cfg(not(target_arch = "x86_64"))]
#[inline(always)]
fn prefetch<T>(_: *const T) {}

/// A tree with a fixed root and its BFS order.
///
/// Per-vertex data is stored by BFS position. The children of the vertex at
/// position `p` occupy the consecutive positions
/// `first_child[p]..first_child[p] + child_count[p]`, so leaves-to-root sweeps
/// read memory in order.
#[derive(Clone, Debug)]
pub struct RootedTree<'g> {
    graph: &'g Graph,
    root: usize,
    bfs: Vec<usize>,
    // vertex id -> BFS position
    pos: Vec<usize>,
    parent_pos: Vec<usize>,
    parent_edge: Vec<usize>,
    first_child: Vec<usize>,
    child_count: Vec<usize>,
}

/// Roots the tree `g` at `root`.
pub fn root_tree(g: &Graph, root: usize) -> Result<RootedTree<'_>> {
    let n = g.n();
    if n == 0 {
        return Err(Error::NotATree("graph has no vertices"));
    }
    if root >= n {
        return Err(Error::BadRoot { root, n });
    }
    if g.m() != n - 1 {
        return Err(Error::NotATree("edge count differs from n - 1"));
    }
    if n > u32::MAX as usize {
        return Err(Error::NotATree("more than u32::MAX vertices"));
    }
    let mut bfs = Vec::with_capacity(n);
    let mut parent_pos = Vec::with_capacity(n);
    let mut parent_edge = Vec::with_capacity(n);
    let mut first_child = Vec::with_capacity(n);
    let mut child_count = Vec::with_capacity(n);
    bfs.push(root);
    parent_pos.push(NONE);
    parent_edge.push(NONE);
    // Skipping only the parent is enough when the walk stays a tree. With
    // n - 1 edges a cycle means a disconnected graph, and the walk around it
    // never ends, so overflowing n vertices is reported the same way.
    let mut head = 0;
    while head < bfs.len() {
        if let Some(&far) = bfs.get(head + 2 * PREFETCH_DISTANCE) {
            prefetch(g.offset_ptr(far));
        }
        if let Some(&ahead) = bfs.get(head + PREFETCH_DISTANCE) {
            prefetch(g.incident(ahead).as_ptr());
        }
        let v = bfs[head];
        let up = match parent_pos[head] {
            NONE => NONE,
            p => bfs[p],
        };
        first_child.push(bfs.len());
        for &(u, e) in g.incident(v) {
            if u == up {
                continue;
            }
            if bfs.len() == n {
                return Err(Error::NotATree("graph is disconnected"));
            }
            bfs.push(u);
            parent_pos.push(head);
            parent_edge.push(e);
        }
        child_count.push(bfs.len() - first_child[head]);
        head += 1;
    }
    if bfs.len() != n {
        return Err(Error::NotATree("graph is disconnected"));
    }
    // filled after the walk: independent scattered writes overlap better
    // than the same writes interleaved with the adjacency reads
    let mut pos = vec![NONE; n];
    for (i, &v) in bfs.iter().enumerate() {
        pos[v] = i;
    }
    Ok(RootedTree {
        graph: g,
        root,
        bfs,
        pos,
        parent_pos,
        parent_edge,
        first_child,
        child_count,
    })
}

impl<'g> RootedTree<'g> {
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// BFS position of vertex `v`; the root is at 0.
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.parent_pos[self.pos[v]] {
            NONE => None,
            p => Some(self.bfs[p]),
        }
    }

    /// Children of `v` in increasing id order.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.bfs[self.child_positions(self.pos[v])]
    }

    fn child_positions(&self, p: usize) -> std::ops::Range<usize> {
        self.first_child[p]..self.first_child[p] + self.child_count[p]
    }

    /// Index of the edge joining `v` to its parent.
    pub fn parent_edge(&self, v: usize) -> Option<usize> {
        match self.parent_edge[self.pos[v]] {
            NONE => None,
            e => Some(e),
        }
    }

    pub fn bfs_order(&self) -> &[usize] {
        &self.bfs
    }

    /// Reverse BFS order: leaves first, the root last.
    pub fn order(&self) -> impl Iterator<Item = usize> + '_ {
        self.bfs.iter().rev().copied()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VertexType {
    Type1,
    Type2,
}

/// Which of `rho_c`, `rho_ell`, `rho_prime` attains `rho`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    Center,
    Leaf,
    Unmatched,
}

/// Choices recorded at a vertex for rebuilding optimal sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Recon {
    /// BFS position of the child acting as the star center when `v` is a
    /// star leaf.
    pub leaf_center: Option<u32>,
    /// When every child is Type 2: BFS position of the single child joined to
    /// `v` in the `rho_c` configuration.
    pub lone_leaf: Option<u32>,
    pub best: Branch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
/// Values are `u32` to keep the table small; trees are limited to `u32::MAX`
/// vertices.
pub struct DpRecord {
    pub rho: u32,
    pub rho_c: u32,
    pub rho_ell: u32,
    pub rho_prime: u32,
    pub rho_dprime: u32,
    pub vertex_type: VertexType,
    pub recon: Recon,
}

impl DpRecord {
    const LEAF: DpRecord = DpRecord {
        rho: 0,
        rho_c: 0,
        rho_ell: 0,
        rho_prime: 0,
        rho_dprime: 0,
        vertex_type: VertexType::Type1,
        recon: Recon {
            leaf_center: None,
            lone_leaf: None,
            best: Branch::Center,
        },
    };
}

/// Runs the dynamic program. The result is indexed by BFS position (see
/// [`RootedTree::position`]); [`TreeSolution::record`] looks up by vertex.
pub fn dp_pass(t: &RootedTree<'_>) -> Vec<DpRecord> {
    let mut rec = vec![DpRecord::LEAF; t.graph.n()];
    for v in (0..t.bfs.len()).rev() {
        let children = t.child_positions(v);
        if children.is_empty() {
            continue;
        }
        let mut sum_prime = 0;
        let mut sum_rho = 0;
        let mut any_type1 = false;
        let mut star_sum = 0;
        for u in children.clone() {
            let r = &rec[u];
            sum_prime += r.rho_prime;
            sum_rho += r.rho;
            match r.vertex_type {
                VertexType::Type1 => {
                    any_type1 = true;
                    star_sum += r.rho_dprime + 1;
                }
                VertexType::Type2 => star_sum += r.rho_prime,
            }
        }
        let rho_dprime = sum_prime;
        let rho_prime = sum_rho;

        // star leaf: v hangs off one child u acting as a center
        let mut rho_ell = 0;
        let mut leaf_center = NONE;
        for u in children.clone() {
            let r = &rec[u];
            let value = r.rho_c.max(r.rho_dprime) + 1 + (sum_prime - r.rho_prime);
            if value > rho_ell {
                rho_ell = value;
                leaf_center = u;
            }
        }

        // star center
        let (rho_c, lone_leaf) = if any_type1 {
            (star_sum, NONE)
        } else {
            // every child has rho_prime >= rho_dprime + 2; give up the least
            let mut loss = u32::MAX;
            let mut pick = NONE;
            for u in children.clone() {
                let r = &rec[u];
                let l = r.rho_prime - r.rho_dprime - 1;
                if l < loss {
                    loss = l;
                    pick = u;
                }
            }
            (sum_prime - loss, pick)
        };

        let rho = rho_c.max(rho_ell).max(rho_prime);
        let best = if rho_c == rho {
            Branch::Center
        } else if rho_ell == rho {
            Branch::Leaf
        } else {
            Branch::Unmatched
        };
        let vertex_type = if rho_dprime + 1 >= rho_prime {
            VertexType::Type1
        } else {
            VertexType::Type2
        };
        rec[v] = DpRecord {
            rho,
            rho_c,
            rho_ell,
            rho_prime,
            rho_dprime,
            vertex_type,
            recon: Recon {
                leaf_center: (leaf_center != NONE).then_some(leaf_center as u32),
                lone_leaf: (lone_leaf != NONE).then_some(lone_leaf as u32),
                best,
            },
        };
    }
    rec
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    Rho,
    Center,
    Leaf,
    Prime,
    DoublePrime,
}

/// Rebuilds an optimal EOP set of `T_root` from the recorded choices in one
/// root-to-leaves sweep. `rec` is indexed by BFS position, as returned by
/// [`dp_pass`].
pub fn reconstruct(t: &RootedTree<'_>, rec: &[DpRecord]) -> EopSet {
    let n = t.bfs.len();
    let mut target = vec![Target::Rho; n];
    let mut picked = vec![false; t.graph.m()];
    for v in 0..n {
        let children = t.child_positions(v);
        if children.is_empty() {
            continue;
        }
        let r = &rec[v];
        let mut goal = target[v];
        if goal == Target::Rho {
            goal = match r.recon.best {
                Branch::Center => Target::Center,
                Branch::Leaf => Target::Leaf,
                Branch::Unmatched => Target::Prime,
            };
        }
        match goal {
            Target::Rho => unreachable!(),
            Target::Center => {
                let lone = r.recon.lone_leaf.map(|x| x as usize);
                for u in children {
                    let joined = match lone {
                        None => rec[u].vertex_type == VertexType::Type1,
                        Some(star) => u == star,
                    };
                    if joined {
                        picked[t.parent_edge[u]] = true;
                        target[u] = Target::DoublePrime;
                    } else {
                        target[u] = Target::Prime;
                    }
                }
            }
            Target::Leaf => {
                let center =
                    r.recon
                        .leaf_center
                        .expect("internal vertex has a leaf choice") as usize;
                for u in children {
                    if u == center {
                        picked[t.parent_edge[u]] = true;
                        // a K_{1,1} star when the center keeps its children free
                        target[u] = if rec[u].rho_c >= rec[u].rho_dprime {
                            Target::Center
                        } else {
                            Target::DoublePrime
                        };
                    } else {
                        target[u] = Target::Prime;
                    }
                }
            }
            Target::Prime => {
                for u in children {
                    target[u] = Target::Rho;
                }
            }
            Target::DoublePrime => {
                for u in children {
                    target[u] = Target::Prime;
                }
            }
        }
    }
    EopSet::new(
        picked
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p)
            .map(|(i, _)| i),
    )
}

/// Rooted tree together with its DP table.
pub struct TreeSolution<'g> {
    pub tree: RootedTree<'g>,
    /// Indexed by BFS position.
    pub records: Vec<DpRecord>,
}

impl TreeSolution<'_> {
    pub fn value(&self) -> usize {
        self.records[0].rho as usize
    }

    /// DP record of vertex `v`.
    pub fn record(&self, v: usize) -> &DpRecord {
        &self.records[self.tree.position(v)]
    }

    pub fn witness(&self) -> EopSet {
        reconstruct(&self.tree, &self.records)
    }
}

pub fn solve_tree(g: &Graph, root: usize) -> Result<TreeSolution<'_>> {
    let tree = root_tree(g, root)?;
    let records = dp_pass(&tree);
    Ok(TreeSolution { tree, records })
}

/// ρ_e^o of a tree, rooted at vertex 0.
pub fn tree_eop_number(g: &Graph) -> Result<usize> {
    Ok(solve_tree(g, 0)?.value())
}

/// A maximum EOP set of a tree, rooted at vertex 0.
pub fn tree_eop_set(g: &Graph) -> Result<EopSet> {
    Ok(solve_tree(g, 0)?.witness())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};
    use crate::packing::is_eop_set;

    #[test]
    fn rooting() {
        let k2 = path(2);
        let t = root_tree(&k2, 0).unwrap();
        assert_eq!(t.children(0), &[1]);
        assert_eq!(t.order().collect::<Vec<_>>(), vec![1, 0]);
        assert_eq!(t.parent(1), Some(0));
        assert_eq!(t.parent(0), None);

        let p3 = path(3);
        let t = root_tree(&p3, 1).unwrap();
        assert_eq!(t.children(1), &[0, 2]);

        let single = Graph::empty(1);
        let t = root_tree(&single, 0).unwrap();
        assert_eq!(t.order().collect::<Vec<_>>(), vec![0]);
        assert!(t.children(0).is_empty());
    }

    #[test]
    fn rooting_errors() {
        assert!(matches!(root_tree(&cycle(4), 0), Err(Error::NotATree(_))));
        let forest = path(2).disjoint_union(&path(2));
        assert!(matches!(root_tree(&forest, 0), Err(Error::NotATree(_))));
        // n - 1 edges but disconnected (triangle plus isolated vertex)
        let g = complete(3).disjoint_union(&Graph::empty(1));
        assert_eq!(
            root_tree(&g, 0).unwrap_err(),
            Error::NotATree("graph is disconnected")
        );
        assert_eq!(
            root_tree(&path(3), 3).unwrap_err(),
            Error::BadRoot { root: 3, n: 3 }
        );
        assert!(root_tree(&Graph::empty(0), 0).is_err());
    }

    #[test]
    fn star_center_record() {
        for t in 1..=8u32 {
            let g = star(t as usize);
            let sol = solve_tree(&g, 0).unwrap();
            let r = *sol.record(0);
            assert_eq!(
                (r.rho_c, r.rho_ell, r.rho_prime, r.rho_dprime),
                (t, 1, 0, 0)
            );
            assert_eq!(r.rho, t);
        }
    }

    #[test]
    fn leaf_record() {
        let g = Graph::empty(1);
        let sol = solve_tree(&g, 0).unwrap();
        assert_eq!(*sol.record(0), DpRecord::LEAF);
        assert_eq!(sol.record(0).vertex_type, VertexType::Type1);
        assert_eq!(sol.value(), 0);
        assert!(sol.witness().is_empty());
    }

    #[test]
    fn paths() {
        // P4 rooted at an endpoint: brute force gives 2
        assert_eq!(solve_tree(&path(4), 0).unwrap().value(), 2);
        assert_eq!(tree_eop_number(&path(2)).unwrap(), 1);
        let w = tree_eop_set(&path(4)).unwrap();
        assert_eq!(w.len(), 2);
        assert!(is_eop_set(&path(4), &w).unwrap());
    }

    #[test]
    fn star_witness_is_whole_star() {
        let w = tree_eop_set(&star(3)).unwrap();
        assert_eq!(w.indices(), &[0, 1, 2]);
        assert_eq!(tree_eop_number(&star(7)).unwrap(), 7);
    }

    #[test]
    fn all_type2_children() {
        // Root 0 with children 1 and 2; each child has one child heading a
        // 3-leaf star, so rho'(1) = 3 > rho''(1) + 1 = 1 and both are Type 2.
        let edges = [
            (0, 1),
            (0, 2),
            (1, 3),
            (3, 4),
            (3, 5),
            (3, 6),
            (2, 7),
            (7, 8),
            (7, 9),
            (7, 10),
        ];
        let g = Graph::new(11, edges).unwrap();
        let sol = solve_tree(&g, 0).unwrap();
        assert_eq!(sol.record(1).vertex_type, VertexType::Type2);
        assert_eq!(sol.record(2).vertex_type, VertexType::Type2);
        // 3 + 3 + min(0 + 1 - 3, 0 + 1 - 3)
        assert_eq!(sol.record(0).rho_c, 4);
        // vertex 1 sits at BFS position 1
        assert_eq!(sol.record(0).recon.lone_leaf, Some(1));
        assert_eq!(sol.value(), 8);
        let w = sol.witness();
        assert_eq!(w.len(), 8);
        assert!(is_eop_set(&g, &w).unwrap());
    }

    #[test]
    fn long_path_does_not_recurse() {
        let n = 200_000;
        let g = path(n);
        let w = tree_eop_set(&g).unwrap();
        assert!(is_eop_set(&g, &w).unwrap());
        assert_eq!(w.len(), tree_eop_number(&g).unwrap());
    }
}
