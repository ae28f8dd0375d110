//! Exact solvers: maximum independent set by branch and bound, and through
//! it the EOP number and the induced matching number.
//!
//! The search branches on a maximum-degree vertex of the residual graph
//! (include it, or exclude it), takes vertices of residual degree at most one
//! greedily, splits disconnected residues into independent subproblems, and
//! prunes with a greedy clique-cover bound. Ties always go to the smallest
//! vertex id, so witnesses are reproducible. Every branch node counts against
//! a [`Budget`]; exceeding it is an error, never a truncated answer.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bitset::{VertexSet, Words};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::packing::{conflict_graph, EopSet};

pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub node_limit: u64,
}

impl Budget {
    pub fn nodes(node_limit: u64) -> Self {
        Budget { node_limit }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            node_limit: DEFAULT_NODE_LIMIT,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult<W> {
    pub value: usize,
    pub witness: W,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// α(G) with a maximum independent set (sorted vertex ids).
pub fn max_independent_set(g: &Graph) -> Result<SolveResult<Vec<usize>>> {
    max_independent_set_with(g, Budget::default())
}

pub fn max_independent_set_with(g: &Graph, budget: Budget) -> Result<SolveResult<Vec<usize>>> {
    let start = Instant::now();
    let (witness, nodes) = match g.n() {
        0..=64 => run::<u64>(g, budget)?,
        65..=128 => run::<u128>(g, budget)?,
        _ => run::<Words>(g, budget)?,
    };
    Ok(SolveResult {
        value: witness.len(),
        witness,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

/// ρ_e^o(G) with a maximum EOP set, via independent sets of the conflict graph.
pub fn eop_number_exact(g: &Graph) -> Result<SolveResult<EopSet>> {
    eop_number_exact_with(g, Budget::default())
}

pub fn eop_number_exact_with(g: &Graph, budget: Budget) -> Result<SolveResult<EopSet>> {
    let start = Instant::now();
    let mis = max_independent_set_with(&conflict_graph(g), budget)?;
    Ok(SolveResult {
        value: mis.value,
        witness: EopSet::new(mis.witness),
        nodes_explored: mis.nodes_explored,
        elapsed: start.elapsed(),
    })
}

/// Maximum induced matching: pairwise vertex-disjoint edges with no edge of
/// `g` joining any two of them.
pub fn induced_matching_number(g: &Graph) -> Result<SolveResult<EopSet>> {
    induced_matching_number_with(g, Budget::default())
}

pub fn induced_matching_number_with(g: &Graph, budget: Budget) -> Result<SolveResult<EopSet>> {
    let start = Instant::now();
    let mis = max_independent_set_with(&matching_conflict_graph(g), budget)?;
    Ok(SolveResult {
        value: mis.value,
        witness: EopSet::new(mis.witness),
        nodes_explored: mis.nodes_explored,
        elapsed: start.elapsed(),
    })
}

/// Edges of `g` conflict when they touch or are joined by an edge.
pub fn matching_conflict_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut pairs = Vec::new();
    for (i, e1) in edges.iter().enumerate() {
        for (j, e2) in edges.iter().enumerate().skip(i + 1) {
            let joined = [e1.u, e1.v]
                .iter()
                .any(|&a| g.has_edge(a, e2.u) || g.has_edge(a, e2.v));
            if e1.shares_vertex(e2) || joined {
                pairs.push((i, j));
            }
        }
    }
    Graph::new(edges.len(), pairs).expect("pairs are distinct")
}

fn run<S: VertexSet>(g: &Graph, budget: Budget) -> Result<(Vec<usize>, u64)> {
    let n = g.n();
    let mut adj = Vec::with_capacity(n);
    let mut all = S::with_capacity(n);
    for x in 0..n {
        let mut s = S::with_capacity(n);
        for w in g.neighbors(x) {
            s.insert(w);
        }
        adj.push(s);
        all.insert(x);
    }
    let mut search = Search {
        adj,
        nodes: 0,
        limit: budget.node_limit,
    };
    let mut set = search.solve(all)?;
    set.sort_unstable();
    Ok((set, search.nodes))
}

struct Search<S> {
    adj: Vec<S>,
    nodes: u64,
    limit: u64,
}

impl<S: VertexSet> Search<S> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::BudgetExceeded { limit: self.limit });
        }
        Ok(())
    }

    fn closed(&self, x: usize) -> S {
        let mut s = self.adj[x].clone();
        s.insert(x);
        s
    }

    /// Moves every vertex of residual degree <= 1 into `chosen`, removing its
    /// closed neighborhood. Some maximum independent set contains each of them.
    fn reduce(&self, set: &mut S, chosen: &mut Vec<usize>) {
        loop {
            let mut changed = false;
            for x in set.members() {
                if set.contains(x) && self.adj[x].and_count(set) <= 1 {
                    chosen.push(x);
                    *set = set.and_not(&self.closed(x));
                    changed = true;
                }
            }
            if !changed {
                return;
            }
        }
    }

    /// Component containing the smallest member of `set`.
    fn first_component(&self, set: &S) -> S {
        let start = set.first().expect("nonempty set");
        let mut comp = set.and_not(set);
        comp.insert(start);
        let mut frontier = comp.clone();
        while !frontier.is_empty() {
            let mut reach = set.and_not(set);
            for x in frontier.members() {
                reach.or_assign(&self.adj[x]);
            }
            let fresh = reach.and(set).and_not(&comp);
            comp.or_assign(&fresh);
            frontier = fresh;
        }
        comp
    }

    fn components(&self, set: &S) -> Vec<S> {
        let mut rest = set.clone();
        let mut out = Vec::new();
        while !rest.is_empty() {
            let c = self.first_component(&rest);
            rest = rest.and_not(&c);
            out.push(c);
        }
        out
    }

    /// Greedy partition into cliques, in increasing vertex order; the number
    /// of cliques bounds the independence number.
    fn clique_cover_bound(&self, set: &S) -> usize {
        // each clique is tracked by the common neighborhood of its members
        let mut cliques: Vec<S> = Vec::new();
        for x in set.members() {
            match cliques.iter_mut().find(|c| c.contains(x)) {
                Some(c) => *c = c.and(&self.adj[x]),
                None => cliques.push(self.adj[x].and(set)),
            }
        }
        cliques.len()
    }

    fn greedy(&self, set: &S) -> Vec<usize> {
        let mut rest = set.clone();
        let mut out = Vec::new();
        while !rest.is_empty() {
            let x = rest
                .members()
                .into_iter()
                .min_by_key(|&x| (self.adj[x].and_count(&rest), x))
                .unwrap();
            out.push(x);
            rest = rest.and_not(&self.closed(x));
        }
        out
    }

    /// Exact maximum independent set of the subgraph induced by `set`.
    fn solve(&mut self, mut set: S) -> Result<Vec<usize>> {
        self.tick()?;
        let mut chosen = Vec::new();
        self.reduce(&mut set, &mut chosen);
        if set.is_empty() {
            return Ok(chosen);
        }
        let comps = self.components(&set);
        if comps.len() > 1 {
            for c in comps {
                chosen.extend(self.solve(c)?);
            }
            return Ok(chosen);
        }
        let mut best = self.greedy(&set);
        let mut current = Vec::new();
        self.branch(set, &mut current, &mut best)?;
        chosen.extend(best);
        Ok(chosen)
    }

    fn branch(
        &mut self,
        mut set: S,
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) -> Result<()> {
        self.tick()?;
        let mark = current.len();
        self.reduce(&mut set, current);
        let outcome = self.branch_reduced(set, current, best);
        current.truncate(mark);
        outcome
    }

    fn branch_reduced(
        &mut self,
        set: S,
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) -> Result<()> {
        if set.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return Ok(());
        }
        let remaining = set.count();
        if current.len() + remaining <= best.len()
            || current.len() + self.clique_cover_bound(&set) <= best.len()
        {
            return Ok(());
        }
        let comps = self.components(&set);
        if comps.len() > 1 {
            let mark = current.len();
            for c in comps {
                let part = self.solve(c)?;
                current.extend(part);
            }
            if current.len() > best.len() {
                *best = current.clone();
            }
            current.truncate(mark);
            return Ok(());
        }
        let pivot = set
            .members()
            .into_iter()
            .max_by_key(|&x| (self.adj[x].and_count(&set), std::cmp::Reverse(x)))
            .unwrap();
        current.push(pivot);
        self.branch(set.and_not(&self.closed(pivot)), current, best)?;
        current.pop();
        let mut without = set;
        without.remove(pivot);
        self.branch(without, current, best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_minus_edge, cycle, path, petersen, star};
    use crate::packing::is_eop_set;

    #[test]
    fn independence_examples() {
        assert_eq!(max_independent_set(&cycle(5)).unwrap().value, 2);
        for n in 1..8 {
            assert_eq!(max_independent_set(&complete(n)).unwrap().value, 1);
        }
        assert_eq!(max_independent_set(&Graph::empty(0)).unwrap().value, 0);
        assert_eq!(max_independent_set(&Graph::empty(200)).unwrap().value, 200);
    }

    #[test]
    fn petersen_alpha_against_enumeration() {
        let g = petersen();
        let brute = (0u32..1 << 10)
            .filter(|mask| {
                g.edges()
                    .iter()
                    .all(|e| mask >> e.u & 1 == 0 || mask >> e.v & 1 == 0)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap();
        assert_eq!(brute, 4);
        let r = max_independent_set(&g).unwrap();
        assert_eq!(r.value, brute);
        g.check_independent(&r.witness).unwrap();
    }

    #[test]
    fn eop_examples() {
        assert_eq!(eop_number_exact(&cycle(10)).unwrap().value, 4);
        for n in 2..8 {
            assert_eq!(eop_number_exact(&complete(n)).unwrap().value, 1);
        }
        for n in 3..8 {
            assert_eq!(eop_number_exact(&complete_minus_edge(n)).unwrap().value, 2);
        }
        assert_eq!(eop_number_exact(&Graph::empty(4)).unwrap().value, 0);
    }

    #[test]
    fn eop_witness_is_valid() {
        let g = cycle(10);
        let r = eop_number_exact(&g).unwrap();
        assert_eq!(r.witness.len(), r.value);
        assert!(is_eop_set(&g, &r.witness).unwrap());
    }

    #[test]
    fn induced_matching_examples() {
        assert_eq!(induced_matching_number(&path(4)).unwrap().value, 1);
        assert_eq!(induced_matching_number(&path(5)).unwrap().value, 2);
        for t in 1..6 {
            assert_eq!(induced_matching_number(&star(t)).unwrap().value, 1);
        }
    }

    #[test]
    fn budget_guard() {
        let g = petersen();
        let err = max_independent_set_with(&g, Budget::nodes(1)).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { limit: 1 });
    }

    #[test]
    fn deterministic_witness() {
        let g = petersen();
        let a = eop_number_exact(&g).unwrap();
        let b = eop_number_exact(&g).unwrap();
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.nodes_explored, b.nodes_explored);
    }

    #[test]
    fn wide_graph_uses_word_sets() {
        // 150 disjoint triangles: α = 150
        let mut g = Graph::empty(0);
        for _ in 0..150 {
            g = g.disjoint_union(&complete(3));
        }
        let r = max_independent_set(&g).unwrap();
        assert_eq!(r.value, 150);
        g.check_independent(&r.witness).unwrap();
    }
}
