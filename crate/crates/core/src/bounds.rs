//! The `m / δ` upper bound and its extremal graphs, the effect of deleting an
//! edge, and the small-value characterizations (`ρ_e^o ∈ {1, 2}`).
//!
//! The extremal family 𝓕 consists of bipartite graphs of minimum degree
//! `k ≥ 2` with parts `A ∪ C` and `B`, where every vertex of `B` has exactly
//! one neighbor in `A` and `k - 1` in `C`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{eop_number_exact_with, Budget};
use crate::graph::{Edge, Graph};
use crate::packing::is_star_forest;
use crate::structure::{bipartition, diameter, find_claw_at, Diameter};

/// Outcome of comparing `ρ_e^o(G) · δ(G)` with `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaBound {
    pub rho: usize,
    pub delta: usize,
    pub m: usize,
    pub bound_holds: bool,
    pub is_tight: bool,
}

pub fn delta_bound_check(g: &Graph, budget: Budget) -> Result<DeltaBound> {
    let delta = g.min_degree();
    if delta == 0 {
        return Err(Error::UndefinedBound);
    }
    let rho = eop_number_exact_with(g, budget)?.value;
    let m = g.m();
    Ok(DeltaBound {
        rho,
        delta,
        m,
        bound_holds: rho * delta <= m,
        is_tight: rho * delta == m,
    })
}

pub fn is_disjoint_union_of_stars(g: &Graph) -> bool {
    is_star_forest(g)
}

/// A certificate of membership in 𝓕. Vertex lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyFWitness {
    pub a_set: Vec<usize>,
    pub b_set: Vec<usize>,
    pub c_set: Vec<usize>,
    pub k: usize,
}

impl FamilyFWitness {
    /// Checks every defining condition against `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let mut role = vec![0u8; g.n()];
        for (r, set) in [(1u8, &self.a_set), (2, &self.b_set), (3, &self.c_set)] {
            for &x in set {
                if x >= g.n() || role[x] != 0 {
                    return false;
                }
                role[x] = r;
            }
        }
        if self.k < 2 || role.contains(&0) || g.min_degree() != self.k {
            return false;
        }
        let bipartite = g
            .edges()
            .iter()
            .all(|e| (role[e.u] == 2) != (role[e.v] == 2));
        bipartite
            && self.b_set.iter().all(|&b| {
                let in_a = g.neighbors(b).filter(|&w| role[w] == 1).count();
                let in_c = g.neighbors(b).filter(|&w| role[w] == 3).count();
                in_a == 1 && in_c == self.k - 1
            })
    }
}

/// Finds a witness that `g` belongs to 𝓕, or `None`.
///
/// Each component is handled on its own: its `B` side is one of the two
/// bipartition classes whose vertices all have degree exactly `k`, and the
/// `A` vertices of the other class are chosen by backtracking so that their
/// neighborhoods partition `B`. Worst-case time is exponential.
pub fn recognize_family_f(g: &Graph) -> Option<FamilyFWitness> {
    let k = g.min_degree();
    if g.n() == 0 || k < 2 {
        return None;
    }
    let colors = bipartition(g)?;
    let mut a_set = Vec::new();
    let mut b_set = Vec::new();
    let mut c_set = Vec::new();
    for comp in g.components() {
        let mut found = false;
        for side in [0u8, 1] {
            let b: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|&x| colors[x] == side)
                .collect();
            let other: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|&x| colors[x] != side)
                .collect();
            if b.iter().any(|&x| g.degree(x) != k) {
                continue;
            }
            if let Some(a) = exact_cover(g, &b, &other) {
                c_set.extend(
                    other
                        .iter()
                        .copied()
                        .filter(|x| a.binary_search(x).is_err()),
                );
                a_set.extend(a);
                b_set.extend(b);
                found = true;
                break;
            }
        }
        if !found {
            return None;
        }
    }
    a_set.sort_unstable();
    b_set.sort_unstable();
    c_set.sort_unstable();
    Some(FamilyFWitness {
        a_set,
        b_set,
        c_set,
        k,
    })
}

// Picks vertices of `other` whose neighborhoods partition `b`. Returns them sorted.
fn exact_cover(g: &Graph, b: &[usize], other: &[usize]) -> Option<Vec<usize>> {
    let mut covered = vec![false; g.n()];
    let mut banned = vec![false; g.n()];
    let mut chosen = Vec::new();
    if cover_step(g, b, &mut covered, &mut banned, &mut chosen) {
        chosen.sort_unstable();
        debug_assert!(chosen.iter().all(|x| other.contains(x)));
        Some(chosen)
    } else {
        None
    }
}

fn cover_step(
    g: &Graph,
    b: &[usize],
    covered: &mut [bool],
    banned: &mut [bool],
    chosen: &mut Vec<usize>,
) -> bool {
    let fits = |a: usize, covered: &[bool]| g.neighbors(a).all(|w| !covered[w]);
    // the uncovered vertex with the fewest usable candidates
    let mut pick: Option<(usize, Vec<usize>)> = None;
    for &x in b.iter().filter(|&&x| !covered[x]) {
        let options: Vec<usize> = g
            .neighbors(x)
            .filter(|&a| !banned[a] && fits(a, covered))
            .collect();
        if pick
            .as_ref()
            .is_none_or(|(_, best)| options.len() < best.len())
        {
            let empty = options.is_empty();
            pick = Some((x, options));
            if empty {
                break;
            }
        }
    }
    let Some((_, options)) = pick else {
        return true;
    };
    let mut tried = Vec::new();
    for a in options {
        for w in g.neighbors(a) {
            covered[w] = true;
        }
        chosen.push(a);
        if cover_step(g, b, covered, banned, chosen) {
            return true;
        }
        chosen.pop();
        for w in g.neighbors(a) {
            covered[w] = false;
        }
        // once `a` has failed here it cannot help in this subtree
        banned[a] = true;
        tried.push(a);
    }
    for a in tried {
        banned[a] = false;
    }
    false
}

/// The pieces that decide consistency with the characterization of
/// tight graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharReport {
    pub bound: DeltaBound,
    pub star_forest: bool,
    pub family_f: Option<FamilyFWitness>,
    pub consistent: bool,
}

pub fn char_report(g: &Graph, budget: Budget) -> Result<CharReport> {
    let bound = delta_bound_check(g, budget)?;
    let star_forest = is_disjoint_union_of_stars(g);
    let family_f = recognize_family_f(g);
    let consistent = bound.is_tight == (star_forest || family_f.is_some());
    Ok(CharReport {
        bound,
        star_forest,
        family_f,
        consistent,
    })
}

/// Tight iff a disjoint union of stars or a member of 𝓕.
pub fn check_char_theorem(g: &Graph, budget: Budget) -> Result<bool> {
    Ok(char_report(g, budget)?.consistent)
}

/// Part sizes for [`build_family_f`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyPattern {
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// Builds a member of 𝓕 with round-robin wiring: `b_t` joins `a_{t mod |A|}`
/// and `c_{(t(k-1) + s) mod |C|}` for `s < k - 1`.
///
/// Vertices are numbered `A`, then `B`, then `C`.
pub fn build_family_f(p: FamilyPattern) -> Result<(Graph, FamilyFWitness)> {
    let infeasible = |why: String| Err(Error::InfeasiblePattern(why));
    if p.k < 2 {
        return infeasible(format!("k = {} must be at least 2", p.k));
    }
    if p.a == 0 || p.b == 0 {
        return infeasible("A and B must be nonempty".into());
    }
    if p.c < p.k - 1 {
        return infeasible(format!("|C| = {} is less than k - 1 = {}", p.c, p.k - 1));
    }
    let (a0, b0, c0) = (0, p.a, p.a + p.b);
    let mut edges = Vec::with_capacity(p.b * p.k);
    for t in 0..p.b {
        edges.push(Edge::new(b0 + t, a0 + t % p.a));
        for s in 0..p.k - 1 {
            edges.push(Edge::new(b0 + t, c0 + (t * (p.k - 1) + s) % p.c));
        }
    }
    let g = Graph::new(p.a + p.b + p.c, edges).expect("round-robin wiring is simple");
    if let Some(x) = (a0..b0).find(|&x| g.degree(x) < p.k) {
        return infeasible(format!(
            "A vertex {} has degree {} < k = {}",
            x,
            g.degree(x),
            p.k
        ));
    }
    if let Some(x) = (c0..g.n()).find(|&x| g.degree(x) < p.k) {
        return infeasible(format!(
            "C vertex {} has degree {} < k = {}",
            x - c0,
            g.degree(x),
            p.k
        ));
    }
    let witness = FamilyFWitness {
        a_set: (a0..b0).collect(),
        b_set: (b0..c0).collect(),
        c_set: (c0..g.n()).collect(),
        k: p.k,
    };
    Ok((g, witness))
}

/// Inclusive range that `ρ_e^o(G - e)` must fall in, given `ρ_e^o(G)` and `m`.
pub fn removal_bounds(rho: usize, m: usize) -> (usize, usize) {
    match rho {
        0 => (0, 0),
        // a single clique K_k plus isolated vertices
        1 if m == 1 => (0, 0),
        1 => (2, 2),
        2 => (1, 3),
        _ => (rho - 1, 2 * (rho - 1)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemovalEntry {
    pub edge: Edge,
    pub rho_after: usize,
    pub within_bounds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemovalProfile {
    pub rho_before: usize,
    pub lower: usize,
    pub upper: usize,
    pub entries: Vec<RemovalEntry>,
    pub bounds_ok: bool,
}

/// `ρ_e^o(G - e)` for every edge, in edge-list order.
pub fn edge_removal_profile(g: &Graph, budget: Budget) -> Result<RemovalProfile> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let rho_before = eop_number_exact_with(g, budget)?.value;
    let (lower, upper) = removal_bounds(rho_before, g.m());
    let mut entries = Vec::with_capacity(g.m());
    for i in 0..g.m() {
        let rho_after = eop_number_exact_with(&g.without_edge(i), budget)?.value;
        entries.push(RemovalEntry {
            edge: g.edge(i),
            rho_after,
            within_bounds: (lower..=upper).contains(&rho_after),
        });
    }
    let bounds_ok = entries.iter().all(|e| e.within_bounds);
    Ok(RemovalProfile {
        rho_before,
        lower,
        upper,
        entries,
        bounds_ok,
    })
}

/// Whether `(a, b)` is a realizable pair `ρ_e^o(G - e) = a`, `ρ_e^o(G) = b`.
pub fn realizable(a: usize, b: usize) -> bool {
    (b >= 3 && b - 1 <= a && a <= 2 * b - 2) || (b == 2 && (1..=3).contains(&a))
}

/// A connected graph `G` and edge `e` with `ρ_e^o(G) = b` and
/// `ρ_e^o(G - e) = a`.
///
/// For `b ≥ 3` the center is vertex 0 and `v_i` is vertex `i`; `a = b - 1`
/// uses the star `K_{1,b}`. For `b = 2` the base is `K_4` on `0..4` with a
/// pendant vertex 4 at `u = 0`.
pub fn build_removal_realization(a: usize, b: usize) -> Result<(Graph, Edge)> {
    if !realizable(a, b) {
        return Err(Error::OutOfRange { a, b });
    }
    if b == 2 {
        let mut edges: Vec<Edge> = Vec::new();
        for x in 0..4 {
            for y in x + 1..4 {
                edges.push(Edge::new(x, y));
            }
        }
        edges.push(Edge::new(0, 4));
        let e = match a {
            1 => Edge::new(0, 4),
            2 => Edge::new(0, 1),
            _ => Edge::new(1, 2),
        };
        return Ok((Graph::new(5, edges)?, e));
    }

    let mut edges: Vec<Edge> = Vec::new();
    if a == b - 1 {
        // K_{1,b}; the path-and-clique graph keeps an EOP set of size b
        // after deleting v v_b, so it does not realize this pair
        edges.extend((1..=b).map(|i| Edge::new(0, i)));
        return Ok((Graph::new(b + 1, edges)?, Edge::new(0, b)));
    }

    edges.extend((1..=b + 1).map(|i| Edge::new(0, i)));
    edges.push(Edge::new(1, 2));
    let mut n = b + 2;
    if a == b {
        return Ok((Graph::new(n, edges)?, Edge::new(0, 1)));
    }
    for (anchor, count) in [(1, a / 2), (2, a.div_ceil(2))] {
        for _ in 0..count {
            edges.push(Edge::new(anchor, n));
            n += 1;
        }
    }
    Ok((Graph::new(n, edges)?, Edge::new(1, 2)))
}

/// The first disjoint edge pair with no common edge that breaks condition
/// (iii), and the vertex that sees fewer than two of its endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairViolation {
    pub first: Edge,
    pub second: Edge,
    pub vertex: usize,
}

/// Compares `ρ_e^o` with the structural descriptions of `ρ_e^o = 1`
/// (complete graphs) and `ρ_e^o = 2` (conditions (i) to (iii)).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallRhoReport {
    pub rho: usize,
    pub is_complete: bool,
    pub diameter: Diameter,
    pub diameter_ok: bool,
    pub claw_free: bool,
    pub claw: Option<[usize; 4]>,
    pub pair_condition: bool,
    pub pair_violation: Option<PairViolation>,
    pub rho1_predicted: bool,
    pub rho2_predicted: bool,
    pub rho1_agrees: bool,
    pub rho2_agrees: bool,
    pub agrees: bool,
}

pub fn check_rho_small_characterizations(g: &Graph, budget: Budget) -> Result<SmallRhoReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    let rho = eop_number_exact_with(g, budget)?.value;
    let is_complete = g.is_complete();
    let diameter = diameter(g);
    let diameter_ok = matches!(diameter, Diameter::Finite(d) if (2..=4).contains(&d));
    let claw = (0..g.n()).find_map(|x| find_claw_at(g, x).map(|[p, q, r]| [x, p, q, r]));
    let pair_violation = find_pair_violation(g);

    let rho1_predicted = is_complete && g.n() >= 2;
    let rho2_predicted = diameter_ok && claw.is_none() && pair_violation.is_none();
    let rho1_agrees = (rho == 1) == rho1_predicted;
    let rho2_agrees = (rho == 2) == rho2_predicted;
    Ok(SmallRhoReport {
        rho,
        is_complete,
        diameter,
        diameter_ok,
        claw_free: claw.is_none(),
        claw,
        pair_condition: pair_violation.is_none(),
        pair_violation,
        rho1_predicted,
        rho2_predicted,
        rho1_agrees,
        rho2_agrees,
        agrees: rho1_agrees && rho2_agrees,
    })
}

// "Nonadjacent" edges are read as vertex-disjoint ones.
fn find_pair_violation(g: &Graph) -> Option<PairViolation> {
    let edges = g.edges();
    for (i, e1) in edges.iter().enumerate() {
        for e2 in &edges[i + 1..] {
            if e1.shares_vertex(e2) {
                continue;
            }
            let ends = [e1.u, e1.v, e2.u, e2.v];
            let joined = [e1.u, e1.v]
                .iter()
                .any(|&x| g.has_edge(x, e2.u) || g.has_edge(x, e2.v));
            if joined {
                continue;
            }
            let lonely = (0..g.n())
                .filter(|x| !ends.contains(x))
                .find(|&x| ends.iter().filter(|&&y| g.has_edge(x, y)).count() < 2);
            if let Some(vertex) = lonely {
                return Some(PairViolation {
                    first: *e1,
                    second: *e2,
                    vertex,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::eop_number_exact;
    use crate::generators::{complete, complete_bipartite, complete_minus_edge, cycle, path, star};

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn delta_bound_examples() {
        let s = delta_bound_check(&star(5), budget()).unwrap();
        assert!(s.is_tight && s.rho == 5);
        let c4 = delta_bound_check(&cycle(4), budget()).unwrap();
        assert_eq!((c4.rho, c4.m, c4.delta, c4.is_tight), (2, 4, 2, true));
        let k4 = delta_bound_check(&complete(4), budget()).unwrap();
        assert!(k4.bound_holds && !k4.is_tight);
        assert_eq!(
            delta_bound_check(&Graph::empty(3), budget()),
            Err(Error::UndefinedBound)
        );
    }

    #[test]
    fn star_unions() {
        let g = star(3).disjoint_union(&complete(2));
        assert!(is_disjoint_union_of_stars(&g));
        assert!(!is_disjoint_union_of_stars(&path(4)));
        assert!(!is_disjoint_union_of_stars(&cycle(4)));
    }

    #[test]
    fn recognizes_family_members() {
        let k23 = complete_bipartite(2, 3);
        let w = recognize_family_f(&k23).unwrap();
        assert_eq!(w.k, 2);
        assert_eq!(w.b_set, vec![2, 3, 4]);
        assert_eq!((w.a_set.len(), w.c_set.len()), (1, 1));
        assert!(w.validate(&k23));

        let c4 = cycle(4);
        assert!(recognize_family_f(&c4).unwrap().validate(&c4));
        assert_eq!(recognize_family_f(&star(3)), None);
        assert_eq!(recognize_family_f(&cycle(6)), None);
        assert_eq!(recognize_family_f(&cycle(5)), None);
    }

    #[test]
    fn disconnected_members() {
        let g = cycle(4).disjoint_union(&complete_bipartite(2, 4));
        let w = recognize_family_f(&g).unwrap();
        assert!(w.validate(&g));
        assert!(check_char_theorem(&g, budget()).unwrap());
    }

    #[test]
    fn char_theorem_examples() {
        for g in [cycle(4), complete(4), cycle(5), star(4), path(5)] {
            assert!(check_char_theorem(&g, budget()).unwrap());
        }
    }

    #[test]
    fn family_builder() {
        let (g, w) = build_family_f(FamilyPattern {
            k: 2,
            a: 1,
            b: 4,
            c: 1,
        })
        .unwrap();
        assert_eq!(g.edges().len(), 8);
        assert!(w.validate(&g));
        assert_eq!(eop_number_exact(&g).unwrap().value, 4);

        let (g, w) = build_family_f(FamilyPattern {
            k: 3,
            a: 1,
            b: 3,
            c: 2,
        })
        .unwrap();
        assert!(w.validate(&g));
        assert!(delta_bound_check(&g, budget()).unwrap().is_tight);
        assert!(recognize_family_f(&g).is_some());

        let tiny = build_family_f(FamilyPattern {
            k: 2,
            a: 1,
            b: 1,
            c: 1,
        });
        assert!(matches!(tiny, Err(Error::InfeasiblePattern(s)) if s.contains("A vertex")));
        let sparse_c = build_family_f(FamilyPattern {
            k: 3,
            a: 1,
            b: 3,
            c: 3,
        });
        assert!(matches!(sparse_c, Err(Error::InfeasiblePattern(s)) if s.contains("C vertex")));
        assert!(build_family_f(FamilyPattern {
            k: 1,
            a: 1,
            b: 3,
            c: 3
        })
        .is_err());
        assert!(build_family_f(FamilyPattern {
            k: 4,
            a: 1,
            b: 9,
            c: 2
        })
        .is_err());
    }

    #[test]
    fn removal_examples() {
        let k5 = edge_removal_profile(&complete(5), budget()).unwrap();
        assert_eq!(k5.rho_before, 1);
        assert!(k5.entries.iter().all(|e| e.rho_after == 2) && k5.bounds_ok);

        let s = edge_removal_profile(&star(4), budget()).unwrap();
        assert!(s.entries.iter().all(|e| e.rho_after == 3) && s.bounds_ok);

        let p6 = eop_number_exact(&path(6)).unwrap().value;
        let c6 = edge_removal_profile(&cycle(6), budget()).unwrap();
        assert!(c6.entries.iter().all(|e| e.rho_after == p6) && c6.bounds_ok);

        assert_eq!(
            edge_removal_profile(&Graph::empty(2), budget()),
            Err(Error::NoEdges)
        );
    }

    #[test]
    fn realizations() {
        for b in 2..=5 {
            for a in 0..=2 * b {
                let Ok((g, e)) = build_removal_realization(a, b) else {
                    assert!(!realizable(a, b));
                    continue;
                };
                assert!(g.is_connected());
                let i = g.require_edge(e).unwrap();
                assert_eq!(
                    eop_number_exact(&g).unwrap().value,
                    b,
                    "rho(G) for ({a}, {b})"
                );
                let after = eop_number_exact(&g.without_edge(i)).unwrap().value;
                assert_eq!(after, a, "rho(G - e) for ({a}, {b})");
            }
        }
        assert_eq!(
            build_removal_realization(7, 4),
            Err(Error::OutOfRange { a: 7, b: 4 })
        );
    }

    #[test]
    fn small_rho_examples() {
        let r = check_rho_small_characterizations(&complete(6), budget()).unwrap();
        assert!(r.rho == 1 && r.agrees);
        let r = check_rho_small_characterizations(&complete_minus_edge(6), budget()).unwrap();
        assert!(r.rho == 2 && r.agrees);
        let r = check_rho_small_characterizations(&path(4), budget()).unwrap();
        assert!(r.rho == 2 && r.diameter_ok && r.claw_free && r.pair_condition && r.agrees);
        let r = check_rho_small_characterizations(&star(3), budget()).unwrap();
        assert!(r.rho == 3 && !r.claw_free && r.agrees);
        assert_eq!(
            check_rho_small_characterizations(&Graph::empty(2), budget()),
            Err(Error::Disconnected)
        );
    }
}
