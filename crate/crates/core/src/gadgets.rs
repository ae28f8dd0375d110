//! Reductions from independent set to EOP.
//!
//! Each builder turns a source graph `G` (order `n`, size `m`) into a gadget
//! whose EOP number is `offset + α(G)`:
//!
//! | kind                | gadget                                         | offset |
//! |---------------------|------------------------------------------------|--------|
//! | `Universal`         | `G` + vertex `v` joined to `V(G)` and `m+n` new pendant vertices | `m + n` |
//! | `EulerianBipartite` | `v_i v_i'` per vertex, six 5-edge paths per edge | `12m` |
//! | `PlanarDeg4`        | path `x_i z_i y_i` per vertex with `z_i v_i`    | `2n`   |
//!
//! Witness builders map an independent set `I` of `G` to an EOP set of the
//! gadget of size `offset + |I|`, and [`verify_reduction`] checks the identity
//! against the exact solver when the budget allows.
//!
//! Vertex layout: the source vertices keep ids `0..n`; gadget vertices follow
//! in the order documented on each builder. Names are 1-based and contain no
//! whitespace.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{eop_number_exact_with, max_independent_set_with, Budget};
use crate::graph::{Edge, Graph};
use crate::packing::{is_eop_set, EopSet};
use crate::structure::{bipartition, is_eulerian};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GadgetKind {
    Universal,
    EulerianBipartite,
    PlanarDeg4,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetOutput {
    pub graph: Graph,
    pub kind: GadgetKind,
    pub source_n: usize,
    pub source_m: usize,
    /// Name of every gadget vertex, indexed by vertex id.
    pub names: Vec<String>,
    pub predicted_offset: usize,
}

impl GadgetOutput {
    pub fn id_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    /// Gadget EOP number predicted from α of the source graph.
    pub fn predicted(&self, alpha: usize) -> usize {
        self.predicted_offset + alpha
    }

    /// The size and shape invariants of this gadget kind.
    pub fn check_structure(&self, source: &Graph) -> StructureCheck {
        let (n, m) = (self.source_n, self.source_m);
        let g = &self.graph;
        match self.kind {
            GadgetKind::Universal => {
                let v = n;
                StructureCheck {
                    counts_ok: g.n() == 2 * n + m + 1 && g.m() == 2 * (m + n),
                    shape_ok: g.degree(v) == g.n() - 1,
                    eulerian: None,
                }
            }
            GadgetKind::EulerianBipartite => {
                let cubic_connected = source.n() > 0
                    && source.is_connected()
                    && (0..source.n()).all(|x| source.degree(x) == 3);
                StructureCheck {
                    counts_ok: g.n() == 2 * n + 24 * m && g.m() == n + 30 * m,
                    shape_ok: bipartition(g).is_some(),
                    eulerian: cubic_connected.then(|| is_eulerian(g)),
                }
            }
            GadgetKind::PlanarDeg4 => StructureCheck {
                counts_ok: g.n() == 4 * n && g.m() == m + 3 * n,
                shape_ok: n == 0 || g.max_degree() == planar_max_degree(source),
                eulerian: None,
            },
        }
    }
}

/// Δ of the planar gadget: `Δ(G) + 1`, except that each `z_i` has degree 3
/// regardless, which dominates when `Δ(G) <= 1`.
pub fn planar_max_degree(source: &Graph) -> usize {
    (source.max_degree() + 1).max(3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureCheck {
    /// Vertex and edge counts match the construction.
    pub counts_ok: bool,
    /// Universal: `v` is universal. Eulerian: bipartite. Planar: the degree rule.
    pub shape_ok: bool,
    /// Eulerian gadget of a connected cubic source: whether it is Eulerian.
    pub eulerian: Option<bool>,
}

impl StructureCheck {
    pub fn ok(&self) -> bool {
        self.counts_ok && self.shape_ok && self.eulerian != Some(false)
    }
}

pub fn build(g: &Graph, kind: GadgetKind) -> GadgetOutput {
    match kind {
        GadgetKind::Universal => build_universal_gadget(g),
        GadgetKind::EulerianBipartite => build_eulerian_gadget(g),
        GadgetKind::PlanarDeg4 => build_planar_gadget(g),
    }
}

pub fn build_witness(g: &Graph, kind: GadgetKind, independent: &[usize]) -> Result<EopSet> {
    match kind {
        GadgetKind::Universal => build_universal_witness(g, independent),
        GadgetKind::EulerianBipartite => build_eulerian_witness(g, independent),
        GadgetKind::PlanarDeg4 => build_planar_witness(g, independent),
    }
}

fn source_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v[{i}]")).collect()
}

/// Layout: source `0..n`, universal vertex `v` = `n`, then `u_1..u_{m+n}`.
pub fn build_universal_gadget(g: &Graph) -> GadgetOutput {
    let (n, m) = (g.n(), g.m());
    let v = n;
    let total = 2 * n + m + 1;
    let mut edges: Vec<Edge> = g.edges().to_vec();
    edges.extend((0..total).filter(|&w| w != v).map(|w| Edge::new(v, w)));
    let mut names = source_names(n);
    names.push("v".to_string());
    names.extend((1..=m + n).map(|j| format!("u[{j}]")));
    GadgetOutput {
        graph: Graph::new(total, edges).expect("universal gadget is simple"),
        kind: GadgetKind::Universal,
        source_n: n,
        source_m: m,
        names,
        predicted_offset: m + n,
    }
}

/// `{v w : w ∈ I ∪ {u_1..u_{m+n}}}`.
pub fn build_universal_witness(g: &Graph, independent: &[usize]) -> Result<EopSet> {
    g.check_independent(independent)?;
    let gadget = build_universal_gadget(g);
    let (n, m) = (g.n(), g.m());
    let v = n;
    let ends = independent.iter().copied().chain(n + 1..n + 1 + m + n);
    EopSet::from_edges(&gadget.graph, ends.map(|w| Edge::new(v, w)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mark {
    Plain,
    Tilde,
    Prime,
    DoublePrime,
}

const LETTERS: [char; 3] = ['x', 'y', 'z'];

/// Ids in the Eulerian gadget. For source edge `k = {p, q}` (`p < q`) and
/// letter `l`, the eight path vertices sit at `2n + 24k + 8l + slot`:
///
/// ```text
/// slot: 0       1        2          3         4         5          6        7
///       l[p,q]  l~[p,q]  l''[q,p]   l'[q,p]   l'[p,q]   l''[p,q]   l~[q,p]  l[q,p]
/// ```
///
/// so the two paths are `v_p, slots 0..=3, v_q'` and `v_p', slots 4..=7, v_q`.
struct EulerLayout<'a> {
    g: &'a Graph,
}

impl EulerLayout<'_> {
    fn v(&self, i: usize) -> usize {
        i
    }

    fn v_prime(&self, i: usize) -> usize {
        self.g.n() + i
    }

    /// Vertex `letter^mark[a, b]` for the source edge `{a, b}`.
    fn at(&self, letter: usize, mark: Mark, a: usize, b: usize) -> usize {
        let k = self.g.edge_index(a, b).expect("source edge");
        let base = 2 * self.g.n() + 24 * k + 8 * letter;
        let forward = a < b;
        let slot = match (mark, forward) {
            (Mark::Plain, true) => 0,
            (Mark::Tilde, true) => 1,
            (Mark::DoublePrime, false) => 2,
            (Mark::Prime, false) => 3,
            (Mark::Prime, true) => 4,
            (Mark::DoublePrime, true) => 5,
            (Mark::Tilde, false) => 6,
            (Mark::Plain, false) => 7,
        };
        base + slot
    }
}

/// Layout: `v_i` = `i`, `v_i'` = `n + i`, then 24 path vertices per source
/// edge in edge-list order (see the slot table on the layout helper).
pub fn build_eulerian_gadget(g: &Graph) -> GadgetOutput {
    let (n, m) = (g.n(), g.m());
    let lay = EulerLayout { g };
    let total = 2 * n + 24 * m;
    let mut names = source_names(n);
    names.extend((1..=n).map(|i| format!("v'[{i}]")));
    names.resize(total, String::new());

    let mut edges: Vec<Edge> = (0..n)
        .map(|i| Edge::new(lay.v(i), lay.v_prime(i)))
        .collect();
    for e in g.edges() {
        let (p, q) = (e.u, e.v);
        for (l, letter) in LETTERS.iter().enumerate() {
            let forward = [
                lay.v(p),
                lay.at(l, Mark::Plain, p, q),
                lay.at(l, Mark::Tilde, p, q),
                lay.at(l, Mark::DoublePrime, q, p),
                lay.at(l, Mark::Prime, q, p),
                lay.v_prime(q),
            ];
            let backward = [
                lay.v_prime(p),
                lay.at(l, Mark::Prime, p, q),
                lay.at(l, Mark::DoublePrime, p, q),
                lay.at(l, Mark::Tilde, q, p),
                lay.at(l, Mark::Plain, q, p),
                lay.v(q),
            ];
            for walk in [forward, backward] {
                edges.extend(walk.windows(2).map(|w| Edge::new(w[0], w[1])));
            }
            for (a, b) in [(p, q), (q, p)] {
                let (a1, b1) = (a + 1, b + 1);
                names[lay.at(l, Mark::Plain, a, b)] = format!("{letter}[{a1},{b1}]");
                names[lay.at(l, Mark::Tilde, a, b)] = format!("{letter}~[{a1},{b1}]");
                names[lay.at(l, Mark::Prime, a, b)] = format!("{letter}'[{a1},{b1}]");
                names[lay.at(l, Mark::DoublePrime, a, b)] = format!("{letter}''[{a1},{b1}]");
            }
        }
    }
    GadgetOutput {
        graph: Graph::new(total, edges).expect("eulerian gadget is simple"),
        kind: GadgetKind::EulerianBipartite,
        source_n: n,
        source_m: m,
        names,
        predicted_offset: 12 * m,
    }
}

/// Union over source edges `v_i v_j` of the 13-edge set (when `v_j ∈ I`) or
/// the 12-edge set (when neither endpoint is in `I`), plus `v_j v_j'` for
/// every `v_j ∈ I`, isolated vertices included. Size `12m + |I|`.
pub fn build_eulerian_witness(g: &Graph, independent: &[usize]) -> Result<EopSet> {
    g.check_independent(independent)?;
    let gadget = build_eulerian_gadget(g);
    let lay = EulerLayout { g };
    let mut in_set = vec![false; g.n()];
    for &x in independent {
        in_set[x] = true;
    }
    let mut picked: Vec<Edge> = independent
        .iter()
        .map(|&j| Edge::new(lay.v(j), lay.v_prime(j)))
        .collect();
    for e in g.edges() {
        // j is the endpoint in I when there is one (never both: I is independent)
        let (i, j) = if in_set[e.u] { (e.v, e.u) } else { (e.u, e.v) };
        for l in 0..LETTERS.len() {
            let plain_ij = lay.at(l, Mark::Plain, i, j);
            let tilde_ij = lay.at(l, Mark::Tilde, i, j);
            let dprime_ji = lay.at(l, Mark::DoublePrime, j, i);
            let prime_ij = lay.at(l, Mark::Prime, i, j);
            let dprime_ij = lay.at(l, Mark::DoublePrime, i, j);
            picked.push(Edge::new(plain_ij, tilde_ij));
            picked.push(Edge::new(tilde_ij, dprime_ji));
            picked.push(Edge::new(prime_ij, dprime_ij));
            if in_set[j] {
                picked.push(Edge::new(lay.v(j), lay.at(l, Mark::Plain, j, i)));
            } else {
                picked.push(Edge::new(dprime_ij, lay.at(l, Mark::Tilde, j, i)));
            }
        }
    }
    EopSet::from_edges(&gadget.graph, picked)
}

/// Layout: source `0..n`, then `x_i, z_i, y_i` at `n + 3i`, `n + 3i + 1`,
/// `n + 3i + 2`.
pub fn build_planar_gadget(g: &Graph) -> GadgetOutput {
    let (n, m) = (g.n(), g.m());
    let mut edges: Vec<Edge> = g.edges().to_vec();
    let mut names = source_names(n);
    for i in 0..n {
        let (x, z, y) = planar_ids(n, i);
        edges.push(Edge::new(x, z));
        edges.push(Edge::new(z, y));
        edges.push(Edge::new(z, i));
        let k = i + 1;
        names.extend([format!("x[{k}]"), format!("z[{k}]"), format!("y[{k}]")]);
    }
    GadgetOutput {
        graph: Graph::new(4 * n, edges).expect("planar gadget is simple"),
        kind: GadgetKind::PlanarDeg4,
        source_n: n,
        source_m: m,
        names,
        predicted_offset: 2 * n,
    }
}

fn planar_ids(n: usize, i: usize) -> (usize, usize, usize) {
    (n + 3 * i, n + 3 * i + 1, n + 3 * i + 2)
}

/// `E_i = {z_i x_i, z_i y_i, z_i v_i}` for `v_i ∈ I`, `{x_i z_i, y_i z_i}` otherwise.
pub fn build_planar_witness(g: &Graph, independent: &[usize]) -> Result<EopSet> {
    g.check_independent(independent)?;
    let gadget = build_planar_gadget(g);
    let n = g.n();
    let mut in_set = vec![false; n];
    for &x in independent {
        in_set[x] = true;
    }
    let mut picked = Vec::new();
    for (i, &chosen) in in_set.iter().enumerate() {
        let (x, z, y) = planar_ids(n, i);
        picked.push(Edge::new(x, z));
        picked.push(Edge::new(y, z));
        if chosen {
            picked.push(Edge::new(z, i));
        }
    }
    EopSet::from_edges(&gadget.graph, picked)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyMode {
    Exact,
    WitnessOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub kind: GadgetKind,
    pub source_n: usize,
    pub source_m: usize,
    pub gadget_n: usize,
    pub gadget_m: usize,
    pub alpha: usize,
    pub alpha_witness: Vec<usize>,
    pub predicted: usize,
    pub mode: VerifyMode,
    pub exact: Option<usize>,
    pub witness_size: usize,
    pub witness_valid: bool,
    pub structure: StructureCheck,
    /// `None` in witness-only mode.
    pub identity_holds: Option<bool>,
    pub passed: bool,
    pub nodes_explored: u64,
}

/// Builds the gadget and the witness from a maximum independent set, and
/// compares the gadget's exact EOP number with `offset + α(G)`. When the
/// exact solve exceeds `budget`, the report falls back to witness-only mode
/// (a lower-bound check) and says so.
pub fn verify_reduction(g: &Graph, kind: GadgetKind, budget: Budget) -> Result<ReductionReport> {
    let alpha = max_independent_set_with(g, budget)?;
    let gadget = build(g, kind);
    let witness = build_witness(g, kind, &alpha.witness)?;
    let witness_valid = is_eop_set(&gadget.graph, &witness)?;
    let predicted = gadget.predicted(alpha.value);
    let structure = gadget.check_structure(g);

    let (mode, exact, nodes) = match eop_number_exact_with(&gadget.graph, budget) {
        Ok(r) => (VerifyMode::Exact, Some(r.value), r.nodes_explored),
        Err(Error::BudgetExceeded { limit }) => (VerifyMode::WitnessOnly, None, limit),
        Err(e) => return Err(e),
    };
    let identity_holds = exact.map(|x| x == predicted);
    let passed = structure.ok()
        && witness_valid
        && witness.len() == predicted
        && identity_holds != Some(false);
    Ok(ReductionReport {
        kind,
        source_n: g.n(),
        source_m: g.m(),
        gadget_n: gadget.graph.n(),
        gadget_m: gadget.graph.m(),
        alpha: alpha.value,
        alpha_witness: alpha.witness,
        predicted,
        mode,
        exact,
        witness_size: witness.len(),
        witness_valid,
        structure,
        identity_holds,
        passed,
        nodes_explored: nodes + alpha.nodes_explored,
    })
}
