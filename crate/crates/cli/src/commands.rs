use std::fs;
use std::path::Path;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use eop_core::bounds::{
    build_family_f, build_removal_realization, char_report, check_rho_small_characterizations,
    edge_removal_profile, recognize_family_f, FamilyFWitness, FamilyPattern,
};
use eop_core::exact::{eop_number_exact_with, max_independent_set_with, Budget};
use eop_core::format::{parse_graph, parse_pairs, write_graph, write_name_map};
use eop_core::gadgets::{build, verify_reduction, GadgetKind};
use eop_core::generators::random_tree;
use eop_core::packing::{find_conflict, is_eop_set};
use eop_core::structure::Diameter;
use eop_core::tree::solve_tree;
use eop_core::{Edge, EopSet, Graph};

use crate::{CliError, Method, Outcome};

type CmdResult = Result<Outcome, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?)
        .map_err(|e| CliError::new("parse", format!("{}: {e}", path.display())))
}

fn stats(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "m": g.m(),
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
    })
}

fn pair(e: Edge) -> [usize; 2] {
    [e.u + 1, e.v + 1]
}

fn pairs(g: &Graph, set: &EopSet) -> Vec<[usize; 2]> {
    set.to_edges(g).into_iter().map(pair).collect()
}

fn one_based(xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|x| x + 1).collect()
}

fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|&e| pair(e)).collect();
    json!({"n": g.n(), "m": g.m(), "edges": edges})
}

fn diameter_json(d: Diameter) -> Value {
    match d {
        Diameter::Finite(x) => json!(x),
        Diameter::Infinite => json!("infinite"),
    }
}

fn family_json(w: &FamilyFWitness) -> Value {
    json!({
        "k": w.k,
        "a": one_based(&w.a_set),
        "b": one_based(&w.b_set),
        "c": one_based(&w.c_set),
    })
}

pub fn solve(file: &Path, method: Method, budget: Budget) -> CmdResult {
    let g = load(file)?;
    let use_tree = match method {
        Method::Tree => true,
        Method::Exact => false,
        Method::Auto => g.is_tree(),
    };
    let start = Instant::now();
    let (value, witness, nodes) = if use_tree {
        let sol = solve_tree(&g, 0)?;
        (sol.value(), sol.witness(), None)
    } else {
        let r = eop_number_exact_with(&g, budget)?;
        (r.value, r.witness, Some(r.nodes_explored))
    };
    let elapsed = start.elapsed();
    let valid = is_eop_set(&g, &witness)? && witness.len() == value;
    let used = if use_tree { "tree" } else { "exact" };
    Ok(Outcome {
        input: Some(stats(&g)),
        summary: format!(
            "rho_eo = {value} ({used}, {:.3} ms)",
            elapsed.as_secs_f64() * 1e3
        ),
        result: json!({
            "method": used,
            "rho_eo": value,
            "witness": pairs(&g, &witness),
            "witness_valid": valid,
            "nodes_explored": nodes,
            "solve_ms": elapsed.as_secs_f64() * 1e3,
        }),
        ok: valid,
    })
}

pub fn verify(file: &Path, set: &Path) -> CmdResult {
    let g = load(file)?;
    let raw = parse_pairs(&read(set)?)
        .map_err(|e| CliError::new("parse", format!("{}: {e}", set.display())))?;
    let claimed = EopSet::from_edges(&g, raw.iter().map(|&p| Edge::from(p)))?;
    let conflict = find_conflict(&g, &claimed)?;
    let valid = conflict.is_none();
    let conflict_json = conflict.map(|c| {
        json!({
            "first": pair(g.edge(c.first)),
            "second": pair(g.edge(c.second)),
            "common": pair(g.edge(c.common)),
        })
    });
    Ok(Outcome {
        input: Some(stats(&g)),
        summary: if valid {
            format!("valid EOP set of size {}", claimed.len())
        } else {
            "not an EOP set".to_string()
        },
        result: json!({
            "size": claimed.len(),
            "valid": valid,
            "conflict": conflict_json,
        }),
        ok: valid,
    })
}

pub fn alpha(file: &Path, budget: Budget) -> CmdResult {
    let g = load(file)?;
    let r = max_independent_set_with(&g, budget)?;
    Ok(Outcome {
        input: Some(stats(&g)),
        summary: format!("alpha = {}", r.value),
        result: json!({
            "alpha": r.value,
            "witness": one_based(&r.witness),
            "nodes_explored": r.nodes_explored,
        }),
        ok: true,
    })
}

pub fn gadget(
    file: &Path,
    kind: GadgetKind,
    out: Option<&Path>,
    verify: bool,
    budget: Budget,
) -> CmdResult {
    let g = load(file)?;
    let h = build(&g, kind);
    let structure = h.check_structure(&g);
    let mut files = Value::Null;
    if let Some(out) = out {
        let names_path = format!("{}.names", out.display());
        write(out, &write_graph(&h.graph))?;
        write(Path::new(&names_path), &write_name_map(&h.names))?;
        files = json!({"graph": out, "names": names_path});
    }
    let report = if verify {
        Some(verify_reduction(&g, kind, budget)?)
    } else {
        None
    };
    let ok = structure.ok() && report.as_ref().is_none_or(|r| r.passed);
    let verification = report.as_ref().map(|r| {
        json!({
            "mode": r.mode,
            "alpha": r.alpha,
            "alpha_witness": one_based(&r.alpha_witness),
            "predicted": r.predicted,
            "exact": r.exact,
            "identity_holds": r.identity_holds,
            "witness_size": r.witness_size,
            "witness_valid": r.witness_valid,
            "passed": r.passed,
            "nodes_explored": r.nodes_explored,
        })
    });
    let summary = match &report {
        Some(r) => format!(
            "{:?} gadget: {} vertices, {} edges; predicted {}, exact {}",
            kind,
            h.graph.n(),
            h.graph.m(),
            r.predicted,
            r.exact.map_or("skipped".to_string(), |x| x.to_string())
        ),
        None => format!(
            "{:?} gadget: {} vertices, {} edges",
            kind,
            h.graph.n(),
            h.graph.m()
        ),
    };
    Ok(Outcome {
        input: Some(stats(&g)),
        summary,
        result: json!({
            "kind": kind,
            "gadget": if out.is_some() { json!({"n": h.graph.n(), "m": h.graph.m()}) } else { graph_json(&h.graph) },
            "predicted_offset": h.predicted_offset,
            "structure": structure,
            "files": files,
            "verification": verification,
        }),
        ok,
    })
}

pub fn bounds(file: &Path, budget: Budget) -> CmdResult {
    let g = load(file)?;
    let r = char_report(&g, budget)?;
    Ok(Outcome {
        input: Some(stats(&g)),
        summary: format!(
            "rho_eo = {}, m / delta = {} / {}, tight = {}, consistent = {}",
            r.bound.rho, r.bound.m, r.bound.delta, r.bound.is_tight, r.consistent
        ),
        result: json!({
            "rho_eo": r.bound.rho,
            "delta": r.bound.delta,
            "m": r.bound.m,
            "bound_holds": r.bound.bound_holds,
            "is_tight": r.bound.is_tight,
            "star_forest": r.star_forest,
            "family_f": r.family_f.as_ref().map(family_json),
            "consistent": r.consistent,
        }),
        ok: r.bound.bound_holds && r.consistent,
    })
}

pub fn removal(file: &Path, budget: Budget) -> CmdResult {
    let g = load(file)?;
    let p = edge_removal_profile(&g, budget)?;
    let entries: Vec<Value> = p
        .entries
        .iter()
        .map(|e| json!({"edge": pair(e.edge), "rho_after": e.rho_after, "within_bounds": e.within_bounds}))
        .collect();
    Ok(Outcome {
        input: Some(stats(&g)),
        summary: format!(
            "rho_eo = {}, allowed after removal {}..={}, bounds ok = {}",
            p.rho_before, p.lower, p.upper, p.bounds_ok
        ),
        result: json!({
            "rho_before": p.rho_before,
            "lower": p.lower,
            "upper": p.upper,
            "entries": entries,
            "bounds_ok": p.bounds_ok,
        }),
        ok: p.bounds_ok,
    })
}

pub fn realize(a: usize, b: usize, out: Option<&Path>, budget: Budget) -> CmdResult {
    let (g, e) = build_removal_realization(a, b)?;
    let index = g.require_edge(e)?;
    let rho_g = eop_number_exact_with(&g, budget)?.value;
    let rho_minus = eop_number_exact_with(&g.without_edge(index), budget)?.value;
    let verified = rho_g == b && rho_minus == a;
    if let Some(out) = out {
        write(out, &write_graph(&g))?;
    }
    Ok(Outcome {
        input: None,
        summary: format!("rho(G) = {rho_g}, rho(G - e) = {rho_minus}, verified = {verified}"),
        result: json!({
            "a": a,
            "b": b,
            "graph": graph_json(&g),
            "edge": pair(e),
            "rho_g": rho_g,
            "rho_g_minus_e": rho_minus,
            "verified": verified,
        }),
        ok: verified,
    })
}

pub fn family_f(k: usize, sizes: &[usize], out: Option<&Path>, budget: Budget) -> CmdResult {
    let [a, b, c] = sizes else {
        return Err(CliError::new("usage", "--sizes takes exactly three values"));
    };
    let (g, witness) = build_family_f(FamilyPattern {
        k,
        a: *a,
        b: *b,
        c: *c,
    })?;
    let r = char_report(&g, budget)?;
    let recognized = recognize_family_f(&g).is_some();
    let valid = witness.validate(&g);
    if let Some(out) = out {
        write(out, &write_graph(&g))?;
    }
    let ok = valid && recognized && r.bound.is_tight;
    Ok(Outcome {
        input: None,
        summary: format!(
            "rho_eo = {}, m / delta = {} / {}, tight = {}, recognized = {recognized}",
            r.bound.rho, r.bound.m, r.bound.delta, r.bound.is_tight
        ),
        result: json!({
            "graph": graph_json(&g),
            "witness": family_json(&witness),
            "witness_valid": valid,
            "rho_eo": r.bound.rho,
            "m": r.bound.m,
            "delta": r.bound.delta,
            "is_tight": r.bound.is_tight,
            "recognized": recognized,
        }),
        ok,
    })
}

pub fn charsmall(file: &Path, budget: Budget) -> CmdResult {
    let g = load(file)?;
    let r = check_rho_small_characterizations(&g, budget)?;
    let violation = r
        .pair_violation
        .map(|v| json!({"first": pair(v.first), "second": pair(v.second), "vertex": v.vertex + 1}));
    Ok(Outcome {
        input: Some(stats(&g)),
        summary: format!("rho_eo = {}, characterizations agree = {}", r.rho, r.agrees),
        result: json!({
            "rho_eo": r.rho,
            "is_complete": r.is_complete,
            "diameter": diameter_json(r.diameter),
            "diameter_ok": r.diameter_ok,
            "claw_free": r.claw_free,
            "claw": r.claw.map(|c| one_based(&c)),
            "pair_condition": r.pair_condition,
            "pair_violation": violation,
            "rho1_predicted": r.rho1_predicted,
            "rho2_predicted": r.rho2_predicted,
            "rho1_agrees": r.rho1_agrees,
            "rho2_agrees": r.rho2_agrees,
            "agrees": r.agrees,
        }),
        ok: r.agrees,
    })
}

pub fn bench_tree(sizes: &[usize], seed: u64, repeats: usize) -> CmdResult {
    let repeats = repeats.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let mut last: Option<(usize, f64)> = None;
    for &n in sizes {
        if n == 0 {
            return Err(CliError::new(
                "invalid_input",
                "tree sizes must be positive",
            ));
        }
        let t = random_tree(n, &mut rng);
        let mut best = f64::INFINITY;
        let mut value = 0;
        for _ in 0..repeats {
            let start = Instant::now();
            value = solve_tree(&t, 0)?.value();
            best = best.min(start.elapsed().as_secs_f64());
        }
        let ratio = last.map(|(_, prev)| best / prev);
        rows.push(json!({"n": n, "rho_eo": value, "seconds": best, "ratio_to_previous": ratio}));
        last = Some((n, best));
    }
    let summary = rows
        .iter()
        .map(|r| format!("n={} {:.4}s", r["n"], r["seconds"].as_f64().unwrap_or(0.0)))
        .collect::<Vec<_>>()
        .join(", ");
    Ok(Outcome {
        input: None,
        summary,
        result: json!({"seed": seed, "repeats": repeats, "rows": rows}),
        ok: true,
    })
}
