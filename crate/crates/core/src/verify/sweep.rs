//! Seeded sweeps that try to falsify lemma-level statements on random
//! instances. Instance `i` of a sweep is drawn from stream `i` of the
//! sweep's seed, so every instance replays on its own; counterexamples are
//! archived, never fatal.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::connectivity::{
    edge_connectivity, essential_edge_connectivity, independence_number, neighborhood_closure, odd_edge_connectivity,
};
use crate::error::{Error, Result};
use crate::gen;
use crate::graph::{Multigraph, VertexId, VertexSet};
use crate::orientation::{
    hakimi_certificate, hakimi_feasible, has_mod3_orientation, is_z3_connected, oracle, orient_with_imbalance,
    z3_orientation,
};
use crate::par;
use crate::reduction::{
    eliminate_even_degrees, find_wheel, is_z3_reduced, split_vertex, w_contract, z3_reduce_full, WContractionSpec,
    WheelParity,
};
use crate::verify::rtable::KNOWN_R;

pub const LEMMAS: [&str; 15] = [
    "order13",
    "essential8",
    "cut-bound",
    "alpha-closure",
    "min-degree",
    "hakimi-oracle",
    "reduction-invariance",
    "w-contraction",
    "w-contraction-connectivity",
    "splitting",
    "even-elimination",
    "cut-parity",
    "witness-revalidation",
    "reversal-symmetry",
    "supergraph-monotonicity",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: u64,
    #[serde(with = "crate::io::json_graph")]
    pub graph: Multigraph,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub lemma: String,
    pub seed: u64,
    pub samples: usize,
    /// Instances on which the statement was actually tested.
    pub applicable: usize,
    /// Instances where no graph meeting the hypotheses was drawn.
    pub vacuous: usize,
    pub violations: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    pub fn pass(&self) -> bool {
        self.violations == 0
    }

    /// Passed with every sample meeting the hypotheses.
    pub fn pass_all_applicable(&self) -> bool {
        self.pass() && self.applicable == self.samples
    }
}

enum Outcome {
    Pass,
    Vacuous,
    Fail(Multigraph, String),
}

fn fail(g: &Multigraph, detail: impl Into<String>) -> Outcome {
    Outcome::Fail(g.clone(), detail.into())
}

type Check = fn(&mut ChaCha8Rng) -> Outcome;

fn check_for(lemma: &str) -> Option<Check> {
    Some(match lemma {
        "order13" => order13,
        "essential8" => essential8,
        "cut-bound" => cut_bound,
        "alpha-closure" => alpha_closure,
        "min-degree" => min_degree,
        "hakimi-oracle" => hakimi_oracle,
        "reduction-invariance" => reduction_invariance,
        "w-contraction" => w_contraction_soundness,
        "w-contraction-connectivity" => w_contraction_connectivity,
        "splitting" => splitting,
        "even-elimination" => even_elimination,
        "cut-parity" => cut_parity,
        "witness-revalidation" => witness_revalidation,
        "reversal-symmetry" => reversal_symmetry,
        "supergraph-monotonicity" => supergraph_monotonicity,
        _ => return None,
    })
}

pub fn lemma_sweep(lemma: &str, samples: usize, seed: u64) -> Result<SweepReport> {
    let check = check_for(lemma).ok_or_else(|| Error::Lookup(format!("lemma {lemma}")))?;
    let outcomes = par::map_indexed(samples, |i| check(&mut gen::instance_rng(seed, i as u64)));
    let mut report = SweepReport {
        lemma: lemma.to_string(),
        seed,
        samples,
        applicable: 0,
        vacuous: 0,
        violations: 0,
        counterexamples: Vec::new(),
    };
    for (i, o) in outcomes.into_iter().enumerate() {
        match o {
            Outcome::Pass => report.applicable += 1,
            Outcome::Vacuous => report.vacuous += 1,
            Outcome::Fail(graph, detail) => {
                report.applicable += 1;
                report.violations += 1;
                report.counterexamples.push(Counterexample { index: i as u64, graph, detail });
            }
        }
    }
    Ok(report)
}

/// Draws until `accept` holds or the attempts run out.
fn draw<F, G>(rng: &mut ChaCha8Rng, attempts: usize, mut make: G, accept: F) -> Option<Multigraph>
where
    G: FnMut(&mut ChaCha8Rng) -> Option<Multigraph>,
    F: Fn(&Multigraph) -> bool,
{
    (0..attempts).find_map(|_| make(rng).filter(|g| accept(g)))
}

fn odd_connectivity_at_least(g: &Multigraph, k: u64) -> bool {
    match odd_edge_connectivity(g) {
        Ok(Some(c)) => c.cut_size >= k,
        Ok(None) => true,
        Err(_) => false,
    }
}

fn odd_connectivity_exactly(g: &Multigraph, k: u64) -> bool {
    matches!(odd_edge_connectivity(g), Ok(Some(c)) if c.cut_size == k)
}

fn floor_graph(rng: &mut ChaCha8Rng, n_lo: usize, n_hi: usize, floor: usize, ceil: usize) -> Option<Multigraph> {
    let n = rng.gen_range(n_lo..=n_hi);
    gen::random_degree_floor_multigraph(rng, n, floor, ceil).ok()
}

fn random_subset(rng: &mut ChaCha8Rng, g: &Multigraph, size: usize) -> VertexSet {
    g.vertices().choose_multiple(rng, size).copied().collect()
}

/// Odd-5-edge-connected graphs of order at most 12 have a mod-3
/// orientation.
fn order13(rng: &mut ChaCha8Rng) -> Outcome {
    let Some(g) = draw(rng, 200, |r| floor_graph(r, 4, 12, 5, 7), |g| odd_connectivity_at_least(g, 5)) else {
        return Outcome::Vacuous;
    };
    if has_mod3_orientation(&g) {
        Outcome::Pass
    } else {
        fail(&g, "odd-5-edge-connected graph of order <= 13 without a mod-3 orientation")
    }
}

/// Reduced graphs of order at most 15 with minimum degree 5 are
/// 5-edge-connected, and every cut with two or more vertices on each side
/// has at least 8 edges.
fn essential8(rng: &mut ChaCha8Rng) -> Outcome {
    let make = |r: &mut ChaCha8Rng| {
        let n = 2 * r.gen_range(5..=7);
        draw(r, 5000, |r| gen::random_regular_multigraph(r, n, 5).ok(), Multigraph::is_simple)
    };
    let Some(g) = draw(rng, 20, make, |g| is_z3_reduced(g).unwrap_or(false)) else {
        return Outcome::Vacuous;
    };
    if edge_connectivity(&g).map(|c| c.cut_size).unwrap_or(0) < 5 {
        return fail(&g, "edge connectivity below 5");
    }
    let d = g.dense();
    let full = (1u64 << d.n) - 1;
    for mask in 1..full {
        let k = mask.count_ones() as usize;
        if k >= 2 && d.n - k >= 2 && d.cut_of_mask(mask) < 8 {
            return fail(&g, format!("cut {:?} has {} edges", d.mask_to_set(mask), d.cut_of_mask(mask)));
        }
    }
    Outcome::Pass
}

/// `|∂(S)| >= δ|S| − 2 r(|S|)` for every `S` with `|S| <= 7` in a reduced
/// graph.
fn cut_bound(rng: &mut ChaCha8Rng) -> Outcome {
    let make = |r: &mut ChaCha8Rng| {
        let n = r.gen_range(5..=12);
        let p = r.gen_range(0.25..0.6);
        let g = gen::random_simple_graph(r, n, p);
        z3_reduce_full(&g).ok().map(|(h, _)| h.compacted())
    };
    let Some(g) = draw(rng, 50, make, |g| g.order() >= 3) else {
        return Outcome::Vacuous;
    };
    let d = g.dense();
    let delta = g.min_degree() as i64;
    let full = (1u64 << d.n) - 1;
    for mask in 1..full {
        let k = mask.count_ones() as usize;
        if k > KNOWN_R.len() {
            continue;
        }
        let bound = delta * k as i64 - 2 * KNOWN_R[k - 1] as i64;
        if (d.cut_of_mask(mask) as i64) < bound {
            return fail(&g, format!("cut {:?} below δ|S| − 2r(|S|) = {bound}", d.mask_to_set(mask)));
        }
    }
    Outcome::Pass
}

/// `α(G − (X ∪ N(X))) <= α(G) − 1` for nonempty `X`.
fn alpha_closure(rng: &mut ChaCha8Rng) -> Outcome {
    let n = rng.gen_range(1..=14);
    let p = rng.gen_range(0.1..0.9);
    let g = gen::random_simple_graph(rng, n, p);
    let size = rng.gen_range(1..=n.min(3));
    let x = random_subset(rng, &g, size);
    let closure = neighborhood_closure(&g, &x).expect("nonempty X");
    let rest: VertexSet = g.vertices().iter().copied().filter(|v| !closure.contains(*v)).collect();
    let a = independence_number(&g).expect("small").0;
    let b = independence_number(&g.induced(&rest)).expect("small").0;
    if b < a {
        Outcome::Pass
    } else {
        fail(&g, format!("X = {x:?}: α drops from {a} only to {b}"))
    }
}

/// Reduced graphs have minimum degree at most 5.
fn min_degree(rng: &mut ChaCha8Rng) -> Outcome {
    let n = rng.gen_range(4..=14);
    let p = rng.gen_range(0.3..0.95);
    let g = gen::random_simple_graph(rng, n, p);
    let Ok((h, _)) = z3_reduce_full(&g) else {
        return Outcome::Vacuous;
    };
    if h.min_degree() <= 5 {
        Outcome::Pass
    } else {
        fail(&g, format!("reduction has minimum degree {}", h.min_degree()))
    }
}

/// Flow-based feasibility, the subset cut condition and brute force agree,
/// and flow certificates violate the cut condition.
fn hakimi_oracle(rng: &mut ChaCha8Rng) -> Outcome {
    let n = rng.gen_range(1..=7);
    let m = rng.gen_range(0..=12);
    let g = gen::random_multigraph(rng, n, m);
    let l = gen::random_admissible_imbalance(rng, &g);
    let flow = hakimi_feasible(&g, &l).expect("admissible");
    let brute = oracle::hakimi_brute_force(&g, &l).expect("few edges");
    let cut = oracle::hakimi_cut_condition(&g, &l).expect("few vertices").is_none();
    if flow != brute || flow != cut {
        return fail(&g, format!("ℓ = {l:?}: flow {flow}, brute force {brute}, cut condition {cut}"));
    }
    if let Some(s) = hakimi_certificate(&g, &l).expect("admissible") {
        let sum: i64 = s.iter().map(|v| l.get(v)).sum();
        let boundary = if s.len() == g.order() { 0 } else { g.boundary_edges(&s).expect("proper").len() as i64 };
        if sum.abs() <= boundary {
            return fail(&g, format!("certificate {s:?} does not violate the cut condition"));
        }
    }
    Outcome::Pass
}

/// Mod-3 orientability is invariant under full Z3-reduction.
fn reduction_invariance(rng: &mut ChaCha8Rng) -> Outcome {
    let n = rng.gen_range(1..=9);
    let m = rng.gen_range(0..=3 * n);
    let g = gen::random_multigraph(rng, n, m);
    let (h, _) = z3_reduce_full(&g).expect("small");
    if has_mod3_orientation(&g) == has_mod3_orientation(&h) {
        Outcome::Pass
    } else {
        fail(&g, "mod-3 verdict differs from its reduction's")
    }
}

fn proper_odd_wheel(g: &Multigraph) -> Option<crate::reduction::WheelWitness> {
    find_wheel(g, WheelParity::Odd).filter(|w| g.order() > w.rim_len() + 1 || g.size() > 2 * w.rim_len())
}

/// A mod-3 orientation of a W-contraction pulls back to the graph.
fn w_contraction_soundness(rng: &mut ChaCha8Rng) -> Outcome {
    let make = |r: &mut ChaCha8Rng| {
        let n = r.gen_range(5..=9);
        let m = r.gen_range(2 * n..=3 * n);
        Some(gen::random_multigraph(r, n, m))
    };
    let Some(g) = draw(rng, 200, make, |g| g.is_connected() && proper_odd_wheel(g).is_some()) else {
        return Outcome::Vacuous;
    };
    let w = proper_odd_wheel(&g).expect("accepted");
    let spec = WContractionSpec::adjacent_pair(w.clone(), rng.gen_range(0..w.rim_len()));
    let (h, _) = w_contract(&g, &spec).expect("valid spec");
    if has_mod3_orientation(&h) && !has_mod3_orientation(&g) {
        fail(&g, format!("contraction {spec:?} has a mod-3 orientation but the graph has none"))
    } else {
        Outcome::Pass
    }
}

/// Every W-contraction of a 5-edge-connected, essentially 8-edge-connected
/// graph with a proper odd wheel is 5-edge-connected.
fn w_contraction_connectivity(rng: &mut ChaCha8Rng) -> Outcome {
    let make = |r: &mut ChaCha8Rng| {
        let d = r.gen_range(6..=8);
        let n = r.gen_range(6..=12);
        if n * d % 2 == 1 {
            return None;
        }
        gen::random_regular_multigraph(r, n, d).ok()
    };
    let accept = |g: &Multigraph| {
        proper_odd_wheel(g).is_some()
            && edge_connectivity(g).is_ok_and(|c| c.cut_size >= 5)
            && essential_edge_connectivity(g).is_ok_and(|c| c.is_none_or(|c| c.cut_size >= 8))
    };
    let Some(g) = draw(rng, 200, make, accept) else {
        return Outcome::Vacuous;
    };
    let w = proper_odd_wheel(&g).expect("accepted");
    for i in 0..w.rim_len() {
        let spec = WContractionSpec::adjacent_pair(w.clone(), i);
        let (h, _) = w_contract(&g, &spec).expect("valid spec");
        let k = edge_connectivity(&h).map(|c| c.cut_size).unwrap_or(0);
        if h.order() >= 2 && k < 5 {
            return fail(&g, format!("contraction {spec:?} has edge connectivity {k}"));
        }
    }
    Outcome::Pass
}

fn odd5_with_even_vertex(rng: &mut ChaCha8Rng) -> Option<Multigraph> {
    let accept = |g: &Multigraph| odd_connectivity_exactly(g, 5) && g.degrees().values().any(|&d| d % 2 == 0);
    draw(rng, 200, |r| floor_graph(r, 4, 10, 5, 8), accept)
}

/// An even-degree vertex of an odd-5-edge-connected graph has a lift that
/// keeps odd-edge-connectivity 5.
fn splitting(rng: &mut ChaCha8Rng) -> Outcome {
    let Some(g) = odd5_with_even_vertex(rng) else {
        return Outcome::Vacuous;
    };
    let even: Vec<VertexId> = g.degrees().iter().filter(|(_, &d)| d % 2 == 0).map(|(&v, _)| v).collect();
    let v = *even.choose(rng).expect("accepted");
    match split_vertex(&g, v, 5) {
        Ok(Some(_)) => Outcome::Pass,
        Ok(None) => fail(&g, format!("no lift at {v} keeps odd-edge-connectivity 5")),
        Err(e) => fail(&g, format!("precondition rejected: {e}")),
    }
}

/// Eliminating every even-degree vertex keeps odd-edge-connectivity 5 and
/// leaves only odd degrees.
fn even_elimination(rng: &mut ChaCha8Rng) -> Outcome {
    let Some(g) = odd5_with_even_vertex(rng) else {
        return Outcome::Vacuous;
    };
    match eliminate_even_degrees(&g, 5) {
        Ok(Some(h)) if h.degrees().values().all(|d| d % 2 == 1) && odd_connectivity_exactly(&h, 5) => Outcome::Pass,
        Ok(Some(_)) => fail(&g, "elimination left an even degree or changed the odd-edge-connectivity"),
        Ok(None) => fail(&g, "a split found no preserving pair"),
        Err(e) => fail(&g, format!("elimination failed: {e}")),
    }
}

/// `|∂(S)| = Σ_S deg − 2 e(S)`, hence `≡ Σ_S deg (mod 2)`; odd cuts exist
/// iff some degree is odd.
fn cut_parity(rng: &mut ChaCha8Rng) -> Outcome {
    let n = rng.gen_range(2..=9);
    let m = rng.gen_range(0..=20);
    let g = gen::random_multigraph(rng, n, m);
    let size = rng.gen_range(1..n);
    let s = random_subset(rng, &g, size);
    let boundary = g.boundary_edges(&s).expect("proper subset").len();
    let degree_sum: usize = s.iter().map(|v| g.degree(v)).sum();
    if boundary != degree_sum - 2 * g.inner_edge_count(&s) || boundary % 2 != degree_sum % 2 {
        return fail(&g, format!("handshake identity fails on {s:?}"));
    }
    let any_odd = g.degrees().values().any(|d| d % 2 == 1);
    if odd_edge_connectivity(&g).expect("small").is_some() != any_odd {
        return fail(&g, "odd cuts exist iff some degree is odd");
    }
    Outcome::Pass
}

/// Returned orientations satisfy their contracts.
fn witness_revalidation(rng: &mut ChaCha8Rng) -> Outcome {
    let n = rng.gen_range(1..=8);
    let m = rng.gen_range(0..=14);
    let g = gen::random_multigraph(rng, n, m);
    let b = gen::random_boundary(rng, &g);
    if let Some(o) = z3_orientation(&g, &b).expect("admissible") {
        let imb = o.imbalance(&g);
        if o.validate(&g).is_err() || imb.iter().any(|(&v, &x)| x.rem_euclid(3) != b.get(v) as i64) {
            return fail(&g, format!("Z3 witness does not realise {b:?}"));
        }
    }
    let l = gen::random_admissible_imbalance(rng, &g);
    if let Some(o) = orient_with_imbalance(&g, &l).expect("admissible") {
        if o.validate(&g).is_err() || o.imbalance(&g).iter().any(|(&v, &x)| x != l.get(v)) {
            return fail(&g, format!("orientation does not realise {l:?}"));
        }
    }
    if let Some(o) = crate::orientation::mod3_orientation(&g) {
        if o.imbalance(&g).values().any(|x| x.rem_euclid(3) != 0) {
            return fail(&g, "mod-3 witness has a nonzero residue");
        }
    }
    Outcome::Pass
}

/// `b` is realisable iff `−b` is, and reversing a witness realises `−b`.
fn reversal_symmetry(rng: &mut ChaCha8Rng) -> Outcome {
    let n = rng.gen_range(1..=8);
    let m = rng.gen_range(0..=14);
    let g = gen::random_multigraph(rng, n, m);
    let b = gen::random_boundary(rng, &g);
    let nb = b.negated();
    let fwd = z3_orientation(&g, &b).expect("admissible");
    let back = z3_orientation(&g, &nb).expect("admissible");
    if fwd.is_some() != back.is_some() {
        return fail(&g, format!("{b:?} and its negation disagree"));
    }
    if let Some(o) = fwd {
        let r = o.reversed();
        if r.imbalance(&g).iter().any(|(&v, &x)| x.rem_euclid(3) != nb.get(v) as i64) {
            return fail(&g, "reversed witness does not realise −b");
        }
    }
    Outcome::Pass
}

/// Adding an edge to a Z3-connected graph keeps it Z3-connected.
fn supergraph_monotonicity(rng: &mut ChaCha8Rng) -> Outcome {
    let make = |r: &mut ChaCha8Rng| {
        let n = r.gen_range(2..=6);
        let m = r.gen_range(n + 1..=3 * n);
        Some(gen::random_multigraph(r, n, m))
    };
    let Some(mut g) = draw(rng, 100, make, |g| is_z3_connected(g).unwrap_or(false)) else {
        return Outcome::Vacuous;
    };
    let ends: Vec<VertexId> = g.vertices().choose_multiple(rng, 2).copied().collect();
    let original = g.clone();
    g.add_edge(ends[0], ends[1]).expect("distinct endpoints");
    if is_z3_connected(&g).expect("small") {
        Outcome::Pass
    } else {
        fail(&original, format!("adding {}–{} breaks Z3-connectivity", ends[0], ends[1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_lemma_runs_and_is_deterministic() {
        for lemma in LEMMAS {
            let a = lemma_sweep(lemma, 4, 17).unwrap();
            let b = lemma_sweep(lemma, 4, 17).unwrap();
            assert_eq!(a, b, "{lemma}");
            assert!(a.pass(), "{lemma}: {:?}", a.counterexamples);
        }
    }

    #[test]
    fn unknown_lemma() {
        assert!(matches!(lemma_sweep("nope", 1, 0), Err(Error::Lookup(_))));
    }
}
