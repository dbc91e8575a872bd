//! Orientations with prescribed imbalances.
//!
//! Exact imbalances (`d⁺ − d⁻ = ℓ`) reduce to an edge-to-tail assignment
//! solved by max-flow. Residue targets (`d⁺ − d⁻ ≡ b mod 3`) are decided by a
//! branch-and-bound over per-vertex out-degree candidates in which every
//! node of the search solves an interval-bounded assignment flow: a node is
//! pruned as soon as no orientation respects the current out-degree
//! intervals, and a leaf is reached as soon as the flow's own solution hits
//! a candidate at every vertex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::connectivity::edge_connectivity;
use crate::error::{capability, domain, Result};
use crate::graph::{Dense, Multigraph, Orientation, VertexId, VertexSet};
use crate::maxflow::{feasible_bounded, BoundedArc, FlowNetwork};
use crate::par;

/// Largest order `is_z3_connected` accepts.
pub const Z3_CONNECTIVITY_LIMIT: usize = 24;

/// Target imbalance `ℓ(v)` per vertex, with `Σ ℓ = 0` and
/// `ℓ(v) ≡ deg(v) (mod 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ImbalanceSpec(BTreeMap<VertexId, i64>);

impl ImbalanceSpec {
    pub fn new(g: &Multigraph, values: BTreeMap<VertexId, i64>) -> Result<Self> {
        if values.len() != g.order() || g.vertices().iter().any(|v| !values.contains_key(v)) {
            return domain("imbalance must assign exactly the graph's vertices");
        }
        if values.values().sum::<i64>() != 0 {
            return domain("imbalances must sum to zero");
        }
        let degrees = g.degrees();
        if let Some((v, _)) = values.iter().find(|(v, &l)| (l - degrees[v] as i64).rem_euclid(2) != 0) {
            return domain(format!("imbalance at {v} has the wrong parity for its degree"));
        }
        Ok(ImbalanceSpec(values))
    }

    /// Values listed in ascending vertex-id order.
    pub fn from_values(g: &Multigraph, values: &[i64]) -> Result<Self> {
        if values.len() != g.order() {
            return domain("one imbalance value per vertex is required");
        }
        Self::new(g, g.vertices().iter().copied().zip(values.iter().copied()).collect())
    }

    /// The imbalance realised by an orientation.
    pub fn of_orientation(g: &Multigraph, o: &Orientation) -> Self {
        ImbalanceSpec(o.imbalance(g))
    }

    pub fn get(&self, v: VertexId) -> i64 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, i64)> + '_ {
        self.0.iter().map(|(&v, &l)| (v, l))
    }
}

/// Boundary `b: V → Z3` with `Σ b ≡ 0 (mod 3)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Z3Boundary(BTreeMap<VertexId, u8>);

impl Z3Boundary {
    /// Accepts any integers, reduced mod 3.
    pub fn new(g: &Multigraph, values: BTreeMap<VertexId, i64>) -> Result<Self> {
        if values.len() != g.order() || g.vertices().iter().any(|v| !values.contains_key(v)) {
            return domain("boundary must assign exactly the graph's vertices");
        }
        if values.values().sum::<i64>().rem_euclid(3) != 0 {
            return domain("boundary values must sum to 0 mod 3");
        }
        Ok(Z3Boundary(values.into_iter().map(|(v, x)| (v, x.rem_euclid(3) as u8)).collect()))
    }

    pub fn from_values(g: &Multigraph, values: &[i64]) -> Result<Self> {
        if values.len() != g.order() {
            return domain("one boundary value per vertex is required");
        }
        Self::new(g, g.vertices().iter().copied().zip(values.iter().copied()).collect())
    }

    pub fn zero(g: &Multigraph) -> Self {
        Z3Boundary(g.vertices().iter().map(|&v| (v, 0)).collect())
    }

    pub fn get(&self, v: VertexId) -> u8 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.values().all(|&x| x == 0)
    }

    pub fn negated(&self) -> Self {
        Z3Boundary(self.0.iter().map(|(&v, &x)| (v, (3 - x) % 3)).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, u8)> + '_ {
        self.0.iter().map(|(&v, &x)| (v, x))
    }
}

fn check_spec_matches(g: &Multigraph, keys: impl Iterator<Item = VertexId>) -> Result<()> {
    let keys: Vec<VertexId> = keys.collect();
    if keys.as_slice() != g.vertices() {
        return domain("imbalance was built for a different vertex set");
    }
    Ok(())
}

/// Prescribed out-degrees `(deg + ℓ)/2`, or `None` if some `|ℓ(v)| > deg(v)`.
fn out_degrees(d: &Dense, l: &ImbalanceSpec) -> Option<Vec<i64>> {
    (0..d.n)
        .map(|i| {
            let o = (d.deg[i] as i64 + l.get(d.ids[i])) / 2;
            (0..=d.deg[i] as i64).contains(&o).then_some(o)
        })
        .collect()
}

struct ExactFlow {
    tails: Option<Vec<usize>>,
    violating: Option<VertexSet>,
}

/// Edge nodes `2..2+m`, vertex nodes `2+m..`, source 0, sink 1.
fn exact_assignment(d: &Dense, outdeg: &[i64]) -> ExactFlow {
    let m = d.edges.len();
    let mut net = FlowNetwork::new(2 + m + d.n);
    let mut arcs = Vec::with_capacity(m);
    for (k, &(a, b)) in d.edges.iter().enumerate() {
        net.add_edge(0, 2 + k, 1);
        let to_a = net.add_edge(2 + k, 2 + m + a, 1);
        net.add_edge(2 + k, 2 + m + b, 1);
        arcs.push(to_a);
    }
    for (i, &o) in outdeg.iter().enumerate() {
        net.add_edge(2 + m + i, 1, o);
    }
    let flow = net.max_flow(0, 1);
    if flow == m as i64 {
        let tails = d.edges.iter().zip(&arcs).map(|(&(a, b), &arc)| if net.flow(arc) == 1 { a } else { b }).collect();
        ExactFlow { tails: Some(tails), violating: None }
    } else {
        // The source side of a minimum cut spans more edges than its vertices
        // may own as tails.
        let side = net.residual_reachable(0);
        let set: VertexSet = (0..d.n).filter(|&i| side[2 + m + i]).map(|i| d.ids[i]).collect();
        ExactFlow { tails: None, violating: Some(set) }
    }
}

fn to_orientation(d: &Dense, tails: &[usize]) -> Orientation {
    let mut o = Orientation::new();
    for ((&(a, b), &t), &id) in d.edges.iter().zip(tails).zip(&d.edge_ids) {
        let h = if t == a { b } else { a };
        o.set(id, d.ids[t], d.ids[h]);
    }
    o
}

/// Decides whether some orientation realises `ℓ` exactly.
pub fn hakimi_feasible(g: &Multigraph, l: &ImbalanceSpec) -> Result<bool> {
    Ok(orient_with_imbalance(g, l)?.is_some())
}

/// A set `S` with `|Σ_S ℓ| > |∂(S)|` when `ℓ` is infeasible, read off a
/// minimum cut of the assignment flow.
pub fn hakimi_certificate(g: &Multigraph, l: &ImbalanceSpec) -> Result<Option<VertexSet>> {
    check_spec_matches(g, l.iter().map(|(v, _)| v))?;
    let d = g.dense();
    let Some(outdeg) = out_degrees(&d, l) else {
        let (i, _) = (0..d.n)
            .map(|i| (i, l.get(d.ids[i])))
            .find(|&(i, x)| x.abs() > d.deg[i] as i64)
            .expect("some vertex exceeds its degree");
        return Ok(Some([d.ids[i]].into_iter().collect()));
    };
    Ok(exact_assignment(&d, &outdeg).violating)
}

/// An orientation with `d⁺(v) − d⁻(v) = ℓ(v)` for every `v`, if one exists.
pub fn orient_with_imbalance(g: &Multigraph, l: &ImbalanceSpec) -> Result<Option<Orientation>> {
    check_spec_matches(g, l.iter().map(|(v, _)| v))?;
    let d = g.dense();
    let Some(outdeg) = out_degrees(&d, l) else {
        return Ok(None);
    };
    let Some(tails) = exact_assignment(&d, &outdeg).tails else {
        return Ok(None);
    };
    let o = to_orientation(&d, &tails);
    assert!(o.validate(g).is_ok() && o.imbalance(g).iter().all(|(&v, &x)| x == l.get(v)));
    Ok(Some(o))
}

/// An orientation in which every vertex has imbalance `≡ 0 (mod 3)`.
pub fn mod3_orientation(g: &Multigraph) -> Option<Orientation> {
    let d = g.dense();
    let o = residue_orientation(&d, &vec![0; d.n]).map(|t| to_orientation(&d, &t))?;
    assert!(o.validate(g).is_ok() && o.imbalance(g).values().all(|x| x.rem_euclid(3) == 0));
    Some(o)
}

pub fn has_mod3_orientation(g: &Multigraph) -> bool {
    mod3_orientation(g).is_some()
}

/// An orientation with imbalance `≡ b(v) (mod 3)` at every vertex.
pub fn z3_orientation(g: &Multigraph, b: &Z3Boundary) -> Result<Option<Orientation>> {
    check_spec_matches(g, b.iter().map(|(v, _)| v))?;
    let d = g.dense();
    let residues: Vec<u8> = d.ids.iter().map(|&v| b.get(v)).collect();
    let Some(tails) = residue_orientation(&d, &residues) else {
        return Ok(None);
    };
    let o = to_orientation(&d, &tails);
    assert!(o.validate(g).is_ok());
    assert!(o.imbalance(g).iter().all(|(&v, &x)| x.rem_euclid(3) == b.get(v) as i64));
    Ok(Some(o))
}

/// Out-degree candidates realising residue `r` at a vertex of degree `deg`.
fn candidates(deg: u32, r: u8) -> Vec<u32> {
    (0..=deg).filter(|&o| (2 * o as i64 - deg as i64).rem_euclid(3) == r as i64).collect()
}

/// Tail per edge, or `None`. Indices follow `d`.
pub(crate) fn residue_orientation(d: &Dense, residues: &[u8]) -> Option<Vec<usize>> {
    let cands: Vec<Vec<u32>> = (0..d.n).map(|i| candidates(d.deg[i], residues[i])).collect();
    if cands.iter().any(|c| c.is_empty()) {
        return None;
    }
    let mut lo: Vec<u32> = cands.iter().map(|c| c[0]).collect();
    let mut hi: Vec<u32> = cands.iter().map(|c| *c.last().expect("nonempty")).collect();
    branch(d, &cands, &mut lo, &mut hi)
}

fn branch(d: &Dense, cands: &[Vec<u32>], lo: &mut [u32], hi: &mut [u32]) -> Option<Vec<usize>> {
    let tails = interval_assignment(d, lo, hi)?;
    let mut outdeg = vec![0u32; d.n];
    for &t in &tails {
        outdeg[t] += 1;
    }
    let violated = (0..d.n)
        .filter(|&i| cands[i].binary_search(&outdeg[i]).is_err())
        .min_by_key(|&i| (cands[i].iter().filter(|&&o| lo[i] <= o && o <= hi[i]).count(), i));
    let Some(v) = violated else {
        return Some(tails);
    };
    let mut options: Vec<u32> = cands[v].iter().copied().filter(|&o| lo[v] <= o && o <= hi[v]).collect();
    options.sort_by_key(|&o| (o.abs_diff(outdeg[v]), o));
    let saved = (lo[v], hi[v]);
    for o in options {
        lo[v] = o;
        hi[v] = o;
        if let Some(t) = branch(d, cands, lo, hi) {
            return Some(t);
        }
    }
    (lo[v], hi[v]) = saved;
    None
}

/// Orientation whose out-degrees lie in `[lo, hi]`, via a bounded flow:
/// source → edge node (exactly 1) → either endpoint → sink within bounds.
fn interval_assignment(d: &Dense, lo: &[u32], hi: &[u32]) -> Option<Vec<usize>> {
    let m = d.edges.len();
    let mut arcs = Vec::with_capacity(3 * m + d.n);
    for (k, &(a, b)) in d.edges.iter().enumerate() {
        arcs.push(BoundedArc { from: 0, to: 2 + k, lower: 1, upper: 1 });
        arcs.push(BoundedArc { from: 2 + k, to: 2 + m + a, lower: 0, upper: 1 });
        arcs.push(BoundedArc { from: 2 + k, to: 2 + m + b, lower: 0, upper: 1 });
    }
    for i in 0..d.n {
        arcs.push(BoundedArc { from: 2 + m + i, to: 1, lower: lo[i] as i64, upper: hi[i] as i64 });
    }
    let flow = feasible_bounded(2 + m + d.n, 0, 1, &arcs)?;
    Some(d.edges.iter().enumerate().map(|(k, &(a, b))| if flow[3 * k + 1] == 1 { a } else { b }).collect())
}

/// Boundary number `index` in base 3 over the first `n − 1` vertices; the
/// last vertex balances the sum.
fn decode_boundary(n: usize, mut index: u64) -> Vec<u8> {
    let mut out = vec![0u8; n];
    let mut sum = 0u32;
    for x in out.iter_mut().take(n - 1) {
        *x = (index % 3) as u8;
        sum += *x as u32;
        index /= 3;
    }
    out[n - 1] = ((3 - sum % 3) % 3) as u8;
    out
}

fn negated_index(n: usize, index: u64) -> u64 {
    let b = decode_boundary(n, index);
    b[..n - 1].iter().rev().fold(0u64, |acc, &x| acc * 3 + ((3 - x) % 3) as u64)
}

/// True iff every admissible boundary is realisable. Boundaries `b` and `−b`
/// share a verdict (reverse every arc), so only one of each pair is solved.
pub fn is_z3_connected(g: &Multigraph) -> Result<bool> {
    Ok(z3_connectivity_counterexample(g)?.is_none())
}

/// The first boundary (in enumeration order) with no realising orientation.
pub fn z3_connectivity_counterexample(g: &Multigraph) -> Result<Option<Z3Boundary>> {
    let n = g.order();
    if n <= 1 {
        return Ok(None);
    }
    if n > Z3_CONNECTIVITY_LIMIT {
        return capability(format!("Z3-connectivity is limited to {Z3_CONNECTIVITY_LIMIT} vertices (got {n})"));
    }
    let d = g.dense();
    let to_boundary = |res: Vec<u8>| Z3Boundary(d.ids.iter().copied().zip(res).collect());
    // A cut of one edge carries net ±1 and cannot realise residue 0 across it.
    if edge_connectivity(g)?.cut_size < 2 {
        let cut = edge_connectivity(g)?;
        let mut values = vec![0u8; n];
        if cut.cut_size == 0 {
            // separate components: put 1 on one side, 2 on the other
            let inside = d.index_of(cut.witness.iter().next().expect("nonempty")).expect("vertex");
            let outside = (0..n).find(|&i| !cut.witness.contains(d.ids[i])).expect("proper cut");
            values[inside] = 1;
            values[outside] = 2;
        }
        return Ok(Some(to_boundary(values)));
    }
    let total = 3u64.pow((n - 1) as u32);
    let hit = par::find_first_index(total, |i| {
        i <= negated_index(n, i) && residue_orientation(&d, &decode_boundary(n, i)).is_none()
    });
    Ok(hit.map(|i| to_boundary(decode_boundary(n, i))))
}

/// Exhaustive reference deciders, independent of the flow machinery.
pub mod oracle {
    use super::*;

    /// Largest edge count the orientation enumerators accept.
    pub const BRUTE_FORCE_EDGE_LIMIT: usize = 20;

    /// First orientation (in mask order) whose imbalance vector satisfies
    /// `accept`; imbalances are indexed like `g.dense()`.
    pub fn search_orientations<F>(g: &Multigraph, accept: F) -> Result<Option<Orientation>>
    where
        F: Fn(&[i64]) -> bool,
    {
        let d = g.dense();
        let m = d.edges.len();
        if m > BRUTE_FORCE_EDGE_LIMIT {
            return capability(format!("brute-force orientation is limited to {BRUTE_FORCE_EDGE_LIMIT} edges"));
        }
        let mut imb = vec![0i64; d.n];
        for mask in 0u64..1 << m {
            imb.iter_mut().for_each(|x| *x = 0);
            for (k, &(a, b)) in d.edges.iter().enumerate() {
                let (t, h) = if mask >> k & 1 == 0 { (a, b) } else { (b, a) };
                imb[t] += 1;
                imb[h] -= 1;
            }
            if accept(&imb) {
                let tails: Vec<usize> =
                    d.edges.iter().enumerate().map(|(k, &(a, b))| if mask >> k & 1 == 0 { a } else { b }).collect();
                return Ok(Some(to_orientation(&d, &tails)));
            }
        }
        Ok(None)
    }

    pub fn hakimi_brute_force(g: &Multigraph, l: &ImbalanceSpec) -> Result<bool> {
        let target: Vec<i64> = g.vertices().iter().map(|&v| l.get(v)).collect();
        Ok(search_orientations(g, |imb| imb == target.as_slice())?.is_some())
    }

    /// A subset violating `|Σ_S ℓ| ≤ |∂(S)|`, or `None` when the cut
    /// condition holds everywhere.
    pub fn hakimi_cut_condition(g: &Multigraph, l: &ImbalanceSpec) -> Result<Option<VertexSet>> {
        let d = g.dense();
        if d.n > crate::connectivity::EXHAUSTIVE_CUT_LIMIT {
            return capability("subset cut condition is limited to 24 vertices");
        }
        let ell: Vec<i64> = d.ids.iter().map(|&v| l.get(v)).collect();
        for mask in 1u64..1 << d.n {
            let sum: i64 = (0..d.n).filter(|&i| mask >> i & 1 == 1).map(|i| ell[i]).sum();
            if sum.unsigned_abs() > d.cut_of_mask(mask) {
                return Ok(Some(d.mask_to_set(mask)));
            }
        }
        Ok(None)
    }

    pub fn mod3_brute_force(g: &Multigraph) -> Result<bool> {
        Ok(search_orientations(g, |imb| imb.iter().all(|x| x.rem_euclid(3) == 0))?.is_some())
    }

    pub fn z3_brute_force(g: &Multigraph, b: &Z3Boundary) -> Result<bool> {
        let res: Vec<i64> = g.vertices().iter().map(|&v| b.get(v) as i64).collect();
        Ok(search_orientations(g, |imb| imb.iter().zip(&res).all(|(x, r)| x.rem_euclid(3) == *r))?.is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::gen;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn spec(g: &Multigraph, v: &[i64]) -> ImbalanceSpec {
        ImbalanceSpec::from_values(g, v).unwrap()
    }

    #[test]
    fn imbalance_spec_validation() {
        let k2 = catalog::complete(2);
        assert!(ImbalanceSpec::from_values(&k2, &[1, 1]).is_err(), "sum");
        assert!(ImbalanceSpec::from_values(&k2, &[2, -2]).is_err(), "parity");
        assert!(ImbalanceSpec::from_values(&k2, &[1]).is_err(), "arity");
        let l = ImbalanceSpec::from_values(&k2, &[3, -3]).unwrap();
        assert!(!hakimi_feasible(&k2, &l).unwrap(), "beyond degree is infeasible, not an error");
    }

    #[test]
    fn hakimi_examples() {
        let k2 = catalog::complete(2);
        assert!(hakimi_feasible(&k2, &spec(&k2, &[1, -1])).unwrap());
        let c3 = catalog::cycle(3);
        assert!(hakimi_feasible(&c3, &spec(&c3, &[0, 0, 0])).unwrap());
        let k4 = catalog::complete(4);
        let l = spec(&k4, &[3, -1, -1, -1]);
        assert!(hakimi_feasible(&k4, &l).unwrap());
        assert!(oracle::hakimi_brute_force(&k4, &l).unwrap());
    }

    #[test]
    fn orient_examples() {
        let star = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let o = orient_with_imbalance(&star, &spec(&star, &[3, -1, -1, -1])).unwrap().unwrap();
        assert!(o.arcs().all(|(_, t, _)| t == VertexId(0)));

        let c4 = catalog::cycle(4);
        let o = orient_with_imbalance(&c4, &spec(&c4, &[0, 0, 0, 0])).unwrap().unwrap();
        assert!(o.imbalance(&c4).values().all(|&x| x == 0));

        // K4 with ℓ = (3, −3, 1, −1): 0 is a source, 1 a sink, and 2→3
        // settles the rest.
        let k4 = catalog::complete(4);
        let l = spec(&k4, &[3, -3, 1, -1]);
        let brute = oracle::hakimi_brute_force(&k4, &l).unwrap();
        assert_eq!(hakimi_feasible(&k4, &l).unwrap(), brute);
        assert!(brute, "2→3 completes it: imbalances 3, −3, 1, −1");
    }

    #[test]
    fn certificates_violate_the_cut_condition() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut seen = 0;
        for _ in 0..300 {
            let n = rng.gen_range(2..=7);
            let m = rng.gen_range(1..=12);
            let g = gen::random_multigraph(&mut rng, n, m);
            let l = gen::random_admissible_imbalance(&mut rng, &g);
            if let Some(s) = hakimi_certificate(&g, &l).unwrap() {
                seen += 1;
                assert!(!hakimi_feasible(&g, &l).unwrap());
                let sum: i64 = s.iter().map(|v| l.get(v)).sum();
                let cut = if s.len() == g.order() { 0 } else { g.boundary_edges(&s).unwrap().len() as i64 };
                assert!(sum.abs() > cut, "certificate {s:?} does not violate the cut condition");
            } else {
                assert!(hakimi_feasible(&g, &l).unwrap());
            }
        }
        assert!(seen > 20);
    }

    #[test]
    fn mod3_examples() {
        assert!(mod3_orientation(&catalog::cycle(3)).is_some());
        let k4 = catalog::complete(4);
        assert!(mod3_orientation(&k4).is_none());
        assert!(!oracle::mod3_brute_force(&k4).unwrap());
        assert!(mod3_orientation(&catalog::g3()).is_none());
        assert!(mod3_orientation(&Multigraph::with_vertices(1)).is_some());
        assert!(mod3_orientation(&Multigraph::new()).is_some());
    }

    #[test]
    fn z3_examples() {
        let digon = catalog::cycle(2);
        let b = Z3Boundary::from_values(&digon, &[2, 1]).unwrap();
        let o = z3_orientation(&digon, &b).unwrap().unwrap();
        assert!(o.arcs().all(|(_, t, _)| t == VertexId(0)));
        let b = Z3Boundary::from_values(&digon, &[1, 2]).unwrap();
        let o = z3_orientation(&digon, &b).unwrap().unwrap();
        assert!(o.arcs().all(|(_, t, _)| t == VertexId(1)));

        let k4 = catalog::complete(4);
        assert!(z3_orientation(&k4, &Z3Boundary::zero(&k4)).unwrap().is_none());
        assert!(Z3Boundary::from_values(&k4, &[1, 0, 0, 0]).is_err());

        let w5 = catalog::wheel(5);
        let b = Z3Boundary::from_values(&w5, &[1, 2, 0, 0, 0, 0]).unwrap();
        assert!(z3_orientation(&w5, &b).unwrap().is_some());
    }

    #[test]
    fn z3_connectivity_examples() {
        assert!(is_z3_connected(&catalog::cycle(2)).unwrap());
        assert!(!is_z3_connected(&catalog::cycle(3)).unwrap());
        assert!(!is_z3_connected(&catalog::complete(4)).unwrap());
        assert!(is_z3_connected(&catalog::complete(5)).unwrap());
        assert!(is_z3_connected(&catalog::wheel(4)).unwrap());
        assert!(is_z3_connected(&Multigraph::with_vertices(1)).unwrap());
        assert!(!is_z3_connected(&Multigraph::with_vertices(2)).unwrap());
        let path = Multigraph::from_edges(3, &[(0, 1), (1, 2), (1, 2)]).unwrap();
        let b = z3_connectivity_counterexample(&path).unwrap().unwrap();
        assert!(z3_orientation(&path, &b).unwrap().is_none());
    }

    #[test]
    fn counterexample_is_genuine() {
        let k4 = catalog::complete(4);
        let b = z3_connectivity_counterexample(&k4).unwrap().unwrap();
        assert!(b.is_zero());
        let disconnected = Multigraph::from_edges(4, &[(0, 1), (0, 1), (2, 3), (2, 3)]).unwrap();
        let b = z3_connectivity_counterexample(&disconnected).unwrap().unwrap();
        assert!(z3_orientation(&disconnected, &b).unwrap().is_none());
    }

    #[test]
    fn residue_search_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..400 {
            let n = rng.gen_range(1..=7);
            let m = rng.gen_range(0..=12);
            let g = gen::random_multigraph(&mut rng, n, m);
            let b = gen::random_boundary(&mut rng, &g);
            let fast = z3_orientation(&g, &b).unwrap().is_some();
            assert_eq!(fast, oracle::z3_brute_force(&g, &b).unwrap(), "{g:?} {b:?}");
        }
    }
}
