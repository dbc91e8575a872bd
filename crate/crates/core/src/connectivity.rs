//! Edge-connectivity variants and the independence number.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{capability, domain, Result};
use crate::graph::{Dense, Multigraph, VertexSet};
use crate::maxflow::FlowNetwork;
use crate::par;

/// Largest order accepted by the subset-enumerating cut routines.
pub const EXHAUSTIVE_CUT_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutReport {
    pub cut_size: u64,
    pub witness: VertexSet,
    pub odd: bool,
}

impl CutReport {
    fn new(d: &Dense, mask: u64, cut: u64) -> Self {
        CutReport { cut_size: cut, witness: d.mask_to_set(mask), odd: cut % 2 == 1 }
    }
}

/// Global minimum edge cut via `n − 1` max-flow computations from the
/// lowest vertex. A disconnected graph reports 0 with the first component as
/// witness.
pub fn edge_connectivity(g: &Multigraph) -> Result<CutReport> {
    if g.order() < 2 {
        return domain("edge connectivity needs at least two vertices");
    }
    let d = g.dense();
    let mut best: Option<(u64, Vec<bool>)> = None;
    for t in 1..d.n {
        let mut net = FlowNetwork::new(d.n);
        for &(a, b) in &d.edges {
            net.add_undirected(a, b, 1);
        }
        let f = net.max_flow(0, t) as u64;
        if best.as_ref().is_none_or(|(c, _)| f < *c) {
            best = Some((f, net.residual_reachable(0)));
        }
    }
    let (cut, side) = best.expect("at least one sink");
    let witness: VertexSet = (0..d.n).filter(|&i| side[i]).map(|i| d.ids[i]).collect();
    let report = CutReport { cut_size: cut, witness, odd: cut % 2 == 1 };
    debug_assert_eq!(g.boundary_edges(&report.witness).map(|e| e.len() as u64).ok(), Some(cut));
    Ok(report)
}

/// Minimum odd cut, or `None` when every cut is even (all degrees even).
pub fn odd_edge_connectivity(g: &Multigraph) -> Result<Option<CutReport>> {
    if g.order() < 2 || g.degrees().values().all(|x| x % 2 == 0) {
        return Ok(None);
    }
    let d = guarded_dense(g)?;
    Ok(min_cut_by_enumeration(&d, |_, _, cut| cut % 2 == 1).map(|(m, c)| CutReport::new(&d, m, c)))
}

/// Minimum cut whose both sides span at least one edge, or `None` if there
/// is no such cut.
pub fn essential_edge_connectivity(g: &Multigraph) -> Result<Option<CutReport>> {
    if g.order() < 2 {
        return Ok(None);
    }
    let d = guarded_dense(g)?;
    let total: u64 = d.deg.iter().map(|&x| x as u64).sum();
    let filter = |_: u64, deg_inside: u64, cut: u64| deg_inside > cut && total - deg_inside > cut;
    Ok(min_cut_by_enumeration(&d, filter).map(|(m, c)| CutReport::new(&d, m, c)))
}

/// Minimum cut over all proper vertex subsets by enumeration; the oracle for
/// `edge_connectivity`.
pub fn edge_connectivity_exhaustive(g: &Multigraph) -> Result<CutReport> {
    if g.order() < 2 {
        return domain("edge connectivity needs at least two vertices");
    }
    let d = guarded_dense(g)?;
    let (m, c) = min_cut_by_enumeration(&d, |_, _, _| true).expect("n >= 2");
    Ok(CutReport::new(&d, m, c))
}

fn guarded_dense(g: &Multigraph) -> Result<Dense> {
    if g.order() > EXHAUSTIVE_CUT_LIMIT {
        return capability(format!(
            "exhaustive cut enumeration is limited to {EXHAUSTIVE_CUT_LIMIT} vertices (got {})",
            g.order()
        ));
    }
    Ok(g.dense())
}

/// Compares two index sets as ascending vertex lists.
pub(crate) fn lex_cmp(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let p = diff.trailing_zeros();
    // The list holding `p` continues with `p`; the other continues with a
    // larger element or ends there, in which case it is a prefix.
    let (a_holds, other) = if a >> p & 1 == 1 { (true, b) } else { (false, a) };
    let other_ends = other >> p == 0;
    if a_holds != other_ends {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

fn better(a: (u64, u64), b: (u64, u64)) -> bool {
    // (mask, cut)
    a.1 < b.1 || (a.1 == b.1 && lex_cmp(a.0, b.0) == Ordering::Less)
}

/// Enumerates every proper subset containing index 0 and returns the
/// minimum-cut `(mask, cut)` accepted by `keep(mask, Σ_S deg, cut)`, ties
/// broken by the lexicographically least vertex list.
fn min_cut_by_enumeration<F>(d: &Dense, keep: F) -> Option<(u64, u64)>
where
    F: Fn(u64, u64, u64) -> bool + Sync + Send,
{
    let n = d.n;
    let free = n - 1;
    let low = free.min(14);
    let high = free - low;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let chunks = 1usize << high;
    let results = par::map_indexed(chunks, |chunk| {
        let mut mask = 1u64 | ((chunk as u64) << (1 + low));
        let mut inside = vec![0u64; n];
        let mut deg_in = 0u64;
        for a in 0..n {
            if mask >> a & 1 == 1 {
                deg_in += d.deg[a] as u64;
                for (b, w) in inside.iter_mut().enumerate() {
                    *w += d.mult(a, b) as u64;
                }
            }
        }
        let mut cut = d.cut_of_mask(mask);
        let mut best: Option<(u64, u64)> = None;
        let mut visit = |mask: u64, deg_in: u64, cut: u64| {
            if mask != full && keep(mask, deg_in, cut) && best.is_none_or(|b| better((mask, cut), b)) {
                best = Some((mask, cut));
            }
        };
        visit(mask, deg_in, cut);
        for step in 1u64..(1u64 << low) {
            let bit = 1 + step.trailing_zeros() as usize;
            let x = 1u64 << bit;
            if mask & x == 0 {
                cut = cut + d.deg[bit] as u64 - 2 * inside[bit];
                deg_in += d.deg[bit] as u64;
                mask |= x;
                for (b, w) in inside.iter_mut().enumerate() {
                    *w += d.mult(bit, b) as u64;
                }
            } else {
                mask &= !x;
                deg_in -= d.deg[bit] as u64;
                for (b, w) in inside.iter_mut().enumerate() {
                    *w -= d.mult(bit, b) as u64;
                }
                cut = cut + 2 * inside[bit] - d.deg[bit] as u64;
            }
            visit(mask, deg_in, cut);
        }
        best
    });
    results.into_iter().flatten().fold(None, |acc: Option<(u64, u64)>, r| match acc {
        Some(a) if !better(r, a) => Some(a),
        _ => Some(r),
    })
}

/// Exact independence number of the underlying simple graph, with a
/// maximum independent set as witness.
pub fn independence_number(g: &Multigraph) -> Result<(usize, VertexSet)> {
    if g.order() > 64 {
        return capability("independence number is limited to 64 vertices");
    }
    let d = g.dense();
    let nbr: Vec<u64> = (0..d.n).map(|i| d.nbr_mask(i)).collect();
    let all = if d.n == 64 { u64::MAX } else { (1u64 << d.n) - 1 };
    let mut best = (0usize, 0u64);
    mis_branch(&nbr, all, 0, &mut best);
    Ok((best.0, d.mask_to_set(best.1)))
}

fn clique_cover_bound(nbr: &[u64], mut cand: u64) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let mut common = nbr[v] & cand;
        cand &= !(1u64 << v);
        while common != 0 {
            let w = common.trailing_zeros() as usize;
            cand &= !(1u64 << w);
            common &= nbr[w] & !(1u64 << w);
        }
        cliques += 1;
    }
    cliques
}

fn mis_branch(nbr: &[u64], mut cand: u64, mut cur: u64, best: &mut (usize, u64)) {
    // Vertices isolated within the candidates always join.
    let mut free = 0u64;
    let mut it = cand;
    while it != 0 {
        let v = it.trailing_zeros() as usize;
        it &= it - 1;
        if nbr[v] & cand == 0 {
            free |= 1 << v;
        }
    }
    cur |= free;
    cand &= !free;
    let size = cur.count_ones() as usize;
    if cand == 0 {
        if size > best.0 {
            *best = (size, cur);
        }
        return;
    }
    if size + clique_cover_bound(nbr, cand) <= best.0 {
        return;
    }
    let mut pick = 0;
    let mut pick_deg = 0;
    let mut it = cand;
    while it != 0 {
        let v = it.trailing_zeros() as usize;
        it &= it - 1;
        let dv = (nbr[v] & cand).count_ones();
        if dv > pick_deg {
            pick = v;
            pick_deg = dv;
        }
    }
    mis_branch(nbr, cand & !nbr[pick] & !(1 << pick), cur | 1 << pick, best);
    mis_branch(nbr, cand & !(1 << pick), cur, best);
}

/// `X ∪ N(X)`.
pub fn neighborhood_closure(g: &Multigraph, x: &VertexSet) -> Result<VertexSet> {
    if x.is_empty() {
        return domain("neighbourhood closure of an empty set");
    }
    if let Some(v) = x.iter().find(|&v| !g.contains_vertex(v)) {
        return domain(format!("vertex {v} is not in the graph"));
    }
    let mut out = x.clone();
    for e in g.edges() {
        if x.contains(e.u) {
            out.insert(e.v);
        }
        if x.contains(e.v) {
            out.insert(e.u);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::VertexId;

    fn complete(n: u32) -> Multigraph {
        catalog::complete(n as usize)
    }

    fn brute_alpha(g: &Multigraph) -> usize {
        let d = g.dense();
        let nbr: Vec<u64> = (0..d.n).map(|i| d.nbr_mask(i)).collect();
        (0u64..1 << d.n)
            .filter(|&m| (0..d.n).all(|i| m >> i & 1 == 0 || nbr[i] & m == 0))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn lex_order_of_sets() {
        // {0,1} < {0,1,2} < {0,2}
        assert_eq!(lex_cmp(0b011, 0b111), Ordering::Less);
        assert_eq!(lex_cmp(0b111, 0b101), Ordering::Less);
        assert_eq!(lex_cmp(0b101, 0b011), Ordering::Greater);
        assert_eq!(lex_cmp(0b1, 0b1), Ordering::Equal);
    }

    #[test]
    fn edge_connectivity_examples() {
        assert_eq!(edge_connectivity(&complete(4)).unwrap().cut_size, 3);
        let digon = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(edge_connectivity(&digon).unwrap().cut_size, 2);
        assert_eq!(edge_connectivity(&catalog::g3()).unwrap().cut_size, 3);
        assert!(edge_connectivity(&Multigraph::with_vertices(1)).is_err());
        let two_parts = Multigraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let r = edge_connectivity(&two_parts).unwrap();
        assert_eq!(r.cut_size, 0);
        assert_eq!(r.witness, VertexSet::from([0, 1]));
    }

    #[test]
    fn odd_connectivity_examples() {
        assert!(odd_edge_connectivity(&catalog::cycle(4)).unwrap().is_none());
        assert_eq!(odd_edge_connectivity(&complete(4)).unwrap().unwrap().cut_size, 3);
        let mut k4d = complete(4);
        k4d.add_edge(VertexId(0), VertexId(1)).unwrap();
        let r = odd_edge_connectivity(&k4d).unwrap().unwrap();
        assert_eq!(r.cut_size, 3);
        assert!(r.odd);
    }

    #[test]
    fn essential_examples() {
        assert_eq!(essential_edge_connectivity(&complete(4)).unwrap().unwrap().cut_size, 4);
        let star = Multigraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(essential_edge_connectivity(&star).unwrap().is_none());
        assert_eq!(essential_edge_connectivity(&catalog::cycle(5)).unwrap().unwrap().cut_size, 2);
    }

    #[test]
    fn capability_limit() {
        let g = catalog::cycle(25);
        assert!(matches!(odd_edge_connectivity(&catalog::complete(26)), Err(crate::Error::Capability(_))));
        assert!(odd_edge_connectivity(&g).unwrap().is_none(), "even degrees short-circuit");
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&complete(5)).unwrap().0, 1);
        assert_eq!(independence_number(&catalog::cycle(5)).unwrap().0, 2);
        let (a, w) = independence_number(&catalog::g3()).unwrap();
        assert_eq!(a, 2);
        assert_eq!(w.len(), 2);
        assert_eq!(independence_number(&Multigraph::new()).unwrap().0, 0);
    }

    #[test]
    fn closure_examples() {
        let k4 = complete(4);
        assert_eq!(neighborhood_closure(&k4, &VertexSet::from([0])).unwrap().len(), 4);
        let c5 = catalog::cycle(5);
        assert_eq!(neighborhood_closure(&c5, &VertexSet::from([0])).unwrap(), VertexSet::from([0, 1, 4]));
        let g3 = catalog::g3();
        let top = *g3.degrees().iter().find(|(_, &d)| d == 5).unwrap().0;
        assert_eq!(neighborhood_closure(&g3, &[top].into_iter().collect()).unwrap().len(), 6);
        assert!(neighborhood_closure(&k4, &VertexSet::new()).is_err());
    }

    #[test]
    fn flow_and_enumeration_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..150 {
            let n = rng.gen_range(2..=9usize);
            let m = rng.gen_range(0..=3 * n);
            let g = crate::gen::random_multigraph(&mut rng, n, m);
            let flow = edge_connectivity(&g).unwrap();
            let brute = edge_connectivity_exhaustive(&g).unwrap();
            assert_eq!(flow.cut_size, brute.cut_size);
            assert_eq!(g.boundary_edges(&brute.witness).unwrap().len() as u64, brute.cut_size);
            assert!(flow.cut_size as usize <= g.min_degree());
        }
    }

    #[test]
    fn branch_and_bound_matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..200 {
            let n = rng.gen_range(0..=12usize);
            let m = rng.gen_range(0..=n * 2);
            let g = crate::gen::random_multigraph(&mut rng, n, m);
            let (a, w) = independence_number(&g).unwrap();
            assert_eq!(a, brute_alpha(&g));
            assert_eq!(w.len(), a);
            for x in w.iter() {
                assert!(g.neighbors(x).iter().all(|y| !w.contains(*y)));
            }
        }
    }
}
