//! Graph surgery around Z3-connectivity: Z3-subgraph search and
//! Z3-reduction, wheels and W-contraction, and vertex splitting.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_from_matrix, CanonicalForm};
use crate::connectivity::{odd_edge_connectivity, EXHAUSTIVE_CUT_LIMIT};
use crate::error::{capability, domain, Result};
use crate::graph::{Dense, EdgeId, Multigraph, ReductionTrace, VertexId, VertexSet};
use crate::orientation::is_z3_connected;
use crate::par;

pub const DEFAULT_SIZE_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WheelParity {
    Any,
    Odd,
    Even,
}

impl WheelParity {
    fn accepts(self, rim_len: usize) -> bool {
        match self {
            WheelParity::Any => true,
            WheelParity::Odd => rim_len % 2 == 1,
            WheelParity::Even => rim_len.is_multiple_of(2),
        }
    }
}

/// A centre joined to every vertex of a rim cycle of length at least 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WheelWitness {
    pub center: VertexId,
    pub rim: Vec<VertexId>,
    pub odd: bool,
}

impl WheelWitness {
    pub fn new(g: &Multigraph, center: VertexId, rim: Vec<VertexId>) -> Result<Self> {
        let w = WheelWitness { odd: rim.len() % 2 == 1, center, rim };
        w.validate(g)?;
        Ok(w)
    }

    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        let k = self.rim.len();
        if k < 3 {
            return domain("a wheel rim needs at least three vertices");
        }
        if self.odd != (k % 2 == 1) {
            return domain("wheel parity flag disagrees with the rim length");
        }
        let mut all = self.rim.clone();
        all.push(self.center);
        all.sort_unstable();
        all.dedup();
        if all.len() != k + 1 {
            return domain("wheel vertices must be distinct");
        }
        if let Some(v) = all.iter().find(|v| !g.contains_vertex(**v)) {
            return domain(format!("wheel vertex {v} is not in the graph"));
        }
        for i in 0..k {
            if g.multiplicity(self.center, self.rim[i]) == 0 {
                return domain(format!("centre is not adjacent to rim vertex {}", self.rim[i]));
            }
            if g.multiplicity(self.rim[i], self.rim[(i + 1) % k]) == 0 {
                return domain(format!("rim vertices {} and {} are not adjacent", self.rim[i], self.rim[(i + 1) % k]));
            }
        }
        Ok(())
    }

    pub fn rim_len(&self) -> usize {
        self.rim.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.rim.iter().copied().chain([self.center]).collect()
    }

    /// One edge (the lowest id) per spoke and per rim edge.
    pub fn edge_ids(&self, g: &Multigraph) -> Vec<EdgeId> {
        let lowest = |a: VertexId, b: VertexId| {
            g.edges()
                .iter()
                .find(|e| (e.u == a && e.v == b) || (e.u == b && e.v == a))
                .map(|e| e.id)
                .expect("wheel edges are present")
        };
        let k = self.rim.len();
        let mut out: Vec<EdgeId> = (0..k)
            .flat_map(|i| [lowest(self.center, self.rim[i]), lowest(self.rim[i], self.rim[(i + 1) % k])])
            .collect();
        out.sort_unstable();
        out
    }
}

/// The first wheel of the requested parity: smallest centre, then the
/// lexicographically smallest rim starting at its least vertex. Parallel
/// edges are ignored.
pub fn find_wheel(g: &Multigraph, parity: WheelParity) -> Option<WheelWitness> {
    find_wheel_bounded(g, parity, usize::MAX)
}

/// As [`find_wheel`], restricted to rims of length at most `max_rim`.
pub fn find_wheel_bounded(g: &Multigraph, parity: WheelParity, max_rim: usize) -> Option<WheelWitness> {
    let d = g.dense();
    let adj: Vec<Vec<bool>> = (0..d.n).map(|a| (0..d.n).map(|b| d.mult(a, b) > 0).collect()).collect();
    for c in 0..d.n {
        let nbrs: Vec<usize> = (0..d.n).filter(|&x| adj[c][x]).collect();
        if nbrs.len() < 3 || !has_candidate_cycle(&adj, &nbrs, parity) {
            continue;
        }
        let mut path = Vec::new();
        let mut on_path = vec![false; d.n];
        for &s in &nbrs {
            path.push(s);
            on_path[s] = true;
            let hit = rim_search(&adj, &nbrs, parity, max_rim, &mut path, &mut on_path);
            on_path[s] = false;
            path.pop();
            if let Some(rim) = hit {
                let rim: Vec<VertexId> = rim.into_iter().map(|i| d.ids[i]).collect();
                return Some(WheelWitness { center: d.ids[c], odd: rim.len() % 2 == 1, rim });
            }
        }
    }
    None
}

/// Cheap filter: an odd rim needs a non-bipartite neighbourhood, any rim
/// needs a neighbourhood that is not a forest.
fn has_candidate_cycle(adj: &[Vec<bool>], nbrs: &[usize], parity: WheelParity) -> bool {
    let k = nbrs.len();
    let edges = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| adj[nbrs[i]][nbrs[j]]).count();
    let mut colour = vec![u8::MAX; k];
    let mut components = 0;
    let mut bipartite = true;
    for s in 0..k {
        if colour[s] != u8::MAX {
            continue;
        }
        components += 1;
        colour[s] = 0;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..k {
                if adj[nbrs[x]][nbrs[y]] {
                    if colour[y] == u8::MAX {
                        colour[y] = 1 - colour[x];
                        stack.push(y);
                    } else if colour[y] == colour[x] {
                        bipartite = false;
                    }
                }
            }
        }
    }
    let forest = edges + components == k;
    match parity {
        WheelParity::Odd => !bipartite,
        _ => !forest,
    }
}

fn rim_search(
    adj: &[Vec<bool>],
    nbrs: &[usize],
    parity: WheelParity,
    max_rim: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> Option<Vec<usize>> {
    let s = path[0];
    let x = *path.last().expect("nonempty path");
    let len = path.len();
    if len >= 3 && adj[x][s] && parity.accepts(len) && len <= max_rim {
        return Some(path.clone());
    }
    if len >= max_rim {
        return None;
    }
    for &y in nbrs {
        if y > s && !on_path[y] && adj[x][y] {
            path.push(y);
            on_path[y] = true;
            let hit = rim_search(adj, nbrs, parity, max_rim, path, on_path);
            on_path[y] = false;
            path.pop();
            if hit.is_some() {
                return hit;
            }
        }
    }
    None
}

/// An odd wheel with a partition `(X, Y)` of its vertices, one part being
/// two consecutive rim vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WContractionSpec {
    pub wheel: WheelWitness,
    pub x: VertexSet,
    pub y: VertexSet,
}

impl WContractionSpec {
    /// `X = {rim[i], rim[i + 1]}`, `Y` the rest of the wheel.
    pub fn adjacent_pair(wheel: WheelWitness, i: usize) -> Self {
        let k = wheel.rim.len();
        let x: VertexSet = [wheel.rim[i % k], wheel.rim[(i + 1) % k]].into_iter().collect();
        let y: VertexSet = wheel.vertex_set().iter().filter(|v| !x.contains(*v)).collect();
        WContractionSpec { wheel, x, y }
    }

    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        self.wheel.validate(g)?;
        if !self.wheel.odd {
            return domain("W-contraction needs an odd wheel");
        }
        if !self.x.is_disjoint(&self.y) || self.x.union(&self.y) != self.wheel.vertex_set() {
            return domain("X and Y must partition the wheel's vertices");
        }
        let k = self.wheel.rim.len();
        let is_rim_pair = |s: &VertexSet| {
            s.len() == 2 && (0..k).any(|i| s.contains(self.wheel.rim[i]) && s.contains(self.wheel.rim[(i + 1) % k]))
        };
        if !is_rim_pair(&self.x) && !is_rim_pair(&self.y) {
            return domain("one of X, Y must be two consecutive rim vertices");
        }
        let wheel_edges = 2 * k;
        if self.wheel.vertex_set().len() == g.order() && g.size() == wheel_edges {
            return domain("the wheel must be a proper subgraph");
        }
        Ok(())
    }
}

/// Deletes the wheel's edges, contracts `X` to `x` and `Y` to `y`, and adds
/// one edge `xy`.
pub fn w_contract(g: &Multigraph, spec: &WContractionSpec) -> Result<(Multigraph, ReductionTrace)> {
    spec.validate(g)?;
    let mut h = g.clone();
    for e in spec.wheel.edge_ids(g) {
        h.remove_edge(e);
    }
    let mut trace = ReductionTrace::identity(g);
    let ex = h.contract_in_place(&spec.x);
    let ey = h.contract_in_place(&spec.y);
    let (x, y) = (ex.into, ey.into);
    trace.record(ex);
    trace.record(ey);
    h.add_edge(x, y)?;
    Ok((h, trace))
}

/// Z3-connectivity verdicts keyed by canonical form, shareable across
/// threads and across graphs.
#[derive(Debug, Default)]
pub struct Z3Memo {
    verdicts: Mutex<HashMap<CanonicalForm, bool>>,
}

impl Z3Memo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.verdicts.lock().expect("memo lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_z3_connected(&self, g: &Multigraph) -> Result<bool> {
        let d = g.dense();
        let mult: Vec<u32> = (0..d.n * d.n).map(|k| d.mult(k / d.n, k % d.n)).collect();
        self.lookup(canonical_from_matrix(d.n, &mult).0)
    }

    fn lookup(&self, form: CanonicalForm) -> Result<bool> {
        if let Some(&v) = self.verdicts.lock().expect("memo lock").get(&form) {
            return Ok(v);
        }
        let verdict = is_z3_connected(&form.to_graph())?;
        self.verdicts.lock().expect("memo lock").insert(form, verdict);
        Ok(verdict)
    }

    fn induced_verdict(&self, d: &Dense, mask: u64) -> Result<bool> {
        let idx: Vec<usize> = (0..d.n).filter(|&i| mask >> i & 1 == 1).collect();
        let k = idx.len();
        let mut mult = vec![0u32; k * k];
        for a in 0..k {
            for b in 0..k {
                mult[a * k + b] = d.mult(idx[a], idx[b]);
            }
        }
        self.lookup(canonical_from_matrix(k, &mult).0)
    }
}

/// A vertex set `S` with `2 <= |S| <= size_cap` and `G[S]` Z3-connected.
pub fn find_z3_subgraph(g: &Multigraph, size_cap: usize) -> Result<Option<VertexSet>> {
    find_z3_subgraph_with(g, size_cap, &Z3Memo::new())
}

/// Search order: the lexicographically first digon, then the first even
/// wheel fitting under the cap, then induced subgraphs by increasing order,
/// each order in lexicographic order of vertex sets. Candidates must be
/// connected, bridgeless, of minimum degree 2 and have more edges than
/// vertices.
pub fn find_z3_subgraph_with(g: &Multigraph, size_cap: usize, memo: &Z3Memo) -> Result<Option<VertexSet>> {
    if size_cap < 2 {
        return domain("size cap must be at least 2");
    }
    let d = g.dense();
    for a in 0..d.n {
        for b in a + 1..d.n {
            if d.mult(a, b) >= 2 {
                return Ok(Some([d.ids[a], d.ids[b]].into_iter().collect()));
            }
        }
    }
    if size_cap >= 5 {
        if let Some(w) = find_wheel_bounded(g, WheelParity::Even, size_cap - 1) {
            return Ok(Some(w.vertex_set()));
        }
    }
    let top = size_cap.min(d.n);
    if top < 3 {
        return Ok(None);
    }
    if top > EXHAUSTIVE_CUT_LIMIT || d.n > 64 {
        return capability(format!(
            "induced-subgraph search is limited to subgraphs of order {EXHAUSTIVE_CUT_LIMIT} in graphs of order 64"
        ));
    }
    let nbr: Vec<u64> = (0..d.n).map(|a| d.nbr_mask(a)).collect();
    for k in 3..=top {
        let candidates: Vec<u64> = combinations(d.n, k).filter(|&m| plausible(&d, &nbr, m)).collect();
        let hit = par::find_first_map(&candidates, |&m| {
            memo.induced_verdict(&d, m).expect("order within limit").then_some(m)
        });
        if let Some(m) = hit {
            return Ok(Some(d.mask_to_set(m)));
        }
    }
    Ok(None)
}

/// `k`-subsets of `0..n` as bitmasks, in lexicographic order of their
/// sorted element lists.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    })
}

fn plausible(d: &Dense, nbr: &[u64], s: u64) -> bool {
    let members: Vec<usize> = (0..d.n).filter(|&i| s >> i & 1 == 1).collect();
    let mut edges = 0u32;
    for &a in &members {
        let deg: u32 = members.iter().map(|&b| d.mult(a, b)).sum();
        if deg < 2 {
            return false;
        }
        edges += deg;
    }
    if (edges / 2) as usize <= members.len() {
        return false;
    }
    if !connected_without(nbr, s, members[0], None) {
        return false;
    }
    // a simple edge inside S whose removal disconnects G[S] is a bridge
    members.iter().all(|&a| {
        members.iter().filter(|&&b| b > a && d.mult(a, b) == 1).all(|&b| connected_without(nbr, s, a, Some((a, b))))
    })
}

fn connected_without(nbr: &[u64], s: u64, start: usize, cut: Option<(usize, usize)>) -> bool {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let x = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let mut next = nbr[x] & s & !seen;
        if let Some((a, b)) = cut {
            if x == a {
                next &= !(1 << b);
            } else if x == b {
                next &= !(1 << a);
            }
        }
        seen |= next;
        frontier |= next;
    }
    seen == s
}

/// Contracts Z3-connected subgraphs of order at most `size_cap` until none
/// is left. The trace records whether the cap left part of the final graph
/// unexamined (`cap_binding`); otherwise the result is the
/// ⟨Z3⟩-reduction.
pub fn z3_reduce(g: &Multigraph, size_cap: usize) -> Result<(Multigraph, ReductionTrace)> {
    z3_reduce_with(g, size_cap, &Z3Memo::new())
}

pub fn z3_reduce_with(g: &Multigraph, size_cap: usize, memo: &Z3Memo) -> Result<(Multigraph, ReductionTrace)> {
    let mut h = g.clone();
    let mut trace = ReductionTrace::identity(g);
    while let Some(s) = find_z3_subgraph_with(&h, size_cap, memo)? {
        trace.record(h.contract_in_place(&s));
    }
    trace.size_cap = Some(size_cap);
    trace.cap_binding = size_cap < h.order();
    Ok((h, trace))
}

/// Reduction with a cap covering the whole graph.
pub fn z3_reduce_full(g: &Multigraph) -> Result<(Multigraph, ReductionTrace)> {
    z3_reduce(g, g.order().max(2))
}

/// True when no subgraph on two or more vertices is Z3-connected.
pub fn is_z3_reduced(g: &Multigraph) -> Result<bool> {
    Ok(find_z3_subgraph(g, g.order().max(2))?.is_none())
}

/// Outcome of a successful [`split_vertex`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub graph: Multigraph,
    pub lifted: (EdgeId, EdgeId),
    /// The new edge, or `None` when the pair was parallel and the loop it
    /// would form was discarded.
    pub added: Option<EdgeId>,
}

/// Finds a lift at `v` that keeps the odd-edge-connectivity `k`. Pairs with
/// distinct other endpoints are tried first, in lexicographic order of edge
/// ids. Only if none works are parallel pairs tried; lifting one of those
/// would form a loop, which is dropped, so the pair is simply deleted.
pub fn split_vertex(g: &Multigraph, v: VertexId, k: u64) -> Result<Option<Split>> {
    if !g.contains_vertex(v) {
        return domain(format!("vertex {v} is not in the graph"));
    }
    let deg = g.degree(v) as u64;
    if deg == 2 {
        return domain("splitting does not apply to a vertex of degree two");
    }
    if deg == k {
        return domain(format!("vertex {v} has degree equal to k = {k}"));
    }
    if deg < 2 {
        return domain(format!("vertex {v} has fewer than two incident edges"));
    }
    let actual = odd_edge_connectivity(g)?.map(|c| c.cut_size);
    if actual != Some(k) {
        return domain(format!("odd-edge-connectivity is {actual:?}, not {k}"));
    }
    let inc = g.incident_edges(v);
    let (mut proper, mut parallel) = (Vec::new(), Vec::new());
    for (i, &e1) in inc.iter().enumerate() {
        for &e2 in &inc[i + 1..] {
            let o1 = g.edge(e1).and_then(|e| e.other(v));
            let o2 = g.edge(e2).and_then(|e| e.other(v));
            if o1 != o2 {
                proper.push((e1, e2));
            } else {
                parallel.push((e1, e2));
            }
        }
    }
    let keeps = |h: &Multigraph| match odd_edge_connectivity(h).expect("order unchanged") {
        Some(c) => c.cut_size >= k,
        None => true,
    };
    let found = par::find_first_map(&proper, |&(e1, e2)| {
        let h = g.lift(v, e1, e2).expect("pair checked");
        keeps(&h).then(|| {
            let added = h.edges().last().expect("lift adds an edge").id;
            Split { graph: h, lifted: (e1, e2), added: Some(added) }
        })
    });
    if found.is_some() {
        return Ok(found);
    }
    Ok(par::find_first_map(&parallel, |&(e1, e2)| {
        let mut h = g.clone();
        h.remove_edge(e1);
        h.remove_edge(e2);
        keeps(&h).then_some(Split { graph: h, lifted: (e1, e2), added: None })
    }))
}

/// Splits even-degree vertices until every degree is odd. Isolated vertices
/// are deleted and a degree-2 vertex is replaced by an edge between its two
/// neighbours (or just deleted when both edges go to the same neighbour).
/// Returns `None` if some split finds no preserving pair.
pub fn eliminate_even_degrees(g: &Multigraph, k: u64) -> Result<Option<Multigraph>> {
    let mut h = g.clone();
    loop {
        let Some((&v, &deg)) = h.degrees().iter().find(|(_, &d)| d % 2 == 0) else {
            return Ok(Some(h));
        };
        match deg {
            0 => {
                h.remove_vertex(v);
            }
            2 => {
                let ends: Vec<VertexId> =
                    h.incident_edges(v).iter().filter_map(|&e| h.edge(e).and_then(|e| e.other(v))).collect();
                h.remove_vertex(v);
                if ends[0] != ends[1] {
                    h.add_edge(ends[0], ends[1])?;
                }
            }
            _ => match split_vertex(&h, v, k)? {
                Some(s) => h = s.graph,
                None => return Ok(None),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::catalog;
    use crate::connectivity::edge_connectivity;
    use crate::orientation::has_mod3_orientation;

    #[test]
    fn wheels_in_small_graphs() {
        let w = find_wheel(&catalog::complete(4), WheelParity::Any).unwrap();
        assert_eq!(w.center, VertexId(0));
        assert_eq!(w.rim, vec![VertexId(1), VertexId(2), VertexId(3)]);
        assert!(w.odd);
        assert!(find_wheel(&catalog::cycle(5), WheelParity::Any).is_none());
        let w = find_wheel(&catalog::g5(), WheelParity::Any).unwrap();
        assert_eq!(w.center, VertexId(5));
        assert_eq!(w.rim_len(), 5);
        assert!(find_wheel(&catalog::g5(), WheelParity::Even).is_none());
        let w = find_wheel(&catalog::wheel(6), WheelParity::Even).unwrap();
        assert_eq!(w.rim_len(), 6);
        assert!(find_wheel(&catalog::wheel(6), WheelParity::Odd).is_none());
        assert!(find_wheel_bounded(&catalog::wheel(6), WheelParity::Even, 5).is_none());
    }

    #[test]
    fn wheel_witness_validation() {
        let k4 = catalog::complete(4);
        assert!(WheelWitness::new(&k4, VertexId(0), vec![VertexId(1), VertexId(2)]).is_err());
        let c4 = catalog::cycle(4);
        assert!(WheelWitness::new(&c4, VertexId(0), vec![VertexId(1), VertexId(2), VertexId(3)]).is_err());
    }

    #[test]
    fn w_contraction_structure() {
        // K_4 plus a vertex joined to all of it: W3 on {0,1,2,3} is proper
        let mut g = catalog::complete(5);
        let wheel = WheelWitness::new(&g, VertexId(0), vec![VertexId(1), VertexId(2), VertexId(3)]).unwrap();
        let spec = WContractionSpec::adjacent_pair(wheel, 0);
        let (h, trace) = w_contract(&g, &spec).unwrap();
        assert_eq!(h.order(), 3);
        let x = trace.image_of(VertexId(1)).unwrap();
        let y = trace.image_of(VertexId(0)).unwrap();
        assert_eq!(trace.image_of(VertexId(2)), Some(x));
        assert_eq!(trace.image_of(VertexId(3)), Some(y));
        assert_eq!(h.multiplicity(x, y), 1);
        assert_eq!(h.multiplicity(x, VertexId(4)), 2);
        // a bare wheel is not proper
        g = catalog::complete(4);
        let wheel = WheelWitness::new(&g, VertexId(0), vec![VertexId(1), VertexId(2), VertexId(3)]).unwrap();
        assert!(w_contract(&g, &WContractionSpec::adjacent_pair(wheel, 0)).is_err());
    }

    #[test]
    fn w_contraction_rejects_bad_partitions() {
        let g = catalog::complete(5);
        let wheel = WheelWitness::new(&g, VertexId(0), vec![VertexId(1), VertexId(2), VertexId(3)]).unwrap();
        let spec = WContractionSpec { wheel: wheel.clone(), x: VertexSet::from([0, 1, 2]), y: VertexSet::from([3]) };
        assert!(w_contract(&g, &spec).is_err(), "neither side is a rim pair");
        let spec = WContractionSpec { wheel, x: VertexSet::from([1, 2]), y: VertexSet::from([0]) };
        assert!(w_contract(&g, &spec).is_err(), "not a partition");
    }

    #[test]
    fn z3_subgraph_examples() {
        let g = Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(find_z3_subgraph(&g, 10).unwrap(), Some(VertexSet::from([0, 1])));
        let mut g = catalog::wheel(4);
        let extra = g.add_vertex();
        g.add_edge(extra, VertexId(0)).unwrap();
        let s = find_z3_subgraph(&g, 10).unwrap().unwrap();
        assert_eq!(s, VertexSet::from([0, 1, 2, 3, 4]));
        assert_eq!(find_z3_subgraph(&catalog::g3(), 6).unwrap(), None);
        assert!(find_z3_subgraph(&g, 1).is_err());
    }

    #[test]
    fn k5_found_by_induced_search() {
        // K_5 contains W_4, found in the wheel phase
        assert_eq!(find_z3_subgraph(&catalog::complete(5), 5).unwrap().unwrap().len(), 5);
        assert_eq!(find_z3_subgraph(&catalog::complete(5), 4).unwrap(), None);
    }

    #[test]
    fn reduction_examples() {
        let (r, t) = z3_reduce(&catalog::complete(5), DEFAULT_SIZE_CAP).unwrap();
        assert_eq!((r.order(), r.size()), (1, 0));
        assert!(!t.cap_binding);
        assert!(t.image.values().all(|&v| v == r.vertices()[0]));
        let (r, _) = z3_reduce(&catalog::cycle(2), 2).unwrap();
        assert_eq!(r.order(), 1);
        let (r, t) = z3_reduce(&catalog::g3(), DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(r, catalog::g3());
        assert!(t.events.is_empty());
        let (_, t) = z3_reduce(&catalog::g3(), 3).unwrap();
        assert!(t.cap_binding);
    }

    #[test]
    fn reduced_catalog_graphs() {
        assert!(is_z3_reduced(&catalog::g3()).unwrap());
        assert!(is_z3_reduced(&catalog::complete(4)).unwrap());
        assert!(is_z3_reduced(&catalog::ore_exception(9).unwrap()).unwrap());
        assert!(!is_z3_reduced(&catalog::complete(5)).unwrap());
    }

    #[test]
    fn reduction_preserves_mod3_on_small_graphs() {
        let mut rng = crate::gen::instance_rng(11, 0);
        for _ in 0..60 {
            let g = crate::gen::random_multigraph(&mut rng, 6, 10);
            let (r, _) = z3_reduce_full(&g).unwrap();
            assert_eq!(has_mod3_orientation(&g), has_mod3_orientation(&r));
        }
    }

    #[test]
    fn reduction_order_does_not_matter() {
        // two digons sharing nothing, joined in a chain: any contraction
        // order ends at the same graph up to isomorphism
        let g = Multigraph::from_edges(5, &[(0, 1), (0, 1), (1, 2), (2, 3), (3, 4), (3, 4), (4, 0)]).unwrap();
        let (a, _) = z3_reduce_full(&g).unwrap();
        let mut h = g.clone();
        h.contract_in_place(&VertexSet::from([3, 4]));
        let (b, _) = z3_reduce_full(&h).unwrap();
        assert!(is_isomorphic(&a, &b));
    }

    #[test]
    fn split_examples() {
        // K_6 is 5-regular: odd-edge-connectivity 5. Doubling a perfect
        // matching's partner edges makes degree-6 vertices.
        let mut g = catalog::complete(6);
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        assert_eq!(odd_edge_connectivity(&g).unwrap().unwrap().cut_size, 5);
        let s = split_vertex(&g, VertexId(0), 5).unwrap().unwrap();
        assert_eq!(s.graph.degree(VertexId(0)), 4);
        assert!(odd_edge_connectivity(&s.graph).unwrap().unwrap().cut_size >= 5);
        assert!(split_vertex(&g, VertexId(2), 5).is_err(), "degree equals k");
        assert!(split_vertex(&g, VertexId(0), 3).is_err(), "wrong k");
        let c4 = catalog::cycle(4);
        assert!(split_vertex(&c4, VertexId(0), 2).is_err(), "degree two");
    }

    #[test]
    fn even_degree_elimination() {
        let mut g = catalog::complete(6);
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        let h = eliminate_even_degrees(&g, 5).unwrap().unwrap();
        assert!(h.degrees().values().all(|d| d % 2 == 1));
        assert_eq!(odd_edge_connectivity(&h).unwrap().unwrap().cut_size, 5);
        assert!(edge_connectivity(&h).unwrap().cut_size >= 1);
    }

    #[test]
    fn split_falls_back_to_parallel_pairs() {
        // vertex 1 has four edges, all to vertex 2
        let pairs = [(0, 2), (3, 0), (0, 3), (0, 2), (2, 0), (2, 3), (2, 1), (1, 2), (3, 0), (2, 1), (1, 2), (0, 3)];
        let g = Multigraph::from_edges(4, &pairs).unwrap();
        assert_eq!(odd_edge_connectivity(&g).unwrap().unwrap().cut_size, 5);
        let s = split_vertex(&g, VertexId(1), 5).unwrap().unwrap();
        assert_eq!(s.added, None);
        assert_eq!(s.graph.degree(VertexId(1)), 2);
        assert_eq!(s.graph.size(), g.size() - 2);
    }
}
