//! Loopless multigraphs with stable vertex and edge identities.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> Option<VertexId> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn is_incident(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    fn key(&self) -> (VertexId, VertexId) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// A subset of a graph's vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        self.0.insert(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[u32; N]> for VertexSet {
    fn from(ids: [u32; N]) -> Self {
        ids.into_iter().map(VertexId).collect()
    }
}

/// Loopless multigraph. Vertex ids are kept sorted, edges are kept sorted by
/// id, and neither kind of id is ever reused by operations on this value.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    next_vertex: u32,
    next_edge: u32,
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// `n` isolated vertices with ids `0..n`.
    pub fn with_vertices(n: usize) -> Self {
        Multigraph {
            vertices: (0..n as u32).map(VertexId).collect(),
            edges: Vec::new(),
            next_vertex: n as u32,
            next_edge: 0,
        }
    }

    /// Vertices `0..n`, edges numbered in input order.
    pub fn from_edges(n: usize, pairs: &[(u32, u32)]) -> Result<Self> {
        let mut g = Self::with_vertices(n);
        for &(u, v) in pairs {
            g.add_edge(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let id = VertexId(self.next_vertex);
        self.next_vertex += 1;
        self.vertices.push(id);
        id
    }

    /// Inserts a vertex with an explicit id (used by importers).
    pub fn insert_vertex(&mut self, id: VertexId) -> Result<()> {
        match self.vertices.binary_search(&id) {
            Ok(_) => domain(format!("duplicate vertex id {id}")),
            Err(pos) => {
                self.vertices.insert(pos, id);
                self.next_vertex = self.next_vertex.max(id.0 + 1);
                Ok(())
            }
        }
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let id = EdgeId(self.next_edge);
        self.insert_edge(id, u, v)?;
        Ok(id)
    }

    /// Inserts an edge with an explicit id (used by importers).
    pub fn insert_edge(&mut self, id: EdgeId, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(Error::Loop { location: format!("edge {id} at vertex {u}") });
        }
        if !self.contains_vertex(u) || !self.contains_vertex(v) {
            return domain(format!("edge {id} has an endpoint outside the vertex set"));
        }
        match self.edges.binary_search_by_key(&id, |e| e.id) {
            Ok(_) => domain(format!("duplicate edge id {id}")),
            Err(pos) => {
                self.edges.insert(pos, Edge { id, u, v });
                self.next_edge = self.next_edge.max(id.0 + 1);
                Ok(())
            }
        }
    }

    pub fn remove_edge(&mut self, id: EdgeId) -> Option<Edge> {
        let pos = self.edges.binary_search_by_key(&id, |e| e.id).ok()?;
        Some(self.edges.remove(pos))
    }

    /// Removes `v` and every edge incident to it.
    pub fn remove_vertex(&mut self, v: VertexId) -> bool {
        match self.vertices.binary_search(&v) {
            Ok(pos) => {
                self.vertices.remove(pos);
                self.edges.retain(|e| !e.is_incident(v));
                true
            }
            Err(_) => false,
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.binary_search_by_key(&id, |e| e.id).ok().map(|p| &self.edges[p])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.is_incident(v)).count()
    }

    pub fn degrees(&self) -> BTreeMap<VertexId, usize> {
        let mut d: BTreeMap<VertexId, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for e in &self.edges {
            *d.get_mut(&e.u).expect("endpoint") += 1;
            *d.get_mut(&e.v).expect("endpoint") += 1;
        }
        d
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().values().copied().min().unwrap_or(0)
    }

    pub fn incident_edges(&self, v: VertexId) -> Vec<EdgeId> {
        self.edges.iter().filter(|e| e.is_incident(v)).map(|e| e.id).collect()
    }

    /// Distinct neighbours of `v`, ascending.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let set: BTreeSet<VertexId> = self.edges.iter().filter_map(|e| e.other(v)).collect();
        set.into_iter().collect()
    }

    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.key() == (u.min(v), u.max(v))).count()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(e.key()))
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.first() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for e in &self.edges {
                if let Some(y) = e.other(x) {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    fn check_subset(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| !self.contains_vertex(v)) {
            Some(v) => domain(format!("vertex {v} is not in the graph")),
            None => Ok(()),
        }
    }

    /// Edges with exactly one endpoint in `s`.
    pub fn boundary_edges(&self, s: &VertexSet) -> Result<Vec<EdgeId>> {
        self.check_subset(s)?;
        if s.is_empty() || s.len() == self.order() {
            return domain("boundary of an empty or full vertex set");
        }
        Ok(self.edges.iter().filter(|e| s.contains(e.u) != s.contains(e.v)).map(|e| e.id).collect())
    }

    /// Edges with one endpoint in `a` and the other in `b`.
    pub fn cross_edges(&self, a: &VertexSet, b: &VertexSet) -> Result<Vec<EdgeId>> {
        self.check_subset(a)?;
        self.check_subset(b)?;
        if !a.is_disjoint(b) {
            return domain("cross edges between overlapping vertex sets");
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| (a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u)))
            .map(|e| e.id)
            .collect())
    }

    /// Number of edges with both endpoints in `s`.
    pub fn inner_edge_count(&self, s: &VertexSet) -> usize {
        self.edges.iter().filter(|e| s.contains(e.u) && s.contains(e.v)).count()
    }

    /// Merges `s` into one fresh vertex. Edges inside `s` disappear (they
    /// would be loops); every other edge keeps its id.
    pub fn contract(&self, s: &VertexSet) -> Result<(Multigraph, ReductionTrace)> {
        self.check_subset(s)?;
        if s.is_empty() {
            return domain("contraction of an empty vertex set");
        }
        let mut out = self.clone();
        let event = out.contract_in_place(s);
        let mut trace = ReductionTrace::identity(self);
        trace.record(event);
        Ok((out, trace))
    }

    pub(crate) fn contract_in_place(&mut self, s: &VertexSet) -> ContractionEvent {
        let into = VertexId(self.next_vertex);
        self.next_vertex += 1;
        self.vertices.retain(|v| !s.contains(*v));
        self.vertices.push(into);
        self.edges.retain(|e| !(s.contains(e.u) && s.contains(e.v)));
        for e in &mut self.edges {
            if s.contains(e.u) {
                e.u = into;
            }
            if s.contains(e.v) {
                e.v = into;
            }
        }
        ContractionEvent { merged: s.to_vec(), into }
    }

    /// Replaces the edges `e1 = u1 v` and `e2 = u2 v` by a fresh edge `u1 u2`.
    pub fn lift(&self, v: VertexId, e1: EdgeId, e2: EdgeId) -> Result<Multigraph> {
        if e1 == e2 {
            return domain("lifting needs two distinct edges");
        }
        let (Some(a), Some(b)) = (self.edge(e1), self.edge(e2)) else {
            return domain("lifting an edge that is not in the graph");
        };
        let (Some(u1), Some(u2)) = (a.other(v), b.other(v)) else {
            return domain(format!("lifted edges must both be incident to {v}"));
        };
        if u1 == u2 {
            return Err(Error::Loop { location: format!("lift of parallel edges {e1}, {e2} at {v}") });
        }
        let mut out = self.clone();
        out.remove_edge(e1);
        out.remove_edge(e2);
        out.add_edge(u1, u2)?;
        Ok(out)
    }

    /// Same vertices, one edge (the lowest id) per adjacent pair.
    pub fn underlying_simple(&self) -> Multigraph {
        let mut seen = BTreeSet::new();
        let mut out = self.clone();
        out.edges.retain(|e| seen.insert(e.key()));
        out
    }

    /// Subgraph induced on `s`; ids are preserved.
    pub fn induced(&self, s: &VertexSet) -> Multigraph {
        Multigraph {
            vertices: self.vertices.iter().copied().filter(|v| s.contains(*v)).collect(),
            edges: self.edges.iter().copied().filter(|e| s.contains(e.u) && s.contains(e.v)).collect(),
            next_vertex: self.next_vertex,
            next_edge: self.next_edge,
        }
    }

    /// Relabels vertices to `0..n` in ascending id order and edges to
    /// `0..m` in ascending id order.
    pub fn compacted(&self) -> Multigraph {
        let d = self.dense();
        let pairs: Vec<(u32, u32)> = d.edges.iter().map(|&(a, b)| (a as u32, b as u32)).collect();
        Multigraph::from_edges(d.n, &pairs).expect("compaction preserves validity")
    }

    pub fn dense(&self) -> Dense {
        Dense::new(self)
    }
}

/// Index-based snapshot of a multigraph: vertex `i` is `ids[i]`, edge `k`
/// is `edge_ids[k]` with endpoints `edges[k]`.
#[derive(Clone, Debug)]
pub struct Dense {
    pub n: usize,
    pub ids: Vec<VertexId>,
    pub edge_ids: Vec<EdgeId>,
    pub edges: Vec<(usize, usize)>,
    pub deg: Vec<u32>,
    mult: Vec<u32>,
}

impl Dense {
    fn new(g: &Multigraph) -> Self {
        let n = g.order();
        let ids = g.vertices.clone();
        let mut mult = vec![0u32; n * n];
        let mut deg = vec![0u32; n];
        let mut edges = Vec::with_capacity(g.size());
        let mut edge_ids = Vec::with_capacity(g.size());
        for e in &g.edges {
            let a = ids.binary_search(&e.u).expect("endpoint");
            let b = ids.binary_search(&e.v).expect("endpoint");
            mult[a * n + b] += 1;
            mult[b * n + a] += 1;
            deg[a] += 1;
            deg[b] += 1;
            edges.push((a, b));
            edge_ids.push(e.id);
        }
        Dense { n, ids, edge_ids, edges, deg, mult }
    }

    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub fn mult(&self, a: usize, b: usize) -> u32 {
        self.mult[a * self.n + b]
    }

    /// Neighbour bitmask of `a`; requires `n <= 64`.
    pub fn nbr_mask(&self, a: usize) -> u64 {
        debug_assert!(self.n <= 64);
        (0..self.n).filter(|&b| self.mult(a, b) > 0).fold(0u64, |m, b| m | (1 << b))
    }

    /// `|∂(S)|` for the index set `mask`; requires `n <= 64`.
    pub fn cut_of_mask(&self, mask: u64) -> u64 {
        let mut cut = 0u64;
        for a in 0..self.n {
            if mask >> a & 1 == 1 {
                for b in 0..self.n {
                    if mask >> b & 1 == 0 {
                        cut += self.mult(a, b) as u64;
                    }
                }
            }
        }
        cut
    }

    pub fn mask_to_set(&self, mask: u64) -> VertexSet {
        (0..self.n).filter(|&i| mask >> i & 1 == 1).map(|i| self.ids[i]).collect()
    }

    pub fn set_to_mask(&self, s: &VertexSet) -> u64 {
        s.iter().filter_map(|v| self.index_of(v)).fold(0, |m, i| m | (1u64 << i))
    }
}

/// Per-edge direction assignment.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orientation {
    arcs: BTreeMap<EdgeId, (VertexId, VertexId)>,
}

impl Orientation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, e: EdgeId, tail: VertexId, head: VertexId) {
        self.arcs.insert(e, (tail, head));
    }

    pub fn arc(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.arcs.get(&e).copied()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.arcs.iter().map(|(&e, &(t, h))| (e, t, h))
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn reversed(&self) -> Orientation {
        Orientation { arcs: self.arcs.iter().map(|(&e, &(t, h))| (e, (h, t))).collect() }
    }

    /// Checks that every edge of `g` is oriented exactly once along its own
    /// endpoints.
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        if self.arcs.len() != g.size() {
            return domain("orientation does not cover every edge exactly once");
        }
        for e in g.edges() {
            match self.arcs.get(&e.id) {
                Some(&(t, h)) if (t, h) == (e.u, e.v) || (t, h) == (e.v, e.u) => {}
                _ => return domain(format!("edge {} is not oriented along its endpoints", e.id)),
            }
        }
        Ok(())
    }

    /// `d⁺(v) − d⁻(v)` for every vertex of `g`.
    pub fn imbalance(&self, g: &Multigraph) -> BTreeMap<VertexId, i64> {
        let mut out: BTreeMap<VertexId, i64> = g.vertices().iter().map(|&v| (v, 0)).collect();
        for (_, t, h) in self.arcs() {
            *out.entry(t).or_default() += 1;
            *out.entry(h).or_default() -= 1;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionEvent {
    pub merged: Vec<VertexId>,
    pub into: VertexId,
}

/// Contraction history from an original graph to its current image.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub events: Vec<ContractionEvent>,
    /// original vertex → vertex of the final graph
    pub image: BTreeMap<VertexId, VertexId>,
    /// Largest subgraph order the reduction searched, when produced by a
    /// capped reduction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size_cap: Option<usize>,
    /// True when the cap did not cover the final graph, so reducedness is
    /// certified only for subgraphs within the cap.
    #[serde(default)]
    pub cap_binding: bool,
}

impl ReductionTrace {
    pub fn identity(g: &Multigraph) -> Self {
        ReductionTrace {
            events: Vec::new(),
            image: g.vertices().iter().map(|&v| (v, v)).collect(),
            size_cap: None,
            cap_binding: false,
        }
    }

    pub fn record(&mut self, event: ContractionEvent) {
        for img in self.image.values_mut() {
            if event.merged.contains(img) {
                *img = event.into;
            }
        }
        self.events.push(event);
    }

    /// Appends a trace whose originals are this trace's images.
    pub fn extend(&mut self, later: ReductionTrace) {
        for ev in later.events {
            self.record(ev);
        }
    }

    pub fn image_of(&self, v: VertexId) -> Option<VertexId> {
        self.image.get(&v).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: u32) -> Multigraph {
        let mut pairs = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                pairs.push((a, b));
            }
        }
        Multigraph::from_edges(n as usize, &pairs).unwrap()
    }

    fn cycle(n: u32) -> Multigraph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::from_edges(n as usize, &pairs).unwrap()
    }

    #[test]
    fn loops_are_rejected() {
        let mut g = Multigraph::with_vertices(2);
        assert!(matches!(g.add_edge(VertexId(1), VertexId(1)), Err(Error::Loop { .. })));
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        assert_eq!(g.multiplicity(VertexId(1), VertexId(0)), 2);
        assert!(!g.is_simple());
    }

    #[test]
    fn boundary_examples() {
        let k4 = k(4);
        assert_eq!(k4.boundary_edges(&VertexSet::from([2])).unwrap().len(), 3);
        let c4 = cycle(4);
        assert_eq!(c4.boundary_edges(&VertexSet::from([0, 1])).unwrap().len(), 2);
        assert!(c4.boundary_edges(&VertexSet::new()).is_err());
        assert!(c4.boundary_edges(&VertexSet::from([0, 1, 2, 3])).is_err());
    }

    #[test]
    fn cross_edge_examples() {
        let k4 = k(4);
        assert_eq!(k4.cross_edges(&VertexSet::from([0]), &VertexSet::from([1])).unwrap().len(), 1);
        let digon = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(digon.cross_edges(&VertexSet::from([0]), &VertexSet::from([1])).unwrap().len(), 2);
        assert!(k4.cross_edges(&VertexSet::from([0, 1]), &VertexSet::from([1])).is_err());
    }

    #[test]
    fn contraction_examples() {
        let (g, trace) = cycle(3).contract(&VertexSet::from([0, 1])).unwrap();
        assert_eq!((g.order(), g.size()), (2, 2));
        assert_eq!(trace.image_of(VertexId(0)), trace.image_of(VertexId(1)));
        assert_eq!(trace.image_of(VertexId(2)), Some(VertexId(2)));

        let digon = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let (g, _) = digon.contract(&VertexSet::from([0, 1])).unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));

        let (g, trace) = k(4).contract(&VertexSet::from([0, 1, 2])).unwrap();
        assert_eq!((g.order(), g.size()), (2, 3));
        let merged = trace.image_of(VertexId(0)).unwrap();
        assert_eq!(g.multiplicity(merged, VertexId(3)), 3);
        assert!(!g.vertices().contains(&VertexId(0)), "merged ids are fresh");
    }

    #[test]
    fn contraction_keeps_edge_ids() {
        let g = k(4);
        let (h, _) = g.contract(&VertexSet::from([0, 1])).unwrap();
        let ids: Vec<_> = h.edges().iter().map(|e| e.id.0).collect();
        // edge 0 is 0-1 and disappears
        assert_eq!(ids, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn lift_examples() {
        let star = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let g = star.lift(VertexId(0), EdgeId(0), EdgeId(1)).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.multiplicity(VertexId(1), VertexId(2)), 1);
        assert_eq!(g.degree(VertexId(0)), 1);

        let c4 = cycle(4);
        let g = c4.lift(VertexId(0), EdgeId(0), EdgeId(3)).unwrap();
        assert_eq!(g.degree(VertexId(0)), 0);
        g.clone().remove_vertex(VertexId(0));
        assert_eq!(g.multiplicity(VertexId(1), VertexId(3)), 1);

        let digon = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(matches!(digon.lift(VertexId(0), EdgeId(0), EdgeId(1)), Err(Error::Loop { .. })));
        assert!(c4.lift(VertexId(0), EdgeId(0), EdgeId(1)).is_err(), "edge 1 is not at vertex 0");
    }

    #[test]
    fn lift_in_wheel_creates_parallel_rim_edge() {
        // W5: center 5, rim 0..5
        let mut pairs: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        pairs.extend((0..5).map(|i| (5, i)));
        let w5 = Multigraph::from_edges(6, &pairs).unwrap();
        let g = w5.lift(VertexId(5), EdgeId(5), EdgeId(6)).unwrap();
        assert_eq!(g.multiplicity(VertexId(0), VertexId(1)), 2);
        assert_eq!(g.degree(VertexId(5)), 3);
    }

    #[test]
    fn underlying_simple_examples() {
        let digon = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(digon.underlying_simple().size(), 1);
        assert_eq!(k(4).underlying_simple(), k(4));
        let tri = Multigraph::from_edges(3, &[(0, 1), (1, 2), (2, 0), (1, 0)]).unwrap();
        let s = tri.underlying_simple();
        assert_eq!(s.size(), 3);
        assert_eq!(s.underlying_simple(), s);
    }

    #[test]
    fn orientation_validation() {
        let g = cycle(3);
        let mut o = Orientation::new();
        o.set(EdgeId(0), VertexId(0), VertexId(1));
        o.set(EdgeId(1), VertexId(1), VertexId(2));
        assert!(o.validate(&g).is_err());
        o.set(EdgeId(2), VertexId(2), VertexId(0));
        o.validate(&g).unwrap();
        assert!(o.imbalance(&g).values().all(|&x| x == 0));
        o.set(EdgeId(2), VertexId(1), VertexId(0));
        assert!(o.validate(&g).is_err());
    }
}
