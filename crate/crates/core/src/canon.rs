//! Canonical forms for small multigraphs.
//!
//! Colour refinement followed by individualisation of the first smallest
//! non-singleton cell; the canonical form is the lexicographically least
//! relabelled multiplicity matrix over all leaves of the search tree. Two
//! vertices of a cell with identical rows outside themselves are swapped by
//! an automorphism that fixes the partition, so only one of them is
//! branched on.

use crate::graph::Multigraph;

/// Isomorphism-invariant encoding: the order plus the upper triangle of the
/// canonically relabelled multiplicity matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub order: u32,
    pub upper: Vec<u32>,
}

impl CanonicalForm {
    pub fn size(&self) -> u64 {
        self.upper.iter().map(|&m| m as u64).sum()
    }

    /// Rebuilds a graph on `0..order` with this form's adjacency.
    pub fn to_graph(&self) -> Multigraph {
        let n = self.order as usize;
        let mut pairs = Vec::new();
        let mut k = 0;
        for a in 0..n {
            for b in a + 1..n {
                for _ in 0..self.upper[k] {
                    pairs.push((a as u32, b as u32));
                }
                k += 1;
            }
        }
        Multigraph::from_edges(n, &pairs).expect("canonical forms are loopless")
    }
}

pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    let d = g.dense();
    let mult: Vec<u32> = (0..d.n * d.n).map(|k| d.mult(k / d.n, k % d.n)).collect();
    canonical_from_matrix(d.n, &mult).0
}

pub fn is_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

/// Canonical form of the symmetric `n × n` multiplicity matrix `mult`, and
/// the labelling `perm` (old index → canonical index) that realises it.
pub fn canonical_from_matrix(n: usize, mult: &[u32]) -> (CanonicalForm, Vec<usize>) {
    assert_eq!(mult.len(), n * n);
    let mut search = Search { n, mult, best: None };
    let cells = if n == 0 { Vec::new() } else { vec![(0..n).collect::<Vec<_>>()] };
    search.descend(cells);
    let (upper, perm) = search.best.unwrap_or_default();
    (CanonicalForm { order: n as u32, upper }, perm)
}

struct Search<'a> {
    n: usize,
    mult: &'a [u32],
    best: Option<(Vec<u32>, Vec<usize>)>,
}

impl Search<'_> {
    fn m(&self, a: usize, b: usize) -> u32 {
        self.mult[a * self.n + b]
    }

    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let mut cell_of = vec![0usize; self.n];
            for (c, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = c;
                }
            }
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<(usize, u32)>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig: Vec<(usize, u32)> =
                            (0..self.n).filter(|&w| self.m(v, w) > 0).map(|w| (cell_of[w], self.m(v, w))).collect();
                        sig.sort_unstable();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        (0..self.n).all(|w| w == u || w == v || self.m(u, w) == self.m(v, w))
    }

    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        let cells = self.refine(cells);
        let target =
            cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i)).map(|(i, _)| i);
        let Some(t) = target else {
            self.leaf(&cells);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[t] {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut branch = Vec::with_capacity(cells.len() + 1);
            branch.extend_from_slice(&cells[..t]);
            branch.push(vec![v]);
            branch.push(cells[t].iter().copied().filter(|&w| w != v).collect());
            branch.extend_from_slice(&cells[t + 1..]);
            self.descend(branch);
        }
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let mut perm = vec![0usize; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let mut inv = vec![0usize; self.n];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        let mut upper = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for a in 0..self.n {
            for b in a + 1..self.n {
                upper.push(self.m(inv[a], inv[b]));
            }
        }
        if self.best.as_ref().is_none_or(|(u, _)| upper < *u) {
            self.best = Some((upper, perm));
        }
    }
}
