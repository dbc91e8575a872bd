//! `r(n, Z3)`: the largest edge count of a ⟨Z3⟩-reduced graph of order `n`.
//!
//! Reduced graphs are simple (a digon is Z3-connected), so the search runs
//! over simple graphs only, by edge count from `n(n−1)/2` downwards. Each
//! level is deduplicated by canonical form before reducedness is tested and
//! the first level with a reduced class is the answer.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_from_matrix, is_isomorphic, CanonicalForm};
use crate::catalog;
use crate::error::{capability, Result};
use crate::graph::Multigraph;
use crate::io::to_graph6;
use crate::par;
use crate::reduction::{combinations, find_z3_subgraph_with, Z3Memo};

/// Known values for `n = 1..=7`.
pub const KNOWN_R: [usize; 7] = [0, 1, 3, 6, 8, 11, 13];

/// Largest order computed without the long-run opt-in.
pub const DEFAULT_MAX_ORDER: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RTableRow {
    pub n: usize,
    pub r: usize,
    /// Extremal graphs, one per isomorphism class, in graph6.
    pub extremal: Vec<String>,
    pub labeled_graphs_checked: u64,
    pub classes_checked: usize,
    /// Edge-deleted subgraphs of extremal graphs that were confirmed
    /// reduced, and how many were not.
    pub subgraph_checks: usize,
    pub subgraph_failures: usize,
    pub min_degree_max: usize,
}

fn class_graph(form: &CanonicalForm) -> Multigraph {
    form.to_graph()
}

fn is_reduced(g: &Multigraph, memo: &Z3Memo) -> bool {
    find_z3_subgraph_with(g, g.order().max(2), memo).expect("order within limit").is_none()
}

pub fn r_value(n: usize, allow_long: bool) -> Result<RTableRow> {
    r_value_with(n, allow_long, &Z3Memo::new())
}

fn r_value_with(n: usize, allow_long: bool, memo: &Z3Memo) -> Result<RTableRow> {
    let limit = if allow_long { 7 } else { DEFAULT_MAX_ORDER };
    if n == 0 || n > limit {
        return capability(format!("r(n, Z3) is supported for 1 <= n <= {limit} (n = 7 needs the long-run flag)"));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut labeled = 0u64;
    let mut classes = 0usize;
    for m in (0..=pairs.len()).rev() {
        let masks: Vec<u64> = combinations(pairs.len(), m).collect();
        labeled += masks.len() as u64;
        let forms = par::map_slice(&masks, |&mask| {
            let mut mult = vec![0u32; n * n];
            for (k, &(a, b)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    mult[a * n + b] = 1;
                    mult[b * n + a] = 1;
                }
            }
            canonical_from_matrix(n, &mult).0
        });
        let unique: Vec<CanonicalForm> = forms.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        classes += unique.len();
        let verdicts = par::map_slice(&unique, |f| is_reduced(&class_graph(f), memo));
        let extremal: Vec<Multigraph> =
            unique.iter().zip(verdicts).filter(|(_, r)| *r).map(|(f, _)| class_graph(f)).collect();
        if extremal.is_empty() {
            continue;
        }
        let mut checks = 0;
        let mut failures = 0;
        for g in &extremal {
            for e in g.edges() {
                let mut h = g.clone();
                h.remove_edge(e.id);
                checks += 1;
                if !is_reduced(&h, memo) {
                    failures += 1;
                }
            }
        }
        return Ok(RTableRow {
            n,
            r: m,
            extremal: extremal.iter().map(|g| to_graph6(g).expect("simple")).collect(),
            labeled_graphs_checked: labeled,
            classes_checked: classes,
            subgraph_checks: checks,
            subgraph_failures: failures,
            min_degree_max: extremal.iter().map(|g| g.min_degree()).max().unwrap_or(0),
        });
    }
    unreachable!("the edgeless graph is reduced")
}

/// Rows for `n = 1..=max_n`, sharing one memo.
pub fn r_table(max_n: usize, allow_long: bool) -> Result<Vec<RTableRow>> {
    let memo = Z3Memo::new();
    (1..=max_n).map(|n| r_value_with(n, allow_long, &memo)).collect()
}

/// True when the order-6 extremal class is exactly `G^3`.
pub fn extremal_is_g3(row: &RTableRow) -> bool {
    row.n == 6
        && row.extremal.len() == 1
        && crate::io::parse_graph6(&row.extremal[0]).is_ok_and(|g| is_isomorphic(&g, &catalog::g3()))
}
