//! Membership in the two exceptional families and the nowhere-zero
//! 3-flow decision through reduction.
//!
//! - `F1`: ⟨Z3⟩-reduced, no mod-3 orientation, `2 <= |V| <= 15`,
//!   `α <= 4` and `κ' <= 3`.
//! - `F2`: no mod-3 orientation and `14 <= |V| <= 20`.

use serde::{Deserialize, Serialize};

use crate::connectivity::{edge_connectivity, independence_number};
use crate::error::{capability, Result};
use crate::graph::{Multigraph, Orientation, ReductionTrace};
use crate::orientation::mod3_orientation;
use crate::reduction::{is_z3_reduced, z3_reduce_full};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEvidence {
    pub order: usize,
    pub has_mod3: bool,
    /// Not evaluated when the order already excludes `F1`.
    pub z3_reduced: Option<bool>,
    pub independence_number: Option<usize>,
    pub edge_connectivity: Option<u64>,
    pub f1_order: bool,
    pub f2_order: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyVerdict {
    pub in_f1: bool,
    pub in_f2: bool,
    pub evidence: FamilyEvidence,
    pub notes: Vec<String>,
}

pub fn family_verdict(g: &Multigraph) -> Result<FamilyVerdict> {
    let n = g.order();
    let has_mod3 = mod3_orientation(g).is_some();
    let f1_order = (2..=15).contains(&n);
    let f2_order = (14..=20).contains(&n);
    let (z3_reduced, alpha, kappa) = if f1_order {
        (Some(is_z3_reduced(g)?), Some(independence_number(g)?.0), Some(edge_connectivity(g)?.cut_size))
    } else {
        (None, None, None)
    };
    let in_f1 = f1_order
        && !has_mod3
        && z3_reduced == Some(true)
        && alpha.is_some_and(|a| a <= 4)
        && kappa.is_some_and(|k| k <= 3);
    let in_f2 = f2_order && !has_mod3;
    let notes = vec![
        "F2 is evaluated literally: no mod-3 orientation and order 14..=20, with no independence or connectivity condition"
            .to_string(),
    ];
    Ok(FamilyVerdict {
        in_f1,
        in_f2,
        evidence: FamilyEvidence {
            order: n,
            has_mod3,
            z3_reduced,
            independence_number: alpha,
            edge_connectivity: kappa,
            f1_order,
            f2_order,
        },
        notes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Nz3fDecision {
    pub has_flow: bool,
    /// A mod-3 orientation of the reduced graph.
    pub witness: Option<Orientation>,
    #[serde(with = "crate::io::json_graph")]
    pub reduced: Multigraph,
    pub trace: ReductionTrace,
}

/// Reduces with a full cap, then decides mod-3 orientability on the
/// reduction; the verdict transfers back to `g`.
pub fn decide_nz3f(g: &Multigraph) -> Result<Nz3fDecision> {
    let (reduced, trace) = z3_reduce_full(g)?;
    if trace.cap_binding {
        return capability("reduction did not complete under a full cap");
    }
    let witness = mod3_orientation(&reduced);
    Ok(Nz3fDecision { has_flow: witness.is_some(), witness, reduced, trace })
}
