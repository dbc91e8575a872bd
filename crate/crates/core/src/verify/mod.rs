//! Executable checks: the r(n, Z3) table, family membership, nowhere-zero
//! 3-flow decisions through reduction, and seeded lemma sweeps.

pub mod acceptance;
pub mod family;
pub mod rtable;
pub mod sweep;

pub use family::{decide_nz3f, family_verdict, FamilyVerdict, Nz3fDecision};
pub use rtable::{r_table, r_value, RTableRow};
pub use sweep::{lemma_sweep, SweepReport, LEMMAS};
