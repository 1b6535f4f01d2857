//! Crystal combinatorics of aperiodic multisegments in affine type A.
//!
//! Multisegments — finite multisets of runs of consecutive residues modulo
//! `e` — carry two crystal structures (acting on segment tails and on
//! segment heads) whose interplay encodes the Kashiwara involution `∗`,
//! which coincides with the Zelevinsky involution `τ`. This crate computes:
//!
//! - the crystal operators, statistics and raising paths on `B_e(∞)`
//!   ([`infinity`]);
//! - the involutions `ρ`, `♯`, `τ` and `∗`, each by two independent routes;
//! - FLOTW multipartitions, the good-node crystal on `B_e(v)` and the
//!   embedding `f_v` into multisegments ([`fock`]);
//! - admissible multicharges and the inverse map `f_v⁻¹`
//!   ([`correspondence`]);
//! - the generalized Mullineux involution and the Kamnitzer–Tingley
//!   crystal commutor ([`involution`]);
//! - BFS crystal-graph generation with DOT/JSON export ([`graph`]) and an
//!   exhaustive invariant checker ([`selfcheck`]).
//!
//! All values are immutable and all operations are pure functions, so
//! everything can be shared freely across threads.

pub mod context;
pub mod correspondence;
pub mod error;
pub mod fock;
pub mod graph;
pub mod infinity;
pub mod involution;
pub mod json;
pub mod multicharge;
pub mod multisegment;
pub mod parse;
pub mod selfcheck;
pub mod tensor;
pub mod weight;

pub use context::{CrystalContext, Residue};
pub use error::Error;
pub use fock::MultiPartition;
pub use multicharge::Multicharge;
pub use multisegment::{Multisegment, Segment};
pub use weight::ClassicalWeight;
