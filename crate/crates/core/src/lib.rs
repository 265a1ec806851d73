//! Exact calculus for the F-representation type of two-dimensional graded
//! rings `R(P^1, D)` in characteristic `p`.
//!
//! The crate works entirely with exact integers and rationals and needs only
//! `alloc`. The pieces build on each other in this order:
//!
//! * [`qdiv`]: rational divisors on the projective line and the
//!   Pinkham–Demazure section ring (floors, Hilbert functions).
//! * [`picard`]: the Picard group of the weighted projective line attached
//!   to the fractional part of `D`, its degree map and canonical class.
//! * [`rootlattice`]: the star-shaped Kac–Moody lattice, Weyl reflections,
//!   root classification and positive-root enumeration in finite type.
//! * [`frobcalc`]: Frobenius push-forwards, their splitting types over `P^1`,
//!   their types in the extended root lattice, first Chern classes and slopes.
//! * [`elliptic`]: the degree-zero case through elliptic covers over finite
//!   fields, Hasse invariants and the summand census.
//! * [`decision`]: singularity classes, F-purity and FFRT verdicts.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod citation;
pub mod decision;
pub mod elliptic;
pub mod frobcalc;
pub mod picard;
pub mod qdiv;
pub mod rootlattice;

pub use arith::Rational;
pub use decision::{
    analyze, ffrt_verdict, fsplit_delta0, graded_piece_dims, singularity_class, AnalysisReport,
    AnalyzeOptions, FPurity, SingularityClass, Verdict, VerdictStatus,
};
pub use frobcalc::{OrbType, SplittingType};
pub use picard::{PicElement, Weights};
pub use qdiv::{IntegerDivisor, PointLabel, RationalDivisor};
pub use rootlattice::{HatVector, LatticeVector, RootClass, StarGraph, Vertex};
