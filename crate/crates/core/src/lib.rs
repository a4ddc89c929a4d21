//! Parking functions, parking graphs and regions of the Shi arrangement,
//! with the bijections between them and an exact feasibility oracle.
//!
//! The three families on `[n]` all have `(n+1)^(n-1)` members:
//!
//! * [`ParkingFunction`]s, recognized by simulation or by the sorted criterion;
//! * [`ParkingGraph`]s, complete mixed graphs satisfying the source-sink condition;
//! * regions of the Shi arrangement `x_j - x_k = 0, 1`, described by a
//!   [`RegionSignVector`] and certified by a rational interior [`Witness`].
//!
//! [`phi`] and [`phi_inverse`] connect graphs and parking functions, [`psi`]
//! and [`psi_inverse`] connect graphs and regions, and [`pak_stanley_label`]
//! is the composite. The [`cayley`] module adds labeled trees via Prüfer and
//! Pollak codes.
//!
//! All geometry is generic over an exact [`Scalar`]; [`Rational`] is the
//! default.

pub mod bijection;
pub mod cayley;
pub mod error;
pub mod geometry;
pub mod json;
pub mod mixed;
pub mod pairs;
mod parallel;
pub mod pf;
pub mod scalar;
pub mod verify;

pub use bijection::{
    pak_stanley_label, pak_stanley_label_of_point, phi, phi_inverse, psi, psi_inverse, psi_inverse_point,
    AlgorithmTrace, PhiInverse, SourcePriorityVector, TraceEvent,
};
pub use error::{Error, Result};
pub use geometry::{DifferenceSystem, Point, RegionSignVector, Sign, Witness};
pub use mixed::{EdgeKind, MixedGraph, ParkingGraph, Violation, ViolationKind};
pub use pf::{ParkingFunction, ParkingOutcome};
pub use scalar::Scalar;

/// Arbitrary-precision rationals; the default scalar.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals, for callers who know their coordinates stay small.
pub type Rational64 = num_rational::Rational64;

pub type RationalPoint = Point<Rational>;
pub type RationalWitness = Witness<Rational>;
pub type RationalSystem = DifferenceSystem<Rational>;
