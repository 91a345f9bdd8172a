//! Exact combinatorics of polyhedral divisors on curves and the singularities
//! of the affine varieties they describe.
//!
//! All arithmetic is over arbitrary-precision rationals. The modules build on
//! each other: [`polyhedral`] (cones, tailed polyhedra, chamber fans), [`curve`]
//! (curve models and Q-divisors), [`pdiv`] (polyhedral divisors, properness),
//! [`classify`] (singularity verdicts), [`toric`], [`section_ring`] and [`io`].

pub mod classify;
pub mod curve;
pub mod error;
pub mod io;
pub mod linalg;
pub mod lp;
pub mod pdiv;
pub mod polyhedral;
pub mod rat;
pub mod section_ring;
pub mod toric;

pub use classify::{classify_report, ClassificationReport, FloorBound, Status, Verdict};
pub use curve::{CurveModel, CurvePoint, Decision, QDivisor, Torsion};
pub use error::{Error, Result};
pub use io::{parse_input, Format, ProblemSpec};
pub use pdiv::{Base, PolyhedralDivisor, PrimeDivisor, Properness, Violation};
pub use polyhedral::{ChamberFan, Cone, SupportValue, TailedPolyhedron};
pub use rat::{LatticeVec, Rat, RatVec};
