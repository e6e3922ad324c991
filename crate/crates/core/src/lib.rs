//! Exact Newton polyhedra of monomial ideals and the invariants read off
//! them: analytic spread, the halfspace/hyperplane spread bound, basic
//! ideals, reductions and minimal monomial reductions.

pub mod error;
pub mod monomial;
pub mod oracle;
pub mod polyhedral;
pub mod qlinalg;
pub mod spread;

pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialIdeal, PrimaryComponent, Ring};
pub use polyhedral::{Constraint, Face, HRep, NormalCone, Polyhedron, VRep};
pub use qlinalg::{QMatrix, QVector, Rational};
pub use spread::{
    analytic_spread, check_reduction, is_basic, minimal_monomial_reduction, spread_bound, BasicReport,
    BoundReport, FamilyReport, ReductionReport, SpreadReport,
};
