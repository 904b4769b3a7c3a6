//! Exact computation of toroidal approximation degree on small instances:
//! offset-enumerating branch-and-bound over exact-rational linear
//! feasibility, plus the coefficient-snapping and counting machinery behind
//! the symmetric lower bound.

pub mod census;
pub mod error;
pub mod feasibility;
pub mod fm;
pub mod problem;
pub mod snap;

pub use census::{approximated_functions, counting_lower_bound};
pub use error::OracleError;
pub use feasibility::{
    exact_degree, feasibility, DegreeCertificate, FeasibilityOutcome, FeasibilityWitness,
    InfeasibilityRecord,
};
pub use problem::{ApproximationProblem, Basis, OracleCaps, Target};
pub use snap::{snap_coefficients, snap_error_bound, SnappedPolynomial};
