//! Explicit torus-polynomial constructions: modulus amplifiers, lifts of
//! finite-field polynomials, randomized distribution composition, dyadic
//! rounding to nonclassical polynomials, the bit-certificate lift, the
//! prime-sum delta approximators, and the majority-to-delta reduction.

pub mod acc;
pub mod amplifier;
pub mod delta;
pub mod distribution;
pub mod error;
pub mod lift;
pub mod majority;
pub mod rounding;

pub use acc::{acc_lift, AccCertificate};
pub use amplifier::modulus_amplifier;
pub use delta::{delta_construction, delta_prime_count};
pub use distribution::{compose_distribution, ComposeOptions, PolynomialDistribution};
pub use error::ConstructionError;
pub use lift::{force_boolean_range, lift_field_polynomial, lift_plan, LiftPlan};
pub use majority::{majority_to_delta, MajorityReduction};
pub use rounding::nonclassical_round;
