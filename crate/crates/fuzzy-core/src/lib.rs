//! Mamdani fuzzy inference.
//!
//! Triangular membership functions, linguistic variables, conjunctive
//! IF-THEN rules with min implication and max aggregation, and centroid
//! defuzzification by fixed-step numeric integration over the output domain.
//!
//! Everything is immutable once built, so a [`Fis`] can be shared freely
//! between threads.

mod defuzz;
mod error;
mod fis;
mod membership;
mod rulebase;
mod variable;

pub use defuzz::{defuzzify_centroid, SampledCurve, DEFAULT_STEP};
pub use error::FuzzyError;
pub use fis::{Fis, FuzzyRule};
pub use membership::{tri_membership, TriangularMf};
pub use rulebase::{RuleFile, RuleSpec, TermSpec, VariableSpec};
pub use variable::{uniform_partition, LinguisticVariable, Term};
