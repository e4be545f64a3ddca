//! Exact sparse polynomials over the rationals, compatible monomial orders,
//! the Hibi-type generators and subduction.

mod generators;
mod monomial;
mod order;
mod plucker;
mod polynomial;
mod subduction;
mod text;

pub use generators::{hibi_generators, represent_initial, variable_names, Generator, GeneratorSet};
pub use monomial::Monomial;
pub use order::{compatible_order, order_from_extension, MonomialOrder};
pub use plucker::plucker_identity_check;
pub use polynomial::{rational, Polynomial};
pub use subduction::{subduction, subduction_with_cap, Step, Subduction, TraceSummary, DEFAULT_ITERATION_CAP};
pub use text::{parse_polynomial, to_text};
