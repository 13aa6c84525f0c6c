//! Symbolic model of `Pol(Mat_{2,2})_q`.
//!
//! Elements are linear combinations of *normal monomials*: every unstarred
//! letter to the left of every starred letter, each block sorted as
//! `z11 < z21 < z12 < z22`. The letter order
//!
//! ```text
//! z11 < z21 < z12 < z22 < z11* < z21* < z12* < z22*
//! ```
//!
//! turns each of the sixteen defining relations (and their adjoints) into a
//! rule that rewrites a descending adjacent pair into strictly smaller words
//! under the degree-lexicographic order, so reduction always terminates.

mod laurent;
mod polynomial;
mod relations;
mod rewrite;
mod word;

pub use laurent::LaurentPoly;
pub use polynomial::{NormalMonomial, NormalPolynomial};
pub use relations::{cross_identities, defining_relations, Relation, WordPolynomial};
pub use rewrite::{PolAlgebra, Strategy, DEFAULT_STEP_BUDGET};
pub use word::{parse_word, Generator, Letter, Word};
