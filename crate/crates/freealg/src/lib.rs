//! Truncated noncommutative power series over the exact rationals.
//!
//! A [`Series`] is a finite rational linear combination of words in degree-1
//! generators, truncated above a fixed degree. Arithmetic is the free
//! (word-concatenation) product; quotient presentations are handled by the
//! downstream chord-algebra crate, which reduces free representatives to
//! normal form. All coefficients are exact rationals and all maps iterate
//! in a canonical (degree-lexicographic) order, so every operation here is
//! bit-deterministic.
//!
//! The crate also provides the combinatorial backbone used elsewhere in
//! the workspace: Lyndon words with their standard-factorization
//! bracketings (a basis of the free Lie algebra), the subset-split
//! coproduct underlying group-likeness tests, and a plain-text series
//! format with a bit-exact round trip.

mod generator;
mod lyndon;
mod monomial;
mod series;
mod textio;

pub use generator::{GeneratorId, PresentationId};
pub use lyndon::{lyndon_bracketing, lyndon_words, standard_factorization};
pub use monomial::Monomial;
pub use series::Series;
pub use textio::{series_from_text, series_to_text, TextError};

pub use ratmat::{rat, Rat};
