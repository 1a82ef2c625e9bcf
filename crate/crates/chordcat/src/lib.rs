//! A strict tensor category of framed chord diagrams with a self-dual
//! generating object.
//!
//! Morphisms are rational combinations of layered words built from four
//! kinds of horizontal layers — cups, caps, strand permutations, and
//! chord slices valued in the framed infinitesimal-braid algebras — read
//! bottom to top.  The crate provides:
//!
//! * [`normalize`]: a two-phase rewriting engine (local rules, then
//!   strand-flow analysis) that brings words to a canonical form, erases
//!   zig-zags, evaluates closed loops by the counit, and rewrites
//!   cup–slice–cap sandwiches through the strand-rotation map;
//! * [`transpose`], [`nu_of`], [`rho_of`]: the duality transpose and the
//!   width-one cap corrections attached to a group-like series;
//! * [`grt_act`] and [`unknot_chain_verify`]: the action of certified
//!   scaling pairs on chord morphisms in both cap-correction variants,
//!   with a step-by-step report that the unknot value is fixed;
//! * [`morphism_to_text`] / [`morphism_from_text`]: a deterministic
//!   line-based interchange format.

mod action;
mod dual;
mod error;
mod layer;
mod morphism;
mod normalize;
mod object;
mod textio;

pub use action::{grt_act, unknot_chain_verify, ActionVariant};
pub use dual::{nu_of, rho_of, transpose};
pub use error::ChordError;
pub use layer::Layer;
pub use morphism::{compose, tensor, Morphism, Word};
pub use normalize::{
    normalize, normalize_seeded, normalize_with, Normalized, DEFAULT_WIDTH_BOUND,
};
pub use object::CObject;
pub use textio::{morphism_from_text, morphism_to_text};
