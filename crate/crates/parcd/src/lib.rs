//! Parenthesized ribbon chord diagrams at finite truncation.
//!
//! Objects are maximally parenthesized permutations; every Hom-set between
//! objects of arity `n` is the group of group-like series over the framed
//! chord algebra on `n` strands. The crate provides the four generating
//! morphisms, categorical and operadic composition, the one-step rotation
//! of the marked boundary point, the scaling automorphisms attached to
//! `(lambda, Phi)` pairs together with their rotation-compatibility
//! battery, the images of the ribbon generators under an associator, and
//! the ribbon twist comparison that forces the braiding and twist
//! parameters to agree.

pub mod action;
pub mod generators;
pub mod morphism;
pub mod tree;

pub use action::{
    associator_cyclic_checks, associator_image, grt_automorphism, grt_cyclic_checks,
    grt_generator_image, ribbon_twist_check, scale_degrees, RibbonTag, RIBBON_TAGS,
};
pub use generators::{cyclic_act, generator, GeneratorTag, GENERATOR_TAGS};
pub use morphism::{
    compose, morphism_from_text, morphism_to_text, op_compose, MorphismError, ParcdMorphism,
};
pub use tree::{magma_compose, ParenTree, TreeError};
