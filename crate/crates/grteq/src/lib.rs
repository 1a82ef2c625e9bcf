//! Exact verification and construction of scaled associators and the
//! graded symmetry group acting on them.
//!
//! Everything is truncated power series over ℚ. A candidate is a scalar λ
//! paired with a group-like series Φ in two non-commuting letters; the
//! crate can
//!
//! - check the defining identities — involution, hexagon (with or without
//!   the λ-exponential factors), pentagon, and the five-cycle form in the
//!   five-strand sphere-braid algebra — by evaluating Φ on chord
//!   generators and reducing the defect to normal form
//!   ([`verify_grt1`], [`verify_associator`], [`verify_5cycle`]);
//! - check the cyclic-structure identities relating the strand-0/1
//!   transposition to argument substitutions
//!   ([`verify_cyclic_identities`]);
//! - construct solutions degree by degree in Lyndon coordinates with one
//!   sparse rational linear solve per degree ([`solve_degreewise`]);
//! - realize the group law, scalar rescaling, inverses, and the action on
//!   associator candidates, re-verifying every result ([`grt_mul`],
//!   [`grt_scale`], [`grt_inverse`], [`torsor_act`]);
//! - read and write elements in a deterministic plain-text format that is
//!   fully re-verified on load ([`grt_from_text`], [`associator_from_text`]).
//!
//! Every check reports an [`EquationCheck`] whose residual is the exact
//! normal form of LHS − RHS, so a pass is an identity up to the stated
//! degree, not a numerical statement.

mod cyclic;
mod element;
mod equations;
mod group;
mod report;
mod solver;

pub use cyclic::verify_cyclic_identities;
pub use element::{
    associator_from_text, associator_to_text, grt_from_text, grt_to_text, phi_algebra,
    random_grouplike, AssociatorCandidate, ElementError, GrtElement,
};
pub use equations::{
    phi_of, verify_5cycle, verify_associator, verify_associator_with, verify_grt1, HexagonRoute,
};
pub use group::{grt_inverse, grt_mul, grt_scale, torsor_act};
pub use report::{EquationCheck, EquationReport};
pub use solver::{solve_degreewise, DegreeSolution, SolveError, SolveOutcome, SolveTarget};
