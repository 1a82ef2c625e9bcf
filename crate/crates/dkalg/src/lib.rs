//! Quotient presentations of chord-diagram algebras and their structure.
//!
//! This crate takes the free truncated series of `freealg` and imposes the
//! defining ideals of the chord-diagram presentations: planar (framed and
//! unframed), spherical, and sphere-braid. It provides
//!
//! * the defining [`relation_set`] of each presentation, verbatim;
//! * deterministic per-degree normal forms ([`NormalFormTable`],
//!   [`normal_form`]) computed by exact echelon reduction of the ideal,
//!   with in-process memoization and optional on-disk caching;
//! * graded dimensions of the quotients ([`degree_dimension`]);
//! * the symmetric-group action ([`permute`]), the output/strand-1
//!   transposition ([`transposition01`]), and the cyclic rotation
//!   ([`cyclic_rotate`]) in two cross-checking strategies;
//! * operadic insertion ([`operad_insert`], [`operad_insert_lie`]) and
//!   the comparison map to the sphere-braid presentation
//!   ([`to_sphere_braid`]);
//! * group-likeness modulo the ideal ([`is_grouplike_nf`]).
//!
//! Everything is exact rational arithmetic; every reduction is reduced
//! row echelon form, hence unique and independent of evaluation order.

mod ops;
mod relations;
mod table;

pub use ops::{
    cyclic_rotate, insertion_inner_map, insertion_outer_map, is_grouplike_nf, operad_insert,
    operad_insert_lie, permute, rotation_strategy, rotation_strategy_names, to_sphere_braid,
    transposition01, RotationStrategy,
};
pub use relations::relation_set;
pub use table::{cache_dir, set_cache_dir, NormalFormTable, TABLE_FORMAT_VERSION};

use freealg::{PresentationId, Series};

/// Canonical representative of `s` modulo its presentation's ideal, using
/// the memoized table for `(algebra, truncation)`.
pub fn normal_form(s: &Series) -> Series {
    NormalFormTable::get(s.algebra(), s.trunc()).normal_form(s)
}

/// Dimension of the degree-`d` slice of the quotient algebra of `p`.
pub fn degree_dimension(p: PresentationId, d: usize) -> usize {
    NormalFormTable::get(p, d).dimension(d)
}
