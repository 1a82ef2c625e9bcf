//! Error type shared across the chord-category modules.

use freealg::PresentationId;
use thiserror::Error;

use crate::object::CObject;

/// Everything that can go wrong while building, rewriting, or parsing
/// layered chord morphisms.
#[derive(Debug, Error)]
pub enum ChordError {
    /// A layer's position or data is invalid at the width where it sits.
    #[error("layer {index} is invalid at width {width}: {reason}")]
    BadLayer {
        index: usize,
        width: usize,
        reason: String,
    },

    /// A word's layers end at the wrong width for the declared target.
    #[error("word ends at width {found} but the target object has width {expected}")]
    WidthMismatch { expected: usize, found: usize },

    /// Slice values inside one morphism must share a truncation order.
    #[error("slice truncation {found} differs from the morphism's truncation {expected}")]
    TruncationMismatch { expected: usize, found: usize },

    /// A slice value lives in the wrong algebra for its width.
    #[error("slice value lives in {found}, expected {expected}")]
    AlgebraMismatch {
        expected: PresentationId,
        found: PresentationId,
    },

    /// Two morphisms were combined along objects that do not match.
    #[error("object mismatch: expected {expected}, found {found}")]
    ObjectMismatch { expected: CObject, found: CObject },

    /// An operation requires a group-like series.
    #[error("series is not group-like up to its truncation order")]
    NotGrouplike,

    /// A width-one value that must be inverted has no invertible constant
    /// term.
    #[error("value has constant term {constant}, which is not invertible as required")]
    NotInvertible { constant: String },

    /// The requested construction needs a certificate to a higher chord
    /// degree than the element carries.
    #[error("element is certified to degree {certified} but degree {needed} is needed")]
    NotCertified { certified: usize, needed: usize },

    /// Rewriting stopped with words that cannot be brought to normal form.
    #[error("{stuck} word(s) could not be normalized{}", if *oversize { " (width bound exceeded)" } else { "" })]
    Unnormalizable { stuck: usize, oversize: bool },

    /// A degree-wise solve failed while preparing reference data.
    #[error("solver failed: {0}")]
    Solve(#[from] grteq::SolveError),

    /// Certified element data was rejected while acting on a morphism.
    #[error("element data rejected: {0}")]
    Element(#[from] grteq::ElementError),

    /// The degree-wise solver produced no certified reference associator.
    #[error("no certified reference associator at degree {degree}")]
    ReferenceAssociator { degree: usize },

    /// Text input could not be parsed.
    #[error("parse error: {context}")]
    Parse { context: String },

    /// An embedded series block could not be parsed.
    #[error("series block: {0}")]
    SeriesText(#[from] freealg::TextError),
}
