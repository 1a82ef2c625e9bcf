//! Morphisms between parenthesized permutations: a source and target of
//! the same arity together with a group-like value over the framed chord
//! algebra on that many strands. Every Hom-set shares the same value
//! group, so the objects are genuine bookkeeping — they are what tells a
//! re-parenthesization apart from an identity.

use dkalg::operad_insert_lie;
use freealg::{series_from_text, series_to_text, PresentationId, Series, TextError};
use thiserror::Error;

use crate::tree::{magma_compose, ParenTree, TreeError};

/// Problems constructing or combining morphisms.
#[derive(Debug, Error)]
pub enum MorphismError {
    /// Source and target must parenthesize the same number of inputs.
    #[error("source arity {source_arity} differs from target arity {target_arity}")]
    ArityMismatch { source_arity: u8, target_arity: u8 },
    /// The value must live over the framed chord algebra of the arity.
    #[error("value lives in {got}, expected {expected}")]
    WrongAlgebra {
        expected: PresentationId,
        got: PresentationId,
    },
    /// Morphism values are exponentials: group-like series.
    #[error("morphism value is not group-like")]
    NotGrouplike,
    /// Categorical composition needs matching inner objects.
    #[error("objects do not match: `{found}` composed against `{expected}`")]
    ObjectMismatch { expected: String, found: String },
    /// Values entering one operation must share a truncation order.
    #[error("truncation orders differ: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },
    /// The acting element must be certified at least to the value order.
    #[error("element certified to degree {certified}, but the morphism is truncated at {needed}")]
    NotCertified { certified: usize, needed: usize },
    /// The scaling automorphisms are only defined on supported object pairs.
    #[error("no scaling automorphism between objects `{from}` and `{to}`")]
    UnsupportedObjects { from: String, to: String },
    /// The morphism text form is malformed.
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    /// An embedded object failed to parse or validate.
    #[error(transparent)]
    Tree(#[from] TreeError),
    /// The embedded value block failed to parse.
    #[error(transparent)]
    SeriesFormat(#[from] TextError),
}

/// A morphism of the parenthesized diagram category: two objects of the
/// same arity `n` and a group-like value over the framed chord algebra on
/// `n` strands, truncated at a fixed total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParcdMorphism {
    source: ParenTree,
    target: ParenTree,
    value: Series,
}

impl ParcdMorphism {
    /// Validate and assemble a morphism: the objects must be genuine
    /// parenthesized permutations of equal arity, and the value must be a
    /// group-like series over the framed chord algebra on that arity.
    pub fn new(
        source: ParenTree,
        target: ParenTree,
        value: Series,
    ) -> Result<Self, MorphismError> {
        for object in [&source, &target] {
            if !object.is_permutation() {
                return Err(TreeError::NotPermutation(object.labels()).into());
            }
        }
        if source.arity() != target.arity() {
            return Err(MorphismError::ArityMismatch {
                source_arity: source.arity(),
                target_arity: target.arity(),
            });
        }
        let expected = PresentationId::ft(source.arity());
        if value.algebra() != expected {
            return Err(MorphismError::WrongAlgebra {
                expected,
                got: value.algebra(),
            });
        }
        if !value.is_grouplike() {
            return Err(MorphismError::NotGrouplike);
        }
        Ok(ParcdMorphism {
            source,
            target,
            value,
        })
    }

    /// The identity on an object, truncated at `trunc`.
    pub fn identity(object: &ParenTree, trunc: usize) -> Result<Self, MorphismError> {
        let algebra = PresentationId::ft(object.arity());
        ParcdMorphism::new(
            object.clone(),
            object.clone(),
            Series::one(algebra, trunc),
        )
    }

    /// The source object.
    pub fn source(&self) -> &ParenTree {
        &self.source
    }

    /// The target object.
    pub fn target(&self) -> &ParenTree {
        &self.target
    }

    /// The group-like value.
    pub fn value(&self) -> &Series {
        &self.value
    }

    /// The common arity of source and target.
    pub fn arity(&self) -> u8 {
        self.source.arity()
    }

    /// The truncation order of the value.
    pub fn trunc(&self) -> usize {
        self.value.trunc()
    }

    /// The categorical inverse: objects swap and the value inverts.
    pub fn inverse(&self) -> ParcdMorphism {
        ParcdMorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            value: self.value.inverse(),
        }
    }
}

/// Categorical composition `f ∘ g`, with `g` applied first: defined when
/// the target of `g` is the source of `f`. The value is the product
/// `f.value · g.value`, written in the same order as the composition.
pub fn compose(f: &ParcdMorphism, g: &ParcdMorphism) -> Result<ParcdMorphism, MorphismError> {
    if g.target != f.source {
        return Err(MorphismError::ObjectMismatch {
            expected: f.source.to_string(),
            found: g.target.to_string(),
        });
    }
    if f.trunc() != g.trunc() {
        return Err(MorphismError::TruncationMismatch {
            left: f.trunc(),
            right: g.trunc(),
        });
    }
    ParcdMorphism::new(g.source.clone(), f.target.clone(), f.value.mul(&g.value))
}

/// Operadic substitution `f ∘_slot g`: both objects substitute through
/// [`magma_compose`] and the value is the exponential of the insertion of
/// the logarithms. Modulo the chord relations this agrees with inserting
/// the values directly, because the outer and inner images commute there.
pub fn op_compose(
    f: &ParcdMorphism,
    slot: u8,
    g: &ParcdMorphism,
) -> Result<ParcdMorphism, MorphismError> {
    if f.trunc() != g.trunc() {
        return Err(MorphismError::TruncationMismatch {
            left: f.trunc(),
            right: g.trunc(),
        });
    }
    let source = magma_compose(&f.source, slot, &g.source)?;
    let target = magma_compose(&f.target, slot, &g.target)?;
    let value = operad_insert_lie(&f.value.log(), slot, &g.value.log()).exp();
    ParcdMorphism::new(source, target, value)
}

/// Render a morphism as text: a header line, the two objects, then the
/// value block in the deterministic series format.
pub fn morphism_to_text(f: &ParcdMorphism) -> String {
    format!(
        "parcd-morphism\nsource {}\ntarget {}\n{}",
        f.source,
        f.target,
        series_to_text(&f.value)
    )
}

/// Parse the text form produced by [`morphism_to_text`] and re-validate.
pub fn morphism_from_text(text: &str) -> Result<ParcdMorphism, MorphismError> {
    let mut parts = text.splitn(4, '\n');
    let header = parts.next().unwrap_or("");
    if header.trim() != "parcd-morphism" {
        return Err(MorphismError::Format {
            line: 1,
            msg: format!("expected header `parcd-morphism`, found `{header}`"),
        });
    }
    let source_line = parts.next().ok_or(MorphismError::Format {
        line: 2,
        msg: "missing `source` line".into(),
    })?;
    let source = source_line
        .strip_prefix("source ")
        .ok_or(MorphismError::Format {
            line: 2,
            msg: "expected `source <object>`".into(),
        })?;
    let target_line = parts.next().ok_or(MorphismError::Format {
        line: 3,
        msg: "missing `target` line".into(),
    })?;
    let target = target_line
        .strip_prefix("target ")
        .ok_or(MorphismError::Format {
            line: 3,
            msg: "expected `target <object>`".into(),
        })?;
    let value_block = parts.next().ok_or(MorphismError::Format {
        line: 4,
        msg: "missing value block".into(),
    })?;
    let value = series_from_text(value_block)?;
    ParcdMorphism::new(ParenTree::parse(source)?, ParenTree::parse(target)?, value)
}

#[cfg(test)]
mod tests {
    use freealg::GeneratorId;

    use super::*;

    fn chord_exp(n: u8, trunc: usize, i: u8, j: u8) -> Series {
        Series::generator(PresentationId::ft(n), trunc, GeneratorId::t(i, j)).exp()
    }

    fn pair() -> ParenTree {
        ParenTree::parse("(1 2)").unwrap()
    }

    #[test]
    fn identities_are_two_sided_units_for_composition() {
        let f = ParcdMorphism::new(pair(), pair(), chord_exp(2, 3, 1, 2)).unwrap();
        let id = ParcdMorphism::identity(&pair(), 3).unwrap();
        assert_eq!(compose(&f, &id).unwrap(), f);
        assert_eq!(compose(&id, &f).unwrap(), f);
    }

    #[test]
    fn inverses_cancel_to_the_identity_on_the_target() {
        let f = ParcdMorphism::new(
            pair(),
            ParenTree::parse("(2 1)").unwrap(),
            chord_exp(2, 3, 1, 1),
        )
        .unwrap();
        let round = compose(&f, &f.inverse()).unwrap();
        let id = ParcdMorphism::identity(f.target(), 3).unwrap();
        assert_eq!(round, id);
    }

    #[test]
    fn substituting_a_doubled_strand_spreads_the_chord() {
        let f = ParcdMorphism::new(pair(), pair(), chord_exp(2, 3, 1, 2)).unwrap();
        let id = ParcdMorphism::identity(&pair(), 3).unwrap();
        let out = op_compose(&f, 1, &id).unwrap();
        assert_eq!(out.source().to_string(), "((1 2) 3)");
        assert_eq!(out.target().to_string(), "((1 2) 3)");
        let alg = PresentationId::ft(3);
        let expected = (&Series::generator(alg, 3, GeneratorId::t(1, 3))
            + &Series::generator(alg, 3, GeneratorId::t(2, 3)))
            .exp();
        assert_eq!(out.value(), &expected);
    }

    #[test]
    fn mismatched_objects_and_truncations_are_rejected() {
        let f = ParcdMorphism::new(
            pair(),
            ParenTree::parse("(2 1)").unwrap(),
            Series::one(PresentationId::ft(2), 3),
        )
        .unwrap();
        assert!(matches!(
            compose(&f, &f),
            Err(MorphismError::ObjectMismatch { .. })
        ));
        let g = ParcdMorphism::identity(&pair(), 2).unwrap();
        assert!(matches!(
            compose(&f, &g),
            Err(MorphismError::TruncationMismatch { .. })
        ));
    }

    #[test]
    fn invalid_values_and_objects_are_rejected() {
        let mut junk = Series::one(PresentationId::ft(2), 3);
        junk.add_term(
            freealg::Monomial::from_letters([GeneratorId::t(1, 2)]),
            ratmat::rat(2, 1),
        );
        assert!(matches!(
            ParcdMorphism::new(pair(), pair(), junk),
            Err(MorphismError::NotGrouplike)
        ));
        assert!(matches!(
            ParcdMorphism::new(pair(), pair(), Series::one(PresentationId::ft(3), 3)),
            Err(MorphismError::WrongAlgebra { .. })
        ));
        assert!(matches!(
            ParcdMorphism::new(
                pair(),
                ParenTree::parse("1").unwrap(),
                Series::one(PresentationId::ft(2), 3)
            ),
            Err(MorphismError::ArityMismatch { .. })
        ));
        let bad = ParenTree::pair(ParenTree::leaf(1), ParenTree::leaf(1));
        assert!(matches!(
            ParcdMorphism::new(bad, pair(), Series::one(PresentationId::ft(2), 3)),
            Err(MorphismError::Tree(TreeError::NotPermutation(_)))
        ));
    }

    #[test]
    fn text_form_round_trips_byte_for_byte() {
        let f = ParcdMorphism::new(
            ParenTree::parse("((1 2) 3)").unwrap(),
            ParenTree::parse("(1 (2 3))").unwrap(),
            chord_exp(3, 3, 2, 3),
        )
        .unwrap();
        let text = morphism_to_text(&f);
        let back = morphism_from_text(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(morphism_to_text(&back), text);
    }

    #[test]
    fn malformed_text_reports_the_offending_line() {
        assert!(matches!(
            morphism_from_text("wrong-header\nsource 1\ntarget 1\n"),
            Err(MorphismError::Format { line: 1, .. })
        ));
        assert!(matches!(
            morphism_from_text("parcd-morphism\nsrc 1\ntarget 1\n"),
            Err(MorphismError::Format { line: 2, .. })
        ));
        assert!(matches!(
            morphism_from_text("parcd-morphism\nsource (1 1)\ntarget (1 2)\nalgebra ft(2)\ntrunc 1\nend\n"),
            Err(MorphismError::Tree(TreeError::NotPermutation(_)))
        ));
    }
}
