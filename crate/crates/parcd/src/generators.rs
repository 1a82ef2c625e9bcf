//! The four generating morphisms on one, two, and three strands, and the
//! one-step rotation of the marked boundary point.

use dkalg::transposition01;
use freealg::{GeneratorId, PresentationId, Series};

use crate::morphism::ParcdMorphism;
use crate::tree::ParenTree;

/// Tags for the generating morphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorTag {
    /// The crossing on two strands: `(1 2) -> (2 1)` with value 1.
    X12,
    /// The horizontal chord on two strands: `(1 2) -> (1 2)` with value
    /// `e^{t12}`.
    H12,
    /// The framing chord on one strand: `1 -> 1` with value `e^{t11}`.
    I1,
    /// The re-parenthesization on three strands: `((1 2) 3) -> (1 (2 3))`
    /// with value 1.
    A123,
}

/// All four tags, in a fixed order convenient for batteries of checks.
pub const GENERATOR_TAGS: [GeneratorTag; 4] = [
    GeneratorTag::X12,
    GeneratorTag::H12,
    GeneratorTag::I1,
    GeneratorTag::A123,
];

fn object(text: &str) -> ParenTree {
    ParenTree::parse(text).expect("generator objects are well-formed")
}

/// Build a tagged generator at a chosen truncation order.
pub fn generator(tag: GeneratorTag, trunc: usize) -> ParcdMorphism {
    let build = |src: &str, tgt: &str, value: Series| {
        ParcdMorphism::new(object(src), object(tgt), value)
            .expect("generators are well-formed morphisms")
    };
    match tag {
        GeneratorTag::X12 => build("(1 2)", "(2 1)", Series::one(PresentationId::ft(2), trunc)),
        GeneratorTag::H12 => build(
            "(1 2)",
            "(1 2)",
            Series::generator(PresentationId::ft(2), trunc, GeneratorId::t(1, 2)).exp(),
        ),
        GeneratorTag::I1 => build(
            "1",
            "1",
            Series::generator(PresentationId::ft(1), trunc, GeneratorId::t(1, 1)).exp(),
        ),
        GeneratorTag::A123 => build(
            "((1 2) 3)",
            "(1 (2 3))",
            Series::one(PresentationId::ft(3), trunc),
        ),
    }
}

/// Rotate the marked boundary point one step. The value pulls back along
/// the closed-formula transposition of the marked point with the first
/// strand, which realizes the generator rules: the framing chord is fixed,
/// `e^{t12}` maps to `e^{-t12-t22}`, and the crossing is fixed. A morphism
/// carrying exactly the objects of the re-parenthesization generator
/// follows its reversal rule
/// `((1 2) 3) -> (1 (2 3))   ↦   (2 (3 1)) -> ((2 3) 1)`,
/// the objects of the inverse with cycled labels; all other objects stay
/// fixed, since the displayed action only prescribes object movement for
/// that generator.
pub fn cyclic_act(f: &ParcdMorphism) -> ParcdMorphism {
    let value = transposition01(f.value());
    let (source, target) = if f.source() == &object("((1 2) 3)")
        && f.target() == &object("(1 (2 3))")
    {
        (object("(2 (3 1))"), object("((2 3) 1)"))
    } else {
        (f.source().clone(), f.target().clone())
    };
    ParcdMorphism::new(source, target, value).expect("rotation preserves group-likeness")
}
