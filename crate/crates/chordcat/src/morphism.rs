//! Morphisms of the chord category: rational linear combinations of
//! layered words between parenthesized tensor objects.

use freealg::{series_to_text, GeneratorId, PresentationId, Rat, Series};
use num::{One, Zero};

use crate::error::ChordError;
use crate::layer::Layer;
use crate::object::CObject;

/// One layered word with a rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub coeff: Rat,
    pub layers: Vec<Layer>,
}

impl Word {
    /// A deterministic sort key so linear combinations have a canonical
    /// order.  Slice payloads are keyed through their text rendering,
    /// which is itself deterministic.
    pub(crate) fn sort_key(&self) -> String {
        let mut key = String::new();
        for layer in &self.layers {
            match layer {
                Layer::Cup(i) => key.push_str(&format!("U{i};")),
                Layer::Cap(i) => key.push_str(&format!("A{i};")),
                Layer::Perm(sigma) => key.push_str(&format!("P{sigma:?};")),
                Layer::Slice(u) => {
                    key.push_str("S");
                    key.push_str(&series_to_text(u));
                    key.push(';');
                }
            }
        }
        key
    }
}

/// A morphism: a finite rational combination of layered words sharing one
/// source and one target object.  The empty combination is the zero
/// morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source: CObject,
    target: CObject,
    words: Vec<Word>,
}

impl Morphism {
    /// Build a morphism from raw words, validating every layer and
    /// combining duplicate words.
    pub fn from_words(
        source: CObject,
        target: CObject,
        words: Vec<(Rat, Vec<Layer>)>,
    ) -> Result<Self, ChordError> {
        let mut checked = Vec::with_capacity(words.len());
        for (coeff, layers) in words {
            validate_word(&source, &target, &layers)?;
            checked.push(Word { coeff, layers });
        }
        let mut morphism = Morphism {
            source,
            target,
            words: checked,
        };
        morphism.combine();
        Ok(morphism)
    }

    /// A single-word morphism.
    pub fn from_word(
        source: CObject,
        target: CObject,
        coeff: Rat,
        layers: Vec<Layer>,
    ) -> Result<Self, ChordError> {
        Self::from_words(source, target, vec![(coeff, layers)])
    }

    /// The identity on `obj` (a single empty word).
    pub fn identity(obj: CObject) -> Self {
        Morphism {
            source: obj.clone(),
            target: obj,
            words: vec![Word {
                coeff: Rat::one(),
                layers: Vec::new(),
            }],
        }
    }

    /// The zero morphism between two objects.
    pub fn zero(source: CObject, target: CObject) -> Self {
        Morphism {
            source,
            target,
            words: Vec::new(),
        }
    }

    /// The cup `b : () → (+ +)`, creating a paired pair of strands.
    pub fn cup() -> Self {
        Morphism {
            source: CObject::empty(),
            target: CObject::word(2),
            words: vec![Word {
                coeff: Rat::one(),
                layers: vec![Layer::Cup(1)],
            }],
        }
    }

    /// The cap `d : (+ +) → ()`, joining the two strands.
    pub fn cap() -> Self {
        Morphism {
            source: CObject::word(2),
            target: CObject::empty(),
            words: vec![Word {
                coeff: Rat::one(),
                layers: vec![Layer::Cap(1)],
            }],
        }
    }

    /// An endomorphism given by a single chord slice on `obj`.
    pub fn slice(obj: CObject, value: Series) -> Result<Self, ChordError> {
        Self::from_word(obj.clone(), obj, Rat::one(), vec![Layer::Slice(value)])
    }

    /// An endomorphism rewiring the strands of `obj` by an image list.
    /// The strand shape is forgotten by the wiring, so source and target
    /// share the object `obj`.
    pub fn permutation(obj: CObject, sigma: Vec<usize>) -> Result<Self, ChordError> {
        Self::from_word(obj.clone(), obj, Rat::one(), vec![Layer::Perm(sigma)])
    }

    pub fn source(&self) -> &CObject {
        &self.source
    }

    pub fn target(&self) -> &CObject {
        &self.target
    }

    /// The words of the combination, in canonical order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// Scale every coefficient.
    pub fn scaled(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Morphism::zero(self.source.clone(), self.target.clone());
        }
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            words: self
                .words
                .iter()
                .map(|w| Word {
                    coeff: &w.coeff * c,
                    layers: w.layers.clone(),
                })
                .collect(),
        }
    }

    /// The common truncation order of the slice values, if any slice is
    /// present.
    pub fn truncation(&self) -> Option<usize> {
        self.words
            .iter()
            .flat_map(|w| w.layers.iter())
            .find_map(|layer| layer.slice_value().map(Series::trunc))
    }

    /// Sort words canonically, merge duplicates, and drop zeros.
    pub(crate) fn combine(&mut self) {
        self.words.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let mut merged: Vec<Word> = Vec::with_capacity(self.words.len());
        for word in self.words.drain(..) {
            match merged.last_mut() {
                Some(last) if last.layers == word.layers => {
                    last.coeff = &last.coeff + &word.coeff;
                }
                _ => merged.push(word),
            }
        }
        merged.retain(|w| !w.coeff.is_zero());
        self.words = merged;
    }

    pub(crate) fn from_parts(source: CObject, target: CObject, words: Vec<Word>) -> Self {
        let mut m = Morphism {
            source,
            target,
            words,
        };
        m.combine();
        m
    }
}

/// Validate one word against its declared source and target, checking the
/// width chase, slice algebras, and that all slices share one truncation.
fn validate_word(
    source: &CObject,
    target: &CObject,
    layers: &[Layer],
) -> Result<(), ChordError> {
    let mut width = source.width();
    let mut trunc: Option<usize> = None;
    for (index, layer) in layers.iter().enumerate() {
        width = layer.chase(width, index)?;
        if let Some(u) = layer.slice_value() {
            match trunc {
                None => trunc = Some(u.trunc()),
                Some(t) if t != u.trunc() => {
                    return Err(ChordError::TruncationMismatch {
                        expected: t,
                        found: u.trunc(),
                    });
                }
                _ => {}
            }
        }
    }
    if width != target.width() {
        return Err(ChordError::WidthMismatch {
            expected: target.width(),
            found: width,
        });
    }
    Ok(())
}

/// Compose `f ∘ g` (apply `g` first).  Objects are strictly associative
/// tensor powers of `+`, so only widths must match: the bracketing of
/// `g.target` and `f.source` is carried as bookkeeping but not compared.
/// Words multiply pairwise: `g`'s layers sit below `f`'s, and
/// coefficients multiply.
pub fn compose(f: &Morphism, g: &Morphism) -> Result<Morphism, ChordError> {
    if g.target.width() != f.source.width() {
        return Err(ChordError::ObjectMismatch {
            expected: f.source.clone(),
            found: g.target.clone(),
        });
    }
    let mut words = Vec::with_capacity(f.words.len() * g.words.len());
    for wg in &g.words {
        for wf in &f.words {
            let mut layers = wg.layers.clone();
            layers.extend(wf.layers.iter().cloned());
            words.push(Word {
                coeff: &wg.coeff * &wf.coeff,
                layers,
            });
        }
    }
    Ok(Morphism::from_parts(
        g.source.clone(),
        f.target.clone(),
        words,
    ))
}

/// Tensor `f ⊗ g`, placing `f` on the left.  Realized as
/// `(id ⊗ g) ∘ (f ⊗ id)`: `f`'s layers run first next to an idle right
/// block of width `g.source`, then `g`'s layers run shifted right of
/// `f.target`.
pub fn tensor(f: &Morphism, g: &Morphism) -> Morphism {
    let source = CObject::pair(f.source.clone(), g.source.clone());
    let target = CObject::pair(f.target.clone(), g.target.clone());
    let mut words = Vec::with_capacity(f.words.len() * g.words.len());
    for wf in &f.words {
        for wg in &g.words {
            let mut layers = Vec::with_capacity(wf.layers.len() + wg.layers.len());
            let mut width = f.source.width();
            for layer in &wf.layers {
                layers.push(embed_layer(layer, 0, g.source.width(), width));
                width = layer.chase(width, 0).expect("validated layer");
            }
            let offset = f.target.width();
            let mut gwidth = g.source.width();
            for layer in &wg.layers {
                layers.push(embed_layer(layer, offset, 0, gwidth));
                gwidth = layer.chase(gwidth, 0).expect("validated layer");
            }
            words.push(Word {
                coeff: &wf.coeff * &wg.coeff,
                layers,
            });
        }
    }
    Morphism::from_parts(source, target, words)
}

/// Re-index one layer into a wider ambient strip: `left` idle strands on
/// the left, `right` idle strands on the right, with the layer's own input
/// width `width` in between.
pub(crate) fn embed_layer(layer: &Layer, left: usize, right: usize, width: usize) -> Layer {
    match layer {
        Layer::Cup(i) => Layer::Cup(i + left),
        Layer::Cap(i) => Layer::Cap(i + left),
        Layer::Perm(sigma) => {
            let mut full: Vec<usize> = (1..=left).collect();
            full.extend(sigma.iter().map(|&image| image + left));
            full.extend(left + width + 1..=left + width + right);
            Layer::Perm(full)
        }
        Layer::Slice(u) => Layer::Slice(embed_slice(u, left, width + left + right)),
    }
}

/// Re-index a slice value into the framed algebra on `ambient` strands,
/// shifting every strand index up by `left`.
pub(crate) fn embed_slice(u: &Series, left: usize, ambient: usize) -> Series {
    let target = PresentationId::ft(ambient as u8);
    if left == 0 && u.algebra() == target {
        return u.clone();
    }
    u.map_letters(target, |g| match g {
        GeneratorId::T(i, j) => GeneratorId::t(i + left as u8, j + left as u8),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use freealg::rat;

    use super::*;

    fn h_slice(trunc: usize) -> Morphism {
        let algebra = PresentationId::ft(2);
        let value = Series::generator(algebra, trunc, GeneratorId::t(1, 2)).exp();
        Morphism::slice(CObject::word(2), value).expect("valid slice")
    }

    #[test]
    fn identity_composes_as_a_unit() {
        let f = h_slice(3);
        let left = compose(&Morphism::identity(CObject::word(2)), &f).unwrap();
        let right = compose(&f, &Morphism::identity(CObject::word(2))).unwrap();
        assert_eq!(left, f);
        assert_eq!(right, f);
    }

    #[test]
    fn tensor_of_identities_is_the_identity_on_the_pair() {
        let id1 = Morphism::identity(CObject::plus());
        let prod = tensor(&id1, &id1);
        assert_eq!(prod, Morphism::identity(CObject::word(2)));
    }

    #[test]
    fn composition_requires_matching_widths_but_not_bracketings() {
        let wide = Morphism::identity(CObject::word(3));
        let narrow = Morphism::identity(CObject::word(2));
        assert!(compose(&wide, &narrow).is_err());
        let other_tree = Morphism::identity(CObject::pair(
            CObject::plus(),
            CObject::word(2),
        ));
        assert!(compose(&wide, &other_tree).is_ok());
    }

    #[test]
    fn cap_after_cup_is_a_closed_word() {
        let loop_word = compose(&Morphism::cap(), &Morphism::cup()).unwrap();
        assert_eq!(loop_word.source(), &CObject::empty());
        assert_eq!(loop_word.target(), &CObject::empty());
        assert_eq!(loop_word.words().len(), 1);
        assert_eq!(loop_word.words()[0].layers, vec![Layer::Cup(1), Layer::Cap(1)]);
    }

    #[test]
    fn tensoring_shifts_the_right_factor() {
        let b = Morphism::cup();
        let d = Morphism::cap();
        let side_by_side = tensor(&d, &b);
        assert_eq!(side_by_side.source(), &CObject::word(2));
        assert_eq!(side_by_side.target(), &CObject::word(2));
        assert_eq!(
            side_by_side.words()[0].layers,
            vec![Layer::Cap(1), Layer::Cup(1)]
        );
        let other_order = tensor(&b, &d);
        assert_eq!(
            other_order.words()[0].layers,
            vec![Layer::Cup(1), Layer::Cap(3)]
        );
    }

    #[test]
    fn duplicate_words_combine_and_zeros_vanish() {
        let f = h_slice(2);
        let doubled = Morphism::from_words(
            CObject::word(2),
            CObject::word(2),
            vec![
                (rat(1, 2), f.words()[0].layers.clone()),
                (rat(1, 2), f.words()[0].layers.clone()),
            ],
        )
        .unwrap();
        assert_eq!(doubled, f);
        let cancelled = Morphism::from_words(
            CObject::word(2),
            CObject::word(2),
            vec![
                (rat(1, 1), f.words()[0].layers.clone()),
                (rat(-1, 1), f.words()[0].layers.clone()),
            ],
        )
        .unwrap();
        assert!(cancelled.is_zero());
    }

    #[test]
    fn width_chase_is_enforced() {
        let bad = Morphism::from_word(
            CObject::word(2),
            CObject::word(2),
            Rat::one(),
            vec![Layer::Cap(1)],
        );
        assert!(matches!(bad, Err(ChordError::WidthMismatch { .. })));
        let mixed = Morphism::from_words(
            CObject::word(2),
            CObject::word(2),
            vec![(
                Rat::one(),
                vec![
                    Layer::Slice(Series::generator(
                        PresentationId::ft(2),
                        2,
                        GeneratorId::t(1, 2),
                    )),
                    Layer::Slice(Series::generator(
                        PresentationId::ft(2),
                        3,
                        GeneratorId::t(1, 2),
                    )),
                ],
            )],
        );
        assert!(matches!(mixed, Err(ChordError::TruncationMismatch { .. })));
    }
}
