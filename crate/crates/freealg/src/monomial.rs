//! Words in the generators, ordered degree-lexicographically.

use std::cmp::Ordering;
use std::fmt;

use crate::GeneratorId;

/// A word in the generators. Every generator has degree 1, so the degree
/// of a word is its length.
///
/// `Ord` is degree-lexicographic: shorter words first, words of equal
/// length compared letter by letter in the generator order. This is the
/// canonical basis order for series storage, echelon column indexing and
/// text output, and must stay stable.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<GeneratorId>);

impl Monomial {
    /// The empty word (unit of the algebra).
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Word consisting of a single generator.
    pub fn generator(g: GeneratorId) -> Self {
        Monomial(vec![g])
    }

    /// Word from an explicit letter list.
    pub fn from_letters<I: IntoIterator<Item = GeneratorId>>(letters: I) -> Self {
        Monomial(letters.into_iter().collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[GeneratorId] {
        &self.0
    }

    /// Concatenation of two words.
    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Monomial(letters)
    }

    /// The word with its letters reversed.
    pub fn reversed(&self) -> Monomial {
        Monomial(self.0.iter().rev().copied().collect())
    }

    /// Applies a letter-wise map.
    pub fn map_letters<F: FnMut(GeneratorId) -> GeneratorId>(&self, mut f: F) -> Monomial {
        Monomial(self.0.iter().map(|&g| f(g)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let toks: Vec<String> = self.0.iter().map(|g| g.token()).collect();
        write!(f, "{}", toks.join("·"))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
