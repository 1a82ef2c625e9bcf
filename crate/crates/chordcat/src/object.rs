//! Objects of the chord category: parenthesized tensor words in a single
//! self-dual generating object, written `+`.
//!
//! An object is a full binary tree whose leaves are `+`, or the empty word.
//! Only the leaf count (the *width*) matters for composing layered words;
//! the tree shape is carried along so that morphisms remember their exact
//! source and target parenthesizations.

use std::fmt;
use std::str::FromStr;

use crate::error::ChordError;

/// A parenthesized tensor word over the single generator `+`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CObject {
    /// The empty tensor word (monoidal unit).
    Empty,
    /// The generating object `+`.
    Leaf,
    /// A tensor pair `(a b)` of two non-empty words.
    Node(Box<CObject>, Box<CObject>),
}

impl CObject {
    /// The empty word.
    pub fn empty() -> Self {
        CObject::Empty
    }

    /// The single generator `+`.
    pub fn plus() -> Self {
        CObject::Leaf
    }

    /// The tensor pair of two objects.  Tensoring with the empty word
    /// returns the other factor unchanged, so `Node` children are never
    /// empty.
    pub fn pair(left: CObject, right: CObject) -> Self {
        match (left, right) {
            (CObject::Empty, r) => r,
            (l, CObject::Empty) => l,
            (l, r) => CObject::Node(Box::new(l), Box::new(r)),
        }
    }

    /// The left-nested word `((… (+ +) …) +)` with `width` leaves.
    pub fn word(width: usize) -> Self {
        let mut obj = CObject::Empty;
        for _ in 0..width {
            obj = CObject::pair(obj, CObject::Leaf);
        }
        obj
    }

    /// Number of leaves.
    pub fn width(&self) -> usize {
        match self {
            CObject::Empty => 0,
            CObject::Leaf => 1,
            CObject::Node(l, r) => l.width() + r.width(),
        }
    }
}

impl fmt::Display for CObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CObject::Empty => write!(f, "()"),
            CObject::Leaf => write!(f, "+"),
            CObject::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

impl FromStr for CObject {
    type Err = ChordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars().peekable();
        let obj = parse_object(&mut chars, s)?;
        skip_spaces(&mut chars);
        if chars.next().is_some() {
            return Err(ChordError::Parse {
                context: format!("trailing input after object `{s}`"),
            });
        }
        Ok(obj)
    }
}

fn skip_spaces(chars: &mut std::iter::Peekable<std::str::Chars<'_>>) {
    while chars.peek().is_some_and(|c| c.is_whitespace()) {
        chars.next();
    }
}

fn parse_object(
    chars: &mut std::iter::Peekable<std::str::Chars<'_>>,
    full: &str,
) -> Result<CObject, ChordError> {
    skip_spaces(chars);
    match chars.next() {
        Some('+') => Ok(CObject::Leaf),
        Some('(') => {
            skip_spaces(chars);
            if chars.peek() == Some(&')') {
                chars.next();
                return Ok(CObject::Empty);
            }
            let left = parse_object(chars, full)?;
            let right = parse_object(chars, full)?;
            skip_spaces(chars);
            match chars.next() {
                Some(')') => Ok(CObject::pair(left, right)),
                _ => Err(ChordError::Parse {
                    context: format!("unclosed parenthesis in object `{full}`"),
                }),
            }
        }
        _ => Err(ChordError::Parse {
            context: format!("expected `+` or `(` in object `{full}`"),
        }),
    }
}
