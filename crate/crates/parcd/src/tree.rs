//! Maximally parenthesized permutations: complete binary trees whose
//! leaves carry a permutation of `{1..n}`. These are the objects of the
//! diagram categories; [`magma_compose`] is the substitution product that
//! grafts one tree into a leaf of another.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Problems constructing or combining parenthesized permutations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    /// The text form could not be parsed.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// The leaf labels do not form a permutation of `1..=n`.
    #[error("leaf labels {0:?} are not a permutation of 1..=n")]
    NotPermutation(Vec<u8>),
    /// The substitution slot does not name a leaf.
    #[error("slot {slot} out of range 1..={arity}")]
    SlotOutOfRange { slot: u8, arity: u8 },
}

/// A complete binary tree with labeled leaves: a maximally parenthesized
/// permutation. The text form nests parentheses around space-separated
/// children, so `((1 2) 3)` is the left-nested triple and a bare label
/// like `1` is a single leaf.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParenTree {
    /// A single input, by its label.
    Leaf(u8),
    /// An ordered parenthesized pair of subtrees.
    Node(Box<ParenTree>, Box<ParenTree>),
}

/// The two binary shapes on three inputs, with their in-order labels:
/// `Left(a, b, c)` is `((a b) c)` and `Right(a, b, c)` is `(a (b c))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Nesting3 {
    Left(u8, u8, u8),
    Right(u8, u8, u8),
}

impl ParenTree {
    /// A single leaf.
    pub fn leaf(label: u8) -> Self {
        ParenTree::Leaf(label)
    }

    /// The ordered pair of two subtrees.
    pub fn pair(left: ParenTree, right: ParenTree) -> Self {
        ParenTree::Node(Box::new(left), Box::new(right))
    }

    /// The number of leaves.
    pub fn arity(&self) -> u8 {
        match self {
            ParenTree::Leaf(_) => 1,
            ParenTree::Node(l, r) => l.arity() + r.arity(),
        }
    }

    /// The leaf labels in planar (in-order) reading.
    pub fn labels(&self) -> Vec<u8> {
        fn walk(t: &ParenTree, out: &mut Vec<u8>) {
            match t {
                ParenTree::Leaf(k) => out.push(*k),
                ParenTree::Node(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// Whether the leaf labels form a permutation of `1..=n`.
    pub fn is_permutation(&self) -> bool {
        let mut labels = self.labels();
        labels.sort_unstable();
        labels.iter().enumerate().all(|(i, &k)| k as usize == i + 1)
    }

    /// Apply a relabeling to every leaf.
    pub fn relabel<F: Fn(u8) -> u8>(&self, f: &F) -> ParenTree {
        match self {
            ParenTree::Leaf(k) => ParenTree::Leaf(f(*k)),
            ParenTree::Node(l, r) => ParenTree::pair(l.relabel(f), r.relabel(f)),
        }
    }

    /// Classify an arity-3 tree by its nesting side; `None` otherwise.
    pub(crate) fn nesting3(&self) -> Option<Nesting3> {
        match self {
            ParenTree::Node(l, r) => match (l.as_ref(), r.as_ref()) {
                (ParenTree::Node(ll, lr), ParenTree::Leaf(c)) => {
                    match (ll.as_ref(), lr.as_ref()) {
                        (ParenTree::Leaf(a), ParenTree::Leaf(b)) => {
                            Some(Nesting3::Left(*a, *b, *c))
                        }
                        _ => None,
                    }
                }
                (ParenTree::Leaf(a), ParenTree::Node(rl, rr)) => {
                    match (rl.as_ref(), rr.as_ref()) {
                        (ParenTree::Leaf(b), ParenTree::Leaf(c)) => {
                            Some(Nesting3::Right(*a, *b, *c))
                        }
                        _ => None,
                    }
                }
                _ => None,
            },
            ParenTree::Leaf(_) => None,
        }
    }

    /// Parse the nested-parenthesis text form and validate the labels.
    pub fn parse(text: &str) -> Result<ParenTree, TreeError> {
        let bytes = text.as_bytes();
        let mut pos = 0usize;
        let tree = parse_tree(bytes, &mut pos)?;
        skip_spaces(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(TreeError::Parse {
                pos,
                msg: "trailing input after tree".into(),
            });
        }
        if !tree.is_permutation() {
            return Err(TreeError::NotPermutation(tree.labels()));
        }
        Ok(tree)
    }
}

fn skip_spaces(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_tree(bytes: &[u8], pos: &mut usize) -> Result<ParenTree, TreeError> {
    skip_spaces(bytes, pos);
    match bytes.get(*pos) {
        Some(b'(') => {
            *pos += 1;
            let left = parse_tree(bytes, pos)?;
            let right = parse_tree(bytes, pos)?;
            skip_spaces(bytes, pos);
            if bytes.get(*pos) != Some(&b')') {
                return Err(TreeError::Parse {
                    pos: *pos,
                    msg: "expected `)`".into(),
                });
            }
            *pos += 1;
            Ok(ParenTree::pair(left, right))
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let digits = std::str::from_utf8(&bytes[start..*pos]).expect("ascii digits");
            let label: u8 = digits.parse().map_err(|_| TreeError::Parse {
                pos: start,
                msg: format!("label `{digits}` out of range"),
            })?;
            Ok(ParenTree::Leaf(label))
        }
        _ => Err(TreeError::Parse {
            pos: *pos,
            msg: "expected `(` or a leaf label".into(),
        }),
    }
}

impl fmt::Display for ParenTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParenTree::Leaf(k) => write!(f, "{k}"),
            ParenTree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

impl FromStr for ParenTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ParenTree::parse(s)
    }
}

/// Substitute `q` for the leaf of `p` labeled `slot`. The labels of `q`
/// shift up by `slot − 1` and the labels of `p` above `slot` shift up by
/// `arity(q) − 1`, so the result is again a parenthesized permutation.
pub fn magma_compose(p: &ParenTree, slot: u8, q: &ParenTree) -> Result<ParenTree, TreeError> {
    let n = p.arity();
    if slot < 1 || slot > n {
        return Err(TreeError::SlotOutOfRange { slot, arity: n });
    }
    let m = q.arity();
    fn graft(t: &ParenTree, slot: u8, q: &ParenTree, m: u8) -> ParenTree {
        match t {
            ParenTree::Leaf(k) if *k == slot => q.relabel(&|j| j + slot - 1),
            ParenTree::Leaf(k) if *k > slot => ParenTree::Leaf(k + m - 1),
            ParenTree::Leaf(k) => ParenTree::Leaf(*k),
            ParenTree::Node(l, r) => ParenTree::pair(graft(l, slot, q, m), graft(r, slot, q, m)),
        }
    }
    Ok(graft(p, slot, q, m))
}
