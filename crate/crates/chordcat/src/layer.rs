//! Horizontal layers of a chord-diagram word.
//!
//! A word is read bottom to top: the first layer is applied to the source
//! object, the last layer produces the target.  Each layer acts on the
//! *width* (strand count) of the object passing through it:
//!
//! * `Cup(i)` inserts a freshly paired pair of strands at positions
//!   `(i, i + 1)`, raising the width by two (`1 ≤ i ≤ w + 1`).
//! * `Cap(i)` joins the adjacent strands `(i, i + 1)`, lowering the width
//!   by two (`1 ≤ i ≤ w − 1`).
//! * `Perm(σ)` rewires strands: the strand entering at position `p` leaves
//!   at position `σ[p − 1]` (`σ` is a permutation written as an image
//!   list).
//! * `Slice(u)` is a horizontal chord slice: an element of the completed
//!   framed infinitesimal-braid algebra on `w` strands, truncated at the
//!   working chord degree.

use freealg::{GeneratorId, PresentationId, Series};

use crate::error::ChordError;

/// One horizontal layer of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Layer {
    /// Insert a paired pair of strands at positions `(i, i + 1)`.
    Cup(usize),
    /// Join the adjacent strands `(i, i + 1)`.
    Cap(usize),
    /// Rewire strands by a permutation given as an image list.
    Perm(Vec<usize>),
    /// A chord slice on the strands currently present.
    Slice(Series),
}

impl Layer {
    /// Validate this layer at input width `width` and return the output
    /// width.  `index` is only used for error reporting.
    pub fn chase(&self, width: usize, index: usize) -> Result<usize, ChordError> {
        let bad = |reason: String| ChordError::BadLayer {
            index,
            width,
            reason,
        };
        match self {
            Layer::Cup(i) => {
                if *i == 0 || *i > width + 1 {
                    return Err(bad(format!("cup position {i} outside 1..={}", width + 1)));
                }
                Ok(width + 2)
            }
            Layer::Cap(i) => {
                if width < 2 || *i == 0 || *i > width - 1 {
                    return Err(bad(format!("cap position {i} outside 1..={}", width.saturating_sub(1))));
                }
                Ok(width - 2)
            }
            Layer::Perm(sigma) => {
                if sigma.len() != width {
                    return Err(bad(format!(
                        "permutation on {} strands at width {width}",
                        sigma.len()
                    )));
                }
                let mut seen = vec![false; width];
                for &image in sigma {
                    if image == 0 || image > width || seen[image - 1] {
                        return Err(bad(format!("invalid permutation image list {sigma:?}")));
                    }
                    seen[image - 1] = true;
                }
                Ok(width)
            }
            Layer::Slice(u) => {
                let expected = PresentationId::ft(width as u8);
                if u.algebra() != expected {
                    return Err(ChordError::AlgebraMismatch {
                        expected,
                        found: u.algebra(),
                    });
                }
                Ok(width)
            }
        }
    }

    /// The slice payload, if this layer is a slice.
    pub fn slice_value(&self) -> Option<&Series> {
        match self {
            Layer::Slice(u) => Some(u),
            _ => None,
        }
    }
}

/// Strand indices appearing in the letters of a slice value.
pub(crate) fn slice_support(u: &Series) -> Vec<u8> {
    let mut seen = [false; 64];
    for (monomial, _) in u.terms() {
        for letter in monomial.letters() {
            if let GeneratorId::T(i, j) = letter {
                seen[*i as usize] = true;
                seen[*j as usize] = true;
            }
        }
    }
    (0..64).filter(|&k| seen[k]).map(|k| k as u8).collect()
}

/// Compose two image lists: first `below`, then `above`.
pub(crate) fn perm_compose(below: &[usize], above: &[usize]) -> Vec<usize> {
    below.iter().map(|&mid| above[mid - 1]).collect()
}

/// Invert an image list.
pub(crate) fn perm_inverse(sigma: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; sigma.len()];
    for (p, &image) in sigma.iter().enumerate() {
        inv[image - 1] = p + 1;
    }
    inv
}

/// Whether an image list is the identity.
pub(crate) fn perm_is_identity(sigma: &[usize]) -> bool {
    sigma.iter().enumerate().all(|(p, &image)| image == p + 1)
}

#[cfg(test)]
mod tests {
    use freealg::{GeneratorId, PresentationId, Series};

    use super::*;

    #[test]
    fn chase_tracks_widths() {
        assert_eq!(Layer::Cup(1).chase(0, 0).unwrap(), 2);
        assert_eq!(Layer::Cup(3).chase(2, 0).unwrap(), 4);
        assert_eq!(Layer::Cap(1).chase(2, 0).unwrap(), 0);
        assert_eq!(Layer::Perm(vec![2, 1]).chase(2, 0).unwrap(), 2);
        let u = Series::generator(PresentationId::ft(2), 2, GeneratorId::t(1, 2));
        assert_eq!(Layer::Slice(u).chase(2, 0).unwrap(), 2);
    }

    #[test]
    fn invalid_layers_are_rejected() {
        assert!(Layer::Cup(0).chase(2, 0).is_err());
        assert!(Layer::Cup(4).chase(2, 0).is_err());
        assert!(Layer::Cap(1).chase(1, 0).is_err());
        assert!(Layer::Cap(2).chase(2, 0).is_err());
        assert!(Layer::Perm(vec![1, 1]).chase(2, 0).is_err());
        assert!(Layer::Perm(vec![1]).chase(2, 0).is_err());
        let u = Series::generator(PresentationId::ft(3), 2, GeneratorId::t(1, 2));
        assert!(Layer::Slice(u).chase(2, 0).is_err());
    }

    #[test]
    fn permutation_helpers_agree() {
        let sigma = vec![2, 3, 1];
        let inv = perm_inverse(&sigma);
        assert_eq!(inv, vec![3, 1, 2]);
        assert!(perm_is_identity(&perm_compose(&sigma, &inv)));
        assert!(perm_is_identity(&perm_compose(&inv, &sigma)));
    }

    #[test]
    fn support_lists_touched_strands() {
        let algebra = PresentationId::ft(4);
        let t23 = Series::generator(algebra.clone(), 2, GeneratorId::t(2, 3));
        let t14 = Series::generator(algebra, 2, GeneratorId::t(1, 4));
        let sum = &t23 + &t14;
        assert_eq!(slice_support(&t23), vec![2, 3]);
        assert_eq!(slice_support(&sum), vec![1, 2, 3, 4]);
    }
}
