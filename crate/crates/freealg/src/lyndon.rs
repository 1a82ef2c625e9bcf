//! Lyndon words and their standard-factorization bracketings.
//!
//! A Lyndon word is a nonempty word strictly smaller (lexicographically)
//! than every one of its proper rotations; equivalently, strictly smaller
//! than every proper suffix. The bracketings of Lyndon words along their
//! standard factorization form a basis of the free Lie algebra, which is
//! what the degree-wise equation solver uses as its ansatz coordinates.

use crate::{GeneratorId, Monomial, PresentationId, Series};

/// All Lyndon words over `alphabet` of length 1..=`max_degree`, grouped
/// by length (`result[d]` holds the words of length `d+1`), each group in
/// lexicographic order.
///
/// The alphabet must be strictly increasing in the generator order, so
/// that index-word comparisons agree with letter comparisons.
pub fn lyndon_words(alphabet: &[GeneratorId], max_degree: usize) -> Vec<Vec<Monomial>> {
    assert!(
        alphabet.windows(2).all(|w| w[0] < w[1]),
        "alphabet must be strictly increasing"
    );
    let k = alphabet.len();
    let mut grouped: Vec<Vec<Monomial>> = vec![Vec::new(); max_degree];
    if k == 0 || max_degree == 0 {
        return grouped;
    }
    // Duval's generation: emits every Lyndon index word of length ≤ n in
    // lexicographic order.
    let mut w: Vec<usize> = vec![0];
    loop {
        grouped[w.len() - 1].push(Monomial::from_letters(w.iter().map(|&i| alphabet[i])));
        // Extend w periodically to the maximal length…
        let period = w.len();
        while w.len() < max_degree {
            let next = w[w.len() % period];
            w.push(next);
        }
        // …then strip trailing maximal letters and increment.
        while let Some(&last) = w.last() {
            if last == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            None => return grouped,
            Some(last) => *last += 1,
        }
    }
}

/// The standard factorization `w = u·v` of a Lyndon word of length ≥ 2:
/// `v` is the lexicographically least proper suffix (equivalently the
/// longest proper Lyndon suffix), and then `u` is Lyndon as well.
pub fn standard_factorization(word: &Monomial) -> (Monomial, Monomial) {
    let letters = word.letters();
    assert!(letters.len() >= 2, "standard factorization needs length ≥ 2");
    let mut best = 1;
    for start in 2..letters.len() {
        if letters[start..] < letters[best..] {
            best = start;
        }
    }
    (
        Monomial::from_letters(letters[..best].iter().copied()),
        Monomial::from_letters(letters[best..].iter().copied()),
    )
}

/// The iterated-commutator series of a Lyndon word along its standard
/// factorization: a single letter maps to itself, and `w = u·v` maps to
/// `[b(u), b(v)] = b(u)b(v) − b(v)b(u)`.
pub fn lyndon_bracketing(word: &Monomial, algebra: PresentationId, trunc: usize) -> Series {
    let letters = word.letters();
    assert!(!letters.is_empty(), "bracketing of the empty word");
    if letters.len() == 1 {
        return Series::generator(algebra, trunc, letters[0]);
    }
    let (u, v) = standard_factorization(word);
    let bu = lyndon_bracketing(&u, algebra, trunc);
    let bv = lyndon_bracketing(&v, algebra, trunc);
    &bu.mul(&bv) - &bv.mul(&bu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn xy() -> Vec<GeneratorId> {
        vec![GeneratorId::letter(0), GeneratorId::letter(1)]
    }

    #[test]
    fn small_lyndon_words_over_two_letters() {
        let words = lyndon_words(&xy(), 3);
        let names: Vec<Vec<String>> = words
            .iter()
            .map(|g| g.iter().map(|m| format!("{m}")).collect())
            .collect();
        assert_eq!(names[0], vec!["x", "y"]);
        assert_eq!(names[1], vec!["x·y"]);
        assert_eq!(names[2], vec!["x·x·y", "x·y·y"]);
    }

    #[test]
    fn lyndon_words_are_smaller_than_proper_suffixes() {
        for group in lyndon_words(&xy(), 6) {
            for w in group {
                let letters = w.letters();
                for s in 1..letters.len() {
                    assert!(
                        letters[..] < letters[s..],
                        "{w} is not smaller than its suffix at {s}"
                    );
                }
            }
        }
    }

    #[test]
    fn standard_factorization_of_known_words() {
        let x = GeneratorId::letter(0);
        let y = GeneratorId::letter(1);
        let w = Monomial::from_letters([x, x, y, x, y]);
        let (u, v) = standard_factorization(&w);
        assert_eq!(u, Monomial::from_letters([x, x, y]));
        assert_eq!(v, Monomial::from_letters([x, y]));
    }

    #[test]
    fn bracketing_of_xy_is_the_commutator() {
        let alg = PresentationId::free(2);
        let w = Monomial::from_letters([GeneratorId::letter(0), GeneratorId::letter(1)]);
        let b = lyndon_bracketing(&w, alg, 2);
        assert_eq!(b.coeff(&w), rat(1, 1));
        assert_eq!(b.coeff(&w.reversed()), rat(-1, 1));
        assert_eq!(b.num_terms(), 2);
    }
}
