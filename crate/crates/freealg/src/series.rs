//! Truncated series arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Zero};

use crate::{GeneratorId, Monomial, PresentationId, Rat};

/// A rational linear combination of generator words, truncated above a
/// fixed degree.
///
/// Arithmetic is that of the free associative algebra: words multiply by
/// concatenation and terms whose degree exceeds the truncation are
/// discarded. Quotient presentations reuse this representation; their
/// normal-form reduction lives downstream. Two series interoperate only
/// when they share both the algebra identifier and the truncation degree.
///
/// Invariants: no stored zero coefficients, every word has degree ≤ the
/// truncation, every letter belongs to the algebra's alphabet.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    algebra: PresentationId,
    trunc: usize,
    coeffs: BTreeMap<Monomial, Rat>,
}

impl Series {
    /// The zero series.
    pub fn zero(algebra: PresentationId, trunc: usize) -> Self {
        Series {
            algebra,
            trunc,
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit series 1.
    pub fn one(algebra: PresentationId, trunc: usize) -> Self {
        Series::scalar(algebra, trunc, Rat::one())
    }

    /// A scalar multiple of the unit.
    pub fn scalar(algebra: PresentationId, trunc: usize, c: Rat) -> Self {
        let mut s = Series::zero(algebra, trunc);
        s.add_term(Monomial::one(), c);
        s
    }

    /// The degree-1 series consisting of a single generator.
    ///
    /// Panics when the generator is not in the algebra's alphabet or the
    /// truncation cannot hold a degree-1 term.
    pub fn generator(algebra: PresentationId, trunc: usize, g: GeneratorId) -> Self {
        assert!(
            algebra.contains(g),
            "generator {g} is not in the alphabet of {algebra}"
        );
        assert!(trunc >= 1, "truncation 0 cannot hold a generator");
        let mut s = Series::zero(algebra, trunc);
        s.add_term(Monomial::generator(g), Rat::one());
        s
    }

    /// Builds a series from terms, summing duplicates, dropping zero sums
    /// and truncating words of degree beyond `trunc`.
    ///
    /// Panics when a word uses a letter outside the algebra's alphabet.
    pub fn from_terms<I>(algebra: PresentationId, trunc: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rat)>,
    {
        let mut s = Series::zero(algebra, trunc);
        for (m, c) in terms {
            for &g in m.letters() {
                assert!(
                    algebra.contains(g),
                    "letter {g} is not in the alphabet of {algebra}"
                );
            }
            s.add_term(m, c);
        }
        s
    }

    pub fn algebra(&self) -> PresentationId {
        self.algebra
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// The coefficient of a word (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.coeffs.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one())
    }

    /// Iterates `(word, coefficient)` in degree-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.coeffs.iter()
    }

    /// The smallest degree carrying a nonzero term.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Monomial::degree).min()
    }

    /// The largest degree carrying a nonzero term.
    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Monomial::degree).max()
    }

    /// The homogeneous part of the given degree.
    pub fn degree_part(&self, degree: usize) -> Series {
        let mut out = Series::zero(self.algebra, self.trunc);
        for (m, c) in self.terms() {
            if m.degree() == degree {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Re-truncates to a (typically lower) degree, dropping excess terms.
    pub fn truncated(&self, trunc: usize) -> Series {
        let mut out = Series::zero(self.algebra, trunc);
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Adds `c·m` in place, respecting truncation and zero cleanup.
    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() || m.degree() > self.trunc {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn assert_compatible(&self, other: &Series, op: &str) {
        assert!(
            self.algebra == other.algebra && self.trunc == other.trunc,
            "{op}: mismatched series contexts {}@{} vs {}@{}",
            self.algebra,
            self.trunc,
            other.algebra,
            other.trunc
        );
    }

    /// In-place `self += scale · other`.
    pub fn add_scaled(&mut self, other: &Series, scale: &Rat) {
        self.assert_compatible(other, "add");
        if scale.is_zero() {
            return;
        }
        for (m, c) in other.terms() {
            self.add_term(m.clone(), c * scale);
        }
    }

    /// The series multiplied by a scalar.
    pub fn scaled(&self, c: &Rat) -> Series {
        let mut out = Series::zero(self.algebra, self.trunc);
        out.add_scaled(self, c);
        out
    }

    /// Truncated free product.
    pub fn mul(&self, other: &Series) -> Series {
        self.assert_compatible(other, "mul");
        let mut out = Series::zero(self.algebra, self.trunc);
        for (m1, c1) in self.terms() {
            let headroom = self.trunc - m1.degree();
            for (m2, c2) in other.terms() {
                if m2.degree() > headroom {
                    continue;
                }
                out.add_term(m1.concat(m2), c1 * c2);
            }
        }
        out
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: usize) -> Series {
        let mut acc = Series::one(self.algebra, self.trunc);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Truncated exponential `Σ self^k / k!`.
    ///
    /// Panics unless the constant term is zero.
    pub fn exp(&self) -> Series {
        assert!(
            self.constant_term().is_zero(),
            "exp requires zero constant term"
        );
        let mut acc = Series::one(self.algebra, self.trunc);
        let mut power = Series::one(self.algebra, self.trunc);
        let mut factorial = BigInt::one();
        for k in 1..=self.trunc {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            factorial *= k;
            let inv = Rat::new(BigInt::one(), factorial.clone());
            acc.add_scaled(&power, &inv);
        }
        acc
    }

    /// Truncated logarithm `Σ (−1)^{k+1} (self − 1)^k / k`.
    ///
    /// Panics unless the constant term is one.
    pub fn log(&self) -> Series {
        assert!(
            self.constant_term().is_one(),
            "log requires constant term 1"
        );
        let mut u = self.clone();
        u.add_term(Monomial::one(), -Rat::one());
        let mut acc = Series::zero(self.algebra, self.trunc);
        let mut power = Series::one(self.algebra, self.trunc);
        for k in 1..=self.trunc {
            power = power.mul(&u);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let coeff = Rat::new(BigInt::from(sign), BigInt::from(k));
            acc.add_scaled(&power, &coeff);
        }
        acc
    }

    /// Multiplicative inverse via the geometric series.
    ///
    /// Panics unless the constant term is nonzero.
    pub fn inverse(&self) -> Series {
        let c = self.constant_term();
        assert!(!c.is_zero(), "inverse requires nonzero constant term");
        let c_inv = c.recip();
        // self = c (1 + u) with u of positive minimal degree.
        let mut u = self.scaled(&c_inv);
        u.add_term(Monomial::one(), -Rat::one());
        let mut acc = Series::one(self.algebra, self.trunc);
        let mut power = Series::one(self.algebra, self.trunc);
        for _ in 1..=self.trunc {
            power = power.mul(&u);
            if power.is_zero() {
                break;
            }
            power = power.scaled(&-Rat::one());
            acc.add_scaled(&power, &Rat::one());
        }
        acc.scaled(&c_inv)
    }

    /// Conjugate `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Series) -> Series {
        g.mul(self).mul(&g.inverse())
    }

    /// Algebra map defined by a generator assignment: every letter of
    /// every word is replaced by its image series (all in `target`, same
    /// truncation) and the word becomes the ordered product of the images.
    pub fn substitute<F>(&self, target: PresentationId, image: F) -> Series
    where
        F: Fn(GeneratorId) -> Series,
    {
        let mut out = Series::zero(target, self.trunc);
        for (m, c) in self.terms() {
            let mut prod = Series::one(target, self.trunc);
            for &g in m.letters() {
                let img = image(g);
                assert!(
                    img.algebra() == target && img.trunc() == self.trunc,
                    "substitution image of {g} has context {}@{}, expected {}@{}",
                    img.algebra(),
                    img.trunc(),
                    target,
                    self.trunc
                );
                prod = prod.mul(&img);
                if prod.is_zero() {
                    break;
                }
            }
            out.add_scaled(&prod, c);
        }
        out
    }

    /// Letter-wise relabeling into `target`; a special case of
    /// [`Series::substitute`] that keeps words as words.
    pub fn map_letters<F>(&self, target: PresentationId, mut f: F) -> Series
    where
        F: FnMut(GeneratorId) -> GeneratorId,
    {
        let mut out = Series::zero(target, self.trunc);
        for (m, c) in self.terms() {
            let mapped = m.map_letters(&mut f);
            for &g in mapped.letters() {
                assert!(
                    target.contains(g),
                    "relabeled letter {g} is not in the alphabet of {target}"
                );
            }
            out.add_term(mapped, c.clone());
        }
        out
    }

    /// The anti-automorphism reversing every word.
    pub fn reversed(&self) -> Series {
        let mut out = Series::zero(self.algebra, self.trunc);
        for (m, c) in self.terms() {
            out.add_term(m.reversed(), c.clone());
        }
        out
    }

    /// Splits every word over the subset-split coproduct
    /// Δ(g) = g⊗1 + 1⊗g and collects coefficients on word pairs.
    ///
    /// For a word of degree n, each of the 2^n position subsets S
    /// contributes the pair (letters in S, letters not in S), both in
    /// their original order.
    pub fn coproduct(&self) -> BTreeMap<(Monomial, Monomial), Rat> {
        let mut delta: BTreeMap<(Monomial, Monomial), Rat> = BTreeMap::new();
        for (m, c) in self.terms() {
            let letters = m.letters();
            let n = letters.len();
            for mask in 0u32..(1u32 << n) {
                let mut left = Vec::new();
                let mut right = Vec::new();
                for (pos, &g) in letters.iter().enumerate() {
                    if mask & (1 << pos) != 0 {
                        left.push(g);
                    } else {
                        right.push(g);
                    }
                }
                let key = (
                    Monomial::from_letters(left),
                    Monomial::from_letters(right),
                );
                let entry = delta.entry(key).or_insert_with(Rat::zero);
                *entry += c;
            }
        }
        delta.retain(|_, v| !v.is_zero());
        delta
    }

    /// Group-likeness test Δ(x) = x ⊗ x on the free word basis.
    ///
    /// Exact for free presentations. For quotient presentations this must
    /// be called through the chord-algebra layer, which reduces both
    /// tensor legs to normal form first.
    pub fn is_grouplike(&self) -> bool {
        let delta = self.coproduct();
        let mut product: BTreeMap<(Monomial, Monomial), Rat> = BTreeMap::new();
        for (u, cu) in self.terms() {
            for (v, cv) in self.terms() {
                if u.degree() + v.degree() > self.trunc {
                    continue;
                }
                product.insert((u.clone(), v.clone()), cu * cv);
            }
        }
        product.retain(|_, v| !v.is_zero());
        delta == product
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{}@{}](", self.algebra, self.trunc)?;
        if self.is_zero() {
            write!(f, "0")?;
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{m}")?;
        }
        write!(f, ")")
    }
}

impl std::ops::Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rat::one());
        out
    }
}

impl std::ops::Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rat::one());
        out
    }
}

impl std::ops::Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scaled(&-Rat::one())
    }
}

impl std::ops::Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        Series::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn free2() -> PresentationId {
        PresentationId::free(2)
    }

    fn x(trunc: usize) -> Series {
        Series::generator(free2(), trunc, GeneratorId::letter(0))
    }

    fn y(trunc: usize) -> Series {
        Series::generator(free2(), trunc, GeneratorId::letter(1))
    }

    #[test]
    fn product_concatenates_and_truncates() {
        let p = x(2).mul(&y(2));
        let xy = Monomial::from_letters([GeneratorId::letter(0), GeneratorId::letter(1)]);
        assert_eq!(p.coeff(&xy), rat(1, 1));
        assert_eq!(p.num_terms(), 1);
        // Truncation at 1 kills the degree-2 word.
        assert!(x(1).mul(&y(1)).is_zero());
    }

    #[test]
    fn unit_is_neutral() {
        let s = &(&x(3) + &y(3)) * &x(3);
        let one = Series::one(free2(), 3);
        assert_eq!(one.mul(&s), s);
        assert_eq!(s.mul(&one), s);
    }

    #[test]
    fn exp_of_single_generator() {
        let e = x(3).exp();
        assert_eq!(e.constant_term(), rat(1, 1));
        let xx = Monomial::from_letters([GeneratorId::letter(0); 2]);
        let xxx = Monomial::from_letters([GeneratorId::letter(0); 3]);
        assert_eq!(e.coeff(&xx), rat(1, 2));
        assert_eq!(e.coeff(&xxx), rat(1, 6));
    }

    #[test]
    fn exp_log_round_trip() {
        let a = &(&x(4) + &y(4).scaled(&rat(2, 3))) + &x(4).mul(&y(4));
        assert_eq!(a.exp().log(), a);
        let g = a.exp();
        assert_eq!(g.log().exp(), g);
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let s = &Series::one(free2(), 4) + &x(4).mul(&y(4)).scaled(&rat(3, 7));
        let inv = s.inverse();
        assert_eq!(s.mul(&inv), Series::one(free2(), 4));
        assert_eq!(inv.mul(&s), Series::one(free2(), 4));
        // Non-unit constant term.
        let t = &Series::scalar(free2(), 3, rat(5, 2)) + &y(3);
        assert_eq!(t.mul(&t.inverse()), Series::one(free2(), 3));
    }

    #[test]
    fn exp_is_grouplike_and_sums_are_not() {
        let g = (&x(4) + &y(4)).exp();
        assert!(g.is_grouplike());
        // 1 + x is not group-like (fails at the (x,x) pair).
        let s = &Series::one(free2(), 4) + &x(4);
        assert!(!s.is_grouplike());
        // Wrong constant term fails immediately.
        assert!(!x(4).is_grouplike());
    }

    #[test]
    fn grouplike_products_stay_grouplike() {
        let g = x(4).exp().mul(&y(4).exp());
        assert!(g.is_grouplike());
        assert!(g.inverse().is_grouplike());
    }

    #[test]
    fn bch_degree_three() {
        // log(e^x e^y) = x + y + [x,y]/2 + [x,[x,y]]/12 + [y,[y,x]]/12 + …
        let z = x(3).exp().mul(&y(3).exp()).log();
        let xs = GeneratorId::letter(0);
        let ys = GeneratorId::letter(1);
        let w = |ls: &[GeneratorId]| Monomial::from_letters(ls.iter().copied());
        assert_eq!(z.coeff(&w(&[xs])), rat(1, 1));
        assert_eq!(z.coeff(&w(&[ys])), rat(1, 1));
        assert_eq!(z.coeff(&w(&[xs, ys])), rat(1, 2));
        assert_eq!(z.coeff(&w(&[ys, xs])), rat(-1, 2));
        // Degree 3: (xxy − 2xyx + yxx)/12 + (yyx − 2yxy + xyy)/12.
        assert_eq!(z.coeff(&w(&[xs, xs, ys])), rat(1, 12));
        assert_eq!(z.coeff(&w(&[xs, ys, xs])), rat(-2, 12));
        assert_eq!(z.coeff(&w(&[ys, xs, xs])), rat(1, 12));
        assert_eq!(z.coeff(&w(&[ys, ys, xs])), rat(1, 12));
        assert_eq!(z.coeff(&w(&[ys, xs, ys])), rat(-2, 12));
        assert_eq!(z.coeff(&w(&[xs, ys, ys])), rat(1, 12));
        assert_eq!(z.coeff(&w(&[xs, xs, xs])), rat(0, 1));
    }

    #[test]
    fn substitution_is_multiplicative() {
        let target = PresentationId::ft(2);
        let image = |g: GeneratorId| match g {
            GeneratorId::Letter(0) => Series::generator(target, 3, GeneratorId::t(1, 2)),
            GeneratorId::Letter(1) => {
                let t11 = Series::generator(target, 3, GeneratorId::t(1, 1));
                let t12 = Series::generator(target, 3, GeneratorId::t(1, 2));
                &t11 + &t12.scaled(&rat(2, 1))
            }
            _ => unreachable!(),
        };
        let a = &x(3) + &x(3).mul(&y(3));
        let b = &y(3) + &Series::one(free2(), 3);
        let lhs = a.mul(&b).substitute(target, image);
        let rhs = a.substitute(target, image).mul(&b.substitute(target, image));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_parts_partition() {
        let s = &(&x(3) + &x(3).mul(&y(3))) + &Series::one(free2(), 3);
        let mut sum = Series::zero(free2(), 3);
        for d in 0..=3 {
            sum.add_scaled(&s.degree_part(d), &rat(1, 1));
        }
        assert_eq!(sum, s);
        assert_eq!(s.min_degree(), Some(0));
        assert_eq!(s.max_degree(), Some(2));
    }

    #[test]
    #[should_panic(expected = "mismatched series contexts")]
    fn mixing_truncations_panics() {
        let _ = x(3).mul(&x(4));
    }

    #[test]
    #[should_panic(expected = "not in the alphabet")]
    fn foreign_generator_panics() {
        let _ = Series::generator(free2(), 3, GeneratorId::t(1, 2));
    }
}
