//! Sparse linear algebra over the exact rationals.
//!
//! Everything in this crate is computed with arbitrary-precision rational
//! numbers: there is no floating point and there are no tolerance knobs.
//! The central structure is [`EchelonBasis`], a row space kept permanently
//! in reduced row echelon form (RREF) with the pivot of each row at its
//! smallest-index column. The RREF of a row space is unique, so every
//! derived quantity (rank, reduction residues, solution sets) is fully
//! deterministic and independent of the order in which rows arrive.
//!
//! [`solve_affine`] layers affine systems `A·x = b` on top of the echelon
//! machinery: it reports either an inconsistency or a particular solution
//! together with a basis of the homogeneous kernel.
//!
//! Columns are plain `usize` indices. Callers are expected to maintain
//! their own mapping from semantic objects (monomials, unknowns) to column
//! indices; this crate never interprets them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{BigRational, Zero};

/// Exact rational scalar used throughout the workspace.
pub type Rat = BigRational;

/// Convenience constructor for a rational from an integer pair.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "rational with zero denominator");
    Rat::new(num.into(), den.into())
}

/// A sparse vector of rationals indexed by `usize` columns.
///
/// Invariant: no explicitly stored zero entries. All constructors and
/// mutators preserve this, so `==` is semantic equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SparseVec {
    /// Column index → nonzero coefficient.
    entries: BTreeMap<usize, Rat>,
}

impl SparseVec {
    /// The zero vector.
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a vector from `(column, coefficient)` pairs, summing
    /// duplicates and dropping zero results.
    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, Rat)>,
    {
        let mut v = Self::new();
        for (col, c) in entries {
            v.add_to(col, &c);
        }
        v
    }

    /// The standard basis vector `e_col`.
    pub fn unit(col: usize) -> Self {
        let mut v = Self::new();
        v.set(col, Rat::from_integer(1.into()));
        v
    }

    /// True when the vector has no nonzero entries.
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// The coefficient at `col`, cloning (zero when absent).
    pub fn get(&self, col: usize) -> Rat {
        self.entries.get(&col).cloned().unwrap_or_else(Rat::zero)
    }

    /// The stored coefficient at `col`, if nonzero.
    pub fn coeff(&self, col: usize) -> Option<&Rat> {
        self.entries.get(&col)
    }

    /// Sets the coefficient at `col`, removing the entry when zero.
    pub fn set(&mut self, col: usize, value: Rat) {
        if value.is_zero() {
            self.entries.remove(&col);
        } else {
            self.entries.insert(col, value);
        }
    }

    /// Adds `c` to the coefficient at `col`.
    pub fn add_to(&mut self, col: usize, c: &Rat) {
        let cur = self.get(col) + c;
        self.set(col, cur);
    }

    /// The entry with the smallest column index, if any.
    pub fn leading(&self) -> Option<(usize, &Rat)> {
        self.entries.iter().next().map(|(c, v)| (*c, v))
    }

    /// Iterates `(column, coefficient)` in increasing column order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.entries.iter().map(|(c, v)| (*c, v))
    }

    /// Iterates the nonzero columns in increasing order.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    /// In-place `self += scale · other`.
    pub fn add_scaled(&mut self, other: &SparseVec, scale: &Rat) {
        if scale.is_zero() {
            return;
        }
        for (col, c) in other.iter() {
            self.add_to(col, &(c * scale));
        }
    }

    /// In-place multiplication by a scalar.
    pub fn scale(&mut self, c: &Rat) {
        if c.is_zero() {
            self.entries.clear();
        } else {
            for v in self.entries.values_mut() {
                *v *= c;
            }
        }
    }

    /// Returns the vector divided by its leading coefficient, so the
    /// smallest-index entry becomes 1. Returns `None` for the zero vector.
    pub fn monic(&self) -> Option<SparseVec> {
        let (_, lead) = self.leading()?;
        let inv = lead.recip();
        let mut out = self.clone();
        out.scale(&inv);
        Some(out)
    }

    /// Dot product with another sparse vector.
    pub fn dot(&self, other: &SparseVec) -> Rat {
        let (small, large) = if self.nnz() <= other.nnz() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Rat::zero();
        for (col, c) in small.iter() {
            if let Some(d) = large.coeff(col) {
                acc += c * d;
            }
        }
        acc
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (col, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "c{col}: {c}")?;
        }
        write!(f, "}}")
    }
}

impl std::ops::Neg for &SparseVec {
    type Output = SparseVec;
    fn neg(self) -> SparseVec {
        let mut out = SparseVec::new();
        out.add_scaled(self, &rat(-1, 1));
        out
    }
}

impl std::ops::Add for &SparseVec {
    type Output = SparseVec;
    fn add(self, rhs: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(rhs, &rat(1, 1));
        out
    }
}

impl std::ops::Sub for &SparseVec {
    type Output = SparseVec;
    fn sub(self, rhs: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(rhs, &rat(-1, 1));
        out
    }
}

/// A row space maintained in reduced row echelon form.
///
/// Invariants, preserved by every method:
/// * each row is nonzero with leading (smallest-column) coefficient 1;
/// * rows are ordered by strictly increasing pivot column;
/// * a pivot column has zero coefficient in every other row.
///
/// Because the RREF of a row space is unique, two `EchelonBasis` values
/// built from generating sets of the same span compare equal.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct EchelonBasis {
    rows: Vec<SparseVec>,
}

impl EchelonBasis {
    /// The empty basis (rank 0).
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of rows, i.e. the dimension of the span.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The rows, ordered by increasing pivot column.
    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// The pivot columns in increasing order.
    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.leading().expect("nonzero row").0)
    }

    /// True when `col` is a pivot column of the basis.
    pub fn contains_pivot(&self, col: usize) -> bool {
        self.row_for_pivot(col).is_some()
    }

    /// The unique row whose pivot is `col`, if `col` is a pivot column.
    pub fn row_for_pivot(&self, col: usize) -> Option<&SparseVec> {
        self.rows
            .binary_search_by_key(&col, |r| r.leading().expect("nonzero row").0)
            .ok()
            .map(|i| &self.rows[i])
    }

    /// Reduces `v` modulo the span: subtracts multiples of the rows so the
    /// result has no support on any pivot column. The residue is zero
    /// exactly when `v` lies in the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        // RREF guarantees a row has no support on other rows' pivot
        // columns, so one pass over the rows cannot reintroduce a pivot.
        let mut out = v.clone();
        for row in &self.rows {
            let p = row.leading().expect("nonzero row").0;
            if let Some(c) = out.coeff(p) {
                let c = -c.clone();
                out.add_scaled(row, &c);
            }
        }
        out
    }

    /// Adjoins `v` to the span. Returns `true` when the rank grew (i.e.
    /// `v` was not already in the span).
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let reduced = self.reduce(v);
        let Some(new_row) = reduced.monic() else {
            return false;
        };
        let p = new_row.leading().expect("nonzero row").0;
        // Eliminate the new pivot column from the existing rows to keep
        // the basis fully reduced.
        for row in &mut self.rows {
            if let Some(c) = row.coeff(p) {
                let c = -c.clone();
                row.add_scaled(&new_row, &c);
            }
        }
        let at = self
            .rows
            .binary_search_by_key(&p, |r| r.leading().expect("nonzero row").0)
            .expect_err("pivot column already occupied");
        self.rows.insert(at, new_row);
        true
    }
}

/// Echelonizes a collection of rows into a reduced basis of their span.
pub fn echelonize<I>(rows: I) -> EchelonBasis
where
    I: IntoIterator<Item = SparseVec>,
{
    let mut basis = EchelonBasis::new();
    for row in rows {
        basis.insert(&row);
    }
    basis
}

/// A solution of a consistent affine system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    /// One solution vector (free unknowns set to zero).
    pub particular: SparseVec,
    /// Basis of the homogeneous kernel; the full solution set is
    /// `particular + span(kernel)`.
    pub kernel: Vec<SparseVec>,
    /// Rank of the coefficient matrix.
    pub rank: usize,
}

/// Result of [`solve_affine`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// The system is consistent.
    Solution(AffineSolution),
    /// The system has no solution; `rank` is the rank of the coefficient
    /// matrix (ignoring right-hand sides).
    Inconsistent { rank: usize },
}

impl SolveOutcome {
    /// The solution, if consistent.
    pub fn solution(&self) -> Option<&AffineSolution> {
        match self {
            SolveOutcome::Solution(s) => Some(s),
            SolveOutcome::Inconsistent { .. } => None,
        }
    }

    /// True when the system is consistent with a zero-dimensional kernel.
    pub fn is_unique(&self) -> bool {
        matches!(self, SolveOutcome::Solution(s) if s.kernel.is_empty())
    }
}

/// Internal sentinel column holding right-hand sides during augmented
/// elimination. `usize::MAX` sorts after every legitimate column, so the
/// sentinel can only become a pivot when a row's entire left-hand side has
/// been eliminated — the inconsistency signature.
const RHS_COL: usize = usize::MAX;

/// Solves the affine system given by `equations`, each a pair of a
/// coefficient row and a right-hand side.
///
/// The unknown universe is the union of the supports of the coefficient
/// rows. Unknowns that appear in no equation are not part of the system;
/// use [`solve_affine_with_columns`] to count them in the kernel.
pub fn solve_affine(equations: &[(SparseVec, Rat)]) -> SolveOutcome {
    solve_affine_with_columns(equations, std::iter::empty())
}

/// Like [`solve_affine`], but with the unknown universe explicitly
/// enlarged by `columns`. Unknowns in the universe that are constrained by
/// no equation contribute standard basis vectors to the kernel, so the
/// kernel dimension always equals `universe size − rank`.
pub fn solve_affine_with_columns<I>(equations: &[(SparseVec, Rat)], columns: I) -> SolveOutcome
where
    I: IntoIterator<Item = usize>,
{
    let mut universe: BTreeSet<usize> = columns.into_iter().collect();
    assert!(
        !universe.contains(&RHS_COL),
        "column index usize::MAX is reserved"
    );

    let mut augmented = EchelonBasis::new();
    let mut coefficient = EchelonBasis::new();
    for (lhs, rhs) in equations {
        assert!(
            lhs.coeff(RHS_COL).is_none(),
            "column index usize::MAX is reserved"
        );
        universe.extend(lhs.support());
        let mut row = lhs.clone();
        row.set(RHS_COL, rhs.clone());
        augmented.insert(&row);
        coefficient.insert(lhs);
    }

    if augmented.contains_pivot(RHS_COL) {
        return SolveOutcome::Inconsistent {
            rank: coefficient.rank(),
        };
    }

    // Consistent: in the augmented RREF each row reads
    //   x_pivot + Σ_{f free} c_f · x_f = rhs,
    // so setting all free unknowns to zero gives x_pivot = rhs.
    let mut particular = SparseVec::new();
    for row in augmented.rows() {
        let p = row.leading().expect("nonzero row").0;
        particular.set(p, row.get(RHS_COL));
    }

    // Kernel from the coefficient RREF: for each free column f, the vector
    // with 1 at f and −c_f at each pivot solves the homogeneous system.
    let pivot_cols: BTreeSet<usize> = coefficient.pivots().collect();
    let mut kernel = Vec::new();
    for &f in universe.iter().filter(|c| !pivot_cols.contains(c)) {
        let mut k = SparseVec::unit(f);
        for row in coefficient.rows() {
            if let Some(c) = row.coeff(f) {
                let p = row.leading().expect("nonzero row").0;
                k.set(p, -c.clone());
            }
        }
        kernel.push(k);
    }

    SolveOutcome::Solution(AffineSolution {
        particular,
        kernel,
        rank: coefficient.rank(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, i64, i64)]) -> SparseVec {
        SparseVec::from_entries(entries.iter().map(|&(c, n, d)| (c, rat(n, d))))
    }

    #[test]
    fn zero_vector_basics() {
        let v = SparseVec::new();
        assert!(v.is_zero());
        assert_eq!(v.get(7), Rat::zero());
        assert_eq!(v.leading(), None);
        assert_eq!(v.monic(), None);
    }

    #[test]
    fn from_entries_sums_duplicates_and_drops_zeros() {
        let v = SparseVec::from_entries(vec![
            (3, rat(1, 2)),
            (3, rat(1, 2)),
            (5, rat(2, 3)),
            (5, rat(-2, 3)),
        ]);
        assert_eq!(v, sv(&[(3, 1, 1)]));
        assert_eq!(v.nnz(), 1);
    }

    #[test]
    fn empty_basis_reduces_identically() {
        let basis = EchelonBasis::new();
        assert_eq!(basis.rank(), 0);
        let v = sv(&[(0, 2, 1), (4, -1, 3)]);
        assert_eq!(basis.reduce(&v), v);
    }

    #[test]
    fn proportional_rows_collapse_to_one_monic_row() {
        let basis = echelonize(vec![sv(&[(0, 2, 1), (1, 4, 1)]), sv(&[(0, 3, 1), (1, 6, 1)])]);
        assert_eq!(basis.rank(), 1);
        assert_eq!(basis.rows()[0], sv(&[(0, 1, 1), (1, 2, 1)]));
    }

    #[test]
    fn rref_is_fully_reduced() {
        // Two independent rows sharing columns: the pivot of each must be
        // absent from the other.
        let basis = echelonize(vec![
            sv(&[(0, 1, 1), (1, 1, 1), (2, 1, 1)]),
            sv(&[(0, 1, 1), (1, 2, 1), (2, 4, 1)]),
        ]);
        assert_eq!(basis.rank(), 2);
        let pivots: Vec<usize> = basis.pivots().collect();
        assert_eq!(pivots, vec![0, 1]);
        for row in basis.rows() {
            let p = row.leading().unwrap().0;
            assert_eq!(row.get(p), rat(1, 1));
            for other in basis.rows() {
                if other.leading().unwrap().0 != p {
                    assert!(other.coeff(p).is_none());
                }
            }
        }
    }

    #[test]
    fn insert_reports_span_membership() {
        let mut basis = EchelonBasis::new();
        assert!(basis.insert(&sv(&[(0, 1, 1), (1, 1, 1)])));
        assert!(basis.insert(&sv(&[(1, 1, 1), (2, 1, 1)])));
        // Sum of the two generators is already in the span.
        assert!(!basis.insert(&sv(&[(0, 1, 1), (1, 2, 1), (2, 1, 1)])));
        assert_eq!(basis.rank(), 2);
    }

    /// The three commutator-expansion rows of the arity-3 infinitesimal
    /// braid relations in degree 2, over the nine ordered words in the
    /// letters a = (1,2), b = (1,3), c = (2,3):
    ///   [a, b+c],  [b, a+c],  [c, a+b].
    /// Their sum telescopes to zero, so the rank is 2, not 3. Degenerate
    /// index choices contribute zero rows and must not disturb the rank.
    #[test]
    fn arity3_degree2_relation_rows_have_rank_2() {
        // Columns: words aa,ab,ac,ba,bb,bc,ca,cb,cc → 0..9.
        let r_a = sv(&[(1, 1, 1), (3, -1, 1), (2, 1, 1), (6, -1, 1)]);
        let r_b = sv(&[(3, 1, 1), (1, -1, 1), (5, 1, 1), (7, -1, 1)]);
        let r_c = sv(&[(6, 1, 1), (2, -1, 1), (7, 1, 1), (5, -1, 1)]);
        let zero = SparseVec::new();
        let mut rows = vec![r_a.clone(), r_b.clone(), r_c.clone()];
        rows.extend(std::iter::repeat(zero).take(6));

        let sum = &(&r_a + &r_b) + &r_c;
        assert!(sum.is_zero(), "the three rows must sum to zero");

        let basis = echelonize(rows);
        assert_eq!(basis.rank(), 2);
        // Each individual row still reduces to zero.
        assert!(basis.reduce(&r_c).is_zero());
    }

    #[test]
    fn solve_unique_system() {
        // x + y = 3, x − y = 1 → x = 2, y = 1.
        let eqs = vec![
            (sv(&[(0, 1, 1), (1, 1, 1)]), rat(3, 1)),
            (sv(&[(0, 1, 1), (1, -1, 1)]), rat(1, 1)),
        ];
        let out = solve_affine(&eqs);
        assert!(out.is_unique());
        let sol = out.solution().unwrap();
        assert_eq!(sol.particular, sv(&[(0, 2, 1), (1, 1, 1)]));
        assert_eq!(sol.rank, 2);
    }

    #[test]
    fn solve_underdetermined_kernel() {
        // x + y + z = 1: rank 1, kernel dimension 2.
        let eqs = vec![(sv(&[(0, 1, 1), (1, 1, 1), (2, 1, 1)]), rat(1, 1))];
        let out = solve_affine(&eqs);
        let sol = out.solution().unwrap();
        assert_eq!(sol.rank, 1);
        assert_eq!(sol.kernel.len(), 2);
        assert_eq!(sol.particular, sv(&[(0, 1, 1)]));
        for k in &sol.kernel {
            // Homogeneous: coefficients of each kernel vector sum to zero.
            let total: Rat = k.iter().map(|(_, c)| c.clone()).sum();
            assert!(total.is_zero());
        }
    }

    #[test]
    fn solve_inconsistent() {
        // x = 1 and x = 2.
        let eqs = vec![
            (sv(&[(0, 1, 1)]), rat(1, 1)),
            (sv(&[(0, 1, 1)]), rat(2, 1)),
        ];
        match solve_affine(&eqs) {
            SolveOutcome::Inconsistent { rank } => assert_eq!(rank, 1),
            other => panic!("expected inconsistency, got {other:?}"),
        }
    }

    #[test]
    fn unconstrained_columns_enter_the_kernel() {
        // Single equation x0 = 5, but the declared unknown universe also
        // contains columns 1 and 2.
        let eqs = vec![(sv(&[(0, 1, 1)]), rat(5, 1))];
        let out = solve_affine_with_columns(&eqs, [0, 1, 2]);
        let sol = out.solution().unwrap();
        assert_eq!(sol.rank, 1);
        assert_eq!(sol.kernel.len(), 2);
        assert_eq!(sol.kernel[0], SparseVec::unit(1));
        assert_eq!(sol.kernel[1], SparseVec::unit(2));
    }

    #[test]
    fn zero_rhs_on_zero_row_is_consistent() {
        let eqs = vec![(SparseVec::new(), rat(0, 1))];
        assert!(solve_affine(&eqs).solution().is_some());
        let eqs = vec![(SparseVec::new(), rat(1, 1))];
        assert!(matches!(
            solve_affine(&eqs),
            SolveOutcome::Inconsistent { rank: 0 }
        ));
    }
}
