//! Per-degree normal-form tables for the quotient presentations.
//!
//! A [`NormalFormTable`] fixes a presentation and a maximal degree and
//! reduces any series of that presentation to a canonical representative
//! modulo the defining ideal. The construction is pure linear algebra:
//!
//! 1. the degree-one relations (residues) are echelonized over the
//!    generator alphabet, which eliminates a deterministic set of
//!    generators — in the spherical presentation every index-0 generator,
//!    in the sphere-braid presentation every index-1 generator;
//! 2. for each degree `d ≥ 2`, all word multiples `u·r·v` of the
//!    substituted degree-two relations are echelonized over the words in
//!    the kept generators, giving a reduced row echelon basis of the
//!    ideal's degree-`d` slice. Pivot words rewrite to combinations of
//!    non-pivot words; the non-pivot words form the normal-form basis.
//!
//! Reduced row echelon form is unique, so the table — and every normal
//! form computed from it — depends only on the presentation, the degree,
//! and the global monomial order, never on construction order. That
//! uniqueness is also what makes the tables safely cacheable.
//!
//! Framed planar presentations are not echelonized directly: their
//! diagonal generators are central and satisfy no other relations, so the
//! algebra splits as (commutative polynomials in the diagonals) ⊗ (the
//! unframed quotient). [`NormalFormTable`] exploits the split by sorting
//! diagonal letters to the front of each word and reducing the off-
//! diagonal remainder with the unframed table. This keeps the echelon
//! work on alphabets of at most a dozen generators.
//!
//! Tables are memoized in-process and, when a cache directory is
//! configured (via [`set_cache_dir`] or the `GRT_CACHE_DIR` environment
//! variable), persisted to disk. Cache entries are addressed by
//! presentation descriptor, degree, and a format-version tag covering the
//! monomial order, so stale entries from older layouts are never reused.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use freealg::{series_from_text, series_to_text, GeneratorId, Monomial, PresentationId, Rat, Series};
use num::Zero;
use once_cell::sync::Lazy;
use parking_lot::{Mutex, RwLock};
use ratmat::{EchelonBasis, SparseVec};
use serde::{Deserialize, Serialize};

use crate::relations::relation_set;

/// Version tag of the monomial order and table layout, baked into every
/// cache key so that format changes invalidate old entries.
pub const TABLE_FORMAT_VERSION: &str = "deglex-1";

/// A normal-form table for one presentation up to a fixed degree.
pub struct NormalFormTable {
    presentation: PresentationId,
    degree: usize,
    kind: TableKind,
}

enum TableKind {
    /// Free presentations: every word is already normal.
    Free,
    /// Framed planar presentation: central diagonal letters are sorted to
    /// the front and the off-diagonal remainder is reduced by the
    /// unframed table.
    FramedSplit { inner: Arc<NormalFormTable> },
    /// General quotient: explicit per-degree echelon data.
    Quotient(QuotientTable),
}

struct QuotientTable {
    /// Generators surviving the degree-one elimination, ascending.
    kept: Vec<GeneratorId>,
    /// Images of the eliminated generators over the kept ones.
    eliminated: BTreeMap<GeneratorId, Series>,
    /// `reductions[d]`: pivot word of degree `d` → its expansion over
    /// normal-form words. Entries for `d < 2` are empty.
    reductions: Vec<BTreeMap<Monomial, Series>>,
    /// `rank[d]`: number of pivot words of degree `d`.
    rank: Vec<usize>,
}

impl NormalFormTable {
    /// The memoized table for `p` covering degrees `0..=degree`.
    ///
    /// Tables are built at most once per process for each
    /// `(presentation, degree)` pair; concurrent callers may race to
    /// build the same table, but the result is unique (RREF), so
    /// whichever copy lands in the registry is correct.
    pub fn get(p: PresentationId, degree: usize) -> Arc<NormalFormTable> {
        static REGISTRY: Lazy<Mutex<BTreeMap<(PresentationId, usize), Arc<NormalFormTable>>>> =
            Lazy::new(|| Mutex::new(BTreeMap::new()));
        if let Some(t) = REGISTRY.lock().get(&(p, degree)) {
            return Arc::clone(t);
        }
        let built = Arc::new(NormalFormTable::build(p, degree));
        let mut reg = REGISTRY.lock();
        Arc::clone(reg.entry((p, degree)).or_insert(built))
    }

    fn build(p: PresentationId, degree: usize) -> NormalFormTable {
        let kind = match p {
            PresentationId::Free { .. } => TableKind::Free,
            PresentationId::DrinfeldKohno { strands, framed: true } => TableKind::FramedSplit {
                inner: NormalFormTable::get(PresentationId::t(strands), degree),
            },
            _ => {
                let table = match load_cached(p, degree) {
                    Some(t) => t,
                    None => {
                        let t = build_quotient(p, degree);
                        store_cached(p, degree, &t);
                        t
                    }
                };
                TableKind::Quotient(table)
            }
        };
        NormalFormTable { presentation: p, degree, kind }
    }

    pub fn presentation(&self) -> PresentationId {
        self.presentation
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Canonical representative of `s` modulo the defining ideal.
    ///
    /// The result has the same context as `s`; it is zero exactly when
    /// `s` lies in the ideal. Panics if `s` belongs to a different
    /// presentation or exceeds the table degree.
    pub fn normal_form(&self, s: &Series) -> Series {
        assert!(
            s.algebra() == self.presentation,
            "series context {} does not match table {}",
            s.algebra(),
            self.presentation
        );
        assert!(
            s.max_degree().unwrap_or(0) <= self.degree,
            "series degree exceeds table degree {}",
            self.degree
        );
        match &self.kind {
            TableKind::Free => s.clone(),
            TableKind::FramedSplit { inner } => {
                // Group words by their (sorted) diagonal content and
                // reduce each off-diagonal remainder with the unframed
                // table in one pass.
                let mut groups: BTreeMap<Vec<GeneratorId>, Series> = BTreeMap::new();
                let unframed = inner.presentation;
                for (m, c) in s.terms() {
                    let mut diag: Vec<GeneratorId> = Vec::new();
                    let mut rest: Vec<GeneratorId> = Vec::new();
                    for &g in m.letters() {
                        if is_diagonal(g) {
                            diag.push(g);
                        } else {
                            rest.push(g);
                        }
                    }
                    diag.sort();
                    groups
                        .entry(diag)
                        .or_insert_with(|| Series::zero(unframed, s.trunc()))
                        .add_term(Monomial::from_letters(rest), c.clone());
                }
                let mut out = Series::zero(s.algebra(), s.trunc());
                for (diag, part) in groups {
                    let prefix = Monomial::from_letters(diag);
                    for (w, c) in inner.normal_form(&part).terms() {
                        out.add_term(prefix.concat(w), c.clone());
                    }
                }
                out
            }
            TableKind::Quotient(q) => {
                let s1 = eliminate_with(q, s);
                let mut out = Series::zero(s.algebra(), s.trunc());
                for (m, c) in s1.terms() {
                    let d = m.degree();
                    match q.reductions.get(d).and_then(|r| r.get(m)) {
                        Some(expansion) => out.add_scaled(&expansion.truncated(s.trunc()), c),
                        None => out.add_term(m.clone(), c.clone()),
                    }
                }
                out
            }
        }
    }

    /// Applies only the degree-one eliminations (residue substitutions),
    /// leaving degree-two reductions untouched. For presentations with no
    /// degree-one relations this is the identity.
    pub fn eliminate_linear(&self, s: &Series) -> Series {
        match &self.kind {
            TableKind::Quotient(q) => eliminate_with(q, s),
            _ => s.clone(),
        }
    }

    /// Image of a single eliminated generator, if `g` was eliminated by
    /// the degree-one relations.
    pub fn eliminated_image(&self, g: GeneratorId) -> Option<Series> {
        match &self.kind {
            TableKind::Quotient(q) => q.eliminated.get(&g).cloned(),
            _ => None,
        }
    }

    /// Dimension of the degree-`d` slice of the quotient algebra.
    pub fn dimension(&self, d: usize) -> usize {
        assert!(d <= self.degree, "degree exceeds table degree");
        match &self.kind {
            TableKind::Free => self.presentation.generators().len().pow(d as u32),
            TableKind::FramedSplit { inner } => {
                let n = match self.presentation {
                    PresentationId::DrinfeldKohno { strands, .. } => strands as usize,
                    _ => unreachable!("framed split only wraps planar presentations"),
                };
                (0..=d)
                    .map(|k| multiset_count(n, k) * inner.dimension(d - k))
                    .sum()
            }
            TableKind::Quotient(q) => match d {
                0 => 1,
                1 => q.kept.len(),
                _ => q.kept.len().pow(d as u32) - q.rank[d],
            },
        }
    }

    /// The normal-form basis words of degree `d`, ascending.
    pub fn basis(&self, d: usize) -> Vec<Monomial> {
        assert!(d <= self.degree, "degree exceeds table degree");
        match &self.kind {
            TableKind::Free => {
                let gens = self.presentation.generators();
                all_words(&gens, d)
            }
            TableKind::FramedSplit { inner } => {
                let diag: Vec<GeneratorId> = self
                    .presentation
                    .generators()
                    .into_iter()
                    .filter(|&g| is_diagonal(g))
                    .collect();
                let mut out = Vec::new();
                for k in 0..=d {
                    for prefix in multiset_words(&diag, k) {
                        for w in inner.basis(d - k) {
                            out.push(prefix.concat(&w));
                        }
                    }
                }
                out.sort();
                out
            }
            TableKind::Quotient(q) => match d {
                0 => vec![Monomial::one()],
                1 => q.kept.iter().map(|&g| Monomial::generator(g)).collect(),
                _ => {
                    let k = q.kept.len();
                    let total = k.pow(d as u32);
                    (0..total)
                        .filter(|&col| !q.reductions[d].contains_key(&decode_word(col, d, &q.kept)))
                        .map(|col| decode_word(col, d, &q.kept))
                        .collect()
                }
            },
        }
    }

    /// Generators surviving the degree-one elimination.
    pub fn kept_generators(&self) -> Vec<GeneratorId> {
        match &self.kind {
            TableKind::Quotient(q) => q.kept.clone(),
            _ => self.presentation.generators(),
        }
    }
}

/// True for the diagonal (framing) generators `t_ii` / `X_ii`.
fn is_diagonal(g: GeneratorId) -> bool {
    match g {
        GeneratorId::T(i, j) | GeneratorId::X(i, j) => i == j,
        GeneratorId::Letter(_) => false,
    }
}

/// Number of multisets of size `k` over `n` symbols.
fn multiset_count(n: usize, k: usize) -> usize {
    if k == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    // binomial(n + k - 1, k), kept in usize; sizes here are tiny.
    let mut num = 1usize;
    for i in 0..k {
        num = num * (n + k - 1 - i) / (i + 1);
    }
    num
}

/// All weakly increasing words of length `k` over `alphabet`, as monomials.
fn multiset_words(alphabet: &[GeneratorId], k: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut stack: Vec<GeneratorId> = Vec::new();
    fn rec(
        alphabet: &[GeneratorId],
        from: usize,
        k: usize,
        stack: &mut Vec<GeneratorId>,
        out: &mut Vec<Monomial>,
    ) {
        if k == 0 {
            out.push(Monomial::from_letters(stack.iter().copied()));
            return;
        }
        for i in from..alphabet.len() {
            stack.push(alphabet[i]);
            rec(alphabet, i, k - 1, stack, out);
            stack.pop();
        }
    }
    rec(alphabet, 0, k, &mut stack, &mut out);
    out
}

/// All words of length `d` over `alphabet`, in ascending (lexicographic)
/// order.
fn all_words(alphabet: &[GeneratorId], d: usize) -> Vec<Monomial> {
    (0..alphabet.len().pow(d as u32))
        .map(|col| decode_word(col, d, alphabet))
        .collect()
}

/// Column index of a degree-`d` word over the kept alphabet: big-endian
/// mixed radix, so column order coincides with lexicographic word order.
fn encode_word(letters: &[GeneratorId], index: &BTreeMap<GeneratorId, usize>, k: usize) -> usize {
    letters.iter().fold(0usize, |acc, g| acc * k + index[g])
}

/// Inverse of [`encode_word`].
fn decode_word(col: usize, d: usize, kept: &[GeneratorId]) -> Monomial {
    let k = kept.len();
    let mut digits = vec![0usize; d];
    let mut rem = col;
    for slot in (0..d).rev() {
        digits[slot] = rem % k;
        rem /= k;
    }
    Monomial::from_letters(digits.into_iter().map(|i| kept[i]))
}

/// Degree-one substitution defined by the eliminated-generator images.
fn eliminate_with(q: &QuotientTable, s: &Series) -> Series {
    if q.eliminated.is_empty() {
        return s.clone();
    }
    let p = s.algebra();
    let trunc = s.trunc();
    s.substitute(p, |g| match q.eliminated.get(&g) {
        Some(img) => img.truncated(trunc),
        None => Series::generator(p, trunc, g),
    })
}

/// Row echelon accumulator for large homogeneous ideal slices.
///
/// Unlike [`ratmat::EchelonBasis`], rows are only forward-reduced during
/// insertion; the full reduction (clearing pivot columns from earlier
/// rows) happens once in [`IdealEchelon::finalize`]. The final output is
/// the reduced row echelon form of the inserted span — identical, by RREF
/// uniqueness, to what eager reduction would produce — but the deferred
/// strategy avoids repeatedly rewriting rows while the span is still
/// growing.
struct IdealEchelon {
    /// Pivot column → monic row with that leading column. Rows may still
    /// contain later pivot columns until finalization.
    rows: BTreeMap<usize, SparseVec>,
}

impl IdealEchelon {
    fn new() -> Self {
        IdealEchelon { rows: BTreeMap::new() }
    }

    /// Forward-reduces `v` against the current rows and stores it if a
    /// new pivot remains. Returns whether the rank grew.
    fn insert(&mut self, mut v: SparseVec) -> bool {
        loop {
            let Some((lead, coeff)) = v.leading() else {
                return false;
            };
            match self.rows.get(&lead) {
                Some(row) => {
                    let factor = -coeff.clone();
                    v.add_scaled(row, &factor);
                }
                None => {
                    let monic = v.monic().expect("nonzero row has a monic form");
                    self.rows.insert(lead, monic);
                    return true;
                }
            }
        }
    }

    /// Completes the reduction: in decreasing pivot order, every row is
    /// cleared of later pivot columns, so each final row is supported on
    /// its pivot and normal-form columns only.
    fn finalize(mut self) -> BTreeMap<usize, SparseVec> {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for &p in pivots.iter().rev() {
            let mut row = self.rows.remove(&p).expect("pivot row present");
            let later: Vec<usize> = row.support().filter(|&c| c > p && done.contains_key(&c)).collect();
            for c in later {
                if let Some(coeff) = row.coeff(c).cloned() {
                    if !coeff.is_zero() {
                        row.add_scaled(&done[&c], &(-coeff));
                    }
                }
            }
            done.insert(p, row);
        }
        done
    }
}

fn build_quotient(p: PresentationId, degree: usize) -> QuotientTable {
    let rels = relation_set(p, 2);
    let gens = p.generators();
    let gen_index: BTreeMap<GeneratorId, usize> =
        gens.iter().enumerate().map(|(i, &g)| (g, i)).collect();

    // Degree-one relations: echelonize over the generator alphabet.
    let mut linear = EchelonBasis::new();
    for r in rels.iter().filter(|r| r.max_degree() == Some(1)) {
        let row = SparseVec::from_entries(
            r.terms().map(|(m, c)| (gen_index[&m.letters()[0]], c.clone())),
        );
        linear.insert(&row);
    }
    let expansion_trunc = degree.max(1);
    let mut eliminated = BTreeMap::new();
    for row in linear.rows() {
        let (pivot, _) = row.leading().expect("echelon rows are nonzero");
        let mut img = Series::zero(p, expansion_trunc);
        for (col, c) in row.iter() {
            if col != pivot {
                img.add_term(Monomial::generator(gens[col]), -c.clone());
            }
        }
        eliminated.insert(gens[pivot], img);
    }
    let kept: Vec<GeneratorId> = gens
        .iter()
        .copied()
        .filter(|g| !eliminated.contains_key(g))
        .collect();
    let kept_index: BTreeMap<GeneratorId, usize> =
        kept.iter().enumerate().map(|(i, &g)| (g, i)).collect();

    // Degree-two relations, rewritten over the kept generators.
    let stub = QuotientTable {
        kept: kept.clone(),
        eliminated: eliminated.clone(),
        reductions: Vec::new(),
        rank: Vec::new(),
    };
    let quadratic: Vec<Series> = rels
        .iter()
        .filter(|r| r.max_degree() == Some(2))
        .map(|r| eliminate_with(&stub, r))
        .filter(|r| !r.is_zero())
        .collect();

    let k = kept.len();
    let mut reductions: Vec<BTreeMap<Monomial, Series>> = vec![BTreeMap::new(); degree + 1];
    let mut rank = vec![0usize; degree + 1];
    for d in 2..=degree {
        let mut ech = IdealEchelon::new();
        // Every word multiple u·r·v of every relation with |u| + |v| = d − 2.
        for r in &quadratic {
            let terms: Vec<(Vec<GeneratorId>, Rat)> = r
                .terms()
                .map(|(m, c)| (m.letters().to_vec(), c.clone()))
                .collect();
            for a in 0..=(d - 2) {
                let b = d - 2 - a;
                for u in 0..k.pow(a as u32) {
                    let uw = decode_word(u, a, &kept);
                    for v in 0..k.pow(b as u32) {
                        let vw = decode_word(v, b, &kept);
                        let row = SparseVec::from_entries(terms.iter().map(|(mid, c)| {
                            let mut letters = uw.letters().to_vec();
                            letters.extend_from_slice(mid);
                            letters.extend_from_slice(vw.letters());
                            (encode_word(&letters, &kept_index, k), c.clone())
                        }));
                        ech.insert(row);
                    }
                }
            }
        }
        let final_rows = ech.finalize();
        rank[d] = final_rows.len();
        for (pivot_col, row) in final_rows {
            let pivot_word = decode_word(pivot_col, d, &kept);
            let mut expansion = Series::zero(p, degree);
            for (col, c) in row.iter() {
                if col != pivot_col {
                    expansion.add_term(decode_word(col, d, &kept), -c.clone());
                }
            }
            reductions[d].insert(pivot_word, expansion);
        }
    }

    QuotientTable { kept, eliminated, reductions, rank }
}

// ---------------------------------------------------------------------
// Disk cache
// ---------------------------------------------------------------------

static CACHE_DIR: Lazy<RwLock<Option<PathBuf>>> =
    Lazy::new(|| RwLock::new(std::env::var_os("GRT_CACHE_DIR").map(PathBuf::from)));

/// Overrides the table cache directory (`None` disables disk caching).
///
/// The initial value comes from the `GRT_CACHE_DIR` environment variable.
/// Changing the directory affects tables built afterwards; in-process
/// memoization is unaffected.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *CACHE_DIR.write() = dir;
}

/// The currently configured cache directory, if any.
pub fn cache_dir() -> Option<PathBuf> {
    CACHE_DIR.read().clone()
}

/// Serialized form of a quotient table. Words are space-joined generator
/// tokens; series use the standard text format.
#[derive(Serialize, Deserialize)]
struct TableFile {
    format: String,
    presentation: String,
    degree: usize,
    kept: Vec<String>,
    eliminated: Vec<(String, String)>,
    reductions: Vec<Vec<(String, String)>>,
}

fn cache_file(dir: &Path, p: PresentationId, degree: usize) -> PathBuf {
    let slug: String = p
        .descriptor()
        .chars()
        .map(|c| if c.is_alphanumeric() { c } else { '-' })
        .collect();
    dir.join(format!("nf-{}-d{}-{}.json", slug.trim_matches('-'), degree, TABLE_FORMAT_VERSION))
}

fn load_cached(p: PresentationId, degree: usize) -> Option<QuotientTable> {
    let dir = cache_dir()?;
    load_cached_from(&dir, p, degree)
}

fn load_cached_from(dir: &Path, p: PresentationId, degree: usize) -> Option<QuotientTable> {
    let bytes = fs::read(cache_file(dir, p, degree)).ok()?;
    let file: TableFile = serde_json::from_slice(&bytes).ok()?;
    if file.format != TABLE_FORMAT_VERSION
        || file.presentation != p.descriptor()
        || file.degree != degree
    {
        return None;
    }
    let parse_word = |s: &str| -> Option<Monomial> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            letters.push(GeneratorId::parse_token(tok).ok()?);
        }
        Some(Monomial::from_letters(letters))
    };
    let mut kept = Vec::new();
    for tok in &file.kept {
        kept.push(GeneratorId::parse_token(tok).ok()?);
    }
    let mut eliminated = BTreeMap::new();
    for (tok, text) in &file.eliminated {
        eliminated.insert(GeneratorId::parse_token(tok).ok()?, series_from_text(text).ok()?);
    }
    if file.reductions.len() != degree + 1 {
        return None;
    }
    let mut reductions = Vec::new();
    let mut rank = Vec::new();
    for level in &file.reductions {
        let mut map = BTreeMap::new();
        for (word, text) in level {
            map.insert(parse_word(word)?, series_from_text(text).ok()?);
        }
        rank.push(map.len());
        reductions.push(map);
    }
    Some(QuotientTable { kept, eliminated, reductions, rank })
}

fn store_cached(p: PresentationId, degree: usize, q: &QuotientTable) {
    if let Some(dir) = cache_dir() {
        store_cached_to(&dir, p, degree, q);
    }
}

fn store_cached_to(dir: &Path, p: PresentationId, degree: usize, q: &QuotientTable) {
    let word_text = |m: &Monomial| -> String {
        m.letters().iter().map(|g| g.token()).collect::<Vec<_>>().join(" ")
    };
    let file = TableFile {
        format: TABLE_FORMAT_VERSION.to_string(),
        presentation: p.descriptor(),
        degree,
        kept: q.kept.iter().map(|g| g.token()).collect(),
        eliminated: q
            .eliminated
            .iter()
            .map(|(g, s)| (g.token(), series_to_text(s)))
            .collect(),
        reductions: q
            .reductions
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|(w, s)| (word_text(w), series_to_text(s)))
                    .collect()
            })
            .collect(),
    };
    if fs::create_dir_all(dir).is_err() {
        return;
    }
    if let Ok(json) = serde_json::to_vec_pretty(&file) {
        // Write-then-rename so concurrent builders never observe a
        // truncated cache entry.
        let target = cache_file(dir, p, degree);
        let tmp = target.with_extension(format!("tmp-{}", std::process::id()));
        if fs::write(&tmp, json).is_ok() {
            let _ = fs::rename(&tmp, &target);
        }
    }
}
