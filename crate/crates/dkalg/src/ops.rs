//! Symmetric, cyclic, and operadic structure maps on the presentations.
//!
//! All maps here are algebra morphisms given on generators and extended
//! multiplicatively, so they interact predictably with exponentials,
//! inverses, and products. Except where noted, identities among them hold
//! only modulo the defining ideals — callers compare images through
//! [`NormalFormTable::normal_form`].
//!
//! The cyclic rotation comes in two independently implemented strategies
//! (selectable by name) that must agree:
//!
//! * `"transposition"` — a closed formula: relabel strands by the forward
//!   cycle, then apply the output/strand-1 transposition;
//! * `"spherical"` — the geometric route: lift to the spherical
//!   presentation with one extra strand index, rotate all indices, and
//!   eliminate the index-0 generators through the residue relations.
//!
//! Their agreement is a nontrivial cross-check of the residue elimination
//! machinery and is enforced by integration tests.

use std::collections::BTreeMap;
use std::sync::Arc;

use freealg::{GeneratorId, Monomial, PresentationId, Rat, Series};
use num::{One, Zero};
use once_cell::sync::Lazy;

use crate::table::NormalFormTable;

/// Strand count of a planar (Drinfeld–Kohno) presentation.
fn planar_strands(p: PresentationId) -> u8 {
    match p {
        PresentationId::DrinfeldKohno { strands, .. } => strands,
        _ => panic!("operation requires a planar presentation, got {p}"),
    }
}

/// Relabels strands by a permutation: `perm[i - 1]` is the image of
/// strand `i`. Defined for the planar and sphere-braid presentations;
/// `perm` must be a bijection of `1..=n`.
pub fn permute(s: &Series, perm: &[u8]) -> Series {
    let p = s.algebra();
    let n = match p {
        PresentationId::DrinfeldKohno { strands, .. } => strands,
        PresentationId::SphereBraid { strands } => strands,
        _ => panic!("permute requires a planar or sphere-braid presentation, got {p}"),
    };
    assert_eq!(perm.len(), n as usize, "permutation arity mismatch");
    let mut seen = vec![false; n as usize + 1];
    for &v in perm {
        assert!(v >= 1 && v <= n && !seen[v as usize], "not a permutation of 1..={n}");
        seen[v as usize] = true;
    }
    let image = |i: u8| perm[i as usize - 1];
    s.map_letters(p, |g| match g {
        GeneratorId::T(i, j) => GeneratorId::t(image(i), image(j)),
        GeneratorId::X(i, j) => GeneratorId::x(image(i), image(j)),
        GeneratorId::Letter(_) => panic!("free letters carry no strand indices"),
    })
}

/// The transposition of the output strand with strand 1, written in
/// planar coordinates on the framed presentation:
///
/// * `t_ij ↦ t_ij` when `1 ∉ {i, j}`,
/// * `t_1j ↦ −Σ_{k=1}^n t_kj` for `j ≠ 1`,
/// * `t_11 ↦ Σ_{k,l=1}^n t_kl` (ordered double sum, so off-diagonal
///   generators enter with coefficient 2).
///
/// This is an exact involution already at the free level.
pub fn transposition01(s: &Series) -> Series {
    let p = s.algebra();
    let n = match p {
        PresentationId::DrinfeldKohno { strands, framed: true } => strands,
        _ => panic!("transposition01 requires a framed planar presentation, got {p}"),
    };
    let trunc = s.trunc();
    s.substitute(p, |g| {
        let GeneratorId::T(i, j) = g else {
            panic!("unexpected generator {g} in {p}");
        };
        if i != 1 && j != 1 {
            Series::generator(p, trunc, g)
        } else if i == 1 && j == 1 {
            let mut img = Series::zero(p, trunc);
            for k in 1..=n {
                for l in 1..=n {
                    img.add_term(Monomial::generator(GeneratorId::t(k, l)), Rat::one());
                }
            }
            img
        } else {
            // One index equals 1; call the other j.
            let j = if i == 1 { j } else { i };
            let mut img = Series::zero(p, trunc);
            for k in 1..=n {
                img.add_term(Monomial::generator(GeneratorId::t(k, j)), -Rat::one());
            }
            img
        }
    })
}

/// One step of the cyclic rotation on a framed planar series.
///
/// Implementations must be algebra maps agreeing with each other modulo
/// the defining ideal; iterating `strands + 1` times returns to the
/// identity.
pub trait RotationStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn rotate_once(&self, s: &Series) -> Series;
}

/// Closed-formula strategy: [`transposition01`] followed by the backward
/// strand cycle `i ↦ i − 1` (strand 1 wraps to `n`). Every marked point,
/// including the distinguished boundary point, moves one step backward,
/// which is the direction compatible with slot shifts under insertion.
struct TranspositionRotation;

impl RotationStrategy for TranspositionRotation {
    fn name(&self) -> &'static str {
        "transposition"
    }

    fn rotate_once(&self, s: &Series) -> Series {
        let n = planar_strands(s.algebra());
        let perm: Vec<u8> = (1..=n).map(|i| if i == 1 { n } else { i - 1 }).collect();
        permute(&transposition01(s), &perm)
    }
}

/// Geometric strategy: lift to the spherical presentation, rotate all
/// strand indices backward modulo `n + 1`, and eliminate the index-0
/// generators through the residue relations.
struct SphericalRotation;

impl RotationStrategy for SphericalRotation {
    fn name(&self) -> &'static str {
        "spherical"
    }

    fn rotate_once(&self, s: &Series) -> Series {
        let p = s.algebra();
        let n = match p {
            PresentationId::DrinfeldKohno { strands, framed: true } => strands,
            _ => panic!("cyclic rotation requires a framed planar presentation, got {p}"),
        };
        let sph = PresentationId::sph(n);
        let rotated = s.map_letters(sph, |g| {
            let GeneratorId::T(i, j) = g else {
                panic!("unexpected generator {g} in {p}");
            };
            GeneratorId::t((i + n) % (n + 1), (j + n) % (n + 1))
        });
        let eliminated = NormalFormTable::get(sph, 1).eliminate_linear(&rotated);
        // Every index-0 generator is gone; read the result back in the
        // planar alphabet.
        eliminated.map_letters(p, |g| g)
    }
}

static ROTATIONS: Lazy<BTreeMap<&'static str, Arc<dyn RotationStrategy>>> = Lazy::new(|| {
    let mut m: BTreeMap<&'static str, Arc<dyn RotationStrategy>> = BTreeMap::new();
    for s in [
        Arc::new(TranspositionRotation) as Arc<dyn RotationStrategy>,
        Arc::new(SphericalRotation) as Arc<dyn RotationStrategy>,
    ] {
        m.insert(s.name(), s);
    }
    m
});

/// The registered rotation strategies, by name.
pub fn rotation_strategy(name: &str) -> Option<Arc<dyn RotationStrategy>> {
    ROTATIONS.get(name).cloned()
}

/// Names of all registered rotation strategies, ascending.
pub fn rotation_strategy_names() -> Vec<&'static str> {
    ROTATIONS.keys().copied().collect()
}

/// `steps` cyclic rotations using the closed-formula strategy.
pub fn cyclic_rotate(s: &Series, steps: usize) -> Series {
    let strategy = rotation_strategy("transposition").expect("default strategy registered");
    let mut out = s.clone();
    for _ in 0..steps {
        out = strategy.rotate_once(&out);
    }
    out
}

/// The strand-relabeling part of insertion at slot `k`: the inserted
/// block occupies strands `k..k+m−1`, and strands after slot `k` shift up
/// by `m − 1`. This is the image of the *outer* factor.
pub fn insertion_outer_map(x: &Series, k: u8, m: u8) -> Series {
    let p = x.algebra();
    let (n, framed) = match p {
        PresentationId::DrinfeldKohno { strands, framed } => (strands, framed),
        _ => panic!("insertion requires planar presentations, got {p}"),
    };
    assert!(k >= 1 && k <= n, "insertion slot {k} out of range 1..={n}");
    let target = PresentationId::DrinfeldKohno { strands: n + m - 1, framed };
    let trunc = x.trunc();
    let shift = m - 1;
    x.substitute(target, |g| {
        let GeneratorId::T(i, j) = g else {
            panic!("unexpected generator {g} in {p}");
        };
        let gen = |a: u8, b: u8| Series::generator(target, trunc, GeneratorId::t(a, b));
        if i == j {
            if k < i {
                gen(i + shift, i + shift)
            } else if k == i {
                // The doubled strand spreads its framing over the block:
                // all framings plus twice every chord inside the block.
                let mut img = Series::zero(target, trunc);
                for pp in i..=i + shift {
                    img.add_term(Monomial::generator(GeneratorId::t(pp, pp)), Rat::one());
                }
                for pp in i..=i + shift {
                    for q in (pp + 1)..=(i + shift) {
                        img.add_term(
                            Monomial::generator(GeneratorId::t(pp, q)),
                            Rat::one() + Rat::one(),
                        );
                    }
                }
                img
            } else {
                gen(i, i)
            }
        } else if k < i {
            gen(i + shift, j + shift)
        } else if k == i {
            let mut img = Series::zero(target, trunc);
            for pp in i..=i + shift {
                img.add_term(Monomial::generator(GeneratorId::t(pp, j + shift)), Rat::one());
            }
            img
        } else if k < j {
            gen(i, j + shift)
        } else if k == j {
            let mut img = Series::zero(target, trunc);
            for q in j..=j + shift {
                img.add_term(Monomial::generator(GeneratorId::t(i, q)), Rat::one());
            }
            img
        } else {
            gen(i, j)
        }
    })
}

/// The strand-relabeling part of insertion at slot `k` for the *inner*
/// factor: all indices shift up by `k − 1`.
pub fn insertion_inner_map(y: &Series, k: u8, n: u8) -> Series {
    let p = y.algebra();
    let (m, framed) = match p {
        PresentationId::DrinfeldKohno { strands, framed } => (strands, framed),
        _ => panic!("insertion requires planar presentations, got {p}"),
    };
    assert!(k >= 1 && k <= n, "insertion slot {k} out of range 1..={n}");
    let target = PresentationId::DrinfeldKohno { strands: n + m - 1, framed };
    y.map_letters(target, |g| {
        let GeneratorId::T(i, j) = g else {
            panic!("unexpected generator {g} in {p}");
        };
        GeneratorId::t(i + k - 1, j + k - 1)
    })
}

/// Operadic insertion on the associative envelope: the outer and inner
/// images are multiplied. The two images commute modulo the defining
/// ideal, so on exponentials this agrees with [`operad_insert_lie`]
/// composed with `exp`.
pub fn operad_insert(x: &Series, k: u8, y: &Series) -> Series {
    let (ox, iy) = insertion_pair(x, k, y);
    ox.mul(&iy)
}

/// Operadic insertion on the Lie level: the outer and inner images are
/// added.
pub fn operad_insert_lie(x: &Series, k: u8, y: &Series) -> Series {
    let (ox, iy) = insertion_pair(x, k, y);
    &ox + &iy
}

fn insertion_pair(x: &Series, k: u8, y: &Series) -> (Series, Series) {
    let n = planar_strands(x.algebra());
    let m = planar_strands(y.algebra());
    assert_eq!(
        x.trunc(),
        y.trunc(),
        "insertion requires matching truncations"
    );
    let framed = |p: PresentationId| match p {
        PresentationId::DrinfeldKohno { framed, .. } => framed,
        _ => unreachable!("checked to be planar above"),
    };
    assert_eq!(
        framed(x.algebra()),
        framed(y.algebra()),
        "insertion requires matching framing"
    );
    (insertion_outer_map(x, k, m), insertion_inner_map(y, k, n))
}

/// Comparison map from the framed planar presentation on `n` strands to
/// the sphere-braid presentation on `n + 1` strands: `t_ij ↦ X_ij`.
pub fn to_sphere_braid(s: &Series) -> Series {
    let p = s.algebra();
    let n = match p {
        PresentationId::DrinfeldKohno { strands, framed: true } => strands,
        _ => panic!("sphere-braid comparison requires a framed planar presentation, got {p}"),
    };
    s.map_letters(PresentationId::fb(n + 1), |g| {
        let GeneratorId::T(i, j) = g else {
            panic!("unexpected generator {g} in {p}");
        };
        GeneratorId::x(i, j)
    })
}

/// Group-likeness modulo the defining ideal: reduces the series, its
/// coproduct legs, and the comparison products all to normal form before
/// testing `Δ(s) = s ⊗ s`.
///
/// On free presentations this coincides with [`Series::is_grouplike`].
pub fn is_grouplike_nf(s: &Series) -> bool {
    let table = NormalFormTable::get(s.algebra(), s.trunc());
    let nf = table.normal_form(s);
    if !nf.constant_term().is_one() {
        return false;
    }
    let p = s.algebra();
    let trunc = s.trunc();
    // Reduced coproduct: reduce both legs of every split.
    let mut delta: BTreeMap<(Monomial, Monomial), Rat> = BTreeMap::new();
    for ((l, r), c) in nf.coproduct() {
        let ln = table.normal_form(&Series::from_terms(p, trunc, [(l, Rat::one())]));
        let rn = table.normal_form(&Series::from_terms(p, trunc, [(r, Rat::one())]));
        for (lw, lc) in ln.terms() {
            for (rw, rc) in rn.terms() {
                if lw.degree() + rw.degree() <= trunc {
                    let entry = delta.entry((lw.clone(), rw.clone())).or_insert_with(Rat::zero);
                    *entry += &c * lc * rc;
                }
            }
        }
    }
    delta.retain(|_, c| !c.is_zero());
    // Tensor square of the normal form.
    let mut square: BTreeMap<(Monomial, Monomial), Rat> = BTreeMap::new();
    for (u, cu) in nf.terms() {
        for (v, cv) in nf.terms() {
            if u.degree() + v.degree() <= trunc {
                let entry = square.entry((u.clone(), v.clone())).or_insert_with(Rat::zero);
                *entry += cu * cv;
            }
        }
    }
    square.retain(|_, c| !c.is_zero());
    delta == square
}
