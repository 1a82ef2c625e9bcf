//! Defining relations of the chord-diagram presentations.
//!
//! Every presentation handled by this crate is a quotient of the free
//! associative algebra on its generator alphabet by a two-sided ideal
//! generated in degrees one and two:
//!
//! * degree two: "locality" brackets `[t_ij, t_kl] = 0` for disjoint index
//!   pairs, "infinitesimal braid" brackets `[t_ij, t_ik + t_jk] = 0` for
//!   three distinct indices, and — in the framed presentations — centrality
//!   brackets `[t_ii, t_jk] = 0` making every diagonal generator central;
//! * degree one (spherical and sphere-braid presentations only): residue
//!   relations stating that each strand's chord endpoints sum to zero.
//!
//! [`relation_set`] returns these generators of the ideal verbatim as free
//! series, without any normalization. Reducing each of them (and any word
//! multiple of them) to zero is the defining contract of the normal-form
//! tables in [`crate::table`].

use freealg::{GeneratorId, Monomial, PresentationId, Rat, Series};
use num::One;

/// The defining relations of `p`, as series truncated at `trunc`.
///
/// Free presentations have no relations. The order of the returned vector
/// is deterministic: bracket families first (locality, then infinitesimal
/// braid, then centrality), then residue relations, each enumerated in
/// increasing index order.
///
/// Panics if `trunc < 2` for a presentation with degree-two relations,
/// since the relations would not survive truncation.
pub fn relation_set(p: PresentationId, trunc: usize) -> Vec<Series> {
    match p {
        PresentationId::Free { .. } => Vec::new(),
        PresentationId::DrinfeldKohno { strands, framed } => {
            assert!(trunc >= 2, "truncation too small to hold the relations");
            bracket_relations(p, trunc, 1, strands, framed)
        }
        PresentationId::SphericalDK { strands } => {
            assert!(trunc >= 2, "truncation too small to hold the relations");
            let mut rels = bracket_relations(p, trunc, 0, strands, true);
            // One residue per strand index j: sum over i of t_ij vanishes.
            for j in 0..=strands {
                let mut r = Series::zero(p, trunc);
                for i in 0..=strands {
                    r.add_term(Monomial::generator(GeneratorId::t(i, j)), Rat::one());
                }
                rels.push(r);
            }
            rels
        }
        PresentationId::SphereBraid { strands } => {
            assert!(trunc >= 2, "truncation too small to hold the relations");
            let mut rels = bracket_relations(p, trunc, 1, strands, true);
            // One residue per strand index i: sum over j of X_ij vanishes.
            for i in 1..=strands {
                let mut r = Series::zero(p, trunc);
                for j in 1..=strands {
                    r.add_term(Monomial::generator(generator_for(p, i, j)), Rat::one());
                }
                rels.push(r);
            }
            rels
        }
    }
}

/// Generator with indices `i, j` in the alphabet of `p` (`t` or `X` family).
fn generator_for(p: PresentationId, i: u8, j: u8) -> GeneratorId {
    match p {
        PresentationId::SphereBraid { .. } => GeneratorId::x(i, j),
        _ => GeneratorId::t(i, j),
    }
}

/// Commutator `[a, b]` of two generators as a degree-two series.
fn bracket(p: PresentationId, trunc: usize, a: GeneratorId, b: Series) -> Series {
    let ga = Series::generator(p, trunc, a);
    &(&ga * &b) - &(&b * &ga)
}

/// The three bracket families shared by the planar, spherical, and
/// sphere-braid presentations, over indices `lo..=hi`.
fn bracket_relations(
    p: PresentationId,
    trunc: usize,
    lo: u8,
    hi: u8,
    framed: bool,
) -> Vec<Series> {
    let mut rels = Vec::new();
    let pairs: Vec<(u8, u8)> = (lo..=hi)
        .flat_map(|i| ((i + 1)..=hi).map(move |j| (i, j)))
        .collect();

    // Locality: [t_ij, t_kl] for disjoint pairs, each unordered pair of
    // pairs taken once.
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for &(k, l) in &pairs[a + 1..] {
            if i != k && i != l && j != k && j != l {
                let g = Series::generator(p, trunc, generator_for(p, k, l));
                rels.push(bracket(p, trunc, generator_for(p, i, j), g));
            }
        }
    }

    // Infinitesimal braid: [t_ij, t_ik + t_jk] for k outside {i, j}.
    for &(i, j) in &pairs {
        for k in lo..=hi {
            if k != i && k != j {
                let sum = &Series::generator(p, trunc, generator_for(p, i, k))
                    + &Series::generator(p, trunc, generator_for(p, j, k));
                rels.push(bracket(p, trunc, generator_for(p, i, j), sum));
            }
        }
    }

    // Centrality of the diagonal generators: [t_cc, t_jk] for every
    // generator t_jk other than t_cc itself.
    if framed {
        for c in lo..=hi {
            for j in lo..=hi {
                for k in j..=hi {
                    if (j, k) != (c, c) {
                        let g = Series::generator(p, trunc, generator_for(p, j, k));
                        rels.push(bracket(p, trunc, generator_for(p, c, c), g));
                    }
                }
            }
        }
    }

    rels
}
