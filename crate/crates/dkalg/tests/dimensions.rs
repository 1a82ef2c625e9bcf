//! Graded dimensions of the quotient algebras against independent
//! counting oracles.
//!
//! The planar tower has a classical semidirect-product structure: adding
//! a strand splits off a free Lie algebra on the chords touching the new
//! strand. On enveloping algebras this gives the convolution recursion
//!
//! dim U(t_{k+1})_d = Σ_a dim U(t_k)_a · kᵈ⁻ᵃ,
//!
//! and the framed algebra is the unframed one tensored with a polynomial
//! ring on the central framings. These formulas are computed here from
//! scratch — no echelon reduction — and pinned against the table-derived
//! dimensions.
//!
//! For the sphere-braid and spherical presentations no dimension formula
//! is assumed. Instead the tests verify that the planar-to-sphere
//! relabeling and an explicit retraction are both well defined modulo the
//! ideals and compose to the identity; this makes the relabeling a split
//! injection in both directions degreewise, forcing the dimensions to
//! match the planar ones. The dimension equalities asserted afterwards
//! are consequences, not inputs.

use dkalg::{normal_form, relation_set, to_sphere_braid, NormalFormTable};
use freealg::{GeneratorId, Monomial, PresentationId, Rat, Series};
use num::One;

/// Dimensions of U(t_n) in degrees 0..=dmax by the tower recursion.
fn planar_dims(n: u8, dmax: usize) -> Vec<usize> {
    let mut dims = vec![0usize; dmax + 1];
    dims[0] = 1; // one strand: no chords at all
    for k in 1..n as usize {
        let mut next = vec![0usize; dmax + 1];
        for (d, slot) in next.iter_mut().enumerate() {
            *slot = (0..=d).map(|a| dims[a] * k.pow((d - a) as u32)).sum();
        }
        dims = next;
    }
    dims
}

/// Number of degree-k monomials in n commuting variables.
fn multiset(n: usize, k: usize) -> usize {
    if k == 0 {
        return 1;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n + k - 1 - i) / (i + 1);
    }
    acc
}

/// Dimensions of U(ft_n): the unframed dimensions convolved with the
/// polynomial ring on the n central framings.
fn framed_dims(n: u8, dmax: usize) -> Vec<usize> {
    let base = planar_dims(n, dmax);
    (0..=dmax)
        .map(|d| (0..=d).map(|k| multiset(n as usize, k) * base[d - k]).sum())
        .collect()
}

#[test]
fn unframed_planar_dimensions_match_the_tower_recursion() {
    for n in 2..=4u8 {
        let table = NormalFormTable::get(PresentationId::t(n), 4);
        let oracle = planar_dims(n, 4);
        for d in 0..=4 {
            assert_eq!(table.dimension(d), oracle[d], "t({n}) at degree {d}");
            assert_eq!(table.basis(d).len(), oracle[d], "basis size t({n}) degree {d}");
        }
    }
    // Landmark values: three and four strands.
    assert_eq!(planar_dims(3, 4), vec![1, 3, 7, 15, 31]);
    assert_eq!(planar_dims(4, 4), vec![1, 6, 25, 90, 301]);
}

#[test]
fn five_strand_dimensions_match_at_low_degree() {
    let table = NormalFormTable::get(PresentationId::t(5), 3);
    let oracle = planar_dims(5, 3);
    assert_eq!(oracle, vec![1, 10, 65, 350]);
    for d in 0..=3 {
        assert_eq!(table.dimension(d), oracle[d], "t(5) at degree {d}");
    }
}

#[test]
fn framed_dimensions_factor_through_the_central_polynomials() {
    for n in 2..=4u8 {
        let table = NormalFormTable::get(PresentationId::ft(n), 4);
        let oracle = framed_dims(n, 4);
        for d in 0..=4 {
            assert_eq!(table.dimension(d), oracle[d], "ft({n}) at degree {d}");
            assert_eq!(table.basis(d).len(), oracle[d], "basis size ft({n}) degree {d}");
        }
    }
    // Landmark values used throughout the workspace.
    assert_eq!(framed_dims(4, 4), vec![1, 10, 59, 270, 1066]);
    let ft5 = NormalFormTable::get(PresentationId::ft(5), 3);
    assert_eq!(framed_dims(5, 3), vec![1, 15, 130, 860]);
    assert_eq!(ft5.dimension(3), 860);
}

#[test]
fn three_strand_degree_two_reduction_has_dimension_seven() {
    // 9 words in 3 generators, minus the rank-2 braid relation slice.
    let table = NormalFormTable::get(PresentationId::t(3), 2);
    assert_eq!(table.dimension(2), 7);
}

/// Retraction of the sphere-braid presentation onto the planar one: the
/// last strand index is rewritten through the residue relations.
fn retract_sphere_braid(s: &Series) -> Series {
    let PresentationId::SphereBraid { strands } = s.algebra() else {
        panic!("retraction expects a sphere-braid series");
    };
    let n = strands - 1;
    let target = PresentationId::ft(n);
    let trunc = s.trunc();
    s.substitute(target, |g| {
        let GeneratorId::X(i, j) = g else {
            panic!("unexpected generator in sphere-braid series");
        };
        if j < strands {
            Series::generator(target, trunc, GeneratorId::t(i, j))
        } else if i < strands {
            // X_{i,last} = −Σ_{k≤n} X_ik under the residue at strand i.
            let mut img = Series::zero(target, trunc);
            for k in 1..=n {
                img.add_term(Monomial::generator(GeneratorId::t(i, k)), -Rat::one());
            }
            img
        } else {
            // X_{last,last}: apply the residue at the last strand, then
            // the residues at each remaining strand.
            let mut img = Series::zero(target, trunc);
            for k in 1..=n {
                for l in 1..=n {
                    img.add_term(Monomial::generator(GeneratorId::t(k, l)), Rat::one());
                }
            }
            img
        }
    })
}

#[test]
fn sphere_braid_and_planar_dimensions_agree_degreewise() {
    // Step 1: the relabeling t_ij ↦ X_ij sends every planar relation into
    // the sphere-braid ideal, so it descends to the quotients.
    for n in 2..=3u8 {
        for r in relation_set(PresentationId::ft(n), 4) {
            let image = to_sphere_braid(&r);
            assert!(
                normal_form(&image).is_zero(),
                "planar relation does not vanish in fb({})",
                n + 1
            );
        }
    }
    // Step 2: the residue retraction sends every sphere-braid relation
    // into the planar ideal, so it also descends.
    for n in 2..=3u8 {
        for r in relation_set(PresentationId::fb(n + 1), 4) {
            let image = retract_sphere_braid(&r);
            assert!(
                normal_form(&image).is_zero(),
                "sphere-braid relation does not vanish in ft({n})"
            );
        }
    }
    // Step 3: retraction ∘ relabeling is the identity on generators,
    // exactly and before any reduction.
    for n in 2..=3u8 {
        let p = PresentationId::ft(n);
        for g in p.generators() {
            let s = Series::generator(p, 2, g);
            let back = retract_sphere_braid(&to_sphere_braid(&s));
            assert!((&back - &s).is_zero(), "retraction fails on {g}");
        }
    }
    // Consequence: both quotients have the same graded dimensions.
    for n in 2..=3u8 {
        let fb = NormalFormTable::get(PresentationId::fb(n + 1), 4);
        let oracle = framed_dims(n, 4);
        for d in 0..=4 {
            assert_eq!(fb.dimension(d), oracle[d], "fb({}) at degree {d}", n + 1);
        }
    }
    // Five-strand case at the affordable degree.
    let fb5 = NormalFormTable::get(PresentationId::fb(5), 3);
    let oracle = framed_dims(4, 3);
    for d in 0..=3 {
        assert_eq!(fb5.dimension(d), oracle[d], "fb(5) at degree {d}");
    }
}

#[test]
fn spherical_and_sphere_braid_presentations_are_relabelings() {
    // sph(n) on indices 0..=n is the same presentation as fb(n+1) on
    // 1..=n+1; their tables must produce identical dimensions.
    for n in 2..=3u8 {
        let sph = NormalFormTable::get(PresentationId::sph(n), 4);
        let fb = NormalFormTable::get(PresentationId::fb(n + 1), 4);
        for d in 0..=4 {
            assert_eq!(sph.dimension(d), fb.dimension(d), "sph({n}) vs fb({}) at {d}", n + 1);
        }
    }
}

#[test]
fn eliminated_generators_are_the_expected_gauge_choices() {
    // Spherical: every index-0 generator is eliminated.
    let sph = NormalFormTable::get(PresentationId::sph(3), 1);
    for j in 0..=3u8 {
        assert!(sph.eliminated_image(GeneratorId::t(0, j)).is_some());
    }
    assert_eq!(sph.kept_generators().len(), 6);
    // Sphere braid: every index-1 generator is eliminated.
    let fb = NormalFormTable::get(PresentationId::fb(4), 1);
    for j in 1..=4u8 {
        assert!(fb.eliminated_image(GeneratorId::x(1, j)).is_some());
    }
    assert_eq!(fb.kept_generators().len(), 6);
}
