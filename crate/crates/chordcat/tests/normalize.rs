//! End-to-end rewriting checks: enclosing a slice between a cup and a cap
//! matches the single-strand rotation computed independently on the chord
//! algebra side, the four-term combination dies in the quotient, and the
//! rewriting result is independent of the rewrite schedule.

use chordcat::{compose, normalize, normalize_seeded, tensor, CObject, Morphism};
use dkalg::{normal_form, transposition01};
use freealg::{rat, GeneratorId, PresentationId, Series};

fn t_gen(i: u8, j: u8, strands: u8, trunc: usize) -> Series {
    Series::generator(PresentationId::ft(strands), trunc, GeneratorId::t(i, j))
}

fn slice_of(width: usize, value: Series) -> Morphism {
    Morphism::slice(CObject::word(width), value).expect("valid slice")
}

/// Bends an endomorphism around a fresh strand: the composite
/// `(id_n ⊗ cap) ∘ (id_1 ⊗ f ⊗ id_1) ∘ (cup ⊗ id_n)` built entirely from
/// public tensor/compose calls, so the test exercises the same embedding
/// arithmetic a caller would.
fn enclose(f: &Morphism) -> Morphism {
    let id1 = Morphism::identity(CObject::plus());
    let idn = Morphism::identity(f.source().clone());
    let bottom = tensor(&Morphism::cup(), &idn);
    let middle = tensor(&tensor(&id1, f), &id1);
    let top = tensor(&idn, &Morphism::cap());
    compose(&top, &compose(&middle, &bottom).expect("widths match")).expect("widths match")
}

fn slice_samples(trunc: usize) -> Vec<(usize, Series)> {
    let h = t_gen(1, 2, 2, trunc);
    let pair = t_gen(1, 2, 3, trunc)
        .exp()
        .mul(&t_gen(2, 3, 3, trunc).exp());
    vec![
        (1, t_gen(1, 1, 1, trunc).exp()),
        (2, h.clone()),
        (2, h.exp()),
        (2, &t_gen(1, 1, 2, trunc) - &t_gen(2, 2, 2, trunc).scaled(&rat(3, 4))),
        (3, pair),
    ]
}

#[test]
fn enclosing_a_slice_matches_the_strand_rotation() {
    for (width, value) in slice_samples(3) {
        let bent = normalize(&enclose(&slice_of(width, value.clone())));
        assert!(bent.complete, "width {width} sample left residue");
        let rotated = slice_of(width, normal_form(&transposition01(&value)));
        assert_eq!(
            bent.morphism,
            normalize(&rotated).morphism,
            "rotation mismatch for width {width}"
        );
    }
}

#[test]
fn enclosing_the_crossing_returns_the_crossing() {
    let x = Morphism::permutation(CObject::word(2), vec![2, 1]).expect("valid permutation");
    let bent = normalize(&enclose(&x));
    assert!(bent.complete);
    assert_eq!(bent.morphism, normalize(&x).morphism);
}

#[test]
fn bent_horizontal_chord_is_minus_h_minus_i() {
    let bent = normalize(&enclose(&slice_of(2, t_gen(1, 2, 2, 3))));
    let expected = &(-&t_gen(1, 2, 2, 3)) - &t_gen(2, 2, 2, 3);
    assert_eq!(bent.morphism, slice_of(2, expected));
}

#[test]
fn the_four_term_combination_vanishes() {
    let t12 = t_gen(1, 2, 3, 3);
    let sum = &t_gen(1, 3, 3, 3) + &t_gen(2, 3, 3, 3);
    let raw = &t12.mul(&sum) - &sum.mul(&t12);
    assert!(!raw.is_zero(), "the commutator is nonzero before reduction");
    let reduced = normalize(&slice_of(3, raw));
    assert!(reduced.complete);
    assert!(reduced.morphism.is_zero());
}

#[test]
fn schedules_do_not_change_the_result() {
    let mut fixtures: Vec<Morphism> = Vec::new();
    for (width, value) in slice_samples(3) {
        fixtures.push(enclose(&slice_of(width, value)));
    }
    fixtures.push(enclose(
        &Morphism::permutation(CObject::word(2), vec![2, 1]).expect("valid permutation"),
    ));
    fixtures.push(compose(&Morphism::cap(), &Morphism::cup()).expect("widths match"));

    for (index, fixture) in fixtures.iter().enumerate() {
        let reference = normalize(fixture);
        for seed in 0..16u64 {
            let shuffled = normalize_seeded(fixture, seed);
            assert_eq!(
                shuffled.morphism, reference.morphism,
                "fixture {index} diverged at seed {seed}"
            );
            assert_eq!(shuffled.complete, reference.complete);
        }
    }
}

#[test]
fn normalize_is_idempotent_on_the_corpus() {
    for (width, value) in slice_samples(3) {
        let once = normalize(&enclose(&slice_of(width, value)));
        let twice = normalize(&once.morphism);
        assert_eq!(once.morphism, twice.morphism);
        assert!(twice.complete);
    }
}

#[test]
fn zig_zag_composites_collapse_to_identities() {
    let id1 = Morphism::identity(CObject::plus());
    // (d ⊗ id) ∘ (id ⊗ b) and (id ⊗ d) ∘ (b ⊗ id) both straighten.
    let left = compose(
        &tensor(&Morphism::cap(), &id1),
        &tensor(&id1, &Morphism::cup()),
    )
    .expect("widths match");
    let right = compose(
        &tensor(&id1, &Morphism::cap()),
        &tensor(&Morphism::cup(), &id1),
    )
    .expect("widths match");
    for bent in [left, right] {
        let done = normalize(&bent);
        assert!(done.complete);
        assert_eq!(done.morphism, Morphism::identity(CObject::plus()));
    }
}
