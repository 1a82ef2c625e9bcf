//! Duality: the generating object is self-dual via the cup and cap, and
//! every morphism has a transpose obtained by bending all inputs and
//! outputs around.
//!
//! This module also computes the width-one correction values attached to
//! caps by the scaling-automorphism action: a group-like series
//! `phi(x, y)` is bent into a cup–slice–cap snake, evaluated to a series
//! in the framing generator of a single strand, and inverted.

use freealg::{GeneratorId, PresentationId, Rat, Series};
use grteq::{phi_algebra, phi_of};
use num::One;

use crate::error::ChordError;
use crate::layer::Layer;
use crate::morphism::{embed_layer, Morphism};
use crate::normalize::{normalize, Normalized};
use crate::object::CObject;

/// Transpose a morphism `f : m → n` to `fᵀ : n → m` by cupping every
/// input strand around the right side and capping every output strand
/// around the left, then normalizing.
pub fn transpose(f: &Morphism) -> Normalized {
    let m = f.source().width();
    let n = f.target().width();
    let mut words = Vec::with_capacity(f.words().len());
    for word in f.words() {
        let mut layers =
            Vec::with_capacity(word.layers.len() + m + n);
        for k in 1..=m {
            layers.push(Layer::Cup(n + k));
        }
        let mut width = m;
        for layer in &word.layers {
            layers.push(embed_layer(layer, n, m, width));
            width = layer.chase(width, 0).expect("validated layer");
        }
        for k in (1..=n).rev() {
            layers.push(Layer::Cap(k));
        }
        words.push((word.coeff.clone(), layers));
    }
    let bent = Morphism::from_words(f.target().clone(), f.source().clone(), words)
        .expect("bending a validated word yields a validated word");
    normalize(&bent)
}

/// The snake value of a group-like `phi(x, y)`: substitute the chord
/// generators `t12, t23` on three strands, bend the left strand over the
/// other two, and read off the resulting series in the framing generator
/// of the surviving strand.
fn snake_value(slice: Series, cup_at: usize, cap_at: usize) -> Result<Series, ChordError> {
    let trunc = slice.trunc();
    let run = Morphism::from_word(
        CObject::plus(),
        CObject::plus(),
        Rat::one(),
        vec![Layer::Cup(cup_at), Layer::Slice(slice), Layer::Cap(cap_at)],
    )?;
    normalize(&run).endo_value(trunc)
}

fn check_phi(phi: &Series) -> Result<(Series, Series), ChordError> {
    if phi.algebra() != phi_algebra() {
        return Err(ChordError::AlgebraMismatch {
            expected: phi_algebra(),
            found: phi.algebra(),
        });
    }
    if !phi.is_grouplike() {
        return Err(ChordError::NotGrouplike);
    }
    let ambient = PresentationId::ft(3);
    let t12 = Series::generator(ambient, phi.trunc(), GeneratorId::t(1, 2));
    let t23 = Series::generator(ambient, phi.trunc(), GeneratorId::t(2, 3));
    Ok((t12, t23))
}

fn invert_snake(value: Series) -> Result<Series, ChordError> {
    if !value.constant_term().is_one() {
        return Err(ChordError::NotInvertible {
            constant: value.constant_term().to_string(),
        });
    }
    Ok(value.inverse())
}

/// The cap correction `ν(phi)` as a width-one series: the inverse of the
/// snake `(b ⊗ id) phi(t12, t23) (id ⊗ d)` read bottom to top.
pub(crate) fn nu_value(phi: &Series) -> Result<Series, ChordError> {
    let (t12, t23) = check_phi(phi)?;
    invert_snake(snake_value(phi_of(phi, &t12, &t23), 1, 2)?)
}

/// The cap correction `ρ(phi)`: the inverse of the mirrored snake
/// `(id ⊗ b) phi(t12, t23)⁻¹ (d ⊗ id)` read bottom to top.
pub(crate) fn rho_value(phi: &Series) -> Result<Series, ChordError> {
    let (t12, t23) = check_phi(phi)?;
    invert_snake(snake_value(phi_of(phi, &t12, &t23).inverse(), 2, 1)?)
}

/// `ν(phi)` as an endomorphism of the generating object.
pub fn nu_of(phi: &Series) -> Result<Morphism, ChordError> {
    let slice = Morphism::slice(CObject::plus(), nu_value(phi)?)?;
    Ok(normalize(&slice).morphism)
}

/// `ρ(phi)` as an endomorphism of the generating object.
pub fn rho_of(phi: &Series) -> Result<Morphism, ChordError> {
    let slice = Morphism::slice(CObject::plus(), rho_value(phi)?)?;
    Ok(normalize(&slice).morphism)
}
