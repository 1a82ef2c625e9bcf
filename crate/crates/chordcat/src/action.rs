//! The action of certified scaling pairs `(λ, φ)` on chord morphisms,
//! and the step-by-step verification that the action fixes the unknot
//! value.
//!
//! A certified pair acts on a layered word by scaling every slice degree
//! by `λ` and attaching a width-one correction next to every cap.  Two
//! variants realize the same action with the correction on either cap
//! strand: `Gprime` post-corrects the right strand with `ν(φ)`, `Rho`
//! pre-corrects the left strand with `ρ(φ)`.

use freealg::{GeneratorId, PresentationId, Series};
use grteq::{
    phi_of, solve_degreewise, torsor_act, EquationCheck, EquationReport, GrtElement,
    SolveTarget,
};
use freealg::Rat;
use num::One;
use parcd::scale_degrees;

use crate::dual::{nu_value, rho_value};
use crate::error::ChordError;
use crate::layer::Layer;
use crate::morphism::{embed_slice, Morphism};
use crate::normalize::{normalize, Normalized};
use crate::object::CObject;

/// Which cap strand carries the correction slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionVariant {
    /// Correct the right cap strand with `ν(φ)`.
    Gprime,
    /// Correct the left cap strand with `ρ(φ)`.
    Rho,
}

/// Act on a morphism: slices are degree-scaled by `λ`, cups and
/// permutations are fixed, and every cap acquires the variant's
/// correction on one of its strands.  The image is normalized.
///
/// The element must be certified at least to the truncation order of the
/// slices in `m`.
pub fn grt_act(
    g: &GrtElement,
    m: &Morphism,
    variant: ActionVariant,
) -> Result<Normalized, ChordError> {
    let trunc = m.truncation().unwrap_or_else(|| g.certified_degree());
    if g.certified_degree() < trunc {
        return Err(ChordError::NotCertified {
            certified: g.certified_degree(),
            needed: trunc,
        });
    }
    let phi = g.phi().truncated(trunc);
    let correction = match variant {
        ActionVariant::Gprime => nu_value(&phi)?,
        ActionVariant::Rho => rho_value(&phi)?,
    };
    let lambda = g.lambda();
    let mut words = Vec::with_capacity(m.words().len());
    for word in m.words() {
        let mut layers = Vec::with_capacity(word.layers.len());
        let mut width = m.source().width();
        for layer in &word.layers {
            match layer {
                Layer::Slice(u) => layers.push(Layer::Slice(scale_degrees(u, lambda))),
                Layer::Cap(i) => {
                    let strand = match variant {
                        ActionVariant::Gprime => i + 1,
                        ActionVariant::Rho => *i,
                    };
                    layers.push(Layer::Slice(embed_slice(&correction, strand - 1, width)));
                    layers.push(Layer::Cap(*i));
                }
                other => layers.push(other.clone()),
            }
            width = layer.chase(width, 0).expect("validated layer");
        }
        words.push((word.coeff.clone(), layers));
    }
    let image = Morphism::from_words(m.source().clone(), m.target().clone(), words)?;
    Ok(normalize(&image))
}

/// The two unknot relations, one per variant, as bottom-to-top words on a
/// single strand:
///
/// * `Gprime`: `(id ⊗ b) Φ(t12, t23) (d ⊗ id)`, whose value is the
///   inverse unknot factor;
/// * `Rho`:    `(b ⊗ id) Φ(t12, t23)⁻¹ (id ⊗ d)`, whose value is the
///   unknot factor itself.
fn unknot_word(slice: Series, variant: ActionVariant) -> Result<Morphism, ChordError> {
    let layers = match variant {
        ActionVariant::Gprime => vec![Layer::Cup(2), Layer::Slice(slice), Layer::Cap(1)],
        ActionVariant::Rho => vec![Layer::Cup(1), Layer::Slice(slice), Layer::Cap(2)],
    };
    Morphism::from_word(CObject::plus(), CObject::plus(), Rat::one(), layers)
}

fn unknot_value(slice: Series, variant: ActionVariant) -> Result<Series, ChordError> {
    let trunc = slice.trunc();
    normalize(&unknot_word(slice, variant)?).endo_value(trunc)
}

/// Verify, one computation per step, that the action of `g` fixes the
/// unknot value computed from a degree-wise reference associator.
///
/// Steps (for the `Gprime` variant; `Rho` mirrors them):
///
/// 1. the transformed relation word — torsor-moved associator slice plus
///    cap correction — has the same value as the reference word;
/// 2. the correction enters the transformed value multiplicatively;
/// 3. cancelling the `φ(t12, t23)` factor of the moved associator
///    reproduces the transformed value;
/// 4. the cancelled word reduces to the reference value.
pub fn unknot_chain_verify(
    g: &GrtElement,
    variant: ActionVariant,
) -> Result<EquationReport, ChordError> {
    let degree = g.certified_degree();
    let reference = solve_degreewise(SolveTarget::Assoc(Rat::one()), degree)?
        .associator()
        .ok_or(ChordError::ReferenceAssociator { degree })?;
    let moved = torsor_act(&reference, g)?;

    let ambient = PresentationId::ft(3);
    let t12 = Series::generator(ambient, degree, GeneratorId::t(1, 2));
    let t23 = Series::generator(ambient, degree, GeneratorId::t(2, 3));
    let reference_slice = phi_of(reference.phi(), &t12, &t23);
    let moved_slice = phi_of(moved.phi(), &t12, &t23);
    let phi_g = g.phi().truncated(degree);
    let phi_g_slice = phi_of(&phi_g, &t12, &t23);

    let (reference_slice, moved_slice, cancelled_slice, correction, names) = match variant {
        ActionVariant::Gprime => (
            reference_slice,
            moved_slice.clone(),
            moved_slice.mul(&phi_g_slice.inverse()),
            nu_value(&phi_g)?,
            GPRIME_STEPS,
        ),
        ActionVariant::Rho => (
            reference_slice.inverse(),
            moved_slice.inverse(),
            phi_g_slice.mul(&moved_slice.inverse()),
            rho_value(&phi_g)?,
            RHO_STEPS,
        ),
    };

    let reference_value = unknot_value(reference_slice, variant)?;
    let bare_value = unknot_value(moved_slice.clone(), variant)?;
    let cancelled_value = unknot_value(cancelled_slice, variant)?;

    let corrected = {
        // Both relation words cap a pair containing strand 2, and both
        // corrections attach exactly there: `ν` on the right strand of
        // the cap at (1, 2), `ρ` on the left strand of the cap at (2, 3).
        let word = unknot_word(moved_slice, variant)?;
        let mut layers = word.words()[0].layers.clone();
        let cap_index = layers.len() - 1;
        layers.insert(cap_index, Layer::Slice(embed_slice(&correction, 1, 3)));
        let word =
            Morphism::from_word(CObject::plus(), CObject::plus(), Rat::one(), layers)?;
        normalize(&word).endo_value(degree)?
    };

    let mut report = EquationReport::new();
    let mut push = |id: &str, anchor: &str, residual: Series| {
        report.push(EquationCheck {
            id: id.to_string(),
            anchor: anchor.to_string(),
            degree,
            conditional: true,
            residual,
        });
    };
    push(
        names[0].0,
        names[0].1,
        &corrected - &reference_value,
    );
    push(
        names[1].0,
        names[1].1,
        &corrected - &bare_value.mul(&correction),
    );
    push(names[2].0, names[2].1, &corrected - &cancelled_value);
    push(
        names[3].0,
        names[3].1,
        &cancelled_value - &reference_value,
    );
    Ok(report)
}

const GPRIME_STEPS: [(&str, &str); 4] = [
    (
        "unknot-gprime-invariance",
        "(id⊗b) Phi'(t12,t23) (nu⊗1 at strand 2) (d⊗id) = (id⊗b) Phi(t12,t23) (d⊗id)",
    ),
    (
        "unknot-gprime-correction",
        "(id⊗b) Phi'(t12,t23) (nu at strand 2) (d⊗id) = [(id⊗b) Phi'(t12,t23) (d⊗id)] · nu",
    ),
    (
        "unknot-gprime-cancellation",
        "(id⊗b) Phi'(t12,t23) (nu at strand 2) (d⊗id) = (id⊗b) [Phi'·phi_g(t12,t23)^{-1}] (d⊗id)",
    ),
    (
        "unknot-gprime-reduction",
        "(id⊗b) [Phi'·phi_g(t12,t23)^{-1}] (d⊗id) = (id⊗b) Phi(t12,t23) (d⊗id)",
    ),
];

const RHO_STEPS: [(&str, &str); 4] = [
    (
        "unknot-rho-invariance",
        "(b⊗id) Phi'(t12,t23)^{-1} (rho at strand 2) (id⊗d) = (b⊗id) Phi(t12,t23)^{-1} (id⊗d)",
    ),
    (
        "unknot-rho-correction",
        "(b⊗id) Phi'(t12,t23)^{-1} (rho at strand 2) (id⊗d) = [(b⊗id) Phi'(t12,t23)^{-1} (id⊗d)] · rho",
    ),
    (
        "unknot-rho-cancellation",
        "(b⊗id) Phi'(t12,t23)^{-1} (rho at strand 2) (id⊗d) = (b⊗id) [phi_g(t12,t23)·Phi'^{-1}] (id⊗d)",
    ),
    (
        "unknot-rho-reduction",
        "(b⊗id) [phi_g(t12,t23)·Phi'^{-1}] (id⊗d) = (b⊗id) Phi(t12,t23)^{-1} (id⊗d)",
    ),
];
