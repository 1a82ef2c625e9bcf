//! The group law on (λ, Φ) pairs, scalar rescaling, inverses, and the
//! action on associator candidates.
//!
//! The product of (λ₁, Φ₁) and (λ₂, Φ₂) is
//! (λ₁λ₂, Φ₁(λ₂·x, λ₂·Φ₂ y Φ₂⁻¹)·Φ₂): the second factor twists the
//! arguments of the first before the series are multiplied. Every
//! operation re-verifies the defining equations on its output.

use freealg::{GeneratorId, Rat, Series};
use num::{One, Zero};

use crate::element::{phi_algebra, AssociatorCandidate, ElementError, GrtElement};
use crate::equations::phi_of;

/// Φ₁ evaluated at the twisted arguments (λ₂·x, λ₂·Φ₂ y Φ₂⁻¹), at the
/// given working degree.
fn twisted_arguments(phi1: &Series, lambda2: &Rat, phi2: &Series, degree: usize) -> Series {
    let p = phi_algebra();
    let phi2 = phi2.truncated(degree);
    let x = Series::generator(p, degree, GeneratorId::letter(0)).scaled(lambda2);
    let y = Series::generator(p, degree, GeneratorId::letter(1))
        .conjugate_by(&phi2)
        .scaled(lambda2);
    phi_of(phi1, &x, &y)
}

/// The series part of the group law: Φ₁(λ₂·x, λ₂·Φ₂ y Φ₂⁻¹)·Φ₂.
pub(crate) fn twisted_product(
    phi1: &Series,
    lambda2: &Rat,
    phi2: &Series,
    degree: usize,
) -> Series {
    twisted_arguments(phi1, lambda2, phi2, degree).mul(&phi2.truncated(degree))
}

/// Multiplies two verified elements at the smaller of their certified
/// degrees and re-verifies the result.
///
/// Panics if the product fails the defining equations; closure under the
/// law means such a failure is a bug, not an input error.
pub fn grt_mul(g1: &GrtElement, g2: &GrtElement) -> GrtElement {
    let degree = g1.certified_degree().min(g2.certified_degree());
    let lambda = g1.lambda() * g2.lambda();
    let phi = twisted_product(g1.phi(), g2.lambda(), g2.phi(), degree);
    GrtElement::new(lambda, phi, degree).expect("the group law must stay on the variety")
}

/// The scalar rescaling action: μ · (λ, Φ) = (μλ, Φ(μ⁻¹x, μ⁻¹y)).
///
/// Panics if `mu` is zero.
pub fn grt_scale(g: &GrtElement, mu: &Rat) -> GrtElement {
    assert!(!mu.is_zero(), "scale factor must be nonzero");
    let degree = g.certified_degree();
    let p = phi_algebra();
    let inv = mu.recip();
    let x = Series::generator(p, degree, GeneratorId::letter(0)).scaled(&inv);
    let y = Series::generator(p, degree, GeneratorId::letter(1)).scaled(&inv);
    let phi = phi_of(&g.phi().truncated(degree), &x, &y);
    GrtElement::new(mu * g.lambda(), phi, degree).expect("rescaling must stay on the variety")
}

/// Inverts an element: λ ↦ λ⁻¹ and Φ ↦ the fixed point of
/// Φ' = [Φ(λ⁻¹·x, λ⁻¹·Φ' y Φ'⁻¹)]⁻¹, which each iteration refines by one
/// degree. Both composites with the input are checked to be the identity.
pub fn grt_inverse(g: &GrtElement) -> GrtElement {
    let degree = g.certified_degree();
    let lambda_inv = g.lambda().recip();
    let mut phi_prime = Series::one(phi_algebra(), degree);
    for _ in 0..degree {
        phi_prime = twisted_arguments(g.phi(), &lambda_inv, &phi_prime, degree).inverse();
    }
    let inv = GrtElement::new(lambda_inv, phi_prime, degree)
        .expect("the inverse must stay on the variety");
    for product in [grt_mul(g, &inv), grt_mul(&inv, g)] {
        assert!(product.lambda().is_one(), "inverse lambda is off");
        assert!(
            (product.phi() - &Series::one(phi_algebra(), degree)).is_zero(),
            "inverse phi is off"
        );
    }
    inv
}

/// Acts on an associator candidate by a group element, at the smaller of
/// the two certified degrees: (λ, Φ) · (μ, Ψ) =
/// (λμ, Φ(μ·x, μ·Ψ y Ψ⁻¹)·Ψ). The result is re-verified; a failure is
/// reported, not panicked, so callers can surface the residual.
pub fn torsor_act(
    a: &AssociatorCandidate,
    g: &GrtElement,
) -> Result<AssociatorCandidate, ElementError> {
    let degree = a.certified_degree().min(g.certified_degree());
    let lambda = a.lambda() * g.lambda();
    let phi = twisted_product(a.phi(), g.lambda(), g.phi(), degree);
    AssociatorCandidate::new(lambda, phi, degree)
}
