//! Verifiers for the defining equations: involution, hexagon (with and
//! without the λ-exponential factors), pentagon, and the five-cycle
//! reformulation of the pentagon in the sphere-braid algebra.

use dkalg::normal_form;
use freealg::{rat, GeneratorId, PresentationId, Rat, Series};
use num::Zero;

use crate::element::{phi_algebra, ElementError};
use crate::report::{EquationCheck, EquationReport};

/// Evaluates a two-letter series at the pair (a, b): the algebra map
/// x ↦ a, y ↦ b applied to `phi`, in the context of `a`.
pub fn phi_of(phi: &Series, a: &Series, b: &Series) -> Series {
    assert_eq!(phi.algebra(), phi_algebra(), "phi must be a two-letter series");
    assert_eq!(a.algebra(), b.algebra(), "arguments must share an algebra");
    assert_eq!(a.trunc(), b.trunc(), "arguments must share a truncation");
    let phi = phi.truncated(a.trunc());
    phi.substitute(a.algebra(), |g| match g {
        GeneratorId::Letter(0) => a.clone(),
        GeneratorId::Letter(1) => b.clone(),
        other => panic!("unexpected generator {other} in a two-letter series"),
    })
}

fn precheck(phi: &Series, degree: usize) -> Result<(), ElementError> {
    if phi.algebra() != phi_algebra() {
        return Err(ElementError::WrongAlgebra {
            expected: phi_algebra().descriptor(),
            got: phi.algebra().descriptor(),
        });
    }
    if phi.trunc() < degree {
        return Err(ElementError::TruncationTooLow {
            trunc: phi.trunc(),
            degree,
        });
    }
    if !phi.is_grouplike() {
        return Err(ElementError::NotGrouplike);
    }
    Ok(())
}

fn gen(p: PresentationId, trunc: usize, i: u8, j: u8) -> Series {
    Series::generator(p, trunc, GeneratorId::t(i, j))
}

fn xgen(trunc: usize, i: u8, j: u8) -> Series {
    Series::generator(PresentationId::fb(5), trunc, GeneratorId::x(i, j))
}

/// Residual of the involution Φ(x,y)·Φ(y,x) = 1 in the free algebra.
pub(crate) fn involution_residual(phi: &Series, degree: usize) -> Series {
    let p = phi_algebra();
    let x = Series::generator(p, degree, GeneratorId::letter(0));
    let y = Series::generator(p, degree, GeneratorId::letter(1));
    &phi_of(phi, &x, &y).mul(&phi_of(phi, &y, &x)) - &Series::one(p, degree)
}

/// Residual of the scalar-free hexagon Φ(x,y)Φ(y,z)Φ(z,x) = 1 with the
/// constraint substituted as z := −x − y.
pub(crate) fn hexagon_residual(phi: &Series, degree: usize) -> Series {
    let p = phi_algebra();
    let x = Series::generator(p, degree, GeneratorId::letter(0));
    let y = Series::generator(p, degree, GeneratorId::letter(1));
    let z = -&(&x + &y);
    let product = phi_of(phi, &x, &y)
        .mul(&phi_of(phi, &y, &z))
        .mul(&phi_of(phi, &z, &x));
    &product - &Series::one(p, degree)
}

/// Where the λ-hexagon is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HexagonRoute {
    /// Substitute t13 := −t12 − t23 into the arguments and evaluate in
    /// the free two-letter algebra. The default.
    Substitute,
    /// Evaluate with t13 as an honest generator in the three-strand chord
    /// algebra, reduce to normal form, then substitute t13 := −t12 − t23.
    Quotient,
}

/// Residual of the λ-hexagon
/// Φ(t12,t23)·e^{λt23/2}·Φ(t23,t31)·e^{λt31/2}·Φ(t13,t12)·e^{λt12/2} = 1
/// under the constraint t12 + t23 + t13 = 0 (t31 = t13).
pub(crate) fn lambda_hexagon_residual(
    lambda: &Rat,
    phi: &Series,
    degree: usize,
    route: HexagonRoute,
) -> Series {
    let half = rat(1, 2);
    match route {
        HexagonRoute::Substitute => {
            let p = phi_algebra();
            let x = Series::generator(p, degree, GeneratorId::letter(0));
            let y = Series::generator(p, degree, GeneratorId::letter(1));
            let s = -&(&x + &y);
            let product = phi_of(phi, &x, &y)
                .mul(&y.scaled(&(lambda * &half)).exp())
                .mul(&phi_of(phi, &y, &s))
                .mul(&s.scaled(&(lambda * &half)).exp())
                .mul(&phi_of(phi, &s, &x))
                .mul(&x.scaled(&(lambda * &half)).exp());
            &product - &Series::one(p, degree)
        }
        HexagonRoute::Quotient => {
            let p = PresentationId::t(3);
            let t12 = gen(p, degree, 1, 2);
            let t23 = gen(p, degree, 2, 3);
            let t13 = gen(p, degree, 1, 3);
            let product = phi_of(phi, &t12, &t23)
                .mul(&t23.scaled(&(lambda * &half)).exp())
                .mul(&phi_of(phi, &t23, &t13))
                .mul(&t13.scaled(&(lambda * &half)).exp())
                .mul(&phi_of(phi, &t13, &t12))
                .mul(&t12.scaled(&(lambda * &half)).exp());
            let reduced = normal_form(&(&product - &Series::one(p, degree)));
            // Impose the constraint after reduction; the substitution
            // kills the defining ideal, so the two routes agree.
            let free = phi_algebra();
            reduced.substitute(free, |g| match g {
                GeneratorId::T(1, 2) => Series::generator(free, degree, GeneratorId::letter(0)),
                GeneratorId::T(2, 3) => Series::generator(free, degree, GeneratorId::letter(1)),
                GeneratorId::T(1, 3) => {
                    -&(&Series::generator(free, degree, GeneratorId::letter(0))
                        + &Series::generator(free, degree, GeneratorId::letter(1)))
                }
                other => panic!("unexpected generator {other} in t(3)"),
            })
        }
    }
}

/// Residual of the pentagon
/// Φ(t12,t23)·Φ(t12+t13, t24+t34)·Φ(t23,t34) =
/// Φ(t13+t23, t34)·Φ(t12, t23+t24), reduced in the four-strand chord
/// algebra.
pub(crate) fn pentagon_residual(phi: &Series, degree: usize) -> Series {
    let p = PresentationId::t(4);
    let t = |i, j| gen(p, degree, i, j);
    let lhs = phi_of(phi, &t(1, 2), &t(2, 3))
        .mul(&phi_of(phi, &(&t(1, 2) + &t(1, 3)), &(&t(2, 4) + &t(3, 4))))
        .mul(&phi_of(phi, &t(2, 3), &t(3, 4)));
    let rhs = phi_of(phi, &(&t(1, 3) + &t(2, 3)), &t(3, 4))
        .mul(&phi_of(phi, &t(1, 2), &(&t(2, 3) + &t(2, 4))));
    normal_form(&(&lhs - &rhs))
}

/// Checks the three defining equations of the graded group: involution,
/// hexagon with z := −x − y, and pentagon.
pub fn verify_grt1(phi: &Series, degree: usize) -> Result<EquationReport, ElementError> {
    precheck(phi, degree)?;
    let mut report = EquationReport::new();
    report.push(EquationCheck {
        id: "grt-involution".into(),
        anchor: "Phi(x,y)·Phi(y,x) = 1 in free(x,y)".into(),
        degree,
        conditional: false,
        residual: involution_residual(phi, degree),
    });
    report.push(EquationCheck {
        id: "grt-hexagon".into(),
        anchor: "Phi(x,y)·Phi(y,z)·Phi(z,x) = 1 with z = -x-y".into(),
        degree,
        conditional: false,
        residual: hexagon_residual(phi, degree),
    });
    report.push(EquationCheck {
        id: "grt-pentagon".into(),
        anchor: "Phi(t12,t23)·Phi(t12+t13,t24+t34)·Phi(t23,t34) = Phi(t13+t23,t34)·Phi(t12,t23+t24) in t(4)".into(),
        degree,
        conditional: false,
        residual: pentagon_residual(phi, degree),
    });
    Ok(report)
}

/// Checks the three associator equations for the pair (λ, Φ) with the
/// default substitution route for the hexagon constraint.
pub fn verify_associator(
    lambda: &Rat,
    phi: &Series,
    degree: usize,
) -> Result<EquationReport, ElementError> {
    verify_associator_with(lambda, phi, degree, HexagonRoute::Substitute)
}

/// Checks the associator equations with an explicit hexagon route.
pub fn verify_associator_with(
    lambda: &Rat,
    phi: &Series,
    degree: usize,
    route: HexagonRoute,
) -> Result<EquationReport, ElementError> {
    if lambda.is_zero() {
        return Err(ElementError::ZeroLambda);
    }
    precheck(phi, degree)?;
    let mut report = EquationReport::new();
    report.push(EquationCheck {
        id: "assoc-involution".into(),
        anchor: "Phi(x,y)·Phi(y,x) = 1 in free(x,y)".into(),
        degree,
        conditional: false,
        residual: involution_residual(phi, degree),
    });
    report.push(EquationCheck {
        id: "assoc-hexagon".into(),
        anchor: "Phi(t12,t23)·e^{λt23/2}·Phi(t23,t31)·e^{λt31/2}·Phi(t13,t12)·e^{λt12/2} = 1 with t12+t23+t13 = 0"
            .into(),
        degree,
        conditional: false,
        residual: lambda_hexagon_residual(lambda, phi, degree, route),
    });
    report.push(EquationCheck {
        id: "assoc-pentagon".into(),
        anchor: "Phi(t12,t23)·Phi(t12+t13,t24+t34)·Phi(t23,t34) = Phi(t13+t23,t34)·Phi(t12,t23+t24) in t(4)".into(),
        degree,
        conditional: false,
        residual: pentagon_residual(phi, degree),
    });
    Ok(report)
}

/// Residual of the five-cycle product in the five-strand sphere-braid
/// algebra.
pub(crate) fn five_cycle_residual(phi: &Series, degree: usize) -> Series {
    let x = |i, j| xgen(degree, i, j);
    let product = phi_of(phi, &x(1, 2), &x(2, 3))
        .mul(&phi_of(phi, &x(3, 4), &x(4, 5)))
        .mul(&phi_of(phi, &x(5, 1), &x(1, 2)))
        .mul(&phi_of(phi, &x(2, 3), &x(3, 4)))
        .mul(&phi_of(phi, &x(4, 5), &x(5, 1)));
    normal_form(&(&product - &Series::one(PresentationId::fb(5), degree)))
}

/// Residual of the rearranged five-cycle
/// Φ(X12,X51)·Φ(X45,X34) = Φ(X23,X34)·Φ(X45,X51)·Φ(X12,X23).
pub(crate) fn five_cycle_rearranged_residual(phi: &Series, degree: usize) -> Series {
    let x = |i, j| xgen(degree, i, j);
    let lhs = phi_of(phi, &x(1, 2), &x(5, 1)).mul(&phi_of(phi, &x(4, 5), &x(3, 4)));
    let rhs = phi_of(phi, &x(2, 3), &x(3, 4))
        .mul(&phi_of(phi, &x(4, 5), &x(5, 1)))
        .mul(&phi_of(phi, &x(1, 2), &x(2, 3)));
    normal_form(&(&lhs - &rhs))
}

/// Checks the five-cycle reformulation of the pentagon and its rearranged
/// form in the five-strand sphere-braid algebra.
pub fn verify_5cycle(phi: &Series, degree: usize) -> Result<EquationReport, ElementError> {
    precheck(phi, degree)?;
    let mut report = EquationReport::new();
    report.push(EquationCheck {
        id: "fivecycle".into(),
        anchor: "Phi(X12,X23)·Phi(X34,X45)·Phi(X51,X12)·Phi(X23,X34)·Phi(X45,X51) = 1 in fB(5)".into(),
        degree,
        conditional: false,
        residual: five_cycle_residual(phi, degree),
    });
    report.push(EquationCheck {
        id: "fivecycle-rearranged".into(),
        anchor: "Phi(X12,X51)·Phi(X45,X34) = Phi(X23,X34)·Phi(X45,X51)·Phi(X12,X23) in fB(5)".into(),
        degree,
        conditional: false,
        residual: five_cycle_rearranged_residual(phi, degree),
    });
    Ok(report)
}
