//! Degree-by-degree solver for the defining equations.
//!
//! In each degree d the unknown is a Lie-series correction: a rational
//! combination of Lyndon bracketings of degree d multiplied into Φ as an
//! exponential. Because two degree-d corrections only meet in degree 2d,
//! the degree-d residuals depend on the correction affinely and exactly,
//! so each step is one sparse rational linear solve.

use std::collections::BTreeSet;

use freealg::{lyndon_bracketing, lyndon_words, Monomial, Rat, Series};
use num::{One, Zero};
use ratmat::{solve_affine_with_columns, SolveOutcome as LinearOutcome, SparseVec};
use thiserror::Error;

use crate::element::{phi_algebra, AssociatorCandidate, ElementError, GrtElement};
use crate::equations::{
    hexagon_residual, involution_residual, lambda_hexagon_residual, pentagon_residual,
    verify_associator, verify_grt1, HexagonRoute,
};

/// Which set of defining equations to solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveTarget {
    /// Involution, scalar-free hexagon, pentagon.
    Grt1,
    /// Involution, λ-hexagon for the given nonzero λ, pentagon.
    Assoc(Rat),
}

/// What one degree of the solve produced.
#[derive(Clone, Debug)]
pub struct DegreeSolution {
    pub degree: usize,
    /// Dimension of the solution space of homogeneous corrections.
    pub kernel_dim: usize,
    /// A basis of that space: degree-homogeneous Lie series which may be
    /// exponentiated onto Φ without disturbing the equations at this
    /// degree.
    pub kernel: Vec<Series>,
}

/// A completed solve: the found Φ together with the per-degree freedom.
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub target: SolveTarget,
    pub degree: usize,
    pub per_degree: Vec<DegreeSolution>,
    /// The particular solution, truncated at `degree`.
    pub phi: Series,
    /// Its logarithm, a Lie series when the solve succeeds.
    pub log_phi: Series,
}

/// Failure of the degreewise solve.
#[derive(Debug, Error)]
pub enum SolveError {
    #[error("no correction exists at degree {degree}: the affine system is inconsistent (rank {rank})")]
    Obstruction { degree: usize, rank: usize },
    #[error(transparent)]
    Element(#[from] ElementError),
}

fn residuals(target: &SolveTarget, phi: &Series, degree: usize) -> Vec<Series> {
    match target {
        SolveTarget::Grt1 => vec![
            involution_residual(phi, degree),
            hexagon_residual(phi, degree),
            pentagon_residual(phi, degree),
        ],
        SolveTarget::Assoc(lambda) => vec![
            involution_residual(phi, degree),
            lambda_hexagon_residual(lambda, phi, degree, HexagonRoute::Substitute),
            pentagon_residual(phi, degree),
        ],
    }
}

/// Solves the target equations degree by degree up to `degree`, starting
/// from Φ = 1. Returns the particular solution (free kernel coefficients
/// set to zero) together with each degree's kernel.
pub fn solve_degreewise(target: SolveTarget, degree: usize) -> Result<SolveOutcome, SolveError> {
    if let SolveTarget::Assoc(lambda) = &target {
        if lambda.is_zero() {
            return Err(ElementError::ZeroLambda.into());
        }
    }
    let p = phi_algebra();
    let words_by_degree = lyndon_words(&p.generators(), degree);
    let mut phi = Series::one(p, degree);
    let mut per_degree = Vec::with_capacity(degree);
    for d in 1..=degree {
        let phi_d = phi.truncated(d);
        let base = residuals(&target, &phi_d, d);
        let words = &words_by_degree[d - 1];
        let mut deltas: Vec<Vec<Series>> = Vec::with_capacity(words.len());
        for word in words {
            let perturbed = phi_d.mul(&lyndon_bracketing(word, p, d).exp());
            let res = residuals(&target, &perturbed, d);
            deltas.push(
                res.iter()
                    .zip(&base)
                    .map(|(r, s)| (r - s).degree_part(d))
                    .collect(),
            );
        }
        // One scalar equation per (check, degree-d monomial) pair that
        // appears anywhere.
        let mut keys: BTreeSet<(usize, Monomial)> = BTreeSet::new();
        for (c, s) in base.iter().enumerate() {
            for (m, _) in s.degree_part(d).terms() {
                keys.insert((c, m.clone()));
            }
        }
        for delta in &deltas {
            for (c, s) in delta.iter().enumerate() {
                for (m, _) in s.terms() {
                    keys.insert((c, m.clone()));
                }
            }
        }
        let mut equations: Vec<(SparseVec, Rat)> = Vec::with_capacity(keys.len());
        for (c, m) in &keys {
            let mut row = SparseVec::new();
            for (i, delta) in deltas.iter().enumerate() {
                let coeff = delta[*c].coeff(m);
                if !coeff.is_zero() {
                    row.set(i, coeff);
                }
            }
            equations.push((row, -base[*c].coeff(m)));
        }
        match solve_affine_with_columns(&equations, 0..words.len()) {
            LinearOutcome::Inconsistent { rank } => {
                return Err(SolveError::Obstruction { degree: d, rank })
            }
            LinearOutcome::Solution(sol) => {
                let mut update = Series::zero(p, degree);
                for (i, word) in words.iter().enumerate() {
                    let u = sol.particular.get(i);
                    if !u.is_zero() {
                        update = &update + &lyndon_bracketing(word, p, degree).scaled(&u);
                    }
                }
                if !update.is_zero() {
                    phi = phi.mul(&update.exp());
                }
                let kernel: Vec<Series> = sol
                    .kernel
                    .iter()
                    .map(|v| {
                        let mut dir = Series::zero(p, degree);
                        for (i, word) in words.iter().enumerate() {
                            let u = v.get(i);
                            if !u.is_zero() {
                                dir = &dir + &lyndon_bracketing(word, p, degree).scaled(&u);
                            }
                        }
                        dir
                    })
                    .collect();
                per_degree.push(DegreeSolution {
                    degree: d,
                    kernel_dim: kernel.len(),
                    kernel,
                });
            }
        }
    }
    let log_phi = phi.log();
    Ok(SolveOutcome {
        target,
        degree,
        per_degree,
        phi,
        log_phi,
    })
}

impl SolveOutcome {
    /// The per-degree record for degree `d` (1-based).
    pub fn at_degree(&self, d: usize) -> &DegreeSolution {
        &self.per_degree[d - 1]
    }

    /// Re-verifies the solution and packages it as a certified group
    /// element with λ = 1. `None` unless the target was the symmetry
    /// group.
    pub fn element(&self) -> Option<GrtElement> {
        match &self.target {
            SolveTarget::Grt1 => {
                let report =
                    verify_grt1(&self.phi, self.degree).expect("solver output is structurally sound");
                assert!(report.all_passed(), "solver output fails re-verification");
                Some(GrtElement::from_verified_parts(
                    Rat::one(),
                    self.phi.clone(),
                    self.degree,
                ))
            }
            SolveTarget::Assoc(_) => None,
        }
    }

    /// Re-verifies the solution and packages it as a certified associator
    /// candidate. `None` unless the target was an associator.
    pub fn associator(&self) -> Option<AssociatorCandidate> {
        match &self.target {
            SolveTarget::Assoc(lambda) => {
                let report = verify_associator(lambda, &self.phi, self.degree)
                    .expect("solver output is structurally sound");
                assert!(report.all_passed(), "solver output fails re-verification");
                Some(AssociatorCandidate::from_verified_parts(
                    lambda.clone(),
                    self.phi.clone(),
                    self.degree,
                ))
            }
            SolveTarget::Grt1 => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use freealg::{rat, GeneratorId};

    #[test]
    fn unit_lambda_fixes_the_degree_two_coefficient() {
        let outcome = solve_degreewise(SolveTarget::Assoc(Rat::one()), 2).unwrap();
        let xy = Monomial::from_letters([GeneratorId::letter(0), GeneratorId::letter(1)]);
        let yx = Monomial::from_letters([GeneratorId::letter(1), GeneratorId::letter(0)]);
        assert_eq!(outcome.log_phi.coeff(&xy), rat(-1, 24));
        assert_eq!(outcome.log_phi.coeff(&yx), rat(1, 24));
        assert!(outcome.log_phi.degree_part(1).is_zero());
        assert_eq!(outcome.at_degree(1).kernel_dim, 0);
        assert_eq!(outcome.at_degree(2).kernel_dim, 0);
        assert!(outcome.associator().is_some());
        assert!(outcome.element().is_none());
    }

    #[test]
    fn lambda_scales_the_degree_two_coefficient_quadratically() {
        let outcome = solve_degreewise(SolveTarget::Assoc(rat(2, 1)), 2).unwrap();
        let xy = Monomial::from_letters([GeneratorId::letter(0), GeneratorId::letter(1)]);
        assert_eq!(outcome.log_phi.coeff(&xy), rat(-4, 24));
    }

    #[test]
    fn the_symmetry_group_is_trivial_below_degree_three() {
        let outcome = solve_degreewise(SolveTarget::Grt1, 3).unwrap();
        assert!(outcome.phi.truncated(2).log().is_zero());
        assert_eq!(outcome.at_degree(1).kernel_dim, 0);
        assert_eq!(outcome.at_degree(2).kernel_dim, 0);
        assert!(outcome.at_degree(3).kernel_dim >= 1);
        // Exponentiating a kernel direction gives a certified element.
        let dir = &outcome.at_degree(3).kernel[0];
        let report = verify_grt1(&dir.exp(), 3).unwrap();
        assert!(report.all_passed());
    }

    #[test]
    fn zero_lambda_is_rejected() {
        assert!(matches!(
            solve_degreewise(SolveTarget::Assoc(Rat::zero()), 2),
            Err(SolveError::Element(ElementError::ZeroLambda))
        ));
    }
}
