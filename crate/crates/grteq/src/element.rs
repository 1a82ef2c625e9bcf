//! Candidate elements: a scalar λ paired with a group-like two-letter
//! series Φ, plus the plain-text file format and a seeded sampler.

use std::fmt;
use std::str::FromStr;

use freealg::{
    lyndon_bracketing, lyndon_words, rat, series_from_text, series_to_text, PresentationId, Rat,
    Series,
};
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::equations::{verify_associator, verify_grt1};
use crate::report::EquationReport;

/// The two-letter free algebra every Φ lives in.
pub fn phi_algebra() -> PresentationId {
    PresentationId::free(2)
}

/// Structural or verification failure while building an element.
#[derive(Debug, Error)]
pub enum ElementError {
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("phi must live in {expected}, got {got}")]
    WrongAlgebra { expected: String, got: String },
    #[error("phi truncation {trunc} is below the certified degree {degree}")]
    TruncationTooLow { trunc: usize, degree: usize },
    #[error("phi is not group-like")]
    NotGrouplike,
    #[error("defining equations fail; first failure: {0}")]
    Equations(String),
    #[error("element file line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error(transparent)]
    SeriesFormat(#[from] freealg::TextError),
}

fn check_structure(lambda: &Rat, phi: &Series, degree: usize) -> Result<(), ElementError> {
    if lambda.is_zero() {
        return Err(ElementError::ZeroLambda);
    }
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

fn equations_error(report: &EquationReport) -> ElementError {
    let first = report
        .failures()
        .first()
        .map(|c| {
            format!(
                "{} (residual {})",
                c.id,
                c.first_nonzero().unwrap_or_default()
            )
        })
        .unwrap_or_default();
    ElementError::Equations(first)
}

/// An element of the twisted-product group: λ together with a group-like
/// Φ satisfying the involution, hexagon, and pentagon equations up to the
/// certified degree.
#[derive(Clone, Debug)]
pub struct GrtElement {
    lambda: Rat,
    phi: Series,
    certified_degree: usize,
}

impl GrtElement {
    /// Builds and fully verifies an element; the defining equations are
    /// re-checked up to `degree`.
    pub fn new(lambda: Rat, phi: Series, degree: usize) -> Result<Self, ElementError> {
        check_structure(&lambda, &phi, degree)?;
        let report = verify_grt1(&phi, degree).expect("structure already checked");
        if !report.all_passed() {
            return Err(equations_error(&report));
        }
        Ok(GrtElement {
            lambda,
            phi,
            certified_degree: degree,
        })
    }

    /// The identity element (1, 1), certified to any degree for free.
    pub fn identity(degree: usize) -> Self {
        GrtElement {
            lambda: Rat::one(),
            phi: Series::one(phi_algebra(), degree),
            certified_degree: degree,
        }
    }

    pub(crate) fn from_verified_parts(lambda: Rat, phi: Series, degree: usize) -> Self {
        GrtElement {
            lambda,
            phi,
            certified_degree: degree,
        }
    }

    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }

    pub fn phi(&self) -> &Series {
        &self.phi
    }

    pub fn certified_degree(&self) -> usize {
        self.certified_degree
    }
}

/// A candidate associator: λ together with a group-like Φ satisfying the
/// involution, λ-hexagon, and pentagon equations up to the certified
/// degree.
#[derive(Clone, Debug)]
pub struct AssociatorCandidate {
    lambda: Rat,
    phi: Series,
    certified_degree: usize,
}

impl AssociatorCandidate {
    /// Builds and fully verifies a candidate up to `degree`.
    pub fn new(lambda: Rat, phi: Series, degree: usize) -> Result<Self, ElementError> {
        check_structure(&lambda, &phi, degree)?;
        let report = verify_associator(&lambda, &phi, degree).expect("structure already checked");
        if !report.all_passed() {
            return Err(equations_error(&report));
        }
        Ok(AssociatorCandidate {
            lambda,
            phi,
            certified_degree: degree,
        })
    }

    pub(crate) fn from_verified_parts(lambda: Rat, phi: Series, degree: usize) -> Self {
        AssociatorCandidate {
            lambda,
            phi,
            certified_degree: degree,
        }
    }

    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }

    pub fn phi(&self) -> &Series {
        &self.phi
    }

    pub fn certified_degree(&self) -> usize {
        self.certified_degree
    }
}

impl fmt::Display for GrtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(lambda = {}, phi with {} terms, degree {})",
            self.lambda,
            self.phi.num_terms(),
            self.certified_degree
        )
    }
}

const GRT_HEADER: &str = "grt-element";
const ASSOC_HEADER: &str = "associator";

fn element_text(header: &str, lambda: &Rat, degree: usize, phi: &Series) -> String {
    format!(
        "{header}\nlambda {lambda}\ndegree {degree}\n{}",
        series_to_text(phi)
    )
}

/// Serializes an element; deterministic byte for byte.
pub fn grt_to_text(g: &GrtElement) -> String {
    element_text(GRT_HEADER, &g.lambda, g.certified_degree, &g.phi)
}

/// Serializes an associator candidate; deterministic byte for byte.
pub fn associator_to_text(a: &AssociatorCandidate) -> String {
    element_text(ASSOC_HEADER, &a.lambda, a.certified_degree, &a.phi)
}

fn parse_element_text(text: &str, header: &str) -> Result<(Rat, usize, Series), ElementError> {
    let mut lines = text.lines();
    let fail = |line: usize, msg: &str| ElementError::Format {
        line,
        msg: msg.to_string(),
    };
    if lines.next() != Some(header) {
        return Err(fail(1, &format!("expected `{header}` header")));
    }
    let lambda_line = lines.next().ok_or_else(|| fail(2, "missing lambda line"))?;
    let lambda = lambda_line
        .strip_prefix("lambda ")
        .and_then(|s| Rat::from_str(s.trim()).ok())
        .ok_or_else(|| fail(2, "expected `lambda <rational>`"))?;
    let degree_line = lines.next().ok_or_else(|| fail(3, "missing degree line"))?;
    let degree: usize = degree_line
        .strip_prefix("degree ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| fail(3, "expected `degree <integer>`"))?;
    let rest: String = lines.map(|l| format!("{l}\n")).collect();
    let phi = series_from_text(&rest)?;
    Ok((lambda, degree, phi))
}

/// Reads and fully re-verifies an element file.
pub fn grt_from_text(text: &str) -> Result<GrtElement, ElementError> {
    let (lambda, degree, phi) = parse_element_text(text, GRT_HEADER)?;
    GrtElement::new(lambda, phi, degree)
}

/// Reads and fully re-verifies an associator file.
pub fn associator_from_text(text: &str) -> Result<AssociatorCandidate, ElementError> {
    let (lambda, degree, phi) = parse_element_text(text, ASSOC_HEADER)?;
    AssociatorCandidate::new(lambda, phi, degree)
}

/// A seeded random group-like series over free(x,y): the exponential of a
/// combination of Lyndon bracketings with small rational coefficients in
/// degrees `min_degree..=trunc`. With `min_degree ≥ 2` the logarithm has
/// no linear part, which the centrality-based substitution identities
/// require.
pub fn random_grouplike(seed: u64, trunc: usize, min_degree: usize) -> Series {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = phi_algebra();
    let mut log = Series::zero(p, trunc);
    let by_degree = lyndon_words(&p.generators(), trunc);
    for (i, words) in by_degree.iter().enumerate() {
        if i + 1 < min_degree {
            continue;
        }
        for word in words {
            let numer = rng.gen_range(-3i64..=3);
            if numer == 0 {
                continue;
            }
            let denom = rng.gen_range(1i64..=4);
            log = &log + &lyndon_bracketing(word, p, trunc).scaled(&rat(numer, denom));
        }
    }
    log.exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use freealg::GeneratorId;

    #[test]
    fn identity_element_round_trips_through_text() {
        let g = GrtElement::identity(3);
        let text = grt_to_text(&g);
        assert_eq!(
            text,
            "grt-element\nlambda 1\ndegree 3\nalgebra free(x,y)\ntrunc 3\nterm 1/1\nend\n"
        );
        let back = grt_from_text(&text).unwrap();
        assert_eq!(back.lambda(), g.lambda());
        assert!((back.phi() - g.phi()).is_zero());
        assert_eq!(back.certified_degree(), 3);
    }

    #[test]
    fn structural_validation_rejects_bad_parts() {
        let p = phi_algebra();
        assert!(matches!(
            GrtElement::new(Rat::zero(), Series::one(p, 2), 2),
            Err(ElementError::ZeroLambda)
        ));
        let not_grouplike = &Series::one(p, 2)
            + &Series::generator(p, 2, GeneratorId::letter(0))
                .mul(&Series::generator(p, 2, GeneratorId::letter(1)));
        assert!(matches!(
            GrtElement::new(Rat::one(), not_grouplike, 2),
            Err(ElementError::NotGrouplike)
        ));
        let wrong = Series::one(PresentationId::t(3), 2);
        assert!(matches!(
            GrtElement::new(Rat::one(), wrong, 2),
            Err(ElementError::WrongAlgebra { .. })
        ));
        assert!(matches!(
            GrtElement::new(Rat::one(), Series::one(p, 2), 4),
            Err(ElementError::TruncationTooLow { .. })
        ));
    }

    #[test]
    fn random_grouplike_is_grouplike_with_linear_free_logarithm() {
        for seed in 0..5u64 {
            let s = random_grouplike(seed, 3, 2);
            assert!(s.is_grouplike(), "seed {seed}");
            let log = s.log();
            assert!(log.degree_part(1).is_zero(), "seed {seed}");
        }
        // Seeded: same seed, same series.
        assert!((&random_grouplike(7, 3, 2) - &random_grouplike(7, 3, 2)).is_zero());
        // Different seeds should differ (overwhelmingly).
        assert!(!(&random_grouplike(1, 3, 2) - &random_grouplike(2, 3, 2)).is_zero());
    }

    #[test]
    fn malformed_element_files_are_rejected() {
        assert!(grt_from_text("nonsense").is_err());
        assert!(grt_from_text("grt-element\nlambda x\ndegree 2\n").is_err());
        let missing_series = "grt-element\nlambda 1\ndegree 2\n";
        assert!(grt_from_text(missing_series).is_err());
    }
}
