//! Plain-text series format with a bit-exact round trip.
//!
//! ```text
//! algebra ft(3)
//! trunc 4
//! term 1/1
//! term -1/24 t(1,2) t(2,3)
//! end
//! ```
//!
//! Terms are emitted in degree-lexicographic word order with canonical
//! rationals (positive denominator, lowest terms), so writing is a pure
//! function of the series value and `read ∘ write` is the identity byte
//! for byte.

use std::str::FromStr;

use num::{BigInt, Zero};
use thiserror::Error;

use crate::{GeneratorId, Monomial, PresentationId, Rat, Series};

/// Errors from [`series_from_text`].
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TextError {
    #[error("line {line}: expected `{expected}`")]
    Expected { line: usize, expected: &'static str },
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: unknown generator token `{token}` for algebra {algebra}")]
    UnknownGenerator {
        line: usize,
        token: String,
        algebra: String,
    },
    #[error("line {line}: word of degree {degree} exceeds truncation {trunc}")]
    DegreeOverflow {
        line: usize,
        degree: usize,
        trunc: usize,
    },
    #[error("line {line}: duplicate word")]
    DuplicateWord { line: usize },
    #[error("line {line}: zero coefficient is not canonical")]
    ZeroCoefficient { line: usize },
    #[error("missing `end` line")]
    MissingEnd,
    #[error("line {line}: content after `end`")]
    TrailingContent { line: usize },
}

/// Serializes a series into the plain-text format. Deterministic: equal
/// series produce identical bytes.
pub fn series_to_text(series: &Series) -> String {
    let mut out = String::new();
    out.push_str(&format!("algebra {}\n", series.algebra().descriptor()));
    out.push_str(&format!("trunc {}\n", series.trunc()));
    for (m, c) in series.terms() {
        out.push_str(&format!("term {}/{}", c.numer(), c.denom()));
        for g in m.letters() {
            out.push(' ');
            out.push_str(&g.token());
        }
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

/// Parses the plain-text format back into a series.
///
/// Accepts terms in any order but rejects duplicate words, zero
/// coefficients, out-of-alphabet tokens and words beyond the truncation,
/// so that every accepted document denotes exactly one series.
pub fn series_from_text(text: &str) -> Result<Series, TextError> {
    let mut lines = text.lines().enumerate();

    let (n0, header) = lines
        .next()
        .ok_or(TextError::Expected { line: 1, expected: "algebra <descriptor>" })?;
    let algebra = header
        .strip_prefix("algebra ")
        .ok_or(TextError::Expected { line: n0 + 1, expected: "algebra <descriptor>" })
        .and_then(|d| {
            PresentationId::parse_descriptor(d.trim()).map_err(|e| TextError::Malformed {
                line: n0 + 1,
                msg: e.to_string(),
            })
        })?;

    let (n1, tline) = lines
        .next()
        .ok_or(TextError::Expected { line: 2, expected: "trunc <degree>" })?;
    let trunc: usize = tline
        .strip_prefix("trunc ")
        .ok_or(TextError::Expected { line: n1 + 1, expected: "trunc <degree>" })
        .and_then(|d| {
            d.trim().parse().map_err(|_| TextError::Malformed {
                line: n1 + 1,
                msg: format!("bad truncation `{}`", d.trim()),
            })
        })?;

    let mut series = Series::zero(algebra, trunc);
    let mut saw_end = false;
    for (idx, line) in lines {
        let lineno = idx + 1;
        if saw_end {
            if !line.trim().is_empty() {
                return Err(TextError::TrailingContent { line: lineno });
            }
            continue;
        }
        if line == "end" {
            saw_end = true;
            continue;
        }
        let body = line
            .strip_prefix("term ")
            .ok_or(TextError::Expected { line: lineno, expected: "term <num>/<den> [tokens…]" })?;
        let mut fields = body.split(' ').filter(|f| !f.is_empty());
        let coeff_field = fields.next().ok_or(TextError::Malformed {
            line: lineno,
            msg: "missing coefficient".into(),
        })?;
        let (num, den) = coeff_field.split_once('/').ok_or(TextError::Malformed {
            line: lineno,
            msg: format!("coefficient `{coeff_field}` is not num/den"),
        })?;
        let parse_int = |s: &str| {
            BigInt::from_str(s).map_err(|_| TextError::Malformed {
                line: lineno,
                msg: format!("bad integer `{s}`"),
            })
        };
        let num = parse_int(num)?;
        let den = parse_int(den)?;
        if den.is_zero() {
            return Err(TextError::Malformed {
                line: lineno,
                msg: "zero denominator".into(),
            });
        }
        let coeff = Rat::new(num, den);
        if coeff.is_zero() {
            return Err(TextError::ZeroCoefficient { line: lineno });
        }

        let mut letters = Vec::new();
        for tok in fields {
            let g = GeneratorId::parse_token(tok).map_err(|e| TextError::Malformed {
                line: lineno,
                msg: e.to_string(),
            })?;
            if !algebra.contains(g) {
                return Err(TextError::UnknownGenerator {
                    line: lineno,
                    token: tok.to_string(),
                    algebra: algebra.descriptor(),
                });
            }
            letters.push(g);
        }
        let word = Monomial::from_letters(letters);
        if word.degree() > trunc {
            return Err(TextError::DegreeOverflow {
                line: lineno,
                degree: word.degree(),
                trunc,
            });
        }
        if !series.coeff(&word).is_zero() {
            return Err(TextError::DuplicateWord { line: lineno });
        }
        series.add_term(word, coeff);
    }
    if !saw_end {
        return Err(TextError::MissingEnd);
    }
    Ok(series)
}
