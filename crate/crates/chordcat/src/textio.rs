//! Deterministic text format for chord morphisms.
//!
//! ```text
//! chordcat-morphism
//! source ((+ +) +)
//! target ((+ +) +)
//! word 3/2
//! CUP 1
//! PERM 2 1 3
//! SLICE
//! algebra ft(3)
//! trunc 2
//! term 1/1 t(1,2)
//! end
//! CAP 1
//! end
//! ```
//!
//! Each `word` line opens a layered word with its rational coefficient;
//! the layer lines follow bottom to top.  A `SLICE` line is followed by
//! an embedded series block, which terminates itself with its own `end`
//! line.  The final bare `end` closes the morphism.

use freealg::{rat, series_from_text, series_to_text, Rat};

use crate::error::ChordError;
use crate::layer::Layer;
use crate::morphism::Morphism;
use crate::object::CObject;

/// Render a morphism in the line-based text format.
pub fn morphism_to_text(m: &Morphism) -> String {
    let mut out = String::new();
    out.push_str("chordcat-morphism\n");
    out.push_str(&format!("source {}\n", m.source()));
    out.push_str(&format!("target {}\n", m.target()));
    for word in m.words() {
        out.push_str(&format!(
            "word {}/{}\n",
            word.coeff.numer(),
            word.coeff.denom()
        ));
        for layer in &word.layers {
            match layer {
                Layer::Cup(i) => out.push_str(&format!("CUP {i}\n")),
                Layer::Cap(i) => out.push_str(&format!("CAP {i}\n")),
                Layer::Perm(sigma) => {
                    let images: Vec<String> = sigma.iter().map(|p| p.to_string()).collect();
                    out.push_str(&format!("PERM {}\n", images.join(" ")));
                }
                Layer::Slice(u) => {
                    out.push_str("SLICE\n");
                    out.push_str(&series_to_text(u));
                }
            }
        }
    }
    out.push_str("end\n");
    out
}

/// Parse a morphism from the text format, validating widths and slice
/// algebras.
pub fn morphism_from_text(text: &str) -> Result<Morphism, ChordError> {
    let mut lines = text.lines();
    let parse_err = |context: String| ChordError::Parse { context };

    match lines.next() {
        Some("chordcat-morphism") => {}
        other => {
            return Err(parse_err(format!(
                "expected `chordcat-morphism` header, found {other:?}"
            )))
        }
    }
    let source: CObject = lines
        .next()
        .and_then(|l| l.strip_prefix("source "))
        .ok_or_else(|| parse_err("expected `source` line".into()))?
        .parse()?;
    let target: CObject = lines
        .next()
        .and_then(|l| l.strip_prefix("target "))
        .ok_or_else(|| parse_err("expected `target` line".into()))?
        .parse()?;

    let mut words: Vec<(Rat, Vec<Layer>)> = Vec::new();
    let mut current: Option<(Rat, Vec<Layer>)> = None;
    loop {
        let line = lines
            .next()
            .ok_or_else(|| parse_err("unterminated morphism (missing `end`)".into()))?;
        if line == "end" {
            if let Some(word) = current.take() {
                words.push(word);
            }
            break;
        }
        if let Some(rest) = line.strip_prefix("word ") {
            if let Some(word) = current.take() {
                words.push(word);
            }
            current = Some((parse_rational(rest)?, Vec::new()));
            continue;
        }
        let word = current
            .as_mut()
            .ok_or_else(|| parse_err(format!("layer line `{line}` before any `word`")))?;
        if let Some(rest) = line.strip_prefix("CUP ") {
            word.1.push(Layer::Cup(parse_position(rest)?));
        } else if let Some(rest) = line.strip_prefix("CAP ") {
            word.1.push(Layer::Cap(parse_position(rest)?));
        } else if let Some(rest) = line.strip_prefix("PERM ") {
            let images = rest
                .split_whitespace()
                .map(parse_position)
                .collect::<Result<Vec<_>, _>>()?;
            word.1.push(Layer::Perm(images));
        } else if line == "SLICE" {
            let mut block = String::new();
            loop {
                let inner = lines.next().ok_or_else(|| {
                    parse_err("unterminated series block in SLICE layer".into())
                })?;
                block.push_str(inner);
                block.push('\n');
                if inner == "end" {
                    break;
                }
            }
            word.1.push(Layer::Slice(series_from_text(&block)?));
        } else {
            return Err(parse_err(format!("unrecognized line `{line}`")));
        }
    }
    Morphism::from_words(source, target, words)
}

fn parse_rational(text: &str) -> Result<Rat, ChordError> {
    let (n, d) = text
        .split_once('/')
        .ok_or_else(|| ChordError::Parse {
            context: format!("expected `numer/denom`, found `{text}`"),
        })?;
    let numer: i64 = n.trim().parse().map_err(|_| ChordError::Parse {
        context: format!("bad numerator `{n}`"),
    })?;
    let denom: i64 = d.trim().parse().map_err(|_| ChordError::Parse {
        context: format!("bad denominator `{d}`"),
    })?;
    if denom == 0 {
        return Err(ChordError::Parse {
            context: "zero denominator".into(),
        });
    }
    Ok(rat(numer, denom))
}

fn parse_position(text: &str) -> Result<usize, ChordError> {
    text.trim().parse().map_err(|_| ChordError::Parse {
        context: format!("bad strand position `{text}`"),
    })
}

#[cfg(test)]
mod tests {
    use freealg::{GeneratorId, PresentationId, Series};

    use super::*;

    fn sample() -> Morphism {
        let slice = Series::generator(PresentationId::ft(3), 2, GeneratorId::t(1, 2)).exp();
        Morphism::from_words(
            CObject::plus(),
            CObject::plus(),
            vec![
                (
                    rat(3, 2),
                    vec![
                        Layer::Cup(1),
                        Layer::Perm(vec![2, 1, 3]),
                        Layer::Slice(slice),
                        Layer::Cap(2),
                    ],
                ),
                (rat(-1, 1), vec![]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn round_trip_is_identity() {
        let m = sample();
        let text = morphism_to_text(&m);
        let back = morphism_from_text(&text).expect("rendered morphism should parse");
        assert_eq!(back, m);
        assert_eq!(morphism_to_text(&back), text);
    }

    #[test]
    fn rendering_is_deterministic() {
        assert_eq!(morphism_to_text(&sample()), morphism_to_text(&sample()));
    }

    #[test]
    fn invalid_documents_are_rejected() {
        assert!(morphism_from_text("not-a-morphism\n").is_err());
        let truncated = "chordcat-morphism\nsource +\ntarget +\nword 1/1\n";
        assert!(morphism_from_text(truncated).is_err());
        let bad_layer = "chordcat-morphism\nsource +\ntarget +\nword 1/1\nTWIST 1\nend\n";
        assert!(morphism_from_text(bad_layer).is_err());
        let bad_width = "chordcat-morphism\nsource +\ntarget +\nword 1/1\nCUP 1\nend\n";
        assert!(morphism_from_text(bad_width).is_err());
    }

    #[test]
    fn parsed_duplicate_words_combine() {
        let text = "chordcat-morphism\nsource +\ntarget +\nword 1/2\nword 1/3\nend\n";
        let back = morphism_from_text(text).unwrap();
        assert_eq!(back.words().len(), 1);
        assert_eq!(back.words()[0].coeff, rat(5, 6));
    }
}
