//! Generator identifiers and algebra presentations.

use std::fmt;

use thiserror::Error;

/// A degree-1 generator of one of the workspace algebras.
///
/// The derived order (chord generators first, then sphere-braid
/// generators, then free letters; index pairs lexicographically inside
/// each family) is the letter order underlying the degree-lexicographic
/// monomial order, so it must never change.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GeneratorId {
    /// Symmetric chord generator t_{i,j} = t_{j,i}, stored with i ≤ j.
    /// The diagonal t_{i,i} is the framing generator of strand i.
    T(u8, u8),
    /// Symmetric sphere generator X_{i,j} = X_{j,i}, stored with i ≤ j.
    X(u8, u8),
    /// Letter of a free algebra, displayed as x, y, z, w, u, v.
    Letter(u8),
}

const LETTER_NAMES: [&str; 6] = ["x", "y", "z", "w", "u", "v"];

impl GeneratorId {
    /// Chord generator t_{i,j}, normalizing the index order.
    pub fn t(i: u8, j: u8) -> Self {
        GeneratorId::T(i.min(j), i.max(j))
    }

    /// Sphere generator X_{i,j}, normalizing the index order.
    pub fn x(i: u8, j: u8) -> Self {
        GeneratorId::X(i.min(j), i.max(j))
    }

    /// Free letter number `k` (0-based; at most 6 letters are supported).
    pub fn letter(k: u8) -> Self {
        assert!((k as usize) < LETTER_NAMES.len(), "at most 6 free letters");
        GeneratorId::Letter(k)
    }

    /// Token used in the plain-text series format.
    pub fn token(&self) -> String {
        match self {
            GeneratorId::T(i, j) => format!("t({i},{j})"),
            GeneratorId::X(i, j) => format!("X({i},{j})"),
            GeneratorId::Letter(k) => LETTER_NAMES[*k as usize].to_string(),
        }
    }

    /// Parses a generator token as written by [`GeneratorId::token`].
    pub fn parse_token(tok: &str) -> Result<Self, BadDescriptor> {
        let bad = || BadDescriptor(format!("bad generator token `{tok}`"));
        if let Some(k) = LETTER_NAMES.iter().position(|n| *n == tok) {
            return Ok(GeneratorId::Letter(k as u8));
        }
        let (family, rest) = tok.split_at(1);
        let inner = rest
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (i, j) = inner.split_once(',').ok_or_else(bad)?;
        let i: u8 = i.trim().parse().map_err(|_| bad())?;
        let j: u8 = j.trim().parse().map_err(|_| bad())?;
        match family {
            "t" => Ok(GeneratorId::t(i, j)),
            "X" => Ok(GeneratorId::x(i, j)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// Malformed presentation descriptor or generator token.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("{0}")]
pub struct BadDescriptor(pub String);

/// Identifies the algebra a series lives in.
///
/// The identifier fixes the generator alphabet and (for the quotient
/// presentations) the relation ideal imposed downstream; series arithmetic
/// itself is always free. Descriptor strings: `t(n)`, `ft(n)`, `sph(n)`,
/// `fB(n)`, `free(x,y)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PresentationId {
    /// Free associative algebra on `letters` letters.
    Free { letters: u8 },
    /// Chord algebra on strands 1..=n; `framed` adds the central
    /// diagonal generators t_{i,i}.
    DrinfeldKohno { strands: u8, framed: bool },
    /// Framed spherical chord algebra on strands 0..=n (one more strand
    /// than the planar algebra it lifts).
    SphericalDK { strands: u8 },
    /// Sphere-braid chord algebra on strands 1..=n with residue relations.
    SphereBraid { strands: u8 },
}

impl PresentationId {
    pub fn free(letters: u8) -> Self {
        PresentationId::Free { letters }
    }

    /// Unframed chord algebra t(n).
    pub fn t(n: u8) -> Self {
        PresentationId::DrinfeldKohno {
            strands: n,
            framed: false,
        }
    }

    /// Framed chord algebra ft(n).
    pub fn ft(n: u8) -> Self {
        PresentationId::DrinfeldKohno {
            strands: n,
            framed: true,
        }
    }

    /// Framed spherical chord algebra sph(n), on indices 0..=n.
    pub fn sph(n: u8) -> Self {
        PresentationId::SphericalDK { strands: n }
    }

    /// Sphere-braid chord algebra fB(n).
    pub fn fb(n: u8) -> Self {
        PresentationId::SphereBraid { strands: n }
    }

    /// The full generator alphabet, in the canonical generator order.
    pub fn generators(&self) -> Vec<GeneratorId> {
        match *self {
            PresentationId::Free { letters } => {
                (0..letters).map(GeneratorId::letter).collect()
            }
            PresentationId::DrinfeldKohno { strands, framed } => {
                let mut out = Vec::new();
                for i in 1..=strands {
                    for j in i..=strands {
                        if i == j && !framed {
                            continue;
                        }
                        out.push(GeneratorId::T(i, j));
                    }
                }
                out
            }
            PresentationId::SphericalDK { strands } => {
                let mut out = Vec::new();
                for i in 0..=strands {
                    for j in i..=strands {
                        out.push(GeneratorId::T(i, j));
                    }
                }
                out
            }
            PresentationId::SphereBraid { strands } => {
                let mut out = Vec::new();
                for i in 1..=strands {
                    for j in i..=strands {
                        out.push(GeneratorId::X(i, j));
                    }
                }
                out
            }
        }
    }

    /// True when `g` belongs to this presentation's alphabet.
    pub fn contains(&self, g: GeneratorId) -> bool {
        match (*self, g) {
            (PresentationId::Free { letters }, GeneratorId::Letter(k)) => k < letters,
            (PresentationId::DrinfeldKohno { strands, framed }, GeneratorId::T(i, j)) => {
                1 <= i && i <= j && j <= strands && (framed || i < j)
            }
            (PresentationId::SphericalDK { strands }, GeneratorId::T(i, j)) => {
                i <= j && j <= strands
            }
            (PresentationId::SphereBraid { strands }, GeneratorId::X(i, j)) => {
                1 <= i && i <= j && j <= strands
            }
            _ => false,
        }
    }

    /// Descriptor string, e.g. `ft(4)` or `free(x,y)`.
    pub fn descriptor(&self) -> String {
        match *self {
            PresentationId::Free { letters } => {
                let names: Vec<&str> = (0..letters)
                    .map(|k| LETTER_NAMES[k as usize])
                    .collect();
                format!("free({})", names.join(","))
            }
            PresentationId::DrinfeldKohno { strands, framed } => {
                if framed {
                    format!("ft({strands})")
                } else {
                    format!("t({strands})")
                }
            }
            PresentationId::SphericalDK { strands } => format!("sph({strands})"),
            PresentationId::SphereBraid { strands } => format!("fB({strands})"),
        }
    }

    /// Parses a descriptor string as written by [`PresentationId::descriptor`].
    pub fn parse_descriptor(s: &str) -> Result<Self, BadDescriptor> {
        let bad = || BadDescriptor(format!("bad algebra descriptor `{s}`"));
        let open = s.find('(').ok_or_else(bad)?;
        let (head, rest) = s.split_at(open);
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        match head {
            "free" => {
                let names: Vec<&str> = inner.split(',').map(str::trim).collect();
                for (k, name) in names.iter().enumerate() {
                    if LETTER_NAMES.get(k) != Some(name) {
                        return Err(bad());
                    }
                }
                Ok(PresentationId::free(names.len() as u8))
            }
            "t" | "ft" | "sph" | "fB" => {
                let n: u8 = inner.trim().parse().map_err(|_| bad())?;
                Ok(match head {
                    "t" => PresentationId::t(n),
                    "ft" => PresentationId::ft(n),
                    "sph" => PresentationId::sph(n),
                    _ => PresentationId::fb(n),
                })
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for PresentationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.descriptor())
    }
}
