//! Equation reports: one record per checked identity, carrying the exact
//! residual normal form.

use freealg::Series;

/// Outcome of checking a single identity: the residual is the normal form
/// of LHS − RHS in the ambient presented algebra, so the identity holds
/// exactly when the residual is zero.
#[derive(Clone, Debug)]
pub struct EquationCheck {
    /// Stable machine-readable identifier, e.g. `grt-pentagon`.
    pub id: String,
    /// The identity itself, written out as its anchor string.
    pub anchor: String,
    /// Maximal degree the check covers.
    pub degree: usize,
    /// True when the identity only holds under hypotheses beyond
    /// group-likeness (the element must satisfy other equations first).
    pub conditional: bool,
    /// Normal form of the defect; zero iff the identity holds.
    pub residual: Series,
}

impl EquationCheck {
    /// True when the residual vanishes identically.
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }

    /// The first (smallest) nonzero residual term, as `coeff word`, if any.
    pub fn first_nonzero(&self) -> Option<String> {
        self.residual.terms().next().map(|(m, c)| format!("{c} {m}"))
    }

    /// One line of the structured report, deterministic byte for byte.
    pub fn to_line(&self) -> String {
        let status = if self.passed() { "ok" } else { "FAIL" };
        let kind = if self.conditional { "conditional" } else { "unconditional" };
        format!(
            "check {} degree={} kind={} status={} residual-terms={} first={} :: {}",
            self.id,
            self.degree,
            kind,
            status,
            self.residual.num_terms(),
            self.first_nonzero().unwrap_or_else(|| "-".to_string()),
            self.anchor,
        )
    }
}

/// A batch of identity checks, in a fixed order.
#[derive(Clone, Debug, Default)]
pub struct EquationReport {
    pub checks: Vec<EquationCheck>,
}

impl EquationReport {
    pub fn new() -> Self {
        EquationReport { checks: Vec::new() }
    }

    pub fn push(&mut self, check: EquationCheck) {
        self.checks.push(check);
    }

    /// True when every residual vanishes.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(EquationCheck::passed)
    }

    /// The failing checks, in report order.
    pub fn failures(&self) -> Vec<&EquationCheck> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    /// Looks up a check by its identifier.
    pub fn check(&self, id: &str) -> Option<&EquationCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// The structured text form: one line per check, in insertion order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&c.to_line());
            out.push('\n');
        }
        out
    }

    /// Merges another report's checks onto the end of this one.
    pub fn extend(&mut self, other: EquationReport) {
        self.checks.extend(other.checks);
    }
}
