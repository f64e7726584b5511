use std::fmt;

use crate::crystal::{AffineElement, CrystalGroup};
use crate::error::{Error, Result};
use crate::genred::verify::verify_generates;

/// Diagnostic tag: the predicted set of the cyclic reduction failed
/// verification and a fallback was used.
pub const KER_F_DISCREPANCY: &str = "KER_F_DISCREPANCY";
/// Diagnostic tag: the verified size is above the theorem's bound.
pub const EXCEEDS_THEOREM_BOUND: &str = "EXCEEDS_THEOREM_BOUND";
/// Diagnostic tag: the module rank search ran out of budget.
pub const BUDGET_EXHAUSTED: &str = "BUDGET_EXHAUSTED";
/// Diagnostic tag: some single generator can be dropped.
pub const NON_MINIMAL: &str = "NON_MINIMAL";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Naive,
    TheoremAI,
    TheoremAII,
    TheoremC,
    Greedy,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Naive => "NAIVE",
            Method::TheoremAI => "THEOREM_A_I",
            Method::TheoremAII => "THEOREM_A_II",
            Method::TheoremC => "THEOREM_C",
            Method::Greedy => "GREEDY",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A generating set that has passed [`verify_generates`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSetReport {
    pub generators: Vec<AffineElement>,
    pub size: usize,
    pub method: Method,
    pub verified: bool,
    pub theorem_bound: Option<usize>,
    pub notes: Vec<String>,
}

impl GenSetReport {
    /// Verifies `generators` and wraps them; a set that does not generate is
    /// an internal error, never a report.
    pub fn verified(
        group: &CrystalGroup,
        generators: Vec<AffineElement>,
        method: Method,
        theorem_bound: Option<usize>,
        mut notes: Vec<String>,
    ) -> Result<Self> {
        if !verify_generates(group, &generators)?.generates {
            return Err(Error::InternalContradiction(format!("{method} set failed verification")));
        }
        notes.retain(|n| n != EXCEEDS_THEOREM_BOUND && n != NON_MINIMAL);
        let size = generators.len();
        if theorem_bound.is_some_and(|b| size > b) && method != Method::Naive {
            notes.push(EXCEEDS_THEOREM_BOUND.to_string());
        }
        for i in 0..size {
            let mut rest = generators.clone();
            rest.remove(i);
            if verify_generates(group, &rest)?.generates {
                notes.push(NON_MINIMAL.to_string());
                break;
            }
        }
        Ok(Self { generators, size, method, verified: true, theorem_bound, notes })
    }

    pub fn has_note(&self, tag: &str) -> bool {
        self.notes.iter().any(|n| n == tag)
    }
}
