use std::fmt;

use hedg_core::NodeSet;

/// One failed (or undecided) statement: the independence or factorization
/// claim in human-readable form, plus the measured defect.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub statement: String,
    pub defect: f64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (defect {:.3e})", self.statement, self.defect)
    }
}

/// The outcome of checking one Markov property against one distribution.
///
/// `pass` holds exactly when `violations` is empty.  `inconclusive` lists
/// statements whose numeric evidence certified neither a pass nor a failure
/// (currently only borderline factorization fits); a report can therefore
/// pass while carrying inconclusive entries, and callers who need certainty
/// should treat those separately.  `checked` counts every statement that was
/// evaluated, so vacuously-true reports are recognizable.
#[derive(Debug, Clone, PartialEq)]
pub struct MarkovReport {
    pub property: String,
    pub pass: bool,
    pub violations: Vec<Violation>,
    pub inconclusive: Vec<Violation>,
    pub checked: usize,
}

impl MarkovReport {
    pub(crate) fn from_accum(property: &str, acc: Accum) -> Self {
        MarkovReport {
            property: property.to_owned(),
            pass: acc.violations.is_empty(),
            violations: acc.violations,
            inconclusive: acc.inconclusive,
            checked: acc.checked,
        }
    }

    /// The largest violation defect, or zero when the property passes.
    pub fn max_defect(&self) -> f64 {
        self.violations
            .iter()
            .map(|v| v.defect)
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for MarkovReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({} statements checked",
            self.property,
            if self.pass { "pass" } else { "FAIL" },
            self.checked,
        )?;
        if !self.violations.is_empty() {
            write!(f, ", {} violated", self.violations.len())?;
        }
        if !self.inconclusive.is_empty() {
            write!(f, ", {} inconclusive", self.inconclusive.len())?;
        }
        write!(f, ")")
    }
}

/// Accumulates statements while a checker runs.
#[derive(Debug, Default)]
pub(crate) struct Accum {
    pub(crate) checked: usize,
    pub(crate) violations: Vec<Violation>,
    pub(crate) inconclusive: Vec<Violation>,
}

impl Accum {
    /// Records a conditional-independence statement, measuring its defect
    /// against `tol`.  Statements with an empty second argument are vacuous
    /// and skipped.
    pub(crate) fn require_ci(
        &mut self,
        p: &hedg_dist::FiniteDist,
        x: &NodeSet,
        y: &NodeSet,
        z: &NodeSet,
        context: &str,
        tol: f64,
    ) -> Result<(), hedg_dist::DistError> {
        if x.is_empty() || y.is_empty() {
            return Ok(());
        }
        let defect = p.ci_defect(x, y, z)?;
        self.checked += 1;
        if defect > tol {
            self.violations.push(Violation {
                statement: format!("{}{}", fmt_ci(x, y, z), context),
                defect,
            });
        }
        Ok(())
    }
}

/// Formats a node set as a brace list, with `-` for the empty set, matching
/// the CLI's convention.
pub(crate) fn fmt_set(s: &NodeSet) -> String {
    if s.is_empty() {
        return "-".to_owned();
    }
    let labels: Vec<&str> = s.iter().map(|v| v.as_str()).collect();
    format!("{{{}}}", labels.join(","))
}

pub(crate) fn fmt_ci(x: &NodeSet, y: &NodeSet, z: &NodeSet) -> String {
    format!("{} _||_ {} | {}", fmt_set(x), fmt_set(y), fmt_set(z))
}
