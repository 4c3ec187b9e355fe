use std::fmt;

use crate::error::Result;
use crate::exactlin::Matrix;

/// One failed axiom: both sides of the equation and where they first differ.
#[derive(Clone, Debug)]
pub struct Failure {
    pub axiom: String,
    pub lhs: Option<Matrix>,
    pub rhs: Option<Matrix>,
    pub at: Option<(usize, usize)>,
    pub note: Option<String>,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.axiom)?;
        if let Some((i, j)) = self.at {
            write!(f, " at ({i},{j})")?;
            if let (Some(l), Some(r)) = (&self.lhs, &self.rhs) {
                write!(f, ": lhs {} vs rhs {}", l.get(i, j), r.get(i, j))?;
            }
        }
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

/// Outcome of an axiom checker. Every axiom evaluated is listed in
/// `checked`; `failures` holds the ones that did not hold.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub checked: Vec<String>,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failure(&self, axiom: &str) -> Option<&Failure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }

    pub fn fails(&self, axiom: &str) -> bool {
        self.failure(axiom).is_some()
    }

    /// Records `axiom` as the equation `lhs = rhs`. Errors while building
    /// either side count as a failure of that axiom.
    pub fn expect_equal(&mut self, axiom: &str, lhs: Result<Matrix>, rhs: Result<Matrix>) {
        self.checked.push(axiom.to_string());
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                if l.shape() != r.shape() {
                    self.failures.push(Failure {
                        axiom: axiom.to_string(),
                        note: Some(format!("shapes {:?} vs {:?}", l.shape(), r.shape())),
                        lhs: Some(l),
                        rhs: Some(r),
                        at: None,
                    });
                } else if let Some(at) = l.first_difference(&r) {
                    self.failures.push(Failure {
                        axiom: axiom.to_string(),
                        lhs: Some(l),
                        rhs: Some(r),
                        at: Some(at),
                        note: None,
                    });
                }
            }
            (Err(e), _) | (_, Err(e)) => self.failures.push(Failure {
                axiom: axiom.to_string(),
                lhs: None,
                rhs: None,
                at: None,
                note: Some(e.to_string()),
            }),
        }
    }

    /// Records a boolean condition.
    pub fn expect(&mut self, axiom: &str, holds: bool, note: impl FnOnce() -> String) {
        self.checked.push(axiom.to_string());
        if !holds {
            self.failures.push(Failure {
                axiom: axiom.to_string(),
                lhs: None,
                rhs: None,
                at: None,
                note: Some(note()),
            });
        }
    }

    /// Appends another report, prefixing its axiom names.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        let name = |a: &str| {
            if prefix.is_empty() {
                a.to_string()
            } else {
                format!("{prefix}: {a}")
            }
        };
        self.checked.extend(other.checked.iter().map(|a| name(a)));
        self.failures
            .extend(other.failures.into_iter().map(|mut f| {
                f.axiom = name(&f.axiom);
                f
            }));
    }

    /// Each checked axiom with its failure, if any, in evaluation order.
    pub fn results(&self) -> impl Iterator<Item = (&str, Option<&Failure>)> {
        self.checked
            .iter()
            .map(move |a| (a.as_str(), self.failure(a)))
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (axiom, failure) in self.results() {
            match failure {
                None => writeln!(f, "{axiom}: PASS")?,
                Some(fl) => writeln!(f, "FAIL {fl}")?,
            }
        }
        Ok(())
    }
}
