use std::fmt;

use serde::Serialize;

use crate::ratlin::{format_rational, Rational};

/// One failed identity, located by basis names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: String,
    pub at: Vec<String>,
    #[serde(serialize_with = "serialize_residual")]
    pub residual: Vec<Rational>,
}

fn serialize_residual<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rational))
}

/// Outcome of a structural check. Valid iff no violations were recorded.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub subject: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidityReport {
            subject: subject.into(),
            checked: 0,
            violations: Vec::new(),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records a check; a nonzero residual becomes a violation.
    pub fn record(&mut self, condition: &str, at: &[&str], residual: Vec<Rational>) {
        self.checked += 1;
        if !crate::ratlin::is_zero_vector(&residual) {
            self.violations.push(Violation {
                condition: condition.to_string(),
                at: at.iter().map(|s| s.to_string()).collect(),
                residual,
            });
        }
    }

    pub fn record_flag(&mut self, condition: &str, at: &[&str], ok: bool) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation {
                condition: condition.to_string(),
                at: at.iter().map(|s| s.to_string()).collect(),
                residual: Vec::new(),
            });
        }
    }

    pub fn merge(&mut self, other: ValidityReport) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }

    pub fn conditions(&self) -> Vec<&str> {
        let mut c: Vec<&str> = self.violations.iter().map(|v| v.condition.as_str()).collect();
        c.dedup();
        c
    }

    pub(crate) fn into_result(self, what: &str) -> crate::Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(crate::Error::Invalid {
                what: what.to_string(),
                summary: self.summary(),
            })
        }
    }

    pub fn summary(&self) -> String {
        match self.violations.first() {
            None => format!("{}: valid ({} checks)", self.subject, self.checked),
            Some(v) => format!(
                "{}: {} violation(s), first: {} at ({})",
                self.subject,
                self.violations.len(),
                v.condition,
                v.at.join(", ")
            ),
        }
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "{}: valid ({} checks)", self.subject, self.checked);
        }
        writeln!(
            f,
            "{}: INVALID ({} of {} checks failed)",
            self.subject,
            self.violations.len(),
            self.checked
        )?;
        for v in &self.violations {
            let r: Vec<String> = v.residual.iter().map(format_rational).collect();
            writeln!(f, "  {} at ({}) residual [{}]", v.condition, v.at.join(", "), r.join(", "))?;
        }
        Ok(())
    }
}
