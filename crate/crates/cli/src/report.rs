//! Structured reports: input echo, result sections, verdict-carrying checks and timing.

use std::fmt;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

/// Where a number in a report comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Computed directly (linear algebra, homology, characters).
    Oracle,
    /// Evaluated from a closed-form expression.
    Formula,
    /// A constant printed in the literature (golden tables, displays).
    PaperConstant,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Oracle => "oracle",
            Provenance::Formula => "formula",
            Provenance::PaperConstant => "paper-constant",
        })
    }
}

/// A value together with its provenance.
#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub value: Value,
    pub provenance: Provenance,
}

impl Claim {
    pub fn new(value: impl Serialize, provenance: Provenance) -> Self {
        Claim { value: serde_json::to_value(value).expect("serializable claim"), provenance }
    }

    pub fn oracle(value: impl Serialize) -> Self {
        Self::new(value, Provenance::Oracle)
    }

    pub fn formula(value: impl Serialize) -> Self {
        Self::new(value, Provenance::Formula)
    }

    pub fn paper(value: impl Serialize) -> Self {
        Self::new(value, Provenance::PaperConstant)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// One comparison of an expected value against an actual one.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Claim,
    pub actual: Claim,
    pub verdict: Verdict,
    /// Free-form context (seeds, counterexamples, diffs).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Set when the expected value is a published statement known to be
    /// misprinted; the verdict is still reported as computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub known_defect: Option<String>,
}

impl Check {
    /// A check that passes exactly when `expected == actual` as JSON values.
    pub fn compare(name: impl Into<String>, expected: Claim, actual: Claim) -> Self {
        let verdict = Verdict::from_bool(expected.value == actual.value);
        Check { name: name.into(), expected, actual, verdict, note: None, known_defect: None }
    }

    /// A boolean property: expected `true`, actual the computed truth value.
    pub fn holds(name: impl Into<String>, ok: bool, provenance: Provenance) -> Self {
        Check {
            name: name.into(),
            expected: Claim::new(true, provenance),
            actual: Claim::oracle(ok),
            verdict: Verdict::from_bool(ok),
            note: None,
            known_defect: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_known_defect(mut self, reason: impl Into<String>) -> Self {
        self.known_defect = Some(reason.into());
        self
    }

    /// Forces a failing verdict when an auxiliary condition does not hold.
    pub fn require(mut self, ok: bool) -> Self {
        if !ok {
            self.verdict = Verdict::Fail;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// A block of results (tables, decompositions, matrices).
#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub title: String,
    pub provenance: Provenance,
    pub data: Value,
    /// Human-readable rendering used in text output.
    #[serde(skip)]
    pub text: String,
}

impl Section {
    pub fn new(title: impl Into<String>, provenance: Provenance, data: impl Serialize, text: impl Into<String>) -> Self {
        Section {
            title: title.into(),
            provenance,
            data: serde_json::to_value(data).expect("serializable section"),
            text: text.into(),
        }
    }
}

/// Whether every requested computation ran to completion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "state", content = "reason", rename_all = "lowercase")]
pub enum Status {
    Complete,
    Partial(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub sections: Vec<Section>,
    pub checks: Vec<Check>,
    pub status: Status,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(command: impl Into<String>, inputs: Value) -> Self {
        Report { command: command.into(), inputs, sections: Vec::new(), checks: Vec::new(), status: Status::Complete, elapsed_ms: 0 }
    }

    pub fn section(&mut self, s: Section) {
        self.sections.push(s);
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn set_elapsed(&mut self, d: Duration) {
        self.elapsed_ms = d.as_millis();
    }

    /// All verdicts pass and nothing was cut short.
    pub fn all_pass(&self) -> bool {
        self.status == Status::Complete && self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        // The exponent-vector echo is for machine consumers; text shows the polynomial once.
        let mut inputs = self.inputs.clone();
        if let Some(p) = inputs.get_mut("poly").and_then(Value::as_object_mut) {
            p.remove("terms");
        }
        let mut out = format!("== psilab {} ==\ninputs: {}\n", self.command, inputs);
        for s in &self.sections {
            out.push_str(&format!("\n-- {} [{}] --\n", s.title, s.provenance));
            if s.text.is_empty() {
                out.push_str(&s.data.to_string());
                out.push('\n');
            } else {
                out.push_str(&s.text);
                if !s.text.ends_with('\n') {
                    out.push('\n');
                }
            }
        }
        if !self.checks.is_empty() {
            out.push_str("\n-- checks --\n");
            for c in &self.checks {
                out.push_str(&format!(
                    "{} {}: expected {} [{}], actual {} [{}]\n",
                    c.verdict, c.name, c.expected.value, c.expected.provenance, c.actual.value, c.actual.provenance
                ));
                if let Some(n) = &c.note {
                    out.push_str(&format!("     note: {n}\n"));
                }
                if let Some(k) = &c.known_defect {
                    out.push_str(&format!("     known defect: {k}\n"));
                }
            }
        }
        if let Status::Partial(reason) = &self.status {
            out.push_str(&format!("\nstatus: partial ({reason})\n"));
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        out.push_str(&format!("\n{passed}/{} checks passed in {} ms\n", self.checks.len(), self.elapsed_ms));
        out
    }
}
