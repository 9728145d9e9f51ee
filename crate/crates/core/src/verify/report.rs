use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::count::CountVector;
use crate::params::CodeParams;

use super::bounds::BoundValues;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportKind {
    DecoderExhaustive,
    CodeValidity,
    BlockDecodable,
    MaxCodeSearch,
    BoundsTable,
    ConstraintAudit,
}

/// Parameters a report was produced for: a full code description, or the
/// bare `(delta, ell, n)` triple used by the code-level checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportParams {
    Code(CodeParams),
    Raw { delta: usize, ell: usize, n: usize },
}

impl fmt::Display for ReportParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Code(p) => write!(f, "{p}"),
            Self::Raw { delta, ell, n } => write!(f, "(delta={delta}, ell={ell}, n={n})"),
        }
    }
}

/// A concrete failure. For decoder checks `got` is the decoder output
/// (absent when the decoder returned an error, which is in `error`). For
/// validity checks the second scenario that collides with the first is in
/// `other_x` / `other_pattern`, and `got` is its count vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub x: BitString,
    pub pattern: String,
    pub y: BitString,
    pub expected: CountVector,
    pub got: Option<CountVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub other_x: Option<BitString>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub other_pattern: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Metric {
    Int(u64),
    Real(f64),
}

impl From<u64> for Metric {
    fn from(v: u64) -> Self {
        Metric::Int(v)
    }
}

impl From<usize> for Metric {
    fn from(v: usize) -> Self {
        Metric::Int(v as u64)
    }
}

impl From<f64> for Metric {
    fn from(v: f64) -> Self {
        Metric::Real(v)
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::Int(v) => write!(f, "{v}"),
            Metric::Real(v) => write!(f, "{v:.6}"),
        }
    }
}

/// Outcome of one verification run. Serializes to the JSON report schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub kind: ReportKind,
    pub params: ReportParams,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub metrics: BTreeMap<String, Metric>,
    /// Witness code of a maximum-code search, in lexicographic order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<BitString>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundValues>,
    /// Human-readable notes, one per violated condition for audits.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<String>,
}

impl VerificationReport {
    pub fn new(kind: ReportKind, params: ReportParams) -> Self {
        Self {
            kind,
            params,
            passed: true,
            counterexample: None,
            metrics: BTreeMap::new(),
            witness: None,
            bounds: None,
            findings: Vec::new(),
        }
    }

    pub fn metric(&mut self, name: &str, value: impl Into<Metric>) {
        self.metrics.insert(name.to_string(), value.into());
    }

    pub fn get_int(&self, name: &str) -> Option<u64> {
        match self.metrics.get(name)? {
            Metric::Int(v) => Some(*v),
            Metric::Real(_) => None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        writeln!(f, "{:?} {}: {verdict}", self.kind, self.params)?;
        for (k, v) in &self.metrics {
            writeln!(f, "  {k} = {v}")?;
        }
        if let Some(c) = &self.counterexample {
            writeln!(f, "  x        = {}", c.x)?;
            writeln!(f, "  pattern  = {}", c.pattern)?;
            writeln!(f, "  y        = {}", c.y)?;
            writeln!(f, "  expected = {}", c.expected)?;
            match (&c.got, &c.error) {
                (Some(g), _) => writeln!(f, "  got      = {g}")?,
                (None, Some(e)) => writeln!(f, "  error    = {e}")?,
                _ => {}
            }
            if let (Some(ox), Some(op)) = (&c.other_x, &c.other_pattern) {
                writeln!(f, "  other x  = {ox}")?;
                writeln!(f, "  other pattern = {op}")?;
            }
        }
        if let Some(w) = &self.witness {
            writeln!(f, "  witness ({}):", w.len())?;
            for x in w {
                writeln!(f, "    {x}")?;
            }
        }
        for note in &self.findings {
            writeln!(f, "  ! {note}")?;
        }
        Ok(())
    }
}
