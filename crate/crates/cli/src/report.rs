//! The JSON report document: one serialization source of truth, with an
//! aligned text table derived from it. Every rational is rendered as an
//! exact `numerator/denominator` string; timing lives under its own key so
//! the rest of the document is byte-deterministic.

use fthresh_core::finv::{ThresholdEstimate, Verdict};
use fthresh_core::format_rational;
use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;

#[derive(Debug, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Debug, Serialize)]
pub struct ContextOut {
    pub p: u64,
    pub vars: Vec<String>,
    pub quotient: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_pure: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntervalOut {
    pub lower: String,
    pub lower_certified: bool,
    pub upper: String,
    pub upper_certified: bool,
    pub width: String,
}

impl IntervalOut {
    pub fn from_estimate(est: &ThresholdEstimate) -> Self {
        IntervalOut {
            lower: format_rational(&est.lower),
            lower_certified: est.lower_certified,
            upper: format_rational(&est.upper),
            upper_certified: est.upper_certified,
            width: format_rational(&est.width),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OpResult {
    pub op: String,
    pub params: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<IntervalOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certified: Option<bool>,
    pub provenance: String,
}

#[derive(Debug, Serialize)]
pub struct RelationOut {
    pub name: String,
    pub verdict: String,
    pub evidence: String,
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Verified => "verified",
        Verdict::Consistent => "consistent",
        Verdict::Violated => "violated",
        Verdict::Inconclusive => "inconclusive",
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorOut {
    pub code: String,
    pub message: String,
}

#[derive(Debug, Serialize)]
pub struct TimingOut {
    pub total_ms: u128,
}

#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub tool: ToolInfo,
    pub input_digest: String,
    pub context: ContextOut,
    pub results: Vec<OpResult>,
    pub relations: Vec<RelationOut>,
    pub errors: Vec<ErrorOut>,
    pub footnotes: Vec<String>,
    pub timing: TimingOut,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned text rendering derived from the same data as the JSON.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "ring: F_{}[{}]{}\n",
            self.context.p,
            self.context.vars.join(", "),
            if self.context.quotient.is_empty() {
                String::new()
            } else {
                format!(" / ({})", self.context.quotient.join(", "))
            }
        ));
        if let (Some(d), Some(e)) = (self.context.dim, self.context.multiplicity) {
            out.push_str(&format!("dim = {d}, multiplicity = {e}\n"));
        }
        if let Some(fp) = self.context.f_pure {
            out.push_str(&format!("F-pure: {fp}\n"));
        }
        for r in &self.results {
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!("\n[{}] {}\n", r.op, params.join(" ")));
            if let Some(v) = &r.value {
                out.push_str(&format!("  value: {v}\n"));
            }
            if let Some(iv) = &r.interval {
                out.push_str(&format!(
                    "  interval: [{}, {}] width {} (lower {}, upper certified)\n",
                    iv.lower,
                    iv.upper,
                    iv.width,
                    if iv.lower_certified {
                        "certified"
                    } else {
                        "heuristic"
                    }
                ));
            }
            if let Some(rows) = &r.rows {
                for row in rows {
                    out.push_str(&format!("  {row}\n"));
                }
            }
        }
        if !self.relations.is_empty() {
            out.push_str("\nrelations:\n");
            let width = self
                .relations
                .iter()
                .map(|r| r.name.len())
                .max()
                .unwrap_or(0);
            for rel in &self.relations {
                out.push_str(&format!(
                    "  {:width$}  {:12}  {}\n",
                    rel.name, rel.verdict, rel.evidence
                ));
            }
        }
        for f in &self.footnotes {
            out.push_str(&format!("note: {f}\n"));
        }
        for e in &self.errors {
            out.push_str(&format!("error[{}]: {}\n", e.code, e.message));
        }
        out
    }
}

pub fn digest_hex(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    let mut s = String::with_capacity(7 + out.len() * 2);
    s.push_str("sha256:");
    for b in out {
        s.push_str(&format!("{b:02x}"));
    }
    s
}
