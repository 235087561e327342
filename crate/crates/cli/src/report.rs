use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// An exact certificate was checked.
    Verified,
    /// A counterexample was found and re-verified.
    Falsified,
    /// Only sampled or randomized checks were run, and all passed.
    SampledPass,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Falsified => "falsified",
            Status::SampledPass => "sampled-pass",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub status: Status,
    pub expected: Status,
    pub matches: bool,
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl VerificationReport {
    /// Canonical JSON: object keys sorted, rationals already rendered as strings.
    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn human(&self) -> String {
        let mut out = format!("{}: {}", self.claim, self.status.as_str());
        if !self.matches {
            out.push_str(&format!(" (expected {})", self.expected.as_str()));
        }
        if let Some(ms) = self.runtime_ms {
            out.push_str(&format!(" [{ms} ms]"));
        }
        if let Value::Object(map) = &self.details {
            for (k, v) in map {
                let shown = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!("\n  {k}: {shown}"));
            }
        }
        out
    }
}
