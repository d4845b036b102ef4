use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use plates_core::checks::{Outcome, Status};

pub const TOOL_VERSION: &str = concat!("plates ", env!("CARGO_PKG_VERSION"));

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub tool_version: String,
    pub input_digest: String,
    pub entries: Vec<Outcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl Report {
    /// `command` and `inputs` identify the invocation; the digest covers
    /// them together with every entry except its `wallMillis`.
    pub fn new(
        command: &str,
        inputs: &[String],
        entries: Vec<Outcome>,
        data: Option<Value>,
    ) -> Self {
        let stripped: Vec<Value> = entries
            .iter()
            .map(|e| {
                let mut v = serde_json::to_value(e).expect("outcomes serialize");
                if let Some(obj) = v.as_object_mut() {
                    obj.remove("wallMillis");
                }
                v
            })
            .collect();
        let canonical = serde_json::json!({
            "toolVersion": TOOL_VERSION,
            "command": command,
            "inputs": inputs,
            "entries": stripped,
            "data": data,
        });
        let digest = Sha256::digest(canonical.to_string().as_bytes());
        Report {
            tool_version: TOOL_VERSION.into(),
            input_digest: hex::encode(digest),
            entries,
            data,
        }
    }

    pub fn any_failed(&self) -> bool {
        self.entries.iter().any(|e| e.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let tag = match e.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!("{tag} {} ({} ms)", e.name, e.wall_millis));
            if let Some(w) = &e.witness {
                out.push_str(&format!("\n     {w}"));
            }
            out.push('\n');
        }
        if let Some(d) = &self.data {
            out.push_str(&serde_json::to_string_pretty(d).expect("data serializes"));
            out.push('\n');
        }
        let failed = self
            .entries
            .iter()
            .filter(|e| e.status == Status::Fail)
            .count();
        out.push_str(&format!(
            "{} checks, {} failed; {}; digest {}\n",
            self.entries.len(),
            failed,
            self.tool_version,
            self.input_digest
        ));
        out
    }
}
