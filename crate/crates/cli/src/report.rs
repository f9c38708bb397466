use std::time::Duration;

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

/// Output of one command. Text and JSON renderings carry the same verdict
/// and message lines; JSON adds structured detail.
#[derive(Serialize)]
pub struct Report {
    pub command: &'static str,
    pub input_sha256: String,
    pub verdict: Option<bool>,
    pub messages: Vec<String>,
    #[serde(skip_serializing_if = "Map::is_empty")]
    pub details: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

pub fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    hex::encode(h.finalize())
}

impl Report {
    pub fn new(command: &'static str, input_sha256: String) -> Self {
        Report {
            command,
            input_sha256,
            verdict: None,
            messages: Vec::new(),
            details: Map::new(),
            elapsed_ms: None,
        }
    }

    pub fn say(&mut self, line: impl Into<String>) {
        self.messages.push(line.into());
    }

    pub fn detail(&mut self, key: &str, value: Value) {
        self.details.insert(key.to_string(), value);
    }

    pub fn set_elapsed(&mut self, d: Duration) {
        self.elapsed_ms = Some(d.as_millis());
    }

    pub fn text(&self) -> String {
        let mut out = format!("command: {}\ninput sha256: {}\n", self.command, self.input_sha256);
        for m in &self.messages {
            out.push_str(m);
            out.push('\n');
        }
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed: {ms} ms\n"));
        }
        out
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Some(false) => 1,
            _ => 0,
        }
    }
}
