use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::verdict::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub verdict: &'static str,
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl CheckRecord {
    pub fn pass(&self) -> bool {
        self.verdict == "pass"
    }
}

impl From<Verdict> for CheckRecord {
    fn from(v: Verdict) -> Self {
        CheckRecord {
            name: v.name,
            verdict: if v.pass { "pass" } else { "fail" },
            witness: v.witness,
            detail: v.detail,
            provenance: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Truncation {
    pub degree: usize,
    pub slack: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: String,
    pub command: String,
    pub input_digest: String,
    pub checks: Vec<CheckRecord>,
    pub truncation: Truncation,
    pub q: Option<String>,
    pub notes: Vec<String>,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(command: &str, input: &[u8], truncation: Truncation, q: Option<String>) -> Self {
        Report {
            tool: format!("hgx {}", env!("CARGO_PKG_VERSION")),
            command: command.into(),
            input_digest: hex(&Sha256::digest(input)),
            checks: Vec::new(),
            truncation,
            q,
            notes: Vec::new(),
            timing_ms: 0,
        }
    }

    pub fn push(&mut self, v: Verdict) {
        self.checks.push(v.into());
    }

    pub fn extend(&mut self, vs: impl IntoIterator<Item = Verdict>) {
        self.checks.extend(vs.into_iter().map(CheckRecord::from));
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(CheckRecord::pass)
    }

    /// Sorts checks by name; stable for equal names.
    pub fn finish(&mut self, timing_ms: u64) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self.timing_ms = timing_ms;
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn text(&self, color: bool) -> String {
        let paint = |s: &str, code: &str| if color { format!("\x1b[{code}m{s}\x1b[0m") } else { s.to_string() };
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} {}  degree {} slack {}{}",
            self.tool,
            self.command,
            self.truncation.degree,
            self.truncation.slack,
            self.q.as_ref().map(|q| format!("  q = {q}")).unwrap_or_default()
        );
        for c in &self.checks {
            let tag = if c.pass() { paint("PASS", "32") } else { paint("FAIL", "31") };
            let _ = write!(out, "{tag} {}", c.name);
            if let Some(w) = &c.witness {
                let _ = write!(out, ": {w}");
            }
            if let Some(d) = &c.detail {
                let _ = write!(out, " ({d})");
            }
            let _ = writeln!(out);
        }
        for n in &self.notes {
            let _ = writeln!(out, "  {n}");
        }
        let failed = self.checks.iter().filter(|c| !c.pass()).count();
        let summary = format!("{} checks, {} failed", self.checks.len(), failed);
        let _ = writeln!(out, "{}", if failed == 0 { paint(&summary, "32") } else { paint(&summary, "31") });
        out
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// `HGX_COLOR` set to `1`, `true`, `always` or `yes` turns ANSI colour on.
pub fn color_from_env() -> bool {
    std::env::var("HGX_COLOR")
        .map(|v| matches!(v.to_ascii_lowercase().as_str(), "1" | "true" | "always" | "yes"))
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("check", b"abc", Truncation { degree: 4, slack: 2 }, None);
        r.push(Verdict::fail("b", "x (x) y"));
        r.push(Verdict::pass("a"));
        r.finish(17);
        r
    }

    #[test]
    fn json_has_required_shape() {
        let v: serde_json::Value = serde_json::from_str(&sample().json()).unwrap();
        assert_eq!(v["checks"][0]["name"], "a");
        assert_eq!(v["checks"][0]["verdict"], "pass");
        assert!(v["checks"][0]["witness"].is_null());
        assert_eq!(v["checks"][1]["witness"], "x (x) y");
        assert_eq!(v["truncation"]["degree"], 4);
        assert_eq!(v["truncation"]["slack"], 2);
        assert_eq!(v["input_digest"], "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    #[test]
    fn text_colour_is_optional() {
        let r = sample();
        assert!(!r.text(false).contains('\x1b'));
        assert!(r.text(true).contains("\x1b[31mFAIL"));
        assert!(r.text(false).contains("2 checks, 1 failed"));
    }
}
