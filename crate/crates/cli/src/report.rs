//! Run reports: what was asked, what was read, what came out, and which
//! checks passed.

use serde::Serialize;
use sha2::{Digest, Sha256};
use tvk_scalars::Cyclotomic;

use crate::closed_form::closed_form;

#[derive(Clone, Debug, Serialize)]
pub struct Input {
    pub role: String,
    pub source: String,
    pub sha256: String,
}

impl Input {
    pub fn new(role: &str, source: &str, text: &str) -> Self {
        Input { role: role.into(), source: source.into(), sha256: format!("{:x}", Sha256::digest(text.as_bytes())) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Scalar {
    pub name: String,
    /// Canonical serialization; parses back to the same value.
    pub exact: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<String>,
    pub approx: String,
}

impl Scalar {
    pub fn new(name: &str, x: &Cyclotomic, digits: u32) -> Self {
        Scalar {
            name: name.into(),
            exact: x.to_string(),
            closed_form: closed_form(x),
            approx: x.approx(digits).to_decimal(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Metadata {
    pub version: &'static str,
    pub threads: usize,
    pub digits: u32,
    pub elapsed_ms: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<Input>,
    pub results: Vec<Scalar>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub status: Status,
    pub metadata: Metadata,
}

impl RunReport {
    pub fn new(command: Vec<String>, threads: usize, digits: u32) -> Self {
        RunReport {
            command,
            inputs: Vec::new(),
            results: Vec::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            error: None,
            status: Status::Pass,
            metadata: Metadata { version: env!("CARGO_PKG_VERSION"), threads, digits, elapsed_ms: 0 },
        }
    }

    pub fn scalar(&mut self, name: &str, x: &Cyclotomic) {
        let s = Scalar::new(name, x, self.metadata.digits);
        self.results.push(s);
    }

    pub fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    pub fn finish(&mut self) {
        if self.error.is_some() {
            self.status = Status::Error;
        } else if self.checks.iter().any(|c| !c.pass) {
            self.status = Status::Fail;
        } else {
            self.status = Status::Pass;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("tvk {}\n", self.command.join(" "));
        for i in &self.inputs {
            s += &format!("  input {:<13} {}  sha256:{}\n", i.role, i.source, &i.sha256[..16]);
        }
        for r in &self.results {
            match &r.closed_form {
                Some(cf) => s += &format!("  {} = {}\n", r.name, cf),
                None => s += &format!("  {} = {}\n", r.name, r.exact),
            }
            s += &format!("      exact  {}\n      approx {}\n", r.exact, r.approx);
        }
        for c in &self.checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                s += &format!("  [{mark}] {}\n", c.name);
            } else {
                s += &format!("  [{mark}] {}: {}\n", c.name, c.detail);
            }
        }
        for n in &self.notes {
            s += &format!("  note: {n}\n");
        }
        if let Some(e) = &self.error {
            s += &format!("  error: {e}\n");
        }
        s += &format!("  status {:?} in {} ms\n", self.status, self.metadata.elapsed_ms).to_lowercase();
        s
    }
}
