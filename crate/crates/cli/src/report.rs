use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        })
    }
}

/// One verified identity. `status` is `PASS` exactly when `lhs == rhs`,
/// unless the check carries its own boolean verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    /// What the identity is about, for a human auditor.
    pub anchor: String,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckReport {
    pub fn new(check_name: &str, anchor: &str) -> Self {
        CheckReport {
            check_name: check_name.into(),
            parameters: BTreeMap::new(),
            status: Status::Error,
            lhs: String::new(),
            rhs: String::new(),
            anchor: anchor.into(),
            notes: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.into(), value.to_string());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Sets both sides and derives the status from their equality.
    pub fn compare(mut self, lhs: impl ToString, rhs: impl ToString) -> Self {
        self.lhs = lhs.to_string();
        self.rhs = rhs.to_string();
        self.status = if self.lhs == self.rhs {
            Status::Pass
        } else {
            Status::Fail
        };
        self
    }

    /// Sets both sides and an independent verdict.
    pub fn verdict(mut self, lhs: impl ToString, rhs: impl ToString, pass: bool) -> Self {
        self.lhs = lhs.to_string();
        self.rhs = rhs.to_string();
        self.status = if pass { Status::Pass } else { Status::Fail };
        self
    }

    pub fn error(mut self, message: impl Into<String>) -> Self {
        self.status = Status::Error;
        self.notes.push(message.into());
        self
    }
}

fn natural_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        _ => a.cmp(b),
    }
}

fn params_cmp(a: &BTreeMap<String, String>, b: &BTreeMap<String, String>) -> Ordering {
    let mut ia = a.iter();
    let mut ib = b.iter();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some((ka, va)), Some((kb, vb))) => {
                let o = ka.cmp(kb).then_with(|| natural_cmp(va, vb));
                if o != Ordering::Equal {
                    return o;
                }
            }
        }
    }
}

/// Orders rows by `(check_name, parameters)`, numeric parameter values
/// compared as numbers. Stable, so equal keys keep emission order.
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|a, b| {
        a.check_name
            .cmp(&b.check_name)
            .then_with(|| params_cmp(&a.parameters, &b.parameters))
    });
}

/// Exit code contract: 0 if every row passes, 1 otherwise.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().all(|r| r.status == Status::Pass) {
        0
    } else {
        1
    }
}

/// Pretty JSON array with lexicographically sorted object keys.
pub fn to_json(reports: &[CheckReport]) -> String {
    // serde_json::Map is ordered by key unless `preserve_order` is enabled.
    let value = serde_json::to_value(reports).expect("reports serialize");
    serde_json::to_string_pretty(&value).expect("value serializes")
}

pub fn to_table(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let params: Vec<String> = r
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(
            out,
            "{:<5}  {:<32} {:<36} lhs={}  rhs={}",
            r.status,
            r.check_name,
            params.join(" "),
            r.lhs,
            r.rhs
        );
        if let Some(ms) = r.elapsed_ms {
            let _ = writeln!(out, "       elapsed {ms} ms");
        }
        for n in &r.notes {
            let _ = writeln!(out, "       note: {n}");
        }
    }
    let pass = reports.iter().filter(|r| r.status == Status::Pass).count();
    let _ = writeln!(out, "{pass}/{} checks passed", reports.len());
    out
}
