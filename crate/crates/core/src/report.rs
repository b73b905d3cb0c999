//! Command reports. The JSON form is authoritative; the text form is rendered
//! from it.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Error;
use crate::linalg::Subspace;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    /// The command ran and every check it performs passed.
    Ok,
    /// A mathematical check failed.
    CheckFailed,
    /// Usage, parse or input error.
    Error,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::CheckFailed => 1,
            Outcome::Error => 2,
        }
    }

    pub fn worst(self, o: Outcome) -> Outcome {
        if o.exit_code() > self.exit_code() {
            o
        } else {
            self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub outcome: Outcome,
    pub summary: String,
    pub table: Vec<Row>,
    pub data: Value,
}

impl Report {
    pub fn new(command: &str, outcome: Outcome, summary: impl Into<String>) -> Self {
        Report { command: command.into(), outcome, summary: summary.into(), table: Vec::new(), data: json!({}) }
    }

    pub fn row(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.table.push(Row { key: key.into(), value: value.to_string() });
        self
    }

    pub fn data(mut self, data: Value) -> Self {
        self.data = data;
        self
    }

    /// Report for a failed command. Mathematical failures exit 1, everything
    /// else exits 2.
    pub fn from_error(command: &str, e: &Error) -> Self {
        let outcome = match e {
            Error::IdentityFailure(_) | Error::NotIdempotent(_) | Error::Nilalgebra | Error::Inconsistent(_) => {
                Outcome::CheckFailed
            }
            _ => Outcome::Error,
        };
        let mut data = json!({ "error": e.to_string() });
        if let Error::Parse { line, column, .. } = e {
            data["line"] = json!(line);
            data["column"] = json!(column);
        }
        Report::new(command, outcome, format!("error: {e}")).data(data)
    }

    pub fn exit_code(&self) -> i32 {
        self.outcome.exit_code()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Summary line followed by the table with keys padded to a common width.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.summary);
        let w = self.table.iter().map(|r| r.key.chars().count()).max().unwrap_or(0);
        for r in &self.table {
            out += &format!("  {:<w$}  {}\n", r.key, r.value);
        }
        out
    }
}

pub fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn vector_text(v: &[Scalar]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

pub fn subspace_json(s: &Subspace) -> Value {
    json!({ "dim": s.dim(), "basis": s.basis().iter().map(|b| vector_json(b)).collect::<Vec<_>>() })
}

/// `span{…}` with basis vectors written in terms of `e_k` (1-based).
pub fn subspace_text(s: &Subspace) -> String {
    if s.is_zero() {
        return "{0}".into();
    }
    let parts: Vec<String> = s.basis().iter().map(|b| combination_text(b)).collect();
    format!("span{{{}}}", parts.join(", "))
}

/// `e1 - 1/2 e3` style rendering.
pub fn combination_text(v: &[Scalar]) -> String {
    use num_traits::{One, Zero};
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let name = format!("e{}", k + 1);
        let (neg, mag) = if c.is_real() && c.re() < &num_rational::BigRational::zero() {
            (true, -c.clone())
        } else {
            (false, c.clone())
        };
        let coeff = if mag.is_one() {
            String::new()
        } else if mag.is_real() {
            format!("{mag} ")
        } else {
            format!("({mag}) ")
        };
        if out.is_empty() {
            out += if neg { "-" } else { "" };
        } else {
            out += if neg { " - " } else { " + " };
        }
        out += &format!("{coeff}{name}");
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}
