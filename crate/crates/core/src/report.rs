//! Report records shared by the identity checkers and the verification sweeps.

use std::fmt::Display;

use serde::Serialize;
use serde_json::Value;

/// One evaluated identity: both sides rendered as strings plus the verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub instance: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

impl IdentityCheck {
    pub fn compare<T: PartialEq + Display>(
        identity: impl Into<String>,
        instance: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        IdentityCheck {
            identity: identity.into(),
            instance: instance.into(),
            pass: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn compare_tuples<T: PartialEq + Display>(
        identity: impl Into<String>,
        instance: impl Into<String>,
        lhs: &[T],
        rhs: &[T],
    ) -> Self {
        IdentityCheck {
            identity: identity.into(),
            instance: instance.into(),
            pass: lhs == rhs,
            lhs: join(lhs),
            rhs: join(rhs),
        }
    }
}

/// Comma-joined rendering of a slice.
pub fn join<T: Display>(values: &[T]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Summary of a verification sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: Value,
    pub instances: u64,
    pub failures: Vec<Value>,
    pub elapsed_ms: u64,
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}
