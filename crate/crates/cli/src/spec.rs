//! Curve specifications as read from the command line and batch files.

use serde::{Deserialize, Serialize};

use bourbaki_core::bourbaki::{validate_curve, Curve};
use bourbaki_core::polyring::{parse_polynomial, Field, DEFAULT_PRIME};

use crate::{CliError, Result};

/// `qq`, `fp` (the default prime) or `fp=<p>`.
pub fn parse_field(s: &str) -> Result<Field> {
    match s.trim() {
        "qq" => Ok(Field::Rationals),
        "fp" => Ok(Field::Prime(DEFAULT_PRIME)),
        other => {
            let p = other
                .strip_prefix("fp=")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| {
                    CliError::Input(format!("unknown field '{other}', expected qq or fp=<p>"))
                })?;
            Ok(Field::prime(p)?)
        }
    }
}

pub fn parse_curve(text: &str, field: Field) -> Result<Curve> {
    Ok(validate_curve(&parse_polynomial(text, field)?)?)
}

/// Values a batch line may assert about its curve.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bour: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<u64>,
    /// `free`, `nearly-free` or `other`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
}

/// One line of a batch file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    #[serde(default)]
    pub label: Option<String>,
    pub curve: String,
    #[serde(default)]
    pub field: Option<String>,
    #[serde(default)]
    pub expect: Option<Expectation>,
}

impl CurveSpec {
    pub fn field_or(&self, default: Field) -> Result<Field> {
        self.field.as_deref().map_or(Ok(default), parse_field)
    }

    /// Rejects expectations that cannot hold for any curve.
    pub fn check(&self) -> Result<()> {
        if let Some(c) = self
            .expect
            .as_ref()
            .and_then(|e| e.classification.as_deref())
        {
            if !matches!(c, "free" | "nearly-free" | "other") {
                return Err(CliError::Input(format!("unknown classification '{c}'")));
            }
        }
        Ok(())
    }
}
