use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// One machine-readable result per invocation.
#[derive(Debug, Serialize)]
pub struct RunRecord {
    pub command: String,
    pub input_digest: String,
    pub parameters: Value,
    pub verdict: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// Present only with `--timing`, so plain runs stay byte-identical.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

/// Hex SHA-256 of a canonical serialization.
pub fn digest(canonical: &str) -> String {
    hex::encode(Sha256::digest(canonical.as_bytes()))
}
