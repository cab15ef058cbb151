use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::io;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

/// One verdict produced by a library operation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub property: String,
    pub module: String,
    pub operation: String,
    pub verdict: serde_json::Value,
    pub parameters: serde_json::Value,
    pub tolerance: Option<f64>,
}

/// Set of claims about one subject, identified by the SHA-256 of its
/// canonical JSON bytes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub subject: String,
    pub claims: Vec<Claim>,
    pub tool_version: String,
    /// Seconds since the Unix epoch; omitted with `--no-timestamp`.
    pub timestamp: Option<u64>,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Certificate {
    pub fn new(subject: &[u8], claims: Vec<Claim>, timestamp: bool) -> Self {
        Certificate {
            subject: format!("sha256:{}", digest(subject)),
            claims,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: timestamp
                .then(|| SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)),
        }
    }
}

/// Writes `<digest>.subject.json` and `<digest>.<command>.cert.json` under
/// `dir` and returns the certificate path.
pub fn persist(dir: &Path, command: &str, subject: &[u8], cert: &Certificate) -> io::Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let key = digest(subject);
    std::fs::write(dir.join(format!("{key}.subject.json")), subject)?;
    let path = dir.join(format!("{key}.{command}.cert.json"));
    let mut text = serde_json::to_string_pretty(cert).map_err(io::Error::other)?;
    text.push('\n');
    std::fs::write(&path, text)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_sha256_hex() {
        assert_eq!(digest(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    #[test]
    fn timestamp_is_optional() {
        let c = Certificate::new(b"{}", Vec::new(), false);
        assert_eq!(c.timestamp, None);
        assert!(c.subject.starts_with("sha256:"));
    }
}
