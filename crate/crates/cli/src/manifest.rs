//! The bundle manifest: one JSON document per assignment describing every
//! rendered diagram with a SHA-256 content hash, so distributed bundles can
//! be verified byte for byte.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BundleManifest {
    pub assignment_id: String,
    pub tool_version: String,
    pub diagrams: Vec<ManifestEntry>,
    /// Diagnostic counts by severity at bundle time.
    pub diagnostics_summary: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ManifestEntry {
    pub id: String,
    pub kind: String,
    pub source_file: String,
    pub svg_file: String,
    /// SHA-256 of the SVG bytes, lowercase hex.
    pub content_hash: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

impl BundleManifest {
    /// Serialize with sorted keys, LF line endings and a trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("manifest serializes");
        let mut text = serde_json::to_string_pretty(&value).expect("manifest serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read `{}`: {e}", path.display()))?;
        BundleManifest::from_json(&text)
            .map_err(|e| format!("malformed manifest `{}`: {e}", path.display()))
    }
}
