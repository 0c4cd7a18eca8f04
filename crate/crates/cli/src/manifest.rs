use clap::ArgMatches;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

/// Provenance block embedded in every output file.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunManifest {
    pub command: String,
    /// Every flag of the subcommand with its effective value, defaults
    /// included, keyed by long flag name.
    pub parameters: BTreeMap<String, String>,
    pub started: String,
    pub finished: String,
    pub version: String,
    /// SHA-256 of the canonical JSON of command, parameters and version.
    pub digest: String,
}

const EPOCH: &str = "1970-01-01T00:00:00.000Z";
// Flags that only choose where output goes or how it is stamped.
const NOT_PARAMETERS: [&str; 3] = ["config", "out", "reproducible"];

fn now(reproducible: bool) -> String {
    if reproducible {
        EPOCH.to_string()
    } else {
        chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
    }
}

/// Effective values of the arguments `command` declares; derived group ids
/// are skipped.
pub fn parameters(command: &clap::Command, matches: &ArgMatches) -> BTreeMap<String, String> {
    matches
        .ids()
        .map(|id| id.as_str())
        .filter(|id| !NOT_PARAMETERS.contains(id))
        .filter(|id| command.get_arguments().any(|a| a.get_id() == *id))
        .filter_map(|id| {
            let raw = matches.get_raw(id)?;
            let joined: Vec<String> = raw.map(|v| v.to_string_lossy().into_owned()).collect();
            Some((id.replace('_', "-"), joined.join(",")))
        })
        .collect()
}

pub fn digest(command: &str, parameters: &BTreeMap<String, String>, version: &str) -> String {
    let canonical = serde_json::json!({
        "command": command,
        "parameters": parameters,
        "version": version,
    });
    let bytes = serde_json::to_vec(&canonical).expect("plain strings serialize");
    hex::encode(Sha256::digest(&bytes))
}

impl RunManifest {
    pub fn start(command: &str, parameters: BTreeMap<String, String>, reproducible: bool) -> Self {
        let version = env!("CARGO_PKG_VERSION").to_string();
        let digest = digest(command, &parameters, &version);
        RunManifest {
            command: command.to_string(),
            parameters,
            started: now(reproducible),
            finished: String::new(),
            version,
            digest,
        }
    }

    pub fn finish(&mut self, reproducible: bool) {
        self.finished = now(reproducible);
    }
}
