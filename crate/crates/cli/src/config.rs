//! Folding a key=value file (or the manifest of an earlier JSON output) into
//! the argument list, so that clap sees one flat command line.

use anyhow::{anyhow, bail, Context};
use clap::CommandFactory;
use std::ffi::OsString;
use std::path::Path;

use crate::cli::Cli;

const SUBCOMMANDS: [&str; 4] = ["bounds", "verify", "flow", "sturm"];

fn config_path(argv: &[OsString]) -> Option<OsString> {
    let mut it = argv.iter();
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            return it.next().cloned();
        }
        if let Some(p) = s.strip_prefix("--config=") {
            return Some(p.into());
        }
    }
    None
}

/// Pairs from either a flat `key = value` file or a JSON output carrying
/// `manifest.parameters`.
pub fn read_pairs(path: &Path) -> anyhow::Result<Vec<(String, String)>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    if text.trim_start().starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(&text)
            .with_context(|| format!("parsing {} as JSON", path.display()))?;
        let params = v
            .pointer("/manifest/parameters")
            .and_then(|p| p.as_object())
            .ok_or_else(|| anyhow!("{} has no manifest.parameters", path.display()))?;
        return Ok(params
            .iter()
            .map(|(k, v)| {
                let s = v.as_str().map_or_else(|| v.to_string(), str::to_string);
                (k.clone(), s)
            })
            .collect());
    }
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("{}:{}: expected key=value", path.display(), i + 1))?;
        pairs.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(pairs)
}

fn given(user: &[OsString], long: &str) -> bool {
    let flag = format!("--{long}");
    let prefix = format!("--{long}=");
    user.iter().any(|a| {
        let s = a.to_string_lossy();
        s == flag || s.starts_with(&prefix)
    })
}

/// Inserts config values right after the subcommand name, skipping keys the
/// user already passed.
pub fn merge(argv: Vec<OsString>) -> anyhow::Result<Vec<OsString>> {
    let Some(path) = config_path(&argv) else {
        return Ok(argv);
    };
    let pairs = read_pairs(Path::new(&path))?;
    let Some(pos) = argv
        .iter()
        .position(|a| SUBCOMMANDS.contains(&a.to_string_lossy().as_ref()))
    else {
        // let clap report the missing subcommand
        return Ok(argv);
    };
    let name = argv[pos].to_string_lossy().to_string();
    let root = Cli::command();
    let sub = root.find_subcommand(&name).expect("known subcommand");
    let mut extra: Vec<OsString> = Vec::new();
    for (key, value) in pairs {
        let long = key.replace('_', "-");
        if long == "config" {
            continue;
        }
        let arg = sub
            .get_arguments()
            .chain(root.get_arguments())
            .find(|a| a.get_long() == Some(long.as_str()))
            .ok_or_else(|| anyhow!("unknown key '{key}' for {name}"))?;
        if given(&argv, &long) {
            continue;
        }
        if arg.get_action().takes_values() {
            extra.push(format!("--{long}={value}").into());
        } else {
            match value.as_str() {
                "true" | "1" | "yes" => extra.push(format!("--{long}").into()),
                "false" | "0" | "no" => {}
                other => bail!("'{key}' expects true or false, got '{other}'"),
            }
        }
    }
    let mut out = argv;
    out.splice(pos + 1..pos + 1, extra);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(v: &[&str]) -> Vec<OsString> {
        v.iter().map(OsString::from).collect()
    }

    #[test]
    fn flags_beat_file_values() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("run.conf");
        std::fs::write(&p, "# sweep\nn_range = 3..5\nk-range=1..1\ndelta = 1/50\n").unwrap();
        let merged = merge(args(&[
            "pinchlab",
            "--config",
            p.to_str().unwrap(),
            "bounds",
            "--delta",
            "0.1",
        ]))
        .unwrap();
        let s: Vec<String> = merged.iter().map(|a| a.to_string_lossy().into()).collect();
        assert!(s.contains(&"--n-range=3..5".to_string()));
        assert!(s.contains(&"--k-range=1..1".to_string()));
        assert!(!s.iter().any(|a| a.starts_with("--delta=")));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("bad.conf");
        std::fs::write(&p, "colour = blue\n").unwrap();
        let r = merge(args(&["pinchlab", "--config", p.to_str().unwrap(), "sturm"]));
        assert!(r.is_err());
    }
}
