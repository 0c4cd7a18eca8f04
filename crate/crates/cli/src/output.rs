use anyhow::Context;
use serde_json::{json, Value};
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::manifest::RunManifest;

fn trim_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Twelve significant digits, fixed notation for moderate exponents and
/// scientific otherwise, trailing zeros dropped.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let e = x.abs().log10().floor() as i32;
    if (-5..12).contains(&e) {
        let decimals = (11 - e).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        let s = format!("{x:.11e}");
        let (mantissa, exp) = s.split_once('e').expect("scientific format");
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

/// Where the JSON goes when `out` names the CSV.
pub fn companion_json(out: &Path) -> PathBuf {
    if out.extension().is_some_and(|e| e == "json") {
        out.with_extension("summary.json")
    } else {
        out.with_extension("json")
    }
}

pub fn manifest_line(manifest: &RunManifest) -> String {
    format!(
        "# manifest: {}",
        serde_json::to_string(manifest).expect("manifest serializes")
    )
}

pub fn csv_text(manifest: &RunManifest, header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = manifest_line(manifest);
    s.push('\n');
    s.push_str(&header.join(","));
    s.push('\n');
    for r in rows {
        s.push_str(&r.join(","));
        s.push('\n');
    }
    s
}

pub fn json_text(manifest: &RunManifest, results: Value, verdicts: Value) -> String {
    let doc = json!({
        "manifest": manifest,
        "results": results,
        "verdicts": verdicts,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

pub fn write_stdout(text: &str) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes()).context("writing to stdout")
}
