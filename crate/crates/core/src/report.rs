//! Report rendering (JSON, CSV, Markdown) and append-only persistence.
//!
//! Reports are named by a hash of the semantic run configuration; rerunning
//! the same configuration appends another payload to the same file rather
//! than overwriting it. Writes go through a temp file and rename.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::{json, Value};

use crate::conjectures::ConjectureReport;
use crate::engine::VerificationReport;
use crate::identities::IdentityOutcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Md,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "json" => Some(OutputFormat::Json),
            "csv" => Some(OutputFormat::Csv),
            "md" => Some(OutputFormat::Md),
            _ => None,
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Md => "md",
        }
    }
}

/// FNV-1a over the canonical JSON of the semantic config; 16 hex digits.
pub fn config_hash(config: &Value) -> String {
    let s = config.to_string();
    let mut h: u64 = 0xcbf29ce484222325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportMeta {
    pub tool: &'static str,
    pub version: &'static str,
    pub subcommand: String,
    pub config: Value,
    pub config_hash: String,
    pub generated_unix: u64,
}

impl ReportMeta {
    pub fn new(subcommand: &str, config: Value) -> Self {
        ReportMeta {
            tool: "franel",
            version: env!("CARGO_PKG_VERSION"),
            subcommand: subcommand.to_string(),
            config_hash: config_hash(&config),
            config,
            generated_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn params_string(params: &std::collections::BTreeMap<String, String>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

// ------------------------------------------------------------------ verify

pub fn render_verify(meta: &ReportMeta, report: &VerificationReport, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Json => {
            let v = json!({
                "tool": meta.tool,
                "version": meta.version,
                "subcommand": meta.subcommand,
                "config": meta.config,
                "config_hash": meta.config_hash,
                "generated_unix": meta.generated_unix,
                "summary": report.summary,
                "records": report.records,
                "skips": report.skips,
            });
            let mut s = serde_json::to_string_pretty(&v).expect("report serialization");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut out = String::from("case_id,p,e,params,lhs,rhs,holds,branch,x,y,ms\n");
            for r in &report.records {
                let (x, y) = match &r.rep {
                    Some(rep) => (rep.x.to_string(), rep.y.to_string()),
                    None => (String::new(), String::new()),
                };
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{}\n",
                    r.case_id,
                    r.p,
                    r.e,
                    csv_escape(&params_string(&r.params)),
                    r.lhs,
                    r.rhs,
                    r.holds,
                    csv_escape(&r.branch),
                    x,
                    y,
                    r.ms
                ));
            }
            out
        }
        OutputFormat::Md => {
            let mut out = format!(
                "# verify report `{}`\n\nconfig: `{}`\n\n| case | p | e | params | lhs | rhs | holds | branch | rep | ms |\n|---|---|---|---|---|---|---|---|---|---|\n",
                meta.config_hash, meta.config
            );
            for r in &report.records {
                let rep = match &r.rep {
                    Some(rep) => format!("{}p={}^2+{}*{}^2", rep.scale, rep.x, rep.d, rep.y),
                    None => String::new(),
                };
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |\n",
                    r.case_id,
                    r.p,
                    r.e,
                    params_string(&r.params),
                    r.lhs,
                    r.rhs,
                    if r.holds { "holds" } else { "FAILS" },
                    r.branch,
                    rep,
                    r.ms
                ));
            }
            out.push_str(&format!(
                "\n{} outcomes, {} hold, {} fail, {} skipped\n",
                report.summary.outcomes,
                report.summary.holds,
                report.summary.failed,
                report.summary.skipped
            ));
            if !report.skips.is_empty() {
                out.push_str("\nskips:\n");
                for s in &report.skips {
                    out.push_str(&format!("- {} p={}: {}\n", s.case_id, s.p, s.reason));
                }
            }
            out
        }
    }
}

// -------------------------------------------------------------- identities

pub fn render_identities(
    meta: &ReportMeta,
    outcomes: &[IdentityOutcome],
    fmt: OutputFormat,
) -> String {
    match fmt {
        OutputFormat::Json => {
            let v = json!({
                "tool": meta.tool,
                "version": meta.version,
                "subcommand": meta.subcommand,
                "config": meta.config,
                "config_hash": meta.config_hash,
                "generated_unix": meta.generated_unix,
                "records": outcomes,
            });
            let mut s = serde_json::to_string_pretty(&v).expect("report serialization");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut out = String::from("id,window,samples,status,counterexample\n");
            for o in outcomes {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    o.id,
                    o.window,
                    o.samples,
                    if o.passed { "pass" } else { "FAIL" },
                    csv_escape(o.counterexample.as_deref().unwrap_or(""))
                ));
            }
            out
        }
        OutputFormat::Md => {
            let mut out = format!(
                "# identity report `{}`\n\n| id | window | samples | status |\n|---|---|---|---|\n",
                meta.config_hash
            );
            for o in outcomes {
                out.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    o.id,
                    o.window,
                    o.samples,
                    match (&o.passed, &o.counterexample) {
                        (true, _) => "pass".to_string(),
                        (false, Some(c)) => format!("FAIL at {c}"),
                        (false, None) => "FAIL".to_string(),
                    }
                ));
            }
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            out.push_str(&format!(
                "\n{} identities, {} failed\n",
                outcomes.len(),
                failed
            ));
            out
        }
    }
}

// ------------------------------------------------------------- conjectures

pub fn render_conjectures(
    meta: &ReportMeta,
    reports: &[ConjectureReport],
    fmt: OutputFormat,
) -> String {
    match fmt {
        OutputFormat::Json => {
            let v = json!({
                "tool": meta.tool,
                "version": meta.version,
                "subcommand": meta.subcommand,
                "config": meta.config,
                "config_hash": meta.config_hash,
                "generated_unix": meta.generated_unix,
                "records": reports,
            });
            let mut s = serde_json::to_string_pretty(&v).expect("report serialization");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut out = String::from("id,instance,status,witness\n");
            for r in reports {
                for i in &r.instances {
                    out.push_str(&format!(
                        "{},{},{},{}\n",
                        i.id,
                        csv_escape(&i.instance),
                        i.status,
                        csv_escape(&i.witness.to_string())
                    ));
                }
            }
            out
        }
        OutputFormat::Md => {
            let mut out = format!("# conjecture report `{}`\n", meta.config_hash);
            for r in reports {
                out.push_str(&format!(
                    "\n## {} — {} instances tested, {} counterexamples{}\n\n",
                    r.id,
                    r.tested,
                    r.counterexamples,
                    if r.complete {
                        ""
                    } else {
                        " (INCOMPLETE: bound exceeded resource cap)"
                    }
                ));
                if r.counterexamples == 0 {
                    out.push_str("supported up to bound\n");
                } else {
                    for i in r.instances.iter().filter(|i| i.status == "counterexample") {
                        out.push_str(&format!(
                            "- COUNTEREXAMPLE {}: {}\n",
                            i.instance, i.witness
                        ));
                    }
                }
            }
            out
        }
    }
}

// --------------------------------------------------------------------- seq

pub fn render_seq(meta: &ReportMeta, rows: &[(usize, String)], fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Json => {
            let records: Vec<Value> = rows
                .iter()
                .map(|(i, v)| json!({"index": i, "value": v}))
                .collect();
            let v = json!({
                "tool": meta.tool,
                "version": meta.version,
                "subcommand": meta.subcommand,
                "config": meta.config,
                "config_hash": meta.config_hash,
                "generated_unix": meta.generated_unix,
                "records": records,
            });
            let mut s = serde_json::to_string_pretty(&v).expect("report serialization");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut out = String::from("index,value\n");
            for (i, v) in rows {
                out.push_str(&format!("{},{}\n", i, csv_escape(v)));
            }
            out
        }
        OutputFormat::Md => {
            let mut out = format!(
                "# sequence table `{}`\n\n| index | value |\n|---|---|\n",
                meta.config_hash
            );
            for (i, v) in rows {
                out.push_str(&format!("| {} | {} |\n", i, v));
            }
            out
        }
    }
}

// -------------------------------------------------------------- persistence

/// Append `content` to `path` atomically: existing content is preserved, the
/// combined file is written to a temp sibling and renamed into place.
pub fn append_report(path: &Path, content: &str) -> io::Result<PathBuf> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)?;
        }
    }
    let existing = match fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) if e.kind() == io::ErrorKind::NotFound => String::new(),
        Err(e) => return Err(e),
    };
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, existing + content)?;
    fs::rename(&tmp, path)?;
    Ok(path.to_path_buf())
}

/// Remove the volatile fields (timing, timestamp) from a JSON report so two
/// runs with identical config and seed compare byte-identical.
pub fn strip_volatile(value: &mut Value) {
    match value {
        Value::Object(map) => {
            map.remove("ms");
            map.remove("generated_unix");
            for (_, v) in map.iter_mut() {
                strip_volatile(v);
            }
        }
        Value::Array(items) => {
            for v in items {
                strip_volatile(v);
            }
        }
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hash_is_stable_and_sensitive() {
        let a = json!({"primes": [5, 100], "seed": 1});
        let b = json!({"primes": [5, 100], "seed": 2});
        assert_eq!(config_hash(&a), config_hash(&a));
        assert_ne!(config_hash(&a), config_hash(&b));
        assert_eq!(config_hash(&a).len(), 16);
    }

    #[test]
    fn strip_volatile_removes_ms_everywhere() {
        let mut v = json!({
            "generated_unix": 5,
            "records": [{"ms": 3, "lhs": 1}, {"ms": 4, "rhs": 2}],
        });
        strip_volatile(&mut v);
        assert_eq!(v, json!({"records": [{"lhs": 1}, {"rhs": 2}]}));
    }

    #[test]
    fn append_preserves_existing_content() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.csv");
        append_report(&path, "a\n").unwrap();
        append_report(&path, "b\n").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "a\nb\n");
    }

    #[test]
    fn csv_escaping() {
        assert_eq!(csv_escape("plain"), "plain");
        assert_eq!(csv_escape("a,b"), "\"a,b\"");
        assert_eq!(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    }
}
