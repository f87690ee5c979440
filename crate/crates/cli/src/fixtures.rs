//! Fixture regeneration from `MANIFEST`, whose lines read
//! `<file> build <family> [params...]`.

use std::fs;
use std::path::Path;

use clap::ValueEnum;

use crate::commands::build_text;
use crate::output::Output;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Action {
    /// Compare every fixture with a fresh build.
    Check,
    /// Rewrite every fixture.
    Regen,
}

pub struct ManifestEntry {
    pub file: String,
    pub family: String,
    pub params: Vec<usize>,
}

pub fn parse_manifest(text: &str) -> Result<Vec<ManifestEntry>, CliError> {
    let mut entries = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || CliError(format!("MANIFEST line {}: expected `<file> build <family> [params]`", n + 1));
        let mut words = line.split_whitespace();
        let file = words.next().ok_or_else(bad)?.to_string();
        if words.next() != Some("build") {
            return Err(bad());
        }
        let family = words.next().ok_or_else(bad)?.to_string();
        let params = words.map(|w| w.parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
        entries.push(ManifestEntry { file, family, params });
    }
    Ok(entries)
}

pub fn run(action: Action, dir: &Path, out: &mut Output) -> Result<bool, CliError> {
    let manifest = dir.join("MANIFEST");
    let text = fs::read_to_string(&manifest).map_err(|e| CliError::io(manifest.display(), e))?;
    let mut stale = 0;
    let entries = parse_manifest(&text)?;
    for e in &entries {
        let fresh = build_text(&e.family, &e.params)?;
        let path = dir.join(&e.file);
        match action {
            Action::Regen => fs::write(&path, &fresh).map_err(|err| CliError::io(path.display(), err))?,
            Action::Check => {
                let same = fs::read_to_string(&path).is_ok_and(|old| old == fresh);
                if !same {
                    stale += 1;
                }
                let status = if same { "ok" } else { "stale" };
                out.line(format!("fixture.{}", e.file), status, format!("{}: {status}", e.file));
            }
        }
    }
    out.pair("fixtures", entries.len());
    if action == Action::Check {
        out.pair("stale", stale);
    }
    Ok(stale == 0)
}
