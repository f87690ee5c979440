//! Reading graphs from files or standard input, writing results.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use colorgraph::graph::format::{parse, parse_unchecked, to_text};
use colorgraph::ribbon::RibbonStructure;
use colorgraph::ColoredGraph;

use crate::CliError;

pub struct Io {
    pub fixtures: PathBuf,
}

impl Io {
    /// Relative paths that do not exist are retried under the fixture
    /// directory.
    fn resolve(&self, path: &Path) -> PathBuf {
        if path.is_relative() && !path.exists() {
            let alt = self.fixtures.join(path);
            if alt.exists() {
                return alt;
            }
        }
        path.to_path_buf()
    }

    pub fn read_text(&self, path: &Path) -> Result<String, CliError> {
        if path == Path::new("-") {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| CliError::io("<stdin>", e))?;
            return Ok(s);
        }
        let p = self.resolve(path);
        fs::read_to_string(&p).map_err(|e| CliError::io(p.display(), e))
    }

    pub fn graph(&self, path: &Path) -> Result<ColoredGraph, CliError> {
        Ok(parse(&self.read_text(path)?)?)
    }

    pub fn graph_unchecked(&self, path: &Path) -> Result<ColoredGraph, CliError> {
        Ok(parse_unchecked(&self.read_text(path)?)?)
    }

    /// A ribbon file (`rv`/`rj` lines) or a closed 3-colored graph file.
    pub fn ribbon(&self, path: &Path) -> Result<RibbonStructure, CliError> {
        let text = self.read_text(path)?;
        if is_ribbon_text(&text) {
            Ok(RibbonStructure::parse(&text)?)
        } else {
            Ok(RibbonStructure::from_colored(&parse(&text)?)?)
        }
    }
}

pub fn is_ribbon_text(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("rv ") || l.starts_with("rj "))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    if path == Path::new("-") {
        io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
    } else {
        fs::write(path, text).map_err(|e| CliError::io(path.display(), e))
    }
}

pub fn write_graph(path: &Path, g: &ColoredGraph) -> Result<(), CliError> {
    write_text(path, &to_text(g)?)
}
