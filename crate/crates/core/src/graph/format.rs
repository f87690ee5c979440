//! Line-oriented text format for colored graphs.
//!
//! ```text
//! colors 3 closed        # palette 1..3; `open` means 0..3 with legs allowed
//! v w1 w
//! v b1 b
//! e x1 1 w1 b1           # label, color, white end, black end
//! leg l1 w1
//! ```

use std::fmt::Write as _;

use super::{Color, ColorSet, ColoredGraph, GraphBuilder, Parity};
use crate::error::{Error, Result};

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, message: message.into() }
}

/// Parse and validate a graph file.
pub fn parse(text: &str) -> Result<ColoredGraph> {
    let g = parse_unchecked(text)?;
    let report = g.validate();
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    Ok(g)
}

/// Parse without the color-regularity check (structural errors still fail).
pub fn parse_unchecked(text: &str) -> Result<ColoredGraph> {
    let mut builder: Option<GraphBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let Some(b) = builder.as_mut() else {
            if tokens[0] != "colors" {
                return Err(syntax(line, "expected `colors <D> <closed|open>` header"));
            }
            if tokens.len() != 3 {
                return Err(syntax(line, "header takes exactly two arguments"));
            }
            let d: u8 = tokens[1]
                .parse()
                .map_err(|_| syntax(line, format!("bad color count `{}`", tokens[1])))?;
            if d > 15 {
                return Err(syntax(line, "at most 15 colors are supported"));
            }
            let palette = match tokens[2] {
                "closed" => ColorSet::closed(d),
                "open" => ColorSet::open(d),
                other => return Err(syntax(line, format!("expected `closed` or `open`, found `{other}`"))),
            };
            builder = Some(GraphBuilder::new(palette));
            continue;
        };
        let at = |e: Error| match e {
            Error::Syntax { .. } => e,
            other => syntax(line, other.to_string()),
        };
        match (tokens[0], tokens.len()) {
            ("v", 3) => {
                let parity = match tokens[2] {
                    "w" => Parity::White,
                    "b" => Parity::Black,
                    other => return Err(syntax(line, format!("parity must be `w` or `b`, found `{other}`"))),
                };
                b.add_vertex(tokens[1], parity).map_err(at)?;
            }
            ("e", 5) => {
                let color: u8 = tokens[2]
                    .parse()
                    .map_err(|_| syntax(line, format!("bad color `{}`", tokens[2])))?;
                if color > 15 {
                    return Err(syntax(line, format!("color {color} out of range")));
                }
                let white = b.vertex_id(tokens[3]).map_err(at)?;
                let black = b.vertex_id(tokens[4]).map_err(at)?;
                if b.vertex_parity(white) != Parity::White {
                    return Err(syntax(line, format!("`{}` is not white", tokens[3])));
                }
                b.add_edge(tokens[1], Color(color), white, black).map_err(at)?;
            }
            ("leg", 3) => {
                b.add_leg_by_label(tokens[1], tokens[2]).map_err(at)?;
            }
            ("colors", _) => return Err(syntax(line, "duplicate header")),
            (kw @ ("v" | "e" | "leg"), n) => {
                return Err(syntax(line, format!("`{kw}` line has {} arguments", n - 1)))
            }
            (other, _) => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    builder
        .map(GraphBuilder::build)
        .ok_or_else(|| syntax(1, "missing `colors` header"))
}

fn header(g: &ColoredGraph) -> Result<String> {
    let colors = g.colors();
    if let Some(d) = colors.as_closed() {
        if g.is_closed() {
            return Ok(format!("colors {d} closed"));
        }
    }
    if let Some(d) = colors.as_open() {
        return Ok(format!("colors {d} open"));
    }
    if colors.is_empty() && g.is_empty() {
        return Ok("colors 0 closed".to_string());
    }
    Err(Error::UnsupportedPalette(colors))
}

fn body_lines(g: &ColoredGraph) -> (Vec<String>, Vec<String>, Vec<String>) {
    let vs = g
        .vertices()
        .iter()
        .map(|v| format!("v {} {}", v.label, v.parity.short()))
        .collect();
    let es = g
        .edges()
        .iter()
        .map(|e| {
            format!(
                "e {} {} {} {}",
                e.label,
                e.color,
                g.vertex(e.white).label,
                g.vertex(e.black).label
            )
        })
        .collect();
    let ls = g
        .legs()
        .iter()
        .map(|l| format!("leg {} {}", l.label, g.vertex(l.vertex).label))
        .collect();
    (vs, es, ls)
}

/// Serialize in insertion order.
pub fn to_text(g: &ColoredGraph) -> Result<String> {
    let mut out = header(g)?;
    out.push('\n');
    let (vs, es, ls) = body_lines(g);
    for l in vs.iter().chain(&es).chain(&ls) {
        writeln!(out, "{l}").expect("writing to a String");
    }
    Ok(out)
}

/// Serialize with each section sorted; equal for graphs that differ only
/// in line order.
pub fn to_sorted_text(g: &ColoredGraph) -> Result<String> {
    let mut out = header(g)?;
    out.push('\n');
    let (mut vs, mut es, mut ls) = body_lines(g);
    vs.sort();
    es.sort();
    ls.sort();
    for l in vs.iter().chain(&es).chain(&ls) {
        writeln!(out, "{l}").expect("writing to a String");
    }
    Ok(out)
}
