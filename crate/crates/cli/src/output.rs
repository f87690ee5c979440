use std::fmt::Display;

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `key = value` lines meant for reading.
    Text,
    /// `key=value` lines meant for scripts.
    Kv,
}

/// One output record. `text` overrides the `key = value` rendering in
/// text mode.
pub struct Entry {
    key: String,
    value: String,
    text: Option<String>,
}

#[derive(Default)]
pub struct Output {
    entries: Vec<Entry>,
}

impl Output {
    pub fn new() -> Output {
        Output::default()
    }

    pub fn pair(&mut self, key: impl Into<String>, value: impl Display) -> &mut Output {
        self.entries.push(Entry { key: key.into(), value: value.to_string(), text: None });
        self
    }

    pub fn line(&mut self, key: impl Into<String>, value: impl Display, text: impl Into<String>) -> &mut Output {
        self.entries.push(Entry { key: key.into(), value: value.to_string(), text: Some(text.into()) });
        self
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for e in &self.entries {
            match (format, &e.text) {
                (Format::Text, Some(t)) => out.push_str(t),
                (Format::Text, None) => out.push_str(&format!("{} = {}", e.key, e.value)),
                (Format::Kv, _) => out.push_str(&format!("{}={}", e.key, e.value)),
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_formats() {
        let mut o = Output::new();
        o.pair("chi", 0).line("boundary", "empty", "boundary: empty");
        assert_eq!(o.render(Format::Text), "chi = 0\nboundary: empty\n");
        assert_eq!(o.render(Format::Kv), "chi=0\nboundary=empty\n");
    }
}
