//! Sectioned input files: `[section]` headers and `key = "expression"` lines.

use std::fmt;
use std::str::FromStr;

use folcalc_core::parser::{parse_expression, Expr, ParseError, ParseErrorKind};
use thiserror::Error;

pub const MAX_FILE_BYTES: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Section {
    Foliation,
    Triple,
    Map,
    Curves,
    Params,
}

impl Section {
    pub const ALL: [Section; 5] = [Section::Foliation, Section::Triple, Section::Map, Section::Curves, Section::Params];

    pub fn name(self) -> &'static str {
        match self {
            Section::Foliation => "foliation",
            Section::Triple => "triple",
            Section::Map => "map",
            Section::Curves => "curves",
            Section::Params => "params",
        }
    }
}

impl FromStr for Section {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Section::ALL.into_iter().find(|sec| sec.name() == s).ok_or(())
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DocumentErrorKind {
    #[error("unknown section [{0}]")]
    UnknownSection(String),
    #[error("duplicate section [{0}]")]
    DuplicateSection(String),
    #[error("entry outside of any section")]
    NoSection,
    #[error("expected `key = \"expression\"`")]
    ExpectedEntry,
    #[error("invalid key {0:?}")]
    InvalidKey(String),
    #[error("duplicate key {0:?}")]
    DuplicateKey(String),
    #[error("value must be enclosed in double quotes")]
    UnquotedValue,
    #[error("unterminated string")]
    UnterminatedString,
    #[error("unexpected text after value")]
    TrailingText,
    #[error("non-ASCII character {0:?}")]
    NonAscii(char),
    #[error("file exceeds {MAX_FILE_BYTES} bytes")]
    TooLarge,
    #[error("{0}")]
    Expression(ParseErrorKind),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct DocumentError {
    pub line: usize,
    pub column: usize,
    pub kind: DocumentErrorKind,
}

impl DocumentError {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self.kind, DocumentErrorKind::TooLarge | DocumentErrorKind::Expression(ParseErrorKind::ResourceLimit(_)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub key: String,
    pub raw: String,
    pub value: Expr,
    pub line: usize,
}

/// A parsed input file; every value has already been parsed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InputDocument {
    sections: Vec<(Section, Vec<Entry>)>,
}

fn is_key(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn doc_err(line: usize, column: usize, kind: DocumentErrorKind) -> DocumentError {
    DocumentError { line, column, kind }
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        if text.len() > MAX_FILE_BYTES {
            return Err(doc_err(1, 1, DocumentErrorKind::TooLarge));
        }
        let mut doc = InputDocument::default();
        for (idx, line) in text.lines().enumerate() {
            let ln = idx + 1;
            if let Some(col) = line.chars().position(|c| !c.is_ascii()) {
                let ch = line.chars().nth(col).unwrap();
                return Err(doc_err(ln, col + 1, DocumentErrorKind::NonAscii(ch)));
            }
            let indent = line.len() - line.trim_start().len();
            let body = line.trim();
            if body.is_empty() || body.starts_with('#') || body.starts_with(';') {
                continue;
            }
            if let Some(rest) = body.strip_prefix('[') {
                let Some(name) = rest.strip_suffix(']') else {
                    return Err(doc_err(ln, indent + 1, DocumentErrorKind::ExpectedEntry));
                };
                let name = name.trim();
                let sec: Section =
                    name.parse().map_err(|_| doc_err(ln, indent + 1, DocumentErrorKind::UnknownSection(name.into())))?;
                if doc.sections.iter().any(|(s, _)| *s == sec) {
                    return Err(doc_err(ln, indent + 1, DocumentErrorKind::DuplicateSection(name.into())));
                }
                doc.sections.push((sec, Vec::new()));
                continue;
            }
            let Some(eq) = body.find('=') else {
                return Err(doc_err(ln, indent + 1, DocumentErrorKind::ExpectedEntry));
            };
            let key = body[..eq].trim();
            if !is_key(key) {
                return Err(doc_err(ln, indent + 1, DocumentErrorKind::InvalidKey(key.into())));
            }
            let after = &body[eq + 1..];
            let vstart = indent + eq + 1 + (after.len() - after.trim_start().len());
            let value = after.trim_start();
            let Some(inner) = value.strip_prefix('"') else {
                return Err(doc_err(ln, vstart + 1, DocumentErrorKind::UnquotedValue));
            };
            let Some(close) = inner.find('"') else {
                return Err(doc_err(ln, vstart + 1, DocumentErrorKind::UnterminatedString));
            };
            let raw = &inner[..close];
            let tail = inner[close + 1..].trim();
            if !(tail.is_empty() || tail.starts_with('#') || tail.starts_with(';')) {
                return Err(doc_err(ln, vstart + close + 3, DocumentErrorKind::TrailingText));
            }
            let Some((_, entries)) = doc.sections.last_mut() else {
                return Err(doc_err(ln, indent + 1, DocumentErrorKind::NoSection));
            };
            if entries.iter().any(|e| e.key == key) {
                return Err(doc_err(ln, indent + 1, DocumentErrorKind::DuplicateKey(key.into())));
            }
            let parsed = parse_expression(raw).map_err(|e: ParseError| {
                doc_err(ln, vstart + 1 + e.column, DocumentErrorKind::Expression(e.kind))
            })?;
            entries.push(Entry { key: key.into(), raw: raw.into(), value: parsed, line: ln });
        }
        Ok(doc)
    }

    pub fn section(&self, sec: Section) -> &[Entry] {
        self.sections.iter().find(|(s, _)| *s == sec).map_or(&[], |(_, e)| e.as_slice())
    }

    pub fn get(&self, sec: Section, key: &str) -> Option<&Entry> {
        self.section(sec).iter().find(|e| e.key == key)
    }

    pub fn entries(&self) -> impl Iterator<Item = (Section, &Entry)> {
        self.sections.iter().flat_map(|(s, es)| es.iter().map(move |e| (*s, e)))
    }

    /// Renders back to the file format; values use the canonical printer.
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::new();
        for (sec, entries) in &self.sections {
            out.push_str(&format!("[{sec}]\n"));
            for e in entries {
                out.push_str(&format!("{} = \"{}\"\n", e.key, e.value));
            }
        }
        out
    }
}
