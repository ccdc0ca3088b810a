//! Reading inputs, exit codes and output plumbing.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use zdg_core::graph::GraphJson;
use zdg_core::poset::PosetJson;
use zdg_core::{Error, FinitePoset, SimpleGraph};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_REFUSED: u8 = 2;
pub const EXIT_INPUT: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SearchRefused(_) => EXIT_REFUSED,
            Error::IdentityViolated(_) => EXIT_VERIFY,
            _ => EXIT_INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Primary output plus the exit code to finish with.
pub struct Done {
    pub text: String,
    pub code: u8,
}

impl Done {
    pub fn ok(text: String) -> Self {
        Self {
            text,
            code: EXIT_OK,
        }
    }

    pub fn emit(&self, out: Option<&Path>) -> io::Result<()> {
        match out {
            Some(path) => fs::write(path, &self.text),
            None => io::stdout().lock().write_all(self.text.as_bytes()),
        }
    }
}

pub enum Input {
    Poset(FinitePoset),
    Graph(SimpleGraph),
}

fn read_text(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

pub fn json_error(path: &Path, e: &serde_json::Error) -> CliError {
    CliError::input(format!(
        "{}: invalid JSON at line {}, column {}: {e}",
        path.display(),
        e.line(),
        e.column()
    ))
}

pub fn parse_json<T: serde::de::DeserializeOwned>(path: &Path, text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| json_error(path, &e))
}

/// A poset when the document has `covers`, otherwise a graph.
pub fn read_input(path: &Path) -> CliResult<Input> {
    let text = read_text(path)?;
    let doc: serde_json::Value = parse_json(path, &text)?;
    let context = |e: Error| CliError::input(format!("{}: {e}", path.display()));
    if doc.get("covers").is_some() {
        let p: PosetJson = parse_json(path, &text)?;
        Ok(Input::Poset(FinitePoset::from_json(&p).map_err(context)?))
    } else {
        let g: GraphJson = parse_json(path, &text)?;
        Ok(Input::Graph(SimpleGraph::from_json(&g).map_err(context)?))
    }
}

pub fn read_poset(path: &Path) -> CliResult<FinitePoset> {
    match read_input(path)? {
        Input::Poset(p) => Ok(p),
        Input::Graph(_) => Err(CliError::input(format!(
            "{}: expected a poset (with covers)",
            path.display()
        ))),
    }
}

pub fn read_corpus(path: &Path) -> CliResult<String> {
    read_text(path)
}

/// `"3,3"` to `[3, 3]`.
pub fn parse_list<T: std::str::FromStr>(s: &str) -> CliResult<Vec<T>> {
    let parsed: Option<Vec<T>> = s.split(',').map(|x| x.trim().parse().ok()).collect();
    match parsed {
        Some(v) if !v.is_empty() => Ok(v),
        _ => Err(CliError::input(format!(
            "expected a comma-separated list of numbers, got {s:?}"
        ))),
    }
}
