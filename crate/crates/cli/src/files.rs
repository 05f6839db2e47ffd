//! Element list files: one literal `(x; w)` per line. Blank lines and lines
//! starting with `#` are skipped.

use std::path::Path;

use freerack_core::{syntax::parse_element, Alphabet, RackElement, WordMode};

use crate::CliError;

/// Parses the text of an element file.
pub fn parse_elements(
    alphabet: &Alphabet,
    mode: WordMode,
    text: &str,
) -> Result<Vec<RackElement>, CliError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let e = parse_element(alphabet, mode, line).map_err(|source| CliError::Line {
            line: i + 1,
            source,
        })?;
        out.push(e);
    }
    Ok(out)
}

/// Reads and parses an element file.
pub fn read_elements(
    alphabet: &Alphabet,
    mode: WordMode,
    path: &Path,
) -> Result<Vec<RackElement>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_elements(alphabet, mode, &text)
}

/// Writes one literal per line.
pub fn format_elements(alphabet: &Alphabet, elements: &[RackElement]) -> String {
    let mut out = String::new();
    for e in elements {
        out.push_str(&e.display(alphabet).to_string());
        out.push('\n');
    }
    out
}
