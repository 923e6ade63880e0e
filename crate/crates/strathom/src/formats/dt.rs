//! Dowker–Thistlethwaite codes: signed even integers separated by
//! whitespace or commas.

use strathom_core::diagram::dt_to_pd;
use strathom_core::KnotDiagram;

use crate::{Error, Result};

pub fn parse_code(text: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        for tok in line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let v = tok.parse().map_err(|_| Error::syntax(n + 1, format!("malformed DT entry `{tok}`")))?;
            out.push(v);
        }
    }
    Ok(out)
}

/// Chirality is not recorded by a DT code; see [`dt_to_pd`].
pub fn parse(text: &str) -> Result<KnotDiagram> {
    Ok(dt_to_pd(&parse_code(text)?)?)
}
