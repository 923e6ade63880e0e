//! Signed Gauss codes: `O1-U2-O3-U1-O2-U3-`, spaces or commas allowed
//! between tokens.

use std::sync::LazyLock;

use regex::Regex;
use strathom_core::diagram::{gauss_to_pd, GaussToken, Strand};
use strathom_core::{GaussCode, KnotDiagram, Sign};

use super::line_of;
use crate::{Error, Result};

static TOKEN: LazyLock<Regex> = LazyLock::new(|| Regex::new(r"([OU])\s*(\d+)\s*([+-])").unwrap());

pub fn parse_code(text: &str) -> Result<GaussCode> {
    let mut tokens = Vec::new();
    let mut last = 0;
    for m in TOKEN.captures_iter(text) {
        let whole = m.get(0).unwrap();
        gap(text, last, whole.start())?;
        let strand = if &m[1] == "O" { Strand::Over } else { Strand::Under };
        let id = m[2]
            .parse()
            .map_err(|_| Error::syntax(line_of(text, whole.start()), "crossing id too large"))?;
        let sign = if &m[3] == "+" { Sign::Positive } else { Sign::Negative };
        tokens.push(GaussToken { strand, id, sign });
        last = whole.end();
    }
    gap(text, last, text.len())?;
    Ok(GaussCode(tokens))
}

fn gap(text: &str, from: usize, to: usize) -> Result<()> {
    match text[from..to].find(|c: char| !c.is_whitespace() && c != ',') {
        None => Ok(()),
        Some(off) => {
            let bad: String = text[from + off..].chars().take(12).collect();
            Err(Error::syntax(line_of(text, from + off), format!("malformed Gauss token near `{bad}`")))
        }
    }
}

/// Realizability is only checked when asked for.
pub fn parse_diagram(text: &str, check_planar: bool) -> Result<KnotDiagram> {
    Ok(gauss_to_pd(&parse_code(text)?, check_planar)?)
}
