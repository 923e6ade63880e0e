//! `X(a,b,c,d)` tokens separated by whitespace or commas.

use std::sync::LazyLock;

use regex::Regex;
use strathom_core::{Crossing, KnotDiagram};

use super::line_of;
use crate::{Error, Result};

static TOKEN: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)").unwrap());

pub fn parse_crossings(text: &str) -> Result<Vec<Crossing>> {
    let mut out = Vec::new();
    let mut last = 0;
    for m in TOKEN.captures_iter(text) {
        let whole = m.get(0).unwrap();
        check_gap(text, last, whole.start())?;
        let mut slots = [0usize; 4];
        for (i, slot) in slots.iter_mut().enumerate() {
            let s = &m[i + 1];
            *slot = s.parse().map_err(|_| Error::syntax(line_of(text, whole.start()), format!("arc label `{s}` too large")))?;
        }
        out.push(Crossing(slots));
        last = whole.end();
    }
    check_gap(text, last, text.len())?;
    Ok(out)
}

fn check_gap(text: &str, from: usize, to: usize) -> Result<()> {
    let gap = &text[from..to];
    match gap.find(|c: char| !c.is_whitespace() && c != ',') {
        None => Ok(()),
        Some(off) => {
            let bad: String = gap[off..].split_whitespace().next().unwrap_or("").chars().take(24).collect();
            Err(Error::syntax(line_of(text, from + off), format!("malformed PD token `{bad}`")))
        }
    }
}

pub fn parse(text: &str) -> Result<KnotDiagram> {
    Ok(KnotDiagram::from_pd(parse_crossings(text)?)?)
}

pub fn serialize(d: &KnotDiagram) -> String {
    d.to_string()
}
