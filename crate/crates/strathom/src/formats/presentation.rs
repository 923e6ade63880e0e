//! Presentations: `gens: n`, then `rel: x1 x2 -x1` lines. Bare signed
//! integers (`1 2 -1`) are accepted as letters too.

use strathom_core::{GroupPresentation, Word};

use super::content_lines;
use crate::{Error, Result};

fn letter(n: usize, gens: usize, tok: &str) -> Result<i64> {
    let (neg, body) = match tok.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, tok),
    };
    let body = body.strip_prefix('x').unwrap_or(body);
    let i: i64 = body.parse().map_err(|_| Error::syntax(n, format!("bad letter `{tok}`")))?;
    if i < 1 || i as usize > gens {
        return Err(Error::syntax(n, format!("generator `{tok}` outside 1..={gens}")));
    }
    Ok(if neg { -i } else { i })
}

pub fn parse(text: &str) -> Result<GroupPresentation> {
    let mut lines = content_lines(text);
    let (n, head) = lines.next().ok_or_else(|| Error::syntax(1, "expected `gens:` line"))?;
    let gens: usize = head
        .strip_prefix("gens:")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::syntax(n, "expected `gens: <count>`"))?;
    let mut relators = Vec::new();
    for (n, line) in lines {
        let body = line.strip_prefix("rel:").ok_or_else(|| Error::syntax(n, "expected `rel:` line"))?;
        let idx = body.split_whitespace().map(|t| letter(n, gens, t)).collect::<Result<Vec<_>>>()?;
        relators.push(Word::from_signed(&idx));
    }
    Ok(GroupPresentation::new(gens, relators))
}

pub fn serialize(p: &GroupPresentation) -> String {
    p.to_string()
}
