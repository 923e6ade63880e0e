//! Poset literals:
//!
//! ```text
//! elements: a b c
//! a < b
//! b < c
//! ```
//!
//! The transitive closure is taken on load; `a < b < c` chains are allowed
//! on one line.

use strathom_core::Poset;

use super::content_lines;
use crate::{Error, Result};

/// Reads a literal from an iterator of numbered content lines, stopping at
/// the first line that is neither the header nor a relation.
pub(crate) fn parse_lines<'a, I>(lines: &mut std::iter::Peekable<I>) -> Result<Poset>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (n, head) = lines.next().ok_or_else(|| Error::syntax(1, "expected `elements:` line"))?;
    let rest = head
        .strip_prefix("elements:")
        .ok_or_else(|| Error::syntax(n, "expected `elements:` line"))?;
    let labels: Vec<&str> = rest.split_whitespace().collect();
    let mut less = Vec::new();
    while let Some(&(n, line)) = lines.peek() {
        if !line.contains('<') {
            break;
        }
        let parts: Vec<&str> = line.split('<').map(str::trim).collect();
        if parts.iter().any(|p| p.is_empty() || p.contains(char::is_whitespace)) {
            return Err(Error::syntax(n, format!("malformed relation `{line}`")));
        }
        for w in parts.windows(2) {
            if w[0] == w[1] {
                return Err(Error::syntax(n, format!("strict relation `{0} < {0}`", w[0])));
            }
            less.push((w[0], w[1]));
        }
        lines.next();
    }
    let p = Poset::from_covers(&labels, &less)?;
    p.validate()?;
    Ok(p)
}

pub fn parse(text: &str) -> Result<Poset> {
    let mut lines = content_lines(text).peekable();
    let p = parse_lines(&mut lines)?;
    if let Some((n, line)) = lines.next() {
        return Err(Error::syntax(n, format!("unexpected line `{line}`")));
    }
    Ok(p)
}

/// Header plus the covering relations in index order.
pub fn serialize(p: &Poset) -> String {
    let mut out = format!("elements: {}\n", p.labels().join(" "));
    let n = p.len();
    for a in 0..n {
        for b in 0..n {
            if p.lt(a, b) && !(0..n).any(|c| p.lt(a, c) && p.lt(c, b)) {
                out.push_str(&format!("{} < {}\n", p.label(a), p.label(b)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_round_trip() {
        let p = parse("elements: a b c\na < b\nb < c\n").unwrap();
        assert!(p.lt(0, 2));
        assert_eq!(serialize(&p), "elements: a b c\na < b\nb < c\n");
        assert_eq!(parse(&serialize(&p)).unwrap(), p);
        assert_eq!(parse("elements: 0 1 2\n0 < 1 < 2").unwrap(), Poset::chain(3));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("a < b"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse("elements: a b\na < c"), Err(Error::Poset(_))));
        assert!(matches!(parse("elements: a b\na < b\nb < a"), Err(Error::PosetViolation(_))));
        assert!(matches!(parse("elements: a b\n\na <"), Err(Error::Syntax { line: 3, .. })));
    }
}
