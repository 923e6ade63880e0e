//! Filtered complexes: a poset literal, then one simplex per line,
//!
//! ```text
//! dim vertex-ids : chain-labels
//! 1 0 1 : 0 1
//! ```
//!
//! Vertex ids are nonnegative integers, chain labels are poset labels.

use strathom_core::filtered::FilteredSimplicialSet;
use strathom_core::ChainSimplex;

use super::{content_lines, poset::parse_lines};
use crate::{Error, Result};

pub fn parse(text: &str) -> Result<FilteredSimplicialSet> {
    let mut lines = content_lines(text).peekable();
    let poset = parse_lines(&mut lines)?;
    let mut entries = Vec::new();
    for (n, line) in lines {
        let (lhs, rhs) = line
            .split_once(':')
            .ok_or_else(|| Error::syntax(n, "expected `dim vertex-ids : chain-labels`"))?;
        let mut nums = lhs.split_whitespace().map(|t| {
            t.parse::<u32>().map_err(|_| Error::syntax(n, format!("bad integer `{t}`")))
        });
        let dim = nums.next().ok_or_else(|| Error::syntax(n, "missing dimension"))??;
        let verts: Vec<u32> = nums.collect::<Result<_>>()?;
        if verts.len() != dim as usize + 1 {
            return Err(Error::syntax(n, format!("dimension {dim} needs {} vertices, got {}", dim + 1, verts.len())));
        }
        let chain = rhs
            .split_whitespace()
            .map(|l| poset.index_of(l).ok_or_else(|| Error::syntax(n, format!("unknown poset element `{l}`"))))
            .collect::<Result<Vec<_>>>()?;
        entries.push((verts, ChainSimplex::new(chain)));
    }
    let k = FilteredSimplicialSet::new(poset, entries);
    k.validate()?;
    Ok(k)
}

pub fn serialize(k: &FilteredSimplicialSet) -> String {
    let mut out = super::poset::serialize(k.poset());
    for s in k.simplices() {
        let chain = k.chain_of(s).expect("stored simplex");
        let verts: Vec<String> = s.iter().map(u32::to_string).collect();
        let labels: Vec<&str> = chain.vertices().iter().map(|&e| k.poset().label(e)).collect();
        out.push_str(&format!("{} {} : {}\n", s.len() - 1, verts.join(" "), labels.join(" ")));
    }
    out
}
