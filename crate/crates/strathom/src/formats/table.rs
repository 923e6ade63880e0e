//! Knot tables: one `name: pd-code` per line, `#` comments. An empty
//! code is the unknot.

use strathom_core::KnotDiagram;

use super::{content_lines, pd};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub name: String,
    pub diagram: KnotDiagram,
}

pub fn parse(text: &str) -> Result<Vec<TableEntry>> {
    let mut out: Vec<TableEntry> = Vec::new();
    for (n, line) in content_lines(text) {
        let (name, code) = line.split_once(':').ok_or_else(|| Error::syntax(n, "expected `name: pd-code`"))?;
        let name = name.trim();
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(Error::syntax(n, format!("bad knot name `{name}`")));
        }
        if out.iter().any(|e| e.name == name) {
            return Err(Error::syntax(n, format!("duplicate knot name `{name}`")));
        }
        let diagram = pd::parse(code).map_err(|e| match e {
            Error::Syntax { msg, .. } => Error::syntax(n, msg),
            Error::Diagram(d) => Error::syntax(n, format!("{name}: {d}")),
            other => other,
        })?;
        out.push(TableEntry { name: name.to_string(), diagram });
    }
    if out.is_empty() {
        return Err(Error::EmptyTable);
    }
    Ok(out)
}

pub fn serialize(entries: &[TableEntry]) -> String {
    entries.iter().map(|e| format!("{}: {}\n", e.name, e.diagram).replace(": \n", ":\n")).collect()
}
