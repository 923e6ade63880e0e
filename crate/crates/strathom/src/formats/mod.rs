//! Text formats. Every reader returns [`Error::Syntax`](crate::Error::Syntax)
//! with a 1-based line number for malformed input.

pub mod complex;
pub mod dt;
pub mod gauss;
pub mod pd;
pub mod poset;
pub mod presentation;
pub mod table;

use std::fmt;
use std::str::FromStr;

use strathom_core::KnotDiagram;

use crate::Result;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Format {
    #[default]
    Pd,
    Gauss,
    Dt,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Pd => "pd",
            Format::Gauss => "gauss",
            Format::Dt => "dt",
        })
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pd" => Ok(Format::Pd),
            "gauss" => Ok(Format::Gauss),
            "dt" => Ok(Format::Dt),
            other => Err(format!("unknown format `{other}`, expected pd, gauss or dt")),
        }
    }
}

pub fn parse_diagram(format: Format, text: &str) -> Result<KnotDiagram> {
    match format {
        Format::Pd => pd::parse(text),
        Format::Gauss => gauss::parse_diagram(text, false),
        Format::Dt => dt::parse(text),
    }
}

/// Lines with `#` comments stripped, numbered from 1, blank ones skipped.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// Line number of byte offset `pos` in `text`.
pub(crate) fn line_of(text: &str, pos: usize) -> usize {
    text[..pos].matches('\n').count() + 1
}
