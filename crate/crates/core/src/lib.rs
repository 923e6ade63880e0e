//! Combinatorial core for stratified spaces over a finite poset and for the
//! peripheral-system invariant of knots.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable values; IO, text formats and the command-line
//! front end live in the companion `strathom` crate.
//!
//! Layout:
//!
//!  - [`poset`]: finite posets, chains, the nerve and the reduced chain category.
//!  - [`filtered`]: finite simplicial sets over the nerve, filtered maps,
//!    pointings and strata extraction.
//!  - [`diagram`] and [`moves`]: PD / Gauss / DT knot diagrams and Reidemeister moves.
//!  - [`word`], [`presentation`], [`snf`], [`laurent`], [`fox`], [`perm`],
//!    [`homsearch`]: finitely presented group tooling.
//!  - [`knot_group`]: Wirtinger presentation, meridian/longitude and the
//!    two-legged stratified fundamental group diagram.
//!  - [`certificate`]: per-knot certificates and their comparison.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod certificate;
pub mod diagram;
pub mod filtered;
pub mod fox;
pub mod homsearch;
pub mod knot_group;
pub mod laurent;
pub mod moves;
pub mod perm;
pub mod poset;
pub mod presentation;
pub mod snf;
pub mod word;

pub use certificate::{certificate, compare, CertificateConfig, ComparisonVerdict, KnotCertificate};
pub use diagram::{Crossing, GaussCode, KnotDiagram, Sign};
pub use knot_group::{peripheral_system, stratified_pi1, wirtinger, PeripheralSystem, SPi1Diagram};
pub use poset::{ChainSimplex, Poset};
pub use presentation::GroupPresentation;
pub use word::Word;
