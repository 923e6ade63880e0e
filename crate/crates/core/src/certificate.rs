//! Per-knot certificates and their comparison.
//!
//! A certificate collects invariants of the peripheral system that can be
//! computed exactly: the abelianization, the Alexander polynomial, and for
//! each symmetric group `S_k` the number of homomorphisms together with
//! the cycle types taken by the meridian and longitude.
//!
//! Comparison is one-way. A `Distinct` verdict names a field where the
//! certificates differ, which proves the knots inequivalent. Agreement on
//! every field proves nothing.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::KnotDiagram;
use crate::fox::{alexander_polynomial, AlexanderError};
use crate::homsearch::{hom_search, FiniteQuotientSignature, HomSearchError, SearchOptions};
use crate::knot_group::peripheral_system_at;
use crate::laurent::Laurent;
use crate::presentation::Abelianization;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CertificateConfig {
    /// Largest `k` with an `S_k` quotient signature; targets are
    /// `S_3 ..= S_depth`, so depth 1 or 2 means none. At most 5.
    pub quotient_depth: usize,
    /// Arc carrying the meridian and the longitude's starting point.
    pub base_arc: usize,
}

impl Default for CertificateConfig {
    fn default() -> Self {
        CertificateConfig { quotient_depth: 5, base_arc: 1 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PeripheralChecks {
    pub meridian_generates: bool,
    pub longitude_null: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KnotCertificate {
    pub abelianization: Abelianization,
    /// Normalized, and the smaller of `Δ(t)` and `Δ(1/t)` so that mirror
    /// images agree.
    pub alexander: Laurent,
    pub quotient_signatures: Vec<FiniteQuotientSignature>,
    pub peripheral_checks: PeripheralChecks,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateError {
    Alexander(AlexanderError),
    HomSearch(HomSearchError),
    Depth(usize),
    BaseArc(usize),
}

impl fmt::Display for CertificateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateError::Alexander(e) => write!(f, "{e}"),
            CertificateError::HomSearch(e) => write!(f, "{e}"),
            CertificateError::Depth(d) => write!(f, "quotient depth {d} outside 1..=5"),
            CertificateError::BaseArc(a) => write!(f, "base arc {a} is not an arc of the diagram"),
        }
    }
}

impl core::error::Error for CertificateError {}

impl From<AlexanderError> for CertificateError {
    fn from(e: AlexanderError) -> Self {
        CertificateError::Alexander(e)
    }
}

impl From<HomSearchError> for CertificateError {
    fn from(e: HomSearchError) -> Self {
        CertificateError::HomSearch(e)
    }
}

fn mirror_canonical(p: &Laurent) -> Laurent {
    let a = p.normalize();
    let b = p.mirror().normalize();
    if b.coeffs() < a.coeffs() {
        b
    } else {
        a
    }
}

pub fn certificate(d: &KnotDiagram, cfg: &CertificateConfig) -> Result<KnotCertificate, CertificateError> {
    if !(1..=5).contains(&cfg.quotient_depth) {
        return Err(CertificateError::Depth(cfg.quotient_depth));
    }
    if cfg.base_arc == 0 || cfg.base_arc > d.arc_count() {
        return Err(CertificateError::BaseArc(cfg.base_arc));
    }
    let ps = peripheral_system_at(d, cfg.base_arc);
    let (meridian_generates, longitude_null) = match ps.homology_images() {
        Some((m, l)) => (m == 1, l == 0),
        None => (false, false),
    };
    let simplified = ps.group().tietze_simplify_tracked();
    let g = &simplified.presentation;
    let m = simplified.map_word(&ps.meridian).free_reduce();
    let l = simplified.map_word(&ps.longitude).free_reduce();
    let abelianization = g.abelianization();
    let alexander = mirror_canonical(&alexander_polynomial(g, &m)?);
    // survivors of the simplification are Wirtinger generators, all meridians
    let opts = SearchOptions { all_generators_conjugate: true };
    let mut quotient_signatures = Vec::new();
    for k in 3..=cfg.quotient_depth {
        quotient_signatures.push(hom_search(g, k, &m, &l, opts)?);
    }
    Ok(KnotCertificate {
        abelianization,
        alexander,
        quotient_signatures,
        peripheral_checks: PeripheralChecks { meridian_generates, longitude_null },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComparisonVerdict {
    /// The named field differs; the knots are not equivalent.
    Distinct { witness: String },
    /// Every compared field agrees. Not a proof of equivalence.
    Indistinguishable { levels: Vec<String> },
}

impl ComparisonVerdict {
    pub fn is_distinct(&self) -> bool {
        matches!(self, ComparisonVerdict::Distinct { .. })
    }
}

impl fmt::Display for ComparisonVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComparisonVerdict::Distinct { witness } => write!(f, "Distinct({witness})"),
            ComparisonVerdict::Indistinguishable { levels } => {
                write!(f, "Indistinguishable({})", levels.join(","))
            }
        }
    }
}

/// Fields in order: alexander, then hom counts per target, then
/// peripheral signatures per target. Targets present in only one
/// certificate are skipped.
pub fn compare(c1: &KnotCertificate, c2: &KnotCertificate) -> ComparisonVerdict {
    let distinct = |w: String| ComparisonVerdict::Distinct { witness: w };
    if c1.abelianization != c2.abelianization {
        return distinct("abelianization".into());
    }
    if c1.alexander != c2.alexander {
        return distinct("alexander".into());
    }
    let mut levels: Vec<String> = alloc::vec!["alexander".into()];
    let shared: Vec<(&FiniteQuotientSignature, &FiniteQuotientSignature)> = c1
        .quotient_signatures
        .iter()
        .filter_map(|a| c2.quotient_signatures.iter().find(|b| b.target == a.target).map(|b| (a, b)))
        .collect();
    for (a, b) in &shared {
        if a.hom_count != b.hom_count {
            return distinct(format!("hom_count[{}]", a.target));
        }
        levels.push(format!("hom_count[{}]", a.target));
    }
    for (a, b) in &shared {
        if a.peripheral != b.peripheral {
            return distinct(format!("peripheral_signature[{}]", a.target));
        }
        levels.push(format!("peripheral_signature[{}]", a.target));
    }
    ComparisonVerdict::Indistinguishable { levels }
}
