//! Canonical certificate JSON. Objects are `serde_json::Map`, which keeps
//! keys sorted, so equal certificates serialize to equal bytes.

use serde_json::{json, Value};
use strathom_core::certificate::KnotCertificate;
use strathom_core::homsearch::FiniteQuotientSignature;
use strathom_core::laurent::Laurent;

use crate::{Error, Result};

fn small(c: i128) -> Result<i64> {
    i64::try_from(c).map_err(|_| Error::Internal(format!("coefficient {c} does not fit in 64 bits")))
}

fn alexander(p: &Laurent) -> Result<Value> {
    let coefficients = p.coeffs().iter().map(|&c| small(c)).collect::<Result<Vec<_>>>()?;
    Ok(json!({ "coefficients": coefficients, "text": p.to_string() }))
}

fn signature(s: &FiniteQuotientSignature) -> Value {
    let peripheral: Vec<Value> = s
        .peripheral
        .iter()
        .map(|((m, l), n)| json!({ "meridian": m.0, "longitude": l.0, "count": n }))
        .collect();
    json!({ "target": s.target, "hom_count": s.hom_count, "peripheral": peripheral })
}

pub fn certificate_value(c: &KnotCertificate) -> Result<Value> {
    Ok(json!({
        "abelianization": { "rank": c.abelianization.rank, "torsion": c.abelianization.torsion },
        "alexander": alexander(&c.alexander)?,
        "peripheral_checks": {
            "meridian_generates": c.peripheral_checks.meridian_generates,
            "longitude_null": c.peripheral_checks.longitude_null,
        },
        "quotient_signatures": c.quotient_signatures.iter().map(signature).collect::<Vec<_>>(),
    }))
}

/// Compact single-line JSON.
pub fn certificate_json(c: &KnotCertificate) -> Result<String> {
    Ok(certificate_value(c)?.to_string())
}
