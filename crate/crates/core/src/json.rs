//! Stable JSON views of derivations, endomorphisms, and reports.
//!
//! Polynomials appear as canonical grammar strings, so every value can be
//! re-parsed with `parse_poly`.

use serde_json::{json, Map, Value};

use crate::derivation::{Derivation, PolyEndomorphism};
use crate::error::Error;
use crate::kernel::{KernelPresentation, LinearChangeOfBasis};
use crate::transform::{CheckMode, InvarianceReport, Verdict, Witness};

/// {"images": {"x1": "...", ...}, "bound": n} with zero images omitted.
pub fn derivation_json(d: &Derivation, upto: u32) -> Result<Value, Error> {
    let mut images = Map::new();
    for i in 0..=upto {
        let img = d.image(i)?;
        if !img.is_zero() {
            images.insert(format!("x{i}"), Value::String(img.to_string()));
        }
    }
    Ok(json!({
        "images": Value::Object(images),
        "bound": d.support_bound().unwrap_or(upto),
    }))
}

/// {"images": {...}} over the declared (non-identity) images.
pub fn endomorphism_json(e: &PolyEndomorphism) -> Value {
    let mut images = Map::new();
    for (v, p) in e.images() {
        images.insert(v.to_string(), Value::String(p.to_string()));
    }
    json!({ "images": Value::Object(images) })
}

/// {"bound": n, "images": {...}, "table": [[n, i, c], ...]} with the
/// nonzero coefficients c_{n,i} as strings.
pub fn intertwiner_json(psi: &LinearChangeOfBasis) -> Value {
    use num_traits::Zero;
    let mut images = Map::new();
    let mut table = Vec::new();
    for n in 0..=psi.bound() {
        images.insert(
            format!("x{n}"),
            Value::String(psi.image(n).expect("within bound").to_string()),
        );
        for i in 0..=n {
            let c = psi.coeff(n, i);
            if !c.is_zero() {
                table.push(json!([n, i, c.to_string()]));
            }
        }
    }
    json!({
        "bound": psi.bound(),
        "images": Value::Object(images),
        "table": Value::Array(table),
    })
}

/// {"derivation": {...}, "generators": [{"name": ..., "poly": ...}, ...]}.
pub fn kernel_presentation_json(k: &KernelPresentation) -> Result<Value, Error> {
    let bound = k.intertwiner.bound();
    let generators: Vec<Value> = k
        .generators
        .iter()
        .map(|(name, poly)| json!({ "name": name, "poly": poly.to_string() }))
        .collect();
    Ok(json!({
        "derivation": derivation_json(&k.derivation, bound)?,
        "generators": generators,
    }))
}

pub fn report_json(r: &InvarianceReport) -> Value {
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|w| match w {
            Witness::Residual { term, residual } => json!({
                "type": "residual",
                "term": term,
                "residual": residual.to_string(),
            }),
            Witness::Sample {
                sample,
                input,
                second,
                differs_at,
            } => {
                let seq_strings = |s: &crate::transform::Sequence| {
                    Value::Array(
                        s.terms()
                            .iter()
                            .map(|t| Value::String(t.to_string()))
                            .collect(),
                    )
                };
                let mut obj = Map::new();
                obj.insert("type".into(), "sample".into());
                obj.insert("sample".into(), (*sample).into());
                obj.insert("input".into(), seq_strings(input));
                if let Some(c) = second {
                    obj.insert("second".into(), seq_strings(c));
                }
                obj.insert("differs_at".into(), (*differs_at).into());
                Value::Object(obj)
            }
        })
        .collect();
    let mut obj = Map::new();
    obj.insert(
        "mode".into(),
        match r.mode {
            CheckMode::Symbolic => "symbolic",
            CheckMode::Numeric => "numeric",
        }
        .into(),
    );
    obj.insert(
        "verdict".into(),
        match r.verdict {
            Verdict::Invariant => "invariant",
            Verdict::NotInvariant => "not-invariant",
            Verdict::Inconclusive => "inconclusive",
        }
        .into(),
    );
    obj.insert("checked_up_to".into(), r.checked_upto.into());
    if let Some(s) = r.samples {
        obj.insert("samples".into(), s.into());
    }
    obj.insert("witnesses".into(), Value::Array(witnesses));
    if let Some(note) = &r.note {
        obj.insert("note".into(), Value::String(note.clone()));
    }
    Value::Object(obj)
}
