//! JSON serialization for the core domain types and atomic report writes.
//!
//! K-class coefficients are emitted as JSON numbers when they fit in i64
//! and as decimal strings beyond that, and both forms are accepted back.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use toruschar_core::census::{ComponentDescriptor, Group, StratumTag, Variant};
use toruschar_core::knotpoly::CurveSpec;
use toruschar_core::labels::EigenLabel;
use toruschar_core::latquot::{IntMatrix, QuotientBasis};
use toruschar_core::oracle::LabelSet;
use toruschar_core::KClass;

fn bigint_value(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn bigint_from_value(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(|| anyhow!("non-integer coefficient {n}"))?;
            Ok(BigInt::from(i))
        }
        Value::String(s) => s.parse().with_context(|| format!("bad coefficient {s:?}")),
        other => bail!("coefficient must be a number or string, got {other}"),
    }
}

pub fn kclass_to_json(c: &KClass) -> Value {
    json!({ "coeffs": c.coeffs().iter().map(bigint_value).collect::<Vec<_>>() })
}

pub fn kclass_from_json(v: &Value) -> Result<KClass> {
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("expected object with a \"coeffs\" array"))?;
    let parsed: Result<Vec<BigInt>> = coeffs.iter().map(bigint_from_value).collect();
    Ok(KClass::from_coeffs(parsed?))
}

pub fn group_name(g: Group) -> &'static str {
    match g {
        Group::Sl => "sl",
        Group::Gl => "gl",
        Group::Pgl => "pgl",
    }
}

pub fn parse_group(s: &str) -> Result<Group> {
    match s {
        "sl" => Ok(Group::Sl),
        "gl" => Ok(Group::Gl),
        "pgl" => Ok(Group::Pgl),
        other => bail!("unknown group {other:?} (expected sl, gl or pgl)"),
    }
}

pub fn tag_name(t: StratumTag) -> &'static str {
    match t {
        StratumTag::TotallyReducible => "totally_reducible",
        StratumTag::PartialType1 => "partial_type1",
        StratumTag::PartialType2 => "partial_type2",
        StratumTag::IrreducibleDim4 => "irreducible_dim4",
        StratumTag::IrreducibleDim2 => "irreducible_dim2",
    }
}

pub fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::Plain => "plain",
        Variant::Mu3FixedSurface => "mu3_fixed_surface",
        Variant::Mu3FixedMaxDim => "mu3_fixed_max_dim",
        Variant::Mu2Fixed => "mu2_fixed",
    }
}

pub fn label_to_json(l: &EigenLabel) -> Value {
    json!({
        "order": l.order(),
        "a_exps": l.a_exps(),
        "b_exps": l.b_exps(),
    })
}

pub fn descriptor_to_json(d: &ComponentDescriptor) -> Value {
    json!({
        "kind": { "tag": tag_name(d.kind.tag), "variant": variant_name(d.kind.variant) },
        "group": group_name(d.group),
        "rank": d.rank,
        "dimension": d.dimension,
        "eigen_label": d.eigen_label.as_ref().map(label_to_json),
        "kclass": kclass_to_json(&d.kclass),
        "kclass_pretty": d.kclass.pretty(),
        "chart": d.chart,
    })
}

pub fn label_set_to_json(ls: &LabelSet) -> Value {
    json!({
        "count": ls.labels.len(),
        "labels": ls.labels.iter().map(label_to_json).collect::<Vec<_>>(),
    })
}

pub fn curve_to_json(c: &CurveSpec) -> Value {
    json!({
        "m": c.m,
        "n": c.n,
        "k": c.k,
        "c": c.c,
        "coeffs": c.quartic_coeffs(),
        "component_key": c.component_key,
    })
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    let rows: Vec<Vec<Value>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| bigint_value(m.get(i, j))).collect())
        .collect();
    json!(rows)
}

pub fn quotient_to_json(q: &QuotientBasis, weights: &[i64], r: u64, verified: bool) -> Value {
    json!({
        "weights": weights,
        "r": r,
        "matrix": matrix_to_json(&q.matrix),
        "effective_r": q.effective_r,
        "effective_weights": q.effective_weights,
        "reduced": q.reduced,
        "trivial": q.trivial,
        "generator_renormalized": q.generator_renormalized,
        "verified": verified,
    })
}

/// Writes via a temp file in the target directory plus rename, so readers
/// never observe a half-written report.
pub fn write_atomic(path: &Path, value: &Value) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .with_context(|| format!("cannot create temp file in {}", dir.display()))?;
    serde_json::to_writer_pretty(&mut tmp, value)?;
    tmp.persist(path)
        .with_context(|| format!("cannot persist report to {}", path.display()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use toruschar_core::kclass;
    use toruschar_core::KnotParams;

    #[test]
    fn kclass_roundtrip() {
        let c = kclass::kclass_sl(3, &KnotParams::new(3, 5).unwrap()).unwrap();
        let v = kclass_to_json(&c);
        assert_eq!(kclass_from_json(&v).unwrap(), c);
    }

    #[test]
    fn big_coefficients_roundtrip_as_strings() {
        let huge: BigInt = BigInt::from(u64::MAX) * BigInt::from(u64::MAX);
        let c = KClass::from_coeffs(vec![BigInt::from(1), huge.clone()]);
        let v = kclass_to_json(&c);
        assert_eq!(v["coeffs"][1], json!(huge.to_string()));
        assert_eq!(kclass_from_json(&v).unwrap(), c);
    }

    #[test]
    fn descriptor_schema_fields() {
        let strata = toruschar_core::census::census_sl(
            3,
            &KnotParams::new(3, 4).unwrap(),
            toruschar_core::oracle::DEFAULT_BUDGET,
        )
        .unwrap();
        let v = descriptor_to_json(&strata[0]);
        for key in ["kind", "group", "rank", "dimension", "eigen_label", "kclass", "chart"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
    }

    #[test]
    fn atomic_write_creates_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("report.json");
        write_atomic(&path, &json!({"ok": true})).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.contains("\"ok\""));
    }
}
