//! JSON output for the `sl2z` subcommands.

use grouprings_core::sl2z::{
    congruence_level, in_v, nilpotent2x2, triangle_quotient_is_finite, unipotent_normal_form, IntMat2, Sl2Error,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::report::{timestamp, ARTIFACT_VERSION, SCHEMA_VERSION};

fn envelope(op: &str, body: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "artifact_version": ARTIFACT_VERSION,
        "command": format!("sl2z {op}"),
        "timestamp": timestamp(),
        "result": body,
    })
}

fn matrix(s: &str) -> Result<IntMat2, Sl2Error> {
    s.parse()
}

pub fn normalize(m: &str) -> Result<Value, Sl2Error> {
    let u = matrix(m)?;
    let (s, k) = unipotent_normal_form(&u)?;
    Ok(envelope("normalize", json!({ "input": u.to_string(), "s": s.to_string(), "m": k.to_string() })))
}

pub fn level(m: &str) -> Result<Value, Sl2Error> {
    let u = matrix(m)?;
    Ok(envelope("level", json!({ "input": u.to_string(), "level": congruence_level(&u)?.to_string() })))
}

pub fn in_v_cmd(m: &str, level: &BigInt) -> Result<Value, Sl2Error> {
    let u = matrix(m)?;
    Ok(envelope("in-v", json!({ "input": u.to_string(), "level": level.to_string(), "member": in_v(&u, level)? })))
}

pub fn nilpotent(m: &str) -> Result<Value, Sl2Error> {
    let u = matrix(m)?;
    Ok(envelope("nilpotent", json!({ "input": u.to_string(), "nilpotent": nilpotent2x2(&u) })))
}

pub fn triangle(n: u64) -> Result<Value, Sl2Error> {
    Ok(envelope("triangle", json!({ "n": n, "finite": triangle_quotient_is_finite(n)? })))
}
