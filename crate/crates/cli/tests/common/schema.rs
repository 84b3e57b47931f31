//! The subset of JSON Schema used by the shipped schemas: `type`, `enum`,
//! `properties`, `required`, `additionalProperties`, `items`, `minimum`,
//! `pattern`, `oneOf` and local `$ref`s into `$defs`.

use regex::Regex;
use serde_json::Value;

pub fn validate(schema: &Value, doc: &Value) -> Result<(), String> {
    check(schema, schema, doc, "$")
}

fn check(root: &Value, s: &Value, v: &Value, at: &str) -> Result<(), String> {
    let Some(s) = s.as_object() else { return Ok(()) };
    if let Some(r) = s.get("$ref").and_then(Value::as_str) {
        let name = r.strip_prefix("#/$defs/").ok_or_else(|| format!("unsupported $ref {r}"))?;
        let target = root.get("$defs").and_then(|d| d.get(name)).ok_or_else(|| format!("missing def {name}"))?;
        return check(root, target, v, at);
    }
    if let Some(t) = s.get("type").and_then(Value::as_str) {
        let ok = match t {
            "object" => v.is_object(),
            "array" => v.is_array(),
            "string" => v.is_string(),
            "integer" => v.is_i64() || v.is_u64(),
            "number" => v.is_number(),
            "boolean" => v.is_boolean(),
            "null" => v.is_null(),
            other => return Err(format!("unsupported type {other}")),
        };
        if !ok {
            return Err(format!("{at}: expected {t}, got {v}"));
        }
    }
    if let Some(e) = s.get("enum").and_then(Value::as_array) {
        if !e.contains(v) {
            return Err(format!("{at}: {v} not in {e:?}"));
        }
    }
    if let (Some(min), Some(x)) = (s.get("minimum").and_then(Value::as_i64), v.as_i64()) {
        if x < min {
            return Err(format!("{at}: {x} < {min}"));
        }
    }
    if let (Some(p), Some(x)) = (s.get("pattern").and_then(Value::as_str), v.as_str()) {
        if !Regex::new(p).map_err(|e| e.to_string())?.is_match(x) {
            return Err(format!("{at}: `{x}` does not match {p}"));
        }
    }
    if let Some(alts) = s.get("oneOf").and_then(Value::as_array) {
        let hits = alts.iter().filter(|a| check(root, a, v, at).is_ok()).count();
        if hits != 1 {
            return Err(format!("{at}: matches {hits} alternatives of oneOf"));
        }
    }
    if let (Some(items), Some(xs)) = (s.get("items"), v.as_array()) {
        for (i, x) in xs.iter().enumerate() {
            check(root, items, x, &format!("{at}[{i}]"))?;
        }
    }
    if let Some(map) = v.as_object() {
        let props = s.get("properties").and_then(Value::as_object);
        for req in s.get("required").and_then(Value::as_array).into_iter().flatten() {
            let k = req.as_str().unwrap_or_default();
            if !map.contains_key(k) {
                return Err(format!("{at}: missing `{k}`"));
            }
        }
        for (k, x) in map {
            match props.and_then(|p| p.get(k)) {
                Some(sub) => check(root, sub, x, &format!("{at}.{k}"))?,
                None => match s.get("additionalProperties") {
                    Some(Value::Bool(false)) => return Err(format!("{at}: unexpected key `{k}`")),
                    Some(sub @ Value::Object(_)) => check(root, sub, x, &format!("{at}.{k}"))?,
                    _ => {}
                },
            }
        }
    }
    Ok(())
}
