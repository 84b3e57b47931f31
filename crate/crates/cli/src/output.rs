//! Machine output is compact JSON with sorted keys; `--pretty` renders tables.

use std::collections::BTreeSet;

use serde_json::Value;

pub fn render(v: &Value, pretty: bool) -> String {
    if !pretty {
        // serde_json's default map is ordered by key
        return v.to_string();
    }
    match v {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            map.iter().map(|(k, x)| format!("{k:<width$}  {}", cell(x))).collect::<Vec<_>>().join("\n")
        }
        Value::Array(rows) if rows.iter().all(Value::is_object) && !rows.is_empty() => table(rows),
        other => cell(other),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            format!("({})", xs.iter().map(cell).collect::<Vec<_>>().join(", "))
        }
        Value::Array(xs) => format!("[{} rows]", xs.len()),
        other => other.to_string(),
    }
}

fn table(rows: &[Value]) -> String {
    let cols: Vec<String> = rows
        .iter()
        .flat_map(|r| r.as_object().into_iter().flat_map(|m| m.keys().cloned()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let body: Vec<Vec<String>> =
        rows.iter().map(|r| cols.iter().map(|c| r.get(c).map(cell).unwrap_or_default()).collect()).collect();
    let widths: Vec<usize> =
        cols.iter().enumerate().map(|(i, c)| body.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0)).collect();
    let line = |cells: &[String]| {
        cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
    };
    let mut out = vec![line(&cols)];
    out.push(widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  "));
    out.extend(body.iter().map(|r| line(r)));
    out.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn compact_output_sorts_keys() {
        assert_eq!(render(&json!({"b": 1, "a": [1, 2]}), false), r#"{"a":[1,2],"b":1}"#);
    }

    #[test]
    fn pretty_tables() {
        let t = render(&json!([{"chart": "z=1", "milnor": 1}, {"chart": "y=1", "milnor": 2}]), true);
        assert_eq!(t.lines().count(), 4);
        assert!(t.starts_with("chart  milnor"));
        assert_eq!(render(&json!({"ord": 4, "pass": true}), true), "ord   4\npass  true");
    }
}
