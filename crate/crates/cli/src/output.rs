use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Serializes a report. Both formats keep enough digits to round-trip every `f64`.
pub fn render<T: Serialize>(value: &T, format: Format) -> String {
    let mut v = serde_json::to_value(value).expect("reports serialize to JSON");
    clear_negative_zero(&mut v);
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
            s.push('\n');
            s
        }
        Format::Text => render_text(&v),
    }
}

fn clear_negative_zero(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if n.as_f64() == Some(0.0) && n.as_f64().is_some_and(|x| x.is_sign_negative()) {
                *v = Value::from(0.0);
            }
        }
        Value::Array(a) => a.iter_mut().for_each(clear_negative_zero),
        Value::Object(o) => o.values_mut().for_each(clear_negative_zero),
        _ => {}
    }
}

/// One `path  value` line per leaf, keys padded to a common width, floats in `{:.16e}`.
fn render_text(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for (k, val) in rows {
        let pad = width - k.chars().count();
        out.push_str(&k);
        out.push_str(&" ".repeat(pad + 2));
        out.push_str(&val);
        out.push('\n');
    }
    out
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let join = |key: &str| {
        if prefix.is_empty() {
            key.to_string()
        } else {
            format!("{prefix}.{key}")
        }
    };
    match v {
        Value::Object(o) => o.iter().for_each(|(k, x)| flatten(&join(k), x, rows)),
        Value::Array(a) => a
            .iter()
            .enumerate()
            .for_each(|(i, x)| flatten(&format!("{prefix}[{i}]"), x, rows)),
        Value::Number(n) => {
            let s = match (n.as_i64(), n.as_f64()) {
                (Some(i), _) if !n.is_f64() => i.to_string(),
                (_, Some(x)) => format!("{x:.16e}"),
                _ => n.to_string(),
            };
            rows.push((prefix.to_string(), s));
        }
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        Value::Bool(b) => rows.push((prefix.to_string(), b.to_string())),
        Value::Null => rows.push((prefix.to_string(), "null".into())),
    }
}
