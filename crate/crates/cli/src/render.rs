//! Plain-text rendering of serialized reports, so text and JSON output
//! carry the same fields in the same order.

use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => Some(format!(
            "[{}]",
            a.iter()
                .map(|x| scalar(x).unwrap_or_default())
                .collect::<Vec<_>>()
                .join(", ")
        )),
        Value::Array(a)
            if a.iter().all(|x| {
                x.as_array()
                    .is_some_and(|inner| inner.iter().all(|y| !y.is_object() && !y.is_array()))
            }) =>
        {
            Some(format!(
                "[{}]",
                a.iter()
                    .map(|x| scalar(x).unwrap_or_default())
                    .collect::<Vec<_>>()
                    .join(", ")
            ))
        }
        _ => None,
    }
}

fn object(out: &mut String, map: &serde_json::Map<String, Value>, indent: usize) {
    for (k, v) in map {
        let pad = "  ".repeat(indent);
        if let Some(s) = scalar(v) {
            out.push_str(&format!("{pad}{k}: {s}\n"));
            continue;
        }
        out.push_str(&format!("{pad}{k}:\n"));
        match v {
            Value::Object(m) => object(out, m, indent + 1),
            Value::Array(items) => {
                for item in items {
                    match item {
                        Value::Object(m) => {
                            let mut inner = String::new();
                            object(&mut inner, m, 0);
                            for (i, line) in inner.lines().enumerate() {
                                let lead = if i == 0 { "- " } else { "  " };
                                out.push_str(&format!("{pad}  {lead}{line}\n"));
                            }
                        }
                        other => out
                            .push_str(&format!("{pad}  - {}\n", scalar(other).unwrap_or_default())),
                    }
                }
            }
            _ => unreachable!("scalars handled above"),
        }
    }
}

pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(m) => object(&mut out, m, 0),
        other => {
            out.push_str(&scalar(other).unwrap_or_default());
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested() {
        let v =
            json!({"a": 1, "b": {"c": true, "d": null}, "e": [1, 2], "f": [{"g": "h", "i": [3]}]});
        assert_eq!(
            to_text(&v),
            "a: 1\nb:\n  c: yes\n  d: -\ne: [1, 2]\nf:\n  - g: h\n    i: [3]\n"
        );
    }
}
