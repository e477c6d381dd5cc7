//! Rendering of command results as JSON or CSV.

use serde_json::Value;

/// A command result. `rows` names the array field that becomes the CSV
/// records; without it the top-level scalars and number lists form a
/// single record.
pub struct Out {
    pub value: Value,
    pub rows: Option<&'static str>,
}

impl Out {
    pub fn new(value: Value) -> Self {
        Out { value, rows: None }
    }

    pub fn table(value: Value, rows: &'static str) -> Self {
        Out { value, rows: Some(rows) }
    }
}

pub fn json(out: &Out, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(&out.value).expect("serializable")
    } else {
        serde_json::to_string(&out.value).expect("serializable")
    }
}

/// Cell text: strings bare, number arrays comma-joined, anything else as JSON.
fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(xs) if xs.iter().all(Value::is_number) => {
            xs.iter().map(Value::to_string).collect::<Vec<_>>().join(",")
        }
        other => other.to_string(),
    }
}

pub fn csv(out: &Out) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| e.to_string();
    let flat = |v: &Value| match v {
        Value::Object(_) => false,
        Value::Array(xs) => xs.iter().all(Value::is_number),
        _ => true,
    };
    let scalars = |o: &serde_json::Map<String, Value>| -> Vec<(String, String)> {
        o.iter().filter(|(_, v)| flat(v)).map(|(k, v)| (k.clone(), cell(v))).collect()
    };
    match (out.rows, &out.value) {
        (Some(key), Value::Object(o)) => {
            let items = o.get(key).and_then(Value::as_array).cloned().unwrap_or_default();
            match items.first() {
                Some(Value::Object(first)) => {
                    let header: Vec<&String> = first.keys().collect();
                    w.write_record(&header).map_err(err)?;
                    for it in &items {
                        let rec: Vec<String> =
                            header.iter().map(|h| it.get(h.as_str()).map(cell).unwrap_or_default()).collect();
                        w.write_record(&rec).map_err(err)?;
                    }
                }
                _ => {
                    w.write_record([key]).map_err(err)?;
                    for it in &items {
                        w.write_record([cell(it)]).map_err(err)?;
                    }
                }
            }
        }
        (_, Value::Object(o)) => {
            let s = scalars(o);
            w.write_record(s.iter().map(|(k, _)| k)).map_err(err)?;
            w.write_record(s.iter().map(|(_, v)| v)).map_err(err)?;
        }
        (_, v) => {
            w.write_record(["value"]).map_err(err)?;
            w.write_record([cell(v)]).map_err(err)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_rows_and_scalars() {
        let o = Out::table(
            json!({"vector": [{"label": "(6,2)", "a": 2, "b": 0}, {"label": "(7,1)", "a": 2, "b": 0}]}),
            "vector",
        );
        assert_eq!(csv(&o).unwrap(), "label,a,b\n\"(6,2)\",2,0\n\"(7,1)\",2,0\n");
        let o = Out::new(json!({"core": [7, 2], "weight": 1}));
        assert_eq!(csv(&o).unwrap(), "core,weight\n\"7,2\",1\n");
        let o = Out::table(json!({"partitions": [[4], [3, 1]]}), "partitions");
        assert_eq!(csv(&o).unwrap(), "partitions\n4\n\"3,1\"\n");
    }
}
