//! Line-oriented JSON reports: one self-describing object per line.

use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

/// Output format selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Json,
}

/// Build one report line. `fields` must be a JSON object.
pub fn line(command: &str, record: &str, fields: Value) -> String {
    let mut obj = Map::new();
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    obj.insert("tool".into(), json!("igeo"));
    obj.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    obj.insert("command".into(), json!(command));
    obj.insert("record".into(), json!(record));
    if let Value::Object(extra) = fields {
        obj.extend(extra);
    }
    Value::Object(obj).to_string()
}

/// A float that survives JSON: non-finite values become strings.
pub fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        json!(x.to_string())
    }
}
