use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// The JSON document every subcommand can emit. Counts are decimal strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub query: Map<String, Value>,
    pub method: String,
    pub value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matches: Option<Value>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(query: Map<String, Value>, method: &str, value: impl ToString) -> Self {
        Self {
            query,
            method: method.to_string(),
            value: value.to_string(),
            values: None,
            matches: None,
            elapsed_ms: 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}
