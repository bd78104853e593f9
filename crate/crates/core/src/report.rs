//! Versioned JSON envelope shared by every command.

use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "frobsing/1";

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: Vec<String>,
    pub result: Value,
    /// Disagreements with recorded claims; never dropped.
    pub flags: Vec<String>,
    pub timing: Timing,
}

impl Report {
    pub fn new<T: Serialize>(command: Vec<String>, result: &T) -> Self {
        Report {
            schema: SCHEMA,
            command,
            result: serde_json::to_value(result).expect("report payloads serialize"),
            flags: Vec::new(),
            timing: Timing { elapsed_ms: 0 },
        }
    }

    pub fn with_flags(mut self, flags: Vec<String>) -> Self {
        self.flags = flags;
        self
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.timing.elapsed_ms = elapsed.as_millis() as u64;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report without its timing field, for byte-level comparisons.
    pub fn to_json_untimed(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Value::Object(map) = &mut v {
            map.remove("timing");
        }
        serde_json::to_string_pretty(&v).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    #[test]
    fn rationals_are_strings() {
        let r = Report::new(vec!["fpt".into()], &vec![Rational::new(5, 6), Rational::from_int(2)]);
        let json = r.to_json_untimed();
        assert!(json.contains("\"5/6\""));
        assert!(json.contains("\"2/1\""));
        assert!(json.contains("\"schema\": \"frobsing/1\""));
        assert!(!json.contains("timing"));
    }
}
