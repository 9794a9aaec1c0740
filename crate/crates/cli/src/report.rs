use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// Named inputs of one invocation, hashed into the report's `inputs` digest.
#[derive(Default)]
pub struct InputLog {
    entries: Vec<(String, Vec<u8>)>,
}

impl InputLog {
    pub fn record(&mut self, name: &str, bytes: &[u8]) {
        self.entries.push((name.to_string(), bytes.to_vec()));
    }

    /// SHA-256 over `name, len, bytes` of every entry in order, as lowercase hex.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        for (name, bytes) in &self.entries {
            h.update(name.as_bytes());
            h.update([0]);
            h.update((bytes.len() as u64).to_le_bytes());
            h.update(bytes);
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

pub fn build(command: &[String], inputs: &InputLog, results: Value, seed: Option<u64>) -> Value {
    json!({
        "command": command.join(" "),
        "inputs": inputs.digest(),
        "results": results,
        "seed": seed,
        "version": env!("CARGO_PKG_VERSION"),
    })
}

/// Pretty JSON with sorted object keys and a trailing newline.
pub fn emit(report: &Value) -> String {
    // serde_json's default map is ordered by key, so the output is canonical.
    let mut s = serde_json::to_string_pretty(report).expect("JSON values always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted_and_bytes_stable() {
        let mut log = InputLog::default();
        log.record("H", b"1,3,1");
        let r = build(&["oseq".into(), "si".into()], &log, json!({"z": 1, "a": [1, 3, 1]}), None);
        let a = emit(&r);
        assert_eq!(a, emit(&r));
        let keys: Vec<usize> = ["command", "inputs", "results", "seed", "version"]
            .iter()
            .map(|k| a.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert!(a.find("\"a\"").unwrap() < a.find("\"z\"").unwrap());
    }

    #[test]
    fn digest_depends_on_content_only() {
        let mut a = InputLog::default();
        a.record("f", b"{}");
        let mut b = InputLog::default();
        b.record("f", b"{}");
        assert_eq!(a.digest(), b.digest());
        b.record("j", b"6");
        assert_ne!(a.digest(), b.digest());
    }
}
