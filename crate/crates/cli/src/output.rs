use clap::ValueEnum;
use serde_json::{json, Value};
use tymrep::{Ring, RingMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Command output and whether the command's check succeeded.
pub struct Report {
    pub out: String,
    pub ok: bool,
}

impl Report {
    pub fn ok(out: String) -> Self {
        Report { out, ok: true }
    }

    pub fn json(v: &Value, ok: bool) -> Self {
        let mut out = serde_json::to_string_pretty(v).expect("serializable");
        out.push('\n');
        Report { out, ok }
    }
}

pub fn matrix_json<R: Ring>(m: &RingMatrix<R>) -> Value {
    let entries: Vec<Vec<String>> =
        (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

pub fn int_table(rows: &[Vec<i64>]) -> String {
    rows.iter().map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" ") + "\n").collect()
}

pub fn mark(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
