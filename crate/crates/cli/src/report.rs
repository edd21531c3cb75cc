//! The comparison record emitted for every evaluation, in JSON or CSV.

use std::collections::BTreeMap;

use serde::Serialize;

/// One named comparison: what was computed, what the oracle said, and
/// how far apart they are. `params` is ordered so identical invocations
/// serialize identically.
#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    pub name: String,
    pub params: BTreeMap<String, f64>,
    pub series_value: f64,
    pub oracle_value: Option<f64>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub terms_used: Option<usize>,
    pub converged: bool,
    pub wall_time_ns: u128,
}

impl EvalReport {
    pub fn with_oracle(mut self, oracle: f64) -> Self {
        let abs = (self.series_value - oracle).abs();
        self.oracle_value = Some(oracle);
        self.abs_err = Some(abs);
        self.rel_err = Some(abs / oracle.abs().max(1e-300));
        self
    }
}

pub const CSV_HEADER: &str =
    "name,params,series_value,oracle_value,abs_err,rel_err,terms_used,converged,wall_time_ns";

/// RFC-4180 quoting: wrap in quotes when the field holds a comma, quote,
/// or newline, doubling any embedded quotes.
fn csv_quote(field: &str) -> String {
    if field.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn opt_f64(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn csv_row(r: &EvalReport) -> String {
    let params = r
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";");
    [
        csv_quote(&r.name),
        csv_quote(&params),
        r.series_value.to_string(),
        opt_f64(r.oracle_value),
        opt_f64(r.abs_err),
        opt_f64(r.rel_err),
        r.terms_used.map(|t| t.to_string()).unwrap_or_default(),
        r.converged.to_string(),
        r.wall_time_ns.to_string(),
    ]
    .join(",")
}

pub fn to_json_array(reports: &[EvalReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports contain no non-finite numbers")
}

pub fn to_csv(reports: &[EvalReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    for r in reports {
        out.push('\n');
        out.push_str(&csv_row(r));
    }
    out.push('\n');
    out
}
