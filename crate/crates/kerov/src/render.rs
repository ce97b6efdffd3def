//! JSON shapes shared by the commands. Keys are fixed; exact values are
//! strings so that no precision is lost.

use kerov_core::kerov::{DegreeReport, KerovPolynomial};
use kerov_core::plancherel::{SampleStats, Summary};
use serde_json::{json, Value as Json};

use crate::alpha::Value;
use crate::parallel::SampleRow;

pub fn value_json(v: &Value) -> Json {
    match v {
        Value::Exact(_) => Json::String(v.to_string()),
        Value::Float(x) => json!(x),
    }
}

pub fn kerov_json(k: &KerovPolynomial, report: &DegreeReport) -> Json {
    let terms: Vec<Json> = k
        .terms()
        .into_iter()
        .map(|(rho, c)| json!({ "rho": rho.to_string(), "coeff": c.render() }))
        .collect();
    json!({
        "mu": k.mu().to_string(),
        "basis": k.basis().letter().to_string(),
        "terms": terms,
        "degree_report": degree_report_json(report),
    })
}

pub fn degree_report_json(report: &DegreeReport) -> Json {
    let records: Vec<Json> = report
        .records
        .iter()
        .map(|r| {
            json!({
                "rho": r.rho.to_string(),
                "degree": r.degree,
                "bound": r.bound,
                "within_bound": r.within_bound,
                "parity_ok": r.parity_ok,
            })
        })
        .collect();
    json!({ "passed": report.passed(), "records": records })
}

pub fn summary_json(s: &Summary) -> Json {
    json!({
        "count": s.count,
        "mean": s.mean,
        "min": s.min,
        "q05": s.q05,
        "q25": s.q25,
        "median": s.median,
        "q75": s.q75,
        "q95": s.q95,
        "max": s.max,
    })
}

pub const SAMPLE_COLUMNS: [&str; 11] = [
    "n", "alpha", "seed", "sup_dist", "R2", "R3", "R4", "R5", "R6", "rows_scaled", "cols_scaled",
];

/// The per-sample columns after `n`, `alpha`, `seed`.
fn stat_columns(s: &SampleStats) -> [f64; 8] {
    let r = s.cumulants;
    [s.sup_dist, r[0], r[1], r[2], r[3], r[4], s.rows_scaled, s.cols_scaled]
}

pub fn samples_csv(rows: &[SampleRow]) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SAMPLE_COLUMNS).map_err(|e| e.to_string())?;
    for row in rows {
        let mut rec = vec![row.stats.n.to_string(), row.stats.alpha.to_string(), row.seed.to_string()];
        rec.extend(stat_columns(&row.stats).iter().map(f64::to_string));
        w.write_record(&rec).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

/// Quantile summaries of every statistic column.
pub fn samples_summary(rows: &[SampleRow]) -> Json {
    let mut out = serde_json::Map::new();
    for (i, name) in SAMPLE_COLUMNS[3..].iter().enumerate() {
        let xs: Vec<f64> = rows.iter().map(|r| stat_columns(&r.stats)[i]).collect();
        out.insert((*name).to_string(), Summary::of(&xs).map_or(Json::Null, |s| summary_json(&s)));
    }
    Json::Object(out)
}

pub fn samples_summary_text(rows: &[SampleRow]) -> String {
    let mut out = format!("{:<12} {:>10} {:>10} {:>10} {:>10} {:>10}\n", "statistic", "mean", "q05", "median", "q95", "max");
    for (i, name) in SAMPLE_COLUMNS[3..].iter().enumerate() {
        let xs: Vec<f64> = rows.iter().map(|r| stat_columns(&r.stats)[i]).collect();
        if let Some(s) = Summary::of(&xs) {
            out.push_str(&format!(
                "{:<12} {:>10.5} {:>10.5} {:>10.5} {:>10.5} {:>10.5}\n",
                name, s.mean, s.q05, s.median, s.q95, s.max
            ));
        }
    }
    out
}
