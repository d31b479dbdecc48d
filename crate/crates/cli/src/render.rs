//! Text, JSON and CSV renderings of the command outputs.

use std::collections::BTreeMap;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::{json, Value};

use confcoh::qformula::MixedTable;
use confcoh::series::TriSeries;
use confcoh::verify::VerifyReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Integers as JSON numbers when they fit in 64 bits, decimal strings otherwise.
pub fn big(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn pretty(v: &Value) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

pub fn series(q: &TriSeries, genus: u32, dims: bool, format: Format) -> anyhow::Result<String> {
    let q = if dims { q.dims(genus)? } else { q.clone() };
    match format {
        Format::Text => Ok(q.render_grouped() + "\n"),
        Format::Json => pretty(&json!({
            "genus": genus,
            "u_trunc": q.u_trunc(),
            "terms": serde_json::to_value(q.to_terms())?,
        })),
        Format::Csv => {
            let mut out = String::from("t,s,u,dim\n");
            for term in q.to_terms() {
                let d = term.rep.dim(genus)?;
                out += &format!("{},{},{},{d}\n", term.t, term.s, term.u);
            }
            Ok(out)
        }
    }
}

pub fn tables(tables: &[MixedTable], format: Format) -> anyhow::Result<String> {
    match format {
        Format::Text => {
            let mut out = String::new();
            for t in tables {
                out += &format!("# genus {}, n = {}\n", t.genus, t.n);
                out += "k\th\tdim\tdecomposition\n";
                for ((k, h), rep) in t.entries() {
                    out += &format!("{k}\t{h}\t{}\t{rep}\n", rep.dim(t.genus)?);
                }
            }
            Ok(out)
        }
        Format::Json => {
            let rows = tables
                .iter()
                .map(MixedTable::to_json)
                .collect::<Result<Vec<_>, _>>()?;
            let text = if let [one] = rows.as_slice() {
                serde_json::to_string_pretty(one)?
            } else {
                serde_json::to_string_pretty(&rows)?
            };
            Ok(text + "\n")
        }
        Format::Csv => {
            let mut out = String::from("n,k,h,dim\n");
            for t in tables {
                for (n, k, h, d) in t.csv_rows()? {
                    out += &format!("{n},{k},{h},{d}\n");
                }
            }
            Ok(out)
        }
    }
}

/// Oracle dimensions, keyed by `(k, h)`.
pub fn dims(
    genus: u32,
    n: u32,
    dims: &BTreeMap<(u32, u32), u64>,
    format: Format,
) -> anyhow::Result<String> {
    match format {
        Format::Text => {
            let mut out = format!("# genus {genus}, n = {n}\nk\th\tdim\n");
            for ((k, h), d) in dims {
                out += &format!("{k}\t{h}\t{d}\n");
            }
            Ok(out)
        }
        Format::Json => {
            let rows: Vec<Value> = dims
                .iter()
                .map(|((k, h), d)| json!({"degree": k, "weight": h, "dim": d}))
                .collect();
            pretty(&json!({"genus": genus, "n": n, "table": rows}))
        }
        Format::Csv => {
            let mut out = String::from("n,k,h,dim\n");
            for ((k, h), d) in dims {
                out += &format!("{n},{k},{h},{d}\n");
            }
            Ok(out)
        }
    }
}

/// A row of integers: space separated as text, an array as JSON, one
/// `index,value` record per entry as CSV.
pub fn sequence(
    key: &str,
    header: &str,
    meta: Value,
    values: &[BigInt],
    format: Format,
) -> anyhow::Result<String> {
    match format {
        Format::Text => {
            let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
            Ok(parts.join(" ") + "\n")
        }
        Format::Json => {
            let mut obj = meta;
            obj[key] = Value::Array(values.iter().map(big).collect());
            pretty(&obj)
        }
        Format::Csv => {
            let mut out = format!("{header},{key}\n");
            for (idx, v) in values.iter().enumerate() {
                out += &format!("{idx},{v}\n");
            }
            Ok(out)
        }
    }
}

pub fn report(r: &VerifyReport, reps: bool, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => {
            let mismatches: Vec<Value> = r
                .mismatches
                .iter()
                .map(|m| {
                    json!({"n": m.n, "k": m.k, "h": m.h, "formula": m.formula, "oracle": m.oracle})
                })
                .collect();
            pretty(&json!({
                "genus": r.genus,
                "reps": reps,
                "checked": r.checked,
                "skipped": r.skipped,
                "passed": r.passed(),
                "mismatches": mismatches,
            }))
        }
        Format::Csv => {
            let mut out = String::from("n,k,h,formula,oracle\n");
            for m in &r.mismatches {
                out += &format!("{},{},{},\"{}\",\"{}\"\n", m.n, m.k, m.h, m.formula, m.oracle);
            }
            Ok(out)
        }
        Format::Text => {
            let what = if reps { "representations" } else { "dimensions" };
            let checked: Vec<String> = r.checked.iter().map(ToString::to_string).collect();
            let mut out = format!("genus {}: compared {what} for n = {}\n", r.genus, checked.join(", "));
            for n in &r.skipped {
                out += &format!("skipped n = {n}\n");
            }
            for m in &r.mismatches {
                out += &format!("MISMATCH {m}\n");
            }
            out += if r.passed() { "all tables agree\n" } else { "tables differ\n" };
            Ok(out)
        }
    }
}
