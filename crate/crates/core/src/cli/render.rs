use std::fmt::{Display, Write as _};

use serde_json::{json, Map, Value};

use crate::exactnum::{Rat, UniPoly};
use crate::report::VerifyReport;
use crate::zeta::ZetaValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One table entry: its exact text and, for rationals, a float.
pub struct Cell {
    exact: String,
    approx: Option<f64>,
}

impl Cell {
    pub fn rat(r: &Rat) -> Self {
        Cell { exact: r.to_string(), approx: Some(r.to_f64()) }
    }

    pub fn text(s: String) -> Self {
        Cell { exact: s, approx: None }
    }
}

pub struct Table {
    name: &'static str,
    params: Vec<(&'static str, String)>,
    row_key: &'static str,
    col_key: Option<&'static str>,
    rows: Vec<(usize, Vec<Cell>)>,
}

impl Table {
    pub fn new(name: &'static str) -> Self {
        Table { name, params: Vec::new(), row_key: "n", col_key: None, rows: Vec::new() }
    }

    pub fn param(&mut self, key: &'static str, v: impl Display) {
        self.params.push((key, v.to_string()));
    }

    pub fn keys(&mut self, row: &'static str, col: Option<&'static str>) {
        self.row_key = row;
        self.col_key = col;
    }

    pub fn row(&mut self, index: usize, cells: Vec<Cell>) {
        self.rows.push((index, cells));
    }
}

pub enum Doc {
    Value(ZetaValue),
    Table(Table),
    Poly { m: usize, s: u32, poly: UniPoly<Rat> },
    Verify { all: bool, reports: Vec<VerifyReport> },
}

fn approx_value(x: Option<f64>) -> Value {
    x.and_then(serde_json::Number::from_f64).map_or(Value::Null, Value::Number)
}

fn csv_text(rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(&r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

impl Doc {
    pub fn render(&self, format: Format, approx: bool) -> String {
        match self {
            Doc::Value(v) => render_value(v, format, approx),
            Doc::Table(t) => render_table(t, format, approx),
            Doc::Poly { m, s, poly } => render_poly(*m, *s, poly, format),
            Doc::Verify { all, reports } => render_verify(*all, reports, format),
        }
    }
}

fn render_value(v: &ZetaValue, format: Format, approx: bool) -> String {
    let p = v.params;
    let f = v.value.to_f64();
    match format {
        Format::Json => {
            let mut o = json!({
                "n": p.n, "m": p.m, "s": p.s,
                "method": v.method.name(),
                "value": v.value.to_string(),
            });
            if approx {
                o["approx"] = approx_value(Some(f));
            }
            json_text(&o)
        }
        Format::Csv => {
            let mut head = vec!["n", "m", "s", "method", "value"];
            let mut row =
                vec![p.n.to_string(), p.m.to_string(), p.s.to_string(), v.method.to_string(), v.value.to_string()];
            if approx {
                head.push("approx");
                row.push(f.to_string());
            }
            csv_text(vec![head.into_iter().map(String::from).collect(), row])
        }
        Format::Text => {
            let mut out = format!("Z_{}(zeta_{}; {}, {}) = {}  [{}]\n", p.n, p.n, p.m, p.s, v.value, v.method);
            if approx {
                let _ = writeln!(out, "approx {f}");
            }
            out
        }
    }
}

fn render_table(t: &Table, format: Format, approx: bool) -> String {
    match format {
        Format::Json => {
            let params: Map<String, Value> = t.params.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            let rows: Vec<Value> = t
                .rows
                .iter()
                .map(|(i, cells)| {
                    let mut o = Map::new();
                    o.insert(t.row_key.into(), json!(i));
                    match t.col_key {
                        Some(_) => o.insert("values".into(), cells.iter().map(|c| json!(c.exact)).collect()),
                        None => o.insert("value".into(), json!(cells[0].exact)),
                    };
                    if approx {
                        let a: Vec<Value> = cells.iter().map(|c| approx_value(c.approx)).collect();
                        match t.col_key {
                            Some(_) => o.insert("approx".into(), Value::Array(a)),
                            None => o.insert("approx".into(), a.into_iter().next().unwrap_or(Value::Null)),
                        };
                    }
                    Value::Object(o)
                })
                .collect();
            json_text(&json!({ "table": t.name, "params": params, "rows": rows }))
        }
        Format::Csv => {
            let mut head = vec![t.row_key.to_string()];
            head.extend(t.col_key.map(String::from));
            head.push("value".into());
            if approx {
                head.push("approx".into());
            }
            let mut rows = vec![head];
            for (i, cells) in &t.rows {
                for (j, c) in cells.iter().enumerate() {
                    let mut r = vec![i.to_string()];
                    if t.col_key.is_some() {
                        r.push(j.to_string());
                    }
                    r.push(c.exact.clone());
                    if approx {
                        r.push(c.approx.map(|f| f.to_string()).unwrap_or_default());
                    }
                    rows.push(r);
                }
            }
            csv_text(rows)
        }
        Format::Text => {
            let params: Vec<String> = t.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let mut out = format!("{} {}\n", t.name, params.join(" "));
            for (i, cells) in &t.rows {
                let exact: Vec<&str> = cells.iter().map(|c| c.exact.as_str()).collect();
                let _ = writeln!(out, "{}={}: {}", t.row_key, i, exact.join("  "));
                if approx {
                    let a: Vec<String> = cells.iter().map(|c| c.approx.map_or("-".into(), |f| f.to_string())).collect();
                    let _ = writeln!(out, "{}={} approx: {}", t.row_key, i, a.join("  "));
                }
            }
            out
        }
    }
}

fn render_poly(m: usize, s: u32, poly: &UniPoly<Rat>, format: Format) -> String {
    let coeffs: Vec<String> = (0..=poly.degree().unwrap_or(0)).map(|k| poly.coeff(k).to_string()).collect();
    match format {
        Format::Json => json_text(&json!({
            "m": m, "s": s,
            "poly": poly.to_string_in("n"),
            "coefficients": coeffs,
        })),
        Format::Csv => {
            let mut rows = vec![vec!["power".to_string(), "coefficient".to_string()]];
            rows.extend(coeffs.into_iter().enumerate().map(|(k, c)| vec![k.to_string(), c]));
            csv_text(rows)
        }
        Format::Text => format!("Z_n(zeta_n; {m}, {s}) = {}\n", poly.to_string_in("n")),
    }
}

fn merged(reports: &[VerifyReport]) -> VerifyReport {
    let mut total = VerifyReport::new("all");
    for r in reports {
        let mut r = r.clone();
        for f in &mut r.failures {
            f.params = format!("{}: {}", r.suite, f.params);
        }
        total.absorb(r);
    }
    let elapsed = reports.iter().map(|r| r.elapsed_ms).sum();
    total.finish(elapsed)
}

fn render_verify(all: bool, reports: &[VerifyReport], format: Format) -> String {
    let top = if all { merged(reports) } else { reports[0].clone() };
    match format {
        Format::Json => json_text(&serde_json::to_value(&top).expect("serializable")),
        Format::Csv => {
            let mut rows = vec![vec!["suite".to_string(), "cases".into(), "failures".into()]];
            for r in reports {
                rows.push(vec![r.suite.clone(), r.cases.to_string(), r.failures.len().to_string()]);
            }
            let mut out = csv_text(rows);
            if !top.passed() {
                let mut frows = vec![vec!["params".to_string(), "routes".into(), "expected".into(), "actual".into()]];
                for f in &top.failures {
                    frows.push(vec![f.params.clone(), f.routes.clone(), f.expected.clone(), f.actual.clone()]);
                }
                out.push('\n');
                out += &csv_text(frows);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let _ = writeln!(out, "{}", r.summary());
                for f in &r.failures {
                    let _ = writeln!(out, "  {} [{}]: expected {}, got {}", f.params, f.routes, f.expected, f.actual);
                }
            }
            if all {
                let _ = writeln!(out, "{}", top.summary());
            }
            out
        }
    }
}
