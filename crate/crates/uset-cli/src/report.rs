//! Regression report types and their JSON/CSV emission.

use serde_json::{json, Value};

/// Row status: `Pass` within tolerance, `Erratum` when the recomputed chain
/// deviates from a documented-inconsistent print, `Fail` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Erratum,
    Fail,
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Erratum => "erratum",
            Status::Fail => "fail",
        }
    }
}

/// Computed or printed values of one corpus check.
#[derive(Debug, Clone, PartialEq)]
pub enum CaseValue {
    Numbers(Vec<f64>),
    Text(String),
}

impl CaseValue {
    fn render(&self, precision: usize) -> String {
        match self {
            CaseValue::Numbers(xs) => xs
                .iter()
                .map(|x| format_number(*x, precision))
                .collect::<Vec<_>>()
                .join("|"),
            CaseValue::Text(t) => t.clone(),
        }
    }
}

/// One regression check: a case id like `3.2.3:mid`, the recomputed value(s),
/// the printed reference value(s) when there are any, the worst absolute
/// deviation, and the resulting status.
#[derive(Debug, Clone, PartialEq)]
pub struct ReproRecord {
    pub case: String,
    pub computed: CaseValue,
    pub printed: Option<CaseValue>,
    pub delta: f64,
    pub status: Status,
    pub note: String,
}

impl ReproRecord {
    /// Example number without the sub-check suffix.
    pub fn example_id(&self) -> &str {
        self.case.split(':').next().unwrap_or(&self.case)
    }
}

/// The worked-example regression ledger.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ReproReport {
    pub records: Vec<ReproRecord>,
}

impl ReproReport {
    pub fn fail_count(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.status == Status::Fail)
            .count()
    }

    /// Distinct example ids carrying at least one erratum row.
    pub fn erratum_examples(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for r in &self.records {
            if r.status == Status::Erratum {
                let id = r.example_id().to_string();
                if !out.contains(&id) {
                    out.push(id);
                }
            }
        }
        out
    }

    pub fn to_csv(&self, precision: usize) -> String {
        let mut out = String::from("case,computed,printed,delta,status\n");
        for r in &self.records {
            let printed = r
                .printed
                .as_ref()
                .map(|p| p.render(precision))
                .unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                csv_field(&r.case),
                csv_field(&r.computed.render(precision)),
                csv_field(&printed),
                format_number(r.delta, precision),
                r.status.label()
            ));
        }
        out
    }

    pub fn to_json(&self, precision: usize) -> Value {
        let cases: Vec<Value> = self
            .records
            .iter()
            .map(|r| {
                json!({
                    "case": r.case,
                    "computed": value_json(&r.computed, precision),
                    "printed": r.printed.as_ref().map(|p| value_json(p, precision)),
                    "delta": round_to(r.delta, precision),
                    "status": r.status.label(),
                    "note": r.note,
                })
            })
            .collect();
        json!({
            "cases": cases,
            "fails": self.fail_count(),
            "errata": self.erratum_examples(),
        })
    }
}

fn value_json(v: &CaseValue, precision: usize) -> Value {
    match v {
        CaseValue::Numbers(xs) => Value::Array(
            xs.iter()
                .map(|x| {
                    serde_json::Number::from_f64(round_to(*x, precision))
                        .map(Value::Number)
                        .unwrap_or(Value::Null)
                })
                .collect(),
        ),
        CaseValue::Text(t) => Value::String(t.clone()),
    }
}

/// RFC 4180 quoting: wrap fields containing commas, quotes, or newlines.
fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn round_to(x: f64, precision: usize) -> f64 {
    let scale = 10f64.powi(precision as i32);
    (x * scale).round() / scale
}

pub fn format_number(x: f64, precision: usize) -> String {
    let mut s = format!("{:.*}", precision, x);
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_header_and_rows() {
        let report = ReproReport {
            records: vec![ReproRecord {
                case: "2.4.2:accuracy".into(),
                computed: CaseValue::Numbers(vec![4.0 / 7.0]),
                printed: Some(CaseValue::Numbers(vec![4.0 / 7.0])),
                delta: 0.0,
                status: Status::Pass,
                note: String::new(),
            }],
        };
        let csv = report.to_csv(6);
        assert!(csv.starts_with("case,computed,printed,delta,status\n"));
        assert!(csv.contains("2.4.2:accuracy,0.571429,0.571429,0,pass"));
    }

    #[test]
    fn empty_report_is_header_only() {
        let report = ReproReport::default();
        assert_eq!(report.to_csv(6), "case,computed,printed,delta,status\n");
    }

    #[test]
    fn number_formatting() {
        assert_eq!(format_number(0.5, 6), "0.5");
        assert_eq!(format_number(0.0, 6), "0");
        assert_eq!(format_number(1.0514, 3), "1.051");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
    }
}
