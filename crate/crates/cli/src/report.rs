//! Tabular report container with byte-deterministic CSV and JSON rendering.
//!
//! Model values print with 6 significant digits in fixed decimal notation;
//! observed values print as exact integers; unavailable cells stay empty.
//! Every report carries a parameter line so a rerun is self-describing.

/// Output encoding for a rendered report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// One rendered table: an ordered parameter list, column names, and rows of
/// pre-formatted cells.
#[derive(Debug, Clone)]
pub struct Report {
    pub params: Vec<(String, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Report {
            params: Vec::new(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        self.params.push((key.to_string(), value.into()));
        self
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => self.render_json(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::from("#");
        for (k, v) in &self.params {
            out.push(' ');
            out.push_str(k);
            out.push('=');
            out.push_str(v);
        }
        out.push('\n');
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let params: Vec<serde_json::Value> = self
            .params
            .iter()
            .map(|(k, v)| serde_json::json!([k, v]))
            .collect();
        let value = serde_json::json!({
            "params": params,
            "columns": self.columns,
            "rows": self.rows,
        });
        let mut s = serde_json::to_string_pretty(&value).expect("report is always serializable");
        s.push('\n');
        s
    }
}

/// Fixed-decimal formatting with 6 significant digits, used for every model
/// value in a report.
pub fn fmt_model(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let mag = v.abs().log10().floor() as i32;
    let dec = (5 - mag).clamp(0, 17) as usize;
    format!("{v:.dec$}")
}

pub fn fmt_int(v: u64) -> String {
    v.to_string()
}

/// Empty cell: the value is out of the configured reach, never extrapolated.
pub fn empty() -> String {
    String::new()
}
