//! Table output. Every number passes through one renderer before it reaches
//! either format, so a CSV row and its JSON counterpart carry the same
//! decimal string rather than two independent roundings of the same float.

use serde_json::{json, Value};

/// Scientific notation with 12 significant digits. Negative zero is folded
/// into positive zero first so equal values always render identically.
pub fn fmt12(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

#[derive(Debug, Clone)]
pub enum Cell {
    Text(String),
    Num(f64),
    Int(i64),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Num(x) => fmt12(*x),
            Cell::Int(i) => i.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            // Serialized as the same string the CSV writer emits. Parsing it
            // back gives the identical float; a native JSON number would be
            // a second, independent rendering.
            Cell::Num(x) => Value::String(fmt12(*x)),
            Cell::Int(i) => json!(i),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub comments: Vec<String>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
            comments: Vec::new(),
        }
    }

    pub fn comment(&mut self, line: impl Into<String>) {
        self.comments.push(line.into());
    }

    pub fn row(&mut self, cells: Vec<Cell>) {
        assert_eq!(cells.len(), self.columns.len(), "row width must match header");
        self.rows.push(cells);
    }

    /// Comments as `# ` lines, then the header, then one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Same content as the CSV: an object with the comment lines and one
    /// object per row keyed by column name.
    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, cell)| (c.clone(), cell.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let doc = json!({ "comments": self.comments, "rows": rows });
        let mut s = serde_json::to_string_pretty(&doc).expect("tables serialize");
        s.push('\n');
        s
    }
}
