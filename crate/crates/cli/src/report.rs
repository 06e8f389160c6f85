//! Report documents and their JSON, CSV and text renderings.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

pub const SCHEMA: &str = "poisson-forge/1";

/// Text tables with a longer cell are printed row by row.
const WIDE_CELL: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub suite: String,
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, header: &[&str]) -> Self {
        Self { name: name.into(), header: header.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

/// A computed prefix against the expansion of a closed formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesBlock {
    pub name: String,
    pub formula: String,
    pub expansion: Vec<i64>,
    pub computed: Vec<usize>,
    pub verdict: &'static str,
}

impl SeriesBlock {
    pub fn new(name: &str, formula: String, expansion: Vec<i64>, computed: Vec<usize>) -> Self {
        let same = expansion.len() == computed.len() && expansion.iter().zip(&computed).all(|(&a, &b)| a == b as i64);
        let verdict = if same { "match" } else { "mismatch" };
        Self { name: name.into(), formula, expansion, computed, verdict }
    }

    pub fn matches(&self) -> bool {
        self.verdict == "match"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReportDocument {
    pub command: String,
    pub max_weight: Option<u32>,
    pub verdicts: Vec<Verdict>,
    pub tables: Vec<Table>,
    pub series: Vec<SeriesBlock>,
    pub values: Vec<Entry>,
    pub timing_ms: Option<u128>,
}

#[derive(Serialize)]
struct JsonView<'a> {
    schema: &'static str,
    command: &'a str,
    max_weight: Option<u32>,
    verdict: &'static str,
    verdicts: &'a [Verdict],
    tables: &'a [Table],
    series: &'a [SeriesBlock],
    values: &'a [Entry],
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

impl ReportDocument {
    pub fn new(command: String, max_weight: Option<u32>) -> Self {
        Self { command, max_weight, ..Self::default() }
    }

    pub fn verdict(&mut self, suite: &str, check: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.verdicts.push(Verdict { suite: suite.into(), check: check.into(), passed, detail: detail.into() });
    }

    pub fn value(&mut self, key: &str, value: impl ToString) {
        self.values.push(Entry { key: key.into(), value: value.to_string() });
    }

    /// Adds the block and a verdict that it matches.
    pub fn series_verdict(&mut self, suite: &str, block: SeriesBlock) {
        let check = format!("series {}", block.name);
        let passed = block.matches();
        self.verdict(suite, check, passed, block.verdict);
        self.series.push(block);
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn value_of(&self, key: &str) -> Option<&str> {
        self.values.iter().find(|e| e.key == key).map(|e| e.value.as_str())
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn to_json(&self) -> String {
        let view = JsonView {
            schema: SCHEMA,
            command: &self.command,
            max_weight: self.max_weight,
            verdict: if self.passed() { "pass" } else { "fail" },
            verdicts: &self.verdicts,
            tables: &self.tables,
            series: &self.series,
            values: &self.values,
            timing_ms: self.timing_ms,
        };
        let mut s = serde_json::to_string_pretty(&view).expect("serializable");
        s.push('\n');
        s
    }

    /// Every table, blank-line separated; the verdict list when there is
    /// no table.
    pub fn to_csv(&self) -> String {
        let mut verdicts = Table::new("verdicts", &["suite", "check", "verdict"]);
        for v in &self.verdicts {
            verdicts.push(vec![v.suite.clone(), v.check.clone(), pass_word(v.passed).into()]);
        }
        let tables = if self.tables.is_empty() { std::slice::from_ref(&verdicts) } else { &self.tables[..] };
        let mut out = Vec::new();
        for (i, t) in tables.iter().enumerate() {
            if i > 0 {
                out.push(b'\n');
            }
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(&t.header).expect("in-memory write");
            for row in &t.rows {
                w.write_record(row).expect("in-memory write");
            }
            w.flush().expect("in-memory write");
        }
        String::from_utf8(out).expect("utf-8 cells")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.command);
        if let Some(w) = self.max_weight {
            let _ = writeln!(s, "max weight: {w}");
        }
        for e in &self.values {
            let _ = writeln!(s, "{}: {}", e.key, e.value);
        }
        for t in &self.tables {
            let _ = writeln!(s, "\n[{}]", t.name);
            if t.rows.iter().flatten().any(|c| c.len() > WIDE_CELL) {
                // one block per row
                for (i, row) in t.rows.iter().enumerate() {
                    if i > 0 {
                        s.push('\n');
                    }
                    for (h, c) in t.header.iter().zip(row) {
                        let _ = writeln!(s, "{h}: {c}");
                    }
                }
                continue;
            }
            let mut widths: Vec<usize> = t.header.iter().map(String::len).collect();
            for row in &t.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            for row in std::iter::once(&t.header).chain(&t.rows) {
                let cells: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                let _ = writeln!(s, "{}", cells.join("  ").trim_end());
            }
        }
        if !self.series.is_empty() {
            s.push('\n');
        }
        for b in &self.series {
            let _ = writeln!(s, "{} = {}", b.name, b.formula);
            let _ = writeln!(s, "  expansion {}", join(&b.expansion));
            let _ = writeln!(s, "  computed  {}", join(&b.computed));
            let _ = writeln!(s, "  {}", b.verdict);
        }
        if !self.verdicts.is_empty() {
            s.push('\n');
        }
        for v in &self.verdicts {
            let _ = write!(s, "{} {}: {}", pass_word(v.passed).to_uppercase(), v.suite, v.check);
            if !v.detail.is_empty() {
                let _ = write!(s, " ({})", v.detail);
            }
            s.push('\n');
        }
        let _ = writeln!(s, "verdict: {}", pass_word(self.passed()));
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(s, "elapsed: {ms} ms");
        }
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}

fn pass_word(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Writes the rendering to `path`, or to stdout when `path` is `None`.
pub fn emit_report(doc: &ReportDocument, format: Format, path: Option<&Path>) -> io::Result<()> {
    let bytes = doc.render(format);
    match path {
        Some(p) => std::fs::write(p, bytes),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(bytes.as_bytes())?;
            out.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ReportDocument {
        let mut d = ReportDocument::new("poisson-forge hilbert --group H0 --max-weight 2".into(), Some(2));
        let mut t = Table::new("hilbert", &["group", "weight", "dim"]);
        for (w, n) in [1, 4, 6].iter().enumerate() {
            t.push(vec!["H0".into(), w.to_string(), n.to_string()]);
        }
        d.tables.push(t);
        d.series_verdict("hilbert", SeriesBlock::new("H0", "(1+4t+4t^2)/(1-t^2)^2".into(), vec![1, 4, 6], vec![1, 4, 6]));
        d
    }

    #[test]
    fn json_carries_the_schema_first() {
        let j = sample().to_json();
        assert!(j.starts_with("{\n  \"schema\": \"poisson-forge/1\","));
        let v: serde_json::Value = serde_json::from_str(&j).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["verdict"], "pass");
        assert_eq!(v["series"][0]["verdict"], "match");
        assert!(v.get("timing_ms").is_none());
    }

    #[test]
    fn csv_table() {
        assert_eq!(sample().to_csv(), "group,weight,dim\nH0,0,1\nH0,1,4\nH0,2,6\n");
        let mut d = ReportDocument::new("x".into(), None);
        d.verdict("s", "a, b", false, "");
        assert_eq!(d.to_csv(), "suite,check,verdict\ns,\"a, b\",fail\n");
    }

    #[test]
    fn failing_verdict_sets_the_exit_code() {
        let mut d = sample();
        assert_eq!(d.exit_code(), 0);
        d.verdict("x", "y", false, "");
        assert_eq!(d.exit_code(), 1);
        assert!(d.to_text().ends_with("verdict: fail\n"));
    }

    #[test]
    fn mismatched_lengths_do_not_match() {
        assert!(!SeriesBlock::new("H", String::new(), vec![1, 2], vec![1]).matches());
    }
}
