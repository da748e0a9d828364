//! Serializable reports, and their table and markdown renderings.
//!
//! Every rendering is produced from the JSON value of a [`Report`], so the
//! table and JSON formats carry the same data.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::cohomology::GenericityPolicy;
use crate::extendability::{
    del_pezzo_line_count, example_fixtures, fibra_pairs, k3_enumerate, K3Mode, NumericalConditions, Verdict,
};
use crate::invariants::{k3_sectional_genus_minimizer, SurfaceInvariants};
use crate::scroll::{ClaimReport, CohomologyTerm};

/// Version of `schema/report.json` this crate emits.
pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub command: String,
    pub inputs: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub policy: Option<GenericityPolicy>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariants: Option<SurfaceInvariants>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cohomology: Vec<CohomologyTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numerical: Option<NumericalConditions>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
    /// Named lists of rows, in insertion order.
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    pub lists: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claims: Option<ClaimReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION.into(),
            command: command.into(),
            inputs: Map::new(),
            policy: None,
            invariants: None,
            cohomology: Vec::new(),
            numerical: None,
            verdicts: Vec::new(),
            lists: Map::new(),
            claims: None,
            notes: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Serialize) -> Self {
        self.inputs.insert(key.into(), to_value(value));
        self
    }

    pub fn list(&mut self, name: &str, rows: Vec<Value>) {
        self.lists.insert(name.into(), Value::Array(rows));
    }

    pub fn to_json(&self) -> Value {
        to_value(self)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_table(&self) -> String {
        render_table(&self.to_json())
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

pub fn k3_rows(mode: K3Mode) -> Vec<Value> {
    k3_enumerate(mode).into_iter().map(to_value).collect()
}

pub fn pair_rows(locally_factorial: bool) -> Vec<Value> {
    fibra_pairs(locally_factorial)
        .into_iter()
        .map(|(a, c)| json!({ "a": a, "c_dot_f": c }))
        .collect()
}

pub fn line_count_rows() -> Vec<Value> {
    (3..=8)
        .map(|d| {
            let lines = del_pezzo_line_count(d).expect("degree in range");
            json!({ "d": d, "lines": lines, "d_divides_lines": lines % d == 0 })
        })
        .collect()
}

/// Every classification list in one report.
pub fn full_report() -> Report {
    let mut r = Report::new("report");
    r.list("fibra-pairs", pair_rows(false));
    r.list("fibra-pairs-locally-factorial", pair_rows(true));
    r.list("k3-normal", k3_rows(K3Mode::Normal));
    r.list("k3-lci", k3_rows(K3Mode::Lci));
    r.list("k3-lci-terminal", k3_rows(K3Mode::LciTerminal));
    r.list("del-pezzo-line-counts", line_count_rows());
    r.list(
        "example-fixtures",
        example_fixtures().into_iter().map(to_value).collect(),
    );
    let (a, b, genus) = k3_sectional_genus_minimizer();
    r.list("k3-genus-minimizer", vec![json!({ "a": a, "b": b, "genus": genus })]);
    r
}

const SECTIONS: [(&str, &str); 8] = [
    (
        "fibra-pairs",
        "Admissible pairs (a, C·f) for a Del Pezzo fibered extension",
    ),
    (
        "fibra-pairs-locally-factorial",
        "Admissible pairs when the extension is locally factorial",
    ),
    ("k3-normal", "K3 triples (a, b, g) not excluded from normal extensions"),
    ("k3-lci", "K3 triples (a, b, g) not excluded from l.c.i. extensions"),
    (
        "k3-lci-terminal",
        "K3 triples (a, b, g) not excluded from terminal l.c.i. extensions",
    ),
    ("del-pezzo-line-counts", "Lines on a Del Pezzo surface of degree d"),
    ("example-fixtures", "Smoothly extendable examples"),
    (
        "k3-genus-minimizer",
        "Smallest sectional genus of a very ample class on a K3 fibration",
    ),
];

/// Markdown document with one table and one JSON block per list.
pub fn render_markdown(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Weierstrass extendability report\n");
    let _ = writeln!(out, "Schema version `{}`.\n", report.schema_version);
    for (name, rows) in &report.lists {
        let title = SECTIONS
            .iter()
            .find(|(k, _)| k == name)
            .map_or(name.as_str(), |(_, t)| t);
        let count = rows.as_array().map_or(0, Vec::len);
        let _ = writeln!(out, "## {title}\n");
        let _ = writeln!(out, "`{name}`: {count} rows.\n");
        out.push_str(&markdown_table(rows));
        let _ = writeln!(
            out,
            "\n```json\n{}\n```\n",
            serde_json::to_string(rows).expect("serializes")
        );
    }
    for note in &report.notes {
        let _ = writeln!(out, "- {note}");
    }
    out
}

fn markdown_table(rows: &Value) -> String {
    let Some(rows) = rows.as_array().filter(|r| !r.is_empty()) else {
        return "(empty)\n".into();
    };
    let flat: Vec<Vec<(String, String)>> = rows.iter().map(flatten_row).collect();
    let columns = union_columns(&flat);
    let mut out = format!("| {} |\n|{}\n", columns.join(" | "), "---|".repeat(columns.len()));
    for row in &flat {
        let cells: Vec<_> = columns.iter().map(|c| lookup(row, c)).collect();
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// Arrays of numbers or booleans print on one line. Strings do not, since
/// they may contain the separator.
fn inline_array(items: &[Value]) -> Option<String> {
    if items.iter().any(Value::is_string) {
        return None;
    }
    let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
    parts.map(|p| format!("[{}]", p.join(", ")))
}

/// Leaves of an object as `(dotted path, text)`, scalar arrays inline.
/// `false` if some leaf is an array of non-scalars.
fn try_flatten_row(v: &Value, prefix: &str, out: &mut Vec<(String, String)>) -> bool {
    match v {
        Value::Object(map) => map.iter().all(|(k, v)| try_flatten_row(v, &join(prefix, k), out)),
        Value::Array(items) => match inline_array(items) {
            Some(s) => {
                out.push((prefix.into(), s));
                true
            }
            None => false,
        },
        other => {
            out.push((prefix.into(), scalar(other).expect("scalar")));
            true
        }
    }
}

fn flatten_row(v: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    try_flatten_row(v, "", &mut out);
    out
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.into()
    } else {
        format!("{prefix}.{key}")
    }
}

fn union_columns(rows: &[Vec<(String, String)>]) -> Vec<String> {
    let mut columns: Vec<String> = Vec::new();
    for (k, _) in rows.iter().flatten() {
        if !columns.contains(k) {
            columns.push(k.clone());
        }
    }
    columns
}

fn lookup(row: &[(String, String)], column: &str) -> String {
    row.iter()
        .find(|(k, _)| k == column)
        .map_or("-".into(), |(_, v)| v.clone())
}

enum Block {
    Pairs(Vec<(String, String)>),
    Rows {
        title: String,
        rows: Vec<Vec<(String, String)>>,
    },
}

fn collect_blocks(v: &Value, prefix: &str, blocks: &mut Vec<Block>) {
    let push_pair = |blocks: &mut Vec<Block>, k: String, s: String| match blocks.last_mut() {
        Some(Block::Pairs(p)) => p.push((k, s)),
        _ => blocks.push(Block::Pairs(vec![(k, s)])),
    };
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                collect_blocks(v, &join(prefix, k), blocks);
            }
        }
        Value::Array(items) => {
            if let Some(s) = inline_array(items) {
                push_pair(blocks, prefix.into(), s);
                return;
            }
            let mut rows = Vec::new();
            let tabular = items.iter().all(|item| {
                let mut row = Vec::new();
                let ok = item.is_object() && try_flatten_row(item, "", &mut row);
                rows.push(row);
                ok
            });
            if tabular {
                blocks.push(Block::Rows {
                    title: prefix.into(),
                    rows,
                });
            } else {
                for (i, item) in items.iter().enumerate() {
                    collect_blocks(item, &join(prefix, &i.to_string()), blocks);
                }
            }
        }
        other => push_pair(blocks, prefix.into(), scalar(other).expect("scalar")),
    }
}

/// Aligned plain-text rendering of a JSON value. Runs of scalar leaves become
/// `key  value` lines; arrays of flat objects become column tables.
pub fn render_table(v: &Value) -> String {
    let mut blocks = Vec::new();
    collect_blocks(v, "", &mut blocks);
    let mut out = String::new();
    for block in blocks {
        if !out.is_empty() {
            out.push('\n');
        }
        match block {
            Block::Pairs(pairs) => {
                let width = pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
                for (k, v) in pairs {
                    let pad = width - k.chars().count();
                    let _ = writeln!(out, "{k}{}  {v}", " ".repeat(pad));
                }
            }
            Block::Rows { title, rows } => {
                let _ = writeln!(out, "{title} ({} rows)", rows.len());
                let columns = union_columns(&rows);
                let cells: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| columns.iter().map(|c| lookup(r, c)).collect())
                    .collect();
                let widths: Vec<usize> = columns
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        cells
                            .iter()
                            .map(|r| r[i].chars().count())
                            .chain([c.chars().count()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |items: &[String]| {
                    let padded: Vec<String> = items
                        .iter()
                        .zip(&widths)
                        .map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
                        .collect();
                    padded.join("  ").trim_end().to_owned()
                };
                let _ = writeln!(out, "  {}", line(&columns));
                for row in &cells {
                    let _ = writeln!(out, "  {}", line(row));
                }
            }
        }
    }
    out
}

/// Every scalar leaf of `v` as text. Each one appears in [`render_table`].
pub fn leaf_texts(v: &Value) -> Vec<String> {
    match v {
        Value::Object(map) => map.values().flat_map(leaf_texts).collect(),
        Value::Array(items) => items.iter().flat_map(leaf_texts).collect(),
        other => vec![scalar(other).expect("scalar")],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extendability::nonextweier2_verdict;
    use crate::lattice::SurfaceData;
    use crate::scroll::verify_scroll_claims;

    fn sample() -> Report {
        let s = SurfaceData::RATIONAL;
        let mut r = Report::new("verdict")
            .input("g", 0)
            .input("n", 1)
            .input("a", 7)
            .input("b", 8);
        r.policy = Some(GenericityPolicy::AssumeGeneric);
        r.verdicts.push(nonextweier2_verdict(s, 7, 8, true).unwrap());
        r.claims = Some(verify_scroll_claims(s, 6, 8, GenericityPolicy::RequireExact).unwrap());
        r.list("k3-lci-terminal", k3_rows(K3Mode::LciTerminal));
        r.list("k3-normal", k3_rows(K3Mode::Normal));
        r.notes.push("sample".into());
        r
    }

    #[test]
    fn json_round_trip() {
        for r in [sample(), full_report(), Report::new("empty")] {
            let text = r.to_json_string();
            let back: Report = serde_json::from_str(&text).unwrap();
            assert_eq!(back, r);
            assert_eq!(back.to_json_string(), text);
        }
    }

    #[test]
    fn table_carries_every_leaf() {
        let r = sample();
        let table = r.to_table();
        for leaf in leaf_texts(&r.to_json()) {
            assert!(table.contains(&leaf), "missing {leaf:?}");
        }
        assert!(table.contains("lists.k3-normal (16 rows)"));
        assert!(table.contains("lists.k3-lci-terminal  []"));
    }

    #[test]
    fn table_rows_are_aligned() {
        let table = render_table(&json!({ "rows": [{ "a": 3, "b": 7 }, { "a": 10, "b": 12 }] }));
        assert_eq!(table, "rows (2 rows)\n  a   b\n  3   7\n  10  12\n");
        let table = render_table(&json!({ "x": 1, "longer": [1, 2] }));
        assert_eq!(table, "x       1\nlonger  [1, 2]\n");
    }

    #[test]
    fn markdown_has_every_list() {
        let md = render_markdown(&full_report());
        for (name, count) in [
            ("fibra-pairs", 9),
            ("fibra-pairs-locally-factorial", 6),
            ("k3-normal", 16),
            ("k3-lci", 11),
            ("k3-lci-terminal", 0),
            ("del-pezzo-line-counts", 6),
        ] {
            assert!(md.contains(&format!("`{name}`: {count} rows.")), "{name}");
        }
        assert!(md.contains("| 3 | 27 | true |"));
        assert!(md.contains("```json\n[]\n```"));
    }
}
