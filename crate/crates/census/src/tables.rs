//! Table artifacts and their text, CSV and JSON renderings.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use sigpet::clustering::cluster_report;
use sigpet::frustration::alpha_k;
use sigpet::{aut_signed, orbit_counts, swaut, SixType};

use crate::census::{run_census, CensusReport, ClassInvariants};
use crate::error::{CensusError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableId {
    T1,
    T2,
    T3,
    T4Orders,
    T5,
    T8,
    T9,
    T10,
    Census,
}

impl TableId {
    pub const ALL: [TableId; 9] = [
        TableId::T1,
        TableId::T2,
        TableId::T3,
        TableId::T4Orders,
        TableId::T5,
        TableId::T8,
        TableId::T9,
        TableId::T10,
        TableId::Census,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableId::T1 => "T1",
            TableId::T2 => "T2",
            TableId::T3 => "T3",
            TableId::T4Orders => "T4_orders",
            TableId::T5 => "T5",
            TableId::T8 => "T8",
            TableId::T9 => "T9",
            TableId::T10 => "T10",
            TableId::Census => "census",
        }
    }
}

impl FromStr for TableId {
    type Err = CensusError;

    fn from_str(s: &str) -> Result<TableId> {
        TableId::ALL
            .into_iter()
            .find(|t| {
                t.name().eq_ignore_ascii_case(s.trim()) || (s.eq_ignore_ascii_case("T4") && *t == TableId::T4Orders)
            })
            .ok_or_else(|| CensusError::UnknownTable(s.into()))
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CensusError;

    fn from_str(s: &str) -> Result<Format> {
        match s.trim().to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(CensusError::UnknownFormat(s.into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub label: String,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableArtifact {
    pub table: String,
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
}

impl TableArtifact {
    fn new(id: TableId, columns: Vec<String>) -> TableArtifact {
        TableArtifact {
            table: id.name().into(),
            columns,
            rows: Vec::new(),
        }
    }

    fn six(id: TableId) -> TableArtifact {
        TableArtifact::new(id, SixType::ALL.iter().map(|t| t.name().to_string()).collect())
    }

    fn push<I, V>(&mut self, label: &str, values: I)
    where
        I: IntoIterator<Item = V>,
        V: ToString,
    {
        self.rows.push(Row {
            label: label.into(),
            values: values.into_iter().map(|v| v.to_string()).collect(),
        });
    }

    pub fn row(&self, label: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.label == label)
    }

    pub fn cell(&self, label: &str, column: &str) -> Option<&str> {
        let c = self.columns.iter().position(|x| x == column)?;
        self.row(label)?.values.get(c).map(String::as_str)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Csv => self.to_csv(),
            Format::Json => serde_json::to_string_pretty(self).expect("plain strings serialize") + "\n",
        }
    }

    fn to_text(&self) -> String {
        let label_width = self
            .rows
            .iter()
            .map(|r| r.label.len())
            .max()
            .unwrap_or(0)
            .max(self.table.len());
        let width = self
            .rows
            .iter()
            .flat_map(|r| r.values.iter())
            .chain(self.columns.iter())
            .map(String::len)
            .max()
            .unwrap_or(0);
        let mut out = format!("{:<label_width$}", self.table);
        for c in &self.columns {
            out += &format!("  {c:>width$}");
        }
        out.push('\n');
        for r in &self.rows {
            out += &format!("{:<label_width$}", r.label);
            for v in &r.values {
                out += &format!("  {v:>width$}");
            }
            out.push('\n');
        }
        out
    }

    fn to_csv(&self) -> String {
        let field = |s: &str| {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        let mut out = String::from("label");
        for c in &self.columns {
            out.push(',');
            out += &field(c);
        }
        out.push('\n');
        for r in &self.rows {
            out += &field(&r.label);
            for v in &r.values {
                out.push(',');
                out += &field(v);
            }
            out.push('\n');
        }
        out
    }
}

fn standards() -> Vec<sigpet::SignedGraph> {
    SixType::ALL.iter().map(|t| t.standard()).collect()
}

fn invariants() -> Result<Vec<ClassInvariants>> {
    standards().iter().map(ClassInvariants::of).collect()
}

/// Compute a table from scratch. `census` runs the full census.
pub fn emit_table(id: TableId) -> Result<TableArtifact> {
    match id {
        TableId::Census => Ok(census_table(&run_census()?)),
        _ => class_table(id),
    }
}

fn class_table(id: TableId) -> Result<TableArtifact> {
    let mut t = TableArtifact::six(id);
    match id {
        TableId::T1 => {
            let inv = invariants()?;
            t.push("c5-", inv.iter().map(|i| i.c5));
            t.push("c6-", inv.iter().map(|i| i.c6));
        }
        TableId::T2 => t.push("l", invariants()?.iter().map(|i| i.l)),
        TableId::T3 => t.push("l0", invariants()?.iter().map(|i| i.l0)),
        TableId::T4Orders => {
            let mut aut = Vec::new();
            let mut sw = Vec::new();
            for s in standards() {
                aut.push(aut_signed(&s)?);
                sw.push(swaut(&s)?);
            }
            t.push("|Aut|", aut.iter().map(|g| g.order()));
            t.push("Aut", aut.iter().map(|g| g.label()));
            t.push("|SwAut|", sw.iter().map(|g| g.order()));
            t.push("SwAut", sw.iter().map(|g| g.label()));
        }
        TableId::T5 => {
            let counts = standards()
                .iter()
                .map(orbit_counts)
                .collect::<std::result::Result<Vec<_>, _>>()?;
            t.push("copies", counts.iter().map(|c| c.0));
            t.push("switching classes", counts.iter().map(|c| c.1));
        }
        TableId::T8 => {
            let inv = invariants()?;
            t.push("chi", inv.iter().map(|i| i.chi));
            t.push("chi*", inv.iter().map(|i| i.chi_star));
        }
        TableId::T9 => {
            let s = standards();
            for k in 0..=2 {
                let row = s
                    .iter()
                    .map(|x| alpha_k(x, k))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                t.push(&format!("alpha{k}"), row);
            }
            for k in 0..=2 {
                let row = s
                    .iter()
                    .map(|x| alpha_k(&x.negate(), k))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                t.push(&format!("alpha{k}(-)"), row);
            }
            let inv = invariants()?;
            t.push("c6-", inv.iter().map(|i| i.c6));
            let diff = s
                .iter()
                .map(sigpet::coloring::chi3_difference)
                .collect::<std::result::Result<Vec<_>, _>>()?;
            t.push("difference", diff);
            t.push("chi(3)", inv.iter().map(|i| i.chi3));
        }
        TableId::T10 => {
            let mut columns = Vec::new();
            let mut clun = Vec::new();
            let mut q = Vec::new();
            for ty in SixType::ALL {
                let s = ty.standard();
                let negated = format!("-{}", ty.name().trim_start_matches('+'));
                for (name, x) in [(ty.name().to_string(), s.clone()), (negated, s.negate())] {
                    let r = cluster_report(&x)?;
                    columns.push(name);
                    clun.push(r.clun.map_or_else(|| "-".to_string(), |c| c.to_string()));
                    q.push(r.q);
                }
            }
            t.columns = columns;
            t.push("clun", clun);
            t.push("Q", q);
        }
        TableId::Census => unreachable!("handled by census_table"),
    }
    Ok(t)
}

/// The census table: per-class tallies, the standard mask and invariants,
/// with totals in the last column.
pub fn census_table(report: &CensusReport) -> TableArtifact {
    let mut t = TableArtifact::six(TableId::Census);
    t.columns.push("total".into());
    let c = &report.classes;
    let with_total = |v: Vec<usize>| {
        let total = v.iter().sum::<usize>();
        v.into_iter()
            .map(|x| x.to_string())
            .chain([total.to_string()])
            .collect::<Vec<_>>()
    };
    let blank = |v: Vec<String>| v.into_iter().chain([String::new()]).collect::<Vec<_>>();
    t.push("signatures", with_total(c.iter().map(|x| x.signatures).collect()));
    t.push(
        "switching classes",
        with_total(c.iter().map(|x| x.switching_classes).collect()),
    );
    t.push("minimal", with_total(c.iter().map(|x| x.minimal_signatures).collect()));
    t.push(
        "mask",
        blank(c.iter().map(|x| format!("{:#06x}", x.representative)).collect()),
    );
    let inv = |f: fn(&ClassInvariants) -> String| blank(c.iter().map(|x| f(&x.invariants)).collect());
    t.push("l", inv(|i| i.l.to_string()));
    t.push("l0", inv(|i| i.l0.to_string()));
    t.push("c5-", inv(|i| i.c5.to_string()));
    t.push("c6-", inv(|i| i.c6.to_string()));
    t.push("chi", inv(|i| i.chi.to_string()));
    t.push("chi*", inv(|i| i.chi_star.to_string()));
    t.push("chi(3)", inv(|i| i.chi3.to_string()));
    t
}
