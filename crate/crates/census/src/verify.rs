//! Cell-by-cell comparison of recomputed tables with the embedded values.

use std::fmt;

use sigpet::SixType;

use crate::census::run_census;
use crate::error::Result;
use crate::expected as x;
use crate::products::{agreement, check_p32_table, check_p33_rules, Agreement};
use crate::tables::{census_table, emit_table, TableArtifact, TableId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellDiff {
    pub table: String,
    pub row: String,
    pub column: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for CellDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}]: expected {}, got {}",
            self.table, self.row, self.column, self.expected, self.actual
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub cells_checked: usize,
    pub diffs: Vec<CellDiff>,
    /// Known disagreements with printed values that are not diffs.
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }

    fn check(&mut self, table: &str, row: &str, column: &str, expected: String, actual: String) {
        self.cells_checked += 1;
        if expected != actual {
            self.diffs.push(CellDiff {
                table: table.into(),
                row: row.into(),
                column: column.into(),
                expected,
                actual,
            });
        }
    }
}

fn six<T: ToString>(label: &str, values: &[T]) -> (String, Vec<String>) {
    (label.into(), values.iter().map(T::to_string).collect())
}

/// Expected rows of each table, in that table's column order. Rows not
/// listed here are reported but not checked.
pub fn expected_rows(id: TableId) -> Vec<(String, Vec<String>)> {
    match id {
        TableId::T1 => vec![six("c5-", &x::T1_C5), six("c6-", &x::T1_C6)],
        TableId::T2 => vec![six("l", &x::T2_L)],
        TableId::T3 => vec![six("l0", &x::T3_L0)],
        TableId::T4Orders => vec![
            six("|Aut|", &x::T4_AUT_ORDER),
            six("Aut", &x::T4_AUT_LABEL),
            six("|SwAut|", &x::T4_SWAUT_ORDER),
            six("SwAut", &x::T4_SWAUT_LABEL),
        ],
        TableId::T5 => vec![
            six("copies", &x::T5_COPIES),
            six("switching classes", &x::T5_SWITCHING_CLASSES),
        ],
        TableId::T8 => vec![six("chi", &x::T8_CHI), six("chi*", &x::T8_CHI_STAR)],
        TableId::T9 => vec![
            six("alpha0", &x::T9_ALPHA[0]),
            six("alpha1", &x::T9_ALPHA[1]),
            six("alpha2", &x::T9_ALPHA[2]),
            six("c6-", &x::T1_C6),
            six("difference", &x::T9_DIFFERENCE),
            six("chi(3)", &x::T9_CHI3),
        ],
        TableId::T10 => vec![
            (
                "clun".into(),
                x::T10_CLUN
                    .iter()
                    .map(|c| c.map_or_else(|| "-".into(), |v| v.to_string()))
                    .collect(),
            ),
            six("Q", &x::T10_Q),
        ],
        TableId::Census => {
            let total = |v: &[i64], t: i64| v.iter().map(i64::to_string).chain([t.to_string()]).collect();
            let minimal_total = x::T5_COPIES.iter().sum();
            let blank = |v: &[i64]| v.iter().map(i64::to_string).chain([String::new()]).collect();
            vec![
                (
                    "signatures".into(),
                    total(&x::CENSUS_SIGNATURES, x::CENSUS_TOTAL_SIGNATURES),
                ),
                (
                    "switching classes".into(),
                    total(&x::T5_SWITCHING_CLASSES, x::CENSUS_TOTAL_SWITCHING_CLASSES),
                ),
                ("minimal".into(), total(&x::T5_COPIES, minimal_total)),
                ("l".into(), blank(&x::T2_L)),
                ("l0".into(), blank(&x::T3_L0)),
                ("c5-".into(), blank(&x::T1_C5)),
                ("c6-".into(), blank(&x::T1_C6)),
                ("chi".into(), blank(&x::T8_CHI)),
                ("chi*".into(), blank(&x::T8_CHI_STAR)),
                ("chi(3)".into(), blank(&x::T9_CHI3)),
            ]
        }
    }
}

/// Compare one artifact with its expected rows.
pub fn verify_table(actual: &TableArtifact, report: &mut VerifyReport) -> Result<()> {
    let id: TableId = actual.table.parse()?;
    for (label, values) in expected_rows(id) {
        for (c, expected) in values.into_iter().enumerate() {
            let column = actual.columns.get(c).cloned().unwrap_or_else(|| format!("#{c}"));
            let got = actual
                .row(&label)
                .and_then(|r| r.values.get(c).cloned())
                .unwrap_or_else(|| "(missing)".into());
            report.check(&actual.table, &label, &column, expected, got);
        }
    }
    if id == TableId::T9 {
        verify_t9_consistency(actual, report);
    }
    Ok(())
}

/// The difference row computed by the formula must equal `χ(3) − 120`,
/// and the negation α rows must sum to the derived totals.
fn verify_t9_consistency(t: &TableArtifact, report: &mut VerifyReport) {
    let value = |label: &str, c: usize| -> Option<i64> { t.row(label)?.values.get(c)?.parse().ok() };
    for (c, ty) in SixType::ALL.iter().enumerate() {
        let direct = value("chi(3)", c).map(|v| v - 120);
        report.check(
            "T9",
            "chi(3) - 120",
            ty.name(),
            format!("{:?}", value("difference", c)),
            format!("{direct:?}"),
        );
        let sum: Option<i64> = (0..=2).map(|k| value(&format!("alpha{k}(-)"), c)).sum();
        report.check(
            "T9",
            "alpha sum(-)",
            ty.name(),
            x::T9_NEG_ALPHA_SUM[c].to_string(),
            sum.map_or_else(|| "(missing)".into(), |s| s.to_string()),
        );
    }
}

/// Check the multiplication tables. Printed cells listed as errata are
/// compared with their recomputed values and reported as notes.
pub fn verify_products(report: &mut VerifyReport) -> Result<()> {
    for &(r, c, v) in x::P32_WORKED {
        report.check(
            "P32",
            r,
            c,
            v.into(),
            if agreement(r, c, v)? == Agreement::Exact {
                v.into()
            } else {
                "(differs)".into()
            },
        );
    }
    for check in check_p32_table(x::P32_PRODUCTS)? {
        let erratum = x::P32_ERRATA
            .iter()
            .find(|e| (e.0, e.1) == (check.row.as_str(), check.col.as_str()));
        match erratum {
            Some(&(_, _, printed, fixed)) => {
                let ok = agreement(&check.row, &check.col, fixed)? == Agreement::Exact;
                report.check(
                    "P32",
                    &check.row,
                    &check.col,
                    fixed.into(),
                    if ok { fixed.into() } else { check.computed.clone() },
                );
                report.notes.push(format!(
                    "P32 {} * {}: printed {printed}, computed {fixed} ({:?})",
                    check.row, check.col, check.agreement
                ));
            }
            None => {
                let got = if check.agreement == Agreement::Exact {
                    check.printed.clone()
                } else {
                    check.computed.clone()
                };
                report.check("P32", &check.row, &check.col, check.printed.clone(), got);
            }
        }
    }
    let (checks, failures) = check_p33_rules();
    report.check(
        "P33",
        "rule failures",
        &format!("{checks} products"),
        "0".into(),
        failures.to_string(),
    );
    Ok(())
}

/// Recompute every table, run the census and the product checks.
pub fn verify_all() -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for id in TableId::ALL {
        if id != TableId::Census {
            verify_table(&emit_table(id)?, &mut report)?;
        }
    }
    let census = run_census()?;
    verify_table(&census_table(&census), &mut report)?;
    report.check("census", "l0 != l", "all", "0".into(), census.l0_mismatches.to_string());
    report.check(
        "census",
        "max Q",
        "all",
        x::MAX_INCLUSTERABILITY.to_string(),
        census.max_inclusterability.to_string(),
    );
    verify_products(&mut report)?;
    Ok(report)
}
