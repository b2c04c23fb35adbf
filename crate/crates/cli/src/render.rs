//! Table, JSON and CSV output.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

use clap::ValueEnum;
use mnsd_core::filters::citation;
use mnsd_core::{
    ClassificationReport, DiscrepancyReport, F2Mode, FactoredInt, FilterId, FilterVerdict, Judged,
    Mode, Stage, Status, TypeVector, ENGINE_VERSION,
};
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Format::from_str_value(s)
    }
}

impl Format {
    fn from_str_value(s: &str) -> Result<Self, String> {
        <Format as ValueEnum>::from_str(s.trim(), false)
            .map_err(|_| format!("unknown format `{s}`"))
    }
}

fn millis(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s =
        serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv_rows<R: Serialize>(rows: impl IntoIterator<Item = R>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row)
            .map_err(|e| CliError::Internal(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

fn stage_of(filter: FilterId) -> Stage {
    if filter.is_basic() {
        Stage::Prefilter
    } else {
        Stage::Final
    }
}

fn first_reject(j: &Judged) -> Option<&FilterVerdict> {
    j.verdicts.iter().find(|v| v.status == Status::Reject)
}

fn discrepancy_lines(out: &mut String, d: &DiscrepancyReport) {
    if d.is_empty() {
        let _ = writeln!(out, "reference {} {}: agrees", d.stage, d.dimension);
        return;
    }
    let _ = writeln!(out, "reference {} {}: MISMATCH", d.stage, d.dimension);
    for t in &d.missing_from_engine {
        let _ = writeln!(out, "  missing from engine  {t}");
    }
    for t in &d.extra_in_engine {
        let _ = writeln!(out, "  extra in engine      {t}");
    }
}

#[derive(Serialize)]
struct ClassifyJson<'a> {
    #[serde(flatten)]
    report: &'a ClassificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    discrepancy: Option<&'a DiscrepancyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

#[derive(Serialize)]
struct TypeRow<'a> {
    dimension: u64,
    #[serde(rename = "type")]
    candidate: &'a TypeVector,
    outcome: &'static str,
    stage: Stage,
    filter: &'a str,
    citation: &'a str,
    reason: &'a str,
}

fn type_rows(r: &ClassificationReport) -> Vec<TypeRow<'_>> {
    let stage = r.mode.stage();
    let mut rows: Vec<TypeRow<'_>> = r
        .survivors
        .iter()
        .map(|t| TypeRow {
            dimension: r.dimension,
            candidate: t,
            outcome: "survivor",
            stage,
            filter: "",
            citation: "",
            reason: "",
        })
        .collect();
    for j in &r.unresolved {
        let v = &j.verdicts[0];
        rows.push(TypeRow {
            dimension: r.dimension,
            candidate: &j.candidate,
            outcome: "unresolved",
            stage,
            filter: v.filter.name(),
            citation: v.citation,
            reason: &v.reason,
        });
    }
    for j in &r.rejections {
        if let Some(v) = first_reject(j) {
            rows.push(TypeRow {
                dimension: r.dimension,
                candidate: &j.candidate,
                outcome: "rejected",
                stage: stage_of(v.filter),
                filter: v.filter.name(),
                citation: v.citation,
                reason: &v.reason,
            });
        }
    }
    rows
}

pub fn classify(
    r: &ClassificationReport,
    discrepancy: Option<&DiscrepancyReport>,
    format: Format,
    explain: bool,
    timing: bool,
) -> Result<String, CliError> {
    match format {
        Format::Json => json(&ClassifyJson {
            report: r,
            discrepancy,
            elapsed_ms: timing.then(|| millis(r.elapsed)),
        }),
        Format::Csv => csv_rows(type_rows(r)),
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "dimension   {} = {}", r.dimension, r.factorization);
            let _ = writeln!(out, "mode        {} (f2 {})", r.mode, r.f2_mode);
            let _ = writeln!(out, "raw         {} candidates", r.raw_count);
            let _ = writeln!(out, "survivors   {}", r.survivors.len());
            for t in &r.survivors {
                let _ = writeln!(out, "  {t}");
            }
            let _ = writeln!(out, "unresolved  {}", r.unresolved.len());
            for j in &r.unresolved {
                for v in &j.verdicts {
                    let _ = writeln!(out, "  {}  {}  {}", j.candidate, v.filter, v.reason);
                }
            }
            let _ = writeln!(out, "rejected    {}", r.rejections.len());
            if explain {
                for j in &r.rejections {
                    for v in j.verdicts.iter().filter(|v| v.status == Status::Reject) {
                        let _ = writeln!(
                            out,
                            "  {}  {}  [{}]  {}",
                            j.candidate, v.filter, v.citation, v.reason
                        );
                    }
                }
            } else {
                for id in FilterId::ALL {
                    let n = r
                        .rejections
                        .iter()
                        .filter(|j| first_reject(j).map(|v| v.filter) == Some(id))
                        .count();
                    if n > 0 {
                        let _ = writeln!(out, "  {:<30} {n}", id.name());
                    }
                }
            }
            if let Some(d) = discrepancy {
                discrepancy_lines(&mut out, d);
            }
            if timing {
                let _ = writeln!(out, "elapsed     {:.3} ms", millis(r.elapsed));
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct ScanJson<'a> {
    max: u64,
    mode: Mode,
    f2_mode: F2Mode,
    engine_version: &'static str,
    dimensions: Vec<DimensionSummary<'a>>,
    non_pointed: Vec<NonPointed<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    discrepancies: Option<&'a [DiscrepancyReport]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

#[derive(Serialize)]
struct DimensionSummary<'a> {
    dimension: u64,
    factorization: &'a FactoredInt,
    raw_count: usize,
    survivors: &'a [TypeVector],
    rejected: usize,
    unresolved: &'a [Judged],
    #[serde(skip_serializing_if = "Option::is_none")]
    shortcut: Option<FilterId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

#[derive(Serialize)]
struct NonPointed<'a> {
    dimension: u64,
    #[serde(rename = "type")]
    candidate: &'a TypeVector,
}

pub struct ScanView<'a> {
    pub max: u64,
    pub mode: Mode,
    pub f2_mode: F2Mode,
    pub reports: &'a [&'a ClassificationReport],
    pub discrepancies: Option<&'a [DiscrepancyReport]>,
    pub elapsed: Duration,
}

fn non_pointed<'a>(reports: &[&'a ClassificationReport]) -> Vec<NonPointed<'a>> {
    reports
        .iter()
        .flat_map(|r| {
            r.non_pointed_survivors().map(|t| NonPointed {
                dimension: r.dimension,
                candidate: t,
            })
        })
        .collect()
}

pub fn scan(view: &ScanView<'_>, format: Format, timing: bool) -> Result<String, CliError> {
    match format {
        Format::Json => json(&ScanJson {
            max: view.max,
            mode: view.mode,
            f2_mode: view.f2_mode,
            engine_version: ENGINE_VERSION,
            dimensions: view
                .reports
                .iter()
                .map(|r| DimensionSummary {
                    dimension: r.dimension,
                    factorization: &r.factorization,
                    raw_count: r.raw_count,
                    survivors: &r.survivors,
                    rejected: r.rejections.len(),
                    unresolved: &r.unresolved,
                    shortcut: r.shortcut,
                    elapsed_ms: timing.then(|| millis(r.elapsed)),
                })
                .collect(),
            non_pointed: non_pointed(view.reports),
            discrepancies: view.discrepancies,
            elapsed_ms: timing.then(|| millis(view.elapsed)),
        }),
        // survivors and unresolved types only; a full rejection listing for
        // a wide scan runs to millions of rows
        Format::Csv => csv_rows(view.reports.iter().flat_map(|r| {
            type_rows(r)
                .into_iter()
                .filter(|row| row.outcome != "rejected")
        })),
        Format::Table => {
            let mut out = String::new();
            for r in view.reports {
                let _ = write!(
                    out,
                    "{:>6}  {:<16} raw {:>7}  survivors {:>2}  unresolved {}",
                    r.dimension,
                    r.factorization.to_string(),
                    r.raw_count,
                    r.survivors.len(),
                    r.unresolved.len()
                );
                if let Some(f) = r.shortcut {
                    let _ = write!(out, "  ({} shortcut)", f.key());
                }
                if timing {
                    let _ = write!(out, "  {:.3} ms", millis(r.elapsed));
                }
                out.push('\n');
            }
            let rows = non_pointed(view.reports);
            if rows.is_empty() {
                let _ = writeln!(out, "\nnon-pointed survivors: none");
            } else {
                let _ = writeln!(out, "\nnon-pointed survivors");
                for row in rows {
                    let _ = writeln!(out, "{:>6}  {}", row.dimension, row.candidate);
                }
            }
            for r in view.reports {
                for j in &r.unresolved {
                    let _ = writeln!(out, "UNRESOLVED {:>6}  {}", r.dimension, j.candidate);
                }
            }
            if let Some(ds) = view.discrepancies {
                out.push('\n');
                for d in ds {
                    discrepancy_lines(&mut out, d);
                }
            }
            if timing {
                let _ = writeln!(out, "elapsed {:.3} ms", millis(view.elapsed));
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct VerdictRow<'a> {
    filter: FilterId,
    key: &'static str,
    status: Status,
    reason: &'a str,
    citation: &'static str,
    statement: &'static str,
}

fn statement(key: &str) -> &'static str {
    citation(key).map(|c| c.statement).unwrap_or("")
}

pub fn explain(
    n: u64,
    t: &TypeVector,
    verdicts: &[FilterVerdict],
    format: Format,
) -> Result<String, CliError> {
    let rows = verdicts.iter().map(|v| VerdictRow {
        filter: v.filter,
        key: v.filter.key(),
        status: v.status,
        reason: &v.reason,
        citation: v.citation,
        statement: statement(v.citation),
    });
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct ExplainJson<'a> {
                dimension: u64,
                #[serde(rename = "type")]
                candidate: &'a TypeVector,
                engine_version: &'static str,
                verdicts: Vec<VerdictRow<'a>>,
            }
            json(&ExplainJson {
                dimension: n,
                candidate: t,
                engine_version: ENGINE_VERSION,
                verdicts: rows.collect(),
            })
        }
        Format::Csv => csv_rows(rows),
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "{t} at dimension {n}");
            for row in rows {
                let _ = writeln!(
                    out,
                    "{:<4} {:<30} {:<12} {}",
                    row.key,
                    row.filter.name(),
                    row.status.to_string(),
                    row.reason
                );
                if row.status == Status::Reject {
                    let _ = writeln!(out, "     [{}] {}", row.citation, row.statement);
                }
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct CatalogRow {
    key: &'static str,
    name: &'static str,
    stage: Stage,
    hypothesis: &'static str,
    citation: &'static str,
    statement: &'static str,
}

pub fn filters(format: Format) -> Result<String, CliError> {
    let rows = FilterId::ALL.iter().map(|&id| CatalogRow {
        key: id.key(),
        name: id.name(),
        stage: stage_of(id),
        hypothesis: id.hypothesis_text(),
        citation: id.citation_key(),
        statement: statement(id.citation_key()),
    });
    match format {
        Format::Json => json(&rows.collect::<Vec<_>>()),
        Format::Csv => csv_rows(rows),
        Format::Table => {
            let mut out = String::new();
            for row in rows {
                let _ = writeln!(out, "{:<4} {:<30} {}", row.key, row.name, row.stage);
                let _ = writeln!(out, "     when: {}", row.hypothesis);
                let _ = writeln!(out, "     [{}] {}", row.citation, row.statement);
            }
            Ok(out)
        }
    }
}
