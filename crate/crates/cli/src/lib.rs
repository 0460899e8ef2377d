//! Argument handling and rendering for the `atlas` binary.
//!
//! Everything runs in-process through [`run`], which returns the exit code
//! and the text that would go to stdout/stderr. `main` only forwards.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use sheaf_atlas::atlas::{
    enumerate_components, verify_atlas, Atlas, CheckTally, EnumerationOptions, LiteratureNote,
    SummaryRow, VerificationSummary,
};
use sheaf_atlas::audit::module_checks;
use sheaf_atlas::curvecoh::CurveFamily;
use sheaf_atlas::families::ReflexiveFamily;
use sheaf_atlas::transform::{
    build_report_lenient, ComponentDescriptor, ComponentReport, ErratumNote, Status,
    DEFAULT_MIN_CURVE_DEGREE,
};

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
/// Internal failure, I/O error, or a hard invariant failed under `verify`.
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INADMISSIBLE: i32 = 3;

pub const CSV_HEADER: [&str; 11] =
    ["k", "reflexive", "curve", "s", "degL", "chiL", "chiHomFL", "dim", "tangentDim", "conditions", "notes"];

#[derive(Parser, Debug)]
#[command(name = "atlas", version, about = "Enumerate elementary-transformation components of M(0,k,0) on P3")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every admissible component for c2 = K
    Enumerate {
        /// Target second Chern class (k >= 3)
        #[arg(long = "c2", value_name = "K", value_parser = parse_k)]
        k: i64,
        #[command(flatten)]
        common: Common,
    },
    /// Full report for one descriptor
    Describe {
        /// S:a,b,c or V:m
        #[arg(long, value_name = "FAMILY", value_parser = parse_reflexive)]
        reflexive: ReflexiveFamily,
        /// R:d or CI:d1,d2
        #[arg(long, value_name = "FAMILY", value_parser = parse_curve)]
        curve: CurveFamily,
        /// Number of isolated points s
        #[arg(long, value_name = "S")]
        points: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Re-derive every invariant for 3 <= k <= K
    Verify {
        #[arg(long, value_name = "K", default_value_t = 12, value_parser = parse_k)]
        max_k: i64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Smallest curve degree to enumerate
    #[arg(long, value_name = "D", default_value_t = DEFAULT_MIN_CURVE_DEGREE,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub min_curve_degree: u32,
    /// Write output here instead of stdout
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

fn parse_k(s: &str) -> Result<i64, String> {
    let k: i64 = s.trim().parse().map_err(|e| format!("{e}"))?;
    if k < 3 {
        return Err(format!("k = {k} is too small, need k >= 3"));
    }
    Ok(k)
}

fn parse_reflexive(s: &str) -> Result<ReflexiveFamily, String> {
    s.parse().map_err(|e: sheaf_atlas::Error| e.to_string())
}

fn parse_curve(s: &str) -> Result<CurveFamily, String> {
    s.parse().map_err(|e: sheaf_atlas::Error| e.to_string())
}

/// Options echoed into JSON output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocumentOptions {
    pub min_curve_degree: u32,
    pub include_erratum_families: bool,
}

/// Top-level JSON object for `enumerate` and `describe`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasDocument {
    pub schema_version: String,
    pub k: i64,
    pub options: DocumentOptions,
    pub reports: Vec<ComponentReport>,
    pub summary: Vec<SummaryRow>,
    pub literature: Option<LiteratureNote>,
}

impl AtlasDocument {
    pub fn from_atlas(atlas: Atlas, opts: &EnumerationOptions) -> Self {
        AtlasDocument {
            schema_version: SCHEMA_VERSION.into(),
            k: atlas.k,
            options: DocumentOptions {
                min_curve_degree: opts.min_curve_degree,
                include_erratum_families: opts.include_erratum_families,
            },
            reports: atlas.reports,
            summary: atlas.summary,
            literature: atlas.literature,
        }
    }
}

/// Top-level JSON object for `verify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub schema_version: String,
    pub max_k: i64,
    pub options: DocumentOptions,
    pub passed: bool,
    pub per_k: Vec<VerificationSummary>,
    pub module_checks: Vec<CheckTally>,
    /// Distinct mismatches between printed values and recomputed ones.
    pub discrepancies: Vec<ErratumNote>,
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { code, stdout: String::new(), stderr }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
            };
        }
    };
    let (code, body, common) = match &cli.command {
        Command::Enumerate { k, common } => match run_enumerate(*k, common) {
            Ok(body) => (EXIT_OK, body, common),
            Err(o) => return o,
        },
        Command::Describe { reflexive, curve, points, common } => {
            let d = ComponentDescriptor::new(*reflexive, *curve, *points);
            match run_describe(&d, common) {
                Ok(x) => (x.0, x.1, common),
                Err(o) => return o,
            }
        }
        Command::Verify { max_k, common } => match run_verify(*max_k, common) {
            Ok(x) => (x.0, x.1, common),
            Err(o) => return o,
        },
    };
    match &common.output {
        None => Outcome { code, stdout: body, stderr: String::new() },
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome { code, ..Outcome::default() },
            Err(e) => Outcome::fail(EXIT_FAILURE, format!("error: cannot write {}: {e}", path.display())),
        },
    }
}

fn options(k: i64, common: &Common) -> Result<EnumerationOptions, Outcome> {
    let mut opts = EnumerationOptions::new(k).map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: {e}")))?;
    opts.min_curve_degree = common.min_curve_degree;
    Ok(opts)
}

pub fn run_enumerate(k: i64, common: &Common) -> Result<String, Outcome> {
    let opts = options(k, common)?;
    let atlas = enumerate_components(&opts).map_err(|e| Outcome::fail(EXIT_FAILURE, format!("error: {e}")))?;
    let doc = AtlasDocument::from_atlas(atlas, &opts);
    render_atlas(&doc, common.format)
}

/// Exit code is [`EXIT_INADMISSIBLE`] when a condition fails or the curve
/// is below the degree floor; the report is printed either way if it can
/// be computed at all.
pub fn run_describe(d: &ComponentDescriptor, common: &Common) -> Result<(i32, String), Outcome> {
    let report = match build_report_lenient(d) {
        Ok(r) => r,
        Err(e) => {
            let mut msg = format!("error: {d} is inadmissible and has no report: {e}\n");
            for v in sheaf_atlas::transform::check_conditions(d) {
                let _ = writeln!(msg, "  ({}) {} {}", v.id.label(), v.status.symbol(), v.note);
            }
            return Err(Outcome::fail(EXIT_INADMISSIBLE, msg));
        }
    };
    let admissible = report.verdicts.iter().all(|v| v.status != Status::Fails)
        && d.curve.degree() >= common.min_curve_degree;
    let doc = AtlasDocument {
        schema_version: SCHEMA_VERSION.into(),
        k: report.k,
        options: DocumentOptions { min_curve_degree: common.min_curve_degree, include_erratum_families: true },
        reports: vec![report],
        summary: Vec::new(),
        literature: None,
    };
    let body = match common.format {
        Format::Table => describe_table(&doc.reports[0], common.min_curve_degree),
        f => render_atlas(&doc, f)?,
    };
    Ok((if admissible { EXIT_OK } else { EXIT_INADMISSIBLE }, body))
}

pub fn run_verify(max_k: i64, common: &Common) -> Result<(i32, String), Outcome> {
    let internal = |e: sheaf_atlas::Error| Outcome::fail(EXIT_FAILURE, format!("error: {e}"));
    let mut per_k = Vec::new();
    for k in 3..=max_k {
        per_k.push(verify_atlas(&options(k, common)?).map_err(internal)?);
    }
    let modules = module_checks().map_err(internal)?;
    let mut discrepancies: Vec<ErratumNote> = per_k.iter().flat_map(|s| s.erratum_notes.iter().cloned()).collect();
    discrepancies.sort();
    discrepancies.dedup();
    let passed = per_k.iter().all(|s| s.passed) && modules.iter().all(CheckTally::ok);
    let doc = VerifyDocument {
        schema_version: SCHEMA_VERSION.into(),
        max_k,
        options: DocumentOptions { min_curve_degree: common.min_curve_degree, include_erratum_families: true },
        passed,
        per_k,
        module_checks: modules,
        discrepancies,
    };
    let body = match common.format {
        Format::Table => verify_table(&doc),
        Format::Json => to_json(&doc)?,
        Format::Csv => verify_csv(&doc)?,
    };
    Ok((if passed { EXIT_OK } else { EXIT_FAILURE }, body))
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Outcome> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Outcome::fail(EXIT_FAILURE, format!("error: serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn render_atlas(doc: &AtlasDocument, format: Format) -> Result<String, Outcome> {
    match format {
        Format::Table => Ok(atlas_table(doc)),
        Format::Json => to_json(doc),
        Format::Csv => atlas_csv(doc),
    }
}

/// Compact verdict string, e.g. `pts+ mdeg+ disj~ ... defect+`.
pub fn conditions_cell(r: &ComponentReport) -> String {
    r.verdicts.iter().map(|v| format!("{}{}", v.id.label(), v.status.symbol())).collect::<Vec<_>>().join(" ")
}

pub fn notes_cell(r: &ComponentReport) -> String {
    r.erratum_notes.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

fn csv_row(r: &ComponentReport) -> [String; 11] {
    [
        r.k.to_string(),
        r.descriptor.reflexive.to_string(),
        r.descriptor.curve.to_string(),
        r.descriptor.s.to_string(),
        r.deg_l.to_string(),
        r.chi_l.to_string(),
        r.chi_hom_fl.to_string(),
        r.dim_component.to_string(),
        r.dim_tangent.to_string(),
        conditions_cell(r),
        notes_cell(r),
    ]
}

fn csv_error(e: impl std::fmt::Display) -> Outcome {
    Outcome::fail(EXIT_FAILURE, format!("error: csv: {e}"))
}

fn atlas_csv(doc: &AtlasDocument) -> Result<String, Outcome> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(csv_error)?;
    for r in &doc.reports {
        w.write_record(csv_row(r)).map_err(csv_error)?;
    }
    let bytes = w.into_inner().map_err(csv_error)?;
    String::from_utf8(bytes).map_err(csv_error)
}

fn verify_csv(doc: &VerifyDocument) -> Result<String, Outcome> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["k", "check", "hard", "passed", "failed"]).map_err(csv_error)?;
    for s in &doc.per_k {
        for c in &s.checks {
            w.write_record([s.k.to_string(), c.name.clone(), c.hard.to_string(), c.passed.to_string(), c.failed.to_string()])
                .map_err(csv_error)?;
        }
    }
    for c in &doc.module_checks {
        w.write_record(["".into(), c.name.clone(), c.hard.to_string(), c.passed.to_string(), c.failed.to_string()])
            .map_err(csv_error)?;
    }
    let bytes = w.into_inner().map_err(csv_error)?;
    String::from_utf8(bytes).map_err(csv_error)
}

/// Left-aligned columns, widths from the widest cell. Nothing is truncated.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let last = cells.len() - 1;
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i == last {
                out.push_str(cell);
            } else {
                let _ = write!(out, "{cell:<w$}  ");
            }
        }
        let trimmed = out.trim_end_matches(' ').len();
        out.truncate(trimmed);
        out.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn atlas_table(doc: &AtlasDocument) -> String {
    let mut out = format!(
        "k={}  components={}  min-curve-degree={}\n\n",
        doc.k,
        doc.reports.len(),
        doc.options.min_curve_degree
    );
    let header = ["#", "reflexive", "curve", "s", "c2(R)", "c3(R)", "g", "degL", "chiL", "chiHomFL", "dim", "tangentDim", "conditions", "notes"];
    let rows: Vec<Vec<String>> = doc
        .reports
        .iter()
        .enumerate()
        .map(|(i, r)| {
            vec![
                (i + 1).to_string(),
                r.descriptor.reflexive.to_string(),
                r.descriptor.curve.to_string(),
                r.descriptor.s.to_string(),
                r.chern_r.c2.to_string(),
                r.chern_r.c3.to_string(),
                r.genus.to_string(),
                r.deg_l.to_string(),
                r.chi_l.to_string(),
                r.chi_hom_fl.to_string(),
                r.dim_component.to_string(),
                r.dim_tangent.to_string(),
                conditions_cell(r),
                notes_cell(r),
            ]
        })
        .collect();
    if rows.is_empty() {
        out.push_str("(no admissible descriptors)\n");
    } else {
        out.push_str(&table(&header, &rows));
    }
    if !doc.summary.is_empty() {
        out.push_str("\nsummary:");
        for row in &doc.summary {
            let _ = write!(out, "  {}/{}={}", row.reflexive, row.curve, row.count);
        }
        out.push('\n');
    }
    if let Some(lit) = &doc.literature {
        let _ = writeln!(
            out,
            "\nknown components: {} (cited) + {} enumerated here = at least {}",
            lit.previously_known_components, lit.enumerated_new_components, lit.component_lower_bound
        );
        let _ = writeln!(
            out,
            "printed: label {}, dimension {}, spectrum {:?}",
            lit.printed_label, lit.printed_dimension, lit.printed_spectrum
        );
        let _ = writeln!(out, "note: {}", lit.note);
    }
    out.push_str("\nconditions: + holds, ~ holds generically, ! fails\n");
    out
}

fn describe_table(r: &ComponentReport, floor: u32) -> String {
    let mut out = String::new();
    let mut kv = |key: &str, value: String| {
        let _ = writeln!(out, "{key:<22}{value}");
    };
    kv("descriptor", r.descriptor.to_string());
    kv("k", r.k.to_string());
    kv("c(R) resolution", format!("c2={} c3={}", r.chern_r.c2, r.chern_r.c3));
    if let Some(cf) = &r.chern_r_closed_form {
        kv("c(R) closed form", format!("c2={} c3={}", cf.c2, cf.c3));
    }
    kv("c(E)", format!("c1={} c2={} c3={}", r.chern_e.c1, r.chern_e.c2, r.chern_e.c3));
    kv("n", r.n.to_string());
    kv("genus", r.genus.to_string());
    kv("degL", r.deg_l.to_string());
    kv("chiL", r.chi_l.to_string());
    kv("chiHomFL", r.chi_hom_fl.to_string());
    kv("dim Hom(F,Q)/Aut(Q)", r.hom_orbit_dim.to_string());
    kv(
        "dim",
        format!(
            "{} = {} + {} + {} + {} - {}",
            r.dim_component, r.dim_reflexive, r.dim_points, r.dim_picard, r.hom_orbit_dim, r.dim_paut
        ),
    );
    kv(
        "tangentDim",
        format!(
            "{} = {} + {} + {}",
            r.dim_tangent, r.tangent.local_ext1, r.tangent.global_hom, r.tangent.ext1_reflexive
        ),
    );
    kv("h1(N_C)", r.h1_normal.to_string());
    if let Some(p) = &r.stability_margin {
        kv("stability margin", p.to_string());
    }
    let sig = &r.signature;
    kv(
        "singularities",
        format!(
            "curve (deg,g)={:?}  points={}  c3(R)={}",
            sig.curve_parts, sig.isolated_points_from_w, sig.reflexive_sing_c3
        ),
    );
    out.push_str("conditions:\n");
    for v in &r.verdicts {
        let _ = writeln!(out, "  ({}) {} {}", v.id.label(), v.status.symbol(), v.note);
    }
    if r.descriptor.curve.degree() < floor {
        let _ = writeln!(out, "below curve-degree floor {floor}");
    }
    if !r.erratum_notes.is_empty() {
        out.push_str("notes:\n");
        for n in &r.erratum_notes {
            let _ = writeln!(out, "  {n}");
        }
    }
    out
}

fn verify_table(doc: &VerifyDocument) -> String {
    let mut out = String::new();
    let rows: Vec<Vec<String>> = doc
        .per_k
        .iter()
        .map(|s| {
            let failing: Vec<&str> =
                s.checks.iter().filter(|c| c.failed > 0).map(|c| c.name.as_str()).collect();
            vec![
                s.k.to_string(),
                s.reports.to_string(),
                if s.passed { "pass" } else { "FAIL" }.into(),
                if failing.is_empty() { String::new() } else { format!("mismatches: {}", failing.join(", ")) },
            ]
        })
        .collect();
    out.push_str(&table(&["k", "reports", "status", "detail"], &rows));

    out.push_str("\nmodule checks:\n");
    let rows: Vec<Vec<String>> = doc
        .module_checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                if c.hard { "hard" } else { "soft" }.into(),
                c.passed.to_string(),
                c.failed.to_string(),
                if c.ok() { "pass" } else { "FAIL" }.into(),
            ]
        })
        .collect();
    out.push_str(&table(&["check", "kind", "passed", "failed", "status"], &rows));

    out.push_str("\ndiscrepancies with printed values:\n");
    if doc.discrepancies.is_empty() {
        out.push_str("  none\n");
    }
    for n in &doc.discrepancies {
        let _ = writeln!(out, "  {n}");
    }
    let _ = writeln!(out, "\nresult: {}", if doc.passed { "pass" } else { "FAIL" });
    out
}
