use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use delta_core::catalog::load_catalog;
use delta_core::delta::{local_delta, RowKind, Status};
use delta_core::zariski::ZariskiProfile;
use delta_core::{
    builtin_models, find_model, fmt_q, global_delta, verify_table, Evaluator, SurfaceModel, Q,
};

#[derive(Parser)]
#[command(
    name = "delta",
    version,
    about = "Exact δ-invariants of Du Val del Pezzo surfaces"
)]
struct Cli {
    /// Catalog file replacing the built-in models
    #[arg(long, global = true, env = "DELTA_CATALOG")]
    catalog: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog models
    List {
        #[arg(long)]
        degree: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Global δ of a model, or local δ at one point type
    Compute {
        model: String,
        #[arg(long)]
        point: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Zariski chamber profile of −K − vC for a curve C
    DumpProfile {
        model: String,
        flag: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Computed δ for every model, laid out like the reference table
    Table {
        #[arg(long)]
        degree: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
    /// Validate the catalog and recompute every transcribed value
    Verify {
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Markdown,
    Json,
}

/// Failure that maps to an exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

fn lookup(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure { code, message }) => {
            if !message.is_empty() {
                eprintln!("error: {message}");
            }
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let models = match &cli.catalog {
        Some(p) => load_catalog(p).map_err(|e| lookup(e.to_string()))?,
        None => builtin_models(),
    };
    match cli.command {
        Command::List { degree, format } => Ok(list(&models, degree, format)),
        Command::Compute {
            model,
            point,
            format,
        } => compute(&models, &model, point.as_deref(), format),
        Command::DumpProfile {
            model,
            flag,
            format,
        } => dump_profile(&models, &model, &flag, format),
        Command::Table { degree, format } => table(&models, degree, format),
        Command::Verify { format } => verify(&models, format),
    }
}

fn by_degree(models: &[SurfaceModel], degree: Option<i64>) -> Vec<&SurfaceModel> {
    models
        .iter()
        .filter(|m| degree.is_none_or(|d| m.degree == Q::from_integer(d.into())))
        .collect()
}

fn lines_of(m: &SurfaceModel) -> u32 {
    m.lines.unwrap_or(m.count_lines() as u32)
}

fn sing_label(m: &SurfaceModel) -> &str {
    if m.is_smooth() {
        "smooth"
    } else {
        &m.singularities
    }
}

fn opt_q(x: &Option<Q>) -> String {
    x.as_ref().map(fmt_q).unwrap_or_else(|| "-".into())
}

/// Plain or markdown table from a header and rows.
fn render_table(head: &[&str], rows: &[Vec<String>], format: Format) -> String {
    let mut out = String::new();
    if format == Format::Markdown {
        let _ = writeln!(out, "| {} |", head.join(" | "));
        let _ = writeln!(out, "|{}", "---|".repeat(head.len()));
        for r in rows {
            let _ = writeln!(out, "| {} |", r.join(" | "));
        }
        return out;
    }
    let mut w: Vec<usize> = head.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (k, c) in r.iter().enumerate() {
            w[k] = w[k].max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&w)
            .map(|(c, &n)| format!("{c}{}", " ".repeat(n - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let _ = writeln!(out, "{}", line(head.to_vec()));
    for r in rows {
        let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn to_json(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json value"))
}

fn list(models: &[SurfaceModel], degree: Option<i64>, format: Format) -> String {
    let ms = by_degree(models, degree);
    if format == Format::Json {
        let v: Vec<Value> = ms
            .iter()
            .map(|m| {
                json!({
                    "name": m.name,
                    "degree": fmt_q(&m.degree),
                    "singularities": sing_label(m),
                    "lines": lines_of(m),
                    "expected_delta": m.expected_global_delta.as_ref().map(fmt_q),
                })
            })
            .collect();
        return to_json(&Value::Array(v));
    }
    let rows: Vec<Vec<String>> = ms
        .iter()
        .map(|m| {
            vec![
                m.name.clone(),
                fmt_q(&m.degree),
                sing_label(m).to_string(),
                lines_of(m).to_string(),
                opt_q(&m.expected_global_delta),
            ]
        })
        .collect();
    render_table(
        &["model", "degree", "singularities", "lines", "delta"],
        &rows,
        format,
    )
}

fn compute(
    models: &[SurfaceModel],
    name: &str,
    point: Option<&str>,
    format: Format,
) -> Result<String, Failure> {
    let m = find_model(models, name).ok_or_else(|| lookup(format!("unknown model `{name}`")))?;
    let ev = Evaluator::new();
    let r = match point {
        Some(label) => {
            let pt = m
                .point(label)
                .ok_or_else(|| lookup(format!("model `{name}` has no point `{label}`")))?;
            local_delta(&ev, m, pt)
        }
        None => global_delta(&ev, m),
    }
    .map_err(|e| lookup(e.to_string()))?;
    Ok(match format {
        Format::Json => to_json(&json!({
            "model": m.name,
            "point": point,
            "result": r,
        })),
        _ => format!("{r}\nwitness: {}\n", r.witness),
    })
}

fn dump_profile(
    models: &[SurfaceModel],
    name: &str,
    flag: &str,
    format: Format,
) -> Result<String, Failure> {
    let m = find_model(models, name).ok_or_else(|| lookup(format!("unknown model `{name}`")))?;
    let i = m
        .index_of(flag)
        .ok_or_else(|| lookup(format!("model `{name}` has no curve `{flag}`")))?;
    let ev = Evaluator::new();
    let p = ev.profile(m, i).map_err(|e| lookup(e.to_string()))?;
    let s = delta_core::invariants::s_of_profile(&p);
    Ok(match format {
        Format::Json => to_json(&profile_json(m, &p, &s)),
        _ => profile_plain(m, &p, &s),
    })
}

fn support_terms(
    m: &SurfaceModel,
    seg: &delta_core::zariski::ZariskiSegment,
) -> Vec<(String, String)> {
    seg.support
        .iter()
        .zip(&seg.coeff)
        .map(|(&c, f)| (m.generator_name(c).to_string(), f.to_string()))
        .collect()
}

fn profile_plain(m: &SurfaceModel, p: &ZariskiProfile, s: &Q) -> String {
    let mut out = String::new();
    for seg in &p.segments {
        let _ = writeln!(out, "[{}, {}]", fmt_q(&seg.v_lo), fmt_q(&seg.v_hi));
        let terms = support_terms(m, seg);
        if terms.is_empty() {
            let _ = writeln!(out, "  N: 0");
        } else {
            let shown: Vec<String> = terms.iter().map(|(n, f)| format!("[{f}]{n}")).collect();
            let _ = writeln!(out, "  N: {}", shown.join(" + "));
        }
        let _ = writeln!(out, "  P^2: {}", seg.psq);
    }
    let _ = writeln!(out, "tau: {}", fmt_q(&p.tau));
    let _ = writeln!(out, "S: {}", fmt_q(s));
    out
}

fn profile_json(m: &SurfaceModel, p: &ZariskiProfile, s: &Q) -> Value {
    let segs: Vec<Value> = p
        .segments
        .iter()
        .map(|seg| {
            let support: Vec<Value> = seg
                .support
                .iter()
                .zip(&seg.coeff)
                .map(|(&c, f)| {
                    json!({
                        "curve": m.generator_name(c),
                        "coeff": f.padded(2).iter().map(fmt_q).collect::<Vec<_>>(),
                    })
                })
                .collect();
            json!({
                "from": fmt_q(&seg.v_lo),
                "to": fmt_q(&seg.v_hi),
                "support": support,
                "psq": seg.psq.padded(3).iter().map(fmt_q).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "model": m.name,
        "segments": segs,
        "tau": fmt_q(&p.tau),
        "S": fmt_q(s),
    })
}

fn table(models: &[SurfaceModel], degree: Option<i64>, format: Format) -> Result<String, Failure> {
    let ev = Evaluator::new();
    let mut rows = Vec::new();
    for m in by_degree(models, degree) {
        let r = global_delta(&ev, m).map_err(|e| lookup(format!("{}: {e}", m.name)))?;
        rows.push((m, r));
    }
    if format == Format::Json {
        let v: Vec<Value> = rows
            .iter()
            .map(|(m, r)| {
                json!({
                    "model": m.name,
                    "degree": fmt_q(&m.degree),
                    "lines": lines_of(m),
                    "singularities": sing_label(m),
                    "delta": r,
                })
            })
            .collect();
        return Ok(to_json(&Value::Array(v)));
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|(m, r)| {
            let d = if r.exact {
                fmt_q(&r.lower)
            } else {
                format!("[{}, {}]", fmt_q(&r.lower), fmt_q(&r.upper))
            };
            vec![
                fmt_q(&m.degree),
                lines_of(m).to_string(),
                sing_label(m).to_string(),
                d,
            ]
        })
        .collect();
    Ok(render_table(
        &["degree", "#lines", "singularities", "δ"],
        &cells,
        format,
    ))
}

fn verify(models: &[SurfaceModel], format: Format) -> Result<String, Failure> {
    let report = verify_table(models);
    let singular: Vec<&str> = models
        .iter()
        .filter(|m| !m.is_smooth())
        .map(|m| m.name.as_str())
        .collect();
    let global_rows = report
        .rows
        .iter()
        .filter(|r| r.kind == RowKind::Global && singular.contains(&r.model.as_str()));
    let (total, passed) = global_rows.fold((0, 0), |(t, p), r| {
        (t + 1, p + usize::from(r.status == Status::Pass))
    });
    let summary = format!(
        "singular rows: {passed}/{total} PASS; failures: {}; errata: {}",
        report
            .rows
            .iter()
            .filter(|r| r.status == Status::Fail)
            .count(),
        report
            .rows
            .iter()
            .filter(|r| r.status == Status::Erratum)
            .count(),
    );
    let out = match format {
        Format::Json => to_json(&json!({
            "ok": report.ok(),
            "singular_passed": passed,
            "singular_total": total,
            "rows": report.rows,
        })),
        _ => {
            let cells: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.status.to_string(),
                        r.model.clone(),
                        r.item.clone(),
                        r.expected.clone(),
                        r.computed.clone(),
                        r.note.clone(),
                    ]
                })
                .collect();
            let mut t = render_table(
                &["status", "model", "item", "expected", "computed", "note"],
                &cells,
                format,
            );
            let _ = writeln!(t, "\n{summary}");
            t
        }
    };
    if report.ok() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure {
            code: 1,
            message: String::new(),
        })
    }
}
