//! Command-line front end. `run` renders every command to a deterministic
//! string and an exit code so the binary stays a thin wrapper.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use parhecke::cherncalc::{parch, parch_conditions, ParabolicParams};
use parhecke::divcalc;
use parhecke::heckegeo::{
    closed_form_anchors, hecke_anchor_values, hecke_line_map, iota_map, HeckeInput, PencilConfig,
};
use parhecke::lines16::{intersection_matrix, line_class, pic_pair, projector, LineLabel};
use parhecke::modstab::{chamber_of, is_stable_deg0_k0, FlagConfig0, Verdict};
use parhecke::okamoto::okamoto_matrix;
use parhecke::projective::P1;
use parhecke::sampling::RationalSampler;
use parhecke::solver::{chern_family_sample, pipeline, thm14_audit, ParamSet, PipelineChoices};
use parhecke::suite::{run_all, Status, SuiteConfig};
use parhecke::{q, QMatrix, QVector, Rational};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse {what} from {value:?}: {msg}")]
    Parse { what: String, value: String, msg: String },
    #[error("{path}: {msg}")]
    Input { path: PathBuf, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(String),
}

fn compute<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    /// The 49x58 curve table.
    Curves,
    /// The curve table with the Delta-hat column in front.
    CurvesDelta,
    /// g^* from Pic(H) to Pic(H-tilde).
    GStar,
}

#[derive(Debug, Parser)]
#[command(
    name = "parhecke",
    version,
    about = "Exact checks for parabolic Hecke data on the quartic del Pezzo"
)]
pub struct Cli {
    /// Seed for every randomized sample.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Overrides randomized sample counts.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// JSON input; its meaning depends on the command.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Labels, intersection matrix, eigenprojectors and the Gram check.
    Lines,
    /// Degree-0 stability of five flags at (0, 1, inf, p4, p5).
    Stability {
        #[arg(long, allow_hyphen_values = true)]
        p4: String,
        #[arg(long, allow_hyphen_values = true)]
        p5: String,
        /// Five comma-separated flags, `inf` for infinity.
        #[arg(long, allow_hyphen_values = true)]
        flags: Option<String>,
        /// A weight; all four chambers when omitted.
        #[arg(long)]
        q: Option<String>,
    },
    /// Anchor values and the Moebius map of a Hecke line.
    HeckeLine {
        #[arg(long, allow_hyphen_values = true)]
        p4: String,
        #[arg(long, allow_hyphen_values = true)]
        p5: String,
        #[arg(long, allow_hyphen_values = true)]
        f4: String,
        #[arg(long, allow_hyphen_values = true)]
        f5: String,
    },
    /// The map iota for a pencil with parameters l4, l5.
    Iota {
        #[arg(long, allow_hyphen_values = true)]
        l4: String,
        #[arg(long, allow_hyphen_values = true)]
        l5: String,
    },
    /// Parabolic Chern character; `--input` takes {"e": .., "d": ..}.
    Chern {
        /// Eigenspace(-4) part of d for a family member.
        #[arg(long, allow_hyphen_values = true)]
        d5: Option<String>,
        /// Eigenspace(0) part of d for a family member.
        #[arg(long, allow_hyphen_values = true)]
        d10: Option<String>,
    },
    /// Full pipeline from weights; `--input` takes pipeline choices.
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Report the closed-form e, d test instead of solving.
        #[arg(long)]
        audit_thm14: bool,
    },
    /// The reduced Okamoto matrix.
    Okamoto,
    /// Divisor checks on a parameter set, or table export.
    Divisors {
        #[arg(long)]
        check_kernel: Option<PathBuf>,
        #[arg(long)]
        check_hecke: Option<PathBuf>,
        #[arg(long, value_enum)]
        csv: Option<Table>,
    },
    /// Every numbered check plus the audit registry.
    VerifyAll,
}

/// Rendered output and exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

struct Report {
    text: String,
    json: Value,
    failed: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            failed: false,
        }
    }
}

pub fn parse_rational(what: &str, s: &str) -> Result<Rational, CliError> {
    s.trim().parse().map_err(|e: parhecke::qcore::QError| CliError::Parse {
        what: what.into(),
        value: s.into(),
        msg: e.to_string(),
    })
}

pub fn parse_vector(what: &str, s: &str, len: usize) -> Result<QVector, CliError> {
    let v: Vec<Rational> = s
        .split(',')
        .enumerate()
        .map(|(i, x)| parse_rational(&format!("{what}[{i}]"), x))
        .collect::<Result<_, _>>()?;
    if v.len() != len {
        return Err(CliError::Parse {
            what: what.into(),
            value: s.into(),
            msg: format!("expected {len} entries, got {}", v.len()),
        });
    }
    Ok(QVector(v))
}

pub fn parse_p1(what: &str, s: &str) -> Result<P1, CliError> {
    match s.trim() {
        "inf" | "infinity" => Ok(P1::Infinity),
        x => Ok(P1::Finite(parse_rational(what, x)?)),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let raw = fs::read_to_string(path).map_err(|e| CliError::Input {
        path: path.into(),
        msg: e.to_string(),
    })?;
    serde_json::from_str(&raw).map_err(|e| CliError::Input {
        path: path.into(),
        msg: format!("line {}, column {}: {e}", e.line(), e.column()),
    })
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn matrix_text(m: &QMatrix) -> String {
    let mut s = String::new();
    for r in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols())
            .map(|c| format!("{:>6}", m.get(r, c).to_string()))
            .collect();
        writeln!(s, "{}", row.join(" ")).expect("string write");
    }
    s
}

fn matrix_json(m: &QMatrix) -> Value {
    Value::Array((0..m.nrows()).map(|r| to_json(&m.row(r))).collect())
}

fn cmd_lines() -> Result<Report, CliError> {
    let labels = LineLabel::all();
    let ii = intersection_matrix();
    let mut gram_ok = true;
    for (r, a) in labels.iter().enumerate() {
        for (c, b) in labels.iter().enumerate() {
            gram_ok &= pic_pair(&line_class(*a), &line_class(*b)) == *ii.get(r, c);
        }
    }
    let mut text = String::from("labels:");
    for l in &labels {
        write!(text, " {l}").expect("string write");
    }
    text.push_str("\nintersection matrix:\n");
    text.push_str(&matrix_text(&ii));
    let mut proj = serde_json::Map::new();
    for ev in [q(4, 1), q(-4, 1), Rational::zero()] {
        let p = projector(&ev).map_err(compute)?;
        writeln!(text, "projector {ev} (rank {}):", p.rank()).expect("string write");
        text.push_str(&matrix_text(&p));
        proj.insert(ev.to_string(), matrix_json(&p));
    }
    writeln!(text, "gram check: {}", if gram_ok { "PASS" } else { "FAIL" }).expect("string write");
    Ok(Report {
        text,
        json: json!({
            "labels": to_json(&labels),
            "intersection_matrix": matrix_json(&ii),
            "projectors": proj,
            "gram_check": gram_ok,
        }),
        failed: !gram_ok,
    })
}

fn cmd_stability(
    input: Option<&Path>,
    p4: &str,
    p5: &str,
    flags: Option<&str>,
    qv: Option<&str>,
) -> Result<Report, CliError> {
    let cfg = match input {
        Some(path) => read_json::<FlagConfig0>(path)?,
        None => {
            let pts = [
                P1::int(0),
                P1::int(1),
                P1::Infinity,
                parse_p1("p4", p4)?,
                parse_p1("p5", p5)?,
            ];
            let flags = flags.ok_or_else(|| CliError::Usage("stability needs --flags or --input".into()))?;
            let parsed: Vec<P1> = flags
                .split(',')
                .enumerate()
                .map(|(i, f)| parse_p1(&format!("flags[{i}]"), f))
                .collect::<Result<_, _>>()?;
            let arr: [P1; 5] = parsed.try_into().map_err(|v: Vec<P1>| CliError::Parse {
                what: "flags".into(),
                value: flags.into(),
                msg: format!("expected 5 entries, got {}", v.len()),
            })?;
            FlagConfig0::new(pts, arr).map_err(compute)?
        }
    };
    let qs = match qv {
        Some(s) => vec![parse_rational("q", s)?],
        None => vec![q(1, 5), q(1, 2), q(7, 10), q(9, 10)],
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for x in qs {
        let ch = chamber_of(&x).map_err(compute)?;
        let v = is_stable_deg0_k0(&cfg, &x).map_err(compute)?;
        writeln!(
            text,
            "q = {x} ({ch:?}): {}",
            match &v {
                Verdict::Stable => "STABLE".to_string(),
                Verdict::Unstable(why) => format!("UNSTABLE {why:?}"),
            }
        )
        .expect("string write");
        rows.push(json!({"q": x.to_string(), "chamber": to_json(&ch), "verdict": to_json(&v)}));
    }
    Ok(Report::ok(text, Value::Array(rows)))
}

fn cmd_hecke_line(p4: &str, p5: &str, f4: &str, f5: &str) -> Result<Report, CliError> {
    let x = HeckeInput::new(
        parse_rational("p4", p4)?,
        parse_rational("p5", p5)?,
        parse_rational("f4", f4)?,
        parse_rational("f5", f5)?,
    )
    .map_err(compute)?;
    let oracle = hecke_anchor_values(&x).map_err(compute)?;
    let closed = closed_form_anchors(&x).map_err(compute)?;
    let m = hecke_line_map(&x).map_err(compute)?.normalized();
    let agree = oracle == closed;
    let text = format!(
        "h(0) = {}\nh(1) = {}\nh(inf) = {}\nclosed forms agree: {}\nmap: z -> ({} z + {}) / ({} z + {})\n",
        oracle.h0,
        oracle.h1,
        oracle.hinf,
        if agree { "PASS" } else { "FAIL" },
        m.a,
        m.b,
        m.c,
        m.d
    );
    Ok(Report {
        text,
        json: json!({"anchors": to_json(&oracle), "closed_forms": to_json(&closed), "agree": agree, "map": to_json(&m)}),
        failed: !agree,
    })
}

fn cmd_iota(l4: &str, l5: &str) -> Result<Report, CliError> {
    let c = PencilConfig::new(parse_rational("l4", l4)?, parse_rational("l5", l5)?).map_err(compute)?;
    let r = iota_map(&c).map_err(compute)?;
    let imgs: Vec<String> = r.images.iter().map(ToString::to_string).collect();
    let text = format!(
        "alpha = {}, beta = {}, gamma = {}\nimages of l1..l5: {}\n",
        r.alpha,
        r.beta,
        r.gamma,
        imgs.join(", ")
    );
    Ok(Report::ok(text, to_json(&r)))
}

fn parch_row(e: &QVector, d: &QVector) -> (String, Value, bool) {
    let p = parch(e, d);
    let c = parch_conditions(e, d);
    let ok = p.is_target();
    (
        format!(
            "parch0 = {}, parch1 vanishes: {}, parch2 = {}, linear: {}, quadratic: {}\n",
            p.parch0,
            p.parch1_vanishes(),
            p.parch2,
            c.linear,
            c.quadratic
        ),
        json!({"e": to_json(e), "d": to_json(d), "parch": to_json(&p), "conditions": to_json(&c), "target": ok}),
        ok,
    )
}

fn cmd_chern(cli: &Cli, d5: Option<&str>, d10: Option<&str>) -> Result<Report, CliError> {
    let sixteen = |what: &str, s: Option<&str>| -> Result<QVector, CliError> {
        s.map_or(Ok(QVector::zeros(16)), |s| parse_vector(what, s, 16))
    };
    if let Some(path) = &cli.input {
        let p: ParabolicParams = read_json(path)?;
        let (text, json, _) = parch_row(&p.e, &p.d);
        return Ok(Report::ok(text, json));
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut failed = false;
    let first = chern_family_sample(&sixteen("d5", d5)?, &sixteen("d10", d10)?).map_err(compute)?;
    let mut members = vec![first];
    let mut s = RationalSampler::with_bound(cli.seed, 50);
    for _ in 0..cli.samples.unwrap_or(0) {
        members.push(chern_family_sample(&s.vector(16), &s.vector(16)).map_err(compute)?);
    }
    for m in members {
        let (t, j, ok) = parch_row(&m.e, &m.d);
        writeln!(text, "e = {}\nd = {}", m.e, m.d).expect("string write");
        text.push_str(&t);
        rows.push(j);
        failed |= !ok;
    }
    Ok(Report {
        text,
        json: Value::Array(rows),
        failed,
    })
}

fn cmd_solve(cli: &Cli, a: &str, b: &str, audit: bool) -> Result<Report, CliError> {
    let a = parse_vector("a", a, 5)?;
    let b = parse_vector("b", b, 5)?;
    if audit {
        let r = thm14_audit(&a, &b).map_err(compute)?;
        let text = format!(
            "e = {}\nd = {}\nI(e + 3d - sigma) = {}\npredicted = {}\nquadratic = {}\nstatus: {:?}\n",
            r.e, r.d, r.linear_residual, r.predicted_residual, r.quadratic_residual, r.entry.status
        );
        return Ok(Report::ok(text, to_json(&r)));
    }
    let choices: PipelineChoices = match &cli.input {
        Some(p) => read_json(p)?,
        None => PipelineChoices::default(),
    };
    match pipeline(&a, &b, &choices) {
        Ok((p, cert)) => {
            let mut text = format!(
                "A = {}\nB = {}\nC = {}\nd = {}\ne = {}\n",
                p.big_a, p.big_b, p.big_c, p.d, p.e
            );
            for c in &cert.checks {
                writeln!(text, "{}: {}", c.name, if c.ok { "PASS" } else { "FAIL" }).expect("string write");
            }
            Ok(Report {
                text,
                json: json!({"params": to_json(&p), "certificate": to_json(&cert)}),
                failed: !cert.all_ok(),
            })
        }
        Err(e) => Ok(Report {
            text: format!("{e}\n"),
            json: json!({"error": e.to_string()}),
            failed: true,
        }),
    }
}

fn cmd_okamoto() -> Result<Report, CliError> {
    let m = okamoto_matrix();
    Ok(Report::ok(matrix_text(&m), matrix_json(&m)))
}

fn cmd_divisors(
    cli: &Cli,
    kernel: Option<&Path>,
    hecke: Option<&Path>,
    table: Option<Table>,
) -> Result<Report, CliError> {
    if let Some(t) = table {
        let csv = match t {
            Table::Curves => divcalc::curve_table_csv(false),
            Table::CurvesDelta => divcalc::curve_table_csv(true),
            Table::GStar => divcalc::g_star_csv(),
        };
        return Ok(Report::ok(csv.clone(), Value::String(csv)));
    }
    let kernel = kernel.or(cli.input.as_deref().filter(|_| hecke.is_none()));
    let (path, is_kernel) = match (kernel, hecke) {
        (Some(p), None) => (p, true),
        (None, Some(p)) => (p, false),
        _ => {
            return Err(CliError::Usage(
                "divisors needs exactly one of --check-kernel, --check-hecke, --csv".into(),
            ))
        }
    };
    let p: ParamSet = read_json(path)?;
    if is_kernel {
        let pairings = divcalc::curve_pairings(&divcalc::kernel_class(&p));
        let ok = pairings.is_zero();
        Ok(Report {
            text: format!(
                "kernel class pairings: {pairings}\nkernel vanishing: {}\n",
                if ok { "PASS" } else { "FAIL" }
            ),
            json: json!({"pairings": to_json(&pairings), "vanishes": ok}),
            failed: !ok,
        })
    } else {
        let ja = divcalc::jump_audit(&p);
        let ok = ja.all_ok();
        let bad: Vec<&divcalc::WallCheck> = ja.walls.iter().filter(|w| !w.ok).collect();
        let mut text = format!(
            "representative level: {}\nwalls checked: {}, failing: {}\n",
            if ja.representative_zero { "zero" } else { "nonzero" },
            ja.walls.len(),
            bad.len()
        );
        for w in &bad {
            writeln!(text, "  {:?} at {}", w.coord, w.at).expect("string write");
        }
        writeln!(text, "hecke vanishing: {}", if ok { "PASS" } else { "FAIL" }).expect("string write");
        Ok(Report {
            text,
            json: to_json(&ja),
            failed: !ok,
        })
    }
}

fn cmd_verify_all(cli: &Cli) -> Result<Report, CliError> {
    let cfg = SuiteConfig {
        seed: cli.seed,
        samples: cli.samples,
    };
    let results = run_all(&cfg);
    let mut text = String::new();
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    for r in &results {
        write!(text, "{} {} [{}]", r.id, r.status, r.anchor).expect("string write");
        if !r.residual.is_empty() {
            write!(text, " {}", r.residual).expect("string write");
        }
        text.push('\n');
    }
    let (p, f, d) = (
        count(Status::Pass),
        count(Status::Fail),
        count(Status::AuditDiscrepancy),
    );
    writeln!(text, "summary: {p} PASS, {f} FAIL, {d} AUDIT-DISCREPANCY").expect("string write");
    Ok(Report {
        text,
        json: json!({"results": to_json(&results), "pass": p, "fail": f, "audit_discrepancy": d}),
        failed: f > 0,
    })
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let report = match &cli.command {
        Command::Lines => cmd_lines()?,
        Command::Stability { p4, p5, flags, q } => {
            cmd_stability(cli.input.as_deref(), p4, p5, flags.as_deref(), q.as_deref())?
        }
        Command::HeckeLine { p4, p5, f4, f5 } => cmd_hecke_line(p4, p5, f4, f5)?,
        Command::Iota { l4, l5 } => cmd_iota(l4, l5)?,
        Command::Chern { d5, d10 } => cmd_chern(cli, d5.as_deref(), d10.as_deref())?,
        Command::Solve { a, b, audit_thm14 } => cmd_solve(cli, a, b, *audit_thm14)?,
        Command::Okamoto => cmd_okamoto()?,
        Command::Divisors {
            check_kernel,
            check_hecke,
            csv,
        } => cmd_divisors(cli, check_kernel.as_deref(), check_hecke.as_deref(), *csv)?,
        Command::VerifyAll => cmd_verify_all(cli)?,
    };
    let output = match cli.format {
        Format::Text => report.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("json values serialize");
            s.push('\n');
            s
        }
    };
    Ok(Outcome {
        output,
        exit_code: i32::from(report.failed),
    })
}
