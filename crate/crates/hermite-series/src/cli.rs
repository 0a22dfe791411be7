//! Command-line front end: single checks, full suites, series expansion
//! and value tables.
//!
//! Exit codes: 0 when everything passed, 1 when at least one check
//! failed, 2 for usage or configuration errors. Output is deterministic
//! for a fixed configuration (including `--seed`); `--timings` opts into
//! measured wall-clock fields at the cost of byte-for-byte
//! reproducibility. Reports stream to stdout; `--out FILE` (or the
//! `HSL_OUT` directory) additionally writes the same bytes to a file.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::fps::{catalog_series, CatalogParams};
use crate::identities::{
    canonical_points, find, run_check, run_suite, CheckOptions, CheckReport, Mode, ModeSelect,
    SideValue, TolerancePolicy,
};
use crate::kernels::{
    binom_general, harmonic_all, laguerre_all, stirling_exact, HermitePoly,
};
use crate::value::{format_complex, ParamValue, Params};

const OUT_DIR_ENV: &str = "HSL_OUT";

#[derive(Parser, Debug)]
#[command(
    name = "hermite-series",
    about = "Verify Hermite-polynomial series transformation identities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Run one identity check (numeric, exact, or both).
    Check(CheckArgs),
    /// Run every registered identity at canonical points plus seeded
    /// random draws.
    Suite(SuiteArgs),
    /// Expand a named generating function to exact coefficients.
    Series(SeriesArgs),
    /// Print value/coefficient tables for the special families.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Numeric,
    Exact,
    Both,
}

#[derive(Args, Debug)]
struct ParamFlags {
    /// Evaluation point x ("0.3" or "1/2"; p/q keeps exact mode reachable).
    #[arg(long)]
    x: Option<String>,
    /// Series variable t.
    #[arg(long)]
    t: Option<String>,
    /// Secondary point z (Laguerre/bilinear identities).
    #[arg(long)]
    z: Option<String>,
    /// Shift parameter y (bilinear identities).
    #[arg(long)]
    y: Option<String>,
    /// Binomial parameter p.
    #[arg(long)]
    p: Option<String>,
    /// Power/Stirling order alpha; accepts "3", "1/2" or "1+1i".
    #[arg(long)]
    alpha: Option<String>,
    /// Stirling closed-form bound m.
    #[arg(long)]
    m: Option<String>,
    /// Exponential rate c (scalar transform lemma).
    #[arg(long)]
    c: Option<String>,
    /// Derivative order n.
    #[arg(long)]
    n: Option<String>,
    /// Sequence seed (involution check).
    #[arg(long)]
    seed: Option<String>,
    /// Sequence count (involution check).
    #[arg(long)]
    count: Option<String>,
}

impl ParamFlags {
    fn overlay(&self, base: &mut Params) -> Result<()> {
        for (name, value) in [
            ("x", &self.x),
            ("t", &self.t),
            ("z", &self.z),
            ("y", &self.y),
            ("p", &self.p),
            ("alpha", &self.alpha),
            ("m", &self.m),
            ("c", &self.c),
            ("n", &self.n),
            ("seed", &self.seed),
            ("count", &self.count),
        ] {
            if let Some(text) = value {
                base.insert(name.to_string(), ParamValue::parse(text)?);
            }
        }
        Ok(())
    }
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Identity id (see `suite` output or the README for the list).
    #[arg(long)]
    id: String,
    #[command(flatten)]
    params: ParamFlags,
    /// Truncation order; defaults to the identity's canonical order.
    #[arg(long)]
    order: Option<usize>,
    /// Which modes to run; default is the identity's primary mode.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Absolute residual floor override.
    #[arg(long)]
    tol_abs: Option<f64>,
    /// Relative residual bound override.
    #[arg(long)]
    tol_rel: Option<f64>,
    /// Evaluate outside the default |t| disk.
    #[arg(long)]
    allow_outside_disk: bool,
    /// Record wall-clock times (breaks byte-identical reproducibility).
    #[arg(long)]
    timings: bool,
    /// Also write the output to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    /// Only run identities matching this pattern (`*` wildcard).
    #[arg(long)]
    filter: Option<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Random parameter draws per identity and mode.
    #[arg(long, default_value_t = 5)]
    trials: u32,
    /// Restrict to numeric (incl. closed-form) or exact checks.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    #[arg(long)]
    tol_abs: Option<f64>,
    #[arg(long)]
    tol_rel: Option<f64>,
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    /// Catalog name, e.g. "li2" or "binom-p".
    #[arg(long)]
    name: String,
    #[arg(long, default_value_t = 16)]
    order: usize,
    /// Parameter p for "binom-p" (rational).
    #[arg(long)]
    p: Option<String>,
    /// Parameter z for "exp-z" (rational).
    #[arg(long)]
    z: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Family: hermite | laguerre | harmonic | stirling | binom.
    family: String,
    /// Largest index printed.
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// Stirling row m (stirling table).
    #[arg(long)]
    m: Option<u32>,
    /// Evaluation point z (laguerre table), rational.
    #[arg(long)]
    z: Option<String>,
    /// Parameter p (binom table), rational.
    #[arg(long)]
    p: Option<String>,
    /// Harmonic degree: 1 or 2.
    #[arg(long, default_value_t = 1)]
    degree: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Entry point used by the thin binary.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 2 on usage errors and 0 for --help/--version.
        Err(err) => err.exit(),
    };
    match dispatch(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Suite(args) => cmd_suite(args),
        Command::Series(args) => cmd_series(args),
        Command::Table(args) => cmd_table(args),
    }
}

fn check_options(
    tol_abs: Option<f64>,
    tol_rel: Option<f64>,
    allow_outside_disk: bool,
    timings: bool,
) -> CheckOptions {
    let mut policy = TolerancePolicy::default();
    if let Some(abs) = tol_abs {
        policy.abs_floor = abs;
    }
    if let Some(rel) = tol_rel {
        policy.rel_tol = rel;
    }
    CheckOptions { policy, allow_outside_disk, measure_time: timings }
}

fn selected_modes(available: &[Mode], requested: Option<ModeArg>) -> Result<Vec<Mode>> {
    let selected: Vec<Mode> = match requested {
        None => vec![available[0]],
        Some(ModeArg::Both) => available.to_vec(),
        Some(ModeArg::Numeric) => available
            .iter()
            .copied()
            .filter(|m| matches!(m, Mode::Numeric | Mode::ClosedForm))
            .collect(),
        Some(ModeArg::Exact) => {
            available.iter().copied().filter(|m| *m == Mode::Exact).collect()
        }
    };
    if selected.is_empty() {
        let names: Vec<&str> = available.iter().map(|m| m.as_str()).collect();
        return Err(Error::Usage(format!(
            "requested mode not available; this identity supports: {}",
            names.join(", ")
        )));
    }
    Ok(selected)
}

fn cmd_check(args: CheckArgs) -> Result<bool> {
    let inst = find(&args.id)?;
    if args.allow_outside_disk {
        eprintln!(
            "warning: disk guard disabled; outside |t| <= {} the series may diverge \
             and tail estimates stop being meaningful",
            crate::identities::EVAL_DISK
        );
    }
    let opts = check_options(args.tol_abs, args.tol_rel, args.allow_outside_disk, args.timings);
    let modes = selected_modes(inst.modes, args.mode)?;
    let multi_mode = modes.len() > 1;
    let mut reports = Vec::new();
    for mode in modes {
        let canonical = canonical_points(inst.id, mode);
        let (mut params, default_order) =
            canonical.into_iter().next().unwrap_or((Params::new(), 32));
        args.params.overlay(&mut params)?;
        let order = args.order.unwrap_or(default_order);
        match run_check(inst.id, mode, &params, order, &opts) {
            Ok(report) => reports.push(report),
            // In a multi-mode run, parameters that only fit one mode skip
            // the other instead of failing the whole invocation.
            Err(Error::ModeUnavailable(msg)) if multi_mode => {
                eprintln!("note: skipping {} mode: {msg}", mode.as_str());
            }
            Err(err) => return Err(err),
        }
    }
    let body = render_reports(&reports, args.format)?;
    let auto = format!("check-{}.{}", sanitize(&args.id), extension(args.format));
    emit(&body, args.out.as_deref(), &auto)?;
    let failed = reports.iter().filter(|r| !r.passed).count();
    if args.format == FormatArg::Text && failed > 0 {
        eprintln!("{failed} of {} checks failed", reports.len());
    }
    Ok(failed == 0)
}

fn cmd_suite(args: SuiteArgs) -> Result<bool> {
    let opts = check_options(args.tol_abs, args.tol_rel, false, args.timings);
    let select = match args.mode {
        None | Some(ModeArg::Both) => ModeSelect::All,
        Some(ModeArg::Numeric) => ModeSelect::Numeric,
        Some(ModeArg::Exact) => ModeSelect::Exact,
    };
    let reports = run_suite(args.filter.as_deref(), args.seed, args.trials, select, &opts);
    let passed = reports.iter().filter(|r| r.passed).count();
    let failed = reports.len() - passed;
    let summary = format!(
        "suite: {passed} passed, {failed} failed of {} (seed {}, trials {})",
        reports.len(),
        args.seed,
        args.trials
    );
    let mut body = render_reports(&reports, args.format)?;
    match args.format {
        FormatArg::Text => {
            body.push_str(&summary);
            body.push('\n');
        }
        // Keep report streams machine-readable; the summary goes to stderr.
        FormatArg::Json | FormatArg::Csv => eprintln!("{summary}"),
    }
    let auto = format!(
        "suite-seed{}-trials{}{}.{}",
        args.seed,
        args.trials,
        args.filter.as_deref().map(|f| format!("-{}", sanitize(f))).unwrap_or_default(),
        extension(args.format)
    );
    emit(&body, args.out.as_deref(), &auto)?;
    Ok(failed == 0)
}

fn parse_rational_flag(value: &Option<String>, name: &str) -> Result<Option<BigRational>> {
    match value {
        None => Ok(None),
        Some(text) => match ParamValue::parse(text)? {
            ParamValue::Rational(r) => Ok(Some(r)),
            other => Err(Error::Usage(format!(
                "parameter {name} must be rational (p/q), got {other}"
            ))),
        },
    }
}

fn cmd_series(args: SeriesArgs) -> Result<bool> {
    let params = CatalogParams {
        p: parse_rational_flag(&args.p, "p")?,
        z: parse_rational_flag(&args.z, "z")?,
    };
    let series = catalog_series(&args.name, &params, args.order)?;
    let body = match args.format {
        FormatArg::Text => {
            let mut out = String::new();
            writeln!(out, "# {} to order {}", args.name, args.order).unwrap();
            for (k, c) in series.coeffs().iter().enumerate() {
                writeln!(out, "t^{k}: {c}").unwrap();
            }
            out
        }
        FormatArg::Json => {
            let coeffs: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
            let value = serde_json::json!({
                "name": args.name,
                "order": args.order,
                "coeffs": coeffs,
            });
            let mut text = serde_json::to_string(&value).expect("serializable");
            text.push('\n');
            text
        }
        FormatArg::Csv => {
            return Err(Error::Usage(
                "csv output applies to check reports; use text or json here".into(),
            ))
        }
    };
    let auto = format!("series-{}.{}", sanitize(&args.name), extension(args.format));
    emit(&body, args.out.as_deref(), &auto)?;
    Ok(true)
}

fn cmd_table(args: TableArgs) -> Result<bool> {
    let (title, rows): (String, Vec<(String, Vec<String>)>) = match args.family.as_str() {
        "hermite" => {
            let rows = (0..=args.n)
                .map(|k| -> Result<(String, Vec<String>)> {
                    let poly = HermitePoly::recurrence(k)?;
                    Ok((
                        format!("H_{k}"),
                        poly.coeffs().iter().map(|c| c.to_string()).collect(),
                    ))
                })
                .collect::<Result<_>>()?;
            (format!("hermite coefficients, degree 0..={}", args.n), rows)
        }
        "laguerre" => {
            let z = parse_rational_flag(&args.z, "z")?.unwrap_or_else(BigRational::one);
            let values = laguerre_all(args.n, &z)?;
            let rows = values
                .iter()
                .enumerate()
                .map(|(k, v)| (format!("L_{k}({z})"), vec![v.to_string()]))
                .collect();
            (format!("laguerre values at z = {z}"), rows)
        }
        "harmonic" => {
            let values = harmonic_all(args.n, args.degree)?;
            let rows = values
                .iter()
                .enumerate()
                .map(|(k, v)| (format!("H_{k}"), vec![v.to_string()]))
                .collect();
            (format!("harmonic numbers of degree {}", args.degree), rows)
        }
        "stirling" => {
            let m = args.m.ok_or_else(|| Error::Usage("stirling table needs --m".into()))?;
            let row: Vec<String> = (1..=m as usize)
                .map(|n| stirling_exact(m, n).map(|v| v.to_string()))
                .collect::<Result<_>>()?;
            (format!("stirling row m = {m}"), vec![(format!("S({m},1..{m})"), row)])
        }
        "binom" => {
            let p = parse_rational_flag(&args.p, "p")?
                .ok_or_else(|| Error::Usage("binom table needs --p".into()))?;
            let rows = (0..=args.n)
                .map(|k| (format!("C({p},{k})"), vec![binom_general(&p, k).to_string()]))
                .collect();
            (format!("falling-factorial binomials for p = {p}"), rows)
        }
        other => {
            return Err(Error::Usage(format!(
                "unknown family {other:?}; expected hermite, laguerre, harmonic, stirling or binom"
            )))
        }
    };
    let body = match args.format {
        FormatArg::Text => {
            let mut out = String::new();
            writeln!(out, "# {title}").unwrap();
            for (label, cells) in &rows {
                writeln!(out, "{label}: {}", cells.join(" ")).unwrap();
            }
            out
        }
        FormatArg::Json => {
            let value = serde_json::json!({
                "family": args.family,
                "rows": rows.iter().map(|(label, cells)| {
                    serde_json::json!({"label": label, "values": cells})
                }).collect::<Vec<_>>(),
            });
            let mut text = serde_json::to_string(&value).expect("serializable");
            text.push('\n');
            text
        }
        FormatArg::Csv => {
            return Err(Error::Usage(
                "csv output applies to check reports; use text or json here".into(),
            ))
        }
    };
    let auto = format!("table-{}.{}", sanitize(&args.family), extension(args.format));
    emit(&body, args.out.as_deref(), &auto)?;
    Ok(true)
}

fn extension(format: FormatArg) -> &'static str {
    match format {
        FormatArg::Text => "txt",
        FormatArg::Json => "json",
        FormatArg::Csv => "csv",
    }
}

fn sanitize(name: &str) -> String {
    name.chars().map(|c| if c.is_alphanumeric() || c == '.' || c == '-' { c } else { '_' }).collect()
}

/// Print to stdout and tee to `--out` or the `HSL_OUT` directory.
fn emit(body: &str, out: Option<&std::path::Path>, auto_name: &str) -> Result<()> {
    print!("{body}");
    let target: Option<PathBuf> = match out {
        Some(path) => Some(path.to_path_buf()),
        None => std::env::var_os(OUT_DIR_ENV).map(|dir| PathBuf::from(dir).join(auto_name)),
    };
    if let Some(path) = target {
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                std::fs::create_dir_all(parent)
                    .map_err(|e| Error::Usage(format!("cannot create {}: {e}", parent.display())))?;
            }
        }
        let mut file = std::fs::File::create(&path)
            .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?;
        file.write_all(body.as_bytes())
            .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn render_reports(reports: &[CheckReport], format: FormatArg) -> Result<String> {
    match format {
        FormatArg::Text => Ok(reports.iter().map(render_text).collect()),
        FormatArg::Json => {
            let mut out = String::new();
            for report in reports {
                out.push_str(&serde_json::to_string(report).expect("serializable report"));
                out.push('\n');
            }
            Ok(out)
        }
        FormatArg::Csv => render_csv(reports),
    }
}

fn side_cell(value: &SideValue) -> String {
    match value {
        SideValue::Scalar { re, im } => format_complex(num_complex::Complex64::new(*re, *im)),
        SideValue::Coeffs(coeffs) => format!("[{}]", coeffs.join(" ")),
    }
}

fn params_cell(params: &Params) -> String {
    let parts: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    parts.join(", ")
}

fn render_text(report: &CheckReport) -> String {
    let verdict = if report.passed { "PASS" } else { "FAIL" };
    let mut line = format!(
        "{verdict} {} [{}] order={} params[{}]",
        report.id,
        report.mode.as_str(),
        report.order,
        params_cell(&report.params),
    );
    match (&report.lhs, &report.rhs) {
        (SideValue::Scalar { .. }, _) | (_, SideValue::Scalar { .. }) => {
            write!(
                line,
                " lhs={} rhs={} abs={:e} rel={:e}",
                side_cell(&report.lhs),
                side_cell(&report.rhs),
                report.residual_abs,
                report.residual_rel
            )
            .unwrap();
            if let Some(tail) = report.tail_estimate {
                write!(line, " tail={tail:e}").unwrap();
            }
        }
        (SideValue::Coeffs(lhs), SideValue::Coeffs(rhs)) => {
            if report.passed {
                write!(line, " {} coefficients identical", lhs.len()).unwrap();
            } else {
                let mismatch = lhs
                    .iter()
                    .zip(rhs.iter())
                    .position(|(a, b)| a != b)
                    .unwrap_or(lhs.len().min(rhs.len()));
                write!(
                    line,
                    " first mismatch at index {mismatch}: lhs={} rhs={}",
                    lhs.get(mismatch).map(String::as_str).unwrap_or("<none>"),
                    rhs.get(mismatch).map(String::as_str).unwrap_or("<none>"),
                )
                .unwrap();
            }
        }
    }
    write!(line, " elapsed={}ms", report.elapsed_ms).unwrap();
    line.push('\n');
    line
}

fn render_csv(reports: &[CheckReport]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "id",
            "mode",
            "params",
            "order",
            "lhs",
            "rhs",
            "residual_abs",
            "residual_rel",
            "tail_estimate",
            "passed",
            "elapsed_ms",
        ])
        .map_err(|e| Error::Usage(format!("csv error: {e}")))?;
    for r in reports {
        let params_json = serde_json::to_string(&r.params).expect("serializable params");
        writer
            .write_record([
                r.id.as_str(),
                r.mode.as_str(),
                params_json.as_str(),
                &r.order.to_string(),
                &side_cell(&r.lhs),
                &side_cell(&r.rhs),
                &format!("{:e}", r.residual_abs),
                &format!("{:e}", r.residual_rel),
                &r.tail_estimate.map(|t| format!("{t:e}")).unwrap_or_default(),
                if r.passed { "true" } else { "false" },
                &r.elapsed_ms.to_string(),
            ])
            .map_err(|e| Error::Usage(format!("csv error: {e}")))?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::Usage(format!("csv error: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Usage(format!("csv encoding error: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps::CATALOG_NAMES;

    #[test]
    fn mode_selection() {
        let both = [Mode::Numeric, Mode::Exact];
        assert_eq!(selected_modes(&both, None).unwrap(), vec![Mode::Numeric]);
        assert_eq!(
            selected_modes(&both, Some(ModeArg::Both)).unwrap(),
            vec![Mode::Numeric, Mode::Exact]
        );
        assert_eq!(
            selected_modes(&both, Some(ModeArg::Exact)).unwrap(),
            vec![Mode::Exact]
        );
        let closed = [Mode::ClosedForm];
        assert_eq!(
            selected_modes(&closed, Some(ModeArg::Numeric)).unwrap(),
            vec![Mode::ClosedForm]
        );
        assert!(selected_modes(&closed, Some(ModeArg::Exact)).is_err());
    }

    #[test]
    fn sanitize_keeps_ids_readable() {
        assert_eq!(sanitize("eq2.37"), "eq2.37");
        assert_eq!(sanitize("genfunc-*"), "genfunc-_");
    }

    #[test]
    fn catalog_names_are_wired_to_the_series_command() {
        for name in CATALOG_NAMES {
            let needs_param = matches!(*name, "binom-p" | "exp-z");
            let args = SeriesArgs {
                name: name.to_string(),
                order: 4,
                p: needs_param.then(|| "2".to_string()),
                z: needs_param.then(|| "1/2".to_string()),
                format: FormatArg::Text,
                out: None,
            };
            let params = CatalogParams {
                p: parse_rational_flag(&args.p, "p").unwrap(),
                z: parse_rational_flag(&args.z, "z").unwrap(),
            };
            assert!(catalog_series(&args.name, &params, args.order).is_ok(), "{name}");
        }
    }
}
