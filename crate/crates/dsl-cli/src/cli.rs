//! Command-line driver.
//!
//! ```text
//! dgpa check FILE [--degree-bound N] [--seed S] [--format text|json]
//! dgpa eval FILE -e EXPR [--context algebra|tensor|uea]
//! dgpa uea check FILE [--len L] [--degree-bound N] [--seed S] [--format F]
//! dgpa uea nf FILE -e EXPR
//! dgpa obstruction FILE -e EXPR [--side left|right|both]
//! dgpa report FILE [--format F] [--degree-bound N] [--seed S] [--len L]
//! ```
//!
//! Exit codes: 0 all checks pass, 1 a violation was found, 2 malformed input.

use std::io::Write;

use dg_poisson::{check_poisson_axioms, Report};
use hopf::{check_antipode, check_bialgebra, sweedler_obstruction};
use uea::{build_uea, check_confluence, check_defining_identities, check_hopf_e, RewriteSystem};

use crate::expr::{Context, EvalEnv};
use crate::parser::{parse_presentation, ParsedPresentation};
use crate::report_io::{all_passed, render_json, render_text, Parameters};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

struct Options {
    file: Option<String>,
    expr: Option<String>,
    context: Context,
    degree_bound: u32,
    seed: u64,
    len: u32,
    json: bool,
    side: Side,
}

#[derive(Clone, Copy, PartialEq)]
enum Side {
    Left,
    Right,
    Both,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            file: None,
            expr: None,
            context: Context::Algebra,
            degree_bound: 4,
            seed: 0,
            len: 3,
            json: false,
            side: Side::Left,
        }
    }
}

fn parse_options(args: &[String]) -> Result<Options, String> {
    let mut opts = Options::default();
    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        let mut value = |name: &str| -> Result<String, String> {
            i += 1;
            args.get(i).cloned().ok_or_else(|| format!("{name} expects a value"))
        };
        match arg.as_str() {
            "-e" | "--expr" => opts.expr = Some(value("-e")?),
            "--context" => {
                let v = value("--context")?;
                opts.context = Context::parse(&v)
                    .ok_or_else(|| format!("unknown context `{v}` (algebra, tensor or uea)"))?;
            }
            "--degree-bound" => {
                let v = value("--degree-bound")?;
                opts.degree_bound =
                    v.parse().map_err(|_| format!("invalid degree bound `{v}`"))?;
            }
            "--seed" => {
                let v = value("--seed")?;
                opts.seed = v.parse().map_err(|_| format!("invalid seed `{v}`"))?;
            }
            "--len" => {
                let v = value("--len")?;
                opts.len = v.parse().map_err(|_| format!("invalid length bound `{v}`"))?;
            }
            "--format" => {
                let v = value("--format")?;
                opts.json = match v.as_str() {
                    "json" => true,
                    "text" => false,
                    other => return Err(format!("unknown format `{other}` (text or json)")),
                };
            }
            "--side" => {
                let v = value("--side")?;
                opts.side = match v.as_str() {
                    "left" => Side::Left,
                    "right" => Side::Right,
                    "both" => Side::Both,
                    other => return Err(format!("unknown side `{other}` (left, right or both)")),
                };
            }
            other if other.starts_with('-') => return Err(format!("unknown option `{other}`")),
            _ => {
                if opts.file.is_some() {
                    return Err(format!("unexpected argument `{arg}`"));
                }
                opts.file = Some(arg.clone());
            }
        }
        i += 1;
    }
    Ok(opts)
}

fn load(opts: &Options) -> Result<(String, ParsedPresentation), String> {
    let path = opts.file.as_ref().ok_or("missing input file")?;
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    let parsed = parse_presentation(&text).map_err(|e| format!("{path}: {e}"))?;
    Ok((path.clone(), parsed))
}

fn build_system(parsed: &ParsedPresentation) -> Result<RewriteSystem, String> {
    build_uea(parsed.base.clone(), parsed.hopf.clone()).map_err(|e| e.to_string())
}

fn poisson_suites(parsed: &ParsedPresentation, opts: &Options) -> Vec<Report> {
    let mut reports = vec![check_poisson_axioms(&parsed.base, opts.degree_bound, opts.seed)];
    if let Some(h) = &parsed.hopf {
        reports.push(check_bialgebra(h, opts.degree_bound, opts.seed));
        reports.push(check_antipode(h, opts.degree_bound, opts.seed));
    }
    reports
}

fn uea_suites(parsed: &ParsedPresentation, opts: &Options) -> Result<Vec<Report>, String> {
    let sys = build_system(parsed)?;
    let mut reports = vec![
        check_defining_identities(&sys, opts.degree_bound, opts.seed),
        check_confluence(&sys, opts.len),
    ];
    if parsed.hopf.is_some() {
        reports.push(check_hopf_e(&sys, opts.len));
    }
    Ok(reports)
}

fn emit_reports(
    reports: &[Report],
    params: &Parameters,
    json: bool,
    stdout: &mut dyn Write,
) -> i32 {
    let rendered = if json { render_json(reports, params) } else { render_text(reports, params) };
    let _ = stdout.write_all(rendered.as_bytes());
    if all_passed(reports) {
        EXIT_PASS
    } else {
        EXIT_VIOLATION
    }
}

fn base_params(file: &str, opts: &Options, with_len: bool) -> Parameters {
    let mut params = Parameters::new();
    params.set_str("file", file);
    params.set_int("degree_bound", opts.degree_bound as u64);
    params.set_int("seed", opts.seed);
    if with_len {
        params.set_int("word_length_bound", opts.len as u64);
    }
    params
}

/// Runs one invocation; writes to the given streams and returns the exit
/// code.
pub fn run_command(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match dispatch(args, stdout) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_INPUT_ERROR
        }
    }
}

fn dispatch(args: &[String], stdout: &mut dyn Write) -> Result<i32, String> {
    let Some(command) = args.first() else {
        return Err("usage: dgpa <check|eval|uea|obstruction|report> ...".into());
    };
    match command.as_str() {
        "check" => {
            let opts = parse_options(&args[1..])?;
            let (file, parsed) = load(&opts)?;
            let reports = poisson_suites(&parsed, &opts);
            let params = base_params(&file, &opts, false);
            Ok(emit_reports(&reports, &params, opts.json, stdout))
        }
        "uea" => {
            let Some(sub) = args.get(1) else {
                return Err("usage: dgpa uea <check|nf> FILE ...".into());
            };
            let opts = parse_options(&args[2..])?;
            match sub.as_str() {
                "check" => {
                    let (file, parsed) = load(&opts)?;
                    let reports = uea_suites(&parsed, &opts)?;
                    let params = base_params(&file, &opts, true);
                    Ok(emit_reports(&reports, &params, opts.json, stdout))
                }
                "nf" => {
                    let (_, parsed) = load(&opts)?;
                    let text = opts.expr.as_ref().ok_or("uea nf expects -e EXPR")?;
                    let expr =
                        crate::expr::parse_expression(text).map_err(|e| e.to_string())?;
                    let sys = build_system(&parsed)?;
                    let env = EvalEnv {
                        base: &parsed.base,
                        hopf: parsed.hopf.as_ref(),
                        system: Some(&sys),
                        tables_only: false,
                    };
                    let value = env.eval_uea(&expr).map_err(|e| e.to_string())?;
                    let nf = sys.normal_form(&value).map_err(|e| e.to_string())?;
                    let _ = writeln!(stdout, "{nf}");
                    Ok(EXIT_PASS)
                }
                other => Err(format!("unknown uea subcommand `{other}`")),
            }
        }
        "eval" => {
            let opts = parse_options(&args[1..])?;
            let (_, parsed) = load(&opts)?;
            let text = opts.expr.as_ref().ok_or("eval expects -e EXPR")?;
            let expr = crate::expr::parse_expression(text).map_err(|e| e.to_string())?;
            let system = if opts.context == Context::Uea {
                Some(build_system(&parsed)?)
            } else {
                None
            };
            let env = EvalEnv {
                base: &parsed.base,
                hopf: parsed.hopf.as_ref(),
                system: system.as_ref(),
                tables_only: false,
            };
            let value = env.eval(&expr, opts.context).map_err(|e| e.to_string())?;
            let _ = writeln!(stdout, "{value}");
            Ok(EXIT_PASS)
        }
        "obstruction" => {
            let opts = parse_options(&args[1..])?;
            let (_, parsed) = load(&opts)?;
            let hopf = parsed
                .hopf
                .as_ref()
                .ok_or("obstruction requires a presentation with a hopf block")?;
            let text = opts.expr.as_ref().ok_or("obstruction expects -e EXPR")?;
            let expr = crate::expr::parse_expression(text).map_err(|e| e.to_string())?;
            let env = EvalEnv {
                base: &parsed.base,
                hopf: Some(hopf),
                system: None,
                tables_only: false,
            };
            let value = env.eval_algebra(&expr).map_err(|e| e.to_string())?;
            let (left, right) = sweedler_obstruction(hopf, &value).map_err(|e| e.to_string())?;
            match opts.side {
                Side::Left => {
                    let _ = writeln!(stdout, "{left}");
                }
                Side::Right => {
                    let _ = writeln!(stdout, "{right}");
                }
                Side::Both => {
                    let _ = writeln!(stdout, "left: {left}");
                    let _ = writeln!(stdout, "right: {right}");
                }
            }
            Ok(EXIT_PASS)
        }
        "report" => {
            let opts = parse_options(&args[1..])?;
            let (file, parsed) = load(&opts)?;
            let mut reports = poisson_suites(&parsed, &opts);
            reports.extend(uea_suites(&parsed, &opts)?);
            let params = base_params(&file, &opts, true);
            Ok(emit_reports(&reports, &params, opts.json, stdout))
        }
        other => Err(format!("unknown command `{other}`")),
    }
}
