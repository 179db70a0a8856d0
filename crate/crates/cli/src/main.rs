mod output;
mod suites;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mzvq_core::identities::{pi_rational_value, q_theorem, NUMERIC_TOLERANCE};
use mzvq_core::numeric::{mzv_eval, q_bruteforce};
use mzvq_core::report::all_passed;
use mzvq_core::series::q_rational_table;
use mzvq_core::{Error, MzvIndex, PiRational, PrecisionConfig, VerificationReport};
use serde_json::json;

use output::{json_line, rational_string, write_reports, Format, RationalRecord, ValueRecord};
use suites::{Ranges, Suite};

#[derive(Parser)]
#[command(
    name = "mzvq",
    version,
    about = "Restricted sums Q(4n,d) of multiple zeta values"
)]
struct Cli {
    /// Absolute error target for numeric results.
    #[arg(long, global = true, default_value = "1e-12")]
    prec: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Theorem,
    Series,
    Bruteforce,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate ζ(s₁,…,s_d) with a certified error bound, e.g. `eval 4,4`.
    Eval {
        /// Comma-separated index, first part at least 2.
        index: String,
    },
    /// Compute Q(4n, d).
    Q {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Run verification suites; exit code 1 if any instance fails.
    Verify {
        /// Comma-separated suite names.
        #[arg(long, conflicts_with = "all")]
        suite: Option<String>,
        /// Run every suite at its default range.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        max_d: Option<u32>,
    },
    /// Dump the exact table c[n][d] = Q(4n,d)/π^{4n}.
    Series {
        #[arg(long, default_value_t = 10)]
        max_n: u32,
        #[arg(long, default_value_t = 10)]
        max_d: u32,
    },
    /// Run the differential-system suites (ode-u, ode-tilde, gd-decomposition, w0-binomial).
    OdeCheck {
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        max_d: Option<u32>,
    },
}

enum Failure {
    Usage(Error),
    Verification,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Verification), _) => ExitCode::from(1),
        (Err(Failure::Usage(e)), _) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        (Err(Failure::Io(e)), _) | (Ok(()), Err(e)) => {
            if e.kind() == io::ErrorKind::BrokenPipe {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    let cfg: PrecisionConfig = cli.prec.parse()?;
    match &cli.command {
        Command::Eval { index } => cmd_eval(out, cli.format, index, &cfg),
        Command::Q { n, d, method } => cmd_q(out, cli.format, *n, *d, *method, &cfg),
        Command::Verify {
            suite,
            all,
            max_n,
            max_d,
        } => {
            let list = match (suite, all) {
                (Some(list), _) => suites::parse_list(list)?,
                (None, true) => Suite::ALL.to_vec(),
                (None, false) => {
                    return Err(Error::Domain("verify needs --suite <list> or --all".into()).into())
                }
            };
            if list.is_empty() {
                return Err(Error::Domain("empty suite list".into()).into());
            }
            let ranges = Ranges {
                max_n: *max_n,
                max_d: *max_d,
            };
            cmd_verify(out, cli.format, &list, &ranges, &cfg)
        }
        Command::Series { max_n, max_d } => cmd_series(out, cli.format, *max_n, *max_d),
        Command::OdeCheck { max_n, max_d } => {
            let ranges = Ranges {
                max_n: *max_n,
                max_d: *max_d,
            };
            cmd_verify(out, cli.format, &Suite::ODE, &ranges, &cfg)
        }
    }
}

fn cmd_eval(out: &mut impl Write, format: Format, index: &str, cfg: &PrecisionConfig) -> Outcome {
    let idx: MzvIndex = index.parse()?;
    let value = mzv_eval(&idx, cfg)?;
    let record = ValueRecord::new(None, &value, cfg);
    match format {
        Format::Text => writeln!(out, "{idx} = {} ± {}", record.value, record.abs_err)?,
        Format::Json => json_line(out, &record)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["index", "value", "abs_err"])?;
            w.write_record([index.trim(), &record.value, &record.abs_err])?;
            w.flush()?;
        }
    }
    Ok(())
}

enum QResult {
    Exact(&'static str, PiRational),
    Numeric(&'static str, mzvq_core::ApproxReal),
}

fn cmd_q(
    out: &mut impl Write,
    format: Format,
    n: u32,
    d: u32,
    method: Method,
    cfg: &PrecisionConfig,
) -> Outcome {
    if d < 1 || n < d {
        return Err(Error::Domain(format!("Q(4n,d) requires n ≥ d ≥ 1, got n={n}, d={d}")).into());
    }
    let theorem_ok = d >= 3;
    if method == Method::Theorem && !theorem_ok {
        return Err(Error::Domain(format!("theorem requires n ≥ d ≥ 3, got n={n}, d={d}")).into());
    }
    let wants = |m: Method| method == m || method == Method::All;
    let mut results = Vec::new();
    if wants(Method::Theorem) && theorem_ok {
        results.push(QResult::Exact("theorem", q_theorem(n, d)?));
    }
    if wants(Method::Series) {
        let table = q_rational_table(n as usize, d as usize)?;
        results.push(QResult::Exact(
            "series",
            PiRational::new(table.get(n as usize, d as usize).clone(), 4 * n),
        ));
    }
    if wants(Method::Bruteforce) {
        results.push(QResult::Numeric("bruteforce", q_bruteforce(n, d, cfg)?));
    }

    for r in &results {
        match (r, format) {
            (QResult::Exact(label, x), Format::Text) => writeln!(out, "{label}: {x}")?,
            (QResult::Numeric(label, v), Format::Text) => {
                let rec = ValueRecord::new(None, v, cfg);
                writeln!(out, "{label}: {} ± {}", rec.value, rec.abs_err)?
            }
            (QResult::Exact(label, x), Format::Json) => {
                json_line(out, &RationalRecord::new(Some(label.to_string()), x))?
            }
            (QResult::Numeric(label, v), Format::Json) => {
                json_line(out, &ValueRecord::new(Some(label.to_string()), v, cfg))?
            }
            (_, Format::Csv) => {}
        }
    }
    if format == Format::Csv {
        let mut w = csv::Writer::from_writer(&mut *out);
        w.write_record(["method", "num", "den", "pi_power", "value", "abs_err"])?;
        for r in &results {
            match r {
                QResult::Exact(label, x) => w.write_record([
                    label.to_string(),
                    x.coeff.numer().to_string(),
                    x.coeff.denom().to_string(),
                    x.pi_power.to_string(),
                    String::new(),
                    String::new(),
                ])?,
                QResult::Numeric(label, v) => {
                    let rec = ValueRecord::new(None, v, cfg);
                    w.write_record([
                        label.to_string(),
                        String::new(),
                        String::new(),
                        String::new(),
                        rec.value,
                        rec.abs_err,
                    ])?
                }
            }
        }
        w.flush()?;
    }

    // pairwise agreement between exact results and against the numeric one
    let exact: Vec<_> = results
        .iter()
        .filter_map(|r| match r {
            QResult::Exact(l, x) => Some((*l, x)),
            _ => None,
        })
        .collect();
    let numeric = results.iter().find_map(|r| match r {
        QResult::Numeric(l, v) => Some((*l, v)),
        _ => None,
    });
    let mut agree = true;
    if format != Format::Csv {
        for pair in exact.windows(2) {
            let (a, x) = pair[0];
            let (b, y) = pair[1];
            let same = x == y;
            agree &= same;
            match format {
                Format::Text => writeln!(
                    out,
                    "agreement {a}-{b}: {}",
                    if same { "exact" } else { "MISMATCH" }
                )?,
                _ => writeln!(
                    out,
                    "{}",
                    json!({"kind": "agreement", "left": a, "right": b, "exact": same})
                )?,
            }
        }
        if let (Some((a, x)), Some((b, v))) = (exact.first(), numeric) {
            let diff = pi_rational_value(x, cfg).sub(v);
            let ok = diff.within(NUMERIC_TOLERANCE);
            agree &= ok;
            let delta = diff.abs_upper().to_f64();
            match format {
                Format::Text => writeln!(
                    out,
                    "agreement {a}-{b}: |diff| ≤ {delta:.3e} ({})",
                    if ok { "within 1e-10" } else { "MISMATCH" }
                )?,
                _ => writeln!(
                    out,
                    "{}",
                    json!({"kind": "agreement", "left": a, "right": b, "abs_diff_bound": format!("{delta:e}"), "passed": ok})
                )?,
            }
        }
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_verify(
    out: &mut impl Write,
    format: Format,
    list: &[Suite],
    ranges: &Ranges,
    cfg: &PrecisionConfig,
) -> Outcome {
    let mut reports: Vec<VerificationReport> = Vec::new();
    for suite in list {
        reports.extend(suites::run(*suite, ranges, cfg)?);
    }
    write_reports(out, format, &reports)?;
    if format == Format::Text {
        let passed = reports.iter().filter(|r| r.passed).count();
        writeln!(out, "{passed}/{} passed", reports.len())?;
    }
    if all_passed(&reports) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_series(out: &mut impl Write, format: Format, max_n: u32, max_d: u32) -> Outcome {
    let table = q_rational_table(max_n as usize, max_d as usize)?;
    let cell = |n: u32, d: u32| table.get(n as usize, d as usize);
    match format {
        Format::Text => {
            for n in 1..=max_n {
                for d in 1..=max_d {
                    writeln!(out, "c[{n}][{d}] = {}", rational_string(cell(n, d)))?;
                }
            }
        }
        Format::Json => {
            let rows: Vec<Vec<[String; 2]>> = (1..=max_n)
                .map(|n| {
                    (1..=max_d)
                        .map(|d| {
                            [
                                cell(n, d).numer().to_string(),
                                cell(n, d).denom().to_string(),
                            ]
                        })
                        .collect()
                })
                .collect();
            writeln!(
                out,
                "{}",
                json!({"kind": "series", "max_n": max_n, "max_d": max_d, "pi_power": "4n", "c": rows})
            )?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header = vec!["n".to_string()];
            header.extend((1..=max_d).map(|d| format!("d={d}")));
            w.write_record(&header)?;
            for n in 1..=max_n {
                let mut row = vec![n.to_string()];
                row.extend((1..=max_d).map(|d| rational_string(cell(n, d))));
                w.write_record(&row)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
