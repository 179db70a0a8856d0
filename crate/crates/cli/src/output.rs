use std::io::{self, Write};

use clap::ValueEnum;
use mzvq_core::report::Residual;
use mzvq_core::{ApproxReal, BigRational, PiRational, PrecisionConfig, VerificationReport};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Exact rational payload; numerator and denominator as decimal strings.
#[derive(Serialize)]
pub struct RationalRecord {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub num: String,
    pub den: String,
    pub pi_power: u32,
}

impl RationalRecord {
    pub fn new(label: Option<String>, x: &PiRational) -> Self {
        Self {
            kind: "rational",
            label,
            num: x.coeff.numer().to_string(),
            den: x.coeff.denom().to_string(),
            pi_power: x.pi_power,
        }
    }
}

#[derive(Serialize)]
pub struct ValueRecord {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub value: String,
    pub abs_err: String,
}

/// Fractional digits printed for a value certified to `cfg`.
pub fn value_digits(cfg: &PrecisionConfig) -> u32 {
    cfg.target_digits() + 3
}

impl ValueRecord {
    pub fn new(label: Option<String>, x: &ApproxReal, cfg: &PrecisionConfig) -> Self {
        Self {
            kind: "value",
            label,
            value: x.to_decimal_string(value_digits(cfg)),
            abs_err: x.err_sci_string(),
        }
    }
}

pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn report_json(r: &VerificationReport) -> Value {
    let residual = match &r.residual {
        Residual::Exact(x) => json!({
            "num": x.coeff.numer().to_string(),
            "den": x.coeff.denom().to_string(),
            "pi_power": x.pi_power,
        }),
        Residual::Symbolic(None) => json!("0"),
        Residual::Symbolic(Some(msg)) => json!(msg),
        Residual::Numeric { diff, tolerance } => json!({
            "value": diff.to_sci_string(6),
            "abs_err": diff.err_sci_string(),
            "tolerance": format!("{tolerance:e}"),
        }),
    };
    json!({
        "kind": "report",
        "name": r.name,
        "instance": r.instance,
        "mode": r.mode.as_str(),
        "passed": r.passed,
        "residual": residual,
    })
}

fn residual_text(r: &VerificationReport) -> String {
    match &r.residual {
        Residual::Exact(x) => x.to_string(),
        Residual::Symbolic(None) => "0".into(),
        Residual::Symbolic(Some(msg)) => msg.clone(),
        Residual::Numeric { diff, .. } => {
            format!("{} ± {}", diff.to_sci_string(6), diff.err_sci_string())
        }
    }
}

pub fn write_reports(
    out: &mut impl Write,
    format: Format,
    reports: &[VerificationReport],
) -> io::Result<()> {
    match format {
        Format::Text => {
            for r in reports {
                writeln!(out, "{r}")?;
            }
        }
        Format::Json => {
            for r in reports {
                writeln!(out, "{}", report_json(r))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["name", "instance", "mode", "passed", "residual"])?;
            for r in reports {
                w.write_record([
                    r.name.clone(),
                    r.instance_label(),
                    r.mode.as_str().to_string(),
                    r.passed.to_string(),
                    residual_text(r),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn json_line(out: &mut impl Write, record: &impl Serialize) -> io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string(record).map_err(io::Error::other)?
    )
}
