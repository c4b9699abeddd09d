//! The four subcommands, each producing the `result` payload of a document.

use charnum_core::exact::format_rational;
use charnum_core::{
    partitions_of, s_top_number, CobordismRing, Error, GenusPolynomial, PartitionVector, Rational,
    RationalMatrix, VerificationReport,
};
use num_traits::Zero;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::expr::{parse_manifold, ParseError};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("unknown series '{0}', expected 'ahat' or 'L'")]
    UnknownSeries(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CommandError {
    pub fn to_json(&self) -> Value {
        match self {
            CommandError::Parse(e) => json!({
                "kind": "parse",
                "column": e.column,
                "message": e.message,
            }),
            CommandError::UnknownSeries(_) => json!({
                "kind": "unknown_series",
                "message": self.to_string(),
            }),
            CommandError::Core(Error::OutOfRange { .. }) => json!({
                "kind": "out_of_range",
                "message": self.to_string(),
            }),
            CommandError::Core(_) => json!({
                "kind": "internal",
                "message": self.to_string(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Series {
    Ahat,
    L,
}

impl Series {
    pub fn parse(name: &str) -> Result<Series, CommandError> {
        match name {
            "ahat" | "Ahat" | "AHAT" => Ok(Series::Ahat),
            "L" | "l" => Ok(Series::L),
            other => Err(CommandError::UnknownSeries(other.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Series::Ahat => "ahat",
            Series::L => "L",
        }
    }

    pub fn polynomial(self, ring: &CobordismRing, k: usize) -> Result<GenusPolynomial, Error> {
        match self {
            Series::Ahat => ring.ahat_polynomial(k),
            Series::L => ring.l_polynomial(k),
        }
    }
}

pub fn rational(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

/// `{"[2]": "7/1", "[1,1]": "4/1"}` in canonical partition order.
pub fn partition_map(v: &PartitionVector) -> Value {
    let mut map = Map::new();
    for (p, q) in v.iter() {
        map.insert(p.to_string(), rational(q));
    }
    Value::Object(map)
}

pub fn numbers(ring: &CobordismRing, text: &str) -> Result<Value, CommandError> {
    let class = parse_manifold(text)?.evaluate(ring)?;
    Ok(json!({
        "weight": class.weight(),
        "pontrjagin_numbers": partition_map(class.p_numbers()),
    }))
}

pub fn genus(ring: &CobordismRing, series: &str, text: &str) -> Result<Value, CommandError> {
    let series = Series::parse(series)?;
    let class = parse_manifold(text)?.evaluate(ring)?;
    let k = class.weight();
    let poly = series.polynomial(ring, k)?;
    let value = poly.evaluate(class.p_numbers())?;
    Ok(json!({
        "series": series.name(),
        "weight": k,
        "value": rational(&value),
        "polynomial": partition_map(poly.coefficients()),
    }))
}

/// Runs both the basis-sequence check and the characterization check.
/// Returns the payload and whether every check passed.
pub fn verify(
    ring: &CobordismRing,
    k: usize,
    candidate: Option<&GenusPolynomial>,
) -> Result<(Value, bool), CommandError> {
    // also rejects k outside the cap before any work starts
    let top_s = s_top_number(&ring.generator(k)?);
    // lower weights run alongside the top one, whose determinant the report
    // already carries
    let (lower, report) = std::thread::scope(|scope| {
        let lower = scope.spawn(|| -> Result<bool, Error> {
            let mut ok = true;
            for j in 1..k {
                let cert = ring.basis_certificate(j)?;
                ok &= cert.holds() && cert.consistent();
            }
            Ok(ok)
        });
        let report = match candidate {
            Some(c) => ring.verify_characterization_against(k, c),
            None => ring.verify_characterization(k),
        };
        (lower.join().expect("basis thread panicked"), report)
    });
    let report = report?;
    let basis_sequence = lower? && report.basis_ok && !top_s.is_zero();
    let passed = basis_sequence && report.holds();
    Ok((report_json(&report, basis_sequence, passed), passed))
}

fn report_json(report: &VerificationReport, basis_sequence: bool, passed: bool) -> Value {
    let mut generators = Map::new();
    for (j, v) in &report.generator_ahat_values {
        generators.insert(j.to_string(), rational(v));
    }
    json!({
        "weight": report.weight,
        "basis_sequence": basis_sequence,
        "basis_ok": report.basis_ok,
        "basis_determinant": rational(&report.basis_determinant),
        "constraint_rows": report.constraint_rows,
        "kernel_dimension": report.kernel_dimension,
        "kernel": report.kernel.iter().map(|g| partition_map(g.coefficients())).collect::<Vec<_>>(),
        "kernel_matches_ahat": report.kernel_matches_ahat,
        "ahat_value_on_kummer_power": rational(&report.ahat_value_on_kummer_power),
        "expected_kummer_power_value": rational(&report.expected_kummer_power_value()),
        "generator_ahat_values": generators,
        "passed": passed,
    })
}

pub fn matrix(ring: &CobordismRing, k: usize) -> Result<Value, CommandError> {
    let m: RationalMatrix = ring.basis_matrix(k)?;
    let labels: Vec<String> = partitions_of(k).iter().map(|p| p.to_string()).collect();
    let entries: Vec<Vec<Value>> = m
        .row_vectors()
        .map(|row| row.iter().map(rational).collect())
        .collect();
    Ok(json!({
        "weight": k,
        "rows": labels,
        "columns": labels,
        "entries": entries,
        "determinant": rational(&m.determinant()?),
    }))
}
