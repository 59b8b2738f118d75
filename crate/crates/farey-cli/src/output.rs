//! Input parsing and JSON/text formatting shared by the commands.

use std::fmt;

use farey::cfrac::{format_word, parse_word};
use farey::dissect::Dissection;
use farey::fareywalk::{Periodicity, WalkSeq};
use farey::numcore::SignedPair;
use farey::{Int, Matrix, Rational};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

/// Failure of a command, mapped to the process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input; exit code 2.
    Usage(String),
    /// Library error on well-formed input; exit code 1.
    Domain(farey::Error),
    /// A consistency check reported a failure; exit code 1.
    Check(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Check(m) => write!(f, "check failed: {m}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl From<farey::Error> for CliError {
    fn from(e: farey::Error) -> Self {
        match e {
            farey::Error::Parse(m) => CliError::Usage(m),
            other => CliError::Domain(other),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Text and JSON renderings of one command result.
pub struct Report {
    pub text: String,
    pub json: Value,
    /// Printed normally but exits with code 1.
    pub failed: bool,
}

impl Report {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Report { text: text.into(), json, failed: false }
    }

    pub fn failed_if(mut self, failed: bool) -> Self {
        self.failed = failed;
        self
    }
}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn word(s: &str) -> CliResult<Vec<Int>> {
    Ok(parse_word(s)?)
}

pub fn matrix(s: &str) -> CliResult<Matrix> {
    Ok(s.parse::<Matrix>()?)
}

pub fn rational(s: &str) -> CliResult<Rational> {
    Ok(s.replace('−', "-").parse::<Rational>()?)
}

pub fn rationals(s: &str) -> CliResult<Vec<Rational>> {
    s.split([',', ' ']).filter(|t| !t.is_empty()).map(rational).collect()
}

/// Inline JSON, or the contents of the named file.
fn json_input(s: &str) -> CliResult<Value> {
    let text = if s.trim_start().starts_with('{') { s.to_string() } else { std::fs::read_to_string(s)? };
    serde_json::from_str(&text).map_err(|e| usage(format!("invalid JSON: {e}")))
}

fn index(v: &Value, what: &str) -> CliResult<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| usage(format!("{what} must be a nonnegative integer")))
}

fn integer(v: &Value, what: &str) -> CliResult<Int> {
    match v {
        Value::Number(n) => n.as_i64().map(Int::from).ok_or_else(|| usage(format!("{what} must be an integer"))),
        Value::String(s) => Ok(farey::numcore::parse_int(s)?),
        _ => Err(usage(format!("{what} must be an integer"))),
    }
}

/// `{"n": 6, "diagonals": [[0,2],[0,3]]}`.
pub fn dissection(s: &str) -> CliResult<Dissection> {
    let v = json_input(s)?;
    let n = index(&v["n"], "n")?;
    let diags = v["diagonals"].as_array().ok_or_else(|| usage("diagonals must be an array"))?;
    let pairs = diags
        .iter()
        .map(|d| match d.as_array().map(|a| a.as_slice()) {
            Some([i, j]) => Ok((index(i, "diagonal end")?, index(j, "diagonal end")?)),
            _ => Err(usage("each diagonal must be a pair [i,j]")),
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(Dissection::new(n, pairs)?)
}

/// `{"periodicity": "anti", "points": [[1,0],[1,1],[0,1]]}`.
pub fn walk(s: &str) -> CliResult<WalkSeq<Int>> {
    let v = json_input(s)?;
    let periodicity = match v["periodicity"].as_str() {
        Some("anti") | Some("antiperiodic") => Periodicity::Antiperiodic,
        Some("periodic") => Periodicity::Periodic,
        _ => return Err(usage("periodicity must be \"anti\" or \"periodic\"")),
    };
    let pts = v["points"].as_array().ok_or_else(|| usage("points must be an array"))?;
    let points = pts
        .iter()
        .map(|p| match p.as_array().map(|a| a.as_slice()) {
            Some([a, b]) => Ok(SignedPair::new(integer(a, "point entry")?, integer(b, "point entry")?)?),
            _ => Err(usage("each point must be a pair [p,q]")),
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(WalkSeq::new(points, periodicity))
}

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
pub fn int(v: &Int) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

pub fn ints(w: &[Int]) -> Value {
    Value::Array(w.iter().map(int).collect())
}

pub fn mat(m: &Matrix) -> Value {
    json!([[int(m.a()), int(m.b())], [int(m.c()), int(m.d())]])
}

pub fn table(rows: &[Vec<Int>]) -> Value {
    Value::Array(rows.iter().map(|r| ints(r)).collect())
}

pub fn dissection_json(d: &Dissection) -> Value {
    let diags: Vec<Value> = d.diagonals().iter().map(|&(i, j)| json!([i, j])).collect();
    json!({ "n": d.n(), "diagonals": diags })
}

pub fn dissection_text(d: &Dissection) -> String {
    let diags: Vec<String> = d.diagonals().iter().map(|(i, j)| format!("{i}-{j}")).collect();
    format!("n={} diagonals: {}", d.n(), if diags.is_empty() { "none".to_string() } else { diags.join(" ") })
}

pub fn walk_json(w: &WalkSeq<Int>) -> Value {
    let points: Vec<Value> = w.points.iter().map(|p| json!([int(p.num()), int(p.den())])).collect();
    let periodicity = match w.periodicity {
        Periodicity::Periodic => "periodic",
        Periodicity::Antiperiodic => "anti",
    };
    json!({ "periodicity": periodicity, "points": points })
}

pub fn strings<T: fmt::Display>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| json!(x.to_string())).collect())
}

pub fn joined<T: fmt::Display>(xs: &[T], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn negative_text(w: &[Int]) -> String {
    format!("[[{}]]", format_word(w))
}

pub fn regular_text(w: &[Int]) -> String {
    format!("[{}]", format_word(w))
}
