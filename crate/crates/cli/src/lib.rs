//! Command-line pipeline: job file in, report out.
//!
//! Exit codes: 0 on success, 1 on invalid input or a failed check, 2 when
//! the parameter is resonant and `--force` was not given.

pub mod job;
pub mod report;

use std::fmt;

use gkz_monodromy::charpoly::{CharPolyError, DEFAULT_DIGITS};
use gkz_monodromy::gkz::{
    monodromy_at_infinity, nonresonance_check, rank, verify_instance, CheckFailure, Configuration, GkzError, Parameter,
};
use gkz_monodromy::polytope::PolytopeError;
use serde_json::{json, Value};

use job::{parse_job, Format, J0Choice};
use report::{input_echo, JobReport, JobResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_RESONANT: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    /// Machine-readable code, e.g. `not_full_dimensional`.
    pub code: &'static str,
    pub message: String,
    /// Field path for structural input errors.
    pub path: Option<String>,
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl CliError {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
            path: None,
            line: None,
            column: None,
        }
    }

    pub fn input(path: &str, message: impl Into<String>) -> Self {
        CliError {
            path: Some(path.to_string()),
            ..Self::new("invalid_field", message)
        }
    }

    pub fn syntax(line: usize, column: usize, message: String) -> Self {
        CliError {
            line: Some(line),
            column: Some(column),
            ..Self::new("malformed_json", message)
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({"code": self.code, "message": self.message});
        if let Some(p) = &self.path {
            v["path"] = Value::from(p.as_str());
        }
        if let (Some(l), Some(c)) = (self.line, self.column) {
            v["line"] = Value::from(l);
            v["column"] = Value::from(c);
        }
        v
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] ", self.code)?;
        if let Some(p) = &self.path {
            write!(f, "{p}: ")?;
        }
        write!(f, "{}", self.message)
    }
}

fn polytope_code(e: &PolytopeError) -> &'static str {
    match e {
        PolytopeError::Empty => "empty_configuration",
        PolytopeError::ZeroAmbientDimension => "zero_dimension",
        PolytopeError::DimensionMismatch { .. } => "dimension_mismatch",
        PolytopeError::DuplicatePoints { .. } => "duplicate_points",
        PolytopeError::NotFullDimensional { .. } => "not_full_dimensional",
        PolytopeError::IndexOutOfRange { .. } => "index_out_of_range",
        PolytopeError::UnknownFacet => "unknown_facet",
        PolytopeError::BadBasis => "bad_basis",
    }
}

impl From<GkzError> for CliError {
    fn from(e: GkzError) -> Self {
        let code = match &e {
            GkzError::Polytope(p) => polytope_code(p),
            GkzError::TooFewPoints(_) => "too_few_points",
            GkzError::NotAffinelyGenerating { .. } => "not_affinely_generating",
            GkzError::ParameterLength { .. } => "parameter_length",
            GkzError::IndexOutOfRange { .. } => "j0_out_of_range",
            GkzError::ResonantParameter(_) => "resonant_parameter",
            GkzError::TooLarge(_) => "too_large",
        };
        CliError::new(code, e.to_string())
    }
}

impl From<CharPolyError> for CliError {
    fn from(e: CharPolyError) -> Self {
        CliError::new("digits_out_of_range", e.to_string())
    }
}

impl From<CheckFailure> for CliError {
    fn from(e: CheckFailure) -> Self {
        match e {
            CheckFailure::Config(g) => g.into(),
            other => CliError::new("check_failed", other.to_string()),
        }
    }
}

/// Flag values; `None` and `false` defer to the job file.
#[derive(Debug, Clone, Default)]
pub struct Flags {
    pub j0: Option<J0Choice>,
    pub expand: bool,
    pub digits: Option<u32>,
    pub zeta: bool,
    pub force: bool,
    pub format: Option<Format>,
    pub check: bool,
}

/// What to print and how to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Settings {
    j0: J0Choice,
    expand: bool,
    digits: u32,
    zeta: bool,
    force: bool,
    check: bool,
    format: Format,
}

impl Settings {
    fn echo(&self) -> Value {
        json!({
            "expand": self.expand,
            "digits": self.digits,
            "zeta": self.zeta,
            "force": self.force,
            "check": self.check,
        })
    }
}

fn fail(err: CliError, format: Format, code: i32) -> Outcome {
    let stdout = match format {
        Format::Json => format!("{:#}\n", json!({"error": err.to_json()})),
        Format::Text => String::new(),
    };
    let mut stderr = format!("error: {err}");
    if let (Some(l), Some(c)) = (err.line, err.column) {
        stderr.push_str(&format!(" (line {l}, column {c})"));
    }
    stderr.push('\n');
    Outcome { stdout, stderr, code }
}

/// Runs one job given the job file's text.
pub fn run(input: &str, flags: &Flags) -> Outcome {
    let fallback = flags.format.unwrap_or(Format::Text);
    let job = match parse_job(input) {
        Ok(job) => job,
        Err(e) => return fail(e, fallback, EXIT_INVALID),
    };
    let o = &job.options;
    let settings = Settings {
        j0: flags.j0.or(job.j0).unwrap_or(J0Choice::One(1)),
        expand: flags.expand || o.expand.unwrap_or(false),
        digits: flags.digits.or(o.digits).unwrap_or(DEFAULT_DIGITS),
        zeta: flags.zeta || o.zeta.unwrap_or(false),
        force: flags.force || o.force.unwrap_or(false),
        check: flags.check || o.check.unwrap_or(false),
        format: flags.format.or(o.format).unwrap_or(Format::Text),
    };
    let format = settings.format;
    let config = match Configuration::new(job.points) {
        Ok(c) => c,
        Err(e) => return fail(e.into(), format, EXIT_INVALID),
    };
    let param = match Parameter::new(job.gamma.clone()) {
        Ok(p) => p,
        Err(e) => return fail(e.into(), format, EXIT_INVALID),
    };
    match execute(&config, &param, &settings) {
        Ok(report) => {
            let stdout = match format {
                Format::Json => format!("{:#}\n", report.to_json(&config)),
                Format::Text => report.to_text(&config),
            };
            let stderr = if report.resonance.nonresonant {
                String::new()
            } else {
                "warning: parameter is resonant; results are not certified\n".to_string()
            };
            Outcome {
                stdout,
                stderr,
                code: EXIT_OK,
            }
        }
        Err(Failure::Resonant(report)) => resonant(report, &config, format),
        Err(Failure::Error(e)) => fail(e, format, EXIT_INVALID),
    }
}

enum Failure {
    Resonant(JobReport),
    Error(CliError),
}

impl<E: Into<CliError>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Error(e.into())
    }
}

fn execute(config: &Configuration, param: &Parameter, s: &Settings) -> Result<JobReport, Failure> {
    let resonance = nonresonance_check(config, param)?;
    let j0s: Vec<usize> = match s.j0 {
        J0Choice::One(k) => {
            config.check_index(k)?;
            vec![k]
        }
        J0Choice::All => (1..=config.m()).collect(),
    };
    if s.expand && !(1..=gkz_monodromy::charpoly::MAX_DIGITS).contains(&s.digits) {
        return Err(CharPolyError::DigitsOutOfRange(s.digits).into());
    }
    let mut report = JobReport {
        rank: rank(config),
        resonance,
        results: Vec::new(),
        input: input_echo(config, param.gamma(), s.j0, s.echo()),
    };
    if !report.resonance.nonresonant && !s.force {
        return Err(Failure::Resonant(report));
    }
    for j0 in j0s {
        let check = if s.check {
            Some(verify_instance(config, j0)?)
        } else {
            None
        };
        let poly = monodromy_at_infinity(config, param, j0, s.force)?;
        let expansion = if s.expand { Some(poly.expand(s.digits)?) } else { None };
        let zeta = s.zeta.then(|| poly.to_zeta_form());
        report.results.push(JobResult {
            j0,
            poly,
            expansion,
            zeta,
            check,
        });
    }
    Ok(report)
}

fn resonant(report: JobReport, config: &Configuration, format: Format) -> Outcome {
    let err = CliError::new(
        "resonant_parameter",
        format!(
            "parameter is resonant on {} facet(s); pass --force to evaluate anyway (uncertified)",
            report.resonance.violations.len()
        ),
    );
    let stdout = match format {
        Format::Json => {
            let mut v = report.to_json(config);
            v["error"] = err.to_json();
            format!("{v:#}\n")
        }
        Format::Text => report.to_text(config),
    };
    Outcome {
        stdout,
        stderr: format!("error: {err}\n"),
        code: EXIT_RESONANT,
    }
}
