//! Job files: `{"points": [[...], ...], "gamma": [...], "j0": 1, "options": {...}}`.

use gkz_monodromy::linalg::parse_rat;
use gkz_monodromy::{GaussRat, IntVec};
use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum J0Choice {
    One(usize),
    All,
}

impl J0Choice {
    pub fn parse(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(J0Choice::All);
        }
        match s.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(J0Choice::One(k)),
            _ => Err(format!("expected a positive index or \"all\", got {s:?}")),
        }
    }

    pub fn to_json(self) -> Value {
        match self {
            J0Choice::One(k) => Value::from(k),
            J0Choice::All => Value::from("all"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(format!("expected \"text\" or \"json\", got {s:?}")),
        }
    }
}

/// Options as they may appear in the file; command-line flags are layered
/// on top.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FileOptions {
    pub expand: Option<bool>,
    pub digits: Option<u32>,
    pub zeta: Option<bool>,
    pub force: Option<bool>,
    pub check: Option<bool>,
    pub format: Option<Format>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub points: Vec<IntVec>,
    pub gamma: Vec<GaussRat>,
    pub j0: Option<J0Choice>,
    pub options: FileOptions,
}

fn field(path: &str, message: impl Into<String>) -> CliError {
    CliError::input(path, message)
}

fn integer(v: &Value, path: &str) -> Result<BigInt, CliError> {
    match v {
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => Ok(i.into()),
            (_, Some(u)) => Ok(u.into()),
            _ => Err(field(path, format!("expected an integer, got {n}"))),
        },
        Value::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| field(path, format!("expected an integer, got {s:?}"))),
        other => Err(field(path, format!("expected an integer, got {}", kind(other)))),
    }
}

fn rational_part(v: &Value, path: &str) -> Result<gkz_monodromy::BigRat, CliError> {
    match v {
        Value::String(s) => parse_rat(s).map_err(|e| field(path, format!("{e} in {s:?}"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(gkz_monodromy::BigRat::from_integer(integer(v, path)?)),
        Value::Number(n) => Err(field(path, format!("write {n} as a rational string such as \"p/q\""))),
        other => Err(field(path, format!("expected a rational string, got {}", kind(other)))),
    }
}

fn gamma_entry(v: &Value, path: &str) -> Result<GaussRat, CliError> {
    match v {
        Value::Object(map) => {
            for key in map.keys() {
                if key != "re" && key != "im" {
                    return Err(field(&format!("{path}.{key}"), "unknown field"));
                }
            }
            let re = map
                .get("re")
                .ok_or_else(|| field(path, "missing field \"re\""))
                .and_then(|x| rational_part(x, &format!("{path}.re")))?;
            let im = match map.get("im") {
                Some(x) => rational_part(x, &format!("{path}.im"))?,
                None => gkz_monodromy::BigRat::from_integer(0.into()),
            };
            Ok(GaussRat::new(re, im))
        }
        _ => rational_part(v, path).map(GaussRat::real),
    }
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array()
        .ok_or_else(|| field(path, format!("expected an array, got {}", kind(v))))
}

fn boolean(v: &Value, path: &str) -> Result<bool, CliError> {
    v.as_bool()
        .ok_or_else(|| field(path, format!("expected a boolean, got {}", kind(v))))
}

fn options(map: &Map<String, Value>) -> Result<FileOptions, CliError> {
    let mut out = FileOptions::default();
    for (key, v) in map {
        let path = format!("options.{key}");
        match key.as_str() {
            "expand" => out.expand = Some(boolean(v, &path)?),
            "zeta" => out.zeta = Some(boolean(v, &path)?),
            "force" => out.force = Some(boolean(v, &path)?),
            "check" => out.check = Some(boolean(v, &path)?),
            "digits" => {
                let d = v
                    .as_u64()
                    .and_then(|d| u32::try_from(d).ok())
                    .ok_or_else(|| field(&path, format!("expected a positive integer, got {v}")))?;
                out.digits = Some(d);
            }
            "format" => {
                let s = v
                    .as_str()
                    .ok_or_else(|| field(&path, format!("expected a string, got {}", kind(v))))?;
                out.format = Some(Format::parse(s).map_err(|e| field(&path, e))?);
            }
            _ => return Err(field(&path, "unknown option")),
        }
    }
    Ok(out)
}

/// Parses a job file. Syntax errors carry line and column; structural
/// errors carry the path of the offending field, e.g. `gamma[2].re`.
pub fn parse_job(text: &str) -> Result<JobSpec, CliError> {
    let root: Value = serde_json::from_str(text).map_err(|e| CliError::syntax(e.line(), e.column(), e.to_string()))?;
    let map = root
        .as_object()
        .ok_or_else(|| field("$", format!("expected an object, got {}", kind(&root))))?;
    for key in map.keys() {
        if !matches!(key.as_str(), "points" | "gamma" | "j0" | "options") {
            return Err(field(key, "unknown field"));
        }
    }
    let raw_points = array(
        map.get("points")
            .ok_or_else(|| field("$", "missing field \"points\""))?,
        "points",
    )?;
    let mut points = Vec::with_capacity(raw_points.len());
    for (i, p) in raw_points.iter().enumerate() {
        let path = format!("points[{i}]");
        let coords = array(p, &path)?;
        let point = coords
            .iter()
            .enumerate()
            .map(|(k, x)| integer(x, &format!("{path}[{k}]")))
            .collect::<Result<IntVec, _>>()?;
        points.push(point);
    }
    let raw_gamma = array(
        map.get("gamma").ok_or_else(|| field("$", "missing field \"gamma\""))?,
        "gamma",
    )?;
    let gamma = raw_gamma
        .iter()
        .enumerate()
        .map(|(i, g)| gamma_entry(g, &format!("gamma[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let j0 = match map.get("j0") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(J0Choice::parse(s).map_err(|e| field("j0", e))?),
        Some(Value::Number(n)) => Some(J0Choice::parse(&n.to_string()).map_err(|e| field("j0", e))?),
        Some(other) => {
            return Err(field(
                "j0",
                format!("expected an index or \"all\", got {}", kind(other)),
            ))
        }
    };
    let options = match map.get("options") {
        None => FileOptions::default(),
        Some(Value::Object(o)) => options(o)?,
        Some(other) => return Err(field("options", format!("expected an object, got {}", kind(other)))),
    };
    if let Some(dim) = points.first().map(Vec::len) {
        if gamma.len() != dim + 1 {
            return Err(field(
                "gamma",
                format!(
                    "expected {} entries (point dimension + 1), got {}",
                    dim + 1,
                    gamma.len()
                ),
            ));
        }
    }
    Ok(JobSpec {
        points,
        gamma,
        j0,
        options,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> CliError {
        parse_job(text).unwrap_err()
    }

    #[test]
    fn accepts_both_gamma_forms() {
        let job =
            parse_job(r#"{"points": [[0], [1]], "gamma": ["1/2", {"re": "-1", "im": "1/3"}], "j0": "all"}"#).unwrap();
        assert_eq!(job.points, vec![vec![BigInt::from(0)], vec![BigInt::from(1)]]);
        assert_eq!(job.gamma[1], GaussRat::parse_parts("-1", "1/3").unwrap());
        assert_eq!(job.j0, Some(J0Choice::All));
    }

    #[test]
    fn diagnostics_name_the_field() {
        assert_eq!(
            err(r#"{"points": [[0], [1.5]], "gamma": ["0", "0"]}"#).path.as_deref(),
            Some("points[1][0]")
        );
        assert_eq!(
            err(r#"{"points": [[0], [1]], "gamma": ["0", {"re": "1/0"}]}"#)
                .path
                .as_deref(),
            Some("gamma[1].re")
        );
        assert_eq!(
            err(r#"{"points": [[0], [1]], "gamma": ["0"]}"#).path.as_deref(),
            Some("gamma")
        );
        assert_eq!(
            err(r#"{"points": [[0], [1]], "gamma": ["0", 0.5]}"#).path.as_deref(),
            Some("gamma[1]")
        );
        assert_eq!(
            err(r#"{"points": [], "gamma": [], "mode": 1}"#).path.as_deref(),
            Some("mode")
        );
        assert_eq!(
            err(r#"{"points": [[0]], "gamma": [], "j0": 0}"#).path.as_deref(),
            Some("j0")
        );
        assert_eq!(
            err(r#"{"points": [[0]], "gamma": [], "options": {"digits": -1}}"#)
                .path
                .as_deref(),
            Some("options.digits")
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = err("{\n  \"points\": [[0],\n}");
        assert_eq!(e.code, "malformed_json");
        assert_eq!(e.line, Some(3));
    }
}
