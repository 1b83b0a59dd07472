//! Browser bindings. Every export takes and returns JSON text; failures
//! come back as `{"error": {"code", "message", ...}}` rather than thrown
//! exceptions.

use gkz_cli::job::{parse_job, J0Choice};
use gkz_cli::report::{gauss_json, hull_json, int_json, violations_json};
use gkz_cli::CliError;
use gkz_monodromy::gkz::{monodromy_at_infinity, nonresonance_check, rank, Configuration, Parameter};
use gkz_monodromy::linalg::{dot, parse_rat};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

struct Job {
    config: Configuration,
    param: Parameter,
    j0: usize,
}

fn load(job: &str) -> Result<Job, CliError> {
    let spec = parse_job(job)?;
    let j0 = match spec.j0 {
        None => 1,
        Some(J0Choice::One(k)) => k,
        Some(J0Choice::All) => return Err(CliError::input("j0", "the demo shows one j0 at a time")),
    };
    let config = Configuration::new(spec.points)?;
    let param = Parameter::new(spec.gamma)?;
    config.check_index(j0)?;
    Ok(Job { config, param, j0 })
}

/// Hull, facet data for the chosen `j0`, and the monodromy eigenvalues.
/// Resonant parameters are evaluated anyway and flagged uncertified.
pub fn analyze_json(job: &str) -> Result<Value, CliError> {
    let Job { config, param, j0 } = load(job)?;
    let hull = config.hull();
    let resonance = nonresonance_check(&config, &param)?;
    let poly = monodromy_at_infinity(&config, &param, j0, true)?;
    let apex = &config.points()[j0 - 1];
    let mut facets = hull_json(&config);
    for (f, v) in hull.facets().iter().zip(facets.as_array_mut().unwrap()) {
        let d = dot(&f.normal, apex) - &f.support;
        v["distance"] = int_json(&d);
        v["selected"] = Value::from(d > 0.into());
    }
    let roots: Vec<Value> = poly
        .factors()
        .iter()
        .enumerate()
        .flat_map(|(k, f)| {
            f.distinct_roots()
                .into_iter()
                .map(move |r| json!({"re": r.re, "im": r.im, "factor": k, "multiplicity": f.multiplicity}))
        })
        .collect();
    let factors: Vec<Value> = poly
        .factors()
        .iter()
        .map(|f| json!({"d": f.d, "delta": gauss_json(&f.delta_reduced), "multiplicity": f.multiplicity, "facets": f.facets}))
        .collect();
    Ok(json!({
        "points": config.points().iter().map(|p| p.iter().map(int_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "dim": config.n() - 1,
        "j0": j0,
        "vertices": hull.vertices().iter().map(|i| i + 1).collect::<Vec<_>>(),
        "facets": facets,
        "triangulation": hull.triangulation().iter().map(|s| s.iter().map(|i| i + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "rank": int_json(&rank(&config)),
        "nonresonant": resonance.nonresonant,
        "violations": violations_json(&resonance),
        "certified": poly.certified(),
        "polynomial": poly.to_string(),
        "degree": poly.degree(),
        "factors": factors,
        "roots": roots,
    }))
}

/// The Gauss configuration `{(1,0), (0,1), (0,0), (-1,1)}` with
/// `γ = (c - 1, -a, c - a - b - 1)`.
pub fn gauss_json_job(a: &str, b: &str, c: &str, j0: u32) -> Result<Value, CliError> {
    let parse = |name: &str, s: &str| parse_rat(s).map_err(|e| CliError::input(name, format!("{e} in {s:?}")));
    let (a, b, c) = (parse("a", a)?, parse("b", b)?, parse("c", c)?);
    let one = gkz_monodromy::BigRat::from_integer(1.into());
    let gamma = [&c - &one, -a.clone(), &c - &a - &b - &one];
    let job = json!({
        "points": [[1, 0], [0, 1], [0, 0], [-1, 1]],
        "gamma": gamma.iter().map(gkz_monodromy::linalg::format_rat).collect::<Vec<_>>(),
        "j0": j0,
    });
    analyze_json(&job.to_string())
}

/// Dense coefficients at `digits` significant digits.
pub fn expand_json(job: &str, digits: u32) -> Result<Value, CliError> {
    let Job { config, param, j0 } = load(job)?;
    let poly = monodromy_at_infinity(&config, &param, j0, true)?;
    let expansion = poly.expand(digits)?;
    let coeffs: Vec<Value> = expansion
        .render()
        .into_iter()
        .map(|(re, im)| json!({"re": re, "im": im}))
        .collect();
    Ok(json!({"j0": j0, "digits": digits, "certified": poly.certified(), "coefficients": coeffs}))
}

fn respond(r: Result<Value, CliError>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({"error": e.to_json()}).to_string(),
    }
}

#[wasm_bindgen]
pub fn analyze(job: &str) -> String {
    respond(analyze_json(job))
}

#[wasm_bindgen]
pub fn gauss(a: &str, b: &str, c: &str, j0: u32) -> String {
    respond(gauss_json_job(a, b, c, j0))
}

#[wasm_bindgen]
pub fn expand(job: &str, digits: u32) -> String {
    respond(expand_json(job, digits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_roots_sit_on_the_circle() {
        let v = gauss_json_job("1/3", "1/5", "1/2", 1).unwrap();
        assert_eq!(v["rank"], 2);
        assert_eq!(v["certified"], true);
        let roots = v["roots"].as_array().unwrap();
        assert_eq!(roots.len(), 2);
        for r in roots {
            let (x, y) = (r["re"].as_f64().unwrap(), r["im"].as_f64().unwrap());
            assert!((x.hypot(y) - 1.0).abs() < 1e-12);
        }
        let selected = v["facets"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|f| f["selected"] == true)
            .count();
        assert_eq!(selected, 2);
        assert_eq!(v["triangulation"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn resonant_input_is_flagged_not_rejected() {
        let v = gauss_json_job("1", "1/5", "1/2", 1).unwrap();
        assert_eq!(v["nonresonant"], false);
        assert_eq!(v["certified"], false);
        assert_eq!(v["violations"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn errors_are_json() {
        let out: Value = serde_json::from_str(&analyze(r#"{"points": [[0], [2]], "gamma": ["0", "1/2"]}"#)).unwrap();
        assert_eq!(out["error"]["code"], "not_affinely_generating");
        let out: Value = serde_json::from_str(&gauss("x", "0", "0", 1)).unwrap();
        assert_eq!(out["error"]["path"], "a");
    }

    #[test]
    fn page_sample_job_runs() {
        let page = include_str!("../www/index.html");
        let start = page.find("<textarea id=\"job\">").unwrap() + "<textarea id=\"job\">".len();
        let end = page[start..].find("</textarea>").unwrap() + start;
        let v = analyze_json(&page[start..end]).unwrap();
        assert_eq!(v["certified"], true);
        assert_eq!(v["degree"], v["rank"]);
    }

    #[test]
    fn expansion_is_monic() {
        let job = r#"{"points": [[0, 0], [1, 0], [0, 1], [1, 1]], "gamma": ["1/3", "1/5", "2/7"], "j0": 4}"#;
        let v = expand_json(job, 20).unwrap();
        let c = v["coefficients"].as_array().unwrap();
        assert_eq!(c.last().unwrap()["re"], "1");
        assert_eq!(c.len(), 3);
    }
}
