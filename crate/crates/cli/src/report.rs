//! Job reports as JSON values and as text.

use std::fmt::Write;

use gkz_monodromy::charpoly::{canonicalize, render_root, Expansion, MonodromyFactor, ZetaFactor};
use gkz_monodromy::gkz::{Configuration, InstanceCheck, ResonanceReport};
use gkz_monodromy::linalg::format_rat;
use gkz_monodromy::{FactoredCharPoly, GaussRat};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::job::J0Choice;

/// Per-`j0` outcome.
#[derive(Debug, Clone)]
pub struct JobResult {
    pub j0: usize,
    pub poly: FactoredCharPoly,
    pub expansion: Option<Expansion>,
    pub zeta: Option<Vec<ZetaFactor>>,
    pub check: Option<InstanceCheck>,
}

#[derive(Debug, Clone)]
pub struct JobReport {
    pub rank: BigInt,
    pub resonance: ResonanceReport,
    pub results: Vec<JobResult>,
    /// Echo of the validated input.
    pub input: Value,
}

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
pub fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

fn vec_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

pub fn gauss_json(z: &GaussRat) -> Value {
    json!({"re": format_rat(&z.re), "im": format_rat(&z.im)})
}

pub fn input_echo(config: &Configuration, gamma: &[GaussRat], j0: J0Choice, options: Value) -> Value {
    json!({
        "points": config.points().iter().map(|p| vec_json(p)).collect::<Vec<_>>(),
        "gamma": gamma.iter().map(gauss_json).collect::<Vec<_>>(),
        "j0": j0.to_json(),
        "options": options,
    })
}

pub fn hull_json(config: &Configuration) -> Value {
    let hull = config.hull();
    Value::Array(
        hull.facets()
            .iter()
            .map(|f| {
                json!({
                    "normal": vec_json(&f.normal),
                    "support": int_json(&f.support),
                    "points": f.incident.iter().map(|i| i + 1).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn factor_json(f: &MonodromyFactor) -> Value {
    json!({
        "d": f.d,
        "delta": gauss_json(&f.delta_reduced),
        "multiplicity": f.multiplicity,
        "facets": f.facets,
    })
}

fn result_json(r: &JobResult) -> Value {
    let mut m = Map::new();
    m.insert("j0".into(), Value::from(r.j0));
    m.insert(
        "factors".into(),
        Value::Array(r.poly.factors().iter().map(factor_json).collect()),
    );
    m.insert("degree".into(), Value::from(r.poly.degree()));
    m.insert("certified".into(), Value::from(r.poly.certified()));
    m.insert("polynomial".into(), Value::from(r.poly.to_string()));
    if let Some(e) = &r.expansion {
        let coeffs = e
            .render()
            .into_iter()
            .map(|(re, im)| json!({"re": re, "im": im}))
            .collect();
        m.insert("expanded".into(), Value::Array(coeffs));
    }
    if let Some(z) = &r.zeta {
        let factors = z
            .iter()
            .map(|f| json!({"d": f.d, "delta": gauss_json(&f.delta), "multiplicity": f.multiplicity}))
            .collect();
        m.insert("zeta".into(), Value::Array(factors));
    }
    if let Some(c) = &r.check {
        m.insert(
            "check".into(),
            json!({"volume": int_json(&c.volume), "selected_facets": c.selected_facets}),
        );
    }
    Value::Object(m)
}

pub fn violations_json(report: &ResonanceReport) -> Value {
    Value::Array(
        report
            .violations
            .iter()
            .map(
                |v| json!({"facet": v.facet, "functional": vec_json(&v.functional), "pairing": gauss_json(&v.pairing)}),
            )
            .collect(),
    )
}

impl JobReport {
    pub fn to_json(&self, config: &Configuration) -> Value {
        json!({
            "rank": int_json(&self.rank),
            "nonresonant": self.resonance.nonresonant,
            "violations": violations_json(&self.resonance),
            "facets": hull_json(config),
            "results": self.results.iter().map(result_json).collect::<Vec<_>>(),
            "input": self.input,
        })
    }

    pub fn to_text(&self, config: &Configuration) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "rank: {}", self.rank);
        let _ = writeln!(out, "nonresonant: {}", self.resonance.nonresonant);
        write_violations(&mut out, &self.resonance, config);
        for r in &self.results {
            let tag = if r.poly.certified() {
                ""
            } else {
                " (not certified: parameter is resonant)"
            };
            let _ = writeln!(out, "j0 = {}{tag}", r.j0);
            let _ = writeln!(out, "  lambda(t) = {}", r.poly);
            let _ = writeln!(out, "  degree: {}", r.poly.degree());
            if let Some(c) = &r.check {
                let _ = writeln!(
                    out,
                    "  check: ok ({} facets selected, volume {})",
                    c.selected_facets, c.volume
                );
            }
            if let Some(e) = &r.expansion {
                let _ = writeln!(out, "  coefficients (ascending, {} digits):", e.digits());
                for (k, (re, im)) in e.render().into_iter().enumerate() {
                    let _ = writeln!(out, "    t^{k}: {re} + ({im})*i");
                }
            }
            if let Some(z) = &r.zeta {
                let text: Vec<String> = z
                    .iter()
                    .map(|f| {
                        let unit = render_root(&f.delta).replacen("exp(-2", "exp(2", 1);
                        format!("(1 - {unit}*t^{})^{}", f.d, f.multiplicity)
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "  zeta(t) = {}",
                    if text.is_empty() { "1".into() } else { text.join(" * ") }
                );
            }
        }
        out
    }
}

pub fn write_violations(out: &mut String, report: &ResonanceReport, config: &Configuration) {
    for v in &report.violations {
        let f = &config.hull().facets()[v.facet];
        let normal: Vec<String> = f.normal.iter().map(|x| x.to_string()).collect();
        let functional: Vec<String> = v.functional.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(
            out,
            "  facet {} (normal ({}), support {}): <({}), gamma> = {}",
            v.facet,
            normal.join(", "),
            f.support,
            functional.join(", "),
            render_gauss(&v.pairing)
        );
    }
}

fn render_gauss(z: &GaussRat) -> String {
    if z.is_real() {
        format_rat(&z.re)
    } else {
        format!("{} + ({})*i", format_rat(&z.re), format_rat(&z.im))
    }
}

/// Reads the factored polynomials back out of a JSON report.
pub fn polynomials_from_json(report: &Value) -> Result<Vec<(usize, FactoredCharPoly)>, String> {
    let results = report["results"].as_array().ok_or("missing results")?;
    results
        .iter()
        .map(|r| {
            let j0 = r["j0"].as_u64().ok_or("missing j0")? as usize;
            let certified = r["certified"].as_bool().ok_or("missing certified")?;
            let factors = r["factors"]
                .as_array()
                .ok_or("missing factors")?
                .iter()
                .map(|f| {
                    let d = f["d"].as_u64().ok_or("missing d")?;
                    let m = f["multiplicity"].as_u64().ok_or("missing multiplicity")?;
                    let re = f["delta"]["re"].as_str().ok_or("missing delta.re")?;
                    let im = f["delta"]["im"].as_str().ok_or("missing delta.im")?;
                    let delta = GaussRat::parse_parts(re, im).map_err(|e| e.to_string())?;
                    let facets = f["facets"]
                        .as_array()
                        .map(|a| a.iter().filter_map(|x| x.as_u64()).map(|x| x as usize).collect())
                        .unwrap_or_default();
                    Ok(MonodromyFactor::new(d, delta, m, facets))
                })
                .collect::<Result<Vec<_>, String>>()?;
            Ok((j0, canonicalize(factors, certified)))
        })
        .collect()
}
