use crate::linalg::{GaussRat, IntVec};

use super::{Configuration, GkzError, Parameter};

/// A facet functional `w = (u, -h)` whose pairing with `γ` is an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResonanceViolation {
    /// Index into the configuration hull's facet list.
    pub facet: usize,
    pub functional: IntVec,
    pub pairing: GaussRat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResonanceReport {
    pub nonresonant: bool,
    pub violations: Vec<ResonanceViolation>,
}

/// `<w, γ>` for `w ∈ Z^n`.
fn pair(w: &[num_bigint::BigInt], gamma: &[GaussRat]) -> GaussRat {
    w.iter()
        .zip(gamma)
        .fold(GaussRat::zero(), |acc, (k, g)| acc + g.scale(k))
}

/// The codimension-one faces of the cone over `{(a(j), 1)}` are the cones
/// over the facets of the hull; the face over a facet with inner normal `u`
/// and support `h` spans the kernel of the primitive functional
/// `w = (u, -h)`, so `γ ∈ Z^n + Lin(Γ)` exactly when `<w, γ> ∈ Z`.
pub fn nonresonance_check(config: &Configuration, param: &Parameter) -> Result<ResonanceReport, GkzError> {
    if param.n() != config.n() {
        return Err(GkzError::ParameterLength {
            expected: config.n(),
            found: param.n(),
        });
    }
    let violations: Vec<ResonanceViolation> = config
        .hull()
        .facets()
        .iter()
        .enumerate()
        .filter_map(|(i, f)| {
            let mut w = f.normal.clone();
            w.push(-f.support.clone());
            let pairing = pair(&w, param.gamma());
            pairing.is_integer().then_some(ResonanceViolation {
                facet: i,
                functional: w,
                pairing,
            })
        })
        .collect();
    Ok(ResonanceReport {
        nonresonant: violations.is_empty(),
        violations,
    })
}
