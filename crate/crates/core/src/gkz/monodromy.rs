use num_bigint::BigInt;
use num_traits::Signed;

use crate::charpoly::{canonicalize, FactoredCharPoly, MonodromyFactor};
use crate::linalg::GaussRat;
use crate::polytope::{facet_normalized_volume, lattice_distance};

use super::{nonresonance_check, Configuration, GkzError, Parameter};

fn to_u64(v: &BigInt, what: &str) -> Result<u64, GkzError> {
    u64::try_from(v).map_err(|_| GkzError::TooLarge(format!("{what} {v}")))
}

/// Normalized volume of the hull; the degree of every monodromy
/// polynomial of the configuration.
pub fn rank(config: &Configuration) -> BigInt {
    config.hull().normalized_volume()
}

/// Characteristic polynomial of the `j0`-th monodromy at infinity
/// (`j0` is 1-based):
///
/// `∏_r (t^{d_r} - exp(-2πi δ_r))^{Vol(Δ_r)}` over the facets `Δ_r` with
/// `d_r = <u_r, a(j0)> - h_r > 0`, where `δ_r = α h_r + <β, u_r>`.
///
/// A resonant parameter is an error unless `force` is set, in which case
/// the formula is still evaluated and the result is marked uncertified.
pub fn monodromy_at_infinity(
    config: &Configuration,
    param: &Parameter,
    j0: usize,
    force: bool,
) -> Result<FactoredCharPoly, GkzError> {
    config.check_index(j0)?;
    let report = nonresonance_check(config, param)?;
    if !report.nonresonant && !force {
        return Err(GkzError::ResonantParameter(Box::new(report)));
    }
    let hull = config.hull();
    let apex = &config.points()[j0 - 1];
    let mut factors = Vec::new();
    for (i, facet) in hull.facets().iter().enumerate() {
        let d = lattice_distance(facet, apex);
        if !d.is_positive() {
            continue;
        }
        let delta = param
            .beta()
            .iter()
            .zip(&facet.normal)
            .fold(param.alpha().scale(&facet.support), |acc: GaussRat, (b, u)| {
                acc + b.scale(u)
            });
        let vol = facet_normalized_volume(hull, facet)?;
        factors.push(MonodromyFactor::new(
            to_u64(&d, "lattice distance")?,
            delta,
            to_u64(&vol, "facet volume")?,
            vec![i],
        ));
    }
    Ok(canonicalize(factors, report.nonresonant))
}
