use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::polytope::{facet_normalized_volume, lattice_distance, verify_lifted_facets, PolytopeError};

use super::{Configuration, GkzError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckFailure {
    #[error(transparent)]
    Config(#[from] GkzError),
    #[error("hull certificate: {0}")]
    Certificate(String),
    #[error("degree identity fails for j0 = {j0}: sum of d·vol is {sum}, volume is {volume}")]
    Degree { j0: usize, sum: String, volume: String },
    #[error("lifted facet check for j0 = {j0}: {message}")]
    Lift { j0: usize, message: String },
}

impl From<PolytopeError> for CheckFailure {
    fn from(e: PolytopeError) -> Self {
        CheckFailure::Config(e.into())
    }
}

/// Summary of a successful [`verify_instance`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceCheck {
    pub j0: usize,
    pub volume: BigInt,
    pub selected_facets: usize,
}

/// Parameter-independent invariants behind the monodromy formula for one
/// `j0`: exact hull certificates, `Σ d_r·Vol(Δ_r) = Vol(Q)`, and the
/// lifted-facet identities.
pub fn verify_instance(config: &Configuration, j0: usize) -> Result<InstanceCheck, CheckFailure> {
    config.check_index(j0)?;
    let hull = config.hull();
    hull.verify_certificates().map_err(CheckFailure::Certificate)?;
    let apex = &config.points()[j0 - 1];
    let volume = hull.normalized_volume();
    let mut sum = BigInt::from(0);
    let mut selected = 0;
    for f in hull.facets() {
        let d = lattice_distance(f, apex);
        if d.is_positive() {
            sum += d * facet_normalized_volume(hull, f)?;
            selected += 1;
        }
    }
    if sum != volume {
        return Err(CheckFailure::Degree {
            j0,
            sum: sum.to_string(),
            volume: volume.to_string(),
        });
    }
    let lifted = verify_lifted_facets(hull, j0).map_err(|e| CheckFailure::Lift {
        j0,
        message: e.to_string(),
    })?;
    debug_assert_eq!(lifted.len(), selected);
    Ok(InstanceCheck {
        j0,
        volume,
        selected_facets: selected,
    })
}
