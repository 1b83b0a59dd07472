//! Configurations, parameters, non-resonance and the monodromy-at-infinity
//! product formula.

mod check;
mod monodromy;
mod resonance;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::linalg::{affine_lattice_index, GaussRat, IntMat, IntVec};
use crate::polytope::{convex_hull, HullResult, LatticePolytope, PolytopeError};

pub use check::{verify_instance, CheckFailure, InstanceCheck};
pub use monodromy::{monodromy_at_infinity, rank};
pub use resonance::{nonresonance_check, ResonanceReport, ResonanceViolation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GkzError {
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error("configuration needs at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("points generate an affine sublattice of index {index} (need 1)")]
    NotAffinelyGenerating { index: BigInt },
    #[error("parameter has {found} entries, expected {expected}")]
    ParameterLength { expected: usize, found: usize },
    #[error("j0 = {j0} out of range 1..={m}")]
    IndexOutOfRange { j0: usize, m: usize },
    #[error("parameter is resonant ({} facet functional(s) take integral values)", .0.violations.len())]
    ResonantParameter(Box<ResonanceReport>),
    #[error("{0} does not fit in 64 bits")]
    TooLarge(String),
}

/// A validated point configuration `A = {a(1), …, a(m)} ⊂ Z^(n-1)` with
/// its convex hull.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    hull: HullResult,
}

impl Configuration {
    /// Checks distinctness, full dimension and that the points generate
    /// `Z^(n-1)` as an affine lattice.
    pub fn new(points: Vec<IntVec>) -> Result<Self, GkzError> {
        if points.len() < 2 {
            return Err(GkzError::TooFewPoints(points.len()));
        }
        let poly = LatticePolytope::new(points)?;
        if !poly.is_full_dimensional() {
            return Err(PolytopeError::NotFullDimensional {
                dim: poly.dim(),
                ambient: poly.ambient_dim(),
            }
            .into());
        }
        let index = affine_lattice_index(poly.points());
        if !index.is_one() {
            return Err(GkzError::NotAffinelyGenerating { index });
        }
        let hull = convex_hull(poly.points())?;
        Ok(Configuration { hull })
    }

    pub fn points(&self) -> &[IntVec] {
        self.hull.points()
    }

    pub fn point(&self, j0: usize) -> Result<&IntVec, GkzError> {
        self.check_index(j0)?;
        Ok(&self.points()[j0 - 1])
    }

    /// Number of points.
    pub fn m(&self) -> usize {
        self.points().len()
    }

    /// One more than the point dimension.
    pub fn n(&self) -> usize {
        self.hull.dim() + 1
    }

    pub fn hull(&self) -> &HullResult {
        &self.hull
    }

    /// The `n × m` matrix whose `j`-th column is `(a(j), 1)`.
    pub fn matrix(&self) -> IntMat {
        let rows: Vec<IntVec> = self
            .points()
            .iter()
            .map(|p| {
                let mut c = p.clone();
                c.push(BigInt::one());
                c
            })
            .collect();
        IntMat::from_rows(&rows).transpose()
    }

    pub fn check_index(&self, j0: usize) -> Result<(), GkzError> {
        if j0 == 0 || j0 > self.m() {
            return Err(GkzError::IndexOutOfRange { j0, m: self.m() });
        }
        Ok(())
    }
}

pub fn build_configuration(points: Vec<IntVec>) -> Result<Configuration, GkzError> {
    Configuration::new(points)
}

/// `α = γ_n` and `β_i = -γ_i - 1` for `i < n`.
pub fn derive_alpha_beta(gamma: &[GaussRat]) -> Result<(GaussRat, Vec<GaussRat>), GkzError> {
    let Some((alpha, head)) = gamma.split_last() else {
        return Err(GkzError::ParameterLength { expected: 2, found: 0 });
    };
    if head.is_empty() {
        return Err(GkzError::ParameterLength { expected: 2, found: 1 });
    }
    let one = GaussRat::one();
    let beta = head.iter().map(|g| -g - one.clone()).collect();
    Ok((alpha.clone(), beta))
}

/// Parameter `γ ∈ C^n` with exact Gaussian-rational entries, together with
/// the derived `α` and `β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parameter {
    gamma: Vec<GaussRat>,
    alpha: GaussRat,
    beta: Vec<GaussRat>,
}

impl Parameter {
    pub fn new(gamma: Vec<GaussRat>) -> Result<Self, GkzError> {
        let (alpha, beta) = derive_alpha_beta(&gamma)?;
        Ok(Parameter { gamma, alpha, beta })
    }

    pub fn gamma(&self) -> &[GaussRat] {
        &self.gamma
    }

    pub fn alpha(&self) -> &GaussRat {
        &self.alpha
    }

    pub fn beta(&self) -> &[GaussRat] {
        &self.beta
    }

    pub fn n(&self) -> usize {
        self.gamma.len()
    }
}
