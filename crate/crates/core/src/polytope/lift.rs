//! Lifting a configuration to height one at a chosen point, and the exact
//! check that facets missing that point lift to facets with normal
//! `(u, -d)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{convex_hull, facet_normalized_volume, lattice_distance, HullResult, LatticePolytope, PolytopeError};
use crate::linalg::{dot, IntVec};

/// Points `(a(j), 0)` for `j != j0` and `(a(j0), 1)`, in input order.
/// `j0` is 1-based.
pub fn lift_polytope(points: &[IntVec], j0: usize) -> Result<LatticePolytope, PolytopeError> {
    LatticePolytope::new(lifted_points(points, j0)?)
}

fn lifted_points(points: &[IntVec], j0: usize) -> Result<Vec<IntVec>, PolytopeError> {
    if j0 == 0 || j0 > points.len() {
        return Err(PolytopeError::IndexOutOfRange {
            index: j0,
            len: points.len(),
        });
    }
    Ok(points
        .iter()
        .enumerate()
        .map(|(j, p)| {
            let mut q = p.clone();
            q.push(if j + 1 == j0 { BigInt::one() } else { BigInt::zero() });
            q
        })
        .collect())
}

/// The lifted points of [`lift_polytope`] followed by `(a(j0), 0)`: the
/// cone over the whole base polytope with apex `(a(j0), 1)`. Always
/// full-dimensional when the base is.
pub fn lift_with_base(points: &[IntVec], j0: usize) -> Result<Vec<IntVec>, PolytopeError> {
    let mut lifted = lifted_points(points, j0)?;
    let mut base = points[j0 - 1].clone();
    base.push(BigInt::zero());
    lifted.push(base);
    Ok(lifted)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedFacet {
    /// Index of the base facet in `hull.facets()`.
    pub facet: usize,
    pub distance: BigInt,
    pub lifted_normal: IntVec,
    pub support: BigInt,
    pub volume: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftCheckError {
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error("facet {facet}: lifted hull has no facet with normal {normal:?} and support {support}")]
    MissingFacet {
        facet: usize,
        normal: Vec<String>,
        support: String,
    },
    #[error("facet {facet}: minimum over the lifted point set is {found}, expected {expected}")]
    SupportMismatch {
        facet: usize,
        found: String,
        expected: String,
    },
    #[error("facet {facet}: lifted volume {lifted} differs from base volume {base}")]
    VolumeMismatch { facet: usize, lifted: String, base: String },
    #[error("lifted hull has {found} downward facets, expected {expected}")]
    ExtraFacets { found: usize, expected: usize },
}

/// For every facet of `hull` at positive lattice distance `d` from point
/// `j0` (1-based), checks that the lifted cone has a facet with inner
/// normal `(u, -d)` and support `h`, that its minimum over the lifted point
/// set is also `h`, and that its normalized volume equals the base facet's.
/// Also checks that these are the only lifted facets with negative last
/// normal coordinate.
pub fn verify_lifted_facets(hull: &HullResult, j0: usize) -> Result<Vec<LiftedFacet>, LiftCheckError> {
    let pts = hull.points();
    let lifted_only = lifted_points(pts, j0)?;
    let cone = convex_hull(&lift_with_base(pts, j0)?)?;
    let apex_base = &pts[j0 - 1];
    let mut out = Vec::new();
    for (fi, f) in hull.facets().iter().enumerate() {
        let d = lattice_distance(f, apex_base);
        if !d.is_positive() {
            continue;
        }
        let mut normal = f.normal.clone();
        normal.push(-d.clone());
        let Some(ci) = cone.facet_index(&normal, &f.support) else {
            return Err(LiftCheckError::MissingFacet {
                facet: fi,
                normal: normal.iter().map(ToString::to_string).collect(),
                support: f.support.to_string(),
            });
        };
        let min = lifted_only.iter().map(|p| dot(&normal, p)).min().expect("nonempty");
        if min != f.support {
            return Err(LiftCheckError::SupportMismatch {
                facet: fi,
                found: min.to_string(),
                expected: f.support.to_string(),
            });
        }
        let lifted = facet_normalized_volume(&cone, &cone.facets()[ci])?;
        let base = facet_normalized_volume(hull, f)?;
        if lifted != base {
            return Err(LiftCheckError::VolumeMismatch {
                facet: fi,
                lifted: lifted.to_string(),
                base: base.to_string(),
            });
        }
        out.push(LiftedFacet {
            facet: fi,
            distance: d,
            lifted_normal: normal,
            support: f.support.clone(),
            volume: base,
        });
    }
    let downward = cone
        .facets()
        .iter()
        .filter(|f| f.normal.last().is_some_and(Signed::is_negative))
        .count();
    if downward != out.len() {
        return Err(LiftCheckError::ExtraFacets {
            found: downward,
            expected: out.len(),
        });
    }
    Ok(out)
}
