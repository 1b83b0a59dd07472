//! Exact convex hulls of lattice point sets, primitive inner facet normals
//! and normalized lattice volumes.
//!
//! Every facet is stored as an inner normal `u` with support `h`, so that
//! `<u, p> >= h` for all points and equality holds exactly on the facet.

mod hull;
mod lift;
mod volume;

use num_bigint::BigInt;
use thiserror::Error;

use crate::linalg::{affine_dimension, dot, IntVec};

pub use hull::convex_hull;
pub use lift::{lift_polytope, lift_with_base, verify_lifted_facets, LiftedFacet};
pub use volume::{facet_normalized_volume, lattice_distance, normalized_volume, volume_in_lattice_basis};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("empty point set")]
    Empty,
    #[error("points must have at least one coordinate")]
    ZeroAmbientDimension,
    #[error("point {index} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("points {first} and {second} coincide")]
    DuplicatePoints { first: usize, second: usize },
    #[error("point set has affine dimension {dim} but ambient dimension is {ambient}")]
    NotFullDimensional { dim: isize, ambient: usize },
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("facet does not belong to this hull")]
    UnknownFacet,
    #[error("lattice basis does not span the facet lattice")]
    BadBasis,
}

/// Ordered lattice point set in `Z^D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    points: Vec<IntVec>,
    ambient: usize,
    dim: isize,
}

impl LatticePolytope {
    pub fn new(points: Vec<IntVec>) -> Result<Self, PolytopeError> {
        let ambient = points.first().ok_or(PolytopeError::Empty)?.len();
        if ambient == 0 {
            return Err(PolytopeError::ZeroAmbientDimension);
        }
        for (index, p) in points.iter().enumerate() {
            if p.len() != ambient {
                return Err(PolytopeError::DimensionMismatch {
                    index,
                    found: p.len(),
                    expected: ambient,
                });
            }
        }
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| points[a].cmp(&points[b]).then(a.cmp(&b)));
        for w in order.windows(2) {
            if points[w[0]] == points[w[1]] {
                return Err(PolytopeError::DuplicatePoints {
                    first: w[0].min(w[1]),
                    second: w[0].max(w[1]),
                });
            }
        }
        let refs: Vec<&IntVec> = points.iter().collect();
        let dim = affine_dimension(&refs);
        Ok(LatticePolytope { points, ambient, dim })
    }

    pub fn points(&self) -> &[IntVec] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &IntVec {
        &self.points[i]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Affine dimension of the point set.
    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient as isize
    }
}

/// A facet: primitive inner normal, support value and the indices of the
/// input points lying on it (sorted).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Facet {
    pub normal: IntVec,
    pub support: BigInt,
    pub incident: Vec<usize>,
}

impl Facet {
    /// `<normal, p> - support`; nonnegative on the polytope.
    pub fn slack(&self, p: &[BigInt]) -> BigInt {
        dot(&self.normal, p) - &self.support
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.incident.binary_search(&i).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullResult {
    polytope: LatticePolytope,
    vertices: Vec<usize>,
    facets: Vec<Facet>,
}

impl HullResult {
    pub fn polytope(&self) -> &LatticePolytope {
        &self.polytope
    }

    pub fn points(&self) -> &[IntVec] {
        self.polytope.points()
    }

    pub fn dim(&self) -> usize {
        self.polytope.ambient_dim()
    }

    /// Sorted indices of the vertices.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Facets in lexicographic order of their normals.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Position of the facet with the given normal and support.
    pub fn facet_index(&self, normal: &[BigInt], support: &BigInt) -> Option<usize> {
        self.facets
            .binary_search_by(|f| f.normal.as_slice().cmp(normal))
            .ok()
            .filter(|&i| self.facets[i].support == *support)
    }

    pub fn normalized_volume(&self) -> BigInt {
        volume::hull_volume(self)
    }

    /// Full-dimensional simplices (as point indices) of the star
    /// triangulation used for the volume.
    pub fn triangulation(&self) -> Vec<Vec<usize>> {
        volume::triangulate(self)
    }

    /// Checks every exact certificate of the hull: primitive normals,
    /// inequality validity with equality exactly on the incident set,
    /// facet dimension, irredundancy and vertex incidence.
    pub fn verify_certificates(&self) -> Result<(), String> {
        let d = self.dim();
        let pts = self.points();
        for (fi, f) in self.facets.iter().enumerate() {
            let (_, g) = crate::linalg::make_primitive(&f.normal);
            if g != BigInt::from(1) {
                return Err(format!("facet {fi}: normal is not primitive"));
            }
            for (i, p) in pts.iter().enumerate() {
                let s = f.slack(p);
                let on = f.contains_index(i);
                if s.sign() == num_bigint::Sign::Minus {
                    return Err(format!("facet {fi}: point {i} violates the inequality"));
                }
                if on != (s.sign() == num_bigint::Sign::NoSign) {
                    return Err(format!("facet {fi}: incidence of point {i} is wrong"));
                }
            }
            let refs: Vec<&IntVec> = f.incident.iter().map(|&i| &pts[i]).collect();
            if affine_dimension(&refs) != d as isize - 1 {
                return Err(format!("facet {fi}: incident set is not {}-dimensional", d - 1));
            }
        }
        for w in self.facets.windows(2) {
            if w[0].normal >= w[1].normal {
                return Err("facets are not in canonical order or repeat".into());
            }
        }
        for &v in &self.vertices {
            let n = self.facets.iter().filter(|f| f.contains_index(v)).count();
            if n < d {
                return Err(format!("vertex {v} lies on only {n} facets"));
            }
        }
        Ok(())
    }
}
