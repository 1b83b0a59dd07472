//! Normalized lattice volumes by star triangulation.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{convex_hull, Facet, HullResult, PolytopeError};
use crate::linalg::{affine_dimension, dot, kernel_basis, sub_vec, BigRat, IntMat, IntVec};

/// Star triangulation of the face spanned by `face` (point indices, affine
/// dimension `k`): cone from its lexicographically smallest point over the
/// triangulated subfaces that miss it.
fn star(hull: &HullResult, face: &[usize], k: isize, out: &mut Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
    let pts = hull.points();
    if k == 0 {
        debug_assert_eq!(face.len(), 1);
        let mut s = prefix.clone();
        s.push(face[0]);
        out.push(s);
        return;
    }
    let apex = *face
        .iter()
        .min_by(|&&a, &&b| pts[a].cmp(&pts[b]))
        .expect("nonempty face");
    let mut subfaces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for f in hull.facets() {
        let sub: Vec<usize> = face.iter().copied().filter(|&i| f.contains_index(i)).collect();
        if sub.contains(&apex) || sub.len() == face.len() {
            continue;
        }
        let refs: Vec<&IntVec> = sub.iter().map(|&i| &pts[i]).collect();
        if affine_dimension(&refs) == k - 1 {
            subfaces.insert(sub);
        }
    }
    prefix.push(apex);
    for sub in &subfaces {
        star(hull, sub, k - 1, out, prefix);
    }
    prefix.pop();
}

pub(super) fn triangulate(hull: &HullResult) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..hull.points().len()).collect();
    let mut out = Vec::new();
    star(hull, &all, hull.dim() as isize, &mut out, &mut Vec::new());
    out
}

/// `|det(v_1 - v_0, …, v_D - v_0)|`
fn simplex_volume(pts: &[IntVec], simplex: &[usize]) -> BigInt {
    let base = &pts[simplex[0]];
    let rows: Vec<IntVec> = simplex[1..].iter().map(|&i| sub_vec(&pts[i], base)).collect();
    IntMat::from_rows(&rows).determinant().abs()
}

pub(super) fn hull_volume(hull: &HullResult) -> BigInt {
    triangulate(hull).iter().map(|s| simplex_volume(hull.points(), s)).sum()
}

/// `D!` times the Euclidean volume of the hull of a full-dimensional point
/// set in `Z^D`.
pub fn normalized_volume(points: &[IntVec]) -> Result<BigInt, PolytopeError> {
    Ok(hull_volume(&convex_hull(points)?))
}

/// `<facet.normal, point> - facet.support`.
pub fn lattice_distance(facet: &Facet, point: &[BigInt]) -> BigInt {
    dot(&facet.normal, point) - &facet.support
}

/// Normalized volume of `points` (lying in one translate of the lattice
/// spanned by the rows of `basis`) measured in that lattice. The rows of
/// `basis` must be linearly independent and every difference of points an
/// integer combination of them.
pub fn volume_in_lattice_basis(points: &[IntVec], basis: &IntMat) -> Result<BigInt, PolytopeError> {
    let k = basis.rows();
    let origin = points.first().ok_or(PolytopeError::Empty)?;
    if k == 0 {
        return if points.len() == 1 {
            Ok(BigInt::one())
        } else {
            Err(PolytopeError::BadBasis)
        };
    }
    // c = v · Bᵀ (B Bᵀ)⁻¹
    let gram = basis.mul(&basis.transpose());
    let gram_inv = gram.rational_inverse().ok_or(PolytopeError::BadBasis)?;
    let mut coords = Vec::with_capacity(points.len());
    for p in points {
        let v = sub_vec(p, origin);
        let proj: Vec<BigInt> = (0..k).map(|i| dot(basis.row(i), &v)).collect();
        let mut c = Vec::with_capacity(k);
        for j in 0..k {
            let x: BigRat = (0..k)
                .map(|i| BigRat::from_integer(proj[i].clone()) * &gram_inv[i][j])
                .fold(BigRat::zero(), |a, b| a + b);
            if !x.is_integer() {
                return Err(PolytopeError::BadBasis);
            }
            c.push(x.to_integer());
        }
        // the point must actually lie in the span
        let back: IntVec = (0..basis.cols())
            .map(|col| (0..k).map(|i| &c[i] * &basis[(i, col)]).sum())
            .collect();
        if back != v {
            return Err(PolytopeError::BadBasis);
        }
        coords.push(c);
    }
    normalized_volume(&coords)
}

/// Normalized `(D-1)`-dimensional volume of a facet, measured in the
/// sublattice `Z^D ∩ normal⊥`.
pub fn facet_normalized_volume(hull: &HullResult, facet: &Facet) -> Result<BigInt, PolytopeError> {
    let idx = hull
        .facet_index(&facet.normal, &facet.support)
        .ok_or(PolytopeError::UnknownFacet)?;
    let facet = &hull.facets()[idx];
    if hull.dim() == 1 {
        return Ok(BigInt::one());
    }
    let (basis, _) = kernel_basis(&facet.normal);
    let pts: Vec<IntVec> = facet.incident.iter().map(|&i| hull.points()[i].clone()).collect();
    volume_in_lattice_basis(&pts, &basis)
}
