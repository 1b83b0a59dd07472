//! Incremental beneath-beyond hull over exact integers.
//!
//! Points are inserted in lexicographic order. Facets are kept with their
//! full incidence sets, so non-simplicial facets and points in the relative
//! interior of faces need no special handling: a horizon ridge is any
//! `(D-2)`-dimensional intersection of a visible and a non-visible facet.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{Facet, HullResult, LatticePolytope, PolytopeError};
use crate::linalg::{affine_dimension, dot, make_primitive, rank_of_rows, sub_vec, IntMat, IntVec};

struct Hyperplane {
    normal: IntVec,
    support: BigInt,
}

/// Primitive normal of the affine hyperplane spanned by `pts`, oriented so
/// that `interior / scale` lies strictly on the positive side. `pts` must
/// span an affine `(D-1)`-space.
fn hyperplane_through(pts: &[&IntVec], interior: &[BigInt], scale: &BigInt) -> Hyperplane {
    let d = interior.len();
    let base = pts[0];
    let mut basis: Vec<IntVec> = Vec::with_capacity(d.saturating_sub(1));
    for p in &pts[1..] {
        if basis.len() + 1 == d {
            break;
        }
        let diff = sub_vec(p, base);
        basis.push(diff);
        if rank_of_rows(&basis) < basis.len() {
            basis.pop();
        }
    }
    assert_eq!(basis.len() + 1, d, "points do not span a hyperplane");
    // generalized cross product via signed maximal minors
    let normal: IntVec = (0..d)
        .map(|skip| {
            let minor: Vec<IntVec> = basis
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let det = if minor.is_empty() {
                BigInt::from(1)
            } else {
                IntMat::from_rows(&minor).determinant()
            };
            if skip % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect();
    let (mut normal, g) = make_primitive(&normal);
    debug_assert!(!g.is_zero());
    let mut support = dot(&normal, base);
    let side = dot(&normal, interior) - scale * &support;
    debug_assert!(!side.is_zero(), "interior point on a facet hyperplane");
    if side.is_negative() {
        normal.iter_mut().for_each(|x| *x = -std::mem::take(x));
        support = -support;
    }
    Hyperplane { normal, support }
}

fn intersect(a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> Vec<usize> {
    a.intersection(b).copied().collect()
}

struct WorkFacet {
    normal: IntVec,
    support: BigInt,
    incident: BTreeSet<usize>,
}

impl WorkFacet {
    fn slack(&self, p: &[BigInt]) -> BigInt {
        dot(&self.normal, p) - &self.support
    }
}

/// Convex hull of a full-dimensional set of distinct lattice points.
pub fn convex_hull(points: &[IntVec]) -> Result<HullResult, PolytopeError> {
    let polytope = LatticePolytope::new(points.to_vec())?;
    let d = polytope.ambient_dim();
    if !polytope.is_full_dimensional() {
        return Err(PolytopeError::NotFullDimensional {
            dim: polytope.dim(),
            ambient: d,
        });
    }
    let pts = polytope.points();
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| pts[a].cmp(&pts[b]));

    let mut simplex: Vec<usize> = Vec::with_capacity(d + 1);
    for &i in &order {
        if simplex.len() == d + 1 {
            break;
        }
        let mut cand: Vec<&IntVec> = simplex.iter().map(|&j| &pts[j]).collect();
        cand.push(&pts[i]);
        if affine_dimension(&cand) == simplex.len() as isize {
            simplex.push(i);
        }
    }
    debug_assert_eq!(simplex.len(), d + 1);

    // (D+1) times the barycenter of the initial simplex
    let scale = BigInt::from(d + 1);
    let interior: IntVec = (0..d).map(|k| simplex.iter().map(|&i| &pts[i][k]).sum()).collect();

    let mut facets: Vec<WorkFacet> = simplex
        .iter()
        .map(|&omit| {
            let others: Vec<&IntVec> = simplex.iter().filter(|&&i| i != omit).map(|&i| &pts[i]).collect();
            let hp = hyperplane_through(&others, &interior, &scale);
            WorkFacet {
                normal: hp.normal,
                support: hp.support,
                incident: simplex.iter().copied().filter(|&i| i != omit).collect(),
            }
        })
        .collect();

    let mut processed: Vec<usize> = simplex.clone();
    let in_simplex: BTreeSet<usize> = simplex.iter().copied().collect();

    for &p in order.iter().filter(|i| !in_simplex.contains(i)) {
        let point = &pts[p];
        let visible: Vec<bool> = facets.iter().map(|f| f.slack(point).is_negative()).collect();
        processed.push(p);
        if !visible.iter().any(|&v| v) {
            for f in facets.iter_mut() {
                if f.slack(point).is_zero() {
                    f.incident.insert(p);
                }
            }
            continue;
        }

        let mut fresh: Vec<Hyperplane> = Vec::new();
        for (_, f) in facets.iter().enumerate().filter(|(i, _)| visible[*i]) {
            for (_, g) in facets.iter().enumerate().filter(|(i, _)| !visible[*i]) {
                let ridge = intersect(&f.incident, &g.incident);
                let refs: Vec<&IntVec> = ridge.iter().map(|&i| &pts[i]).collect();
                if affine_dimension(&refs) != d as isize - 2 {
                    continue;
                }
                let mut span = refs;
                span.push(point);
                let hp = hyperplane_through(&span, &interior, &scale);
                let known = fresh.iter().any(|h| h.normal == hp.normal)
                    || facets
                        .iter()
                        .enumerate()
                        .any(|(i, w)| !visible[i] && w.normal == hp.normal);
                if !known {
                    fresh.push(hp);
                }
            }
        }

        let mut keep = visible.iter().map(|v| !v);
        facets.retain(|_| keep.next().unwrap_or(true));
        for f in facets.iter_mut() {
            if f.slack(point).is_zero() {
                f.incident.insert(p);
            }
        }
        for hp in fresh {
            let incident = processed
                .iter()
                .copied()
                .filter(|&i| (dot(&hp.normal, &pts[i]) - &hp.support).is_zero())
                .collect();
            facets.push(WorkFacet {
                normal: hp.normal,
                support: hp.support,
                incident,
            });
        }
    }

    let mut facets: Vec<Facet> = facets
        .into_iter()
        .map(|f| Facet {
            normal: f.normal,
            support: f.support,
            incident: f.incident.into_iter().collect(),
        })
        .collect();
    facets.sort_by(|a, b| a.normal.cmp(&b.normal));

    let vertices = (0..pts.len())
        .filter(|&i| {
            let mut on = facets.iter().filter(|f| f.contains_index(i));
            let Some(first) = on.next() else {
                return false;
            };
            let common = on.fold(first.incident.clone(), |acc, f| {
                acc.into_iter().filter(|j| f.contains_index(*j)).collect()
            });
            common == [i]
        })
        .collect();

    Ok(HullResult {
        polytope,
        vertices,
        facets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int_vec;

    fn pts(raw: &[&[i64]]) -> Vec<IntVec> {
        raw.iter().map(|p| int_vec(p)).collect()
    }

    fn summary(h: &HullResult) -> Vec<(IntVec, BigInt)> {
        h.facets()
            .iter()
            .map(|f| (f.normal.clone(), f.support.clone()))
            .collect()
    }

    #[test]
    fn gauss_quadrilateral() {
        let h = convex_hull(&pts(&[&[1, 0], &[0, 1], &[0, 0], &[-1, 1]])).unwrap();
        let mut expected = vec![
            (int_vec(&[0, 1]), BigInt::from(0)),
            (int_vec(&[0, -1]), BigInt::from(-1)),
            (int_vec(&[1, 1]), BigInt::from(0)),
            (int_vec(&[-1, -1]), BigInt::from(-1)),
        ];
        expected.sort();
        assert_eq!(summary(&h), expected);
        assert_eq!(h.vertices(), &[0, 1, 2, 3]);
        h.verify_certificates().unwrap();
    }

    #[test]
    fn unit_square() {
        let h = convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        let mut expected = vec![
            (int_vec(&[1, 0]), BigInt::from(0)),
            (int_vec(&[-1, 0]), BigInt::from(-1)),
            (int_vec(&[0, 1]), BigInt::from(0)),
            (int_vec(&[0, -1]), BigInt::from(-1)),
        ];
        expected.sort();
        assert_eq!(summary(&h), expected);
    }

    #[test]
    fn segment() {
        let h = convex_hull(&pts(&[&[0], &[3], &[1]])).unwrap();
        assert_eq!(
            summary(&h),
            vec![(int_vec(&[-1]), BigInt::from(-3)), (int_vec(&[1]), BigInt::from(0))]
        );
        assert_eq!(h.vertices(), &[0, 1]);
    }

    #[test]
    fn interior_and_edge_points() {
        // 2x2 square with all 9 lattice points
        let mut raw = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                raw.push(int_vec(&[x, y]));
            }
        }
        let h = convex_hull(&raw).unwrap();
        assert_eq!(h.facets().len(), 4);
        assert_eq!(h.vertices().len(), 4);
        for f in h.facets() {
            assert_eq!(f.incident.len(), 3);
        }
        h.verify_certificates().unwrap();
    }

    fn cube(side: i64) -> Vec<IntVec> {
        let mut raw = Vec::new();
        for x in [0, side] {
            for y in [0, side] {
                for z in [0, side] {
                    raw.push(int_vec(&[x, y, z]));
                }
            }
        }
        raw
    }

    #[test]
    fn cube_with_pyramid() {
        let mut raw = cube(2);
        raw.push(int_vec(&[3, 1, 1]));
        let h = convex_hull(&raw).unwrap();
        // the x = 2 square is replaced by four triangles
        assert_eq!(h.facets().len(), 9);
        assert_eq!(h.vertices().len(), 9);
        h.verify_certificates().unwrap();
    }

    #[test]
    fn cube_with_coplanar_apex() {
        // (2,1,1) lies in the planes y = 1 and z = 1, which grow instead of
        // being replaced; (1,1,1) stops being a vertex
        let mut raw = cube(1);
        raw.push(int_vec(&[2, 1, 1]));
        let h = convex_hull(&raw).unwrap();
        assert_eq!(h.facets().len(), 7);
        assert_eq!(h.vertices().len(), 8);
        assert!(!h.vertices().contains(&7));
        h.verify_certificates().unwrap();
    }

    #[test]
    fn errors() {
        assert!(matches!(
            convex_hull(&pts(&[&[0, 0], &[1, 1], &[2, 2]])),
            Err(PolytopeError::NotFullDimensional { dim: 1, ambient: 2 })
        ));
        assert!(matches!(
            convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 0]])),
            Err(PolytopeError::DuplicatePoints { first: 0, second: 2 })
        ));
        assert!(matches!(convex_hull(&[]), Err(PolytopeError::Empty)));
    }
}
