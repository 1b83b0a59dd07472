mod common;

use common::*;
use gkz_monodromy::polytope::{convex_hull, normalized_volume};
use num_bigint::BigInt;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

fn facet_set(points: &[gkz_monodromy::IntVec]) -> OracleHull {
    convex_hull(points)
        .unwrap()
        .facets()
        .iter()
        .map(|f| (f.normal.clone(), f.support.clone()))
        .collect()
}

#[test]
fn brute_facets_examples() {
    let gauss = brute_facets(&gauss_points()).unwrap();
    let expected: OracleHull = [
        (iv(&[0, 1]), BigInt::from(0)),
        (iv(&[0, -1]), BigInt::from(-1)),
        (iv(&[1, 1]), BigInt::from(0)),
        (iv(&[-1, -1]), BigInt::from(-1)),
    ]
    .into_iter()
    .collect();
    assert_eq!(gauss, expected);
    assert_eq!(brute_facets(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap().len(), 3);
    assert_eq!(brute_facets(&pts(&[&[0], &[3]])).unwrap().len(), 2);
}

#[test]
fn brute_facets_scale_guard() {
    let many: Vec<_> = (0..13).map(|i| iv(&[i, i * i])).collect();
    assert!(matches!(brute_facets(&many), Err(OracleError::ScaleGuard(_))));
    let tall = pts(&[
        &[0, 0, 0, 0],
        &[1, 0, 0, 0],
        &[0, 1, 0, 0],
        &[0, 0, 1, 0],
        &[0, 0, 0, 1],
    ]);
    assert!(matches!(brute_facets(&tall), Err(OracleError::ScaleGuard(_))));
}

#[test]
fn ehrhart_examples() {
    let (v, counts) = ehrhart_volume(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
    assert_eq!((v, counts), (BigInt::from(2), vec![1, 4, 9]));
    let (v, counts) = ehrhart_volume(&gauss_points()).unwrap();
    // 4 boundary points, no interior ones: L(k) = (k + 1)^2
    assert_eq!((v, counts), (BigInt::from(2), vec![1, 4, 9]));
    let (v, counts) = ehrhart_volume(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
    assert_eq!((v, counts), (BigInt::from(1), vec![1, 3, 6]));
}

fn assert_roots(poly: &gkz_monodromy::FactoredCharPoly, turns: &[f64]) {
    let mut roots = poly.roots();
    let mut expected: Vec<Complex64> = turns.iter().map(|t| Complex64::from_polar(1.0, TAU * t)).collect();
    let key = |z: &Complex64| (z.arg() * 1e9).round() as i64;
    roots.sort_by_key(key);
    expected.sort_by_key(key);
    assert_eq!(roots.len(), expected.len());
    for (r, e) in roots.iter().zip(&expected) {
        assert!((r - e).norm() < 1e-12, "{r} vs {e}");
    }
}

#[test]
fn gauss_regression_examples() {
    let p = gauss_regression(&rat(1, 3), &rat(1, 5), &rat(1, 2)).unwrap();
    assert_roots(&p, &[1.0 / 6.0, 3.0 / 10.0]);
    let p = gauss_regression(&rat(1, 2), &rat(1, 2), &rat(1, 4)).unwrap();
    assert_eq!(p.factors().len(), 1);
    assert_eq!(p.factors()[0].multiplicity, 2);
    assert_roots(&p, &[-0.25, -0.25]);
    assert_eq!(
        gauss_regression(&rat(1, 1), &rat(1, 5), &rat(1, 2)),
        Err(OracleError::Resonant)
    );
}

#[test]
fn hull_and_volume_match_oracles_on_random_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..120 {
        let points = random_configuration(&mut rng);
        assert_eq!(facet_set(&points), brute_facets(&points).unwrap(), "{points:?}");
        let (ehrhart, _) = ehrhart_volume(&points).unwrap();
        assert_eq!(normalized_volume(&points).unwrap(), ehrhart, "{points:?}");
    }
}

#[test]
fn hull_matches_oracle_on_dense_boxes() {
    // many coplanar and interior points
    let mut raw = Vec::new();
    for x in -1..=1 {
        for y in -1..=1 {
            for z in 0..=1 {
                raw.push(iv(&[x, y, z]));
            }
        }
    }
    raw.truncate(12);
    assert_eq!(facet_set(&raw), brute_facets(&raw).unwrap());
    assert_eq!(normalized_volume(&raw).unwrap(), ehrhart_volume(&raw).unwrap().0);
}
