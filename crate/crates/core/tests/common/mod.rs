//! Brute-force oracles and random instance generators shared by the
//! integration tests. Nothing here calls into the hull or volume code of
//! the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use gkz_monodromy::charpoly::{canonicalize, FactoredCharPoly, MonodromyFactor};
use gkz_monodromy::gkz::{Configuration, Parameter};
use gkz_monodromy::linalg::{BigRat, GaussRat, IntMat, IntVec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

pub const ORACLE_MAX_POINTS: usize = 12;
pub const ORACLE_MAX_DIM: usize = 3;
pub const EHRHART_MAX_SCAN: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    ScaleGuard(String),
    NonIntegralLeadingCoefficient(String),
    Resonant,
}

/// Order-free set of (primitive inner normal, support) pairs.
pub type OracleHull = BTreeSet<(IntVec, BigInt)>;

pub fn iv(raw: &[i64]) -> IntVec {
    raw.iter().map(|&v| BigInt::from(v)).collect()
}

pub fn pts(raw: &[&[i64]]) -> Vec<IntVec> {
    raw.iter().map(|p| iv(p)).collect()
}

pub fn rat(p: i64, q: i64) -> BigRat {
    BigRat::new(p.into(), q.into())
}

pub fn gauss_points() -> Vec<IntVec> {
    pts(&[&[1, 0], &[0, 1], &[0, 0], &[-1, 1]])
}

/// `γ = (c-1, -a, c-a-b-1)` for the Gauss configuration.
pub fn gauss_gamma(a: &BigRat, b: &BigRat, c: &BigRat) -> Vec<GaussRat> {
    let one = BigRat::one();
    vec![
        GaussRat::real(c - &one),
        GaussRat::real(-a.clone()),
        GaussRat::real(c - a - b - one),
    ]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Nullspace of a rational matrix with `cols` columns by Gauss-Jordan
/// elimination; returns `None` unless it is exactly one-dimensional.
fn one_dim_nullspace(rows: &[Vec<BigRat>], cols: usize) -> Option<Vec<BigRat>> {
    let mut a: Vec<Vec<BigRat>> = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    if free.len() != 1 {
        return None;
    }
    let f = free[0];
    let mut v = vec![BigRat::zero(); cols];
    v[f] = BigRat::one();
    for (row, &pc) in pivot_cols.iter().enumerate() {
        v[pc] = -a[row][f].clone();
    }
    Some(v)
}

fn primitive_from_rational(v: &[BigRat]) -> IntVec {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRat::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| x / &g).collect()
}

fn ip(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Every hyperplane through `D` affinely independent input points that
/// has all points on one side, oriented inward.
pub fn brute_facets(points: &[IntVec]) -> Result<OracleHull, OracleError> {
    let m = points.len();
    let d = points[0].len();
    if m > ORACLE_MAX_POINTS || d > ORACLE_MAX_DIM {
        return Err(OracleError::ScaleGuard(format!("m = {m}, D = {d}")));
    }
    let mut out = OracleHull::new();
    for subset in combinations(m, d) {
        let base = &points[subset[0]];
        let rows: Vec<Vec<BigRat>> = subset[1..]
            .iter()
            .map(|&i| {
                points[i]
                    .iter()
                    .zip(base)
                    .map(|(x, y)| BigRat::from_integer(x - y))
                    .collect()
            })
            .collect();
        let Some(normal) = one_dim_nullspace(&rows, d) else {
            continue;
        };
        let mut u = primitive_from_rational(&normal);
        let mut h = ip(&u, base);
        let (mut below, mut above) = (false, false);
        for p in points {
            let s = ip(&u, p) - &h;
            below |= s.is_negative();
            above |= s.is_positive();
        }
        if below && above {
            continue;
        }
        if below {
            u = u.into_iter().map(|x| -x).collect();
            h = -h;
        }
        out.insert((u, h));
    }
    Ok(out)
}

/// Number of lattice points of `k·Q` by bounding-box scan.
fn count_dilate(facets: &OracleHull, lo: &[i64], hi: &[i64], k: i64) -> u64 {
    let d = lo.len();
    let mut cur: Vec<i64> = lo.iter().map(|v| v * k).collect();
    let mut count = 0;
    loop {
        let p: IntVec = cur.iter().map(|&v| BigInt::from(v)).collect();
        if facets.iter().all(|(u, h)| ip(u, &p) >= h * BigInt::from(k)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == d {
                return count;
            }
            if cur[i] < hi[i] * k {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i] * k;
            i += 1;
        }
    }
}

/// `D!` times the leading coefficient of the Ehrhart polynomial, from
/// lattice-point counts of `kQ` for `k = 0..=D` and Lagrange interpolation.
pub fn ehrhart_volume(points: &[IntVec]) -> Result<(BigInt, Vec<u64>), OracleError> {
    let facets = brute_facets(points)?;
    let d = points[0].len();
    let lo: Vec<i64> = (0..d)
        .map(|i| points.iter().map(|p| p[i].to_i64().unwrap()).min().unwrap())
        .collect();
    let hi: Vec<i64> = (0..d)
        .map(|i| points.iter().map(|p| p[i].to_i64().unwrap()).max().unwrap())
        .collect();
    let scan: u64 = lo
        .iter()
        .zip(&hi)
        .map(|(l, h)| ((h - l) * d as i64 + 1) as u64)
        .product();
    if scan > EHRHART_MAX_SCAN {
        return Err(OracleError::ScaleGuard(format!("{scan} points to scan")));
    }
    let counts: Vec<u64> = (0..=d as i64).map(|k| count_dilate(&facets, &lo, &hi, k)).collect();
    // leading coefficient of the interpolant through (k, counts[k]):
    // Σ_k counts[k] / ∏_{j≠k} (k - j)
    let mut lead = BigRat::zero();
    for k in 0..=d as i64 {
        let denom: i64 = (0..=d as i64).filter(|&j| j != k).map(|j| k - j).product();
        lead += BigRat::new(BigInt::from(counts[k as usize]), BigInt::from(denom));
    }
    let fact: i64 = (1..=d as i64).product();
    let vol = lead * BigRat::from_integer(fact.into());
    if !vol.is_integer() || vol.is_negative() {
        return Err(OracleError::NonIntegralLeadingCoefficient(vol.to_string()));
    }
    Ok((vol.to_integer(), counts))
}

/// Closed-form answer for the Gauss configuration at `j0 = 1`:
/// `(t - e^{2πi(c-a)})(t - e^{2πi(c-b)})`.
pub fn gauss_regression(a: &BigRat, b: &BigRat, c: &BigRat) -> Result<FactoredCharPoly, OracleError> {
    if [a.clone(), b.clone(), c - a, c - b].iter().any(|x| x.is_integer()) {
        return Err(OracleError::Resonant);
    }
    Ok(canonicalize(
        vec![
            MonodromyFactor::new(1, GaussRat::real(a - c), 1, vec![]),
            MonodromyFactor::new(1, GaussRat::real(b - c), 1, vec![]),
        ],
        true,
    ))
}

/// Random rational with denominator in `1..=max_den` and value in a
/// bounded window.
pub fn random_rat<R: Rng>(rng: &mut R, max_den: i64) -> BigRat {
    let q = rng.gen_range(1..=max_den);
    let p = rng.gen_range(-3 * q..=3 * q);
    rat(p, q)
}

pub fn random_gauss_triple<R: Rng>(rng: &mut R) -> (BigRat, BigRat, BigRat) {
    loop {
        let (a, b, c) = (random_rat(rng, 12), random_rat(rng, 12), random_rat(rng, 12));
        if ![a.clone(), b.clone(), &c - &a, &c - &b].iter().any(|x| x.is_integer()) {
            return (a, b, c);
        }
    }
}

/// Distinct points in `[-4, 4]^D`, full-dimensional and affinely
/// generating, with `D ∈ {1, 2, 3}` and at most 10 points.
pub fn random_configuration<R: Rng>(rng: &mut R) -> Vec<IntVec> {
    loop {
        let d = rng.gen_range(1..=3usize);
        let max_m = if d == 1 { 9 } else { 10 };
        let m = rng.gen_range(d + 1..=max_m);
        let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
        while set.len() < m {
            set.insert((0..d).map(|_| rng.gen_range(-4..=4)).collect());
        }
        let mut points: Vec<IntVec> = set.into_iter().map(|p| iv(&p)).collect();
        points.shuffle(rng);
        if Configuration::new(points.clone()).is_ok() {
            return points;
        }
    }
}

pub fn random_real_gamma<R: Rng>(rng: &mut R, n: usize) -> Vec<GaussRat> {
    (0..n).map(|_| GaussRat::real(random_rat(rng, 12))).collect()
}

pub fn random_complex_gamma<R: Rng>(rng: &mut R, n: usize) -> Vec<GaussRat> {
    (0..n)
        .map(|_| {
            let im = if rng.gen_bool(0.5) {
                random_rat(rng, 5)
            } else {
                BigRat::zero()
            };
            GaussRat::new(random_rat(rng, 12), im)
        })
        .collect()
}

/// Random `g ∈ GL(D, Z)` with entries in `[-2, 2]`.
pub fn random_unimodular<R: Rng>(rng: &mut R, d: usize) -> IntMat {
    loop {
        let rows: Vec<IntVec> = (0..d)
            .map(|_| (0..d).map(|_| BigInt::from(rng.gen_range(-2..=2))).collect())
            .collect();
        let g = IntMat::from_rows(&rows);
        if g.determinant().abs().is_one() {
            return g;
        }
    }
}

/// `A + w` with `γ'_i = γ_i + γ_n w_i` (i < n), `γ'_n = γ_n`.
pub fn translate_instance(points: &[IntVec], gamma: &[GaussRat], w: &[BigInt]) -> (Vec<IntVec>, Vec<GaussRat>) {
    let moved = points
        .iter()
        .map(|p| p.iter().zip(w).map(|(x, y)| x + y).collect())
        .collect();
    let n = gamma.len();
    let gn = &gamma[n - 1];
    let mut g2: Vec<GaussRat> = gamma[..n - 1].iter().zip(w).map(|(g, wi)| g + &gn.scale(wi)).collect();
    g2.push(gn.clone());
    (moved, g2)
}

/// `gA` with `γ''_{<n} = g(γ_{<n} + 1) - 1`, `γ''_n = γ_n`.
pub fn transform_instance(points: &[IntVec], gamma: &[GaussRat], g: &IntMat) -> (Vec<IntVec>, Vec<GaussRat>) {
    let moved = points.iter().map(|p| g.mul_vec(p)).collect();
    let n = gamma.len();
    let shifted: Vec<GaussRat> = gamma[..n - 1].iter().map(|x| x + &GaussRat::one()).collect();
    let mut g2: Vec<GaussRat> = (0..n - 1)
        .map(|i| (0..n - 1).fold(GaussRat::zero(), |acc, j| acc + shifted[j].scale(&g[(i, j)])) - GaussRat::one())
        .collect();
    g2.push(gamma[n - 1].clone());
    (moved, g2)
}

pub fn parameter(gamma: Vec<GaussRat>) -> Parameter {
    Parameter::new(gamma).expect("parameter length >= 2")
}
