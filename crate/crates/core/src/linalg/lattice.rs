//! Lattice helpers: primitive vectors, affine lattice index, kernel bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::{sub_vec, IntMat, IntVec};
use super::normal_form::{hermite_normal_form, smith_normal_form};

/// Splits `v` as `scale · primitive` with `scale = gcd(|v_i|)`. The zero
/// vector maps to `(0, 0)`. Signs are preserved.
pub fn make_primitive(v: &[BigInt]) -> (IntVec, BigInt) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return (v.to_vec(), g);
    }
    (v.iter().map(|x| x / &g).collect(), g)
}

/// Index of the affine lattice generated by `points` in `Z^D`, where `D` is
/// the common point length. Returns 0 when the differences do not span a
/// rank-`D` lattice.
pub fn affine_lattice_index(points: &[IntVec]) -> BigInt {
    let Some((first, rest)) = points.split_first() else {
        return BigInt::zero();
    };
    let dim = first.len();
    if rest.is_empty() {
        return if dim == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let diffs: Vec<IntVec> = rest.iter().map(|p| sub_vec(p, first)).collect();
    let snf = smith_normal_form(&IntMat::from_rows(&diffs));
    let diag = snf.diagonal();
    if diag.iter().filter(|d| !d.is_zero()).count() < dim {
        return BigInt::zero();
    }
    diag.iter().take(dim).product()
}

/// Lattice basis of `{x ∈ Z^D : <normal, x> = 0}` as the rows of a
/// `(D-1) × D` matrix, together with a unimodular `U` whose first row is
/// dual to `normal` (`U·normal = (g, 0, …, 0)`).
pub fn kernel_basis(normal: &[BigInt]) -> (IntMat, IntMat) {
    let d = normal.len();
    let col = IntMat::from_rows(&normal.iter().map(|x| vec![x.clone()]).collect::<Vec<_>>());
    let hnf = hermite_normal_form(&col);
    let basis: Vec<IntVec> = (1..d).map(|i| hnf.u.row_vec(i)).collect();
    let basis = if basis.is_empty() {
        IntMat::zeros(0, d)
    } else {
        IntMat::from_rows(&basis)
    };
    (basis, hnf.u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::{dot, int_vec};

    #[test]
    fn primitive_examples() {
        assert_eq!(
            make_primitive(&int_vec(&[2, 4, 6])),
            (int_vec(&[1, 2, 3]), BigInt::from(2))
        );
        assert_eq!(make_primitive(&int_vec(&[0, 0])), (int_vec(&[0, 0]), BigInt::zero()));
        assert_eq!(make_primitive(&int_vec(&[-3, 6])), (int_vec(&[-1, 2]), BigInt::from(3)));
    }

    #[test]
    fn lattice_index_examples() {
        let gauss: Vec<IntVec> = [[1, 0], [0, 1], [0, 0], [-1, 1]].iter().map(|p| int_vec(p)).collect();
        assert_eq!(affine_lattice_index(&gauss), BigInt::one());
        let sparse: Vec<IntVec> = [[0, 0], [2, 0], [0, 2]].iter().map(|p| int_vec(p)).collect();
        // 2Z × 2Z has index |det diag(2, 2)| = 4
        assert_eq!(affine_lattice_index(&sparse), BigInt::from(4));
        let odd: Vec<IntVec> = [[0, 0], [1, 1], [1, -1]].iter().map(|p| int_vec(p)).collect();
        assert_eq!(affine_lattice_index(&odd), BigInt::from(2));
        let flat: Vec<IntVec> = [[0, 0], [1, 0]].iter().map(|p| int_vec(p)).collect();
        assert_eq!(affine_lattice_index(&flat), BigInt::zero());
        assert_eq!(affine_lattice_index(&[int_vec(&[5])]), BigInt::zero());
    }

    #[test]
    fn kernel_basis_is_orthogonal() {
        let n = int_vec(&[2, -3, 5]);
        let (basis, u) = kernel_basis(&n);
        assert_eq!(basis.rows(), 2);
        for i in 0..2 {
            assert!(dot(basis.row(i), &n).is_zero());
        }
        assert!(u.unimodular_inverse().is_some());
    }
}
