//! Hermite and Smith normal forms over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMat;

/// Row-style Hermite normal form `H = U·M` with unimodular `U`.
#[derive(Debug, Clone)]
pub struct Hermite {
    pub h: IntMat,
    pub u: IntMat,
    /// Column index of each pivot, one per nonzero row of `h`.
    pub pivots: Vec<usize>,
}

/// Smith normal form `S = U·M·V` with unimodular `U`, `V`.
#[derive(Debug, Clone)]
pub struct Smith {
    pub s: IntMat,
    pub u: IntMat,
    pub v: IntMat,
}

impl Smith {
    /// Diagonal entries `s[0][0], s[1][1], ...` up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.s.rows().min(self.s.cols());
        (0..k).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Index of the smallest nonzero `|a[i][col]|` over `rows`, ties to the
/// lowest row.
fn smallest_in_column(a: &IntMat, col: usize, rows: std::ops::Range<usize>) -> Option<usize> {
    let mut best: Option<(usize, BigInt)> = None;
    for i in rows {
        let v = a[(i, col)].abs();
        if v.is_zero() {
            continue;
        }
        if best.as_ref().is_none_or(|(_, b)| v < *b) {
            best = Some((i, v));
        }
    }
    best.map(|(i, _)| i)
}

pub fn hermite_normal_form(m: &IntMat) -> Hermite {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = IntMat::identity(rows);
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        if prow == rows {
            break;
        }
        let mut found = false;
        while let Some(p) = smallest_in_column(&h, col, prow..rows) {
            found = true;
            h.swap_rows(p, prow);
            u.swap_rows(p, prow);
            let mut clean = true;
            for i in prow + 1..rows {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = -h[(i, col)].div_floor(&h[(prow, col)]);
                h.add_row_multiple(i, prow, &q);
                u.add_row_multiple(i, prow, &q);
                if !h[(i, col)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if h[(prow, col)].is_negative() {
            h.negate_row(prow);
            u.negate_row(prow);
        }
        for i in 0..prow {
            let q = -h[(i, col)].div_floor(&h[(prow, col)]);
            h.add_row_multiple(i, prow, &q);
            u.add_row_multiple(i, prow, &q);
        }
        pivots.push(col);
        prow += 1;
    }
    Hermite { h, u, pivots }
}

pub fn smith_normal_form(m: &IntMat) -> Smith {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = m.clone();
    let mut u = IntMat::identity(rows);
    let mut v = IntMat::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block, row-major ties
            let mut best: Option<(usize, usize, BigInt)> = None;
            for i in t..rows {
                for j in t..cols {
                    let a = s[(i, j)].abs();
                    if !a.is_zero() && best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                        best = Some((i, j, a));
                    }
                }
            }
            let Some((pi, pj, _)) = best else {
                return Smith { s, u, v };
            };
            s.swap_rows(pi, t);
            u.swap_rows(pi, t);
            s.swap_cols(pj, t);
            v.swap_cols(pj, t);

            let mut dirty = false;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -s[(i, t)].div_floor(&s[(t, t)]);
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                dirty |= !s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -s[(t, j)].div_floor(&s[(t, t)]);
                s.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                dirty |= !s[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            let pivot = s[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    Smith { s, u, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn is_row_hnf(h: &IntMat, pivots: &[usize]) -> bool {
        for (r, &c) in pivots.iter().enumerate() {
            if !h[(r, c)].is_positive() {
                return false;
            }
            if (0..c).any(|j| !h[(r, j)].is_zero()) {
                return false;
            }
            if (r + 1..h.rows()).any(|i| !h[(i, c)].is_zero()) {
                return false;
            }
            if (0..r).any(|i| h[(i, c)].is_negative() || h[(i, c)] >= h[(r, c)]) {
                return false;
            }
        }
        (pivots.len()..h.rows()).all(|i| h.row(i).iter().all(Zero::is_zero))
    }

    #[test]
    fn hnf_identity() {
        let id = IntMat::identity(2);
        let r = hermite_normal_form(&id);
        assert_eq!(r.h, id);
        assert_eq!(r.u, id);
    }

    #[test]
    fn hnf_unimodular_input_is_identity() {
        let m = IntMat::from_i64(&[&[2, 1], &[1, 1]]);
        let r = hermite_normal_form(&m);
        assert_eq!(r.h, IntMat::identity(2));
        assert_eq!(r.u.mul(&m), r.h);
        assert_eq!(r.u.determinant().abs(), BigInt::one());
        // H times U^{-1} gives back M
        let uinv = r.u.unimodular_inverse().unwrap();
        assert_eq!(uinv.mul(&r.h), m);
    }

    #[test]
    fn hnf_diagonal() {
        let m = IntMat::from_i64(&[&[2, 0], &[0, 2]]);
        assert_eq!(hermite_normal_form(&m).h, m);
    }

    #[test]
    fn hnf_rectangular_and_reduced() {
        let m = IntMat::from_i64(&[&[3, 5, 7], &[2, 4, 6], &[1, 1, 1], &[0, 2, 4]]);
        let r = hermite_normal_form(&m);
        assert_eq!(r.u.mul(&m), r.h);
        assert_eq!(r.u.determinant().abs(), BigInt::one());
        assert!(is_row_hnf(&r.h, &r.pivots), "{:?}", r.h);
    }

    #[test]
    fn snf_examples() {
        let d = smith_normal_form(&IntMat::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(d.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        let z = smith_normal_form(&IntMat::zeros(2, 3));
        assert!(z.s.is_zero());
        let m = IntMat::from_i64(&[&[1, 2], &[3, 4]]);
        let r = smith_normal_form(&m);
        assert_eq!(r.diagonal(), vec![BigInt::from(1), BigInt::from(2)]);
        assert_eq!(r.u.mul(&m).mul(&r.v), r.s);
    }
}
