//! Exact rational and Gaussian-rational scalars.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type BigRat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer literal {0:?}")]
    InvalidInteger(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

fn parse_int(s: &str) -> Result<BigInt, ParseError> {
    let t = s.trim();
    let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::InvalidInteger(s.to_string()));
    }
    t.parse::<BigInt>()
        .map_err(|_| ParseError::InvalidInteger(s.to_string()))
}

/// Parses `"p/q"` or `"p"` with an optional sign on either part.
pub fn parse_rat(s: &str) -> Result<BigRat, ParseError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ParseError::Empty);
    }
    match t.split_once('/') {
        None => Ok(BigRat::from_integer(parse_int(t)?)),
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(ParseError::ZeroDenominator(s.to_string()));
            }
            Ok(BigRat::new(p, q))
        }
    }
}

/// Renders `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rat(r: &BigRat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &BigRat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Splits `r` into `floor(r)` and a fractional part in `[0, 1)`.
pub fn split_floor(r: &BigRat) -> (BigInt, BigRat) {
    let fl = r.numer().div_floor(r.denom());
    let frac = r - BigRat::from_integer(fl.clone());
    (fl, frac)
}

/// Complex number with exact rational real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRat {
    pub re: BigRat,
    pub im: BigRat,
}

impl GaussRat {
    pub fn new(re: BigRat, im: BigRat) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: BigRat) -> Self {
        GaussRat { re, im: BigRat::zero() }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Self::real(BigRat::from_integer(v.into()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// True iff the value is a rational integer (zero imaginary part,
    /// integral real part).
    pub fn is_integer(&self) -> bool {
        self.im.is_zero() && self.re.is_integer()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let k = BigRat::from_integer(k.clone());
        GaussRat {
            re: &self.re * &k,
            im: &self.im * &k,
        }
    }

    /// `(floor(re), self - floor(re))`; the second component has real part
    /// in `[0, 1)` and the same imaginary part.
    pub fn reduce_mod_integers(&self) -> (BigInt, GaussRat) {
        let (fl, frac) = split_floor(&self.re);
        (
            fl,
            GaussRat {
                re: frac,
                im: self.im.clone(),
            },
        )
    }

    pub fn parse_parts(re: &str, im: &str) -> Result<Self, ParseError> {
        Ok(GaussRat {
            re: parse_rat(re)?,
            im: parse_rat(im)?,
        })
    }
}

/// Integer membership of a complex rational: `im = 0` and `re ∈ Z`.
pub fn integer_membership(value: &GaussRat) -> bool {
    value.is_integer()
}

impl FromStr for GaussRat {
    type Err = ParseError;

    /// Accepts a bare real rational.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rat(s).map(GaussRat::real)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", format_rat(&self.re))
        } else {
            write!(f, "{} + ({})*i", format_rat(&self.re), format_rat(&self.im))
        }
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: GaussRat) -> GaussRat {
        &self + &rhs
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: GaussRat) -> GaussRat {
        &self - &rhs
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -self.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRat {
        BigRat::new(p.into(), q.into())
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("3").unwrap(), r(3, 1));
        assert_eq!(parse_rat("-3/6").unwrap(), r(-1, 2));
        assert_eq!(parse_rat("+4/-8").unwrap(), r(-1, 2));
        assert_eq!(parse_rat(" 7/21 ").unwrap(), r(1, 3));
        assert_eq!(parse_rat("1/0"), Err(ParseError::ZeroDenominator("1/0".into())));
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1.5").is_err());
        assert!(parse_rat("--1").is_err());
        assert!(parse_rat("1/").is_err());
    }

    #[test]
    fn format_is_reduced() {
        assert_eq!(format_rat(&r(4, 2)), "2");
        assert_eq!(format_rat(&r(-2, 6)), "-1/3");
        assert_eq!(format_rat(&r(0, 5)), "0");
    }

    #[test]
    fn membership() {
        assert!(integer_membership(&GaussRat::from_int(3)));
        assert!(!integer_membership(&GaussRat::real(r(1, 2))));
        assert!(!integer_membership(&GaussRat::new(r(2, 1), r(1, 3))));
    }

    #[test]
    fn reduce_mod_integers_negative() {
        let (fl, red) = GaussRat::new(r(-7, 3), r(1, 2)).reduce_mod_integers();
        assert_eq!(fl, BigInt::from(-3));
        assert_eq!(red, GaussRat::new(r(2, 3), r(1, 2)));
        let (fl, red) = GaussRat::real(r(4, 3)).reduce_mod_integers();
        assert_eq!(fl, BigInt::from(1));
        assert_eq!(red.re, r(1, 3));
    }
}
