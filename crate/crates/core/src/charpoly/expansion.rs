//! Dense expansion in multiprecision floating point.
//!
//! Coefficients of a high-degree product are large (binomial-sized) while
//! the polynomial's values near the unit circle are moderate, so the
//! monomial form is badly conditioned. The expansion is therefore carried
//! at a working precision wide enough that each coefficient is accurate to
//! an absolute error far below `10^-digits`; `digits` only governs
//! rendering.

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, WORD_BIT_SIZE};
use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{CharPolyError, FactoredCharPoly, MAX_DIGITS};
use crate::linalg::{rat_to_f64, BigRat, GaussRat};

const RM: RoundingMode = RoundingMode::ToEven;
const GUARD_BITS: usize = 64;
/// Coefficients whose larger part is below `2^-(digit_bits + FLUSH_BITS)`
/// render as zero.
const FLUSH_BITS: usize = 32;

#[derive(Debug, Clone)]
struct MpComplex {
    re: BigFloat,
    im: BigFloat,
}

impl MpComplex {
    fn zero(p: usize) -> Self {
        MpComplex {
            re: BigFloat::new(p),
            im: BigFloat::new(p),
        }
    }

    fn from_c64(z: Complex64, p: usize) -> Self {
        MpComplex {
            re: BigFloat::from_f64(z.re, p),
            im: BigFloat::from_f64(z.im, p),
        }
    }

    fn mul(&self, o: &Self, p: usize) -> Self {
        let rr = self.re.mul(&o.re, p, RM);
        let ii = self.im.mul(&o.im, p, RM);
        let ri = self.re.mul(&o.im, p, RM);
        let ir = self.im.mul(&o.re, p, RM);
        MpComplex {
            re: rr.sub(&ii, p, RM),
            im: ri.add(&ir, p, RM),
        }
    }

    fn add(&self, o: &Self, p: usize) -> Self {
        MpComplex {
            re: self.re.add(&o.re, p, RM),
            im: self.im.add(&o.im, p, RM),
        }
    }

    fn sub(&self, o: &Self, p: usize) -> Self {
        MpComplex {
            re: self.re.sub(&o.re, p, RM),
            im: self.im.sub(&o.im, p, RM),
        }
    }
}

/// Dense coefficients of a [`FactoredCharPoly`] in ascending powers.
#[derive(Debug, Clone)]
pub struct Expansion {
    digits: u32,
    precision: usize,
    coeffs: Vec<MpComplex>,
}

fn digit_bits(digits: u32) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize
}

/// `log2` of `∏ (1 + |c|)^m`, which bounds the magnitude sum of every
/// partial product.
fn log2_bound(p: &FactoredCharPoly) -> f64 {
    p.factors()
        .iter()
        .map(|f| {
            let x = std::f64::consts::TAU * rat_to_f64(&f.delta_reduced.im) / std::f64::consts::LN_2;
            // log2(1 + 2^x)
            let l = if x > 0.0 {
                x + (-x).exp2().ln_1p() / std::f64::consts::LN_2
            } else {
                x.exp2().ln_1p() / std::f64::consts::LN_2
            };
            l * f.multiplicity as f64
        })
        .sum()
}

fn int_to_mp(n: &BigInt, p: usize, cc: &mut Consts) -> BigFloat {
    BigFloat::parse(&n.to_string(), Radix::Dec, p, RM, cc)
}

fn rat_to_mp(q: &BigRat, p: usize, cc: &mut Consts) -> BigFloat {
    int_to_mp(q.numer(), p, cc).div(&int_to_mp(q.denom(), p, cc), p, RM)
}

/// `exp(-2πiδ)` at `p` bits; the real part of `δ` must already lie in `[0, 1)`.
fn constant_mp(delta: &GaussRat, p: usize, cc: &mut Consts) -> MpComplex {
    let two_pi = cc.pi(p, RM).mul(&BigFloat::from_word(2, p), p, RM);
    let theta = two_pi.mul(&rat_to_mp(&delta.re, p, cc), p, RM);
    let (cos, sin) = (theta.cos(p, RM, cc), theta.sin(p, RM, cc));
    if delta.im.is_zero() {
        return MpComplex { re: cos, im: sin.neg() };
    }
    let modulus = two_pi.mul(&rat_to_mp(&delta.im, p, cc), p, RM).exp(p, RM, cc);
    MpComplex {
        re: modulus.mul(&cos, p, RM),
        im: modulus.mul(&sin, p, RM).neg(),
    }
}

/// Exact value `M · 2^E` of a finite float.
fn to_dyadic(x: &BigFloat) -> (BigInt, i64) {
    if x.is_zero() {
        return (BigInt::zero(), 0);
    }
    let (words, bits, sign, exponent, _) = x.as_raw_parts().expect("finite value");
    let mut m = BigUint::zero();
    // Word is u32 on 32-bit targets
    #[allow(clippy::useless_conversion)]
    for w in words.iter().rev() {
        m = (m << WORD_BIT_SIZE) | BigUint::from(u64::from(*w));
    }
    let m = BigInt::from(m);
    let m = if sign == Sign::Neg { -m } else { m };
    (m, exponent as i64 - bits as i64)
}

fn dyadic_to_rat(m: BigInt, e: i64) -> BigRat {
    if e >= 0 {
        BigRat::from_integer(m << e as usize)
    } else {
        BigRat::new(m, BigInt::one() << (-e) as usize)
    }
}

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

/// `x / 10^q` for a possibly negative `q`.
fn scale10(x: &BigRat, q: i64) -> BigRat {
    if q >= 0 {
        x / BigRat::from_integer(pow10(q as u32))
    } else {
        x * BigRat::from_integer(pow10((-q) as u32))
    }
}

/// Decimal exponent `q` such that `round(x / 10^q)` has exactly `digits`
/// digits.
fn rounding_exponent(x: &BigRat, digits: u32) -> i64 {
    let approx = (x.numer().abs().bits() as f64 - x.denom().bits() as f64) * std::f64::consts::LOG10_2;
    let mut q = approx.floor() as i64 - digits as i64 + 1;
    let (lo, hi) = (pow10(digits - 1), pow10(digits));
    for _ in 0..8 {
        let n = scale10(x, q).round().to_integer().abs();
        if n >= hi {
            q += 1;
        } else if n < lo {
            q -= 1;
        } else {
            break;
        }
    }
    q
}

/// Renders `n · 10^q` positionally for moderate exponents and in
/// scientific notation otherwise.
fn format_decimal(n: &BigInt, q: i64) -> String {
    if n.is_zero() {
        return "0".into();
    }
    let (mut n, mut q) = (n.clone(), q);
    let ten = BigInt::from(10);
    loop {
        let (d, r) = n.div_rem(&ten);
        if !r.is_zero() {
            break;
        }
        n = d;
        q += 1;
    }
    let sign = if n.is_negative() { "-" } else { "" };
    let s = n.abs().to_string();
    let lead = s.len() as i64 - 1 + q;
    if (-7..21).contains(&lead) {
        if q >= 0 {
            format!("{sign}{s}{}", "0".repeat(q as usize))
        } else if lead >= 0 {
            let cut = (lead + 1) as usize;
            format!("{sign}{}.{}", &s[..cut], &s[cut..])
        } else {
            format!("{sign}0.{}{s}", "0".repeat((-lead - 1) as usize))
        }
    } else if s.len() == 1 {
        format!("{sign}{s}e{lead}")
    } else {
        format!("{sign}{}.{}e{lead}", &s[..1], &s[1..])
    }
}

/// Nearest binary64 to an exact float.
fn mp_to_f64(x: &BigFloat) -> f64 {
    let (m, e) = to_dyadic(x);
    let r = dyadic_to_rat(m, e);
    if r.is_zero() {
        return 0.0;
    }
    let q = rounding_exponent(&r, 17);
    let n = scale10(&r, q).round().to_integer();
    format!("{n}e{q}").parse().unwrap_or(f64::NAN)
}

/// Rounds `t^d - exp(-2πiδ)` once from a wide intermediate.
pub(super) struct BaseEvaluator {
    cc: Consts,
}

impl BaseEvaluator {
    const PRECISION: usize = 192;

    pub(super) fn new() -> Self {
        BaseEvaluator {
            cc: Consts::new().expect("constant cache"),
        }
    }

    pub(super) fn base(&mut self, t: Complex64, d: u64, delta: &GaussRat) -> Complex64 {
        let p = Self::PRECISION;
        let c = constant_mp(delta, p, &mut self.cc);
        let t = MpComplex::from_c64(t, p);
        let mut power = MpComplex::from_c64(Complex64::new(1.0, 0.0), p);
        for _ in 0..d {
            power = power.mul(&t, p);
        }
        let z = power.sub(&c, p);
        Complex64::new(mp_to_f64(&z.re), mp_to_f64(&z.im))
    }
}

impl FactoredCharPoly {
    /// Expands the product into dense coefficients, ascending powers. The
    /// leading coefficient is exactly one.
    pub fn expand(&self, digits: u32) -> Result<Expansion, CharPolyError> {
        if !(1..=MAX_DIGITS).contains(&digits) {
            return Err(CharPolyError::DigitsOutOfRange(digits));
        }
        let degree = self.degree() as usize;
        let bits = digit_bits(digits);
        let extra = log2_bound(self).max(0.0).ceil() as usize;
        let p = bits + extra + GUARD_BITS + 2 * (usize::BITS - degree.leading_zeros()) as usize;
        let mut cc = Consts::new().expect("constant cache");
        let mut coeffs = Vec::with_capacity(degree + 1);
        coeffs.push(MpComplex {
            re: BigFloat::from_word(1, p),
            im: BigFloat::new(p),
        });
        for f in self.factors() {
            let c = constant_mp(&f.delta_reduced, p, &mut cc);
            let d = f.d as usize;
            for _ in 0..f.multiplicity {
                let old = coeffs.len();
                coeffs.extend((0..d).map(|_| MpComplex::zero(p)));
                for k in (0..old + d).rev() {
                    let scaled = if k < old {
                        coeffs[k].mul(&c, p)
                    } else {
                        MpComplex::zero(p)
                    };
                    coeffs[k] = if k >= d {
                        coeffs[k - d].sub(&scaled, p)
                    } else {
                        MpComplex::zero(p).sub(&scaled, p)
                    };
                }
            }
        }
        Ok(Expansion {
            digits,
            precision: p,
            coeffs,
        })
    }
}

impl Expansion {
    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Working precision in bits.
    pub fn precision(&self) -> usize {
        self.precision
    }

    /// Number of coefficients, `degree + 1`.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Decimal strings `(re, im)` per coefficient. Both parts are rounded at
    /// the `digits`-th significant digit of the larger part; coefficients
    /// below the accuracy floor render as zero.
    pub fn render(&self) -> Vec<(String, String)> {
        self.coeffs
            .iter()
            .map(|c| {
                let re = {
                    let (m, e) = to_dyadic(&c.re);
                    dyadic_to_rat(m, e)
                };
                let im = {
                    let (m, e) = to_dyadic(&c.im);
                    dyadic_to_rat(m, e)
                };
                let big = if re.abs() >= im.abs() { &re } else { &im };
                let floor = BigRat::new(BigInt::one(), BigInt::one() << (digit_bits(self.digits) + FLUSH_BITS));
                if big.abs() < floor {
                    return ("0".to_string(), "0".to_string());
                }
                let q = rounding_exponent(big, self.digits);
                let part = |x: &BigRat| format_decimal(&scale10(x, q).round().to_integer(), q);
                (part(&re), part(&im))
            })
            .collect()
    }

    /// The rendered coefficients as binary64.
    pub fn to_complex(&self) -> Vec<Complex64> {
        self.render()
            .into_iter()
            .map(|(re, im)| Complex64::new(re.parse().unwrap_or(f64::NAN), im.parse().unwrap_or(f64::NAN)))
            .collect()
    }

    /// Horner evaluation at `t`, carried out at the working precision.
    pub fn horner(&self, t: Complex64) -> Complex64 {
        let p = self.precision;
        let t = MpComplex::from_c64(t, p);
        let acc = self
            .coeffs
            .iter()
            .rev()
            .fold(MpComplex::zero(p), |acc, c| acc.mul(&t, p).add(c, p));
        Complex64::new(mp_to_f64(&acc.re), mp_to_f64(&acc.im))
    }
}
