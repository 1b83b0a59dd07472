//! Factored characteristic polynomials `∏ (t^d - exp(-2πiδ))^m`.
//!
//! The factored form is exact and canonical: `δ` is reduced so that its
//! real part lies in `[0, 1)`, factors sharing `(d, δ mod Z)` are merged and
//! the list is sorted by `d`, then `Re δ`, then `Im δ`. Expansion and
//! evaluation are floating-point presentations only.

use std::f64::consts::TAU;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{format_rat, rat_to_f64, split_floor, BigRat, GaussRat};

mod expansion;

pub use expansion::Expansion;

/// Largest rendering precision accepted by [`FactoredCharPoly::expand`].
pub const MAX_DIGITS: u32 = 1000;
pub const DEFAULT_DIGITS: u32 = 15;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharPolyError {
    #[error("precision must be between 1 and {MAX_DIGITS} digits, got {0}")]
    DigitsOutOfRange(u32),
}

/// One factor `(t^d - exp(-2πiδ))^multiplicity`.
#[derive(Debug, Clone)]
pub struct MonodromyFactor {
    pub d: u64,
    /// `δ` as computed, before reduction.
    pub delta: GaussRat,
    /// `δ - floor(Re δ)`.
    pub delta_reduced: GaussRat,
    /// `floor(Re δ)`.
    pub delta_shift: BigInt,
    pub multiplicity: u64,
    /// Facets of the originating polytope (indices into its canonical facet
    /// list) that contributed to this factor.
    pub facets: Vec<usize>,
}

impl MonodromyFactor {
    pub fn new(d: u64, delta: GaussRat, multiplicity: u64, facets: Vec<usize>) -> Self {
        let (delta_shift, delta_reduced) = delta.reduce_mod_integers();
        MonodromyFactor {
            d,
            delta,
            delta_reduced,
            delta_shift,
            multiplicity,
            facets,
        }
    }

    pub fn degree(&self) -> u64 {
        self.d * self.multiplicity
    }

    fn key(&self) -> (u64, &BigRat, &BigRat) {
        (self.d, &self.delta_reduced.re, &self.delta_reduced.im)
    }

    /// The constant `exp(-2πiδ)`.
    pub fn constant(&self) -> Complex64 {
        exp_neg_two_pi_i(&self.delta_reduced)
    }

    /// The `d` distinct roots of `t^d = exp(-2πiδ)`, each to be counted
    /// `multiplicity` times.
    pub fn distinct_roots(&self) -> Vec<Complex64> {
        let d = BigRat::from_integer(self.d.into());
        let modulus = (TAU * rat_to_f64(&self.delta_reduced.im) / self.d as f64).exp();
        (0..self.d)
            .map(|k| {
                let turn = (&self.delta_reduced.re + BigRat::from_integer(k.into())) / &d;
                let (_, frac) = split_floor(&turn);
                Complex64::from_polar(modulus, -TAU * rat_to_f64(&frac))
            })
            .collect()
    }
}

/// `exp(-2πiδ)` with the real part of `δ` taken modulo one first.
fn exp_neg_two_pi_i(delta: &GaussRat) -> Complex64 {
    let (_, frac) = split_floor(&delta.re);
    Complex64::from_polar((TAU * rat_to_f64(&delta.im)).exp(), -TAU * rat_to_f64(&frac))
}

/// One zeta factor `(1 - exp(2πiδ) t^d)^multiplicity`. It differs from the
/// matching characteristic factor by a unit:
/// `t^d - exp(-2πiδ) = -exp(-2πiδ) · (1 - exp(2πiδ) t^d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaFactor {
    pub d: u64,
    pub delta: GaussRat,
    pub multiplicity: u64,
}

impl ZetaFactor {
    /// The scalar `-exp(-2πiδ)` relating the two forms.
    pub fn unit(&self) -> Complex64 {
        -exp_neg_two_pi_i(&self.delta)
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        let c = exp_neg_two_pi_i(&self.delta).inv();
        (Complex64::new(1.0, 0.0) - c * t.powu(self.d as u32)).powu(self.multiplicity as u32)
    }
}

#[derive(Debug, Clone)]
pub struct FactoredCharPoly {
    factors: Vec<MonodromyFactor>,
    certified: bool,
}

/// Reduces, merges and sorts `factors`. Factors with zero multiplicity are
/// dropped.
pub fn canonicalize(factors: Vec<MonodromyFactor>, certified: bool) -> FactoredCharPoly {
    let mut factors: Vec<MonodromyFactor> = factors
        .into_iter()
        .filter(|f| f.multiplicity > 0)
        .map(|f| MonodromyFactor::new(f.d, f.delta, f.multiplicity, f.facets))
        .collect();
    factors.sort_by(|a, b| a.key().cmp(&b.key()));
    let mut merged: Vec<MonodromyFactor> = Vec::with_capacity(factors.len());
    for f in factors {
        match merged.last_mut() {
            Some(last) if last.key() == f.key() => {
                last.multiplicity += f.multiplicity;
                last.facets.extend(f.facets);
                last.facets.sort_unstable();
            }
            _ => merged.push(f),
        }
    }
    FactoredCharPoly {
        factors: merged,
        certified,
    }
}

impl FactoredCharPoly {
    pub fn factors(&self) -> &[MonodromyFactor] {
        &self.factors
    }

    /// Whether the non-resonance hypothesis held when this was computed.
    pub fn certified(&self) -> bool {
        self.certified
    }

    pub fn degree(&self) -> u64 {
        self.factors.iter().map(MonodromyFactor::degree).sum()
    }

    pub fn to_zeta_form(&self) -> Vec<ZetaFactor> {
        self.factors
            .iter()
            .map(|f| ZetaFactor {
                d: f.d,
                delta: f.delta_reduced.clone(),
                multiplicity: f.multiplicity,
            })
            .collect()
    }

    /// Roots with multiplicity.
    pub fn roots(&self) -> Vec<Complex64> {
        self.factors
            .iter()
            .flat_map(|f| {
                let roots = f.distinct_roots();
                (0..f.multiplicity).flat_map(move |_| roots.clone())
            })
            .collect()
    }

    /// Evaluates the product form at `t`. Each base `t^d - exp(-2πiδ)` is
    /// formed in extended precision and rounded once, so a base close to
    /// zero keeps full relative accuracy before it is raised to its
    /// multiplicity.
    pub fn eval(&self, t: Complex64) -> Complex64 {
        let mut bases = expansion::BaseEvaluator::new();
        self.factors
            .iter()
            .map(|f| bases.base(t, f.d, &f.delta_reduced).powu(f.multiplicity as u32))
            .product()
    }
}

impl PartialEq for FactoredCharPoly {
    /// Polynomial equality: same canonical `(d, δ mod Z, multiplicity)`
    /// list and the same certification flag.
    fn eq(&self, other: &Self) -> bool {
        self.certified == other.certified
            && self.factors.len() == other.factors.len()
            && self
                .factors
                .iter()
                .zip(&other.factors)
                .all(|(a, b)| a.key() == b.key() && a.multiplicity == b.multiplicity)
    }
}

impl Eq for FactoredCharPoly {}

/// `exp(-2*pi*i*(p/q))`, or `exp(-2*pi*i*(p/q + (r/s)*i))` for complex δ.
pub fn render_root(delta: &GaussRat) -> String {
    if delta.im.is_zero() {
        format!("exp(-2*pi*i*({}))", format_rat(&delta.re))
    } else {
        format!(
            "exp(-2*pi*i*({} + ({})*i))",
            format_rat(&delta.re),
            format_rat(&delta.im)
        )
    }
}

impl fmt::Display for FactoredCharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(
                f,
                "(t^{} - {})^{}",
                fac.d,
                render_root(&fac.delta_reduced),
                fac.multiplicity
            )?;
        }
        Ok(())
    }
}
