//! Exact truncated power series in `x`, `u`, `v` and the generating-function
//! identity checks built on them.
//!
//! A series keeps only monomials `x^a u^b v^c` with `a <= max_x`, `b <= max_u`
//! and `c <= max_v`; every product term outside those bounds is dropped, so
//! two series with the same bounds can be compared coefficient by coefficient.
//! Coefficients are `i128` and any overflow is reported as an error.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::enumerate::{enumerate_bounded, enumerate_lecture_hall};
use crate::partition::ceiling_stats;

pub type Coefficient = i128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation bounds differ: {left:?} vs {right:?}")]
    BoundsMismatch { left: Bounds, right: Bounds },
    #[error("geometric factor with x exponent 0 does not converge")]
    Divergent,
    #[error("coefficient arithmetic overflowed")]
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bounds {
    pub max_x: u32,
    pub max_u: u32,
    pub max_v: u32,
}

impl Bounds {
    /// Each power of `x` carries at most `u²` in every series used here, so
    /// `u` and `v` degrees are capped at `2·max_x`.
    pub fn for_max_x(max_x: u32) -> Self {
        let cap = max_x.saturating_mul(2);
        Self {
            max_x,
            max_u: cap,
            max_v: cap,
        }
    }

    fn admits(&self, e: Exponent) -> bool {
        e.x <= self.max_x && e.u <= self.max_u && e.v <= self.max_v
    }
}

/// Exponents of `x^x u^u v^v`. Ordered by `(x, u, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponent {
    pub x: u32,
    pub u: u32,
    pub v: u32,
}

impl Exponent {
    pub const ONE: Exponent = Exponent { x: 0, u: 0, v: 0 };

    pub fn new(x: u32, u: u32, v: u32) -> Self {
        Self { x, u, v }
    }

    fn checked_add(self, other: Exponent) -> Option<Exponent> {
        Some(Exponent {
            x: self.x.checked_add(other.x)?,
            u: self.u.checked_add(other.u)?,
            v: self.v.checked_add(other.v)?,
        })
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    bounds: Bounds,
    coefficients: BTreeMap<Exponent, Coefficient>,
}

impl TruncatedSeries {
    pub fn zero(bounds: Bounds) -> Self {
        Self {
            bounds,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn one(bounds: Bounds) -> Self {
        Self::monomial(bounds, 1, Exponent::ONE)
    }

    /// `coefficient · x^e.x u^e.u v^e.v`, or zero when `e` is out of bounds.
    pub fn monomial(bounds: Bounds, coefficient: Coefficient, e: Exponent) -> Self {
        let mut s = Self::zero(bounds);
        if coefficient != 0 && bounds.admits(e) {
            s.coefficients.insert(e, coefficient);
        }
        s
    }

    /// Builds a series from `(exponent, coefficient)` pairs, summing repeats
    /// and dropping out-of-bounds terms.
    pub fn from_terms(
        bounds: Bounds,
        terms: impl IntoIterator<Item = (Exponent, Coefficient)>,
    ) -> Result<Self, SeriesError> {
        let mut s = Self::zero(bounds);
        for (e, c) in terms {
            s.accumulate(e, c)?;
        }
        s.prune();
        Ok(s)
    }

    fn accumulate(&mut self, e: Exponent, c: Coefficient) -> Result<(), SeriesError> {
        if !self.bounds.admits(e) || c == 0 {
            return Ok(());
        }
        let slot = self.coefficients.entry(e).or_insert(0);
        *slot = slot.checked_add(c).ok_or(SeriesError::Overflow)?;
        Ok(())
    }

    fn prune(&mut self) {
        self.coefficients.retain(|_, c| *c != 0);
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn coefficient(&self, e: Exponent) -> Coefficient {
        self.coefficients.get(&e).copied().unwrap_or(0)
    }

    /// Coefficient of `x^dx` with no `u` or `v`.
    pub fn x_coefficient(&self, dx: u32) -> Coefficient {
        self.coefficient(Exponent::new(dx, 0, 0))
    }

    /// Number of non-zero terms.
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponent, Coefficient)> + '_ {
        self.coefficients.iter().map(|(&e, &c)| (e, c))
    }

    fn same_bounds(&self, other: &Self) -> Result<(), SeriesError> {
        if self.bounds != other.bounds {
            return Err(SeriesError::BoundsMismatch {
                left: self.bounds,
                right: other.bounds,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_bounds(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.accumulate(e, c)?;
        }
        out.prune();
        Ok(out)
    }

    pub fn neg(&self) -> Result<Self, SeriesError> {
        let mut out = Self::zero(self.bounds);
        for (e, c) in self.terms() {
            out.coefficients
                .insert(e, c.checked_neg().ok_or(SeriesError::Overflow)?);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_bounds(other)?;
        let mut out = Self::zero(self.bounds);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let Some(e) = ea.checked_add(eb) else { continue };
                if !self.bounds.admits(e) {
                    continue;
                }
                let c = ca.checked_mul(cb).ok_or(SeriesError::Overflow)?;
                out.accumulate(e, c)?;
            }
        }
        out.prune();
        Ok(out)
    }

    /// Substitutes `u = v = 1`, collecting everything onto powers of `x`.
    /// The bounds are unchanged.
    pub fn specialize_uv_one(&self) -> Result<Self, SeriesError> {
        Self::from_terms(self.bounds, self.terms().map(|(e, c)| (Exponent::new(e.x, 0, 0), c)))
    }
}

pub fn series_add(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    a.add(b)
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    a.mul(b)
}

/// Canonical text: terms in `(x, u, v)` order, factors written `u`, `v`, `x`.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match (k, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let factors: Vec<String> = [("u", e.u), ("v", e.v), ("x", e.x)]
                .into_iter()
                .filter(|&(_, d)| d > 0)
                .map(|(name, d)| {
                    if d == 1 {
                        name.to_string()
                    } else {
                        format!("{name}^{d}")
                    }
                })
                .collect();
            let magnitude = c.unsigned_abs();
            if factors.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude == 1 {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `Σ_{k>=0} x^{a·k} u^{b·k}` truncated at `bounds`.
pub fn geometric_factor(x_exp: u32, u_exp: u32, bounds: Bounds) -> Result<TruncatedSeries, SeriesError> {
    if x_exp == 0 {
        return Err(SeriesError::Divergent);
    }
    let terms = (0..=bounds.max_x / x_exp).map(|k| (Exponent::new(k * x_exp, k.saturating_mul(u_exp), 0), 1));
    TruncatedSeries::from_terms(bounds, terms)
}

fn product(
    bounds: Bounds,
    factors: impl IntoIterator<Item = Result<TruncatedSeries, SeriesError>>,
) -> Result<TruncatedSeries, SeriesError> {
    factors
        .into_iter()
        .try_fold(TruncatedSeries::one(bounds), |acc, f| acc.mul(&f?))
}

/// `∏_{i=1}^{n} 1/(1 - x^{2i-1})`.
pub fn rhs_plain(n: usize, max_x: u32) -> Result<TruncatedSeries, SeriesError> {
    let bounds = Bounds::for_max_x(max_x);
    product(bounds, (1..=n as u32).map(|i| geometric_factor(2 * i - 1, 0, bounds)))
}

/// `Σ_λ x^{|λ|}` over lecture hall partitions with `n` parts and `|λ| <= max_x`.
pub fn lhs_plain(n: usize, max_x: u32) -> Result<TruncatedSeries, SeriesError> {
    let bounds = Bounds::for_max_x(max_x);
    let terms = enumerate_lecture_hall(n, max_x as i64).map(|l| (Exponent::new(l.weight() as u32, 0, 0), 1));
    TruncatedSeries::from_terms(bounds, terms)
}

/// `∏_{i=1}^{n} (1 + u v x^i) / (1 - u² x^{n+i})`.
pub fn rhs_refined(n: usize, bounds: Bounds) -> Result<TruncatedSeries, SeriesError> {
    let n32 = n as u32;
    let numerator =
        (1..=n32).map(|i| TruncatedSeries::from_terms(bounds, [(Exponent::ONE, 1), (Exponent::new(i, 1, 1), 1)]));
    let denominator = (1..=n32).map(|i| geometric_factor(n32 + i, 2, bounds));
    product(bounds, numerator.chain(denominator))
}

/// `Σ_λ x^{|λ|} u^{|⌈λ⌉|} v^{o(⌈λ⌉)}` over lecture hall partitions with
/// `|λ| <= max_x`.
pub fn lhs_refined(n: usize, bounds: Bounds) -> Result<TruncatedSeries, SeriesError> {
    let terms = enumerate_lecture_hall(n, bounds.max_x as i64).map(|l| {
        let c = ceiling_stats(&l);
        (Exponent::new(l.weight() as u32, c.weight as u32, c.odd_count as u32), 1)
    });
    TruncatedSeries::from_terms(bounds, terms)
}

/// `∏_{i=1}^{n} (1 + x^i) / (1 - x^{n+i})`.
pub fn bounded_product(n: usize, max_x: u32) -> Result<TruncatedSeries, SeriesError> {
    let bounds = Bounds::for_max_x(max_x);
    let n32 = n as u32;
    let numerator =
        (1..=n32).map(|i| TruncatedSeries::from_terms(bounds, [(Exponent::ONE, 1), (Exponent::new(i, 0, 0), 1)]));
    let denominator = (1..=n32).map(|i| geometric_factor(n32 + i, 0, bounds));
    product(bounds, numerator.chain(denominator))
}

/// `Σ_p x^{|p|}` over bounded partitions with `|p| <= max_x`.
pub fn bounded_weight_series(n: usize, max_x: u32) -> Result<TruncatedSeries, SeriesError> {
    let bounds = Bounds::for_max_x(max_x);
    let terms = enumerate_bounded(n, max_x as i64).map(|p| (Exponent::new(p.weight() as u32, 0, 0), 1));
    TruncatedSeries::from_terms(bounds, terms)
}

/// The lexicographically smallest exponent at which two series differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: Exponent,
    pub left: Coefficient,
    pub right: Coefficient,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mismatch at {}: lhs={} rhs={}", self.exponent, self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    /// distinct exponents carrying a non-zero coefficient on either side
    pub compared: usize,
    pub mismatch: Option<Mismatch>,
}

impl IdentityReport {
    pub fn is_ok(&self) -> bool {
        self.mismatch.is_none()
    }
}

pub fn compare(left: &TruncatedSeries, right: &TruncatedSeries) -> Result<IdentityReport, SeriesError> {
    left.same_bounds(right)?;
    let mut exponents: Vec<Exponent> = left
        .coefficients
        .keys()
        .chain(right.coefficients.keys())
        .copied()
        .collect();
    exponents.sort_unstable();
    exponents.dedup();
    let mismatch = exponents.iter().find_map(|&e| {
        let (l, r) = (left.coefficient(e), right.coefficient(e));
        (l != r).then_some(Mismatch {
            exponent: e,
            left: l,
            right: r,
        })
    });
    Ok(IdentityReport {
        compared: exponents.len(),
        mismatch,
    })
}

pub fn verify_plain(n: usize, max_x: u32) -> Result<IdentityReport, SeriesError> {
    compare(&lhs_plain(n, max_x)?, &rhs_plain(n, max_x)?)
}

pub fn verify_refined(n: usize, max_x: u32) -> Result<IdentityReport, SeriesError> {
    let bounds = Bounds::for_max_x(max_x);
    compare(&lhs_refined(n, bounds)?, &rhs_refined(n, bounds)?)
}

/// Checks `∏(1 + x^i) / ∏(1 - x^{n+i}) = ∏ 1/(1 - x^{2i-1})` and that the
/// enumerated bounded-partition weights match it. Reports the first failing
/// comparison.
pub fn bounded_gf_identity(n: usize, max_x: u32) -> Result<IdentityReport, SeriesError> {
    let odd = rhs_plain(n, max_x)?;
    let algebraic = compare(&bounded_product(n, max_x)?, &odd)?;
    if !algebraic.is_ok() {
        return Ok(algebraic);
    }
    compare(&bounded_weight_series(n, max_x)?, &odd)
}
