//! Truncated Laurent expansions with an explicit window of validity.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::QLaurent;
use super::pi::PiScalar;
use super::ratfunc::RationalFunction;

/// Coefficients of `q^min ..= q^max`.
///
/// Outside the window the coefficients are unknown, except that when
/// `zero_below` holds every coefficient below `min` is known to vanish. Only
/// such series can be multiplied.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    pub min: i64,
    pub max: i64,
    pub zero_below: bool,
    coeffs: Vec<BigRational>,
}

impl LaurentSeries {
    /// An all-zero window. `max < min` gives the empty window.
    pub fn zeros(min: i64, max: i64) -> Self {
        let len = (max - min + 1).max(0) as usize;
        Self { min, max, zero_below: true, coeffs: vec![BigRational::zero(); len] }
    }

    pub fn from_coeffs(min: i64, coeffs: Vec<BigRational>, zero_below: bool) -> Self {
        let max = min + coeffs.len() as i64 - 1;
        Self { min, max, zero_below, coeffs }
    }

    /// Coefficient at `q^e`; `None` when unknown.
    pub fn get(&self, e: i64) -> Option<BigRational> {
        if e < self.min {
            return self.zero_below.then(BigRational::zero);
        }
        if e > self.max {
            return None;
        }
        Some(self.coeffs[(e - self.min) as usize].clone())
    }

    pub fn set(&mut self, e: i64, c: BigRational) {
        assert!(e >= self.min && e <= self.max, "exponent outside window");
        self.coeffs[(e - self.min) as usize] = c;
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Expansion of a rational function on `[min, max]`.
    pub fn expand(r: &RationalFunction, min: i64, max: i64) -> Self {
        let mut out = Self::zeros(min, max);
        if r.is_zero() || max < min {
            return out;
        }
        let num = r.numerator();
        let den = r.denominator();
        // canonical denominators are polynomials with constant term 1
        debug_assert_eq!(den.low(), 0);
        let need = (max - num.low()).max(-1) + 1;
        let inv = inverse_power_series(den, need as usize);
        for e in min..=max {
            let mut c = BigRational::zero();
            for (j, a) in num.terms() {
                let k = e - j;
                if k >= 0 && (k as usize) < inv.len() {
                    c += a.clone() * inv[k as usize].clone();
                }
            }
            out.set(e, c);
        }
        out.zero_below = num.low() >= min;
        out
    }

    /// Windowed product; `None` unless both factors vanish below their windows.
    pub fn mul(&self, rhs: &Self) -> Option<Self> {
        if !self.zero_below || !rhs.zero_below {
            return None;
        }
        let min = self.min + rhs.min;
        let max = (self.max + rhs.min).min(rhs.max + self.min);
        let mut out = Self::zeros(min, max);
        for e in min..=max {
            let mut c = BigRational::zero();
            for i in self.min..=self.max {
                let j = e - i;
                if j < rhs.min {
                    break;
                }
                if j <= rhs.max {
                    c += self.coeffs[(i - self.min) as usize].clone() * rhs.coeffs[(j - rhs.min) as usize].clone();
                }
            }
            out.set(e, c);
        }
        Some(out)
    }

    /// Restriction to a subwindow.
    pub fn restrict(&self, min: i64, max: i64) -> Option<Self> {
        let mut out = Self::zeros(min, max);
        for e in min..=max {
            out.set(e, self.get(e)?);
        }
        out.zero_below = self.zero_below
            && (min <= self.min || self.coeffs[..(min - self.min) as usize].iter().all(|c| c.is_zero()));
        Some(out)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a - b)
    }

    fn combine(&self, rhs: &Self, op: impl Fn(BigRational, BigRational) -> BigRational) -> Self {
        let zero_below = self.zero_below && rhs.zero_below;
        let min = if zero_below { self.min.min(rhs.min) } else { self.min.max(rhs.min) };
        let max = self.max.min(rhs.max);
        let mut out = Self::zeros(min, max);
        for e in min..=max {
            out.set(e, op(self.get(e).unwrap(), rhs.get(e).unwrap()));
        }
        out.zero_below = zero_below;
        out
    }

    /// The window as a Laurent polynomial (truncation).
    pub fn truncation(&self) -> QLaurent {
        QLaurent::from_coeffs(self.min, self.coeffs.clone())
    }
}

/// First `n` coefficients of `1/den` for a polynomial with `den(0) = 1`.
fn inverse_power_series(den: &QLaurent, n: usize) -> Vec<BigRational> {
    let d0 = den.coeff(0);
    assert!(!d0.is_zero(), "denominator vanishes at q = 0");
    let mut inv: Vec<BigRational> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = if k == 0 { BigRational::one() } else { BigRational::zero() };
        for j in 1..=k {
            let dj = den.coeff(j as i64);
            if !dj.is_zero() {
                acc -= dj * inv[k - j].clone();
            }
        }
        inv.push(acc / d0.clone());
    }
    inv
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = self.truncation();
        write!(f, "{} [q^{}..q^{}]", poly, self.min, self.max)
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A pair of series, one for each value of `pi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesPair {
    pub plus: LaurentSeries,
    pub minus: LaurentSeries,
}

impl SeriesPair {
    pub fn zeros(min: i64, max: i64) -> Self {
        Self { plus: LaurentSeries::zeros(min, max), minus: LaurentSeries::zeros(min, max) }
    }

    /// Graded dimension `sum n(d, p) q^d pi^p` from counts indexed by degree
    /// and parity. Counts outside the window are ignored.
    pub fn from_graded_counts(min: i64, max: i64, counts: impl Fn(i64, u8) -> u64) -> Self {
        let mut out = Self::zeros(min, max);
        for e in min..=max {
            let even = BigInt::from(counts(e, 0));
            let odd = BigInt::from(counts(e, 1));
            out.plus.set(e, BigRational::from_integer(&even + &odd));
            out.minus.set(e, BigRational::from_integer(&even - &odd));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Option<Self> {
        Some(Self { plus: self.plus.mul(&rhs.plus)?, minus: self.minus.mul(&rhs.minus)? })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self { plus: self.plus.add(&rhs.plus), minus: self.minus.add(&rhs.minus) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self { plus: self.plus.sub(&rhs.plus), minus: self.minus.sub(&rhs.minus) }
    }

    pub fn restrict(&self, min: i64, max: i64) -> Option<Self> {
        Some(Self { plus: self.plus.restrict(min, max)?, minus: self.minus.restrict(min, max)? })
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    pub fn min(&self) -> i64 {
        self.plus.min.max(self.minus.min)
    }

    pub fn max(&self) -> i64 {
        self.plus.max.min(self.minus.max)
    }
}

impl fmt::Display for SeriesPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "plus={}; minus={}", self.plus, self.minus)
    }
}

/// Laurent expansion of both components of `a` on `[min, max]`.
pub fn to_series(a: &PiScalar, min: i64, max: i64) -> SeriesPair {
    SeriesPair { plus: LaurentSeries::expand(&a.plus, min, max), minus: LaurentSeries::expand(&a.minus, min, max) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &LaurentSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn geometric_series() {
        let a = PiScalar::one().checked_div(&(&PiScalar::one() - &PiScalar::q_pow(2))).unwrap();
        let s = to_series(&a, 0, 4);
        assert_eq!(ints(&s.plus), vec![1, 0, 1, 0, 1]);
    }

    #[test]
    fn shifted_geometric_series() {
        let a = PiScalar::q_pow(-1).checked_div(&(&PiScalar::one() - &PiScalar::q_pow(2))).unwrap();
        let s = to_series(&a, -1, 1);
        assert_eq!(ints(&s.plus), vec![1, 0, 1]);
        assert!(s.plus.zero_below);
    }

    #[test]
    fn zero_window() {
        let s = to_series(&PiScalar::zero(), -2, 2);
        assert!(s.is_zero());
        assert_eq!(s.plus.coeffs().len(), 5);
    }

    #[test]
    fn unknown_below_when_truncated() {
        let s = to_series(&PiScalar::q_pow(-3), -1, 2);
        assert!(!s.plus.zero_below);
        assert!(s.plus.mul(&s.plus).is_none());
    }
}
