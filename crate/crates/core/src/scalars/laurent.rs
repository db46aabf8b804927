//! Dense Laurent polynomials in a single variable `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed};

/// Coefficient rings used by [`Laurent`]: `BigInt` and `BigRational`.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Num + Neg<Output = Self> + Signed {}

impl<T> Coeff for T where T: Clone + PartialEq + fmt::Debug + Num + Neg<Output = T> + Signed {}

/// A Laurent polynomial `sum_k coeffs[k] q^(low + k)`.
///
/// Stored trimmed: the first and last coefficients are nonzero, and the zero
/// polynomial has no coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<T> {
    low: i64,
    coeffs: Vec<T>,
}

pub type ZLaurent = Laurent<BigInt>;
pub type QLaurent = Laurent<BigRational>;

impl<T: Coeff> Laurent<T> {
    pub fn zero() -> Self {
        Self { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(T::one(), 0)
    }

    pub fn monomial(c: T, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c])
    }

    /// Builds from coefficients starting at exponent `low`, trimming zeros.
    pub fn from_coeffs(low: i64, coeffs: Vec<T>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, T)>>(terms: I) -> Self {
        let terms: Vec<(i64, T)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![T::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - lo) as usize];
            *slot = slot.clone() + c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.low = 0;
            }
            Some(first) => {
                let last = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                self.coeffs.truncate(last + 1);
                self.coeffs.drain(..first);
                self.low += first as i64;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (`None` for zero).
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient (`None` for zero).
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> T {
        let k = exp - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            T::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (self.low + k as i64, c))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.low, self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// The substitution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let deg = self.degree().unwrap();
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self { low: -deg, coeffs }
    }

    /// The substitution `q -> q^d` for `d >= 1`.
    pub fn inflate(&self, d: i64) -> Self {
        assert!(d >= 1, "inflate needs a positive exponent");
        if d == 1 || self.is_zero() {
            return self.clone();
        }
        Self::from_terms(self.terms().map(|(e, c)| (e * d, c.clone())))
    }

    /// Applies `f` to every coefficient.
    pub fn map<U: Coeff, F: Fn(&T) -> U>(&self, f: F) -> Laurent<U> {
        Laurent::from_coeffs(self.low, self.coeffs.iter().map(f).collect())
    }

    /// `self * sign` where `sign` is `+1` or `-1`.
    pub fn signed(&self, negative: bool) -> Self {
        if negative {
            -self
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl<T: Coeff> Default for Laurent<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Coeff> Add for &Laurent<T> {
    type Output = Laurent<T>;
    fn add(self, rhs: &Laurent<T>) -> Laurent<T> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(rhs.low);
        let hi = self.degree().unwrap().max(rhs.degree().unwrap());
        let mut coeffs = Vec::with_capacity((hi - lo + 1) as usize);
        for e in lo..=hi {
            coeffs.push(self.coeff(e) + rhs.coeff(e));
        }
        Laurent::from_coeffs(lo, coeffs)
    }
}

impl<T: Coeff> Sub for &Laurent<T> {
    type Output = Laurent<T>;
    fn sub(self, rhs: &Laurent<T>) -> Laurent<T> {
        self + &(-rhs)
    }
}

impl<T: Coeff> Neg for &Laurent<T> {
    type Output = Laurent<T>;
    fn neg(self) -> Laurent<T> {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<T: Coeff> Mul for &Laurent<T> {
    type Output = Laurent<T>;
    fn mul(self, rhs: &Laurent<T>) -> Laurent<T> {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a_idx, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (b_idx, b) in rhs.coeffs.iter().enumerate() {
                let slot = &mut coeffs[a_idx + b_idx];
                *slot = slot.clone() + a.clone() * b.clone();
            }
        }
        Laurent::from_coeffs(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr for Laurent<T> {
            type Output = Laurent<T>;
            fn $m(self, rhs: Laurent<T>) -> Laurent<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coeff> Neg for Laurent<T> {
    type Output = Laurent<T>;
    fn neg(self) -> Laurent<T> {
        -&self
    }
}

impl From<&ZLaurent> for QLaurent {
    fn from(p: &ZLaurent) -> QLaurent {
        p.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl QLaurent {
    /// Converts to integer coefficients when every coefficient is integral.
    pub fn to_integral(&self) -> Option<ZLaurent> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(self.map(|c| c.to_integer()))
        } else {
            None
        }
    }
}

fn write_coeff<T: Coeff + fmt::Display>(f: &mut fmt::Formatter<'_>, c: &T, exp: i64, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    let text = abs.to_string();
    if exp == 0 || text != "1" {
        if text.contains('/') {
            write!(f, "({text})")?;
        } else {
            write!(f, "{text}")?;
        }
    }
    match exp {
        0 => Ok(()),
        1 => write!(f, "q"),
        _ => write!(f, "q^{exp}"),
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for Laurent<T> {
    /// Terms lowest exponent first, e.g. `1 - q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            write_coeff(f, c, e, n == 0)?;
        }
        Ok(())
    }
}

impl<T: Coeff + fmt::Display> fmt::Debug for Laurent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(terms: &[(i64, i64)]) -> ZLaurent {
        ZLaurent::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn trims_and_renders() {
        let p = z(&[(0, 1), (2, -1), (5, 0)]);
        assert_eq!(p.to_string(), "1 - q^2");
        assert_eq!(z(&[(-1, 2), (1, -1)]).to_string(), "2q^-1 - q");
        assert_eq!(p.degree(), Some(2));
        assert_eq!(z(&[(3, 0)]), ZLaurent::zero());
        assert_eq!(ZLaurent::zero().to_string(), "0");
    }

    #[test]
    fn bar_and_inflate() {
        let p = z(&[(-1, 2), (3, 1)]);
        assert_eq!(p.bar(), z(&[(1, 2), (-3, 1)]));
        assert_eq!(p.inflate(2), z(&[(-2, 2), (6, 1)]));
        assert_eq!(p.bar().bar(), p);
    }

    #[test]
    fn ring_ops() {
        let a = z(&[(0, 1), (1, 1)]);
        let b = z(&[(0, 1), (1, -1)]);
        assert_eq!(&a * &b, z(&[(0, 1), (2, -1)]));
        assert_eq!(&a - &a, ZLaurent::zero());
        assert_eq!((&a + &b).to_string(), "2");
    }
}
