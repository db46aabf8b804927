//! Reduced rational functions in `q` over the rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{QLaurent, ZLaurent};

/// A rational function `num / den` in lowest terms.
///
/// Canonical form: `den` is an honest polynomial (lowest exponent 0) whose
/// constant coefficient is 1, and `gcd(num, den) = 1`. Every nonzero rational
/// function has exactly one such representation, so structural equality is
/// mathematical equality. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: QLaurent,
    den: QLaurent,
}

type Poly = Vec<BigRational>;

fn poly_trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_rem(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    let lead = b.last().expect("division by zero polynomial").clone();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = r.last().unwrap().clone() / lead.clone();
        for (k, c) in b.iter().enumerate() {
            let v = r[shift + k].clone() - factor.clone() * c.clone();
            r[shift + k] = v;
        }
        poly_trim(&mut r);
    }
    r
}

fn poly_divexact(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    let lead = b.last().unwrap().clone();
    let mut quot = vec![BigRational::zero(); a.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let factor = r.last().unwrap().clone() / lead.clone();
        for (k, c) in b.iter().enumerate() {
            let v = r[shift + k].clone() - factor.clone() * c.clone();
            r[shift + k] = v;
        }
        quot[shift] = factor;
        poly_trim(&mut r);
    }
    debug_assert!(r.is_empty(), "inexact polynomial division");
    poly_trim(&mut quot);
    quot
}

fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// Splits a nonzero Laurent polynomial into `q^v * p(q)` with `p(0) != 0`.
fn split(p: &QLaurent) -> (i64, Poly) {
    (p.low(), p.coeffs().to_vec())
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self { num: QLaurent::zero(), den: QLaurent::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(QLaurent::one())
    }

    pub fn from_laurent(p: QLaurent) -> Self {
        Self { num: p, den: QLaurent::one() }
    }

    pub fn from_zlaurent(p: &ZLaurent) -> Self {
        Self::from_laurent(p.into())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(QLaurent::monomial(BigRational::from_integer(BigInt::from(n)), 0))
    }

    pub fn monomial(c: BigRational, exp: i64) -> Self {
        Self::from_laurent(QLaurent::monomial(c, exp))
    }

    /// Builds `num / den` and reduces it. Panics when `den` is zero.
    pub fn new(num: QLaurent, den: QLaurent) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (nv, np) = split(&num);
        let (dv, dp) = split(&den);
        let g = poly_gcd(&np, &dp);
        let np = poly_divexact(&np, &g);
        let dp = poly_divexact(&dp, &g);
        // dp(0) != 0 survives division by a factor of dp
        let c0 = dp[0].clone();
        let num = QLaurent::from_coeffs(nv - dv, np).scale(&(BigRational::one() / c0.clone()));
        let den = QLaurent::from_coeffs(0, dp).scale(&(BigRational::one() / c0));
        Self { num, den }
    }

    pub fn numerator(&self) -> &QLaurent {
        &self.num
    }

    pub fn denominator(&self) -> &QLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Returns the Laurent polynomial when the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&QLaurent> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::new(self.den.clone(), self.num.clone()))
    }

    pub fn bar(&self) -> Self {
        Self::new(self.num.bar(), self.den.bar())
    }

    /// The substitution `q -> q^d`.
    pub fn inflate(&self, d: i64) -> Self {
        if d == 1 {
            return self.clone();
        }
        Self::new(self.num.inflate(d), self.den.inflate(d))
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_laurent(&self.num * &rhs.num);
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &QLaurent| {
            if p.terms().count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ql(terms: &[(i64, i64)]) -> QLaurent {
        QLaurent::from_terms(terms.iter().map(|&(e, c)| (e, BigRational::from_integer(c.into()))))
    }

    #[test]
    fn reduces_common_factors() {
        // (1 - q^4) / (q^3 - q^5) = (1 + q^2) q^-3
        let r = RationalFunction::new(ql(&[(0, 1), (4, -1)]), ql(&[(3, 1), (5, -1)]));
        assert_eq!(r.to_string(), "q^-3 + q^-1");
    }

    #[test]
    fn denominator_normalized() {
        let r = RationalFunction::new(ql(&[(0, 2)]), ql(&[(1, -2), (3, 2)]));
        assert_eq!(r.denominator(), &ql(&[(0, 1), (2, -1)]));
        assert_eq!(r.numerator(), &ql(&[(-1, -1)]));
    }

    #[test]
    fn field_identities() {
        let a = RationalFunction::new(ql(&[(0, 1)]), ql(&[(0, 1), (2, -1)]));
        let b = RationalFunction::new(ql(&[(1, 3)]), ql(&[(0, 1), (1, 1)]));
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(a.bar().bar(), a);
        assert!((&a - &a).is_zero());
    }
}
