//! Elements of `Q(q)[pi]/(pi^2 - 1)` stored as their values at `pi = +1` and `pi = -1`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::laurent::ZLaurent;
use super::ratfunc::RationalFunction;
use crate::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PiScalar {
    pub plus: RationalFunction,
    pub minus: RationalFunction,
}

impl PiScalar {
    pub fn new(plus: RationalFunction, minus: RationalFunction) -> Self {
        Self { plus, minus }
    }

    pub fn zero() -> Self {
        Self::new(RationalFunction::zero(), RationalFunction::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let r = RationalFunction::from_int(n);
        Self::new(r.clone(), r)
    }

    pub fn from_rational(c: BigRational) -> Self {
        let r = RationalFunction::monomial(c, 0);
        Self::new(r.clone(), r)
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        let r = RationalFunction::monomial(BigRational::one(), k);
        Self::new(r.clone(), r)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `pi^p`, only the parity of `p` matters.
    pub fn pi_pow(p: i64) -> Self {
        let minus = RationalFunction::from_int(if p.rem_euclid(2) == 1 { -1 } else { 1 });
        Self::new(RationalFunction::one(), minus)
    }

    pub fn pi() -> Self {
        Self::pi_pow(1)
    }

    /// `q^deg pi^par`.
    pub fn monomial(deg: i64, par: i64) -> Self {
        let r = RationalFunction::monomial(BigRational::one(), deg);
        let minus = if par.rem_euclid(2) == 1 { -&r } else { r.clone() };
        Self::new(r, minus)
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn bar(&self) -> Self {
        Self::new(self.plus.bar(), self.minus.bar())
    }

    pub fn inv(&self) -> Result<Self, Error> {
        match (self.plus.inv(), self.minus.inv()) {
            (Some(p), Some(m)) => Ok(Self::new(p, m)),
            _ => Err(Error::NonInvertible),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self * &rhs.inv()?)
    }

    /// The substitution `q -> q^d, pi -> pi^parity` that turns `[n]_{q,pi}`
    /// into `[n]_{q_i,pi_i}`.
    pub fn subst(&self, d: i64, parity: u8) -> Self {
        let plus = self.plus.inflate(d);
        let minus = if parity % 2 == 1 { self.minus.inflate(d) } else { plus.clone() };
        Self::new(plus, minus)
    }

    pub fn pow(&self, n: i64) -> Self {
        Self::new(self.plus.pow(n), self.minus.pow(n))
    }

    /// Coefficients `(a, b)` with `self = a + b pi`, where `a = (plus+minus)/2`
    /// and `b = (plus-minus)/2`.
    pub fn pi_components(&self) -> (RationalFunction, RationalFunction) {
        let half = RationalFunction::monomial(BigRational::new(BigInt::one(), BigInt::from(2)), 0);
        let a = &(&self.plus + &self.minus) * &half;
        let b = &(&self.plus - &self.minus) * &half;
        (a, b)
    }
}

impl From<&PiLaurent> for PiScalar {
    fn from(p: &PiLaurent) -> Self {
        Self::new(RationalFunction::from_zlaurent(&p.plus), RationalFunction::from_zlaurent(&p.minus))
    }
}

impl Add for &PiScalar {
    type Output = PiScalar;
    fn add(self, rhs: &PiScalar) -> PiScalar {
        PiScalar::new(&self.plus + &rhs.plus, &self.minus + &rhs.minus)
    }
}

impl Sub for &PiScalar {
    type Output = PiScalar;
    fn sub(self, rhs: &PiScalar) -> PiScalar {
        PiScalar::new(&self.plus - &rhs.plus, &self.minus - &rhs.minus)
    }
}

impl Mul for &PiScalar {
    type Output = PiScalar;
    fn mul(self, rhs: &PiScalar) -> PiScalar {
        PiScalar::new(&self.plus * &rhs.plus, &self.minus * &rhs.minus)
    }
}

impl Div for &PiScalar {
    type Output = PiScalar;
    /// Panics on a non-invertible divisor; see [`PiScalar::checked_div`].
    fn div(self, rhs: &PiScalar) -> PiScalar {
        self.checked_div(rhs).expect("non-invertible scalar")
    }
}

impl Neg for &PiScalar {
    type Output = PiScalar;
    fn neg(self) -> PiScalar {
        PiScalar::new(-&self.plus, -&self.minus)
    }
}

macro_rules! owned_ops {
    ($ty:ty) => {
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}
owned_ops!(PiScalar);
owned_ops!(PiLaurent);

impl fmt::Display for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "plus={}; minus={}", self.plus, self.minus)
    }
}

impl fmt::Debug for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of `Z[q, q^-1, pi]/(pi^2 - 1)`, again as an evaluation pair.
///
/// This is the fast path for heavy enumeration: integer Laurent polynomials
/// need no gcd computations.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PiLaurent {
    pub plus: ZLaurent,
    pub minus: ZLaurent,
}

impl PiLaurent {
    pub fn zero() -> Self {
        Self { plus: ZLaurent::zero(), minus: ZLaurent::zero() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        let c = ZLaurent::monomial(BigInt::from(n), 0);
        Self { plus: c.clone(), minus: c }
    }

    /// `q^deg pi^par`.
    pub fn monomial(deg: i64, par: i64) -> Self {
        let plus = ZLaurent::monomial(BigInt::one(), deg);
        let minus = plus.signed(par.rem_euclid(2) == 1);
        Self { plus, minus }
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    pub fn bar(&self) -> Self {
        Self { plus: self.plus.bar(), minus: self.minus.bar() }
    }

    /// Multiplication by `q^deg pi^par`.
    pub fn shift(&self, deg: i64, par: i64) -> Self {
        Self { plus: self.plus.shift(deg), minus: self.minus.shift(deg).signed(par.rem_euclid(2) == 1) }
    }

    pub fn subst(&self, d: i64, parity: u8) -> Self {
        let plus = self.plus.inflate(d);
        let minus = if parity % 2 == 1 { self.minus.inflate(d) } else { plus.clone() };
        Self { plus, minus }
    }

    pub fn to_scalar(&self) -> PiScalar {
        self.into()
    }
}

impl Add for &PiLaurent {
    type Output = PiLaurent;
    fn add(self, rhs: &PiLaurent) -> PiLaurent {
        PiLaurent { plus: &self.plus + &rhs.plus, minus: &self.minus + &rhs.minus }
    }
}

impl Sub for &PiLaurent {
    type Output = PiLaurent;
    fn sub(self, rhs: &PiLaurent) -> PiLaurent {
        PiLaurent { plus: &self.plus - &rhs.plus, minus: &self.minus - &rhs.minus }
    }
}

impl Mul for &PiLaurent {
    type Output = PiLaurent;
    fn mul(self, rhs: &PiLaurent) -> PiLaurent {
        PiLaurent { plus: &self.plus * &rhs.plus, minus: &self.minus * &rhs.minus }
    }
}

impl Neg for &PiLaurent {
    type Output = PiLaurent;
    fn neg(self) -> PiLaurent {
        PiLaurent { plus: -&self.plus, minus: -&self.minus }
    }
}

impl fmt::Debug for PiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "plus={}; minus={}", self.plus, self.minus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_squares_to_one() {
        assert_eq!(&PiScalar::pi() * &PiScalar::pi(), PiScalar::one());
        assert_eq!(&PiScalar::q() * &PiScalar::q_pow(-1), PiScalar::one());
    }

    #[test]
    fn inverse_of_geometric_denominator() {
        let d = &PiScalar::one() - &PiScalar::monomial(2, 1);
        let inv = d.inv().unwrap();
        assert_eq!(inv.to_string(), "plus=1/(1 - q^2); minus=1/(1 + q^2)");
    }

    #[test]
    fn zero_component_is_not_invertible() {
        let x = &PiScalar::one() + &PiScalar::pi();
        assert_eq!(x.inv(), Err(Error::NonInvertible));
        assert_eq!(Error::NonInvertible.to_string(), "non-invertible scalar");
    }

    #[test]
    fn bar_fixes_pi() {
        assert_eq!(PiScalar::pi().bar(), PiScalar::pi());
        assert_eq!(PiScalar::q().bar(), PiScalar::q_pow(-1));
    }
}
