//! Symmetric functions with one `Sym` factor per index, an extra odd generator
//! `d` with `d^2 = 0` for each odd index, e/h conversion and graded dimensions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::cartan::SuperCartanDatum;
use crate::scalars::{to_series, PiScalar, SeriesPair};
use crate::Error;

/// A monomial: a sorted list of `(index, r)` generators `e_r` and the set of
/// odd indices carrying a `d`, kept in index order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SymMonomial {
    pub e: Vec<(usize, u32)>,
    pub d: Vec<usize>,
}

impl SymMonomial {
    /// Product with its sign, or `None` when a `d` repeats.
    fn mul(&self, rhs: &Self) -> Option<(Self, bool)> {
        let mut e = self.e.clone();
        e.extend_from_slice(&rhs.e);
        e.sort_unstable();
        let mut negate = false;
        for &x in &self.d {
            for &y in &rhs.d {
                if x == y {
                    return None;
                }
                if x > y {
                    negate = !negate;
                }
            }
        }
        let mut d = self.d.clone();
        d.extend_from_slice(&rhs.d);
        d.sort_unstable();
        Some((Self { e, d }, negate))
    }

    pub fn degree(&self, datum: &SuperCartanDatum) -> (i64, u8) {
        let mut deg = 0;
        let mut par = self.d.len() as u8;
        for &(i, r) in &self.e {
            deg += 2 * datum.d_i(i) * r as i64;
            par += datum.parity(i) * (r % 2) as u8;
        }
        (deg, par % 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymExpression(pub BTreeMap<SymMonomial, PiScalar>);

impl SymExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(SymMonomial::default())
    }

    fn from_monomial(m: SymMonomial) -> Self {
        Self([(m, PiScalar::one())].into())
    }

    /// `e_r` of index `i`; `e_0 = 1`.
    pub fn e(i: usize, r: u32) -> Self {
        if r == 0 {
            return Self::one();
        }
        Self::from_monomial(SymMonomial { e: vec![(i, r)], d: Vec::new() })
    }

    pub fn d(datum: &SuperCartanDatum, i: usize) -> Result<Self, Error> {
        if datum.parity(i) == 0 {
            return Err(Error::Invalid(format!("index {i} is even and has no odd generator")));
        }
        Ok(Self::from_monomial(SymMonomial { e: Vec::new(), d: vec![i] }))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, m: SymMonomial, c: PiScalar) {
        let entry = self.0.entry(m.clone()).or_insert_with(PiScalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn scale(&self, c: &PiScalar) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.0 {
            out.add_term(m.clone(), v * c);
        }
        out
    }
}

impl Add for &SymExpression {
    type Output = SymExpression;
    fn add(self, rhs: &SymExpression) -> SymExpression {
        let mut out = self.clone();
        for (m, c) in &rhs.0 {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Mul for &SymExpression {
    type Output = SymExpression;
    fn mul(self, rhs: &SymExpression) -> SymExpression {
        let mut out = SymExpression::zero();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &rhs.0 {
                if let Some((m, negate)) = m1.mul(m2) {
                    let c = c1 * c2;
                    out.add_term(m, if negate { -&c } else { c });
                }
            }
        }
        out
    }
}

impl fmt::Display for SymExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for i in &m.d {
                write!(f, "*d{i}")?;
            }
            for (i, r) in &m.e {
                write!(f, "*e{r}[{i}]")?;
            }
        }
        Ok(())
    }
}

/// `h_n` of index `i` in the e-basis, from `sum_{r+s=n} (-1)^s e_r h_s = 0`.
pub fn h_in_e(i: usize, n: u32) -> SymExpression {
    let mut h = vec![SymExpression::one()];
    for m in 1..=n {
        let mut acc = SymExpression::zero();
        for r in 1..=m {
            let term = &SymExpression::e(i, r) * &h[(m - r) as usize];
            let sign = if r % 2 == 1 { 1 } else { -1 };
            acc = &acc + &term.scale(&PiScalar::from_int(sign));
        }
        h.push(acc);
    }
    h.pop().unwrap()
}

/// Graded dimension of the tensor product over all indices, expanded on
/// `[min, max]`: `prod_r 1/(1 - (pi_i q_i^2)^r)` per index, times `1 + pi`
/// for each odd index.
pub fn sym_graded_dim(datum: &SuperCartanDatum, min: i64, max: i64) -> SeriesPair {
    let mut total = PiScalar::one();
    for i in 0..datum.rank() {
        let (d, p) = (datum.d_i(i), datum.parity(i));
        if p == 1 {
            total = &total * &(&PiScalar::one() + &PiScalar::pi());
        }
        let mut r = 1;
        while 2 * d * r <= max {
            let factor = &PiScalar::one() - &PiScalar::monomial(2 * d * r, (p as i64) * r);
            total = total.checked_div(&factor).expect("geometric factors are invertible");
            r += 1;
        }
    }
    to_series(&total, min, max)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BubbleKind {
    /// The clockwise bubble carrying `n + h - 1` dots.
    EType,
    /// The counterclockwise bubble carrying `n - h - 1` dots.
    HType,
    Odd,
}

/// Degree and parity of a bubble of color `i` with label offset `n`.
pub fn bubble_degree(datum: &SuperCartanDatum, kind: BubbleKind, i: usize, n: i64) -> Result<(i64, u8), Error> {
    let (d, p) = (datum.d_i(i), datum.parity(i));
    match kind {
        BubbleKind::EType | BubbleKind::HType => Ok((2 * d * n, (p as i64 * n).rem_euclid(2) as u8)),
        BubbleKind::Odd if p == 1 => Ok((2 * d, 1)),
        BubbleKind::Odd => Err(Error::Invalid(format!("odd bubble requested for even index {i}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_h() {
        assert_eq!(h_in_e(0, 0), SymExpression::one());
        assert_eq!(h_in_e(0, 1), SymExpression::e(0, 1));
        let e1 = SymExpression::e(0, 1);
        let expect = &(&e1 * &e1) + &SymExpression::e(0, 2).scale(&PiScalar::from_int(-1));
        assert_eq!(h_in_e(0, 2), expect);
    }

    #[test]
    fn odd_generators_anticommute_and_square_to_zero() {
        let d = SuperCartanDatum::preset("odd-sl2").unwrap();
        let x = SymExpression::d(&d, 0).unwrap();
        assert!((&x * &x).is_zero());
        assert!(SymExpression::d(&SuperCartanDatum::preset("sl3").unwrap(), 0).is_err());
    }
}
