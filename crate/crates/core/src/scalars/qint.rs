//! Quantum integers, factorials and binomials at `(q, pi)`.

use super::pi::{PiLaurent, PiScalar};

/// `[n]_{q,pi}` as an element of `Z[q, q^-1, pi]/(pi^2 - 1)`.
pub fn qpi_int_laurent(n: i64) -> PiLaurent {
    let m = n.abs();
    let mut acc = PiLaurent::zero();
    for k in 0..m {
        acc = &acc + &PiLaurent::monomial(m - 1 - 2 * k, k);
    }
    if n < 0 {
        -&acc.shift(0, m)
    } else {
        acc
    }
}

pub fn qpi_int(n: i64) -> PiScalar {
    qpi_int_laurent(n).to_scalar()
}

pub fn qpi_factorial_laurent(n: u32) -> PiLaurent {
    (1..=n as i64).fold(PiLaurent::one(), |acc, k| &acc * &qpi_int_laurent(k))
}

pub fn qpi_factorial(n: u32) -> PiScalar {
    qpi_factorial_laurent(n).to_scalar()
}

/// `[n choose r]_{q,pi} = [n][n-1]...[n-r+1] / [r]!`, valid for any integer `n`.
/// Vanishes for `r > n >= 0` because the numerator picks up `[0]`.
pub fn qpi_binom(n: i64, r: u32) -> PiScalar {
    let mut num = PiLaurent::one();
    for k in 0..r as i64 {
        num = &num * &qpi_int_laurent(n - k);
    }
    &num.to_scalar() / &qpi_factorial(r)
}

/// `[n]_{q_i,pi_i}` for an index with symmetrizer `d` and parity `parity`.
pub fn qpi_int_at(n: i64, d: i64, parity: u8) -> PiScalar {
    qpi_int_laurent(n).subst(d, parity).to_scalar()
}

pub fn qpi_factorial_at(n: u32, d: i64, parity: u8) -> PiScalar {
    qpi_factorial_laurent(n).subst(d, parity).to_scalar()
}

pub fn qpi_binom_at(n: i64, r: u32, d: i64, parity: u8) -> PiScalar {
    qpi_binom(n, r).subst(d, parity)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let q = PiScalar::q();
        let pi = PiScalar::pi();
        let two = &q + &(&pi * &PiScalar::q_pow(-1));
        assert_eq!(qpi_int(2), two);
        assert_eq!(qpi_int(-2), -&two);
        assert!(qpi_int(0).is_zero());
        assert_eq!(qpi_int(1), PiScalar::one());
    }

    #[test]
    fn binom_three_one() {
        let expect = &(&PiScalar::q_pow(2) + &PiScalar::pi()) + &PiScalar::q_pow(-2);
        assert_eq!(qpi_binom(3, 1), expect);
        assert_eq!(qpi_binom(3, 1), qpi_int(3));
        assert!(qpi_binom(2, 3).is_zero());
        assert_eq!(qpi_binom(4, 0), PiScalar::one());
    }

    #[test]
    fn bar_of_three_is_fixed() {
        assert_eq!(qpi_int(3).bar(), qpi_int(3));
    }
}
