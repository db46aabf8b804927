//! Exact scalars: Laurent polynomials, rational functions in `q`, the
//! `pi`-extended rings and their `(q, pi)`-combinatorics.

mod laurent;
mod pi;
mod qint;
mod ratfunc;
mod series;

pub use laurent::{Coeff, Laurent, QLaurent, ZLaurent};
pub use pi::{PiLaurent, PiScalar};
pub use qint::{
    qpi_binom, qpi_binom_at, qpi_factorial, qpi_factorial_at, qpi_factorial_laurent, qpi_int, qpi_int_at,
    qpi_int_laurent,
};
pub use ratfunc::RationalFunction;
pub use series::{to_series, LaurentSeries, SeriesPair};

/// `1 / (1 - pi^par q^(2d))`, the value of `(theta_i, theta_i)` for an index
/// with symmetrizer `d` and parity `par`.
pub fn theta_norm(d: i64, par: u8) -> PiScalar {
    geometric_denominator(d, par).to_scalar().inv().expect("1 - pi q^2d is invertible")
}

/// `1 - pi^par q^(2d)`.
pub fn geometric_denominator(d: i64, par: u8) -> PiLaurent {
    &PiLaurent::one() - &PiLaurent::monomial(2 * d, par as i64)
}
