//! Graded dimensions of projective modules `H_n e` by exact linear algebra.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::words::{all_permutations, lexmin_word};
use super::{QHElement, QHWord, QuiverHecke};
use crate::scalars::{qpi_factorial_at, to_series, LaurentSeries, SeriesPair};
use crate::Error;

/// Crossing words of every permutation, with the frontier colors they need.
fn crossing_words(colors: &[usize]) -> Vec<Vec<u8>> {
    all_permutations(colors.len()).iter().map(|f| lexmin_word(f)).collect()
}

/// Lowest degree of a basis word with bottom colors `colors`.
pub fn min_degree(qh: &QuiverHecke, colors: &[usize]) -> i64 {
    crossing_words(colors)
        .into_iter()
        .map(|crossings| QHWord { colors: colors.to_vec(), crossings, dots: vec![0; colors.len()] }.grade(qh.datum()).0)
        .min()
        .unwrap_or(0)
}

/// All dot vectors with `sum weights[p] * k[p] == total`.
fn dot_vectors(weights: &[i64], total: i64) -> Vec<Vec<u32>> {
    fn go(weights: &[i64], total: i64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let Some((&w, rest)) = weights.split_first() else {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        };
        let mut k = 0;
        while k * w <= total {
            prefix.push(k as u32);
            go(rest, total - k * w, prefix, out);
            prefix.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    if total >= 0 {
        go(weights, total, &mut Vec::new(), &mut out);
    }
    out
}

/// Basis words of degree `deg` with bottom colors `colors`.
pub fn basis_in_degree(qh: &QuiverHecke, colors: &[usize], deg: i64) -> Vec<QHWord> {
    let weights: Vec<i64> = colors.iter().map(|&c| 2 * qh.datum().d_i(c)).collect();
    let mut out = Vec::new();
    for crossings in crossing_words(colors) {
        let bare = QHWord { colors: colors.to_vec(), crossings, dots: vec![0; colors.len()] };
        let rest = deg - bare.grade(qh.datum()).0;
        for dots in dot_vectors(&weights, rest) {
            out.push(QHWord { dots, ..bare.clone() });
        }
    }
    out
}

/// Exact rank of a list of sparse rational vectors.
fn rank(rows: Vec<Vec<(usize, BigRational)>>) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, BigRational)>> = HashMap::new();
    for mut row in rows {
        while let Some(&(lead, _)) = row.first() {
            let Some(pivot) = pivots.get(&lead) else {
                let c = row[0].1.clone();
                for e in &mut row {
                    e.1 = &e.1 / &c;
                }
                pivots.insert(lead, row);
                break;
            };
            let c = row[0].1.clone();
            row = subtract(&row, pivot, &c);
        }
    }
    pivots.len()
}

/// `a - c * b` for sorted sparse vectors.
fn subtract(a: &[(usize, BigRational)], b: &[(usize, BigRational)], c: &BigRational) -> Vec<(usize, BigRational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() || y < b.len() {
        let take_a = y == b.len() || (x < a.len() && a[x].0 < b[y].0);
        let take_b = x == a.len() || (y < b.len() && b[y].0 < a[x].0);
        if take_a {
            out.push(a[x].clone());
            x += 1;
        } else if take_b {
            out.push((b[y].0, -(c * &b[y].1)));
            y += 1;
        } else {
            let v = &a[x].1 - c * &b[y].1;
            if !v.is_zero() {
                out.push((a[x].0, v));
            }
            x += 1;
            y += 1;
        }
    }
    out
}

/// Graded dimension of `H_n idemp` on `[min, max]`: for each degree and
/// parity, the rank of right multiplication by `idemp` on that graded piece
/// of `H_n e`, where `e` is the idempotent under `idemp`.
pub fn graded_rank(qh: &QuiverHecke, idemp: &QHElement, min: i64, max: i64) -> Result<SeriesPair, Error> {
    let colors = idemp
        .terms
        .keys()
        .next()
        .map(|w| w.colors.clone())
        .ok_or_else(|| Error::Invalid("zero is not an idempotent".into()))?;
    if idemp.terms.keys().any(|w| w.colors != colors || w.top_colors() != colors) {
        return Err(Error::Invalid("idempotent must lie in one block e H e".into()));
    }
    qh.check_idempotent(idemp)?;

    let counts: Vec<(i64, [u64; 2])> = (min..=max)
        .into_par_iter()
        .map(|deg| {
            let mut per_parity = [0u64; 2];
            let basis = basis_in_degree(qh, &colors, deg);
            for parity in 0..2u8 {
                let mut columns: HashMap<QHWord, usize> = HashMap::new();
                let mut rows = Vec::new();
                for y in basis.iter().filter(|y| y.grade(qh.datum()).1 == parity) {
                    let prod = qh.multiply(&QHElement::word(y.clone()), idemp);
                    let mut row: Vec<(usize, BigRational)> = prod
                        .terms
                        .into_iter()
                        .map(|(w, c)| {
                            let next = columns.len();
                            (*columns.entry(w).or_insert(next), c)
                        })
                        .collect();
                    row.sort_by_key(|e| e.0);
                    rows.push(row);
                }
                per_parity[parity as usize] = rank(rows) as u64;
            }
            (deg, per_parity)
        })
        .collect();
    let table: HashMap<i64, [u64; 2]> = counts.into_iter().collect();
    let mut out = SeriesPair::from_graded_counts(min, max, |d, p| table[&d][p as usize]);
    let known = min <= min_degree(qh, &colors);
    out.plus.zero_below = known;
    out.minus.zero_below = known;
    Ok(out)
}

fn shifted(s: &SeriesPair, deg: i64, odd: bool) -> SeriesPair {
    let shift = |x: &LaurentSeries, negate: bool| {
        let coeffs = x.coeffs().iter().map(|c| if negate { -c } else { c.clone() }).collect();
        LaurentSeries::from_coeffs(x.min + deg, coeffs, x.zero_below)
    };
    SeriesPair { plus: shift(&s.plus, false), minus: shift(&s.minus, odd) }
}

/// Graded dimension of `Q^{-shift} H_n idemp`, valid on `[.., max]` and
/// known to vanish below its window.
fn projective_dim(qh: &QuiverHecke, idemp: &QHElement, shift: i64, max: i64) -> Result<SeriesPair, Error> {
    let colors = &idemp.terms.keys().next().ok_or_else(|| Error::Invalid("zero is not an idempotent".into()))?.colors;
    let lo = min_degree(qh, colors);
    Ok(shifted(&graded_rank(qh, idemp, lo, max + shift)?, -shift, false))
}

/// Both sides of `dim H_n e(i^n) = [n]!_{q_i,pi_i} dim P(i^(n))` on `[min, max]`.
pub fn necks_sides(
    qh: &QuiverHecke,
    i: usize,
    n: usize,
    min: i64,
    max: i64,
) -> Result<(SeriesPair, SeriesPair), Error> {
    let (d, par) = (qh.datum().d_i(i), qh.datum().parity(i));
    let colors = vec![i; n];
    let lo = min_degree(qh, &colors);
    let lhs = graded_rank(qh, &QHElement::idempotent(&colors), lo.min(min), max)?;
    let shift = d * (n * (n - 1) / 2) as i64;
    let factor = qpi_factorial_at(n as u32, d, par);
    let lo_f = -shift;
    let p = projective_dim(qh, &qh.nilhecke_idempotent(i, n), shift, max - lo_f)?;
    let f = to_series(&factor, lo_f, max - p.min());
    let rhs = f.mul(&p).expect("both factors vanish below their windows");
    let restrict = |s: &SeriesPair| s.restrict(min, max).expect("window covered");
    Ok((restrict(&lhs), restrict(&rhs)))
}

/// The modules `P(i^(n-r) j i^(r))` for `0 <= r <= n`, with `n = d_ij + 1`,
/// as graded dimensions on `[min, max]`, each paired with the parity of its
/// shift `r(r-1)/2 |i| + r|i||j|`.
pub fn serre_terms(qh: &QuiverHecke, i: usize, j: usize, min: i64, max: i64) -> Result<Vec<(SeriesPair, bool)>, Error> {
    let datum = qh.datum();
    let n = (datum.dij(i, j) + 1) as usize;
    let (d, pi, pj) = (datum.d_i(i), datum.parity(i) as usize, datum.parity(j) as usize);
    (0..=n)
        .into_par_iter()
        .map(|r| {
            let idemp = qh.serre_idempotent(i, j, n - r, r);
            let shift = d * ((n - r) * (n - r).saturating_sub(1) / 2 + r * r.saturating_sub(1) / 2) as i64;
            let odd = (r * r.saturating_sub(1) / 2 * pi + r * pi * pj) % 2 == 1;
            let dim = projective_dim(qh, &idemp, shift, max)?.restrict(min, max).expect("window covered");
            Ok((dim, odd))
        })
        .collect()
}

/// `sum_r (-1)^r Pi^{r(r-1)/2 |i| + r|i||j|} P(i^(n-r) j i^(r))` on `[min, max]`.
pub fn serre_sum(qh: &QuiverHecke, i: usize, j: usize, min: i64, max: i64) -> Result<SeriesPair, Error> {
    let terms = serre_terms(qh, i, j, min, max)?;
    Ok(terms.iter().enumerate().fold(SeriesPair::zeros(min, max), |acc, (r, (dim, odd))| {
        let dim = shifted(dim, 0, *odd);
        if r % 2 == 1 {
            acc.sub(&dim)
        } else {
            acc.add(&dim)
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sparse_rank() {
        let r = |v: i64| BigRational::from_integer(v.into());
        let rows = vec![vec![(0, r(1)), (1, r(2))], vec![(0, r(2)), (1, r(4))], vec![(1, r(1)), (2, r(1))]];
        assert_eq!(rank(rows), 2);
    }

    #[test]
    fn dot_vectors_by_weight() {
        assert_eq!(dot_vectors(&[2, 4], 4), vec![vec![0, 1], vec![2, 0]]);
        assert!(dot_vectors(&[2], -2).is_empty());
    }
}
