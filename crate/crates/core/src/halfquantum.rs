//! The algebra `f` on generators `theta_i`, its twisted coproduct and bilinear form.
//!
//! Words are index lists `(i_1, ..., i_d)` read as `theta_{i_1} ... theta_{i_d}`;
//! positions are zero-based.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::cartan::{RootVector, SuperCartanDatum};
use crate::scalars::{geometric_denominator, qpi_binom_at, PiLaurent, PiScalar};
use crate::Error;

pub type FWord = Vec<usize>;

/// A finite combination of words with scalar coefficients; zero terms are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FExpression(pub BTreeMap<FWord, PiScalar>);

impl FExpression {
    pub fn word(w: FWord) -> Self {
        let mut m = BTreeMap::new();
        m.insert(w, PiScalar::one());
        Self(m)
    }

    pub fn add_term(&mut self, w: FWord, c: PiScalar) {
        let entry = self.0.entry(w.clone()).or_insert_with(PiScalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.0.remove(&w);
        }
    }

    /// Product in `f`: concatenation of words.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::default();
        for (a, x) in &self.0 {
            for (b, y) in &rhs.0 {
                let mut w = a.clone();
                w.extend(b);
                out.add_term(w, x * y);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// Q-degree of a word as a root vector.
pub fn q_degree(datum: &SuperCartanDatum, w: &[usize]) -> RootVector {
    let mut v = vec![0; datum.rank()];
    for &i in w {
        v[i] += 1;
    }
    RootVector(v)
}

pub fn parity(datum: &SuperCartanDatum, w: &[usize]) -> u8 {
    (w.iter().map(|&i| datum.parity(i) as u32).sum::<u32>() % 2) as u8
}

/// The twist picked up by one letter of the second tensor factor passing a
/// later letter of the first: `(deg, par)` of `pi^{|i||k|} q^{-(alpha_i, alpha_k)}`.
fn twist(datum: &SuperCartanDatum, i: usize, k: usize) -> (i64, i64) {
    (-datum.simple_form(i, k), (datum.parity(i) * datum.parity(k)) as i64)
}

/// Coefficient of `theta_{w|S^c} (x) theta_{w|S}` in `r(theta_w)`, where `S` is
/// the set of positions sent to the second tensor factor.
pub fn coproduct_split_coeff(datum: &SuperCartanDatum, w: &[usize], second: &[usize]) -> PiScalar {
    let (deg, par) = coproduct_split_exponent(datum, w, second);
    PiScalar::monomial(deg, par)
}

fn coproduct_split_exponent(datum: &SuperCartanDatum, w: &[usize], second: &[usize]) -> (i64, i64) {
    let mut deg = 0;
    let mut par = 0;
    for &p in second {
        for k in p + 1..w.len() {
            if !second.contains(&k) {
                let (d, e) = twist(datum, w[p], w[k]);
                deg += d;
                par += e;
            }
        }
    }
    (deg, par)
}

/// `prod_c (1 - pi_c q_c^2)` over the letters of a word.
pub fn letter_denominator(datum: &SuperCartanDatum, w: &[usize]) -> PiLaurent {
    w.iter().fold(PiLaurent::one(), |acc, &c| &acc * &geometric_denominator(datum.d_i(c), datum.parity(c)))
}

fn same_content(datum: &SuperCartanDatum, a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && q_degree(datum, a) == q_degree(datum, b)
}

/// Evaluates the form on `f` with a per-session memo table.
pub struct HalfQuantum<'a> {
    datum: &'a SuperCartanDatum,
    cache: Mutex<HashMap<(FWord, FWord), PiLaurent>>,
}

impl<'a> HalfQuantum<'a> {
    pub fn new(datum: &'a SuperCartanDatum) -> Self {
        Self { datum, cache: Mutex::new(HashMap::new()) }
    }

    pub fn datum(&self) -> &SuperCartanDatum {
        self.datum
    }

    /// `(w, w') * prod_{c in w'} (1 - pi_c q_c^2)`, which is a Laurent polynomial.
    pub fn f_form_scaled(&self, w: &[usize], w2: &[usize]) -> PiLaurent {
        if !same_content(self.datum, w, w2) {
            return PiLaurent::zero();
        }
        self.scaled_rec(w, w2)
    }

    fn scaled_rec(&self, w: &[usize], w2: &[usize]) -> PiLaurent {
        if w2.is_empty() {
            return PiLaurent::one();
        }
        let key = (w.to_vec(), w2.to_vec());
        if let Some(v) = self.cache.lock().unwrap().get(&key) {
            return v.clone();
        }
        let (&j, z) = w2.split_last().unwrap();
        let mut acc = PiLaurent::zero();
        let mut rest = Vec::with_capacity(w.len() - 1);
        for p in 0..w.len() {
            if w[p] != j {
                continue;
            }
            let (deg, par) = coproduct_split_exponent(self.datum, w, &[p]);
            rest.clear();
            rest.extend_from_slice(&w[..p]);
            rest.extend_from_slice(&w[p + 1..]);
            let sub = self.scaled_rec(&rest, z);
            acc = &acc + &sub.shift(deg, par);
        }
        self.cache.lock().unwrap().insert(key, acc.clone());
        acc
    }

    pub fn f_form(&self, w: &[usize], w2: &[usize]) -> PiScalar {
        let scaled = self.f_form_scaled(w, w2);
        if scaled.is_zero() {
            return PiScalar::zero();
        }
        &scaled.to_scalar() / &letter_denominator(self.datum, w2).to_scalar()
    }

    /// Bilinear extension to expressions.
    pub fn f_form_expr(&self, x: &FExpression, y: &FExpression) -> PiScalar {
        let mut acc = PiScalar::zero();
        for (a, c) in &x.0 {
            for (b, d) in &y.0 {
                let v = self.f_form(a, b);
                if !v.is_zero() {
                    acc = &acc + &(&(c * d) * &v);
                }
            }
        }
        acc
    }
}

/// Which colors weight an inversion in the permutation-sum formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InversionColors {
    /// The colors of the two crossing strands.
    Strands,
    /// The colors sitting at the two positions of the first word.
    Positions,
}

/// The closed permutation sum for `(w, w')`, independent of the recursion:
/// a sum over bijections `s` with `w[s(r)] = w'[r]`, weighted by the twist of
/// every inverted pair.
pub fn f_form_oracle(datum: &SuperCartanDatum, w: &[usize], w2: &[usize]) -> PiScalar {
    f_form_oracle_with(datum, w, w2, InversionColors::Strands)
}

pub fn f_form_oracle_with(datum: &SuperCartanDatum, w: &[usize], w2: &[usize], colors: InversionColors) -> PiScalar {
    if w.len() != w2.len() {
        return PiScalar::zero();
    }
    let d = w.len();
    let mut total = PiLaurent::zero();
    let mut perm: Vec<usize> = Vec::with_capacity(d);
    let mut used = vec![false; d];
    fn go(
        datum: &SuperCartanDatum,
        w: &[usize],
        w2: &[usize],
        colors: InversionColors,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        total: &mut PiLaurent,
    ) {
        let r = perm.len();
        if r == w.len() {
            let (mut deg, mut par) = (0, 0);
            for a in 0..r {
                for b in a + 1..r {
                    if perm[a] > perm[b] {
                        let (x, y) = match colors {
                            InversionColors::Strands => (w[perm[a]], w[perm[b]]),
                            InversionColors::Positions => (w[a], w[b]),
                        };
                        let (dd, pp) = twist(datum, x, y);
                        deg += dd;
                        par += pp;
                    }
                }
            }
            *total = &*total + &PiLaurent::monomial(deg, par);
            return;
        }
        for s in 0..w.len() {
            if !used[s] && w[s] == w2[r] {
                used[s] = true;
                perm.push(s);
                go(datum, w, w2, colors, perm, used, total);
                perm.pop();
                used[s] = false;
            }
        }
    }
    go(datum, w, w2, colors, &mut perm, &mut used, &mut total);
    if total.is_zero() {
        return PiScalar::zero();
    }
    &total.to_scalar() / &letter_denominator(datum, w).to_scalar()
}

/// The Serre element `sum_r (-1)^r pi_i^{r|j| + r(r-1)/2} [n r]_{q_i,pi_i}
/// theta_i^{n-r} theta_j theta_i^r` with `n = d_ij + 1`.
pub fn serre_element(datum: &SuperCartanDatum, i: usize, j: usize) -> Result<FExpression, Error> {
    if i == j {
        return Err(Error::Invalid("Serre element needs distinct indices".into()));
    }
    let n = datum.dij(i, j) + 1;
    let pi_i = datum.parity(i) as i64;
    let mut out = FExpression::default();
    for r in 0..=n {
        let sign = PiScalar::from_int(if r % 2 == 0 { 1 } else { -1 });
        let pis = PiScalar::pi_pow(pi_i * (r * datum.parity(j) as i64 + r * (r - 1) / 2));
        let binom = qpi_binom_at(n, r as u32, datum.d_i(i), datum.parity(i));
        let mut w = vec![i; (n - r) as usize];
        w.push(j);
        w.extend(std::iter::repeat_n(i, r as usize));
        out.add_term(w, &(&sign * &pis) * &binom);
    }
    Ok(out)
}

/// All words of length `len` over the index set, in lexicographic order.
pub fn words_of_length(rank: usize, len: usize) -> Vec<FWord> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..rank).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::theta_norm;

    #[test]
    fn split_coefficients() {
        let sl2 = SuperCartanDatum::preset("odd-sl2").unwrap();
        assert_eq!(coproduct_split_coeff(&sl2, &[0], &[0]), PiScalar::one());
        assert_eq!(coproduct_split_coeff(&sl2, &[0, 0], &[0]), PiScalar::monomial(-2, 1));
        assert_eq!(coproduct_split_coeff(&sl2, &[0, 0, 0], &[]), PiScalar::one());
    }

    #[test]
    fn generator_norms() {
        let sl3 = SuperCartanDatum::preset("sl3").unwrap();
        let h = HalfQuantum::new(&sl3);
        assert_eq!(h.f_form(&[0], &[0]), theta_norm(1, 0));
        assert!(h.f_form(&[0], &[1]).is_zero());
    }

    #[test]
    fn theta_squared_odd() {
        let sl2 = SuperCartanDatum::preset("odd-sl2").unwrap();
        let h = HalfQuantum::new(&sl2);
        let num = &PiScalar::one() + &PiScalar::monomial(-2, 1);
        let expect = &num * &theta_norm(1, 1).pow(2);
        assert_eq!(h.f_form(&[0, 0], &[0, 0]), expect);
        assert_eq!(f_form_oracle(&sl2, &[0, 0], &[0, 0]), expect);
    }

    #[test]
    fn sl3_single_inversion() {
        let sl3 = SuperCartanDatum::preset("sl3").unwrap();
        let expect = &PiScalar::q() * &theta_norm(1, 0).pow(2);
        assert_eq!(f_form_oracle(&sl3, &[0, 1], &[1, 0]), expect);
        assert!(f_form_oracle(&sl3, &[0], &[0, 0]).is_zero());
    }

    #[test]
    fn sl3_serre_terms() {
        let sl3 = SuperCartanDatum::preset("sl3").unwrap();
        let s = serre_element(&sl3, 0, 1).unwrap();
        assert_eq!(s.0.len(), 3);
        assert_eq!(s.0[&vec![0, 0, 1]], PiScalar::one());
        assert_eq!(s.0[&vec![1, 0, 0]], PiScalar::one());
        assert_eq!(s.0[&vec![0, 1, 0]], -&(&PiScalar::q() + &PiScalar::q_pow(-1)));
        assert!(serre_element(&sl3, 0, 0).is_err());
    }
}
