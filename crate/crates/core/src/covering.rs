//! The idempotented covering quantum group: signed words, normal ordering,
//! the symmetries and the sesquilinear form.
//!
//! A signed word stores its letters in visual order, so the rightmost letter
//! acts first on the anchor weight.

use std::collections::BTreeMap;
use std::fmt;

use dashmap::DashMap;

use crate::cartan::{RootVector, SuperCartanDatum, Weight};
use crate::halfquantum::HalfQuantum;
use crate::scalars::{qpi_factorial_at, qpi_int_at, qpi_int_laurent, PiLaurent, PiScalar};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub up: bool,
    pub i: usize,
}

impl Letter {
    pub fn up(i: usize) -> Self {
        Self { up: true, i }
    }

    pub fn down(i: usize) -> Self {
        Self { up: false, i }
    }

    pub fn flipped(self) -> Self {
        Self { up: !self.up, i: self.i }
    }

    fn sign(self) -> i64 {
        if self.up {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedWord {
    pub letters: Vec<Letter>,
    pub lambda: Weight,
}

impl SignedWord {
    pub fn new(letters: Vec<Letter>, lambda: Weight) -> Self {
        Self { letters, lambda }
    }

    pub fn empty(lambda: Weight) -> Self {
        Self::new(Vec::new(), lambda)
    }

    /// Parses whitespace-separated `+name` / `-name` tokens.
    pub fn parse(datum: &SuperCartanDatum, text: &str, lambda: Weight) -> Result<Self, Error> {
        Ok(Self::new(parse_letters(datum, text)?, lambda))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn wt(&self, datum: &SuperCartanDatum) -> RootVector {
        letters_wt(datum.rank(), &self.letters)
    }

    /// Weight of the region immediately right of letter `k`, i.e. the weight
    /// that letter acts on.
    pub fn source_weight(&self, datum: &SuperCartanDatum, k: usize) -> Weight {
        source_weights(datum, &self.letters, &self.lambda)[k].clone()
    }

    pub fn target(&self, datum: &SuperCartanDatum) -> Weight {
        datum.pairing_shift(&self.lambda, &self.wt(datum))
    }

    pub fn render(&self, datum: &SuperCartanDatum) -> String {
        render_letters(datum, &self.letters)
    }
}

pub fn parse_letters(datum: &SuperCartanDatum, text: &str) -> Result<Vec<Letter>, Error> {
    text.split_whitespace()
        .map(|tok| {
            let (up, name) = match tok.split_at(1) {
                ("+", rest) => (true, rest),
                ("-", rest) => (false, rest),
                _ => return Err(Error::Parse(format!("letter {tok:?} must start with + or -"))),
            };
            let i = datum.index_of(name).ok_or_else(|| Error::Parse(format!("unknown index {name:?}")))?;
            Ok(Letter { up, i })
        })
        .collect()
}

pub fn render_letters(datum: &SuperCartanDatum, letters: &[Letter]) -> String {
    letters
        .iter()
        .map(|l| format!("{}{}", if l.up { '+' } else { '-' }, datum.indices[l.i].name))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn letters_wt(rank: usize, letters: &[Letter]) -> RootVector {
    let mut v = vec![0; rank];
    for l in letters {
        v[l.i] += l.sign();
    }
    RootVector(v)
}

/// `out[k]` is the weight letter `k` acts on; `out[len]` is the anchor.
pub fn source_weights(datum: &SuperCartanDatum, letters: &[Letter], lambda: &Weight) -> Vec<Weight> {
    let mut out = vec![lambda.clone(); letters.len() + 1];
    let mut cur = lambda.clone();
    for k in (0..letters.len()).rev() {
        out[k] = cur.clone();
        cur = datum.shift_simple(&cur, letters[k].i, letters[k].sign());
    }
    out
}

/// A combination of signed words over a common anchor weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UExpression {
    pub lambda: Weight,
    pub terms: BTreeMap<Vec<Letter>, PiScalar>,
}

impl UExpression {
    pub fn zero(lambda: Weight) -> Self {
        Self { lambda, terms: BTreeMap::new() }
    }

    pub fn word(w: &SignedWord) -> Self {
        let mut out = Self::zero(w.lambda.clone());
        out.add_term(w.letters.clone(), PiScalar::one());
        out
    }

    pub fn add_term(&mut self, letters: Vec<Letter>, c: PiScalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(letters.clone()).or_insert_with(PiScalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&letters);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.lambda, rhs.lambda, "anchors differ");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &PiScalar) -> Self {
        let mut out = Self::zero(self.lambda.clone());
        for (w, d) in &self.terms {
            out.add_term(w.clone(), c * d);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = (SignedWord, &PiScalar)> {
        self.terms.iter().map(|(w, c)| (SignedWord::new(w.clone(), self.lambda.clone()), c))
    }
}

/// Rewrites every word so that all down letters precede all up letters, using
/// `e_i f_j 1_mu = pi^{|i||j|} f_j e_i 1_mu + delta_ij [<h_i, mu>]_{q_i,pi_i} 1_mu`.
pub fn normal_order(datum: &SuperCartanDatum, x: &UExpression) -> UExpression {
    let mut out = UExpression::zero(x.lambda.clone());
    let mut pending: Vec<(Vec<Letter>, PiScalar)> = x.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
    let mut budget: usize = 1 << 24;
    while let Some((w, c)) = pending.pop() {
        budget = budget.checked_sub(1).expect("normal ordering exceeded its step budget");
        let pos = w.windows(2).position(|p| p[0].up && !p[1].up);
        let Some(k) = pos else {
            out.add_term(w, c);
            continue;
        };
        let (i, j) = (w[k].i, w[k + 1].i);
        let mu = source_weights(datum, &w, &x.lambda)[k + 1].clone();
        let mut swapped = w.clone();
        swapped.swap(k, k + 1);
        let sign = PiScalar::pi_pow((datum.parity(i) * datum.parity(j)) as i64);
        pending.push((swapped, &c * &sign));
        if i == j {
            let h = qpi_int_at(mu.h(i), datum.d_i(i), datum.parity(i));
            let mut shorter = w[..k].to_vec();
            shorter.extend_from_slice(&w[k + 2..]);
            pending.push((shorter, &c * &h));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Omega,
    Psi,
    Rho,
    Star,
    Shriek,
}

impl Symmetry {
    pub fn parse(name: &str) -> Result<Self, Error> {
        match name {
            "omega" => Ok(Self::Omega),
            "psi" => Ok(Self::Psi),
            "rho" => Ok(Self::Rho),
            "star" => Ok(Self::Star),
            "shriek" => Ok(Self::Shriek),
            other => Err(Error::Invalid(format!("unknown symmetry {other:?}"))),
        }
    }
}

fn apply_omega(x: &UExpression) -> UExpression {
    let mut out = UExpression::zero(x.lambda.neg());
    for (w, c) in &x.terms {
        out.add_term(w.iter().map(|l| l.flipped()).collect(), c.bar());
    }
    out
}

fn apply_psi(datum: &SuperCartanDatum, x: &UExpression) -> UExpression {
    let mut out = UExpression::zero(x.lambda.clone());
    for (w, c) in &x.terms {
        let src = source_weights(datum, w, &x.lambda);
        let par: i64 =
            w.iter().enumerate().filter(|(_, l)| !l.up).map(|(k, l)| datum.parity_i_lambda(l.i, &src[k]) as i64).sum();
        out.add_term(w.clone(), &c.bar() * &PiScalar::pi_pow(par));
    }
    out
}

/// Linear antiautomorphism: reverses words and moves the anchor to the
/// target weight. Requires every word to share one target weight.
fn apply_rho(datum: &SuperCartanDatum, x: &UExpression) -> UExpression {
    let mut out: Option<UExpression> = None;
    for (w, c) in &x.terms {
        let src = source_weights(datum, w, &x.lambda);
        let target = datum.pairing_shift(&x.lambda, &letters_wt(datum.rank(), w));
        let mut deg = 0;
        for (k, l) in w.iter().enumerate() {
            let h = src[k].h(l.i);
            deg += datum.d_i(l.i) * if l.up { -h - 1 } else { h - 1 };
        }
        let image: Vec<Letter> = w.iter().rev().map(|l| l.flipped()).collect();
        let slot = out.get_or_insert_with(|| UExpression::zero(target.clone()));
        assert_eq!(slot.lambda, target, "rho needs a common target weight");
        slot.add_term(image, c * &PiScalar::q_pow(deg));
    }
    out.unwrap_or_else(|| UExpression::zero(x.lambda.clone()))
}

pub fn apply_symmetry(datum: &SuperCartanDatum, which: Symmetry, x: &UExpression) -> UExpression {
    match which {
        Symmetry::Omega => apply_omega(x),
        Symmetry::Psi => apply_psi(datum, x),
        Symmetry::Rho => apply_rho(datum, x),
        Symmetry::Star => apply_rho(datum, &apply_psi(datum, x)),
        Symmetry::Shriek => apply_psi(datum, &apply_rho(datum, x)),
    }
}

/// `e_i^{(n)} 1_lambda` or `f_i^{(n)} 1_lambda`.
pub fn divided_word(datum: &SuperCartanDatum, up: bool, i: usize, n: u32, lambda: &Weight) -> UExpression {
    assert!(n >= 1, "divided powers start at n = 1");
    let fact = qpi_factorial_at(n, datum.d_i(i), datum.parity(i));
    let coeff = fact.inv().expect("quantum factorials are invertible");
    let mut out = UExpression::zero(lambda.clone());
    out.add_term(vec![Letter { up, i }; n as usize], coeff);
    out
}

/// The quantum Serre expression in `e`'s (`up`) or `f`'s applied to `1_lambda`.
pub fn serre_expression(datum: &SuperCartanDatum, up: bool, i: usize, j: usize, lambda: &Weight) -> UExpression {
    assert_ne!(i, j, "Serre expressions need distinct indices");
    let n = datum.dij(i, j) + 1;
    let pi_i = datum.parity(i) as i64;
    let mut out = UExpression::zero(lambda.clone());
    for r in 0..=n {
        let sign = PiScalar::from_int(if r % 2 == 0 { 1 } else { -1 });
        let pis = PiScalar::pi_pow(pi_i * (r * datum.parity(j) as i64 + r * (r - 1) / 2));
        let binom = crate::scalars::qpi_binom_at(n, r as u32, datum.d_i(i), datum.parity(i));
        let mut w = vec![Letter { up, i }; (n - r) as usize];
        w.push(Letter { up, i: j });
        w.extend(std::iter::repeat_n(Letter { up, i }, r as usize));
        out.add_term(w, &(&sign * &pis) * &binom);
    }
    out
}

/// The sesquilinear form, evaluated through a memoized reduction to `f`.
///
/// Intermediate values are kept multiplied by `prod (1 - pi_c q_c^2)` over the
/// strands, which makes them Laurent polynomials.
pub struct CoveringForm<'a> {
    datum: &'a SuperCartanDatum,
    half: HalfQuantum<'a>,
    cache: DashMap<(Vec<Letter>, Weight), PiLaurent>,
}

impl<'a> CoveringForm<'a> {
    pub fn new(datum: &'a SuperCartanDatum) -> Self {
        Self { datum, half: HalfQuantum::new(datum), cache: DashMap::new() }
    }

    pub fn datum(&self) -> &SuperCartanDatum {
        self.datum
    }

    /// `<a, b>` times the strand denominator `prod (1 - pi_c q_c^2)`.
    pub fn cq_form_scaled(&self, a: &SignedWord, b: &SignedWord) -> PiLaurent {
        let datum = self.datum;
        if a.lambda != b.lambda || a.wt(datum) != b.wt(datum) {
            return PiLaurent::zero();
        }
        // move b onto the left of a, one letter at a time from the left
        let src = source_weights(datum, &b.letters, &b.lambda);
        let (mut deg, mut par) = (0, 0);
        let mut moved: Vec<Letter> = Vec::with_capacity(a.len() + b.len());
        for (k, l) in b.letters.iter().enumerate() {
            let nu = &src[k];
            let h = nu.h(l.i);
            if l.up {
                deg += datum.d_i(l.i) * (-1 - h);
                par += datum.parity_i_lambda(l.i, nu) as i64;
            } else {
                deg += datum.d_i(l.i) * (h - 1);
            }
            moved.push(l.flipped());
        }
        moved.reverse();
        moved.extend_from_slice(&a.letters);
        self.vacuum_scaled(&moved, &a.lambda).shift(deg, par)
    }

    /// `<w 1_lambda, 1_lambda>` times `prod_{up letters c} (1 - pi_c q_c^2)`
    /// for a word of weight zero.
    fn vacuum_scaled(&self, w: &[Letter], lambda: &Weight) -> PiLaurent {
        if w.is_empty() {
            return PiLaurent::one();
        }
        let key = (w.to_vec(), lambda.clone());
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let datum = self.datum;
        let value = match w.windows(2).rposition(|p| p[0].up && !p[1].up) {
            Some(k) => {
                let (i, j) = (w[k].i, w[k + 1].i);
                let mut swapped = w.to_vec();
                swapped.swap(k, k + 1);
                let mut acc = self.vacuum_scaled(&swapped, lambda).shift(0, (datum.parity(i) * datum.parity(j)) as i64);
                if i == j {
                    let mu = &source_weights(datum, w, lambda)[k + 1];
                    let (d, p) = (datum.d_i(i), datum.parity(i));
                    let bracket = qpi_int_laurent(mu.h(i)).subst(d, p).bar();
                    let mut shorter = w[..k].to_vec();
                    shorter.extend_from_slice(&w[k + 2..]);
                    let rest = self.vacuum_scaled(&shorter, lambda);
                    let factor = &bracket * &crate::scalars::geometric_denominator(d, p);
                    acc = &acc + &(&factor * &rest);
                }
                acc
            }
            None => self.ordered_vacuum_scaled(w, lambda),
        };
        self.cache.insert(key, value.clone());
        value
    }

    /// Ordered words `f_u e_v`: strip the down letters into the second slot
    /// and finish in `f`.
    fn ordered_vacuum_scaled(&self, w: &[Letter], lambda: &Weight) -> PiLaurent {
        let datum = self.datum;
        let downs = w.iter().take_while(|l| !l.up).count();
        let src = source_weights(datum, w, lambda);
        let (mut deg, mut par) = (0, 0);
        for k in 0..downs {
            let l = w[k];
            let mu = &src[k];
            deg += datum.d_i(l.i) * (mu.h(l.i) - 1);
            par += datum.parity_i_lambda(l.i, mu) as i64;
        }
        // stripping prepends to the second slot, so it reads e_{u_m} ... e_{u_1}
        let second: Vec<usize> = w[..downs].iter().map(|l| l.i).collect();
        // visual order e_{i_d} ... e_{i_1} pairs as theta_{i_1} ... theta_{i_d}
        let first: Vec<usize> = w[downs..].iter().rev().map(|l| l.i).collect();
        self.half.f_form_scaled(&first, &second).shift(deg, par)
    }

    pub fn cq_form(&self, a: &SignedWord, b: &SignedWord) -> PiScalar {
        let scaled = self.cq_form_scaled(a, b);
        if scaled.is_zero() {
            return PiScalar::zero();
        }
        &scaled.to_scalar() / &strand_denominator(self.datum, a, b).to_scalar()
    }

    /// Sesquilinear extension: antilinear in the first slot.
    pub fn cq_form_expr(&self, x: &UExpression, y: &UExpression) -> PiScalar {
        let mut acc = PiScalar::zero();
        for (a, c) in x.words() {
            for (b, d) in y.words() {
                let v = self.cq_form(&a, &b);
                if !v.is_zero() {
                    acc = &acc + &(&(&c.bar() * d) * &v);
                }
            }
        }
        acc
    }
}

/// `prod (1 - pi_c q_c^2)` over the strands joining `a` and `b`; the color
/// multiset of the strands is that of the up letters of `a` and the down
/// letters of `b`.
pub fn strand_denominator(datum: &SuperCartanDatum, a: &SignedWord, b: &SignedWord) -> PiLaurent {
    let mut acc = PiLaurent::one();
    for l in a.letters.iter().filter(|l| l.up).chain(b.letters.iter().filter(|l| !l.up)) {
        acc = &acc * &crate::scalars::geometric_denominator(datum.d_i(l.i), datum.parity(l.i));
    }
    acc
}

/// All words of length `len` in the letters `+i`, `-i`.
pub fn signed_words_of_length(rank: usize, len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..rank).flat_map(move |i| {
                    let w = w.clone();
                    [true, false].into_iter().map(move |up| {
                        let mut v = w.clone();
                        v.push(Letter { up, i });
                        v
                    })
                })
            })
            .collect();
    }
    out
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.up { '+' } else { '-' }, self.i)
    }
}
