//! The quiver Hecke superalgebra `H_n` over `Q`.
//!
//! Strands are numbered from the right edge starting at 0 (strand `r` of the
//! usual right-to-left numbering sits at position `r - 1`). A basis word is
//! `tau_w x_0^{k_0} ... x_{n-1}^{k_{n-1}} e(i)`: crossings on top, read along
//! the lexicographically smallest reduced word, then dots with position 0
//! topmost, then the idempotent at the bottom.

pub mod rank;
pub mod suite;
pub mod words;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use dashmap::DashMap;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cartan::SuperCartanDatum;
use crate::Error;
use words::{apply_move, is_reduced, lexmin_word, path_to, permutation, Move};

pub use rank::{graded_rank, min_degree, necks_sides, serre_sum, serre_terms};
pub use suite::{check_associativity, check_relation_suite, RelationCheck};

/// A basis word `tau_w x^k e(colors)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QHWord {
    /// Colors at the bottom, indexed by position from the right.
    pub colors: Vec<usize>,
    /// Crossing positions from top to bottom.
    pub crossings: Vec<u8>,
    pub dots: Vec<u32>,
}

impl QHWord {
    pub fn idempotent(colors: &[usize]) -> Self {
        Self { colors: colors.to_vec(), crossings: Vec::new(), dots: vec![0; colors.len()] }
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    /// Colors along the top edge.
    pub fn top_colors(&self) -> Vec<usize> {
        let mut c = self.colors.clone();
        for &p in self.crossings.iter().rev() {
            c.swap(p as usize, p as usize + 1);
        }
        c
    }

    pub fn grade(&self, datum: &SuperCartanDatum) -> (i64, u8) {
        let (mut deg, mut par) = (0i64, 0u8);
        for (p, &k) in self.dots.iter().enumerate() {
            let c = self.colors[p];
            deg += 2 * datum.d_i(c) * k as i64;
            par += datum.parity(c) * (k % 2) as u8;
        }
        let mut below = self.colors.clone();
        for &p in self.crossings.iter().rev() {
            let (d, e) = cross_grade(datum, &below, p as usize);
            deg += d;
            par += e;
            below.swap(p as usize, p as usize + 1);
        }
        (deg, par % 2)
    }
}

/// Degree and parity of a crossing at `p` over the frontier `below`.
fn cross_grade(datum: &SuperCartanDatum, below: &[usize], p: usize) -> (i64, u8) {
    let (i, j) = (below[p + 1], below[p]);
    (datum.d_i(i) * datum.dij(i, j), datum.parity(i) * datum.parity(j))
}

impl fmt::Display for QHWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.crossings {
            write!(f, "t{} ", p + 1)?;
        }
        for (p, k) in self.dots.iter().enumerate() {
            if *k > 0 {
                write!(f, "x{}^{} ", p + 1, k)?;
            }
        }
        write!(f, "e(")?;
        for c in self.colors.iter().rev() {
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub type Terms = BTreeMap<QHWord, BigRational>;

fn add_into(acc: &mut Terms, w: QHWord, c: BigRational) {
    if c.is_zero() {
        return;
    }
    let entry = acc.entry(w.clone()).or_insert_with(BigRational::zero);
    *entry += c;
    if entry.is_zero() {
        acc.remove(&w);
    }
}

fn add_scaled(acc: &mut Terms, src: &Terms, c: &BigRational) {
    for (w, v) in src {
        add_into(acc, w.clone(), v * c);
    }
}

fn sign(negative: bool) -> BigRational {
    if negative {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

/// A linear combination of basis words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QHElement {
    pub terms: Terms,
}

impl QHElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: QHWord) -> Self {
        Self { terms: [(w, BigRational::one())].into() }
    }

    pub fn idempotent(colors: &[usize]) -> Self {
        Self::word(QHWord::idempotent(colors))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        add_scaled(&mut terms, &rhs.terms, &BigRational::one());
        Self { terms }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        add_scaled(&mut terms, &rhs.terms, &-BigRational::one());
        Self { terms }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut terms = Terms::new();
        add_scaled(&mut terms, &self.terms, c);
        Self { terms }
    }

    /// Degree and parity when homogeneous.
    pub fn grade(&self, datum: &SuperCartanDatum) -> Option<(i64, u8)> {
        let mut grades = self.terms.keys().map(|w| w.grade(datum));
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }
}

impl fmt::Display for QHElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {w}")?;
        }
        Ok(())
    }
}

/// A generator applied at some height: a dot or a crossing at a position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    Dot(u8),
    Cross(u8),
}

type PathKey = (Vec<u8>, Option<u8>);

/// The rewriting engine for one datum.
pub struct QuiverHecke {
    datum: SuperCartanDatum,
    cross_memo: DashMap<(Vec<u8>, u8, Vec<usize>), Arc<Terms>>,
    paths: DashMap<PathKey, Arc<Vec<Move>>>,
}

impl QuiverHecke {
    pub fn new(datum: &SuperCartanDatum) -> Self {
        Self { datum: datum.clone(), cross_memo: DashMap::new(), paths: DashMap::new() }
    }

    pub fn datum(&self) -> &SuperCartanDatum {
        &self.datum
    }

    fn par(&self, c: usize) -> u8 {
        self.datum.parity(c)
    }

    /// `x^m * x^k` for dot vectors on the frontier `colors`, with its sign.
    fn dot_product(&self, colors: &[usize], m: &[u32], k: &[u32]) -> (Vec<u32>, bool) {
        let mut odd = 0u64;
        for s in 0..k.len() {
            if k[s].is_multiple_of(2) || self.par(colors[s]) == 0 {
                continue;
            }
            for t in s + 1..m.len() {
                if m[t] % 2 == 1 && self.par(colors[t]) == 1 {
                    odd += 1;
                }
            }
        }
        let dots = m.iter().zip(k).map(|(a, b)| a + b).collect();
        (dots, odd % 2 == 1)
    }

    fn times_dots(&self, terms: &Terms, k: &[u32]) -> Terms {
        let mut out = Terms::new();
        for (w, c) in terms {
            let (dots, neg) = self.dot_product(&w.colors, &w.dots, k);
            let nw = QHWord { dots, ..w.clone() };
            add_into(&mut out, nw, if neg { -c.clone() } else { c.clone() });
        }
        out
    }

    fn unit_dot(n: usize, p: usize, count: u32) -> Vec<u32> {
        let mut k = vec![0; n];
        k[p] = count;
        k
    }

    /// Right multiplication by one generator placed at the bottom.
    pub fn times_gen(&self, terms: &Terms, g: Gen) -> Terms {
        match g {
            Gen::Dot(p) => {
                let mut out = Terms::new();
                for (w, c) in terms {
                    let (dots, neg) = self.dot_product(&w.colors, &w.dots, &Self::unit_dot(w.n(), p as usize, 1));
                    add_into(&mut out, QHWord { dots, ..w.clone() }, if neg { -c.clone() } else { c.clone() });
                }
                out
            }
            Gen::Cross(p) => {
                let mut out = Terms::new();
                for (w, c) in terms {
                    add_scaled(&mut out, &self.word_times_cross(w, p as usize), c);
                }
                out
            }
        }
    }

    /// `x^k T_p` over the frontier `above`, as terms `(coef, crossing kept, dots)`.
    /// Kept crossings sit above the returned dots, on the swapped frontier.
    fn dots_through_cross(&self, above: &[usize], k: &[u32], p: usize) -> Vec<(BigRational, bool, Vec<u32>)> {
        let n = above.len();
        let mut below = above.to_vec();
        below.swap(p, p + 1);
        let (i, j) = (below[p + 1], below[p]);
        let t_par = self.par(i) * self.par(j);
        let eps = t_par == 1;
        let delta = i == j;

        // dots below the pair pass the crossing first, those above pass it last
        let odd_dots = |range: &mut dyn Iterator<Item = usize>| -> bool {
            t_par == 1 && range.map(|s| k[s] * self.par(above[s]) as u32).sum::<u32>() % 2 == 1
        };
        let lower_neg = odd_dots(&mut (p + 2..n));
        let upper_neg = odd_dots(&mut (0..p));

        let local = self.local_slide(k[p], k[p + 1], eps, delta, self.par(i) == 1 && self.par(j) == 1);
        let mut out = Vec::new();
        for (c, kept, a, b) in local {
            let mut dots = k.to_vec();
            dots[p] = a;
            dots[p + 1] = b;
            let neg = lower_neg ^ (kept && upper_neg);
            out.push((if neg { -c } else { c }, kept, dots));
        }
        out
    }

    /// `X_p^a X_{p+1}^b T_p` as terms `(coef, crossing kept, a', b')`, the
    /// result being `T_p X_p^{a'} X_{p+1}^{b'}` or `X_p^{a'} X_{p+1}^{b'}`.
    /// `odd_pair` says both strands are odd, so dots on them anticommute.
    fn local_slide(
        &self,
        a: u32,
        b: u32,
        eps: bool,
        delta: bool,
        odd_pair: bool,
    ) -> Vec<(BigRational, bool, u32, u32)> {
        if a == 0 && b == 0 {
            return vec![(BigRational::one(), true, 0, 0)];
        }
        let e = sign(eps);
        let mut out: Vec<(BigRational, bool, u32, u32)> = Vec::new();
        if b > 0 {
            // X_{p+1} T = eps T X_p + delta
            for (c, kept, a2, b2) in self.local_slide(a, b - 1, eps, delta, odd_pair) {
                // append X_p at the bottom and move it above the X_{p+1} block
                let neg = odd_pair && b2 % 2 == 1;
                out.push((c * &e * sign(neg), kept, a2 + 1, b2));
            }
            if delta {
                out.push((BigRational::one(), false, a, b - 1));
            }
        } else {
            // X_p T = eps (T X_{p+1} - delta)
            for (c, kept, a2, b2) in self.local_slide(a - 1, 0, eps, delta, odd_pair) {
                out.push((c * &e, kept, a2, b2 + 1));
            }
            if delta {
                out.push((-e.clone(), false, a - 1, 0));
            }
        }
        out
    }

    fn word_times_cross(&self, w: &QHWord, p: usize) -> Terms {
        let mut below = w.colors.clone();
        below.swap(p, p + 1);
        let mut out = Terms::new();
        for (c, kept, dots) in self.dots_through_cross(&w.colors, &w.dots, p) {
            if kept {
                let base = self.crossings_times_cross(&w.crossings, p as u8, &below);
                add_scaled(&mut out, &self.times_dots(&base, &dots), &c);
            } else {
                add_into(&mut out, QHWord { colors: w.colors.clone(), crossings: w.crossings.clone(), dots }, c);
            }
        }
        out
    }

    /// `tau_word T_p` on the bottom frontier `below`, `word` being reduced.
    fn crossings_times_cross(&self, word: &[u8], p: u8, below: &[usize]) -> Terms {
        let key = (word.to_vec(), p, below.to_vec());
        if let Some(hit) = self.cross_memo.get(&key) {
            return (**hit).clone();
        }
        let n = below.len();
        let mut full = word.to_vec();
        full.push(p);
        let result = if is_reduced(n, &full) {
            let target = lexmin_word(&permutation(n, &full));
            let moves = self.path(&full, None, &target);
            let (main_sign, mut acc) = self.follow(&mut full, &moves, below);
            add_into(&mut acc, QHWord { colors: below.to_vec(), crossings: full, dots: vec![0; n] }, main_sign);
            acc
        } else {
            // rewrite `word` so that it ends with `p`, then resolve the square
            let mut upper = word.to_vec();
            let mut above_p = below.to_vec();
            above_p.swap(p as usize, p as usize + 1);
            let moves = self.path(&upper, Some(p), &[]);
            let mut acc = Terms::new();
            let (main_sign, corrections) = self.follow(&mut upper, &moves, &above_p);
            // corrections still need the trailing crossing
            let lowered = self.times_gen(&corrections, Gen::Cross(p));
            add_scaled(&mut acc, &lowered, &BigRational::one());
            upper.pop();
            let rest = self.now_rhs(below, p as usize);
            for (c, dots) in rest {
                let gens: Vec<Gen> = upper
                    .iter()
                    .map(|&x| Gen::Cross(x))
                    .chain(
                        dots.iter().enumerate().flat_map(|(s, &k)| std::iter::repeat_n(Gen::Dot(s as u8), k as usize)),
                    )
                    .collect();
                add_scaled(&mut acc, &self.eval(&gens, below), &(c * &main_sign));
            }
            acc
        };
        self.cross_memo.insert(key, Arc::new(result.clone()));
        result
    }

    /// Moves from `word` to `target`, or to a word ending in `end` when given.
    fn path(&self, word: &[u8], end: Option<u8>, target: &[u8]) -> Arc<Vec<Move>> {
        let key = (word.to_vec(), end);
        if let Some(hit) = self.paths.get(&key) {
            return hit.clone();
        }
        let moves = match end {
            Some(e) => path_to(word, |w| w.last() == Some(&e)),
            None => path_to(word, |w| w == target),
        }
        .expect("reduced words are connected by braid moves");
        let moves = Arc::new(moves);
        self.paths.insert(key, moves.clone());
        moves
    }

    /// Applies `moves` to `word` over the bottom frontier `below`. Returns the
    /// sign picked up by the main term and the correction terms.
    fn follow(&self, word: &mut [u8], moves: &[Move], below: &[usize]) -> (BigRational, Terms) {
        let mut main = BigRational::one();
        let mut acc = Terms::new();
        for &m in moves {
            match m {
                Move::Commute(k) => {
                    let frontier = frontier_below(below, &word[k + 2..]);
                    let pa = cross_grade(&self.datum, &frontier, word[k] as usize).1;
                    let pb = cross_grade(&self.datum, &frontier, word[k + 1] as usize).1;
                    if pa * pb == 1 {
                        main = -main;
                    }
                }
                Move::Braid(k) => {
                    let frontier = frontier_below(below, &word[k + 3..]);
                    let (a, b) = (word[k], word[k + 1]);
                    let q = a.min(b) as usize;
                    // T(q+1) T(q) T(q+1) = T(q) T(q+1) T(q) + rhs
                    let direction = if a > b { BigRational::one() } else { -BigRational::one() };
                    for (c, dots) in self.braid_rhs(&frontier, q) {
                        let gens: Vec<Gen> = word[..k]
                            .iter()
                            .map(|&x| Gen::Cross(x))
                            .chain(dots.iter().flat_map(|&(s, cnt)| std::iter::repeat_n(Gen::Dot(s), cnt as usize)))
                            .chain(word[k + 3..].iter().map(|&x| Gen::Cross(x)))
                            .collect();
                        add_scaled(&mut acc, &self.eval(&gens, below), &(c * &direction * &main));
                    }
                }
            }
            apply_move(word, m);
        }
        (main, acc)
    }

    /// Right side of the braid relation at positions `q..q + 3`, as dot
    /// strings `(position, count)` from top to bottom.
    fn braid_rhs(&self, below: &[usize], q: usize) -> Vec<(BigRational, Vec<(u8, u32)>)> {
        let (i, j, k) = (below[q + 2], below[q + 1], below[q]);
        if i != k || i == j {
            return Vec::new();
        }
        let pi = self.par(i) as i64;
        let pj = self.par(j) as i64;
        let dij = self.datum.dij(i, j);
        let dji = self.datum.dij(j, i);
        let mut out = Vec::new();
        for s in 0..dij {
            let r = dij - 1 - s;
            let c = self.datum.t(i, j) * sign((pi * (pj + s)) % 2 == 1);
            out.push((c, vec![((q + 2) as u8, r as u32), (q as u8, s as u32)]));
        }
        for pp in 1..dij {
            for qq in 1..dji {
                let v = self.datum.s(i, j, pp, qq);
                if v.is_zero() {
                    continue;
                }
                for s in 0..pp {
                    let r = pp - 1 - s;
                    let c = &v * sign((pi * (pj + s)) % 2 == 1);
                    out.push((c, vec![((q + 2) as u8, r as u32), ((q + 1) as u8, qq as u32), (q as u8, s as u32)]));
                }
            }
        }
        out
    }

    /// Right side of the squared crossing at `p` over `below`, as dot vectors.
    fn now_rhs(&self, below: &[usize], p: usize) -> Vec<(BigRational, Vec<u32>)> {
        let n = below.len();
        let (i, j) = (below[p + 1], below[p]);
        if i == j {
            return Vec::new();
        }
        let dij = self.datum.dij(i, j);
        let dji = self.datum.dij(j, i);
        if dij == 0 {
            return vec![(self.datum.t(i, j), vec![0; n])];
        }
        let mut out = vec![
            (self.datum.t(i, j), Self::unit_dot(n, p + 1, dij as u32)),
            (self.datum.t(j, i), Self::unit_dot(n, p, dji as u32)),
        ];
        for pp in 1..dij {
            for qq in 1..dji {
                let v = self.datum.s(i, j, pp, qq);
                if !v.is_zero() {
                    let mut k = vec![0; n];
                    k[p + 1] = pp as u32;
                    k[p] = qq as u32;
                    // left dots above right dots is already the basis order
                    // only when p + 1 comes after p, so reorder
                    let neg = self.par(i) * self.par(j) == 1 && (pp * qq) % 2 == 1;
                    out.push((v * sign(neg), k));
                }
            }
        }
        out
    }

    /// Evaluates a generator word read from top to bottom over the bottom
    /// frontier `below`.
    pub fn eval(&self, gens: &[Gen], below: &[usize]) -> Terms {
        let mut top = below.to_vec();
        for g in gens.iter().rev() {
            if let Gen::Cross(p) = g {
                top.swap(*p as usize, *p as usize + 1);
            }
        }
        let mut acc: Terms = [(QHWord::idempotent(&top), BigRational::one())].into();
        for &g in gens {
            acc = self.times_gen(&acc, g);
            if acc.is_empty() {
                break;
            }
        }
        acc
    }

    /// The generator string of a basis word, top to bottom.
    pub fn gens_of(w: &QHWord) -> Vec<Gen> {
        let mut out: Vec<Gen> = w.crossings.iter().map(|&p| Gen::Cross(p)).collect();
        for (p, &k) in w.dots.iter().enumerate() {
            out.extend(std::iter::repeat_n(Gen::Dot(p as u8), k as usize));
        }
        out
    }

    /// `x * y`, with `x` stacked on top of `y`.
    pub fn multiply(&self, x: &QHElement, y: &QHElement) -> QHElement {
        let mut out = Terms::new();
        for (w, c) in &y.terms {
            let top = w.top_colors();
            let left: Terms =
                x.terms.iter().filter(|(v, _)| v.colors == top).map(|(v, d)| (v.clone(), d.clone())).collect();
            if left.is_empty() {
                continue;
            }
            let mut acc = left;
            for g in Self::gens_of(w) {
                acc = self.times_gen(&acc, g);
            }
            add_scaled(&mut out, &acc, c);
        }
        QHElement { terms: out }
    }

    /// Rewrites a generator word to normal form.
    pub fn normal_form(&self, gens: &[Gen], below: &[usize]) -> QHElement {
        QHElement { terms: self.eval(gens, below) }
    }

    /// The normal form of an arbitrary element, recomputed from its words.
    pub fn renormalize(&self, x: &QHElement) -> QHElement {
        let mut out = Terms::new();
        for (w, c) in &x.terms {
            add_scaled(&mut out, &self.eval(&Self::gens_of(w), &w.colors), c);
        }
        QHElement { terms: out }
    }

    /// `D_r = -(-1)^{|i|} T_r X_r` on `n` strands of color `i`, with `r`
    /// counted from 1.
    pub fn nilhecke_d(&self, i: usize, n: usize, r: usize) -> QHElement {
        let colors = vec![i; n];
        let c = if self.par(i) == 1 { BigRational::one() } else { -BigRational::one() };
        self.normal_form(&[Gen::Cross((r - 1) as u8), Gen::Dot((r - 1) as u8)], &colors).scale(&c)
    }

    /// `D_w` along the given reduced word (positions from 0, top to bottom).
    pub fn nilhecke_dw(&self, i: usize, n: usize, word: &[u8]) -> QHElement {
        let mut acc = QHElement::idempotent(&vec![i; n]);
        for &p in word {
            acc = self.multiply(&acc, &self.nilhecke_d(i, n, p as usize + 1));
        }
        acc
    }

    /// The divided-power idempotent `D_{w_0}` on `n` strands of color `i`.
    pub fn nilhecke_idempotent(&self, i: usize, n: usize) -> QHElement {
        let w0: Vec<u8> = (0..n as u8).rev().collect();
        self.nilhecke_dw(i, n, &lexmin_word(&w0))
    }

    /// `1_{i^(r)} (x) 1_j (x) 1_{i^(s)}` in `H_{r+s+1}`, left factor leftmost.
    pub fn serre_idempotent(&self, i: usize, j: usize, r: usize, s: usize) -> QHElement {
        let n = r + s + 1;
        let mut colors = vec![i; n];
        colors[s] = j;
        let mut acc = QHElement::idempotent(&colors);
        let block = |len: usize, offset: usize| -> Vec<u8> {
            let w0: Vec<u8> = (0..len as u8).rev().collect();
            lexmin_word(&w0).into_iter().map(|p| p + offset as u8).collect()
        };
        for p in block(s, 0).into_iter().chain(block(r, s + 1)) {
            let sign = if self.par(i) == 1 { BigRational::one() } else { -BigRational::one() };
            let d = self.normal_form(&[Gen::Cross(p), Gen::Dot(p)], &colors).scale(&sign);
            acc = self.multiply(&acc, &d);
        }
        acc
    }

    /// Checks `x * x == x`.
    pub fn check_idempotent(&self, x: &QHElement) -> Result<(), Error> {
        if self.multiply(x, x) == *x {
            Ok(())
        } else {
            Err(Error::Invalid("element is not idempotent".into()))
        }
    }

    pub fn coefficient_bound(x: &QHElement) -> BigRational {
        x.terms.values().map(|c| c.abs()).fold(BigRational::zero(), |a, b| if b > a { b } else { a })
    }
}

/// The frontier below the crossings `lower` (top to bottom) sitting over `below`.
fn frontier_below(below: &[usize], lower: &[u8]) -> Vec<usize> {
    let mut f = below.to_vec();
    for &p in lower.iter().rev() {
        f.swap(p as usize, p as usize + 1);
    }
    f
}
