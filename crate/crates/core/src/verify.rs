//! The acceptance checks, shared by the command line and the test suite.
//!
//! Every check aggregates one family of comparisons and records how many
//! cases it covered, or the first few failures.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cartan::{SuperCartanDatum, Weight};
use crate::covering::{
    apply_symmetry, divided_word, letters_wt, serre_expression, signed_words_of_length, CoveringForm, Letter,
    SignedWord, Symmetry, UExpression,
};
use crate::diagrams::lint::{lint_relation, shipped_catalog};
use crate::diagrams::{graphical_form, graphical_form_expr, graphical_form_scaled};
use crate::halfquantum::{f_form_oracle, serre_element, words_of_length, FExpression, HalfQuantum};
use crate::qhsa::{check_associativity, check_relation_suite, necks_sides, serre_sum, QuiverHecke};
use crate::scalars::PiScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub paper_ref: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    /// A check over `cases` comparisons, failing iff `failures` is nonempty.
    pub fn tally(name: impl Into<String>, paper_ref: &str, cases: usize, failures: &[String]) -> Self {
        let (status, detail) = if failures.is_empty() {
            (Status::Pass, format!("{cases} checked"))
        } else {
            let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
            (Status::Fail, format!("{} of {cases} failed; {}", failures.len(), shown.join("; ")))
        };
        Self { name: name.into(), paper_ref: paper_ref.into(), status, detail }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Sizes of the verification run.
#[derive(Clone, Debug)]
pub struct Bounds {
    /// Exhaustive bound on `|a| + |b|` for the two form algorithms.
    pub max_total: usize,
    /// Length of the sampled pairs beyond the exhaustive bound.
    pub sampled_total: usize,
    pub samples: usize,
    /// Word length bound for the `f`-form oracle.
    pub f_len: usize,
    pub qhsa_n: usize,
    pub triples: usize,
    /// Range of every pairing `<h_i, lambda>`.
    pub h_range: (i64, i64),
    /// Window of the graded-dimension identities.
    pub dim_window: (i64, i64),
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_total: 8,
            sampled_total: 10,
            samples: 200,
            f_len: 5,
            qhsa_n: 4,
            triples: 100,
            h_range: (-3, 3),
            dim_window: (-12, 12),
            seed: 2017,
        }
    }
}

pub fn presets() -> Vec<(&'static str, SuperCartanDatum)> {
    SuperCartanDatum::preset_names().map(|n| (n, SuperCartanDatum::preset(n).expect("preset"))).collect()
}

fn word(datum: &SuperCartanDatum, text: &str, h: i64) -> SignedWord {
    SignedWord::parse(datum, text, Weight(vec![h])).expect("well-formed word")
}

fn geometric(s: i64) -> PiScalar {
    (&PiScalar::one() - &PiScalar::monomial(2 * s, s)).inv().expect("invertible")
}

/// Criterion 1: the worked values of the form on odd `sl_2`.
pub fn example_values() -> Vec<Check> {
    const REF: &str = "Example after Theorem sesqui";
    let d = SuperCartanDatum::preset("odd-sl2").expect("preset");
    let form = CoveringForm::new(&d);
    let mut out = Vec::new();
    for h in -2..=2 {
        let both = |a: &str, b: &str, expect: &PiScalar| {
            let (a, b) = (word(&d, a, h), word(&d, b, h));
            let (x, y) = (form.cq_form(&a, &b), graphical_form(&d, &a, &b));
            let mut bad = Vec::new();
            if &x != expect {
                bad.push(format!("cq_form = {x}, expected {expect}"));
            }
            if &y != expect {
                bad.push(format!("graphical_form = {y}, expected {expect}"));
            }
            bad
        };
        let first = &PiScalar::q_pow(1 - h) * &geometric(1);
        out.push(Check::tally(format!("<e f 1, 1> at h={h}"), REF, 2, &both("+i -i", "", &first)));
        let second = &(&PiScalar::pi() + &PiScalar::q_pow(2)) * &geometric(1).pow(2);
        out.push(Check::tally(format!("<e f 1, f e 1> at h={h}"), REF, 2, &both("+i -i", "-i +i", &second)));

        let lambda = Weight(vec![h]);
        let mut bad = Vec::new();
        for r in 1..=3u32 {
            let expect = (1..=r as i64).fold(PiScalar::one(), |acc, s| &acc * &geometric(s));
            for up in [true, false] {
                let x = divided_word(&d, up, 0, r, &lambda);
                let (v, w) = (form.cq_form_expr(&x, &x), graphical_form_expr(&d, &x, &x));
                let name = if up { "e" } else { "f" };
                if v != expect {
                    bad.push(format!("cq_form of {name}^({r}) = {v}"));
                }
                if w != expect {
                    bad.push(format!("graphical_form of {name}^({r}) = {w}"));
                }
            }
        }
        out.push(Check::tally(format!("divided power norms at h={h}"), REF, 12, &bad));
    }
    out
}

fn render(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

fn random_word(rng: &mut ChaCha8Rng, rank: usize, len: usize) -> Vec<Letter> {
    (0..len).map(|_| Letter { up: rng.gen(), i: rng.gen_range(0..rank) }).collect()
}

fn random_weight(rng: &mut ChaCha8Rng, rank: usize, (lo, hi): (i64, i64)) -> Weight {
    Weight((0..rank).map(|_| rng.gen_range(lo..=hi)).collect())
}

/// A random pair of words with `|a| + |b| = total` and equal weights.
fn random_matched_pair(rng: &mut ChaCha8Rng, rank: usize, total: usize) -> (Vec<Letter>, Vec<Letter>) {
    loop {
        let la = rng.gen_range(0..=total);
        let a = random_word(rng, rank, la);
        let b = random_word(rng, rank, total - la);
        if letters_wt(rank, &a) == letters_wt(rank, &b) {
            return (a, b);
        }
    }
}

/// Criterion 2: the recursive form and the matching sum agree.
///
/// Pairs of different weight are skipped: both sides vanish on them by the
/// orthogonality of weight spaces.
pub fn sesqui(bounds: &Bounds) -> Vec<Check> {
    const REF: &str = "Theorem sesqui";
    let mut out = Vec::new();
    for (name, datum) in presets() {
        let form = CoveringForm::new(&datum);
        let words: Vec<Vec<Vec<Letter>>> =
            (0..=bounds.max_total).map(|l| signed_words_of_length(datum.rank(), l)).collect();
        let mut by_weight: Vec<BTreeMap<_, Vec<&Vec<Letter>>>> = Vec::new();
        for layer in &words {
            let mut m: BTreeMap<_, Vec<&Vec<Letter>>> = BTreeMap::new();
            for w in layer {
                m.entry(letters_wt(datum.rank(), w)).or_default().push(w);
            }
            by_weight.push(m);
        }
        let weights = datum.weights_in_box(bounds.h_range.0, bounds.h_range.1);
        let mut jobs = Vec::new();
        for lambda in &weights {
            for la in 0..=bounds.max_total {
                for lb in 0..=bounds.max_total - la {
                    jobs.push((lambda, la, lb));
                }
            }
        }
        let results: Vec<(usize, Vec<String>)> = jobs
            .par_iter()
            .map(|&(lambda, la, lb)| {
                let (mut cases, mut bad) = (0, Vec::new());
                for (wt, group_a) in &by_weight[la] {
                    let Some(group_b) = by_weight[lb].get(wt) else { continue };
                    for a in group_a {
                        let a = SignedWord::new((*a).clone(), lambda.clone());
                        for b in group_b {
                            let b = SignedWord::new((*b).clone(), lambda.clone());
                            cases += 1;
                            if form.cq_form_scaled(&a, &b) != graphical_form_scaled(&datum, &a, &b) {
                                bad.push(format!(
                                    "lambda=({lambda}) a=[{}] b=[{}]",
                                    render(&a.letters),
                                    render(&b.letters)
                                ));
                            }
                        }
                    }
                }
                (cases, bad)
            })
            .collect();
        let cases = results.iter().map(|r| r.0).sum();
        let bad: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
        out.push(Check::tally(
            format!("{name}: cq_form = graphical_form for |a|+|b| <= {}", bounds.max_total),
            REF,
            cases,
            &bad,
        ));

        let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
        let sample: Vec<(Weight, Vec<Letter>, Vec<Letter>)> = (0..bounds.samples)
            .map(|_| {
                let lambda = random_weight(&mut rng, datum.rank(), bounds.h_range);
                let (a, b) = random_matched_pair(&mut rng, datum.rank(), bounds.sampled_total);
                (lambda, a, b)
            })
            .collect();
        let bad: Vec<String> = sample
            .par_iter()
            .filter_map(|(lambda, a, b)| {
                let a = SignedWord::new(a.clone(), lambda.clone());
                let b = SignedWord::new(b.clone(), lambda.clone());
                (form.cq_form_scaled(&a, &b) != graphical_form_scaled(&datum, &a, &b))
                    .then(|| format!("lambda=({lambda}) a=[{}] b=[{}]", render(&a.letters), render(&b.letters)))
            })
            .collect();
        out.push(Check::tally(
            format!("{name}: cq_form = graphical_form on sampled pairs with |a|+|b| = {}", bounds.sampled_total),
            REF,
            sample.len(),
            &bad,
        ));
    }
    out
}

/// Criterion 3: the recursive `f`-form against the permutation formula.
pub fn f_oracle(bounds: &Bounds) -> Vec<Check> {
    const REF: &str = "Theorem sesqui, Claim 1";
    presets()
        .into_iter()
        .map(|(name, datum)| {
            let half = HalfQuantum::new(&datum);
            let mut cases = 0;
            let mut bad = Vec::new();
            for len in 0..=bounds.f_len {
                let words = words_of_length(datum.rank(), len);
                let pairs: Vec<(&Vec<usize>, &Vec<usize>)> =
                    words.iter().flat_map(|a| words.iter().map(move |b| (a, b))).collect();
                cases += pairs.len();
                bad.extend(
                    pairs
                        .par_iter()
                        .filter_map(|(a, b)| {
                            let (x, y) = (half.f_form(a, b), f_form_oracle(&datum, a, b));
                            (x != y).then(|| format!("{a:?} {b:?}: {x} vs {y}"))
                        })
                        .collect::<Vec<_>>(),
                );
            }
            Check::tally(format!("{name}: f_form = oracle for words of length <= {}", bounds.f_len), REF, cases, &bad)
        })
        .collect()
}

/// Criterion 4: the Serre elements lie in the radical of both forms.
pub fn serre_kernels(bounds: &Bounds) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, datum) in presets() {
        let rank = datum.rank();
        let half = HalfQuantum::new(&datum);
        let form = CoveringForm::new(&datum);
        for i in 0..rank {
            for j in (0..rank).filter(|&j| j != i) {
                let probe_len = (datum.dij(i, j) + 3) as usize;
                let s = serre_element(&datum, i, j).expect("distinct indices");
                let mut cases = 0;
                let mut bad = Vec::new();
                for len in 0..=probe_len {
                    for w in words_of_length(rank, len) {
                        let p = FExpression::word(w.clone());
                        for (x, y) in [(&s, &p), (&p, &s)] {
                            cases += 1;
                            let v = half.f_form_expr(x, y);
                            if !v.is_zero() {
                                bad.push(format!("probe {w:?} pairs to {v}"));
                            }
                        }
                    }
                }
                out.push(Check::tally(format!("{name}: Serre element in f for ({i},{j})"), "(serres)", cases, &bad));

                let weights = datum.weights_in_box(bounds.h_range.0, bounds.h_range.1);
                let results: Vec<(usize, Vec<String>)> = weights
                    .par_iter()
                    .map(|lambda| {
                        let (mut cases, mut bad) = (0, Vec::new());
                        for up in [true, false] {
                            let x = serre_expression(&datum, up, i, j, lambda);
                            let wt = letters_wt(rank, x.terms.keys().next().expect("nonempty"));
                            for len in 0..=probe_len {
                                for w in signed_words_of_length(rank, len) {
                                    if letters_wt(rank, &w) != wt {
                                        continue;
                                    }
                                    let p = UExpression::word(&SignedWord::new(w.clone(), lambda.clone()));
                                    for (l, r) in [(&x, &p), (&p, &x)] {
                                        cases += 1;
                                        let v = form.cq_form_expr(l, r);
                                        if !v.is_zero() {
                                            bad.push(format!("lambda=({lambda}) probe [{}] pairs to {v}", render(&w)));
                                        }
                                    }
                                }
                            }
                        }
                        (cases, bad)
                    })
                    .collect();
                let cases = results.iter().map(|r| r.0).sum();
                let bad: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
                out.push(Check::tally(
                    format!("{name}: quantum Serre relations for ({i},{j})"),
                    "(cwr2)-(cwr3)",
                    cases,
                    &bad,
                ));
            }
        }
    }
    out
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> PiScalar {
    let c = PiScalar::from_int(rng.gen_range(1..=3) * if rng.gen() { 1 } else { -1 });
    &c * &PiScalar::monomial(rng.gen_range(-3..=3), rng.gen_range(0..=1))
}

/// A random combination of up to three rearrangements of one word.
fn random_expression(rng: &mut ChaCha8Rng, datum: &SuperCartanDatum, h_range: (i64, i64)) -> UExpression {
    let lambda = random_weight(rng, datum.rank(), h_range);
    let len = rng.gen_range(1..=4);
    let base = random_word(rng, datum.rank(), len);
    let mut x = UExpression::zero(lambda);
    for _ in 0..3 {
        let mut w = base.clone();
        w.shuffle(rng);
        x.add_term(w, random_coefficient(rng));
    }
    x
}

/// Criterion 5: involutions and the symmetry property of the form.
pub fn symmetries(bounds: &Bounds) -> Vec<Check> {
    let mut out = Vec::new();
    for (name, datum) in presets() {
        let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
        let exprs: Vec<UExpression> =
            (0..bounds.samples).map(|_| random_expression(&mut rng, &datum, bounds.h_range)).collect();
        let twice = |s: Symmetry, t: Symmetry, label: &str, paper_ref: &str| {
            let bad: Vec<String> = exprs
                .iter()
                .filter(|x| apply_symmetry(&datum, s, &apply_symmetry(&datum, t, x)) != **x)
                .map(|x| format!("{x:?}"))
                .collect();
            Check::tally(format!("{name}: {label}"), paper_ref, exprs.len(), &bad)
        };
        out.push(twice(Symmetry::Omega, Symmetry::Omega, "omega^2 = id", "(omega)"));
        out.push(twice(Symmetry::Psi, Symmetry::Psi, "psi^2 = id", "(psi)"));
        out.push(twice(Symmetry::Rho, Symmetry::Rho, "rho^2 = id", "(rho)"));
        out.push(twice(Symmetry::Star, Symmetry::Shriek, "* after ! = id", "(marry1)-(marry2)"));

        let form = CoveringForm::new(&datum);
        let pairs: Vec<(Weight, Vec<Letter>, Vec<Letter>)> = (0..bounds.samples)
            .map(|_| {
                let lambda = random_weight(&mut rng, datum.rank(), bounds.h_range);
                let total = 2 * rng.gen_range(0..=4);
                let (a, b) = loop {
                    let (a, b) = random_matched_pair(&mut rng, datum.rank(), total);
                    if a.len() <= 4 && b.len() <= 4 {
                        break (a, b);
                    }
                };
                (lambda, a, b)
            })
            .collect();
        let bad: Vec<String> = pairs
            .par_iter()
            .filter_map(|(lambda, a, b)| {
                let x = UExpression::word(&SignedWord::new(a.clone(), lambda.clone()));
                let y = UExpression::word(&SignedWord::new(b.clone(), lambda.clone()));
                let lhs = form.cq_form_expr(&x, &y);
                let rhs = form.cq_form_expr(
                    &apply_symmetry(&datum, Symmetry::Psi, &y),
                    &apply_symmetry(&datum, Symmetry::Psi, &x),
                );
                (lhs != rhs).then(|| format!("lambda=({lambda}) a=[{}] b=[{}]", render(a), render(b)))
            })
            .collect();
        out.push(Check::tally(format!("{name}: <x,y> = <psi(y),psi(x)>"), "Theorem clark (4)", pairs.len(), &bad));
    }
    out
}

/// Relations, nilHecke identities and associativity in `H_n` for one datum,
/// one check per relation family.
pub fn qhsa_checks(name: &str, datum: &SuperCartanDatum, n: usize, triples: usize, seed: u64) -> Vec<Check> {
    let mut groups: BTreeMap<String, (usize, Vec<String>)> = BTreeMap::new();
    let mut suite = check_relation_suite(datum, n);
    let half = triples / 2;
    suite.extend(check_associativity(datum, n.min(3), triples - half, seed));
    suite.extend(check_associativity(datum, n, half, seed + 1));
    for c in suite {
        let g = groups.entry(c.relation.clone()).or_default();
        g.0 += 1;
        if !c.passed {
            g.1.push(format!("{}: {}", c.instance, c.detail));
        }
    }
    groups
        .into_iter()
        .map(|(relation, (cases, bad))| {
            let paper_ref = match relation.as_str() {
                "now" | "qha" | "qhalast" | "upcross1" | "upcross2" => format!("({relation})"),
                "nilhecke" | "divided power" => "nilHecke elements D_r".to_string(),
                _ => "normal form".to_string(),
            };
            Check::tally(format!("{name}: {relation}, n <= {n}"), &paper_ref, cases, &bad)
        })
        .collect()
}

/// Criterion 6: the quiver Hecke suite on every preset.
pub fn qhsa(bounds: &Bounds) -> Vec<Check> {
    presets()
        .iter()
        .flat_map(|(name, datum)| qhsa_checks(name, datum, bounds.qhsa_n, bounds.triples, bounds.seed))
        .collect()
}

/// Criterion 7: graded dimensions of `H_n e(i^n)` against divided powers.
pub fn necks(bounds: &Bounds) -> Vec<Check> {
    let (lo, hi) = bounds.dim_window;
    let mut out = Vec::new();
    for (name, datum) in presets() {
        let qh = QuiverHecke::new(&datum);
        for i in 0..datum.rank() {
            let bad: Vec<String> = (1..=3usize)
                .into_par_iter()
                .filter_map(|n| match necks_sides(&qh, i, n, lo, hi) {
                    Ok((l, r)) if l == r => None,
                    Ok((l, r)) => Some(format!("n={n}: {l} vs {r}")),
                    Err(e) => Some(format!("n={n}: {e}")),
                })
                .collect();
            out.push(Check::tally(
                format!("{name}: dim H_n e(i^n) for index {i}, n <= 3, window [{lo},{hi}]"),
                "Lemma necks",
                3,
                &bad,
            ));
        }
    }
    out
}

/// Criterion 8: the graded Serre sum vanishes.
pub fn categorified_serre(bounds: &Bounds) -> Vec<Check> {
    let (lo, hi) = bounds.dim_window;
    [("sl3", 0, 1), ("odd-b2", 0, 1)]
        .into_iter()
        .map(|(name, i, j)| {
            let datum = SuperCartanDatum::preset(name).expect("preset");
            let qh = QuiverHecke::new(&datum);
            let n = datum.dij(i, j) + 1;
            let bad = match serre_sum(&qh, i, j, lo, hi) {
                Ok(s) if s.is_zero() => vec![],
                Ok(s) => vec![format!("sum = {s}")],
                Err(e) => vec![e.to_string()],
            };
            Check::tally(
                format!("{name}: Serre sum for ({i},{j}), n = {n}, window [{lo},{hi}]"),
                "Prop qserre",
                1,
                &bad,
            )
        })
        .collect()
}

/// Homogeneity of every catalog entry on the given datums.
pub fn lint_checks(datums: &[(&str, SuperCartanDatum)], h_range: (i64, i64)) -> Vec<Check> {
    shipped_catalog()
        .par_iter()
        .map(|entry| {
            let (mut cases, mut bad) = (0, Vec::new());
            for (name, datum) in datums {
                for lambda in datum.weights_in_box(h_range.0, h_range.1) {
                    match lint_relation(datum, entry, &lambda) {
                        Ok(r) => {
                            cases += r.instances;
                            bad.extend(r.mismatches.into_iter().map(|m| format!("{name}: {m}")));
                        }
                        Err(e) => bad.push(format!("{name}: {e}")),
                    }
                }
            }
            Check::tally(&entry.name, &entry.paper_ref, cases, &bad)
        })
        .collect()
}

/// Criterion 9: the relation catalog on every preset.
pub fn lint(h_range: (i64, i64)) -> Vec<Check> {
    lint_checks(&presets(), h_range)
}

/// Every criterion in order; the Serre sum only when `full`.
pub fn run_all(bounds: &Bounds, full: bool) -> Vec<Check> {
    let mut out = example_values();
    out.extend(sesqui(bounds));
    out.extend(f_oracle(bounds));
    out.extend(serre_kernels(bounds));
    out.extend(symmetries(bounds));
    out.extend(qhsa(bounds));
    out.extend(necks(bounds));
    if full {
        out.extend(categorified_serre(bounds));
    }
    out.extend(lint(bounds.h_range));
    out
}
