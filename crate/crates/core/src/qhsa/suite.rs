//! Relation checks by rewriting both sides to normal form.

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::words::{all_permutations, lexmin_word};
use super::{Gen, QHElement, QHWord, QuiverHecke};
use crate::cartan::SuperCartanDatum;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: String,
    pub instance: String,
    pub passed: bool,
    pub detail: String,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn signed(neg: bool) -> BigRational {
    if neg {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

fn dots(p: usize, k: i64) -> impl Iterator<Item = Gen> {
    std::iter::repeat_n(Gen::Dot(p as u8), k.max(0) as usize)
}

fn word_name(colors: &[usize]) -> String {
    colors.iter().rev().map(|c| c.to_string()).collect::<Vec<_>>().join("")
}

/// Every color word of length `n`, position 0 first.
pub fn color_words(rank: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| (0..rank).map(move |c| [w.clone(), vec![c]].concat())).collect();
    }
    out
}

struct Recorder<'a> {
    qh: &'a QuiverHecke,
    out: Vec<RelationCheck>,
}

impl Recorder<'_> {
    fn lin(&self, parts: &[(BigRational, Vec<Gen>)], colors: &[usize]) -> QHElement {
        parts.iter().fold(QHElement::zero(), |acc, (c, g)| acc.add(&self.qh.normal_form(g, colors).scale(c)))
    }

    fn check(&mut self, relation: &str, instance: String, lhs: QHElement, rhs: QHElement) {
        let passed = lhs == rhs;
        let detail = if passed { String::new() } else { format!("lhs = {lhs}; rhs = {rhs}") };
        self.out.push(RelationCheck { relation: relation.into(), instance, passed, detail });
    }
}

/// Checks the defining relations on every color word of length `2..=n`, the
/// dotted crossing relations for dot powers up to 4, and the nilHecke
/// relations of the elements `D_r` for `n` strands of each color.
pub fn check_relation_suite(datum: &SuperCartanDatum, n: usize) -> Vec<RelationCheck> {
    let qh = QuiverHecke::new(datum);
    let mut rec = Recorder { qh: &qh, out: Vec::new() };
    let d = datum;
    for m in 2..=n {
        for colors in color_words(d.rank(), m) {
            let name = word_name(&colors);
            for p in 0..m - 1 {
                let (i, j) = (colors[p + 1], colors[p]);
                let (t, x) = (Gen::Cross(p as u8), |s: usize| Gen::Dot(s as u8));
                let inst = format!("e({name}) at strands {},{}", p + 1, p + 2);

                // squared crossing
                let lhs = qh.normal_form(&[t, t], &colors);
                let mut rhs: Vec<(BigRational, Vec<Gen>)> = Vec::new();
                if i != j {
                    let (dij, dji) = (d.dij(i, j), d.dij(j, i));
                    if dij == 0 {
                        rhs.push((d.t(i, j), vec![]));
                    } else {
                        rhs.push((d.t(i, j), dots(p + 1, dij).collect()));
                        rhs.push((d.t(j, i), dots(p, dji).collect()));
                        for a in 1..dij {
                            for b in 1..dji {
                                rhs.push((d.s(i, j, a, b), dots(p + 1, a).chain(dots(p, b)).collect()));
                            }
                        }
                    }
                }
                let rhs = rec.lin(&rhs, &colors);
                rec.check("now", inst.clone(), lhs, rhs);

                // dot slides, both equalities, and their powers
                let eps = d.parity(i) * d.parity(j);
                let delta = if i == j { vec![(BigRational::one(), vec![])] } else { vec![] };
                let delta = rec.lin(&delta, &colors);
                let left = rec.lin(&[(q(1), vec![t, x(p + 1)]), (-signed(eps == 1), vec![x(p), t])], &colors);
                rec.check("qha", format!("{inst}, lower dot"), left, delta.clone());
                let right = rec.lin(&[(q(1), vec![x(p + 1), t]), (-signed(eps == 1), vec![t, x(p)])], &colors);
                rec.check("qha", format!("{inst}, upper dot"), right, delta);

                for k in 1..=4i64 {
                    let sgn = -signed(eps as i64 * k % 2 == 1);
                    let mut up1 = vec![(q(1), [vec![t], dots(p + 1, k).collect()].concat())];
                    up1.push((sgn.clone(), [dots(p, k).collect::<Vec<_>>(), vec![t]].concat()));
                    let mut up2 = vec![(q(1), [dots(p + 1, k).collect::<Vec<_>>(), vec![t]].concat())];
                    up2.push((sgn, [vec![t], dots(p, k).collect()].concat()));
                    let (mut rhs1, mut rhs2) = (Vec::new(), Vec::new());
                    if i == j {
                        for s in 0..k {
                            let r = k - 1 - s;
                            let c = signed(d.parity(i) as i64 * s % 2 == 1);
                            rhs1.push((c.clone(), dots(p, s).chain(dots(p + 1, r)).collect()));
                            rhs2.push((c, dots(p + 1, r).chain(dots(p, s)).collect()));
                        }
                    }
                    let (l1, r1) = (rec.lin(&up1, &colors), rec.lin(&rhs1, &colors));
                    rec.check("upcross1", format!("{inst}, {k} dots"), l1, r1);
                    let (l2, r2) = (rec.lin(&up2, &colors), rec.lin(&rhs2, &colors));
                    rec.check("upcross2", format!("{inst}, {k} dots"), l2, r2);
                }
            }

            // braid relation
            for p in 0..m.saturating_sub(2) {
                let (i, j, k) = (colors[p + 2], colors[p + 1], colors[p]);
                let (a, b) = (Gen::Cross(p as u8 + 1), Gen::Cross(p as u8));
                let lhs = rec.lin(&[(q(1), vec![a, b, a]), (q(-1), vec![b, a, b])], &colors);
                let mut rhs = Vec::new();
                if i == k && i != j {
                    let (dij, dji) = (d.dij(i, j), d.dij(j, i));
                    let sgn = |s: i64| signed(d.parity(i) as i64 * (d.parity(j) as i64 + s) % 2 == 1);
                    for s in 0..dij {
                        let r = dij - 1 - s;
                        rhs.push((d.t(i, j) * sgn(s), dots(p + 2, r).chain(dots(p, s)).collect()));
                    }
                    for pp in 1..dij {
                        for qq in 1..dji {
                            for s in 0..pp {
                                let r = pp - 1 - s;
                                let g = dots(p + 2, r).chain(dots(p + 1, qq)).chain(dots(p, s)).collect();
                                rhs.push((d.s(i, j, pp, qq) * sgn(s), g));
                            }
                        }
                    }
                }
                let rhs = rec.lin(&rhs, &colors);
                rec.check("qhalast", format!("e({name}) at strands {}..{}", p + 1, p + 3), lhs, rhs);
            }
        }
    }

    // nilHecke relations
    for i in 0..d.rank() {
        for m in 2..=n {
            let ds: Vec<QHElement> = (1..m).map(|r| qh.nilhecke_d(i, m, r)).collect();
            for r in 0..m - 1 {
                let sq = qh.multiply(&ds[r], &ds[r]);
                rec.check("nilhecke", format!("D_{} squared, {m} strands of {i}", r + 1), sq, ds[r].clone());
                for s in r + 1..m - 1 {
                    let (lhs, rhs) = if s == r + 1 {
                        let a = qh.multiply(&qh.multiply(&ds[r], &ds[s]), &ds[r]);
                        let b = qh.multiply(&qh.multiply(&ds[s], &ds[r]), &ds[s]);
                        (a, b)
                    } else {
                        (qh.multiply(&ds[r], &ds[s]), qh.multiply(&ds[s], &ds[r]))
                    };
                    rec.check("nilhecke", format!("D_{} and D_{}, {m} strands of {i}", r + 1, s + 1), lhs, rhs);
                }
            }
            let e = qh.nilhecke_idempotent(i, m);
            let sq = qh.multiply(&e, &e);
            rec.check("divided power", format!("1_{{{i}^({m})}} squared"), sq, e);
        }
    }
    rec.out
}

/// A random element of `H_n` with small coefficients: a sum of basis words
/// whose bottom colors are random rearrangements of `colors`.
pub fn random_element(rng: &mut ChaCha8Rng, colors: &[usize], words: usize) -> QHElement {
    let n = colors.len();
    let perms = all_permutations(n);
    let mut out = QHElement::zero();
    for _ in 0..words {
        let arrange = &perms[rng.gen_range(0..perms.len())];
        let bottom = arrange.iter().map(|&k| colors[k as usize]).collect();
        let crossings = lexmin_word(&perms[rng.gen_range(0..perms.len())]);
        let dots = (0..n).map(|_| rng.gen_range(0..3)).collect();
        let c = BigRational::from_integer(rng.gen_range(-3i64..=3).into());
        out = out.add(&QHElement::word(QHWord { colors: bottom, crossings, dots }).scale(&c));
    }
    out
}

/// Associativity and idempotency of the normal form on `count` random
/// triples over `n` strands.
pub fn check_associativity(datum: &SuperCartanDatum, n: usize, count: usize, seed: u64) -> Vec<RelationCheck> {
    let qh = QuiverHecke::new(datum);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for t in 0..count {
        let colors: Vec<usize> = (0..n).map(|_| rng.gen_range(0..datum.rank())).collect();
        let [x, y, z] = [0; 3].map(|_| qh.renormalize(&random_element(&mut rng, &colors, 4)));
        let a = qh.multiply(&qh.multiply(&x, &y), &z);
        let b = qh.multiply(&x, &qh.multiply(&y, &z));
        let passed = a == b;
        out.push(RelationCheck {
            relation: "associativity".into(),
            instance: format!("triple {t} over {}", word_name(&colors)),
            passed,
            detail: if passed { String::new() } else { format!("(xy)z = {a}; x(yz) = {b}") },
        });
        let twice = qh.renormalize(&a);
        let passed = twice == a;
        out.push(RelationCheck {
            relation: "normal form".into(),
            instance: format!("triple {t}"),
            passed,
            detail: if passed { String::new() } else { format!("{a} renormalizes to {twice}") },
        });
    }
    out
}
