//! String diagrams cut into horizontal slices, with degree/parity grading.
//!
//! A frontier is the left-to-right list of strand ends crossing a horizontal
//! line. Region weights are read from the right: the region right of a
//! frontier position has weight `lambda` plus `alpha_c` for every up end and
//! minus `alpha_c` for every down end strictly to its right.

mod compile;
pub mod lint;
mod pairing;

use std::fmt;

use crate::cartan::{SuperCartanDatum, Weight};
use crate::covering::{strand_denominator, Letter, SignedWord, UExpression};
use crate::scalars::{PiLaurent, PiScalar};
use crate::Error;

pub use compile::{compile, compile_variants, compile_with, CompiledShape, Leg};
pub use pairing::{enumerate_pairings, interleaving_count, Pairing};

/// One strand end on a frontier: a letter read as a color and an orientation.
pub type End = Letter;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chirality {
    Cw,
    Ccw,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    /// `count` dots on the strand at `position`.
    Dot { position: usize, count: u32 },
    /// Crossing of the strands at `position` and `position + 1`.
    Cross { position: usize },
    /// A cup whose two new ends occupy `position` and `position + 1`.
    /// Counterclockwise cups leave the ends `[down, up]`, clockwise ones `[up, down]`.
    Cup { position: usize, color: usize, chirality: Chirality },
    /// A cap closing the ends at `position` and `position + 1`.
    /// Clockwise caps close `[up, down]`, counterclockwise ones `[down, up]`.
    Cap { position: usize, color: usize, chirality: Chirality },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceDiagram {
    pub bottom: Vec<End>,
    pub slices: Vec<Slice>,
    pub lambda: Weight,
}

pub fn cup_ends(color: usize, chirality: Chirality) -> [End; 2] {
    match chirality {
        Chirality::Ccw => [Letter::down(color), Letter::up(color)],
        Chirality::Cw => [Letter::up(color), Letter::down(color)],
    }
}

pub fn cap_ends(color: usize, chirality: Chirality) -> [End; 2] {
    match chirality {
        Chirality::Cw => [Letter::up(color), Letter::down(color)],
        Chirality::Ccw => [Letter::down(color), Letter::up(color)],
    }
}

/// Weight of the region right of the first `pos` ends of `frontier`.
pub fn region_weight(datum: &SuperCartanDatum, frontier: &[End], pos: usize, lambda: &Weight) -> Weight {
    let mut w = lambda.clone();
    for e in &frontier[pos..] {
        w = datum.shift_simple(&w, e.i, if e.up { 1 } else { -1 });
    }
    w
}

/// Degree and parity of a single generator on the given input frontier.
fn slice_grade(
    datum: &SuperCartanDatum,
    frontier: &[End],
    slice: &Slice,
    lambda: &Weight,
) -> Result<(i64, i64), Error> {
    let bad = |msg: String| Err(Error::Invalid(format!("malformed diagram: {msg}")));
    match *slice {
        Slice::Dot { position, count } => {
            let Some(e) = frontier.get(position) else {
                return bad(format!("dot at {position} outside frontier"));
            };
            let c = count as i64;
            Ok((2 * datum.d_i(e.i) * c, datum.parity(e.i) as i64 * c))
        }
        Slice::Cross { position } => {
            let (Some(l), Some(r)) = (frontier.get(position), frontier.get(position + 1)) else {
                return bad(format!("crossing at {position} outside frontier"));
            };
            let par = (datum.parity(l.i) * datum.parity(r.i)) as i64;
            let deg = if l.up == r.up { datum.d_i(l.i) * datum.dij(l.i, r.i) } else { 0 };
            Ok((deg, par))
        }
        Slice::Cup { position, color, chirality } => {
            if position > frontier.len() {
                return bad(format!("cup at {position} outside frontier"));
            }
            let mu = region_weight(datum, frontier, position, lambda);
            let (d, h) = (datum.d_i(color), mu.h(color));
            Ok(match chirality {
                Chirality::Ccw => (d * (1 + h), 0),
                Chirality::Cw => (d * (1 - h), datum.parity_i_lambda(color, &mu) as i64),
            })
        }
        Slice::Cap { position, color, chirality } => {
            let (Some(l), Some(r)) = (frontier.get(position), frontier.get(position + 1)) else {
                return bad(format!("cap at {position} outside frontier"));
            };
            if [*l, *r] != cap_ends(color, chirality) {
                return bad(format!("cap at {position} does not match the ends {l} {r}"));
            }
            let mu = region_weight(datum, frontier, position + 2, lambda);
            let (d, h) = (datum.d_i(color), mu.h(color));
            Ok(match chirality {
                Chirality::Cw => (d * (1 - h), 0),
                Chirality::Ccw => (d * (1 + h), datum.parity_i_lambda(color, &mu) as i64),
            })
        }
    }
}

/// Applies a slice to a frontier.
pub fn apply_slice(frontier: &mut Vec<End>, slice: &Slice) {
    match *slice {
        Slice::Dot { .. } => {}
        Slice::Cross { position } => frontier.swap(position, position + 1),
        Slice::Cup { position, color, chirality } => {
            let [l, r] = cup_ends(color, chirality);
            frontier.splice(position..position, [l, r]);
        }
        Slice::Cap { position, .. } => {
            frontier.drain(position..position + 2);
        }
    }
}

impl SliceDiagram {
    pub fn top(&self) -> Vec<End> {
        let mut f = self.bottom.clone();
        for s in &self.slices {
            apply_slice(&mut f, s);
        }
        f
    }

    /// Total degree and parity (the parity reduced mod 2).
    pub fn grade(&self, datum: &SuperCartanDatum) -> Result<(i64, u8), Error> {
        let mut frontier = self.bottom.clone();
        let (mut deg, mut par) = (0, 0);
        for s in &self.slices {
            let (d, p) = slice_grade(datum, &frontier, s, &self.lambda)?;
            deg += d;
            par += p;
            apply_slice(&mut frontier, s);
        }
        Ok((deg, par.rem_euclid(2) as u8))
    }

    pub fn crossings(&self) -> usize {
        self.slices.iter().filter(|s| matches!(s, Slice::Cross { .. })).count()
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ch = |c: &Chirality| match c {
            Chirality::Cw => "cw",
            Chirality::Ccw => "ccw",
        };
        match self {
            Slice::Dot { position, count } => write!(f, "dot {position} {count}"),
            Slice::Cross { position } => write!(f, "cross {position}"),
            Slice::Cup { position, color, chirality } => write!(f, "cup {position} {color} {}", ch(chirality)),
            Slice::Cap { position, color, chirality } => write!(f, "cap {position} {color} {}", ch(chirality)),
        }
    }
}

/// `sum_sigma q^deg pi^par` over all pairings, before the per-strand
/// geometric factors.
pub fn graphical_form_scaled(datum: &SuperCartanDatum, a: &SignedWord, b: &SignedWord) -> PiLaurent {
    if a.lambda != b.lambda {
        return PiLaurent::zero();
    }
    let mut acc = PiLaurent::zero();
    for p in enumerate_pairings(&a.letters, &b.letters) {
        let shape = compile(&p);
        let (deg, par) = shape.grade(datum, &a.lambda);
        acc = &acc + &PiLaurent::monomial(deg, par as i64);
    }
    acc
}

/// The matching-sum value of `<a, b>`.
pub fn graphical_form(datum: &SuperCartanDatum, a: &SignedWord, b: &SignedWord) -> PiScalar {
    let scaled = graphical_form_scaled(datum, a, b);
    if scaled.is_zero() {
        return PiScalar::zero();
    }
    &scaled.to_scalar() / &strand_denominator(datum, a, b).to_scalar()
}

/// Sesquilinear extension of [`graphical_form`], antilinear in the first slot.
pub fn graphical_form_expr(datum: &SuperCartanDatum, x: &UExpression, y: &UExpression) -> PiScalar {
    let mut acc = PiScalar::zero();
    for (a, c) in x.words() {
        for (b, d) in y.words() {
            let v = graphical_form(datum, &a, &b);
            if !v.is_zero() {
                acc = &acc + &(&(&c.bar() * d) * &v);
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_grade_matches_table() {
        let d = SuperCartanDatum::preset("odd-sl2").unwrap();
        for h in -3..=3 {
            let diag = SliceDiagram {
                bottom: vec![Letter::up(0), Letter::down(0)],
                slices: vec![Slice::Cap { position: 0, color: 0, chirality: Chirality::Cw }],
                lambda: Weight(vec![h]),
            };
            assert_eq!(diag.grade(&d).unwrap(), (1 - h, 0));
        }
    }

    #[test]
    fn dots_on_odd_strand() {
        let d = SuperCartanDatum::preset("odd-sl2").unwrap();
        for n in 0..5 {
            let diag = SliceDiagram {
                bottom: vec![Letter::up(0)],
                slices: vec![Slice::Dot { position: 0, count: n }],
                lambda: Weight(vec![0]),
            };
            assert_eq!(diag.grade(&d).unwrap(), (2 * n as i64, (n % 2) as u8));
        }
    }

    #[test]
    fn mismatched_cap_is_rejected() {
        let d = SuperCartanDatum::preset("odd-sl2").unwrap();
        let diag = SliceDiagram {
            bottom: vec![Letter::up(0), Letter::up(0)],
            slices: vec![Slice::Cap { position: 0, color: 0, chirality: Chirality::Cw }],
            lambda: Weight(vec![0]),
        };
        assert!(diag.grade(&d).is_err());
    }
}
