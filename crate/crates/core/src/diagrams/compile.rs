//! Reduced drawings of pairings.
//!
//! Bottom arcs are closed first, innermost first: the strands caught inside an
//! arc are pushed across one of its legs until the two ends meet. The through
//! strands are then sorted into their top order, and the top arcs are opened by
//! running the same procedure on the top word backwards in time. Every pair of
//! interleaving chords crosses exactly once and no other pair crosses.

use super::pairing::{interleaving_count, Pairing};
use super::{apply_slice, Chirality, End, Slice, SliceDiagram};
use crate::cartan::{SuperCartanDatum, Weight};

/// A compiled drawing; the ambient weight is supplied when grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompiledShape {
    pub bottom: Vec<End>,
    pub slices: Vec<Slice>,
}

impl CompiledShape {
    pub fn diagram(&self, lambda: &Weight) -> SliceDiagram {
        SliceDiagram { bottom: self.bottom.clone(), slices: self.slices.clone(), lambda: lambda.clone() }
    }

    pub fn grade(&self, datum: &SuperCartanDatum, lambda: &Weight) -> (i64, u8) {
        self.diagram(lambda).grade(datum).expect("compiled diagrams are well formed")
    }

    pub fn crossings(&self) -> usize {
        self.slices.iter().filter(|s| matches!(s, Slice::Cross { .. })).count()
    }
}

/// Which leg of an arc the enclosed strands are pushed across.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leg {
    Left,
    Right,
}

/// Closes the arcs on one boundary word.
/// `mate[x]` is the other end of an arc, or `None` for a through strand.
/// Returns the slices and the surviving through points in frontier order.
fn close_arcs(ends: &[End], mate: &[Option<usize>], leg: Leg) -> (Vec<Slice>, Vec<usize>) {
    let mut arcs: Vec<(usize, usize)> =
        (0..ends.len()).filter_map(|x| mate[x].filter(|&y| x < y).map(|y| (x, y))).collect();
    arcs.sort_by_key(|&(l, r)| (r - l, l));
    let mut frontier: Vec<usize> = (0..ends.len()).collect();
    let mut slices = Vec::new();
    for (l, r) in arcs {
        let mut pl = frontier.iter().position(|&x| x == l).unwrap();
        let mut pr = frontier.iter().position(|&x| x == r).unwrap();
        while pr > pl + 1 {
            match leg {
                Leg::Left => {
                    slices.push(Slice::Cross { position: pl });
                    frontier.swap(pl, pl + 1);
                    pl += 1;
                }
                Leg::Right => {
                    slices.push(Slice::Cross { position: pr - 1 });
                    frontier.swap(pr - 1, pr);
                    pr -= 1;
                }
            }
        }
        let chirality = if ends[l].up { Chirality::Cw } else { Chirality::Ccw };
        slices.push(Slice::Cap { position: pl, color: ends[l].i, chirality });
        frontier.drain(pl..pl + 2);
    }
    (slices, frontier)
}

/// The drawing built with the given legs for the bottom and top arcs.
pub fn compile_with(p: &Pairing, bottom_leg: Leg, top_leg: Leg) -> CompiledShape {
    let m = p.a.len();
    let bottom_mate: Vec<Option<usize>> = (0..m).map(|x| Some(p.partner[x]).filter(|&y| y < m)).collect();
    let top_mate: Vec<Option<usize>> =
        (m..p.partner.len()).map(|x| Some(p.partner[x]).filter(|&y| y >= m).map(|y| y - m)).collect();

    let (mut slices, through_bottom) = close_arcs(&p.a, &bottom_mate, bottom_leg);
    let (top_slices, through_top) = close_arcs(&p.b, &top_mate, top_leg);

    // sort the through strands into the order they reach the top
    let rank = |x: usize| through_top.iter().position(|&t| t == p.partner[x] - m).unwrap();
    let mut target: Vec<usize> = through_bottom.iter().map(|&x| rank(x)).collect();
    loop {
        let mut swapped = false;
        for j in 0..target.len().saturating_sub(1) {
            if target[j] > target[j + 1] {
                target.swap(j, j + 1);
                slices.push(Slice::Cross { position: j });
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }

    // a cap read backwards in time is a cup with the same ends
    slices.extend(top_slices.into_iter().rev().map(|s| match s {
        Slice::Cap { position, color, chirality } => Slice::Cup { position, color, chirality },
        other => other,
    }));

    let shape = CompiledShape { bottom: p.a.clone(), slices };
    let mut ends = shape.bottom.clone();
    for s in &shape.slices {
        apply_slice(&mut ends, s);
    }
    assert_eq!(ends, p.b, "compiled diagram must end on the top word");
    shape
}

/// The canonical reduced drawing. Panics if it is not reduced.
pub fn compile(p: &Pairing) -> CompiledShape {
    let shape = compile_with(p, Leg::Left, Leg::Left);
    assert_eq!(shape.crossings(), interleaving_count(p), "compilation not reduced");
    shape
}

/// The four drawings obtained from the leg choices, canonical one first.
pub fn compile_variants(p: &Pairing) -> Vec<CompiledShape> {
    [Leg::Left, Leg::Right]
        .into_iter()
        .flat_map(|b| [Leg::Left, Leg::Right].into_iter().map(move |t| compile_with(p, b, t)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::enumerate_pairings;
    use super::*;
    use crate::covering::Letter;

    #[test]
    fn single_cap() {
        let (u, d) = (Letter::up(0), Letter::down(0));
        let p = &enumerate_pairings(&[u, d], &[])[0];
        let shape = compile(p);
        assert_eq!(shape.slices, vec![Slice::Cap { position: 0, color: 0, chirality: Chirality::Cw }]);
    }

    #[test]
    fn two_strand_shapes() {
        let (u, d) = (Letter::up(0), Letter::down(0));
        let ps = enumerate_pairings(&[u, d], &[d, u]);
        let arcs = compile(&ps[0]);
        assert_eq!(arcs.crossings(), 0);
        assert_eq!(arcs.slices.len(), 2);
        let through = compile(&ps[1]);
        assert_eq!(through.slices, vec![Slice::Cross { position: 0 }]);
        let sl2 = SuperCartanDatum::preset("odd-sl2").unwrap();
        for h in -3..=3 {
            assert_eq!(arcs.grade(&sl2, &Weight(vec![h])), (2, 0));
        }
    }

    #[test]
    fn cup_between_crossed_strands() {
        let u = Letter::up(0);
        let d = Letter::down(0);
        let p = enumerate_pairings(&[u, u], &[u, u, d, u])
            .into_iter()
            .find(|p| p.partner == vec![5, 2, 1, 4, 3, 0])
            .unwrap();
        assert_eq!(compile(&p).crossings(), 1);
    }
}
