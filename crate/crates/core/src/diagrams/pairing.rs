//! Perfect matchings of the boundary points of two signed words.

use crate::covering::Letter;

/// Boundary points `0..m` are the bottom letters left to right, `m..m+n`
/// the top letters left to right. `partner[p]` is the point joined to `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pairing {
    pub a: Vec<Letter>,
    pub b: Vec<Letter>,
    pub partner: Vec<usize>,
}

impl Pairing {
    pub fn is_bottom(&self, p: usize) -> bool {
        p < self.a.len()
    }

    pub fn letter(&self, p: usize) -> Letter {
        if p < self.a.len() {
            self.a[p]
        } else {
            self.b[p - self.a.len()]
        }
    }

    /// Chords `(p, partner[p])` with `p < partner[p]`.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len()).filter(|&p| p < self.partner[p]).map(|p| (p, self.partner[p])).collect()
    }

    /// Position of a point on the boundary cycle: bottom left to right, then
    /// top right to left.
    pub fn cycle_position(&self, p: usize) -> usize {
        let m = self.a.len();
        if p < m {
            p
        } else {
            m + (self.b.len() - 1 - (p - m))
        }
    }
}

fn compatible(a: &[Letter], b: &[Letter], p: usize, r: usize) -> bool {
    let m = a.len();
    let lp = if p < m { a[p] } else { b[p - m] };
    let lr = if r < m { a[r] } else { b[r - m] };
    if lp.i != lr.i {
        return false;
    }
    // a through strand keeps its orientation; an arc joins opposite ones
    let same_side = (p < m) == (r < m);
    if same_side {
        lp.up != lr.up
    } else {
        lp.up == lr.up
    }
}

/// All compatible pairings, in lexicographic order of partner arrays.
pub fn enumerate_pairings(a: &[Letter], b: &[Letter]) -> Vec<Pairing> {
    let total = a.len() + b.len();
    let mut out = Vec::new();
    if total % 2 == 1 {
        return out;
    }
    let mut partner = vec![usize::MAX; total];
    fn go(a: &[Letter], b: &[Letter], partner: &mut Vec<usize>, out: &mut Vec<Pairing>) {
        let Some(p) = partner.iter().position(|&x| x == usize::MAX) else {
            out.push(Pairing { a: a.to_vec(), b: b.to_vec(), partner: partner.clone() });
            return;
        };
        for r in p + 1..partner.len() {
            if partner[r] == usize::MAX && compatible(a, b, p, r) {
                partner[p] = r;
                partner[r] = p;
                go(a, b, partner, out);
                partner[p] = usize::MAX;
                partner[r] = usize::MAX;
            }
        }
    }
    go(a, b, &mut partner, &mut out);
    out
}

/// Number of chord pairs whose endpoints alternate around the boundary cycle.
pub fn interleaving_count(p: &Pairing) -> usize {
    let chords: Vec<(usize, usize)> = p
        .chords()
        .into_iter()
        .map(|(x, y)| {
            let (u, v) = (p.cycle_position(x), p.cycle_position(y));
            (u.min(v), u.max(v))
        })
        .collect();
    let mut count = 0;
    for (k, &(x1, y1)) in chords.iter().enumerate() {
        for &(x2, y2) in &chords[k + 1..] {
            if (x1 < x2 && x2 < y1 && y1 < y2) || (x2 < x1 && x1 < y2 && y2 < y1) {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let (u, d) = (Letter::up(0), Letter::down(0));
        assert_eq!(enumerate_pairings(&[u, d], &[]).len(), 1);
        let ps = enumerate_pairings(&[u, d], &[d, u]);
        assert_eq!(ps.len(), 2);
        let counts: Vec<usize> = ps.iter().map(interleaving_count).collect();
        // arc pairing first: bottom 0 joins bottom 1
        assert_eq!(ps[0].partner[0], 1);
        assert_eq!(counts, vec![0, 1]);
        assert!(enumerate_pairings(&[u], &[d]).is_empty());
        assert_eq!(enumerate_pairings(&[], &[]).len(), 1);
    }
}
