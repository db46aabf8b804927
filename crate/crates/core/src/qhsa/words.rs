//! Reduced words in the simple transpositions.
//!
//! A crossing word lists crossing positions from top to bottom; position `p`
//! swaps the strands at `p` and `p + 1`, counting from the right edge from 0.

use std::collections::{HashMap, VecDeque};

/// `f[top] = bottom` position of the strand ending at `top`.
pub fn permutation(n: usize, word: &[u8]) -> Vec<u8> {
    let mut f: Vec<u8> = (0..n as u8).collect();
    for &p in word.iter().rev() {
        f.swap(p as usize, p as usize + 1);
    }
    f
}

pub fn length(f: &[u8]) -> usize {
    let mut c = 0;
    for a in 0..f.len() {
        for b in a + 1..f.len() {
            if f[a] > f[b] {
                c += 1;
            }
        }
    }
    c
}

pub fn is_reduced(n: usize, word: &[u8]) -> bool {
    length(&permutation(n, word)) == word.len()
}

/// The lexicographically smallest reduced word, read top to bottom.
pub fn lexmin_word(f: &[u8]) -> Vec<u8> {
    let mut f = f.to_vec();
    let mut out = Vec::new();
    while let Some(p) = (0..f.len().saturating_sub(1)).find(|&p| f[p] > f[p + 1]) {
        out.push(p as u8);
        f.swap(p, p + 1);
    }
    out
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(cur.clone());
        let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else {
            return out;
        };
        let l = (k + 1..n).rev().find(|&l| cur[k] < cur[l]).unwrap();
        cur.swap(k, l);
        cur[k + 1..].reverse();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// Swap the far-apart letters at `k` and `k + 1`.
    Commute(usize),
    /// Replace `a b a` at `k..k + 3` by `b a b`.
    Braid(usize),
}

pub fn apply_move(word: &mut [u8], m: Move) {
    match m {
        Move::Commute(k) => word.swap(k, k + 1),
        Move::Braid(k) => {
            let (a, b) = (word[k], word[k + 1]);
            word[k] = b;
            word[k + 1] = a;
            word[k + 2] = b;
        }
    }
}

fn neighbours(word: &[u8]) -> Vec<Move> {
    let mut out = Vec::new();
    for k in 0..word.len().saturating_sub(1) {
        if word[k].abs_diff(word[k + 1]) >= 2 {
            out.push(Move::Commute(k));
        }
        if k + 2 < word.len() && word[k] == word[k + 2] && word[k].abs_diff(word[k + 1]) == 1 {
            out.push(Move::Braid(k));
        }
    }
    out
}

/// Shortest sequence of moves from a reduced `word` to one satisfying `goal`.
pub fn path_to(word: &[u8], goal: impl Fn(&[u8]) -> bool) -> Option<Vec<Move>> {
    let mut parent: HashMap<Vec<u8>, Option<(Vec<u8>, Move)>> = HashMap::new();
    let mut queue = VecDeque::new();
    parent.insert(word.to_vec(), None);
    queue.push_back(word.to_vec());
    while let Some(w) = queue.pop_front() {
        if goal(&w) {
            let mut moves = Vec::new();
            let mut cur = w;
            while let Some(Some((prev, m))) = parent.get(&cur) {
                moves.push(*m);
                cur = prev.clone();
            }
            moves.reverse();
            return Some(moves);
        }
        for m in neighbours(&w) {
            let mut next = w.clone();
            apply_move(&mut next, m);
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((w.clone(), m)));
                queue.push_back(next);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn longest_element() {
        let w0: Vec<u8> = vec![2, 1, 0];
        assert_eq!(length(&w0), 3);
        assert_eq!(lexmin_word(&w0), vec![0, 1, 0]);
        assert_eq!(all_permutations(3).len(), 6);
        for f in all_permutations(4) {
            let w = lexmin_word(&f);
            assert_eq!(permutation(4, &w), f);
            assert!(is_reduced(4, &w));
        }
    }

    #[test]
    fn paths_reach_the_goal() {
        let moves = path_to(&[1, 0, 1], |w| w == [0, 1, 0]).unwrap();
        assert_eq!(moves, vec![Move::Braid(0)]);
        let mut w = vec![2, 0, 1, 0];
        let target = lexmin_word(&permutation(4, &w));
        for m in path_to(&w.clone(), |x| x == target.as_slice()).unwrap() {
            apply_move(&mut w, m);
        }
        assert_eq!(w, target);
    }
}
