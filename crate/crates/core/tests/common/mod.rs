//! Oracles shared by the integration tests. Nothing here calls the
//! library's normal forms or permutation code.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Final position (1-based) of each strand (1-based), following the strands
/// through crossings `σ_i` read left to right.
pub fn strand_positions(n: usize, word: &[u8]) -> Vec<usize> {
    // at[p] = strand currently at position p
    let mut at: Vec<usize> = (0..=n).collect();
    for &i in word {
        at.swap(i as usize, i as usize + 1);
    }
    let mut images = vec![0; n + 1];
    for p in 1..=n {
        images[at[p]] = p;
    }
    images[1..].to_vec()
}

pub fn is_pure(n: usize, word: &[u8]) -> bool {
    strand_positions(n, word).iter().enumerate().all(|(k, &p)| p == k + 1)
}

/// A reduced word sending strand `k` to `images[k - 1]`: repeatedly cross
/// the leftmost adjacent pair that is out of order.
pub fn sorting_word(images: &[usize]) -> Vec<u8> {
    // target[p] = strand that must end at position p
    let n = images.len();
    let mut target = vec![0; n];
    for (k, &p) in images.iter().enumerate() {
        target[p - 1] = k;
    }
    let mut rank = vec![0; n];
    for (p, &s) in target.iter().enumerate() {
        rank[s] = p;
    }
    let mut at: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    while let Some(i) = (0..n - 1).find(|&i| rank[at[i]] > rank[at[i + 1]]) {
        at.swap(i, i + 1);
        out.push(i as u8 + 1);
    }
    out
}

pub fn random_word(rng: &mut impl Rng, strands: usize, len: usize) -> Vec<u8> {
    (0..len).map(|_| rng.gen_range(1..strands as u8)).collect()
}

/// `w` followed by the reverse of a sorting word for its permutation.
pub fn random_pure_word(rng: &mut impl Rng, strands: usize, max_len: usize) -> Vec<u8> {
    loop {
        let len = rng.gen_range(0..=max_len);
        let mut w = random_word(rng, strands, len);
        let fix = sorting_word(&strand_positions(strands, &w));
        if w.len() + fix.len() <= max_len {
            w.extend(fix.iter().rev());
            return w;
        }
    }
}

/// All words of length at most `max_len` over `1..=letters`.
pub fn all_words(letters: u8, max_len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 1..=letters {
                let mut u: Vec<u8> = w.clone();
                u.push(g);
                next.push(u);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Move-graph search for a group generated by involutions with some pairs
/// commuting: from `w`, delete adjacent equal letters or swap adjacent
/// commuting letters. Returns the shortest words reached. By Tits' solution
/// of the word problem for Coxeter groups, two words are equal iff these
/// sets meet, and the sets hold every reduced word of the element.
pub struct MoveOracle {
    commute: Box<dyn Fn(u8, u8) -> bool>,
    memo: HashMap<Vec<u8>, BTreeSet<Vec<u8>>>,
}

fn twin_far(a: u8, b: u8) -> bool {
    a.abs_diff(b) > 1
}

impl MoveOracle {
    pub fn twin() -> Self {
        MoveOracle::new(twin_far)
    }

    pub fn new(commute: impl Fn(u8, u8) -> bool + 'static) -> Self {
        MoveOracle {
            commute: Box::new(commute),
            memo: HashMap::new(),
        }
    }

    pub fn shortest(&mut self, w: &[u8]) -> BTreeSet<Vec<u8>> {
        if let Some(s) = self.memo.get(w) {
            return s.clone();
        }
        let mut seen: HashSet<Vec<u8>> = HashSet::from([w.to_vec()]);
        let mut queue = VecDeque::from([w.to_vec()]);
        while let Some(u) = queue.pop_front() {
            for i in 0..u.len().saturating_sub(1) {
                let next = if u[i] == u[i + 1] {
                    [&u[..i], &u[i + 2..]].concat()
                } else if (self.commute)(u[i], u[i + 1]) {
                    let mut v = u.clone();
                    v.swap(i, i + 1);
                    v
                } else {
                    continue;
                };
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let min = seen.iter().map(Vec::len).min().unwrap_or(0);
        let set: BTreeSet<Vec<u8>> = seen.into_iter().filter(|u| u.len() == min).collect();
        self.memo.insert(w.to_vec(), set.clone());
        set
    }

    pub fn equal(&mut self, a: &[u8], b: &[u8]) -> bool {
        let sa = self.shortest(a);
        self.shortest(b).iter().any(|u| sa.contains(u))
    }
}

/// Random insert/delete/commute moves, never exceeding `max_len` letters.
pub fn perturb(rng: &mut impl Rng, w: &[u8], strands: usize, moves: usize, max_len: usize) -> Vec<u8> {
    let mut u = w.to_vec();
    for _ in 0..moves {
        match rng.gen_range(0..3) {
            0 if u.len() + 2 <= max_len => {
                let at = rng.gen_range(0..=u.len());
                let g = rng.gen_range(1..strands as u8);
                u.splice(at..at, [g, g]);
            }
            1 if u.len() >= 2 => {
                let i = rng.gen_range(0..u.len() - 1);
                if u[i] == u[i + 1] {
                    u.drain(i..i + 2);
                }
            }
            _ if u.len() >= 2 => {
                let i = rng.gen_range(0..u.len() - 1);
                if twin_far(u[i], u[i + 1]) {
                    u.swap(i, i + 1);
                }
            }
            _ => {}
        }
    }
    u
}
