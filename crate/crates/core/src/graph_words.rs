//! Words and the word problem in graph products of groups of order two
//! (right-angled Coxeter groups).
//!
//! A [`CommutationGraph`] on vertices `1..=k` presents the group generated by
//! involutions `s_1, ..., s_k` where `s_i s_j = s_j s_i` exactly when `{i, j}` is
//! an edge. Every element has a unique shortlex-least representative among the
//! words reachable by deleting adjacent equal pairs and swapping adjacent
//! commuting letters; [`CommutationGraph::normal_form`] computes it.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// 1-based generator index.
pub type Generator = u8;

/// Largest supported vertex count; adjacency rows are 64-bit masks.
pub const MAX_VERTICES: usize = 64;

/// A word in involutive generators. Inversion is reversal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn new(letters: impl Into<Vec<Generator>>) -> Self {
        Word(letters.into())
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Generator> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn push(&mut self, letter: Generator) {
        self.0.push(letter);
    }

    pub fn extend(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    /// `self^exponent`, with negative exponents taking the reversed word.
    pub fn pow(&self, exponent: i64) -> Word {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut out = Vec::with_capacity(base.len() * exponent.unsigned_abs() as usize);
        for _ in 0..exponent.unsigned_abs() {
            out.extend_from_slice(&base.0);
        }
        Word(out)
    }

    /// `self · other · self⁻¹`
    pub fn conjugate(&self, other: &Word) -> Word {
        self.concat(other).concat(&self.inverse())
    }
}

impl From<Vec<Generator>> for Word {
    fn from(letters: Vec<Generator>) -> Self {
        Word(letters)
    }
}

impl<const N: usize> From<[Generator; N]> for Word {
    fn from(letters: [Generator; N]) -> Self {
        Word(letters.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, letter) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Whitespace-separated positive integers; `e` (or blank) is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "e" {
            return Ok(Word::empty());
        }
        trimmed
            .split_whitespace()
            .map(|tok| match tok.parse::<Generator>() {
                Ok(g) if g >= 1 => Ok(g),
                _ => Err(Error::Parse {
                    what: "word",
                    input: s.to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// Symmetric commutation relation on vertices `1..=vertex_count`, no loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CommutationGraph {
    vertex_count: usize,
    /// `adjacency[i - 1]` has bit `j - 1` set iff `s_i` and `s_j` commute.
    adjacency: Vec<u64>,
}

impl CommutationGraph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                got: vertex_count,
                max: MAX_VERTICES,
            });
        }
        let mut adjacency = vec![0u64; vertex_count];
        for &(i, j) in edges {
            for v in [i, j] {
                if v == 0 || v > vertex_count {
                    return Err(Error::InvalidGenerator {
                        letter: v,
                        vertex_count,
                    });
                }
            }
            if i == j {
                return Err(Error::Parse {
                    what: "edge (loops are not allowed)",
                    input: format!("{i} {j}"),
                });
            }
            adjacency[i - 1] |= 1 << (j - 1);
            adjacency[j - 1] |= 1 << (i - 1);
        }
        Ok(CommutationGraph {
            vertex_count,
            adjacency,
        })
    }

    /// Commutation graph of the twin group on `strands` strands: `σ_i, σ_j`
    /// commute iff `|i - j| > 1`.
    pub fn twin(strands: usize) -> Self {
        let k = strands.saturating_sub(1);
        let edges: Vec<_> = (1..=k).flat_map(|i| (i + 2..=k).map(move |j| (i, j))).collect();
        CommutationGraph::new(k, &edges).expect("twin graph is well formed")
    }

    /// The eight-vertex graph presenting the group `A`, one factor of the
    /// bicoloured braid group.
    pub fn a_graph() -> Self {
        const EDGES: [(usize, usize); 9] = [(1, 3), (1, 4), (2, 3), (2, 4), (1, 7), (1, 8), (4, 6), (5, 8), (4, 5)];
        CommutationGraph::new(8, &EDGES).expect("A graph is well formed")
    }

    pub fn complete(vertex_count: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=vertex_count)
            .flat_map(|i| (i + 1..=vertex_count).map(move |j| (i, j)))
            .collect();
        CommutationGraph::new(vertex_count, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn commutes(&self, i: Generator, j: Generator) -> bool {
        i != j && self.adjacency[i as usize - 1] & (1 << (j - 1)) != 0
    }

    /// Sorted edge list with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.vertex_count)
            .flat_map(|i| {
                (i + 1..=self.vertex_count)
                    .filter(move |&j| self.adjacency[i - 1] & (1 << (j - 1)) != 0)
                    .map(move |j| (i, j))
            })
            .collect()
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|&&g| g == 0 || g as usize > self.vertex_count) {
            Some(&bad) => Err(Error::InvalidGenerator {
                letter: bad as usize,
                vertex_count: self.vertex_count,
            }),
            None => Ok(()),
        }
    }

    /// Builds a word, rejecting letters outside the vertex set.
    pub fn word(&self, letters: impl Into<Vec<Generator>>) -> Result<Word> {
        let w = Word::new(letters);
        self.check_word(&w)?;
        Ok(w)
    }

    pub fn normal_form(&self, w: &Word) -> Result<Word> {
        self.check_word(w)?;
        Ok(self.normal_form_unchecked(w.letters()))
    }

    /// Shortlex-least representative; letters are assumed valid.
    pub(crate) fn normal_form_unchecked(&self, letters: &[Generator]) -> Word {
        let reduced = self.reduce(letters);
        Word(self.lex_least(&reduced))
    }

    /// Letters of `s` that do not commute with it, `s` included.
    fn blocked_by(&self, s: Generator) -> impl Iterator<Item = usize> + '_ {
        let mask = !self.adjacency[s as usize - 1];
        (0..self.vertex_count).filter(move |&t| mask & (1 << t) != 0)
    }

    /// Some reduced word for the element, via heaps of pieces: one pile per
    /// generator; a letter cancels iff the top of its own pile is an earlier
    /// copy of itself.
    fn reduce(&self, letters: &[Generator]) -> Vec<Generator> {
        #[derive(Clone, Copy, PartialEq)]
        enum Piece {
            Own(usize),
            Shadow,
        }
        let mut piles: Vec<Vec<Piece>> = vec![Vec::new(); self.vertex_count];
        let mut alive = vec![true; letters.len()];
        for (pos, &s) in letters.iter().enumerate() {
            let own = s as usize - 1;
            if let Some(&Piece::Own(prev)) = piles[own].last() {
                alive[prev] = false;
                alive[pos] = false;
                for t in self.blocked_by(s) {
                    piles[t].pop();
                }
            } else {
                for t in self.blocked_by(s) {
                    piles[t].push(if t == own { Piece::Own(pos) } else { Piece::Shadow });
                }
            }
        }
        letters
            .iter()
            .zip(&alive)
            .filter_map(|(&s, &keep)| keep.then_some(s))
            .collect()
    }

    /// Lexicographically least linear extension of the dependence order of a
    /// reduced word; all reduced words of an element share that order.
    fn lex_least(&self, reduced: &[Generator]) -> Vec<Generator> {
        let n = reduced.len();
        let mut successors: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        let mut last_seen: Vec<Option<usize>> = vec![None; self.vertex_count];
        for (pos, &s) in reduced.iter().enumerate() {
            for t in self.blocked_by(s) {
                if let Some(prev) = last_seen[t] {
                    successors[prev].push(pos);
                    indegree[pos] += 1;
                }
            }
            last_seen[s as usize - 1] = Some(pos);
        }
        let mut ready: BinaryHeap<Reverse<(Generator, usize)>> = indegree
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(pos, _)| Reverse((reduced[pos], pos)))
            .collect();
        let mut out = Vec::with_capacity(n);
        while let Some(Reverse((s, pos))) = ready.pop() {
            out.push(s);
            for &next in &successors[pos] {
                indegree[next] -= 1;
                if indegree[next] == 0 {
                    ready.push(Reverse((reduced[next], next)));
                }
            }
        }
        out
    }

    pub fn equal(&self, a: &Word, b: &Word) -> Result<bool> {
        self.check_word(a)?;
        self.check_word(b)?;
        Ok(self.equal_unchecked(a.letters(), b.letters()))
    }

    pub(crate) fn equal_unchecked(&self, a: &[Generator], b: &[Generator]) -> bool {
        let mut joined = Vec::with_capacity(a.len() + b.len());
        joined.extend_from_slice(a);
        joined.extend(b.iter().rev());
        self.reduce(&joined).is_empty()
    }

    pub(crate) fn reduce_is_empty(&self, letters: &[Generator]) -> bool {
        self.reduce(letters).is_empty()
    }

    pub fn is_identity(&self, w: &Word) -> Result<bool> {
        self.check_word(w)?;
        Ok(self.reduce(w.letters()).is_empty())
    }

    pub fn commutator_is_trivial(&self, a: &Word, b: &Word) -> Result<bool> {
        self.equal(&a.concat(b), &b.concat(a))
    }
}

impl fmt::Display for CommutationGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertex_count)?;
        for (i, j) in self.edges() {
            writeln!(f, "{i} {j}")?;
        }
        Ok(())
    }
}

impl FromStr for CommutationGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "graph",
            input: s.to_string(),
        };
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(bad)?;
        let count = header
            .strip_prefix("vertices:")
            .and_then(|rest| rest.trim().parse::<usize>().ok())
            .ok_or_else(bad)?;
        let edges = lines
            .map(|line| {
                let mut it = line.split_whitespace().map(str::parse::<usize>);
                match (it.next(), it.next(), it.next()) {
                    (Some(Ok(i)), Some(Ok(j)), None) => Ok((i, j)),
                    _ => Err(bad()),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        CommutationGraph::new(count, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(g: &CommutationGraph, letters: &[Generator]) -> Vec<Generator> {
        g.normal_form(&Word::new(letters)).unwrap().into_letters()
    }

    #[test]
    fn twin_graph_shapes() {
        let g2 = CommutationGraph::twin(2);
        assert_eq!(g2.vertex_count(), 1);
        assert!(g2.edges().is_empty());
        assert_eq!(CommutationGraph::twin(4).edges(), vec![(1, 3)]);
        let g6 = CommutationGraph::twin(6);
        assert_eq!(g6.vertex_count(), 5);
        assert_eq!(g6.edges(), vec![(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)]);
        assert_eq!(CommutationGraph::twin(1).vertex_count(), 0);
    }

    #[test]
    fn a_graph_edges() {
        let a = CommutationGraph::a_graph();
        assert_eq!(a.edges().len(), 9);
        assert!(a.commutes(1, 3));
        assert!(!a.commutes(2, 5));
        assert!(a.commutes(8, 5));
    }

    #[test]
    fn normal_form_examples() {
        let g = CommutationGraph::twin(6);
        assert_eq!(nf(&g, &[1, 1]), Vec::<u8>::new());
        assert_eq!(nf(&g, &[3, 1]), vec![1, 3]);
        assert_eq!(nf(&g, &[1, 3, 1]), vec![3]);
        assert_eq!(nf(&g, &[1, 2, 1]), vec![1, 2, 1]);
        assert_eq!(nf(&g, &[5, 3, 1, 2, 4]), vec![1, 3, 2, 5, 4]);
    }

    #[test]
    fn invalid_letters_rejected() {
        let g = CommutationGraph::twin(6);
        assert_eq!(
            g.normal_form(&Word::new([1, 6])),
            Err(Error::InvalidGenerator {
                letter: 6,
                vertex_count: 5
            })
        );
        assert!(g.word(vec![0]).is_err());
        assert!(CommutationGraph::new(3, &[(1, 1)]).is_err());
        assert!(CommutationGraph::new(3, &[(1, 4)]).is_err());
        assert!(CommutationGraph::new(65, &[]).is_err());
    }

    #[test]
    fn equality_and_commutators() {
        let g = CommutationGraph::twin(6);
        assert!(g.equal(&Word::new([1, 3]), &Word::new([3, 1])).unwrap());
        assert!(!g.equal(&Word::new([1, 2]), &Word::new([2, 1])).unwrap());
        let gw = Word::new([1, 2]).pow(3);
        let hw = Word::new([4, 5]).pow(3);
        let comm = gw.concat(&hw).concat(&gw.inverse()).concat(&hw.inverse());
        assert!(g.is_identity(&comm).unwrap());
        assert!(g.commutator_is_trivial(&Word::new([1]), &Word::new([3])).unwrap());
        assert!(!g.commutator_is_trivial(&Word::new([1]), &Word::new([2])).unwrap());
        let a = CommutationGraph::a_graph();
        assert!(a.commutator_is_trivial(&Word::new([5]), &Word::new([8])).unwrap());
    }

    #[test]
    fn text_formats() {
        assert_eq!(Word::new([1, 2, 1]).to_string(), "1 2 1");
        assert_eq!(Word::empty().to_string(), "e");
        assert_eq!("e".parse::<Word>().unwrap(), Word::empty());
        assert_eq!(" 3  1 ".parse::<Word>().unwrap(), Word::new([3, 1]));
        assert!("1 x".parse::<Word>().is_err());
        assert!("0".parse::<Word>().is_err());
        let g = CommutationGraph::twin(4);
        let text = g.to_string();
        assert_eq!(text, "vertices: 3\n1 3\n");
        assert_eq!(text.parse::<CommutationGraph>().unwrap(), g);
    }
}
