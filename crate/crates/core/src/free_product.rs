//! Free products of two groups with solvable word problem, in syllable form.

use std::fmt::Debug;
use std::hash::Hash;

use crate::graph_words::{CommutationGraph, Generator};

/// A group given by words over an alphabet together with a canonical form.
pub trait WordGroup {
    type Letter: Clone + Eq + Ord + Hash + Debug;

    fn inverse(&self, word: &[Self::Letter]) -> Vec<Self::Letter>;

    /// Canonical representative; two words are equal in the group iff their
    /// reductions coincide.
    fn reduce(&self, word: &[Self::Letter]) -> Vec<Self::Letter>;

    fn is_identity(&self, word: &[Self::Letter]) -> bool {
        self.reduce(word).is_empty()
    }
}

/// Graph product of groups of order two. Letters must be valid vertices.
impl WordGroup for CommutationGraph {
    type Letter = Generator;

    fn inverse(&self, word: &[Generator]) -> Vec<Generator> {
        word.iter().rev().copied().collect()
    }

    fn reduce(&self, word: &[Generator]) -> Vec<Generator> {
        self.normal_form_unchecked(word).into_letters()
    }
}

/// Free group on generators `1..=rank`; letter `-i` is the inverse of `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeGroup {
    pub rank: u32,
}

impl WordGroup for FreeGroup {
    type Letter = i32;

    fn inverse(&self, word: &[i32]) -> Vec<i32> {
        word.iter().rev().map(|&x| -x).collect()
    }

    fn reduce(&self, word: &[i32]) -> Vec<i32> {
        let mut out: Vec<i32> = Vec::with_capacity(word.len());
        for &x in word {
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    First,
    Second,
}

/// A block of letters from one free factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorWord<L1, L2> {
    First(Vec<L1>),
    Second(Vec<L2>),
}

impl<L1, L2> FactorWord<L1, L2> {
    pub fn side(&self) -> Side {
        match self {
            FactorWord::First(_) => Side::First,
            FactorWord::Second(_) => Side::Second,
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            FactorWord::First(w) => w.is_empty(),
            FactorWord::Second(w) => w.is_empty(),
        }
    }
}

/// Concatenates adjacent blocks from the same factor; drops empty blocks.
pub fn merge_adjacent<L1, L2>(blocks: impl IntoIterator<Item = FactorWord<L1, L2>>) -> Vec<FactorWord<L1, L2>> {
    let mut out: Vec<FactorWord<L1, L2>> = Vec::new();
    for block in blocks {
        if block.is_empty() {
            continue;
        }
        match (out.last_mut(), block) {
            (Some(FactorWord::First(top)), FactorWord::First(w)) => top.extend(w),
            (Some(FactorWord::Second(top)), FactorWord::Second(w)) => top.extend(w),
            (_, block) => out.push(block),
        }
    }
    out
}

/// `G₁ * G₂`.
#[derive(Clone, Debug)]
pub struct FreeProduct<G1, G2> {
    pub first: G1,
    pub second: G2,
}

pub type Blocks<G1, G2> = Vec<FactorWord<<G1 as WordGroup>::Letter, <G2 as WordGroup>::Letter>>;

impl<G1: WordGroup, G2: WordGroup> FreeProduct<G1, G2> {
    pub fn new(first: G1, second: G2) -> Self {
        FreeProduct { first, second }
    }

    /// Alternating sequence of nontrivial reduced syllables.
    pub fn normal_form(&self, blocks: &[FactorWord<G1::Letter, G2::Letter>]) -> Blocks<G1, G2> {
        let mut stack: Blocks<G1, G2> = Vec::new();
        for block in blocks {
            match block {
                FactorWord::First(w) => {
                    let prefix = match stack.last() {
                        Some(FactorWord::First(top)) => {
                            let top = top.clone();
                            stack.pop();
                            top
                        }
                        _ => Vec::new(),
                    };
                    let merged = self.first.reduce(&[prefix, w.clone()].concat());
                    if !merged.is_empty() {
                        stack.push(FactorWord::First(merged));
                    }
                }
                FactorWord::Second(w) => {
                    let prefix = match stack.last() {
                        Some(FactorWord::Second(top)) => {
                            let top = top.clone();
                            stack.pop();
                            top
                        }
                        _ => Vec::new(),
                    };
                    let merged = self.second.reduce(&[prefix, w.clone()].concat());
                    if !merged.is_empty() {
                        stack.push(FactorWord::Second(merged));
                    }
                }
            }
        }
        stack
    }

    pub fn equal(&self, a: &[FactorWord<G1::Letter, G2::Letter>], b: &[FactorWord<G1::Letter, G2::Letter>]) -> bool {
        self.normal_form(a) == self.normal_form(b)
    }

    pub fn inverse(&self, blocks: &[FactorWord<G1::Letter, G2::Letter>]) -> Blocks<G1, G2> {
        blocks
            .iter()
            .rev()
            .map(|b| match b {
                FactorWord::First(w) => FactorWord::First(self.first.inverse(w)),
                FactorWord::Second(w) => FactorWord::Second(self.second.inverse(w)),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Fw = FactorWord<i32, i32>;

    #[test]
    fn free_reduction() {
        let f = FreeGroup { rank: 2 };
        assert_eq!(f.reduce(&[1, 2, -2, -1, 1]), vec![1]);
        assert_eq!(f.inverse(&[1, -2]), vec![2, -1]);
        assert!(f.is_identity(&[1, -1, 2, -2]));
    }

    #[test]
    fn syllables_merge_across_cancelled_blocks() {
        let p = FreeProduct::new(FreeGroup { rank: 1 }, FreeGroup { rank: 1 });
        let blocks: Vec<Fw> = vec![
            Fw::First(vec![1]),
            Fw::Second(vec![1, -1]),
            Fw::First(vec![1]),
            Fw::Second(vec![]),
            Fw::Second(vec![1]),
        ];
        assert_eq!(p.normal_form(&blocks), vec![Fw::First(vec![1, 1]), Fw::Second(vec![1])]);
        let inv = p.inverse(&blocks);
        let mut joined = blocks.clone();
        joined.extend(inv);
        assert!(p.normal_form(&joined).is_empty());
    }

    #[test]
    fn merging_keeps_letters() {
        let merged = merge_adjacent(vec![
            Fw::First(vec![1]),
            Fw::First(vec![-1]),
            Fw::Second(vec![]),
            Fw::First(vec![2]),
        ]);
        assert_eq!(merged, vec![Fw::First(vec![1, -1, 2])]);
    }

    #[test]
    fn graph_product_factor() {
        let a = CommutationGraph::a_graph();
        assert_eq!(WordGroup::reduce(&a, &[3, 1, 1, 2, 2]), vec![3]);
        assert_eq!(WordGroup::reduce(&a, &[3, 1]), vec![1, 3]);
    }
}
