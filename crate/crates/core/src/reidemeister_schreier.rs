//! Reidemeister–Schreier presentations of finite-index subgroups given as
//! stabilisers of a point under a permutation action, and their first
//! homology.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::snf::{abelian_invariants, AbelianInvariants, IntegerMatrix};

/// Word in a presentation's generators: `(generator index, ±1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SignedWord(pub Vec<(usize, i8)>);

impl SignedWord {
    pub fn letters(&self) -> &[(usize, i8)] {
        &self.0
    }

    pub fn inverse(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        SignedWord(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Free reduction.
    pub fn reduced(&self) -> SignedWord {
        let mut out: Vec<(usize, i8)> = Vec::with_capacity(self.0.len());
        for &(g, e) in &self.0 {
            if out.last() == Some(&(g, -e)) {
                out.pop();
            } else {
                out.push((g, e));
            }
        }
        SignedWord(out)
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(g, e)| if e > 0 { format!("x{g}") } else { format!("x{g}^-1") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationData {
    pub generator_count: usize,
    pub relators: Vec<SignedWord>,
}

impl PresentationData {
    pub fn new(generator_count: usize, relators: Vec<SignedWord>) -> Result<Self> {
        for r in &relators {
            if let Some(&(g, e)) = r.0.iter().find(|&&(g, e)| g >= generator_count || e.abs() != 1) {
                return Err(Error::Presentation(format!("letter ({g}, {e}) out of range")));
            }
        }
        Ok(PresentationData {
            generator_count,
            relators,
        })
    }

    /// `B̄ₙ`: generator `i` is `σ_{i+1}`; relators `σᵢ²` first, then
    /// `σᵢσⱼσᵢ⁻¹σⱼ⁻¹` for `i + 1 < j` in lexicographic order.
    pub fn twin(strands: usize) -> PresentationData {
        let m = strands.saturating_sub(1);
        let mut relators: Vec<SignedWord> = (0..m).map(|i| SignedWord(vec![(i, 1), (i, 1)])).collect();
        for i in 0..m {
            for j in i + 2..m {
                relators.push(SignedWord(vec![(i, 1), (j, 1), (i, -1), (j, -1)]));
            }
        }
        PresentationData {
            generator_count: m,
            relators,
        }
    }

    /// Abelianized relator matrix: one row per relator.
    pub fn relation_matrix(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::new(self.generator_count);
        for r in &self.relators {
            m.push_row(r.0.iter().map(|&(g, e)| (g, e as i64)));
        }
        m
    }
}

/// Free rank and torsion of the abelianization.
pub fn abelianization(p: &PresentationData) -> AbelianInvariants {
    abelian_invariants(&p.relation_matrix())
}

/// Right action `point · generator` of each generator on `0..points`.
pub type Action = Vec<Vec<usize>>;

/// The regular right action of `Sₙ` through `σᵢ ↦ (i i+1)`, on permutations
/// listed in lexicographic order of their image lists (the identity is
/// point 0).
pub fn symmetric_regular_action(n: usize) -> Action {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        perms.push(current.clone());
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n)
            .rev()
            .find(|&j| current[j] > current[i - 1])
            .expect("successor exists");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    let rank = |p: &Vec<usize>| perms.binary_search(p).expect("listed");
    (0..n.saturating_sub(1))
        .map(|i| {
            perms
                .iter()
                .map(|p| {
                    // p · (i i+1): strand at position i and i+1 swap
                    let q: Vec<usize> = p
                        .iter()
                        .map(|&x| {
                            if x == i {
                                i + 1
                            } else if x == i + 1 {
                                i
                            } else {
                                x
                            }
                        })
                        .collect();
                    rank(&q)
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct CosetTable {
    pub coset_count: usize,
    forward: Action,
    backward: Action,
    /// Transversal word of each coset (breadth-first spanning tree).
    pub transversal: Vec<SignedWord>,
    /// `tree[c][g]`: whether the Schreier generator `(c, g)` is a tree edge.
    tree: Vec<Vec<bool>>,
}

impl CosetTable {
    pub fn act(&self, coset: usize, letter: (usize, i8)) -> usize {
        if letter.1 > 0 {
            self.forward[letter.0][coset]
        } else {
            self.backward[letter.0][coset]
        }
    }

    pub fn act_word(&self, coset: usize, w: &SignedWord) -> usize {
        w.0.iter().fold(coset, |c, &l| self.act(c, l))
    }

    pub fn is_tree_edge(&self, coset: usize, generator: usize) -> bool {
        self.tree[coset][generator]
    }
}

/// Coset table of the stabiliser of point 0 under `images`.
pub fn coset_table(p: &PresentationData, images: &Action) -> Result<CosetTable> {
    if images.len() != p.generator_count {
        return Err(Error::Presentation(format!(
            "{} generator images for {} generators",
            images.len(),
            p.generator_count
        )));
    }
    let points = images.first().map_or(1, |a| a.len());
    let mut backward = Vec::with_capacity(images.len());
    for (g, a) in images.iter().enumerate() {
        let mut inv = vec![usize::MAX; points];
        for (x, &y) in a.iter().enumerate() {
            if a.len() != points || y >= points || inv[y] != usize::MAX {
                return Err(Error::Presentation(format!(
                    "image of generator {g} is not a permutation"
                )));
            }
            inv[y] = x;
        }
        backward.push(inv);
    }
    let mut table = CosetTable {
        coset_count: points,
        forward: images.clone(),
        backward,
        transversal: vec![SignedWord::default(); points],
        tree: vec![vec![false; p.generator_count]; points],
    };
    for (index, r) in p.relators.iter().enumerate() {
        if (0..points).any(|x| table.act_word(x, r) != x) {
            return Err(Error::InconsistentImages { relator: index });
        }
    }
    let mut seen = vec![false; points];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut orbit = 1;
    while let Some(c) = queue.pop_front() {
        for g in 0..p.generator_count {
            for e in [1i8, -1] {
                let d = table.act(c, (g, e));
                if seen[d] {
                    continue;
                }
                seen[d] = true;
                orbit += 1;
                let mut word = table.transversal[c].clone();
                word.0.push((g, e));
                table.transversal[d] = word;
                if e > 0 {
                    table.tree[c][g] = true;
                } else {
                    table.tree[d][g] = true;
                }
                queue.push_back(d);
            }
        }
    }
    if orbit != points {
        return Err(Error::NotTransitive { orbit, points });
    }
    Ok(table)
}

/// Subgroup presentation on the non-tree Schreier generators.
#[derive(Clone, Debug)]
pub struct SchreierPresentation {
    pub presentation: PresentationData,
    pub table: CosetTable,
    /// `(coset, generator)` of each Schreier generator.
    pub generators: Vec<(usize, usize)>,
    /// For each relator of the subgroup: `(coset of t, original relator)`.
    pub relator_sources: Vec<(usize, usize)>,
}

impl SchreierPresentation {
    pub fn index(&self) -> usize {
        self.table.coset_count
    }

    /// `t_c · x · t_{c·x}⁻¹` in the original generators.
    pub fn generator_word(&self, k: usize) -> SignedWord {
        let (c, g) = self.generators[k];
        let t = &self.table.transversal;
        let d = self.table.act(c, (g, 1));
        t[c].concat(&SignedWord(vec![(g, 1)])).concat(&t[d].inverse())
    }

    /// Substitutes Schreier generator words into a subgroup word.
    pub fn expand(&self, w: &SignedWord) -> SignedWord {
        let mut out = Vec::new();
        for &(k, e) in &w.0 {
            let g = self.generator_word(k);
            out.extend(if e > 0 { g } else { g.inverse() }.0);
        }
        SignedWord(out).reduced()
    }
}

pub fn subgroup_presentation(p: &PresentationData, images: &Action) -> Result<SchreierPresentation> {
    let table = coset_table(p, images)?;
    let mut id = vec![vec![usize::MAX; p.generator_count]; table.coset_count];
    let mut generators = Vec::new();
    for (c, row) in id.iter_mut().enumerate() {
        for (g, slot) in row.iter_mut().enumerate() {
            if !table.is_tree_edge(c, g) {
                *slot = generators.len();
                generators.push((c, g));
            }
        }
    }
    let mut relators = Vec::with_capacity(table.coset_count * p.relators.len());
    let mut relator_sources = Vec::with_capacity(relators.capacity());
    for c in 0..table.coset_count {
        for (ri, r) in p.relators.iter().enumerate() {
            let mut current = c;
            let mut out = Vec::new();
            for &(g, e) in &r.0 {
                let (source, next) = if e > 0 {
                    (current, table.act(current, (g, 1)))
                } else {
                    let prev = table.act(current, (g, -1));
                    (prev, prev)
                };
                if id[source][g] != usize::MAX {
                    out.push((id[source][g], e));
                }
                current = next;
            }
            relators.push(SignedWord(out));
            relator_sources.push((c, ri));
        }
    }
    Ok(SchreierPresentation {
        presentation: PresentationData {
            generator_count: generators.len(),
            relators,
        },
        table,
        generators,
        relator_sources,
    })
}

/// Summary of `H₁(P̄ₙ)` computed from the index-`n!` presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureTwinHomology {
    pub strands: usize,
    pub index: usize,
    pub generators: usize,
    pub relators: usize,
    pub homology: AbelianInvariants,
}

pub fn pure_twin_homology(strands: usize) -> Result<PureTwinHomology> {
    let p = PresentationData::twin(strands);
    let action = if strands <= 1 {
        Vec::new()
    } else {
        symmetric_regular_action(strands)
    };
    let sp = subgroup_presentation(&p, &action)?;
    Ok(PureTwinHomology {
        strands,
        index: sp.index(),
        generators: sp.presentation.generator_count,
        relators: sp.presentation.relators.len(),
        homology: abelianization(&sp.presentation),
    })
}
