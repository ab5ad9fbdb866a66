//! The bicoloured braid group `H ≅ A′ * A″`.
//!
//! `H` is the subgroup of twin braids on six strands preserving the red
//! strands `{1, 2, 3}`. A braid word in `H` is rewritten into the sixteen
//! letters `a′_1..a′_8`, `a″_1..a″_8` by walking it while tracking which
//! positions hold red strands: crossings of differently coloured strands
//! contribute nothing, crossings of equally coloured strands contribute the
//! generator stored in the crossing table for the current red positions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::free_product::{merge_adjacent, FactorWord, FreeProduct};
use crate::graph_words::{CommutationGraph, Generator, Word};
use crate::twin_braids::{colour_permutations, shuffle_word, ShuffleTriple};

/// Which copy of `A` inside `H = A′ * A″`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Primed,
    DoublePrimed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HLetter {
    pub factor: Factor,
    pub index: u8,
}

impl HLetter {
    pub fn new(factor: Factor, index: usize) -> Result<Self> {
        if (1..=8).contains(&index) {
            Ok(HLetter {
                factor,
                index: index as u8,
            })
        } else {
            Err(Error::InvalidHLetter(index))
        }
    }

    pub const fn primed(index: u8) -> Self {
        HLetter {
            factor: Factor::Primed,
            index,
        }
    }

    pub const fn double_primed(index: u8) -> Self {
        HLetter {
            factor: Factor::DoublePrimed,
            index,
        }
    }
}

impl fmt::Display for HLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.factor {
            Factor::Primed => 'A',
            Factor::DoublePrimed => 'B',
        };
        write!(f, "{tag}{}", self.index)
    }
}

/// Word in the generators of `A′ * A″`; not necessarily reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HWord(pub Vec<HLetter>);

impl HWord {
    pub fn letters(&self) -> &[HLetter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Maximal same-factor blocks, primed letters on the first side.
    pub fn blocks(&self) -> Vec<FactorWord<Generator, Generator>> {
        merge_adjacent(self.0.iter().map(|l| match l.factor {
            Factor::Primed => FactorWord::First(vec![l.index]),
            Factor::DoublePrimed => FactorWord::Second(vec![l.index]),
        }))
    }

    pub fn from_blocks(blocks: &[FactorWord<Generator, Generator>]) -> HWord {
        let mut letters = Vec::new();
        for block in blocks {
            match block {
                FactorWord::First(w) => letters.extend(w.iter().map(|&i| HLetter::primed(i))),
                FactorWord::Second(w) => letters.extend(w.iter().map(|&i| HLetter::double_primed(i))),
            }
        }
        HWord(letters)
    }
}

impl fmt::Display for HWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.0.iter().map(HLetter::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for HWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "e" {
            return Ok(HWord::default());
        }
        let bad = || Error::Parse {
            what: "H word",
            input: s.to_string(),
        };
        trimmed
            .split_whitespace()
            .map(|tok| {
                let factor = match tok.chars().next() {
                    Some('A') => Factor::Primed,
                    Some('B') => Factor::DoublePrimed,
                    _ => return Err(bad()),
                };
                let index: usize = tok[1..].parse().map_err(|_| bad())?;
                HLetter::new(factor, index)
            })
            .collect::<Result<Vec<_>>>()
            .map(HWord)
    }
}

type Cell = Option<HLetter>;

const fn p(i: u8) -> Cell {
    Some(HLetter::primed(i))
}

const fn d(i: u8) -> Cell {
    Some(HLetter::double_primed(i))
}

const NO: Cell = None;

/// Rows of the crossing table in their published order: red positions after
/// the shuffle, then the generator produced by `q·σ_m·q⁻¹` for `m = 1..5`.
const TABLE: [([u8; 3], [Cell; 5]); 20] = [
    ([1, 2, 3], [p(1), p(2), NO, p(3), p(4)]),
    ([1, 2, 4], [p(1), NO, NO, NO, p(4)]),
    ([1, 2, 5], [p(1), NO, p(7), NO, NO]),
    ([1, 2, 6], [p(1), NO, p(7), p(8), NO]),
    ([1, 3, 4], [NO, NO, p(6), NO, p(4)]),
    ([1, 3, 5], [NO, NO, NO, NO, NO]),
    ([1, 3, 6], [NO, NO, NO, p(8), NO]),
    ([2, 3, 6], [NO, p(5), NO, p(8), NO]),
    ([2, 3, 5], [NO, p(5), NO, NO, NO]),
    ([2, 3, 4], [NO, p(5), p(6), NO, p(4)]),
    ([4, 5, 6], [d(1), d(2), NO, d(3), d(4)]),
    ([3, 5, 6], [d(1), NO, NO, NO, d(4)]),
    ([3, 4, 6], [d(1), NO, d(7), NO, NO]),
    ([3, 4, 5], [d(1), NO, d(7), d(8), NO]),
    ([2, 5, 6], [NO, NO, d(6), NO, d(4)]),
    ([2, 4, 6], [NO, NO, NO, NO, NO]),
    ([2, 4, 5], [NO, NO, NO, d(8), NO]),
    ([1, 4, 5], [NO, d(5), NO, d(8), NO]),
    ([1, 4, 6], [NO, d(5), NO, NO, NO]),
    ([1, 5, 6], [NO, d(5), d(6), NO, d(4)]),
];

/// Commutation relations listed alongside each row, as index pairs of the
/// row's own factor.
const TABLE_RELATIONS: [&[(u8, u8)]; 20] = [
    &[(1, 3), (1, 4), (2, 3), (2, 4)],
    &[(1, 4)],
    &[(1, 7)],
    &[(1, 7), (1, 8)],
    &[(4, 6)],
    &[],
    &[],
    &[(5, 8)],
    &[],
    &[(4, 5), (4, 6)],
    &[(1, 3), (2, 3), (1, 4), (2, 4)],
    &[(1, 4)],
    &[(1, 7)],
    &[(1, 7), (1, 8)],
    &[(4, 6)],
    &[],
    &[],
    &[(5, 8)],
    &[],
    &[(4, 5), (4, 6)],
];

/// Rows of the crossing table in published order.
pub fn table1_rows() -> Vec<ShuffleTriple> {
    TABLE
        .iter()
        .map(|(t, _)| ShuffleTriple::new(t[0] as usize, t[1] as usize, t[2] as usize).unwrap())
        .collect()
}

/// Generator produced by crossing positions `m, m + 1` after `q_t`, or `None`
/// when the crossing involves strands of different colours.
pub fn table1_cell(t: ShuffleTriple, m: usize) -> Option<HLetter> {
    assert!((1..=5).contains(&m), "σ index {m} out of range");
    TABLE
        .iter()
        .find(|(row, _)| *row == t.positions())
        .map(|(_, cells)| cells[m - 1])
        .expect("every triple has a row")
}

/// Published commutation relations of a row.
pub fn table1_relations(t: ShuffleTriple) -> Vec<(HLetter, HLetter)> {
    let row = TABLE
        .iter()
        .position(|(r, _)| *r == t.positions())
        .expect("every triple has a row");
    let factor = if row < 10 { Factor::Primed } else { Factor::DoublePrimed };
    TABLE_RELATIONS[row]
        .iter()
        .map(|&(i, j)| (HLetter { factor, index: i }, HLetter { factor, index: j }))
        .collect()
}

/// First cell (top to bottom, then left to right) carrying the letter.
pub fn defining_cell(letter: HLetter) -> (ShuffleTriple, usize) {
    for (row, cells) in TABLE.iter() {
        if let Some(m) = cells.iter().position(|c| *c == Some(letter)) {
            let t = ShuffleTriple::new(row[0] as usize, row[1] as usize, row[2] as usize).unwrap();
            return (t, m + 1);
        }
    }
    unreachable!("every generator appears in the table")
}

/// `q · σ_m · q⁻¹` for the given triple and crossing.
pub fn conjugated_crossing(t: ShuffleTriple, m: usize) -> Word {
    shuffle_word(t).conjugate(&Word::new([m as Generator]))
}

/// Braid word of `a′_k` or `a″_k`.
pub fn realize_a_generator(index: usize, factor: Factor) -> Result<Word> {
    let letter = HLetter::new(factor, index)?;
    let (t, m) = defining_cell(letter);
    Ok(conjugated_crossing(t, m))
}

pub fn realize_h_letter(letter: HLetter) -> Word {
    let (t, m) = defining_cell(letter);
    conjugated_crossing(t, m)
}

pub fn realize_h(hw: &HWord) -> Word {
    let mut out = Word::empty();
    for &letter in hw.letters() {
        out.extend(&realize_h_letter(letter));
    }
    out
}

/// Rewrites a bicoloured braid word over `A′ * A″`, letter by letter.
pub fn decompose_h(w: &Word) -> Result<HWord> {
    if colour_permutations(w)?.is_none() {
        return Err(Error::NotBicoloured);
    }
    let mut red = ShuffleTriple::IDENTITY.mask();
    let mut out = Vec::new();
    for &s in w.letters() {
        let pos = s as usize - 1;
        if red[pos] != red[pos + 1] {
            red.swap(pos, pos + 1);
            continue;
        }
        let triple = ShuffleTriple::from_mask(&red).expect("three red positions");
        match table1_cell(triple, s as usize) {
            Some(letter) => out.push(letter),
            None => {
                return Err(Error::Stage {
                    stage: "decompose_h",
                    detail: format!("same-colour crossing σ{s} after q{triple} has no table entry"),
                })
            }
        }
    }
    Ok(HWord(out))
}

/// `A′ * A″` with both factors presented by [`CommutationGraph::a_graph`].
pub fn h_product() -> FreeProduct<CommutationGraph, CommutationGraph> {
    FreeProduct::new(CommutationGraph::a_graph(), CommutationGraph::a_graph())
}

/// Canonical syllable form of an element of `A′ * A″`.
pub fn h_normal_form(hw: &HWord) -> HWord {
    HWord::from_blocks(&h_product().normal_form(&hw.blocks()))
}

pub fn h_equal(a: &HWord, b: &HWord) -> bool {
    h_normal_form(a) == h_normal_form(b)
}

/// Outcome of re-deriving one cell of the crossing table from braids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellCheck {
    pub triple: ShuffleTriple,
    pub crossing: usize,
    pub entry: Option<HLetter>,
    pub same_colour: bool,
    pub pass: bool,
}

/// Re-derives all 100 cells in `B̄₆`: a filled cell must be a same-colour
/// crossing whose conjugate equals the defining realization of its label; a
/// blank cell must be a cross-colour crossing with `q_before σ_m q_after⁻¹ = 1`.
pub fn verify_table1() -> Vec<CellCheck> {
    let twin = CommutationGraph::twin(6);
    let mut checks = Vec::with_capacity(100);
    for t in table1_rows() {
        let red = t.mask();
        for m in 1..=5 {
            let same_colour = red[m - 1] == red[m];
            let entry = table1_cell(t, m);
            let pass = match entry {
                Some(letter) => {
                    same_colour
                        && twin.equal_unchecked(conjugated_crossing(t, m).letters(), realize_h_letter(letter).letters())
                }
                None => {
                    let mut after = red;
                    after.swap(m - 1, m);
                    !same_colour
                        && ShuffleTriple::from_mask(&after).is_some_and(|t2| {
                            let w = shuffle_word(t)
                                .concat(&Word::new([m as Generator]))
                                .concat(&shuffle_word(t2).inverse());
                            twin.reduce_is_empty(w.letters())
                        })
                }
            };
            checks.push(CellCheck {
                triple: t,
                crossing: m,
                entry,
                same_colour,
                pass,
            });
        }
    }
    checks
}

/// Relations implied by each row (filled cells at distance ≥ 2), compared
/// with the published relation column; returns mismatching rows.
pub fn verify_table1_relations() -> Vec<ShuffleTriple> {
    table1_rows()
        .into_iter()
        .filter(|&t| {
            let cells: Vec<(usize, HLetter)> = (1..=5).filter_map(|m| table1_cell(t, m).map(|l| (m, l))).collect();
            let mut implied: Vec<(HLetter, HLetter)> = Vec::new();
            for (i, &(m1, l1)) in cells.iter().enumerate() {
                for &(m2, l2) in &cells[i + 1..] {
                    if m2 > m1 + 1 {
                        implied.push((l1.min(l2), l1.max(l2)));
                    }
                }
            }
            let mut listed: Vec<_> = table1_relations(t)
                .into_iter()
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            implied.sort();
            listed.sort();
            implied != listed
        })
        .collect()
}
