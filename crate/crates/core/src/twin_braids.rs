//! Twin-group structure on top of [`graph_words`](crate::graph_words):
//! permutations of braid words, purity, the red/black colouring on six
//! strands and the straight-line shuffle braids `q_{i₁i₂i₃}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph_words::{CommutationGraph, Generator, Word};

/// `images[k - 1]` is the bottom position of the strand starting at top
/// position `k`. Products compose left to right: `a·b` is `a` on top of `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    /// From 1-based one-line notation.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let idx = i as usize;
            if idx == 0 || idx > n || seen[idx - 1] {
                return Err(Error::Parse {
                    what: "permutation",
                    input: format!("{images:?}"),
                });
            }
            seen[idx - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Image of the 1-based point `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| next.images[i as usize - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.images.len()];
        for (k, &i) in self.images.iter().enumerate() {
            images[i as usize - 1] = k as u8 + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| i as usize == k + 1)
    }

    pub fn inversions(&self) -> usize {
        let v = &self.images;
        (0..v.len())
            .map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count())
            .sum()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(u8::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Permutation of `n` strands induced by a braid word.
pub fn permutation_of(n: usize, w: &Word) -> Result<Permutation> {
    CommutationGraph::twin(n).check_word(w)?;
    Ok(permutation_unchecked(n, w.letters()))
}

pub(crate) fn permutation_unchecked(n: usize, letters: &[Generator]) -> Permutation {
    // strand_at[p] = strand currently at position p (0-based)
    let mut strand_at: Vec<u8> = (1..=n as u8).collect();
    for &s in letters {
        strand_at.swap(s as usize - 1, s as usize);
    }
    Permutation { images: strand_at }.inverse()
}

pub fn is_pure(n: usize, w: &Word) -> Result<bool> {
    Ok(permutation_of(n, w)?.is_identity())
}

/// A permutation of `{1, 2, 3}` in one-line notation.
pub type Perm3 = [u8; 3];

pub const PERM3_IDENTITY: Perm3 = [1, 2, 3];

pub fn perm3_then(a: &Perm3, b: &Perm3) -> Perm3 {
    [b[a[0] as usize - 1], b[a[1] as usize - 1], b[a[2] as usize - 1]]
}

pub fn perm3_inverse(a: &Perm3) -> Perm3 {
    let mut out = [0u8; 3];
    for (k, &i) in a.iter().enumerate() {
        out[i as usize - 1] = k as u8 + 1;
    }
    out
}

/// Induced permutations of a bicoloured braid on its red strands `1, 2, 3` and
/// its black strands `4, 5, 6` (renumbered `1, 2, 3`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColourPair {
    pub red: Perm3,
    pub black: Perm3,
}

impl ColourPair {
    pub const IDENTITY: ColourPair = ColourPair {
        red: PERM3_IDENTITY,
        black: PERM3_IDENTITY,
    };

    pub fn then(&self, next: &ColourPair) -> ColourPair {
        ColourPair {
            red: perm3_then(&self.red, &next.red),
            black: perm3_then(&self.black, &next.black),
        }
    }

    pub fn inverse(&self) -> ColourPair {
        ColourPair {
            red: perm3_inverse(&self.red),
            black: perm3_inverse(&self.black),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Exchanges the roles of the two colours.
    pub fn swapped(&self) -> ColourPair {
        ColourPair {
            red: self.black,
            black: self.red,
        }
    }

    pub fn from_permutation(p: &Permutation) -> Option<ColourPair> {
        if p.degree() != 6 {
            return None;
        }
        let img = p.images();
        if img[..3].iter().any(|&i| i > 3) {
            return None;
        }
        Some(ColourPair {
            red: [img[0], img[1], img[2]],
            black: [img[3] - 3, img[4] - 3, img[5] - 3],
        })
    }
}

impl fmt::Display for ColourPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.red;
        let b = self.black;
        write!(f, "({}{}{},{}{}{})", r[0], r[1], r[2], b[0], b[1], b[2])
    }
}

/// `None` when the word does not preserve `{1, 2, 3}`.
pub fn colour_permutations(w: &Word) -> Result<Option<ColourPair>> {
    Ok(ColourPair::from_permutation(&permutation_of(6, w)?))
}

/// An increasing triple `1 ≤ i₁ < i₂ < i₃ ≤ 6`, the positions the red strands
/// occupy after the corresponding shuffle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShuffleTriple([u8; 3]);

impl ShuffleTriple {
    pub const IDENTITY: ShuffleTriple = ShuffleTriple([1, 2, 3]);
    pub const OPPOSITE: ShuffleTriple = ShuffleTriple([4, 5, 6]);

    pub fn new(i1: usize, i2: usize, i3: usize) -> Result<Self> {
        if 1 <= i1 && i1 < i2 && i2 < i3 && i3 <= 6 {
            Ok(ShuffleTriple([i1 as u8, i2 as u8, i3 as u8]))
        } else {
            Err(Error::InvalidTriple(i1, i2, i3))
        }
    }

    /// All 20 triples in lexicographic order.
    pub fn all() -> Vec<ShuffleTriple> {
        let mut out = Vec::with_capacity(20);
        for a in 1..=4u8 {
            for b in a + 1..=5 {
                for c in b + 1..=6 {
                    out.push(ShuffleTriple([a, b, c]));
                }
            }
        }
        out
    }

    pub fn positions(&self) -> [u8; 3] {
        self.0
    }

    pub fn contains(&self, position: u8) -> bool {
        self.0.contains(&position)
    }

    /// Triple of red positions, given a mask of which positions are red.
    pub(crate) fn from_mask(red: &[bool; 6]) -> Option<ShuffleTriple> {
        let mut out = [0u8; 3];
        let mut n = 0;
        for (p, &r) in red.iter().enumerate() {
            if r {
                if n == 3 {
                    return None;
                }
                out[n] = p as u8 + 1;
                n += 1;
            }
        }
        (n == 3).then_some(ShuffleTriple(out))
    }

    pub(crate) fn mask(&self) -> [bool; 6] {
        let mut m = [false; 6];
        for &p in &self.0 {
            m[p as usize - 1] = true;
        }
        m
    }

    /// The (3,3)-shuffle sending `k ↦ i_k` for `k = 1, 2, 3` and `4, 5, 6` onto
    /// the complement in increasing order.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<u8> = self.0.to_vec();
        images.extend((1..=6u8).filter(|p| !self.0.contains(p)));
        Permutation { images }
    }
}

impl fmt::Display for ShuffleTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for ShuffleTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits: Vec<usize> = s
            .trim()
            .chars()
            .filter(|c| !matches!(c, ',' | ' ' | '(' | ')'))
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Parse {
                what: "triple",
                input: s.to_string(),
            })?;
        match digits[..] {
            [a, b, c] => ShuffleTriple::new(a, b, c),
            _ => Err(Error::Parse {
                what: "triple",
                input: s.to_string(),
            }),
        }
    }
}

/// Reduced word for a permutation by left-to-right bubble-sort passes:
/// `σ_p` is emitted whenever the strands at `p, p + 1` are out of final order.
pub fn bubble_sort_word(target: &Permutation) -> Word {
    let n = target.degree();
    let mut strand_at: Vec<usize> = (1..=n).collect();
    let mut word = Word::empty();
    loop {
        let mut swapped = false;
        for p in 0..n.saturating_sub(1) {
            if target.apply(strand_at[p]) > target.apply(strand_at[p + 1]) {
                strand_at.swap(p, p + 1);
                word.push(p as Generator + 1);
                swapped = true;
            }
        }
        if !swapped {
            return word;
        }
    }
}

/// The straight-line braid `q_{i₁i₂i₃}`.
pub fn shuffle_word(t: ShuffleTriple) -> Word {
    bubble_sort_word(&t.permutation())
}

/// The commuting pure braids `g = (σ₁σ₂)³` and `h = (σ₄σ₅)³`.
pub fn gh_words() -> (Word, Word) {
    (Word::new([1, 2]).pow(3), Word::new([4, 5]).pow(3))
}

/// The commuting pair `(q⁻¹ g q, q⁻¹ h q)` with `q = q_t`: the strands starting
/// at the positions of `t` are braided like `g`, the others like `h`.
pub fn pair_words(t: ShuffleTriple) -> (Word, Word) {
    let (g, h) = gh_words();
    let q_inv = shuffle_word(t).inverse();
    (q_inv.conjugate(&g), q_inv.conjugate(&h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_examples() {
        assert!(permutation_of(6, &Word::empty()).unwrap().is_identity());
        assert_eq!(
            permutation_of(6, &Word::new([1, 2, 1])).unwrap().images(),
            &[3, 2, 1, 4, 5, 6]
        );
        assert_eq!(
            permutation_of(6, &Word::new([1, 3])).unwrap().images(),
            &[2, 1, 4, 3, 5, 6]
        );
        assert!(permutation_of(3, &Word::new([3])).is_err());
    }

    #[test]
    fn left_to_right_composition() {
        // σ1 then σ2: strand 1 travels 1 -> 2 -> 3
        let p = permutation_of(3, &Word::new([1, 2])).unwrap();
        assert_eq!(p.images(), &[3, 1, 2]);
        let s1 = permutation_of(3, &Word::new([1])).unwrap();
        let s2 = permutation_of(3, &Word::new([2])).unwrap();
        assert_eq!(s1.then(&s2), p);
    }

    #[test]
    fn purity() {
        assert!(is_pure(3, &Word::new([1, 2]).pow(3)).unwrap());
        assert!(!is_pure(6, &Word::new([1])).unwrap());
        let (g, h) = gh_words();
        assert!(is_pure(6, &g.concat(&h)).unwrap());
    }

    #[test]
    fn colours() {
        let c = colour_permutations(&Word::new([1])).unwrap().unwrap();
        assert_eq!(
            c,
            ColourPair {
                red: [2, 1, 3],
                black: PERM3_IDENTITY
            }
        );
        assert_eq!(colour_permutations(&Word::new([3])).unwrap(), None);
        let c = colour_permutations(&Word::new([3, 5, 3])).unwrap().unwrap();
        assert_eq!(
            c,
            ColourPair {
                red: PERM3_IDENTITY,
                black: [1, 3, 2]
            }
        );
    }

    #[test]
    fn shuffle_examples() {
        assert!(shuffle_word(ShuffleTriple::IDENTITY).is_empty());
        let t = ShuffleTriple::new(1, 3, 6).unwrap();
        let q = shuffle_word(t);
        assert_eq!(q.len(), 4);
        assert_eq!(permutation_of(6, &q).unwrap().images(), &[1, 3, 6, 2, 4, 5]);
        let q = shuffle_word(ShuffleTriple::OPPOSITE);
        assert_eq!(q.len(), 9);
        assert_eq!(permutation_of(6, &q).unwrap().images(), &[4, 5, 6, 1, 2, 3]);
        assert_eq!(ShuffleTriple::new(1, 2, 4).map(shuffle_word).unwrap(), Word::new([3]));
    }

    #[test]
    fn triples() {
        assert_eq!(ShuffleTriple::all().len(), 20);
        assert!(ShuffleTriple::new(2, 2, 3).is_err());
        assert!(ShuffleTriple::new(1, 2, 7).is_err());
        assert_eq!("136".parse::<ShuffleTriple>().unwrap().to_string(), "136");
        assert!("13".parse::<ShuffleTriple>().is_err());
        assert!("321".parse::<ShuffleTriple>().is_err());
    }

    #[test]
    fn inversions_and_inverse() {
        let p = Permutation::from_images(vec![4, 5, 6, 1, 2, 3]).unwrap();
        assert_eq!(p.inversions(), 9);
        assert!(p.then(&p.inverse()).is_identity());
        assert!(Permutation::from_images(vec![1, 1]).is_err());
    }
}
