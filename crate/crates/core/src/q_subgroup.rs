//! The kernel `Q` of `A → S₃ × S₃` and its free-product basis.
//!
//! Cosets of `Q` are represented by the 36 words of `Z₃ × Z′₃`. Every word
//! `b ∈ Q` factors as a product of letters `μ a_j ν⁻¹` with `μ, ν` coset
//! representatives; the nontrivial such letters, up to equality in `A`, are
//! grouped with their inverses into the catalog of generators: 18 free ones
//! and 10 commuting pairs.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use crate::bicoloured::{realize_h, Factor, HLetter, HWord};
use crate::error::{Error, Result};
use crate::graph_words::{CommutationGraph, Generator, Word};
use crate::twin_braids::{colour_permutations, pair_words, ColourPair, ShuffleTriple};

const Z3: [&[Generator]; 6] = [&[], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1]];
const Z3_PRIME: [&[Generator]; 6] = [&[], &[3], &[4], &[3, 4], &[4, 3], &[4, 3, 4]];

/// One of the 36 coset representatives, `Z₃` part first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CosetRep {
    pub red_index: usize,
    pub black_index: usize,
    pub word: Word,
    pub image: ColourPair,
}

/// Image of `a_j` in `S₃ × S₃`, read off the braid realizing `a′_j`.
/// A letter class: its normal form, orbit size and source letter.
type ClassEntry = (Word, usize, Generator);

pub fn a_generator_image(j: Generator) -> ColourPair {
    static IMAGES: OnceLock<Vec<ColourPair>> = OnceLock::new();
    IMAGES.get_or_init(|| {
        (1..=8)
            .map(|k| {
                let w = realize_h(&HWord(vec![HLetter::primed(k)]));
                colour_permutations(&w)
                    .expect("valid braid word")
                    .expect("generators of H are bicoloured")
            })
            .collect()
    })[j as usize - 1]
}

pub fn a_word_image(w: &[Generator]) -> ColourPair {
    w.iter()
        .fold(ColourPair::IDENTITY, |acc, &j| acc.then(&a_generator_image(j)))
}

/// The 36 products `Z₃ × Z′₃`, `Z₃` index major.
pub fn z_transversal() -> Vec<CosetRep> {
    let mut out = Vec::with_capacity(36);
    for (r, z) in Z3.iter().enumerate() {
        for (b, zp) in Z3_PRIME.iter().enumerate() {
            let word = Word::new([*z, *zp].concat());
            let image = a_word_image(word.letters());
            out.push(CosetRep {
                red_index: r,
                black_index: b,
                word,
                image,
            });
        }
    }
    out
}

/// A factor `μ a_j ν⁻¹` with `ν` the representative of the coset of `μ a_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XLetter {
    pub mu: usize,
    pub j: Generator,
    pub nu: usize,
    /// Normal form in `A`.
    pub element: Word,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    Free,
    PairG,
    PairH,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QGenerator {
    pub id: usize,
    pub kind: GeneratorKind,
    /// The `j` of the letters `μ a_j ν⁻¹` in this class.
    pub source: Generator,
    pub pair_triple: Option<ShuffleTriple>,
    /// The commuting partner of a pair generator.
    pub partner: Option<usize>,
    /// Normal form in `A`.
    pub word: Word,
}

/// Generators of `Q` with a lookup from letter normal forms.
#[derive(Clone, Debug)]
pub struct QCatalog {
    pub generators: Vec<QGenerator>,
    lookup: HashMap<Word, (usize, i8)>,
    /// Number of distinct nontrivial elements in `𝒳_j`, `j = 1..8`.
    pub x_sizes: [usize; 8],
    /// Number of `(μ, j)` giving each element class, per generator.
    pub orbit_sizes: Vec<usize>,
    transversal: Vec<CosetRep>,
    rep_of: HashMap<ColourPair, usize>,
}

pub(crate) fn a_graph() -> &'static CommutationGraph {
    static GRAPH: OnceLock<CommutationGraph> = OnceLock::new();
    GRAPH.get_or_init(CommutationGraph::a_graph)
}

fn shortlex_key(w: &Word) -> (usize, &[Generator]) {
    (w.len(), w.letters())
}

/// Braid realization of an `A`-word through the chosen copy inside `H`.
pub fn realize_a_word(w: &Word, factor: Factor) -> Word {
    realize_h(&HWord(
        w.letters().iter().map(|&index| HLetter { factor, index }).collect(),
    ))
}

/// Triples `T` whose pair [`pair_words`] equals `(x, y)` in `B̄₆`, up to
/// inverting either element.
pub fn match_pair_triple(x: &Word, y: &Word) -> Vec<ShuffleTriple> {
    let twin = CommutationGraph::twin(6);
    let same_up_to_inverse = |a: &Word, b: &Word| {
        twin.equal_unchecked(a.letters(), b.letters()) || twin.equal_unchecked(a.letters(), b.inverse().letters())
    };
    ShuffleTriple::all()
        .into_iter()
        .filter(|&t| {
            let (g, h) = pair_words(t);
            same_up_to_inverse(x, &g) && same_up_to_inverse(y, &h)
        })
        .collect()
}

impl QCatalog {
    /// Shared catalog, built on first use.
    pub fn get() -> &'static QCatalog {
        static CATALOG: OnceLock<QCatalog> = OnceLock::new();
        CATALOG.get_or_init(|| enumerate_x().expect("Q catalog enumeration"))
    }

    pub fn transversal(&self) -> &[CosetRep] {
        &self.transversal
    }

    pub fn rep_index(&self, image: &ColourPair) -> usize {
        self.rep_of[image]
    }

    pub fn rep_for(&self, image: &ColourPair) -> &CosetRep {
        &self.transversal[self.rep_of[image]]
    }

    pub fn free_count(&self) -> usize {
        self.generators.iter().filter(|g| g.kind == GeneratorKind::Free).count()
    }

    pub fn pair_count(&self) -> usize {
        self.generators
            .iter()
            .filter(|g| g.kind == GeneratorKind::PairG)
            .count()
    }

    pub fn lookup(&self, element: &Word) -> Option<(usize, i8)> {
        self.lookup.get(element).copied()
    }

    pub fn letter(&self, mu: usize, j: Generator) -> XLetter {
        let rep = &self.transversal[mu];
        let nu = self.rep_index(&rep.image.then(&a_generator_image(j)));
        let raw = [rep.word.letters(), &[j], self.transversal[nu].word.inverse().letters()].concat();
        XLetter {
            mu,
            j,
            nu,
            element: a_graph().normal_form_unchecked(&raw),
        }
    }

    /// `None` for trivial letters.
    pub fn classify_letter(&self, mu: usize, j: Generator) -> Option<(usize, i8)> {
        let x = self.letter(mu, j);
        if x.element.is_empty() {
            return None;
        }
        Some(self.lookup(&x.element).expect("catalog covers every nontrivial letter"))
    }

    /// Factors `b ∈ Q` into its nontrivial letters.
    pub fn rewrite_q(&self, b: &Word) -> Result<Vec<XLetter>> {
        a_graph().check_word(b)?;
        if !a_word_image(b.letters()).is_identity() {
            return Err(Error::NotInKernel);
        }
        let mut mu = 0;
        let mut out = Vec::new();
        for &j in b.letters() {
            let x = self.letter(mu, j);
            mu = x.nu;
            if !x.element.is_empty() {
                out.push(x);
            }
        }
        debug_assert_eq!(mu, 0);
        Ok(out)
    }

    /// `b ∈ Q` as a sequence of `(generator id, ±1)`.
    pub fn rewrite_q_generators(&self, b: &Word) -> Result<Vec<(usize, i8)>> {
        Ok(self
            .rewrite_q(b)?
            .into_iter()
            .map(|x| self.lookup(&x.element).expect("catalog covers every nontrivial letter"))
            .collect())
    }

    /// The generator as an `A`-word raised to `±1`.
    pub fn generator_word(&self, id: usize, exponent: i8) -> Word {
        let w = &self.generators[id].word;
        if exponent < 0 {
            w.inverse()
        } else {
            w.clone()
        }
    }
}

/// Builds the catalog of generators of `Q`.
pub fn enumerate_x() -> Result<QCatalog> {
    let transversal = z_transversal();
    let rep_of: HashMap<ColourPair, usize> = transversal.iter().enumerate().map(|(i, r)| (r.image, i)).collect();
    if rep_of.len() != 36 {
        return Err(Error::Stage {
            stage: "z_transversal",
            detail: "coset images are not distinct".into(),
        });
    }
    let graph = a_graph();
    let mut partial = QCatalog {
        generators: Vec::new(),
        lookup: HashMap::new(),
        x_sizes: [0; 8],
        orbit_sizes: Vec::new(),
        transversal,
        rep_of,
    };

    // element -> (j, number of (μ, j) producing it)
    let mut elements: BTreeMap<Word, (Generator, usize)> = BTreeMap::new();
    for mu in 0..36 {
        for j in 1..=8 {
            let x = partial.letter(mu, j);
            if !a_word_image(x.element.letters()).is_identity() {
                return Err(Error::Stage {
                    stage: "enumerate_x",
                    detail: format!("letter ({mu}, {j}) not in Q"),
                });
            }
            if x.element.is_empty() {
                continue;
            }
            let entry = elements.entry(x.element.clone()).or_insert((j, 0));
            if entry.0 != j {
                return Err(Error::Stage {
                    stage: "enumerate_x",
                    detail: format!("element {} arises from a_{} and a_{}", x.element, entry.0, j),
                });
            }
            entry.1 += 1;
        }
    }
    for (j, _) in elements.values() {
        partial.x_sizes[*j as usize - 1] += 1;
    }

    // classes {x, x⁻¹} with the shortlex-least member as representative
    let mut classes: BTreeMap<Generator, Vec<(Word, usize)>> = BTreeMap::new();
    for (element, &(j, count)) in &elements {
        let inverse = graph.normal_form_unchecked(element.inverse().letters());
        let Some(&(_, inverse_count)) = elements.get(&inverse) else {
            return Err(Error::Stage {
                stage: "enumerate_x",
                detail: format!("inverse of {element} missing"),
            });
        };
        if shortlex_key(element) < shortlex_key(&inverse) {
            classes
                .entry(j)
                .or_default()
                .push((element.clone(), count + inverse_count));
        } else if element == &inverse {
            return Err(Error::Stage {
                stage: "enumerate_x",
                detail: format!("{element} is an involution"),
            });
        }
    }
    for reps in classes.values_mut() {
        reps.sort_by(|a, b| shortlex_key(&a.0).cmp(&shortlex_key(&b.0)));
    }

    let commute = |a: &Word, b: &Word| {
        graph.equal_unchecked(
            &[a.letters(), b.letters()].concat(),
            &[b.letters(), a.letters()].concat(),
        )
    };

    let mut generators = Vec::new();
    let mut orbit_sizes = Vec::new();
    for j in [6, 7] {
        for (word, orbit) in classes.get(&j).cloned().unwrap_or_default() {
            generators.push(QGenerator {
                id: generators.len(),
                kind: GeneratorKind::Free,
                source: j,
                pair_triple: None,
                partner: None,
                word,
            });
            orbit_sizes.push(orbit);
        }
    }

    // pairs: (𝒳₂, 𝒳₃) and (𝒳₅, 𝒳₈)
    let mut pairs: Vec<(ClassEntry, ClassEntry)> = Vec::new();
    for (g_src, h_src) in [(2, 3), (5, 8)] {
        let g_classes = classes.get(&g_src).cloned().unwrap_or_default();
        let h_classes = classes.get(&h_src).cloned().unwrap_or_default();
        for (hw, h_orbit) in &h_classes {
            let partners: Vec<_> = g_classes.iter().filter(|(gw, _)| commute(gw, hw)).collect();
            if partners.len() != 1 {
                return Err(Error::Stage {
                    stage: "enumerate_x",
                    detail: format!(
                        "{hw} from X{h_src} commutes with {} elements of X{g_src}",
                        partners.len()
                    ),
                });
            }
            let (gw, g_orbit) = partners[0];
            pairs.push(((gw.clone(), *g_orbit, g_src), (hw.clone(), *h_orbit, h_src)));
        }
    }
    let mut tagged = Vec::new();
    for (g, h) in pairs {
        let triples = match_pair_triple(
            &realize_a_word(&g.0, Factor::Primed),
            &realize_a_word(&h.0, Factor::Primed),
        );
        let [triple] = triples[..] else {
            return Err(Error::Stage {
                stage: "enumerate_x",
                detail: format!("pair ({}, {}) matches triples {triples:?}", g.0, h.0),
            });
        };
        tagged.push((triple, g, h));
    }
    tagged.sort_by_key(|(t, _, _)| *t);
    for (triple, g, h) in tagged {
        let gid = generators.len();
        for (kind, (word, orbit, source), partner) in
            [(GeneratorKind::PairG, g, gid + 1), (GeneratorKind::PairH, h, gid)]
        {
            generators.push(QGenerator {
                id: generators.len(),
                kind,
                source,
                pair_triple: Some(triple),
                partner: Some(partner),
                word,
            });
            orbit_sizes.push(orbit);
        }
    }

    let mut lookup = HashMap::new();
    for g in &generators {
        lookup.insert(g.word.clone(), (g.id, 1));
        lookup.insert(graph.normal_form_unchecked(g.word.inverse().letters()), (g.id, -1));
    }
    if lookup.len() != elements.len() {
        return Err(Error::Stage {
            stage: "enumerate_x",
            detail: format!("catalog covers {} of {} letters", lookup.len(), elements.len()),
        });
    }
    partial.generators = generators;
    partial.lookup = lookup;
    partial.orbit_sizes = orbit_sizes;
    Ok(partial)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transversal_shape() {
        let z = z_transversal();
        assert_eq!(z.len(), 36);
        assert!(z[0].word.is_empty());
        assert_eq!(z[5 * 6].word, Word::new([1, 2, 1]));
        assert_eq!(z[5].word, Word::new([4, 3, 4]));
        let mut images: Vec<_> = z.iter().map(|r| r.image).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 36);
    }

    #[test]
    fn generator_images() {
        // a1, a2 permute red strands, a3, a4 black ones
        assert_eq!(
            a_generator_image(1),
            ColourPair {
                red: [2, 1, 3],
                black: [1, 2, 3]
            }
        );
        assert_eq!(
            a_generator_image(4),
            ColourPair {
                red: [1, 2, 3],
                black: [1, 3, 2]
            }
        );
    }

    #[test]
    fn catalog_counts() {
        let c = QCatalog::get();
        assert_eq!(c.x_sizes[0], 0);
        assert_eq!(c.x_sizes[3], 0);
        assert_eq!(c.x_sizes[1], 2);
        assert_eq!(c.x_sizes[2], 2);
        for j in 4..8 {
            assert_eq!(c.x_sizes[j], 18, "X{}", j + 1);
        }
        assert_eq!(c.free_count(), 18);
        assert_eq!(c.pair_count(), 10);
    }

    #[test]
    fn rewrite_examples() {
        let c = QCatalog::get();
        assert!(c.rewrite_q(&Word::new([1, 1])).unwrap().is_empty());
        let g = Word::new([1, 2]).pow(3);
        let letters = c.rewrite_q(&g).unwrap();
        assert_eq!(letters.len(), 1);
        assert_eq!(c.transversal()[letters[0].mu].word, Word::new([1, 2, 1]));
        assert_eq!(letters[0].j, 2);
        assert_eq!(c.transversal()[letters[0].nu].word, Word::new([2, 1]));
        let h = Word::new([3, 4]).pow(3);
        let letters = c.rewrite_q(&h).unwrap();
        assert_eq!(letters.len(), 1);
        assert_eq!(letters[0].j, 3);
        assert_eq!(c.rewrite_q(&Word::new([1])), Err(Error::NotInKernel));
    }

    #[test]
    fn classify_examples() {
        let c = QCatalog::get();
        assert_eq!(c.classify_letter(0, 1), None);
        assert_eq!(c.classify_letter(0, 2), None);
        let mu = c
            .transversal()
            .iter()
            .position(|r| r.word == Word::new([1, 2, 1]))
            .unwrap();
        let (id, exp) = c.classify_letter(mu, 2).unwrap();
        let g = &c.generators[id];
        assert_eq!(
            (g.kind, g.pair_triple, exp),
            (GeneratorKind::PairG, Some(ShuffleTriple::IDENTITY), 1)
        );
    }
}
