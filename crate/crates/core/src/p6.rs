//! The pure twin group on six strands as `F₇₁ * (ℤ²)^{*20}`.
//!
//! A pure braid word is decomposed in stages: bicoloured decomposition into
//! `A′ * A″`, kernel rewriting for `A′ * A″ → S₃ × S₃` (giving letters of
//! `Q′`, `Q″` and 35 bridge generators `x_α`), and rewriting of each `Q`
//! letter over the catalog of `Q`. The `Q″` pairs and the pairs of the
//! catalog differ by conjugation by a bridge generator; the catalog uses the
//! braids `(q⁻¹ g q, q⁻¹ h q)` for all 20 triples, so the last stage rebases
//! pair syllables accordingly.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::bicoloured::{decompose_h, h_product, Factor, HWord};
use crate::error::{Error, Result};
use crate::graph_words::{CommutationGraph, Generator, Word};
use crate::kernel_rewriter::{FiniteGroup, KernelLetter, KernelSetup};
use crate::q_subgroup::{realize_a_word, GeneratorKind, QCatalog};
use crate::twin_braids::{colour_permutations, pair_words, permutation_unchecked, ColourPair, ShuffleTriple};

/// `S₃ × S₃` acting on red and black strands.
#[derive(Clone, Copy, Debug, Default)]
pub struct ColourGroup;

impl FiniteGroup for ColourGroup {
    type Element = ColourPair;

    fn identity(&self) -> ColourPair {
        ColourPair::IDENTITY
    }

    fn multiply(&self, a: &ColourPair, b: &ColourPair) -> ColourPair {
        a.then(b)
    }
}

pub type HKernelSetup = KernelSetup<CommutationGraph, CommutationGraph, ColourGroup>;
pub type HKernelLetter = KernelLetter<Generator, Generator, ColourPair>;

fn braid_image(w: &Word) -> ColourPair {
    colour_permutations(w)
        .expect("valid braid word")
        .expect("bicoloured braid")
}

/// Kernel setup for `A′ * A″ → S₃ × S₃`, each map read off the braids of
/// its factor's generators; transversals are `Z₃ × Z′₃` in both factors.
pub fn h_kernel_setup() -> Result<HKernelSetup> {
    let images = |factor| -> HashMap<Generator, ColourPair> {
        (1..=8)
            .map(|k| (k, braid_image(&realize_a_word(&Word::new([k]), factor))))
            .collect()
    };
    let first_images = images(Factor::Primed);
    let second_images = images(Factor::DoublePrimed);
    let transversal = |imgs: &HashMap<Generator, ColourPair>| -> BTreeMap<ColourPair, Vec<Generator>> {
        QCatalog::get()
            .transversal()
            .iter()
            .map(|rep| {
                let img = rep
                    .word
                    .letters()
                    .iter()
                    .fold(ColourPair::IDENTITY, |acc, j| acc.then(&imgs[j]));
                (img, rep.word.letters().to_vec())
            })
            .collect()
    };
    let first_transversal = transversal(&first_images);
    let second_transversal = transversal(&second_images);
    if first_transversal.len() != 36 || second_transversal.len() != 36 {
        return Err(Error::Setup("transversal images are not distinct".into()));
    }
    KernelSetup::new(
        h_product(),
        ColourGroup,
        first_images,
        second_images,
        first_transversal,
        second_transversal,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorSource {
    QPrime(usize),
    QDouble(usize),
    Bridge(ColourPair),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P6Generator {
    /// 1-based among free generators, or the pair id for pair components.
    pub id: usize,
    pub kind: GeneratorKind,
    pub source: GeneratorSource,
    pub pair_triple: Option<ShuffleTriple>,
    pub realization: Word,
}

/// A commuting pair generating one `ℤ²` factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P6Pair {
    pub id: usize,
    pub triple: ShuffleTriple,
    pub g: P6Generator,
    pub h: P6Generator,
    /// Raw pair (a pair of `Q′` or `Q″`) this one is conjugate to:
    /// `g = W · raw_g^{g_sign} · W⁻¹`, likewise for `h`.
    raw_source: (Factor, usize, usize),
    conjugator: Vec<P6Syllable>,
    g_sign: i64,
    h_sign: i64,
}

impl P6Pair {
    /// Free-generator syllables `W` with `pair = W · raw · W⁻¹`.
    pub fn conjugator(&self) -> &[P6Syllable] {
        &self.conjugator
    }

    pub fn raw_source(&self) -> (Factor, usize, usize) {
        self.raw_source
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum P6Syllable {
    Free { id: usize, exponent: i64 },
    Pair { id: usize, g: i64, h: i64 },
}

impl P6Syllable {
    fn inverse(self) -> P6Syllable {
        match self {
            P6Syllable::Free { id, exponent } => P6Syllable::Free {
                id,
                exponent: -exponent,
            },
            P6Syllable::Pair { id, g, h } => P6Syllable::Pair { id, g: -g, h: -h },
        }
    }
}

/// Reduced word in `F₇₁ * (ℤ²)^{*20}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct P6NormalForm(pub Vec<P6Syllable>);

impl P6NormalForm {
    pub fn syllables(&self) -> &[P6Syllable] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.0.iter().all(|s| match *s {
            P6Syllable::Free { exponent, .. } => exponent != 0,
            P6Syllable::Pair { g, h, .. } => g != 0 || h != 0,
        }) && self.0.windows(2).all(|w| match (w[0], w[1]) {
            (P6Syllable::Free { id: a, .. }, P6Syllable::Free { id: b, .. }) => a != b,
            (P6Syllable::Pair { id: a, .. }, P6Syllable::Pair { id: b, .. }) => a != b,
            _ => true,
        })
    }

    pub fn inverse(&self) -> P6NormalForm {
        P6NormalForm(self.0.iter().rev().map(|s| s.inverse()).collect())
    }
}

/// Free-product reduction: merges neighbours on the same factor, drops
/// trivial syllables.
pub fn reduce_syllables(syllables: impl IntoIterator<Item = P6Syllable>) -> P6NormalForm {
    let mut stack: Vec<P6Syllable> = Vec::new();
    for s in syllables {
        let merged = match (stack.last().copied(), s) {
            (Some(P6Syllable::Free { id: a, exponent: x }), P6Syllable::Free { id: b, exponent: y }) if a == b => {
                stack.pop();
                P6Syllable::Free { id: a, exponent: x + y }
            }
            (Some(P6Syllable::Pair { id: a, g: g1, h: h1 }), P6Syllable::Pair { id: b, g: g2, h: h2 }) if a == b => {
                stack.pop();
                P6Syllable::Pair {
                    id: a,
                    g: g1 + g2,
                    h: h1 + h2,
                }
            }
            _ => s,
        };
        let trivial = match merged {
            P6Syllable::Free { exponent, .. } => exponent == 0,
            P6Syllable::Pair { g, h, .. } => g == 0 && h == 0,
        };
        if !trivial {
            stack.push(merged);
        }
    }
    P6NormalForm(stack)
}

/// The catalog of free generators and commuting pairs, with the machinery
/// to decompose and realize.
pub struct P6Catalog {
    pub free: Vec<P6Generator>,
    pub pairs: Vec<P6Pair>,
    setup: HKernelSetup,
    /// Q generator id -> raw syllable template, per factor.
    q_prime_map: Vec<RawTarget>,
    q_double_map: Vec<RawTarget>,
    bridge_ids: HashMap<ColourPair, usize>,
    /// (factor, raw Q pair_g id) -> pair id
    raw_pairs: HashMap<(Factor, usize), usize>,
}

#[derive(Clone, Copy, Debug)]
enum RawTarget {
    Free(usize),
    PairG(usize),
    PairH(usize),
}

/// A syllable before pair rebasing: pair syllables refer to raw pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum RawSyllable {
    Free {
        id: usize,
        exponent: i64,
    },
    RawPair {
        factor: Factor,
        g_id: usize,
        g: i64,
        h: i64,
    },
}

impl P6Catalog {
    pub fn get() -> &'static P6Catalog {
        static CATALOG: OnceLock<P6Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| p6_catalog().expect("P6 catalog construction"))
    }

    pub fn free_count(&self) -> usize {
        self.free.len()
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn setup(&self) -> &HKernelSetup {
        &self.setup
    }

    pub fn pair_by_triple(&self, t: ShuffleTriple) -> &P6Pair {
        self.pairs
            .iter()
            .find(|p| p.triple == t)
            .expect("every triple has a pair")
    }

    pub fn pair(&self, id: usize) -> &P6Pair {
        &self.pairs[id - 1]
    }

    pub fn free_generator(&self, id: usize) -> &P6Generator {
        &self.free[id - 1]
    }

    pub fn bridge_id(&self, alpha: &ColourPair) -> Option<usize> {
        self.bridge_ids.get(alpha).copied()
    }

    /// All 111 realizations: free generators, then `g`, `h` of each pair.
    pub fn all_realizations(&self) -> Vec<&Word> {
        self.free
            .iter()
            .map(|g| &g.realization)
            .chain(self.pairs.iter().flat_map(|p| [&p.g.realization, &p.h.realization]))
            .collect()
    }

    fn raw_decompose(&self, w: &Word) -> Result<Vec<RawSyllable>> {
        if !permutation_unchecked(6, w.letters()).is_identity() {
            return Err(Error::NotPure);
        }
        let hw = decompose_h(w)?;
        let kw = self.setup.rewrite(&hw.blocks()).map_err(|e| Error::Stage {
            stage: "kernel rewriting",
            detail: e.to_string(),
        })?;
        let qcat = QCatalog::get();
        let mut raw = Vec::new();
        for letter in &kw {
            if !self.setup.is_valid_letter(letter) {
                return Err(Error::Stage {
                    stage: "kernel rewriting",
                    detail: format!("{letter:?} is not a kernel letter"),
                });
            }
            let (factor, word, map) = match letter {
                KernelLetter::X(alpha, sign) => {
                    let id = self.bridge_ids[alpha];
                    raw.push(RawSyllable::Free {
                        id,
                        exponent: *sign as i64,
                    });
                    continue;
                }
                KernelLetter::KPrime(w) => (Factor::Primed, w, &self.q_prime_map),
                KernelLetter::KDouble(w) => (Factor::DoublePrimed, w, &self.q_double_map),
            };
            let gens = qcat
                .rewrite_q_generators(&Word::new(word.clone()))
                .map_err(|e| Error::Stage {
                    stage: "Q rewriting",
                    detail: e.to_string(),
                })?;
            for (qid, exp) in gens {
                let exp = exp as i64;
                raw.push(match map[qid] {
                    RawTarget::Free(id) => RawSyllable::Free { id, exponent: exp },
                    RawTarget::PairG(g_id) => RawSyllable::RawPair {
                        factor,
                        g_id,
                        g: exp,
                        h: 0,
                    },
                    RawTarget::PairH(g_id) => RawSyllable::RawPair {
                        factor,
                        g_id,
                        g: 0,
                        h: exp,
                    },
                });
            }
        }
        Ok(raw)
    }

    fn rebase(&self, raw: &[RawSyllable]) -> P6NormalForm {
        let mut out = Vec::with_capacity(raw.len());
        for s in raw {
            match *s {
                RawSyllable::Free { id, exponent } => out.push(P6Syllable::Free { id, exponent }),
                RawSyllable::RawPair { factor, g_id, g, h } => {
                    let pair = &self.pairs[self.raw_pairs[&(factor, g_id)] - 1];
                    // raw = W⁻¹ · pair^{sign} · W
                    out.extend(pair.conjugator.iter().rev().map(|s| s.inverse()));
                    out.push(P6Syllable::Pair {
                        id: pair.id,
                        g: pair.g_sign * g,
                        h: pair.h_sign * h,
                    });
                    out.extend(pair.conjugator.iter().copied());
                }
            }
        }
        reduce_syllables(out)
    }

    /// Normal form of a pure braid word.
    pub fn decompose(&self, w: &Word) -> Result<P6NormalForm> {
        CommutationGraph::twin(6).check_word(w)?;
        let raw = self.raw_decompose(w)?;
        Ok(self.rebase(&raw))
    }

    /// Braid word of a normal form; pair syllables realize `g`-part first.
    pub fn realize(&self, nf: &P6NormalForm) -> Word {
        let mut out = Word::empty();
        for s in nf.syllables() {
            match *s {
                P6Syllable::Free { id, exponent } => out.extend(&self.free[id - 1].realization.pow(exponent)),
                P6Syllable::Pair { id, g, h } => {
                    let pair = &self.pairs[id - 1];
                    out.extend(&pair.g.realization.pow(g));
                    out.extend(&pair.h.realization.pow(h));
                }
            }
        }
        out
    }

    pub fn format_syllable(&self, s: &P6Syllable) -> String {
        match *s {
            P6Syllable::Free { id, exponent } => format!("F{id}^{exponent}"),
            P6Syllable::Pair { id, g, h } => format!("P{}[g^{g} h^{h}]", self.pairs[id - 1].triple),
        }
    }

    pub fn parse_syllable(&self, text: &str) -> Result<P6Syllable> {
        let bad = || Error::Parse {
            what: "syllable",
            input: text.to_string(),
        };
        let text = text.trim();
        if let Some(rest) = text.strip_prefix('F') {
            let (id, exp) = rest.split_once('^').ok_or_else(bad)?;
            let id: usize = id.parse().map_err(|_| bad())?;
            let exponent: i64 = exp.parse().map_err(|_| bad())?;
            if id == 0 || id > self.free.len() {
                return Err(bad());
            }
            return Ok(P6Syllable::Free { id, exponent });
        }
        let rest = text.strip_prefix('P').ok_or_else(bad)?;
        let (triple, rest) = rest.split_once('[').ok_or_else(bad)?;
        let triple: ShuffleTriple = triple.parse()?;
        let rest = rest.strip_suffix(']').ok_or_else(bad)?;
        let mut parts = rest.split_whitespace();
        let g = parts
            .next()
            .and_then(|p| p.strip_prefix("g^"))
            .and_then(|e| e.parse().ok())
            .ok_or_else(bad)?;
        let h = parts
            .next()
            .and_then(|p| p.strip_prefix("h^"))
            .and_then(|e| e.parse().ok())
            .ok_or_else(bad)?;
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(P6Syllable::Pair {
            id: self.pair_by_triple(triple).id,
            g,
            h,
        })
    }
}

impl fmt::Display for P6NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let cat = P6Catalog::get();
        let parts: Vec<String> = self.0.iter().map(|s| cat.format_syllable(s)).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for P6NormalForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "e" {
            return Ok(P6NormalForm::default());
        }
        let cat = P6Catalog::get();
        let mut syllables = Vec::new();
        let mut rest = trimmed;
        while !rest.is_empty() {
            let end = if rest.starts_with('P') {
                rest.find(']').map(|i| i + 1).unwrap_or(rest.len())
            } else {
                rest.find(char::is_whitespace).unwrap_or(rest.len())
            };
            syllables.push(cat.parse_syllable(&rest[..end])?);
            rest = rest[end..].trim_start();
        }
        let nf = P6NormalForm(syllables);
        if !nf.is_reduced() {
            return Err(Error::Parse {
                what: "reduced normal form",
                input: s.to_string(),
            });
        }
        Ok(nf)
    }
}

/// Assembles the catalog: `Q′` and `Q″` generators, 35 bridges and the 20
/// pairs `(q⁻¹ g q, q⁻¹ h q)`.
pub fn p6_catalog() -> Result<P6Catalog> {
    let qcat = QCatalog::get();
    let setup = h_kernel_setup()?;
    let mut free = Vec::new();
    let mut q_prime_map = vec![RawTarget::Free(0); qcat.generators.len()];
    let mut q_double_map = q_prime_map.clone();
    for (factor, map) in [
        (Factor::Primed, &mut q_prime_map),
        (Factor::DoublePrimed, &mut q_double_map),
    ] {
        for g in &qcat.generators {
            map[g.id] = match g.kind {
                GeneratorKind::Free => {
                    let id = free.len() + 1;
                    free.push(P6Generator {
                        id,
                        kind: GeneratorKind::Free,
                        source: match factor {
                            Factor::Primed => GeneratorSource::QPrime(g.id),
                            Factor::DoublePrimed => GeneratorSource::QDouble(g.id),
                        },
                        pair_triple: None,
                        realization: realize_a_word(&g.word, factor),
                    });
                    RawTarget::Free(id)
                }
                GeneratorKind::PairG => RawTarget::PairG(g.id),
                GeneratorKind::PairH => RawTarget::PairH(g.partner.expect("pair generators have partners")),
            };
        }
    }
    let mut bridge_ids = HashMap::new();
    let e = ColourPair::IDENTITY;
    let alphas: Vec<ColourPair> = setup.elements().filter(|a| **a != e).copied().collect();
    for alpha in alphas {
        let id = free.len() + 1;
        let z1 = realize_a_word(&Word::new(setup.first_rep(&alpha).to_vec()), Factor::Primed);
        let z2 = realize_a_word(&Word::new(setup.second_rep(&alpha).to_vec()), Factor::DoublePrimed);
        free.push(P6Generator {
            id,
            kind: GeneratorKind::Free,
            source: GeneratorSource::Bridge(alpha),
            pair_triple: None,
            realization: z1.concat(&z2.inverse()),
        });
        bridge_ids.insert(alpha, id);
    }

    let mut catalog = P6Catalog {
        free,
        pairs: Vec::new(),
        setup,
        q_prime_map,
        q_double_map,
        bridge_ids,
        raw_pairs: HashMap::new(),
    };

    // locate each geometric pair relative to the raw pairs
    let mut pairs = Vec::new();
    for (index, triple) in ShuffleTriple::all().into_iter().enumerate() {
        let id = index + 1;
        let (g_word, h_word) = pair_words(triple);
        let g_raw = catalog.raw_decompose(&g_word)?;
        let h_raw = catalog.raw_decompose(&h_word)?;
        let (conjugator, factor, g_id, g_sign) = split_conjugate(&g_raw, true)
            .ok_or_else(|| stage_error(triple, "g is not a conjugate of a raw pair generator"))?;
        let (h_conj, h_factor, h_gid, h_sign) = split_conjugate(&h_raw, false)
            .ok_or_else(|| stage_error(triple, "h is not a conjugate of a raw pair generator"))?;
        if h_conj != conjugator || h_factor != factor || h_gid != g_id {
            return Err(stage_error(triple, "g and h are conjugates of different raw pairs"));
        }
        let h_id = qcat.generators[g_id].partner.expect("pair");
        pairs.push(P6Pair {
            id,
            triple,
            g: P6Generator {
                id,
                kind: GeneratorKind::PairG,
                source: source_of(factor, g_id),
                pair_triple: Some(triple),
                realization: g_word,
            },
            h: P6Generator {
                id,
                kind: GeneratorKind::PairH,
                source: source_of(factor, h_id),
                pair_triple: Some(triple),
                realization: h_word,
            },
            raw_source: (factor, g_id, h_id),
            conjugator,
            g_sign,
            h_sign,
        });
        if catalog.raw_pairs.insert((factor, g_id), id).is_some() {
            return Err(stage_error(triple, "two triples share a raw pair"));
        }
    }
    catalog.pairs = pairs;
    Ok(catalog)
}

fn source_of(factor: Factor, qid: usize) -> GeneratorSource {
    match factor {
        Factor::Primed => GeneratorSource::QPrime(qid),
        Factor::DoublePrimed => GeneratorSource::QDouble(qid),
    }
}

fn stage_error(t: ShuffleTriple, detail: &str) -> Error {
    Error::Stage {
        stage: "p6_catalog",
        detail: format!("triple {t}: {detail}"),
    }
}

/// Splits a reduced raw word of the form `W · RawPair(±1 on one side) · W⁻¹`
/// with `W` made of free syllables only.
fn split_conjugate(raw: &[RawSyllable], g_side: bool) -> Option<(Vec<P6Syllable>, Factor, usize, i64)> {
    let reduced = reduce_raw(raw);
    let n = reduced.len();
    if n.is_multiple_of(2) {
        return None;
    }
    let mid = n / 2;
    let RawSyllable::RawPair { factor, g_id, g, h } = reduced[mid] else {
        return None;
    };
    let sign = if g_side {
        (h == 0 && g.abs() == 1).then_some(g)?
    } else {
        (g == 0 && h.abs() == 1).then_some(h)?
    };
    let mut conjugator = Vec::with_capacity(mid);
    for i in 0..mid {
        let (RawSyllable::Free { id: a, exponent: x }, RawSyllable::Free { id: b, exponent: y }) =
            (reduced[i], reduced[n - 1 - i])
        else {
            return None;
        };
        if a != b || x != -y {
            return None;
        }
        conjugator.push(P6Syllable::Free { id: a, exponent: x });
    }
    Some((conjugator, factor, g_id, sign))
}

fn reduce_raw(raw: &[RawSyllable]) -> Vec<RawSyllable> {
    let mut stack: Vec<RawSyllable> = Vec::new();
    for &s in raw {
        let merged = match (stack.last().copied(), s) {
            (Some(RawSyllable::Free { id: a, exponent: x }), RawSyllable::Free { id: b, exponent: y }) if a == b => {
                stack.pop();
                RawSyllable::Free { id: a, exponent: x + y }
            }
            (
                Some(RawSyllable::RawPair {
                    factor: f1,
                    g_id: a,
                    g: g1,
                    h: h1,
                }),
                RawSyllable::RawPair {
                    factor: f2,
                    g_id: b,
                    g: g2,
                    h: h2,
                },
            ) if a == b && f1 == f2 => {
                stack.pop();
                RawSyllable::RawPair {
                    factor: f1,
                    g_id: a,
                    g: g1 + g2,
                    h: h1 + h2,
                }
            }
            _ => s,
        };
        let trivial = match merged {
            RawSyllable::Free { exponent, .. } => exponent == 0,
            RawSyllable::RawPair { g, h, .. } => g == 0 && h == 0,
        };
        if !trivial {
            stack.push(merged);
        }
    }
    stack
}

/// `decompose_P6` on the shared catalog.
pub fn decompose_p6(w: &Word) -> Result<P6NormalForm> {
    P6Catalog::get().decompose(w)
}

/// `realize_P6` on the shared catalog.
pub fn realize_p6(nf: &P6NormalForm) -> Word {
    P6Catalog::get().realize(nf)
}

/// Rewriting of an `H`-word through the kernel stage only.
pub fn rewrite_h_kernel(hw: &HWord) -> Result<Vec<HKernelLetter>> {
    P6Catalog::get().setup.rewrite(&hw.blocks())
}
