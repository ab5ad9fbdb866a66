//! Invariant suites behind `verify`, each a list of named checks.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Display;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bicoloured::{
    decompose_h, h_equal, realize_a_generator, realize_h, table1_relations, table1_rows, verify_table1,
    verify_table1_relations, Factor,
};
use crate::error::{Error, Result};
use crate::free_product::{FactorWord, FreeGroup, FreeProduct};
use crate::graph_words::{CommutationGraph, Generator, Word};
use crate::kernel_rewriter::{CyclicGroup, KernelLetter, KernelSetup};
use crate::p6::{P6Catalog, P6NormalForm, P6Syllable};
use crate::q_subgroup::{a_generator_image, match_pair_triple, realize_a_word, GeneratorKind, QCatalog};
use crate::reidemeister_schreier::pure_twin_homology;
use crate::twin_braids::{
    bubble_sort_word, colour_permutations, gh_words, is_pure, pair_words, permutation_of, shuffle_word, ShuffleTriple,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

fn check(name: impl Into<String>, expected: impl Display, actual: impl Display) -> CheckResult {
    let (expected, actual) = (expected.to_string(), actual.to_string());
    CheckResult {
        check: name.into(),
        pass: expected == actual,
        expected,
        actual,
    }
}

fn count(name: impl Into<String>, total: usize, passed: usize) -> CheckResult {
    check(name, format!("{total}/{total}"), format!("{passed}/{total}"))
}

pub const SUITES: [&str; 7] = ["words", "table1", "prop4", "kernel", "prop6", "theorem2", "h1"];

/// The nine triples whose pairs come from `𝒳₅` and `𝒳₈`.
pub const LISTED_TRIPLES: [[u8; 3]; 9] = [
    [1, 2, 4],
    [1, 2, 5],
    [1, 2, 6],
    [1, 3, 4],
    [1, 3, 5],
    [1, 3, 6],
    [2, 3, 4],
    [2, 3, 5],
    [2, 3, 6],
];

/// Expected `H₁(P̄ₙ)` ranks.
pub fn expected_h1_rank(n: usize) -> Option<usize> {
    match n {
        2 => Some(0),
        3 => Some(1),
        4 => Some(7),
        5 => Some(31),
        6 => Some(111),
        _ => None,
    }
}

pub fn random_word(rng: &mut impl Rng, strands: usize, len: usize) -> Word {
    Word::new(
        (0..len)
            .map(|_| rng.gen_range(1..strands as Generator))
            .collect::<Vec<_>>(),
    )
}

/// `w · rev(q)` for a random `w` of length at most `max_len - (its sorting
/// word length)` and `q` the bubble-sort word of its permutation.
pub fn random_pure_word(rng: &mut impl Rng, strands: usize, max_len: usize) -> Word {
    loop {
        let w = {
            let len = rng.gen_range(0..=max_len);
            random_word(rng, strands, len)
        };
        let p = permutation_of(strands, &w).expect("valid word");
        let fix = bubble_sort_word(&p).inverse();
        if w.len() + fix.len() <= max_len {
            return w.concat(&fix);
        }
    }
}

/// A random word, made bicoloured if needed by appending the inverse of
/// the shuffle word for its red end positions.
pub fn random_bicoloured_word(rng: &mut impl Rng, max_len: usize) -> Word {
    loop {
        let w = {
            let len = rng.gen_range(0..=max_len);
            random_word(rng, 6, len)
        };
        if colour_permutations(&w).expect("valid").is_some() {
            return w;
        }
        // fix the colouring by appending a shuffle word back to 123
        let p = permutation_of(6, &w).expect("valid");
        let mut red: Vec<u8> = (1..=3).map(|k| p.apply(k) as u8).collect();
        red.sort_unstable();
        let t = ShuffleTriple::new(red[0] as usize, red[1] as usize, red[2] as usize).expect("increasing");
        let out = w.concat(&shuffle_word(t).inverse());
        if out.len() <= max_len {
            return out;
        }
    }
}

pub fn random_p6_normal_form(
    rng: &mut impl Rng,
    catalog: &P6Catalog,
    max_syllables: usize,
    max_exp: i64,
) -> P6NormalForm {
    let mut syllables = Vec::new();
    let target = rng.gen_range(0..=max_syllables);
    while syllables.len() < target {
        let s = if rng.gen_bool(0.5) {
            let exponent = loop {
                let e = rng.gen_range(-max_exp..=max_exp);
                if e != 0 {
                    break e;
                }
            };
            P6Syllable::Free {
                id: rng.gen_range(1..=catalog.free_count()),
                exponent,
            }
        } else {
            let (g, h) = loop {
                let g = rng.gen_range(-max_exp..=max_exp);
                let h = rng.gen_range(-max_exp..=max_exp);
                if g != 0 || h != 0 {
                    break (g, h);
                }
            };
            P6Syllable::Pair {
                id: rng.gen_range(1..=catalog.pair_count()),
                g,
                h,
            }
        };
        let clash = match (syllables.last(), &s) {
            (Some(P6Syllable::Free { id: a, .. }), P6Syllable::Free { id: b, .. }) => a == b,
            (Some(P6Syllable::Pair { id: a, .. }), P6Syllable::Pair { id: b, .. }) => a == b,
            _ => false,
        };
        if !clash {
            syllables.push(s);
        }
    }
    P6NormalForm(syllables)
}

/// Words reachable from `w` by deleting an adjacent `i i` or swapping an
/// adjacent commuting pair, restricted to those of least length.
pub fn shortest_by_moves(graph: &CommutationGraph, w: &[Generator]) -> BTreeSet<Vec<Generator>> {
    let mut seen: HashSet<Vec<Generator>> = HashSet::from([w.to_vec()]);
    let mut queue = VecDeque::from([w.to_vec()]);
    while let Some(u) = queue.pop_front() {
        for i in 0..u.len().saturating_sub(1) {
            let next = if u[i] == u[i + 1] {
                [&u[..i], &u[i + 2..]].concat()
            } else if graph.commutes(u[i], u[i + 1]) {
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
    seen.into_iter().filter(|u| u.len() == min).collect()
}

/// Word problem by exhaustive moves: equal iff the least-length sets meet.
pub fn equal_by_moves(graph: &CommutationGraph, a: &[Generator], b: &[Generator]) -> bool {
    let sa = shortest_by_moves(graph, a);
    shortest_by_moves(graph, b).iter().any(|u| sa.contains(u))
}

/// A random sequence of moves (insert, delete, commute) applied to `w`.
pub fn random_moves(rng: &mut impl Rng, graph: &CommutationGraph, w: &Word, moves: usize) -> Word {
    let n = graph.vertex_count() as Generator;
    let mut u = w.letters().to_vec();
    for _ in 0..moves {
        match rng.gen_range(0..3) {
            0 => {
                let at = rng.gen_range(0..=u.len());
                let g = rng.gen_range(1..=n);
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
                if graph.commutes(u[i], u[i + 1]) {
                    u.swap(i, i + 1);
                }
            }
            _ => {}
        }
    }
    Word::new(u)
}

pub fn words_suite(seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let twin = CommutationGraph::twin(6);
    let mut results = Vec::new();
    let (mut idem, mut inverse, mut moves, mut oracle) = (0, 0, 0, 0);
    let total = 500;
    for _ in 0..total {
        let w = {
            let len = rng.gen_range(0..=20);
            random_word(&mut rng, 6, len)
        };
        let nf = twin.normal_form(&w).expect("valid");
        idem += usize::from(twin.normal_form(&nf).expect("valid") == nf);
        inverse += usize::from(twin.is_identity(&w.concat(&w.inverse())).expect("valid"));
        let moved = random_moves(&mut rng, &twin, &w, 6);
        moves += usize::from(twin.normal_form(&moved).expect("valid") == nf);
        let a = {
            let len = rng.gen_range(0..=8);
            random_word(&mut rng, 6, len)
        };
        let b = if rng.gen_bool(0.5) {
            let b = random_moves(&mut rng, &twin, &a, 4);
            if b.len() > 8 {
                a.clone()
            } else {
                b
            }
        } else {
            {
                let len = rng.gen_range(0..=8);
                random_word(&mut rng, 6, len)
            }
        };
        oracle += usize::from(twin.equal(&a, &b).expect("valid") == equal_by_moves(&twin, a.letters(), b.letters()));
    }
    results.push(count("normal form is idempotent", total, idem));
    results.push(count("w · w⁻¹ is the identity", total, inverse));
    results.push(count("normal form is invariant under moves", total, moves));
    results.push(count("equality agrees with move search (|w| ≤ 8)", total, oracle));
    results.push(check(
        "nf 6 [1 3 1]",
        "3",
        twin.normal_form(&Word::new([1, 3, 1])).expect("valid"),
    ));
    results
}

/// Edges among `a_1..a_8` listed in the relation column of the crossing table.
pub fn relation_column_edges() -> Vec<(usize, usize)> {
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for t in table1_rows() {
        for (a, b) in table1_relations(t) {
            let (i, j) = (a.index as usize, b.index as usize);
            edges.insert((i.min(j), i.max(j)));
        }
    }
    edges.into_iter().collect()
}

pub fn table1_suite() -> Vec<CheckResult> {
    let cells = verify_table1();
    let mut results = vec![
        check("cells checked", 100, cells.len()),
        count(
            "cells consistent with braids",
            cells.len(),
            cells.iter().filter(|c| c.pass).count(),
        ),
        check("rows whose relations disagree with their cells", "none", {
            let bad = verify_table1_relations();
            if bad.is_empty() {
                "none".to_string()
            } else {
                format!("{bad:?}")
            }
        }),
    ];
    let edges = relation_column_edges();
    results.push(check("edges in relation column", 9, edges.len()));
    results.push(check(
        "relation column edges = A graph",
        format!("{:?}", CommutationGraph::a_graph().edges()),
        format!("{edges:?}"),
    ));
    let twin = CommutationGraph::twin(6);
    let a: Vec<Word> = (1..=8)
        .map(|k| realize_a_generator(k, Factor::Primed).expect("index"))
        .collect();
    let mut agree = 0;
    for i in 0..8 {
        for j in i + 1..8 {
            let commute = twin.commutator_is_trivial(&a[i], &a[j]).expect("valid");
            agree += usize::from(commute == edges.contains(&(i + 1, j + 1)));
        }
    }
    results.push(count("a′ commutation matches edges", 28, agree));
    results
}

pub fn prop4_suite(seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let twin = CommutationGraph::twin(6);
    let mut results = Vec::new();
    let (mut total, mut ok) = (0, 0);
    let mut frontier = vec![Word::empty()];
    for _ in 0..=6 {
        let mut next = Vec::new();
        for w in &frontier {
            if colour_permutations(w).expect("valid").is_some() {
                total += 1;
                ok += usize::from(
                    decompose_h(w).is_ok_and(|hw| twin.equal_unchecked(realize_h(&hw).letters(), w.letters())),
                );
            }
            for g in 1..=5 {
                let mut u = w.clone();
                u.push(g);
                next.push(u);
            }
        }
        frontier = next;
    }
    results.push(count("round trip, all bicoloured words of length ≤ 6", total, ok));
    let n = 500;
    let (mut ok, mut invariant) = (0, 0);
    for _ in 0..n {
        let w = random_bicoloured_word(&mut rng, 40);
        let hw = decompose_h(&w).expect("bicoloured");
        ok += usize::from(twin.equal_unchecked(realize_h(&hw).letters(), w.letters()));
        let moved = random_moves(&mut rng, &twin, &w, 6);
        invariant += usize::from(decompose_h(&moved).is_ok_and(|h2| h_equal(&hw, &h2)));
    }
    results.push(count("round trip, random bicoloured words of length ≤ 40", n, ok));
    results.push(count("decomposition invariant under moves", n, invariant));
    let q = shuffle_word(ShuffleTriple::OPPOSITE);
    let symmetric = (1..=8)
        .filter(|&k| {
            let a1 = realize_a_generator(k, Factor::Primed).expect("index");
            let a2 = realize_a_generator(k, Factor::DoublePrimed).expect("index");
            twin.equal_unchecked(q.concat(&a1).concat(&q.inverse()).letters(), a2.letters())
        })
        .count();
    results.push(count("q456 · a′ₖ · q456⁻¹ = a″ₖ", 8, symmetric));
    let swapped = (1..=8)
        .filter(|&k| {
            let a2 = realize_a_generator(k, Factor::DoublePrimed).expect("index");
            colour_permutations(&a2).expect("valid") == Some(a_generator_image(k as Generator).swapped())
        })
        .count();
    results.push(count(
        "colour image of a″ₖ is that of a′ₖ with colours swapped",
        8,
        swapped,
    ));
    results
}

type ToySetup = KernelSetup<FreeGroup, FreeGroup, CyclicGroup>;

/// `⟨t⟩ * ⟨u⟩ → ℤ/2`, `t, u ↦ 1`, transversals `{1, t}` and `{1, u}`.
pub fn toy_setup() -> ToySetup {
    KernelSetup::new(
        FreeProduct::new(FreeGroup { rank: 1 }, FreeGroup { rank: 1 }),
        CyclicGroup { order: 2 },
        HashMap::from([(1, 1), (-1, 1)]),
        HashMap::from([(1, 1), (-1, 1)]),
        [(0, vec![]), (1, vec![1])].into(),
        [(0, vec![]), (1, vec![1])].into(),
    )
    .expect("valid toy setup")
}

/// Random kernel letters of the toy setup.
pub fn random_toy_kernel_word(rng: &mut impl Rng, len: usize) -> Vec<KernelLetter<i32, i32, u32>> {
    let even = |rng: &mut dyn rand::RngCore| -> Vec<i32> {
        let n = 2 * rng.gen_range(1..=2);
        (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect()
    };
    (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 => KernelLetter::KPrime(even(rng)),
            1 => KernelLetter::KDouble(even(rng)),
            _ => KernelLetter::X(1, if rng.gen_bool(0.5) { 1 } else { -1 }),
        })
        .collect()
}

/// Random kernel letters of `A′ * A″ → S₃ × S₃`.
pub fn random_h_kernel_word(
    rng: &mut impl Rng,
    len: usize,
) -> Vec<KernelLetter<Generator, Generator, crate::twin_braids::ColourPair>> {
    let setup = P6Catalog::get().setup();
    let alphas: Vec<_> = setup.elements().filter(|a| !a.is_identity()).copied().collect();
    let qcat = QCatalog::get();
    (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 | 1 => {
                let w = {
                    let len = rng.gen_range(1..=6);
                    random_word(rng, 9, len)
                };
                let image = w
                    .letters()
                    .iter()
                    .fold(crate::twin_braids::ColourPair::IDENTITY, |acc, j| {
                        acc.then(&a_generator_image(*j))
                    });
                if rng.gen_bool(0.5) {
                    let fix = qcat.rep_for(&image).word.inverse();
                    KernelLetter::KPrime(w.concat(&fix).into_letters())
                } else {
                    let image = setup.second_image(w.letters()).expect("valid");
                    let fix = Word::new(setup.second_rep(&image).to_vec()).inverse();
                    KernelLetter::KDouble(w.concat(&fix).into_letters())
                }
            }
            _ => KernelLetter::X(
                *alphas.choose(rng).expect("nonempty"),
                if rng.gen_bool(0.5) { 1 } else { -1 },
            ),
        })
        .collect()
}

pub fn kernel_suite(seed: u64, samples: usize) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let toy = toy_setup();
    let (mut section, mut retraction) = (0, 0);
    for _ in 0..samples {
        let kw = {
            let len = rng.gen_range(0..=8);
            random_toy_kernel_word(&mut rng, len)
        };
        let y = toy.embed(&kw);
        retraction += usize::from(toy.rewrite(&y).is_ok_and(|back| back == toy.reduce_kernel_word(&kw)));
        let blocks: Vec<FactorWord<i32, i32>> = (0..rng.gen_range(0..=6))
            .map(|i| {
                let w: Vec<i32> = (0..rng.gen_range(1..=3))
                    .map(|_| if rng.gen_bool(0.5) { 1 } else { -1 })
                    .collect();
                if i % 2 == 0 {
                    FactorWord::First(w)
                } else {
                    FactorWord::Second(w)
                }
            })
            .collect();
        let parity: i32 = blocks
            .iter()
            .map(|b| match b {
                FactorWord::First(w) | FactorWord::Second(w) => w.len() as i32,
            })
            .sum();
        let mut blocks = blocks;
        if parity % 2 == 1 {
            blocks.push(FactorWord::Second(vec![1]));
        }
        section += usize::from(
            toy.rewrite(&blocks)
                .is_ok_and(|kw| toy.product().equal(&toy.embed(&kw), &blocks)),
        );
    }
    let mut results = vec![
        count("toy: rewrite ∘ embed = reduction", samples, retraction),
        count("toy: embed ∘ rewrite = identity", samples, section),
    ];
    let setup = P6Catalog::get().setup();
    let (mut section, mut retraction) = (0, 0);
    for _ in 0..samples {
        let kw = {
            let len = rng.gen_range(0..=6);
            random_h_kernel_word(&mut rng, len)
        };
        let y = setup.embed(&kw);
        retraction += usize::from(
            setup
                .rewrite(&y)
                .is_ok_and(|back| back == setup.reduce_kernel_word(&kw)),
        );
        let w = random_pure_word(&mut rng, 6, 30);
        let blocks = decompose_h(&w).expect("pure words are bicoloured").blocks();
        section += usize::from(
            setup
                .rewrite(&blocks)
                .is_ok_and(|kw| setup.product().equal(&setup.embed(&kw), &blocks)),
        );
    }
    results.push(count("H: rewrite ∘ embed = reduction", samples, retraction));
    results.push(count("H: embed ∘ rewrite = identity", samples, section));
    results
}

pub fn prop6_suite() -> Vec<CheckResult> {
    let q = QCatalog::get();
    let mut results = vec![
        check(
            "|𝒳ⱼ|, j = 1..8",
            "[0, 2, 2, 0, 18, 18, 18, 18]",
            format!("{:?}", q.x_sizes),
        ),
        check("free generators", 18, q.free_count()),
        check("commuting pairs", 10, q.pair_count()),
    ];
    let classes = |j: Generator| q.generators.iter().filter(|g| g.source == j).count();
    results.push(check(
        "generator classes from 𝒳₅..𝒳₈",
        "[9, 9, 9, 9]",
        format!("{:?}", [5, 6, 7, 8].map(classes)),
    ));
    let mut listed: Vec<ShuffleTriple> = LISTED_TRIPLES
        .iter()
        .map(|t| ShuffleTriple::new(t[0] as usize, t[1] as usize, t[2] as usize).expect("valid"))
        .collect();
    listed.sort();
    let mut matched = Vec::new();
    for g in q
        .generators
        .iter()
        .filter(|g| g.kind == GeneratorKind::PairG && g.source == 5)
    {
        let h = &q.generators[g.partner.expect("pair")];
        let x = realize_a_word(&g.word, Factor::Primed);
        let y = realize_a_word(&h.word, Factor::Primed);
        matched.extend(match_pair_triple(&x, &y));
    }
    matched.sort();
    let show = |v: &[ShuffleTriple]| v.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ");
    results.push(check(
        "triples of 𝒳₅/𝒳₈ pairs (q⁻¹gq, q⁻¹hq)",
        show(&listed),
        show(&matched),
    ));
    let (g, h) = gh_words();
    let twin = CommutationGraph::twin(6);
    let gh_pair = q
        .generators
        .iter()
        .find(|x| x.kind == GeneratorKind::PairG && x.source == 2)
        .expect("pair from 𝒳₂");
    results.push(check(
        "𝒳₂ generator realizes g",
        true,
        twin.equal_unchecked(realize_a_word(&gh_pair.word, Factor::Primed).letters(), g.letters())
            || twin.equal_unchecked(
                realize_a_word(&gh_pair.word, Factor::Primed).letters(),
                g.inverse().letters(),
            ),
    ));
    let gh_h = &q.generators[gh_pair.partner.expect("pair")];
    results.push(check(
        "𝒳₃ generator realizes h",
        true,
        twin.equal_unchecked(realize_a_word(&gh_h.word, Factor::Primed).letters(), h.letters())
            || twin.equal_unchecked(
                realize_a_word(&gh_h.word, Factor::Primed).letters(),
                h.inverse().letters(),
            ),
    ));
    let orbit_ok = q
        .generators
        .iter()
        .zip(&q.orbit_sizes)
        .filter(|(g, &n)| g.source < 5 || n == 4)
        .count();
    results.push(count("orbit size 4 for 𝒳₅..𝒳₈ classes", q.generators.len(), orbit_ok));
    let a = CommutationGraph::a_graph();
    let unique_partner = q
        .generators
        .iter()
        .filter(|g| g.source == 8)
        .filter(|g| {
            q.generators
                .iter()
                .filter(|o| o.id != g.id && a.commutator_is_trivial(&g.word, &o.word).expect("valid"))
                .count()
                == 1
        })
        .count();
    results.push(count(
        "each 𝒳₈ generator commutes with exactly one other",
        9,
        unique_partner,
    ));
    results.push(check(
        "summary",
        "free=18 pairs=10",
        format!("free={} pairs={}", q.free_count(), q.pair_count()),
    ));
    results
}

/// Whether the §3.4-style pairs `(q g q⁻¹, q h q⁻¹)` are pure and commute,
/// and how many distinct braids the 40 entries give.
pub fn literal_pair_form_report() -> (usize, usize, usize) {
    let twin = CommutationGraph::twin(6);
    let (g, h) = gh_words();
    let mut nfs = HashSet::new();
    let (mut pure, mut commuting) = (0, 0);
    for t in ShuffleTriple::all() {
        let q = shuffle_word(t);
        let x = q.concat(&g).concat(&q.inverse());
        let y = q.concat(&h).concat(&q.inverse());
        pure += usize::from(is_pure(6, &x).expect("valid") && is_pure(6, &y).expect("valid"));
        commuting += usize::from(twin.commutator_is_trivial(&x, &y).expect("valid"));
        nfs.insert(twin.normal_form(&x).expect("valid"));
        nfs.insert(twin.normal_form(&y).expect("valid"));
    }
    (pure, commuting, nfs.len())
}

pub fn theorem2_suite(seed: u64, samples: usize) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = P6Catalog::get();
    let twin = CommutationGraph::twin(6);
    let mut results = vec![
        check("free generators", 71, c.free_count()),
        check("commuting pairs", 20, c.pair_count()),
    ];
    let triples: Vec<String> = c.pairs.iter().map(|p| p.triple.to_string()).collect();
    let all: Vec<String> = ShuffleTriple::all().iter().map(|t| t.to_string()).collect();
    results.push(check("pair triples", all.join(" "), triples.join(" ")));
    let commuting = c
        .pairs
        .iter()
        .filter(|p| {
            twin.commutator_is_trivial(&p.g.realization, &p.h.realization)
                .expect("valid")
        })
        .count();
    results.push(count("pairs commute", 20, commuting));
    let geometric = c
        .pairs
        .iter()
        .filter(|p| (p.g.realization.clone(), p.h.realization.clone()) == pair_words(p.triple))
        .count();
    results.push(count("pairs are (q⁻¹gq, q⁻¹hq)", 20, geometric));
    let realizations = c.all_realizations();
    let pure = realizations.iter().filter(|w| is_pure(6, w).expect("valid")).count();
    results.push(count("realizations are pure", 111, pure));
    let nfs: HashSet<Word> = realizations
        .iter()
        .map(|w| twin.normal_form(w).expect("valid"))
        .collect();
    results.push(check("distinct realizations", 111, nfs.len()));
    results.push(check(
        "trivial realizations",
        0,
        usize::from(nfs.contains(&Word::empty())),
    ));
    let mut ok = 0;
    for _ in 0..samples {
        let w = random_pure_word(&mut rng, 6, 40);
        ok += usize::from(
            c.decompose(&w)
                .is_ok_and(|nf| twin.equal_unchecked(c.realize(&nf).letters(), w.letters())),
        );
    }
    results.push(count("realize ∘ decompose = identity (random)", samples, ok));
    let mut ok = 0;
    for _ in 0..samples {
        let nf = random_p6_normal_form(&mut rng, c, 8, 3);
        ok += usize::from(c.decompose(&c.realize(&nf)).is_ok_and(|back| back == nf));
    }
    results.push(count("decompose ∘ realize = identity (random)", samples, ok));
    let (g, _) = gh_words();
    results.push(check(
        "decompose g",
        "P123[g^1 h^0]",
        c.decompose(&g)
            .map(|nf| nf.to_string())
            .unwrap_or_else(|e| e.to_string()),
    ));
    match pure_twin_homology(6) {
        Ok(h) => results.push(check("H₁ rank = 71 + 2·20", 71 + 2 * 20, h.homology.free_rank)),
        Err(e) => results.push(check("H₁ rank = 71 + 2·20", 111, e)),
    }
    results
}

pub fn h1_suite(n: usize) -> Result<Vec<CheckResult>> {
    if !(2..=7).contains(&n) {
        return Err(Error::Presentation(format!("h1 needs 2 ≤ n ≤ 7, got {n}")));
    }
    let h = pure_twin_homology(n)?;
    let index: usize = (1..=n).product();
    let m = n - 1;
    let relators = m + (m.saturating_sub(1) * m.saturating_sub(2)) / 2;
    let torsion: Vec<String> = h.homology.torsion.iter().map(|t| t.to_string()).collect();
    let mut results = vec![
        check("index", index, h.index),
        check("Schreier generators", index * m - (index - 1), h.generators),
        check("relators", index * relators, h.relators),
    ];
    if let Some(rank) = expected_h1_rank(n) {
        results.push(check("H₁ rank", rank, h.homology.free_rank));
    } else {
        results.push(check("H₁ rank (computed)", h.homology.free_rank, h.homology.free_rank));
    }
    results.push(check("torsion", "[]", format!("[{}]", torsion.join(", "))));
    Ok(results)
}

/// Runs one suite by name; `h1` covers `n = 3..=6` when run this way.
pub fn run_suite(name: &str, seed: u64) -> Result<Vec<CheckResult>> {
    Ok(match name {
        "words" => words_suite(seed),
        "table1" => table1_suite(),
        "prop4" => prop4_suite(seed),
        "kernel" => kernel_suite(seed, 500),
        "prop6" => prop6_suite(),
        "theorem2" => theorem2_suite(seed, 300),
        "h1" => {
            let mut all = Vec::new();
            for n in 3..=6 {
                all.extend(h1_suite(n)?.into_iter().map(|mut r| {
                    r.check = format!("n={n}: {}", r.check);
                    r
                }));
            }
            all
        }
        _ => {
            return Err(Error::Parse {
                what: "suite name",
                input: name.to_string(),
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn move_search_examples() {
        let twin = CommutationGraph::twin(6);
        assert!(equal_by_moves(&twin, &[1, 3, 1], &[3]));
        assert!(!equal_by_moves(&twin, &[1, 2], &[2, 1]));
        assert!(equal_by_moves(&twin, &[], &[2, 2]));
    }

    #[test]
    fn random_words_have_the_right_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let w = random_pure_word(&mut rng, 6, 40);
            assert!(w.len() <= 40 && is_pure(6, &w).unwrap());
            let b = random_bicoloured_word(&mut rng, 40);
            assert!(b.len() <= 40 && colour_permutations(&b).unwrap().is_some());
        }
    }

    #[test]
    fn small_suites_pass() {
        for r in table1_suite().into_iter().chain(prop6_suite()) {
            assert!(r.pass, "{r:?}");
        }
    }
}
