mod common;

use common::{perturb, random_pure_word, rng, sorting_word, strand_positions};
use planar_braids::p6::{reduce_syllables, GeneratorSource, P6Catalog, P6NormalForm, P6Syllable};
use planar_braids::{CommutationGraph, Error, Word};
use proptest::prelude::*;

/// Any word made pure by appending the reverse of a sorting word.
fn pure(w: Vec<u8>) -> Word {
    let fix = sorting_word(&strand_positions(6, &w));
    let mut w = w;
    w.extend(fix.iter().rev());
    Word::new(w)
}

fn pure_word() -> impl Strategy<Value = Word> {
    prop::collection::vec(1u8..=5, 0..=25).prop_map(pure)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn realize_inverts_decompose(w in pure_word()) {
        let c = P6Catalog::get();
        let nf = c.decompose(&w).unwrap();
        prop_assert!(nf.is_reduced());
        prop_assert!(CommutationGraph::twin(6).equal(&c.realize(&nf), &w).unwrap());
    }

    #[test]
    fn decompose_is_invariant_under_moves(w in pure_word(), seed in any::<u64>()) {
        let c = P6Catalog::get();
        let moved = Word::new(perturb(&mut rng(seed), w.letters(), 6, 10, 80));
        prop_assert_eq!(c.decompose(&moved).unwrap(), c.decompose(&w).unwrap());
    }

    #[test]
    fn decompose_is_a_homomorphism(u in pure_word(), v in pure_word()) {
        let c = P6Catalog::get();
        let (nu, nv) = (c.decompose(&u).unwrap(), c.decompose(&v).unwrap());
        let joined = reduce_syllables(nu.syllables().iter().chain(nv.syllables()).copied());
        prop_assert_eq!(c.decompose(&u.concat(&v)).unwrap(), joined);
        prop_assert_eq!(c.decompose(&u.inverse()).unwrap(), nu.inverse());
    }
}

#[test]
fn realize_inverts_decompose_on_long_words() {
    let c = P6Catalog::get();
    let twin = CommutationGraph::twin(6);
    let mut r = rng(41);
    for _ in 0..300 {
        let w = Word::new(random_pure_word(&mut r, 6, 40));
        let nf = c.decompose(&w).unwrap();
        assert!(twin.equal(&c.realize(&nf), &w).unwrap(), "{w}");
    }
}

#[test]
fn each_generator_decomposes_to_itself() {
    let c = P6Catalog::get();
    for g in &c.free {
        assert_eq!(
            c.decompose(&g.realization).unwrap(),
            P6NormalForm(vec![P6Syllable::Free { id: g.id, exponent: 1 }]),
            "F{}",
            g.id
        );
    }
}

#[test]
fn rebasing_conjugators_are_bridges() {
    let c = P6Catalog::get();
    for p in &c.pairs {
        for s in p.conjugator() {
            let P6Syllable::Free { id, .. } = s else {
                panic!("pair syllable in conjugator of {}", p.triple)
            };
            assert!(
                matches!(c.free_generator(*id).source, GeneratorSource::Bridge(_)),
                "{}",
                p.triple
            );
        }
    }
}

#[test]
fn impure_and_invalid_words_are_rejected() {
    let c = P6Catalog::get();
    assert_eq!(c.decompose(&Word::new([2])), Err(Error::NotPure));
    assert!(c.decompose(&Word::new([6, 6])).is_err());
}

#[test]
fn bridge_realizations_follow_the_transversals() {
    let c = P6Catalog::get();
    let bridges = c
        .free
        .iter()
        .filter(|g| matches!(g.source, GeneratorSource::Bridge(_)))
        .count();
    assert_eq!(bridges, 35);
    let from_q = c
        .free
        .iter()
        .filter(|g| matches!(g.source, GeneratorSource::QPrime(_) | GeneratorSource::QDouble(_)))
        .count();
    assert_eq!(from_q, 36);
}
