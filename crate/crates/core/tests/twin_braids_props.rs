mod common;

use common::{rng, strand_positions};
use planar_braids::twin_braids::{
    is_pure, pair_words, permutation_of, shuffle_word, ColourPair, Permutation, ShuffleTriple,
};
use planar_braids::{CommutationGraph, Word};
use proptest::prelude::*;
use rand::Rng;

fn word(strands: u8, max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(1u8..strands, 0..=max)
}

proptest! {
    #[test]
    fn permutation_follows_the_strands(w in word(6, 40)) {
        let p = permutation_of(6, &Word::new(w.clone())).unwrap();
        let images: Vec<usize> = p.images().iter().map(|&x| x as usize).collect();
        prop_assert_eq!(images, strand_positions(6, &w));
    }

    #[test]
    fn permutation_is_a_homomorphism(u in word(7, 30), v in word(7, 30)) {
        let (pu, pv) = (permutation_of(7, &Word::new(u.clone())).unwrap(), permutation_of(7, &Word::new(v.clone())).unwrap());
        let uv = Word::new(u).concat(&Word::new(v));
        prop_assert_eq!(permutation_of(7, &uv).unwrap(), pu.then(&pv));
    }

    #[test]
    fn purity_matches_the_strands(w in word(6, 20)) {
        let expected = strand_positions(6, &w).iter().enumerate().all(|(k, &p)| p == k + 1);
        prop_assert_eq!(is_pure(6, &Word::new(w)).unwrap(), expected);
    }

    #[test]
    fn inverse_word_inverts_the_permutation(w in word(6, 30)) {
        let w = Word::new(w);
        let p = permutation_of(6, &w).unwrap();
        prop_assert_eq!(permutation_of(6, &w.inverse()).unwrap(), p.inverse());
        prop_assert!(p.then(&p.inverse()).is_identity());
    }
}

/// Random reduced word for a permutation: cross any adjacent out-of-order
/// pair, chosen at random.
fn random_reduced_word(r: &mut impl Rng, images: &[usize]) -> Vec<u8> {
    let n = images.len();
    let mut at: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    loop {
        let bad: Vec<usize> = (0..n - 1).filter(|&i| images[at[i]] > images[at[i + 1]]).collect();
        if bad.is_empty() {
            return out;
        }
        let i = bad[r.gen_range(0..bad.len())];
        at.swap(i, i + 1);
        out.push(i as u8 + 1);
    }
}

#[test]
fn shuffles_do_not_depend_on_the_reduced_word() {
    let twin = CommutationGraph::twin(6);
    let mut r = rng(11);
    for t in ShuffleTriple::all() {
        let q = shuffle_word(t);
        let images: Vec<usize> = t.permutation().images().iter().map(|&x| x as usize).collect();
        assert_eq!(q.len(), t.permutation().inversions(), "{t}");
        for _ in 0..20 {
            let w = Word::new(random_reduced_word(&mut r, &images));
            assert_eq!(w.len(), q.len());
            assert!(twin.equal(&w, &q).unwrap(), "{t}: {w} vs {q}");
        }
    }
}

#[test]
fn shuffles_send_k_to_ik() {
    for t in ShuffleTriple::all() {
        let p = permutation_of(6, &shuffle_word(t)).unwrap();
        let pos = t.positions();
        for k in 1..=3 {
            assert_eq!(p.apply(k), pos[k - 1] as usize);
        }
        let black: Vec<usize> = (4..=6).map(|k| p.apply(k)).collect();
        assert!(black.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn pair_braids_are_pure_and_commute() {
    let twin = CommutationGraph::twin(6);
    for t in ShuffleTriple::all() {
        let (g, h) = pair_words(t);
        assert!(is_pure(6, &g).unwrap() && is_pure(6, &h).unwrap(), "{t}");
        assert!(twin.commutator_is_trivial(&g, &h).unwrap(), "{t}");
    }
}

#[test]
fn colour_pairs_compose_like_permutations() {
    let mut r = rng(12);
    for _ in 0..200 {
        let a: Vec<u8> = (0..10).map(|_| r.gen_range(1..6)).collect();
        let b: Vec<u8> = (0..10).map(|_| r.gen_range(1..6)).collect();
        let pa = permutation_of(6, &Word::new(a)).unwrap();
        let pb = permutation_of(6, &Word::new(b)).unwrap();
        if let (Some(ca), Some(cb)) = (ColourPair::from_permutation(&pa), ColourPair::from_permutation(&pb)) {
            assert_eq!(ColourPair::from_permutation(&pa.then(&pb)), Some(ca.then(&cb)));
        }
    }
}

#[test]
fn permutation_rejects_bad_images() {
    assert!(Permutation::from_images(vec![1, 1, 2]).is_err());
    assert!(Permutation::from_images(vec![2, 3, 1]).is_ok());
    assert!(permutation_of(3, &Word::new([3])).is_err());
}
