mod common;

use common::{is_pure, rng};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use planar_braids::reidemeister_schreier::{
    abelianization, subgroup_presentation, symmetric_regular_action, PresentationData, SchreierPresentation, SignedWord,
};
use planar_braids::snf::{abelian_invariants, determinant, mat_mul, smith_normal_form, IntegerMatrix};
use planar_braids::{CommutationGraph, Word};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn twin_word(w: &SignedWord) -> Word {
    Word::new(w.letters().iter().map(|&(g, _)| g as u8 + 1).collect::<Vec<_>>())
}

fn presentation(n: usize) -> SchreierPresentation {
    subgroup_presentation(&PresentationData::twin(n), &symmetric_regular_action(n)).unwrap()
}

#[test]
fn schreier_generators_are_pure_braids() {
    for n in 3..=5 {
        let sp = presentation(n);
        for k in 0..sp.presentation.generator_count {
            let w = sp.generator_word(k);
            assert_eq!(sp.table.act_word(0, &w), 0);
            assert!(is_pure(n, twin_word(&w).letters()));
        }
    }
}

#[test]
fn rewritten_relators_are_trivial_braids() {
    let twin = CommutationGraph::twin(5);
    let sp = presentation(5);
    let mut r = rng(51);
    for _ in 0..500 {
        let i = r.gen_range(0..sp.presentation.relators.len());
        let expanded = sp.expand(&sp.presentation.relators[i]);
        assert!(twin.is_identity(&twin_word(&expanded)).unwrap(), "relator {i}");
    }
    let twin = CommutationGraph::twin(4);
    let sp = presentation(4);
    for rel in &sp.presentation.relators {
        assert!(twin.is_identity(&twin_word(&sp.expand(rel))).unwrap());
    }
}

#[test]
fn rewritten_relators_are_conjugates_of_relators() {
    let p = PresentationData::twin(4);
    let sp = presentation(4);
    for (rel, &(c, ri)) in sp.presentation.relators.iter().zip(&sp.relator_sources) {
        let t = &sp.table.transversal[c];
        let conj = t.concat(&p.relators[ri]).concat(&t.inverse()).reduced();
        assert_eq!(sp.expand(rel), conj);
    }
}

#[test]
fn presentation_sizes() {
    for (n, gens, rels) in [(4, 49, 96), (5, 361, 840)] {
        let sp = presentation(n);
        assert_eq!(
            (sp.presentation.generator_count, sp.presentation.relators.len()),
            (gens, rels)
        );
    }
    assert_eq!(PresentationData::twin(6).relators.len(), 11);
}

#[test]
fn rank_is_invariant_under_shuffling() {
    let mut r = rng(52);
    for n in [4, 5] {
        let m = presentation(n).presentation.relation_matrix();
        let expected = abelian_invariants(&m);
        for _ in 0..3 {
            let mut rows: Vec<usize> = (0..m.row_count()).collect();
            let mut cols: Vec<usize> = (0..m.col_count()).collect();
            rows.shuffle(&mut r);
            cols.shuffle(&mut r);
            assert_eq!(abelian_invariants(&m.permuted(&rows, &cols)), expected);
        }
    }
}

#[test]
fn trivial_cases() {
    let p = PresentationData::twin(2);
    let sp = subgroup_presentation(&p, &vec![vec![1, 0]]).unwrap();
    assert_eq!(sp.index(), 2);
    assert_eq!(abelianization(&sp.presentation).free_rank, 0);
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

proptest! {
    #[test]
    fn smith_form_is_a_unimodular_diagonalisation(m in small_matrix()) {
        let (rows, cols) = (m.len(), m[0].len());
        let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let s = smith_normal_form(&big, cols, true);
        let (u, v) = (s.left.unwrap(), s.right.unwrap());
        prop_assert_eq!(determinant(&u).abs(), BigInt::one());
        prop_assert_eq!(determinant(&v).abs(), BigInt::one());
        let d = mat_mul(&mat_mul(&u, &big, rows, cols), &v, cols, cols);
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let expected = if i == j && i < s.diagonal.len() { s.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(x, &expected);
            }
        }
        for w in s.diagonal.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        // the sparse path agrees
        let mut sparse = IntegerMatrix::new(cols);
        for r in &m {
            sparse.push_row(r.iter().enumerate().map(|(j, &x)| (j, x)));
        }
        let inv = abelian_invariants(&sparse);
        prop_assert_eq!(inv.rank, s.diagonal.len());
        let torsion: Vec<BigInt> = s.diagonal.iter().filter(|d| !d.is_one()).cloned().collect();
        prop_assert_eq!(inv.torsion, torsion);
    }
}
