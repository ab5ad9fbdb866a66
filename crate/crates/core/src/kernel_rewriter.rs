//! Kernels of free products of morphisms onto a finite group.
//!
//! Given surjections `f′: G′ → S` and `f″: G″ → S` with kernels `K′`, `K″`,
//! the kernel of `f′ * f″` is `K′ * K″ * F_{|S|-1}`. The free generators are
//! `x_α = z′_α · z″_α⁻¹` for transversal words `z′_α ∈ G′`, `z″_α ∈ G″`,
//! `α ∈ S ∖ {e}`. [`KernelSetup::rewrite`] expands a kernel element into these
//! letters and [`KernelSetup::embed`] maps letters back into `G′ * G″`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::free_product::{merge_adjacent, Blocks, FactorWord, FreeProduct, Side, WordGroup};

pub trait FiniteGroup {
    type Element: Clone + Eq + Ord + Hash + Debug;

    fn identity(&self) -> Self::Element;
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
}

/// `ℤ/n`.
#[derive(Clone, Copy, Debug)]
pub struct CyclicGroup {
    pub order: u32,
}

impl FiniteGroup for CyclicGroup {
    type Element = u32;

    fn identity(&self) -> u32 {
        0
    }

    fn multiply(&self, a: &u32, b: &u32) -> u32 {
        (a + b) % self.order
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KernelLetter<L1, L2, E> {
    /// Element of `K′`, stored reduced.
    KPrime(Vec<L1>),
    /// Element of `K″`, stored reduced.
    KDouble(Vec<L2>),
    /// `x_α^{±1}`.
    X(E, i8),
}

pub type KernelWord<L1, L2, E> = Vec<KernelLetter<L1, L2, E>>;

type KWord<G1, G2, S> = KernelWord<<G1 as WordGroup>::Letter, <G2 as WordGroup>::Letter, <S as FiniteGroup>::Element>;

pub struct KernelSetup<G1: WordGroup, G2: WordGroup, S: FiniteGroup> {
    product: FreeProduct<G1, G2>,
    quotient: S,
    first_images: HashMap<G1::Letter, S::Element>,
    second_images: HashMap<G2::Letter, S::Element>,
    first_transversal: BTreeMap<S::Element, Vec<G1::Letter>>,
    second_transversal: BTreeMap<S::Element, Vec<G2::Letter>>,
}

impl<G1: WordGroup, G2: WordGroup, S: FiniteGroup> KernelSetup<G1, G2, S> {
    /// Checks that both maps are onto the element set indexed by the
    /// transversals, that `e` is represented by empty words, and that every
    /// transversal word maps to its index.
    pub fn new(
        product: FreeProduct<G1, G2>,
        quotient: S,
        first_images: HashMap<G1::Letter, S::Element>,
        second_images: HashMap<G2::Letter, S::Element>,
        first_transversal: BTreeMap<S::Element, Vec<G1::Letter>>,
        second_transversal: BTreeMap<S::Element, Vec<G2::Letter>>,
    ) -> Result<Self> {
        let setup = KernelSetup {
            product,
            quotient,
            first_images,
            second_images,
            first_transversal,
            second_transversal,
        };
        setup.validate()?;
        Ok(setup)
    }

    fn validate(&self) -> Result<()> {
        let e = self.quotient.identity();
        let elements: BTreeSet<_> = self.first_transversal.keys().cloned().collect();
        if elements != self.second_transversal.keys().cloned().collect() {
            return Err(Error::Setup(
                "transversals are indexed by different element sets".into(),
            ));
        }
        if self.first_transversal.get(&e).map(Vec::is_empty) != Some(true)
            || self.second_transversal.get(&e).map(Vec::is_empty) != Some(true)
        {
            return Err(Error::Setup("identity must be represented by the empty word".into()));
        }
        for (alpha, z) in &self.first_transversal {
            if &self.first_image(z)? != alpha {
                return Err(Error::Setup(format!(
                    "first transversal word for {alpha:?} maps elsewhere"
                )));
            }
        }
        for (alpha, z) in &self.second_transversal {
            if &self.second_image(z)? != alpha {
                return Err(Error::Setup(format!(
                    "second transversal word for {alpha:?} maps elsewhere"
                )));
            }
        }
        if self.closure(self.first_images.values()) != elements {
            return Err(Error::Setup(
                "first map is not onto the transversal's element set".into(),
            ));
        }
        if self.closure(self.second_images.values()) != elements {
            return Err(Error::Setup(
                "second map is not onto the transversal's element set".into(),
            ));
        }
        Ok(())
    }

    fn closure<'a>(&self, gens: impl Iterator<Item = &'a S::Element>) -> BTreeSet<S::Element>
    where
        S::Element: 'a,
    {
        let gens: Vec<S::Element> = gens.cloned().collect();
        let mut seen = BTreeSet::from([self.quotient.identity()]);
        let mut frontier = vec![self.quotient.identity()];
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = self.quotient.multiply(&x, g);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        seen
    }

    pub fn product(&self) -> &FreeProduct<G1, G2> {
        &self.product
    }

    pub fn quotient(&self) -> &S {
        &self.quotient
    }

    /// Elements of `S`, in the order of the transversal index.
    pub fn elements(&self) -> impl Iterator<Item = &S::Element> {
        self.first_transversal.keys()
    }

    pub fn first_rep(&self, alpha: &S::Element) -> &[G1::Letter] {
        &self.first_transversal[alpha]
    }

    pub fn second_rep(&self, alpha: &S::Element) -> &[G2::Letter] {
        &self.second_transversal[alpha]
    }

    pub fn first_image(&self, w: &[G1::Letter]) -> Result<S::Element> {
        w.iter().try_fold(self.quotient.identity(), |acc, l| {
            let img = self
                .first_images
                .get(l)
                .ok_or_else(|| Error::Setup(format!("letter {l:?} has no image")))?;
            Ok(self.quotient.multiply(&acc, img))
        })
    }

    pub fn second_image(&self, w: &[G2::Letter]) -> Result<S::Element> {
        w.iter().try_fold(self.quotient.identity(), |acc, l| {
            let img = self
                .second_images
                .get(l)
                .ok_or_else(|| Error::Setup(format!("letter {l:?} has no image")))?;
            Ok(self.quotient.multiply(&acc, img))
        })
    }

    pub fn image(&self, y: &[FactorWord<G1::Letter, G2::Letter>]) -> Result<S::Element> {
        y.iter().try_fold(self.quotient.identity(), |acc, block| {
            let img = match block {
                FactorWord::First(w) => self.first_image(w)?,
                FactorWord::Second(w) => self.second_image(w)?,
            };
            Ok(self.quotient.multiply(&acc, &img))
        })
    }

    /// The rewriting of a kernel element of `f′ * f″` as a reduced word in
    /// `K′ * K″ * F_{|S|-1}`. Blocks need not alternate; consecutive blocks
    /// from the same factor are treated as separated by an identity block.
    pub fn rewrite(&self, y: &[FactorWord<G1::Letter, G2::Letter>]) -> Result<KWord<G1, G2, S>> {
        let e = self.quotient.identity();
        let mut current = e.clone();
        let mut side = Side::First;
        let mut out: KWord<G1, G2, S> = Vec::new();
        for block in y {
            match block {
                FactorWord::First(r) => {
                    if side == Side::Second && current != e {
                        out.push(KernelLetter::X(current.clone(), -1));
                    }
                    side = Side::First;
                    let next = self.quotient.multiply(&current, &self.first_image(r)?);
                    let letter = [
                        self.first_rep(&current),
                        r.as_slice(),
                        &self.product.first.inverse(self.first_rep(&next)),
                    ]
                    .concat();
                    debug_assert_eq!(self.first_image(&letter)?, e);
                    let letter = self.product.first.reduce(&letter);
                    if !letter.is_empty() {
                        out.push(KernelLetter::KPrime(letter));
                    }
                    current = next;
                }
                FactorWord::Second(s) => {
                    if side == Side::First && current != e {
                        out.push(KernelLetter::X(current.clone(), 1));
                    }
                    side = Side::Second;
                    let next = self.quotient.multiply(&current, &self.second_image(s)?);
                    let letter = [
                        self.second_rep(&current),
                        s.as_slice(),
                        &self.product.second.inverse(self.second_rep(&next)),
                    ]
                    .concat();
                    debug_assert_eq!(self.second_image(&letter)?, e);
                    let letter = self.product.second.reduce(&letter);
                    if !letter.is_empty() {
                        out.push(KernelLetter::KDouble(letter));
                    }
                    current = next;
                }
            }
        }
        if current != e {
            return Err(Error::NotInKernel);
        }
        Ok(self.reduce_kernel_word(&out))
    }

    /// Free-product reduction in `K′ * K″ * F`: merges adjacent `K′` (or `K″`)
    /// letters, drops trivial ones and cancels `x_α x_α⁻¹`.
    pub fn reduce_kernel_word(&self, kw: &[KernelLetter<G1::Letter, G2::Letter, S::Element>]) -> KWord<G1, G2, S> {
        let mut stack: KWord<G1, G2, S> = Vec::new();
        for letter in kw {
            match (stack.last(), letter) {
                (Some(KernelLetter::KPrime(top)), KernelLetter::KPrime(w)) => {
                    let merged = self.product.first.reduce(&[top.as_slice(), w].concat());
                    stack.pop();
                    if !merged.is_empty() {
                        stack.push(KernelLetter::KPrime(merged));
                    }
                }
                (Some(KernelLetter::KDouble(top)), KernelLetter::KDouble(w)) => {
                    let merged = self.product.second.reduce(&[top.as_slice(), w].concat());
                    stack.pop();
                    if !merged.is_empty() {
                        stack.push(KernelLetter::KDouble(merged));
                    }
                }
                (Some(KernelLetter::X(a, s)), KernelLetter::X(b, t)) if a == b && *s == -*t => {
                    stack.pop();
                }
                (_, KernelLetter::KPrime(w)) => {
                    let w = self.product.first.reduce(w);
                    if !w.is_empty() {
                        stack.push(KernelLetter::KPrime(w));
                    }
                }
                (_, KernelLetter::KDouble(w)) => {
                    let w = self.product.second.reduce(w);
                    if !w.is_empty() {
                        stack.push(KernelLetter::KDouble(w));
                    }
                }
                (_, x) => stack.push(x.clone()),
            }
        }
        stack
    }

    /// The homomorphism `K′ * K″ * F_{|S|-1} → G′ * G″`.
    pub fn embed(&self, kw: &[KernelLetter<G1::Letter, G2::Letter, S::Element>]) -> Blocks<G1, G2> {
        let mut blocks = Vec::with_capacity(kw.len() * 2);
        for letter in kw {
            match letter {
                KernelLetter::KPrime(w) => blocks.push(FactorWord::First(w.clone())),
                KernelLetter::KDouble(w) => blocks.push(FactorWord::Second(w.clone())),
                KernelLetter::X(alpha, sign) => {
                    let z1 = self.first_rep(alpha).to_vec();
                    let z2 = self.second_rep(alpha).to_vec();
                    if *sign > 0 {
                        blocks.push(FactorWord::First(z1));
                        blocks.push(FactorWord::Second(self.product.second.inverse(&z2)));
                    } else {
                        blocks.push(FactorWord::Second(z2));
                        blocks.push(FactorWord::First(self.product.first.inverse(&z1)));
                    }
                }
            }
        }
        merge_adjacent(blocks)
    }

    /// Whether a letter is a legal generator of `K′ * K″ * F`.
    pub fn is_valid_letter(&self, letter: &KernelLetter<G1::Letter, G2::Letter, S::Element>) -> bool {
        let e = self.quotient.identity();
        match letter {
            KernelLetter::KPrime(w) => self.first_image(w).map(|x| x == e).unwrap_or(false),
            KernelLetter::KDouble(w) => self.second_image(w).map(|x| x == e).unwrap_or(false),
            KernelLetter::X(alpha, sign) => {
                *alpha != e && self.first_transversal.contains_key(alpha) && sign.abs() == 1
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_product::FreeGroup;

    type Toy = KernelSetup<FreeGroup, FreeGroup, CyclicGroup>;
    type Fw = FactorWord<i32, i32>;
    type Kl = KernelLetter<i32, i32, u32>;

    /// `⟨t⟩ * ⟨u⟩ → ℤ/2`, `t, u ↦ 1`, `z′(1) = t`, `z″(1) = u`.
    fn toy() -> Toy {
        KernelSetup::new(
            FreeProduct::new(FreeGroup { rank: 1 }, FreeGroup { rank: 1 }),
            CyclicGroup { order: 2 },
            HashMap::from([(1, 1), (-1, 1)]),
            HashMap::from([(1, 1), (-1, 1)]),
            BTreeMap::from([(0, vec![]), (1, vec![1])]),
            BTreeMap::from([(0, vec![]), (1, vec![1])]),
        )
        .unwrap()
    }

    #[test]
    fn empty_rewrites_to_empty() {
        assert!(toy().rewrite(&[]).unwrap().is_empty());
        assert!(toy().embed(&[]).is_empty());
    }

    #[test]
    fn toy_example() {
        let k = toy();
        let y = vec![Fw::First(vec![1]), Fw::Second(vec![1])];
        let kw = k.rewrite(&y).unwrap();
        assert_eq!(kw, vec![Kl::X(1, 1), Kl::KDouble(vec![1, 1])]);
        let back = k.embed(&kw);
        assert_eq!(back, vec![Fw::First(vec![1]), Fw::Second(vec![-1, 1, 1])]);
        assert!(k.product().equal(&back, &y));
    }

    #[test]
    fn kprime_embeds_as_itself() {
        let k = toy();
        assert_eq!(k.embed(&[Kl::KPrime(vec![1, 1])]), vec![Fw::First(vec![1, 1])]);
    }

    #[test]
    fn rejects_non_kernel_elements() {
        assert_eq!(toy().rewrite(&[Fw::First(vec![1])]), Err(Error::NotInKernel));
    }

    #[test]
    fn rejects_bad_setups() {
        let bad_rep = KernelSetup::new(
            FreeProduct::new(FreeGroup { rank: 1 }, FreeGroup { rank: 1 }),
            CyclicGroup { order: 2 },
            HashMap::from([(1, 1), (-1, 1)]),
            HashMap::from([(1, 1), (-1, 1)]),
            BTreeMap::from([(0, vec![]), (1, vec![1, 1])]),
            BTreeMap::from([(0, vec![]), (1, vec![1])]),
        );
        assert!(matches!(bad_rep, Err(Error::Setup(_))));
        let not_onto = KernelSetup::new(
            FreeProduct::new(FreeGroup { rank: 1 }, FreeGroup { rank: 1 }),
            CyclicGroup { order: 2 },
            HashMap::from([(1, 0), (-1, 0)]),
            HashMap::from([(1, 1), (-1, 1)]),
            BTreeMap::from([(0, vec![]), (1, vec![])]),
            BTreeMap::from([(0, vec![]), (1, vec![1])]),
        );
        assert!(matches!(not_onto, Err(Error::Setup(_))));
    }

    #[test]
    fn reduction_cancels_generators() {
        let k = toy();
        let kw = vec![
            Kl::KPrime(vec![1, 1]),
            Kl::X(1, 1),
            Kl::X(1, -1),
            Kl::KPrime(vec![-1, -1]),
        ];
        assert!(k.reduce_kernel_word(&kw).is_empty());
    }
}
