//! Normal forms in free products `A * B` and in amalgams `A *_C B` over an
//! infinite cyclic `C = ⟨c_A⟩ = ⟨c_B⟩`.

use serde::Serialize;

use super::NfError;
use crate::backend::{Backend, Element};
use crate::free_group::FreeWord;
use crate::linalg::{self, CosetComplement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    A,
    B,
}

/// `r₁ r₂ … r_k · c^trailing` with alternating nonidentity coset
/// representatives `rᵢ`. In a free product `trailing` is always zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ReducedSequence {
    pub entries: Vec<(Side, Element)>,
    pub trailing: i64,
}

impl ReducedSequence {
    pub fn is_identity(&self) -> bool {
        self.entries.is_empty() && self.trailing == 0
    }

    /// Number of alternating entries.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Left transversal of `⟨c⟩` in one factor.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Chooser {
    /// Trivial subgroup: every element is its own representative.
    Trivial,
    /// `c = mult · p` with `p` primitive in `ℤʳ`.
    Abelian { complement: CosetComplement, mult: i64 },
    /// Shortest, then lexicographically least, element of `x⟨c⟩`.
    Free { c: FreeWord, core_len: usize },
}

impl Chooser {
    fn new(backend: Backend, c: Option<&Element>) -> Chooser {
        match c {
            None => Chooser::Trivial,
            Some(Element::Abelian(v)) => {
                let mult = linalg::gcd_all(v);
                let p: Vec<i64> = v.iter().map(|x| x / mult).collect();
                let complement = CosetComplement::new(&p).expect("primitive by construction");
                Chooser::Abelian { complement, mult }
            }
            Some(Element::Free(w)) => {
                debug_assert!(matches!(backend, Backend::Free { .. }));
                Chooser::Free { c: w.clone(), core_len: w.cyclic_reduce().0.len() }
            }
        }
    }

    /// `(r, j)` with `x = r · c^j`.
    fn split(&self, x: &Element) -> (Element, i64) {
        match (self, x) {
            (Chooser::Trivial, _) => (x.clone(), 0),
            (Chooser::Abelian { complement, mult }, Element::Abelian(v)) => {
                let (k, _) = complement.split(v);
                let rep = complement.rep(v);
                let (q, s) = (k.div_euclid(*mult), k.rem_euclid(*mult));
                let p = complement.sigma();
                let r = rep.iter().zip(p).map(|(a, b)| a + s * b).collect();
                (Element::Abelian(r), q)
            }
            (Chooser::Free { c, core_len }, Element::Free(w)) => {
                // any y = w·c^j with |y| ≤ |w| has |j|·|core| ≤ 2|w| + 2|c|
                let bound = ((2 * w.len() + 2 * c.len()) / (*core_len).max(1) + 1) as i64;
                let mut best: Option<(FreeWord, i64)> = None;
                for j in -bound..=bound {
                    let y = w.mul(&c.pow(-j));
                    let better = match &best {
                        None => true,
                        Some((b, _)) => (y.len(), y.letters()) < (b.len(), b.letters()),
                    };
                    if better {
                        best = Some((y, j));
                    }
                }
                let (y, j) = best.expect("nonempty range");
                (Element::Free(y), j)
            }
            _ => unreachable!("element kind matches backend"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Amalgam {
    pub a: Backend,
    pub b: Backend,
    identification: Option<(Element, Element)>,
    choosers: [Chooser; 2],
}

impl Amalgam {
    pub fn free_product(a: Backend, b: Backend) -> Amalgam {
        Amalgam { a, b, identification: None, choosers: [Chooser::Trivial, Chooser::Trivial] }
    }

    /// `A *_{c_A = c_B} B`.
    pub fn new(a: Backend, b: Backend, c_a: Element, c_b: Element) -> Result<Amalgam, NfError> {
        if a.is_identity(&c_a) || b.is_identity(&c_b) {
            return Err(NfError::TorsionIdentification);
        }
        let choosers = [Chooser::new(a, Some(&c_a)), Chooser::new(b, Some(&c_b))];
        Ok(Amalgam { a, b, identification: Some((c_a, c_b)), choosers })
    }

    pub fn identification(&self) -> Option<&(Element, Element)> {
        self.identification.as_ref()
    }

    pub fn backend(&self, side: Side) -> Backend {
        match side {
            Side::A => self.a,
            Side::B => self.b,
        }
    }

    fn chooser(&self, side: Side) -> &Chooser {
        &self.choosers[side as usize]
    }

    /// `c^j` read in the factor `side`.
    pub fn c_power(&self, side: Side, j: i64) -> Element {
        let backend = self.backend(side);
        match &self.identification {
            None => backend.identity(),
            Some((ca, cb)) => backend.pow(if side == Side::A { ca } else { cb }, j),
        }
    }

    /// Right-multiplies `nf` by the factor element `x`.
    pub fn push(&self, nf: &mut ReducedSequence, side: Side, x: &Element) {
        let backend = self.backend(side);
        let mut z = backend.mul(&self.c_power(side, nf.trailing), x);
        if matches!(nf.entries.last(), Some((s, _)) if *s == side) {
            let (_, r) = nf.entries.pop().expect("checked");
            z = backend.mul(&r, &z);
        }
        let (r, j) = self.chooser(side).split(&z);
        if !backend.is_identity(&r) {
            nf.entries.push((side, r));
        }
        nf.trailing = j;
    }

    pub fn normal_form(&self, word: &[(Side, Element)]) -> ReducedSequence {
        let mut nf = ReducedSequence::default();
        for (side, x) in word {
            self.push(&mut nf, *side, x);
        }
        nf
    }

    pub fn multiply(&self, x: &ReducedSequence, y: &ReducedSequence) -> ReducedSequence {
        let mut nf = x.clone();
        for (side, e) in &y.entries {
            self.push(&mut nf, *side, e);
        }
        if y.trailing != 0 {
            self.push(&mut nf, Side::A, &self.c_power(Side::A, y.trailing));
        }
        nf
    }

    pub fn inverse(&self, x: &ReducedSequence) -> ReducedSequence {
        let mut nf = ReducedSequence::default();
        if x.trailing != 0 {
            self.push(&mut nf, Side::A, &self.c_power(Side::A, -x.trailing));
        }
        for (side, e) in x.entries.iter().rev() {
            self.push(&mut nf, *side, &self.backend(*side).inverse(e));
        }
        nf
    }

    /// Expands a normal form back into a factor word.
    pub fn expand(&self, x: &ReducedSequence) -> Vec<(Side, Element)> {
        let mut out = x.entries.clone();
        if x.trailing != 0 {
            out.push((Side::A, self.c_power(Side::A, x.trailing)));
        }
        out
    }
}

pub fn free_product_nf(a: Backend, b: Backend, word: &[(Side, Element)]) -> ReducedSequence {
    Amalgam::free_product(a, b).normal_form(word)
}

pub fn amalgam_nf(amalgam: &Amalgam, word: &[(Side, Element)]) -> ReducedSequence {
    amalgam.normal_form(word)
}
