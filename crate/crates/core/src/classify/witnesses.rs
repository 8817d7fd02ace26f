//! Witness candidates and the amalgam criteria.

use crate::analysis::Form1;
use crate::backend::{Backend, Element, Index};
use crate::word::{RelativeWord, Syllable};

use super::{ClassifyError, WitnessPair, WitnessStatus};

/// Both indices proper, and one of them larger than two.
pub fn fact1_criterion(index_a: Index, index_b: Index) -> bool {
    let proper = |i: Index| i != Index::Finite(1);
    proper(index_a) && proper(index_b) && index_a.max(index_b) > Index::Finite(2)
}

/// A free subgroup exists in `A` exactly when one exists in `A/⟨a⟩`, for a
/// cyclic normal `⟨a⟩`.
pub fn fact2_lift(quotient_has_free: bool) -> bool {
    quotient_has_free
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaElements {
    pub h1: Element,
    pub h2: Element,
    pub g1: Element,
    pub g2: Element,
}

const SEARCH_LEN: usize = 3;

fn outside(g: Backend, x: &Element, c: &Element) -> bool {
    g.cyclic_membership(x, c).is_none()
}

/// First pair `(x, y)` in shortlex order with `x, y` and `x·y` (or `y·x`
/// when `swap`) all outside `⟨c⟩`.
fn pair_outside(g: Backend, c: &Element, swap: bool) -> Option<(Element, Element)> {
    let elems = g.shortlex_elements(SEARCH_LEN);
    for x in &elems {
        if !outside(g, x, c) {
            continue;
        }
        for y in &elems {
            let prod = if swap { g.mul(y, x) } else { g.mul(x, y) };
            if outside(g, y, c) && outside(g, &prod, c) {
                return Some((x.clone(), y.clone()));
            }
        }
    }
    None
}

/// `h₁, h₂, h₁h₂ ∉ ⟨a_m⟩` and `g₂, g₁, g₂g₁ ∉ ⟨b₀⟩`, by shortest-first search.
pub fn lemma_elements(g: Backend, a_m: &Element, b_0: &Element) -> Option<LemmaElements> {
    let (h1, h2) = pair_outside(g, a_m, false)?;
    let (g1, g2) = pair_outside(g, b_0, true)?;
    Some(LemmaElements { h1, h2, g1, g2 })
}

/// `x^{t^d} = t^{-d} x t^d`.
fn conj_t(g: Backend, t: Backend, x: &Element, d: i64) -> RelativeWord {
    let td = t.pow(&t.generator(0).expect("rank one"), d);
    RelativeWord::from_syllables(g, t, [Syllable::T(t.inverse(&td)), Syllable::Coef(x.clone()), Syllable::T(td)])
}

pub(crate) fn lemma_pairs(g: Backend, t: Backend, e: &LemmaElements) -> Vec<WitnessPair> {
    [2i64, 3]
        .into_iter()
        .map(|d| {
            let u = RelativeWord::coef(g, t, e.g1.clone()).mul(&conj_t(g, t, &e.h1, d));
            let v = conj_t(g, t, &e.h2, d).mul(&RelativeWord::coef(g, t, e.g2.clone()));
            WitnessPair { u, v, status: WitnessStatus::Cited, provenance: "lemma".to_string(), d: Some(d as u8) }
        })
        .collect()
}

/// The pairs `(g₁h₁^{t^d}, h₂^{t^d}g₂)` for `d = 2, 3`; at least one of them
/// generates a free group of rank two.
pub fn lemma_witnesses(f: &Form1, g: Backend, t: Backend) -> Result<Vec<WitnessPair>, ClassifyError> {
    if g.is_cyclic() {
        return Err(ClassifyError::CyclicCoefficients);
    }
    let e = lemma_elements(g, f.a_last(), f.b_first()).expect("noncyclic G has elements outside any cyclic subgroup");
    Ok(lemma_pairs(g, t, &e))
}
