//! Word invariants used by the classifier: unimodularity, the complexity
//! trichotomy, proper powers, the complexity-one normal form, and the coset
//! form of a word over a free abelian T-part.

pub mod whitehead;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::backend::{Backend, Element};
use crate::free_group::FreeWord;
use crate::linalg::{self, CosetComplement};
use crate::word::{RelativeWord, Syllable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("empty exponent sequence")]
    EmptyExponentSequence,
    #[error("needs a rank-one T-part, found {0}")]
    TPartNotCyclic(String),
    #[error("needs a free abelian T-part, found {0}")]
    TPartNotFreeAbelian(String),
    #[error("word is not cyclically reduced")]
    NotCyclicallyReduced,
    #[error("word has complexity {0}, expected One")]
    WrongComplexity(ComplexityClass),
    #[error("exponent sum is {0}, expected 1")]
    NotUnimodular(i64),
    #[error("word is not unimodular over the T-part")]
    UnimodularityFailure,
    #[error("T-syllables generate a cyclic subgroup")]
    CyclicSyllableSubgroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComplexityClass {
    Zero,
    One,
    Higher,
}

impl fmt::Display for ComplexityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Complexity of a cyclic `±1` sequence, from its maximal cyclic runs: one
/// sign occurring only in runs of length one means that sign is never
/// adjacent to itself.
pub fn complexity_of_signs(signs: &[i8]) -> Result<ComplexityClass, AnalysisError> {
    let n = signs.len();
    if n == 0 {
        return Err(AnalysisError::EmptyExponentSequence);
    }
    let Some(start) = (0..n).find(|&i| signs[i] != signs[(i + n - 1) % n]) else {
        return Ok(ComplexityClass::Zero);
    };
    let (mut longest_pos, mut longest_neg) = (0usize, 0usize);
    let mut i = 0;
    while i < n {
        let sign = signs[(start + i) % n];
        let mut run = 1;
        while i + run < n && signs[(start + i + run) % n] == sign {
            run += 1;
        }
        if sign > 0 {
            longest_pos = longest_pos.max(run);
        } else {
            longest_neg = longest_neg.max(run);
        }
        i += run;
    }
    if longest_pos == 1 || longest_neg == 1 {
        Ok(ComplexityClass::One)
    } else {
        Ok(ComplexityClass::Higher)
    }
}

/// One letter `t^{±1}` of a word over a rank-one T-part, with the coefficient
/// read just before it in the cyclic word (identity inside a longer syllable).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicLetter {
    pub before: Element,
    pub sign: i8,
}

/// Splits every T-syllable of the cyclically reduced `u` into single letters.
pub fn cyclic_letters(u: &RelativeWord) -> Result<Vec<CyclicLetter>, AnalysisError> {
    let (g, t) = (u.coeff(), u.tpart());
    if !t.is_cyclic() {
        return Err(AnalysisError::TPartNotCyclic(t.name()));
    }
    if !u.is_cyclically_reduced() {
        return Err(AnalysisError::NotCyclicallyReduced);
    }
    let (gs, ts) = u.alternating();
    let k = ts.len();
    let mut out = Vec::new();
    for (i, tau) in ts.iter().enumerate() {
        let exp = t.cyclic_exponent(tau).expect("rank-one T-part");
        let before = if i == 0 { g.mul(&gs[k], &gs[0]) } else { gs[i].clone() };
        let sign = exp.signum() as i8;
        out.push(CyclicLetter { before, sign });
        for _ in 1..exp.unsigned_abs() {
            out.push(CyclicLetter { before: g.identity(), sign });
        }
    }
    Ok(out)
}

/// Complexity of the cyclic word underlying `w` (computed on its cyclic
/// reduction, so any conjugate gives the same answer).
pub fn complexity(w: &RelativeWord) -> Result<ComplexityClass, AnalysisError> {
    let (u, _) = w.cyclic_reduce();
    let signs: Vec<i8> = cyclic_letters(&u)?.iter().map(|l| l.sign).collect();
    complexity_of_signs(&signs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnimodularityFlavor {
    Cyclic,
    General,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnimodularityReport {
    pub flavor: UnimodularityFlavor,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exponent_sum: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cond_infinite_order: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cond_normal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cond_quotient_strong_up: Option<bool>,
    pub overall: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

/// Exponent sum of `t` equal to one.
pub fn is_unimodular_cyclic(w: &RelativeWord) -> Result<UnimodularityReport, AnalysisError> {
    if !w.tpart().is_cyclic() {
        return Err(AnalysisError::TPartNotCyclic(w.tpart().name()));
    }
    let sum = w.exponent_sum(0);
    Ok(UnimodularityReport {
        flavor: UnimodularityFlavor::Cyclic,
        exponent_sum: Some(sum),
        cond_infinite_order: None,
        cond_normal: None,
        cond_quotient_strong_up: None,
        overall: sum == 1,
        diagnostic: None,
    })
}

/// The three conditions on `σ = ∏ τᵢ`: infinite order, `⟨σ⟩` normal in `T`,
/// and `T/⟨σ⟩` strong UP.
///
/// For `ℤʳ` the quotient is `ℤ/d ⊕ ℤ^{r-1}` with `d = gcd(σ)`; it is strong
/// UP exactly when torsion-free (orderable), i.e. `d ∈ {0, 1}`.
pub fn is_unimodular_general(w: &RelativeWord) -> UnimodularityReport {
    let t = w.tpart();
    let sigma = w.t_product();
    let (infinite, normal, quotient, diagnostic) = match (&t, &sigma) {
        (Backend::FreeAbelian { .. }, Element::Abelian(v)) => {
            let d = linalg::gcd_all(v);
            (d != 0, true, d <= 1, None)
        }
        (Backend::Free { rank: 1 }, Element::Free(s)) => (!s.is_empty(), true, s.len() <= 1, None),
        (Backend::Free { .. }, Element::Free(s)) => {
            if s.is_empty() {
                (false, true, true, None)
            } else {
                (
                    true,
                    false,
                    false,
                    Some("no nontrivial cyclic subgroup of a free group of rank >= 2 is normal".to_string()),
                )
            }
        }
        _ => unreachable!("element kind matches backend"),
    };
    UnimodularityReport {
        flavor: UnimodularityFlavor::General,
        exponent_sum: None,
        cond_infinite_order: Some(infinite),
        cond_normal: Some(normal),
        cond_quotient_strong_up: Some(quotient),
        overall: infinite && normal && quotient,
        diagnostic,
    }
}

/// If the cyclically reduced `v` equals `u^k` with `k >= 2`, returns the
/// primitive root and the maximal `k`.
///
/// A cyclically reduced power is a literal repetition of its root, so this is
/// the smallest period of the letter string (prefix function).
pub fn is_proper_power(v: &FreeWord) -> Result<Option<(FreeWord, usize)>, AnalysisError> {
    if v.is_empty() || !v.is_cyclically_reduced() {
        return Err(AnalysisError::NotCyclicallyReduced);
    }
    let s = v.letters();
    let n = s.len();
    let mut pi = vec![0usize; n];
    for i in 1..n {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
    let period = n - pi[n - 1];
    if period < n && n.is_multiple_of(period) {
        Ok(Some((FreeWord::new(s[..period].iter().copied()), n / period)))
    } else {
        Ok(None)
    }
}

/// The complexity-one shape `c · t · ∏ᵢ (bᵢ · aᵢᵗ)`, `aᵢᵗ = t⁻¹aᵢt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form1 {
    pub c: Element,
    /// `(bᵢ, aᵢ)` for `i = 0..=m`.
    pub pairs: Vec<(Element, Element)>,
}

impl Form1 {
    pub fn m(&self) -> usize {
        self.pairs.len() - 1
    }

    pub fn a_last(&self) -> &Element {
        &self.pairs.last().expect("m >= 0").1
    }

    pub fn b_first(&self) -> &Element {
        &self.pairs[0].0
    }

    pub fn rebuild(&self, coeff: Backend, tpart: Backend) -> RelativeWord {
        let t = tpart.generator(0).expect("rank one");
        let t_inv = tpart.inverse(&t);
        let mut parts = vec![Syllable::Coef(self.c.clone()), Syllable::T(t.clone())];
        for (b, a) in &self.pairs {
            parts.push(Syllable::Coef(b.clone()));
            parts.push(Syllable::T(t_inv.clone()));
            parts.push(Syllable::Coef(a.clone()));
            parts.push(Syllable::T(t.clone()));
        }
        RelativeWord::from_syllables(coeff, tpart, parts)
    }

    pub fn describe(&self, coeff: Backend) -> String {
        let fmt = |e: &Element| {
            let s = coeff.format_element(e, "g", "g");
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        };
        let pairs: Vec<String> = self.pairs.iter().map(|(b, a)| format!("(b={}, a={})", fmt(b), fmt(a))).collect();
        format!("c={}; m={}; {}", fmt(&self.c), self.m(), pairs.join(" "))
    }
}

/// Rewrites a unimodular complexity-one word over a rank-one T-part into
/// form one, up to cyclic permutation.
///
/// Unimodularity forces one more positive than negative letter; with
/// negatives never adjacent, exactly one `++` occurs cyclically and the
/// reading starts at its second letter.
pub fn to_form1(w: &RelativeWord) -> Result<Form1, AnalysisError> {
    let t = w.tpart();
    if !t.is_cyclic() {
        return Err(AnalysisError::TPartNotCyclic(t.name()));
    }
    let sum = w.exponent_sum(0);
    if sum != 1 {
        return Err(AnalysisError::NotUnimodular(sum));
    }
    let (u, _) = w.cyclic_reduce();
    let letters = cyclic_letters(&u)?;
    let signs: Vec<i8> = letters.iter().map(|l| l.sign).collect();
    let class = complexity_of_signs(&signs)?;
    if class != ComplexityClass::One {
        return Err(AnalysisError::WrongComplexity(class));
    }
    let n = letters.len();
    let j = (0..n)
        .find(|&j| letters[(j + n - 1) % n].sign > 0 && letters[j].sign > 0)
        .expect("unimodular complexity-one word has a ++ adjacency");
    let c = letters[j].before.clone();
    let mut pairs = Vec::new();
    let mut i = 1;
    while i < n {
        let neg = &letters[(j + i) % n];
        let pos = &letters[(j + i + 1) % n];
        debug_assert!(neg.sign < 0 && pos.sign > 0);
        pairs.push((neg.before.clone(), pos.before.clone()));
        i += 2;
    }
    Ok(Form1 { c, pairs })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetEntry {
    pub coefficient: Element,
    /// `pᵢ₋₁`, the product of the T-syllables before this coefficient.
    pub prefix: Vec<i64>,
    pub label: Vec<i64>,
    /// `c_x`, the coset representative of the prefix.
    pub rep: Vec<i64>,
    /// `prefix = rep + k·t`.
    pub k: i64,
}

/// `w = (∏ᵢ pᵢ gᵢ pᵢ⁻¹) · t` with every prefix split as `c_x · t^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetForm {
    pub t: Vec<i64>,
    pub entries: Vec<CosetEntry>,
    pub x1: BTreeSet<Vec<i64>>,
    pub complement: CosetComplement,
}

impl CosetForm {
    pub fn reassemble(&self, coeff: Backend, tpart: Backend) -> RelativeWord {
        let mut out = RelativeWord::identity(coeff, tpart);
        for e in &self.entries {
            let p = Element::Abelian(e.prefix.clone());
            out = out.mul(&RelativeWord::from_syllables(
                coeff,
                tpart,
                [Syllable::T(p.clone()), Syllable::Coef(e.coefficient.clone()), Syllable::T(tpart.inverse(&p))],
            ));
        }
        out.mul(&RelativeWord::tsyl(coeff, tpart, Element::Abelian(self.t.clone())))
    }

    pub fn describe(&self, coeff: Backend) -> String {
        let entries: Vec<String> = self
            .entries
            .iter()
            .map(|e| {
                format!(
                    "{} @ label {:?} (rep {:?}, k {})",
                    coeff.format_element(&e.coefficient, "g", "g"),
                    e.label,
                    e.rep,
                    e.k
                )
            })
            .collect();
        format!("t={:?}; {}", self.t, entries.join("; "))
    }
}

/// Coset rewriting over `T = ℤʳ`.
///
/// Words with two or more T-syllables must have those syllables generate a
/// noncyclic subgroup; a single syllable is accepted and gives `|X₁| = 1`.
/// On a cyclically reduced word with noncyclic syllables, `|X₁| >= 2`.
pub fn coset_rewrite(w: &RelativeWord) -> Result<CosetForm, AnalysisError> {
    let t = w.tpart();
    if !matches!(t, Backend::FreeAbelian { .. }) {
        return Err(AnalysisError::TPartNotFreeAbelian(t.name()));
    }
    if !is_unimodular_general(w).overall {
        return Err(AnalysisError::UnimodularityFailure);
    }
    let sigma = match w.t_product() {
        Element::Abelian(v) => v,
        Element::Free(_) => unreachable!(),
    };
    let vectors: Vec<Vec<i64>> = w
        .t_syllables()
        .into_iter()
        .map(|e| match e {
            Element::Abelian(v) => v.clone(),
            Element::Free(_) => unreachable!(),
        })
        .collect();
    if vectors.len() >= 2 && linalg::rank(&vectors) <= 1 {
        return Err(AnalysisError::CyclicSyllableSubgroup);
    }
    let complement = CosetComplement::new(&sigma).expect("unimodular sigma is primitive");
    let mut prefix = vec![0i64; t.rank()];
    let mut entries = Vec::new();
    for s in w.syllables() {
        match s {
            Syllable::Coef(g) => {
                let (k, label) = complement.split(&prefix);
                entries.push(CosetEntry {
                    coefficient: g.clone(),
                    prefix: prefix.clone(),
                    rep: complement.rep(&prefix),
                    label,
                    k,
                });
            }
            Syllable::T(Element::Abelian(v)) => {
                for (p, x) in prefix.iter_mut().zip(v) {
                    *p += x;
                }
            }
            Syllable::T(_) => unreachable!(),
        }
    }
    let x1 = entries.iter().map(|e| e.label.clone()).collect();
    Ok(CosetForm { t: sigma, entries, x1, complement })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Backend {
        Backend::cyclic()
    }
    fn f1() -> Backend {
        Backend::free(1).unwrap()
    }
    fn z2() -> Backend {
        Backend::free_abelian(2).unwrap()
    }
    fn p(text: &str, g: Backend, t: Backend) -> RelativeWord {
        RelativeWord::parse(text, g, t).unwrap()
    }

    #[test]
    fn complexity_examples() {
        use ComplexityClass::*;
        assert_eq!(complexity_of_signs(&[1, 1, 1]), Ok(Zero));
        assert_eq!(complexity_of_signs(&[1, -1, 1]), Ok(One));
        assert_eq!(complexity_of_signs(&[1, 1, -1, -1]), Ok(Higher));
        assert_eq!(complexity_of_signs(&[]), Err(AnalysisError::EmptyExponentSequence));
        assert_eq!(complexity(&p("g t g t g t^-1 g t^-1 g t", z(), f1())), Ok(Higher));
        assert_eq!(complexity(&p("g1 t g2", z2(), f1())), Ok(Zero));
        assert_eq!(complexity(&p("t^2 g^-1 t^-1 g", z(), f1())), Ok(One));
    }

    #[test]
    fn unimodular_cyclic_examples() {
        assert!(is_unimodular_cyclic(&p("g1 t g2", z2(), f1())).unwrap().overall);
        assert!(is_unimodular_cyclic(&p("t t g^-1 t^-1 g", z(), f1())).unwrap().overall);
        assert!(!is_unimodular_cyclic(&p("g t g t", z(), f1())).unwrap().overall);
    }

    #[test]
    fn unimodular_general_examples() {
        let r = is_unimodular_general(&p("g x1", z(), z2()));
        assert_eq!(
            (r.cond_infinite_order, r.cond_normal, r.cond_quotient_strong_up, r.overall),
            (Some(true), Some(true), Some(true), true)
        );
        let r = is_unimodular_general(&p("g x1^2", z(), z2()));
        assert_eq!(r.cond_quotient_strong_up, Some(false));
        assert!(!r.overall);
        let r = is_unimodular_general(&p("g x1 g x1^-1", z(), z2()));
        assert_eq!(r.cond_infinite_order, Some(false));
        assert!(!r.overall);
        let r = is_unimodular_general(&p("g x1 g x2", z(), Backend::free(2).unwrap()));
        assert_eq!(r.cond_normal, Some(false));
        assert!(r.diagnostic.is_some());
    }

    #[test]
    fn proper_power_examples() {
        assert_eq!(is_proper_power(&FreeWord::new([1, 2, 1, 2])).unwrap(), Some((FreeWord::new([1, 2]), 2)));
        assert_eq!(is_proper_power(&FreeWord::new([1])).unwrap(), None);
        assert_eq!(is_proper_power(&FreeWord::new([1, 2, 1, 2, 1, 2])).unwrap(), Some((FreeWord::new([1, 2]), 3)));
        assert!(is_proper_power(&FreeWord::new([1, 2, -1])).is_err());
        assert!(is_proper_power(&FreeWord::identity()).is_err());
    }

    #[test]
    fn form1_examples() {
        let f = to_form1(&p("t g t^-1 g^3 t", z(), f1())).unwrap();
        assert_eq!(f.c, Element::Abelian(vec![0]));
        assert_eq!(f.pairs, vec![(Element::Abelian(vec![1]), Element::Abelian(vec![3]))]);
        assert_eq!(f.m(), 0);

        let w = p("t t g^-1 t^-1 g", z(), f1());
        let f = to_form1(&w).unwrap();
        assert_eq!(f.c, Element::Abelian(vec![0]));
        assert_eq!(f.pairs, vec![(Element::Abelian(vec![-1]), Element::Abelian(vec![1]))]);
        assert!(f.rebuild(z(), f1()).is_conjugate_to(&w));

        assert_eq!(to_form1(&p("g1 t g2", z2(), f1())), Err(AnalysisError::WrongComplexity(ComplexityClass::Zero)));
        assert_eq!(to_form1(&p("g t g t", z(), f1())), Err(AnalysisError::NotUnimodular(2)));
    }

    #[test]
    fn form1_longer() {
        let w = p("g^5 t g t^-1 g^2 t g^3 t^-1 g^4 t", z(), f1());
        let f = to_form1(&w).unwrap();
        assert_eq!(f.m(), 1);
        assert!(f.rebuild(z(), f1()).is_conjugate_to(&w));
    }

    #[test]
    fn coset_examples() {
        let w = p("g x1 g x2", z(), z2());
        let cf = coset_rewrite(&w).unwrap();
        assert_eq!(cf.t, vec![1, 1]);
        let labels: Vec<_> = cf.entries.iter().map(|e| e.label.clone()).collect();
        assert_eq!(labels, vec![vec![0], vec![1]]);
        assert_eq!(cf.x1.len(), 2);
        assert_eq!(cf.reassemble(z(), z2()), w);

        let cf = coset_rewrite(&p("g x1", z(), z2())).unwrap();
        assert_eq!(cf.x1.len(), 1);

        assert_eq!(coset_rewrite(&p("g x1 g x1^2 g x1^-2", z(), z2())), Err(AnalysisError::CyclicSyllableSubgroup));
        assert_eq!(coset_rewrite(&p("g x1^2", z(), z2())), Err(AnalysisError::UnimodularityFailure));
    }
}
