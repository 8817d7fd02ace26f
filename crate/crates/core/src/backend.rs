//! Concrete torsion-free groups with solvable word problem.
//!
//! Exactly two kinds exist: free abelian groups `ℤʳ` (the infinite cyclic
//! group is `ℤ¹`) and free groups `F_r`, both with `r >= 1`. Each is
//! torsion-free and locally indicable, so the strong unique-product property
//! holds by construction.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::free_group::FreeWord;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BackendError {
    #[error("groups of rank 0 are not allowed")]
    ZeroRank,
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("exponent overflow")]
    Overflow,
    #[error("the cyclic index of the identity subgroup is undefined")]
    IdentitySubgroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Backend {
    FreeAbelian { rank: usize },
    Free { rank: usize },
}

/// An element of a backend group in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Element {
    Abelian(Vec<i64>),
    Free(FreeWord),
}

/// Index of a subgroup: a positive integer or infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Index {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(n) => write!(f, "{n}"),
            Index::Infinite => f.write_str("∞"),
        }
    }
}

/// Exponent bound for expanding powers into free-group letters.
const MAX_FREE_EXPONENT: i64 = 1 << 20;

impl Backend {
    /// `ℤ`, stored as free abelian of rank one.
    pub fn cyclic() -> Self {
        Backend::FreeAbelian { rank: 1 }
    }

    pub fn free_abelian(rank: usize) -> Result<Self, BackendError> {
        if rank == 0 {
            return Err(BackendError::ZeroRank);
        }
        Ok(Backend::FreeAbelian { rank })
    }

    pub fn free(rank: usize) -> Result<Self, BackendError> {
        if rank == 0 {
            return Err(BackendError::ZeroRank);
        }
        Ok(Backend::Free { rank })
    }

    pub fn rank(&self) -> usize {
        match *self {
            Backend::FreeAbelian { rank } | Backend::Free { rank } => rank,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank() == 1
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self, Backend::FreeAbelian { .. }) || self.is_cyclic()
    }

    /// Never true: rank zero is rejected at construction.
    pub fn is_trivial(&self) -> bool {
        false
    }

    pub fn has_free_subgroup(&self) -> bool {
        matches!(self, Backend::Free { rank } if *rank >= 2)
    }

    pub fn strong_up(&self) -> bool {
        true
    }

    /// Short name such as `Z`, `Z^2` or `F_2`.
    pub fn name(&self) -> String {
        match *self {
            Backend::FreeAbelian { rank: 1 } => "Z".to_string(),
            Backend::FreeAbelian { rank } => format!("Z^{rank}"),
            Backend::Free { rank } => format!("F_{rank}"),
        }
    }

    pub fn identity(&self) -> Element {
        match *self {
            Backend::FreeAbelian { rank } => Element::Abelian(vec![0; rank]),
            Backend::Free { .. } => Element::Free(FreeWord::identity()),
        }
    }

    pub fn generator(&self, index: usize) -> Result<Element, BackendError> {
        self.check_index(index)?;
        Ok(match *self {
            Backend::FreeAbelian { rank } => {
                let mut v = vec![0; rank];
                v[index] = 1;
                Element::Abelian(v)
            }
            Backend::Free { .. } => Element::Free(FreeWord::generator(index)),
        })
    }

    pub fn generators(&self) -> Vec<Element> {
        (0..self.rank()).map(|i| self.generator(i).expect("index in range")).collect()
    }

    fn check_index(&self, index: usize) -> Result<(), BackendError> {
        if index >= self.rank() {
            Err(BackendError::IndexOutOfRange { index, rank: self.rank() })
        } else {
            Ok(())
        }
    }

    pub fn is_identity(&self, e: &Element) -> bool {
        match e {
            Element::Abelian(v) => v.iter().all(|&x| x == 0),
            Element::Free(w) => w.is_empty(),
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match (a, b) {
            (Element::Abelian(x), Element::Abelian(y)) => {
                Element::Abelian(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            (Element::Free(x), Element::Free(y)) => Element::Free(x.mul(y)),
            _ => panic!("mixed element kinds in {}", self.name()),
        }
    }

    pub fn inverse(&self, a: &Element) -> Element {
        match a {
            Element::Abelian(x) => Element::Abelian(x.iter().map(|p| -p).collect()),
            Element::Free(w) => Element::Free(w.inverse()),
        }
    }

    pub fn pow(&self, a: &Element, k: i64) -> Element {
        match a {
            Element::Abelian(x) => Element::Abelian(x.iter().map(|p| p * k).collect()),
            Element::Free(w) => Element::Free(w.pow(k)),
        }
    }

    /// Product of generator powers `(index, exponent)`, in order.
    pub fn evaluate(&self, tokens: &[(usize, i64)]) -> Result<Element, BackendError> {
        match *self {
            Backend::FreeAbelian { rank } => {
                let mut v = vec![0i64; rank];
                for &(i, e) in tokens {
                    self.check_index(i)?;
                    v[i] = v[i].checked_add(e).ok_or(BackendError::Overflow)?;
                }
                Ok(Element::Abelian(v))
            }
            Backend::Free { .. } => {
                let mut letters = Vec::new();
                for &(i, e) in tokens {
                    self.check_index(i)?;
                    if e.abs() > MAX_FREE_EXPONENT {
                        return Err(BackendError::Overflow);
                    }
                    let letter = if e > 0 { i as i32 + 1 } else { -(i as i32 + 1) };
                    letters.extend(std::iter::repeat_n(letter, e.unsigned_abs() as usize));
                }
                Ok(Element::Free(FreeWord::new(letters)))
            }
        }
    }

    /// Returns `k` with `g = a^k`, if `g ∈ ⟨a⟩`. The answer is unique because
    /// every backend is torsion-free; for `a = 1` only `g = 1` succeeds.
    pub fn cyclic_membership(&self, g: &Element, a: &Element) -> Option<i64> {
        if self.is_identity(g) {
            return Some(0);
        }
        if self.is_identity(a) {
            return None;
        }
        match (g, a) {
            (Element::Abelian(gv), Element::Abelian(av)) => {
                let i = av.iter().position(|&x| x != 0)?;
                if gv[i] % av[i] != 0 {
                    return None;
                }
                let k = gv[i] / av[i];
                gv.iter().zip(av).all(|(p, q)| *p == k * q).then_some(k)
            }
            (Element::Free(gw), Element::Free(aw)) => {
                // conjugate so that a is cyclically reduced; then powers of a
                // are literal repetitions
                let (core, c) = aw.cyclic_reduce();
                let h = c.mul(gw).mul(&c.inverse());
                if h.len() % core.len() != 0 {
                    return None;
                }
                let k = (h.len() / core.len()) as i64;
                if core.pow(k) == h {
                    Some(k)
                } else if core.pow(-k) == h {
                    Some(-k)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// `|G : ⟨a⟩|`.
    pub fn cyclic_index(&self, a: &Element) -> Result<Index, BackendError> {
        if self.is_identity(a) {
            return Err(BackendError::IdentitySubgroup);
        }
        if self.rank() > 1 {
            return Ok(Index::Infinite);
        }
        let k = self.cyclic_exponent(a).expect("rank-one element");
        Ok(Index::Finite(k.unsigned_abs()))
    }

    /// For rank-one backends, the integer `k` with `a = generator^k`.
    pub fn cyclic_exponent(&self, a: &Element) -> Option<i64> {
        if self.rank() != 1 {
            return None;
        }
        match a {
            Element::Abelian(v) => Some(v[0]),
            Element::Free(w) if w.is_empty() => Some(0),
            Element::Free(w) => w.as_generator_power().map(|(_, k)| k),
        }
    }

    /// Exponent sums of every generator; the image in the abelianization.
    pub fn abelianize(&self, a: &Element) -> Vec<i64> {
        match a {
            Element::Abelian(v) => v.clone(),
            Element::Free(w) => (0..self.rank()).map(|i| w.exponent_sum(i)).collect(),
        }
    }

    /// True iff `⟨a⟩ ∩ ⟨c⟩ = 1`, for `a` nontrivial.
    pub fn meets_trivially(&self, a: &Element, c: &Element) -> bool {
        if self.is_identity(c) {
            return true;
        }
        match (a, c) {
            (Element::Abelian(x), Element::Abelian(y)) => {
                // independent iff some 2x2 minor is nonzero
                (0..x.len()).any(|i| (i + 1..x.len()).any(|j| x[i] * y[j] - x[j] * y[i] != 0))
            }
            (Element::Free(_), Element::Free(cw)) => {
                // a^n = c^m forces a common root, and then n ≤ |c|
                let bound = cw.len().max(1) as i64;
                (1..=bound).all(|n| self.cyclic_membership(&self.pow(a, n), c).is_none())
            }
            _ => false,
        }
    }

    /// Formats `e` as generator tokens: `symbol1^k …`, or the bare alias for
    /// rank one.
    pub fn format_element(&self, e: &Element, symbol: &str, alias: &str) -> String {
        let single = self.rank() == 1;
        let name = |i: usize| if single { alias.to_string() } else { format!("{symbol}{}", i + 1) };
        match e {
            Element::Abelian(v) => v
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| if k == 1 { name(i) } else { format!("{}^{k}", name(i)) })
                .collect::<Vec<_>>()
                .join(" "),
            Element::Free(w) => w.format_with(symbol, single.then_some(alias)),
        }
    }

    /// Elements in shortlex order of their defining words over
    /// `gen1, gen1⁻¹, gen2, gen2⁻¹, …`, without repeats or the identity.
    pub fn shortlex_elements(&self, max_len: usize) -> Vec<Element> {
        let letters: Vec<(usize, i64)> = (0..self.rank()).flat_map(|i| [(i, 1), (i, -1)]).collect();
        let mut out: Vec<Element> = Vec::new();
        let mut frontier: Vec<Vec<(usize, i64)>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for word in &frontier {
                for &l in &letters {
                    let mut w = word.clone();
                    w.push(l);
                    let e = self.evaluate(&w).expect("in range");
                    if !self.is_identity(&e) && !out.contains(&e) {
                        out.push(e);
                    }
                    next.push(w);
                }
            }
            frontier = next;
        }
        out
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
