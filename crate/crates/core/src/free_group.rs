//! Reduced words in a free group.
//!
//! A letter is a nonzero `i32`: `k > 0` is the `k`-th generator and `-k` its
//! inverse. Every `FreeWord` is freely reduced.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    /// Freely reduces `letters`. Zero letters are dropped.
    pub fn new<I: IntoIterator<Item = i32>>(letters: I) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for x in letters {
            push_letter(&mut out, x);
        }
        FreeWord(out)
    }

    pub fn generator(index: usize) -> Self {
        FreeWord(vec![index as i32 + 1])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn mul(&self, other: &FreeWord) -> Self {
        let mut out = self.0.clone();
        for &x in &other.0 {
            push_letter(&mut out, x);
        }
        FreeWord(out)
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `c⁻¹ · self · c`.
    pub fn conjugate_by(&self, c: &FreeWord) -> Self {
        c.inverse().mul(self).mul(c)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.0.len() < 2 || self.0[0] != -self.0[self.0.len() - 1]
    }

    /// Returns `(core, c)` with `self = c⁻¹ · core · c` and `core` cyclically
    /// reduced.
    pub fn cyclic_reduce(&self) -> (FreeWord, FreeWord) {
        let w = &self.0;
        let mut i = 0;
        let mut j = w.len();
        while j >= i + 2 && w[i] == -w[j - 1] {
            i += 1;
            j -= 1;
        }
        let core = FreeWord(w[i..j].to_vec());
        let conj = FreeWord(w[j..].to_vec());
        (core, conj)
    }

    pub fn exponent_sum(&self, generator: usize) -> i64 {
        let g = generator as i32 + 1;
        self.0
            .iter()
            .map(|&x| {
                if x == g {
                    1
                } else if x == -g {
                    -1
                } else {
                    0
                }
            })
            .sum()
    }

    /// Largest generator index used, plus one.
    pub fn support_rank(&self) -> usize {
        self.0.iter().map(|x| x.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// If the word is a power of a single generator, returns that exponent
    /// (with generator index).
    pub fn as_generator_power(&self) -> Option<(usize, i64)> {
        let first = *self.0.first()?;
        if self.0.iter().all(|&x| x == first) {
            Some(((first.unsigned_abs() - 1) as usize, first.signum() as i64 * self.0.len() as i64))
        } else {
            None
        }
    }

    /// Substitutes `images[k]` for the `k`-th generator.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut out: Vec<i32> = Vec::new();
        for &x in &self.0 {
            let img = &images[(x.unsigned_abs() - 1) as usize];
            if x > 0 {
                for &y in &img.0 {
                    push_letter(&mut out, y);
                }
            } else {
                for &y in img.0.iter().rev() {
                    push_letter(&mut out, -y);
                }
            }
        }
        FreeWord(out)
    }

    /// Lexicographically least rotation of the cyclic reduction of the word or
    /// of its inverse. Two words are conjugate up to inversion iff their
    /// canonical cyclic forms agree.
    pub fn canonical_cyclic(&self) -> FreeWord {
        let (core, _) = self.cyclic_reduce();
        let inv = core.inverse();
        let a = least_rotation(&core.0);
        let b = least_rotation(&inv.0);
        FreeWord(a.min(b))
    }

    /// True iff `self` and `other` are conjugate (no inversion allowed).
    pub fn is_conjugate_to(&self, other: &FreeWord) -> bool {
        let (a, _) = self.cyclic_reduce();
        let (b, _) = other.cyclic_reduce();
        least_rotation(&a.0) == least_rotation(&b.0)
    }

    /// Formats with `symbol1 symbol2 …` names, collapsing runs to powers.
    /// When `alias` is given and only one generator exists, it names it.
    pub fn format_with(&self, symbol: &str, alias: Option<&str>) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let x = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == x {
                run += 1;
            }
            let name = match alias {
                Some(a) => a.to_string(),
                None => format!("{}{}", symbol, x.unsigned_abs()),
            };
            let exp = x.signum() as i64 * run as i64;
            parts.push(if exp == 1 { name } else { format!("{name}^{exp}") });
            i += run;
        }
        parts.join(" ")
    }
}

fn push_letter(out: &mut Vec<i32>, x: i32) {
    if x == 0 {
        return;
    }
    if out.last() == Some(&-x) {
        out.pop();
    } else {
        out.push(x);
    }
}

fn least_rotation(w: &[i32]) -> Vec<i32> {
    let n = w.len();
    (0..n.max(1))
        .map(|r| w[r.min(n)..].iter().chain(&w[..r.min(n)]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&self.format_with("x", None))
        }
    }
}
