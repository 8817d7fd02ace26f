//! Britton reduction in `⟨a, s | s⁻¹ a s = a^m⟩` with infinite cyclic base.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::free_group::FreeWord;

/// `a^{base[0]} s^{stable[0]} a^{base[1]} … s^{stable[k-1]} a^{base[k]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HnnWord {
    pub base: Vec<BigInt>,
    pub stable: Vec<i8>,
}

impl HnnWord {
    pub fn identity() -> Self {
        HnnWord { base: vec![BigInt::zero()], stable: Vec::new() }
    }

    /// Reads a word in which letter `stable_letter` is `s` and
    /// `base_letter` is `a`.
    pub fn from_free_word(w: &FreeWord, stable_letter: i32, base_letter: i32) -> Self {
        let mut h = HnnWord::identity();
        for &x in w.letters() {
            if x.abs() == stable_letter {
                h.stable.push(x.signum() as i8);
                h.base.push(BigInt::zero());
            } else {
                debug_assert_eq!(x.abs(), base_letter);
                *h.base.last_mut().expect("nonempty") += x.signum();
            }
        }
        h
    }

    pub fn is_identity(&self) -> bool {
        self.stable.is_empty() && self.base[0].is_zero()
    }

    /// Number of stable letters.
    pub fn stable_len(&self) -> usize {
        self.stable.len()
    }

    /// True if no `s⁻¹ a^j s` and no `s a^{jm} s⁻¹` subword remains.
    pub fn is_pinch_free(&self, m: i64) -> bool {
        (1..self.stable.len()).all(|i| {
            let (e, f) = (self.stable[i - 1], self.stable[i]);
            !(e == -1 && f == 1 || e == 1 && f == -1 && (&self.base[i] % m).is_zero())
        })
    }
}

/// Removes every pinch with a single left-to-right stack pass.
pub fn britton_reduce(h: &HnnWord, m: i64) -> HnnWord {
    assert!(m != 0, "associated map a ↦ a^m needs m ≠ 0");
    let mut out = HnnWord { base: vec![h.base[0].clone()], stable: Vec::new() };
    for (i, &e) in h.stable.iter().enumerate() {
        let next = &h.base[i + 1];
        let pinch = match out.stable.last() {
            Some(&-1) if e == 1 => Some(out.base.last().expect("nonempty") * m),
            Some(&1) if e == -1 => {
                let j = out.base.last().expect("nonempty");
                (j % m).is_zero().then(|| j / m)
            }
            _ => None,
        };
        match pinch {
            Some(value) => {
                out.stable.pop();
                out.base.pop();
                *out.base.last_mut().expect("nonempty") += value + next;
            }
            None => {
                out.stable.push(e);
                out.base.push(next.clone());
            }
        }
    }
    out
}

/// Words over `g` (letter 1) and `t` (letter 2) in `⟨g, t | g⁻¹ t g = t²⟩`:
/// the HNN extension of `⟨t⟩` with stable letter `g`.
pub fn bs12_is_identity(w: &FreeWord) -> bool {
    britton_reduce(&HnnWord::from_free_word(w, 1, 2), 2).is_identity()
}

/// Absolute value of the largest base exponent, for diagnostics.
pub fn max_base_exponent(h: &HnnWord) -> BigInt {
    h.base.iter().map(|b| b.abs()).max().unwrap_or_default()
}
