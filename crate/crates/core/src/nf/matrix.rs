//! Exact 2×2 matrix representations.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::free_group::FreeWord;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2<T>(pub [[T; 2]; 2]);

impl<T> Mat2<T>
where
    T: Clone + Zero + One + PartialEq,
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    pub fn identity() -> Self {
        Mat2([[T::one(), T::zero()], [T::zero(), T::one()]])
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let cell = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Mat2([[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]])
    }

    /// Product of generator images along `w`, with `images[k] = (M, M⁻¹)`
    /// for letter `k + 1`.
    pub fn evaluate(w: &FreeWord, images: &[(Self, Self)]) -> Self {
        w.letters().iter().fold(Self::identity(), |acc, &x| {
            let (m, inv) = &images[(x.unsigned_abs() - 1) as usize];
            acc.mul(if x > 0 { m } else { inv })
        })
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rational_images() -> [(Mat2<BigRational>, Mat2<BigRational>); 2] {
    let g = Mat2([[rat(1, 2), rat(0, 1)], [rat(0, 1), rat(1, 1)]]);
    let g_inv = Mat2([[rat(2, 1), rat(0, 1)], [rat(0, 1), rat(1, 1)]]);
    let t = Mat2([[rat(1, 1), rat(1, 1)], [rat(0, 1), rat(1, 1)]]);
    let t_inv = Mat2([[rat(1, 1), rat(-1, 1)], [rat(0, 1), rat(1, 1)]]);
    [(g, g_inv), (t, t_inv)]
}

/// The faithful representation of `⟨g, t | g⁻¹ t g = t²⟩` with `g` as
/// letter 1 and `t` as letter 2.
pub fn bs12_matrix(w: &FreeWord) -> Mat2<BigRational> {
    Mat2::evaluate(w, &rational_images())
}

pub fn bs12_generator(letter: i32) -> Mat2<BigRational> {
    let images = rational_images();
    let (m, inv) = &images[(letter.unsigned_abs() - 1) as usize];
    if letter > 0 {
        m.clone()
    } else {
        inv.clone()
    }
}

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// The Sanov representation of the free group on letters 1, 2.
pub fn sanov_matrix(w: &FreeWord) -> Mat2<BigInt> {
    let a = Mat2([[int(1), int(2)], [int(0), int(1)]]);
    let a_inv = Mat2([[int(1), int(-2)], [int(0), int(1)]]);
    let b = Mat2([[int(1), int(0)], [int(2), int(1)]]);
    let b_inv = Mat2([[int(1), int(0)], [int(-2), int(1)]]);
    Mat2::evaluate(w, &[(a, a_inv), (b, b_inv)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bs12_examples() {
        assert!(bs12_matrix(&FreeWord::new([-1, 2, 1, -2, -2])).is_identity());
        assert_eq!(bs12_matrix(&FreeWord::new([2])).0, [[rat(1, 1), rat(1, 1)], [rat(0, 1), rat(1, 1)]]);
        assert_eq!(bs12_matrix(&FreeWord::new([1, 2, -1])).0, [[rat(1, 1), rat(1, 2)], [rat(0, 1), rat(1, 1)]]);
    }

    #[test]
    fn sanov_commutator_nontrivial() {
        assert!(!sanov_matrix(&FreeWord::new([1, 2, -1, -2])).is_identity());
        assert!(sanov_matrix(&FreeWord::identity()).is_identity());
    }
}
