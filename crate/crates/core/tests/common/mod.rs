#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use relfree::{Backend, Element, FreeWord, RelativeWord, Syllable};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonidentity element given by a random word of 1..=`max_len` letters.
pub fn random_element(b: Backend, rng: &mut ChaCha8Rng, max_len: usize) -> Element {
    loop {
        let n = rng.gen_range(1..=max_len);
        let tokens: Vec<(usize, i64)> =
            (0..n).map(|_| (rng.gen_range(0..b.rank()), if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
        let e = b.evaluate(&tokens).unwrap();
        if !b.is_identity(&e) {
            return e;
        }
    }
}

/// Alternating word with `syllables` nonidentity syllables, starting on a
/// random side.
pub fn random_relative_word(g: Backend, t: Backend, rng: &mut ChaCha8Rng, syllables: usize) -> RelativeWord {
    let mut coef = rng.gen_bool(0.5);
    let mut parts = Vec::new();
    for _ in 0..syllables {
        parts.push(if coef {
            Syllable::Coef(random_element(g, rng, 3))
        } else {
            Syllable::T(random_element(t, rng, 2))
        });
        coef = !coef;
    }
    RelativeWord::from_syllables(g, t, parts)
}

pub fn random_free_word(rng: &mut ChaCha8Rng, rank: i32, len: usize) -> FreeWord {
    FreeWord::new((0..len).map(|_| {
        let x = rng.gen_range(1..=rank);
        if rng.gen_bool(0.5) {
            x
        } else {
            -x
        }
    }))
}

/// Visits every nonempty freely reduced word over `±1, ±2` of length at most
/// `max_len`, threading a state updated letter by letter.
pub fn for_each_reduced_word<S, F, V>(max_len: usize, init: S, step: &F, visit: &mut V)
where
    F: Fn(&S, i32) -> S,
    V: FnMut(&[i32], &S),
{
    fn rec<S, F: Fn(&S, i32) -> S, V: FnMut(&[i32], &S)>(
        path: &mut Vec<i32>,
        state: &S,
        max_len: usize,
        step: &F,
        visit: &mut V,
    ) {
        if path.len() == max_len {
            return;
        }
        for x in [1, -1, 2, -2] {
            if path.last() == Some(&-x) {
                continue;
            }
            let next = step(state, x);
            path.push(x);
            visit(path, &next);
            rec(path, &next, max_len, step, visit);
            path.pop();
        }
    }
    rec(&mut Vec::new(), &init, max_len, step, visit);
}
