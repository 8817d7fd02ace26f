//! Recognizing one-relator presentations of `⟨a, b | a⁻¹ b a = b²⟩`.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use crate::analysis::whitehead::{whitehead_minimize, Automorphism, WhiteheadMinimum};
use crate::free_group::FreeWord;
use crate::linalg;

/// `a⁻¹ b a b⁻²`.
pub fn reference_relator() -> FreeWord {
    FreeWord::new([-1, 2, 1, -2, -2])
}

fn reference_minimum() -> &'static WhiteheadMinimum {
    static MIN: OnceLock<WhiteheadMinimum> = OnceLock::new();
    MIN.get_or_init(|| whitehead_minimize(&reference_relator()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bs12Recognition {
    /// `to_reference` maps the relator to a conjugate of the reference
    /// relator or its inverse, so it induces an isomorphism.
    Yes {
        to_reference: Automorphism,
    },
    /// The abelianization differs from `ℤ`.
    No {
        divisors: Vec<i64>,
    },
    Unknown,
}

/// Divisor chain of the abelianization of `⟨a, b | r⟩`.
pub fn relator_divisors(r: &FreeWord) -> Vec<i64> {
    linalg::abelianization_divisors(&[vec![r.exponent_sum(0), r.exponent_sum(1)]], 2)
}

/// Sound but incomplete: `Yes` only when the relators lie in one
/// `Aut(F₂)`-orbit up to inversion and conjugacy, `No` only on an
/// abelianization mismatch.
pub fn recognize_bs12(r: &FreeWord) -> Bs12Recognition {
    let divisors = relator_divisors(r);
    if divisors != [1, 0] {
        return Bs12Recognition::No { divisors };
    }
    let reference = reference_minimum();
    let mine = whitehead_minimize(r);
    if mine.length != reference.length {
        return Bs12Recognition::Unknown;
    }
    let target = reference.canonical.first().expect("nonempty orbit");
    match mine.reach.get(target) {
        Some(phi) => Bs12Recognition::Yes { to_reference: phi.clone() },
        None => Bs12Recognition::Unknown,
    }
}

type Perm = Vec<u8>;

fn compose(p: &Perm, q: &Perm) -> Perm {
    // apply p, then q
    p.iter().map(|&i| q[i as usize]).collect()
}

fn invert(p: &Perm) -> Perm {
    let mut out = vec![0u8; p.len()];
    for (i, &x) in p.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Perm, n: usize, out: &mut Vec<Perm>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..n as u8 {
            if !prefix.contains(&x) {
                prefix.push(x);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

fn closure(gens: &[Perm], n: usize) -> BTreeSet<Perm> {
    let id: Perm = (0..n as u8).collect();
    let mut set = BTreeSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(&x, g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

fn derived(group: &BTreeSet<Perm>, n: usize) -> BTreeSet<Perm> {
    let elems: Vec<&Perm> = group.iter().collect();
    let mut comms: BTreeSet<Perm> = BTreeSet::new();
    for x in &elems {
        for y in &elems {
            let c = compose(&compose(&compose(&invert(x), &invert(y)), x), y);
            comms.insert(c);
        }
    }
    closure(&comms.into_iter().collect::<Vec<_>>(), n)
}

fn evaluate(r: &FreeWord, x: &Perm, y: &Perm, n: usize) -> Perm {
    let gens = [x.clone(), invert(x), y.clone(), invert(y)];
    r.letters().iter().fold((0..n as u8).collect(), |acc, &l| {
        let slot = match l {
            1 => 0,
            -1 => 1,
            2 => 2,
            _ => 3,
        };
        compose(&acc, &gens[slot])
    })
}

/// A homomorphism of `⟨a, b | r⟩` onto a permutation group on at most five
/// points whose second derived subgroup is nontrivial. Metabelian groups
/// have no such quotient, so finding one rules out `⟨a, b | a⁻¹ b a = b²⟩`.
///
/// Returns the degree and the images of `a` and `b`.
pub fn nonmetabelian_quotient(r: &FreeWord) -> Option<(usize, Perm, Perm)> {
    for n in [4usize, 5] {
        let perms = all_perms(n);
        let id: Perm = (0..n as u8).collect();
        let mut seen: HashMap<BTreeSet<Perm>, bool> = HashMap::new();
        for x in &perms {
            for y in &perms {
                if evaluate(r, x, y, n) != id {
                    continue;
                }
                let group = closure(&[x.clone(), y.clone()], n);
                let bad = *seen.entry(group).or_insert_with_key(|g| derived(&derived(g, n), n).len() > 1);
                if bad {
                    return Some((n, x.clone(), y.clone()));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_is_recognized() {
        assert!(matches!(recognize_bs12(&reference_relator()), Bs12Recognition::Yes { .. }));
        assert!(nonmetabelian_quotient(&reference_relator()).is_none());
    }

    #[test]
    fn abelianization_mismatch() {
        // a⁻¹ b⁻¹ a b³ has exponent sums (0, 2)
        let r = FreeWord::new([-1, -2, 1, 2, 2, 2]);
        assert_eq!(recognize_bs12(&r), Bs12Recognition::No { divisors: vec![2, 0] });
    }

    #[test]
    fn commutator_times_b_is_bs12() {
        // a⁻¹ b⁻¹ a b · b says a⁻¹ b a = b², the same group
        let r = FreeWord::new([-1, -2, 1, 2, 2]);
        match recognize_bs12(&r) {
            Bs12Recognition::Yes { to_reference } => {
                assert_eq!(to_reference.apply(&r).canonical_cyclic(), reference_relator().canonical_cyclic());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn nonmetabelian_witness() {
        // b a b⁻¹ a b: abelianization ℤ but a quotient in S₄ that is not metabelian
        let r = FreeWord::new([2, 1, -2, 1, 2]);
        assert_eq!(relator_divisors(&r), vec![1, 0]);
        let (n, x, y) = nonmetabelian_quotient(&r).expect("quotient");
        assert_eq!(evaluate(&r, &x, &y, n), (0..n as u8).collect::<Vec<_>>());
    }
}
