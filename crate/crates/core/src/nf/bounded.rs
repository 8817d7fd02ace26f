//! Bounded search for relations between two elements of a computable group.

use std::fmt;

/// A group with decidable identity.
pub trait GroupModel {
    type Elem: Clone;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inverse(&self, x: &Self::Elem) -> Self::Elem;
    fn is_identity(&self, x: &Self::Elem) -> bool;
}

/// A word in `u^{±1}, v^{±1}`: letters `1 = u`, `-1 = u⁻¹`, `2 = v`,
/// `-2 = v⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairWord(pub Vec<i8>);

/// Enumeration order of letters; words are compared length-first, then
/// lexicographically in this order.
pub const LETTER_ORDER: [i8; 4] = [1, -1, 2, -2];

impl PairWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn evaluate<M: GroupModel>(&self, model: &M, u: &M::Elem, v: &M::Elem) -> M::Elem {
        let gens = [u.clone(), model.inverse(u), v.clone(), model.inverse(v)];
        self.0.iter().fold(model.identity(), |acc, &x| model.mul(&acc, &gens[letter_slot(x)]))
    }
}

fn letter_slot(x: i8) -> usize {
    LETTER_ORDER.iter().position(|&l| l == x).expect("valid letter")
}

impl fmt::Display for PairWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let x = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == x {
                run += 1;
            }
            let name = if x.abs() == 1 { "u" } else { "v" };
            let exp = x.signum() as i64 * run as i64;
            parts.push(if exp == 1 { name.to_string() } else { format!("{name}^{exp}") });
            i += run;
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass { depth: usize },
    Counterexample(PairWord),
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass { .. })
    }
}

/// Checks every nonempty freely reduced word of length at most `depth` over
/// `u^{±1}, v^{±1}`. Returns the length-lex least word evaluating to the
/// identity, re-evaluated from scratch before being reported.
pub fn bounded_no_relation_check<M: GroupModel>(model: &M, u: &M::Elem, v: &M::Elem, depth: usize) -> CheckOutcome {
    let gens = [u.clone(), model.inverse(u), v.clone(), model.inverse(v)];
    let mut best: Option<Vec<i8>> = None;
    let mut path = Vec::with_capacity(depth);
    let mut values = vec![model.identity()];
    search(model, &gens, depth, &mut path, &mut values, &mut best);
    match best {
        None => CheckOutcome::Pass { depth },
        Some(letters) => {
            let word = PairWord(letters);
            assert!(model.is_identity(&word.evaluate(model, u, v)), "counterexample failed re-verification");
            CheckOutcome::Counterexample(word)
        }
    }
}

// Preorder DFS in letter order visits same-length words lexicographically, so
// the first hit at each length is the least one; longer branches are pruned.
fn search<M: GroupModel>(
    model: &M,
    gens: &[M::Elem; 4],
    depth: usize,
    path: &mut Vec<i8>,
    values: &mut Vec<M::Elem>,
    best: &mut Option<Vec<i8>>,
) {
    let limit = best.as_ref().map_or(depth, |b| b.len() - 1);
    if path.len() >= limit {
        return;
    }
    for (slot, &x) in LETTER_ORDER.iter().enumerate() {
        if path.last() == Some(&-x) {
            continue;
        }
        let value = model.mul(values.last().expect("nonempty"), &gens[slot]);
        path.push(x);
        if model.is_identity(&value) {
            let shorter = best.as_ref().is_none_or(|b| path.len() < b.len());
            if shorter {
                *best = Some(path.clone());
            }
        } else {
            values.push(value);
            search(model, gens, depth, path, values, best);
            values.pop();
        }
        path.pop();
        if best.as_ref().is_some_and(|b| b.len() <= path.len() + 1) {
            return;
        }
    }
}
