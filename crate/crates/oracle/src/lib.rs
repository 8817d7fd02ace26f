//! Brute-force reference evaluations.
//!
//! Every function here evaluates a definition directly, with no shared code
//! path into the `relfree` crate. The test suites and the `relfree oracle`
//! subcommand use these to cross-check the real implementations.

use std::fmt;

/// Outcome of evaluating the complexity definition on a cyclic sign sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Complexity {
    Zero,
    One,
    Higher,
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Complexity::Zero => "Zero",
            Complexity::One => "One",
            Complexity::Higher => "Higher",
        };
        f.write_str(s)
    }
}

/// Reads the complexity straight off the cyclic adjacent pairs.
///
/// Returns `None` for the empty sequence or if an entry is not ±1.
pub fn complexity_by_pairs(signs: &[i8]) -> Option<Complexity> {
    if signs.is_empty() || signs.iter().any(|&s| s != 1 && s != -1) {
        return None;
    }
    let all_equal = signs.iter().all(|&s| s == signs[0]);
    if all_equal {
        return Some(Complexity::Zero);
    }
    let n = signs.len();
    let mut plus_plus = false;
    let mut minus_minus = false;
    for i in 0..n {
        let (a, b) = (signs[i], signs[(i + 1) % n]);
        if a == 1 && b == 1 {
            plus_plus = true;
        }
        if a == -1 && b == -1 {
            minus_minus = true;
        }
    }
    if !plus_plus || !minus_minus {
        Some(Complexity::One)
    } else {
        Some(Complexity::Higher)
    }
}

/// Parses a `+`/`-` string such as `"++-"`.
pub fn parse_signs(text: &str) -> Option<Vec<i8>> {
    let mut out = Vec::new();
    for ch in text.chars() {
        match ch {
            '+' => out.push(1),
            '-' => out.push(-1),
            c if c.is_whitespace() => {}
            _ => return None,
        }
    }
    if out.is_empty() {
        None
    } else {
        Some(out)
    }
}

/// Tries every `k >= 2` dividing the length and every candidate root.
///
/// Letters are nonzero integers, `-x` being the inverse of `x`. Returns the
/// root and the largest exponent, or `None` when the word is not a proper
/// power of a prefix.
pub fn proper_power_brute(word: &[i32]) -> Option<(Vec<i32>, usize)> {
    let n = word.len();
    if n < 2 {
        return None;
    }
    for k in (2..=n).rev() {
        if !n.is_multiple_of(k) {
            continue;
        }
        let root = &word[..n / k];
        let repeated: Vec<i32> = root.iter().copied().cycle().take(n).collect();
        if repeated == word {
            return Some((root.to_vec(), k));
        }
    }
    None
}

/// True when no two adjacent letters cancel.
pub fn is_freely_reduced(word: &[i32]) -> bool {
    word.iter().all(|&x| x != 0) && word.windows(2).all(|p| p[0] != -p[1])
}

/// True when the word is freely reduced and its ends do not cancel.
pub fn is_cyclically_reduced(word: &[i32]) -> bool {
    is_freely_reduced(word) && (word.len() < 2 || word[0] != -word[word.len() - 1])
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Determinant by permutation expansion (fine for the tiny sizes used here).
fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0i128;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, start: usize, m: &[Vec<i128>], total: &mut i128) {
    let n = perm.len();
    if start == n {
        let mut sign = 1i128;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    sign = -sign;
                }
            }
        }
        let prod: i128 = (0..n).map(|i| m[i][perm[i]]).product();
        *total += sign * prod;
        return;
    }
    for i in start..n {
        perm.swap(start, i);
        permute(perm, start + 1, m, total);
        perm.swap(start, i);
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(i: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        if i == n {
            return;
        }
        cur.push(i);
        rec(i + 1, n, k, cur, out);
        cur.pop();
        rec(i + 1, n, k, cur, out);
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Invariant factors from determinantal divisors: `d_1 ... d_k` equals the
/// gcd of all `k x k` minors. The chain has `min(rows, cols)` entries.
pub fn smith_by_minors(m: &[Vec<i64>]) -> Vec<i64> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let size = rows.min(cols);
    let mut out = Vec::with_capacity(size);
    let mut prev = 1i128;
    for k in 1..=size {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect()).collect();
                g = gcd(g, det(&minor));
            }
        }
        if g == 0 {
            out.extend(std::iter::repeat_n(0, size - out.len()));
            break;
        }
        out.push((g / prev) as i64);
        prev = g;
    }
    out
}

/// Parses `"2 0; 0 3"` style matrices.
pub fn parse_matrix(text: &str) -> Option<Vec<Vec<i64>>> {
    let rows: Vec<Vec<i64>> = text
        .split(';')
        .map(|row| row.split_whitespace().map(|x| x.parse::<i64>().ok()).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    let width = rows.first()?.len();
    if width == 0 || rows.iter().any(|r| r.len() != width) {
        return None;
    }
    Some(rows)
}

/// The three generalized-unimodularity conditions for a vector `sigma` in a
/// free abelian group, read off directly: nonzero, always normal, and the
/// quotient by `<sigma>` torsion-free (Smith invariant of `[sigma]` is 0 or 1).
pub fn free_abelian_unimodularity(sigma: &[i64]) -> (bool, bool, bool) {
    let infinite = sigma.iter().any(|&x| x != 0);
    let d = smith_by_minors(&[sigma.to_vec()])[0];
    (infinite, true, d == 0 || d == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complexity_examples() {
        assert_eq!(complexity_by_pairs(&[1, 1, 1]), Some(Complexity::Zero));
        assert_eq!(complexity_by_pairs(&[1, -1, 1]), Some(Complexity::One));
        assert_eq!(complexity_by_pairs(&[1, 1, -1, -1]), Some(Complexity::Higher));
        assert_eq!(complexity_by_pairs(&[]), None);
    }

    #[test]
    fn powers() {
        assert_eq!(proper_power_brute(&[1, 2, 1, 2]), Some((vec![1, 2], 2)));
        assert_eq!(proper_power_brute(&[1, 2, 1, 2, 1, 2]), Some((vec![1, 2], 3)));
        assert_eq!(proper_power_brute(&[1, 1, 1, 1]), Some((vec![1], 4)));
        assert_eq!(proper_power_brute(&[1]), None);
    }

    #[test]
    fn minors() {
        assert_eq!(smith_by_minors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_by_minors(&[vec![1, 0], vec![0, 0]]), vec![1, 0]);
        assert_eq!(smith_by_minors(&[vec![2]]), vec![2]);
        assert_eq!(smith_by_minors(&[vec![0, 2]]), vec![2]);
        assert_eq!(parse_matrix("2 0; 0 3"), Some(vec![vec![2, 0], vec![0, 3]]));
    }
}
