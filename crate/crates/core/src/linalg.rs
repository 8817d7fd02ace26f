//! Exact integer linear algebra: Smith invariants, ranks, and the coset
//! complement of a primitive vector in `ℤʳ`.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("vector {0:?} is not primitive (gcd of coordinates must be 1)")]
    NotPrimitive(Vec<i64>),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0, |g, &x| gcd(g, x))
}

pub fn is_primitive(v: &[i64]) -> bool {
    gcd_all(v) == 1
}

/// Invariant factors `d₁ | d₂ | …` of an integer matrix, `min(rows, cols)`
/// of them, all nonnegative.
pub fn smith_invariants(m: &[Vec<i64>]) -> Vec<i64> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let size = rows.min(cols);
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut out = Vec::with_capacity(size);

    for t in 0..size {
        loop {
            let Some((pi, pj)) = min_nonzero(&a, t) else {
                out.extend(std::iter::repeat_n(0, size - t));
                return out;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs() as i64);
    }
    out
}

fn min_nonzero(a: &[Vec<i128>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, &x) in row.iter().enumerate().skip(t) {
            if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn rank(m: &[Vec<i64>]) -> usize {
    smith_invariants(m).iter().filter(|&&d| d != 0).count()
}

/// Divisor chain of `ℤⁿ / ⟨rows⟩`, padded with zeros to `ngens` entries so
/// that a free factor `ℤ` shows up as a trailing `0`.
pub fn abelianization_divisors(rows: &[Vec<i64>], ngens: usize) -> Vec<i64> {
    let mut d = if rows.is_empty() { Vec::new() } else { smith_invariants(rows) };
    d.resize(ngens, 0);
    d
}

/// Coordinates adapted to a primitive vector `σ ∈ ℤʳ`.
///
/// Holds a unimodular `V` with `V·σ = e₁`. For `τ ∈ ℤʳ`, `V·τ = (k, label)`
/// gives `τ = k·σ + rep(τ)` where `rep(τ) = V⁻¹·(0, label)`; `label` names the
/// coset `τ + ⟨σ⟩` in `ℤʳ/⟨σ⟩ ≅ ℤ^{r-1}`.
///
/// `V` is built by Euclidean row reduction of `σ`, always pivoting on the
/// smallest nonzero entry (highest index on ties), so the representative
/// function is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetComplement {
    sigma: Vec<i64>,
    transform: Vec<Vec<i64>>,
    inverse: Vec<Vec<i64>>,
}

impl CosetComplement {
    pub fn new(sigma: &[i64]) -> Result<Self, LinalgError> {
        if !is_primitive(sigma) {
            return Err(LinalgError::NotPrimitive(sigma.to_vec()));
        }
        let r = sigma.len();
        let mut v = sigma.to_vec();
        let mut fwd = identity(r);
        let mut inv = identity(r);
        loop {
            let nonzero: Vec<usize> = (0..r).filter(|&i| v[i] != 0).collect();
            let p = *nonzero
                .iter()
                .min_by(|&&i, &&j| v[i].abs().cmp(&v[j].abs()).then(j.cmp(&i)))
                .expect("primitive vector is nonzero");
            if nonzero.len() == 1 {
                if p != 0 {
                    v.swap(0, p);
                    fwd.swap(0, p);
                    for row in inv.iter_mut() {
                        row.swap(0, p);
                    }
                }
                break;
            }
            for &i in &nonzero {
                if i == p {
                    continue;
                }
                let q = v[i] / v[p];
                v[i] -= q * v[p];
                for c in 0..r {
                    fwd[i][c] -= q * fwd[p][c];
                }
                for row in inv.iter_mut() {
                    row[p] += q * row[i];
                }
            }
        }
        if v[0] == -1 {
            for x in fwd[0].iter_mut() {
                *x = -*x;
            }
            for row in inv.iter_mut() {
                row[0] = -row[0];
            }
        }
        Ok(CosetComplement { sigma: sigma.to_vec(), transform: fwd, inverse: inv })
    }

    pub fn sigma(&self) -> &[i64] {
        &self.sigma
    }

    pub fn dim(&self) -> usize {
        self.sigma.len()
    }

    /// `(k, label)` with `τ = k·σ + rep(τ)`.
    pub fn split(&self, tau: &[i64]) -> (i64, Vec<i64>) {
        let y = mat_vec(&self.transform, tau);
        (y[0], y[1..].to_vec())
    }

    pub fn label(&self, tau: &[i64]) -> Vec<i64> {
        self.split(tau).1
    }

    /// The coset representative, constant on `τ + ⟨σ⟩` and `0` on `⟨σ⟩`.
    pub fn rep(&self, tau: &[i64]) -> Vec<i64> {
        let (k, _) = self.split(tau);
        tau.iter().zip(&self.sigma).map(|(t, s)| t - k * s).collect()
    }

    /// The representative whose label is `label`.
    pub fn from_label(&self, label: &[i64]) -> Vec<i64> {
        let mut y = vec![0];
        y.extend_from_slice(label);
        mat_vec(&self.inverse, &y)
    }
}

fn identity(r: usize) -> Vec<Vec<i64>> {
    (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect()
}

fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_examples() {
        assert_eq!(smith_invariants(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(smith_invariants(&[vec![1, 0], vec![0, 0]]), vec![1, 0]);
        assert_eq!(smith_invariants(&[vec![2]]), vec![2]);
        assert_eq!(smith_invariants(&[vec![0, -1]]), vec![1]);
        assert_eq!(smith_invariants(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(smith_invariants(&[]), Vec::<i64>::new());
    }

    #[test]
    fn abelianization_padding() {
        assert_eq!(abelianization_divisors(&[vec![0, -1]], 2), vec![1, 0]);
        assert_eq!(abelianization_divisors(&[vec![0, 2]], 2), vec![2, 0]);
        assert_eq!(rank(&[vec![1, 1], vec![2, 2]]), 1);
    }

    #[test]
    fn complement_examples() {
        let c = CosetComplement::new(&[1, 0]).unwrap();
        assert_eq!(c.rep(&[3, 5]), vec![0, 5]);
        let c = CosetComplement::new(&[0, 1]).unwrap();
        assert_eq!(c.rep(&[3, 5]), vec![3, 0]);
        let c = CosetComplement::new(&[1, 1]).unwrap();
        assert_eq!(c.label(&[0, 0]), vec![0]);
        assert_eq!(c.label(&[1, 0]), vec![1]);
        assert_eq!(c.rep(&[1, 0]), vec![1, 0]);
        assert_eq!(c.from_label(&[1]), vec![1, 0]);
        assert!(CosetComplement::new(&[2, 0]).is_err());
        assert!(CosetComplement::new(&[0, 0]).is_err());
    }

    #[test]
    fn complement_two_one() {
        let c = CosetComplement::new(&[2, 1]).unwrap();
        let tau = [1, 1];
        let rep = c.rep(&tau);
        let diff: Vec<i64> = tau.iter().zip(&rep).map(|(a, b)| a - b).collect();
        // diff must be a multiple of (2, 1)
        assert_eq!(diff[0], 2 * diff[1]);
        assert_eq!(c.rep(&rep), rep);
        assert_eq!(c.rep(&[0, 0]), vec![0, 0]);
    }

    #[test]
    fn complement_negative_sigma() {
        let c = CosetComplement::new(&[-1, 0]).unwrap();
        assert_eq!(c.split(&[-3, 2]), (3, vec![2]));
        assert_eq!(c.rep(&[-3, 2]), vec![0, 2]);
    }
}
