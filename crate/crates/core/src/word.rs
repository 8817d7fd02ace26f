//! Words in the free product `G * T` of a coefficient group and a T-part.
//!
//! A `RelativeWord` stores its reduced free-product form: an alternating
//! sequence of nonidentity syllables, each lying in `G` or in `T`. Reading it
//! as `g₀ τ₁ g₁ … τ_k g_k` (outer coefficients possibly trivial) is available
//! through [`RelativeWord::alternating`].
//!
//! Conjugation is `x^y = y⁻¹ x y` throughout.

use std::fmt;

use thiserror::Error;

use crate::backend::{Backend, BackendError, Element};
use crate::free_group::FreeWord;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("exponent overflow in `{0}`")]
    ExponentOverflow(String),
    #[error("`{symbol}` exceeds rank {rank} of {group}")]
    RankMismatch { symbol: String, rank: usize, group: String },
    #[error("operation needs a free T-part, found {0}")]
    TPartNotFree(String),
    #[error("operation needs a rank-one T-part, found {0}")]
    TPartNotCyclic(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Syllable {
    Coef(Element),
    T(Element),
}

impl Syllable {
    pub fn element(&self) -> &Element {
        match self {
            Syllable::Coef(e) | Syllable::T(e) => e,
        }
    }

    pub fn is_coef(&self) -> bool {
        matches!(self, Syllable::Coef(_))
    }

    fn same_side(&self, other: &Syllable) -> bool {
        self.is_coef() == other.is_coef()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelativeWord {
    coeff: Backend,
    tpart: Backend,
    syllables: Vec<Syllable>,
}

impl RelativeWord {
    pub fn identity(coeff: Backend, tpart: Backend) -> Self {
        RelativeWord { coeff, tpart, syllables: Vec::new() }
    }

    /// Multiplies the factors out and reduces.
    pub fn from_syllables<I: IntoIterator<Item = Syllable>>(coeff: Backend, tpart: Backend, factors: I) -> Self {
        let mut w = RelativeWord::identity(coeff, tpart);
        for s in factors {
            w.push(s);
        }
        w
    }

    pub fn coef(coeff: Backend, tpart: Backend, g: Element) -> Self {
        Self::from_syllables(coeff, tpart, [Syllable::Coef(g)])
    }

    pub fn tsyl(coeff: Backend, tpart: Backend, t: Element) -> Self {
        Self::from_syllables(coeff, tpart, [Syllable::T(t)])
    }

    fn backend_of(&self, s: &Syllable) -> Backend {
        if s.is_coef() {
            self.coeff
        } else {
            self.tpart
        }
    }

    fn push(&mut self, s: Syllable) {
        let backend = self.backend_of(&s);
        if backend.is_identity(s.element()) {
            return;
        }
        match self.syllables.last() {
            Some(last) if last.same_side(&s) => {
                let prod = backend.mul(last.element(), s.element());
                self.syllables.pop();
                if !backend.is_identity(&prod) {
                    self.syllables.push(if s.is_coef() { Syllable::Coef(prod) } else { Syllable::T(prod) });
                }
            }
            _ => self.syllables.push(s),
        }
    }

    /// Parses the token grammar `token+`, `token := sym ("^" int)?`,
    /// `sym := g | g<i> | x<i> | t`.
    pub fn parse(text: &str, coeff: Backend, tpart: Backend) -> Result<Self, WordError> {
        let mut w = RelativeWord::identity(coeff, tpart);
        for token in text.split_whitespace() {
            w.push(parse_token(token, coeff, tpart)?);
        }
        Ok(w)
    }

    pub fn coeff(&self) -> Backend {
        self.coeff
    }

    pub fn tpart(&self) -> Backend {
        self.tpart
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn t_syllables(&self) -> Vec<&Element> {
        self.syllables.iter().filter(|s| !s.is_coef()).map(Syllable::element).collect()
    }

    /// Nonidentity coefficient syllables, in order.
    pub fn coefficients(&self) -> Vec<&Element> {
        self.syllables.iter().filter(|s| s.is_coef()).map(Syllable::element).collect()
    }

    /// `(g₀…g_k, τ₁…τ_k)` with identity padding at the ends.
    pub fn alternating(&self) -> (Vec<Element>, Vec<Element>) {
        let mut gs = vec![self.coeff.identity()];
        let mut ts = Vec::new();
        for s in &self.syllables {
            match s {
                Syllable::Coef(g) => *gs.last_mut().expect("nonempty") = g.clone(),
                Syllable::T(t) => {
                    ts.push(t.clone());
                    gs.push(self.coeff.identity());
                }
            }
        }
        (gs, ts)
    }

    pub fn mul(&self, other: &RelativeWord) -> RelativeWord {
        let mut w = self.clone();
        for s in &other.syllables {
            w.push(s.clone());
        }
        w
    }

    pub fn inverse(&self) -> RelativeWord {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| match s {
                Syllable::Coef(g) => Syllable::Coef(self.coeff.inverse(g)),
                Syllable::T(t) => Syllable::T(self.tpart.inverse(t)),
            })
            .collect();
        RelativeWord { coeff: self.coeff, tpart: self.tpart, syllables }
    }

    /// `c⁻¹ · self · c`.
    pub fn conjugate_by(&self, c: &RelativeWord) -> RelativeWord {
        c.inverse().mul(self).mul(c)
    }

    /// Cyclically reduced in `G * T`: at most one syllable, or first and last
    /// syllables in different factors.
    pub fn is_cyclically_reduced(&self) -> bool {
        let n = self.syllables.len();
        n < 2 || !self.syllables[0].same_side(&self.syllables[n - 1])
    }

    /// Returns `(u, c)` with `self = c⁻¹ u c` and `u` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (RelativeWord, RelativeWord) {
        let mut u = self.clone();
        let mut c = RelativeWord::identity(self.coeff, self.tpart);
        while !u.is_cyclically_reduced() {
            let n = u.syllables.len();
            let last = u.syllables[n - 1].clone();
            // u = last⁻¹ · (last · s₁ … s_{n-1}) · last
            let inner = RelativeWord::from_syllables(
                self.coeff,
                self.tpart,
                std::iter::once(last.clone()).chain(u.syllables[..n - 1].iter().cloned()),
            );
            c = RelativeWord::from_syllables(self.coeff, self.tpart, [last]).mul(&c);
            u = inner;
        }
        (u, c)
    }

    /// Exponent sum of the `j`-th T-generator.
    pub fn exponent_sum(&self, j: usize) -> i64 {
        self.t_syllables().iter().map(|t| self.tpart.abelianize(t)[j]).sum()
    }

    /// Exponent sums of every coefficient generator followed by every
    /// T-generator: the image of the word in `G_ab ⊕ T_ab`.
    pub fn abelianized(&self) -> Vec<i64> {
        let mut g = vec![0i64; self.coeff.rank()];
        let mut t = vec![0i64; self.tpart.rank()];
        for s in &self.syllables {
            match s {
                Syllable::Coef(e) => add_into(&mut g, &self.coeff.abelianize(e)),
                Syllable::T(e) => add_into(&mut t, &self.tpart.abelianize(e)),
            }
        }
        g.extend(t);
        g
    }

    /// The image in `F(x₁…xₙ)` after deleting every coefficient, freely
    /// reduced.
    pub fn erase_coefficients(&self) -> Result<FreeWord, WordError> {
        if !matches!(self.tpart, Backend::Free { .. }) {
            return Err(WordError::TPartNotFree(self.tpart.name()));
        }
        let mut out = FreeWord::identity();
        for t in self.t_syllables() {
            if let Element::Free(w) = t {
                out = out.mul(w);
            }
        }
        Ok(out)
    }

    /// For a rank-one T-part: the word or its inverse, whichever has
    /// nonnegative exponent sum. The flag reports whether it was inverted.
    pub fn normalize_orientation(&self) -> Result<(RelativeWord, bool), WordError> {
        if !self.tpart.is_cyclic() {
            return Err(WordError::TPartNotCyclic(self.tpart.name()));
        }
        if self.exponent_sum(0) < 0 {
            Ok((self.inverse(), true))
        } else {
            Ok((self.clone(), false))
        }
    }

    /// Product of the T-syllables, in order, evaluated in `T`.
    pub fn t_product(&self) -> Element {
        self.t_syllables().into_iter().fold(self.tpart.identity(), |acc, t| self.tpart.mul(&acc, t))
    }

    /// Conjugacy in `G * T`.
    pub fn is_conjugate_to(&self, other: &RelativeWord) -> bool {
        let (a, _) = self.cyclic_reduce();
        let (b, _) = other.cyclic_reduce();
        if a.len() != b.len() {
            return false;
        }
        match a.len() {
            0 => true,
            1 => {
                let (x, y) = (&a.syllables[0], &b.syllables[0]);
                if !x.same_side(y) {
                    return false;
                }
                match (x.element(), y.element()) {
                    (Element::Free(p), Element::Free(q)) => p.is_conjugate_to(q),
                    (p, q) => p == q,
                }
            }
            n => (0..n).any(|r| a.syllables[r..].iter().chain(&a.syllables[..r]).eq(b.syllables.iter())),
        }
    }

    /// Token string; empty for the identity.
    pub fn to_tokens(&self) -> String {
        self.syllables
            .iter()
            .map(|s| match s {
                Syllable::Coef(g) => self.coeff.format_element(g, "g", "g"),
                Syllable::T(t) => self.tpart.format_element(t, "x", "t"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn add_into(acc: &mut [i64], v: &[i64]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += b;
    }
}

fn parse_token(token: &str, coeff: Backend, tpart: Backend) -> Result<Syllable, WordError> {
    let (sym, exp) = match token.split_once('^') {
        Some((s, e)) => {
            let exp = e.parse::<i64>().map_err(|err| match err.kind() {
                std::num::IntErrorKind::PosOverflow | std::num::IntErrorKind::NegOverflow => {
                    WordError::ExponentOverflow(token.to_string())
                }
                _ => WordError::MalformedToken(token.to_string()),
            })?;
            (s, exp)
        }
        None => (token, 1),
    };
    let (is_coef, index) = match sym {
        "g" => (true, 0),
        "t" => (false, 0),
        _ => {
            let (head, digits) = sym.split_at(sym.chars().next().map_or(0, char::len_utf8));
            let is_coef = match head {
                "g" => true,
                "x" => false,
                _ => return Err(WordError::UnknownSymbol(sym.to_string())),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(WordError::UnknownSymbol(sym.to_string()));
            }
            let i: usize = digits.parse().map_err(|_| WordError::UnknownSymbol(sym.to_string()))?;
            if i == 0 {
                return Err(WordError::UnknownSymbol(sym.to_string()));
            }
            (is_coef, i - 1)
        }
    };
    let backend = if is_coef { coeff } else { tpart };
    let element = backend.evaluate(&[(index, exp)]).map_err(|e| match e {
        BackendError::Overflow => WordError::ExponentOverflow(token.to_string()),
        _ => WordError::RankMismatch { symbol: sym.to_string(), rank: backend.rank(), group: backend.name() },
    })?;
    Ok(if is_coef { Syllable::Coef(element) } else { Syllable::T(element) })
}

impl fmt::Display for RelativeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&self.to_tokens())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Backend {
        Backend::cyclic()
    }
    fn f(n: usize) -> Backend {
        Backend::free(n).unwrap()
    }
    fn p(text: &str, g: Backend, t: Backend) -> RelativeWord {
        RelativeWord::parse(text, g, t).unwrap()
    }

    #[test]
    fn parse_examples() {
        let w = p("g^-1 t g t^-2", z(), f(1));
        assert_eq!(w.len(), 4);
        assert_eq!(w.t_syllables().len(), 2);
        assert_eq!(w.coefficients(), vec![&Element::Abelian(vec![-1]), &Element::Abelian(vec![1])]);
        assert!(p("x1 x1^-1", z(), f(1)).is_empty());
        let w = p("g g^-1 t", z(), f(1));
        assert_eq!(w.syllables(), &[Syllable::T(Element::Free(FreeWord::new([1])))]);
        assert_eq!(w.to_tokens(), "t");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(RelativeWord::parse("y", z(), f(1)), Err(WordError::UnknownSymbol(_))));
        assert!(matches!(RelativeWord::parse("g0", z(), f(1)), Err(WordError::UnknownSymbol(_))));
        assert!(matches!(
            RelativeWord::parse("t^99999999999999999999", z(), f(1)),
            Err(WordError::ExponentOverflow(_))
        ));
        assert!(matches!(RelativeWord::parse("x2", z(), f(1)), Err(WordError::RankMismatch { .. })));
        assert!(matches!(RelativeWord::parse("g^", z(), f(1)), Err(WordError::MalformedToken(_))));
    }

    #[test]
    fn cyclic_reduce_examples() {
        let w = p("x1^-1 g x1", z(), f(2));
        let (u, c) = w.cyclic_reduce();
        assert_eq!(u.to_tokens(), "g");
        assert_eq!(c.to_tokens(), "x1");
        assert_eq!(u.conjugate_by(&c), w);

        let w = p("g t g t^-1", z(), f(1));
        let (u, c) = w.cyclic_reduce();
        assert_eq!(u, w);
        assert!(c.is_empty());

        let w = p("x2 g x1 g^3 x2^-1", z(), f(2));
        let (u, c) = w.cyclic_reduce();
        assert!(u.is_cyclically_reduced());
        assert_eq!(u.to_tokens(), "g^4 x1");
        assert_eq!(u.conjugate_by(&c), w);
    }

    #[test]
    fn sums_and_erasure() {
        let w = p("g^-1 t g t^-2", z(), f(1));
        assert_eq!(w.exponent_sum(0), -1);
        assert_eq!(p("x1 x2 x1", z(), f(2)).exponent_sum(0), 2);
        assert_eq!(RelativeWord::identity(z(), f(1)).exponent_sum(0), 0);

        let g2 = Backend::free_abelian(2).unwrap();
        assert_eq!(p("g1 x1 g2 x2^-1", g2, f(2)).erase_coefficients().unwrap(), FreeWord::new([1, -2]));
        assert!(p("g1 x1 g2 x1^-1", g2, f(2)).erase_coefficients().unwrap().is_empty());
        let e = p("g x1 g x1 g x2", z(), f(2)).erase_coefficients().unwrap();
        assert_eq!(e, FreeWord::new([1, 1, 2]));
        assert!(p("g x1", z(), Backend::free_abelian(2).unwrap()).erase_coefficients().is_err());
    }

    #[test]
    fn orientation() {
        let (w, inv) = p("g^-1 t g t^-2", z(), f(1)).normalize_orientation().unwrap();
        assert!(inv);
        assert_eq!(w.to_tokens(), "t^2 g^-1 t^-1 g");
        assert_eq!(w.exponent_sum(0), 1);
        let (w, inv) = p("g t g t", z(), f(1)).normalize_orientation().unwrap();
        assert!(!inv);
        assert_eq!(w.exponent_sum(0), 2);
    }

    #[test]
    fn t_products() {
        let z2 = Backend::free_abelian(2).unwrap();
        assert_eq!(p("x1 g x2", z(), z2).t_product(), Element::Abelian(vec![1, 1]));
        assert_eq!(p("x1 g x2 g x2^-1", z(), f(2)).t_product(), Element::Free(FreeWord::new([1])));
        assert_eq!(p("g^-1 t g t^-2", z(), f(1)).t_product(), Element::Free(FreeWord::new([-1])));
    }

    #[test]
    fn conjugacy() {
        let a = p("t g t^-1 g^3 t", z(), f(1));
        let b = p("t^2 g t^-1 g^3", z(), f(1));
        assert!(a.is_conjugate_to(&b));
        assert!(!a.is_conjugate_to(&p("t g t^-1 g^2 t", z(), f(1))));
    }
}
