//! Computable models used to verify witness pairs: free-product and cyclic
//! amalgam normal forms, Britton reduction, exact matrix representations,
//! and the bounded relation search.

pub mod amalgam;
pub mod bounded;
pub mod hnn;
pub mod matrix;

use num_rational::BigRational;
use thiserror::Error;

use crate::analysis::whitehead::Automorphism;
use crate::backend::{Backend, Element};
use crate::free_group::FreeWord;
use crate::linalg::CosetComplement;
use crate::word::{RelativeWord, Syllable};

pub use amalgam::{amalgam_nf, free_product_nf, Amalgam, ReducedSequence, Side};
pub use bounded::{bounded_no_relation_check, CheckOutcome, GroupModel, PairWord};
pub use hnn::{britton_reduce, HnnWord};
pub use matrix::{bs12_matrix, sanov_matrix, Mat2};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NfError {
    #[error("amalgamated generator must have infinite order")]
    TorsionIdentification,
}

/// How T-syllables enter the `B` factor of an amalgam model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TMap {
    /// `B = T`.
    Identity,
    /// `B = T/⟨σ⟩ ≅ ℤ^{r-1}` through coset labels.
    Quotient(CosetComplement),
}

/// A group isomorphic to `G̃` (or mapping onto it faithfully enough to
/// decide the identity) in which relative words can be evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComputableModel {
    /// `G̃ ≅ G`, with the T-generator sent to `t_image`.
    Coefficient { coeff: Backend, t_image: Element },
    /// Coefficients in factor `A`, T-syllables in factor `B`.
    Amalgam { amalgam: Amalgam, t_map: TMap },
    /// `G̃ ≅ ⟨a, b | a⁻¹ b a b⁻²⟩` via an automorphism of `F₂` applied to the
    /// word with `g ↦ a`, `t ↦ b`; evaluated by exact matrices.
    BaumslagSolitar { to_reference: Automorphism },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelElement {
    Coef(Element),
    Amalgam(ReducedSequence),
    Matrix(Mat2<BigRational>),
}

impl ComputableModel {
    pub fn kind(&self) -> &'static str {
        match self {
            ComputableModel::Coefficient { .. } => "coefficient group",
            ComputableModel::Amalgam { amalgam, .. } if amalgam.identification().is_none() => "free product",
            ComputableModel::Amalgam { .. } => "cyclic amalgam",
            ComputableModel::BaumslagSolitar { .. } => "Baumslag-Solitar matrices",
        }
    }

    pub fn evaluate(&self, w: &RelativeWord) -> ModelElement {
        match self {
            ComputableModel::Coefficient { coeff, t_image } => {
                let tpart = w.tpart();
                let mut acc = coeff.identity();
                for s in w.syllables() {
                    let x = match s {
                        Syllable::Coef(g) => g.clone(),
                        Syllable::T(t) => coeff.pow(t_image, tpart.cyclic_exponent(t).expect("rank-one T-part")),
                    };
                    acc = coeff.mul(&acc, &x);
                }
                ModelElement::Coef(acc)
            }
            ComputableModel::Amalgam { amalgam, t_map } => {
                let mut nf = ReducedSequence::default();
                for s in w.syllables() {
                    match s {
                        Syllable::Coef(g) => amalgam.push(&mut nf, Side::A, g),
                        Syllable::T(t) => {
                            let image = match (t_map, t) {
                                (TMap::Identity, _) => t.clone(),
                                (TMap::Quotient(c), Element::Abelian(v)) => Element::Abelian(c.label(v)),
                                (TMap::Quotient(_), Element::Free(_)) => unreachable!("quotient of ℤʳ"),
                            };
                            amalgam.push(&mut nf, Side::B, &image);
                        }
                    }
                }
                ModelElement::Amalgam(nf)
            }
            ComputableModel::BaumslagSolitar { to_reference } => {
                let (g, t) = (w.coeff(), w.tpart());
                let letters = w.syllables().iter().flat_map(|s| {
                    let (letter, k) = match s {
                        Syllable::Coef(e) => (1, g.cyclic_exponent(e).expect("cyclic G")),
                        Syllable::T(e) => (2, t.cyclic_exponent(e).expect("cyclic T")),
                    };
                    std::iter::repeat_n(letter * k.signum() as i32, k.unsigned_abs() as usize)
                });
                let word = to_reference.apply(&FreeWord::new(letters));
                ModelElement::Matrix(bs12_matrix(&word))
            }
        }
    }
}

impl GroupModel for ComputableModel {
    type Elem = ModelElement;

    fn identity(&self) -> ModelElement {
        match self {
            ComputableModel::Coefficient { coeff, .. } => ModelElement::Coef(coeff.identity()),
            ComputableModel::Amalgam { .. } => ModelElement::Amalgam(ReducedSequence::default()),
            ComputableModel::BaumslagSolitar { .. } => ModelElement::Matrix(Mat2::identity()),
        }
    }

    fn mul(&self, x: &ModelElement, y: &ModelElement) -> ModelElement {
        match (self, x, y) {
            (ComputableModel::Coefficient { coeff, .. }, ModelElement::Coef(a), ModelElement::Coef(b)) => {
                ModelElement::Coef(coeff.mul(a, b))
            }
            (ComputableModel::Amalgam { amalgam, .. }, ModelElement::Amalgam(a), ModelElement::Amalgam(b)) => {
                ModelElement::Amalgam(amalgam.multiply(a, b))
            }
            (_, ModelElement::Matrix(a), ModelElement::Matrix(b)) => ModelElement::Matrix(a.mul(b)),
            _ => panic!("element does not belong to this model"),
        }
    }

    fn inverse(&self, x: &ModelElement) -> ModelElement {
        match (self, x) {
            (ComputableModel::Coefficient { coeff, .. }, ModelElement::Coef(a)) => ModelElement::Coef(coeff.inverse(a)),
            (ComputableModel::Amalgam { amalgam, .. }, ModelElement::Amalgam(a)) => {
                ModelElement::Amalgam(amalgam.inverse(a))
            }
            (_, ModelElement::Matrix(m)) => {
                let [[a, b], [c, d]] = &m.0;
                let det = a * d - b * c;
                ModelElement::Matrix(Mat2([[d / &det, -b / &det], [-c / &det, a / &det]]))
            }
            _ => panic!("element does not belong to this model"),
        }
    }

    fn is_identity(&self, x: &ModelElement) -> bool {
        match (self, x) {
            (ComputableModel::Coefficient { coeff, .. }, ModelElement::Coef(a)) => coeff.is_identity(a),
            (_, ModelElement::Amalgam(a)) => a.is_identity(),
            (_, ModelElement::Matrix(m)) => m.is_identity(),
            _ => false,
        }
    }
}

/// Bounded relation search for two relative words in a model.
pub fn verify_pair(model: &ComputableModel, u: &RelativeWord, v: &RelativeWord, depth: usize) -> CheckOutcome {
    bounded_no_relation_check(model, &model.evaluate(u), &model.evaluate(v), depth)
}
