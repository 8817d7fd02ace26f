//! Free subgroup detection for one-relator relative presentations
//! `⟨G, x₁ … xₙ | w⟩` over torsion-free coefficient groups.

pub mod analysis;
pub mod backend;
pub mod classify;
pub mod free_group;
pub mod linalg;
pub mod nf;
pub mod presentation;
pub mod report;
pub mod word;

pub use backend::{Backend, Element, Index};
pub use classify::{classify, classify_with, Classification, ClassifyOptions, NoFreeReason, Verdict};
pub use free_group::FreeWord;
pub use presentation::RelativePresentation;
pub use word::{RelativeWord, Syllable};
