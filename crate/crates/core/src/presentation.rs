//! Relative presentations and their line-based file format.
//!
//! ```text
//! # comment
//! coeff Z^2
//! tpart F 1
//! relator g1 t g2
//! ```

use thiserror::Error;

use crate::backend::Backend;
use crate::word::{RelativeWord, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}` line")]
    Missing(&'static str),
    #[error("line {line}: duplicate `{field}` line")]
    Duplicate { line: usize, field: &'static str },
    #[error("coefficient group must have rank >= 1")]
    TrivialCoefficients,
    #[error("relator is empty")]
    EmptyRelator,
    #[error("relator: {0}")]
    Word(#[from] WordError),
    #[error("out of scope: {0}")]
    OutOfScope(String),
}

impl PresentationError {
    /// Inputs that are well formed but outside every theorem's hypotheses.
    pub fn is_out_of_scope(&self) -> bool {
        matches!(self, PresentationError::OutOfScope(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativePresentation {
    pub coeff: Backend,
    pub tpart: Backend,
    pub relator: RelativeWord,
}

impl RelativePresentation {
    pub fn new(coeff: Backend, tpart: Backend, relator: RelativeWord) -> Self {
        RelativePresentation { coeff, tpart, relator }
    }

    /// Parses `relator` as a word over `coeff * tpart`.
    pub fn from_relator(coeff: Backend, tpart: Backend, relator: &str) -> Result<Self, PresentationError> {
        if relator.split_whitespace().next().is_none() {
            return Err(PresentationError::EmptyRelator);
        }
        let relator = RelativeWord::parse(relator, coeff, tpart)?;
        Ok(RelativePresentation { coeff, tpart, relator })
    }

    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut coeff: Option<(usize, String)> = None;
        let mut tpart: Option<(usize, String)> = None;
        let mut relator: Option<(usize, String)> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
            let (slot, field) = match key {
                "coeff" => (&mut coeff, "coeff"),
                "tpart" => (&mut tpart, "tpart"),
                "relator" => (&mut relator, "relator"),
                other => {
                    return Err(PresentationError::Syntax { line, message: format!("unknown directive `{other}`") })
                }
            };
            if slot.is_some() {
                return Err(PresentationError::Duplicate { line, field });
            }
            *slot = Some((line, rest.trim().to_string()));
        }
        let (cline, cspec) = coeff.ok_or(PresentationError::Missing("coeff"))?;
        let (tline, tspec) = tpart.ok_or(PresentationError::Missing("tpart"))?;
        let (_, rtext) = relator.ok_or(PresentationError::Missing("relator"))?;

        let coeff = match parse_group_spec(&cspec).map_err(|m| spec_error(cline, m))? {
            GroupSpec::Group(b) => b,
            GroupSpec::RankZero => return Err(PresentationError::TrivialCoefficients),
            GroupSpec::Torsion => {
                return Err(PresentationError::OutOfScope(format!("coefficient group `{cspec}` has torsion")))
            }
        };
        let tpart = match parse_group_spec(&tspec).map_err(|m| spec_error(tline, m))? {
            GroupSpec::Group(b) => b,
            GroupSpec::RankZero => return Err(PresentationError::OutOfScope("empty T-part".to_string())),
            GroupSpec::Torsion => return Err(PresentationError::OutOfScope(format!("T-part `{tspec}` has torsion"))),
        };
        Self::from_relator(coeff, tpart, &rtext)
    }
}

fn spec_error(line: usize, message: String) -> PresentationError {
    PresentationError::Syntax { line, message }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Group(Backend),
    RankZero,
    Torsion,
}

/// `Z`, `Z^r`, `Z r`, `F_r`, `F r`, `Fr`; `Z/n` and `Z_n` are recognized as
/// torsion requests.
pub fn parse_group_spec(spec: &str) -> Result<GroupSpec, String> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("unrecognized group `{spec}` (expected Z, Z^r or F_r)");
    if compact.is_empty() {
        return Err(bad());
    }
    let (kind, rest) = compact.split_at(1);
    if (kind == "Z" || kind == "z") && (rest.starts_with('/') || rest.starts_with('_')) {
        return Ok(GroupSpec::Torsion);
    }
    let digits = rest.strip_prefix('^').or_else(|| rest.strip_prefix('_')).unwrap_or(rest);
    let rank: usize = match (kind, digits) {
        ("Z", "") => 1,
        ("Z" | "F", d) if !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()) => d.parse().map_err(|_| bad())?,
        _ => return Err(bad()),
    };
    if rank == 0 {
        return Ok(GroupSpec::RankZero);
    }
    Ok(GroupSpec::Group(match kind {
        "Z" => Backend::free_abelian(rank).expect("nonzero rank"),
        _ => Backend::free(rank).expect("nonzero rank"),
    }))
}
