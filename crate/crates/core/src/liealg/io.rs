use serde::{Deserialize, Serialize};

use super::{LieAlgebra, LieError};
use crate::scalars::{GaussRational, Parts, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("malformed structure-constant file: {0}")]
    Parse(String),
    #[error("bracket entry ({0}, {1}) must have i < j")]
    Order(usize, usize),
    #[error("field Q entry ({0}, {1}, {2}) has a nonzero imaginary part")]
    NotRational(usize, usize, usize),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),
    #[error(transparent)]
    Lie(#[from] LieError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldTag {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "Qi")]
    Gauss,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub re: Rational,
    pub im: Rational,
}

/// Interchange format for structure constants. Only `i < j` entries are
/// listed; the rest follow by antisymmetry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub field: FieldTag,
    pub labels: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

/// An imported algebra over whichever field the file declares.
#[derive(Debug, Clone)]
pub enum Imported {
    Rational(LieAlgebra<Rational>),
    Gauss(LieAlgebra<GaussRational>),
}

impl AlgebraFile {
    pub fn from_algebra<S: Ring + Parts>(l: &LieAlgebra<S>, field: FieldTag) -> AlgebraFile {
        let labels = (0..l.dim()).map(|i| l.label(i)).collect();
        let brackets = l
            .entries()
            .into_iter()
            .map(|(i, j, k, c)| BracketEntry { i, j, k, re: c.re_part(), im: c.im_part() })
            .collect();
        AlgebraFile { dim: l.dim(), field, labels, brackets }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<AlgebraFile, IoError> {
        serde_json::from_str(s).map_err(|e| IoError::Parse(e.to_string()))
    }

    fn check_entries(&self) -> Result<(), IoError> {
        for b in &self.brackets {
            if b.i >= b.j {
                return Err(IoError::Order(b.i, b.j));
            }
        }
        Ok(())
    }

    fn labelled<S: Ring>(&self, l: LieAlgebra<S>) -> Result<LieAlgebra<S>, IoError> {
        Ok(l.with_labels(self.labels.clone())?)
    }

    pub fn to_gauss(&self) -> Result<LieAlgebra<GaussRational>, IoError> {
        self.check_entries()?;
        let entries = self
            .brackets
            .iter()
            .map(|b| (b.i, b.j, b.k, GaussRational::new(b.re.clone(), b.im.clone())));
        self.labelled(LieAlgebra::from_entries(self.dim, entries)?)
    }

    pub fn to_rational(&self) -> Result<LieAlgebra<Rational>, IoError> {
        self.check_entries()?;
        if let Some(b) = self.brackets.iter().find(|b| !b.im.is_zero()) {
            return Err(IoError::NotRational(b.i, b.j, b.k));
        }
        let entries = self.brackets.iter().map(|b| (b.i, b.j, b.k, b.re.clone()));
        self.labelled(LieAlgebra::from_entries(self.dim, entries)?)
    }

    /// Parses, builds and Jacobi-checks.
    pub fn import(s: &str) -> Result<Imported, IoError> {
        let f = AlgebraFile::from_json(s)?;
        match f.field {
            FieldTag::Rational => {
                let l = f.to_rational()?;
                match l.check_jacobi().first() {
                    Some(bad) => Err(IoError::Jacobi(bad.triple.0, bad.triple.1, bad.triple.2)),
                    None => Ok(Imported::Rational(l)),
                }
            }
            FieldTag::Gauss => {
                let l = f.to_gauss()?;
                match l.check_jacobi().first() {
                    Some(bad) => Err(IoError::Jacobi(bad.triple.0, bad.triple.1, bad.triple.2)),
                    None => Ok(Imported::Gauss(l)),
                }
            }
        }
    }
}
