use crate::exactfield::{ExactMatrix, Scalar};
use crate::presentation::{Algebra, NcPoly, Word};

use super::{HopfError, HopfStructure};

/// A linear map between spans of words; column `j` is the image of
/// `source[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    pub source: Vec<Word>,
    pub target: Vec<Word>,
    pub matrix: ExactMatrix,
}

impl LinMap {
    pub fn new(source: Vec<Word>, target: Vec<Word>, matrix: ExactMatrix) -> Self {
        assert_eq!(matrix.rows(), target.len());
        assert_eq!(matrix.cols(), source.len());
        LinMap { source, target, matrix }
    }

    /// Tabulates `f` on `source`; fails if an image leaves `target`.
    pub fn from_fn<F>(source: Vec<Word>, target: Vec<Word>, mut f: F) -> Result<Self, HopfError>
    where
        F: FnMut(&Word) -> NcPoly,
    {
        let mut m = ExactMatrix::zeros(target.len(), source.len());
        for (j, w) in source.iter().enumerate() {
            for (v, c) in f(w).terms() {
                let i = target.iter().position(|t| t == v).ok_or_else(|| {
                    HopfError::Basis(format!("image of source word {j} leaves the target span"))
                })?;
                m.set(i, j, c.clone());
            }
        }
        Ok(LinMap::new(source, target, m))
    }

    pub fn identity(basis: Vec<Word>) -> Self {
        let n = basis.len();
        LinMap::new(basis.clone(), basis, ExactMatrix::identity(n))
    }

    pub fn apply_word(&self, w: &Word) -> Option<NcPoly> {
        let j = self.source.iter().position(|s| s == w)?;
        Some(NcPoly::from_terms(
            (0..self.target.len()).map(|i| (self.target[i].clone(), self.matrix.get(i, j).clone())),
        ))
    }

    pub fn apply(&self, h: &NcPoly) -> Option<NcPoly> {
        let mut out = NcPoly::zero();
        for (w, c) in h.terms() {
            out = out.add(&self.apply_word(w)?.scale(c));
        }
        Some(out)
    }

    /// `x ↦ ε(x)·1`
    pub fn unit_counit(h: &HopfStructure, basis: Vec<Word>) -> Self {
        LinMap::from_fn(basis.clone(), basis, |w| NcPoly::constant(h.epsilon_word(w)))
            .expect("1 lies in the basis")
    }

    /// `f * g = μ(f ⊗ g)Δ` with Δ from `h` and μ from `alg`.
    pub fn convolve(&self, g: &LinMap, h: &HopfStructure, alg: &Algebra) -> Result<LinMap, HopfError> {
        let mut err = None;
        let out = LinMap::from_fn(self.source.clone(), self.target.clone(), |w| {
            let mut acc = NcPoly::zero();
            for (legs, c) in h.delta_word(w).terms() {
                match (self.apply_word(&legs[0]), g.apply_word(&legs[1])) {
                    (Some(a), Some(b)) => acc = acc.add(&alg.mul(&a, &b).scale(c)),
                    _ => err = Some(HopfError::NotInBasis { name: h.name().to_string(), word: h.fmt_word(w) }),
                }
            }
            acc
        })?;
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        self.matrix.get(i, j)
    }
}
