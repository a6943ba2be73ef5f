use std::collections::HashMap;

use crate::exactfield::{ExactMatrix, Scalar};
use crate::hopfcore::{HopfStructure, LinMap};
use crate::presentation::{Algebra, NcPoly, Word};
use crate::tensorspace::TensorElement;

use super::GaloisError;

/// A linear endomorphism of a span of pure tensors `u ⊗ c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorEndo {
    pub basis: Vec<(Word, Word)>,
    pub matrix: ExactMatrix,
}

impl TensorEndo {
    pub fn from_fn<F>(basis: Vec<(Word, Word)>, mut f: F) -> Result<Self, GaloisError>
    where
        F: FnMut(&Word, &Word) -> TensorElement,
    {
        let index: HashMap<&(Word, Word), usize> = basis.iter().enumerate().map(|(k, p)| (p, k)).collect();
        let mut m = ExactMatrix::zeros(basis.len(), basis.len());
        for (j, (u, c)) in basis.iter().enumerate() {
            for (legs, k) in f(u, c).terms() {
                let key = (legs[0].clone(), legs[1].clone());
                let i = *index
                    .get(&key)
                    .ok_or_else(|| GaloisError::OutsideTruncation(format!("{:?} (x) {:?}", legs[0], legs[1])))?;
                m.set(i, j, k.clone());
            }
        }
        Ok(TensorEndo { basis, matrix: m })
    }

    pub fn identity(basis: Vec<(Word, Word)>) -> Self {
        let n = basis.len();
        TensorEndo { basis, matrix: ExactMatrix::identity(n) }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &TensorEndo) -> TensorEndo {
        assert_eq!(self.basis, other.basis);
        TensorEndo {
            basis: self.basis.clone(),
            matrix: self.matrix.mul(&other.matrix).expect("square matrices of equal size"),
        }
    }

    pub fn apply_pair(&self, u: &Word, c: &Word) -> Option<TensorElement> {
        let j = self.basis.iter().position(|p| p.0 == *u && p.1 == *c)?;
        let mut t = TensorElement::zero(2);
        for (i, (a, b)) in self.basis.iter().enumerate() {
            let k = self.matrix.get(i, j);
            if !k.is_zero() {
                t.add_term(vec![a.clone(), b.clone()], k.clone());
            }
        }
        Some(t)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == ExactMatrix::identity(self.basis.len())
    }
}

/// `Rφ(a ⊗ c) = a φ(c₁) ⊗ c₂` for `φ : C → A`.
pub fn koppinen_r(
    phi: &LinMap,
    alg: &Algebra,
    c: &HopfStructure,
    basis: Vec<(Word, Word)>,
) -> Result<TensorEndo, GaloisError> {
    let mut err = None;
    let out = TensorEndo::from_fn(basis, |u, w| {
        let mut t = TensorElement::zero(2);
        for (legs, k) in c.delta_word(w).terms() {
            let Some(img) = phi.apply_word(&legs[0]) else {
                err = Some(GaloisError::OutsideTruncation(c.fmt_word(&legs[0])));
                continue;
            };
            let a = alg.mul(&NcPoly::word(u.clone()), &img);
            for (v, x) in a.terms() {
                t.add_term(vec![v.clone(), legs[1].clone()], k * x);
            }
        }
        t
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// `T(ψ)(c) = (id ⊗ ε) ψ(1 ⊗ c)`, tabulated on `source` into `target`.
pub fn koppinen_t(
    psi: &TensorEndo,
    c: &HopfStructure,
    source: Vec<Word>,
    target: Vec<Word>,
) -> Result<LinMap, GaloisError> {
    let mut err = None;
    let out = LinMap::from_fn(source, target, |w| {
        let mut p = NcPoly::zero();
        match psi.apply_pair(&Word::empty(), w) {
            Some(t) => {
                for (legs, k) in t.terms() {
                    let e: Scalar = c.epsilon_word(&legs[1]);
                    p.add_term(legs[0].clone(), k * &e);
                }
            }
            None => err = Some(GaloisError::OutsideTruncation(c.fmt_word(w))),
        }
        p
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}
