//! Tensor powers of presented algebras and truncated balanced tensor products.

mod balanced;

use std::collections::BTreeMap;
use std::fmt;

use crate::exactfield::Scalar;
use crate::presentation::{write_term, Algebra, NcPoly, Word};

pub use balanced::{BalancedSpace, TensorError};

/// A finite sum of scalar multiples of `k`-fold tensors of words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    arity: usize,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl TensorElement {
    pub fn zero(arity: usize) -> Self {
        TensorElement {
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ … ⊗ 1`
    pub fn one(arity: usize) -> Self {
        TensorElement::pure(vec![Word::empty(); arity])
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut t = TensorElement::zero(0);
        t.add_term(Vec::new(), c);
        t
    }

    pub fn pure(legs: Vec<Word>) -> Self {
        let mut t = TensorElement::zero(legs.len());
        t.add_term(legs, Scalar::one());
        t
    }

    /// `p₁ ⊗ p₂ ⊗ …`
    pub fn from_polys(polys: &[&NcPoly]) -> Self {
        let mut acc = TensorElement::scalar(Scalar::one());
        for p in polys {
            let mut next = TensorElement::zero(acc.arity + 1);
            for (legs, c) in &acc.terms {
                for (w, d) in p.terms() {
                    let mut l = legs.clone();
                    l.push(w.clone());
                    next.add_term(l, c * d);
                }
            }
            acc = next;
        }
        acc
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, legs: Vec<Word>, c: Scalar) {
        debug_assert_eq!(legs.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Vec<Word>, Scalar)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, legs: &[Word]) -> Scalar {
        self.terms.get(legs).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The value of an arity-0 element.
    pub fn as_scalar(&self) -> Option<Scalar> {
        (self.arity == 0).then(|| self.coeff(&[]))
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut t = self.clone();
        for (l, c) in &other.terms {
            t.add_term(l.clone(), c.clone());
        }
        t
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> TensorElement {
        if s.is_zero() {
            return TensorElement::zero(self.arity);
        }
        TensorElement {
            arity: self.arity,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c * s)).collect(),
        }
    }

    /// Componentwise product, leg `k` multiplied in `legs[k]`.
    pub fn tensor_mul(&self, other: &TensorElement, legs: &[&Algebra]) -> Result<TensorElement, TensorError> {
        if self.arity != other.arity || legs.len() != self.arity {
            return Err(TensorError::Arity {
                expected: self.arity,
                found: if self.arity != other.arity { other.arity } else { legs.len() },
            });
        }
        let mut out = TensorElement::zero(self.arity);
        for (l1, c1) in &self.terms {
            for (l2, c2) in &other.terms {
                let prods: Vec<NcPoly> = (0..self.arity)
                    .map(|k| legs[k].mul_words(&l1[k], &l2[k]))
                    .collect();
                let refs: Vec<&NcPoly> = prods.iter().collect();
                let c = c1 * c2;
                for (l, d) in TensorElement::from_polys(&refs).terms {
                    out.add_term(l, &c * &d);
                }
            }
        }
        Ok(out)
    }

    /// Exchanges legs `i` and `j` (1-based, `i < j`).
    pub fn switch(&self, i: usize, j: usize) -> Result<TensorElement, TensorError> {
        if i == 0 || i >= j || j > self.arity {
            return Err(TensorError::LegIndex { i, j, arity: self.arity });
        }
        let mut out = TensorElement::zero(self.arity);
        for (l, c) in &self.terms {
            let mut l = l.clone();
            l.swap(i - 1, j - 1);
            out.add_term(l, c.clone());
        }
        Ok(out)
    }

    /// Reorders legs: output leg `k` is input leg `perm[k]` (0-based).
    pub fn permute(&self, perm: &[usize]) -> TensorElement {
        assert_eq!(perm.len(), self.arity);
        let mut out = TensorElement::zero(self.arity);
        for (l, c) in &self.terms {
            out.add_term(perm.iter().map(|&p| l[p].clone()).collect(), c.clone());
        }
        out
    }

    /// Replaces leg `k` (0-based) by the legs of `f(word)`, linearly.
    pub fn expand_leg<F>(&self, k: usize, mut f: F) -> TensorElement
    where
        F: FnMut(&Word) -> TensorElement,
    {
        let mut cache: BTreeMap<Word, TensorElement> = BTreeMap::new();
        let mut out: Option<TensorElement> = None;
        for (l, c) in &self.terms {
            let img = cache.entry(l[k].clone()).or_insert_with(|| f(&l[k]));
            let acc = out.get_or_insert_with(|| TensorElement::zero(self.arity - 1 + img.arity));
            for (m, d) in &img.terms {
                let mut legs = Vec::with_capacity(acc.arity);
                legs.extend_from_slice(&l[..k]);
                legs.extend(m.iter().cloned());
                legs.extend_from_slice(&l[k + 1..]);
                acc.add_term(legs, c * d);
            }
        }
        out.unwrap_or_else(|| {
            let probe = f(&Word::empty());
            TensorElement::zero(self.arity - 1 + probe.arity)
        })
    }

    /// Applies a linear map to leg `k`.
    pub fn map_leg<F>(&self, k: usize, mut f: F) -> TensorElement
    where
        F: FnMut(&Word) -> NcPoly,
    {
        self.expand_leg(k, |w| TensorElement::from_polys(&[&f(w)]))
    }

    /// Multiplies legs `k` and `k+1` together in `alg`.
    pub fn multiply_legs(&self, k: usize, alg: &Algebra) -> TensorElement {
        let mut out = TensorElement::zero(self.arity - 1);
        for (l, c) in &self.terms {
            let prod = alg.mul_words(&l[k], &l[k + 1]);
            for (w, d) in prod.terms() {
                let mut legs = Vec::with_capacity(self.arity - 1);
                legs.extend_from_slice(&l[..k]);
                legs.push(w.clone());
                legs.extend_from_slice(&l[k + 2..]);
                out.add_term(legs, c * d);
            }
        }
        out
    }

    /// Collapses an arity-1 element to a polynomial.
    pub fn to_poly(&self) -> NcPoly {
        assert_eq!(self.arity, 1);
        NcPoly::from_terms(self.terms.iter().map(|(l, c)| (l[0].clone(), c.clone())))
    }

    pub fn max_total_len(&self) -> usize {
        self.terms
            .keys()
            .map(|l| l.iter().map(Word::len).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn display<'a>(&'a self, names: &'a [&'a [String]]) -> TensorDisplay<'a> {
        TensorDisplay { t: self, names }
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

pub struct TensorDisplay<'a> {
    t: &'a TensorElement,
    names: &'a [&'a [String]],
}

impl fmt::Display for TensorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.is_zero() {
            return write!(f, "0");
        }
        for (k, (legs, c)) in self.t.terms.iter().rev().enumerate() {
            let body: Vec<String> = legs
                .iter()
                .enumerate()
                .map(|(i, w)| w.display(self.names[i.min(self.names.len() - 1)]).to_string())
                .collect();
            write_term(f, k == 0, c, &body.join(" (x) "), legs.is_empty())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
