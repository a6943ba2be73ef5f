use std::cmp::Reverse;
use std::collections::HashMap;

use crate::exactfield::{SpanReducer, SparseVec};
use crate::presentation::{Algebra, NcPoly, Word};

use super::TensorElement;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("arity mismatch: expected {expected}, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("leg indices ({i}, {j}) out of range for arity {arity}")]
    LegIndex { i: usize, j: usize, arity: usize },
    #[error("tensor {0} lies outside the truncation")]
    OutsideTruncation(String),
}

/// `A ⊗_B A` restricted to pairs of total length at most `degree + slack`.
pub struct BalancedSpace {
    alg: Algebra,
    degree: usize,
    slack: usize,
    b_basis: Vec<NcPoly>,
    pairs: Vec<(Word, Word)>,
    index: HashMap<(Word, Word), usize>,
    relations: Vec<SparseVec>,
    reducer: SpanReducer,
    reps: Vec<usize>,
    rep_index: HashMap<usize, usize>,
}

impl BalancedSpace {
    /// Builds the quotient by the span of `u·m ⊗ v − u ⊗ m·v` for `m` in
    /// `b_basis` and every such element whose terms stay in the truncation.
    pub fn new(alg: &Algebra, b_basis: &[NcPoly], degree: usize, slack: usize) -> BalancedSpace {
        let n = degree + slack;
        let words = alg.pres.basis_up_to(n);
        let mut pairs: Vec<(Word, Word)> = Vec::new();
        for u in &words {
            for v in &words {
                if u.len() + v.len() <= n {
                    pairs.push((u.clone(), v.clone()));
                }
            }
        }
        // long pairs and long left legs come first so they become pivots and
        // representatives stay short
        pairs.sort_by(|a, b| {
            let ka = (Reverse(a.0.len() + a.1.len()), Reverse(a.0.clone()), Reverse(a.1.clone()));
            let kb = (Reverse(b.0.len() + b.1.len()), Reverse(b.0.clone()), Reverse(b.1.clone()));
            ka.cmp(&kb)
        });
        let index: HashMap<(Word, Word), usize> =
            pairs.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
        let mut reducer = SpanReducer::new();
        let mut relations = Vec::new();
        let b_nontrivial: Vec<&NcPoly> = b_basis
            .iter()
            .filter(|m| !m.is_zero() && m.as_word() != Some(&Word::empty()))
            .collect();
        let mut left_cache: HashMap<(usize, Word), NcPoly> = HashMap::new();
        let mut right_cache: HashMap<(usize, Word), NcPoly> = HashMap::new();
        for (mi, m) in b_nontrivial.iter().enumerate() {
            for (u, v) in &pairs {
                let um = left_cache
                    .entry((mi, u.clone()))
                    .or_insert_with(|| alg.mul(&NcPoly::word(u.clone()), m))
                    .clone();
                let mv = right_cache
                    .entry((mi, v.clone()))
                    .or_insert_with(|| alg.mul(m, &NcPoly::word(v.clone())))
                    .clone();
                let mut entries = Vec::new();
                let mut inside = true;
                for (w, c) in um.terms() {
                    match index.get(&(w.clone(), v.clone())) {
                        Some(&k) => entries.push((k, c.clone())),
                        None => inside = false,
                    }
                }
                for (w, c) in mv.terms() {
                    match index.get(&(u.clone(), w.clone())) {
                        Some(&k) => entries.push((k, -c)),
                        None => inside = false,
                    }
                }
                if !inside {
                    continue;
                }
                let rel = SparseVec::from_pairs(entries);
                if rel.is_zero() {
                    continue;
                }
                let _ = reducer.insert(&rel);
                relations.push(rel);
            }
        }
        let reps: Vec<usize> = (0..pairs.len()).filter(|&k| !reducer.is_pivot(k)).collect();
        let rep_index = reps.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        BalancedSpace {
            alg: alg.clone(),
            degree,
            slack,
            b_basis: b_basis.to_vec(),
            pairs,
            index,
            relations,
            reducer,
            reps,
            rep_index,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn slack(&self) -> usize {
        self.slack
    }

    pub fn truncation(&self) -> usize {
        self.degree + self.slack
    }

    pub fn b_basis(&self) -> &[NcPoly] {
        &self.b_basis
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn raw_dim(&self) -> usize {
        self.pairs.len()
    }

    /// Representative pairs indexing the quotient coordinates.
    pub fn representatives(&self) -> Vec<(Word, Word)> {
        self.reps.iter().map(|&k| self.pairs[k].clone()).collect()
    }

    pub fn representative(&self, coord: usize) -> &(Word, Word) {
        &self.pairs[self.reps[coord]]
    }

    /// Spanning set of the truncated balancing relations, as tensors.
    pub fn relations(&self) -> Vec<TensorElement> {
        self.relations
            .iter()
            .map(|r| {
                let mut t = TensorElement::zero(2);
                for (k, c) in r.iter() {
                    let (u, v) = &self.pairs[*k];
                    t.add_term(vec![u.clone(), v.clone()], c.clone());
                }
                t
            })
            .collect()
    }

    fn raw_vec(&self, raw: &TensorElement) -> Result<SparseVec, TensorError> {
        if raw.arity() != 2 {
            return Err(TensorError::Arity {
                expected: 2,
                found: raw.arity(),
            });
        }
        let mut entries = Vec::with_capacity(raw.len());
        for (legs, c) in raw.terms() {
            let key = (legs[0].clone(), legs[1].clone());
            match self.index.get(&key) {
                Some(&k) => entries.push((k, c.clone())),
                None => {
                    let names = self.alg.pres.gens();
                    return Err(TensorError::OutsideTruncation(format!(
                        "{} (x) {}",
                        key.0.display(names),
                        key.1.display(names)
                    )));
                }
            }
        }
        Ok(SparseVec::from_pairs(entries))
    }

    /// Quotient coordinates of `raw`.
    pub fn project(&self, raw: &TensorElement) -> Result<SparseVec, TensorError> {
        let v = self.raw_vec(raw)?;
        let rem = self.reducer.reduce(&v).remainder;
        Ok(SparseVec::from_pairs(
            rem.iter().map(|(k, c)| (self.rep_index[k], c.clone())),
        ))
    }

    /// Whether `raw` vanishes in the quotient.
    pub fn is_zero(&self, raw: &TensorElement) -> Result<bool, TensorError> {
        Ok(self.project(raw)?.is_zero())
    }

    /// The representative tensor of a coordinate vector.
    pub fn lift(&self, coords: &SparseVec) -> TensorElement {
        let mut t = TensorElement::zero(2);
        for (i, c) in coords.iter() {
            let (u, v) = self.representative(*i);
            t.add_term(vec![u.clone(), v.clone()], c.clone());
        }
        t
    }

    /// Display of a quotient element as `Σ c·u ⊗_B v`.
    pub fn fmt_coords(&self, coords: &SparseVec) -> String {
        if coords.is_zero() {
            return "0".into();
        }
        let names = self.alg.pres.gens();
        let t = self.lift(coords);
        let s = t.display(&[names, names]).to_string();
        s.replace(" (x) ", " (x)_B ")
    }

    pub fn contains_pair(&self, u: &Word, v: &Word) -> bool {
        self.index.contains_key(&(u.clone(), v.clone()))
    }

    /// Coordinates of all raw pairs of total length at most `len`, for
    /// restricting checks to a lower filtration level.
    pub fn pairs_up_to(&self, len: usize) -> Vec<(Word, Word)> {
        let mut v: Vec<(Word, Word)> = self
            .pairs
            .iter()
            .filter(|(u, w)| u.len() + w.len() <= len)
            .cloned()
            .collect();
        v.sort();
        v
    }
}
