use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use super::scalar::Scalar;

/// Sparse vector: strictly increasing column indices, no zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec::default()
    }

    pub fn unit(col: usize) -> Self {
        SparseVec {
            entries: vec![(col, Scalar::one())],
        }
    }

    pub fn from_map(map: BTreeMap<usize, Scalar>) -> Self {
        SparseVec {
            entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Scalar)>>(it: I) -> Self {
        let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, v) in it {
            let e = map.entry(c).or_insert_with(Scalar::zero);
            *e = &*e + &v;
        }
        SparseVec::from_map(map)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn get(&self, col: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&col, |(c, _)| *c)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn scale(&self, s: &Scalar) -> SparseVec {
        if s.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(c, v)| (*c, v * s)).collect(),
        }
    }

    /// `self + s·other`
    pub fn axpy(&self, s: &Scalar, other: &SparseVec) -> SparseVec {
        if s.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() || j < other.entries.len() {
            let a = self.entries.get(i);
            let b = other.entries.get(j);
            match (a, b) {
                (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                    let v = va + &(s * vb);
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    i += 1;
                    j += 1;
                }
                (Some((ca, va)), Some((cb, _))) if ca < cb => {
                    out.push((*ca, va.clone()));
                    i += 1;
                }
                (Some((ca, va)), None) => {
                    out.push((*ca, va.clone()));
                    i += 1;
                }
                (_, Some((cb, vb))) => {
                    out.push((*cb, s * vb));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&-Scalar::one(), other)
    }

    pub fn to_dense(&self, n: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        for (c, s) in &self.entries {
            v[*c] = s.clone();
        }
        v
    }

    pub fn from_dense(v: &[Scalar]) -> SparseVec {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, s)| !s.is_zero())
                .map(|(c, s)| (c, s.clone()))
                .collect(),
        }
    }
}

/// Assigns consecutive column indices to keys on first sight.
#[derive(Clone, Debug)]
pub struct Indexer<K> {
    map: HashMap<K, usize>,
    keys: Vec<K>,
}

impl<K: Hash + Eq + Clone> Default for Indexer<K> {
    fn default() -> Self {
        Indexer {
            map: HashMap::new(),
            keys: Vec::new(),
        }
    }
}

impl<K: Hash + Eq + Clone> Indexer<K> {
    pub fn new() -> Self {
        Indexer::default()
    }

    pub fn index(&mut self, k: &K) -> usize {
        if let Some(&i) = self.map.get(k) {
            return i;
        }
        let i = self.keys.len();
        self.map.insert(k.clone(), i);
        self.keys.push(k.clone());
        i
    }

    pub fn get(&self, k: &K) -> Option<usize> {
        self.map.get(k).copied()
    }

    pub fn key(&self, i: usize) -> &K {
        &self.keys[i]
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Sparse vector of `(key, coefficient)` pairs, growing the index.
    pub fn vec<'a, I>(&mut self, it: I) -> SparseVec
    where
        K: 'a,
        I: IntoIterator<Item = (&'a K, &'a Scalar)>,
    {
        SparseVec::from_pairs(it.into_iter().map(|(k, c)| (self.index(k), c.clone())))
    }
}

struct BasisRow {
    row: SparseVec,
    combo: SparseVec,
}

/// Incremental echelon form of a growing set of sparse vectors.
///
/// Every stored row has its pivot at its smallest column with coefficient 1,
/// so the remainder of a reduction is canonical modulo the span. When inputs
/// are tagged, the reducer tracks how each row is built from them.
#[derive(Default)]
pub struct SpanReducer {
    rows: HashMap<usize, BasisRow>,
    inputs: usize,
}

/// Outcome of [`SpanReducer::reduce`].
pub struct Reduction {
    /// Canonical representative on non-pivot columns.
    pub remainder: SparseVec,
    /// Coefficients `c_j` over inputs with `v = remainder + Σ c_j input_j`.
    pub combination: SparseVec,
}

impl SpanReducer {
    pub fn new() -> Self {
        SpanReducer::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.keys().copied().collect();
        p.sort_unstable();
        p
    }

    pub fn reduce(&self, v: &SparseVec) -> Reduction {
        let mut rem = v.clone();
        let mut combo = SparseVec::new();
        let mut kept: Vec<(usize, Scalar)> = Vec::new();
        // sweep columns in increasing order; elimination only adds larger columns
        loop {
            let next = rem.entries.iter().position(|(c, _)| self.rows.contains_key(c));
            let Some(pos) = next else { break };
            kept.extend(rem.entries.drain(..pos));
            let (col, coef) = rem.entries[0].clone();
            let b = &self.rows[&col];
            rem = rem.axpy(&-coef.clone(), &b.row);
            combo = combo.axpy(&coef, &b.combo);
        }
        kept.extend(rem.entries);
        Reduction {
            remainder: SparseVec { entries: kept },
            combination: combo,
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).remainder.is_zero()
    }

    /// Adds `v` as input number `self.inputs()`. Returns `Ok(pivot)` when the
    /// span grows, or `Err(relation)` giving a vanishing combination of
    /// inputs that ends with this one.
    pub fn insert(&mut self, v: &SparseVec) -> Result<usize, SparseVec> {
        let idx = self.inputs;
        self.inputs += 1;
        let red = self.reduce(v);
        let combo = SparseVec::unit(idx).sub(&red.combination);
        match red.remainder.leading().cloned() {
            None => Err(combo),
            Some((col, lead)) => {
                let inv = lead.inv().expect("nonzero leading entry");
                self.rows.insert(
                    col,
                    BasisRow {
                        row: red.remainder.scale(&inv),
                        combo: combo.scale(&inv),
                    },
                );
                Ok(col)
            }
        }
    }

    /// Coefficients `c_j` with `Σ c_j input_j = v`, if `v` is in the span.
    pub fn express(&self, v: &SparseVec) -> Option<SparseVec> {
        let red = self.reduce(v);
        red.remainder.is_zero().then_some(red.combination)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(pairs: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_pairs(pairs.iter().map(|&(c, v)| (c, Scalar::from_int(v))))
    }

    #[test]
    fn relation_and_expression() {
        let mut r = SpanReducer::new();
        assert!(r.insert(&sv(&[(0, 1), (1, 1)])).is_ok());
        assert!(r.insert(&sv(&[(1, 1), (2, 1)])).is_ok());
        let rel = r.insert(&sv(&[(0, 1), (2, -1)])).unwrap_err();
        assert_eq!(rel, sv(&[(0, -1), (1, 1), (2, 1)]));
        let e = r.express(&sv(&[(0, 2), (1, 3), (2, 1)])).unwrap();
        assert_eq!(e, sv(&[(0, 2), (1, 1)]));
        assert!(r.express(&sv(&[(2, 1)])).is_none());
    }

    #[test]
    fn remainder_is_canonical() {
        let mut a = SpanReducer::new();
        let mut b = SpanReducer::new();
        let gens = [sv(&[(0, 1), (3, 2)]), sv(&[(0, 1), (1, 1)]), sv(&[(1, 2), (2, 5)])];
        for g in &gens {
            let _ = a.insert(g);
        }
        for g in gens.iter().rev() {
            let _ = b.insert(g);
        }
        let v = sv(&[(0, 7), (1, -1), (2, 4), (3, 1)]);
        assert_eq!(a.reduce(&v).remainder, b.reduce(&v).remainder);
    }
}
