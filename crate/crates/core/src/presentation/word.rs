use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::exactfield::Scalar;

pub type Gen = u16;

/// A word in the generators. Ordered degree-lexicographically: shorter words
/// first, ties broken by generator declaration order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: Gen) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Position of the first occurrence of `pat`.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.0.len() > self.0.len() {
            return None;
        }
        (0..=self.0.len() - pat.0.len()).find(|&p| self.0[p..].starts_with(&pat.0))
    }

    pub fn contains(&self, pat: &Word) -> bool {
        self.find(pat).is_some()
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        let letters = &self.word.0;
        let mut k = 0;
        let mut first = true;
        while k < letters.len() {
            let g = letters[k];
            let mut run = 1;
            while k + run < letters.len() && letters[k + run] == g {
                run += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let name = self.names.get(g as usize).map_or("?", |s| s.as_str());
            if run > 1 {
                write!(f, "{name}^{run}")?;
            } else {
                write!(f, "{name}")?;
            }
            k += run;
        }
        Ok(())
    }
}

/// A finite linear combination of words with nonzero coefficients.
///
/// Values returned by [`super::Presentation`] operations have every word in
/// normal form; raw inputs to `normal_form` may not.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        NcPoly::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        NcPoly::term(Scalar::one(), w)
    }

    pub fn gen(g: Gen) -> Self {
        NcPoly::word(Word::gen(g))
    }

    pub fn constant(c: Scalar) -> Self {
        NcPoly::term(c, Word::empty())
    }

    pub fn term(c: Scalar, w: Word) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(it: I) -> Self {
        let mut p = NcPoly::zero();
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn max_len(&self) -> usize {
        self.leading().map_or(0, |(w, _)| w.len())
    }

    /// The single word with coefficient 1, if that is all there is.
    pub fn as_word(&self) -> Option<&Word> {
        match self.terms.iter().next() {
            Some((w, c)) if self.terms.len() == 1 && c.is_one() => Some(w),
            _ => None,
        }
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.add_term(w.clone(), -c);
        }
        p
    }

    pub fn neg(&self) -> NcPoly {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, s: &Scalar) -> NcPoly {
        if s.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        }
    }

    /// Free (unreduced) product.
    pub fn free_mul(&self, other: &NcPoly) -> NcPoly {
        let mut p = NcPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                p.add_term(u.concat(v), a * b);
            }
        }
        p
    }

    pub fn map_coeffs<E>(&self, f: impl Fn(&Scalar) -> Result<Scalar, E>) -> Result<NcPoly, E> {
        let mut p = NcPoly::zero();
        for (w, c) in &self.terms {
            p.add_term(w.clone(), f(c)?);
        }
        Ok(p)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a NcPoly,
    names: &'a [String],
}

/// Writes `c·body` as a signed summand; shared with tensor display.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &Scalar,
    body: &str,
    body_is_one: bool,
) -> fmt::Result {
    let cs = c.to_string();
    let (neg, mag) = match cs.strip_prefix('-') {
        Some(rest) if !rest.contains(" + ") && !rest.contains(" - ") => (true, rest.to_string()),
        _ => (false, cs),
    };
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, "{}", if neg { " - " } else { " + " })?;
    }
    let mag = if mag.contains(' ') { format!("({mag})") } else { mag };
    if body_is_one {
        write!(f, "{mag}")
    } else if mag == "1" {
        write!(f, "{body}")
    } else {
        write!(f, "{mag}*{body}")
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.poly.terms.iter().rev().enumerate() {
            let body = w.display(self.names).to_string();
            write_term(f, k == 0, c, &body, w.is_empty())?;
        }
        Ok(())
    }
}
