//! Right coactions `A → A ⊗ H`, coinvariants, induced and graded coactions,
//! and actions transposed through a pairing.

mod action;
mod morphism;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::exactfield::{Indexer, Scalar, SpanReducer};
use crate::hopfcore::{HopfError, HopfStructure};
use crate::presentation::{Algebra, NcPoly, Presentation, Word};
use crate::tensorspace::TensorElement;
use crate::verdict::Verdict;

pub use action::HopfAction;
pub use morphism::AlgebraMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComoduleError {
    #[error("{name}: expected {expected} generator images, got {got}")]
    Arity { name: String, expected: usize, got: usize },
    #[error("{name}: not a bialgebra map at {witness}")]
    NotHomomorphism { name: String, witness: String },
    #[error("{name}: rule {rule} is not homogeneous")]
    Inhomogeneous { name: String, rule: String },
    #[error("{name}: {what}")]
    Invalid { name: String, what: String },
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// `δ : A → A ⊗ H` given on generators of `A` and extended as an algebra
/// morphism. Left coactions are stored switched, as right coactions of
/// `H^cop`.
#[derive(Clone)]
pub struct Coaction {
    name: String,
    source: Algebra,
    hopf: HopfStructure,
    images: Arc<Vec<TensorElement>>,
    left: bool,
    cache: Arc<Mutex<HashMap<Word, TensorElement>>>,
}

impl std::fmt::Debug for Coaction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Coaction")
            .field("name", &self.name)
            .field("hopf", &self.hopf)
            .field("left", &self.left)
            .finish()
    }
}

/// A basis of `A^{co H}` among elements of length at most `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinvariantBasis {
    pub degree: usize,
    pub basis: Vec<NcPoly>,
}

impl CoinvariantBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

impl Coaction {
    /// Right coaction with images in `A ⊗ H`.
    pub fn new(
        name: &str,
        source: Algebra,
        hopf: HopfStructure,
        images: Vec<TensorElement>,
    ) -> Result<Self, ComoduleError> {
        let n = source.pres.ngens();
        if images.len() != n {
            return Err(ComoduleError::Arity { name: name.into(), expected: n, got: images.len() });
        }
        if images.iter().any(|t| t.arity() != 2) {
            return Err(ComoduleError::Invalid { name: name.into(), what: "images must have two legs".into() });
        }
        Ok(Coaction {
            name: name.to_string(),
            source,
            hopf,
            images: Arc::new(images),
            left: false,
            cache: Arc::default(),
        })
    }

    /// Left coaction `α : A → H ⊗ A`, normalized to `A → A ⊗ H^cop`.
    pub fn new_left(
        name: &str,
        source: Algebra,
        hopf: HopfStructure,
        images: Vec<TensorElement>,
    ) -> Result<Self, ComoduleError> {
        let switched = images
            .iter()
            .map(|t| t.switch(1, 2))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| ComoduleError::Invalid { name: name.into(), what: e.to_string() })?;
        let mut c = Coaction::new(name, source, hopf.coopposite(), switched)?;
        c.left = true;
        Ok(c)
    }

    /// `δ = Δ` on `H` itself.
    pub fn regular(hopf: &HopfStructure) -> Result<Self, ComoduleError> {
        if hopf.is_structure_constants() {
            return Err(ComoduleError::Invalid {
                name: hopf.name().into(),
                what: "the regular coaction needs an algebra structure".into(),
            });
        }
        let images = (0..hopf.pres().ngens())
            .map(|g| hopf.try_delta_word(&Word::gen(g as u16)))
            .collect::<Result<Vec<_>, _>>()?;
        Coaction::new(&format!("Delta_{}", hopf.name()), hopf.algebra().clone(), hopf.clone(), images)
    }

    /// `δ = (id ⊗ π)Δ` for a bialgebra map `π : H → H'` (validated first).
    pub fn induced(h: &HopfStructure, hp: &HopfStructure, pi: &AlgebraMap) -> Result<Self, ComoduleError> {
        pi.validate_bialgebra_map(h, hp)?;
        let images = (0..h.pres().ngens())
            .map(|g| {
                h.delta_word(&Word::gen(g as u16))
                    .expand_leg(1, |w| TensorElement::from_polys(&[&pi.apply_word(w)]))
            })
            .collect();
        Coaction::new(&format!("(id (x) {})Delta", pi.name()), h.algebra().clone(), hp.clone(), images)
    }

    /// `δ(x) = x ⊗ g_x` for a grading of the generators by grouplike words of
    /// `H`. Every rule must be homogeneous.
    pub fn graded(source: Algebra, hopf: &HopfStructure, grades: Vec<Word>) -> Result<Self, ComoduleError> {
        let pres = source.pres.clone();
        let name = format!("{}-grading", hopf.name());
        if grades.len() != pres.ngens() {
            return Err(ComoduleError::Arity { name, expected: pres.ngens(), got: grades.len() });
        }
        let grouplike = |w: &Word| {
            hopf.try_delta_word(w).ok() == Some(TensorElement::pure(vec![w.clone(), w.clone()]))
                && hopf.epsilon_word(w).is_one()
        };
        if let Some(w) = grades.iter().find(|w| !grouplike(w)) {
            return Err(ComoduleError::Invalid { name, what: format!("{} is not grouplike", hopf.fmt_word(w)) });
        }
        let grade_of = |w: &Word| -> Option<Word> {
            let mut acc = NcPoly::one();
            for &g in w.letters() {
                acc = hopf.mul(&acc, &NcPoly::word(grades[g as usize].clone()));
            }
            acc.as_word().cloned()
        };
        for r in pres.rules() {
            let gl = grade_of(&r.lhs);
            if gl.is_none() || r.rhs.terms().any(|(w, _)| grade_of(w) != gl) {
                return Err(ComoduleError::Inhomogeneous {
                    name,
                    rule: format!("{} -> {}", pres.fmt_word(&r.lhs), pres.fmt_poly(&r.rhs)),
                });
            }
        }
        let images = grades
            .iter()
            .enumerate()
            .map(|(g, w)| TensorElement::pure(vec![Word::gen(g as u16), w.clone()]))
            .collect();
        Coaction::new(&name, source, hopf.clone(), images)
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn pres(&self) -> &Arc<Presentation> {
        &self.source.pres
    }

    /// The Hopf structure in force (`H^cop` for a left coaction).
    pub fn hopf(&self) -> &HopfStructure {
        &self.hopf
    }

    pub fn is_left(&self) -> bool {
        self.left
    }

    pub fn images(&self) -> &[TensorElement] {
        &self.images
    }

    /// Leg algebras for multiplying images: a word of an opposite algebra is
    /// still a product in the underlying multiplication.
    fn raw_legs(&self) -> (Algebra, Algebra) {
        let a = Algebra::new(self.source.pres.clone());
        let h = if self.source.op { self.hopf.algebra().opposite() } else { self.hopf.algebra().clone() };
        (a, h)
    }

    pub fn delta_word(&self, w: &Word) -> TensorElement {
        if let Some(t) = self.cache.lock().unwrap().get(w) {
            return t.clone();
        }
        let (a, h) = self.raw_legs();
        let t = match w.letters().split_last() {
            None => TensorElement::one(2),
            Some((last, init)) => self
                .delta_word(&Word(init.to_vec()))
                .tensor_mul(&self.images[*last as usize], &[&a, &h])
                .expect("arity 2"),
        };
        self.cache.lock().unwrap().insert(w.clone(), t.clone());
        t
    }

    pub fn delta(&self, p: &NcPoly) -> TensorElement {
        let mut out = TensorElement::zero(2);
        for (w, c) in p.terms() {
            out = out.add(&self.delta_word(w).scale(c));
        }
        out
    }

    pub fn basis_up_to(&self, d: usize) -> Vec<Word> {
        self.source.pres.basis_up_to(d)
    }

    pub fn fmt_tensor(&self, t: &TensorElement) -> String {
        let legs: Vec<&[String]> = vec![self.source.pres.gens(), self.hopf.pres().gens()];
        t.display(&legs).to_string()
    }

    /// Coassociativity, counit and multiplicativity on words of length at
    /// most `d` (pairs of combined length at most `d`).
    pub fn check_coaction(&self, d: usize) -> Vec<Verdict> {
        let basis = self.basis_up_to(d);
        let pres = self.source.pres.clone();
        let mut out = Vec::new();

        let mut wit = None;
        for w in &basis {
            let t = self.delta_word(w);
            let l = t.expand_leg(0, |x| self.delta_word(x));
            let r = t.expand_leg(1, |x| self.hopf.delta_word(x));
            if l != r {
                wit = Some(pres.fmt_word(w));
                break;
            }
        }
        out.push(Verdict::from_witness("coaction-coassociativity", wit));

        let wit = basis
            .iter()
            .find(|w| {
                let t = self.delta_word(w).expand_leg(1, |x| TensorElement::scalar(self.hopf.epsilon_word(x)));
                t.to_poly() != NcPoly::word((*w).clone())
            })
            .map(|w| pres.fmt_word(w));
        out.push(Verdict::from_witness("coaction-counit", wit));

        out.push(self.check_multiplicative(&basis, d));
        out
    }

    fn check_multiplicative(&self, basis: &[Word], d: usize) -> Verdict {
        let name = "coaction-homomorphism";
        let pres = self.source.pres.clone();
        for r in pres.rules() {
            let mut rhs = TensorElement::zero(2);
            for (w, c) in r.rhs.terms() {
                rhs = rhs.add(&self.delta_word(w).scale(c));
            }
            if self.delta_word(&r.lhs) != rhs {
                return Verdict::fail(name, format!("{} -> {}", pres.fmt_word(&r.lhs), pres.fmt_poly(&r.rhs)))
                    .with_detail("relation not preserved");
            }
        }
        let a = &self.source;
        let h = self.hopf.algebra();
        for u in basis {
            for v in basis {
                if u.len() + v.len() > d {
                    continue;
                }
                let uv = a.mul_words(u, v);
                let prod = self.delta_word(u).tensor_mul(&self.delta_word(v), &[a, h]).expect("arity 2");
                if self.delta(&uv) != prod {
                    return Verdict::fail(name, format!("{} * {}", pres.fmt_word(u), pres.fmt_word(v)));
                }
            }
        }
        Verdict::pass(name)
    }

    /// Kernel of `v ↦ δ(v) − v ⊗ 1` on the span of words of length at most
    /// `d`. Each basis element is scaled so its largest word has
    /// coefficient 1.
    pub fn coinvariants(&self, d: usize) -> CoinvariantBasis {
        let basis = self.basis_up_to(d);
        let mut idx: Indexer<Vec<Word>> = Indexer::new();
        let mut red = SpanReducer::new();
        let mut out = Vec::new();
        for w in &basis {
            let mut t = self.delta_word(w);
            t.add_term(vec![w.clone(), Word::empty()], -Scalar::one());
            let v = idx.vec(t.terms());
            if let Err(rel) = red.insert(&v) {
                let p = NcPoly::from_terms(rel.iter().map(|(k, c)| (basis[*k].clone(), c.clone())));
                let lead = p.terms().next_back().map(|(_, c)| c.clone()).expect("nonzero relation");
                out.push(p.scale(&lead.inv().expect("nonzero")));
            }
        }
        CoinvariantBasis { degree: d, basis: out }
    }

    /// Re-verifies `δ(b) = b ⊗ 1` exactly for each element.
    pub fn verify_coinvariant(&self, b: &NcPoly) -> bool {
        let mut one = TensorElement::zero(2);
        for (w, c) in b.terms() {
            one.add_term(vec![w.clone(), Word::empty()], c.clone());
        }
        self.delta(b) == one
    }
}

#[cfg(test)]
mod tests;
