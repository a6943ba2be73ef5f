//! Coalgebra, bialgebra and Hopf structure maps and their axiom checks.

mod checks;
mod group;
mod linmap;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::exactfield::Scalar;
use crate::presentation::{Algebra, Gen, NcPoly, Presentation, Word};
use crate::tensorspace::TensorElement;

pub use checks::CancellationReport;
pub use group::FiniteGroup;
pub use linmap::LinMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Coalgebra,
    Bialgebra,
    Hopf,
}

impl Level {
    pub fn parse(s: &str) -> Option<Level> {
        match s {
            "coalgebra" => Some(Level::Coalgebra),
            "bialgebra" => Some(Level::Bialgebra),
            "hopf" => Some(Level::Hopf),
            _ => None,
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Coalgebra => "coalgebra",
            Level::Bialgebra => "bialgebra",
            Level::Hopf => "hopf",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("{0}: no antipode declared")]
    NoAntipode(String),
    #[error("{0}: no inverse antipode declared")]
    NoAntipodeInverse(String),
    #[error("{name}: {word} is not a basis element of the coalgebra")]
    NotInBasis { name: String, word: String },
    #[error("{0}")]
    Basis(String),
    #[error("{name}: missing {what} for generator `{gen}`")]
    Missing { name: String, what: String, gen: String },
}

/// How Δ and ε reach words beyond the generators.
#[derive(Clone, Debug)]
pub enum Extension {
    /// Δ, ε given on generators and extended multiplicatively.
    AlgebraMorphism {
        delta: Vec<TensorElement>,
        epsilon: Vec<Scalar>,
    },
    /// Δ, ε given on every element of a finite basis.
    StructureConstants {
        basis: Vec<Word>,
        delta: HashMap<Word, TensorElement>,
        epsilon: HashMap<Word, Scalar>,
    },
}

#[derive(Default)]
struct Caches {
    delta: Mutex<HashMap<Word, TensorElement>>,
    antipode: Mutex<HashMap<(bool, Word), NcPoly>>,
}

/// Structure maps on a presented algebra. The `op`/`cop` flags select the
/// opposite multiplication and the flipped coproduct without copying data.
#[derive(Clone)]
pub struct HopfStructure {
    name: String,
    alg: Algebra,
    level: Level,
    ext: Arc<Extension>,
    antipode: Option<Arc<Vec<NcPoly>>>,
    antipode_inv: Option<Arc<Vec<NcPoly>>>,
    cop: bool,
    caches: Arc<Caches>,
}

impl fmt::Debug for HopfStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfStructure")
            .field("name", &self.name)
            .field("level", &self.level)
            .field("op", &self.alg.op)
            .field("cop", &self.cop)
            .finish()
    }
}

impl HopfStructure {
    /// Δ and ε on generators, extended as algebra morphisms.
    pub fn new(
        name: &str,
        pres: Arc<Presentation>,
        level: Level,
        delta: Vec<TensorElement>,
        epsilon: Vec<Scalar>,
        antipode: Option<Vec<NcPoly>>,
    ) -> Result<Self, HopfError> {
        let n = pres.ngens();
        if delta.len() != n || epsilon.len() != n {
            return Err(HopfError::Basis(format!(
                "{name}: coproduct/counit must be given on all {n} generators"
            )));
        }
        if let Some(s) = &antipode {
            if s.len() != n {
                return Err(HopfError::Basis(format!("{name}: antipode must be given on all {n} generators")));
            }
        }
        if level == Level::Hopf && antipode.is_none() {
            return Err(HopfError::NoAntipode(name.to_string()));
        }
        Ok(HopfStructure {
            name: name.to_string(),
            alg: Algebra::new(pres),
            level,
            ext: Arc::new(Extension::AlgebraMorphism { delta, epsilon }),
            antipode: antipode.map(Arc::new),
            antipode_inv: None,
            cop: false,
            caches: Arc::default(),
        })
    }

    /// A coalgebra given by structure constants on an explicit basis.
    pub fn from_structure_constants(
        name: &str,
        pres: Arc<Presentation>,
        basis: Vec<Word>,
        delta: HashMap<Word, TensorElement>,
        epsilon: HashMap<Word, Scalar>,
    ) -> Result<Self, HopfError> {
        for w in &basis {
            if !delta.contains_key(w) || !epsilon.contains_key(w) {
                return Err(HopfError::Missing {
                    name: name.to_string(),
                    what: "coproduct/counit".into(),
                    gen: pres.fmt_word(w),
                });
            }
        }
        Ok(HopfStructure {
            name: name.to_string(),
            alg: Algebra::new(pres),
            level: Level::Coalgebra,
            ext: Arc::new(Extension::StructureConstants { basis, delta, epsilon }),
            antipode: None,
            antipode_inv: None,
            cop: false,
            caches: Arc::default(),
        })
    }

    pub fn with_antipode_inverse(mut self, inv: Vec<NcPoly>) -> Result<Self, HopfError> {
        if inv.len() != self.alg.pres.ngens() {
            return Err(HopfError::Basis(format!(
                "{}: inverse antipode must be given on all generators",
                self.name
            )));
        }
        self.antipode_inv = Some(Arc::new(inv));
        Ok(self)
    }

    /// Installs an antipode (for instance one synthesized from the canonical
    /// map) and raises the level to Hopf.
    pub fn with_antipode(mut self, s: Vec<NcPoly>) -> Self {
        self.antipode = Some(Arc::new(s));
        self.level = Level::Hopf;
        let delta = self.caches.delta.lock().unwrap().clone();
        self.caches = Arc::new(Caches {
            delta: Mutex::new(delta),
            antipode: Mutex::default(),
        });
        self
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn pres(&self) -> &Arc<Presentation> {
        &self.alg.pres
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn is_op(&self) -> bool {
        self.alg.op
    }

    pub fn is_cop(&self) -> bool {
        self.cop
    }

    pub fn extension(&self) -> &Extension {
        &self.ext
    }

    pub fn is_structure_constants(&self) -> bool {
        matches!(*self.ext, Extension::StructureConstants { .. })
    }

    pub fn has_antipode(&self) -> bool {
        self.antipode.is_some()
    }

    pub fn has_antipode_inverse(&self) -> bool {
        self.antipode_inv.is_some()
    }

    /// Declared antipode on generators (as seen through the op/cop flags).
    pub fn antipode_on_gens(&self) -> Option<&[NcPoly]> {
        self.antipode.as_deref().map(|v| v.as_slice())
    }

    pub fn antipode_inverse_on_gens(&self) -> Option<&[NcPoly]> {
        self.antipode_inv.as_deref().map(|v| v.as_slice())
    }

    /// Basis words of length at most `d` (the full basis in structure-constant
    /// mode).
    pub fn basis_up_to(&self, d: usize) -> Vec<Word> {
        match &*self.ext {
            Extension::StructureConstants { basis, .. } => basis.clone(),
            Extension::AlgebraMorphism { .. } => self.alg.pres.basis_up_to(d),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.is_structure_constants() || self.alg.pres.is_finite()
    }

    /// The full basis when finite-dimensional.
    pub fn full_basis(&self) -> Option<Vec<Word>> {
        match &*self.ext {
            Extension::StructureConstants { basis, .. } => Some(basis.clone()),
            Extension::AlgebraMorphism { .. } => self.alg.pres.full_basis(),
        }
    }

    pub fn mul(&self, a: &NcPoly, b: &NcPoly) -> NcPoly {
        self.alg.mul(a, b)
    }

    fn base_delta_word(&self, w: &Word) -> Result<TensorElement, HopfError> {
        if let Some(t) = self.caches.delta.lock().unwrap().get(w) {
            return Ok(t.clone());
        }
        let t = match &*self.ext {
            Extension::StructureConstants { delta, .. } => {
                delta.get(w).cloned().ok_or_else(|| HopfError::NotInBasis {
                    name: self.name.clone(),
                    word: self.alg.pres.fmt_word(w),
                })?
            }
            Extension::AlgebraMorphism { delta, .. } => {
                if w.is_empty() {
                    TensorElement::one(2)
                } else {
                    let (last, init) = w.letters().split_last().unwrap();
                    let head = self.base_delta_word(&Word(init.to_vec()))?;
                    let base = Algebra::new(self.alg.pres.clone());
                    head.tensor_mul(&delta[*last as usize], &[&base, &base])
                        .expect("arity 2")
                }
            }
        };
        self.caches.delta.lock().unwrap().insert(w.clone(), t.clone());
        Ok(t)
    }

    pub fn try_delta_word(&self, w: &Word) -> Result<TensorElement, HopfError> {
        let t = self.base_delta_word(w)?;
        Ok(if self.cop { t.switch(1, 2).unwrap() } else { t })
    }

    pub fn delta_word(&self, w: &Word) -> TensorElement {
        self.try_delta_word(w).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_delta(&self, h: &NcPoly) -> Result<TensorElement, HopfError> {
        let mut out = TensorElement::zero(2);
        for (w, c) in h.terms() {
            for (legs, d) in self.try_delta_word(w)?.into_terms() {
                out.add_term(legs, c * &d);
            }
        }
        Ok(out)
    }

    pub fn delta(&self, h: &NcPoly) -> TensorElement {
        self.try_delta(h).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_epsilon_word(&self, w: &Word) -> Result<Scalar, HopfError> {
        match &*self.ext {
            Extension::StructureConstants { epsilon, .. } => {
                epsilon.get(w).cloned().ok_or_else(|| HopfError::NotInBasis {
                    name: self.name.clone(),
                    word: self.alg.pres.fmt_word(w),
                })
            }
            Extension::AlgebraMorphism { epsilon, .. } => Ok(w
                .letters()
                .iter()
                .fold(Scalar::one(), |acc, &g| &acc * &epsilon[g as usize])),
        }
    }

    pub fn epsilon_word(&self, w: &Word) -> Scalar {
        self.try_epsilon_word(w).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn epsilon(&self, h: &NcPoly) -> Scalar {
        h.terms()
            .fold(Scalar::zero(), |acc, (w, c)| &acc + &(c * &self.epsilon_word(w)))
    }

    /// Generator values of the antipode in force (`S`, or `S⁻¹` for a single
    /// op or cop flip).
    fn antipode_table(&self, inverse: bool) -> Result<&[NcPoly], HopfError> {
        let table = if inverse { &self.antipode_inv } else { &self.antipode };
        match table {
            Some(t) => Ok(t.as_slice()),
            None if inverse => Err(HopfError::NoAntipodeInverse(self.name.clone())),
            None => Err(HopfError::NoAntipode(self.name.clone())),
        }
    }

    pub(crate) fn antihom_word(&self, w: &Word, inverse: bool) -> Result<NcPoly, HopfError> {
        let key = (inverse, w.clone());
        if let Some(p) = self.caches.antipode.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let table = self.antipode_table(inverse)?;
        let p = match w.letters().split_last() {
            None => NcPoly::one(),
            Some((last, init)) => {
                let rest = self.antihom_word(&Word(init.to_vec()), inverse)?;
                self.alg.pres.mul(&table[*last as usize], &rest)
            }
        };
        self.caches.antipode.lock().unwrap().insert(key, p.clone());
        Ok(p)
    }

    /// The antipode applied to a normal-form element.
    pub fn antipode_apply(&self, h: &NcPoly) -> Result<NcPoly, HopfError> {
        let mut out = NcPoly::zero();
        for (w, c) in h.terms() {
            let img = self.antihom_word(w, false)?;
            out = out.add(&img.scale(c));
        }
        Ok(out)
    }

    pub fn antipode_inverse_apply(&self, h: &NcPoly) -> Result<NcPoly, HopfError> {
        let mut out = NcPoly::zero();
        for (w, c) in h.terms() {
            let img = self.antihom_word(w, true)?;
            out = out.add(&img.scale(c));
        }
        Ok(out)
    }

    /// `Sⁿ(h)`
    pub fn antipode_power(&self, n: u32, h: &NcPoly) -> Result<NcPoly, HopfError> {
        let mut x = h.clone();
        for _ in 0..n {
            x = self.antipode_apply(&x)?;
        }
        Ok(x)
    }

    fn flipped(&self, op: bool, cop: bool) -> HopfStructure {
        let mut h = self.clone();
        if op {
            h.alg = h.alg.opposite();
        }
        if cop {
            h.cop = !h.cop;
        }
        std::mem::swap(&mut h.antipode, &mut h.antipode_inv);
        if h.level == Level::Hopf && h.antipode.is_none() {
            h.level = Level::Bialgebra;
        }
        // antipode cache is keyed by table; swap the flag meaning
        h.caches = Arc::new(Caches {
            delta: Mutex::new(self.caches.delta.lock().unwrap().clone()),
            antipode: Mutex::new(
                self.caches
                    .antipode
                    .lock()
                    .unwrap()
                    .iter()
                    .map(|((inv, w), p)| ((!inv, w.clone()), p.clone()))
                    .collect(),
            ),
        });
        h
    }

    /// Same coalgebra, reversed multiplication; `S⁻¹` becomes the antipode.
    pub fn opposite(&self) -> HopfStructure {
        let mut h = self.flipped(true, false);
        h.name = format!("{}^op", self.name);
        h
    }

    /// Same algebra, flipped coproduct; `S⁻¹` becomes the antipode.
    pub fn coopposite(&self) -> HopfStructure {
        let mut h = self.flipped(false, true);
        h.name = format!("{}^cop", self.name);
        h
    }

    pub fn fmt_poly(&self, p: &NcPoly) -> String {
        self.alg.pres.fmt_poly(p)
    }

    pub fn fmt_word(&self, w: &Word) -> String {
        self.alg.pres.fmt_word(w)
    }

    pub fn fmt_tensor(&self, t: &TensorElement) -> String {
        let names = self.alg.pres.gens();
        let legs: Vec<&[String]> = vec![names; t.arity().max(1)];
        t.display(&legs).to_string()
    }

    /// Generator index by name.
    pub fn gen(&self, name: &str) -> Option<Gen> {
        self.alg.pres.gen_index(name)
    }

    /// Reduced monomial by name (panics on unknown names).
    pub fn mono(&self, s: &str) -> NcPoly {
        self.alg.pres.mono(s)
    }

    /// Δ and ε on generators in algebra-morphism mode (before flags).
    pub fn generator_data(&self) -> Option<(&[TensorElement], &[Scalar])> {
        match &*self.ext {
            Extension::AlgebraMorphism { delta, epsilon } => Some((delta, epsilon)),
            Extension::StructureConstants { .. } => None,
        }
    }
}
