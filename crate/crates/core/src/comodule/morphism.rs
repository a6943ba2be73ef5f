use std::sync::Arc;

use crate::hopfcore::HopfStructure;
use crate::presentation::{NcPoly, Presentation, Word};
use crate::tensorspace::TensorElement;

use super::ComoduleError;

/// An algebra map given on generators.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    name: String,
    source: Arc<Presentation>,
    target: Arc<Presentation>,
    images: Vec<NcPoly>,
}

impl AlgebraMap {
    pub fn new(
        name: &str,
        source: Arc<Presentation>,
        target: Arc<Presentation>,
        images: Vec<NcPoly>,
    ) -> Result<Self, ComoduleError> {
        if images.len() != source.ngens() {
            return Err(ComoduleError::Arity { name: name.into(), expected: source.ngens(), got: images.len() });
        }
        Ok(AlgebraMap { name: name.to_string(), source, target, images })
    }

    pub fn identity(pres: Arc<Presentation>) -> Self {
        let images = (0..pres.ngens()).map(|g| NcPoly::gen(g as u16)).collect();
        AlgebraMap { name: "id".into(), source: pres.clone(), target: pres, images }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Presentation> {
        &self.target
    }

    pub fn images(&self) -> &[NcPoly] {
        &self.images
    }

    /// Image of a (not necessarily reduced) word.
    pub fn apply_word(&self, w: &Word) -> NcPoly {
        w.letters()
            .iter()
            .fold(NcPoly::one(), |acc, &g| self.target.mul(&acc, &self.images[g as usize]))
    }

    pub fn apply(&self, p: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in p.terms() {
            out = out.add(&self.apply_word(w).scale(c));
        }
        out
    }

    /// First rewrite rule whose two sides have different images.
    pub fn check_rules(&self) -> Option<String> {
        self.source
            .rules()
            .iter()
            .find(|r| self.apply_word(&r.lhs) != self.apply(&r.rhs))
            .map(|r| format!("{} -> {}", self.source.fmt_word(&r.lhs), self.source.fmt_poly(&r.rhs)))
    }

    /// Rules, Δ and ε on generators, and the antipode when both sides
    /// declare one.
    pub fn validate_bialgebra_map(&self, h: &HopfStructure, hp: &HopfStructure) -> Result<(), ComoduleError> {
        let fail = |w: String| Err(ComoduleError::NotHomomorphism { name: self.name.clone(), witness: w });
        if let Some(w) = self.check_rules() {
            return fail(w);
        }
        let map_leg = |t: &TensorElement, k| t.expand_leg(k, |w| TensorElement::from_polys(&[&self.apply_word(w)]));
        for g in 0..self.source.ngens() {
            let w = Word::gen(g as u16);
            let name = self.source.fmt_word(&w);
            let lhs = map_leg(&map_leg(&h.delta_word(&w), 0), 1);
            if lhs != hp.try_delta(&self.images[g])? {
                return fail(format!("coproduct of {name}"));
            }
            if hp.epsilon(&self.images[g]) != h.epsilon_word(&w) {
                return fail(format!("counit of {name}"));
            }
            if h.has_antipode() && hp.has_antipode() {
                let l = self.apply(&h.antipode_apply(&NcPoly::word(w.clone()))?);
                if l != hp.antipode_apply(&self.images[g])? {
                    return fail(format!("antipode of {name}"));
                }
            }
        }
        Ok(())
    }
}
