use crate::duality::Pairing;
use crate::exactfield::{Indexer, SpanReducer, SparseVec};
use crate::presentation::{NcPoly, Word};
use crate::verdict::Verdict;

use super::{Coaction, ComoduleError};

/// `ρ(h ⊗ a) = a₍₀₎⟨h, a₍₁₎⟩` for a coaction of `H'` and a pairing
/// `H × H' → k`.
#[derive(Clone, Debug)]
pub struct HopfAction {
    coaction: Coaction,
    pairing: Pairing,
}

impl HopfAction {
    pub fn transposed(coaction: &Coaction, pairing: &Pairing) -> Result<Self, ComoduleError> {
        if !std::sync::Arc::ptr_eq(coaction.hopf().pres(), pairing.right().pres()) {
            return Err(ComoduleError::Invalid {
                name: pairing.name().into(),
                what: format!("pairs with {}, but the coaction is by {}", pairing.right().name(), coaction.hopf().name()),
            });
        }
        Ok(HopfAction { coaction: coaction.clone(), pairing: pairing.clone() })
    }

    pub fn act_word(&self, h: &Word, a: &Word) -> NcPoly {
        let mut out = NcPoly::zero();
        for (legs, c) in self.coaction.delta_word(a).terms() {
            let p = self.pairing.value_words(h, &legs[1]);
            if !p.is_zero() {
                out.add_term(legs[0].clone(), c * &p);
            }
        }
        out
    }

    pub fn act(&self, h: &NcPoly, a: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (x, c) in h.terms() {
            for (y, d) in a.terms() {
                out = out.add(&self.act_word(x, y).scale(&(c * d)));
            }
        }
        out
    }

    fn acting_basis(&self, d: usize) -> Vec<Word> {
        let h = self.pairing.left();
        h.full_basis().unwrap_or_else(|| h.basis_up_to(d))
    }

    /// Unit, module, Hopf-module-algebra and `ρ(h ⊗ 1) = ε(h)1` laws on
    /// acting basis words and `A`-words of combined length at most `d`.
    pub fn check_hopf_action(&self, d: usize) -> Vec<Verdict> {
        let h = self.pairing.left();
        let hb = self.acting_basis(d);
        let ab = self.coaction.basis_up_to(d);
        let pres = self.coaction.pres().clone();
        let one = NcPoly::one();
        let mut out = Vec::new();

        let wit = ab
            .iter()
            .find(|a| self.act(&one, &NcPoly::word((*a).clone())) != NcPoly::word((*a).clone()))
            .map(|a| pres.fmt_word(a));
        out.push(Verdict::from_witness("action-unit", wit));

        let mut wit = None;
        'm: for x in &hb {
            for y in &hb {
                let xy = h.mul(&NcPoly::word(x.clone()), &NcPoly::word(y.clone()));
                for a in &ab {
                    let lhs = self.act(&xy, &NcPoly::word(a.clone()));
                    let rhs = self.act(&NcPoly::word(x.clone()), &self.act_word(y, a));
                    if lhs != rhs {
                        wit = Some(format!("{} * {} on {}", h.fmt_word(x), h.fmt_word(y), pres.fmt_word(a)));
                        break 'm;
                    }
                }
            }
        }
        out.push(Verdict::from_witness("action-associativity", wit));

        let alg = self.coaction.source();
        let mut wit = None;
        'h: for x in &hb {
            let dx = h.delta_word(x);
            for a in &ab {
                for b in &ab {
                    if a.len() + b.len() > d {
                        continue;
                    }
                    let lhs = self.act(&NcPoly::word(x.clone()), &alg.mul_words(a, b));
                    let mut rhs = NcPoly::zero();
                    for (legs, c) in dx.terms() {
                        let l = self.act_word(&legs[0], a);
                        let r = self.act_word(&legs[1], b);
                        rhs = rhs.add(&alg.mul(&l, &r).scale(c));
                    }
                    if lhs != rhs {
                        wit = Some(format!("{} on {} * {}", h.fmt_word(x), pres.fmt_word(a), pres.fmt_word(b)));
                        break 'h;
                    }
                }
            }
        }
        out.push(Verdict::from_witness("action-multiplicative", wit));

        let wit = hb
            .iter()
            .find(|x| self.act_word(x, &Word::empty()) != NcPoly::constant(h.epsilon_word(x)))
            .map(|x| h.fmt_word(x));
        out.push(Verdict::from_witness("action-unit-preserving", wit));
        out
    }

    /// `A^H = {a : ρ(h ⊗ a) = ε(h)a}` on words of length at most `d`.
    pub fn invariants(&self, d: usize) -> Vec<NcPoly> {
        let h = self.pairing.left();
        let hb = self.acting_basis(d);
        let ab = self.coaction.basis_up_to(d);
        let mut idx: Indexer<(usize, Word)> = Indexer::new();
        let mut red = SpanReducer::new();
        let mut out = Vec::new();
        for a in &ab {
            let mut pairs = Vec::new();
            for (i, x) in hb.iter().enumerate() {
                let v = self.act_word(x, a).sub(&NcPoly::word(a.clone()).scale(&h.epsilon_word(x)));
                for (w, c) in v.terms() {
                    pairs.push((idx.index(&(i, w.clone())), c.clone()));
                }
            }
            let v = SparseVec::from_pairs(pairs);
            if let Err(rel) = red.insert(&v) {
                let p = NcPoly::from_terms(rel.iter().map(|(k, c)| (ab[*k].clone(), c.clone())));
                let lead = p.terms().next_back().map(|(_, c)| c.clone()).expect("nonzero relation");
                out.push(p.scale(&lead.inv().expect("nonzero")));
            }
        }
        out
    }
}
