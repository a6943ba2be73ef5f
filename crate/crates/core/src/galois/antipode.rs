use crate::comodule::{Coaction, CoinvariantBasis};
use crate::hopfcore::HopfStructure;
use crate::presentation::{NcPoly, Word};
use crate::tensorspace::TensorElement;
use crate::verdict::Verdict;

use super::{canonical_map, GaloisError};

/// An antipode recovered as `S(h) = (id ⊗ ε) can⁻¹(1 ⊗ h)` from the
/// regular coaction.
#[derive(Clone, Debug)]
pub struct SynthesizedAntipode {
    pub values: Vec<(Word, NcPoly)>,
    /// `H` with the recovered antipode installed on generators.
    pub hopf: Option<HopfStructure>,
    pub verdict: Verdict,
}

pub fn antipode_from_can(h: &HopfStructure, d: usize, slack: usize) -> Result<SynthesizedAntipode, GaloisError> {
    let c = Coaction::regular(h)?;
    let b = CoinvariantBasis { degree: 0, basis: vec![NcPoly::one()] };
    let cert = canonical_map(&c, &b, d, slack)?;
    if !cert.bijective() {
        let w = cert
            .verdicts()
            .into_iter()
            .find(|v| !v.pass)
            .and_then(|v| v.witness)
            .unwrap_or_default();
        return Err(GaloisError::NoAntipode(w));
    }
    let mut values = Vec::new();
    for w in h.basis_up_to(d) {
        let x = cert.preimage(&TensorElement::pure(vec![Word::empty(), w.clone()]))?;
        let t = cert.space.lift(&x);
        let mut s = NcPoly::zero();
        for (legs, k) in t.terms() {
            s.add_term(legs[0].clone(), k * &h.epsilon_word(&legs[1]));
        }
        values.push((w, s));
    }
    let gens: Option<Vec<NcPoly>> = (0..h.pres().ngens())
        .map(|g| {
            let w = Word::gen(g as u16);
            values.iter().find(|(v, _)| *v == w).map(|(_, s)| s.clone())
        })
        .collect();
    let Some(gens) = gens else {
        return Ok(SynthesizedAntipode {
            values,
            hopf: None,
            verdict: Verdict::fail("antipode-from-can", "generators outside truncation"),
        });
    };
    let hs = h.clone().with_antipode(gens);
    let mut verdict = hs.check_antipode(d.min(cert.degree)).renamed("antipode-from-can");
    if verdict.pass {
        // the antihomomorphic extension must agree with every tabulated value
        for (w, s) in &values {
            if hs.antipode_apply(&NcPoly::word(w.clone()))? != *s {
                verdict = Verdict::fail("antipode-from-can", h.fmt_word(w));
                break;
            }
        }
    }
    Ok(SynthesizedAntipode { values, hopf: Some(hs), verdict })
}
