use crate::comodule::Coaction;
use crate::presentation::{NcPoly, Word};
use crate::tensorspace::TensorElement;
use crate::verdict::Verdict;

use super::{chi_pair, target_pairs, GaloisError};

fn push(out: &mut TensorElement, a: &NcPoly, b: &NcPoly, k: &crate::exactfield::Scalar) {
    for (u, x) in a.terms() {
        for (v, y) in b.terms() {
            out.add_term(vec![u.clone(), v.clone()], &(k * x) * y);
        }
    }
}

/// `β(a ⊗ h) = a₀ ⊗ a₁ S(h)`
fn beta(c: &Coaction, t: &TensorElement, inverse: bool) -> Result<TensorElement, GaloisError> {
    let hopf = c.hopf();
    let h_alg = hopf.algebra();
    let mut out = TensorElement::zero(2);
    for (legs, k) in t.terms() {
        let hw = NcPoly::word(legs[1].clone());
        let s = if inverse { hopf.antipode_inverse_apply(&hw)? } else { hopf.antipode_apply(&hw)? };
        for (dl, x) in c.delta_word(&legs[0]).terms() {
            let a1 = NcPoly::word(dl[1].clone());
            let right = if inverse { h_alg.mul(&s, &a1) } else { h_alg.mul(&a1, &s) };
            push(&mut out, &NcPoly::word(dl[0].clone()), &right, &(k * x));
        }
    }
    Ok(out)
}

/// `can′(a ⊗ a′) = a₀ a′ ⊗ a₁`
fn can_prime(c: &Coaction, u: &Word, v: &Word) -> TensorElement {
    let mut out = TensorElement::zero(2);
    for (dl, x) in c.delta_word(u).terms() {
        let a = c.source().mul_words(&dl[0], v);
        push(&mut out, &a, &NcPoly::word(dl[1].clone()), x);
    }
    out
}

/// The bridge `β` between the two canonical maps: `β ∘ χ = can′` on pairs
/// of length at most `d`, and `β` is inverted by `a ⊗ h ↦ a₀ ⊗ S⁻¹(h) a₁`.
pub fn check_opposite_equivalence(c: &Coaction, d: usize) -> Result<Vec<Verdict>, GaloisError> {
    let words = c.basis_up_to(d);
    let mut wit = None;
    'outer: for u in &words {
        for v in &words {
            if u.len() + v.len() > d {
                continue;
            }
            if beta(c, &chi_pair(c, u, v), false)? != can_prime(c, u, v) {
                wit = Some(format!("{} (x) {}", c.pres().fmt_word(u), c.pres().fmt_word(v)));
                break 'outer;
            }
        }
    }
    let intertwines = Verdict::from_witness("bridge-intertwines", wit);
    let mut wit = None;
    for (u, h) in target_pairs(c, d) {
        let t = TensorElement::pure(vec![u.clone(), h.clone()]);
        if beta(c, &beta(c, &t, true)?, false)? != t || beta(c, &beta(c, &t, false)?, true)? != t {
            wit = Some(format!("{} (x) {}", c.pres().fmt_word(&u), c.hopf().fmt_word(&h)));
            break;
        }
    }
    let invertible = Verdict::from_witness("bridge-invertible", wit);
    Ok(vec![intertwines, invertible])
}

/// `(can ⊗ id)(id ⊗ can) = (id ⊗ can_H) can₁₃ (can ⊗ id)` on triples of
/// total length at most `d`, with `can₁₃(a ⊗ h ⊗ a′) = a a′₀ ⊗ h ⊗ a′₁`.
pub fn check_can13(c: &Coaction, d: usize) -> Verdict {
    let hopf = c.hopf();
    let alg = c.source();
    let words = c.basis_up_to(d);
    for u in &words {
        for v in &words {
            for w in &words {
                if u.len() + v.len() + w.len() > d {
                    continue;
                }
                // left: u ⊗ v w₀ ⊗ w₁, then χ on the first two legs
                let mut lhs = TensorElement::zero(3);
                for (l1, k1) in chi_pair(c, v, w).terms() {
                    for (l2, k2) in chi_pair(c, u, &l1[0]).terms() {
                        lhs.add_term(vec![l2[0].clone(), l2[1].clone(), l1[1].clone()], k1 * k2);
                    }
                }
                // right: u v₀ ⊗ v₁ ⊗ w, then can₁₃, then id ⊗ can_H
                let mut rhs = TensorElement::zero(3);
                for (l1, k1) in chi_pair(c, u, v).terms() {
                    for (l2, k2) in c.delta_word(w).terms() {
                        let a = alg.mul_words(&l1[0], &l2[0]);
                        for (l3, k3) in hopf.delta_word(&l2[1]).terms() {
                            let hh = hopf.algebra().mul_words(&l1[1], &l3[0]);
                            for (x, kx) in a.terms() {
                                for (y, ky) in hh.terms() {
                                    let k = &(&(&(k1 * k2) * k3) * kx) * ky;
                                    rhs.add_term(vec![x.clone(), y.clone(), l3[1].clone()], k);
                                }
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Verdict::fail(
                        "can13-diagram",
                        format!(
                            "{} (x) {} (x) {}",
                            c.pres().fmt_word(u),
                            c.pres().fmt_word(v),
                            c.pres().fmt_word(w)
                        ),
                    );
                }
            }
        }
    }
    Verdict::pass("can13-diagram")
}
