//! Bilinear pairings between bialgebras and the duality identities.

use std::collections::HashMap;

use crate::exactfield::{ExactMatrix, Scalar};
use crate::hopfcore::{FiniteGroup, HopfStructure};
use crate::presentation::{NcPoly, Word};
use crate::tensorspace::TensorElement;
use crate::verdict::Verdict;

/// `⟨·,·⟩ : H × H' → k`, given on pairs of basis words. Pairs not listed
/// pair to zero.
#[derive(Clone, Debug)]
pub struct Pairing {
    name: String,
    left: HopfStructure,
    right: HopfStructure,
    values: HashMap<(Word, Word), Scalar>,
}

impl Pairing {
    pub fn new(
        name: &str,
        left: HopfStructure,
        right: HopfStructure,
        values: HashMap<(Word, Word), Scalar>,
    ) -> Self {
        Pairing {
            name: name.to_string(),
            left,
            right,
            values: values.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    /// `⟨e_h, g⟩ = δ_{h,g}` between `O(G)` and `F[G]` as built by
    /// [`FiniteGroup`].
    pub fn for_group(g: &FiniteGroup, og: &HopfStructure, fg: &HopfStructure) -> Self {
        let n = g.order();
        let mut values = HashMap::new();
        for x in 0..n {
            values.insert((Word::empty(), g.element_word(x)), Scalar::one());
            for k in 1..n {
                if k == x {
                    values.insert((Word::gen(g.delta_gen(k)), g.element_word(x)), Scalar::one());
                }
            }
        }
        Pairing::new(&format!("<{}, {}>", og.name(), fg.name()), og.clone(), fg.clone(), values)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn left(&self) -> &HopfStructure {
        &self.left
    }

    pub fn right(&self) -> &HopfStructure {
        &self.right
    }

    pub fn is_finite(&self) -> bool {
        self.left.is_finite() && self.right.is_finite()
    }

    pub fn value_words(&self, h: &Word, k: &Word) -> Scalar {
        self.values
            .get(&(h.clone(), k.clone()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn value(&self, h: &NcPoly, k: &NcPoly) -> Scalar {
        let mut acc = Scalar::zero();
        for (u, c) in h.terms() {
            for (v, d) in k.terms() {
                let p = self.value_words(u, v);
                if !p.is_zero() {
                    acc = &acc + &(&(c * d) * &p);
                }
            }
        }
        acc
    }

    /// `⟨h ⊗ l, h' ⊗ l'⟩ = ⟨h, h'⟩⟨l, l'⟩`, extended bilinearly.
    pub fn value_tensor(&self, s: &TensorElement, t: &TensorElement) -> Scalar {
        let mut acc = Scalar::zero();
        for (ls, c) in s.terms() {
            for (lt, d) in t.terms() {
                let mut p = c * d;
                for (u, v) in ls.iter().zip(lt.iter()) {
                    p = &p * &self.value_words(u, v);
                    if p.is_zero() {
                        break;
                    }
                }
                acc = &acc + &p;
            }
        }
        acc
    }

    fn bases(&self, d: usize) -> (Vec<Word>, Vec<Word>) {
        let l = self.left.full_basis().unwrap_or_else(|| self.left.basis_up_to(d));
        let r = self.right.full_basis().unwrap_or_else(|| self.right.basis_up_to(d));
        (l, r)
    }

    /// Gram matrix on the full bases (finite case only).
    pub fn gram(&self) -> Option<ExactMatrix> {
        let l = self.left.full_basis()?;
        let r = self.right.full_basis()?;
        let mut m = ExactMatrix::zeros(l.len(), r.len());
        for (i, u) in l.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                m.set(i, j, self.value_words(u, v));
            }
        }
        Some(m)
    }

    /// The product, unit and antipode identities on basis words; on
    /// infinite-dimensional sides words of length at most `d`.
    pub fn check_duality(&self, d: usize) -> Vec<Verdict> {
        let (lb, rb) = self.bases(d);
        let (h, hp) = (&self.left, &self.right);
        let one = NcPoly::one();
        let mut out = Vec::new();

        let mut w = None;
        'a: for x in &lb {
            for y in &lb {
                let xy = h.mul(&NcPoly::word(x.clone()), &NcPoly::word(y.clone()));
                for z in &rb {
                    let lhs = self.value(&xy, &NcPoly::word(z.clone()));
                    let rhs = self.value_tensor(&TensorElement::pure(vec![x.clone(), y.clone()]), &hp.delta_word(z));
                    if lhs != rhs {
                        w = Some(format!("<{} * {}, {}>", h.fmt_word(x), h.fmt_word(y), hp.fmt_word(z)));
                        break 'a;
                    }
                }
            }
        }
        out.push(Verdict::from_witness("pairing-product-left", w));

        let mut w = None;
        'b: for x in &rb {
            for y in &rb {
                let xy = hp.mul(&NcPoly::word(x.clone()), &NcPoly::word(y.clone()));
                for z in &lb {
                    let lhs = self.value(&NcPoly::word(z.clone()), &xy);
                    let rhs = self.value_tensor(&h.delta_word(z), &TensorElement::pure(vec![x.clone(), y.clone()]));
                    if lhs != rhs {
                        w = Some(format!("<{}, {} * {}>", h.fmt_word(z), hp.fmt_word(x), hp.fmt_word(y)));
                        break 'b;
                    }
                }
            }
        }
        out.push(Verdict::from_witness("pairing-product-right", w));

        let w = rb
            .iter()
            .find(|z| self.value(&one, &NcPoly::word((*z).clone())) != hp.epsilon_word(z))
            .map(|z| format!("<1, {}>", hp.fmt_word(z)));
        out.push(Verdict::from_witness("pairing-counit-right", w));

        let w = lb
            .iter()
            .find(|z| self.value(&NcPoly::word((*z).clone()), &one) != h.epsilon_word(z))
            .map(|z| format!("<{}, 1>", h.fmt_word(z)));
        out.push(Verdict::from_witness("pairing-counit-left", w));

        if h.has_antipode() && hp.has_antipode() {
            out.push(self.antipode_identity(&lb, &rb, false));
            if h.has_antipode_inverse() && hp.has_antipode_inverse() {
                out.push(self.antipode_identity(&lb, &rb, true));
            }
        }
        out
    }

    fn antipode_identity(&self, lb: &[Word], rb: &[Word], inverse: bool) -> Verdict {
        let (h, hp) = (&self.left, &self.right);
        let name = if inverse { "pairing-antipode-inverse" } else { "pairing-antipode" };
        let apply = |s: &HopfStructure, w: &Word| {
            let p = NcPoly::word(w.clone());
            if inverse {
                s.antipode_inverse_apply(&p)
            } else {
                s.antipode_apply(&p)
            }
        };
        for x in lb {
            let sx = match apply(h, x) {
                Ok(p) => p,
                Err(e) => return Verdict::fail(name, e.to_string()),
            };
            for y in rb {
                let sy = match apply(hp, y) {
                    Ok(p) => p,
                    Err(e) => return Verdict::fail(name, e.to_string()),
                };
                if self.value(&sx, &NcPoly::word(y.clone())) != self.value(&NcPoly::word(x.clone()), &sy) {
                    return Verdict::fail(name, format!("<S({}), {}>", h.fmt_word(x), hp.fmt_word(y)));
                }
            }
        }
        Verdict::pass(name)
    }

    /// Full Gram rank on both sides. Indeterminate (failing) for pairings
    /// with an infinite-dimensional side.
    pub fn check_nondegenerate(&self) -> Verdict {
        let name = "pairing-nondegenerate";
        let Some(g) = self.gram() else {
            return Verdict::fail(name, "indeterminate at truncation");
        };
        let r = g.rank();
        let detail = format!("Gram rank {r}, dimensions {}x{}", g.rows(), g.cols());
        if r == g.rows() && r == g.cols() {
            Verdict::pass(name).with_detail(detail)
        } else {
            let k = g.kernel();
            let lb = self.right.full_basis().unwrap();
            let wit = match k.first() {
                Some(v) => self.right.fmt_poly(&NcPoly::from_terms(
                    v.iter().enumerate().map(|(i, c)| (lb[i].clone(), c.clone())),
                )),
                None => "left radical".into(),
            };
            Verdict::fail(name, wit).with_detail(detail)
        }
    }
}
