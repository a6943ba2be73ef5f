use crate::comodule::{AlgebraMap, Coaction, CoinvariantBasis};
use crate::exactfield::{Indexer, SpanReducer, SparseVec};
use crate::hopfcore::HopfStructure;
use crate::presentation::Word;
use crate::tensorspace::{BalancedSpace, TensorElement};
use crate::verdict::Verdict;

use super::{canonical_map, chi_pair, exact_length, target_pairs, GaloisCertificate, GaloisError};

/// `χ : A ⊗ A → A ⊗ H` reaches every `u ⊗ h` with `|u| + |h| ≤ d` from
/// pairs of total length at most `d + slack`.
pub fn check_free(c: &Coaction, d: usize, slack: usize) -> Verdict {
    let (d, slack) = match exact_length(c) {
        Some(n) => (n, 0),
        None => (d, slack),
    };
    let words = c.basis_up_to(d + slack);
    let mut idx: Indexer<Vec<Word>> = Indexer::new();
    let mut red = SpanReducer::new();
    for u in &words {
        for v in &words {
            if u.len() + v.len() <= d + slack {
                let _ = red.insert(&idx.vec(chi_pair(c, u, v).terms()));
            }
        }
    }
    for (u, h) in target_pairs(c, d) {
        let ok = idx
            .get(&vec![u.clone(), h.clone()])
            .map(|k| red.contains(&SparseVec::unit(k)))
            .unwrap_or(false);
        if !ok {
            return Verdict::fail("free", format!("{} (x) {}", c.pres().fmt_word(&u), c.hopf().fmt_word(&h)));
        }
    }
    Verdict::pass("free").with_detail(format!("degree {d}, slack {slack}"))
}

/// Kernel of `p ↦ (μ(p), χ(p))` on pairs of length at most `d`, compared
/// with the span of `ub ⊗ v − u ⊗ bv`.
#[derive(Clone, Debug)]
pub struct ExactnessReport {
    pub kernel_dim: usize,
    /// How many kernel vectors already vanish in `A ⊗_B A`.
    pub balanced_dim: usize,
    pub verdict: Verdict,
}

pub fn check_exact(c: &Coaction, b: &CoinvariantBasis, d: usize, slack: usize) -> ExactnessReport {
    let (d, slack) = match exact_length(c) {
        Some(n) => (n, 0),
        None => (d, slack),
    };
    let space = BalancedSpace::new(c.source(), &b.basis, d, slack);
    let pairs: Vec<(Word, Word)> = space.pairs_up_to(d);
    let mut idx: Indexer<Vec<Word>> = Indexer::new();
    let mut red = SpanReducer::new();
    let mut kernel_dim = 0;
    let mut balanced_dim = 0;
    let mut witness = None;
    for (u, v) in &pairs {
        let mut y = TensorElement::zero(2);
        for (t, k) in chi_pair(c, u, v).terms() {
            y.add_term(t.clone(), k.clone());
        }
        // μ lands in a one-leg key so it never collides with χ
        let mut keys: Vec<(Vec<Word>, crate::exactfield::Scalar)> =
            y.terms().map(|(t, k)| (t.clone(), k.clone())).collect();
        for (w, k) in c.source().mul_words(u, v).terms() {
            keys.push((vec![w.clone()], k.clone()));
        }
        let vec = idx.vec(keys.iter().map(|(t, k)| (t, k)));
        if let Err(rel) = red.insert(&vec) {
            kernel_dim += 1;
            let mut t = TensorElement::zero(2);
            for (k, x) in rel.iter() {
                let (a, bb) = &pairs[*k];
                t.add_term(vec![a.clone(), bb.clone()], x.clone());
            }
            match space.project(&t) {
                Ok(x) if x.is_zero() => balanced_dim += 1,
                Ok(x) => {
                    if witness.is_none() {
                        witness = Some(space.fmt_coords(&x));
                    }
                }
                Err(e) => {
                    if witness.is_none() {
                        witness = Some(e.to_string());
                    }
                }
            }
        }
    }
    let verdict = Verdict::from_witness("exact", witness)
        .with_detail(format!("kernel {kernel_dim}, balanced {balanced_dim}, degree {d}, slack {slack}"));
    ExactnessReport { kernel_dim, balanced_dim, verdict }
}

/// Freeness, exactness and the Hopf–Galois property of `(id ⊗ π)Δ`.
#[derive(Debug)]
pub struct QpbReport {
    pub coaction: Coaction,
    pub coinvariants: CoinvariantBasis,
    pub certificate: GaloisCertificate,
    pub free: Verdict,
    pub exact: ExactnessReport,
    pub hopf_galois: Verdict,
}

impl QpbReport {
    pub fn verdicts(&self) -> Vec<Verdict> {
        vec![self.free.clone(), self.exact.verdict.clone(), self.hopf_galois.clone()]
    }

    pub fn pass(&self) -> bool {
        self.verdicts().iter().all(|v| v.pass)
    }
}

pub fn certify_quantum_principal_bundle(
    h: &HopfStructure,
    hp: &HopfStructure,
    pi: &AlgebraMap,
    d: usize,
    slack: usize,
) -> Result<QpbReport, GaloisError> {
    let c = Coaction::induced(h, hp, pi)?;
    let cd = match c.pres().max_normal_len() {
        Some(n) => n,
        None => d,
    };
    let b = c.coinvariants(cd);
    let certificate = canonical_map(&c, &b, d, slack)?;
    let free = check_free(&c, d, slack);
    let exact = check_exact(&c, &b, d, slack);
    let hopf_galois = certificate
        .well_defined
        .clone()
        .and(certificate.injective.clone())
        .and(certificate.surjective.clone())
        .renamed("hopf-galois");
    Ok(QpbReport { coaction: c, coinvariants: b, certificate, free, exact, hopf_galois })
}
