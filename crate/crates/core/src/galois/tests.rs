use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::comodule::AlgebraMap;
use crate::exactfield::Scalar;
use crate::hopfcore::{FiniteGroup, HopfStructure, Level, LinMap};
use crate::presentation::Algebra;
use crate::testutil::{fx_grouplike, pres, slq2_hopf, sweedler, taft_hopf, z2_hopf};

fn laurent() -> HopfStructure {
    let one = Scalar::one();
    let p = Arc::new(pres(&["X", "Xi"], &[("X*Xi", &[(one.clone(), "")]), ("Xi*X", &[(one, "")])]).unwrap());
    let delta = vec![
        TensorElement::pure(vec![p.word("X").unwrap(), p.word("X").unwrap()]),
        TensorElement::pure(vec![p.word("Xi").unwrap(), p.word("Xi").unwrap()]),
    ];
    HopfStructure::new(
        "F[X,X^-1]",
        p.clone(),
        Level::Hopf,
        delta,
        vec![Scalar::one(), Scalar::one()],
        Some(vec![p.mono("Xi"), p.mono("X")]),
    )
    .unwrap()
    .with_antipode_inverse(vec![p.mono("Xi"), p.mono("X")])
    .unwrap()
}

fn unit_b() -> CoinvariantBasis {
    CoinvariantBasis { degree: 0, basis: vec![NcPoly::one()] }
}

fn taft_qpb() -> QpbReport {
    let h = taft_hopf();
    let hp = z2_hopf();
    let pi = AlgebraMap::new("pi", h.pres().clone(), hp.pres().clone(), vec![hp.mono("g"), NcPoly::zero()]).unwrap();
    certify_quantum_principal_bundle(&h, &hp, &pi, 4, 2).unwrap()
}

#[test]
fn group_algebra_can_is_bijective() {
    let fg = FiniteGroup::cyclic(2).group_algebra();
    let c = Coaction::regular(&fg).unwrap();
    let cert = canonical_map(&c, &unit_b(), 4, 2).unwrap();
    assert!(cert.exact);
    assert_eq!(cert.source_dim(), 4);
    assert_eq!(cert.target_dim, 4);
    assert_eq!(cert.rank, 4);
    assert!(cert.bijective(), "{cert:?}");
}

#[test]
fn laurent_canonical_map() {
    let h = laurent();
    let c = Coaction::regular(&h).unwrap();
    let x = h.pres().word("X").unwrap();
    let xi = h.pres().word("Xi").unwrap();
    let pow = |k: i32| -> Word {
        let w = if k >= 0 { &x } else { &xi };
        Word((0..k.unsigned_abs()).flat_map(|_| w.letters().to_vec()).collect())
    };
    for k in -2..=2 {
        for l in -2..=2 {
            let got = chi_pair(&c, &pow(k), &pow(l));
            assert_eq!(got, TensorElement::pure(vec![pow(k + l), pow(l)]));
        }
    }
    let cert = canonical_map(&c, &unit_b(), 2, 2).unwrap();
    assert!(cert.bijective(), "{cert:?}");
    let tau = cert.translation_tensor(&x).unwrap();
    assert_eq!(tau, TensorElement::pure(vec![xi.clone(), x.clone()]));
    let ex = check_exact(&c, &unit_b(), 2, 2);
    assert!(ex.verdict.pass);
    assert_eq!(ex.kernel_dim, ex.balanced_dim);
}

#[test]
fn taft_bundle() {
    let r = taft_qpb();
    assert_eq!(r.coinvariants.dim(), 4);
    assert_eq!(r.certificate.source_dim(), 16);
    assert_eq!(r.certificate.target_dim, 16);
    assert!(r.pass(), "{:?}", r.verdicts());
    let cert = &r.certificate;
    let p = cert.coaction.pres().clone();
    let g = z2_hopf().pres().word("g").unwrap();
    let a = p.word("a").unwrap();
    let a3 = p.word("a^3").unwrap();
    let a2 = p.word("a^2").unwrap();
    assert!(cert.translation_equals(&g, &TensorElement::pure(vec![a3, a])).unwrap());
    let wrong = TensorElement::pure(vec![a2.clone(), a2]);
    assert!(!cert.translation_equals(&g, &wrong).unwrap());
    assert!(cert.space.project(&wrong).unwrap() == cert.space.project(&TensorElement::one(2)).unwrap());
    assert!(check_can13(&r.coaction, 6).pass);
}

#[test]
fn truncated_polynomial_is_not_galois() {
    let z3 = FiniteGroup::cyclic(3);
    let fg = z3.group_algebra();
    let trunc = Arc::new(pres(&["X"], &[("X^3", &[])]).unwrap());
    let c = Coaction::graded(Algebra::new(trunc), &fg, vec![z3.element_word(1)]).unwrap();
    let b = c.coinvariants(2);
    let cert = canonical_map(&c, &b, 4, 2).unwrap();
    assert!(!cert.surjective.pass);
    assert!(!check_free(&c, 4, 2).pass);
    assert!(cert.translation(&Word::empty()).is_err());
}

#[test]
fn strongly_graded_group_algebras() {
    for n in 2..5 {
        let g = FiniteGroup::cyclic(n);
        let fg = g.group_algebra();
        let grades = (1..n).map(|k| g.element_word(k)).collect();
        let c = Coaction::graded(fg.algebra().clone(), &fg, grades).unwrap();
        let b = c.coinvariants(n);
        assert_eq!(b.dim(), 1);
        let cert = canonical_map(&c, &b, 2, 2).unwrap();
        assert!(cert.bijective(), "Z{n}: {cert:?}");
    }
}

#[test]
fn antipode_synthesis() {
    for h in [sweedler(), taft_hopf()] {
        let s = antipode_from_can(&h, 4, 2).unwrap();
        assert!(s.verdict.pass, "{}: {:?}", h.name(), s.verdict);
        for (w, v) in &s.values {
            assert_eq!(h.antipode_apply(&NcPoly::word(w.clone())).unwrap(), *v);
        }
    }
    let h = laurent();
    let s = antipode_from_can(&h, 2, 2).unwrap();
    assert!(s.verdict.pass);
    assert_eq!(s.values.iter().find(|(w, _)| w.len() == 1).map(|(_, v)| h.fmt_poly(v)).unwrap(), "Xi");
    let e = antipode_from_can(&fx_grouplike(), 3, 2).unwrap_err();
    assert!(matches!(e, GaloisError::NoAntipode(_)));
}

#[test]
fn slq2_antipode_synthesis() {
    let h = slq2_hopf();
    let s = antipode_from_can(&h, 1, 2).unwrap();
    assert!(s.verdict.pass, "{:?}", s.verdict);
    for (w, v) in &s.values {
        assert_eq!(h.antipode_apply(&NcPoly::word(w.clone())).unwrap(), *v);
    }
}

fn sweedler_pairs(h: &HopfStructure) -> Vec<(Word, Word)> {
    let b = h.full_basis().unwrap();
    b.iter().flat_map(|u| b.iter().map(move |v| (u.clone(), v.clone()))).collect()
}

#[test]
fn koppinen_maps() {
    let h = sweedler();
    let basis = h.full_basis().unwrap();
    let pairs = sweedler_pairs(&h);
    let id = LinMap::identity(basis.clone());
    let s = LinMap::from_fn(basis.clone(), basis.clone(), |w| h.antipode_apply(&NcPoly::word(w.clone())).unwrap())
        .unwrap();
    let ee = LinMap::unit_counit(&h, basis.clone());
    let r_id = koppinen_r(&id, h.algebra(), &h, pairs.clone()).unwrap();
    let c = Coaction::regular(&h).unwrap();
    let can_h = TensorEndo::from_fn(pairs.clone(), |u, v| chi_pair(&c, u, v)).unwrap();
    assert_eq!(r_id, can_h);
    assert!(koppinen_r(&ee, h.algebra(), &h, pairs.clone()).unwrap().is_identity());
    for phi in [&id, &s, &ee] {
        let r = koppinen_r(phi, h.algebra(), &h, pairs.clone()).unwrap();
        assert_eq!(koppinen_t(&r, &h, basis.clone(), basis.clone()).unwrap(), *phi);
    }
    assert_eq!(koppinen_t(&can_h, &h, basis.clone(), basis.clone()).unwrap(), id);
    let r_s = koppinen_r(&s, h.algebra(), &h, pairs.clone()).unwrap();
    let conv = s.convolve(&id, &h, h.algebra()).unwrap();
    let r_conv = koppinen_r(&conv, h.algebra(), &h, pairs.clone()).unwrap();
    assert_eq!(r_conv, r_id.compose(&r_s));
    assert!(r_s.compose(&r_id).is_identity());
    assert!(r_id.compose(&r_s).is_identity());
}

#[test]
fn opposite_equivalence() {
    for h in [sweedler(), taft_hopf(), laurent()] {
        let c = Coaction::regular(&h).unwrap();
        for v in check_opposite_equivalence(&c, 3).unwrap() {
            assert!(v.pass, "{}: {:?}", h.name(), v);
        }
    }
    let r = taft_qpb();
    for v in check_opposite_equivalence(&r.coaction, 4).unwrap() {
        assert!(v.pass, "{v:?}");
    }
}

#[test]
fn rejects_non_coinvariant_base() {
    let h = sweedler();
    let c = Coaction::regular(&h).unwrap();
    let b = CoinvariantBasis { degree: 1, basis: vec![NcPoly::one(), h.mono("g")] };
    assert!(matches!(canonical_map(&c, &b, 2, 2), Err(GaloisError::NotCoinvariant(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn can_of_translation_is_one_tensor(k in 0usize..8) {
        let r = taft_qpb();
        let cert = &r.certificate;
        let hw: Vec<Word> = z2_hopf().full_basis().unwrap();
        let h = &hw[k % hw.len()];
        let t = cert.translation_tensor(h).unwrap();
        prop_assert_eq!(cert.apply(&t), TensorElement::pure(vec![Word::empty(), h.clone()]));
    }
}
