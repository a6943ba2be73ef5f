use proptest::prelude::*;

use super::*;
use crate::duality::Pairing;
use crate::hopfcore::FiniteGroup;
use crate::testutil::{plane, pres, slq2_hopf, slq2_hopf_at, sweedler, taft_hopf, tensor_in, z2_hopf};

fn passes(c: &Coaction, d: usize) {
    for v in c.check_coaction(d) {
        assert!(v.pass, "{}: {} at {:?}", c.name(), v.name, v.witness);
    }
}

fn show(c: &Coaction, b: &CoinvariantBasis) -> Vec<String> {
    b.basis.iter().map(|p| c.pres().fmt_poly(p)).collect()
}

#[test]
fn regular_coaction() {
    for h in [sweedler(), taft_hopf(), slq2_hopf()] {
        let c = Coaction::regular(&h).unwrap();
        passes(&c, 3);
        assert_eq!(show(&c, &c.coinvariants(3)), vec!["1"]);
    }
}

fn taft_to_z2() -> (HopfStructure, HopfStructure, AlgebraMap) {
    let h = taft_hopf();
    let hp = z2_hopf();
    let pi = AlgebraMap::new("pi", h.pres().clone(), hp.pres().clone(), vec![hp.mono("g"), NcPoly::zero()]).unwrap();
    (h, hp, pi)
}

#[test]
fn induced_taft_coaction() {
    let (h, hp, pi) = taft_to_z2();
    let c = Coaction::induced(&h, &hp, &pi).unwrap();
    passes(&c, 4);
    assert_eq!(c.fmt_tensor(&c.delta_word(&Word::gen(0))), "a (x) g");
    assert_eq!(c.fmt_tensor(&c.delta_word(&Word::gen(1))), "b (x) g");
    let b = c.coinvariants(4);
    assert_eq!(show(&c, &b), vec!["1", "a^2", "a*b", "a^3*b"]);
    for x in &b.basis {
        assert!(c.verify_coinvariant(x));
        for y in &b.basis {
            assert!(c.verify_coinvariant(&h.mul(x, y)));
        }
    }
}

#[test]
fn induced_rejects_non_morphism() {
    let h = taft_hopf();
    let hp = z2_hopf();
    let pi = AlgebraMap::new("bad", h.pres().clone(), hp.pres().clone(), vec![hp.mono("g"), hp.mono("g")]).unwrap();
    let e = Coaction::induced(&h, &hp, &pi).unwrap_err();
    assert!(matches!(e, ComoduleError::NotHomomorphism { .. }), "{e}");
}

#[test]
fn identity_induces_coproduct() {
    let h = sweedler();
    let id = AlgebraMap::identity(h.pres().clone());
    let c = Coaction::induced(&h, &h, &id).unwrap();
    for w in h.basis_up_to(3) {
        assert_eq!(c.delta_word(&w), h.delta_word(&w));
    }
}

#[test]
fn graded_coactions() {
    let z3 = FiniteGroup::cyclic(3);
    let fg = z3.group_algebra();
    let grades = (1..3).map(|k| z3.element_word(k)).collect();
    let c = Coaction::graded(fg.algebra().clone(), &fg, grades).unwrap();
    passes(&c, 3);
    assert_eq!(c.coinvariants(3).dim(), 1);

    let trunc = Arc::new(pres(&["X"], &[("X^3", &[])]).unwrap());
    let c = Coaction::graded(Algebra::new(trunc.clone()), &fg, vec![z3.element_word(1)]).unwrap();
    passes(&c, 4);
    assert_eq!(show(&c, &c.coinvariants(4)), vec!["1"]);

    let c = Coaction::graded(Algebra::new(trunc), &fg, vec![Word::empty()]).unwrap();
    assert_eq!(c.coinvariants(4).dim(), 3);

    let bad = Arc::new(pres(&["X"], &[("X^2", &[(Scalar::one(), "X")])]).unwrap());
    let e = Coaction::graded(Algebra::new(bad), &fg, vec![z3.element_word(1)]).unwrap_err();
    assert!(matches!(e, ComoduleError::Inhomogeneous { .. }));
}

fn plane_coaction() -> Coaction {
    let sl2 = slq2_hopf_at(Scalar::one());
    let a = Arc::new(plane());
    let hp = sl2.pres().clone();
    let one = Scalar::one();
    let images = vec![
        tensor_in(&hp, &a, &[(one.clone(), "a", "X1"), (one.clone(), "b", "X2")]),
        tensor_in(&hp, &a, &[(one.clone(), "c", "X1"), (one.clone(), "d", "X2")]),
    ];
    Coaction::new_left("alpha", Algebra::new(a), sl2, images).unwrap()
}

#[test]
fn quantum_plane_left_coaction() {
    let c = plane_coaction();
    assert!(c.is_left());
    passes(&c, 3);
    assert_eq!(show(&c, &c.coinvariants(3)), vec!["1"]);
}

#[test]
fn transposed_group_action() {
    let z3 = FiniteGroup::cyclic(3);
    let fg = z3.group_algebra();
    let og = z3.function_algebra();
    let grades = (1..3).map(|k| z3.element_word(k)).collect();
    let c = Coaction::graded(fg.algebra().clone(), &fg, grades).unwrap();
    let p = Pairing::for_group(&z3, &og, &fg);
    let act = HopfAction::transposed(&c, &p).unwrap();
    for v in act.check_hopf_action(3) {
        assert!(v.pass, "{}: {:?}", v.name, v.witness);
    }
    // ρ(e_h ⊗ a_g) = δ_{h,g} a_g
    for h in 0..3 {
        for g in 0..3 {
            let a = NcPoly::word(z3.element_word(g));
            let r = act.act(&z3.delta_function(h), &a);
            assert_eq!(r, if h == g { a.clone() } else { NcPoly::zero() });
        }
    }
    assert_eq!(act.invariants(3), c.coinvariants(3).basis);
}

#[test]
fn transposed_action_needs_matching_pairing() {
    let z3 = FiniteGroup::cyclic(3);
    let fg = z3.group_algebra();
    let c = Coaction::regular(&sweedler()).unwrap();
    let p = Pairing::for_group(&z3, &z3.function_algebra(), &fg);
    assert!(HopfAction::transposed(&c, &p).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn coinvariants_closed_under_products(i in 0usize..4, j in 0usize..4) {
        let (h, hp, pi) = taft_to_z2();
        let c = Coaction::induced(&h, &hp, &pi).unwrap();
        let b = c.coinvariants(4).basis;
        prop_assert!(c.verify_coinvariant(&h.mul(&b[i], &b[j])));
    }
}
