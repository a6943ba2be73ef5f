use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::testutil::{pres, slq2, taft};

fn alg(p: crate::presentation::Presentation) -> Algebra {
    Algebra::new(Arc::new(p))
}

#[test]
fn componentwise_product() {
    let a = alg(slq2());
    let p = &a.pres;
    let w = |s: &str| p.word(s).unwrap();
    let s = TensorElement::pure(vec![w("a"), w("a")]);
    let t = TensorElement::pure(vec![w("b"), w("c")]);
    let st = s.tensor_mul(&t, &[&a, &a]).unwrap();
    assert_eq!(st, TensorElement::pure(vec![w("a*b"), w("a*c")]));
    assert_eq!(TensorElement::one(2).tensor_mul(&st, &[&a, &a]).unwrap(), st);
    assert!(matches!(
        s.tensor_mul(&TensorElement::one(3), &[&a, &a]),
        Err(TensorError::Arity { .. })
    ));
}

#[test]
fn switch_and_range() {
    let a = alg(slq2());
    let w = |s: &str| a.pres.word(s).unwrap();
    let x = TensorElement::pure(vec![w("a"), w("b*d")]);
    assert_eq!(x.switch(1, 2).unwrap(), TensorElement::pure(vec![w("b*d"), w("a")]));
    assert!(x.switch(1, 3).is_err());
    assert!(x.switch(2, 2).is_err());
}

#[test]
fn taft_balanced_dimension() {
    let a = alg(taft());
    let p = &a.pres;
    let b = vec![NcPoly::one(), p.mono("a^2"), p.mono("a^3*b")];
    let bs = BalancedSpace::new(&a, &b, 8, 0);
    assert_eq!(bs.raw_dim(), 64);
    assert_eq!(bs.dim(), 16);
    let w = |s: &str| p.word(s).unwrap();
    let lhs = bs.project(&TensorElement::pure(vec![w("a^2"), w("a")])).unwrap();
    let rhs = bs.project(&TensorElement::pure(vec![w("1"), w("a^3")])).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn trivial_subalgebra_is_unquotiented() {
    let a = alg(taft());
    let bs = BalancedSpace::new(&a, &[NcPoly::one()], 8, 0);
    assert_eq!(bs.dim(), 64);
    let a = alg(slq2());
    let bs = BalancedSpace::new(&a, &[NcPoly::one()], 1, 1);
    let n0 = 1;
    let n1 = 4;
    let n2 = 9;
    assert_eq!(bs.dim(), n0 * (n0 + n1 + n2) + n1 * (n0 + n1) + n2 * n0);
}

#[test]
fn group_algebra_over_itself() {
    let a = alg(pres(&["g"], &[("g^2", &[(Scalar::one(), "1")])]).unwrap());
    let b = vec![NcPoly::one(), a.pres.mono("g")];
    let bs = BalancedSpace::new(&a, &b, 2, 0);
    assert_eq!(bs.dim(), 2);
    let w = |s: &str| a.pres.word(s).unwrap();
    let x = bs.project(&TensorElement::pure(vec![w("g"), w("g")])).unwrap();
    let y = bs.project(&TensorElement::pure(vec![w("1"), w("1")])).unwrap();
    assert_eq!(x, y);
}

#[test]
fn projection_outside_truncation() {
    let a = alg(slq2());
    let bs = BalancedSpace::new(&a, &[NcPoly::one()], 1, 0);
    let w = |s: &str| a.pres.word(s).unwrap();
    assert!(matches!(
        bs.project(&TensorElement::pure(vec![w("a"), w("b")])),
        Err(TensorError::OutsideTruncation(_))
    ));
}

fn taft_tensor() -> impl Strategy<Value = TensorElement> {
    let basis = taft().basis_up_to(8);
    proptest::collection::vec((0..8usize, 0..8usize, 0..8usize, -3i64..4), 1..5).prop_map(move |v| {
        let mut t = TensorElement::zero(3);
        for (i, j, k, c) in v {
            t.add_term(
                vec![basis[i].clone(), basis[j].clone(), basis[k].clone()],
                Scalar::from_int(c),
            );
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tensor_mul_associative(x in taft_tensor(), y in taft_tensor(), z in taft_tensor()) {
        let a = alg(taft());
        let legs = [&a, &a, &a];
        let l = x.tensor_mul(&y, &legs).unwrap().tensor_mul(&z, &legs).unwrap();
        let r = x.tensor_mul(&y.tensor_mul(&z, &legs).unwrap(), &legs).unwrap();
        prop_assert_eq!(l, r);
        prop_assert_eq!(TensorElement::one(3).tensor_mul(&x, &legs).unwrap(), x.clone());
    }

    #[test]
    fn switch_involution(x in taft_tensor()) {
        prop_assert_eq!(x.switch(1, 3).unwrap().switch(1, 3).unwrap(), x.clone());
        prop_assert_eq!(x.switch(2, 3).unwrap().switch(2, 3).unwrap(), x);
    }

    #[test]
    fn projection_is_linear(x in taft_tensor(), y in taft_tensor()) {
        let a = alg(taft());
        let p = &a.pres;
        let bs = BalancedSpace::new(&a, &[NcPoly::one(), p.mono("a^2")], 8, 0);
        let cut = |t: &TensorElement| t.expand_leg(2, |_| TensorElement::scalar(Scalar::one()));
        let (x, y) = (cut(&x), cut(&y));
        let sum = bs.project(&x.add(&y)).unwrap();
        prop_assert_eq!(sum, bs.project(&x).unwrap().add(&bs.project(&y).unwrap()));
    }
}
