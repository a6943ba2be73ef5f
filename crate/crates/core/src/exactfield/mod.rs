//! Exact arithmetic in Q(i)(q) and linear algebra over it.

mod gaussian;
mod matrix;
mod poly;
mod scalar;
mod sparse;

pub use gaussian::Gaussian;
pub use matrix::{ExactMatrix, Rref};
pub use scalar::Scalar;
pub use sparse::{Indexer, Reduction, SpanReducer, SparseVec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> Scalar {
        Scalar::q()
    }

    #[test]
    fn i_squared() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn inverse_difference_normalizes() {
        let qq = q();
        let d = &qq - &qq.inv().unwrap();
        let x = d.inv().unwrap();
        let expect = Scalar::from_coeffs(
            vec![Gaussian::zero(), Gaussian::one()],
            vec![Gaussian::from_int(-1), Gaussian::zero(), Gaussian::one()],
        )
        .unwrap();
        assert_eq!(x, expect);
        assert_eq!(x.to_string(), "q/(q^2 - 1)");
        // entering it scaled still lands on the same canonical form
        let scaled = Scalar::from_coeffs(
            vec![Gaussian::zero(), Gaussian::from_int(3)],
            vec![Gaussian::from_int(-3), Gaussian::zero(), Gaussian::from_int(3)],
        )
        .unwrap();
        assert_eq!(scaled, x);
    }

    #[test]
    fn eval_examples() {
        let d = &q() - &q().inv().unwrap();
        assert_eq!(d.eval_q(&Gaussian::from_int(2)).unwrap(), Gaussian::from_ratio(3, 2));
        assert_eq!(q().pow(2).unwrap().eval_q(&Gaussian::from_int(3)).unwrap(), Gaussian::from_int(9));
        let pole = q().checked_div(&(&q() - &Scalar::one())).unwrap();
        assert!(matches!(pole.eval_q(&Gaussian::one()), Err(FieldError::Pole(_))));
        // q - 1/q at q = i is 2i
        let x = Scalar::from_coeffs(
            vec![Gaussian::zero(), Gaussian::one()],
            vec![Gaussian::from_int(-1), Gaussian::zero(), Gaussian::one()],
        )
        .unwrap();
        let back = &x * &(&q().pow(2).unwrap() - &Scalar::one());
        assert_eq!(back, q());
        let v = d.eval_q(&Gaussian::i()).unwrap();
        assert_eq!(v, &Gaussian::from_int(2) * &Gaussian::i());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(FieldError::DivisionByZero));
        assert_eq!(Scalar::zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn laurent_display() {
        let x = &(&q() * &Scalar::from_int(2)) - &q().pow(-1).unwrap();
        assert_eq!(x.to_string(), "2*q - q^-1");
        assert_eq!(Scalar::from_ratio(-3, 4).to_string(), "-3/4");
        let z = &Scalar::one() - &Scalar::i();
        assert_eq!(z.to_string(), "1 - i");
    }

    #[test]
    fn rref_small_cases() {
        let m = ExactMatrix::from_ints(&[&[1, 1], &[1, 1]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(m.kernel(), vec![vec![Scalar::from_int(-1), Scalar::one()]]);
        let id = ExactMatrix::identity(4);
        assert_eq!(id.rank(), 4);
        assert!(id.kernel().is_empty());
        assert_eq!(ExactMatrix::zeros(2, 3).kernel().len(), 3);
        let e1 = vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()];
        assert_eq!(id.solve(&e1).unwrap(), e1);
        let sing = ExactMatrix::from_ints(&[&[1, 1], &[1, 1]]);
        assert_eq!(
            sing.solve(&[Scalar::one(), Scalar::zero()]),
            Err(FieldError::Inconsistent)
        );
    }

    #[test]
    fn rref_with_q_entries() {
        let m = ExactMatrix::from_rows(vec![
            vec![q(), Scalar::one()],
            vec![Scalar::one(), q().inv().unwrap()],
        ])
        .unwrap();
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        let img = m.mul_vec(&k[0]).unwrap();
        assert!(img.iter().all(Scalar::is_zero));
    }

    fn small_gaussian() -> impl Strategy<Value = Gaussian> {
        (-4i64..5, 1i64..4, -3i64..4).prop_map(|(a, b, c)| {
            &Gaussian::from_ratio(a, b) + &(&Gaussian::from_int(c) * &Gaussian::i())
        })
    }

    fn small_poly() -> impl Strategy<Value = Vec<Gaussian>> {
        proptest::collection::vec(small_gaussian(), 0..4)
    }

    fn scalar() -> impl Strategy<Value = Scalar> {
        (small_poly(), small_poly()).prop_filter_map("zero denominator", |(n, d)| {
            Scalar::from_coeffs(n, d).ok()
        })
    }

    fn matrix() -> impl Strategy<Value = ExactMatrix> {
        (1usize..4, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-2i64..3, c), r).prop_map(|rows| {
                ExactMatrix::from_rows(
                    rows.into_iter()
                        .map(|row| {
                            row.into_iter()
                                .map(|x| if x == 2 { Scalar::q() } else { Scalar::from_int(x) })
                                .collect()
                        })
                        .collect(),
                )
                .unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a - &a, Scalar::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
            }
        }

        #[test]
        fn rref_idempotent(m in matrix()) {
            let r = m.rref();
            prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
            prop_assert_eq!(r.rank + m.kernel().len(), m.cols());
            for v in m.kernel() {
                prop_assert!(m.mul_vec(&v).unwrap().iter().all(Scalar::is_zero));
            }
        }
    }
}
