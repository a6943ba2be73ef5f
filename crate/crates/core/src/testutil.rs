use crate::exactfield::Scalar;
use crate::presentation::{NcPoly, Presentation, PresentationError, Rule};

pub(crate) fn pres(gens: &[&str], rules: &[(&str, &[(Scalar, &str)])]) -> Result<Presentation, PresentationError> {
    let names: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
    let tmp = Presentation::new("tmp", names.clone(), vec![], None).unwrap();
    let rules = rules
        .iter()
        .map(|(l, r)| Rule {
            lhs: tmp.word(l).unwrap(),
            rhs: NcPoly::from_terms(r.iter().map(|(c, w)| (tmp.word(w).unwrap(), c.clone()))),
        })
        .collect();
    Presentation::new("test", names, rules, None)
}


fn q() -> Scalar {
    Scalar::q()
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

pub(crate) fn slq2() -> Presentation {
    slq2_at(q())
}

/// SL_q(2) relations with `q` replaced by the given scalar.
pub(crate) fn slq2_at(q: Scalar) -> Presentation {
    let qi = q.inv().unwrap();
    pres(
        &["a", "b", "c", "d"],
        &[
            ("b*a", &[(q.clone(), "a*b")]),
            ("c*a", &[(q.clone(), "a*c")]),
            ("d*b", &[(q.clone(), "b*d")]),
            ("d*c", &[(q.clone(), "c*d")]),
            ("c*b", &[(q.clone(), "a*d"), (-q.clone(), "1")]),
            ("b*c", &[(q.clone(), "a*d"), (-q.clone(), "1")]),
            ("d*a", &[(int(1), "a*d"), (&q - &qi, "b*c")]),
        ],
    )
    .unwrap()
}

pub(crate) fn taft() -> Presentation {
    pres(
        &["a", "b"],
        &[
            ("a^4", &[(int(1), "1")]),
            ("b^2", &[]),
            ("b*a", &[(-Scalar::i(), "a*b")]),
        ],
    )
    .unwrap()
}

pub(crate) fn h4() -> Presentation {
    pres(
        &["g", "x"],
        &[("g^2", &[(int(1), "1")]), ("x^2", &[]), ("x*g", &[(int(-1), "g*x")])],
    )
    .unwrap()
}


use std::sync::Arc;

use crate::hopfcore::{HopfStructure, Level};
use crate::tensorspace::TensorElement;

fn tensor(p: &Presentation, terms: &[(Scalar, &str, &str)]) -> TensorElement {
    let mut t = TensorElement::zero(2);
    for (c, l, r) in terms {
        t.add_term(vec![p.word(l).unwrap(), p.word(r).unwrap()], c.clone());
    }
    t
}

fn poly(p: &Presentation, terms: &[(Scalar, &str)]) -> NcPoly {
    NcPoly::from_terms(terms.iter().map(|(c, w)| (p.word(w).unwrap(), c.clone())))
}

/// Sweedler's four-dimensional Hopf algebra.
pub(crate) fn sweedler() -> HopfStructure {
    let p = h4();
    let one = int(1);
    let delta = vec![
        tensor(&p, &[(one.clone(), "g", "g")]),
        tensor(&p, &[(one.clone(), "x", "1"), (one.clone(), "g", "x")]),
    ];
    let s = vec![poly(&p, &[(one.clone(), "g")]), poly(&p, &[(int(-1), "g*x")])];
    let sinv = vec![poly(&p, &[(one.clone(), "g")]), poly(&p, &[(one.clone(), "g*x")])];
    HopfStructure::new("H4", Arc::new(p), Level::Hopf, delta, vec![one, int(0)], Some(s))
        .unwrap()
        .with_antipode_inverse(sinv)
        .unwrap()
}

/// Polynomials in one primitive variable.
pub(crate) fn fx_primitive() -> HopfStructure {
    let p = pres(&["x"], &[]).unwrap();
    let delta = vec![tensor(&p, &[(int(1), "x", "1"), (int(1), "1", "x")])];
    let s = vec![poly(&p, &[(int(-1), "x")])];
    HopfStructure::new("F[x]", Arc::new(p), Level::Hopf, delta, vec![int(0)], Some(s.clone()))
        .unwrap()
        .with_antipode_inverse(s)
        .unwrap()
}

/// Polynomials in one grouplike variable: a bialgebra without antipode.
pub(crate) fn fx_grouplike() -> HopfStructure {
    let p = pres(&["X"], &[]).unwrap();
    let delta = vec![tensor(&p, &[(int(1), "X", "X")])];
    HopfStructure::new("F[X]", Arc::new(p), Level::Bialgebra, delta, vec![int(1)], None).unwrap()
}

pub(crate) fn slq2_hopf() -> HopfStructure {
    slq2_hopf_at(q())
}

pub(crate) fn slq2_hopf_at(q: Scalar) -> HopfStructure {
    let qi = q.inv().unwrap();
    let p = slq2_at(q.clone());
    let one = int(1);
    let delta = vec![
        tensor(&p, &[(one.clone(), "a", "a"), (one.clone(), "b", "c")]),
        tensor(&p, &[(one.clone(), "a", "b"), (one.clone(), "b", "d")]),
        tensor(&p, &[(one.clone(), "c", "a"), (one.clone(), "d", "c")]),
        tensor(&p, &[(one.clone(), "c", "b"), (one.clone(), "d", "d")]),
    ];
    let s = vec![
        poly(&p, &[(one.clone(), "d")]),
        poly(&p, &[(-q.clone(), "b")]),
        poly(&p, &[(-qi.clone(), "c")]),
        poly(&p, &[(one.clone(), "a")]),
    ];
    let sinv = vec![
        poly(&p, &[(one.clone(), "d")]),
        poly(&p, &[(-qi, "b")]),
        poly(&p, &[(-q, "c")]),
        poly(&p, &[(one.clone(), "a")]),
    ];
    let eps = vec![one.clone(), int(0), int(0), one];
    HopfStructure::new("SLq(2)", Arc::new(p), Level::Hopf, delta, eps, Some(s))
        .unwrap()
        .with_antipode_inverse(sinv)
        .unwrap()
}

/// Taft's eight-dimensional Hopf algebra.
pub(crate) fn taft_hopf() -> HopfStructure {
    let p = taft();
    let one = int(1);
    let delta = vec![
        tensor(&p, &[(one.clone(), "a", "a")]),
        tensor(&p, &[(one.clone(), "a", "b"), (one.clone(), "b", "a^3")]),
    ];
    let s = vec![poly(&p, &[(one.clone(), "a^3")]), poly(&p, &[(Scalar::i(), "b")])];
    let sinv = vec![poly(&p, &[(one.clone(), "a^3")]), poly(&p, &[(-Scalar::i(), "b")])];
    HopfStructure::new("H4'", Arc::new(p), Level::Hopf, delta, vec![one, int(0)], Some(s))
        .unwrap()
        .with_antipode_inverse(sinv)
        .unwrap()
}

/// `span{1, g}` with `g^2 = 1`, `g` grouplike.
pub(crate) fn z2_hopf() -> HopfStructure {
    let p = pres(&["g"], &[("g^2", &[(int(1), "1")])]).unwrap();
    let delta = vec![tensor(&p, &[(int(1), "g", "g")])];
    let s = vec![poly(&p, &[(int(1), "g")])];
    HopfStructure::new("H'", Arc::new(p), Level::Hopf, delta, vec![int(1)], Some(s.clone()))
        .unwrap()
        .with_antipode_inverse(s)
        .unwrap()
}

/// Polynomials in two commuting variables.
pub(crate) fn plane() -> Presentation {
    pres(&["X1", "X2"], &[("X2*X1", &[(int(1), "X1*X2")])]).unwrap()
}

pub(crate) fn tensor_in(p: &Presentation, h: &Presentation, terms: &[(Scalar, &str, &str)]) -> TensorElement {
    let mut t = TensorElement::zero(2);
    for (c, l, r) in terms {
        t.add_term(vec![p.word(l).unwrap(), h.word(r).unwrap()], c.clone());
    }
    t
}
