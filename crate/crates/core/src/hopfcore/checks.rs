use crate::exactfield::{ExactMatrix, Indexer, Scalar, SpanReducer, SparseVec};
use crate::presentation::{NcPoly, Word};
use crate::tensorspace::TensorElement;
use crate::verdict::Verdict;

use super::{HopfError, HopfStructure, Level, LinMap};

/// Per-side verdicts of the cancellation property.
#[derive(Clone, Debug)]
pub struct CancellationReport {
    /// `(H ⊗ 1)Δ(H) = H ⊗ H`
    pub left: Verdict,
    /// `Δ(H)(1 ⊗ H) = H ⊗ H`
    pub right: Verdict,
}

impl CancellationReport {
    pub fn pass(&self) -> bool {
        self.left.pass && self.right.pass
    }
}

fn err_verdict(name: &str, e: HopfError) -> Verdict {
    Verdict::fail(name, e.to_string())
}

impl HopfStructure {
    fn raw_delta(&self, p: &NcPoly) -> Result<TensorElement, HopfError> {
        self.try_delta(p)
    }

    /// `(Δ ⊗ id)Δ = (id ⊗ Δ)Δ` on basis words of length at most `d`.
    pub fn check_coassoc(&self, d: usize) -> Verdict {
        let name = "coassociativity";
        for w in self.basis_up_to(d) {
            let run = || -> Result<bool, HopfError> {
                let t = self.try_delta_word(&w)?;
                let mut err = None;
                let l = t.expand_leg(0, |x| {
                    self.try_delta_word(x).unwrap_or_else(|e| {
                        err = Some(e);
                        TensorElement::zero(2)
                    })
                });
                let r = t.expand_leg(1, |x| {
                    self.try_delta_word(x).unwrap_or_else(|e| {
                        err = Some(e);
                        TensorElement::zero(2)
                    })
                });
                if let Some(e) = err {
                    return Err(e);
                }
                Ok(l == r)
            };
            match run() {
                Ok(true) => {}
                Ok(false) => return Verdict::fail(name, self.fmt_word(&w)),
                Err(e) => return err_verdict(name, e).with_detail(self.fmt_word(&w)),
            }
        }
        Verdict::pass(name)
    }

    /// `(id ⊗ ε)Δ = id = (ε ⊗ id)Δ` on basis words of length at most `d`.
    pub fn check_counit(&self, d: usize) -> Verdict {
        let name = "counit";
        for w in self.basis_up_to(d) {
            let t = match self.try_delta_word(&w) {
                Ok(t) => t,
                Err(e) => return err_verdict(name, e),
            };
            let mut bad = false;
            let eps = |x: &Word, bad: &mut bool| match self.try_epsilon_word(x) {
                Ok(s) => TensorElement::scalar(s),
                Err(_) => {
                    *bad = true;
                    TensorElement::scalar(Scalar::zero())
                }
            };
            let l = t.expand_leg(1, |x| eps(x, &mut bad)).to_poly();
            let r = t.expand_leg(0, |x| eps(x, &mut bad)).to_poly();
            let id = NcPoly::word(w.clone());
            if bad || l != id || r != id {
                return Verdict::fail(name, self.fmt_word(&w));
            }
        }
        Verdict::pass(name)
    }

    /// Δ and ε are unital algebra morphisms: the rewrite rules are respected
    /// and `Δ(uv) = Δ(u)Δ(v)`, `ε(uv) = ε(u)ε(v)` for `|u| + |v| ≤ d`.
    pub fn check_bialgebra(&self, d: usize) -> Verdict {
        let name = "bialgebra";
        if self.level < Level::Bialgebra || self.is_structure_constants() {
            return Verdict::fail(name, format!("declared level {} has no algebra structure", self.level));
        }
        let alg = self.algebra().clone();
        let one = NcPoly::one();
        if self.delta(&one) != TensorElement::one(2) || !self.epsilon(&one).is_one() {
            return Verdict::fail(name, "1");
        }
        let pres = self.pres().clone();
        for r in pres.rules() {
            let lhs = NcPoly::word(r.lhs.clone());
            let dl = self.raw_delta(&lhs);
            let dr = self.raw_delta(&r.rhs);
            let el = self.epsilon(&lhs);
            let er = self.epsilon(&r.rhs);
            let ok = matches!((dl, dr), (Ok(a), Ok(b)) if a == b) && el == er;
            if !ok {
                return Verdict::fail(
                    name,
                    format!("{} -> {}", pres.fmt_word(&r.lhs), pres.fmt_poly(&r.rhs)),
                )
                .with_detail("relation not preserved");
            }
        }
        let basis = self.basis_up_to(d);
        for u in &basis {
            for v in &basis {
                if u.len() + v.len() > d {
                    continue;
                }
                let uv = alg.mul_words(u, v);
                let du = self.delta_word(u);
                let dv = self.delta_word(v);
                let prod = du.tensor_mul(&dv, &[&alg, &alg]).expect("arity 2");
                if self.delta(&uv) != prod
                    || self.epsilon(&uv) != &self.epsilon_word(u) * &self.epsilon_word(v)
                {
                    return Verdict::fail(name, format!("{} * {}", self.fmt_word(u), self.fmt_word(v)));
                }
            }
        }
        Verdict::pass(name)
    }

    /// `μ(S ⊗ id)Δ = ηε = μ(id ⊗ S)Δ` on basis words of length at most `d`.
    pub fn check_antipode(&self, d: usize) -> Verdict {
        let name = "antipode";
        if !self.has_antipode() {
            return Verdict::fail(name, "no antipode declared");
        }
        let alg = self.algebra().clone();
        for w in self.basis_up_to(d) {
            let t = self.delta_word(&w);
            let expect = NcPoly::constant(self.epsilon_word(&w));
            let s = |x: &Word| self.antipode_apply(&NcPoly::word(x.clone())).unwrap();
            let l = t.map_leg(0, s).multiply_legs(0, &alg).to_poly();
            let r = t.map_leg(1, s).multiply_legs(0, &alg).to_poly();
            if l != expect || r != expect {
                return Verdict::fail(name, self.fmt_word(&w)).with_detail(format!(
                    "S*id = {}, id*S = {}, expected {}",
                    self.fmt_poly(&l),
                    self.fmt_poly(&r),
                    self.fmt_poly(&expect)
                ));
            }
        }
        Verdict::pass(name)
    }

    /// `S(uv) = S(v)S(u)`, including preservation of the rewrite rules.
    pub fn check_antihom(&self, d: usize) -> Verdict {
        let name = "antipode-antihomomorphism";
        if !self.has_antipode() {
            return Verdict::fail(name, "no antipode declared");
        }
        let pres = self.pres().clone();
        let alg = self.algebra().clone();
        for r in pres.rules() {
            let l = self.antihom_word(&r.lhs, false);
            let rr = r.rhs.terms().try_fold(NcPoly::zero(), |acc, (w, c)| {
                self.antihom_word(w, false).map(|p| acc.add(&p.scale(c)))
            });
            if !matches!((l, rr), (Ok(a), Ok(b)) if a == b) {
                return Verdict::fail(name, format!("{} -> {}", pres.fmt_word(&r.lhs), pres.fmt_poly(&r.rhs)))
                    .with_detail("relation not preserved");
            }
        }
        let basis = self.basis_up_to(d);
        for u in &basis {
            for v in &basis {
                if u.len() + v.len() > d {
                    continue;
                }
                let uv = alg.mul_words(u, v);
                let su = self.antipode_apply(&NcPoly::word(u.clone())).unwrap();
                let sv = self.antipode_apply(&NcPoly::word(v.clone())).unwrap();
                if self.antipode_apply(&uv).unwrap() != alg.mul(&sv, &su) {
                    return Verdict::fail(name, format!("{} * {}", self.fmt_word(u), self.fmt_word(v)));
                }
            }
        }
        Verdict::pass(name)
    }

    /// `(S ⊗ S)Δ(h) = τΔ(S(h))` and `ε(S(h)) = ε(h)`.
    pub fn check_anticohom(&self, d: usize) -> Verdict {
        let name = "antipode-anticohomomorphism";
        if !self.has_antipode() {
            return Verdict::fail(name, "no antipode declared");
        }
        for w in self.basis_up_to(d) {
            let h = NcPoly::word(w.clone());
            let s = |x: &Word| self.antipode_apply(&NcPoly::word(x.clone())).unwrap();
            let l = self.delta_word(&w).map_leg(0, s).map_leg(1, s);
            let sh = self.antipode_apply(&h).unwrap();
            let r = self.delta(&sh).switch(1, 2).unwrap();
            if l != r || self.epsilon(&sh) != self.epsilon(&h) {
                return Verdict::fail(name, self.fmt_word(&w));
            }
        }
        Verdict::pass(name)
    }

    /// The declared-level suite: coassociativity and counit, then the
    /// bialgebra and antipode identities when declared.
    pub fn check_level(&self, d: usize, level: Level) -> Vec<Verdict> {
        let mut out = vec![self.check_coassoc(d), self.check_counit(d)];
        if level >= Level::Bialgebra {
            out.push(self.check_bialgebra(d));
        }
        if level >= Level::Hopf {
            out.push(self.check_antipode(d));
        }
        out
    }

    /// Basis words `g` with `Δ(g) = g ⊗ g` and `ε(g) = 1`.
    pub fn find_grouplikes(&self, d: usize) -> Vec<Word> {
        self.basis_up_to(d)
            .into_iter()
            .filter(|w| {
                self.try_delta_word(w).ok() == Some(TensorElement::pure(vec![w.clone(), w.clone()]))
                    && self.try_epsilon_word(w).map(|e| e.is_one()).unwrap_or(false)
            })
            .collect()
    }

    /// A basis of `{x : Δx = x ⊗ 1 + 1 ⊗ x}` inside the span of basis words
    /// of length at most `d`.
    pub fn find_primitives(&self, d: usize) -> Vec<NcPoly> {
        let basis = self.basis_up_to(d);
        let mut idx: Indexer<Vec<Word>> = Indexer::new();
        let mut red = SpanReducer::new();
        let mut out = Vec::new();
        let one = Word::empty();
        for w in &basis {
            let mut t = self.delta_word(w);
            t.add_term(vec![w.clone(), one.clone()], -Scalar::one());
            t.add_term(vec![one.clone(), w.clone()], -Scalar::one());
            let v = idx.vec(t.terms());
            if let Err(rel) = red.insert(&v) {
                out.push(NcPoly::from_terms(rel.iter().map(|(k, c)| (basis[*k].clone(), c.clone()))));
            }
        }
        out
    }

    /// Cancellation property at truncation: every `u ⊗ v` with
    /// `|u| + |v| ≤ d` lies in the span of `(w ⊗ 1)Δ(z)` (left) resp.
    /// `Δ(z)(1 ⊗ w)` (right) with `|w| + |z| ≤ d + slack`.
    pub fn check_cancellation(&self, d: usize, slack: usize) -> CancellationReport {
        let alg = self.algebra().clone();
        let n = d + slack;
        let basis = self.basis_up_to(n);
        let side = |left: bool| -> Verdict {
            let name = if left { "cancellation-left" } else { "cancellation-right" };
            let mut idx: Indexer<Vec<Word>> = Indexer::new();
            let mut red = SpanReducer::new();
            for w in &basis {
                for z in &basis {
                    if w.len() + z.len() > n {
                        continue;
                    }
                    let dz = self.delta_word(z);
                    let t = if left {
                        TensorElement::pure(vec![w.clone(), Word::empty()]).tensor_mul(&dz, &[&alg, &alg])
                    } else {
                        dz.tensor_mul(&TensorElement::pure(vec![Word::empty(), w.clone()]), &[&alg, &alg])
                    }
                    .expect("arity 2");
                    let v = idx.vec(t.terms());
                    let _ = red.insert(&v);
                }
            }
            for u in &basis {
                for v in &basis {
                    if u.len() + v.len() > d {
                        continue;
                    }
                    let key = vec![u.clone(), v.clone()];
                    let target = match idx.get(&key) {
                        Some(k) => SparseVec::unit(k),
                        None => {
                            return Verdict::fail(name, format!("{} (x) {}", self.fmt_word(u), self.fmt_word(v)))
                        }
                    };
                    if !red.contains(&target) {
                        return Verdict::fail(name, format!("{} (x) {}", self.fmt_word(u), self.fmt_word(v)));
                    }
                }
            }
            Verdict::pass(name).with_detail(format!("degree {d}, slack {slack}"))
        };
        let left = side(true);
        let right = side(false);
        CancellationReport { left, right }
    }

    /// All linear maps `S` on a finite basis solving both antipode equations:
    /// one solution (if any) and the dimension of the solution space's
    /// direction.
    pub fn antipode_solutions(&self) -> Result<(Option<LinMap>, usize), HopfError> {
        let basis = self
            .full_basis()
            .ok_or_else(|| HopfError::Basis(format!("{} is not finite-dimensional", self.name)))?;
        let alg = self.algebra().clone();
        let n = basis.len();
        let pos = |w: &Word| basis.iter().position(|b| b == w);
        // unknown s[i][j] = coefficient of basis[i] in S(basis[j]) at column i*n+j
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let mut rhs: Vec<Scalar> = Vec::new();
        for c in &basis {
            let dc = self.delta_word(c);
            for left in [true, false] {
                let mut eq = vec![vec![Scalar::zero(); n * n]; n];
                for (legs, coef) in dc.terms() {
                    let (sx, fixed) = if left { (&legs[0], &legs[1]) } else { (&legs[1], &legs[0]) };
                    let j = pos(sx).ok_or_else(|| HopfError::NotInBasis {
                        name: self.name.clone(),
                        word: self.fmt_word(sx),
                    })?;
                    for (i, bi) in basis.iter().enumerate() {
                        let prod = if left { alg.mul_words(bi, fixed) } else { alg.mul_words(fixed, bi) };
                        for (w, v) in prod.terms() {
                            let k = pos(w).expect("closed basis");
                            eq[k][i * n + j] = &eq[k][i * n + j] + &(coef * v);
                        }
                    }
                }
                let eps = self.epsilon_word(c);
                for (k, row) in eq.into_iter().enumerate() {
                    rhs.push(if basis[k].is_empty() { eps.clone() } else { Scalar::zero() });
                    rows.push(row);
                }
            }
        }
        let m = ExactMatrix::from_rows(rows).expect("rectangular");
        let kernel = m.kernel().len();
        let sol = match m.solve(&rhs) {
            Ok(x) => {
                let mut mat = ExactMatrix::zeros(n, n);
                for i in 0..n {
                    for j in 0..n {
                        mat.set(i, j, x[i * n + j].clone());
                    }
                }
                Some(LinMap::new(basis.clone(), basis.clone(), mat))
            }
            Err(_) => None,
        };
        Ok((sol, kernel))
    }
}
