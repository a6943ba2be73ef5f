//! Turns a parsed document into presentations, structures, coactions,
//! subgroup maps and pairings.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::comodule::{AlgebraMap, Coaction};
use crate::duality::Pairing;
use crate::exactfield::{Gaussian, Scalar};
use crate::hopfcore::{HopfStructure, Level};
use crate::presentation::{Algebra, NcPoly, Presentation, Rule, Word};
use crate::tensorspace::TensorElement;

use super::syntax::{
    parse, parse_expr, AlgebraBlock, Block, CoactionKind, CoalgebraBlock, Document, Expr, Ident, ParseError, Span, TensorExpr,
};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum HgxError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("{span}: {msg}")]
    Elab { span: Span, msg: String },
}

fn fail<T>(span: Span, msg: impl Into<String>) -> Result<T, HgxError> {
    Err(HgxError::Elab { span, msg: msg.into() })
}

/// A quantum subgroup `π : H → H'`.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub h: HopfStructure,
    pub hp: HopfStructure,
    pub map: AlgebraMap,
}

/// Everything a document defines, by block name.
#[derive(Debug, Default)]
pub struct Env {
    pub algebras: BTreeMap<String, Arc<Presentation>>,
    pub structures: BTreeMap<String, HopfStructure>,
    pub coactions: BTreeMap<String, Coaction>,
    pub subgroups: BTreeMap<String, Subgroup>,
    pub pairings: BTreeMap<String, Pairing>,
    /// Block names in source order.
    pub order: Vec<String>,
}

impl Env {
    pub fn structure(&self, name: &str) -> Option<&HopfStructure> {
        self.structures.get(name)
    }

    pub fn coaction(&self, name: &str) -> Option<&Coaction> {
        self.coactions.get(name)
    }

    pub fn subgroup(&self, name: &str) -> Option<&Subgroup> {
        self.subgroups.get(name)
    }

    pub fn pairing(&self, name: &str) -> Option<&Pairing> {
        self.pairings.get(name)
    }

    pub fn presentation(&self, name: &str) -> Option<&Arc<Presentation>> {
        self.algebras.get(name)
    }
}

/// Parses and elaborates; `q` specializes the parameter everywhere.
pub fn load_str(src: &str, q: Option<&Gaussian>) -> Result<Env, HgxError> {
    elaborate(&parse(src)?, q)
}

/// First generator position inside an expression, for diagnostics.
/// A Gaussian rational written in the scalar syntax, such as `3/2` or `1 - 2*i`.
pub fn parse_gaussian(src: &str) -> Result<Gaussian, HgxError> {
    let e = parse_expr(src)?;
    let at = expr_span(&e).unwrap_or_default();
    let ctx = Ctx { gens: &[], pres: None, q: None, at };
    match ctx.scalar(&e)?.as_gaussian() {
        Some(g) => Ok(g),
        None => fail(at, format!("`{src}` depends on q")),
    }
}

pub fn expr_span(e: &Expr) -> Option<Span> {
    match e {
        Expr::Name(n) => Some(n.span),
        Expr::Neg(a) | Expr::Pow(a, _) => expr_span(a),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => expr_span(a).or_else(|| expr_span(b)),
        _ => None,
    }
}

struct Ctx<'a> {
    gens: &'a [String],
    pres: Option<&'a Presentation>,
    q: Option<&'a Gaussian>,
    at: Span,
}

impl Ctx<'_> {
    fn mul(&self, a: &NcPoly, b: &NcPoly) -> Result<NcPoly, HgxError> {
        match self.pres {
            None => Ok(a.free_mul(b)),
            Some(p) => p.try_mul(a, b).or_else(|e| fail(self.at, e.to_string())),
        }
    }

    fn constant(p: &NcPoly) -> Option<Scalar> {
        if p.is_zero() {
            return Some(Scalar::zero());
        }
        match p.terms().next() {
            Some((w, c)) if p.len() == 1 && w.is_empty() => Some(c.clone()),
            _ => None,
        }
    }

    fn eval(&self, e: &Expr) -> Result<NcPoly, HgxError> {
        let span = expr_span(e).unwrap_or(self.at);
        Ok(match e {
            Expr::Int(n) => NcPoly::constant(Scalar::from_int(*n)),
            Expr::I => NcPoly::constant(Scalar::i()),
            Expr::Q => NcPoly::constant(match self.q {
                Some(v) => Scalar::from_gaussian(v.clone()),
                None => Scalar::q(),
            }),
            Expr::Name(n) => match self.gens.iter().position(|g| *g == n.name) {
                Some(k) => NcPoly::gen(k as u16),
                None => return fail(n.span, format!("unknown generator `{}`", n.name)),
            },
            Expr::Neg(a) => self.eval(a)?.neg(),
            Expr::Add(a, b) => self.eval(a)?.add(&self.eval(b)?),
            Expr::Sub(a, b) => self.eval(a)?.sub(&self.eval(b)?),
            Expr::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?)?,
            Expr::Div(a, b) => {
                let Some(d) = Self::constant(&self.eval(b)?) else {
                    return fail(span, format!("divisor `{b}` is not a scalar"));
                };
                match d.inv() {
                    Ok(inv) => self.eval(a)?.scale(&inv),
                    Err(_) => return fail(span, format!("division by zero in `{e}`")),
                }
            }
            Expr::Pow(a, k) => {
                let base = self.eval(a)?;
                if *k < 0 {
                    let Some(c) = Self::constant(&base) else {
                        return fail(span, format!("negative power of non-scalar `{a}`"));
                    };
                    match c.pow(*k) {
                        Ok(s) => NcPoly::constant(s),
                        Err(_) => return fail(span, format!("division by zero in `{e}`")),
                    }
                } else {
                    let mut acc = NcPoly::one();
                    for _ in 0..*k {
                        acc = self.mul(&acc, &base)?;
                    }
                    acc
                }
            }
        })
    }

    fn eval_normal(&self, e: &Expr) -> Result<NcPoly, HgxError> {
        let p = self.eval(e)?;
        match self.pres {
            Some(pres) => pres.normal_form(&p).or_else(|err| fail(self.at, err.to_string())),
            None => Ok(p),
        }
    }

    fn scalar(&self, e: &Expr) -> Result<Scalar, HgxError> {
        match Self::constant(&self.eval_normal(e)?) {
            Some(s) => Ok(s),
            None => fail(expr_span(e).unwrap_or(self.at), format!("`{e}` is not a scalar")),
        }
    }

    fn word(&self, e: &Expr) -> Result<Word, HgxError> {
        let p = self.eval(e)?;
        let found = match p.terms().next() {
            Some((w, c)) if p.len() == 1 && c.is_one() => Some(w.clone()),
            _ => None,
        };
        match found {
            Some(w) => Ok(w),
            None => fail(expr_span(e).unwrap_or(self.at), format!("`{e}` is not a word")),
        }
    }
}

fn tensor(t: &TensorExpr, legs: &[Ctx<'_>]) -> Result<TensorElement, HgxError> {
    let mut out = TensorElement::zero(legs.len());
    for term in &t.terms {
        if term.legs.len() != legs.len() {
            let span = term.legs.iter().find_map(expr_span).unwrap_or(legs[0].at);
            return fail(span, format!("expected {} tensor legs, found {}", legs.len(), term.legs.len()));
        }
        let polys = term
            .legs
            .iter()
            .zip(legs)
            .map(|(e, c)| c.eval_normal(e))
            .collect::<Result<Vec<_>, _>>()?;
        let refs: Vec<&NcPoly> = polys.iter().collect();
        let x = TensorElement::from_polys(&refs);
        out = if term.negate { out.sub(&x) } else { out.add(&x) };
    }
    Ok(out)
}

/// Orders map entries by generator and rejects unknown, repeated or
/// missing ones.
fn per_generator<'a, T>(
    gens: &[Ident],
    entries: &'a [(Ident, T)],
    what: &str,
    block: &Ident,
) -> Result<Vec<&'a T>, HgxError> {
    let mut slots: Vec<Option<&T>> = vec![None; gens.len()];
    for (n, v) in entries {
        let Some(k) = gens.iter().position(|g| g.name == n.name) else {
            return fail(n.span, format!("unknown generator `{}`", n.name));
        };
        if slots[k].is_some() {
            return fail(n.span, format!("{what} given twice for `{}`", n.name));
        }
        slots[k] = Some(v);
    }
    slots
        .into_iter()
        .zip(gens)
        .map(|(s, g)| s.ok_or(()).or_else(|_| fail(block.span, format!("{}: missing {what} for `{}`", block.name, g.name))))
        .collect()
}

fn algebra(a: &AlgebraBlock, q: Option<&Gaussian>, env: &mut Env) -> Result<(), HgxError> {
    let gens: Vec<String> = a.gens.iter().map(|g| g.name.clone()).collect();
    let free = Ctx { gens: &gens, pres: None, q, at: a.name.span };
    let mut rules = Vec::new();
    for r in &a.rules {
        let at = expr_span(&r.lhs).unwrap_or(a.name.span);
        let lhs = Ctx { at, ..free }.word(&r.lhs)?;
        let rhs = Ctx { at, ..free }.eval(&r.rhs)?;
        rules.push(Rule { lhs, rhs });
    }
    let grading = if a.grade.is_empty() {
        None
    } else {
        let g = per_generator(&a.gens, &a.grade, "grade", &a.name)?;
        Some(g.into_iter().copied().collect())
    };
    let pres = Presentation::new(&a.name.name, gens.clone(), rules, grading).or_else(|e| fail(a.name.span, e.to_string()))?;
    let pres = Arc::new(pres);
    env.algebras.insert(a.name.name.clone(), pres.clone());
    if a.coproduct.is_empty() {
        return Ok(());
    }
    let ctx = Ctx { gens: &gens, pres: Some(&pres), q, at: a.name.span };
    let delta = per_generator(&a.gens, &a.coproduct, "coproduct", &a.name)?
        .into_iter()
        .map(|t| tensor(t, &[Ctx { ..ctx }, Ctx { ..ctx }]))
        .collect::<Result<Vec<_>, _>>()?;
    let eps = per_generator(&a.gens, &a.counit, "counit", &a.name)?
        .into_iter()
        .map(|e| ctx.scalar(e))
        .collect::<Result<Vec<_>, _>>()?;
    let polys = |m: &[(Ident, Expr)], what: &str| -> Result<Option<Vec<NcPoly>>, HgxError> {
        if m.is_empty() {
            return Ok(None);
        }
        per_generator(&a.gens, m, what, &a.name)?
            .into_iter()
            .map(|e| ctx.eval_normal(e))
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    };
    let s = polys(&a.antipode, "antipode")?;
    let sinv = polys(&a.inverse_antipode, "inverse antipode")?;
    let level = if s.is_some() { Level::Hopf } else { Level::Bialgebra };
    let mut h = HopfStructure::new(&a.name.name, pres.clone(), level, delta, eps, s)
        .or_else(|e| fail(a.name.span, e.to_string()))?;
    if let Some(inv) = sinv {
        h = h.with_antipode_inverse(inv).or_else(|e| fail(a.name.span, e.to_string()))?;
    }
    env.structures.insert(a.name.name.clone(), h);
    Ok(())
}

fn coalgebra(c: &CoalgebraBlock, q: Option<&Gaussian>, env: &mut Env) -> Result<(), HgxError> {
    let gens: Vec<String> = c.basis.iter().map(|g| g.name.clone()).collect();
    let pres = Arc::new(Presentation::new(&c.name.name, gens.clone(), Vec::new(), None).or_else(|e| fail(c.name.span, e.to_string()))?);
    let ctx = Ctx { gens: &gens, pres: None, q, at: c.name.span };
    let basis: Vec<Word> = (0..gens.len()).map(|k| Word::gen(k as u16)).collect();
    let mut delta = HashMap::new();
    for (w, t) in basis.iter().zip(per_generator(&c.basis, &c.coproduct, "coproduct", &c.name)?) {
        let x = tensor(t, &[Ctx { ..ctx }, Ctx { ..ctx }])?;
        if let Some((legs, _)) = x.terms().find(|(l, _)| l.iter().any(|w| w.len() != 1)) {
            let _ = legs;
            return fail(c.name.span, format!("{}: coproduct leaves the basis", c.name.name));
        }
        delta.insert(w.clone(), x);
    }
    let mut eps = HashMap::new();
    for (w, e) in basis.iter().zip(per_generator(&c.basis, &c.counit, "counit", &c.name)?) {
        eps.insert(w.clone(), ctx.scalar(e)?);
    }
    env.algebras.insert(c.name.name.clone(), pres.clone());
    let h = HopfStructure::from_structure_constants(&c.name.name, pres, basis, delta, eps)
        .or_else(|e| fail(c.name.span, e.to_string()))?;
    env.structures.insert(c.name.name.clone(), h);
    Ok(())
}

fn lookup<'a, T>(m: &'a BTreeMap<String, T>, n: &Ident, what: &str) -> Result<&'a T, HgxError> {
    m.get(&n.name).ok_or(()).or_else(|_| fail(n.span, format!("unknown {what} `{}`", n.name)))
}

pub fn elaborate(doc: &Document, q: Option<&Gaussian>) -> Result<Env, HgxError> {
    let mut env = Env::default();
    for b in &doc.blocks {
        let name = b.name();
        if env.order.contains(&name.name) {
            return fail(name.span, format!("duplicate block name `{}`", name.name));
        }
        match b {
            Block::Algebra(a) => algebra(a, q, &mut env)?,
            Block::Coalgebra(c) => coalgebra(c, q, &mut env)?,
            Block::Subgroup(s) => {
                let h = lookup(&env.structures, &s.from, "structure")?.clone();
                let hp = lookup(&env.structures, &s.to, "structure")?.clone();
                let src_gens: Vec<Ident> = h
                    .pres()
                    .gens()
                    .iter()
                    .map(|g| Ident { name: g.clone(), span: s.name.span })
                    .collect();
                let ctx = Ctx { gens: hp.pres().gens(), pres: Some(hp.pres()), q, at: s.name.span };
                let images = per_generator(&src_gens, &s.images, "image", &s.name)?
                    .into_iter()
                    .map(|e| ctx.eval_normal(e))
                    .collect::<Result<Vec<_>, _>>()?;
                let map = AlgebraMap::new(&s.name.name, h.pres().clone(), hp.pres().clone(), images)
                    .or_else(|e| fail(s.name.span, e.to_string()))?;
                env.subgroups.insert(s.name.name.clone(), Subgroup { h, hp, map });
            }
            Block::Coaction(c) => {
                let co = match &c.kind {
                    CoactionKind::Regular(h) => {
                        Coaction::regular(lookup(&env.structures, h, "structure")?).map_err(|e| e.to_string())
                    }
                    CoactionKind::Induced(p) => {
                        let s = lookup(&env.subgroups, p, "subgroup")?;
                        Coaction::induced(&s.h, &s.hp, &s.map).map_err(|e| e.to_string())
                    }
                    CoactionKind::Explicit { source, hopf, left, images } => {
                        let a = lookup(&env.algebras, source, "algebra")?.clone();
                        let h = lookup(&env.structures, hopf, "structure")?.clone();
                        let ac = Ctx { gens: a.gens(), pres: Some(&a), q, at: c.name.span };
                        let hc = Ctx { gens: h.pres().gens(), pres: Some(h.pres()), q, at: c.name.span };
                        let src_gens: Vec<Ident> =
                            a.gens().iter().map(|g| Ident { name: g.clone(), span: c.name.span }).collect();
                        let legs = if *left { [hc, ac] } else { [ac, hc] };
                        let imgs = per_generator(&src_gens, images, "image", &c.name)?
                            .into_iter()
                            .map(|t| tensor(t, &legs))
                            .collect::<Result<Vec<_>, _>>()?;
                        let alg = Algebra::new(a.clone());
                        if *left {
                            Coaction::new_left(&c.name.name, alg, h, imgs).map_err(|e| e.to_string())
                        } else {
                            Coaction::new(&c.name.name, alg, h, imgs).map_err(|e| e.to_string())
                        }
                    }
                };
                let co = co.or_else(|e| fail(c.name.span, e))?;
                env.coactions.insert(c.name.name.clone(), co.renamed(&c.name.name));
            }
            Block::Pairing(p) => {
                let l = lookup(&env.structures, &p.left, "structure")?.clone();
                let r = lookup(&env.structures, &p.right, "structure")?.clone();
                let lc = Ctx { gens: l.pres().gens(), pres: None, q, at: p.name.span };
                let rc = Ctx { gens: r.pres().gens(), pres: None, q, at: p.name.span };
                let mut values = HashMap::new();
                for (a, b, v) in &p.values {
                    let u = lc.word(a)?;
                    let w = rc.word(b)?;
                    for (x, pres) in [(&u, l.pres()), (&w, r.pres())] {
                        if !pres.is_normal(x) {
                            return fail(expr_span(a).unwrap_or(p.name.span), format!("`{}` is not a basis word", pres.fmt_word(x)));
                        }
                    }
                    values.insert((u, w), lc.scalar(v)?);
                }
                env.pairings.insert(p.name.name.clone(), Pairing::new(&p.name.name, l, r, values));
            }
        }
        env.order.push(name.name.clone());
    }
    Ok(env)
}
