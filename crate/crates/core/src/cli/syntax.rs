//! Lexer, AST, parser and pretty-printer for `.hgx` documents.

use std::fmt::{self, Write as _};

/// Source position, 1-based. Positions never take part in equality so a
/// pretty-printed document re-parses to an equal tree.
#[derive(Clone, Copy, Debug, Default, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Span {
    fn eq(&self, _: &Span) -> bool {
        true
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{span}: {msg}")]
pub struct ParseError {
    pub span: Span,
    pub msg: String,
}

fn err<T>(span: Span, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { span, msg: msg.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    I,
    Q,
    Name(Ident),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

/// One summand `±(leg (x) leg (x) …)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorTerm {
    pub negate: bool,
    pub legs: Vec<Expr>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorExpr {
    pub terms: Vec<TensorTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleDecl {
    pub lhs: Expr,
    pub rhs: Expr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraBlock {
    pub name: Ident,
    pub gens: Vec<Ident>,
    pub grade: Vec<(Ident, i64)>,
    pub rules: Vec<RuleDecl>,
    pub coproduct: Vec<(Ident, TensorExpr)>,
    pub counit: Vec<(Ident, Expr)>,
    pub antipode: Vec<(Ident, Expr)>,
    pub inverse_antipode: Vec<(Ident, Expr)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraBlock {
    pub name: Ident,
    pub basis: Vec<Ident>,
    pub coproduct: Vec<(Ident, TensorExpr)>,
    pub counit: Vec<(Ident, Expr)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoactionKind {
    Regular(Ident),
    Induced(Ident),
    Explicit {
        source: Ident,
        hopf: Ident,
        left: bool,
        images: Vec<(Ident, TensorExpr)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoactionBlock {
    pub name: Ident,
    pub kind: CoactionKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupBlock {
    pub name: Ident,
    pub from: Ident,
    pub to: Ident,
    pub images: Vec<(Ident, Expr)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingBlock {
    pub name: Ident,
    pub left: Ident,
    pub right: Ident,
    pub values: Vec<(Expr, Expr, Expr)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Block {
    Algebra(AlgebraBlock),
    Coalgebra(CoalgebraBlock),
    Coaction(CoactionBlock),
    Subgroup(SubgroupBlock),
    Pairing(PairingBlock),
}

impl Block {
    pub fn name(&self) -> &Ident {
        match self {
            Block::Algebra(b) => &b.name,
            Block::Coalgebra(b) => &b.name,
            Block::Coaction(b) => &b.name,
            Block::Subgroup(b) => &b.name,
            Block::Pairing(b) => &b.name,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub blocks: Vec<Block>,
}

pub const KEYWORDS: &[&str] = &[
    "scalars", "algebra", "coalgebra", "gens", "basis", "grade", "rules", "coproduct", "counit",
    "antipode", "inverse_antipode", "coaction", "regular", "induced", "on", "over", "left",
    "subgroup", "from", "to", "pairing", "between", "and", "i", "q",
];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Arrow,
    Tensor,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Semi,
    Colon,
    Comma,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Tensor => f.write_str("`(x)`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut k, mut line, mut col) = (0usize, 1usize, 1usize);
    while k < chars.len() {
        let c = chars[k];
        let span = Span { line, col };
        let mut adv = 1;
        match c {
            '\n' => {
                line += 1;
                col = 1;
                k += 1;
                continue;
            }
            c if c.is_whitespace() => {}
            '#' => {
                while k + adv < chars.len() && chars[k + adv] != '\n' {
                    adv += 1;
                }
            }
            '(' if chars.get(k + 1) == Some(&'x') && chars.get(k + 2) == Some(&')') => {
                out.push((Tok::Tensor, span));
                adv = 3;
            }
            '-' if chars.get(k + 1) == Some(&'>') => {
                out.push((Tok::Arrow, span));
                adv = 2;
            }
            '(' => out.push((Tok::LParen, span)),
            ')' => out.push((Tok::RParen, span)),
            '{' => out.push((Tok::LBrace, span)),
            '}' => out.push((Tok::RBrace, span)),
            '+' => out.push((Tok::Plus, span)),
            '-' => out.push((Tok::Minus, span)),
            '*' => out.push((Tok::Star, span)),
            '/' => out.push((Tok::Slash, span)),
            '^' => out.push((Tok::Caret, span)),
            ';' => out.push((Tok::Semi, span)),
            ':' => out.push((Tok::Colon, span)),
            ',' => out.push((Tok::Comma, span)),
            c if c.is_ascii_digit() => {
                while k + adv < chars.len() && chars[k + adv].is_ascii_digit() {
                    adv += 1;
                }
                let s: String = chars[k..k + adv].iter().collect();
                let n = s.parse::<i64>().map_err(|_| ParseError { span, msg: format!("integer {s} out of range") })?;
                out.push((Tok::Int(n), span));
            }
            c if c.is_alphabetic() || c == '_' => {
                while k + adv < chars.len() && (chars[k + adv].is_alphanumeric() || chars[k + adv] == '_') {
                    adv += 1;
                }
                out.push((Tok::Ident(chars[k..k + adv].iter().collect()), span));
            }
            other => return err(span, format!("unexpected character `{other}`")),
        }
        k += adv;
        col += adv;
    }
    out.push((Tok::Eof, Span { line, col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.pos + 1).min(self.toks.len() - 1)].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<Span, ParseError> {
        if *self.peek() == t {
            Ok(self.bump().1)
        } else {
            err(self.span(), format!("expected {t}, found {}", self.peek()))
        }
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        if self.is_kw(kw) {
            self.bump();
            Ok(())
        } else {
            err(self.span(), format!("expected `{kw}`, found {}", self.peek()))
        }
    }

    fn name(&mut self) -> Result<Ident, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                let span = self.bump().1;
                Ok(Ident { name: s, span })
            }
            Tok::Ident(s) => err(self.span(), format!("`{s}` is a reserved word")),
            t => err(self.span(), format!("expected a name, found {t}")),
        }
    }

    fn at_name(&self) -> bool {
        matches!(self.peek(), Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()))
    }

    fn at_map_entry(&self) -> bool {
        self.at_name() && *self.peek2() == Tok::Arrow
    }

    fn document(&mut self) -> Result<Document, ParseError> {
        self.keyword("scalars")?;
        match self.peek().clone() {
            Tok::Ident(s) if s == "QIQ" => {
                self.bump();
            }
            t => return err(self.span(), format!("expected scalar field `QIQ`, found {t}")),
        }
        let mut blocks = Vec::new();
        loop {
            let block = match self.peek() {
                Tok::Eof => break,
                Tok::Ident(s) if s == "algebra" => Block::Algebra(self.algebra()?),
                Tok::Ident(s) if s == "coalgebra" => Block::Coalgebra(self.coalgebra()?),
                Tok::Ident(s) if s == "coaction" => Block::Coaction(self.coaction()?),
                Tok::Ident(s) if s == "subgroup" => Block::Subgroup(self.subgroup()?),
                Tok::Ident(s) if s == "pairing" => Block::Pairing(self.pairing()?),
                t => {
                    return err(
                        self.span(),
                        format!("expected `algebra`, `coalgebra`, `coaction`, `subgroup` or `pairing`, found {t}"),
                    )
                }
            };
            blocks.push(block);
        }
        Ok(Document { blocks })
    }

    fn names(&mut self) -> Result<Vec<Ident>, ParseError> {
        let mut out = vec![self.name()?];
        while self.at_name() {
            out.push(self.name()?);
        }
        Ok(out)
    }

    fn tensor_map(&mut self) -> Result<Vec<(Ident, TensorExpr)>, ParseError> {
        let mut out = Vec::new();
        while self.at_map_entry() {
            let n = self.name()?;
            self.expect(Tok::Arrow)?;
            out.push((n, self.tensor()?));
        }
        Ok(out)
    }

    fn poly_map(&mut self) -> Result<Vec<(Ident, Expr)>, ParseError> {
        let mut out = Vec::new();
        while self.at_map_entry() {
            let n = self.name()?;
            self.expect(Tok::Arrow)?;
            out.push((n, self.poly()?));
        }
        Ok(out)
    }

    fn nonempty<T>(&self, v: Vec<T>, what: &str) -> Result<Vec<T>, ParseError> {
        if v.is_empty() {
            err(self.span(), format!("expected at least one {what} entry `name -> ...`"))
        } else {
            Ok(v)
        }
    }

    fn algebra(&mut self) -> Result<AlgebraBlock, ParseError> {
        self.keyword("algebra")?;
        let name = self.name()?;
        self.expect(Tok::LBrace)?;
        self.keyword("gens")?;
        let gens = self.names()?;
        let mut grade = Vec::new();
        if self.is_kw("grade") {
            self.bump();
            loop {
                let g = self.name()?;
                self.expect(Tok::Colon)?;
                let neg = if *self.peek() == Tok::Minus {
                    self.bump();
                    true
                } else {
                    false
                };
                let n = match self.bump() {
                    (Tok::Int(n), _) => n,
                    (t, s) => return err(s, format!("expected an integer grade, found {t}")),
                };
                grade.push((g, if neg { -n } else { n }));
                if !self.at_name() {
                    break;
                }
            }
        }
        let mut rules = Vec::new();
        if self.is_kw("rules") {
            self.bump();
            loop {
                let lhs = self.term()?;
                self.expect(Tok::Arrow)?;
                let rhs = self.poly()?;
                rules.push(RuleDecl { lhs, rhs });
                if *self.peek() != Tok::Semi {
                    break;
                }
                self.bump();
            }
        }
        let mut block = AlgebraBlock {
            name,
            gens,
            grade,
            rules,
            coproduct: Vec::new(),
            counit: Vec::new(),
            antipode: Vec::new(),
            inverse_antipode: Vec::new(),
        };
        if self.is_kw("coproduct") {
            self.bump();
            let m = self.tensor_map()?;
            block.coproduct = self.nonempty(m, "coproduct")?;
            self.keyword("counit")?;
            let m = self.poly_map()?;
            block.counit = self.nonempty(m, "counit")?;
            if self.is_kw("antipode") {
                self.bump();
                let m = self.poly_map()?;
                block.antipode = self.nonempty(m, "antipode")?;
            }
            if self.is_kw("inverse_antipode") {
                self.bump();
                let m = self.poly_map()?;
                block.inverse_antipode = self.nonempty(m, "inverse antipode")?;
            }
        }
        self.expect(Tok::RBrace)?;
        Ok(block)
    }

    fn coalgebra(&mut self) -> Result<CoalgebraBlock, ParseError> {
        self.keyword("coalgebra")?;
        let name = self.name()?;
        self.expect(Tok::LBrace)?;
        self.keyword("basis")?;
        let basis = self.names()?;
        self.keyword("coproduct")?;
        let m = self.tensor_map()?;
        let coproduct = self.nonempty(m, "coproduct")?;
        self.keyword("counit")?;
        let m = self.poly_map()?;
        let counit = self.nonempty(m, "counit")?;
        self.expect(Tok::RBrace)?;
        Ok(CoalgebraBlock { name, basis, coproduct, counit })
    }

    fn coaction(&mut self) -> Result<CoactionBlock, ParseError> {
        self.keyword("coaction")?;
        let name = self.name()?;
        let kind = if self.is_kw("regular") {
            self.bump();
            CoactionKind::Regular(self.name()?)
        } else if self.is_kw("induced") {
            self.bump();
            CoactionKind::Induced(self.name()?)
        } else {
            self.keyword("on")?;
            let source = self.name()?;
            self.keyword("over")?;
            let hopf = self.name()?;
            let left = self.is_kw("left");
            if left {
                self.bump();
            }
            self.expect(Tok::LBrace)?;
            let images = self.tensor_map()?;
            self.expect(Tok::RBrace)?;
            CoactionKind::Explicit { source, hopf, left, images }
        };
        Ok(CoactionBlock { name, kind })
    }

    fn subgroup(&mut self) -> Result<SubgroupBlock, ParseError> {
        self.keyword("subgroup")?;
        let name = self.name()?;
        self.keyword("from")?;
        let from = self.name()?;
        self.keyword("to")?;
        let to = self.name()?;
        self.expect(Tok::LBrace)?;
        let images = self.poly_map()?;
        self.expect(Tok::RBrace)?;
        Ok(SubgroupBlock { name, from, to, images })
    }

    fn pairing(&mut self) -> Result<PairingBlock, ParseError> {
        self.keyword("pairing")?;
        let name = self.name()?;
        self.keyword("between")?;
        let left = self.name()?;
        self.keyword("and")?;
        let right = self.name()?;
        self.expect(Tok::LBrace)?;
        let mut values = Vec::new();
        while *self.peek() != Tok::RBrace {
            let a = self.term()?;
            self.expect(Tok::Comma)?;
            let b = self.term()?;
            self.expect(Tok::Arrow)?;
            values.push((a, b, self.poly()?));
        }
        self.expect(Tok::RBrace)?;
        Ok(PairingBlock { name, left, right, values })
    }

    fn tensor(&mut self) -> Result<TensorExpr, ParseError> {
        let mut terms = vec![self.tensor_term(false)?];
        loop {
            let negate = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
            terms.push(self.tensor_term(negate)?);
        }
        Ok(TensorExpr { terms })
    }

    fn tensor_term(&mut self, negate: bool) -> Result<TensorTerm, ParseError> {
        let mut legs = vec![self.term()?];
        while *self.peek() == Tok::Tensor {
            self.bump();
            legs.push(self.term()?);
        }
        Ok(TensorTerm { negate, legs })
    }

    fn poly(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    e = Expr::Add(Box::new(e), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    e = Expr::Sub(Box::new(e), Box::new(self.term()?));
                }
                _ => return Ok(e),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.bump();
                    e = Expr::Div(Box::new(e), Box::new(self.unary()?));
                }
                _ => return Ok(e),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let neg = *self.peek() == Tok::Minus;
        if neg {
            self.bump();
        }
        match self.bump() {
            (Tok::Int(n), _) => Ok(Expr::Pow(Box::new(base), if neg { -n } else { n })),
            (t, s) => err(s, format!("expected an integer exponent, found {t}")),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (t, span) = self.bump();
        match t {
            Tok::Int(n) => Ok(Expr::Int(n)),
            Tok::Ident(s) if s == "i" => Ok(Expr::I),
            Tok::Ident(s) if s == "q" => Ok(Expr::Q),
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => Ok(Expr::Name(Ident { name: s, span })),
            Tok::LParen => {
                let e = self.poly()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            t => err(span, format!("expected a term, found {t}")),
        }
    }
}

pub fn parse(src: &str) -> Result<Document, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    p.document()
}

/// Parses a standalone polynomial expression (used for `--q`).
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.poly()?;
    match p.peek() {
        Tok::Eof => Ok(e),
        t => err(p.span(), format!("unexpected {t}")),
    }
}

// precedence: 0 sum, 1 product, 2 unary, 3 atom
fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 0,
        Expr::Mul(..) | Expr::Div(..) => 1,
        Expr::Neg(_) => 2,
        Expr::Pow(..) => 2,
        _ => 3,
    }
}

fn write_at(out: &mut String, e: &Expr, min: u8) {
    if prec(e) < min {
        out.push('(');
        write_expr(out, e);
        out.push(')');
    } else {
        write_expr(out, e);
    }
}

fn write_expr(out: &mut String, e: &Expr) {
    match e {
        Expr::Int(n) => write!(out, "{n}").unwrap(),
        Expr::I => out.push('i'),
        Expr::Q => out.push('q'),
        Expr::Name(n) => out.push_str(&n.name),
        Expr::Neg(x) => {
            out.push('-');
            write_at(out, x, 2);
        }
        Expr::Add(a, b) => {
            write_at(out, a, 0);
            out.push_str(" + ");
            write_at(out, b, 1);
        }
        Expr::Sub(a, b) => {
            write_at(out, a, 0);
            out.push_str(" - ");
            write_at(out, b, 1);
        }
        Expr::Mul(a, b) => {
            write_at(out, a, 1);
            out.push('*');
            write_at(out, b, 2);
        }
        Expr::Div(a, b) => {
            write_at(out, a, 1);
            out.push('/');
            write_at(out, b, 2);
        }
        Expr::Pow(a, k) => {
            write_at(out, a, 3);
            write!(out, "^{k}").unwrap();
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_expr(&mut s, self);
        f.write_str(&s)
    }
}

impl fmt::Display for TensorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(if t.negate { " - " } else { " + " })?;
            }
            for (j, leg) in t.legs.iter().enumerate() {
                if j > 0 {
                    f.write_str(" (x) ")?;
                }
                let mut s = String::new();
                write_at(&mut s, leg, 1);
                f.write_str(&s)?;
            }
        }
        Ok(())
    }
}

fn write_names(out: &mut String, kw: &str, names: &[Ident]) {
    write!(out, "  {kw}").unwrap();
    for n in names {
        write!(out, " {}", n.name).unwrap();
    }
    out.push('\n');
}

fn write_tmap(out: &mut String, kw: &str, m: &[(Ident, TensorExpr)]) {
    if m.is_empty() {
        return;
    }
    writeln!(out, "  {kw}").unwrap();
    for (n, t) in m {
        writeln!(out, "    {} -> {}", n.name, t).unwrap();
    }
}

fn write_pmap(out: &mut String, kw: &str, m: &[(Ident, Expr)], indent: &str) {
    if m.is_empty() {
        return;
    }
    if !kw.is_empty() {
        writeln!(out, "  {kw}").unwrap();
    }
    for (n, e) in m {
        writeln!(out, "{indent}{} -> {}", n.name, e).unwrap();
    }
}

/// Canonical text of a document; parses back to an equal tree.
pub fn pretty(doc: &Document) -> String {
    let mut out = String::from("scalars QIQ\n");
    for b in &doc.blocks {
        out.push('\n');
        match b {
            Block::Algebra(a) => {
                writeln!(out, "algebra {} {{", a.name.name).unwrap();
                write_names(&mut out, "gens", &a.gens);
                if !a.grade.is_empty() {
                    out.push_str("  grade");
                    for (g, n) in &a.grade {
                        write!(out, " {}: {}", g.name, n).unwrap();
                    }
                    out.push('\n');
                }
                if !a.rules.is_empty() {
                    out.push_str("  rules\n");
                    for (k, r) in a.rules.iter().enumerate() {
                        let mut lhs = String::new();
                        write_at(&mut lhs, &r.lhs, 1);
                        let sep = if k + 1 < a.rules.len() { ";" } else { "" };
                        writeln!(out, "    {} -> {}{}", lhs, r.rhs, sep).unwrap();
                    }
                }
                write_tmap(&mut out, "coproduct", &a.coproduct);
                write_pmap(&mut out, "counit", &a.counit, "    ");
                write_pmap(&mut out, "antipode", &a.antipode, "    ");
                write_pmap(&mut out, "inverse_antipode", &a.inverse_antipode, "    ");
                out.push_str("}\n");
            }
            Block::Coalgebra(c) => {
                writeln!(out, "coalgebra {} {{", c.name.name).unwrap();
                write_names(&mut out, "basis", &c.basis);
                write_tmap(&mut out, "coproduct", &c.coproduct);
                write_pmap(&mut out, "counit", &c.counit, "    ");
                out.push_str("}\n");
            }
            Block::Coaction(c) => match &c.kind {
                CoactionKind::Regular(h) => writeln!(out, "coaction {} regular {}", c.name.name, h.name).unwrap(),
                CoactionKind::Induced(p) => writeln!(out, "coaction {} induced {}", c.name.name, p.name).unwrap(),
                CoactionKind::Explicit { source, hopf, left, images } => {
                    let side = if *left { " left" } else { "" };
                    writeln!(out, "coaction {} on {} over {}{} {{", c.name.name, source.name, hopf.name, side).unwrap();
                    for (n, t) in images {
                        writeln!(out, "  {} -> {}", n.name, t).unwrap();
                    }
                    out.push_str("}\n");
                }
            },
            Block::Subgroup(s) => {
                writeln!(out, "subgroup {} from {} to {} {{", s.name.name, s.from.name, s.to.name).unwrap();
                write_pmap(&mut out, "", &s.images, "  ");
                out.push_str("}\n");
            }
            Block::Pairing(p) => {
                writeln!(out, "pairing {} between {} and {} {{", p.name.name, p.left.name, p.right.name).unwrap();
                for (a, b, v) in &p.values {
                    let (mut x, mut y) = (String::new(), String::new());
                    write_at(&mut x, a, 1);
                    write_at(&mut y, b, 1);
                    writeln!(out, "  {x}, {y} -> {v}").unwrap();
                }
                out.push_str("}\n");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SWEEDLER: &str = "scalars QIQ
# Sweedler's four-dimensional Hopf algebra
algebra H4 {
  gens g x
  rules g*g -> 1; x*x -> 0; x*g -> -g*x
  coproduct
    g -> g (x) g
    x -> x (x) 1 + g (x) x
  counit
    g -> 1
    x -> 0
  antipode
    g -> g
    x -> -g*x
}
";

    #[test]
    fn parses_and_round_trips() {
        let doc = parse(SWEEDLER).unwrap();
        let Block::Algebra(a) = &doc.blocks[0] else { panic!() };
        assert_eq!(a.gens.len(), 2);
        assert_eq!(a.rules.len(), 3);
        assert_eq!(a.coproduct[1].1.to_string(), "x (x) 1 + g (x) x");
        assert_eq!(a.antipode[1].1.to_string(), "-g*x");
        assert_eq!(a.gens[1].span, Span { line: 4, col: 10 });
        let text = pretty(&doc);
        assert_eq!(parse(&text).unwrap(), doc);
        assert_eq!(pretty(&parse(&text).unwrap()), text);
    }

    #[test]
    fn scalar_syntax() {
        let e = parse_expr("(q - q^-1)*b*c + 1/2*i").unwrap();
        assert_eq!(e.to_string(), "(q - q^-1)*b*c + 1/2*i");
        assert_eq!(parse_expr("a - (b - c)").unwrap().to_string(), "a - (b - c)");
        assert_eq!(parse_expr("-q^2*a").unwrap().to_string(), "-q^2*a");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = parse("scalars QIQ\nalgebra A {\n  gens a\n  rules a -> \n}").unwrap_err();
        assert_eq!(e.span.line, 5);
        assert!(e.msg.contains("expected a term"), "{e}");
        let e = parse("scalars QQ").unwrap_err();
        assert!(e.msg.contains("QIQ"));
        let e = parse("scalars QIQ algebra coproduct {").unwrap_err();
        assert!(e.msg.contains("reserved"));
        let e = parse("scalars QIQ\nalgebra A { gens a $ }").unwrap_err();
        assert_eq!((e.span.line, e.span.col), (2, 20));
    }

    #[test]
    fn blocks_of_every_kind() {
        let src = "scalars QIQ
coalgebra C { basis cos sin coproduct cos -> cos (x) cos - sin (x) sin sin -> sin (x) cos + cos (x) sin counit cos -> 1 sin -> 0 }
coaction d on A over H left { X -> a (x) X }
coaction r regular H
coaction p induced pi
subgroup pi from H to K { a -> g b -> 0 }
pairing P between O and F { 1, g -> 1 e1, g -> 1 }
";
        let doc = parse(src).unwrap();
        assert_eq!(doc.blocks.len(), 6);
        assert_eq!(parse(&pretty(&doc)).unwrap(), doc);
    }

    #[test]
    fn tensor_token_wins_over_parenthesised_x() {
        let e = parse_expr("(x)");
        assert!(e.is_err());
    }
}
