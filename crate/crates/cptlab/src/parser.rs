//! Recursive-descent parser for theory files.

use cpt_reps::RepSpec;

use crate::ast::*;
use crate::diagnostic::{Diagnostic, Span};
use crate::lexer::{lex, Tok, Token};

const MAX_DEPTH: usize = 128;
const MAX_POWER: u32 = 32;
const MAX_RANGE: usize = 64;

const ITEM_KEYWORDS: [&str; 5] = ["space", "field", "mode", "formula", "theory"];
const EXPR_KEYWORDS: [&str; 10] = ["i", "d", "conj", "bar", "psibar", "gamma", "gamma5", "eta", "sum", "in"];

pub fn is_reserved(word: &str) -> bool {
    ITEM_KEYWORDS.contains(&word) || EXPR_KEYWORDS.contains(&word)
}

pub fn parse(src: &str) -> Result<SourceSpec, Vec<Diagnostic>> {
    let tokens = lex(src)?;
    let mut p = Parser { tokens, pos: 0, depth: 0, errors: Vec::new() };
    let mut items = Vec::new();
    while !p.at_eof() {
        match p.item() {
            Ok(item) => items.push(item),
            Err(d) => {
                p.errors.push(d);
                p.recover();
            }
        }
    }
    if p.errors.is_empty() {
        Ok(SourceSpec { items })
    } else {
        Err(p.errors)
    }
}

type PResult<T> = Result<T, Diagnostic>;

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    depth: usize,
    errors: Vec<Diagnostic>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.tokens[(self.pos + k).min(self.tokens.len() - 1)].tok
    }

    fn span(&self) -> Span {
        self.tokens[self.pos].span
    }

    fn prev_span(&self) -> Span {
        self.tokens[self.pos.saturating_sub(1)].span
    }

    fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if !self.at_eof() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Diagnostic {
        Diagnostic::error(self.span(), format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn expect(&mut self, tok: Tok) -> PResult<Span> {
        if *self.peek() == tok {
            Ok(self.bump().span)
        } else {
            Err(self.unexpected(&format!("`{}`", tok.text())))
        }
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == w)
    }

    fn eat_word(&mut self, w: &str) -> bool {
        if self.is_word(w) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_word(&mut self, w: &str) -> PResult<Span> {
        if self.is_word(w) {
            Ok(self.bump().span)
        } else {
            Err(self.unexpected(&format!("`{w}`")))
        }
    }

    fn ident(&mut self, what: &str) -> PResult<(String, Span)> {
        match self.peek().clone() {
            Tok::Ident(s) => Ok((s, self.bump().span)),
            _ => Err(self.unexpected(what)),
        }
    }

    /// A user-chosen name: not a keyword.
    fn name(&mut self, what: &str) -> PResult<(String, Span)> {
        let span = self.span();
        let (s, sp) = self.ident(what)?;
        if is_reserved(&s) {
            return Err(Diagnostic::error(span, format!("`{s}` is a reserved word")));
        }
        Ok((s, sp))
    }

    fn usize_lit(&mut self, what: &str) -> PResult<(usize, Span)> {
        match self.peek().clone() {
            Tok::Int(s) => {
                let span = self.bump().span;
                s.parse().map(|n| (n, span)).map_err(|_| Diagnostic::error(span, format!("number {s} is too large")))
            }
            _ => Err(self.unexpected(what)),
        }
    }

    fn recover(&mut self) {
        self.bump();
        while !self.at_eof() && !ITEM_KEYWORDS.iter().any(|k| self.is_word(k)) {
            self.bump();
        }
    }

    fn item(&mut self) -> PResult<Item> {
        let start = self.span();
        let (kw, _) = self.ident("`space`, `field`, `mode`, `formula` or `theory`")?;
        let item = match kw.as_str() {
            "space" => Item::Space(self.space(start)?),
            "field" => Item::Field(self.field(start)?),
            "mode" => {
                let (mode, span) = self.ident("a mode")?;
                if !["free", "commutative", "supercommutative"].contains(&mode.as_str()) {
                    return Err(Diagnostic::error(span, format!("unknown mode `{mode}`")));
                }
                Item::Mode(ModeItem { mode, span: start.to(span) })
            }
            "formula" => Item::Formula(self.formula(start)?),
            "theory" => Item::Theory(self.theory(start)?),
            other => return Err(Diagnostic::error(start, format!("expected an item keyword, found `{other}`"))),
        };
        Ok(item)
    }

    fn space(&mut self, start: Span) -> PResult<SpaceItem> {
        let galilean = self.eat_word("galilean");
        let mut dim = None;
        let mut sig = None;
        loop {
            if self.eat_word("dim") {
                self.expect(Tok::Eq)?;
                dim = Some(self.usize_lit("a dimension")?);
            } else if self.is_word("signature") {
                let at = self.bump().span;
                if galilean {
                    return Err(Diagnostic::error(at, "a Galilean spacetime has no signature"));
                }
                self.expect(Tok::Eq)?;
                let (p, _) = self.usize_lit("p")?;
                self.expect(Tok::Comma)?;
                let (q, _) = self.usize_lit("q")?;
                sig = Some((p, q));
            } else {
                break;
            }
        }
        let span = start.to(self.prev_span());
        let (dim, kind) = match (galilean, dim, sig) {
            (true, Some((d, _)), _) => (d, SpaceKind::Galilean),
            (true, None, _) => return Err(Diagnostic::error(span, "a Galilean spacetime needs `dim=`")),
            (false, _, None) => return Err(Diagnostic::error(span, "a Lorentzian spacetime needs `signature=p,q`")),
            (false, d, Some((p, q))) => {
                if let Some((d, at)) = d {
                    if d != p + q {
                        return Err(Diagnostic::error(at, format!("dim={d} does not match signature {p},{q}")));
                    }
                }
                (p + q, SpaceKind::Lorentz { p, q })
            }
        };
        if !(2..=8).contains(&dim) {
            return Err(Diagnostic::error(span, format!("spacetime dimension {dim} is outside 2..=8")));
        }
        if let SpaceKind::Lorentz { p: 0, .. } = kind {
            return Err(Diagnostic::error(span, "the signature needs at least one time direction"));
        }
        Ok(SpaceItem { dim, kind, span })
    }

    fn field(&mut self, start: Span) -> PResult<FieldItem> {
        let (name, _) = self.name("a field name")?;
        self.expect(Tok::Colon)?;
        let rep = self.rep_sum()?;
        let mut complex = false;
        let mut hash = None;
        loop {
            if self.eat_word("complex") {
                complex = true;
            } else if self.eat_word("real") {
                complex = false;
            } else if self.eat_word("hash") {
                self.expect(Tok::Eq)?;
                hash = Some(self.ident("a hash name")?.0);
            } else {
                break;
            }
        }
        Ok(FieldItem { name, rep, complex, hash, span: start.to(self.prev_span()) })
    }

    fn rep_op(&self, op: &Tok) -> bool {
        *self.peek() == Tok::LParen && self.peek_at(1) == op && *self.peek_at(2) == Tok::RParen
    }

    fn rep_sum(&mut self) -> PResult<RepSpec> {
        let mut r = self.rep_tensor()?;
        while self.rep_op(&Tok::Plus) {
            self.pos += 3;
            r = RepSpec::sum(r, self.rep_tensor()?);
        }
        Ok(r)
    }

    fn rep_tensor(&mut self) -> PResult<RepSpec> {
        let mut r = self.rep_atom()?;
        while self.rep_op(&Tok::Ident("x".into())) {
            self.pos += 3;
            r = RepSpec::tensor(r, self.rep_atom()?);
        }
        Ok(r)
    }

    fn rep_atom(&mut self) -> PResult<RepSpec> {
        self.descend()?;
        let out = self.rep_atom_inner();
        self.depth -= 1;
        out
    }

    fn rep_atom_inner(&mut self) -> PResult<RepSpec> {
        if *self.peek() == Tok::LParen {
            self.bump();
            let r = self.rep_sum()?;
            self.expect(Tok::RParen)?;
            return Ok(r);
        }
        let (w, span) = self.ident("a representation")?;
        let wrap = |p: &mut Self, f: fn(RepSpec) -> RepSpec| -> PResult<RepSpec> {
            p.expect(Tok::LParen)?;
            let r = p.rep_sum()?;
            p.expect(Tok::RParen)?;
            Ok(f(r))
        };
        match w.as_str() {
            "vector" => Ok(RepSpec::Vector),
            "weyl_left" => Ok(RepSpec::WeylLeft),
            "weyl_right" => Ok(RepSpec::WeylRight),
            "dirac" => Ok(RepSpec::dirac()),
            "scalar" => Ok(RepSpec::Trivial(1)),
            "trivial" => {
                if *self.peek() == Tok::LParen {
                    self.bump();
                    let (n, at) = self.usize_lit("a dimension")?;
                    self.expect(Tok::RParen)?;
                    if n == 0 || n > 64 {
                        return Err(Diagnostic::error(at, "trivial dimension must be in 1..=64"));
                    }
                    Ok(RepSpec::Trivial(n))
                } else {
                    Ok(RepSpec::Trivial(1))
                }
            }
            "dual" => wrap(self, RepSpec::dual),
            "antisym2" => wrap(self, RepSpec::antisym2),
            "sym2" => wrap(self, RepSpec::sym2),
            "pseudo" => wrap(self, RepSpec::pseudo),
            other => Err(Diagnostic::error(span, format!("unknown representation `{other}`"))),
        }
    }

    fn formula(&mut self, start: Span) -> PResult<FormulaItem> {
        let (name, _) = self.name("a formula name")?;
        let family = if *self.peek() == Tok::LBracket {
            self.bump();
            let r = self.range()?;
            self.expect(Tok::RBracket)?;
            Some(r)
        } else {
            None
        };
        self.expect(Tok::Eq)?;
        let body = self.expr()?;
        Ok(FormulaItem { name, family, body, span: start.to(self.prev_span()) })
    }

    fn theory_name(&mut self) -> PResult<(String, Span)> {
        // theory names have their own namespace; hyphenated names such as
        // `counterexample-2d` are written without spaces
        let (mut name, mut span) = self.ident("a theory name")?;
        loop {
            let glued = self.span().start == span.end;
            match self.peek().clone() {
                Tok::Ident(s) | Tok::Int(s) if glued => {
                    name.push_str(&s);
                    span = span.to(self.bump().span);
                }
                Tok::Minus if glued => {
                    let next = self.tokens[self.pos + 1].clone();
                    match next.tok {
                        Tok::Ident(s) | Tok::Int(s) if next.span.start == self.span().end => {
                            self.pos += 2;
                            name = format!("{name}-{s}");
                            span = span.to(next.span);
                        }
                        _ => break,
                    }
                }
                _ => break,
            }
        }
        Ok((name, span))
    }

    fn name_list(&mut self) -> PResult<Vec<(String, Span)>> {
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        while *self.peek() != Tok::RBrace {
            out.push(self.name("a formula name")?);
            if *self.peek() != Tok::Comma {
                break;
            }
            self.bump();
        }
        self.expect(Tok::RBrace)?;
        Ok(out)
    }

    fn theory(&mut self, start: Span) -> PResult<TheoryItem> {
        let (name, _) = self.theory_name()?;
        let interpretation = match self.peek() {
            Tok::Ident(w) if w == "density" || w == "equations" => Some(self.bump().tok.text().to_string()),
            _ => None,
        };
        let members = self.name_list()?;
        let modulo = if self.eat_word("modulo") { self.name_list()? } else { Vec::new() };
        Ok(TheoryItem { name, interpretation, members, modulo, span: start.to(self.prev_span()) })
    }

    fn range(&mut self) -> PResult<Range> {
        let (var, _) = self.name("an index variable")?;
        self.expect_word("in")?;
        let (lo, _) = self.usize_lit("a lower bound")?;
        self.expect(Tok::DotDot)?;
        let (hi, at) = self.usize_lit("an upper bound")?;
        if hi < lo || hi - lo > MAX_RANGE {
            return Err(Diagnostic::error(at, format!("range {lo}..{hi} must be increasing and at most {MAX_RANGE} long")));
        }
        Ok(Range { var, lo, hi })
    }

    fn index(&mut self) -> PResult<Index> {
        match self.peek().clone() {
            Tok::Int(_) => Ok(Index::Lit(self.usize_lit("an index")?.0)),
            Tok::Ident(_) => Ok(Index::Var(self.name("an index")?.0)),
            _ => Err(self.unexpected("an index")),
        }
    }

    fn indices(&mut self) -> PResult<Vec<Index>> {
        self.expect(Tok::LBracket)?;
        let mut out = vec![self.index()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(self.index()?);
        }
        self.expect(Tok::RBracket)?;
        Ok(out)
    }

    fn indices_n(&mut self, n: usize) -> PResult<Vec<Index>> {
        let at = self.span();
        let ix = self.indices()?;
        if ix.len() != n {
            return Err(Diagnostic::error(at.to(self.prev_span()), format!("expected {n} indices, found {}", ix.len())));
        }
        Ok(ix)
    }

    fn descend(&mut self) -> PResult<()> {
        if self.depth >= MAX_DEPTH {
            return Err(Diagnostic::error(self.span(), "expression is nested too deeply"));
        }
        self.depth += 1;
        Ok(())
    }

    pub fn expr(&mut self) -> PResult<Expr> {
        self.descend()?;
        let out = self.sum_level();
        self.depth -= 1;
        out
    }

    fn sum_level(&mut self) -> PResult<Expr> {
        let mut e = self.product()?;
        loop {
            let kind: fn(Box<Expr>, Box<Expr>) -> ExprKind = match self.peek() {
                Tok::Plus => ExprKind::Add,
                Tok::Minus => ExprKind::Sub,
                _ => return Ok(e),
            };
            self.bump();
            let rhs = self.product()?;
            let span = e.span.to(rhs.span);
            e = Expr::new(kind(Box::new(e), Box::new(rhs)), span);
        }
    }

    fn product(&mut self) -> PResult<Expr> {
        let mut e = self.unary()?;
        loop {
            let kind: fn(Box<Expr>, Box<Expr>) -> ExprKind = match self.peek() {
                Tok::Star => ExprKind::Mul,
                Tok::Slash => ExprKind::Div,
                _ => return Ok(e),
            };
            self.bump();
            let rhs = self.unary()?;
            let span = e.span.to(rhs.span);
            e = Expr::new(kind(Box::new(e), Box::new(rhs)), span);
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        if *self.peek() == Tok::Minus {
            let start = self.bump().span;
            self.descend()?;
            let inner = self.unary();
            self.depth -= 1;
            let inner = inner?;
            let span = start.to(inner.span);
            return Ok(Expr::new(ExprKind::Neg(Box::new(inner)), span));
        }
        let base = self.primary()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let (k, at) = self.usize_lit("an exponent")?;
            if k > MAX_POWER as usize {
                return Err(Diagnostic::error(at, format!("exponent {k} exceeds {MAX_POWER}")));
            }
            let span = base.span.to(at);
            return Ok(Expr::new(ExprKind::Pow(Box::new(base), k as u32), span));
        }
        Ok(base)
    }

    fn primary(&mut self) -> PResult<Expr> {
        self.descend()?;
        let out = self.primary_inner();
        self.depth -= 1;
        out
    }

    fn primary_inner(&mut self) -> PResult<Expr> {
        let start = self.span();
        let done = |p: &Self, kind| Ok(Expr::new(kind, start.to(p.prev_span())));
        match self.peek().clone() {
            Tok::Int(s) => {
                self.bump();
                done(self, ExprKind::Int(s))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(Expr { span: start.to(self.prev_span()), ..e })
            }
            Tok::Ident(w) => {
                self.bump();
                match w.as_str() {
                    "i" => done(self, ExprKind::I),
                    "d" => {
                        let indices = self.indices()?;
                        let body = Box::new(self.primary()?);
                        done(self, ExprKind::Deriv { indices, body })
                    }
                    "sum" => {
                        self.expect(Tok::LParen)?;
                        let range = self.range()?;
                        self.expect(Tok::Comma)?;
                        let body = Box::new(self.expr()?);
                        self.expect(Tok::RParen)?;
                        done(self, ExprKind::Sum { range, body })
                    }
                    "conj" | "bar" => {
                        self.expect(Tok::LParen)?;
                        let (name, _) = self.name("a field name")?;
                        self.expect(Tok::RParen)?;
                        if w == "conj" {
                            let indices = self.indices()?;
                            done(self, ExprKind::Field { name, conj: true, indices })
                        } else {
                            let index = self.indices_n(1)?.remove(0);
                            done(self, ExprKind::Bar { name, index, sugar: false })
                        }
                    }
                    "psibar" => {
                        let index = self.indices_n(1)?.remove(0);
                        done(self, ExprKind::Bar { name: "psi".into(), index, sugar: true })
                    }
                    "gamma" => {
                        let mu = self.indices_n(1)?.remove(0);
                        let mut ab = self.indices_n(2)?;
                        let b = ab.pop().expect("two indices");
                        let a = ab.pop().expect("two indices");
                        done(self, ExprKind::Gamma { mu, a, b })
                    }
                    "gamma5" => {
                        let mut ab = self.indices_n(2)?;
                        let b = ab.pop().expect("two indices");
                        let a = ab.pop().expect("two indices");
                        done(self, ExprKind::Gamma5 { a, b })
                    }
                    "eta" => {
                        let mut ab = self.indices_n(2)?;
                        let nu = ab.pop().expect("two indices");
                        let mu = ab.pop().expect("two indices");
                        done(self, ExprKind::Eta { mu, nu })
                    }
                    _ if is_reserved(&w) => Err(Diagnostic::error(start, format!("unexpected keyword `{w}` in expression"))),
                    _ => {
                        if *self.peek() != Tok::LBracket {
                            return Err(Diagnostic::error(start, format!("`{w}` needs an index, as in `{w}[0]`")));
                        }
                        let indices = self.indices()?;
                        done(self, ExprKind::Field { name: w, conj: false, indices })
                    }
                }
            }
            _ => Err(self.unexpected("an expression")),
        }
    }
}
