//! Syntax tree of a theory file and its pretty-printer.

use std::fmt;

use cpt_reps::RepSpec;

use crate::diagnostic::Span;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceSpec {
    pub items: Vec<Item>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Space(SpaceItem),
    Field(FieldItem),
    Mode(ModeItem),
    Formula(FormulaItem),
    Theory(TheoryItem),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceKind {
    Lorentz { p: usize, q: usize },
    Galilean,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceItem {
    pub dim: usize,
    pub kind: SpaceKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldItem {
    pub name: String,
    pub rep: RepSpec,
    pub complex: bool,
    pub hash: Option<String>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeItem {
    pub mode: String,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Range {
    pub var: String,
    pub lo: usize,
    pub hi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaItem {
    pub name: String,
    pub family: Option<Range>,
    pub body: Expr,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoryItem {
    pub name: String,
    pub interpretation: Option<String>,
    pub members: Vec<(String, Span)>,
    pub modulo: Vec<(String, Span)>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Index {
    Lit(usize),
    Var(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Int(String),
    I,
    /// `name[i, ...]` or `conj(name)[i, ...]`.
    Field { name: String, conj: bool, indices: Vec<Index> },
    /// `bar(name)[a]`; `psibar[a]` when `sugar` is set.
    Bar { name: String, index: Index, sugar: bool },
    Gamma { mu: Index, a: Index, b: Index },
    Gamma5 { a: Index, b: Index },
    Eta { mu: Index, nu: Index },
    Deriv { indices: Vec<Index>, body: Box<Expr> },
    Sum { range: Range, body: Box<Expr> },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// Spans are ignored by equality so that reparsed printed trees compare equal.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Expr {}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }

    fn precedence(&self) -> u8 {
        match &self.kind {
            ExprKind::Add(..) | ExprKind::Sub(..) => 1,
            ExprKind::Mul(..) | ExprKind::Div(..) => 2,
            ExprKind::Neg(..) => 3,
            ExprKind::Pow(..) => 4,
            _ => 5,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Lit(n) => write!(f, "{n}"),
            Index::Var(v) => f.write_str(v),
        }
    }
}

fn join(ix: &[Index]) -> String {
    ix.iter().map(Index::to_string).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}..{}", self.var, self.lo, self.hi)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Int(n) => f.write_str(n),
            ExprKind::I => f.write_str("i"),
            ExprKind::Field { name, conj: false, indices } => write!(f, "{name}[{}]", join(indices)),
            ExprKind::Field { name, conj: true, indices } => write!(f, "conj({name})[{}]", join(indices)),
            ExprKind::Bar { index, sugar: true, .. } => write!(f, "psibar[{index}]"),
            ExprKind::Bar { name, index, sugar: false } => write!(f, "bar({name})[{index}]"),
            ExprKind::Gamma { mu, a, b } => write!(f, "gamma[{mu}][{a}, {b}]"),
            ExprKind::Gamma5 { a, b } => write!(f, "gamma5[{a}, {b}]"),
            ExprKind::Eta { mu, nu } => write!(f, "eta[{mu}, {nu}]"),
            ExprKind::Deriv { indices, body } => {
                write!(f, "d[{}] ", join(indices))?;
                body.fmt_at(f, 5)
            }
            ExprKind::Sum { range, body } => write!(f, "sum({range}, {body})"),
            ExprKind::Neg(e) => {
                f.write_str("-")?;
                e.fmt_at(f, 3)
            }
            ExprKind::Add(a, b) => {
                a.fmt_at(f, 1)?;
                f.write_str(" + ")?;
                b.fmt_at(f, 2)
            }
            ExprKind::Sub(a, b) => {
                a.fmt_at(f, 1)?;
                f.write_str(" - ")?;
                b.fmt_at(f, 2)
            }
            ExprKind::Mul(a, b) => {
                a.fmt_at(f, 2)?;
                f.write_str("*")?;
                b.fmt_at(f, 3)
            }
            ExprKind::Div(a, b) => {
                a.fmt_at(f, 2)?;
                f.write_str("/")?;
                b.fmt_at(f, 3)
            }
            ExprKind::Pow(a, k) => {
                a.fmt_at(f, 5)?;
                write!(f, "^{k}")
            }
        }
    }
}

impl fmt::Display for SourceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            match item {
                Item::Space(s) => match s.kind {
                    SpaceKind::Lorentz { p, q } => writeln!(f, "space dim={} signature={p},{q}", s.dim)?,
                    SpaceKind::Galilean => writeln!(f, "space galilean dim={}", s.dim)?,
                },
                Item::Field(x) => {
                    write!(f, "field {} : {}", x.name, x.rep)?;
                    if x.complex {
                        f.write_str(" complex")?;
                    }
                    if let Some(h) = &x.hash {
                        write!(f, " hash={h}")?;
                    }
                    writeln!(f)?;
                }
                Item::Mode(m) => writeln!(f, "mode {}", m.mode)?,
                Item::Formula(x) => match &x.family {
                    Some(r) => writeln!(f, "formula {}[{r}] = {}", x.name, x.body)?,
                    None => writeln!(f, "formula {} = {}", x.name, x.body)?,
                },
                Item::Theory(t) => {
                    let names = |v: &[(String, Span)]| v.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>().join(", ");
                    write!(f, "theory {}", t.name)?;
                    if let Some(i) = &t.interpretation {
                        write!(f, " {i}")?;
                    }
                    write!(f, " {{ {} }}", names(&t.members))?;
                    if !t.modulo.is_empty() {
                        write!(f, " modulo {{ {} }}", names(&t.modulo))?;
                    }
                    writeln!(f)?;
                }
            }
        }
        Ok(())
    }
}
