//! From syntax to kinematics, formulae and theories.

use std::sync::Arc;

use cpt_actions::{FieldDecl, Kinematics, Spacetime};
use cpt_algebra::{AlgebraElement, FieldSymbol, Gq, Matrix, Mode, Scalar};
use cpt_lorentz::Signature;
use cpt_reps::dirac::{charge_conjugation, gamma, gamma5};
use cpt_reps::RepSpec;
use cpt_theories::{FormalTheory, Interpretation};

use crate::ast::*;
use crate::diagnostic::{Diagnostic, Span};
use crate::parser::parse;

/// A checked source file.
#[derive(Debug, Clone)]
pub struct Program {
    pub kinematics: Arc<Kinematics>,
    pub mode: Mode,
    /// Formula families are flattened to `name[k]`.
    pub formulas: Vec<(String, AlgebraElement<Gq>)>,
    pub theories: Vec<FormalTheory>,
}

impl Program {
    /// The named theory, or the first one.
    pub fn theory(&self, name: Option<&str>) -> Option<&FormalTheory> {
        match name {
            Some(n) => self.theories.iter().find(|t| t.name() == n),
            None => self.theories.first(),
        }
    }
}

pub fn mode_from_word(w: &str) -> Option<Mode> {
    match w {
        "free" => Some(Mode::Free),
        "commutative" => Some(Mode::Commutative),
        "supercommutative" => Some(Mode::Supercommutative),
        _ => None,
    }
}

/// Parses and elaborates; `force_mode` replaces the file's `mode` declaration.
pub fn load(src: &str, force_mode: Option<Mode>) -> Result<Program, Vec<Diagnostic>> {
    elaborate(&parse(src)?, force_mode)
}

pub fn elaborate(spec: &SourceSpec, force_mode: Option<Mode>) -> Result<Program, Vec<Diagnostic>> {
    let mut errors = Vec::new();
    let mut space = None;
    let mut mode = None;
    let mut fields: Vec<&FieldItem> = Vec::new();
    for item in &spec.items {
        match item {
            Item::Space(s) if space.is_some() => errors.push(Diagnostic::error(s.span, "spacetime declared twice")),
            Item::Space(s) => space = Some(s),
            Item::Mode(m) if mode.is_some() => errors.push(Diagnostic::error(m.span, "mode declared twice")),
            Item::Mode(m) => mode = Some(m),
            Item::Field(f) => {
                if fields.iter().any(|g| g.name == f.name) {
                    errors.push(Diagnostic::error(f.span, format!("field `{}` declared twice", f.name)));
                } else {
                    fields.push(f);
                }
            }
            _ => {}
        }
    }
    let Some(space) = space else {
        errors.push(Diagnostic::error(Span { line: 1, col: 1, ..Span::default() }, "missing `space` declaration"));
        return Err(errors);
    };
    if fields.is_empty() {
        errors.push(Diagnostic::error(space.span, "no fields declared"));
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    let spacetime = match space.kind {
        SpaceKind::Lorentz { p, q } => Spacetime::Lorentz(Signature { p, q }),
        SpaceKind::Galilean => Spacetime::Galilean(space.dim),
    };
    let mut decls = Vec::new();
    for f in &fields {
        if f.complex && f.rep.dim(space.dim) % 2 == 1 {
            errors.push(Diagnostic::error(f.span, format!("complex field `{}` needs an even real dimension", f.name)));
            continue;
        }
        let mut decl = if f.complex { FieldDecl::complex(&f.name, f.rep.clone()) } else { FieldDecl::real(&f.name, f.rep.clone()) };
        match f.hash.as_deref() {
            None => {}
            Some("cgamma") => decl = decl.with_hash(charge_conjugation()),
            Some("id") => decl = decl.with_hash(Matrix::identity(f.rep.dim(space.dim))),
            Some(other) => errors.push(Diagnostic::error(f.span, format!("unknown hash `{other}`; use `cgamma` or `id`"))),
        }
        decls.push(decl);
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    let kin = match Kinematics::new(spacetime, decls) {
        Ok(k) => Arc::new(k),
        Err(e) => return Err(vec![Diagnostic::error(fields[0].span, e.to_string())]),
    };
    let mode = force_mode.unwrap_or_else(|| mode.and_then(|m| mode_from_word(&m.mode)).unwrap_or(Mode::Supercommutative));
    let ctx = Ctx { kin: &kin, mode, dim: space.dim };

    let mut formulas: Vec<(String, AlgebraElement<Gq>)> = Vec::new();
    let mut families: Vec<(String, Vec<usize>)> = Vec::new();
    for item in &spec.items {
        let Item::Formula(f) = item else { continue };
        if families.iter().any(|(n, _)| *n == f.name) {
            errors.push(Diagnostic::error(f.span, format!("formula `{}` defined twice", f.name)));
            continue;
        }
        let mut members = Vec::new();
        match &f.family {
            None => match ctx.eval(&f.body, &mut Vec::new()) {
                Ok(e) => {
                    members.push(formulas.len());
                    formulas.push((f.name.clone(), e));
                }
                Err(d) => errors.push(d),
            },
            Some(r) => {
                for k in r.lo..r.hi {
                    match ctx.eval(&f.body, &mut vec![(r.var.clone(), k)]) {
                        Ok(e) => {
                            members.push(formulas.len());
                            formulas.push((format!("{}[{k}]", f.name), e));
                        }
                        Err(d) => {
                            errors.push(d);
                            break;
                        }
                    }
                }
            }
        }
        families.push((f.name.clone(), members));
    }
    if !errors.is_empty() {
        return Err(errors);
    }

    let lookup = |names: &[(String, Span)], errors: &mut Vec<Diagnostic>| -> Vec<AlgebraElement<Gq>> {
        let mut out = Vec::new();
        for (n, span) in names {
            match families.iter().find(|(m, _)| m == n) {
                Some((_, idx)) => out.extend(idx.iter().map(|&i| formulas[i].1.clone())),
                None => errors.push(Diagnostic::error(*span, format!("undeclared formula `{n}`"))),
            }
        }
        out
    };
    let mut theories = Vec::new();
    for item in &spec.items {
        let Item::Theory(t) = item else { continue };
        if theories.iter().any(|x: &FormalTheory| x.name() == t.name) {
            errors.push(Diagnostic::error(t.span, format!("theory `{}` defined twice", t.name)));
            continue;
        }
        let gens = lookup(&t.members, &mut errors);
        let extra = lookup(&t.modulo, &mut errors);
        let interp = match t.interpretation.as_deref() {
            Some("density") => Interpretation::Density,
            _ => Interpretation::EquationSet,
        };
        match FormalTheory::new(&t.name, kin.clone(), gens, interp).and_then(|th| th.with_identifications(extra)) {
            Ok(th) => theories.push(th),
            Err(e) => errors.push(Diagnostic::error(t.span, e.to_string())),
        }
    }
    if theories.is_empty() && !formulas.is_empty() {
        let gens = formulas.iter().map(|(_, e)| e.clone()).collect();
        match FormalTheory::new("formulas", kin.clone(), gens, Interpretation::EquationSet) {
            Ok(th) => theories.push(th),
            Err(e) => errors.push(Diagnostic::error(space.span, e.to_string())),
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    Ok(Program { kinematics: kin, mode, formulas, theories })
}

struct Ctx<'a> {
    kin: &'a Arc<Kinematics>,
    mode: Mode,
    dim: usize,
}

type Env = Vec<(String, usize)>;

fn pair_index(n: usize, a: usize, b: usize) -> (usize, i64) {
    let (i, j, s) = if a < b { (a, b, 1) } else { (b, a, -1) };
    ((0..i).map(|r| n - 1 - r).sum::<usize>() + (j - i - 1), s)
}

impl Ctx<'_> {
    fn zero(&self) -> AlgebraElement<Gq> {
        AlgebraElement::zero(self.kin.space().clone(), self.mode)
    }

    fn constant(&self, c: Gq) -> AlgebraElement<Gq> {
        AlgebraElement::constant(self.kin.space().clone(), self.mode, c)
    }

    fn symbol(&self, j: usize) -> AlgebraElement<Gq> {
        AlgebraElement::symbol(self.kin.space().clone(), self.mode, FieldSymbol::new(j, Vec::new()))
    }

    fn index(&self, ix: &Index, env: &Env, span: Span) -> Result<usize, Diagnostic> {
        match ix {
            Index::Lit(n) => Ok(*n),
            Index::Var(v) => env
                .iter()
                .rev()
                .find(|(n, _)| n == v)
                .map(|(_, k)| *k)
                .ok_or_else(|| Diagnostic::error(span, format!("unbound index `{v}`"))),
        }
    }

    fn bounded(&self, ix: &Index, env: &Env, span: Span, n: usize, what: &str) -> Result<usize, Diagnostic> {
        let k = self.index(ix, env, span)?;
        if k >= n {
            return Err(Diagnostic::error(span, format!("index out of range: {what} takes indices 0..{n}, got {k}")));
        }
        Ok(k)
    }

    fn field(&self, name: &str, conj: bool, indices: &[Index], env: &Env, span: Span) -> Result<AlgebraElement<Gq>, Diagnostic> {
        let Some((decl, _, _)) = self.kin.field(name) else {
            return Err(Diagnostic::error(span, format!("undeclared symbol `{name}`")));
        };
        let count = self.kin.symbol_count(name).expect("declared field");
        let conj = conj && decl.complex;
        let k = match indices {
            [ix] => self.bounded(ix, env, span, count, &format!("field `{name}`"))?,
            [a, b] => {
                let inner = match &decl.rep {
                    RepSpec::Antisym2(r) if !decl.complex => r.dim(self.dim),
                    _ => return Err(Diagnostic::error(span, format!("`{name}` takes a single index; pairs need a real antisym2 field"))),
                };
                let a = self.bounded(a, env, span, inner, &format!("field `{name}`"))?;
                let b = self.bounded(b, env, span, inner, &format!("field `{name}`"))?;
                if a == b {
                    return Ok(self.zero());
                }
                let (k, s) = pair_index(inner, a, b);
                let j = self.kin.symbol(name, k, false).expect("pair in range");
                return Ok(self.symbol(j).scale(&Gq::from_i64(s)));
            }
            _ => return Err(Diagnostic::error(span, format!("`{name}` takes one or two indices"))),
        };
        Ok(self.symbol(self.kin.symbol(name, k, conj).expect("index in range")))
    }

    fn eval(&self, e: &Expr, env: &mut Env) -> Result<AlgebraElement<Gq>, Diagnostic> {
        let span = e.span;
        Ok(match &e.kind {
            ExprKind::Int(s) => {
                let c = s.bytes().fold(Gq::zero(), |acc, b| acc * Gq::from_i64(10) + Gq::from_i64((b - b'0') as i64));
                self.constant(c)
            }
            ExprKind::I => self.constant(Gq::i()),
            ExprKind::Field { name, conj, indices } => self.field(name, *conj, indices, env, span)?,
            ExprKind::Bar { name, index, .. } => {
                let Some((decl, rep, _)) = self.kin.field(name) else {
                    return Err(Diagnostic::error(span, format!("undeclared symbol `{name}`")));
                };
                if !(decl.complex && rep.dim() == 8 && decl.rep.is_spinorial() && self.dim == 4) {
                    return Err(Diagnostic::error(span, format!("`{name}` is not a Dirac spinor field")));
                }
                let a = self.bounded(index, env, span, 4, "a Dirac adjoint")?;
                let g0 = gamma(0);
                let mut out = self.zero();
                for b in 0..4 {
                    let j = self.kin.symbol(name, b, true).expect("Dirac component");
                    out = out + self.symbol(j).scale(&g0[(b, a)]);
                }
                out
            }
            ExprKind::Gamma { mu, a, b } => {
                let mu = self.bounded(mu, env, span, 4, "gamma")?;
                let a = self.bounded(a, env, span, 4, "gamma")?;
                let b = self.bounded(b, env, span, 4, "gamma")?;
                self.constant(gamma(mu)[(a, b)].clone())
            }
            ExprKind::Gamma5 { a, b } => {
                let a = self.bounded(a, env, span, 4, "gamma5")?;
                let b = self.bounded(b, env, span, 4, "gamma5")?;
                self.constant(gamma5()[(a, b)].clone())
            }
            ExprKind::Eta { mu, nu } => {
                let Spacetime::Lorentz(sig) = self.kin.spacetime() else {
                    return Err(Diagnostic::error(span, "a Galilean spacetime has no metric"));
                };
                let mu = self.bounded(mu, env, span, self.dim, "eta")?;
                let nu = self.bounded(nu, env, span, self.dim, "eta")?;
                self.constant(if mu == nu { Gq::from_i64(sig.eta_entry(mu)) } else { Gq::zero() })
            }
            ExprKind::Deriv { indices, body } => {
                let mut x = self.eval(body, env)?;
                for ix in indices {
                    let mu = self.bounded(ix, env, span, self.dim, "d")?;
                    x = self.derive(&x, mu as u8);
                }
                x
            }
            ExprKind::Sum { range, body } => {
                let mut out = self.zero();
                for k in range.lo..range.hi {
                    env.push((range.var.clone(), k));
                    let term = self.eval(body, env);
                    env.pop();
                    out = out + term?;
                }
                out
            }
            ExprKind::Neg(x) => -self.eval(x, env)?,
            ExprKind::Add(a, b) => self.eval(a, env)? + self.eval(b, env)?,
            ExprKind::Sub(a, b) => self.eval(a, env)? - self.eval(b, env)?,
            ExprKind::Mul(a, b) => self.eval(a, env)? * self.eval(b, env)?,
            ExprKind::Div(a, b) => {
                let num = self.eval(a, env)?;
                let den = self.eval(b, env)?;
                match den.terms().iter().next() {
                    Some((m, c)) if den.len() == 1 && m.degree() == 0 => num.scale(&c.inv().expect("nonzero")),
                    _ => return Err(Diagnostic::error(b.span, "division is only by nonzero constants")),
                }
            }
            ExprKind::Pow(a, k) => self.eval(a, env)?.pow(*k),
        })
    }

    /// Total derivative ∂_μ by the Leibniz rule.
    fn derive(&self, x: &AlgebraElement<Gq>, mu: u8) -> AlgebraElement<Gq> {
        let mut out = self.zero();
        for (mono, c) in x.terms() {
            for k in 0..mono.0.len() {
                let factors = mono
                    .0
                    .iter()
                    .enumerate()
                    .map(|(j, s)| {
                        if j == k {
                            let mut d = s.derivs.clone();
                            d.push(mu);
                            FieldSymbol::new(s.lambda, d)
                        } else {
                            s.clone()
                        }
                    })
                    .collect();
                out = out + AlgebraElement::monomial(self.kin.space().clone(), self.mode, factors, c.clone());
            }
        }
        out
    }
}
