//! Field symbols, monomials and algebra elements in canonical form.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::scalar::Scalar;
use crate::space::FieldSymbolSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Free,
    Commutative,
    Supercommutative,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Free => "free",
            Mode::Commutative => "commutative",
            Mode::Supercommutative => "supercommutative",
        })
    }
}

/// Φ^λ with a multiset of derivative directions, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSymbol {
    pub lambda: usize,
    pub derivs: Vec<u8>,
}

impl FieldSymbol {
    pub fn new(lambda: usize, mut derivs: Vec<u8>) -> Self {
        derivs.sort_unstable();
        FieldSymbol { lambda, derivs }
    }

    pub fn plain(lambda: usize) -> Self {
        FieldSymbol { lambda, derivs: Vec::new() }
    }

    pub fn differentiate(&self, mu: u8) -> Self {
        let mut derivs = self.derivs.clone();
        derivs.push(mu);
        FieldSymbol::new(self.lambda, derivs)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<FieldSymbol>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn odd_count(&self, space: &FieldSymbolSpace) -> usize {
        self.0.iter().filter(|s| space.grade(s.lambda) == 1).count()
    }
}

/// Brings a factor list to canonical order for the mode; `None` if the monomial vanishes,
/// otherwise the sign picked up by the reordering.
pub fn canonical_order(space: &FieldSymbolSpace, mode: Mode, factors: &mut [FieldSymbol]) -> Option<bool> {
    match mode {
        Mode::Free => Some(false),
        Mode::Commutative => {
            factors.sort();
            Some(false)
        }
        Mode::Supercommutative => {
            let mut negative = false;
            for i in 1..factors.len() {
                let mut j = i;
                while j > 0 && factors[j - 1] > factors[j] {
                    if space.grade(factors[j - 1].lambda) == 1 && space.grade(factors[j].lambda) == 1 {
                        negative = !negative;
                    }
                    factors.swap(j - 1, j);
                    j -= 1;
                }
            }
            let repeated_odd = factors
                .windows(2)
                .any(|w| w[0] == w[1] && space.grade(w[0].lambda) == 1);
            if repeated_odd {
                None
            } else {
                Some(negative)
            }
        }
    }
}

/// Terms in arbitrary order, prior to [`normal_form`].
#[derive(Debug, Clone)]
pub struct RawElement<S> {
    pub space: Arc<FieldSymbolSpace>,
    pub mode: Mode,
    pub terms: Vec<(Vec<FieldSymbol>, S)>,
}

pub fn normal_form<S: Scalar>(raw: RawElement<S>) -> AlgebraElement<S> {
    let mut out = AlgebraElement::zero(raw.space, raw.mode);
    for (mut factors, c) in raw.terms {
        if let Some(neg) = canonical_order(&out.space, out.mode, &mut factors) {
            out.add_term(Monomial(factors), if neg { -c } else { c });
        }
    }
    out
}

#[derive(Clone)]
pub struct AlgebraElement<S> {
    space: Arc<FieldSymbolSpace>,
    mode: Mode,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> PartialEq for AlgebraElement<S> {
    fn eq(&self, other: &Self) -> bool {
        self.mode == other.mode && self.same_space(other) && self.terms == other.terms
    }
}

impl<S: Scalar> fmt::Debug for AlgebraElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement[{}]({})", self.mode, self)
    }
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn zero(space: Arc<FieldSymbolSpace>, mode: Mode) -> Self {
        AlgebraElement { space, mode, terms: BTreeMap::new() }
    }

    pub fn constant(space: Arc<FieldSymbolSpace>, mode: Mode, c: S) -> Self {
        let mut x = Self::zero(space, mode);
        x.add_term(Monomial::unit(), c);
        x
    }

    pub fn one(space: Arc<FieldSymbolSpace>, mode: Mode) -> Self {
        Self::constant(space, mode, S::one())
    }

    pub fn symbol(space: Arc<FieldSymbolSpace>, mode: Mode, sym: FieldSymbol) -> Self {
        let mut x = Self::zero(space, mode);
        x.add_term(Monomial(vec![sym]), S::one());
        x
    }

    /// A single monomial; the factor list is canonicalized.
    pub fn monomial(space: Arc<FieldSymbolSpace>, mode: Mode, factors: Vec<FieldSymbol>, c: S) -> Self {
        normal_form(RawElement { space, mode, terms: vec![(factors, c)] })
    }

    pub fn space(&self) -> &Arc<FieldSymbolSpace> {
        &self.space
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, S> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, S> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn same_space(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.space, &other.space) || *self.space == *other.space
    }

    /// Adds `c·m` where `m` is already canonical for the mode.
    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.mode != other.mode {
            return Err(AlgebraError::ModeMismatch(self.mode, other.mode));
        }
        if !self.same_space(other) {
            return Err(AlgebraError::SpaceMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&other.scale(&-S::one()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut raw = Vec::with_capacity(self.len() * other.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut f = a.0.clone();
                f.extend(b.0.iter().cloned());
                raw.push((f, x.clone() * y.clone()));
            }
        }
        Ok(normal_form(RawElement { space: self.space.clone(), mode: self.mode, terms: raw }))
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.space.clone(), self.mode);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.space.clone(), self.mode);
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same space and mode");
        }
        acc
    }

    /// Reinterprets the same terms in another mode, re-canonicalizing.
    pub fn with_mode(&self, mode: Mode) -> Self {
        normal_form(RawElement {
            space: self.space.clone(),
            mode,
            terms: self.terms.iter().map(|(m, c)| (m.0.clone(), c.clone())).collect(),
        })
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> AlgebraElement<T> {
        let mut out = AlgebraElement::zero(self.space.clone(), self.mode);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Converts coefficients through `Complex64`; exact to float is the intended use.
    pub fn to_backend<T: Scalar>(&self) -> AlgebraElement<T> {
        self.map_coeffs(|c| T::from_c64(c.to_c64()))
    }

    /// Product order reversed, field symbols fixed.
    pub fn strong_reflection(&self) -> Self {
        normal_form(RawElement {
            space: self.space.clone(),
            mode: self.mode,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.0.iter().rev().cloned().collect(), c.clone()))
                .collect(),
        })
    }

    /// The largest number of odd factors in any term, and whether all terms agree on it.
    pub fn odd_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.odd_count(&self.space));
        let first = it.next().unwrap_or(0);
        it.all(|k| k == first).then_some(first)
    }

    /// Grade mod 2 when homogeneous.
    pub fn parity(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.odd_count(&self.space) % 2);
        let first = it.next().unwrap_or(0);
        it.all(|k| k == first).then_some(first)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        if self.mode != other.mode || !self.same_space(other) {
            return false;
        }
        let diff = self.try_sub(other).expect("checked");
        let scale = self.max_norm().max(other.max_norm()).max(1.0);
        diff.terms.values().all(|c| c.norm() <= crate::scalar::REL_TOL * scale)
    }

    pub fn max_norm(&self) -> f64 {
        self.terms.values().map(Scalar::norm).fold(0.0, f64::max)
    }

    pub fn symbol_text(&self, sym: &FieldSymbol) -> String {
        symbol_text(&self.space, sym)
    }
}

pub fn symbol_text(space: &FieldSymbolSpace, sym: &FieldSymbol) -> String {
    let mut s = String::new();
    for d in &sym.derivs {
        s.push_str(&format!("d[{d}] "));
    }
    s.push_str(space.name(sym.lambda));
    s
}

fn coeff_text<S: Scalar>(c: &S) -> String {
    if S::EXACT {
        return c.to_string();
    }
    let z = c.to_c64();
    let r = |x: f64| {
        let y = (x * 1e12).round() / 1e12;
        if y == 0.0 { 0.0 } else { y }
    };
    let (re, im) = (r(z.re), r(z.im));
    let im_text = match im {
        1.0 => "i".to_string(),
        -1.0 => "-i".to_string(),
        _ => format!("{im}*i"),
    };
    match (re == 0.0, im == 0.0) {
        (_, true) => format!("{re}"),
        (true, false) => im_text,
        (false, false) if im < 0.0 => format!("{re}{im_text}"),
        (false, false) => format!("{re}+{im_text}"),
    }
}

impl<S: Scalar> fmt::Display for AlgebraElement<S> {
    /// Deterministic text form: terms in monomial order, factors joined by `*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let factors: Vec<String> = m.0.iter().map(|s| symbol_text(&self.space, s)).collect();
            let coeff = coeff_text(c);
            let (neg, coeff) = match coeff.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
                _ => (false, coeff),
            };
            let compound = coeff.contains(['+', '-']);
            let mut term = if factors.is_empty() {
                if compound { format!("({coeff})") } else { coeff }
            } else if coeff == "1" {
                factors.join("*")
            } else if compound {
                format!("({coeff})*{}", factors.join("*"))
            } else {
                format!("{coeff}*{}", factors.join("*"))
            };
            if first {
                if neg {
                    term.insert(0, '-');
                }
                f.write_str(&term)?;
            } else {
                write!(f, " {} {term}", if neg { "-" } else { "+" })?;
            }
            first = false;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $call:ident) => {
        impl<S: Scalar> std::ops::$tr for AlgebraElement<S> {
            type Output = AlgebraElement<S>;
            fn $m(self, o: Self) -> Self {
                self.$call(&o).expect("operands must share space and mode")
            }
        }
        impl<S: Scalar> std::ops::$tr for &AlgebraElement<S> {
            type Output = AlgebraElement<S>;
            fn $m(self, o: Self) -> AlgebraElement<S> {
                self.$call(o).expect("operands must share space and mode")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<S: Scalar> std::ops::Neg for AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn neg(self) -> Self {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> std::ops::Neg for &AlgebraElement<S> {
    type Output = AlgebraElement<S>;
    fn neg(self) -> AlgebraElement<S> {
        self.scale(&-S::one())
    }
}
