//! Maps induced on the algebra by maps of W and of spacetime directions.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::element::{normal_form, AlgebraElement, FieldSymbol, Monomial, RawElement};
use crate::error::AlgebraError;
use crate::matrix::Matrix;
use crate::par::{self, Execution};
use crate::scalar::Scalar;
use crate::space::FieldSymbolSpace;

/// A complex-linear or anti-linear map of W, as the images of the basis symbols.
#[derive(Debug, Clone, PartialEq)]
pub struct WMap<S> {
    pub matrix: Matrix<S>,
    pub antilinear: bool,
}

impl<S: Scalar> WMap<S> {
    pub fn identity(n: usize) -> Self {
        WMap { matrix: Matrix::identity(n), antilinear: false }
    }

    pub fn linear(matrix: Matrix<S>) -> Self {
        WMap { matrix, antilinear: false }
    }

    /// λ ↦ *∘λ.
    pub fn star(space: &FieldSymbolSpace) -> Self {
        WMap { matrix: space.conj_matrix().map(S::from_gq), antilinear: true }
    }

    fn op(&self, m: &Matrix<S>) -> Matrix<S> {
        if self.antilinear {
            m.conj()
        } else {
            m.clone()
        }
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &WMap<S>) -> WMap<S> {
        WMap { matrix: then.op(&self.matrix).mul(&then.matrix), antilinear: self.antilinear ^ then.antilinear }
    }

    pub fn is_involution(&self) -> bool {
        self.then(self).matrix.is_identity()
    }

    pub fn require_involution(&self) -> Result<(), AlgebraError> {
        if self.is_involution() {
            Ok(())
        } else {
            Err(AlgebraError::NotInvolutive)
        }
    }

    pub fn apply_row(&self, row: &[S]) -> Vec<S> {
        let row: Vec<S> = if self.antilinear { row.iter().map(Scalar::conj).collect() } else { row.to_vec() };
        self.matrix.vec_mul(&row)
    }
}

/// Images of derivative multisets under a map of spacetime directions.
/// Expansion of a derivative multiset under ω, as (directions, coefficient) pairs.
type Expansion<S> = Arc<Vec<(Vec<u8>, S)>>;

struct DerivCache<S> {
    omega: Matrix<S>,
    memo: Mutex<HashMap<Vec<u8>, Expansion<S>>>,
}

impl<S: Scalar> DerivCache<S> {
    fn new(omega: Matrix<S>) -> Self {
        DerivCache { omega, memo: Mutex::new(HashMap::new()) }
    }

    /// ξ_{a₁}⋯ξ_{aₙ} ↦ Π (ω ξ_{aᵢ}) expanded over sorted multisets.
    fn image(&self, derivs: &[u8]) -> Arc<Vec<(Vec<u8>, S)>> {
        if let Some(hit) = self.memo.lock().expect("cache lock").get(derivs) {
            return hit.clone();
        }
        let mut acc: BTreeMap<Vec<u8>, S> = BTreeMap::new();
        acc.insert(Vec::new(), S::one());
        for &a in derivs {
            let mut next: BTreeMap<Vec<u8>, S> = BTreeMap::new();
            for (ms, c) in &acc {
                for b in 0..self.omega.rows() {
                    let w = &self.omega[(b, a as usize)];
                    if w.is_zero() {
                        continue;
                    }
                    let mut m = ms.clone();
                    m.push(b as u8);
                    m.sort_unstable();
                    let v = c.clone() * w.clone();
                    let e = next.entry(m).or_insert_with(S::zero);
                    *e = e.clone() + v;
                }
            }
            acc = next;
        }
        let out: Arc<Vec<(Vec<u8>, S)>> = Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        self.memo.lock().expect("cache lock").insert(derivs.to_vec(), out.clone());
        out
    }
}

/// An algebra (anti-)automorphism fixed by its values on field symbols:
/// Φ^λ_{ξ…} ↦ Φ^{σ(λ)}_{ω ξ…}.
pub struct SymbolMap<S> {
    pub w: WMap<S>,
    omega: Option<DerivCache<S>>,
}

impl<S: Scalar> Clone for SymbolMap<S> {
    fn clone(&self) -> Self {
        SymbolMap { w: self.w.clone(), omega: self.omega.as_ref().map(|c| DerivCache::new(c.omega.clone())) }
    }
}

impl<S: Scalar> std::fmt::Debug for SymbolMap<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SymbolMap").field("w", &self.w).field("omega", &self.omega()).finish()
    }
}

impl<S: Scalar> SymbolMap<S> {
    /// `omega` is the spacetime matrix acting on derivative directions; `None` leaves them fixed.
    pub fn new(w: WMap<S>, omega: Option<Matrix<S>>) -> Self {
        let omega = omega.filter(|m| !m.is_identity());
        SymbolMap { w, omega: omega.map(DerivCache::new) }
    }

    pub fn identity(space: &FieldSymbolSpace) -> Self {
        SymbolMap::new(WMap::identity(space.len()), None)
    }

    pub fn omega(&self) -> Option<&Matrix<S>> {
        self.omega.as_ref().map(|c| &c.omega)
    }

    pub fn is_antilinear(&self) -> bool {
        self.w.antilinear
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &SymbolMap<S>) -> SymbolMap<S> {
        let w = self.w.then(&then.w);
        let omega = match (self.omega(), then.omega()) {
            (None, None) => None,
            (Some(a), None) => Some(then.w.op(a)),
            (None, Some(b)) => Some(b.clone()),
            (Some(a), Some(b)) => Some(b.mul(&then.w.op(a))),
        };
        SymbolMap::new(w, omega)
    }

    pub fn symbol_image(&self, sym: &FieldSymbol) -> Vec<(FieldSymbol, S)> {
        let row = self.w.matrix.row(sym.lambda);
        let derivs: Arc<Vec<(Vec<u8>, S)>> = match &self.omega {
            Some(c) => c.image(&sym.derivs),
            None => Arc::new(vec![(sym.derivs.clone(), S::one())]),
        };
        let mut out = Vec::new();
        for (k, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (d, w) in derivs.iter() {
                out.push((FieldSymbol { lambda: k, derivs: d.clone() }, c.clone() * w.clone()));
            }
        }
        out
    }

    fn term_image(&self, m: &Monomial, c: &S) -> Vec<(Vec<FieldSymbol>, S)> {
        let c = if self.w.antilinear { c.conj() } else { c.clone() };
        let mut acc: Vec<(Vec<FieldSymbol>, S)> = vec![(Vec::with_capacity(m.degree()), c)];
        for sym in &m.0 {
            let img = self.symbol_image(sym);
            let mut next = Vec::with_capacity(acc.len() * img.len());
            for (f, x) in &acc {
                for (s, y) in &img {
                    let mut g = f.clone();
                    g.push(s.clone());
                    next.push((g, x.clone() * y.clone()));
                }
            }
            acc = next;
        }
        acc
    }

    pub fn apply(&self, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        self.apply_with(Execution::Sequential, x)
    }

    /// Term images are computed independently and merged in monomial order.
    pub fn apply_with(&self, exec: Execution, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        let terms: Vec<(&Monomial, &S)> = x.terms().iter().collect();
        let parts = par::map_slice(exec, &terms, |(m, c)| {
            normal_form(RawElement { space: x.space().clone(), mode: x.mode(), terms: self.term_image(m, c) })
        });
        parts.into_iter().fold(AlgebraElement::zero(x.space().clone(), x.mode()), |acc, p| acc + p)
    }
}

/// A derivation fixed by its values on field symbols, with Leibniz rule in every derivative slot.
#[derive(Debug, Clone)]
pub struct SymbolDerivation<S> {
    pub w: Matrix<S>,
    pub omega: Option<Matrix<S>>,
}

impl<S: Scalar> SymbolDerivation<S> {
    pub fn new(w: Matrix<S>, omega: Option<Matrix<S>>) -> Self {
        SymbolDerivation { w, omega }
    }

    pub fn symbol_image(&self, sym: &FieldSymbol) -> Vec<(FieldSymbol, S)> {
        let mut out = Vec::new();
        for (k, c) in self.w.row(sym.lambda).iter().enumerate() {
            if !c.is_zero() {
                out.push((FieldSymbol { lambda: k, derivs: sym.derivs.clone() }, c.clone()));
            }
        }
        if let Some(om) = &self.omega {
            for slot in 0..sym.derivs.len() {
                let a = sym.derivs[slot] as usize;
                for b in 0..om.rows() {
                    let w = &om[(b, a)];
                    if w.is_zero() {
                        continue;
                    }
                    let mut d = sym.derivs.clone();
                    d[slot] = b as u8;
                    out.push((FieldSymbol::new(sym.lambda, d), w.clone()));
                }
            }
        }
        out
    }

    pub fn apply(&self, x: &AlgebraElement<S>) -> AlgebraElement<S> {
        let mut raw = Vec::new();
        for (m, c) in x.terms() {
            for i in 0..m.degree() {
                for (s, y) in self.symbol_image(&m.0[i]) {
                    let mut f = m.0.clone();
                    f[i] = s;
                    raw.push((f, c.clone() * y));
                }
            }
        }
        normal_form(RawElement { space: x.space().clone(), mode: x.mode(), terms: raw })
    }
}

/// C_$ for an involution `dollar` of W.
pub fn conjugation_c<S: Scalar>(dollar: &WMap<S>, x: &AlgebraElement<S>) -> Result<AlgebraElement<S>, AlgebraError> {
    dollar.require_involution()?;
    Ok(SymbolMap::new(dollar.clone(), None).apply(x))
}

/// †_$ = S∘C_$.
pub fn dagger<S: Scalar>(dollar: &WMap<S>, x: &AlgebraElement<S>) -> Result<AlgebraElement<S>, AlgebraError> {
    Ok(conjugation_c(dollar, x)?.strong_reflection())
}
