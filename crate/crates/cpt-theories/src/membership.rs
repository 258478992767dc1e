//! Deciding whether a formula lies in a span of formulae.

use std::collections::BTreeMap;

use cpt_algebra::matrix::solve;
use cpt_algebra::{AlgebraElement, Matrix, Monomial, Scalar};
use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::TheoryError;
use crate::theory::Span;

/// Default bound on the number of distinct monomials in one linear solve.
pub const SUPPORT_CAP: usize = 20_000;
/// Float membership threshold, relative to max(1, ‖F‖).
pub const MEMBERSHIP_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Membership<S> {
    pub member: bool,
    /// Coefficients of the affine generators followed by the linear ones.
    pub certificate: Option<Vec<S>>,
    /// ‖A·a − F‖∞ in float mode.
    pub residual: Option<f64>,
}

pub fn affine_membership<S: Scalar>(f: &AlgebraElement<S>, generators: &[AlgebraElement<S>]) -> Result<Membership<S>, TheoryError> {
    span_membership(f, &Span { affine: generators.to_vec(), linear: Vec::new() }, SUPPORT_CAP)
}

pub fn span_membership<S: Scalar>(f: &AlgebraElement<S>, span: &Span<S>, cap: usize) -> Result<Membership<S>, TheoryError> {
    let mut rows: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for g in span.iter().chain(std::iter::once(f)) {
        if !g.same_space(f) || g.mode() != f.mode() {
            return Err(TheoryError::Mismatch("formula and span live in different algebras".into()));
        }
        for m in g.terms().keys() {
            let next = rows.len();
            rows.entry(m).or_insert(next);
        }
        if rows.len() > cap {
            return Err(TheoryError::SupportTooLarge { support: rows.len(), cap });
        }
    }
    let affine = !span.affine.is_empty();
    let n_rows = rows.len() + usize::from(affine);
    let n_cols = span.len();
    if n_cols == 0 {
        let member = if S::EXACT { f.is_zero() } else { f.max_norm() < MEMBERSHIP_TOL };
        return Ok(Membership { member, certificate: member.then(Vec::new), residual: (!S::EXACT).then(|| f.max_norm()) });
    }
    let mut a = Matrix::<S>::zeros(n_rows, n_cols);
    for (col, g) in span.iter().enumerate() {
        for (m, c) in g.terms() {
            a[(rows[m], col)] = c.clone();
        }
    }
    let mut b = vec![S::zero(); n_rows];
    for (m, c) in f.terms() {
        b[rows[m]] = c.clone();
    }
    if affine {
        let last = n_rows - 1;
        for col in 0..span.affine.len() {
            a[(last, col)] = S::one();
        }
        b[last] = S::one();
    }
    if S::EXACT {
        let x = solve(&a, &b);
        return Ok(Membership { member: x.is_some(), certificate: x, residual: None });
    }
    let (x, residual) = least_squares(&a, &b);
    let member = residual < MEMBERSHIP_TOL * f.max_norm().max(1.0);
    Ok(Membership { member, certificate: member.then(|| x.into_iter().map(S::from_c64).collect()), residual: Some(residual) })
}

fn least_squares<S: Scalar>(a: &Matrix<S>, b: &[S]) -> (Vec<Complex64>, f64) {
    let am = DMatrix::from_fn(a.rows(), a.cols(), |r, c| a[(r, c)].to_c64());
    let bm = DMatrix::from_fn(b.len(), 1, |r, _| b[r].to_c64());
    let svd = am.clone().svd(true, true);
    let top = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let x = svd.solve(&bm, 1e-11 * top.max(1e-300)).expect("both factors computed");
    let residual = (&am * &x - &bm).iter().map(|z| z.norm()).fold(0.0, f64::max);
    (x.iter().cloned().collect(), residual)
}
