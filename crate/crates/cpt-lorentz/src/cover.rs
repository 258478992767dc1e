//! The four-fold cover of the complex proper Lorentz group in four dimensions, as pairs
//! (A, B) of 2×2 complex matrices with det A = det B = ±1.

use std::fmt;

use cpt_algebra::{Gq, Matrix, Scalar};
use num_complex::Complex64;
use rand::Rng;

use crate::error::LorentzError;
use crate::lie::{expm, rng_for};
use crate::signature::{classify_component, Component, Signature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverComponent {
    /// L̃↑+ : (A, Ā), det = 1
    UpPlus,
    /// I·L̃↑+ : (A, Ā), det = −1
    IUpPlus,
    /// L̃↓ᵃ+ : (A, −Ā), det = 1
    DownPlusA,
    /// L̃↓+ : (A, −Ā), det = −1
    DownPlus,
    /// Outside the preimage of the real group.
    Complex,
}

impl fmt::Display for CoverComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverComponent::UpPlus => "L̃↑+",
            CoverComponent::IUpPlus => "IL̃↑+",
            CoverComponent::DownPlusA => "L̃↓ᵃ+",
            CoverComponent::DownPlus => "L̃↓+",
            CoverComponent::Complex => "complex",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoverElement<S> {
    pub a: Matrix<S>,
    pub b: Matrix<S>,
}

/// ⟨x⟩ = [[x0+x3, x1−i x2], [x1+i x2, x0−x3]].
pub fn bracket<S: Scalar>(x: &[S]) -> Matrix<S> {
    let i = S::i();
    Matrix::from_rows(vec![
        vec![x[0].clone() + x[3].clone(), x[1].clone() - i.clone() * x[2].clone()],
        vec![x[1].clone() + i * x[2].clone(), x[0].clone() - x[3].clone()],
    ])
}

/// Inverse of [`bracket`].
pub fn unbracket<S: Scalar>(m: &Matrix<S>) -> Vec<S> {
    let half = S::from_ratio(1, 2);
    let neg_half_i = S::i() * S::from_ratio(-1, 2);
    vec![
        (m[(0, 0)].clone() + m[(1, 1)].clone()) * half.clone(),
        (m[(0, 1)].clone() + m[(1, 0)].clone()) * half.clone(),
        (m[(1, 0)].clone() - m[(0, 1)].clone()) * neg_half_i,
        (m[(0, 0)].clone() - m[(1, 1)].clone()) * half,
    ]
}

fn scalar2<S: Scalar>(c: S) -> Matrix<S> {
    Matrix::diag(&[c.clone(), c])
}

impl<S: Scalar> CoverElement<S> {
    pub fn new(a: Matrix<S>, b: Matrix<S>) -> Result<Self, LorentzError> {
        let shape_ok = [&a, &b].iter().all(|m| m.rows() == 2 && m.cols() == 2);
        if !shape_ok {
            return Err(LorentzError::InvalidCover("factors must be 2×2".into()));
        }
        let (da, db) = (a.det(), b.det());
        let unit = da.approx_eq(&S::one()) || da.approx_eq(&-S::one());
        if !unit || !da.approx_eq(&db) {
            return Err(LorentzError::InvalidCover("need det A = det B = ±1".into()));
        }
        Ok(CoverElement { a, b })
    }

    pub fn identity() -> Self {
        CoverElement { a: Matrix::identity(2), b: Matrix::identity(2) }
    }

    /// τ = (−1, −1).
    pub fn tau() -> Self {
        CoverElement { a: scalar2(-S::one()), b: scalar2(-S::one()) }
    }

    /// I = (i, −i).
    pub fn big_i() -> Self {
        CoverElement { a: scalar2(S::i()), b: scalar2(-S::i()) }
    }

    /// (i𝟙, i𝟙), a lift of the total reflection.
    pub fn total_reflection_lift() -> Self {
        CoverElement { a: scalar2(S::i()), b: scalar2(S::i()) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        CoverElement { a: self.a.mul(&o.a), b: self.b.mul(&o.b) }
    }

    pub fn inverse(&self) -> Self {
        CoverElement {
            a: self.a.inverse().expect("det ±1"),
            b: self.b.inverse().expect("det ±1"),
        }
    }

    pub fn neg(&self) -> Self {
        CoverElement { a: self.a.neg(), b: self.b.neg() }
    }

    pub fn det(&self) -> S {
        self.a.det()
    }

    /// (A, B) ↦ (B̄, Ā).
    pub fn conjugate(&self) -> Self {
        CoverElement { a: self.b.conj(), b: self.a.conj() }
    }

    pub fn approx_eq(&self, o: &Self) -> bool {
        self.a.approx_eq(&o.a) && self.b.approx_eq(&o.b)
    }

    pub fn component(&self) -> CoverComponent {
        let abar = self.a.conj();
        let det_one = self.det().approx_eq(&S::one());
        if self.b.approx_eq(&abar) {
            if det_one { CoverComponent::UpPlus } else { CoverComponent::IUpPlus }
        } else if self.b.approx_eq(&abar.neg()) {
            if det_one { CoverComponent::DownPlusA } else { CoverComponent::DownPlus }
        } else {
            CoverComponent::Complex
        }
    }

    /// ⟨π(A,B)x⟩ = A⟨x⟩Bᵀ as a complex 4×4 matrix.
    pub fn project_complex(&self) -> Matrix<S> {
        let bt = self.b.transpose();
        let cols: Vec<Vec<S>> = (0..4)
            .map(|mu| {
                let e: Vec<S> = (0..4).map(|k| if k == mu { S::one() } else { S::zero() }).collect();
                unbracket(&self.a.mul(&bracket(&e)).mul(&bt))
            })
            .collect();
        Matrix::from_fn(4, 4, |r, c| cols[c][r].clone())
    }

    /// The real Lorentz transformation; elements outside the real preimage are rejected.
    pub fn project(&self) -> Result<Matrix<S>, LorentzError> {
        let m = self.project_complex();
        if !m.is_real() {
            return Err(LorentzError::InvalidCover("projection is not real".into()));
        }
        Ok(m.real_part())
    }

    pub fn projected_component(&self) -> Result<Component, LorentzError> {
        classify_component(Signature::MINKOWSKI, &self.project()?)
    }

    pub fn to_float(&self) -> CoverElement<Complex64> {
        CoverElement { a: self.a.map(|x| x.to_c64()), b: self.b.map(|x| x.to_c64()) }
    }
}

impl CoverElement<Gq> {
    pub fn from_i64(a: [[(i64, i64); 2]; 2], b: [[(i64, i64); 2]; 2]) -> Result<Self, LorentzError> {
        let m = |x: [[(i64, i64); 2]; 2]| {
            Matrix::from_rows(x.iter().map(|r| r.iter().map(|&(re, im)| Gq::complex(re, 1, im, 1)).collect()).collect())
        };
        CoverElement::new(m(a), m(b))
    }
}

/// exp of a random traceless complex 2×2 matrix: an element of SL(2,ℂ).
pub fn random_sl2(rng: &mut impl Rng, scale: f64) -> Matrix<Complex64> {
    let mut c = || Complex64::new(rng.random_range(-scale..=scale), rng.random_range(-scale..=scale));
    let (x, y, z) = (c(), c(), c());
    expm(&Matrix::from_rows(vec![vec![x, y], vec![z, -x]]))
}

/// A sample from the requested component (or from the whole complex group).
pub fn sample_cover(seed: u64, index: u64, component: CoverComponent) -> CoverElement<Complex64> {
    let mut rng = rng_for(seed, index);
    let a = random_sl2(&mut rng, 1.0);
    let abar = a.conj();
    let i = Complex64::new(0.0, 1.0);
    match component {
        CoverComponent::UpPlus => CoverElement { a, b: abar },
        CoverComponent::DownPlusA => CoverElement { b: abar.neg(), a },
        CoverComponent::IUpPlus => CoverElement { a: a.scale(&i), b: abar.scale(&-i) },
        CoverComponent::DownPlus => CoverElement { a: a.scale(&i), b: abar.scale(&i) },
        CoverComponent::Complex => {
            let b = random_sl2(&mut rng, 1.0);
            CoverElement { a, b }
        }
    }
}
