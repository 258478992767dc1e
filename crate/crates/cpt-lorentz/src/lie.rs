//! The Lorentz Lie algebra, matrix exponentials and seeded sampling of L↑+.

use cpt_algebra::par::split_seed;
use cpt_algebra::{Gq, Matrix, Scalar};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::LorentzError;
use crate::signature::{classify_component, Component, Signature};

/// Generator f_ab = E_ab·η_bb − E_ba·η_aa (a < b), satisfying fη = −ηfᵀ.
pub fn lie_generator(sig: Signature, a: usize, b: usize) -> Matrix<Gq> {
    let d = sig.dim();
    let mut f = Matrix::zeros(d, d);
    f[(a, b)] = Gq::from_i64(sig.eta_entry(b));
    f[(b, a)] = Gq::from_i64(-sig.eta_entry(a));
    f
}

/// The d(d−1)/2 generators in lexicographic plane order.
pub fn lie_basis(sig: Signature) -> Vec<Matrix<Gq>> {
    lie_planes(sig).into_iter().map(|(a, b)| lie_generator(sig, a, b)).collect()
}

pub fn lie_planes(sig: Signature) -> Vec<(usize, usize)> {
    let d = sig.dim();
    (0..d).flat_map(|a| (a + 1..d).map(move |b| (a, b))).collect()
}

pub fn is_lie_element<S: Scalar>(sig: Signature, f: &Matrix<S>) -> bool {
    let eta = sig.eta::<S>();
    f.mul(&eta).add(&eta.mul(&f.transpose())).is_zero()
}

fn one_norm(m: &Matrix<Complex64>) -> f64 {
    (0..m.cols()).map(|c| m.col(c).iter().map(|x| x.norm()).sum::<f64>()).fold(0.0, f64::max)
}

/// Scaling and squaring with a Taylor series on the scaled matrix.
pub fn expm(x: &Matrix<Complex64>) -> Matrix<Complex64> {
    let n = x.rows();
    let norm = one_norm(x);
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = x.scale(&Complex64::new(0.5f64.powi(squarings as i32), 0.0));
    let mut result = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for k in 1..=30 {
        term = term.mul(&scaled).scale(&Complex64::new(1.0 / k as f64, 0.0));
        result = result.add(&term);
        if one_norm(&term) < 1e-18 {
            break;
        }
    }
    for _ in 0..squarings {
        result = result.mul(&result);
    }
    result
}

pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(split_seed(seed, index))
}

/// Real combination of the basis with coefficients uniform in [−scale, scale].
pub fn random_lie_element(sig: Signature, rng: &mut impl Rng, scale: f64) -> Matrix<Complex64> {
    let d = sig.dim();
    lie_basis(sig).iter().fold(Matrix::zeros(d, d), |acc, f| {
        let c = rng.random_range(-scale..=scale);
        acc.add(&f.map(|x| x.to_c64() * c))
    })
}

/// Complex combination of the basis.
pub fn random_complex_lie_element(sig: Signature, rng: &mut impl Rng, scale: f64) -> Matrix<Complex64> {
    let d = sig.dim();
    lie_basis(sig).iter().fold(Matrix::zeros(d, d), |acc, f| {
        let c = Complex64::new(rng.random_range(-scale..=scale), rng.random_range(-scale..=scale));
        acc.add(&f.map(|x| x.to_c64() * c))
    })
}

/// An isometry together with its component tag.
#[derive(Debug, Clone, PartialEq)]
pub struct LorentzElement<S> {
    pub signature: Signature,
    pub matrix: Matrix<S>,
    pub component: Component,
}

impl<S: Scalar> LorentzElement<S> {
    pub fn new(signature: Signature, matrix: Matrix<S>) -> Result<Self, LorentzError> {
        let component = classify_component(signature, &matrix)?;
        Ok(LorentzElement { signature, matrix, component })
    }

    pub fn identity(signature: Signature) -> Self {
        LorentzElement { signature, matrix: Matrix::identity(signature.dim()), component: Component::ProperOrthochronous }
    }

    pub fn pt_representative(signature: Signature) -> Self {
        LorentzElement {
            signature,
            matrix: signature.pt_representative(),
            component: Component::ProperNonOrthochronous,
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        LorentzElement {
            signature: self.signature,
            matrix: self.matrix.mul(&other.matrix),
            component: self.component.compose(other.component),
        }
    }

    pub fn inverse(&self) -> Self {
        let eta = self.signature.eta::<S>();
        LorentzElement {
            signature: self.signature,
            matrix: eta.mul(&self.matrix.transpose()).mul(&eta),
            component: self.component,
        }
    }

    pub fn to_float(&self) -> LorentzElement<Complex64> {
        LorentzElement {
            signature: self.signature,
            matrix: self.matrix.map(|x| x.to_c64()),
            component: self.component,
        }
    }
}

/// exp of a random Lie-algebra combination; deterministic per `(seed, index)`.
pub fn sample_proper_ortho(seed: u64, index: u64, sig: Signature) -> LorentzElement<Complex64> {
    let mut rng = rng_for(seed, index);
    let x = random_lie_element(sig, &mut rng, 1.0);
    exp_element(sig, &x)
}

/// exp of an element of the real Lie algebra, which lies in L↑+.
pub fn exp_element(sig: Signature, x: &Matrix<Complex64>) -> LorentzElement<Complex64> {
    let g = expm(x).real_part();
    LorentzElement { signature: sig, matrix: g, component: Component::ProperOrthochronous }
}
