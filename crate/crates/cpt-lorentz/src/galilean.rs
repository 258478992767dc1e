//! The Galilean group of (t, x) ∈ ℝ × ℝ^{d−1}: matrices [[a, 0], [v, R]] with a = ±1, R orthogonal.

use cpt_algebra::{Gq, Matrix, Scalar};
use num_complex::Complex64;

use crate::lie::{expm, random_lie_element, rng_for};
use crate::signature::{Component, Signature};

/// Rotation generators of the spatial block followed by the boosts x_k ↦ x_k + v·t.
pub fn galilean_lie_basis(d: usize) -> Vec<Matrix<Gq>> {
    let mut out = Vec::new();
    for a in 1..d {
        for b in a + 1..d {
            let mut f = Matrix::zeros(d, d);
            f[(a, b)] = -Gq::one();
            f[(b, a)] = Gq::one();
            out.push(f);
        }
    }
    for k in 1..d {
        let mut f = Matrix::zeros(d, d);
        f[(k, 0)] = Gq::one();
        out.push(f);
    }
    out
}

pub fn is_galilean<S: Scalar>(g: &Matrix<S>) -> bool {
    let d = g.rows();
    if !g.is_square() || !g.is_real() {
        return false;
    }
    let a = g[(0, 0)].clone();
    if !(a.clone() * a).approx_eq(&S::one()) || (1..d).any(|k| !g[(0, k)].is_zero()) {
        return false;
    }
    let spatial: Vec<usize> = (1..d).collect();
    let r = g.submatrix(&spatial, &spatial);
    r.transpose().mul(&r).is_identity()
}

/// Properness from det; orthochronous when the time coefficient `a` is positive.
pub fn galilean_component<S: Scalar>(g: &Matrix<S>) -> Option<Component> {
    if !is_galilean(g) {
        return None;
    }
    Some(Component::from_flags(g.det().to_c64().re > 0.0, g[(0, 0)].to_c64().re > 0.0))
}

/// t ↦ −t together with a spatial reflection so that the determinant is +1.
pub fn galilean_time_reversal(d: usize) -> Matrix<Gq> {
    let entries: Vec<Gq> = (0..d).map(|i| if i <= 1 { -Gq::one() } else { Gq::one() }).collect();
    Matrix::diag(&entries)
}

pub fn sample_galilean(seed: u64, index: u64, d: usize) -> Matrix<Complex64> {
    let mut rng = rng_for(seed, index);
    // the rotation part is drawn as a Euclidean rotation; boosts are added separately
    let euclid = Signature { p: 1, q: d - 1 };
    let x = random_lie_element(euclid, &mut rng, 1.0);
    let mut gen = Matrix::<Complex64>::zeros(d, d);
    for a in 1..d {
        for b in 1..d {
            gen[(a, b)] = x[(a, b)];
        }
        gen[(a, 0)] = x[(0, a)];
    }
    expm(&gen).real_part()
}
