//! Real encoding of Weyl spinors and the sl₂ ⊕ sl₂ image of the Lorentz Lie algebra.

use cpt_algebra::matrix::solve;
use cpt_algebra::{Matrix, Scalar};
use cpt_lorentz::cover::bracket;

/// [v] = (x+iy, z+iw, x−iy, z−iw) as a matrix acting on (x, y, z, w).
pub fn encoding<S: Scalar>() -> Matrix<S> {
    let (o, z, i) = (S::one(), S::zero(), S::i());
    Matrix::from_rows(vec![
        vec![o.clone(), i.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), o.clone(), i.clone()],
        vec![o.clone(), -i.clone(), z.clone(), z.clone()],
        vec![z.clone(), z, o, -i],
    ])
}

pub fn decoding<S: Scalar>() -> Matrix<S> {
    let (h, z) = (S::from_ratio(1, 2), S::zero());
    let hi = S::i() * S::from_ratio(-1, 2);
    Matrix::from_rows(vec![
        vec![h.clone(), z.clone(), h.clone(), z.clone()],
        vec![hi.clone(), z.clone(), -hi.clone(), z.clone()],
        vec![z.clone(), h.clone(), z.clone(), h.clone()],
        vec![z.clone(), hi.clone(), z, -hi],
    ])
}

/// The real-basis matrix of [v] ↦ diag(P, Q)[v].
pub fn encoded<S: Scalar>(p: &Matrix<S>, q: &Matrix<S>) -> Matrix<S> {
    decoding::<S>().mul(&Matrix::block_diag(&[p.clone(), q.clone()])).mul(&encoding())
}

pub fn weyl_left_matrix<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    encoded(a, b)
}

pub fn weyl_right_matrix<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let inv_t = |m: &Matrix<S>| m.inverse().expect("cover factors are invertible").transpose();
    encoded(&inv_t(b), &inv_t(a))
}

/// Complex structure multiplying the holomorphic coordinates x+iy, z+iw by i.
pub fn weyl_complex_structure<S: Scalar>() -> Matrix<S> {
    let (o, z) = (S::one(), S::zero());
    Matrix::from_rows(vec![
        vec![z.clone(), -o.clone(), z.clone(), z.clone()],
        vec![o.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), -o.clone()],
        vec![z.clone(), z.clone(), o, z],
    ])
}

/// The pair (a, b) of traceless 2×2 matrices with a⟨x⟩ + ⟨x⟩bᵀ = ⟨Xx⟩, i.e. the derivative of
/// the cover at the Lie-algebra element X of the (complexified) Minkowski group.
pub fn lie_to_sl2<S: Scalar>(x: &Matrix<S>) -> Option<(Matrix<S>, Matrix<S>)> {
    if (x.rows(), x.cols()) != (4, 4) {
        return None;
    }
    let unit = |k: usize| -> Vec<S> { (0..6).map(|j| if j == k { S::one() } else { S::zero() }).collect() };
    let image = |u: &[S]| -> Vec<S> {
        let a = traceless(&u[..3]);
        let b = traceless(&u[3..]);
        let mut out = Vec::with_capacity(16);
        for mu in 0..4 {
            let e: Vec<S> = (0..4).map(|k| if k == mu { S::one() } else { S::zero() }).collect();
            let bx = bracket(&e);
            let m = a.mul(&bx).add(&bx.mul(&b.transpose()));
            out.extend(m.entries().iter().cloned());
        }
        out
    };
    let cols: Vec<Vec<S>> = (0..6).map(|k| image(&unit(k))).collect();
    let lin = Matrix::from_fn(16, 6, |r, c| cols[c][r].clone());
    let mut rhs = Vec::with_capacity(16);
    for mu in 0..4 {
        rhs.extend(bracket(&x.col(mu)).entries().iter().cloned());
    }
    let u = solve(&lin, &rhs)?;
    let (a, b) = (traceless(&u[..3]), traceless(&u[3..]));
    let check = Matrix::from_rows(vec![image(&u)]);
    check.approx_eq(&Matrix::from_rows(vec![rhs])).then_some((a, b))
}

fn traceless<S: Scalar>(u: &[S]) -> Matrix<S> {
    Matrix::from_rows(vec![vec![u[0].clone(), u[1].clone()], vec![u[2].clone(), -u[0].clone()]])
}
