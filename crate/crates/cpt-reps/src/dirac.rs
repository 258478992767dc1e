//! Chiral-basis gamma matrices for V = weyl_right (+) weyl_left.
//!
//! Holomorphic coordinates are ψₖ = v₂ₖ + i·v₂ₖ₊₁. With the first cover factor acting on
//! weyl_left and the inverse transpose of the second on weyl_right, γ⁰ = [[0,1],[1,0]],
//! γᵏ = [[0,σᵏ],[−σᵏ,0]] and γ⁵ = iγ⁰γ¹γ²γ³ = diag(−1,1).

use cpt_algebra::{Gq, Matrix, Scalar};

pub fn pauli(k: usize) -> Matrix<Gq> {
    let (o, z, i) = (Gq::one(), Gq::zero(), Gq::i());
    match k {
        0 => Matrix::identity(2),
        1 => Matrix::from_rows(vec![vec![z.clone(), o.clone()], vec![o, z]]),
        2 => Matrix::from_rows(vec![vec![z.clone(), -i.clone()], vec![i, z]]),
        3 => Matrix::from_rows(vec![vec![o.clone(), z.clone()], vec![z, -o]]),
        _ => panic!("Pauli index {k} out of range"),
    }
}

fn blocks(a: &Matrix<Gq>, b: &Matrix<Gq>, c: &Matrix<Gq>, d: &Matrix<Gq>) -> Matrix<Gq> {
    Matrix::from_fn(4, 4, |r, s| {
        let m = match (r / 2, s / 2) {
            (0, 0) => a,
            (0, 1) => b,
            (1, 0) => c,
            _ => d,
        };
        m[(r % 2, s % 2)].clone()
    })
}

pub fn gamma(mu: usize) -> Matrix<Gq> {
    let z = Matrix::zeros(2, 2);
    if mu == 0 {
        blocks(&z, &pauli(0), &pauli(0), &z)
    } else {
        blocks(&z, &pauli(mu), &pauli(mu).neg(), &z)
    }
}

pub fn gamma5() -> Matrix<Gq> {
    let mut m = Matrix::identity(4);
    m[(0, 0)] = -Gq::one();
    m[(1, 1)] = -Gq::one();
    m
}

/// Real form of a complex-linear map on the holomorphic coordinates.
pub fn realify<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    Matrix::from_fn(2 * m.rows(), 2 * m.cols(), |r, c| {
        let z = &m[(r / 2, c / 2)];
        match (r % 2, c % 2) {
            (0, 0) | (1, 1) => z.re(),
            (0, 1) => -z.im(),
            _ => z.im(),
        }
    })
}

/// Real form of ψ ↦ m·ψ̄.
pub fn realify_antilinear<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    Matrix::from_fn(2 * m.rows(), 2 * m.cols(), |r, c| {
        let z = &m[(r / 2, c / 2)];
        match (r % 2, c % 2) {
            (0, 0) => z.re(),
            (0, 1) | (1, 0) => z.im(),
            _ => -z.re(),
        }
    })
}

/// ψ ↦ iγ²ψ̄ on the real 8-dimensional V.
pub fn charge_conjugation() -> Matrix<Gq> {
    realify_antilinear(&gamma(2).scale(&Gq::i()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_relations() {
        let eta = [1, -1, -1, -1];
        for mu in 0..4 {
            for nu in 0..4 {
                let anti = gamma(mu).mul(&gamma(nu)).add(&gamma(nu).mul(&gamma(mu)));
                let expected = if mu == nu { 2 * eta[mu] } else { 0 };
                assert_eq!(anti, Matrix::identity(4).scale(&Gq::from_i64(expected)));
            }
        }
        let prod = gamma(0).mul(&gamma(1)).mul(&gamma(2)).mul(&gamma(3)).scale(&Gq::i());
        assert_eq!(prod, gamma5());
    }

    #[test]
    fn charge_conjugation_is_an_involution() {
        let c = charge_conjugation();
        assert!(c.mul(&c).is_identity());
        let m = gamma(1).scale(&Gq::complex(1, 2, 3, 1));
        assert_eq!(realify(&m).mul(&realify(&gamma(2))), realify(&m.mul(&gamma(2))));
    }
}
