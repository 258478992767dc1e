//! Polynomial Dirac spinors on Minkowski space and the γ⁵ reflection.

use cpt_algebra::{Matrix, Scalar};
use cpt_reps::dirac::{gamma, gamma5};

use crate::poly::Poly;

/// A complex 4-spinor with polynomial components in (t, x, y, z).
pub type Spinor<S> = Vec<Poly<S>>;

fn gamma_s<S: Scalar>(mu: usize) -> Matrix<S> {
    gamma(mu).map(S::from_gq)
}

fn apply<S: Scalar>(m: &Matrix<S>, psi: &Spinor<S>) -> Spinor<S> {
    (0..m.rows())
        .map(|i| (0..m.cols()).fold(Poly::zero(4), |acc, j| acc.add(&psi[j].scale(&m[(i, j)]))))
        .collect()
}

/// −iγ^μ∂_μψ + mψ.
pub fn dirac_operator<S: Scalar>(psi: &Spinor<S>, mass: &S) -> Spinor<S> {
    let mut out: Spinor<S> = psi.iter().map(|p| p.scale(mass)).collect();
    for mu in 0..4 {
        let d: Spinor<S> = psi.iter().map(|p| p.diff(mu)).collect();
        let term = apply(&gamma_s::<S>(mu).scale(&-S::i()), &d);
        out = out.iter().zip(&term).map(|(a, b)| a.add(b)).collect();
    }
    out
}

/// ψ ↦ γ⁵ψ(−x).
pub fn gamma5_reflect<S: Scalar>(psi: &Spinor<S>) -> Spinor<S> {
    let minus = Matrix::<S>::identity(4).neg();
    let flipped: Spinor<S> = psi.iter().map(|p| p.compose_linear(&minus)).collect();
    apply(&gamma5().map(S::from_gq), &flipped)
}

/// γ^ν∂_νχ for χ = Σ c_a (n_a·x)^k with null n_a; a solution of the massless equation.
pub fn massless_solution<S: Scalar>(nulls: &[[i64; 4]], spinors: &[[S; 4]], power: u32) -> Spinor<S> {
    let mut chi: Spinor<S> = vec![Poly::zero(4); 4];
    for (n, c) in nulls.iter().zip(spinors) {
        let form = (0..4).fold(Poly::zero(4), |acc, mu| acc.add(&Poly::var(4, mu).scale(&S::from_i64(n[mu]))));
        let p = form.pow(power);
        for (a, ca) in c.iter().enumerate() {
            chi[a] = chi[a].add(&p.scale(ca));
        }
    }
    let mut out: Spinor<S> = vec![Poly::zero(4); 4];
    for nu in 0..4 {
        let d: Spinor<S> = chi.iter().map(|p| p.diff(nu)).collect();
        let term = apply(&gamma_s::<S>(nu), &d);
        out = out.iter().zip(&term).map(|(a, b)| a.add(b)).collect();
    }
    out
}

pub fn is_null(n: &[i64; 4]) -> bool {
    n[0] * n[0] == n[1] * n[1] + n[2] * n[2] + n[3] * n[3]
}
