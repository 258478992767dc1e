//! V-valued polynomial fields on spacetime.

use cpt_algebra::{Matrix, Scalar};
use rand::Rng;

use crate::poly::Poly;

/// One real polynomial per real coordinate of V.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyField<S: Scalar> {
    pub components: Vec<Poly<S>>,
}

impl<S: Scalar> PolyField<S> {
    pub fn new(components: Vec<Poly<S>>) -> Self {
        PolyField { components }
    }

    pub fn constant(d: usize, values: &[S]) -> Self {
        PolyField { components: values.iter().map(|v| Poly::constant(d, v.clone())).collect() }
    }

    /// Real coordinates (Re, Im) of complex components, interleaved.
    pub fn from_complex(components: &[Poly<S>]) -> Self {
        PolyField { components: components.iter().flat_map(|p| [p.re(), p.im()]).collect() }
    }

    /// Integer coefficients in [−3, 3], roughly half the monomials of degree ≤ `degree` present.
    pub fn random(dim_v: usize, d: usize, degree: u32, rng: &mut impl Rng) -> Self {
        let exps = exponents(d, degree);
        let components = (0..dim_v)
            .map(|_| {
                let mut p = Poly::zero(d);
                for e in &exps {
                    if rng.random_bool(0.5) {
                        p.add_term(e.clone(), S::from_i64(rng.random_range(-3..=3)));
                    }
                }
                p
            })
            .collect();
        PolyField { components }
    }

    pub fn dim_v(&self) -> usize {
        self.components.len()
    }

    pub fn spacetime_dim(&self) -> usize {
        self.components.first().map_or(0, Poly::nvars)
    }

    pub fn degree(&self) -> u32 {
        self.components.iter().map(Poly::degree).max().unwrap_or(0)
    }

    /// x ↦ m·Φ(x).
    pub fn apply_matrix(&self, m: &Matrix<S>) -> Self {
        let d = self.spacetime_dim();
        let components = (0..m.rows())
            .map(|i| {
                (0..m.cols()).fold(Poly::zero(d), |acc, j| acc.add(&self.components[j].scale(&m[(i, j)])))
            })
            .collect();
        PolyField { components }
    }

    /// x ↦ Φ(a·x).
    pub fn compose_linear(&self, a: &Matrix<S>) -> Self {
        PolyField { components: self.components.iter().map(|p| p.compose_linear(a)).collect() }
    }

    pub fn eval(&self, x: &[S]) -> Vec<S> {
        self.components.iter().map(|p| p.eval(x)).collect()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> PolyField<T> {
        PolyField { components: self.components.iter().map(|p| p.map(f)).collect() }
    }
}

/// All exponent vectors in `d` variables of total degree ≤ `degree`.
pub fn exponents(d: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(d: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == d {
            out.push(prefix.clone());
            return;
        }
        for k in 0..=left {
            prefix.push(k);
            rec(d, left - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, degree, &mut Vec::new(), &mut out);
    out
}
