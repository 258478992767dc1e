//! Multivariate polynomials over a coefficient field, in sparse exponent-vector form.

use std::collections::BTreeMap;
use std::fmt;

use cpt_algebra::{Matrix, Scalar};

#[derive(Clone, PartialEq)]
pub struct Poly<S> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, S>,
}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<S: Scalar> Poly<S> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The coordinate function x_i.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, S::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, S> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: S) {
        assert_eq!(e.len(), self.nvars);
        let zero = {
            let slot = self.terms.entry(e.clone()).or_insert_with(S::zero);
            *slot = slot.clone() + c;
            slot.is_zero() || (!S::EXACT && slot.norm() < cpt_algebra::DROP_TOL)
        };
        if zero {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (e, c) in &o.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-S::one()))
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * s.clone());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(self.nvars, S::one()), |acc, _| acc.mul(self))
    }

    /// ∂/∂x_i.
    pub fn diff(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c.clone() * S::from_i64(e[i] as i64));
            }
        }
        out
    }

    /// Derivative along the direction `xi`.
    pub fn directional(&self, xi: &[S]) -> Self {
        xi.iter().enumerate().filter(|(_, c)| !c.is_zero()).fold(Self::zero(self.nvars), |acc, (i, c)| acc.add(&self.diff(i).scale(c)))
    }

    /// p(A·x).
    pub fn compose_linear(&self, a: &Matrix<S>) -> Self {
        assert_eq!((a.rows(), a.cols()), (self.nvars, self.nvars));
        let images: Vec<Poly<S>> = (0..self.nvars)
            .map(|i| {
                (0..self.nvars).fold(Self::zero(self.nvars), |acc, j| {
                    acc.add(&Self::var(self.nvars, j).scale(&a[(i, j)]))
                })
            })
            .collect();
        let deg = self.degree() as usize;
        let powers: Vec<Vec<Poly<S>>> = images
            .iter()
            .map(|p| {
                let mut v = vec![Self::constant(self.nvars, S::one())];
                for k in 0..deg {
                    let next = v[k].mul(p);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut term = Self::constant(self.nvars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = term.mul(&powers[i][k as usize]);
                }
            }
            out.add_assign(&term);
        }
        out
    }

    pub fn eval(&self, x: &[S]) -> S {
        self.terms.iter().fold(S::zero(), |acc, (e, c)| {
            let m = e.iter().zip(x).fold(c.clone(), |m, (&k, xi)| m * xi.pow(k));
            acc + m
        })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn re(&self) -> Self {
        self.map(S::re)
    }

    pub fn im(&self) -> Self {
        self.map(S::im)
    }

    pub fn max_norm(&self) -> f64 {
        self.terms.values().map(Scalar::norm).fold(0.0, f64::max)
    }
}
