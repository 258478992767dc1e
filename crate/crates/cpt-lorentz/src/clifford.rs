//! The complex Clifford algebra of a diagonal metric, the Pin group and its projection to
//! the complex orthogonal group.

use cpt_algebra::{Matrix, Scalar};
use num_complex::Complex64;

use crate::error::LorentzError;
use crate::signature::Signature;

/// A diagonal metric with entries ±1; basis blades are bitmasks over the axes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metric(pub Vec<i64>);

impl Metric {
    pub fn lorentzian(sig: Signature) -> Self {
        Metric((0..sig.dim()).map(|i| sig.eta_entry(i)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn inner(&self, x: &[Complex64], y: &[Complex64]) -> Complex64 {
        self.0.iter().zip(x.iter().zip(y)).map(|(&e, (a, b))| a * b * e as f64).sum()
    }
}

/// Sign and metric factor of e_S · e_T for sorted blades S and T.
pub fn blade_product(metric: &Metric, s: usize, t: usize) -> (f64, usize) {
    let mut swaps = 0u32;
    for i in 0..metric.dim() {
        if s & (1 << i) != 0 {
            // factors of T with smaller index must move past e_i
            swaps += (t & ((1 << i) - 1)).count_ones();
        }
    }
    let mut sign = if swaps.is_multiple_of(2) { 1.0 } else { -1.0 };
    let common = s & t;
    for i in 0..metric.dim() {
        if common & (1 << i) != 0 {
            sign *= metric.0[i] as f64;
        }
    }
    (sign, s ^ t)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliffordElement {
    pub metric: Metric,
    pub coeffs: Vec<Complex64>,
}

impl CliffordElement {
    pub fn zero(metric: &Metric) -> Self {
        CliffordElement { metric: metric.clone(), coeffs: vec![Complex64::new(0.0, 0.0); 1 << metric.dim()] }
    }

    pub fn scalar(metric: &Metric, c: Complex64) -> Self {
        let mut x = Self::zero(metric);
        x.coeffs[0] = c;
        x
    }

    pub fn one(metric: &Metric) -> Self {
        Self::scalar(metric, Complex64::new(1.0, 0.0))
    }

    pub fn blade(metric: &Metric, mask: usize, c: Complex64) -> Self {
        let mut x = Self::zero(metric);
        x.coeffs[mask] = c;
        x
    }

    pub fn basis_vector(metric: &Metric, i: usize) -> Self {
        Self::blade(metric, 1 << i, Complex64::new(1.0, 0.0))
    }

    pub fn vector(metric: &Metric, v: &[Complex64]) -> Self {
        let mut x = Self::zero(metric);
        for (i, c) in v.iter().enumerate() {
            x.coeffs[1 << i] = *c;
        }
        x
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(&self.metric);
        for (s, a) in self.coeffs.iter().enumerate() {
            if a.norm() == 0.0 {
                continue;
            }
            for (t, b) in o.coeffs.iter().enumerate() {
                if b.norm() == 0.0 {
                    continue;
                }
                let (sign, r) = blade_product(&self.metric, s, t);
                out.coeffs[r] += a * b * sign;
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (x, y) in out.coeffs.iter_mut().zip(&o.coeffs) {
            *x += y;
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Self {
        CliffordElement { metric: self.metric.clone(), coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(Complex64::new(-1.0, 0.0))
    }

    /// Complex conjugation of coefficients; fixes the real Clifford algebra.
    pub fn conj(&self) -> Self {
        CliffordElement { metric: self.metric.clone(), coeffs: self.coeffs.iter().map(|x| x.conj()).collect() }
    }

    /// Reverses the order of vector factors.
    pub fn reverse(&self) -> Self {
        let mut out = self.clone();
        for (mask, c) in out.coeffs.iter_mut().enumerate() {
            let k = mask.count_ones();
            if (k * k.saturating_sub(1) / 2) % 2 == 1 {
                *c = -*c;
            }
        }
        out
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn approx_eq(&self, o: &Self) -> bool {
        let scale = self.norm().max(o.norm()).max(1.0);
        self.coeffs.iter().zip(&o.coeffs).all(|(a, b)| (a - b).norm() <= 1e-9 * scale)
    }

    /// The scalar `c` when the element equals c·1.
    pub fn as_scalar(&self) -> Option<Complex64> {
        let rest: f64 = self.coeffs[1..].iter().map(|c| c.norm()).sum();
        (rest <= 1e-9 * self.norm().max(1.0)).then_some(self.coeffs[0])
    }

    pub fn vector_part(&self) -> Vec<Complex64> {
        (0..self.metric.dim()).map(|i| self.coeffs[1 << i]).collect()
    }

    /// Inverse of a versor via g·rev(g) = scalar.
    pub fn versor_inverse(&self) -> Option<Self> {
        let n = self.mul(&self.reverse()).as_scalar()?;
        (n.norm() > 1e-12).then(|| self.reverse().scale(1.0 / n))
    }

    pub fn exp(&self) -> Self {
        let norm = self.norm();
        let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
        let x = self.scale(Complex64::new(0.5f64.powi(squarings), 0.0));
        let mut result = Self::one(&self.metric);
        let mut term = Self::one(&self.metric);
        for k in 1..=30 {
            term = term.mul(&x).scale(Complex64::new(1.0 / k as f64, 0.0));
            result = result.add(&term);
            if term.norm() < 1e-18 {
                break;
            }
        }
        for _ in 0..squarings {
            result = result.mul(&result);
        }
        result
    }

    /// Matrix of x ↦ g x g⁻¹ on vectors; `None` unless g is an invertible versor that
    /// preserves the vector subspace.
    pub fn adjoint_matrix(&self) -> Option<Matrix<Complex64>> {
        let inv = self.versor_inverse()?;
        let d = self.metric.dim();
        let mut m = Matrix::zeros(d, d);
        for j in 0..d {
            let img = self.mul(&Self::basis_vector(&self.metric, j)).mul(&inv);
            let v = img.vector_part();
            let rest: f64 = img
                .coeffs
                .iter()
                .enumerate()
                .filter(|(mask, _)| mask.count_ones() != 1)
                .map(|(_, c)| c.norm_sqr())
                .sum();
            if rest.sqrt() > 1e-9 * img.norm().max(1.0) {
                return None;
            }
            for (i, c) in v.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        Some(m)
    }
}

/// Bivector ½·e_a e_b, whose exponential lifts exp(f_ab).
pub fn plane_bivector(metric: &Metric, a: usize, b: usize) -> CliffordElement {
    CliffordElement::blade(metric, (1 << a) | (1 << b), Complex64::new(0.5, 0.0))
}

/// Bivector lifting a Lie-algebra element X = Σ c_ab f_ab with f_ab[a][b] = η_bb.
pub fn lie_to_bivector(metric: &Metric, x: &Matrix<Complex64>) -> CliffordElement {
    let d = metric.dim();
    let mut out = CliffordElement::zero(metric);
    for a in 0..d {
        for b in a + 1..d {
            let c = x[(a, b)] * metric.0[b] as f64;
            out = out.add(&plane_bivector(metric, a, b).scale(c));
        }
    }
    out
}

/// π(v)x = 2η(x,v)/η(v,v)·v − x.
pub fn reflection_matrix(metric: &Metric, v: &[Complex64]) -> Result<Matrix<Complex64>, LorentzError> {
    let vv = metric.inner(v, v);
    if vv.norm() < 1e-12 {
        return Err(LorentzError::NullVector);
    }
    let d = metric.dim();
    Ok(Matrix::from_fn(d, d, |i, j| {
        let eta_j = metric.0[j] as f64;
        let delta = if i == j { 1.0 } else { 0.0 };
        v[i] * v[j] * eta_j * 2.0 / vv - delta
    }))
}

/// Composite of the reflections of each factor, leftmost applied last.
pub fn pin_project(metric: &Metric, factors: &[Vec<Complex64>]) -> Result<Matrix<Complex64>, LorentzError> {
    let mut out = Matrix::identity(metric.dim());
    for v in factors {
        let vv = metric.inner(v, v);
        if !(vv.approx_eq(&Complex64::new(1.0, 0.0)) || vv.approx_eq(&Complex64::new(-1.0, 0.0))) {
            return Err(if vv.norm() < 1e-12 { LorentzError::NullVector } else { LorentzError::NotUnit });
        }
        out = out.mul(&reflection_matrix(metric, v)?);
    }
    Ok(out)
}

/// The Pin element v₁⋯v_k.
pub fn pin_element(metric: &Metric, factors: &[Vec<Complex64>]) -> CliffordElement {
    factors
        .iter()
        .fold(CliffordElement::one(metric), |acc, v| acc.mul(&CliffordElement::vector(metric, v)))
}
