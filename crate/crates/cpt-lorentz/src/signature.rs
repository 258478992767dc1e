//! Spacetime metrics and the component structure of their isometry groups.

use std::fmt;

use cpt_algebra::{Gq, Matrix, Scalar};
use serde::Serialize;

use crate::error::LorentzError;

/// η = diag(+1 × p, −1 × q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
}

impl Signature {
    pub const MINKOWSKI: Signature = Signature { p: 1, q: 3 };

    pub fn new(p: usize, q: usize) -> Result<Self, LorentzError> {
        if p == 0 || q == 0 {
            return Err(LorentzError::BadSignature(p, q));
        }
        Ok(Signature { p, q })
    }

    pub fn dim(&self) -> usize {
        self.p + self.q
    }

    pub fn eta_entry(&self, i: usize) -> i64 {
        if i < self.p {
            1
        } else {
            -1
        }
    }

    pub fn is_timelike(&self, i: usize) -> bool {
        i < self.p
    }

    pub fn eta<S: Scalar>(&self) -> Matrix<S> {
        let d: Vec<S> = (0..self.dim()).map(|i| S::from_i64(self.eta_entry(i))).collect();
        Matrix::diag(&d)
    }

    /// η(x, y) extended bilinearly.
    pub fn inner<S: Scalar>(&self, x: &[S], y: &[S]) -> S {
        (0..self.dim()).fold(S::zero(), |acc, i| acc + S::from_i64(self.eta_entry(i)) * x[i].clone() * y[i].clone())
    }

    /// Fixed non-orthochronous element of L↓+ with integer entries.
    ///
    /// −𝟙 when it qualifies (p odd, d even); otherwise −1 on the first timelike and first
    /// spacelike axis.
    pub fn pt_representative<S: Scalar>(&self) -> Matrix<S> {
        let d = self.dim();
        if !self.p.is_multiple_of(2) && d.is_multiple_of(2) {
            return Matrix::identity(d).neg();
        }
        let entries: Vec<S> = (0..d)
            .map(|i| if i == 0 || i == self.p { -S::one() } else { S::one() })
            .collect();
        Matrix::diag(&entries)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Connected components of the isometry group, by properness and time orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Component {
    /// L↑+
    ProperOrthochronous,
    /// L↑−
    ImproperOrthochronous,
    /// L↓+
    ProperNonOrthochronous,
    /// L↓−
    ImproperNonOrthochronous,
}

impl Component {
    pub fn from_flags(proper: bool, orthochronous: bool) -> Self {
        match (proper, orthochronous) {
            (true, true) => Component::ProperOrthochronous,
            (false, true) => Component::ImproperOrthochronous,
            (true, false) => Component::ProperNonOrthochronous,
            (false, false) => Component::ImproperNonOrthochronous,
        }
    }

    pub fn is_proper(self) -> bool {
        matches!(self, Component::ProperOrthochronous | Component::ProperNonOrthochronous)
    }

    pub fn is_orthochronous(self) -> bool {
        matches!(self, Component::ProperOrthochronous | Component::ImproperOrthochronous)
    }

    pub fn reverses_time(self) -> bool {
        !self.is_orthochronous()
    }

    /// Component of a product.
    pub fn compose(self, other: Component) -> Component {
        Component::from_flags(
            self.is_proper() == other.is_proper(),
            self.is_orthochronous() == other.is_orthochronous(),
        )
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Component::ProperOrthochronous => "L↑+",
            Component::ImproperOrthochronous => "L↑−",
            Component::ProperNonOrthochronous => "L↓+",
            Component::ImproperNonOrthochronous => "L↓−",
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

pub fn is_isometry<S: Scalar>(sig: Signature, g: &Matrix<S>) -> bool {
    let d = sig.dim();
    if g.rows() != d || g.cols() != d {
        return false;
    }
    let eta = sig.eta::<S>();
    g.transpose().mul(&eta).mul(g).approx_eq(&eta)
}

fn sign_of<S: Scalar>(x: &S) -> f64 {
    x.to_c64().re.signum()
}

/// Properness from det g; time orientation from the sign of the determinant of the
/// timelike-timelike block.
pub fn classify_component<S: Scalar>(sig: Signature, g: &Matrix<S>) -> Result<Component, LorentzError> {
    if !is_isometry(sig, g) || !g.is_real() {
        return Err(LorentzError::NotIsometry);
    }
    let det = g.det();
    let timelike: Vec<usize> = (0..sig.p).collect();
    let block = g.submatrix(&timelike, &timelike).det();
    Ok(Component::from_flags(sign_of(&det) > 0.0, sign_of(&block) > 0.0))
}

/// Entry-wise conversion of an exact matrix.
pub fn to_float(m: &Matrix<Gq>) -> Matrix<num_complex::Complex64> {
    m.map(|x| x.to_c64())
}
