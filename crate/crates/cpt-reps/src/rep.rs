//! Evaluation of representation trees on group and Lie-algebra elements.

use cpt_algebra::{Gq, Matrix, Scalar};
use cpt_lorentz::{classify_component, Component, CoverComponent, CoverElement, Signature};

use crate::error::RepError;
use crate::spec::RepSpec;
use crate::spin::{encoded, lie_to_sl2, weyl_left_matrix, weyl_right_matrix};

/// A group element: a (possibly complex) d×d matrix, or a 4D cover pair.
#[derive(Debug, Clone, PartialEq)]
pub enum GroupArg<S> {
    Lorentz(Matrix<S>),
    Cover(CoverElement<S>),
}

impl<S: Scalar> GroupArg<S> {
    /// ω(g) on M^ℂ.
    pub fn spacetime(&self) -> Matrix<S> {
        match self {
            GroupArg::Lorentz(m) => m.clone(),
            GroupArg::Cover(c) => c.project_complex(),
        }
    }

    /// # Panics
    /// If the two elements are of different kinds.
    pub fn mul(&self, o: &Self) -> Self {
        match (self, o) {
            (GroupArg::Lorentz(a), GroupArg::Lorentz(b)) => GroupArg::Lorentz(a.mul(b)),
            (GroupArg::Cover(a), GroupArg::Cover(b)) => GroupArg::Cover(a.mul(b)),
            _ => panic!("cannot multiply a matrix by a cover element"),
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            GroupArg::Lorentz(a) => GroupArg::Lorentz(a.inverse().expect("group elements are invertible")),
            GroupArg::Cover(c) => GroupArg::Cover(c.inverse()),
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> GroupArg<T> {
        match self {
            GroupArg::Lorentz(a) => GroupArg::Lorentz(a.map(f)),
            GroupArg::Cover(c) => GroupArg::Cover(CoverElement { a: c.a.map(f), b: c.b.map(f) }),
        }
    }

    /// Component of the real element ω(g); `None` for elements of the complexified group.
    pub fn component(&self, sig: Signature) -> Option<Component> {
        let m = self.spacetime();
        if !m.is_real() {
            return None;
        }
        classify_component(sig, &m.real_part()).ok()
    }
}

/// The standard complex structure pairing coordinates (2k, 2k+1).
pub fn standard_complex_structure(n: usize) -> Matrix<Gq> {
    let mut j = Matrix::zeros(n, n);
    for k in 0..n / 2 {
        j[(2 * k + 1, 2 * k)] = Gq::one();
        j[(2 * k, 2 * k + 1)] = -Gq::one();
    }
    j
}

/// Induced map on antisymmetric (pairs i<j) or symmetric (pairs i≤j) 2-tensors, as the
/// bilinear B(m, n) whose diagonal B(g, g) is the representation.
fn induced2<S: Scalar>(m: &Matrix<S>, n: &Matrix<S>, antisym: bool) -> Matrix<S> {
    let d = m.rows();
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (i..d).filter(move |&j| !antisym || j > i).map(move |j| (i, j)))
        .collect();
    Matrix::from_fn(pairs.len(), pairs.len(), |p, q| {
        let ((i, j), (k, l)) = (pairs[p], pairs[q]);
        let direct = m[(i, k)].clone() * n[(j, l)].clone();
        if antisym {
            direct - m[(i, l)].clone() * n[(j, k)].clone()
        } else if k < l {
            direct + m[(i, l)].clone() * n[(j, k)].clone()
        } else {
            direct
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Rep {
    spec: RepSpec,
    sig: Signature,
    dim: usize,
    grading: Matrix<Gq>,
    complex: Option<Matrix<Gq>>,
}

impl Rep {
    pub fn new(spec: RepSpec, sig: Signature) -> Result<Self, RepError> {
        if spec.is_spinorial() && sig != Signature::MINKOWSKI {
            return Err(RepError::SpinorSignature);
        }
        let dim = spec.dim(sig.dim());
        let grading = if spec.is_spinorial() {
            functor(&spec, sig, &GroupArg::Cover(CoverElement::<Gq>::tau()), None)?
        } else {
            Matrix::identity(dim)
        };
        Ok(Rep { spec, sig, dim, grading, complex: None })
    }

    /// Declares `j` as the complex structure of V; it must square to −1 and commute with ρ.
    pub fn with_complex_structure(mut self, j: Matrix<Gq>) -> Result<Self, RepError> {
        let n = self.dim;
        if (j.rows(), j.cols()) != (n, n) {
            return Err(RepError::NotComplex(format!("complex structure must be {n}×{n}")));
        }
        if !j.mul(&j).neg().is_identity() {
            return Err(RepError::NotComplex("J² ≠ −1".into()));
        }
        let mut checks = vec![self.grading.clone()];
        for f in cpt_lorentz::lie_basis(self.sig) {
            checks.push(self.d_rho(&f)?);
        }
        if checks.iter().any(|m| m.mul(&j) != j.mul(m)) {
            return Err(RepError::NotComplex("J does not commute with the representation".into()));
        }
        self.complex = Some(j);
        Ok(self)
    }

    /// The standard pairing structure; fails unless it commutes with ρ.
    pub fn complex(spec: RepSpec, sig: Signature) -> Result<Self, RepError> {
        let rep = Rep::new(spec, sig)?;
        if rep.dim % 2 == 1 {
            return Err(RepError::NotComplex("odd real dimension".into()));
        }
        let j = standard_complex_structure(rep.dim);
        rep.with_complex_structure(j)
    }

    pub fn spec(&self) -> &RepSpec {
        &self.spec
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// ρ(τ), exact.
    pub fn grading(&self) -> &Matrix<Gq> {
        &self.grading
    }

    pub fn complex_structure(&self) -> Option<&Matrix<Gq>> {
        self.complex.as_ref()
    }

    /// Projector onto Vₙ.
    pub fn grade_projector(&self, n: u8) -> Matrix<Gq> {
        let id = Matrix::identity(self.dim);
        let m = if n == 0 { id.add(&self.grading) } else { id.sub(&self.grading) };
        m.scale(&Gq::ratio(1, 2))
    }

    pub fn grade_split<S: Scalar>(&self, v: &[S]) -> (Vec<S>, Vec<S>) {
        let p = |n| self.grade_projector(n).map(S::from_gq).mul_vec(v);
        (p(0), p(1))
    }

    /// Grade of each real coordinate when V is spanned by homogeneous coordinate vectors.
    pub fn coordinate_grades(&self) -> Option<Vec<u8>> {
        (0..self.dim)
            .map(|k| {
                let col = self.grading.col(k);
                let rest = col.iter().enumerate().any(|(r, x)| r != k && !x.is_zero());
                match (&col[k], rest) {
                    (x, false) if x.is_one() => Some(0),
                    (x, false) if (-x.clone()).is_one() => Some(1),
                    _ => None,
                }
            })
            .collect()
    }

    /// The holomorphic functor ρᶜ, defined on the complexified group and on determinant-one
    /// cover pairs. Pseudo twists are invisible here.
    pub fn rho_complex<S: Scalar>(&self, g: &GroupArg<S>) -> Result<Matrix<S>, RepError> {
        if let GroupArg::Cover(c) = g {
            if !c.det().approx_eq(&S::one()) {
                return Err(RepError::OutsideComplexification);
            }
        }
        functor(&self.spec, self.sig, g, None)
    }

    /// ρ on the orthochronous component (L↑+ or L̃↑+).
    pub fn rho<S: Scalar>(&self, g: &GroupArg<S>) -> Result<Matrix<S>, RepError> {
        match g {
            GroupArg::Cover(c) => match c.component() {
                CoverComponent::UpPlus => {}
                other => return Err(RepError::NotOrthochronous(RepError::cover(other))),
            },
            GroupArg::Lorentz(_) => match g.component(self.sig) {
                Some(Component::ProperOrthochronous) => {}
                Some(other) => return Err(RepError::NotOrthochronous(RepError::component(other))),
                None => return Err(RepError::NotOrthochronous("complex".into())),
            },
        }
        self.rho_complex(g)
    }

    /// The canonical extension ρ′ to L+ (tensors) or L̃+ = L̃↑+ ∪ I·L̃↓ᵃ+ (spinors).
    pub fn rho_prime<S: Scalar>(&self, g: &GroupArg<S>) -> Result<Matrix<S>, RepError> {
        match g {
            GroupArg::Lorentz(_) => match g.component(self.sig) {
                Some(c) if c.is_proper() => self.rho_complex(g),
                Some(c) => Err(RepError::OutsideDomain(RepError::component(c))),
                None => Err(RepError::OutsideDomain("complex".into())),
            },
            GroupArg::Cover(c) => match c.component() {
                CoverComponent::UpPlus => self.rho_complex(g),
                CoverComponent::DownPlus => {
                    let base = CoverElement::<S>::big_i().inverse().mul(c);
                    let m = self.rho_complex(&GroupArg::Cover(base))?;
                    let twist = self
                        .grade_projector(0)
                        .map(S::from_gq)
                        .add(&self.grade_projector(1).map(S::from_gq).scale(&S::i()));
                    Ok(m.mul(&twist))
                }
                other => Err(RepError::OutsideDomain(RepError::cover(other))),
            },
        }
    }

    /// The representation of the full group for tensor trees, honouring pseudo twists.
    pub fn rho_full<S: Scalar>(&self, g: &Matrix<S>) -> Result<Matrix<S>, RepError> {
        let arg = GroupArg::Lorentz(g.clone());
        let c = arg
            .component(self.sig)
            .ok_or_else(|| RepError::OutsideDomain("complex".into()))?;
        functor(&self.spec, self.sig, &arg, Some(c.reverses_time()))
    }

    /// ρ_hol(g) = Re(ρᶜ(g)(1 − iJ)): the complex-linear extension on (V, J).
    pub fn rho_hol<S: Scalar>(&self, g: &GroupArg<S>) -> Result<Matrix<S>, RepError> {
        let j = self
            .complex
            .as_ref()
            .ok_or_else(|| RepError::NotComplex("no complex structure declared".into()))?
            .map(S::from_gq);
        let m = self.rho_complex(g)?;
        let id = Matrix::<S>::identity(self.dim);
        Ok(m.mul(&id.sub(&j.scale(&S::i()))).real_part())
    }

    /// dρ(X) for X in the (complexified) Lie algebra, exact for exact input.
    pub fn d_rho<S: Scalar>(&self, x: &Matrix<S>) -> Result<Matrix<S>, RepError> {
        let d = self.sig.dim();
        if (x.rows(), x.cols()) != (d, d) {
            return Err(RepError::Shape(x.rows(), d));
        }
        let pair = if self.spec.is_spinorial() {
            Some(lie_to_sl2(x).ok_or(RepError::NeedsCover)?)
        } else {
            None
        };
        Ok(derivative(&self.spec, x, pair.as_ref()))
    }
}

fn functor<S: Scalar>(
    spec: &RepSpec,
    sig: Signature,
    g: &GroupArg<S>,
    twist: Option<bool>,
) -> Result<Matrix<S>, RepError> {
    let d = sig.dim();
    Ok(match spec {
        RepSpec::Trivial(n) => Matrix::identity(*n),
        RepSpec::Vector => {
            let m = g.spacetime();
            if m.rows() != d {
                return Err(RepError::Shape(m.rows(), d));
            }
            m
        }
        RepSpec::WeylLeft | RepSpec::WeylRight => {
            let GroupArg::Cover(c) = g else {
                return Err(RepError::NeedsCover);
            };
            if *spec == RepSpec::WeylLeft {
                weyl_left_matrix(&c.a, &c.b)
            } else {
                weyl_right_matrix(&c.a, &c.b)
            }
        }
        RepSpec::Dual(r) => functor(r, sig, g, twist)?.inverse().expect("invertible").transpose(),
        RepSpec::Tensor(a, b) => functor(a, sig, g, twist)?.kron(&functor(b, sig, g, twist)?),
        RepSpec::Sum(a, b) => Matrix::block_diag(&[functor(a, sig, g, twist)?, functor(b, sig, g, twist)?]),
        RepSpec::Antisym2(r) => {
            let m = functor(r, sig, g, twist)?;
            induced2(&m, &m, true)
        }
        RepSpec::Sym2(r) => {
            let m = functor(r, sig, g, twist)?;
            induced2(&m, &m, false)
        }
        RepSpec::Pseudo(r) => {
            let m = functor(r, sig, g, twist)?;
            if twist == Some(true) {
                m.neg()
            } else {
                m
            }
        }
    })
}

fn derivative<S: Scalar>(spec: &RepSpec, x: &Matrix<S>, pair: Option<&(Matrix<S>, Matrix<S>)>) -> Matrix<S> {
    match spec {
        RepSpec::Trivial(n) => Matrix::zeros(*n, *n),
        RepSpec::Vector => x.clone(),
        RepSpec::WeylLeft => {
            let (a, b) = pair.expect("spinor derivative needs the sl2 pair");
            encoded(a, b)
        }
        RepSpec::WeylRight => {
            let (a, b) = pair.expect("spinor derivative needs the sl2 pair");
            encoded(&b.transpose().neg(), &a.transpose().neg())
        }
        RepSpec::Dual(r) => derivative(r, x, pair).transpose().neg(),
        RepSpec::Pseudo(r) => derivative(r, x, pair),
        RepSpec::Tensor(a, b) => {
            let (da, db) = (derivative(a, x, pair), derivative(b, x, pair));
            let (ia, ib) = (Matrix::identity(da.rows()), Matrix::identity(db.rows()));
            da.kron(&ib).add(&ia.kron(&db))
        }
        RepSpec::Sum(a, b) => Matrix::block_diag(&[derivative(a, x, pair), derivative(b, x, pair)]),
        RepSpec::Antisym2(r) | RepSpec::Sym2(r) => {
            let antisym = matches!(spec, RepSpec::Antisym2(_));
            let dm = derivative(r, x, pair);
            let id = Matrix::identity(dm.rows());
            induced2(&dm, &id, antisym).add(&induced2(&id, &dm, antisym))
        }
    }
}
