//! The space W = Hom(V, ℂ) of field-symbol labels.

use std::collections::HashMap;
use std::fmt;

use crate::error::AlgebraError;
use crate::matrix::Matrix;
use crate::scalar::{Gq, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Charge {
    Plus,
    Zero,
    Minus,
}

impl Charge {
    pub fn flipped(self) -> Charge {
        match self {
            Charge::Plus => Charge::Minus,
            Charge::Zero => Charge::Zero,
            Charge::Minus => Charge::Plus,
        }
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Charge::Plus => "+",
            Charge::Zero => "0",
            Charge::Minus => "-",
        })
    }
}

/// One basis functional of W, given by its values on the real basis of V.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisEntry {
    pub name: String,
    pub grade: u8,
    pub charge: Charge,
    pub functional: Vec<Gq>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldSymbolSpace {
    spacetime_dim: usize,
    entries: Vec<BasisEntry>,
    basis_inv: Matrix<Gq>,
    conj: Matrix<Gq>,
    partner: Vec<Option<(usize, Gq)>>,
    by_name: HashMap<String, usize>,
}

impl FieldSymbolSpace {
    /// `grading`, when given, is ρ(τ) on V and is used to validate the grade labels.
    pub fn new(
        spacetime_dim: usize,
        entries: Vec<BasisEntry>,
        grading: Option<&Matrix<Gq>>,
    ) -> Result<Self, AlgebraError> {
        let n = entries.len();
        if entries.iter().any(|e| e.functional.len() != n) {
            return Err(AlgebraError::InvalidSpace(format!(
                "{n} functionals required for a {n}-dimensional V"
            )));
        }
        if entries.iter().any(|e| e.grade > 1) {
            return Err(AlgebraError::InvalidSpace("grade must be 0 or 1".into()));
        }
        let basis = Matrix::from_rows(entries.iter().map(|e| e.functional.clone()).collect());
        let basis_inv = basis
            .inverse()
            .ok_or_else(|| AlgebraError::InvalidSpace("functionals are linearly dependent".into()))?;
        let conj = Matrix::from_rows(
            entries
                .iter()
                .map(|e| {
                    let row: Vec<Gq> = e.functional.iter().map(Scalar::conj).collect();
                    basis_inv.vec_mul(&row)
                })
                .collect(),
        );
        let partner = (0..n)
            .map(|j| {
                let nz: Vec<usize> = (0..n).filter(|&k| !conj[(j, k)].is_zero()).collect();
                match nz.as_slice() {
                    [k] => Some((*k, conj[(j, *k)].clone())),
                    _ => None,
                }
            })
            .collect();
        let mut by_name = HashMap::new();
        for (j, e) in entries.iter().enumerate() {
            if by_name.insert(e.name.clone(), j).is_some() {
                return Err(AlgebraError::InvalidSpace(format!("duplicate symbol name {}", e.name)));
            }
        }
        let space = FieldSymbolSpace { spacetime_dim, entries, basis_inv, conj, partner, by_name };
        space.validate_charges()?;
        if let Some(tau) = grading {
            space.validate_grades(tau)?;
        }
        Ok(space)
    }

    fn validate_charges(&self) -> Result<(), AlgebraError> {
        for (j, e) in self.entries.iter().enumerate() {
            for (k, f) in self.entries.iter().enumerate() {
                if !self.conj[(j, k)].is_zero() && f.charge != e.charge.flipped() {
                    return Err(AlgebraError::InvalidSpace(format!(
                        "conjugate of {} has a component along {} outside the partner sector",
                        e.name, f.name
                    )));
                }
            }
        }
        Ok(())
    }

    fn validate_grades(&self, tau: &Matrix<Gq>) -> Result<(), AlgebraError> {
        for e in &self.entries {
            let image = tau.vec_mul(&e.functional);
            let sign = if e.grade == 0 { Gq::one() } else { -Gq::one() };
            let expected: Vec<Gq> = e.functional.iter().map(|x| x.clone() * sign.clone()).collect();
            if image != expected {
                return Err(AlgebraError::InvalidSpace(format!(
                    "{} is not homogeneous of grade {} under the grading operator",
                    e.name, e.grade
                )));
            }
        }
        Ok(())
    }

    pub fn spacetime_dim(&self) -> usize {
        self.spacetime_dim
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BasisEntry] {
        &self.entries
    }

    pub fn entry(&self, j: usize) -> &BasisEntry {
        &self.entries[j]
    }

    pub fn grade(&self, j: usize) -> u8 {
        self.entries[j].grade
    }

    pub fn charge(&self, j: usize) -> Charge {
        self.entries[j].charge
    }

    pub fn name(&self, j: usize) -> &str {
        &self.entries[j].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    /// Matrix whose row `j` expresses λⱼ* in the symbol basis.
    pub fn conj_matrix(&self) -> &Matrix<Gq> {
        &self.conj
    }

    /// `(k, c)` with λⱼ* = c·λₖ when the conjugate is a single basis symbol.
    pub fn partner(&self, j: usize) -> Option<&(usize, Gq)> {
        self.partner[j].as_ref()
    }

    /// Coordinates in the symbol basis of the functional with the given values on V.
    pub fn express<S: Scalar>(&self, row: &[S]) -> Vec<S> {
        self.basis_inv.map(S::from_gq).vec_mul(row)
    }

    /// Matrix on W of λ ↦ λ∘m for a real-linear map `m` of V (rows of the result are images of
    /// the basis symbols).
    pub fn precompose<S: Scalar>(&self, m: &Matrix<S>) -> Matrix<S> {
        let n = self.len();
        assert_eq!((m.rows(), m.cols()), (n, n), "map on V has the wrong shape");
        let basis = Matrix::from_rows(
            self.entries.iter().map(|e| e.functional.iter().map(S::from_gq).collect()).collect(),
        );
        basis.mul(m).mul(&self.basis_inv.map(S::from_gq))
    }

    /// Sector label of every basis symbol, in basis order.
    pub fn sectors(&self) -> Vec<Charge> {
        self.entries.iter().map(|e| e.charge).collect()
    }
}
