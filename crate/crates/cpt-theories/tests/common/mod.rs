#![allow(dead_code)]

use std::sync::Arc;

use cpt_actions::{FieldDecl, Kinematics, Spacetime};
use cpt_algebra::{AlgebraElement, FieldSymbol, Gq, Mode, Scalar};
use cpt_lorentz::Signature;
use cpt_reps::dirac::{charge_conjugation, gamma};
use cpt_reps::RepSpec;
use cpt_theories::{FormalTheory, Interpretation};

pub fn sym(kin: &Kinematics, mode: Mode, name: &str, k: usize, conj: bool, d: &[u8]) -> AlgebraElement<Gq> {
    let j = kin.symbol(name, k, conj).unwrap_or_else(|| panic!("no symbol {name}[{k}]"));
    AlgebraElement::symbol(kin.space().clone(), mode, FieldSymbol::new(j, d.to_vec()))
}

fn pair_index(a: usize, b: usize) -> (usize, i64) {
    let (i, j, s) = if a < b { (a, b, 1) } else { (b, a, -1) };
    let k = (0..i).map(|r| 3 - r).sum::<usize>() + (j - i - 1);
    (k, s)
}

pub fn maxwell_kinematics(pseudo: bool) -> Arc<Kinematics> {
    let j = if pseudo { RepSpec::pseudo(RepSpec::Vector) } else { RepSpec::Vector };
    Arc::new(
        Kinematics::new(
            Spacetime::Lorentz(Signature::MINKOWSKI),
            vec![FieldDecl::real("F", RepSpec::antisym2(RepSpec::Vector)), FieldDecl::real("J", j)],
        )
        .unwrap(),
    )
}

/// F^{αβ},_β − J^α for α = 0..3.
pub fn maxwell(pseudo: bool) -> FormalTheory {
    let kin = maxwell_kinematics(pseudo);
    let m = Mode::Commutative;
    let gens = (0..4)
        .map(|a| {
            let mut e = -sym(&kin, m, "J", a, false, &[]);
            for b in 0..4 {
                if a != b {
                    let (k, s) = pair_index(a, b);
                    e = e + sym(&kin, m, "F", k, false, &[b as u8]).scale(&Gq::from_i64(s));
                }
            }
            e
        })
        .collect();
    FormalTheory::new(if pseudo { "maxwell-pseudo" } else { "maxwell" }, kin, gens, Interpretation::EquationSet).unwrap()
}

pub fn complex_scalar_kinematics() -> Arc<Kinematics> {
    Arc::new(Kinematics::new(Spacetime::Lorentz(Signature::MINKOWSKI), vec![FieldDecl::complex("phi", RepSpec::Trivial(2))]).unwrap())
}

/// η^{μν}∂_μφ*∂_νφ − m²φ*φ with m = 1.
pub fn klein_gordon() -> FormalTheory {
    let kin = complex_scalar_kinematics();
    let m = Mode::Commutative;
    let mut l = -(sym(&kin, m, "phi", 0, true, &[]) * sym(&kin, m, "phi", 0, false, &[]));
    for mu in 0..4u8 {
        let eta = if mu == 0 { Gq::one() } else { -Gq::one() };
        l = l + (sym(&kin, m, "phi", 0, true, &[mu]) * sym(&kin, m, "phi", 0, false, &[mu])).scale(&eta);
    }
    FormalTheory::new("klein-gordon", kin, vec![l], Interpretation::Density).unwrap()
}

pub fn dirac_kinematics() -> Arc<Kinematics> {
    let psi = FieldDecl::complex("psi", RepSpec::dirac()).with_hash(charge_conjugation());
    Arc::new(Kinematics::new(Spacetime::Lorentz(Signature::MINKOWSKI), vec![psi]).unwrap())
}

/// ψ̄_a = Σ_b conj(ψ_b) γ⁰_{ba}.
pub fn psibar(kin: &Kinematics, mode: Mode, a: usize, d: &[u8]) -> AlgebraElement<Gq> {
    let g0 = gamma(0);
    (0..4).fold(AlgebraElement::zero(kin.space().clone(), mode), |acc, b| {
        acc + sym(kin, mode, "psi", b, true, d).scale(&g0[(b, a)])
    })
}

/// −iγ^μ∂_μψ + ψ = 0.
pub fn dirac_equation() -> FormalTheory {
    let kin = dirac_kinematics();
    let m = Mode::Supercommutative;
    let gens = (0..4)
        .map(|a| {
            let mut e = sym(&kin, m, "psi", a, false, &[]);
            for mu in 0..4u8 {
                let g = gamma(mu as usize);
                for b in 0..4 {
                    e = e + sym(&kin, m, "psi", b, false, &[mu]).scale(&(g[(a, b)].clone() * -Gq::i()));
                }
            }
            e
        })
        .collect();
    FormalTheory::new("dirac", kin, gens, Interpretation::EquationSet).unwrap()
}

/// (i/2)(ψ̄γ^μ∂_μψ − ∂_μψ̄γ^μψ) − ψ̄ψ.
pub fn dirac_lagrangian() -> FormalTheory {
    let kin = dirac_kinematics();
    let m = Mode::Supercommutative;
    let half_i = Gq::complex(0, 1, 1, 2);
    let mut l = -psibar_psi(&kin, m);
    for mu in 0..4u8 {
        let g = gamma(mu as usize);
        for a in 0..4 {
            for b in 0..4 {
                let c = g[(a, b)].clone() * half_i.clone();
                l = l + (psibar(&kin, m, a, &[]) * sym(&kin, m, "psi", b, false, &[mu])).scale(&c);
                l = l - (psibar(&kin, m, a, &[mu]) * sym(&kin, m, "psi", b, false, &[])).scale(&c);
            }
        }
    }
    FormalTheory::new("dirac-lagrangian", kin, vec![l], Interpretation::Density).unwrap()
}

pub fn psibar_psi(kin: &Kinematics, mode: Mode) -> AlgebraElement<Gq> {
    (0..4).fold(AlgebraElement::zero(kin.space().clone(), mode), |acc, a| {
        acc + psibar(kin, mode, a, &[]) * sym(kin, mode, "psi", a, false, &[])
    })
}

/// ψ̄ψ = 1 read in the given mode.
pub fn dirac_constraint(mode: Mode) -> FormalTheory {
    let kin = dirac_kinematics();
    let g = psibar_psi(&kin, mode) - AlgebraElement::one(kin.space().clone(), mode);
    FormalTheory::new("psibar-psi", kin, vec![g], Interpretation::EquationSet).unwrap()
}
