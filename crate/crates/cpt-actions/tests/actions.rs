use std::sync::Arc;

use cpt_actions::{classify_charge, ActionKind, ChargeClass, Extension, FieldDecl, InvolutionSpec, Kinematics, Spacetime};
use cpt_algebra::{conjugation_c, AlgebraElement, FieldSymbol, FieldSymbolSpace, Gq, Matrix, Mode, Scalar, SymbolMap, WMap};
use cpt_lorentz::lie::expm;
use cpt_lorentz::{lie_basis, sample_cover, sample_proper_ortho, CoverComponent, CoverElement, Signature};
use cpt_reps::dirac::charge_conjugation;
use cpt_reps::{GroupArg, RepSpec};
use num_complex::Complex64;
use proptest::prelude::*;

const MINK: Signature = Signature::MINKOWSKI;

fn complex_scalar() -> Kinematics {
    Kinematics::new(Spacetime::Lorentz(MINK), vec![FieldDecl::complex("phi", RepSpec::Trivial(2))]).unwrap()
}

fn dirac() -> Kinematics {
    let psi = FieldDecl::complex("psi", RepSpec::dirac()).with_hash(charge_conjugation());
    Kinematics::new(Spacetime::Lorentz(MINK), vec![psi]).unwrap()
}

fn maxwell(pseudo: bool) -> Kinematics {
    let j = if pseudo { RepSpec::pseudo(RepSpec::Vector) } else { RepSpec::Vector };
    Kinematics::new(
        Spacetime::Lorentz(MINK),
        vec![FieldDecl::real("F", RepSpec::antisym2(RepSpec::Vector)), FieldDecl::real("J", j)],
    )
    .unwrap()
}

fn sym(space: &Arc<FieldSymbolSpace>, mode: Mode, j: usize, derivs: &[u8]) -> AlgebraElement<Gq> {
    AlgebraElement::symbol(space.clone(), mode, FieldSymbol::new(j, derivs.to_vec()))
}

fn total_reflection() -> GroupArg<Gq> {
    GroupArg::Lorentz(Matrix::identity(4).neg())
}

/// Exact boost with cosh = 5/4 along axis k, and exact rotation with cos = 3/5 in the (1,2) plane.
fn exact_elements() -> Vec<GroupArg<Gq>> {
    let mut out = Vec::new();
    for k in 1..4 {
        let mut b = Matrix::<Gq>::identity(4);
        b[(0, 0)] = Gq::ratio(5, 4);
        b[(k, k)] = Gq::ratio(5, 4);
        b[(0, k)] = Gq::ratio(3, 4);
        b[(k, 0)] = Gq::ratio(3, 4);
        out.push(GroupArg::Lorentz(b));
    }
    let mut r = Matrix::<Gq>::identity(4);
    r[(1, 1)] = Gq::ratio(3, 5);
    r[(2, 2)] = Gq::ratio(3, 5);
    r[(1, 2)] = Gq::ratio(-4, 5);
    r[(2, 1)] = Gq::ratio(4, 5);
    out.push(GroupArg::Lorentz(r));
    out.push(total_reflection());
    out
}

#[test]
fn complex_scalar_table() {
    let kin = complex_scalar();
    let space = kin.space();
    let f = sym(space, Mode::Commutative, 0, &[]).scale(&Gq::i());
    assert_eq!(f.to_string(), "i*phi[0]");
    let g = total_reflection();
    let hash = SymbolMap::new(kin.involution::<Gq>(&InvolutionSpec::Hash).unwrap(), None);
    let classical = kin.classical_action(&g, Extension::Canonical).unwrap();
    let quantum = kin.quantum_action(&g, Extension::Canonical).unwrap();
    assert_eq!(classical.apply(&f).to_string(), "i*phi[0]");
    assert_eq!(quantum.apply(&f).to_string(), "-i*conj(phi)[0]");
    assert_eq!(classical.then(&hash).apply(&f).to_string(), "i*conj(phi)[0]");
    assert_eq!(quantum.then(&hash).apply(&f).to_string(), "-i*phi[0]");
    // C_# swaps the charge sectors
    assert_eq!(conjugation_c(&hash.w, &sym(space, Mode::Commutative, 0, &[])).unwrap().to_string(), "conj(phi)[0]");
}

#[test]
fn identity_acts_trivially() {
    let kin = maxwell(false);
    let space = kin.space();
    let f = sym(space, Mode::Commutative, 2, &[1]) * sym(space, Mode::Commutative, 7, &[0, 3]) + sym(space, Mode::Commutative, 9, &[]);
    for kind in [ActionKind::Classical, ActionKind::Quantum] {
        let a = kin.action(kind, &GroupArg::Lorentz(Matrix::<Gq>::identity(4)), Extension::Canonical).unwrap();
        assert_eq!(a.apply(&f), f);
    }
}

#[test]
fn derivative_direction_follows_rotation() {
    let kin = Kinematics::new(Spacetime::Lorentz(MINK), vec![FieldDecl::real("u", RepSpec::Trivial(1))]).unwrap();
    let space = kin.space();
    // quarter turn: e1 ↦ e2, e2 ↦ −e1
    let mut r = Matrix::<Gq>::identity(4);
    r[(1, 1)] = Gq::zero();
    r[(2, 2)] = Gq::zero();
    r[(2, 1)] = Gq::one();
    r[(1, 2)] = -Gq::one();
    let a = kin.classical_action(&GroupArg::Lorentz(r.clone()), Extension::Canonical).unwrap();
    let image = a.apply(&sym(space, Mode::Commutative, 0, &[1]));
    // oracle: expand ω(g)e₁ over the basis
    let col = r.col(1);
    let mut expected = AlgebraElement::zero(space.clone(), Mode::Commutative);
    for (b, c) in col.iter().enumerate() {
        if !c.is_zero() {
            expected = expected + sym(space, Mode::Commutative, 0, &[b as u8]).scale(c);
        }
    }
    assert_eq!(image, expected);
    assert_eq!(image.to_string(), "d[2] u[0]");
}

#[test]
fn composition_of_exact_actions() {
    for kin in [maxwell(false), complex_scalar()] {
        let space = kin.space().clone();
        let f = sym(&space, Mode::Commutative, 0, &[1, 2]) * sym(&space, Mode::Commutative, 1, &[0]).scale(&Gq::complex(1, 2, -3, 1))
            + sym(&space, Mode::Commutative, 1, &[3]).scale(&Gq::i());
        let elems = exact_elements();
        for g in &elems {
            for h in &elems {
                for kind in [ActionKind::Classical, ActionKind::Quantum] {
                    let ag = kin.action(kind, g, Extension::Canonical).unwrap();
                    let ah = kin.action(kind, h, Extension::Canonical).unwrap();
                    let agh = kin.action(kind, &g.mul(h), Extension::Canonical).unwrap();
                    assert_eq!(ag.apply(&ah.apply(&f)), agh.apply(&f));
                    assert_eq!(ah.then(&ag).apply(&f), agh.apply(&f));
                }
            }
        }
    }
}

#[test]
fn spinor_actions_compose_on_cover_samples() {
    let kin = dirac();
    let space = kin.space().clone();
    let f = (sym(&space, Mode::Supercommutative, 0, &[1]) * sym(&space, Mode::Supercommutative, 5, &[])).to_backend::<Complex64>()
        + sym(&space, Mode::Supercommutative, 2, &[0, 3]).to_backend();
    for k in 0..20 {
        let g = GroupArg::Cover(sample_cover(7, k, CoverComponent::DownPlus));
        let h = GroupArg::Cover(sample_cover(8, k, if k % 2 == 0 { CoverComponent::UpPlus } else { CoverComponent::DownPlus }));
        for kind in [ActionKind::Classical, ActionKind::Quantum] {
            let lhs = kin.action(kind, &g, Extension::Canonical).unwrap().apply(&kin.action(kind, &h, Extension::Canonical).unwrap().apply(&f));
            let rhs = kin.action(kind, &g.mul(&h), Extension::Canonical).unwrap().apply(&f);
            assert!(lhs.approx_eq(&rhs));
        }
    }
}

#[test]
fn non_orthochronous_improper_and_complex_elements_are_rejected() {
    let kin = dirac();
    assert!(kin.classical_action(&GroupArg::Cover(sample_cover(1, 0, CoverComponent::DownPlusA)), Extension::Canonical).is_err());
    assert!(kin.classical_action(&GroupArg::Cover(sample_cover(1, 0, CoverComponent::Complex)), Extension::Canonical).is_err());
    let scalar = complex_scalar();
    let parity = GroupArg::Lorentz(Matrix::<Gq>::diag(&[1, -1, -1, -1].map(Gq::from_i64)));
    assert!(scalar.classical_action(&parity, Extension::Canonical).is_err());
}

#[test]
fn quantum_differs_by_star_on_time_reversal() {
    let kin = complex_scalar();
    let space = kin.space();
    let star = SymbolMap::new(WMap::<Gq>::star(space), None);
    let f = sym(space, Mode::Commutative, 0, &[2]) * sym(space, Mode::Commutative, 1, &[]).scale(&Gq::complex(2, 1, 1, 3));
    for g in exact_elements() {
        let c = kin.classical_action(&g, Extension::Canonical).unwrap();
        let q = kin.quantum_action(&g, Extension::Canonical).unwrap();
        if kin.reverses_time(&g).unwrap() {
            assert_eq!(q.apply(&f), star.apply(&c.apply(&f)));
            assert_ne!(q.apply(&f), c.apply(&f));
        } else {
            assert_eq!(q.apply(&f), c.apply(&f));
        }
    }
}

#[test]
fn infinitesimal_action_matches_finite_difference() {
    let kin = maxwell(false);
    let space = kin.space().clone();
    let f = (sym(&space, Mode::Commutative, 1, &[2]) * sym(&space, Mode::Commutative, 8, &[])).to_backend::<Complex64>();
    let eps = 1e-6;
    for x in lie_basis(MINK) {
        let xf = x.map(Complex64::from_gq);
        let g = GroupArg::Lorentz(expm(&xf.scale(&Complex64::new(eps, 0.0))));
        let moved = kin.classical_action(&g, Extension::Canonical).unwrap().apply(&f);
        let fd = (moved - f.clone()).scale(&Complex64::new(1.0 / eps, 0.0));
        let exact = kin.infinitesimal_action(&x).unwrap().apply(&f.to_backend::<Gq>()).to_backend::<Complex64>();
        let diff = fd - exact;
        assert!(diff.max_norm() < 1e-4, "residual {}", diff.max_norm());
    }
}

#[test]
fn infinitesimal_action_is_a_derivation() {
    let kin = dirac();
    let space = kin.space().clone();
    let one = AlgebraElement::<Gq>::one(space.clone(), Mode::Supercommutative);
    let a = sym(&space, Mode::Supercommutative, 1, &[0]);
    let b = sym(&space, Mode::Supercommutative, 6, &[2]);
    for x in lie_basis(MINK) {
        let d = kin.infinitesimal_action(&x).unwrap();
        assert!(d.apply(&one).is_zero());
        assert_eq!(d.apply(&(a.clone() * b.clone())), d.apply(&a) * b.clone() + a.clone() * d.apply(&b));
    }
}

#[test]
fn charge_classification_examples() {
    let kin = complex_scalar();
    let space = kin.space();
    let pt = kin.classical_action(&total_reflection(), Extension::Canonical).unwrap();
    assert_eq!(classify_charge(space, &pt.w).unwrap(), ChargeClass::Preserving);
    let star = WMap::<Gq>::star(space);
    assert_eq!(classify_charge(space, &star).unwrap(), ChargeClass::Conjugating);
    let quantum = kin.quantum_action(&total_reflection(), Extension::Canonical).unwrap();
    assert_eq!(classify_charge(space, &quantum.w).unwrap(), ChargeClass::Conjugating);
    let real = maxwell(false);
    assert_eq!(classify_charge(real.space(), &WMap::<Gq>::identity(10)).unwrap(), ChargeClass::Both);
    assert!(classify_charge(space, &WMap::<Gq>::linear(Matrix::zeros(2, 2))).is_err());
    let mix = WMap::<Gq>::linear(Matrix::from_i64_rows(&[&[1, 1], &[0, 1]]));
    assert_eq!(classify_charge(space, &mix).unwrap(), ChargeClass::Neither);
}

#[test]
fn orthochronous_preserving_implies_pt_preserving() {
    for kin in [dirac(), complex_scalar()] {
        let space = kin.space();
        let sig = kin.spacetime().signature();
        for x in lie_basis(sig) {
            let d = kin.infinitesimal_action(&x).unwrap();
            assert!(classify_charge(space, &WMap::linear(d.w.add(&Matrix::identity(space.len())))).unwrap().is_preserving());
        }
        let g = if kin.fields()[0].rep.is_spinorial() {
            GroupArg::Cover(CoverElement::<Gq>::total_reflection_lift())
        } else {
            total_reflection()
        };
        let pt = kin.classical_action(&g, Extension::Canonical).unwrap();
        assert!(classify_charge(space, &pt.w).unwrap().is_preserving());
    }
}

#[test]
fn hash_must_commute_with_the_representation() {
    let kin = dirac();
    assert!(kin.check_hash().is_ok());
    let bare = Kinematics::new(Spacetime::Lorentz(MINK), vec![FieldDecl::complex("psi", RepSpec::dirac())]).unwrap();
    assert!(bare.involution::<Gq>(&InvolutionSpec::Hash).is_err());
    assert!(bare.involution::<Gq>(&InvolutionSpec::Star).is_ok());
    for spec in ["id", "star", "hash", "starhash"] {
        let w = kin.involution::<Gq>(&spec.parse().unwrap()).unwrap();
        assert!(w.is_involution());
    }
    // # commutes with sampled ρ(g) as well
    let h = kin.hash().map(Complex64::from_gq);
    for k in 0..20 {
        let m = kin.rep().rho(&GroupArg::Cover(sample_cover(5, k, CoverComponent::UpPlus))).unwrap();
        assert!(m.mul(&h).approx_eq(&h.mul(&m)));
    }
}

#[test]
fn pseudo_vector_full_rep_differs_at_total_reflection() {
    let (plain, pseudo) = (maxwell(false), maxwell(true));
    let space = pseudo.space();
    let j0 = sym(space, Mode::Commutative, 6, &[]);
    let g = total_reflection();
    assert_eq!(plain.classical_action(&g, Extension::Full).unwrap().apply(&j0), j0.scale(&-Gq::one()));
    assert_eq!(pseudo.classical_action(&g, Extension::Full).unwrap().apply(&j0), j0);
    assert_eq!(pseudo.classical_action(&g, Extension::Canonical).unwrap().apply(&j0), j0.scale(&-Gq::one()));
}

#[test]
fn galilean_actions() {
    let kin = Kinematics::new(Spacetime::Galilean(3), vec![FieldDecl::real("u", RepSpec::Trivial(1))]).unwrap();
    assert!(Kinematics::new(Spacetime::Galilean(3), vec![FieldDecl::real("v", RepSpec::Vector)]).is_err());
    let t = GroupArg::Lorentz(cpt_lorentz::galilean::galilean_time_reversal(3));
    assert!(kin.reverses_time(&t).unwrap());
    let space = kin.space();
    let a = kin.classical_action(&t, Extension::Canonical).unwrap();
    assert_eq!(a.apply(&sym(space, Mode::Commutative, 0, &[0])).to_string(), "-d[0] u[0]");
    let boost = cpt_lorentz::galilean::sample_galilean(1, 0, 3);
    assert!(!kin.reverses_time(&GroupArg::Lorentz(boost)).unwrap());
}

fn arb_element(space: Arc<FieldSymbolSpace>, mode: Mode) -> impl Strategy<Value = AlgebraElement<Gq>> {
    let n = space.len();
    let term = (
        proptest::collection::vec((0..n, proptest::collection::vec(0u8..4, 0..3)), 0..4),
        (-4i64..=4, -4i64..=4),
    );
    proptest::collection::vec(term, 1..4).prop_map(move |terms| {
        terms.into_iter().fold(AlgebraElement::zero(space.clone(), mode), |acc, (factors, (re, im))| {
            let syms = factors.into_iter().map(|(j, d)| FieldSymbol::new(j, d)).collect();
            acc + AlgebraElement::monomial(space.clone(), mode, syms, Gq::complex(re, 1, im, 1))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn classical_action_commutes_with_strong_reflection(f in arb_element(dirac().space().clone(), Mode::Supercommutative)) {
        let kin = dirac();
        let g = GroupArg::Cover(CoverElement::<Gq>::total_reflection_lift());
        let a = kin.classical_action(&g, Extension::Canonical).unwrap();
        prop_assert_eq!(a.apply(&f.strong_reflection()), a.apply(&f).strong_reflection());
    }

    #[test]
    fn quantum_equals_classical_when_orthochronous(f in arb_element(complex_scalar().space().clone(), Mode::Commutative), k in 0u64..50) {
        let kin = complex_scalar();
        let g = GroupArg::Lorentz(sample_proper_ortho(13, k, MINK).matrix);
        let ff = f.to_backend::<Complex64>();
        let c = kin.classical_action(&g, Extension::Canonical).unwrap().apply(&ff);
        let q = kin.quantum_action(&g, Extension::Canonical).unwrap().apply(&ff);
        prop_assert!(c.approx_eq(&q));
    }
}
