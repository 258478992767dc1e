use cpt_algebra::{Gq, Matrix, Scalar};
use cpt_lorentz::cover::random_sl2;
use cpt_lorentz::lie::{expm, rng_for};
use cpt_lorentz::{lie_basis, sample_cover, sample_proper_ortho, CoverComponent, CoverElement, Signature};
use cpt_reps::dirac::{charge_conjugation, gamma, gamma5, realify};
use cpt_reps::{GroupArg, Rep, RepSpec};
use num_complex::Complex64;
use proptest::prelude::*;

const MINK: Signature = Signature::MINKOWSKI;

fn q(v: &[i64]) -> Vec<Gq> {
    v.iter().map(|&x| Gq::from_i64(x)).collect()
}

fn cover(c: CoverElement<Complex64>) -> GroupArg<Complex64> {
    GroupArg::Cover(c)
}

fn exact_pair(a: [[(i64, i64); 2]; 2], b: [[(i64, i64); 2]; 2]) -> GroupArg<Gq> {
    GroupArg::Cover(CoverElement::from_i64(a, b).unwrap())
}

/// Unipotent product [[1,z],[0,1]]·[[1,0],[w,1]] with Gaussian-integer z, w: an exact SL(2,ℂ) element.
fn exact_sl2(z: (i64, i64), w: (i64, i64)) -> Matrix<Gq> {
    let zq = Gq::complex(z.0, 1, z.1, 1);
    let wq = Gq::complex(w.0, 1, w.1, 1);
    let upper = Matrix::from_rows(vec![vec![Gq::one(), zq], vec![Gq::zero(), Gq::one()]]);
    let lower = Matrix::from_rows(vec![vec![Gq::one(), Gq::zero()], vec![wq, Gq::one()]]);
    upper.mul(&lower)
}

fn in_component(a: Matrix<Gq>, comp: CoverComponent) -> GroupArg<Gq> {
    let abar = a.conj();
    let i = Gq::i();
    let c = match comp {
        CoverComponent::UpPlus => CoverElement { b: abar, a },
        CoverComponent::DownPlusA => CoverElement { b: abar.neg(), a },
        CoverComponent::DownPlus => CoverElement { a: a.scale(&i), b: abar.scale(&i) },
        _ => unreachable!(),
    };
    GroupArg::Cover(c)
}

#[test]
fn complexified_weyl_action_of_one_minus_one() {
    let rep = Rep::new(RepSpec::WeylLeft, MINK).unwrap();
    let m = rep.rho_complex(&exact_pair([[(1, 0), (0, 0)], [(0, 0), (1, 0)]], [[(-1, 0), (0, 0)], [(0, 0), (-1, 0)]])).unwrap();
    let (x, y, z, w) = (Gq::from_i64(2), Gq::from_i64(-3), Gq::from_i64(5), Gq::from_i64(7));
    let out = m.mul_vec(&[x.clone(), y.clone(), z.clone(), w.clone()]);
    let i = Gq::i();
    assert_eq!(out, vec![i.clone() * y, -i.clone() * x, i.clone() * w, -i * z]);
}

#[test]
fn rho_prime_of_total_reflection_lift() {
    let rep = Rep::new(RepSpec::WeylLeft, MINK).unwrap();
    let g = GroupArg::Cover(CoverElement::<Gq>::total_reflection_lift());
    let m = rep.rho_prime(&g).unwrap();
    let (x, y, z, w) = (Gq::from_i64(2), Gq::from_i64(-3), Gq::from_i64(5), Gq::from_i64(7));
    assert_eq!(m.mul_vec(&[x.clone(), y.clone(), z.clone(), w.clone()]), vec![-y, x, -w, z]);
    assert!(rep.rho(&g).is_err());
}

#[test]
fn vector_rep_of_cover_is_projection() {
    let rep = Rep::new(RepSpec::Vector, MINK).unwrap();
    for k in 0..50 {
        let c = sample_cover(3, k, CoverComponent::UpPlus);
        let m = rep.rho(&cover(c.clone())).unwrap();
        assert!(m.approx_eq(&c.project().unwrap()));
    }
}

#[test]
fn tensor_product_is_kronecker() {
    let rep = Rep::new(RepSpec::tensor(RepSpec::Vector, RepSpec::Vector), MINK).unwrap();
    for k in 0..20 {
        let g = sample_proper_ortho(5, k, MINK).matrix;
        let m = rep.rho(&GroupArg::Lorentz(g.clone())).unwrap();
        // oracle: entry ((a,b),(c,d)) = g_ac g_bd
        let oracle = Matrix::from_fn(16, 16, |r, s| g[(r / 4, s / 4)] * g[(r % 4, s % 4)]);
        assert!(m.approx_eq(&oracle));
    }
}

#[test]
fn antisymmetric_tensor_matches_restriction_of_kronecker() {
    let rep = Rep::new(RepSpec::antisym2(RepSpec::Vector), MINK).unwrap();
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
    for k in 0..10 {
        let g = sample_proper_ortho(8, k, MINK).matrix;
        let m = rep.rho(&GroupArg::Lorentz(g.clone())).unwrap();
        let full = g.kron(&g);
        for (col, &(c, d)) in pairs.iter().enumerate() {
            // image of e_c⊗e_d − e_d⊗e_c, read off at e_a⊗e_b
            for (row, &(a, b)) in pairs.iter().enumerate() {
                let v = full[(4 * a + b, 4 * c + d)] - full[(4 * a + b, 4 * d + c)];
                assert!((m[(row, col)] - v).norm() < 1e-9);
            }
        }
    }
}

#[test]
fn grade_split_examples() {
    let v = q(&[1, 2, 3, 4]);
    let vector = Rep::new(RepSpec::Vector, MINK).unwrap();
    let (v0, v1) = vector.grade_split(&v);
    assert_eq!((v0, v1.iter().all(Scalar::is_zero)), (v.clone(), true));
    let weyl = Rep::new(RepSpec::WeylLeft, MINK).unwrap();
    let (w0, w1) = weyl.grade_split(&v);
    assert!(w0.iter().all(Scalar::is_zero));
    assert_eq!(w1, v);
    let dirac = Rep::new(RepSpec::dirac(), MINK).unwrap();
    assert!(dirac.grading().neg().is_identity());
    assert_eq!(dirac.coordinate_grades(), Some(vec![1; 8]));
    let mixed = Rep::new(RepSpec::sum(RepSpec::Vector, RepSpec::WeylRight), MINK).unwrap();
    assert_eq!(mixed.coordinate_grades(), Some(vec![0, 0, 0, 0, 1, 1, 1, 1]));
    let bispinor = Rep::new(RepSpec::tensor(RepSpec::WeylLeft, RepSpec::WeylRight), MINK).unwrap();
    assert!(bispinor.grading().is_identity());
}

#[test]
fn real_images_of_non_orthochronous_lifts_are_imaginary_on_odd_part() {
    let rep = Rep::new(RepSpec::sum(RepSpec::WeylLeft, RepSpec::Vector), MINK).unwrap();
    let p1 = rep.grade_projector(1).map(Complex64::from_gq);
    for k in 0..100 {
        let g = sample_cover(11, k, CoverComponent::DownPlusA);
        let m = rep.rho_complex(&cover(g)).unwrap();
        // V₁ → iV₁: the odd block of ρᶜ(g) is purely imaginary
        let odd = m.mul(&p1);
        assert!(odd.real_part().max_norm() < 1e-9 * odd.max_norm().max(1.0));
    }
}

#[test]
fn rank_two_tensor_at_minus_one() {
    let rep = Rep::new(RepSpec::tensor(RepSpec::Vector, RepSpec::Vector), MINK).unwrap();
    let g = GroupArg::Lorentz(Matrix::<Gq>::identity(4).neg());
    assert!(rep.rho_prime(&g).unwrap().is_identity());
    let vector = Rep::new(RepSpec::Vector, MINK).unwrap();
    assert!(vector.rho_prime(&GroupArg::Cover(CoverElement::<Gq>::total_reflection_lift())).unwrap().neg().is_identity());
}

#[test]
fn pseudo_twist_only_in_full_representation() {
    let rep = Rep::new(RepSpec::pseudo(RepSpec::Vector), MINK).unwrap();
    let r = Matrix::<Gq>::identity(4).neg();
    assert!(rep.rho_full(&r).unwrap().is_identity());
    assert!(rep.rho_prime(&GroupArg::Lorentz(r)).unwrap().neg().is_identity());
    let g = sample_proper_ortho(2, 0, MINK).matrix;
    assert!(rep.rho_full(&g).unwrap().approx_eq(&g));
}

#[test]
fn holomorphic_extension_examples() {
    let dirac = Rep::new(RepSpec::dirac(), MINK).unwrap().with_complex_structure(cpt_reps::standard_complex_structure(8)).unwrap();
    let lift = exact_pair([[(1, 0), (0, 0)], [(0, 0), (1, 0)]], [[(-1, 0), (0, 0)], [(0, 0), (-1, 0)]]);
    assert_eq!(lift.spacetime(), Matrix::identity(4).neg());
    assert_eq!(dirac.rho_hol(&lift).unwrap(), realify(&gamma5()));
    let other = exact_pair([[(-1, 0), (0, 0)], [(0, 0), (-1, 0)]], [[(1, 0), (0, 0)], [(0, 0), (1, 0)]]);
    assert_eq!(dirac.rho_hol(&other).unwrap(), realify(&gamma5()).neg());
    assert!(dirac.rho_hol(&GroupArg::Cover(CoverElement::<Gq>::identity())).unwrap().is_identity());

    let weyl = Rep::complex(RepSpec::WeylLeft, MINK).unwrap();
    let a = exact_sl2((1, 2), (0, -1));
    let g = in_component(a.clone(), CoverComponent::DownPlusA);
    assert_eq!(weyl.rho_hol(&g).unwrap(), realify(&a));
}

#[test]
fn complex_structure_is_validated() {
    assert!(Rep::complex(RepSpec::Vector, MINK).is_err());
    assert!(Rep::complex(RepSpec::Trivial(3), MINK).is_err());
    assert!(Rep::complex(RepSpec::tensor(RepSpec::Vector, RepSpec::Trivial(2)), MINK).is_ok());
    assert!(Rep::complex(RepSpec::WeylRight, MINK).is_ok());
}

#[test]
fn dirac_matrices_are_covariant() {
    let dirac = Rep::new(RepSpec::dirac(), MINK).unwrap();
    let gammas: Vec<Matrix<Complex64>> = (0..4).map(|mu| realify(&gamma(mu)).map(Complex64::from_gq)).collect();
    for k in 0..30 {
        let c = sample_cover(21, k, CoverComponent::UpPlus);
        let s = dirac.rho(&cover(c.clone())).unwrap();
        let s_inv = s.inverse().unwrap();
        let lambda = c.project().unwrap();
        for mu in 0..4 {
            let lhs = s_inv.mul(&gammas[mu]).mul(&s);
            let rhs = (0..4).fold(Matrix::zeros(8, 8), |acc, nu| acc.add(&gammas[nu].scale(&lambda[(mu, nu)])));
            assert!(lhs.approx_eq(&rhs), "covariance fails at μ={mu}");
        }
    }
}

#[test]
fn charge_conjugation_commutes_with_dirac_rep() {
    let dirac = Rep::new(RepSpec::dirac(), MINK).unwrap();
    let c = charge_conjugation();
    for f in lie_basis(MINK) {
        let d = dirac.d_rho(&f).unwrap();
        assert_eq!(d.mul(&c), c.mul(&d));
    }
}

#[test]
fn derivative_matches_finite_difference() {
    let reps = [
        RepSpec::dirac(),
        RepSpec::sym2(RepSpec::Vector),
        RepSpec::dual(RepSpec::antisym2(RepSpec::Vector)),
        RepSpec::tensor(RepSpec::WeylLeft, RepSpec::Vector),
    ];
    let eps = 1e-6;
    for spec in reps {
        let rep = Rep::new(spec.clone(), MINK).unwrap();
        for f in lie_basis(MINK) {
            let x = f.map(Complex64::from_gq);
            let (a, b) = cpt_reps::spin::lie_to_sl2(&x).unwrap();
            let small = |m: &Matrix<Complex64>| expm(&m.scale(&Complex64::new(eps, 0.0)));
            let g = CoverElement { a: small(&a), b: small(&b) };
            let fd = rep.rho(&cover(g)).unwrap().sub(&Matrix::identity(rep.dim())).scale(&Complex64::new(1.0 / eps, 0.0));
            let exact = rep.d_rho(&f).unwrap().map(Complex64::from_gq);
            assert!(fd.sub(&exact).max_norm() < 1e-4, "{spec}");
        }
    }
}

#[test]
fn tensor_reps_in_other_signatures() {
    for sig in [Signature::new(2, 2).unwrap(), Signature::new(1, 2).unwrap()] {
        let rep = Rep::new(RepSpec::sum(RepSpec::antisym2(RepSpec::Vector), RepSpec::Vector), sig).unwrap();
        let g = sample_proper_ortho(4, 1, sig).matrix;
        let h = sample_proper_ortho(4, 2, sig).matrix;
        let lhs = rep.rho(&GroupArg::Lorentz(g.mul(&h))).unwrap();
        let rhs = rep.rho(&GroupArg::Lorentz(g)).unwrap().mul(&rep.rho(&GroupArg::Lorentz(h)).unwrap());
        assert!(lhs.approx_eq(&rhs));
        let pt = GroupArg::Lorentz(sig.pt_representative::<Gq>());
        assert!(rep.rho_prime(&pt).is_ok());
    }
}

fn float_samples(seed: u64, k: u64) -> (GroupArg<Complex64>, GroupArg<Complex64>) {
    let mut rng = rng_for(seed, k);
    let a = random_sl2(&mut rng, 0.8);
    let c = random_sl2(&mut rng, 0.8);
    let (ab, cb) = (a.conj(), c.conj());
    (cover(CoverElement { a, b: ab }), cover(CoverElement { a: c, b: cb }))
}

#[test]
fn multiplicativity_on_float_samples() {
    let specs = [RepSpec::dirac(), RepSpec::tensor(RepSpec::WeylLeft, RepSpec::dual(RepSpec::WeylRight)), RepSpec::sym2(RepSpec::WeylLeft)];
    for spec in specs {
        let rep = Rep::new(spec, MINK).unwrap();
        for k in 0..200 {
            let (g, h) = float_samples(31, k);
            let lhs = rep.rho(&g.mul(&h)).unwrap();
            let rhs = rep.rho(&g).unwrap().mul(&rep.rho(&h).unwrap());
            assert!(lhs.approx_eq(&rhs));
        }
    }
}

fn gauss() -> impl Strategy<Value = (i64, i64)> {
    (-3i64..=3, -3i64..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_rho_prime_is_real_and_consistent(
        z in gauss(), w in gauss(), z2 in gauss(), w2 in gauss(),
        v in proptest::collection::vec(-9i64..=9, 12),
    ) {
        let rep = Rep::new(RepSpec::sum(RepSpec::WeylLeft, RepSpec::sum(RepSpec::Vector, RepSpec::WeylRight)), MINK).unwrap();
        let g = in_component(exact_sl2(z, w), CoverComponent::DownPlus);
        let h = in_component(exact_sl2(z2, w2), CoverComponent::UpPlus);
        let rg = rep.rho_prime(&g).unwrap();
        prop_assert!(rg.is_real());
        prop_assert!(rg.mul_vec(&q(&v)).iter().all(Scalar::is_real));
        // ρ′(g)ρ(h) = ρ′(gh), and two non-orthochronous factors compose to ρ
        prop_assert_eq!(rg.mul(&rep.rho(&h).unwrap()), rep.rho_prime(&g.mul(&h)).unwrap());
        let g2 = in_component(exact_sl2(z2, w), CoverComponent::DownPlus);
        prop_assert_eq!(rg.mul(&rep.rho_prime(&g2).unwrap()), rep.rho(&g.mul(&g2)).unwrap());
        // grading preserved
        let tau = rep.grading();
        prop_assert_eq!(rg.mul(tau), tau.mul(&rg));
    }

    #[test]
    fn exact_complex_rep_is_multiplicative(z in gauss(), w in gauss(), z2 in gauss(), w2 in gauss()) {
        let rep = Rep::new(RepSpec::tensor(RepSpec::dirac(), RepSpec::Vector), MINK).unwrap();
        let g = GroupArg::Cover(CoverElement { a: exact_sl2(z, w), b: exact_sl2(w2, z) });
        let h = GroupArg::Cover(CoverElement { a: exact_sl2(z2, w2), b: exact_sl2(w, z2) });
        prop_assert_eq!(rep.rho_complex(&g.mul(&h)).unwrap(), rep.rho_complex(&g).unwrap().mul(&rep.rho_complex(&h).unwrap()));
    }
}
