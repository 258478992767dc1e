//! Sampled evidence for the axioms PT-1 … PT-5 via matrix groups and the Clifford/Pin model.

use std::f64::consts::PI;

use cpt_algebra::par::{self, Execution};
use cpt_algebra::{Matrix, Scalar};
use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::clifford::{lie_to_bivector, plane_bivector, CliffordElement, Metric};
use crate::galilean::{galilean_component, galilean_lie_basis, sample_galilean};
use crate::lie::{expm, lie_generator, random_complex_lie_element, random_lie_element, rng_for};
use crate::signature::{classify_component, Component, Signature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub verdict: Verdict,
    pub evidence: String,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomReport {
    pub group: String,
    pub samples: usize,
    pub seed: u64,
    pub axioms: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn verdict(&self, axiom: &str) -> Option<Verdict> {
        self.axioms.iter().find(|a| a.axiom == axiom).map(|a| a.verdict)
    }

    pub fn all_hold(&self) -> bool {
        self.axioms.iter().all(|a| a.verdict == Verdict::Holds)
    }
}

fn check(axiom: &str, holds: bool, evidence: impl Into<String>, witnesses: Vec<String>) -> AxiomCheck {
    AxiomCheck {
        axiom: axiom.into(),
        verdict: if holds { Verdict::Holds } else { Verdict::Fails },
        evidence: evidence.into(),
        witnesses,
    }
}

fn fmt_matrix(m: &Matrix<Complex64>) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let cells: Vec<String> = m
                .row(r)
                .iter()
                .map(|z| {
                    let (re, im) = ((z.re * 1e6).round() / 1e6 + 0.0, (z.im * 1e6).round() / 1e6 + 0.0);
                    if im == 0.0 { format!("{re}") } else { format!("{re}{im:+}i") }
                })
                .collect();
            cells.join(" ")
        })
        .collect();
    format!("[{}]", rows.join("; "))
}

fn complex_isometry(sig: Signature, g: &Matrix<Complex64>) -> bool {
    let eta = sig.eta::<Complex64>();
    g.transpose().mul(&eta).mul(g).approx_eq(&eta)
}

fn lie_f(sig: Signature, a: usize, b: usize) -> Matrix<Complex64> {
    lie_generator(sig, a, b).map(|x| x.to_c64())
}

/// Planes whose half-turns compose to the PT representative; mixed planes are rotated
/// through the complex angle (multiplied by i).
fn pt_planes(sig: Signature) -> Vec<(usize, usize, bool)> {
    let d = sig.dim();
    let rep = sig.pt_representative::<Complex64>();
    let flipped: Vec<usize> = (0..d).filter(|&i| rep[(i, i)].re < 0.0).collect();
    let mut planes = vec![(0, sig.p, true)];
    let rest_t: Vec<usize> = flipped.iter().copied().filter(|&i| i != 0 && i < sig.p).collect();
    let rest_s: Vec<usize> = flipped.iter().copied().filter(|&i| i > sig.p).collect();
    for pair in rest_t.chunks(2).chain(rest_s.chunks(2)) {
        planes.push((pair[0], pair[1], false));
    }
    planes
}

/// Z with exp(Z) equal to the PT representative.
fn pt_log(sig: Signature) -> Matrix<Complex64> {
    let d = sig.dim();
    pt_planes(sig).into_iter().fold(Matrix::zeros(d, d), |acc, (a, b, mixed)| {
        let c = if mixed { Complex64::new(0.0, PI) } else { Complex64::new(PI, 0.0) };
        acc.add(&lie_f(sig, a, b).scale(&c))
    })
}

fn definite_plane(sig: Signature) -> Option<(usize, usize)> {
    if sig.p >= 2 {
        Some((0, 1))
    } else if sig.q >= 2 {
        Some((sig.p, sig.p + 1))
    } else {
        None
    }
}

pub fn verify_axioms(sig: Signature, samples: usize, seed: u64) -> AxiomReport {
    verify_axioms_with(Execution::default(), sig, samples, seed)
}

pub fn verify_axioms_with(exec: Execution, sig: Signature, samples: usize, seed: u64) -> AxiomReport {
    let axioms = if sig.dim() == 2 {
        vec![pt1(exec, sig, samples, seed), pt2_plane(), pt3_plane(exec, samples, seed), pt4_plane(), pt5_plane()]
    } else {
        vec![
            pt1(exec, sig, samples, seed),
            pt2(exec, sig, samples, seed),
            pt3(exec, sig, samples, seed),
            pt4(sig),
            pt5(exec, sig, samples, seed),
        ]
    };
    AxiomReport { group: format!("Lorentz{sig}"), samples, seed, axioms }
}

/// Every sample exp(X)exp(Y) is joined to the identity by t ↦ exp(tX)exp(tY) inside L↑+.
fn pt1(exec: Execution, sig: Signature, samples: usize, seed: u64) -> AxiomCheck {
    let bad = par::map_range(exec, samples, |k| {
        let mut rng = rng_for(seed, k as u64);
        let x = random_lie_element(sig, &mut rng, 1.5);
        let y = random_lie_element(sig, &mut rng, 1.5);
        (0..=8).find_map(|j| {
            let t = Complex64::new(j as f64 / 8.0, 0.0);
            let g = expm(&x.scale(&t)).mul(&expm(&y.scale(&t))).real_part();
            let ok = classify_component(sig, &g) == Ok(Component::ProperOrthochronous);
            (!ok).then(|| fmt_matrix(&g))
        })
    });
    let failures: Vec<String> = bad.into_iter().flatten().collect();
    check(
        "PT-1",
        failures.is_empty(),
        format!("{samples} sampled elements joined to the identity by paths inside L↑+"),
        failures,
    )
}

/// The PT representative is exp(Z) for a complex Lie-algebra element Z, the path
/// exp(tZ) stays in L+(ℂ), and a 2π loop in a definite plane lifts to −1 so the
/// complexification is L+(ℂ) itself rather than a cover.
fn pt2(exec: Execution, sig: Signature, samples: usize, seed: u64) -> AxiomCheck {
    let z = pt_log(sig);
    let rep = sig.pt_representative::<Complex64>();
    let mut witnesses = Vec::new();
    let path_ok = (0..=16).all(|j| {
        let g = expm(&z.scale(&Complex64::new(j as f64 / 16.0, 0.0)));
        complex_isometry(sig, &g) && g.det().approx_eq(&Complex64::new(1.0, 0.0))
    });
    let end_ok = expm(&z).approx_eq(&rep);
    witnesses.push(format!("exp(Z) = {}", fmt_matrix(&expm(&z))));
    let metric = Metric::lorentzian(sig);
    let loop_ok = match definite_plane(sig) {
        Some((a, b)) => {
            let lift = plane_bivector(&metric, a, b).scale(Complex64::new(2.0 * PI, 0.0)).exp();
            lift.approx_eq(&CliffordElement::one(&metric).neg())
        }
        None => false,
    };
    let products_ok = par::map_range(exec, samples, |k| {
        let mut rng = rng_for(seed ^ 0x50_5432, k as u64);
        let x = random_lie_element(sig, &mut rng, 1.0);
        let g = rep.mul(&expm(&x)).real_part();
        classify_component(sig, &g) == Ok(Component::ProperNonOrthochronous)
    })
    .into_iter()
    .all(|b| b);
    check(
        "PT-2",
        path_ok && end_ok && loop_ok && products_ok,
        format!(
            "complex path to the PT representative: {}; compact 2π loop lifts to −1: {}; representative·L↑+ ⊂ L↓+: {}",
            path_ok && end_ok,
            loop_ok,
            products_ok
        ),
        witnesses,
    )
}

/// Conjugation-fixed elements of L+(ℂ) include all of L↓+, and the conjugation of the
/// complexification agrees with entry-wise conjugation: (exp Z)* = exp(Z*).
fn pt3(exec: Execution, sig: Signature, samples: usize, seed: u64) -> AxiomCheck {
    let rep = sig.pt_representative::<Complex64>();
    let results = par::map_range(exec, samples, |k| {
        let mut rng = rng_for(seed ^ 0x50_5433, k as u64);
        let x = random_lie_element(sig, &mut rng, 1.0);
        let g = rep.mul(&expm(&x));
        let fixed = g.conj().approx_eq(&g);
        let comp = classify_component(sig, &g.real_part()).ok();
        let zc = random_complex_lie_element(sig, &mut rng, 0.7);
        let lie_conj = expm(&zc).conj().approx_eq(&expm(&zc.conj()));
        (fixed, comp, lie_conj)
    });
    let down = results.iter().filter(|r| r.0 && r.1 == Some(Component::ProperNonOrthochronous)).count();
    let all_ok = results.iter().all(|r| r.0 && r.2);
    check(
        "PT-3",
        all_ok && down > 0,
        format!("{down} of {samples} conjugation-fixed samples lie in L↓+; conjugation commutes with exp"),
        vec![fmt_matrix(&rep)],
    )
}

/// su(2) generators on three axes, scaled so each squares to −¼.
fn su2_triple(metric: &Metric, axes: [usize; 3]) -> [CliffordElement; 3] {
    let gen = |a: usize, b: usize| {
        let c = if metric.0[a] * metric.0[b] > 0 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 1.0) };
        let (lo, hi, s) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
        plane_bivector(metric, lo, hi).scale(c * s)
    };
    let [a, b, c] = axes;
    [gen(b, c), gen(c, a), gen(a, b)]
}

/// The universal cover of L+(ℂ) is Spin(ℂ): the 2π loop lifts to −1 and the 4π loop is
/// contracted explicitly inside an S³ ⊂ Spin.
fn pt4(sig: Signature) -> AxiomCheck {
    let metric = Metric::lorentzian(sig);
    spin_double_cover("PT-4", &metric)
}

fn spin_double_cover(name: &str, metric: &Metric) -> AxiomCheck {
    let one = CliffordElement::one(metric);
    let j = su2_triple(metric, [0, 1, 2]);
    let squares_ok = j.iter().all(|x| x.mul(x).approx_eq(&one.scale(Complex64::new(-0.25, 0.0))));
    let half_loop = j[2].scale(Complex64::new(2.0 * PI, 0.0)).exp();
    let lift_ok = half_loop.approx_eq(&one.neg());
    let proj_ok = half_loop.adjoint_matrix().is_some_and(|m| m.is_identity());
    // γ_s(t) = exp(2πt J₃)·exp(2πt J_{n(s)}), n(0) = e₃, n(1) = −e₃
    let mut homotopy_ok = true;
    let mut max_step: f64 = 0.0;
    for si in 0..=8 {
        let s = si as f64 / 8.0;
        let (sn, cs) = (PI * s).sin_cos();
        let jn = j[0].scale(Complex64::new(sn, 0.0)).add(&j[2].scale(Complex64::new(cs, 0.0)));
        let mut prev: Option<CliffordElement> = None;
        for ti in 0..=32 {
            let t = ti as f64 / 32.0;
            let g = j[2]
                .scale(Complex64::new(2.0 * PI * t, 0.0))
                .exp()
                .mul(&jn.scale(Complex64::new(2.0 * PI * t, 0.0)).exp());
            if (ti == 0 || ti == 32) && !g.approx_eq(&one) {
                homotopy_ok = false;
            }
            if si == 8 && !g.approx_eq(&one) {
                homotopy_ok = false;
            }
            if g.adjoint_matrix().is_none() {
                homotopy_ok = false;
            }
            if let Some(p) = &prev {
                max_step = max_step.max(g.add(&p.neg()).norm());
            }
            prev = Some(g);
        }
    }
    let holds = squares_ok && lift_ok && proj_ok && homotopy_ok;
    check(
        name,
        holds,
        format!(
            "2π loop lifts to −1: {lift_ok}; 4π loop contracted in S³ ⊂ Spin: {homotopy_ok} (max step {:.3})",
            max_step
        ),
        vec![],
    )
}

/// h lifts the PT representative; samples g = g₀·h with g₀ ∈ L̃↑+ satisfy g* = gτ = −g,
/// and i·g is conjugation-fixed (the cover L̃↓+).
fn pt5(exec: Execution, sig: Signature, samples: usize, seed: u64) -> AxiomCheck {
    let metric = Metric::lorentzian(sig);
    let h = pt_planes(sig).into_iter().fold(CliffordElement::one(&metric), |acc, (a, b, mixed)| {
        let c = if mixed { Complex64::new(0.0, PI) } else { Complex64::new(PI, 0.0) };
        acc.mul(&plane_bivector(&metric, a, b).scale(c).exp())
    });
    let results = par::map_range(exec, samples, |k| {
        let mut rng = rng_for(seed ^ 0x50_5435, k as u64);
        let x = random_lie_element(sig, &mut rng, 1.0);
        let g0 = lie_to_bivector(&metric, &x).exp();
        let g = g0.mul(&h);
        let proj = g.adjoint_matrix().map(|m| m.real_part());
        let down = proj.is_some_and(|m| classify_component(sig, &m) == Ok(Component::ProperNonOrthochronous));
        let tau = g.conj().approx_eq(&g.neg());
        let ig = g.scale(Complex64::new(0.0, 1.0));
        let fixed = ig.conj().approx_eq(&ig);
        down && tau && fixed
    });
    let good = results.iter().filter(|&&b| b).count();
    check(
        "PT-5",
        good == samples && samples > 0,
        format!("{good} of {samples} lifts g of L↓+ satisfy g* = gτ"),
        vec![],
    )
}

// Two dimensions: L↑+ ≅ ℝ, so its complexification is ℂ acting by z ↦ exp(zK), which
// covers L+(ℂ) ≅ ℂ* infinitely often.

fn pt2_plane() -> AxiomCheck {
    // preimages of −𝟙 in ℂ are iπ(2k+1); a subgroup copy of L+ would need one of order two
    let orders: Vec<String> = (-2..=2)
        .map(|k| {
            let z = Complex64::new(0.0, PI * (2 * k + 1) as f64);
            format!("z = {:.4}i, 2z = {:.4}i", z.im, 2.0 * z.im)
        })
        .collect();
    check(
        "PT-2",
        false,
        "no compact loop in L↑+; every preimage of the PT element in the complexification has infinite order",
        orders,
    )
}

fn pt3_plane(exec: Execution, samples: usize, seed: u64) -> AxiomCheck {
    let sig = Signature { p: 1, q: 1 };
    let k = lie_f(sig, 0, 1);
    let comps = par::map_range(exec, samples, |n| {
        let mut rng = rng_for(seed ^ 0x2d, n as u64);
        let z = Complex64::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
        // conjugation on the complexification is z ↦ z̄; its fixed points are real z
        let fixed = Complex64::new(z.re, 0.0);
        let g = expm(&k.scale(&fixed)).real_part();
        classify_component(sig, &g).ok()
    });
    let only_up = comps.iter().all(|c| *c == Some(Component::ProperOrthochronous));
    check(
        "PT-3",
        false,
        if only_up {
            "conjugation-fixed elements found only in L↑+"
        } else {
            "unexpected conjugation-fixed element outside L↑+"
        },
        vec![],
    )
}

fn pt4_plane() -> AxiomCheck {
    let sig = Signature { p: 1, q: 1 };
    let k = lie_f(sig, 0, 1);
    // eigenvector of K with eigenvalue 1
    let u = [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)];
    let winding = |n: i32| {
        let steps = 256;
        let mut total = 0.0;
        let mut prev = Complex64::new(1.0, 0.0);
        for s in 1..=steps {
            let t = n as f64 * s as f64 / steps as f64;
            let g = expm(&k.scale(&Complex64::new(0.0, 2.0 * PI * t)));
            let gu = g.mul_vec(&u);
            let lambda = (gu[0] * u[0].conj() + gu[1] * u[1].conj()) / 2.0;
            total += (lambda / prev).arg();
            prev = lambda;
        }
        (total / (2.0 * PI)).round() as i64
    };
    let windings: Vec<String> = (1..=3).map(|n| format!("loop^{n} winds {} times", winding(n))).collect();
    check(
        "PT-4",
        false,
        "the generating loop of L+(ℂ) ≅ ℂ* has non-zero winding in every power, so the universal cover is infinite",
        windings,
    )
}

fn pt5_plane() -> AxiomCheck {
    AxiomCheck {
        axiom: "PT-5".into(),
        verdict: Verdict::NotApplicable,
        evidence: "no double cover of L+(ℂ) exists to carry the conjugation".into(),
        witnesses: vec![],
    }
}

/// Galilean group of ℝ × ℝ^{d−1}.
pub fn verify_axioms_galilean(d: usize, samples: usize, seed: u64) -> AxiomReport {
    let exec = Execution::default();
    let basis: Vec<Matrix<Complex64>> = galilean_lie_basis(d).iter().map(|m| m.map(|x| x.to_c64())).collect();
    let combo = |rng: &mut rand_chacha::ChaCha8Rng, complex: bool| {
        basis.iter().fold(Matrix::<Complex64>::zeros(d, d), |acc, f| {
            let im = if complex { rng.random_range(-1.0..1.0) } else { 0.0 };
            acc.add(&f.scale(&Complex64::new(rng.random_range(-1.0..1.0), im)))
        })
    };
    let pt1_ok = par::map_range(exec, samples, |k| {
        let g = sample_galilean(seed, k as u64, d);
        galilean_component(&g) == Some(Component::ProperOrthochronous)
    })
    .into_iter()
    .all(|b| b);
    let time_coeffs = par::map_range(exec, samples, |k| {
        let mut rng = rng_for(seed ^ 0x6a1, k as u64);
        expm(&combo(&mut rng, true))[(0, 0)]
    });
    let a_is_one = time_coeffs.iter().all(|a| a.approx_eq(&Complex64::new(1.0, 0.0)));
    let fixed_comps = par::map_range(exec, samples, |k| {
        let mut rng = rng_for(seed ^ 0x6a3, k as u64);
        let g = expm(&combo(&mut rng, false));
        galilean_component(&g.real_part())
    });
    let only_up = fixed_comps.iter().all(|c| *c == Some(Component::ProperOrthochronous));
    let mut axioms = vec![
        check("PT-1", pt1_ok, format!("{samples} samples are exponentials in the identity component"), vec![]),
        check(
            "PT-2",
            false,
            if a_is_one {
                "every element of the complexification has time coefficient a = 1, so no time reversal lies in it"
            } else {
                "unexpected time coefficient in the complexification"
            },
            vec![],
        ),
        check(
            "PT-3",
            false,
            if only_up {
                "conjugation-fixed elements found only in L↑+"
            } else {
                "unexpected conjugation-fixed element outside L↑+"
            },
            vec![],
        ),
    ];
    // the cover question only involves the rotation part
    let spatial = Metric(vec![1; d - 1]);
    let pt4 = if d >= 4 {
        spin_double_cover("PT-4", &spatial)
    } else {
        check("PT-4", false, "SO(2,ℂ) ≅ ℂ* has an infinite universal cover", vec![])
    };
    axioms.push(pt4);
    axioms.push(AxiomCheck {
        axiom: "PT-5".into(),
        verdict: Verdict::NotApplicable,
        evidence: "the complexification contains no time-reversing elements".into(),
        witnesses: vec![],
    });
    AxiomReport { group: format!("Galilean(d={d})"), samples, seed, axioms }
}
