mod common;

use bourbaki_core::bourbaki::{
    analyze, random_coordinate_change, validate_curve, AnalysisConfig, Curve, EpsilonChoice,
};
use bourbaki_core::error::Error;
use bourbaki_core::groebner::{
    groebner_basis, ideal_equal, minimalize_generators, module_equal, polynomial_syzygies,
    saturation, standard_monomial_count, IdealBasis,
};
use bourbaki_core::oracle::{graded_dim_bruteforce, syzygy_verify};
use bourbaki_core::polyring::{
    monomials_of_degree, Field, Monomial, PolyRing, Polynomial, Vars, DEFAULT_PRIME,
};
use common::*;
use proptest::prelude::*;

const FP: Field = Field::Prime(DEFAULT_PRIME);

fn sparse(d: u32, terms: &[(usize, i64)]) -> Polynomial {
    let ring = PolyRing::projective(FP);
    let monos = monomials_of_degree(Vars::XYZ, d);
    Polynomial::from_terms(
        ring,
        terms
            .iter()
            .map(|&(i, c)| (monos[i % monos.len()], FP.from_i64(c))),
    )
}

fn lines(ls: &[[i64; 3]]) -> Polynomial {
    let ring = PolyRing::projective(FP);
    ls.iter().fold(Polynomial::one(ring), |acc, l| {
        let f = Polynomial::from_terms(
            ring,
            (0..3).map(|v| (Monomial::var(v, 1), FP.from_i64(l[v]))),
        );
        acc.checked_mul(&f).unwrap()
    })
}

fn arb_polynomial() -> impl Strategy<Value = Polynomial> {
    let sparse_curve = (
        2u32..=5,
        prop::collection::vec((0usize..21, -9i64..=9), 2..7),
    )
        .prop_map(|(d, terms)| sparse(d, &terms));
    let arrangement =
        prop::collection::vec(prop::array::uniform3(-3i64..=3), 2..=5).prop_map(|ls| lines(&ls));
    prop_oneof![3 => sparse_curve, 1 => arrangement]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, max_global_rejects: 100_000, ..ProptestConfig::default() })]

    #[test]
    fn random_curves_are_consistent(f in arb_polynomial()) {
        let c = match validate_curve(&f) {
            Ok(c) => c,
            Err(_) => return Err(TestCaseError::reject("not a reduced curve")),
        };
        prop_assert!(c.euler_identity_holds());
        let r = match analyze(&c, &AnalysisConfig::default()) {
            Err(Error::InconsistentClassification(m)) => return Err(TestCaseError::fail(m)),
            other => other.unwrap(),
        };
        for s in &r.syzygies.minimal_generators {
            prop_assert!(syzygy_verify(s, &c.partials()));
        }
        prop_assert!(r.e() <= r.d());
        prop_assert!(r.bour_hilbert >= r.ell() as u64);
        if r.tau.complete {
            prop_assert_eq!(r.bour_hilbert as i64, r.bour_formula);
        }
        prop_assert_eq!(r.bour_local_sum() + r.residual(), r.bour_hilbert);
        prop_assert!(r.flags.all_ok(), "{:?}", r.flags);
        let gb = groebner_basis(&r.jacobian);
        for n in 0..=8 {
            prop_assert_eq!(standard_monomial_count(&gb, n), graded_dim_bruteforce(&r.jacobian, n).unwrap());
        }
    }

    #[test]
    fn minimal_generators_ignore_input_order(f in arb_polynomial(), rot in 0usize..16) {
        let Ok(c) = validate_curve(&f) else { return Err(TestCaseError::reject("not a reduced curve")) };
        let syz = polynomial_syzygies(&c.partials()).unwrap();
        let mut shuffled = syz.clone();
        shuffled.reverse();
        let n = shuffled.len();
        shuffled.rotate_left(rot % n.max(1));
        let a = minimalize_generators(&syz).unwrap();
        let b = minimalize_generators(&shuffled).unwrap();
        let degrees = |v: &[bourbaki_core::groebner::ModuleVector]| {
            let mut d: Vec<_> = v.iter().map(|s| s.degree()).collect();
            d.sort();
            d
        };
        prop_assert_eq!(degrees(&a), degrees(&b));
        prop_assert!(module_equal(&a, &b).unwrap());
    }
}

fn golden() -> Vec<Curve> {
    vec![
        nodal_cubic(),
        quartic_two(),
        binomial(2, 5),
        trinomial(2),
        curve(F4),
        free_family(2),
    ]
}

#[test]
fn coordinate_changes_preserve_invariants() {
    for c in golden() {
        let base = analyze(&c, &AnalysisConfig::default()).unwrap();
        for seed in 0..5 {
            let (moved, change) = random_coordinate_change(&c, seed).unwrap();
            let r = analyze(&moved, &AnalysisConfig::default()).unwrap();
            assert_eq!(
                r.bour_hilbert,
                base.bour_hilbert,
                "{} seed {seed}",
                c.polynomial()
            );
            assert_eq!(r.bour_formula, base.bour_formula);
            assert_eq!(r.syzygies.degrees, base.syzygies.degrees);
            assert_eq!(r.tau.global, base.tau.global);
            let mut expected: Vec<_> = base
                .tau
                .table
                .iter()
                .map(|(p, t)| (change.apply_point(p), *t))
                .collect();
            expected.sort();
            let mut got = r.tau.table.clone();
            got.sort();
            assert_eq!(got, expected);
            assert!(r.flags.all_ok());
        }
    }
}

#[test]
fn every_minimal_epsilon_gives_the_same_degree() {
    for c in golden() {
        let base = analyze(&c, &AnalysisConfig::default()).unwrap();
        let k = base
            .syzygies
            .degrees
            .iter()
            .filter(|&&d| d == base.e())
            .count();
        for i in 0..k {
            let r = analyze(&c, &config(EpsilonChoice::Index(i))).unwrap();
            assert_eq!(r.bour_hilbert, base.bour_hilbert);
            assert_eq!(r.classification, base.classification);
        }
    }
}

#[test]
fn saturation_is_idempotent() {
    let m = ideal(&["x", "y", "z"]);
    for c in golden() {
        let r = analyze(&c, &AnalysisConfig::default()).unwrap();
        for i in [&r.jacobian, &r.bourbaki.ideal] {
            let (once, _) = saturation(i, &m).unwrap();
            let (twice, _) = saturation(&once, &m).unwrap();
            assert!(ideal_equal(&once, &twice).unwrap());
            let gb = groebner_basis(&once);
            for n in 0..=12 {
                assert_eq!(
                    standard_monomial_count(&gb, n),
                    graded_dim_bruteforce(&once, n).unwrap()
                );
            }
        }
    }
}

#[test]
fn saturation_removes_embedded_origin() {
    let i = ideal(&["x^2", "x*y", "x*z"]);
    let (s, _) = saturation(&i, &ideal(&["x", "y", "z"])).unwrap();
    assert!(ideal_equal(&s, &ideal(&["x"])).unwrap());
    let j: IdealBasis = ideal(&["x*y", "x*z"]);
    assert!(ideal_equal(
        &saturation(&j, &ideal(&["y", "z"])).unwrap().0,
        &ideal(&["x"])
    )
    .unwrap());
}
