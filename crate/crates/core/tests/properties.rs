use proptest::prelude::*;

use bihom_core::analysis::{killing_form, simplicity};
use bihom_core::catalog::{make_l1, make_l2, make_l3, make_sl2, torus};
use bihom_core::classify::classify3;
use bihom_core::exactlin::{char_poly, frac, invert, kernel, rank, rref, MatrixQ, Rational};
use bihom_core::twist::{induce_lie, roundtrip_check, yau_twist, TwistInput};
use bihom_core::check_all;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-10i64..=10, 1i64..=10).prop_map(|(n, d)| frac(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=10, 1i64..=10, any::<bool>()).prop_map(|(n, d, neg)| frac(if neg { -n } else { n }, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = MatrixQ> {
    proptest::collection::vec(-4i64..=4, rows * cols)
        .prop_map(move |v| MatrixQ::from_fn(rows, cols, |i, j| Rational::from_integer(v[i * cols + j].into())))
}

fn invertible3() -> impl Strategy<Value = MatrixQ> {
    matrix(3, 3).prop_filter("invertible", |m| invert(m).is_ok())
}

/// `exp(s ad e)` on sl2 in the basis (h, e, f).
fn exp_ad_e(s: &Rational) -> MatrixQ {
    let n = make_sl2().ad(1).scale(s);
    let n2 = n.matmul(&n);
    &(&MatrixQ::identity(3) + &n) + &n2.scale(&frac(1, 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_is_idempotent(m in matrix(3, 4)) {
        let (r, _) = rref(&m);
        prop_assert_eq!(rref(&r).0, r);
    }

    #[test]
    fn rank_plus_nullity(m in matrix(4, 3)) {
        prop_assert_eq!(rank(&m) + kernel(&m).dim(), 3);
        for v in kernel(&m).vectors() {
            prop_assert!(m.apply(v).iter().all(|x| *x == Rational::from_integer(0.into())));
        }
    }

    #[test]
    fn inverse_is_two_sided(m in invertible3()) {
        let inv = invert(&m).unwrap();
        prop_assert!(m.matmul(&inv).is_identity());
        prop_assert!(inv.matmul(&m).is_identity());
    }

    #[test]
    fn cayley_hamilton(m in matrix(4, 4)) {
        let p = char_poly(&m).unwrap();
        prop_assert!(p.eval_matrix(&m).is_zero());
        prop_assert_eq!(p.degree(), Some(4));
    }

    #[test]
    fn diagonal_twists_roundtrip(a in nonzero_rational(), b in nonzero_rational()) {
        let input = TwistInput::new(make_sl2(), torus(&a), torus(&b));
        prop_assert!(roundtrip_check(&input).unwrap());
        let twisted = yau_twist(&input).unwrap();
        prop_assert_eq!(&twisted, &make_l1(a, b).unwrap());
        let back = induce_lie(&twisted).unwrap();
        prop_assert_eq!(yau_twist(&back).unwrap(), twisted);
    }

    #[test]
    fn unipotent_twists_roundtrip(s in small_rational(), t in small_rational()) {
        let input = TwistInput::new(make_sl2(), exp_ad_e(&s), exp_ad_e(&t));
        prop_assert!(roundtrip_check(&input).unwrap());
        prop_assert!(check_all(&yau_twist(&input).unwrap()).all_pass());
    }

    #[test]
    fn l3_family_passes_axioms(a in small_rational()) {
        let l = make_l3(a);
        prop_assert!(check_all(&l).all_pass());
        prop_assert!(simplicity(&l).unwrap().simple);
    }

}

// Conjugation tests classify or spin three algebras per case and dominate the
// runtime, so they get fewer cases.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn axioms_and_simplicity_survive_conjugation(p in invertible3(), a in nonzero_rational(), b in nonzero_rational()) {
        for alg in [make_l1(a.clone(), b.clone()).unwrap(), make_l2(), make_l3(a.clone())] {
            let moved = alg.conjugate(&p).unwrap();
            prop_assert!(check_all(&moved).all_pass());
            prop_assert_eq!(simplicity(&moved).unwrap().enveloping_dim, 9);
        }
    }

    #[test]
    fn killing_form_is_symmetric(p in invertible3()) {
        let k = killing_form(&make_sl2().change_basis(&p).unwrap()).unwrap();
        prop_assert_eq!(k.transpose(), k.clone());
        let d = k.det().unwrap();
        prop_assert!(d < Rational::from_integer(0.into()));
    }

    #[test]
    fn classification_is_conjugation_invariant(p in invertible3(), a in nonzero_rational(), b in nonzero_rational()) {
        for alg in [make_l1(a.clone(), b.clone()).unwrap(), make_l2(), make_l3(a.clone())] {
            let base = classify3(&alg).unwrap();
            let moved = alg.conjugate(&p).unwrap();
            let label = classify3(&moved).unwrap();
            prop_assert!(label.same_class(&base), "{} vs {}", label, base);
            prop_assert!(moved.conjugate(&label.change_of_basis).unwrap().same_structure(&label.catalog_algebra()));
        }
    }
}
