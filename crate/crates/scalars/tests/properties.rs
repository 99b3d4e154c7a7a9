use proptest::prelude::*;
use tvk_scalars::{ratio, zeta, BigRational, Cyclotomic};

const CONDUCTORS: [u64; 12] = [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 20];

fn value() -> impl Strategy<Value = Cyclotomic> {
    (prop::sample::select(CONDUCTORS.to_vec()), prop::collection::vec((0i64..20, -6i64..7, 1i64..4), 0..5)).prop_map(
        |(n, terms)| {
            let t: Vec<(i64, BigRational)> =
                terms.into_iter().map(|(e, p, q)| (e, BigRational::new(p.into(), q.into()))).collect();
            Cyclotomic::from_terms(n, &t)
        },
    )
}

/// Floating evaluation straight from a term list, independent of the reduction code.
fn float_terms(n: u64, terms: &[(i64, i64)]) -> (f64, f64) {
    let mut re = 0.0;
    let mut im = 0.0;
    for &(e, c) in terms {
        let a = 2.0 * std::f64::consts::PI * e as f64 / n as f64;
        re += c as f64 * a.cos();
        im += c as f64 * a.sin();
    }
    (re, im)
}

fn close(a: (f64, f64), b: (f64, f64), tol: f64) -> bool {
    (a.0 - b.0).abs() < tol && (a.1 - b.1).abs() < tol
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in value(), b in value(), c in value()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, Cyclotomic::zero());
    }

    #[test]
    fn inverses(a in value()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * &a.inv().unwrap(), Cyclotomic::one());
    }

    #[test]
    fn conjugation_is_an_involutive_homomorphism(a in value(), b in value(), p in -9i64..9, q in 1i64..9) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
        prop_assert_eq!((&a + &b).conj(), a.conj() + b.conj());
        prop_assert_eq!(ratio(p, q).conj(), ratio(p, q));
    }

    #[test]
    fn approx_is_multiplicative(a in value(), b in value()) {
        let (x, y) = (a.approx(20).to_f64(), b.approx(20).to_f64());
        let prod = (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
        let tol = 1e-9 * (1.0 + prod.0.abs() + prod.1.abs());
        prop_assert!(close((&a * &b).approx(20).to_f64(), prod, tol));
    }

    #[test]
    fn reduction_agrees_with_floating_evaluation(
        n in prop::sample::select(CONDUCTORS.to_vec()),
        terms in prop::collection::vec((0i64..40, -5i64..6), 0..6),
    ) {
        let exact = Cyclotomic::from_terms(
            n,
            &terms.iter().map(|&(e, c)| (e, BigRational::from_integer(c.into()))).collect::<Vec<_>>(),
        );
        prop_assert!(close(exact.approx(15).to_f64(), float_terms(n, &terms), 1e-9));
    }

    #[test]
    fn canonical_text_round_trips(a in value()) {
        let s = a.to_string();
        let b: Cyclotomic = s.parse().unwrap();
        prop_assert_eq!(b.to_string(), s);
        prop_assert_eq!(b, a);
    }

    #[test]
    fn conductor_is_minimal(a in value(), k in 1u64..4) {
        // lifting to a bigger field and coming back never changes the value
        let n = a.conductor() * k;
        let lifted = &a * &zeta(n, 0);
        prop_assert_eq!(lifted.conductor(), a.conductor());
        prop_assert!(a.conductor() % 4 != 2);
    }
}
