use nonadiag::{Poly, Scalar};
use num_rational::BigRational;
use proptest::prelude::*;

fn poly(coeffs: &[i8]) -> Poly {
    Poly::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (
        prop::collection::vec(-6i8..=6, 0..4),
        prop::collection::vec(-6i8..=6, 1..3),
    )
        .prop_filter_map("zero denominator", |(num, den)| {
            let den = poly(&den);
            if den.is_zero() {
                None
            } else {
                Some(Scalar::from_polys(poly(&num), den).unwrap())
            }
        })
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("zero", |x| !x.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn addition_is_commutative_and_associative(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
    }

    #[test]
    fn multiplication_is_commutative_and_associative(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn multiplication_distributes(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn inverses(x in nonzero_scalar(), y in scalar()) {
        prop_assert_eq!(&x / &x, Scalar::one());
        prop_assert_eq!(&(&y / &x) * &x, y.clone());
        prop_assert_eq!(&(&y - &x) + &x, y);
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn results_stay_canonical(x in scalar(), y in nonzero_scalar()) {
        for r in [&x + &y, &x - &y, &x * &y, &x / &y, -&x] {
            prop_assert!(r.is_canonical(), "{} is not canonical", r);
        }
    }

    #[test]
    fn canonical_form_is_unique(x in scalar(), k in nonzero_scalar()) {
        // x = (x k) / k must reduce to the identical representation.
        let y = &(&x * &k) / &k;
        prop_assert_eq!(y.num(), x.num());
        prop_assert_eq!(y.den(), x.den());
    }

    #[test]
    fn evaluation_at_zero_is_a_homomorphism(x in scalar(), y in scalar()) {
        if let (Ok(a), Ok(b)) = (x.eval_at_zero(), y.eval_at_zero()) {
            prop_assert_eq!((&x + &y).eval_at_zero().unwrap(), &a + &b);
            prop_assert_eq!((&x * &y).eval_at_zero().unwrap(), &a * &b);
            prop_assert_eq!((&x - &y).eval_at_zero().unwrap(), &a - &b);
        }
    }

    #[test]
    fn degrees_are_bounded(x in scalar(), y in scalar()) {
        let (nx, dx) = x.degrees();
        let (ny, dy) = y.degrees();
        let (np, dp) = (&x * &y).degrees();
        prop_assert!(np <= nx + ny && dp <= dx + dy);
        let (ns, ds) = (&x + &y).degrees();
        prop_assert!(ns <= (nx + dy).max(ny + dx) && ds <= dx + dy);
    }
}
