use cubegrowth::exactalg::{convolve, RatMatrix};
use cubegrowth::{Polynomial, RationalFunction};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-5i64..=5, 0..5).prop_map(|c| Polynomial::from_ints(&c))
}

/// Rational functions regular at 0, so they have power series.
fn series_rf() -> impl Strategy<Value = RationalFunction> {
    (poly(), prop::collection::vec(-4i64..=4, 0..4), 1i64..=3).prop_map(|(n, mut d, c0)| {
        d.insert(0, c0);
        RationalFunction::new(n, Polynomial::from_ints(&d)).unwrap()
    })
}

fn any_rf() -> impl Strategy<Value = RationalFunction> {
    (poly(), poly()).prop_filter_map("zero denominator", |(n, d)| RationalFunction::new(n, d).ok())
}

proptest! {
    #[test]
    fn field_axioms(a in any_rf(), b in any_rf(), c in any_rf()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(n in poly(), d in poly(), k in prop::sample::select(vec![-3i64, -1, 2, 5])) {
        prop_assume!(!d.is_zero());
        let scale = Polynomial::from_ints(&[k, 1]);
        let a = RationalFunction::new(n.clone(), d.clone()).unwrap();
        let b = RationalFunction::new(&n * &scale, &d * &scale).unwrap();
        prop_assert_eq!(a.to_string(), b.to_string());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn series_of_product_is_convolution(a in series_rf(), b in series_rf()) {
        let n = 8;
        let prod = (&a * &b).series(n).unwrap();
        prop_assert_eq!(prod, convolve(&a.series(n).unwrap(), &b.series(n).unwrap(), n));
    }

    #[test]
    fn invert_t_is_an_involution(a in any_rf()) {
        prop_assert_eq!(a.invert_t().invert_t(), a);
    }

    #[test]
    fn solve_then_apply(entries in prop::collection::vec(series_rf(), 9), b in prop::collection::vec(any_rf(), 3)) {
        let m = RatMatrix::new(3, 3, entries).unwrap();
        if let Ok(x) = m.solve(&b) {
            prop_assert_eq!(m.apply(&x).unwrap(), b);
        }
    }

    #[test]
    fn distance_matrices_are_invertible(dist in prop::collection::vec(1usize..4, 3)) {
        // a metric on three points: t^{d} with d(i,i)=0 has determinant 1 at t=0
        let d = |i: usize, j: usize| if i == j { 0 } else { dist[i + j - 1] };
        let m = RatMatrix::from_fn(3, 3, |i, j| RationalFunction::monomial(1, d(i, j)));
        let e = vec![RationalFunction::one(), RationalFunction::zero(), RationalFunction::zero()];
        let x = m.solve(&e).unwrap();
        prop_assert_eq!(m.apply(&x).unwrap(), e);
    }
}
