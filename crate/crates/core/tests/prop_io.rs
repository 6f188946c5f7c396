//! Every JSON encoding re-parses to an equal value.

mod common;

use proptest::prelude::*;

use poisson_forge::exactnum::{int, ExtScalar, Polynomial, Rational, Scalar};
use poisson_forge::io::{
    linear_pair_from_json, linear_pair_to_json, mvf_from_json, mvf_to_json, poly_from_json, poly_to_json,
    quadratic_pair_from_json, quadratic_pair_to_json, space_from_json, space_to_json,
};
use poisson_forge::multivec::MultiVectorField;
use poisson_forge::quaddef::{cubic_kernel, QuadraticPair};
use poisson_forge::sample;

use common::{config, ext, rng};

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn pairs_round_trip(seed in any::<u64>()) {
        let lp = sample::linear_pair(&mut rng(seed), 9);
        let text = linear_pair_to_json(&lp).to_string();
        prop_assert_eq!(linear_pair_from_json(&serde_json::from_str(&text).unwrap()).unwrap(), lp);
    }

    #[test]
    fn polynomials_round_trip(seed in any::<u64>(), c in ext(5)) {
        let p = sample::polynomial(&mut rng(seed), 3, 4, 9);
        prop_assert_eq!(poly_from_json::<Rational>(&poly_to_json(&p)).unwrap(), p.clone());
        let e: Polynomial<ExtScalar> = p.map_coeffs(ExtScalar::from_rational).scale(&c);
        prop_assert_eq!(poly_from_json::<ExtScalar>(&poly_to_json(&e)).unwrap(), e);
    }

    #[test]
    fn fields_round_trip(seed in any::<u64>(), n in 1usize..=4, grade in 0usize..=4) {
        prop_assume!(grade <= n);
        let u = sample::multivector(&mut rng(seed), n, grade, 3, 7);
        let back: MultiVectorField<Rational> = mvf_from_json(&mvf_to_json(&u)).unwrap();
        prop_assert_eq!(back, u);
    }

    #[test]
    fn quadratic_pairs_and_spaces_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = sample::traceless(&mut r, 3);
        let kernel = cubic_kernel(&k).unwrap();
        let f = poisson_forge::quaddef::cubic(kernel.basis.first().unwrap_or(&vec![int(0); 10]));
        let qp = QuadraticPair::new(k, f).unwrap();
        prop_assert_eq!(quadratic_pair_from_json::<Rational>(&quadratic_pair_to_json(&qp)).unwrap(), qp);
        let back = space_from_json::<Rational>(&space_to_json(&kernel)).unwrap();
        prop_assert!(back.same_space(&kernel));
    }
}
