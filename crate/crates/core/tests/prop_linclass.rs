//! Properties of the linear classification.

mod common;

use proptest::prelude::*;

use poisson_forge::exactnum::{int, rational_sqrt, Matrix, Scalar};
use poisson_forge::linclass::{
    aut_member_closed_form, aut_member_definition, bivector_of, classify, decompose, pair_of, standard_pair,
};
use poisson_forge::sample;

use common::{config, rng};

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn labels_are_invariant(seed in any::<u64>(), case in 1u8..=10, a in 1i64..=3) {
        let std = standard_pair(case, &int(a)).unwrap();
        let moved = std.transform(&sample::invertible(&mut rng(seed), 3, 3)).unwrap();
        let label = classify(&moved).unwrap().label;
        prop_assert_eq!(label.case_id, case);
        prop_assert_eq!(label.a_squared, matches!(case, 8 | 9).then(|| int(a * a)));
    }

    #[test]
    fn witnesses_are_sound(seed in any::<u64>()) {
        let lp = sample::linear_pair(&mut rng(seed), 4);
        let c = classify(&lp).unwrap();
        prop_assert!(c.witness.verify(&lp, &c.label).unwrap());
        // With square scalings the transformation is rational and can be applied directly.
        let roots: Option<Vec<_>> = c.witness.d.iter().map(|d| if d.is_zero() { Some(int(1)) } else { rational_sqrt(d) }).collect();
        let a = match &c.label.a_squared {
            Some(a2) => rational_sqrt(a2),
            None => Some(int(1)),
        };
        if let (Some(roots), Some(a)) = (roots, a) {
            let inv: Vec<_> = roots.iter().map(|r| r.try_inv().unwrap()).collect();
            let p = &c.witness.r * &Matrix::diag(&inv);
            prop_assert_eq!(standard_pair(c.label.case_id, &a).unwrap().transform(&p).unwrap(), lp);
        }
    }

    #[test]
    fn automorphism_paths_agree(seed in any::<u64>(), case in 1u8..=10, constructed in any::<bool>()) {
        let mut r = rng(seed);
        let t = if constructed { sample::aut_constructed(&mut r, case) } else { sample::invertible(&mut r, 3, 2) };
        let def = aut_member_definition(&t, case).unwrap();
        prop_assert_eq!(def, aut_member_closed_form(&t, case).unwrap());
        if constructed {
            prop_assert!(def);
        }
    }

    #[test]
    fn decomposition_inverts_construction(seed in any::<u64>()) {
        let lp = sample::linear_pair(&mut rng(seed), 5);
        let pi = bivector_of(&lp);
        let d = decompose(&pi).unwrap();
        prop_assert_eq!(d.k.as_slice(), lp.k());
        prop_assert!(d.compatible);
        prop_assert_eq!(pair_of(&pi).unwrap(), lp);
    }
}
