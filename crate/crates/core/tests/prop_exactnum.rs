//! Properties of the exact kernels.

mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;

use poisson_forge::exactnum::{
    congruent_diagonalize, congruent_diagonalize_ordered, ext_invert, int, poly_pullback, solve_linear, ExtScalar, Matrix,
    Scalar,
};
use poisson_forge::sample;

use common::{config, ext, rng};

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn ext_multiplication_is_associative(a in ext(6), b in ext(6), c in ext(6)) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a * (b * c));
    }

    #[test]
    fn ext_inverse(a in ext(6)) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(a.clone() * ext_invert(&a).unwrap(), ExtScalar::one());
    }

    #[test]
    fn pullback_composes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = sample::polynomial(&mut r, 3, 3, 4);
        let t = sample::matrix(&mut r, 3, 3);
        let u = sample::matrix(&mut r, 3, 3);
        let twice = poly_pullback(&poly_pullback(&p, &t).unwrap(), &u).unwrap();
        prop_assert_eq!(twice, poly_pullback(&p, &(&t * &u)).unwrap());
    }

    #[test]
    fn congruence_diagonalizes_with_invariant_inertia(seed in any::<u64>(), n in 1usize..5) {
        let mut r = rng(seed);
        let a = sample::symmetric(&mut r, n, 4);
        let c = congruent_diagonalize(&a).unwrap();
        let d = &(&c.r.transpose() * &a) * &c.r;
        prop_assert!(d.is_diagonal());
        prop_assert_eq!(&d, &Matrix::diag(&c.d));
        prop_assert!(c.r.det().unwrap() != int(0));
        let mut order: Vec<usize> = (0..n).collect();
        for _ in 0..20 {
            order.shuffle(&mut r);
            let other = congruent_diagonalize_ordered(&a, &order).unwrap();
            prop_assert_eq!(other.inertia(), c.inertia());
            let d = &(&other.r.transpose() * &a) * &other.r;
            prop_assert_eq!(d, Matrix::diag(&other.d));
        }
    }

    #[test]
    fn linear_solutions_check_out(seed in any::<u64>(), rows in 1usize..6, cols in 1usize..6, consistent in any::<bool>()) {
        let mut r = rng(seed);
        let m = Matrix::from_fn(rows, cols, |_, _| sample::small_int(&mut r, 2));
        let b = if consistent { m.mul_vec(&sample::vector(&mut r, cols, 3)) } else { sample::vector(&mut r, rows, 3) };
        let s = solve_linear(&m, &b);
        if consistent {
            prop_assert!(!s.is_empty());
        }
        if let Some(p) = &s.particular {
            prop_assert_eq!(m.mul_vec(p), b);
        }
        for v in &s.basis {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        if !s.is_empty() {
            prop_assert_eq!(s.basis.len() + m.rank(), cols);
        }
    }
}
