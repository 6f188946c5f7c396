//! Properties of the multivector calculus.

mod common;

use proptest::prelude::*;
use rand::Rng;

use poisson_forge::exactnum::{int, Rational, Scalar};
use poisson_forge::linclass::{bivector_of, standard_pair};
use poisson_forge::multivec::{curl_d, is_poisson, phi, phi_inv, pi_from_structure_constants, schouten, DifferentialForm, MultiVectorField};
use poisson_forge::sample;

use common::{config, rng};

type C = Vec<Vec<Vec<Rational>>>;

/// Structure constants read off a linear bivector.
fn constants_of(pi: &MultiVectorField<Rational>) -> C {
    let n = pi.nvars();
    let mut c = vec![vec![vec![int(0); n]; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let p = pi.component(&[i, j]);
            for k in 0..n {
                let mut e = vec![0; n];
                e[k] = 1;
                c[i][j][k] = p.coeff_of(&e);
                c[j][i][k] = -p.coeff_of(&e);
            }
        }
    }
    c
}

fn random_constants(r: &mut impl Rng, n: usize) -> C {
    let mut c = vec![vec![vec![int(0); n]; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let v = if r.gen_bool(0.6) { int(0) } else { sample::small_int(r, 2) };
                c[i][j][k] = v.clone();
                c[j][i][k] = -v;
            }
        }
    }
    c
}

/// Σ_cyclic [[e_i, e_j], e_l] = 0, by a triple loop over the constants.
fn jacobi_holds(c: &C) -> bool {
    let n = c.len();
    let term = |i: usize, j: usize, l: usize, p: usize| -> Rational {
        (0..n).fold(int(0), |acc, m| acc + c[i][j][m].clone() * c[m][l][p].clone())
    };
    (0..n).all(|i| {
        (0..n).all(|j| (0..n).all(|l| (0..n).all(|p| (term(i, j, l, p) + term(j, l, i, p) + term(l, i, j, p)).is_zero())))
    })
}

fn sign(e: usize) -> Rational {
    if e % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn curl_squares_to_zero(seed in any::<u64>(), n in 3usize..=4, grade in 0usize..=4) {
        prop_assume!(grade <= n);
        let u = sample::multivector(&mut rng(seed), n, grade, 3, 4);
        prop_assert!(curl_d(&curl_d(&u)).is_zero());
    }

    #[test]
    fn graded_antisymmetry(seed in any::<u64>(), grades in prop::sample::select(vec![(1usize, 1usize), (1, 2), (2, 2)])) {
        let mut r = rng(seed);
        let (i, j) = grades;
        let u = sample::multivector(&mut r, 3, i, 2, 3);
        let v = sample::multivector(&mut r, 3, j, 2, 3);
        prop_assert_eq!(schouten(&u, &v).unwrap(), schouten(&v, &u).unwrap().scale(&sign(i * j)));
    }

    #[test]
    fn bivector_bracket_identity(seed in any::<u64>()) {
        let pi = sample::multivector(&mut rng(seed), 4, 2, 2, 3);
        let d = curl_d(&pi);
        let rhs = curl_d(&pi.wedge(&pi).unwrap()).sub(&d.wedge(&pi).unwrap().scale(&int(2)));
        prop_assert_eq!(schouten(&pi, &pi).unwrap(), rhs);
    }

    #[test]
    fn phi_round_trips(seed in any::<u64>(), n in 2usize..=4, grade in 0usize..=4) {
        prop_assume!(grade <= n);
        let mut r = rng(seed);
        let u = sample::multivector(&mut r, n, grade, 2, 4);
        prop_assert_eq!(phi_inv(&phi(&u).unwrap()).unwrap(), u);
        let parts = sample::multivector(&mut r, n, grade, 2, 4).components().map(|(i, p)| (i.clone(), p.clone())).collect();
        let w = DifferentialForm::from_components(n, grade, parts).unwrap();
        prop_assert_eq!(phi(&phi_inv(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn poisson_iff_jacobi(seed in any::<u64>(), n in 3usize..=4, lie in any::<bool>()) {
        let mut r = rng(seed);
        let c = if lie && n == 3 {
            let case = r.gen_range(1..=10u8);
            let t = sample::invertible(&mut r, 3, 2);
            constants_of(&bivector_of(&standard_pair(case, &int(1)).unwrap().transform(&t).unwrap()))
        } else {
            random_constants(&mut r, n)
        };
        let pi = pi_from_structure_constants(&c).unwrap();
        prop_assert_eq!(is_poisson(&pi).unwrap(), jacobi_holds(&c));
    }
}
