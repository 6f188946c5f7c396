//! Seeded random objects for property checks and the verification report.
//!
//! Every generator draws from a [`ChaCha8Rng`]; the seed comes from
//! `POISSON_FORGE_SEED` when set, so runs are reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactnum::{int, rat, Matrix, Polynomial, QMatrix, QPoly, Rational, Scalar};
use crate::linclass::LinearPair;
use crate::multivec::MultiVectorField;

pub const SEED_ENV: &str = "POISSON_FORGE_SEED";

/// RNG seeded from the environment, falling back to `default_seed`.
pub fn rng(default_seed: u64) -> ChaCha8Rng {
    let seed = std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(default_seed);
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_int(rng: &mut impl Rng, bound: i64) -> Rational {
    int(rng.gen_range(-bound..=bound))
}

/// Numerator in `[-bound, bound]`, denominator in `1..=3`.
pub fn small_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

pub fn vector(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<Rational> {
    (0..n).map(|_| small_rational(rng, bound)).collect()
}

pub fn matrix(rng: &mut impl Rng, n: usize, bound: i64) -> QMatrix {
    Matrix::from_fn(n, n, |_, _| small_rational(rng, bound))
}

pub fn invertible(rng: &mut impl Rng, n: usize, bound: i64) -> QMatrix {
    loop {
        let m = matrix(rng, n, bound);
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

pub fn symmetric(rng: &mut impl Rng, n: usize, bound: i64) -> QMatrix {
    let m = matrix(rng, n, bound);
    Matrix::from_fn(n, n, |i, j| if i <= j { m.get(i, j).clone() } else { m.get(j, i).clone() })
}

pub fn skew(rng: &mut impl Rng, n: usize, bound: i64) -> QMatrix {
    let m = matrix(rng, n, bound);
    Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => m.get(i, j).clone(),
        std::cmp::Ordering::Equal => int(0),
        std::cmp::Ordering::Greater => -m.get(j, i).clone(),
    })
}

pub fn traceless(rng: &mut impl Rng, bound: i64) -> QMatrix {
    let mut m = matrix(rng, 3, bound);
    let t = m.trace();
    let v = m.get(2, 2).clone() - t;
    m.set(2, 2, v);
    m
}

/// Homogeneous polynomial with each monomial present with probability
/// `density`.
pub fn homogeneous(rng: &mut impl Rng, nvars: usize, degree: u32, bound: i64, density: f64) -> QPoly {
    let coeffs: Vec<Rational> = crate::exactnum::monomials_of_degree(nvars, degree)
        .iter()
        .map(|_| if rng.gen_bool(density) { small_rational(rng, bound) } else { int(0) })
        .collect();
    Polynomial::from_coeff_vector(nvars, degree, &coeffs)
}

/// Polynomial with terms of every degree up to `max_degree`.
pub fn polynomial(rng: &mut impl Rng, nvars: usize, max_degree: u32, bound: i64) -> QPoly {
    (0..=max_degree).fold(Polynomial::zero(nvars), |acc, d| acc + homogeneous(rng, nvars, d, bound, 0.4))
}

/// Valid pair: `k` (zero one time in three) and `A` with `A k = 0`.
pub fn linear_pair(rng: &mut impl Rng, bound: i64) -> LinearPair {
    if rng.gen_range(0..3) == 0 {
        return LinearPair::new(vec![int(0); 3], symmetric(rng, 3, bound)).expect("k = 0");
    }
    let k = loop {
        let k = vector(rng, 3, bound);
        if k.iter().any(|v| !v.is_zero()) {
            break k;
        }
    };
    // A = M⁻ᵀ diag(B, 0) M⁻¹ with M e₃ = k
    let piv = (0..3).find(|&i| !k[i].is_zero()).expect("nonzero k");
    let others: Vec<usize> = (0..3).filter(|&i| i != piv).collect();
    let m = Matrix::from_fn(3, 3, |i, j| if j == 2 { k[i].clone() } else { int((i == others[j]) as i64) });
    let b = symmetric(rng, 2, bound);
    let block = Matrix::from_fn(3, 3, |i, j| if i < 2 && j < 2 { b.get(i, j).clone() } else { int(0) });
    let inv = m.inverse().expect("completed basis");
    let a = &(&inv.transpose() * &block) * &inv;
    LinearPair::new(k, a).expect("A k = 0 by construction")
}

/// `(cos, sin)` on the rational circle from a Pythagorean triple.
pub fn rational_angle(rng: &mut impl Rng) -> (Rational, Rational) {
    let m: i64 = rng.gen_range(1..=9);
    let n: i64 = rng.gen_range(0..=9);
    let h = m * m + n * n;
    let (c, s) = (rat(m * m - n * n, h), rat(2 * m * n, h));
    match rng.gen_range(0..4) {
        0 => (c, s),
        1 => (-s, c),
        2 => (-c, -s),
        _ => (s, -c),
    }
}

/// Cayley transform `(I + S)(I − S)⁻¹`.
pub fn cayley(s: &QMatrix) -> Option<QMatrix> {
    let i = Matrix::identity(s.rows());
    let inv = (&i - s).inverse().ok()?;
    Some(&(&i + s) * &inv)
}

/// Random element of SO(3).
pub fn rotation(rng: &mut impl Rng, bound: i64) -> QMatrix {
    cayley(&skew(rng, 3, bound)).expect("I − S is invertible for skew S")
}

/// Random element of SO(2,1), the η-isometries with η = diag(1,1,−1).
pub fn lorentz(rng: &mut impl Rng, bound: i64) -> QMatrix {
    let eta = Matrix::diag(&[int(1), int(1), int(-1)]);
    loop {
        let s = &eta * &skew(rng, 3, bound);
        if let Some(q) = cayley(&s) {
            return q;
        }
    }
}

pub fn nonzero(rng: &mut impl Rng, bound: i64) -> Rational {
    loop {
        let v = small_rational(rng, bound);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Rotation of the plane by a random rational angle, embedded in the upper
/// 2×2 block.
fn plane_rotation(rng: &mut impl Rng) -> QMatrix {
    let (c, s) = rational_angle(rng);
    Matrix::from_rows(vec![vec![c.clone(), -s.clone()], vec![s, c]])
}

/// Assembles `[[B, 0], [ξ, t]]` from a 2×2 block `B`, a bottom row `ξ` and
/// a corner `t`.
fn block_lower(b: &QMatrix, xi: [Rational; 2], t: Rational) -> QMatrix {
    Matrix::from_fn(3, 3, |i, j| match (i, j) {
        (2, 2) => t.clone(),
        (2, j) => xi[j].clone(),
        (i, 2) if i < 2 => int(0),
        (i, j) => b.get(i, j).clone(),
    })
}

fn row2(rng: &mut impl Rng) -> [Rational; 2] {
    [small_rational(rng, 4), small_rational(rng, 4)]
}

/// A member of the automorphism group of standard form `case_id`, built
/// from the group's parametrization rather than from the defining equation.
pub fn aut_constructed(rng: &mut impl Rng, case_id: u8) -> QMatrix {
    match case_id {
        1 => invertible(rng, 3, 4),
        2 => rotation(rng, 3),
        3 => lorentz(rng, 3),
        4 => {
            // conformal B = r·(rotation or reflection), corner det(B)/r²
            let r = nonzero(rng, 3);
            let mut b = plane_rotation(rng).scale(&r);
            if rng.gen_bool(0.5) {
                b = &b * &Matrix::diag(&[int(1), int(-1)]);
            }
            let t = b.det().expect("2×2") / (&r * &r);
            block_lower(&b, row2(rng), t)
        }
        5 => {
            let lam = if rng.gen_bool(0.5) { int(1) } else { int(-1) };
            let (p, q) = loop {
                let (p, q) = (small_rational(rng, 4), small_rational(rng, 4));
                if &p * &p != &q * &q {
                    break (p, q);
                }
            };
            let b = Matrix::from_rows(vec![vec![&lam * &p, q.clone()], vec![&lam * &q, p]]);
            block_lower(&b, row2(rng), lam)
        }
        6 => {
            let lower = invertible(rng, 2, 4);
            let a = lower.det().expect("2×2");
            let (x1, x2) = (small_rational(rng, 4), small_rational(rng, 4));
            Matrix::from_fn(3, 3, |i, j| match (i, j) {
                (0, 0) => a.clone(),
                (0, _) => int(0),
                (1, 0) => x1.clone(),
                (2, 0) => x2.clone(),
                (i, j) => lower.get(i - 1, j - 1).clone(),
            })
        }
        7 => block_lower(&invertible(rng, 2, 4), row2(rng), int(1)),
        8 => {
            let b = plane_rotation(rng).scale(&nonzero(rng, 3));
            block_lower(&b, row2(rng), int(1))
        }
        9 => {
            let (p, q) = loop {
                let (p, q) = (small_rational(rng, 4), small_rational(rng, 4));
                if &p * &p != &q * &q {
                    break (p, q);
                }
            };
            let b = Matrix::from_rows(vec![vec![p.clone(), q.clone()], vec![q, p]]);
            block_lower(&b, row2(rng), int(1))
        }
        10 => {
            let a = nonzero(rng, 4);
            let b = Matrix::from_rows(vec![vec![a.clone(), int(0)], vec![small_rational(rng, 4), a]]);
            block_lower(&b, row2(rng), int(1))
        }
        c => panic!("no automorphism group for case {c}"),
    }
}

/// Multivector field on R^n with random polynomial components of degree at
/// most `max_degree`.
pub fn multivector(rng: &mut impl Rng, n: usize, grade: usize, max_degree: u32, bound: i64) -> MultiVectorField<Rational> {
    fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            subsets(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut idx = Vec::new();
    subsets(n, grade, 0, &mut Vec::new(), &mut idx);
    idx.iter().fold(MultiVectorField::zero(n, grade), |acc, ix| {
        acc.add(&MultiVectorField::term(n, ix, polynomial(rng, n, max_degree, bound)))
    })
}
