//! Quadratic deformations of linear Poisson structures on R³.
//!
//! A quadratic structure is a pair `(K, F)` of a traceless matrix and a cubic
//! with `K̂F = 0`; its bivector is `π_F + (1/3) Î∧K̂`. It deforms the linear
//! structure of `(k, f)` when the two bivectors Schouten-commute, which is
//! equivalent to the quadratic identity
//! `k̂F = −(1/6)·X(12A + k̃)K·Xᵀ`.

mod catalog;
mod jordan;
mod orbits;

use crate::error::{Error, Result};
use crate::exactnum::{monomials_of_degree, solve_linear, Matrix, Polynomial, Rational, Scalar, SolutionSpace};
use crate::linclass::{bivector_of, pi_f, quadratic_form, LinearPair};
use crate::multivec::{euler_vf, linear_vf, schouten, MultiVectorField};

pub use catalog::{catalog, CatalogEntry, KSpec};
pub use jordan::{jordan_family_of, JordanFamily};
pub use orbits::{
    coset_rep_g10, enumerate_orbit_pairs, orbit_reps, p2_orbit_rep, t_of_v, t_of_v_f64, OrbitPair, OrbitRep,
    P2Point, DEFAULT_FLOAT_TOLERANCE,
};

/// Quadratic compatible pair `(K, F)`.
#[derive(Clone, PartialEq, Debug)]
pub struct QuadraticPair<S: Scalar> {
    k: Matrix<S>,
    f: Polynomial<S>,
}

impl<S: Scalar> QuadraticPair<S> {
    /// Validates `K` traceless 3×3, `F` a cubic (or zero) in three variables
    /// and `K̂F = 0`.
    pub fn new(k: Matrix<S>, f: Polynomial<S>) -> Result<Self> {
        require_traceless(&k)?;
        if f.nvars() != 3 {
            return Err(Error::DimensionMismatch { expected: 3, found: f.nvars() });
        }
        if !f.is_homogeneous(3) {
            return Err(Error::InvalidQuadraticPair(format!("F is not a homogeneous cubic: {f}")));
        }
        if !apply_linear(&k, &f).is_zero() {
            return Err(Error::InvalidQuadraticPair("K̂F ≠ 0".into()));
        }
        Ok(Self { k, f })
    }

    pub fn zero() -> Self {
        Self { k: Matrix::zeros(3, 3), f: Polynomial::zero(3) }
    }

    pub fn k(&self) -> &Matrix<S> {
        &self.k
    }

    pub fn f(&self) -> &Polynomial<S> {
        &self.f
    }
}

fn require_traceless<S: Scalar>(k: &Matrix<S>) -> Result<()> {
    if k.rows() != 3 || k.cols() != 3 {
        return Err(Error::NotSquare { rows: k.rows(), cols: k.cols() });
    }
    if !k.trace().is_zero() {
        return Err(Error::NotTraceless(k.trace().to_string()));
    }
    Ok(())
}

/// `K̂F = Σ_ij K_ij x_j ∂_i F`.
pub fn apply_linear<S: Scalar>(k: &Matrix<S>, f: &Polynomial<S>) -> Polynomial<S> {
    let n = f.nvars();
    let mut out = Polynomial::zero(n);
    for i in 0..n {
        let di = f.derivative(i);
        if di.is_zero() {
            continue;
        }
        out = out + &Polynomial::linear(k.row(i)) * &di;
    }
    out
}

/// `k̂F = Σ k_i ∂_i F`.
pub fn apply_constant<S: Scalar>(k: &[S], f: &Polynomial<S>) -> Polynomial<S> {
    let mut out = Polynomial::zero(f.nvars());
    for (i, ki) in k.iter().enumerate() {
        if !ki.is_zero() {
            out = out + f.derivative(i).scale(ki);
        }
    }
    out
}

/// Cross-product matrix: `k̃·v = k × v`.
pub fn ktilde<S: Scalar>(k: &[S]) -> Matrix<S> {
    assert_eq!(k.len(), 3, "k̃ is defined on R³");
    let z = S::zero;
    let c = |i: usize| k[i].clone();
    Matrix::from_rows(vec![
        vec![z(), -c(2), c(1)],
        vec![c(2), z(), -c(0)],
        vec![-c(1), c(0), z()],
    ])
}

/// `π_{K,F} = π_F + (1/3) Î∧K̂`.
pub fn pi_quad<S: Scalar>(qp: &QuadraticPair<S>) -> MultiVectorField<S> {
    let third = S::from_i64(3).try_inv().expect("3 ≠ 0");
    let kv = linear_vf(&qp.k).expect("3×3");
    let w = euler_vf(3).wedge(&kv).expect("same dimension");
    pi_f(&qp.f).add(&w.scale(&third))
}

fn lift_pair<S: Scalar>(lp: &LinearPair) -> (Vec<S>, Matrix<S>) {
    (lp.k().iter().map(S::from_rational).collect(), lp.a().map(S::from_rational))
}

/// Path 1: `[π_{k,f}, π_{K,F}] = 0` by direct Schouten bracket.
pub fn deform_check_bracket<S: Scalar>(lp: &LinearPair, qp: &QuadraticPair<S>) -> bool {
    let lin = bivector_of(lp).map_coeffs(S::from_rational);
    schouten(&lin, &pi_quad(qp)).expect("bivectors on R³").is_zero()
}

/// `−(1/6)·X(12A + k̃)K·Xᵀ`, the quadratic that `k̂F` must equal.
fn identity_rhs<S: Scalar>(k: &[S], a: &Matrix<S>, km: &Matrix<S>) -> Polynomial<S> {
    let m = &(&a.scale(&S::from_i64(12)) + &ktilde(k)) * km;
    let sixth = S::from_i64(-6).try_inv().expect("6 ≠ 0");
    quadratic_form(&m).scale(&sixth)
}

/// Path 2: `k̂F = −(1/6)·X(12A + k̃)K·Xᵀ` as a polynomial identity.
pub fn deform_check_identity<S: Scalar>(lp: &LinearPair, qp: &QuadraticPair<S>) -> bool {
    let (k, a) = lift_pair::<S>(lp);
    apply_constant(&k, &qp.f) == identity_rhs(&k, &a, &qp.k)
}

/// Whether `(K, F)` is a quadratic deformation of `(k, f)`; both paths are
/// evaluated and must agree.
pub fn deform_check<S: Scalar>(lp: &LinearPair, qp: &QuadraticPair<S>) -> Result<bool> {
    let direct = deform_check_bracket(lp, qp);
    let identity = deform_check_identity(lp, qp);
    if direct != identity {
        return Err(Error::PathMismatch(format!(
            "bracket says {direct}, identity says {identity} for K = {}, F = {}",
            qp.k, qp.f
        )));
    }
    Ok(direct)
}

/// Matrix of `p ↦ op(p)` from degree-`from` to degree-`to` homogeneous
/// polynomials in the graded-lex monomial bases.
fn operator_matrix<S: Scalar>(from: u32, to: u32, op: impl Fn(&Polynomial<S>) -> Polynomial<S>) -> Matrix<S> {
    let src = monomials_of_degree(3, from);
    let cols: Vec<Vec<S>> = src
        .iter()
        .map(|m| op(&Polynomial::monomial(3, m.exps().to_vec(), S::one())).coeff_vector(to))
        .collect();
    Matrix::from_fn(cols[0].len(), cols.len(), |i, j| cols[j][i].clone())
}

/// Cubics annihilated by `K̂`, as coefficient vectors in the graded-lex
/// basis of [`monomials_of_degree`]`(3, 3)`.
pub fn cubic_kernel<S: Scalar>(k: &Matrix<S>) -> Result<SolutionSpace<S>> {
    require_traceless(k)?;
    let m = operator_matrix(3, 3, |p| apply_linear(k, p));
    Ok(solve_linear(&m, &vec![S::zero(); m.rows()]))
}

/// All cubics `F` with `K̂F = 0` and `k̂F = −(1/6)·X(12A + k̃)K·Xᵀ`.
///
/// Every point of the result (the particular solution and each basis shift)
/// is re-checked by the direct bracket; a failure is a `PathMismatch`.
pub fn solve_f<S: Scalar>(lp: &LinearPair, k: &Matrix<S>) -> Result<SolutionSpace<S>> {
    require_traceless(k)?;
    let (kv, a) = lift_pair::<S>(lp);
    let kernel_rows = operator_matrix(3, 3, |p| apply_linear(k, p));
    let identity_rows = operator_matrix(3, 2, |p| apply_constant(&kv, p));
    let rhs = identity_rhs(&kv, &a, k).coeff_vector(2);
    let rows: Vec<Vec<S>> = kernel_rows.to_rows().into_iter().chain(identity_rows.to_rows()).collect();
    let b: Vec<S> = vec![S::zero(); kernel_rows.rows()].into_iter().chain(rhs).collect();
    let space = solve_linear(&Matrix::from_rows(rows), &b);
    if let Some(p) = &space.particular {
        let mut points = vec![p.clone()];
        for dir in &space.basis {
            points.push(p.iter().zip(dir).map(|(x, d)| x.clone() + d.clone()).collect());
        }
        for pt in points {
            let qp = QuadraticPair::new(k.clone(), cubic(&pt))?;
            if !deform_check_bracket(lp, &qp) {
                return Err(Error::PathMismatch(format!("solver output F = {} fails the bracket", qp.f)));
            }
        }
    }
    Ok(space)
}

/// Cubic with the given graded-lex coefficient vector.
pub fn cubic<S: Scalar>(coeffs: &[S]) -> Polynomial<S> {
    Polynomial::from_coeff_vector(3, 3, coeffs)
}

/// `T·(K, F) = (T K T⁻¹, det(T)·F∘T⁻¹)`.
pub fn transform_pair<S: Scalar>(t: &Matrix<S>, qp: &QuadraticPair<S>) -> Result<QuadraticPair<S>> {
    let inv = t.inverse()?;
    let det = t.det()?;
    let k = &(t * &qp.k) * &inv;
    let f = qp.f.pullback(&inv)?.scale(&det);
    QuadraticPair::new(k, f)
}

/// Affine image of a cubic solution space under `F ↦ c·F∘M`.
pub fn transform_space<S: Scalar>(space: &SolutionSpace<S>, m: &Matrix<S>, c: &S) -> Result<SolutionSpace<S>> {
    let map = |v: &Vec<S>| -> Result<Vec<S>> { Ok(cubic(v).pullback(m)?.scale(c).coeff_vector(3)) };
    Ok(SolutionSpace {
        ambient_dim: space.ambient_dim,
        particular: space.particular.as_ref().map(map).transpose()?,
        basis: space.basis.iter().map(map).collect::<Result<_>>()?,
    })
}

/// Cubics of a solution space: the particular solution and the basis.
pub fn space_polys<S: Scalar>(space: &SolutionSpace<S>) -> (Option<Polynomial<S>>, Vec<Polynomial<S>>) {
    (space.particular.as_ref().map(|p| cubic(p)), space.basis.iter().map(|b| cubic(b)).collect())
}

/// Lifts a rational matrix into any scalar field.
pub(crate) fn lift_matrix<S: Scalar>(m: &Matrix<Rational>) -> Matrix<S> {
    m.map(S::from_rational)
}
