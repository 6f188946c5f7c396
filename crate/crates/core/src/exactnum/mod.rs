//! Exact scalars, sparse polynomials and exact linear algebra.

mod congruence;
mod expr;
mod ext;
mod linsolve;
mod matrix;
mod poly;
mod scalar;

pub use congruence::{congruent_diagonalize, congruent_diagonalize_ordered, Congruence};
pub use expr::{parse_poly_expr, parse_scalar_expr};
pub use ext::ExtScalar;
pub use linsolve::{rref_rows, solve_linear, SolutionSpace};
pub use matrix::Matrix;
pub use poly::{monomials_of_degree, var_name, Monomial, Polynomial};
pub use scalar::{format_rational, int, parse_rational, rat, rational_sqrt, Rational, Scalar};

/// Rational polynomial, the common instantiation.
pub type QPoly = Polynomial<Rational>;
/// Rational matrix.
pub type QMatrix = Matrix<Rational>;

/// Inverse of a nonzero element of Q(√2, √3).
pub fn ext_invert(a: &ExtScalar) -> crate::Result<ExtScalar> {
    a.invert()
}

/// `p ∘ T`, i.e. `X ↦ p(T·X)`.
pub fn poly_pullback<S: Scalar>(p: &Polynomial<S>, t: &Matrix<S>) -> crate::Result<Polynomial<S>> {
    p.pullback(t)
}
