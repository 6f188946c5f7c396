use super::matrix::Matrix;
use super::scalar::{Rational, Scalar};
use crate::error::{Error, Result};

/// Result of Lagrange's congruence reduction: `Rᵀ·A·R = diag(d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Congruence {
    pub r: Matrix<Rational>,
    pub d: Vec<Rational>,
}

impl Congruence {
    pub fn rank(&self) -> usize {
        self.d.iter().filter(|v| !Scalar::is_zero(*v)).count()
    }

    /// `(positives, negatives)`, Sylvester's inertia.
    pub fn inertia(&self) -> (usize, usize) {
        let pos = self.d.iter().filter(|v| v.signum() > 0).count();
        let neg = self.d.iter().filter(|v| v.signum() < 0).count();
        (pos, neg)
    }
}

/// Diagonalizes a symmetric rational matrix by simultaneous row and column
/// operations. `R` is a product of elementary matrices, hence invertible and
/// rational.
pub fn congruent_diagonalize(a: &Matrix<Rational>) -> Result<Congruence> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if !a.is_symmetric() {
        return Err(Error::InvalidLinearPair("matrix is not symmetric".into()));
    }
    let n = a.rows();
    let mut m = a.to_rows();
    let mut r = Matrix::<Rational>::identity(n).to_rows();

    // column op on R: col_dst += f · col_src
    fn axpy_col(r: &mut [Vec<Rational>], dst: usize, src: usize, f: &Rational) {
        for row in r.iter_mut() {
            let v = &row[src] * f;
            row[dst] += v;
        }
    }
    // congruence op on M: col_dst += f·col_src then row_dst += f·row_src
    fn axpy_sym(m: &mut [Vec<Rational>], dst: usize, src: usize, f: &Rational) {
        for row in m.iter_mut() {
            let v = &row[src] * f;
            row[dst] += v;
        }
        let src_row = m[src].clone();
        for (x, s) in m[dst].iter_mut().zip(src_row) {
            *x += s * f;
        }
    }

    for k in 0..n {
        if m[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                m.swap(k, j);
                for row in m.iter_mut() {
                    row.swap(k, j);
                }
                for row in r.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                // both diagonal entries vanish, so the new pivot is 2·m[k][j]
                let one = Rational::one();
                axpy_sym(&mut m, k, j, &one);
                axpy_col(&mut r, k, j, &one);
            } else {
                continue;
            }
        }
        let piv = m[k][k].clone();
        for j in k + 1..n {
            if m[k][j].is_zero() {
                continue;
            }
            let f = -(&m[k][j] / &piv);
            axpy_sym(&mut m, j, k, &f);
            axpy_col(&mut r, j, k, &f);
        }
    }
    let d = (0..n).map(|i| m[i][i].clone()).collect();
    Ok(Congruence { r: Matrix::from_rows(r), d })
}

/// Same reduction, pivoting through the coordinates in `order`.
pub fn congruent_diagonalize_ordered(a: &Matrix<Rational>, order: &[usize]) -> Result<Congruence> {
    let n = a.rows();
    if order.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: order.len() });
    }
    let p = Matrix::from_fn(n, n, |i, j| if order[j] == i { Rational::one() } else { Rational::zero() });
    let permuted = &(&p.transpose() * a) * &p;
    let inner = congruent_diagonalize(&permuted)?;
    Ok(Congruence { r: &p * &inner.r, d: inner.d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::scalar::int;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    fn check(a: &Matrix<Rational>, c: &Congruence) {
        let lhs = &(&c.r.transpose() * a) * &c.r;
        assert_eq!(lhs, Matrix::diag(&c.d));
        assert!(!Scalar::is_zero(&c.r.det().unwrap()));
    }

    #[test]
    fn identity_is_fixed() {
        let a = Matrix::<Rational>::identity(3);
        let c = congruent_diagonalize(&a).unwrap();
        assert_eq!(c.r, Matrix::identity(3));
        assert_eq!(c.d, vec![int(1), int(1), int(1)]);
    }

    #[test]
    fn hyperbolic_plane() {
        let a = m(&[&[0, 1], &[1, 0]]);
        let c = congruent_diagonalize(&a).unwrap();
        check(&a, &c);
        assert_eq!(c.inertia(), (1, 1));
    }

    #[test]
    fn rank_one() {
        let a = m(&[&[4, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        let c = congruent_diagonalize(&a).unwrap();
        assert_eq!(c.r, Matrix::identity(3));
        assert_eq!(c.d, vec![int(4), int(0), int(0)]);
        assert_eq!(c.rank(), 1);
    }

    #[test]
    fn rejects_asymmetric() {
        assert!(congruent_diagonalize(&m(&[&[1, 2], &[3, 4]])).is_err());
    }

    #[test]
    fn ordered_variant_is_sound() {
        let a = m(&[&[0, 1, 2], &[1, 0, 3], &[2, 3, 0]]);
        for order in [[0, 1, 2], [2, 0, 1], [1, 2, 0]] {
            let c = congruent_diagonalize_ordered(&a, &order).unwrap();
            check(&a, &c);
            assert_eq!(c.inertia(), (1, 2));
        }
    }
}
