use super::MultiVectorField;
use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Polynomial, Scalar};

/// `Â = Σ_{ij} a_ij x_j ∂_i`.
pub fn linear_vf<S: Scalar>(a: &Matrix<S>) -> Result<MultiVectorField<S>> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let mut out = MultiVectorField::zero(n, 1);
    for i in 0..n {
        out = out.add(&MultiVectorField::term(n, &[i], Polynomial::linear(a.row(i))));
    }
    Ok(out)
}

/// Constant field `k̂ = Σ k_i ∂_i`.
pub fn const_vf<S: Scalar>(k: &[S]) -> MultiVectorField<S> {
    let n = k.len();
    let mut out = MultiVectorField::zero(n, 1);
    for (i, ki) in k.iter().enumerate() {
        out = out.add(&MultiVectorField::term(n, &[i], Polynomial::constant(n, ki.clone())));
    }
    out
}

/// Euler field `Σ x_i ∂_i`.
pub fn euler_vf<S: Scalar>(n: usize) -> MultiVectorField<S> {
    linear_vf(&Matrix::identity(n)).expect("identity is square")
}

/// Linear bivector `Σ_{i<j} (Σ_k c[i][j][k] x_k) ∂_i∧∂_j` of a Lie algebra
/// with structure constants `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
pub fn pi_from_structure_constants<S: Scalar>(c: &[Vec<Vec<S>>]) -> Result<MultiVectorField<S>> {
    let n = c.len();
    for (i, ci) in c.iter().enumerate() {
        if ci.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: ci.len() });
        }
        for (j, cij) in ci.iter().enumerate() {
            if cij.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: cij.len() });
            }
            for k in 0..n {
                if !(cij[k].clone() + c[j][i][k].clone()).is_zero() {
                    return Err(Error::NotAntisymmetric { i: i + 1, j: j + 1, k: k + 1 });
                }
            }
        }
    }
    let mut out = MultiVectorField::zero(n, 2);
    for i in 0..n {
        for j in i + 1..n {
            out = out.add(&MultiVectorField::term(n, &[i, j], Polynomial::linear(&c[i][j])));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, Rational};
    use crate::multivec::is_poisson;

    fn so3() -> Vec<Vec<Vec<Rational>>> {
        // [e1,e2] = e3 and cyclic
        let mut c = vec![vec![vec![int(0); 3]; 3]; 3];
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            c[i][j][k] = int(1);
            c[j][i][k] = int(-1);
        }
        c
    }

    #[test]
    fn lie_poisson_of_so3() {
        let pi = pi_from_structure_constants(&so3()).unwrap();
        assert_eq!(pi.component(&[0, 1]), Polynomial::var(3, 2));
        assert_eq!(pi.component(&[0, 2]), -Polynomial::var(3, 1));
        assert!(is_poisson(&pi).unwrap());
    }

    #[test]
    fn asymmetric_constants_rejected() {
        let mut c = so3();
        c[1][0][2] = int(1);
        assert_eq!(
            pi_from_structure_constants(&c),
            Err(Error::NotAntisymmetric { i: 1, j: 2, k: 3 })
        );
    }

    #[test]
    fn constant_field_round_trip() {
        let k = vec![int(1), int(0), int(-2)];
        assert_eq!(const_vf(&k).constant_vector(), Some(k));
    }
}
