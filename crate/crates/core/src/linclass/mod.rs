//! Linear Poisson structures on R³ as compatible pairs `(k, f)`.
//!
//! A pair is a modular vector `k` and a quadratic form `f = (AX, X)` with
//! `A·k = 0`; the bivector is `π_f + ½ Î∧k̂`.

mod classify;
mod groups;

use crate::error::{Error, Result};
use crate::exactnum::{int, rat, Matrix, Polynomial, QMatrix, QPoly, Rational, Scalar};
use crate::multivec::{
    const_vf, curl_d, euler_vf, jacobiator, phi, phi_inv, DifferentialForm, MultiVectorField,
};

pub use classify::{classify, standard_pair, Classification, StdFormLabel, Witness};
pub use groups::{aut_member, aut_member_closed_form, aut_member_definition, der0_catalog, der0_space, is_derivation, is_isomorphism};

/// Compatible pair of a linear Poisson structure on R³.
#[derive(Clone, PartialEq, Debug)]
pub struct LinearPair {
    k: Vec<Rational>,
    a: QMatrix,
}

impl LinearPair {
    /// Validates `A` symmetric 3×3 and `A·k = 0`.
    pub fn new(k: Vec<Rational>, a: QMatrix) -> Result<Self> {
        if k.len() != 3 {
            return Err(Error::DimensionMismatch { expected: 3, found: k.len() });
        }
        if a.rows() != 3 || a.cols() != 3 {
            return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
        }
        if !a.is_symmetric() {
            return Err(Error::InvalidLinearPair("A is not symmetric".into()));
        }
        if a.mul_vec(&k).iter().any(|v| !Scalar::is_zero(v)) {
            return Err(Error::InvalidLinearPair("A·k ≠ 0".into()));
        }
        Ok(Self { k, a })
    }

    pub fn zero() -> Self {
        Self { k: vec![int(0); 3], a: Matrix::zeros(3, 3) }
    }

    pub fn k(&self) -> &[Rational] {
        &self.k
    }

    pub fn a(&self) -> &QMatrix {
        &self.a
    }

    pub fn f(&self) -> QPoly {
        quadratic_form(&self.a)
    }

    pub fn is_unimodular(&self) -> bool {
        self.k.iter().all(Scalar::is_zero)
    }

    /// Image under `T`: `(T k, det(T)·f∘T⁻¹)`, i.e. `A ↦ det(T)·T⁻ᵀ A T⁻¹`.
    pub fn transform(&self, t: &QMatrix) -> Result<Self> {
        let inv = t.inverse()?;
        let det = t.det()?;
        let a = (&(&inv.transpose() * &self.a) * &inv).scale(&det);
        Self::new(t.mul_vec(&self.k), a)
    }
}

/// `X·M·Xᵀ = Σ m_ij x_i x_j` as a polynomial; `M` need not be symmetric.
pub fn quadratic_form<S: Scalar>(m: &Matrix<S>) -> Polynomial<S> {
    let n = m.rows();
    let mut out = Polynomial::zero(n);
    for i in 0..n {
        for j in 0..n {
            let mut e = vec![0u32; n];
            e[i] += 1;
            e[j] += 1;
            out = out + Polynomial::monomial(n, e, m.get(i, j).clone());
        }
    }
    out
}

/// Symmetric Gram matrix of a quadratic form.
pub fn gram_matrix(f: &QPoly) -> Result<QMatrix> {
    if !f.is_homogeneous(2) {
        return Err(Error::InvalidLinearPair(format!("not a quadratic form: {f}")));
    }
    let n = f.nvars();
    Ok(Matrix::from_fn(n, n, |i, j| {
        let mut e = vec![0u32; n];
        e[i] += 1;
        e[j] += 1;
        let c = f.coeff_of(&e);
        if i == j {
            c
        } else {
            c * rat(1, 2)
        }
    }))
}

/// `π_f = Φ⁻¹(df)`; on R³ `f_x ∂y∧∂z + f_y ∂z∧∂x + f_z ∂x∧∂y`.
pub fn pi_f<S: Scalar>(f: &Polynomial<S>) -> MultiVectorField<S> {
    phi_inv(&DifferentialForm::differential(f)).expect("1-forms have grade <= n")
}

/// `(1/(n−1)) Î∧k̂`.
pub fn modular_part(k: &[Rational]) -> MultiVectorField<Rational> {
    let n = k.len();
    let w = euler_vf(n).wedge(&const_vf(k)).expect("same dimension");
    w.scale(&rat(1, n as i64 - 1))
}

pub fn bivector_of(p: &LinearPair) -> MultiVectorField<Rational> {
    pi_f(&p.f()).add(&modular_part(&p.k))
}

/// Unique splitting `π = (1/(n−1)) Î∧k̂ + Λ` of a linear bivector.
#[derive(Clone, PartialEq, Debug)]
pub struct Decomposition {
    pub k: Vec<Rational>,
    pub lambda: MultiVectorField<Rational>,
    /// `D(Λ∧Λ) = 0`; always true on R³.
    pub compatible: bool,
}

pub fn decompose(pi: &MultiVectorField<Rational>) -> Result<Decomposition> {
    let n = pi.nvars();
    if n < 2 || pi.grade() != 2 {
        return Err(Error::BadGrade { grade: pi.grade(), n });
    }
    if !pi.is_linear_bivector() {
        return Err(Error::NotLinear(pi.to_string()));
    }
    let k = curl_d(pi).constant_vector().expect("modular field of a linear bivector is constant");
    let lambda = pi.sub(&modular_part(&k));
    let compatible = curl_d(&lambda.wedge(&lambda)?).is_zero();
    Ok(Decomposition { k, lambda, compatible })
}

/// Inverse of [`bivector_of`] for linear Poisson bivectors on R³.
pub fn pair_of(pi: &MultiVectorField<Rational>) -> Result<LinearPair> {
    if pi.nvars() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: pi.nvars() });
    }
    let dec = decompose(pi)?;
    let jac = jacobiator(pi)?;
    if let Some((idx, value)) = jac.components().next() {
        let component = idx.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",");
        return Err(Error::NotPoisson { component, value: value.to_string() });
    }
    // Φ(Λ) = df is exact; Euler's identity recovers f = ½ Σ x_i ∂_i f.
    let df = phi(&dec.lambda)?;
    let mut f = Polynomial::zero(3);
    for i in 0..3 {
        f = f + &Polynomial::var(3, i) * &df.component(&[i]);
    }
    let f = f.scale(&rat(1, 2));
    LinearPair::new(dec.k, gram_matrix(&f)?)
}
