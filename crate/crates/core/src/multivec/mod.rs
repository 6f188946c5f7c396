//! Polynomial multivector fields and differential forms on Rⁿ.
//!
//! A grade-p object stores one polynomial per strictly increasing index
//! tuple `i₁ < … < i_p` (0-based internally, 1-based on the wire). Zero
//! components are never stored.

mod calculus;
mod constructors;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{Polynomial, Scalar};

pub use calculus::{
    curl_d, ext_deriv, is_poisson, jacobi_cyclic, jacobiator, modular_field, phi, phi_inv, schouten,
};
pub use constructors::{const_vf, euler_vf, linear_vf, pi_from_structure_constants};

/// Sorts an index list, returning the permutation sign, or `None` when an
/// index repeats.
pub fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, i8)> {
    let mut v = idx.to_vec();
    let mut sign = 1i8;
    // insertion sort; tuples are short
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

#[derive(Clone, PartialEq, Debug)]
struct Graded<S: Scalar> {
    n: usize,
    grade: usize,
    comps: BTreeMap<Vec<usize>, Polynomial<S>>,
}

impl<S: Scalar> Graded<S> {
    fn zero(n: usize, grade: usize) -> Self {
        Self { n, grade, comps: BTreeMap::new() }
    }

    /// Adds `sign·p` at an arbitrary index list, reordering as needed.
    fn accumulate(&mut self, idx: &[usize], p: Polynomial<S>, sign: i8) {
        debug_assert_eq!(idx.len(), self.grade);
        if p.is_zero() {
            return;
        }
        let Some((sorted, s)) = sort_with_sign(idx) else { return };
        let term = if s * sign < 0 { -p } else { p };
        let entry = self.comps.remove(&sorted).unwrap_or_else(|| Polynomial::zero(self.n));
        let sum = entry + term;
        if !sum.is_zero() {
            self.comps.insert(sorted, sum);
        }
    }

    fn checked(n: usize, grade: usize, comps: Vec<(Vec<usize>, Polynomial<S>)>) -> Result<Self> {
        if grade > n {
            return Err(Error::BadGrade { grade, n });
        }
        let mut g = Self::zero(n, grade);
        for (idx, p) in comps {
            if idx.len() != grade {
                return Err(Error::DimensionMismatch { expected: grade, found: idx.len() });
            }
            if idx.iter().any(|&i| i >= n) || !idx.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::Parse(format!("index tuple {idx:?} is not strictly increasing in 0..{n}")));
            }
            if p.nvars() != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.nvars() });
            }
            g.accumulate(&idx, p, 1);
        }
        Ok(g)
    }

    fn add(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.grade), (other.n, other.grade), "graded sum shape");
        let mut out = self.clone();
        for (idx, p) in &other.comps {
            out.accumulate(idx, p.clone(), 1);
        }
        out
    }

    fn neg(&self) -> Self {
        Self {
            n: self.n,
            grade: self.grade,
            comps: self.comps.iter().map(|(k, p)| (k.clone(), -p.clone())).collect(),
        }
    }

    fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.n, self.grade);
        for (idx, p) in &self.comps {
            out.accumulate(idx, p.scale(c), 1);
        }
        out
    }

    fn mul_poly(&self, f: &Polynomial<S>) -> Self {
        let mut out = Self::zero(self.n, self.grade);
        for (idx, p) in &self.comps {
            out.accumulate(idx, p * f, 1);
        }
        out
    }

    fn wedge(&self, other: &Self) -> Self {
        let grade = self.grade + other.grade;
        let mut out = Self::zero(self.n, grade);
        if grade > self.n {
            return out;
        }
        for (i, p) in &self.comps {
            for (j, q) in &other.comps {
                let joined: Vec<usize> = i.iter().chain(j).copied().collect();
                out.accumulate(&joined, p * q, 1);
            }
        }
        out
    }

    fn map<T: Scalar>(&self, f: &impl Fn(&S) -> T) -> Graded<T> {
        Graded {
            n: self.n,
            grade: self.grade,
            comps: self.comps.iter().map(|(k, p)| (k.clone(), p.map_coeffs(f))).collect(),
        }
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, basis: &str) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, p) in &self.comps {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let names: Vec<String> = idx.iter().map(|i| format!("{basis}{}", i + 1)).collect();
            write!(f, "({})·{}", p, if names.is_empty() { "1".into() } else { names.join("∧") })?;
        }
        Ok(())
    }
}

macro_rules! graded_wrapper {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, PartialEq, Debug)]
        pub struct $name<S: Scalar>(Graded<S>);

        impl<S: Scalar> $name<S> {
            pub fn zero(n: usize, grade: usize) -> Self {
                Self(Graded::zero(n, grade))
            }

            /// Builds from 0-based, strictly increasing index tuples.
            pub fn from_components(
                n: usize,
                grade: usize,
                comps: Vec<(Vec<usize>, Polynomial<S>)>,
            ) -> Result<Self> {
                Graded::checked(n, grade, comps).map(Self)
            }

            /// Single term `p·e_{idx}` for any index order (sign applied).
            pub fn term(n: usize, idx: &[usize], p: Polynomial<S>) -> Self {
                let mut g = Graded::zero(n, idx.len());
                g.accumulate(idx, p, 1);
                Self(g)
            }

            /// Grade-0 object from a polynomial.
            pub fn scalar(p: Polynomial<S>) -> Self {
                let n = p.nvars();
                Self::term(n, &[], p)
            }

            pub fn nvars(&self) -> usize {
                self.0.n
            }

            pub fn grade(&self) -> usize {
                self.0.grade
            }

            pub fn is_zero(&self) -> bool {
                self.0.comps.is_empty()
            }

            pub fn component(&self, idx: &[usize]) -> Polynomial<S> {
                self.0.comps.get(idx).cloned().unwrap_or_else(|| Polynomial::zero(self.0.n))
            }

            pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Polynomial<S>)> {
                self.0.comps.iter()
            }

            pub fn add(&self, other: &Self) -> Self {
                Self(self.0.add(&other.0))
            }

            pub fn sub(&self, other: &Self) -> Self {
                Self(self.0.add(&other.0.neg()))
            }

            pub fn neg(&self) -> Self {
                Self(self.0.neg())
            }

            pub fn scale(&self, c: &S) -> Self {
                Self(self.0.scale(c))
            }

            pub fn mul_poly(&self, f: &Polynomial<S>) -> Self {
                Self(self.0.mul_poly(f))
            }

            /// True when every component is homogeneous of degree `d`.
            pub fn is_homogeneous(&self, d: u32) -> bool {
                self.0.comps.values().all(|p| p.is_homogeneous(d))
            }

            pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> $name<T> {
                $name(self.0.map(&f))
            }

            pub fn lift<T: Scalar>(&self) -> $name<T>
            where
                S: Into<T>,
            {
                self.map_coeffs(|c| c.clone().into())
            }
        }
    };
}

graded_wrapper!(MultiVectorField, "Antisymmetric contravariant field `Σ π^I ∂_I`.");
graded_wrapper!(DifferentialForm, "Polynomial differential form `Σ ω_I dx_I`.");

impl<S: Scalar> MultiVectorField<S> {
    /// Graded-commutative wedge product.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.nvars() != other.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: other.nvars() });
        }
        Ok(Self(self.0.wedge(&other.0)))
    }

    /// True for a bivector whose components are all linear forms.
    pub fn is_linear_bivector(&self) -> bool {
        self.grade() == 2 && self.is_homogeneous(1)
    }

    /// Components of a vector field whose coefficients are constants.
    pub fn constant_vector(&self) -> Option<Vec<S>> {
        if self.grade() != 1 {
            return None;
        }
        let n = self.nvars();
        let mut out = vec![S::zero(); n];
        for (idx, p) in self.components() {
            if p.degree() != Some(0) {
                return None;
            }
            out[idx[0]] = p.coeff(&crate::exactnum::Monomial::one(n));
        }
        Some(out)
    }
}

impl<S: Scalar> DifferentialForm<S> {
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.nvars() != other.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: other.nvars() });
        }
        Ok(Self(self.0.wedge(&other.0)))
    }

    /// `df` of a function as a 1-form.
    pub fn differential(f: &Polynomial<S>) -> Self {
        let n = f.nvars();
        let mut g = Graded::zero(n, 1);
        for i in 0..n {
            g.accumulate(&[i], f.derivative(i), 1);
        }
        Self(g)
    }
}

impl<S: Scalar> fmt::Display for MultiVectorField<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f, "∂")
    }
}

impl<S: Scalar> fmt::Display for DifferentialForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f, "dx")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, Rational};

    type P = Polynomial<Rational>;
    type V = MultiVectorField<Rational>;

    #[test]
    fn permutation_signs() {
        assert_eq!(sort_with_sign(&[2, 0, 1]), Some((vec![0, 1, 2], 1)));
        assert_eq!(sort_with_sign(&[1, 0]), Some((vec![0, 1], -1)));
        assert_eq!(sort_with_sign(&[1, 1]), None);
    }

    #[test]
    fn unit_bivector() {
        let dx = V::term(3, &[0], P::constant(3, int(1)));
        let dy = V::term(3, &[1], P::constant(3, int(1)));
        let w = dx.wedge(&dy).unwrap();
        assert_eq!(w.grade(), 2);
        assert_eq!(w.component(&[0, 1]), P::constant(3, int(1)));
        assert_eq!(dy.wedge(&dx).unwrap(), w.neg());
    }

    #[test]
    fn parallel_vectors_wedge_to_zero() {
        let v = V::term(3, &[0], P::var(3, 0));
        assert!(v.wedge(&v).unwrap().is_zero());
    }

    #[test]
    fn top_degree_overflow_is_zero() {
        let pi = V::term(3, &[0, 1], P::var(3, 2)).add(&V::term(3, &[1, 2], P::var(3, 0)));
        let w = pi.wedge(&pi).unwrap();
        assert!(w.is_zero());
        assert_eq!(w.grade(), 4);
    }

    #[test]
    fn rejects_bad_indices() {
        assert!(V::from_components(3, 2, vec![(vec![1, 0], P::var(3, 0))]).is_err());
        assert!(V::from_components(3, 4, vec![]).is_err());
        assert!(V::from_components(3, 1, vec![(vec![3], P::var(3, 0))]).is_err());
    }
}
