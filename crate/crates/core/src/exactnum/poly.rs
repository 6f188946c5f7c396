//! Sparse multivariate polynomials over an exact [`Scalar`] field.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is graded
//! lexicographic with `x < y < z` (x₁ < x₂ < … in general). Zero coefficients
//! are never stored, so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Exponent vector of a monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // later variables dominate
            for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `d` in `nvars` variables, ascending.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, left: usize, d: u32, out: &mut Vec<Monomial>) {
        if left == 1 {
            prefix.push(d);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            rec(prefix, left - 1, d - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(&mut Vec::new(), nvars, d, &mut out);
    out.sort();
    out
}

#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<S: Scalar> {
    nvars: usize,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        Self::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_terms(nvars, [(Monomial::var(nvars, i), S::one())])
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: S) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        Self::from_terms(nvars, [(Monomial(exps), c)])
    }

    /// Builds a polynomial, merging repeated monomials and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, S)>,
    {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Linear form `Σ coeffs[j]·x_j`.
    pub fn linear(coeffs: &[S]) -> Self {
        let n = coeffs.len();
        Self::from_terms(n, coeffs.iter().enumerate().map(|(j, c)| (Monomial::var(n, j), c.clone())))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn coeff_of(&self, exps: &[u32]) -> S {
        self.coeff(&Monomial(exps.to_vec()))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// True when every term has total degree `d` (the zero polynomial qualifies).
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c.clone())).collect(),
        }
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), c.clone() * S::from_i64(i64::from(e)));
        }
        out
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars).map(|i| self.derivative(i)).collect()
    }

    pub fn eval(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.nvars, "evaluation point dimension");
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, e) in point.iter().zip(&m.0) {
                for _ in 0..*e {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.nvars, S::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The composition `X ↦ p(T·X)`.
    pub fn pullback(&self, t: &Matrix<S>) -> Result<Self> {
        if t.rows() != t.cols() {
            return Err(Error::NotSquare { rows: t.rows(), cols: t.cols() });
        }
        if t.rows() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: t.rows() });
        }
        let n = self.nvars;
        let forms: Vec<Self> = (0..n).map(|i| Self::linear(t.row(i))).collect();
        // powers[i][e] = forms[i]^e, grown lazily
        let mut powers: Vec<Vec<Self>> = vec![vec![Self::constant(n, S::one())]; n];
        let mut out = Self::zero(n);
        for (m, c) in &self.terms {
            let mut term = Self::constant(n, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().expect("seeded") * &forms[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            out = out + term;
        }
        Ok(out)
    }

    /// Coefficients against [`monomials_of_degree`]`(nvars, d)`.
    pub fn coeff_vector(&self, d: u32) -> Vec<S> {
        monomials_of_degree(self.nvars, d).iter().map(|m| self.coeff(m)).collect()
    }

    pub fn from_coeff_vector(nvars: usize, d: u32, coeffs: &[S]) -> Self {
        let basis = monomials_of_degree(nvars, d);
        assert_eq!(basis.len(), coeffs.len(), "coefficient vector length");
        Self::from_terms(nvars, basis.into_iter().zip(coeffs.iter().cloned()))
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Polynomial<T> {
        Polynomial::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn lift<T: Scalar>(&self) -> Polynomial<T>
    where
        S: Into<T>,
    {
        self.map_coeffs(|c| c.clone().into())
    }
}

impl<S: Scalar> Add for Polynomial<S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "polynomial ring mismatch");
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<S: Scalar> Add for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: Self) -> Polynomial<S> {
        self.clone() + rhs.clone()
    }
}

impl<S: Scalar> Neg for Polynomial<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { nvars: self.nvars, terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<S: Scalar> Sub for Polynomial<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Scalar> Sub for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: Self) -> Polynomial<S> {
        self.clone() - rhs.clone()
    }
}

impl<S: Scalar> Mul for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: Self) -> Polynomial<S> {
        assert_eq!(self.nvars, rhs.nvars, "polynomial ring mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Mul for Polynomial<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn superscript(e: u32) -> String {
    e.to_string().bytes().map(|b| SUPERSCRIPTS[(b - b'0') as usize]).collect()
}

/// Variable names: `x, y, z` up to three variables, `x1 … xn` beyond.
pub fn var_name(nvars: usize, i: usize) -> String {
    if nvars <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "{}", var_name(n, i))?,
                _ => write!(f, "{}{}", var_name(n, i), superscript(e))?,
            }
        }
        Ok(())
    }
}

/// Terms in ascending monomial order, e.g. `-1/6·x²y + 1/12·xz²`.
impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.signum() < 0;
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}·{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::scalar::{int, Rational};

    type P = Polynomial<Rational>;

    fn x() -> P {
        P::var(3, 0)
    }
    fn y() -> P {
        P::var(3, 1)
    }
    fn z() -> P {
        P::var(3, 2)
    }

    #[test]
    fn grlex_order() {
        let ms = monomials_of_degree(3, 3);
        let shown: Vec<_> = ms.iter().map(|m| m.exps().to_vec()).collect();
        assert_eq!(
            shown,
            vec![
                vec![3, 0, 0],
                vec![2, 1, 0],
                vec![1, 2, 0],
                vec![0, 3, 0],
                vec![2, 0, 1],
                vec![1, 1, 1],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![0, 1, 2],
                vec![0, 0, 3],
            ]
        );
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &(&x() + &y()) - &y();
        assert_eq!(p, x());
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn pullback_shear() {
        let p = &(&x() * &x()) - &(&y() * &y());
        let t = Matrix::from_rows(vec![
            vec![int(1), int(-1), int(0)],
            vec![int(0), int(1), int(0)],
            vec![int(0), int(0), int(1)],
        ]);
        let expect = &(&x() * &x()) - &(&x() * &y()).scale(&int(2));
        assert_eq!(p.pullback(&t).unwrap(), expect);
    }

    #[test]
    fn pullback_rotation_fixes_circle() {
        let p = &(&x() * &x()) + &(&y() * &y());
        let t = Matrix::from_rows(vec![
            vec![int(0), int(-1), int(0)],
            vec![int(1), int(0), int(0)],
            vec![int(0), int(0), int(1)],
        ]);
        assert_eq!(p.pullback(&t).unwrap(), p);
    }

    #[test]
    fn pullback_dimension_mismatch() {
        let t = Matrix::<Rational>::identity(2);
        assert!(matches!(x().pullback(&t), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn derivative_and_eval() {
        let p = &(&x() * &x()) * &z();
        assert_eq!(p.derivative(0), (&x() * &z()).scale(&int(2)));
        assert_eq!(p.eval(&[int(2), int(5), int(3)]), int(12));
        assert!(p.is_homogeneous(3));
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn renders_ascending() {
        let p = P::from_coeff_vector(3, 3, &[0, 0, 0, 0, -1, 0, 0, 0, 0, 0].map(int))
            .scale(&crate::exactnum::rat(1, 6))
            + P::monomial(3, vec![1, 0, 2], crate::exactnum::rat(1, 12));
        assert_eq!(p.to_string(), "-1/6·x²z + 1/12·xz²");
        assert_eq!((x() - P::constant(3, int(2))).to_string(), "-2 + x");
        assert_eq!(P::zero(4).to_string(), "0");
        assert_eq!(P::var(4, 3).pow(2).to_string(), "x4²");
    }
}
