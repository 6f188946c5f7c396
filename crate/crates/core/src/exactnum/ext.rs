use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::scalar::{format_rational, int, rational_sqrt, Rational, Scalar};
use crate::error::{Error, Result};

/// Element `c0 + c1·√2 + c2·√3 + c3·√6` of the biquadratic field Q(√2, √3).
///
/// `{1, √2, √3, √6}` is a Q-basis, so the coordinate representation is unique
/// and structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExtScalar {
    coords: [Rational; 4],
}

/// The radicands attached to each coordinate.
const RADICANDS: [i64; 4] = [1, 2, 3, 6];

impl ExtScalar {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> Self {
        Self { coords: [c0, c1, c2, c3] }
    }

    pub fn from_coords(coords: [Rational; 4]) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.coords
    }

    pub fn sqrt2() -> Self {
        Self::new(int(0), int(1), int(0), int(0))
    }

    pub fn sqrt3() -> Self {
        Self::new(int(0), int(0), int(1), int(0))
    }

    pub fn sqrt6() -> Self {
        Self::new(int(0), int(0), int(0), int(1))
    }

    /// Galois conjugate sending √2 to -√2.
    pub fn conj2(&self) -> Self {
        let [a, b, c, d] = self.coords.clone();
        Self::new(a, -b, c, -d)
    }

    /// Galois conjugate sending √3 to -√3.
    pub fn conj3(&self) -> Self {
        let [a, b, c, d] = self.coords.clone();
        Self::new(a, b, -c, -d)
    }

    /// Product of the four Galois conjugates; a rational that vanishes only at 0.
    pub fn norm(&self) -> Rational {
        let prod = self.clone() * self.conj2();
        // prod lies in Q(√3): prod = r + t√3
        let [r, _, t, _] = prod.coords;
        &r * &r - int(3) * &t * &t
    }

    pub fn invert(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // self^{-1} = conj2(self) · conj3(self · conj2(self)) / norm
        let half = self.clone() * self.conj2();
        let num = self.conj2() * half.conj3();
        let scale = n.recip();
        Ok(Self::from_coords(num.coords.map(|c| c * &scale)))
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Scalar::is_zero)
    }
}

/// Sign of `r + t·√m` for rational r, t and a non-square positive m.
fn sign_quadratic(r: &Rational, t: &Rational, m: i64) -> i8 {
    let sr = r.signum_i8();
    let st = t.signum_i8();
    if st == 0 {
        return sr;
    }
    if sr == 0 || sr == st {
        return st;
    }
    let disc = r * r - int(m) * t * t;
    sr * disc.signum_i8()
}

trait SignumI8 {
    fn signum_i8(&self) -> i8;
}

impl SignumI8 for Rational {
    fn signum_i8(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
}

impl Add for ExtScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [a0, a1, a2, a3] = self.coords;
        let [b0, b1, b2, b3] = rhs.coords;
        Self::new(a0 + b0, a1 + b1, a2 + b2, a3 + b3)
    }
}

impl Sub for ExtScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for ExtScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_coords(self.coords.map(|c| -c))
    }
}

impl Mul for ExtScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let [a0, a1, a2, a3] = &self.coords;
        let [b0, b1, b2, b3] = &rhs.coords;
        let two = int(2);
        let three = int(3);
        let six = int(6);
        let c0 = a0 * b0 + &two * a1 * b1 + &three * a2 * b2 + &six * a3 * b3;
        let c1 = a0 * b1 + a1 * b0 + &three * (a2 * b3 + a3 * b2);
        let c2 = a0 * b2 + a2 * b0 + &two * (a1 * b3 + a3 * b1);
        let c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
        Self::new(c0, c1, c2, c3)
    }
}

impl Scalar for ExtScalar {
    fn zero() -> Self {
        Self::new(int(0), int(0), int(0), int(0))
    }
    fn one() -> Self {
        Self::new(int(1), int(0), int(0), int(0))
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }
    fn from_rational(r: &Rational) -> Self {
        Self::new(r.clone(), int(0), int(0), int(0))
    }
    fn try_inv(&self) -> Result<Self> {
        self.invert()
    }
    fn signum(&self) -> i8 {
        // Split as p + q·√2 with p = c0 + c2√3, q = c1 + c3√3.
        let [c0, c1, c2, c3] = &self.coords;
        let sp = sign_quadratic(c0, c2, 3);
        let sq = sign_quadratic(c1, c3, 3);
        if sq == 0 {
            return sp;
        }
        if sp == 0 || sp == sq {
            return sq;
        }
        // p² - 2q² ∈ Q(√3)
        let p = Self::new(c0.clone(), int(0), c2.clone(), int(0));
        let q = Self::new(c1.clone(), int(0), c3.clone(), int(0));
        let d = p.clone() * p - Self::from_i64(2) * q.clone() * q;
        sp * sign_quadratic(&d.coords[0], &d.coords[2], 3)
    }
    fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coords[0].clone())
    }
    fn to_f64(&self) -> f64 {
        self.coords
            .iter()
            .zip(RADICANDS)
            .map(|(c, m)| Scalar::to_f64(c) * (m as f64).sqrt())
            .sum()
    }
    /// Only rational radicands are handled: √r ∈ Q(√2,√3) iff r·m is a
    /// rational square for some m ∈ {1, 2, 3, 6}.
    fn sqrt_exact(&self) -> Option<Self> {
        let r = self.as_rational()?;
        for (slot, m) in RADICANDS.iter().enumerate() {
            if let Some(s) = rational_sqrt(&(&r * int(*m))) {
                // √r = √(r m) / √m = √(r m)·√m / m
                let mut coords = [int(0), int(0), int(0), int(0)];
                coords[slot] = s / int(*m);
                return Some(Self::from_coords(coords));
            }
        }
        None
    }
}

impl From<Rational> for ExtScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(&r)
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (c, m) in self.coords.iter().zip(RADICANDS) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let body = if m == 1 {
                format_rational(&a)
            } else {
                let num = a.numer();
                let den = a.denom();
                let head = if num == &1.into() { String::new() } else { num.to_string() };
                if den == &1.into() {
                    format!("{head}√{m}")
                } else {
                    format!("{head}√{m}/{den}")
                }
            };
            parts.push(if neg { format!("-{body}") } else { body });
        }
        match parts.len() {
            0 => write!(f, "0"),
            1 => write!(f, "{}", parts[0]),
            _ => {
                let mut s = parts[0].clone();
                for p in &parts[1..] {
                    match p.strip_prefix('-') {
                        Some(rest) => s.push_str(&format!(" - {rest}")),
                        None => s.push_str(&format!(" + {p}")),
                    }
                }
                write!(f, "({s})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::scalar::rat;

    fn e(a: i64, b: i64, c: i64, d: i64) -> ExtScalar {
        ExtScalar::new(int(a), int(b), int(c), int(d))
    }

    #[test]
    fn invert_identity() {
        assert_eq!(ExtScalar::one().invert().unwrap(), ExtScalar::one());
    }

    #[test]
    fn invert_half_sqrt2() {
        let h = ExtScalar::new(int(0), rat(1, 2), int(0), int(0));
        assert_eq!(h.invert().unwrap(), ExtScalar::sqrt2());
    }

    #[test]
    fn invert_one_plus_sqrt2() {
        assert_eq!(e(1, 1, 0, 0).invert().unwrap(), e(-1, 1, 0, 0));
    }

    #[test]
    fn invert_zero_fails() {
        assert_eq!(ExtScalar::zero().invert(), Err(Error::DivisionByZero));
    }

    #[test]
    fn radical_relations() {
        let s2 = ExtScalar::sqrt2();
        let s3 = ExtScalar::sqrt3();
        assert_eq!(s2.clone() * s2.clone(), ExtScalar::from_i64(2));
        assert_eq!(s2.clone() * s3.clone(), ExtScalar::sqrt6());
        assert_eq!(s3 * ExtScalar::sqrt6(), e(0, 3, 0, 0));
    }

    #[test]
    fn exact_signs() {
        // √2 + √3 - √6 ≈ 0.6968
        assert_eq!(e(0, 1, 1, -1).signum(), 1);
        // 3 - √2·... : 1 + √2 - √6 ≈ -0.035
        assert_eq!(e(1, 1, 0, -1).signum(), -1);
        assert_eq!(e(5, -2, -1, 0).signum(), 1);
        assert_eq!(ExtScalar::zero().signum(), 0);
    }

    #[test]
    fn sqrt_in_field() {
        let two_thirds = ExtScalar::from_rational(&rat(2, 3));
        let s = two_thirds.sqrt_exact().unwrap();
        assert_eq!(s.clone() * s.clone(), two_thirds);
        assert_eq!(s, ExtScalar::new(int(0), int(0), int(0), rat(1, 3)));
        assert!(ExtScalar::from_i64(5).sqrt_exact().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(ExtScalar::new(int(0), rat(1, 2), int(0), int(0)).to_string(), "√2/2");
        assert_eq!(e(1, -1, 0, 0).to_string(), "(1 - √2)");
        assert_eq!(ExtScalar::from_rational(&rat(-1, 6)).to_string(), "-1/6");
    }
}
