//! Jordan families of traceless 3×3 rational matrices.

use std::fmt;

use nalgebra::Matrix3;

use crate::error::Result;
use crate::exactnum::{format_rational, int, rational_sqrt, Matrix, Polynomial, QMatrix, QPoly, Rational, Scalar};

/// Conjugacy family of a traceless `K`, as far as the orbit machinery needs.
#[derive(Clone, PartialEq, Debug)]
pub enum JordanFamily {
    /// `diag(λ₁, λ₂, λ₃)`: distinct, nonzero, summing to zero.
    DiagDistinct([Rational; 3]),
    /// `diag(λ, λ, −2λ)`, `λ ≠ 0`.
    DiagRepeated(Rational),
    /// The full nilpotent block `y∂x + z∂y`.
    NilpotentFull,
    /// Anything else, with floating eigenvalues `(re, im)`.
    Other(Vec<(f64, f64)>),
}

impl JordanFamily {
    /// Normal form `K` of the family; `None` for `Other`.
    pub fn matrix(&self) -> Option<QMatrix> {
        match self {
            Self::DiagDistinct(l) => Some(Matrix::diag(l)),
            Self::DiagRepeated(l) => Some(Matrix::diag(&[l.clone(), l.clone(), l * int(-2)])),
            Self::NilpotentFull => Some(nilpotent_block()),
            Self::Other(_) => None,
        }
    }

    /// Basis of the admissible cubics of the normal form, in the
    /// parametrization `F = m·xyz + n·x²z + p·y²z` resp. `F = p·z³ + q·(2z²x − y²z)`.
    pub fn generic_cubics(&self) -> Vec<QPoly> {
        let mono = |e: [u32; 3]| Polynomial::monomial(3, e.to_vec(), int(1));
        match self {
            Self::DiagDistinct(_) => vec![mono([1, 1, 1])],
            Self::DiagRepeated(_) => vec![mono([1, 1, 1]), mono([2, 0, 1]), mono([0, 2, 1])],
            Self::NilpotentFull => vec![mono([0, 0, 3]), mono([1, 0, 2]).scale(&int(2)) - mono([0, 2, 1])],
            Self::Other(_) => Vec::new(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::DiagDistinct(_) => "DIAG_DISTINCT",
            Self::DiagRepeated(_) => "DIAG_REPEATED",
            Self::NilpotentFull => "NILPOTENT_FULL",
            Self::Other(_) => "OTHER",
        }
    }
}

impl fmt::Display for JordanFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DiagDistinct(l) => {
                let l: Vec<String> = l.iter().map(format_rational).collect();
                write!(f, "DIAG_DISTINCT({})", l.join(", "))
            }
            Self::DiagRepeated(l) => write!(f, "DIAG_REPEATED({})", format_rational(l)),
            Self::NilpotentFull => f.write_str("NILPOTENT_FULL"),
            Self::Other(ev) => {
                let ev: Vec<String> = ev
                    .iter()
                    .map(|(re, im)| if *im == 0.0 { format!("{re:.6}") } else { format!("{re:.6}{im:+.6}i") })
                    .collect();
                write!(f, "OTHER(eigenvalues ≈ {})", ev.join(", "))
            }
        }
    }
}

/// `[[0,1,0],[0,0,1],[0,0,0]]`.
pub(crate) fn nilpotent_block() -> QMatrix {
    Matrix::from_fn(3, 3, |i, j| int((j == i + 1) as i64))
}

fn float_eigenvalues(k: &QMatrix) -> Vec<(f64, f64)> {
    let m = Matrix3::from_fn(|i, j| k.get(i, j).to_f64());
    let mut ev: Vec<(f64, f64)> = m.complex_eigenvalues().iter().map(|c| (c.re, c.im)).collect();
    ev.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    ev
}

fn lcm_den(values: &[&Rational]) -> Rational {
    use num_integer::Integer;
    let l = values.iter().fold(num_bigint::BigInt::from(1), |acc, v| acc.lcm(v.denom()));
    Rational::from_integer(l)
}

/// A rational root of `t³ + p t + q` with three distinct real roots, if any.
fn rational_root(p: &Rational, q: &Rational) -> Option<Rational> {
    // t = u/L turns the cubic into a monic integer one, whose rational roots
    // are integers; floating roots only propose candidates.
    let l = lcm_den(&[p, q]);
    let (pf, qf) = (p.to_f64(), q.to_f64());
    let r = 2.0 * (-pf / 3.0).sqrt();
    let phi = ((3.0 * qf / (2.0 * pf)) * (-3.0 / pf).sqrt()).clamp(-1.0, 1.0).acos() / 3.0;
    let cubic = |t: &Rational| t * t * t + p * t + q;
    for k in 0..3 {
        let t = r * (phi - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos();
        let u = (t * l.to_f64()).round();
        for du in [-1.0, 0.0, 1.0] {
            let cand = int((u + du) as i64) / &l;
            if cubic(&cand).is_zero() {
                return Some(cand);
            }
        }
    }
    None
}

/// Exact family of a traceless `K` from its characteristic polynomial
/// `t³ + p t + q`.
pub fn jordan_family_of(k: &QMatrix) -> Result<JordanFamily> {
    super::require_traceless(k)?;
    let g = |i: usize, j: usize| k.get(i, j).clone();
    let minor = |a: usize, b: usize| g(a, a) * g(b, b) - g(a, b) * g(b, a);
    let p = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let q = -k.det()?;
    let other = || Ok(JordanFamily::Other(float_eigenvalues(k)));
    if p.is_zero() && q.is_zero() {
        return if (k * k).is_zero() { other() } else { Ok(JordanFamily::NilpotentFull) };
    }
    let disc = int(-4) * &p * &p * &p - int(27) * &q * &q;
    if disc.is_zero() {
        // roots μ, μ, −2μ with p = −3μ², q = 2μ³
        let mu = int(-3) * &q / (int(2) * &p);
        let shifted = k - &Matrix::identity(3).scale(&mu);
        return if shifted.rank() == 1 { Ok(JordanFamily::DiagRepeated(mu)) } else { other() };
    }
    if disc < int(0) || q.is_zero() {
        return other();
    }
    let Some(r) = rational_root(&p, &q) else { return other() };
    // t³ + pt + q = (t − r)(t² + rt + p + r²)
    let Some(s) = rational_sqrt(&(int(-3) * &r * &r - int(4) * &p)) else { return other() };
    let half = |v: Rational| v / int(2);
    let mut roots = [r.clone(), half(-&r + &s), half(-&r - &s)];
    if k.is_diagonal() {
        roots = [g(0, 0), g(1, 1), g(2, 2)];
    } else {
        roots.sort();
    }
    Ok(JordanFamily::DiagDistinct(roots))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn conj(t: &QMatrix, k: &QMatrix) -> QMatrix {
        &(t * k) * &t.inverse().unwrap()
    }

    fn shear() -> QMatrix {
        Matrix::from_rows(vec![
            vec![int(1), int(2), int(0)],
            vec![int(0), int(1), int(3)],
            vec![int(1), int(0), int(1)],
        ])
    }

    #[test]
    fn diagonal_inputs() {
        let d = Matrix::diag(&[int(1), int(2), int(-3)]);
        assert_eq!(jordan_family_of(&d).unwrap(), JordanFamily::DiagDistinct([int(1), int(2), int(-3)]));
        let c = conj(&shear(), &d);
        assert_eq!(jordan_family_of(&c).unwrap(), JordanFamily::DiagDistinct([int(-3), int(1), int(2)]));
    }

    #[test]
    fn repeated_after_conjugation() {
        let d = Matrix::diag(&[rat(1, 2), rat(1, 2), int(-1)]);
        assert_eq!(jordan_family_of(&conj(&shear(), &d)).unwrap(), JordanFamily::DiagRepeated(rat(1, 2)));
    }

    #[test]
    fn nilpotent_and_others() {
        assert_eq!(jordan_family_of(&nilpotent_block()).unwrap(), JordanFamily::NilpotentFull);
        assert_eq!(jordan_family_of(&conj(&shear(), &nilpotent_block())).unwrap(), JordanFamily::NilpotentFull);
        assert!(matches!(jordan_family_of(&Matrix::zeros(3, 3)).unwrap(), JordanFamily::Other(_)));
        // zero eigenvalue
        let z = Matrix::diag(&[int(1), int(-1), int(0)]);
        assert!(matches!(jordan_family_of(&z).unwrap(), JordanFamily::Other(_)));
        // rotation generator: complex pair
        let rot = Matrix::from_rows(vec![vec![int(0), int(-1), int(0)], vec![int(1), int(0), int(0)], vec![int(0); 3]]);
        let JordanFamily::Other(ev) = jordan_family_of(&rot).unwrap() else { panic!() };
        assert!(ev.iter().any(|(_, im)| (im.abs() - 1.0).abs() < 1e-9));
        // repeated eigenvalue, not diagonalizable
        let mut j = Matrix::diag(&[int(1), int(1), int(-2)]);
        j.set(0, 1, int(1));
        assert!(matches!(jordan_family_of(&j).unwrap(), JordanFamily::Other(_)));
        // irrational eigenvalues ±√2
        let irr = Matrix::from_rows(vec![vec![int(0), int(2), int(0)], vec![int(1), int(0), int(0)], vec![int(0), int(0), int(0)]]);
        assert!(matches!(jordan_family_of(&irr).unwrap(), JordanFamily::Other(_)));
    }

    #[test]
    fn generic_cubics_are_admissible() {
        for fam in [
            JordanFamily::DiagDistinct([int(1), int(2), int(-3)]),
            JordanFamily::DiagRepeated(int(2)),
            JordanFamily::NilpotentFull,
        ] {
            let k = fam.matrix().unwrap();
            for f in fam.generic_cubics() {
                assert!(super::super::apply_linear(&k, &f).is_zero(), "{fam}: {f}");
            }
        }
    }
}
