//! Orbits of the isotropy group `G_K` on P² and the rotations attached to them.
//!
//! A transformation `T` with `T K T⁻¹` in the orbit of `K` is determined, up to
//! the automorphisms of the book algebra, by the point `[T⁻¹e₃] ∈ P²`; `G_K`
//! acts on that point by `v ↦ h⁻¹v`. Each orbit gets a representative unit
//! vector `v` and the rotation `T = (w, v×w, v)ᵀ` with
//! `w = (e₃ − (v,e₃)v)/√(1 − (v,e₃)²)`.

use std::fmt;

use super::{transform_pair, JordanFamily, QuadraticPair};
use crate::error::{Error, Result};
use crate::exactnum::{int, rat, ExtScalar, Matrix, Polynomial, QMatrix, Rational, Scalar};

/// Default residual bound for the floating fallback of [`t_of_v_f64`].
pub const DEFAULT_FLOAT_TOLERANCE: f64 = 1e-12;

type E = ExtScalar;

/// Point of P² with coordinates in Q(√2, √3).
///
/// Stored as a unit vector when an exact normalization exists, otherwise
/// scaled so the last nonzero coordinate is 1; in both cases the last nonzero
/// coordinate is positive. Equality is projective.
#[derive(Clone, Debug)]
pub struct P2Point {
    coords: [E; 3],
    unit: bool,
}

impl P2Point {
    pub fn new(coords: [E; 3]) -> Result<Self> {
        let last = coords.iter().rposition(|c| !c.is_zero()).ok_or_else(|| Error::NotUnit("[0, 0, 0]".into()))?;
        let sign = if coords[last].signum() < 0 { E::from_i64(-1) } else { E::one() };
        let norm2 = coords.iter().fold(E::zero(), |acc, c| acc + c.clone() * c.clone());
        let (scale, unit) = match norm2.sqrt_exact() {
            Some(n) => (sign * n.try_inv()?, true),
            None => (coords[last].try_inv()?, false),
        };
        Ok(Self { coords: coords.map(|c| c * scale.clone()), unit })
    }

    pub fn from_rationals(v: [Rational; 3]) -> Result<Self> {
        Self::new(v.map(|c| E::from_rational(&c)))
    }

    pub fn coords(&self) -> &[E; 3] {
        &self.coords
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    /// Which coordinates are nonzero.
    pub fn support(&self) -> [bool; 3] {
        [0, 1, 2].map(|i| !self.coords[i].is_zero())
    }

    pub fn to_f64(&self) -> [f64; 3] {
        self.coords.clone().map(|c| c.to_f64())
    }
}

impl PartialEq for P2Point {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (&self.coords, &other.coords);
        (0..3).all(|i| (0..3).all(|j| (a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone()).is_zero()))
    }
}

impl fmt::Display for P2Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", c.join(", "))
    }
}

/// Orbit representative: 1-based index, unit vector and its rotation.
#[derive(Clone, PartialEq, Debug)]
pub struct OrbitRep {
    pub index: usize,
    pub point: P2Point,
    pub t: Matrix<E>,
}

/// Orbit representative with the transformed normal form `(Kᵢ, Fᵢ)`; the
/// admissible cubics are listed as a basis.
#[derive(Clone, PartialEq, Debug)]
pub struct OrbitPair {
    pub rep: OrbitRep,
    pub k: Matrix<E>,
    pub f_basis: Vec<Polynomial<E>>,
}

fn e(c0: Rational, c1: Rational, c2: Rational) -> E {
    E::new(c0, c1, c2, int(0))
}

/// `√2/2`.
fn s2() -> E {
    e(int(0), rat(1, 2), int(0))
}

/// `√3/3`.
fn s3() -> E {
    e(int(0), int(0), rat(1, 3))
}

fn unit_point(c: [E; 3]) -> P2Point {
    P2Point { coords: c, unit: true }
}

fn rep_points(family: &JordanFamily) -> Result<Vec<P2Point>> {
    let (o, l) = (E::zero, E::one);
    let basic = vec![unit_point([o(), o(), l()]), unit_point([o(), l(), o()])];
    let mut pts = basic;
    match family {
        JordanFamily::DiagDistinct(_) => {
            pts.push(unit_point([l(), o(), o()]));
            pts.push(unit_point([s2(), s2(), o()]));
            pts.push(unit_point([o(), s2(), s2()]));
            pts.push(unit_point([s2(), o(), s2()]));
            pts.push(unit_point([s3(), s3(), s3()]));
        }
        JordanFamily::DiagRepeated(_) => pts.push(unit_point([o(), s2(), s2()])),
        JordanFamily::NilpotentFull => pts.push(unit_point([l(), o(), o()])),
        JordanFamily::Other(_) => return Err(Error::NoOrbitData(family.to_string())),
    }
    Ok(pts)
}

/// Representatives of `P²/G_K` in index order.
pub fn orbit_reps(family: &JordanFamily) -> Result<Vec<OrbitRep>> {
    rep_points(family)?
        .into_iter()
        .enumerate()
        .map(|(i, p)| Ok(OrbitRep { index: i + 1, t: t_of_v(p.coords())?, point: p }))
        .collect()
}

/// Orbit index of `v` under `G_K`, read off the stratum of `v`.
fn orbit_index(family: &JordanFamily, v: &P2Point) -> Result<usize> {
    let [a, b, g] = v.support();
    Ok(match family {
        // G_K is the diagonal torus: the support is the invariant
        JordanFamily::DiagDistinct(_) => match (a, b, g) {
            (false, false, true) => 1,
            (false, true, false) => 2,
            (true, false, false) => 3,
            (true, true, false) => 4,
            (false, true, true) => 5,
            (true, false, true) => 6,
            (true, true, true) => 7,
            (false, false, false) => unreachable!("P2Point is nonzero"),
        },
        // G_K = GL(2) × GL(1)
        JordanFamily::DiagRepeated(_) => {
            if !a && !b {
                1
            } else if !g {
                2
            } else {
                3
            }
        }
        // G_K = upper-triangular Toeplitz matrices acting on columns: the flag
        // ⟨e₁⟩ ⊂ ⟨e₁, e₂⟩ is invariant
        JordanFamily::NilpotentFull => {
            if g {
                1
            } else if b {
                2
            } else {
                3
            }
        }
        JordanFamily::Other(_) => return Err(Error::NoOrbitData(family.to_string())),
    })
}

/// Canonical representative of the `G_K`-orbit of `v`.
pub fn p2_orbit_rep(family: &JordanFamily, v: &P2Point) -> Result<OrbitRep> {
    let idx = orbit_index(family, v)?;
    let p = rep_points(family)?.swap_remove(idx - 1);
    Ok(OrbitRep { index: idx, t: t_of_v(p.coords())?, point: p })
}

fn cross(a: &[E; 3], b: &[E; 3]) -> [E; 3] {
    let m = |i: usize, j: usize| a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone();
    [m(1, 2), m(2, 0), m(0, 1)]
}

/// Rotation `T = (w, v×w, v)ᵀ` for a unit vector `v` with `(v, e₃) ≥ 0`,
/// exact over Q(√2, √3). `v = e₃` gives `I`.
pub fn t_of_v(v: &[E; 3]) -> Result<Matrix<E>> {
    let norm2 = v.iter().fold(E::zero(), |acc, c| acc + c.clone() * c.clone());
    let shown = || format!("[{}, {}, {}]", v[0], v[1], v[2]);
    if !norm2.is_one() || v[2].signum() < 0 {
        return Err(Error::NotUnit(shown()));
    }
    let gamma = v[2].clone();
    if gamma.is_one() {
        return Ok(Matrix::identity(3));
    }
    let root = (E::one() - gamma.clone() * gamma.clone()).sqrt_exact().ok_or_else(|| Error::NoSquareRoot(shown()))?;
    let inv = root.try_inv()?;
    let w = [0, 1, 2].map(|i| {
        let e3 = if i == 2 { E::one() } else { E::zero() };
        (e3 - gamma.clone() * v[i].clone()) * inv.clone()
    });
    let u = cross(v, &w);
    Ok(Matrix::from_rows(vec![w.to_vec(), u.to_vec(), v.to_vec()]))
}

/// Floating version of [`t_of_v`] for arbitrary real `v`; the result is
/// rejected when `‖TᵀT − I‖∞` exceeds `tolerance`.
pub fn t_of_v_f64(v: [f64; 3], tolerance: f64) -> Result<[[f64; 3]; 3]> {
    let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
    if !n.is_finite() || n == 0.0 {
        return Err(Error::NotUnit(format!("{v:?}")));
    }
    let sign = if v[2] < 0.0 { -1.0 } else { 1.0 };
    let v = v.map(|c| sign * c / n);
    let gamma = v[2];
    let t = if 1.0 - gamma * gamma <= f64::EPSILON {
        [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
    } else {
        let root = (1.0 - gamma * gamma).sqrt();
        let w = [-gamma * v[0] / root, -gamma * v[1] / root, (1.0 - gamma * v[2]) / root];
        let u = [v[1] * w[2] - v[2] * w[1], v[2] * w[0] - v[0] * w[2], v[0] * w[1] - v[1] * w[0]];
        [w, u, v]
    };
    let mut residual: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            let dot: f64 = (0..3).map(|k| t[k][i] * t[k][j]).sum();
            residual = residual.max((dot - if i == j { 1.0 } else { 0.0 }).abs());
        }
    }
    if residual > tolerance {
        return Err(Error::Tolerance { residual: format!("{residual:e}"), tolerance: format!("{tolerance:e}") });
    }
    Ok(t)
}

/// `(Kᵢ, Fᵢ) = Tᵢ·(K, F)` for every orbit representative, with `F` running
/// over the family's generic cubics.
pub fn enumerate_orbit_pairs(family: &JordanFamily) -> Result<Vec<OrbitPair>> {
    let k: Matrix<E> = family.matrix().ok_or_else(|| Error::NoOrbitData(family.to_string()))?.map(E::from_rational);
    let cubics: Vec<Polynomial<E>> = family.generic_cubics().iter().map(|f| f.map_coeffs(E::from_rational)).collect();
    orbit_reps(family)?
        .into_iter()
        .map(|rep| {
            let ki = transform_pair(&rep.t, &QuadraticPair::new(k.clone(), Polynomial::zero(3))?)?.k().clone();
            let f_basis = cubics
                .iter()
                .map(|f| Ok(transform_pair(&rep.t, &QuadraticPair::new(k.clone(), f.clone())?)?.f().clone()))
                .collect::<Result<_>>()?;
            Ok(OrbitPair { rep, k: ki, f_basis })
        })
        .collect()
}

/// `T_α Q_s` with `T_α = [[cos, sin, 0], [−sin, cos, 0], [0, 0, 1]]` and
/// `Q_s = diag(1, s, 1)`.
pub fn coset_rep_g10(cos: &Rational, sin: &Rational, s: &Rational) -> Result<QMatrix> {
    if cos * cos + sin * sin != int(1) {
        return Err(Error::NotUnit(format!("(cos, sin) = ({cos}, {sin})")));
    }
    if s.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let z = int(0);
    let t = Matrix::from_rows(vec![
        vec![cos.clone(), sin.clone(), z.clone()],
        vec![-sin.clone(), cos.clone(), z.clone()],
        vec![z.clone(), z, int(1)],
    ]);
    Ok(&t * &Matrix::diag(&[int(1), s.clone(), int(1)]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::QPoly;

    fn ext_rows(rows: [[E; 3]; 3]) -> Matrix<E> {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
    }

    fn q(v: i64) -> E {
        E::from_i64(v)
    }

    fn distinct() -> JordanFamily {
        JordanFamily::DiagDistinct([int(1), int(2), int(-3)])
    }

    #[test]
    fn rotation_of_p5() {
        let t = t_of_v(&[q(0), s2(), s2()]).unwrap();
        let want = ext_rows([[q(0), -s2(), s2()], [q(1), q(0), q(0)], [q(0), s2(), s2()]]);
        assert_eq!(t, want);
        assert_eq!(t_of_v(&[q(0), q(0), q(1)]).unwrap(), Matrix::identity(3));
        assert!(matches!(t_of_v(&[q(1), q(1), q(0)]), Err(Error::NotUnit(_))));
        assert!(matches!(t_of_v(&[q(0), q(0), q(-1)]), Err(Error::NotUnit(_))));
    }

    #[test]
    fn representatives_are_rotations() {
        for fam in [distinct(), JordanFamily::DiagRepeated(int(1)), JordanFamily::NilpotentFull] {
            for rep in orbit_reps(&fam).unwrap() {
                assert_eq!(&rep.t.transpose() * &rep.t, Matrix::identity(3), "{fam} orbit {}", rep.index);
                assert_eq!(rep.t.det().unwrap(), E::one());
                assert_eq!(rep.t.row(2), rep.point.coords());
            }
        }
        assert!(orbit_reps(&JordanFamily::Other(vec![])).is_err());
    }

    #[test]
    fn strata() {
        let p = |v: [i64; 3]| P2Point::from_rationals(v.map(int)).unwrap();
        assert_eq!(p2_orbit_rep(&distinct(), &p([3, 0, 5])).unwrap().index, 6);
        assert_eq!(p2_orbit_rep(&distinct(), &p([3, 0, 5])).unwrap().point, unit_point([s2(), q(0), s2()]));
        for fam in [distinct(), JordanFamily::DiagRepeated(int(1)), JordanFamily::NilpotentFull] {
            assert_eq!(p2_orbit_rep(&fam, &p([0, 0, 7])).unwrap().point, p([0, 0, 1]));
        }
        let rep = p2_orbit_rep(&JordanFamily::DiagRepeated(int(1)), &p([1, 1, 0])).unwrap();
        assert_eq!(rep.point, p([0, 1, 0]));
        // g = h⁻¹ = blockdiag([[1,−1],[0,1]], 1) commutes with K and maps [1,1,0] to [0,1,0]
        let g: QMatrix = Matrix::from_rows(vec![vec![int(1), int(-1), int(0)], vec![int(0), int(1), int(0)], vec![int(0), int(0), int(1)]]);
        let k = JordanFamily::DiagRepeated(int(1)).matrix().unwrap();
        assert_eq!(&g * &k, &k * &g);
        assert_eq!(g.mul_vec(&[int(1), int(1), int(0)]), vec![int(0), int(1), int(0)]);
        assert_eq!(p2_orbit_rep(&JordanFamily::NilpotentFull, &p([1, 2, 0])).unwrap().index, 2);
        assert_eq!(p2_orbit_rep(&JordanFamily::NilpotentFull, &p([5, 0, 0])).unwrap().index, 3);
    }

    #[test]
    fn projective_equality() {
        let a = P2Point::from_rationals([int(3), int(0), int(5)]).unwrap();
        let b = P2Point::from_rationals([int(-6), int(0), int(-10)]).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_unit());
        assert!(P2Point::from_rationals([int(3), int(0), int(4)]).unwrap().is_unit());
        assert!(P2Point::from_rationals([int(0), int(0), int(0)]).is_err());
    }

    #[test]
    fn float_fallback() {
        let t = t_of_v_f64([0.3, -1.7, 2.2], DEFAULT_FLOAT_TOLERANCE).unwrap();
        let n = (0.3f64 * 0.3 + 1.7 * 1.7 + 2.2 * 2.2).sqrt();
        assert!((t[2][0] - 0.3 / n).abs() < 1e-15);
        assert!(t_of_v_f64([0.0; 3], 1e-12).is_err());
    }

    #[test]
    fn coset_representatives() {
        assert_eq!(coset_rep_g10(&int(1), &int(0), &int(1)).unwrap(), Matrix::identity(3));
        let t = coset_rep_g10(&rat(3, 5), &rat(4, 5), &int(2)).unwrap();
        assert_eq!(t.det().unwrap(), int(2));
        assert_eq!(t.get(0, 1), &rat(8, 5));
        assert_eq!(coset_rep_g10(&int(0), &int(1), &int(0)), Err(Error::SingularMatrix));
        assert!(coset_rep_g10(&int(1), &int(1), &int(1)).is_err());
    }

    #[test]
    fn nilpotent_orbit_two() {
        let pairs = enumerate_orbit_pairs(&JordanFamily::NilpotentFull).unwrap();
        let k2: QMatrix = Matrix::from_rows(vec![vec![int(0); 3], vec![int(0), int(0), int(1)], vec![int(1), int(0), int(0)]]);
        assert_eq!(pairs[1].k, k2.map(E::from_rational));
        let x = |i| QPoly::var(3, i);
        let want = [x(0).pow(3), (&x(0).pow(2) * &x(1)).scale(&int(2)) - &x(2).pow(2) * &x(0)];
        for (got, want) in pairs[1].f_basis.iter().zip(want) {
            assert_eq!(got, &want.map_coeffs(E::from_rational));
        }
    }
}
