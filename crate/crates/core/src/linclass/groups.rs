//! Isomorphisms, automorphism groups and derivations of the standard forms.

use super::{standard_pair, LinearPair};
use crate::error::{Error, Result};
use crate::exactnum::{int, solve_linear, Matrix, QMatrix, Rational, Scalar, SolutionSpace};

fn require_invertible(t: &QMatrix) -> Result<Rational> {
    if !t.is_square() || t.rows() != 3 {
        return Err(Error::NotSquare { rows: t.rows(), cols: t.cols() });
    }
    let det = t.det()?;
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    Ok(det)
}

/// `k₂ = T k₁` and `f₂∘T = det(T)·f₁`, checked as polynomial identities.
pub fn is_isomorphism(t: &QMatrix, p1: &LinearPair, p2: &LinearPair) -> Result<bool> {
    let det = require_invertible(t)?;
    if t.mul_vec(p1.k()) != p2.k() {
        return Ok(false);
    }
    Ok(p2.f().pullback(t)? == p1.f().scale(&det))
}

/// Defining condition: `T k = k` and `f∘T = det(T)·f` for the standard pair.
pub fn aut_member_definition(t: &QMatrix, case_id: u8) -> Result<bool> {
    let p = standard_pair(case_id, &int(1))?;
    is_isomorphism(t, &p, &p)
}

/// Closed-form description of each automorphism group.
pub fn aut_member_closed_form(t: &QMatrix, case_id: u8) -> Result<bool> {
    let det = require_invertible(t)?;
    let g = |i: usize, j: usize| t.get(i, j).clone();
    let z = |i: usize, j: usize| t.get(i, j).is_zero();
    let b = Matrix::from_fn(2, 2, |i, j| g(i, j));
    let btb = &b.transpose() * &b;
    // BᵀB = c·I; returns c
    let conformal = || -> Option<Rational> {
        (btb.get(0, 1).is_zero() && btb.get(0, 0) == btb.get(1, 1)).then(|| btb.get(0, 0).clone())
    };
    let fixes_e3 = || z(0, 2) && z(1, 2) && g(2, 2) == int(1);
    Ok(match case_id {
        1 => true,
        2 => &t.transpose() * t == Matrix::identity(3) && det == int(1),
        3 => {
            let eta = Matrix::diag(&[int(1), int(1), int(-1)]);
            &(&t.transpose() * &eta) * t == eta && det == int(1)
        }
        4 => {
            z(0, 2) && z(1, 2) && conformal().is_some_and(|c| g(2, 2) == b.det().expect("2×2") / c)
        }
        5 => {
            let lam = g(2, 2);
            z(0, 2)
                && z(1, 2)
                && (lam == int(1) || lam == int(-1))
                && g(0, 0) == lam.clone() * g(1, 1)
                && g(1, 0) == lam * g(0, 1)
                && g(1, 1) * g(1, 1) != g(0, 1) * g(0, 1)
        }
        6 => {
            let lower = Matrix::from_fn(2, 2, |i, j| g(i + 1, j + 1));
            z(0, 1) && z(0, 2) && lower.det()? == g(0, 0)
        }
        7 => fixes_e3(),
        8 => fixes_e3() && conformal().is_some_and(|c| b.det().expect("2×2") == c),
        9 => fixes_e3() && g(0, 0) == g(1, 1) && g(0, 1) == g(1, 0) && g(0, 0) * g(0, 0) != g(0, 1) * g(0, 1),
        10 => fixes_e3() && z(0, 1) && g(0, 0) == g(1, 1),
        c => return Err(Error::UnknownCase(c)),
    })
}

/// Membership in the automorphism group, computed both ways.
pub fn aut_member(t: &QMatrix, case_id: u8) -> Result<bool> {
    let def = aut_member_definition(t, case_id)?;
    let closed = aut_member_closed_form(t, case_id)?;
    if def != closed {
        return Err(Error::PathMismatch(format!(
            "case {case_id}: definition says {def}, closed form says {closed} for T = {t}"
        )));
    }
    Ok(def)
}

/// `D k = 0` and `D̂f = tr(D)·f`, i.e. `AD + DᵀA = tr(D)·A`.
pub fn is_derivation(dm: &QMatrix, case_id: u8) -> Result<bool> {
    if dm.rows() != 3 || dm.cols() != 3 {
        return Err(Error::NotSquare { rows: dm.rows(), cols: dm.cols() });
    }
    let p = standard_pair(case_id, &int(1))?;
    if dm.mul_vec(p.k()).iter().any(|v| !v.is_zero()) {
        return Ok(false);
    }
    let a = p.a();
    let lhs = &(a * dm) + &(&dm.transpose() * a);
    Ok(lhs == a.scale(&dm.trace()))
}

/// Unit matrix `E_ij` flattened row-major.
fn unit(i: usize, j: usize) -> Vec<Rational> {
    let mut v = vec![int(0); 9];
    v[3 * i + j] = int(1);
    v
}

fn combo(terms: &[(usize, usize, i64)]) -> Vec<Rational> {
    let mut v = vec![int(0); 9];
    for &(i, j, c) in terms {
        v[3 * i + j] = v[3 * i + j].clone() + int(c);
    }
    v
}

/// Traceless derivations (`tr D = 0`, `Dk = 0`, `D̂f = 0`) as a subspace of
/// 3×3 matrices flattened row-major.
pub fn der0_space(case_id: u8) -> Result<SolutionSpace<Rational>> {
    let p = standard_pair(case_id, &int(1))?;
    let a = p.a();
    let mut rows: Vec<Vec<Rational>> = vec![combo(&[(0, 0, 1), (1, 1, 1), (2, 2, 1)])];
    for i in 0..3 {
        let mut row = vec![int(0); 9];
        for j in 0..3 {
            row[3 * i + j] = p.k()[j].clone();
        }
        rows.push(row);
    }
    // (AD + DᵀA)_ij = Σ_l A_il D_lj + D_li A_lj
    for i in 0..3 {
        for j in i..3 {
            let mut row = vec![int(0); 9];
            for l in 0..3 {
                row[3 * l + j] = row[3 * l + j].clone() + a.get(i, l).clone();
                row[3 * l + i] = row[3 * l + i].clone() + a.get(l, j).clone();
            }
            rows.push(row);
        }
    }
    let m = Matrix::from_rows(rows);
    let b = vec![int(0); m.rows()];
    Ok(solve_linear(&m, &b))
}

/// Closed-form traceless derivation algebras of the unimodular cases.
pub fn der0_catalog(case_id: u8) -> Result<SolutionSpace<Rational>> {
    let basis = match case_id {
        1 => {
            let mut b: Vec<Vec<Rational>> = (0..3)
                .flat_map(|i| (0..3).filter(move |&j| j != i).map(move |j| unit(i, j)))
                .collect();
            b.push(combo(&[(0, 0, 1), (2, 2, -1)]));
            b.push(combo(&[(1, 1, 1), (2, 2, -1)]));
            b
        }
        // o(3): skew-symmetric
        2 => vec![combo(&[(0, 1, 1), (1, 0, -1)]), combo(&[(0, 2, 1), (2, 0, -1)]), combo(&[(1, 2, 1), (2, 1, -1)])],
        // o(2,1): ηK skew with η = diag(1,1,−1)
        3 => vec![combo(&[(0, 1, 1), (1, 0, -1)]), combo(&[(0, 2, 1), (2, 0, 1)]), combo(&[(1, 2, 1), (2, 1, 1)])],
        // [[0,α,0],[−α,0,0],[β,γ,0]]
        4 => vec![combo(&[(0, 1, 1), (1, 0, -1)]), unit(2, 0), unit(2, 1)],
        // [[0,α,0],[α,0,0],[β,γ,0]]
        5 => vec![combo(&[(0, 1, 1), (1, 0, 1)]), unit(2, 0), unit(2, 1)],
        // [[0,0,0],[α,δ,θ],[β,γ,−δ]]
        6 => vec![unit(1, 0), combo(&[(1, 1, 1), (2, 2, -1)]), unit(1, 2), unit(2, 0), unit(2, 1)],
        c => return Err(Error::UnknownCase(c)),
    };
    Ok(SolutionSpace { ambient_dim: 9, particular: Some(vec![int(0); 9]), basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn m(rows: [[i64; 3]; 3]) -> QMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn rational_rotation_is_in_so3() {
        let t = Matrix::from_rows(vec![
            vec![rat(3, 5), rat(-4, 5), int(0)],
            vec![rat(4, 5), rat(3, 5), int(0)],
            vec![int(0), int(0), int(1)],
        ]);
        assert!(aut_member(&t, 2).unwrap());
    }

    #[test]
    fn reflection_is_not_in_g2() {
        assert!(!aut_member(&Matrix::diag(&[int(1), int(1), int(-1)]), 2).unwrap());
    }

    #[test]
    fn g6_block_form() {
        // a = det of the lower block = 2
        let t = m([[2, 0, 0], [5, 1, 1], [-1, 0, 2]]);
        assert!(aut_member(&t, 6).unwrap());
        assert!(!aut_member(&m([[2, 0, 0], [5, 1, 1], [-1, 0, 3]]), 6).unwrap());
    }

    #[test]
    fn scaling_breaks_the_modular_vector() {
        let p = standard_pair(7, &int(1)).unwrap();
        assert!(!is_isomorphism(&Matrix::diag(&[int(1), int(1), int(2)]), &p, &p).unwrap());
        assert!(is_isomorphism(&Matrix::identity(3), &p, &p).unwrap());
    }

    #[test]
    fn singular_rejected() {
        assert_eq!(aut_member(&Matrix::zeros(3, 3), 1), Err(Error::SingularMatrix));
    }

    #[test]
    fn der0_dimensions() {
        let dims: Vec<usize> = (1..=6).map(|c| der0_space(c).unwrap().dim().unwrap()).collect();
        assert_eq!(dims, vec![8, 3, 3, 3, 3, 5]);
    }

    #[test]
    fn der0_matches_catalog() {
        for c in 1..=6 {
            assert!(der0_space(c).unwrap().same_space(&der0_catalog(c).unwrap()), "case {c}");
        }
    }

    #[test]
    fn derivations_of_the_book_algebra() {
        // the identity on the plane scales f = 0 trivially and fixes e₃
        assert!(is_derivation(&Matrix::diag(&[int(1), int(1), int(0)]), 7).unwrap());
        assert!(!is_derivation(&Matrix::diag(&[int(0), int(0), int(1)]), 7).unwrap());
        // the identity doubles f but has trace 3
        assert!(!is_derivation(&Matrix::identity(3), 2).unwrap());
    }
}
