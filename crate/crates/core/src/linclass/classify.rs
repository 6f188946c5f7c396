//! Normal forms of compatible pairs with exact witnesses.
//!
//! A witness is a rational matrix `R` and scalings `d`; the transformation
//! `P = R·diag(1/√dᵢ)` carries the standard pair onto the input:
//! `k = P·k_std` and `Pᵀ A P = det(P)·A_std`. Every `√dᵢ` is squared out
//! when checking, so verification stays in Q.

use std::fmt;

use super::LinearPair;
use crate::error::{Error, Result};
use crate::exactnum::{congruent_diagonalize, int, Matrix, QMatrix, Rational, Scalar};

/// Case number of the normal form, with `a²` for the two families.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StdFormLabel {
    pub case_id: u8,
    pub a_squared: Option<Rational>,
}

impl fmt::Display for StdFormLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.case_id)?;
        if let Some(a2) = &self.a_squared {
            write!(f, " (a² = {}, a ≈ {:.6})", crate::exactnum::format_rational(a2), a2.to_f64().sqrt())?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Witness {
    pub r: QMatrix,
    /// `0` stands for a unit factor.
    pub d: Vec<Rational>,
}

#[derive(Clone, PartialEq, Debug)]
pub struct Classification {
    pub label: StdFormLabel,
    pub witness: Witness,
}

/// Diagonal sign pattern of `A_std` and whether `k_std = e₃`.
fn pattern(case_id: u8) -> Result<([i8; 3], bool)> {
    Ok(match case_id {
        1 => ([0, 0, 0], false),
        2 => ([1, 1, 1], false),
        3 => ([1, 1, -1], false),
        4 => ([1, 1, 0], false),
        5 => ([1, -1, 0], false),
        6 => ([1, 0, 0], false),
        7 => ([0, 0, 0], true),
        8 => ([1, 1, 0], true),
        9 => ([1, -1, 0], true),
        10 => ([1, 0, 0], true),
        c => return Err(Error::UnknownCase(c)),
    })
}

/// Standard pair of a case; `a` is used only by cases 8 and 9.
pub fn standard_pair(case_id: u8, a: &Rational) -> Result<LinearPair> {
    let (signs, has_k) = pattern(case_id)?;
    let scale = if matches!(case_id, 8 | 9) {
        if a.signum() <= 0 {
            return Err(Error::InvalidLinearPair("parameter a must be positive".into()));
        }
        a.clone()
    } else {
        int(1)
    };
    let diag: Vec<Rational> = signs.iter().map(|&s| int(s as i64) * scale.clone()).collect();
    let k = if has_k { vec![int(0), int(0), int(1)] } else { vec![int(0); 3] };
    LinearPair::new(k, Matrix::diag(&diag))
}

fn abs(r: &Rational) -> Rational {
    if r.signum() < 0 {
        -r.clone()
    } else {
        r.clone()
    }
}

fn negate_col(r: &mut QMatrix, j: usize) {
    for i in 0..r.rows() {
        let v = -r.get(i, j).clone();
        r.set(i, j, v);
    }
}

fn permute_cols(r: &QMatrix, order: &[usize]) -> QMatrix {
    Matrix::from_fn(r.rows(), r.cols(), |i, j| r.get(i, order[j]).clone())
}

pub fn classify(p: &LinearPair) -> Result<Classification> {
    if p.is_unimodular() {
        classify_unimodular(p)
    } else {
        classify_with_k(p)
    }
}

fn classify_unimodular(p: &LinearPair) -> Result<Classification> {
    let cong = congruent_diagonalize(p.a())?;
    let (pos, neg) = cong.inertia();
    let label = |case_id| StdFormLabel { case_id, a_squared: None };
    if pos + neg == 0 {
        let witness = Witness { r: Matrix::identity(3), d: vec![int(0); 3] };
        return Ok(Classification { label: label(1), witness });
    }
    // normalize so the majority sign is +; the global sign is absorbed by det
    let eps: i8 = if neg > pos { -1 } else { 1 };
    let (major, minor) = if eps > 0 { (pos, neg) } else { (neg, pos) };
    let case_id = match (major, minor) {
        (3, 0) => 2,
        (2, 1) => 3,
        (2, 0) => 4,
        (1, 1) => 5,
        (1, 0) => 6,
        _ => unreachable!("inertia of a 3×3 form"),
    };
    let e = &cong.d;
    let mut order: Vec<usize> = (0..3).filter(|&i| e[i].signum() == eps).collect();
    order.extend((0..3).filter(|&i| e[i].signum() == -eps));
    order.extend((0..3).filter(|&i| e[i].is_zero()));
    let mut r = permute_cols(&cong.r, &order);
    let e: Vec<Rational> = order.iter().map(|&i| e[i].clone()).collect();
    if r.det()?.signum() != eps {
        negate_col(&mut r, 0);
    }
    let det2 = {
        let d = r.det()?;
        &d * &d
    };
    let nz: Vec<usize> = (0..3).filter(|&i| !e[i].is_zero()).collect();
    let d = (0..3)
        .map(|i| {
            let prod = nz.iter().filter(|&&j| j != i).fold(int(1), |acc, &j| acc * abs(&e[j]));
            &det2 / &prod
        })
        .collect();
    Ok(Classification { label: label(case_id), witness: Witness { r, d } })
}

fn classify_with_k(p: &LinearPair) -> Result<Classification> {
    let k = p.k();
    // pivot on the largest coordinate of k; complete with the other unit vectors
    let piv = (0..3)
        .max_by(|&i, &j| abs(&k[i]).cmp(&abs(&k[j])).then(j.cmp(&i)))
        .expect("three coordinates");
    let others: Vec<usize> = (0..3).filter(|&i| i != piv).collect();
    let m = Matrix::from_fn(3, 3, |i, j| match j {
        2 => k[i].clone(),
        _ => int((i == others[j]) as i64),
    });
    let b = &(&m.transpose() * p.a()) * &m;
    let b2 = Matrix::from_fn(2, 2, |i, j| b.get(i, j).clone());
    let cong = congruent_diagonalize(&b2)?;
    let mut r2 = cong.r.clone();
    let mut e = cong.d.clone();
    if e[0].is_zero() && !e[1].is_zero() {
        r2.swap_cols(0, 1);
        e.swap(0, 1);
    }
    let block = Matrix::from_fn(3, 3, |i, j| match (i, j) {
        (2, 2) => int(1),
        (2, _) | (_, 2) => int(0),
        _ => r2.get(i, j).clone(),
    });
    let mut r = &m * &block;
    let det_b2 = b2.det()?;
    let case_id = match (b2.is_zero(), det_b2.signum()) {
        (true, _) => 7,
        (false, 1) => 8,
        (false, -1) => 9,
        (false, _) => 10,
    };
    if case_id != 7 && r.det()?.signum() != e[0].signum() {
        negate_col(&mut r, 0);
    }
    let det = r.det()?;
    let one = int(1);
    let (a_squared, d1) = match case_id {
        7 => (None, one.clone()),
        8 => (Some(&(&e[0] * &e[1]) / &(&det * &det)), &e[1] / &e[0]),
        9 => (Some(-(&(&e[0] * &e[1]) / &(&det * &det))), -(&e[1] / &e[0])),
        _ => (None, &(&det * &det) / &(&e[0] * &e[0])),
    };
    Ok(Classification {
        label: StdFormLabel { case_id, a_squared },
        witness: Witness { r, d: vec![one.clone(), d1, one] },
    })
}

impl Witness {
    /// Exact check that `P = R·diag(1/√dᵢ)` maps the standard pair of
    /// `label` onto `input`.
    pub fn verify(&self, input: &LinearPair, label: &StdFormLabel) -> Result<bool> {
        let (signs, has_k) = pattern(label.case_id)?;
        let det = self.r.det()?;
        if det.is_zero() || self.d.len() != 3 || self.d.iter().any(|v| v.signum() < 0) {
            return Ok(false);
        }
        let d: Vec<Rational> = self.d.iter().map(|v| if v.is_zero() { int(1) } else { v.clone() }).collect();
        let prod_d = d.iter().fold(int(1), |acc, v| acc * v.clone());
        let a2 = label.a_squared.clone().unwrap_or_else(|| int(1));
        let m = &(&self.r.transpose() * input.a()) * &self.r;
        for i in 0..3 {
            for j in 0..3 {
                if i != j && !m.get(i, j).is_zero() {
                    return Ok(false);
                }
            }
            let mii = m.get(i, i);
            if signs[i] == 0 {
                if !mii.is_zero() {
                    return Ok(false);
                }
                continue;
            }
            let lhs = mii * mii * &prod_d;
            let rhs = &det * &det * &a2 * &d[i] * &d[i];
            if lhs != rhs || mii.signum() != det.signum() * signs[i] {
                return Ok(false);
            }
        }
        let k = input.k();
        if !has_k {
            return Ok(k.iter().all(Scalar::is_zero));
        }
        Ok((0..3).all(|i| {
            let ri = self.r.get(i, 2);
            ri * ri == &d[2] * &k[i] * &k[i] && ri.signum() == k[i].signum()
        }))
    }

    /// The real transformation `P`, for display.
    pub fn transform_f64(&self) -> Vec<Vec<f64>> {
        (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        let dj = self.d[j].to_f64();
                        let s = if dj == 0.0 { 1.0 } else { dj.sqrt() };
                        self.r.get(i, j).to_f64() / s
                    })
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: [[i64; 3]; 3]) -> QMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    fn check(p: &LinearPair, case_id: u8, a2: Option<Rational>) {
        let c = classify(p).unwrap();
        assert_eq!(c.label, StdFormLabel { case_id, a_squared: a2 });
        assert!(c.witness.verify(p, &c.label).unwrap(), "witness for {p:?}");
    }

    #[test]
    fn sphere_is_case_two() {
        check(&LinearPair::new(vec![int(0); 3], Matrix::identity(3)).unwrap(), 2, None);
    }

    #[test]
    fn case_eight_reads_a_squared() {
        let p = LinearPair::new(vec![int(0), int(0), int(1)], m([[2, 0, 0], [0, 2, 0], [0, 0, 0]])).unwrap();
        check(&p, 8, Some(int(4)));
    }

    #[test]
    fn sheared_hyperbolic_is_case_five() {
        let p = LinearPair::new(vec![int(0); 3], m([[1, -1, 0], [-1, 0, 0], [0, 0, 0]])).unwrap();
        check(&p, 5, None);
    }

    #[test]
    fn zero_pair_has_identity_witness() {
        let c = classify(&LinearPair::zero()).unwrap();
        assert_eq!(c.label.case_id, 1);
        assert_eq!(c.witness, Witness { r: Matrix::identity(3), d: vec![int(0); 3] });
    }

    #[test]
    fn negative_definite_is_case_two() {
        let p = LinearPair::new(vec![int(0); 3], m([[-1, 0, 0], [0, -3, 0], [0, 0, -2]])).unwrap();
        check(&p, 2, None);
    }

    #[test]
    fn every_standard_pair_classifies_to_itself() {
        for case_id in 1..=10u8 {
            let p = standard_pair(case_id, &int(3)).unwrap();
            let a2 = matches!(case_id, 8 | 9).then(|| int(9));
            check(&p, case_id, a2);
        }
    }

    #[test]
    fn tilted_modular_vector() {
        // k = (1,2,0), f depends only on the complement of k
        let k = vec![int(1), int(2), int(0)];
        let a = m([[4, -2, 0], [-2, 1, 0], [0, 0, 0]]);
        check(&LinearPair::new(k.clone(), a).unwrap(), 10, None);
        // f = (2x − y)² − 3z²: adapted block diag(4, −3), |det M| = 2
        let a = m([[4, -2, 0], [-2, 1, 0], [0, 0, -3]]);
        check(&LinearPair::new(k, a).unwrap(), 9, Some(int(3)));
    }

    #[test]
    fn tampered_witness_fails() {
        let p = standard_pair(3, &int(1)).unwrap();
        let mut c = classify(&p).unwrap();
        c.witness.d[0] = int(2);
        assert!(!c.witness.verify(&p, &c.label).unwrap());
    }
}
