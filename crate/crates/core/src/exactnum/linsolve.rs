//! Exact affine solution sets of linear systems.

use super::matrix::Matrix;
use super::scalar::Scalar;

/// An affine subspace `particular + span(basis)` of `S^ambient_dim`, or the
/// empty set when `particular` is `None`.
#[derive(Clone, PartialEq, Debug)]
pub struct SolutionSpace<S: Scalar> {
    pub ambient_dim: usize,
    pub particular: Option<Vec<S>>,
    pub basis: Vec<Vec<S>>,
}

impl<S: Scalar> SolutionSpace<S> {
    pub fn empty(ambient_dim: usize) -> Self {
        Self { ambient_dim, particular: None, basis: Vec::new() }
    }

    pub fn point(p: Vec<S>) -> Self {
        Self { ambient_dim: p.len(), particular: Some(p), basis: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    /// Dimension of the affine space; `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.particular.as_ref().map(|_| self.basis.len())
    }

    /// True for the zero vector space `{0}`.
    pub fn is_zero_space(&self) -> bool {
        self.basis.is_empty() && self.particular.as_ref().is_some_and(|p| p.iter().all(S::is_zero))
    }

    /// Membership test by exact elimination.
    pub fn contains(&self, v: &[S]) -> bool {
        let Some(p) = &self.particular else { return false };
        if v.len() != self.ambient_dim {
            return false;
        }
        let diff: Vec<S> = v.iter().zip(p).map(|(a, b)| a.clone() - b.clone()).collect();
        let mut rows = self.basis.clone();
        let before = rank_of_rows(&rows, self.ambient_dim);
        rows.push(diff);
        rank_of_rows(&rows, self.ambient_dim) == before
    }

    /// Unique representative: basis in reduced row echelon form, particular
    /// zeroed at every basis pivot. Two spaces are equal iff their canonical
    /// forms are structurally equal.
    pub fn canonical(&self) -> Self {
        let Some(p) = &self.particular else { return Self::empty(self.ambient_dim) };
        let (basis, pivots) = rref_rows(&self.basis, self.ambient_dim);
        let mut part = p.clone();
        for (row, &pc) in basis.iter().zip(&pivots) {
            let f = part[pc].clone();
            if f.is_zero() {
                continue;
            }
            for (x, r) in part.iter_mut().zip(row) {
                *x = x.clone() - f.clone() * r.clone();
            }
        }
        Self { ambient_dim: self.ambient_dim, particular: Some(part), basis }
    }

    pub fn same_space(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.canonical() == other.canonical()
    }

    /// Every point of a space of dimension `basis.len()` is
    /// `particular + Σ t_i basis_i`; this evaluates one.
    pub fn member(&self, coeffs: &[S]) -> Option<Vec<S>> {
        let p = self.particular.as_ref()?;
        assert_eq!(coeffs.len(), self.basis.len(), "parameter count");
        let mut out = p.clone();
        for (t, b) in coeffs.iter().zip(&self.basis) {
            for (o, bi) in out.iter_mut().zip(b) {
                *o = o.clone() + t.clone() * bi.clone();
            }
        }
        Some(out)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SolutionSpace<T> {
        SolutionSpace {
            ambient_dim: self.ambient_dim,
            particular: self.particular.as_ref().map(|p| p.iter().map(&f).collect()),
            basis: self.basis.iter().map(|b| b.iter().map(&f).collect()).collect(),
        }
    }
}

fn rank_of_rows<S: Scalar>(rows: &[Vec<S>], width: usize) -> usize {
    rref_rows(rows, width).0.len()
}

/// Reduced row echelon form of a list of row vectors (zero rows dropped),
/// together with the pivot columns.
pub fn rref_rows<S: Scalar>(rows: &[Vec<S>], width: usize) -> (Vec<Vec<S>>, Vec<usize>) {
    let mut a: Vec<Vec<S>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].try_inv().expect("nonzero pivot");
        for v in a[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..a.len() {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..width {
                let t = a[r][j].clone();
                a[i][j] = a[i][j].clone() - f.clone() * t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Exact solution set of `M·x = b`.
///
/// Forward elimination is fraction-free (Bareiss): every update is
/// `(p·a_ij − a_ic·a_rj) / prev_pivot`, which keeps intermediate entries as
/// minors of the input. Inconsistency is reported as the empty space.
pub fn solve_linear<S: Scalar>(m: &Matrix<S>, b: &[S]) -> SolutionSpace<S> {
    assert_eq!(m.rows(), b.len(), "right-hand side length");
    let nrows = m.rows();
    let ncols = m.cols();
    let mut a: Vec<Vec<S>> = (0..nrows)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();

    let mut prev = S::one();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(rank, p);
        let piv = a[rank][col].clone();
        for i in rank + 1..nrows {
            let lead = a[i][col].clone();
            for j in col + 1..=ncols {
                let num = piv.clone() * a[i][j].clone() - lead.clone() * a[rank][j].clone();
                a[i][j] = num.try_div(&prev).expect("Bareiss pivot is nonzero");
            }
            a[i][col] = S::zero();
        }
        prev = piv;
        pivots.push(col);
        rank += 1;
    }

    if a[rank..].iter().any(|row| !row[ncols].is_zero()) {
        return SolutionSpace::empty(ncols);
    }

    let back = |rhs: &dyn Fn(usize) -> S, fixed: &[(usize, S)]| -> Vec<S> {
        let mut x = vec![S::zero(); ncols];
        for (j, v) in fixed {
            x[*j] = v.clone();
        }
        for k in (0..rank).rev() {
            let pc = pivots[k];
            let mut acc = rhs(k);
            for j in pc + 1..ncols {
                if !a[k][j].is_zero() && !x[j].is_zero() {
                    acc = acc - a[k][j].clone() * x[j].clone();
                }
            }
            x[pc] = acc.try_div(&a[k][pc]).expect("pivot is nonzero");
        }
        x
    };

    let particular = back(&|k| a[k][ncols].clone(), &[]);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let basis = free.iter().map(|&f| back(&|_| S::zero(), &[(f, S::one())])).collect();
    SolutionSpace { ambient_dim: ncols, particular: Some(particular), basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::scalar::{int, Rational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn unique_solution() {
        let s = solve_linear(&m(&[&[1, 0], &[0, 1]]), &[int(1), int(2)]);
        assert_eq!(s.particular, Some(vec![int(1), int(2)]));
        assert!(s.basis.is_empty());
    }

    #[test]
    fn one_dim_kernel() {
        let s = solve_linear(&m(&[&[1, 1]]), &[int(0)]);
        assert_eq!(s.particular, Some(vec![int(0), int(0)]));
        assert_eq!(s.basis, vec![vec![int(-1), int(1)]]);
        assert!(s.contains(&[int(1), int(-1)]));
        assert!(!s.contains(&[int(1), int(1)]));
    }

    #[test]
    fn inconsistent_is_empty_not_zero() {
        let s = solve_linear(&m(&[&[1], &[1]]), &[int(0), int(1)]);
        assert!(s.is_empty());
        assert_eq!(s.dim(), None);
        let z = solve_linear(&m(&[&[1], &[1]]), &[int(0), int(0)]);
        assert!(z.is_zero_space());
        assert!(!z.is_empty());
    }

    #[test]
    fn rank_deficient_with_skipped_column() {
        // x + 2y + z = 3, 2x + 4y + 3z = 7 : y free, z = 1, x = 2 - 2y
        let s = solve_linear(&m(&[&[1, 2, 1], &[2, 4, 3]]), &[int(3), int(7)]);
        assert_eq!(s.particular, Some(vec![int(2), int(0), int(1)]));
        assert_eq!(s.basis, vec![vec![int(-2), int(1), int(0)]]);
    }

    #[test]
    fn canonical_identifies_equal_spaces() {
        let a = SolutionSpace {
            ambient_dim: 2,
            particular: Some(vec![int(1), int(1)]),
            basis: vec![vec![int(2), int(2)]],
        };
        let b = SolutionSpace {
            ambient_dim: 2,
            particular: Some(vec![int(3), int(3)]),
            basis: vec![vec![int(-1), int(-1)]],
        };
        assert!(a.same_space(&b));
        assert_eq!(a.canonical().particular, Some(vec![int(0), int(0)]));
    }
}
