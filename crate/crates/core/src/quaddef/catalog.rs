//! Deformation catalogs: the solver driven across orbit representatives.

use super::{enumerate_orbit_pairs, solve_f, JordanFamily, P2Point};
use crate::error::Result;
use crate::exactnum::{ExtScalar, Matrix, QMatrix, Rational, SolutionSpace};
use crate::linclass::standard_pair;

/// What to deform with: every orbit of a Jordan family, or one explicit `K`.
#[derive(Clone, PartialEq, Debug)]
pub enum KSpec {
    Family(JordanFamily),
    Explicit(QMatrix),
}

/// Deformations of one standard pair by one `K`.
#[derive(Clone, PartialEq, Debug)]
pub struct CatalogEntry {
    /// 1-based orbit index; always 1 for an explicit `K`.
    pub orbit: usize,
    pub rep: Option<P2Point>,
    pub k: Matrix<ExtScalar>,
    pub solution: SolutionSpace<ExtScalar>,
}

/// Solves for `F` against the standard pair of `case_id` (parameter `a` for
/// cases 8 and 9), ordered by orbit index.
pub fn catalog(case_id: u8, a: &Rational, spec: &KSpec) -> Result<Vec<CatalogEntry>> {
    let lp = standard_pair(case_id, a)?;
    match spec {
        KSpec::Explicit(k) => {
            let k = super::lift_matrix(k);
            let solution = solve_f(&lp, &k)?;
            Ok(vec![CatalogEntry { orbit: 1, rep: None, k, solution }])
        }
        KSpec::Family(fam) => enumerate_orbit_pairs(fam)?
            .into_iter()
            .map(|p| {
                let solution = solve_f(&lp, &p.k)?;
                Ok(CatalogEntry { orbit: p.rep.index, rep: Some(p.rep.point), k: p.k, solution })
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, Polynomial, Scalar};

    fn x(i: usize) -> Polynomial<ExtScalar> {
        Polynomial::var(3, i)
    }

    fn point(p: Polynomial<ExtScalar>) -> SolutionSpace<ExtScalar> {
        SolutionSpace::point(p.coeff_vector(3))
    }

    #[test]
    fn book_algebra_distinct() {
        let fam = JordanFamily::DiagDistinct([int(1), int(2), int(-3)]);
        let entries = catalog(7, &int(1), &KSpec::Family(fam)).unwrap();
        assert_eq!(entries.len(), 7);
        let sixth = ExtScalar::from_i64(6).try_inv().unwrap();
        let xyz = &(&x(0) * &x(1)) * &x(2);
        assert!(entries[0].solution.same_space(&point(xyz.scale(&sixth))));
        for e in &entries[3..] {
            assert!(e.solution.is_empty(), "orbit {}", e.orbit);
        }
    }

    #[test]
    fn case_ten_repeated() {
        let fam = JordanFamily::DiagRepeated(int(1));
        let entries = catalog(10, &int(1), &KSpec::Family(fam)).unwrap();
        let want = (&x(0).pow(2) * &x(2)).scale(&ExtScalar::from_i64(-2));
        assert!(entries[0].solution.same_space(&point(want)));
    }
}
