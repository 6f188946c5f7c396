use super::{sort_with_sign, DifferentialForm, Graded, MultiVectorField};
use crate::error::{Error, Result};
use crate::exactnum::{Polynomial, Scalar};

fn complement(idx: &[usize], n: usize) -> Vec<usize> {
    (0..n).filter(|i| !idx.contains(i)).collect()
}

fn concat_sign(a: &[usize], b: &[usize]) -> i8 {
    let joined: Vec<usize> = a.iter().chain(b).copied().collect();
    sort_with_sign(&joined).expect("disjoint index sets").1
}

/// Contraction with the volume form: `∂_I ↦ sgn(I, Iᶜ)·dx_{Iᶜ}`.
pub fn phi<S: Scalar>(u: &MultiVectorField<S>) -> Result<DifferentialForm<S>> {
    let n = u.nvars();
    if u.grade() > n {
        return Err(Error::BadGrade { grade: u.grade(), n });
    }
    let mut out = Graded::zero(n, n - u.grade());
    for (idx, p) in u.components() {
        let c = complement(idx, n);
        out.accumulate(&c, p.clone(), concat_sign(idx, &c));
    }
    Ok(DifferentialForm(out))
}

/// Inverse of [`phi`].
pub fn phi_inv<S: Scalar>(w: &DifferentialForm<S>) -> Result<MultiVectorField<S>> {
    let n = w.nvars();
    if w.grade() > n {
        return Err(Error::BadGrade { grade: w.grade(), n });
    }
    let mut out = Graded::zero(n, n - w.grade());
    for (idx, p) in w.components() {
        let c = complement(idx, n);
        out.accumulate(&c, p.clone(), concat_sign(&c, idx));
    }
    Ok(MultiVectorField(out))
}

/// Exterior derivative.
pub fn ext_deriv<S: Scalar>(w: &DifferentialForm<S>) -> DifferentialForm<S> {
    let n = w.nvars();
    let mut out = Graded::zero(n, w.grade() + 1);
    if w.grade() >= n {
        return DifferentialForm(out);
    }
    for (idx, p) in w.components() {
        for j in 0..n {
            let mut k = Vec::with_capacity(idx.len() + 1);
            k.push(j);
            k.extend_from_slice(idx);
            out.accumulate(&k, p.derivative(j), 1);
        }
    }
    DifferentialForm(out)
}

/// The curl operator `D = (−1)^{k+1} Φ⁻¹ ∘ d ∘ Φ` on grade-k fields.
///
/// With this sign `D(Â) = tr A` for the linear field of a matrix `A`. It
/// lowers the grade by one and vanishes on functions.
pub fn curl_d<S: Scalar>(u: &MultiVectorField<S>) -> MultiVectorField<S> {
    let n = u.nvars();
    let k = u.grade();
    if k == 0 || u.is_zero() {
        return MultiVectorField::zero(n, k.saturating_sub(1));
    }
    let w = phi(u).expect("nonzero field has grade <= n");
    let v = phi_inv(&ext_deriv(&w)).expect("d raises grade by one, at most to n");
    if k % 2 == 0 {
        v.neg()
    } else {
        v
    }
}

/// Schouten bracket, `[U,V] = D(U∧V) − D(U)∧V − (−1)^i U∧D(V)` for `U` of
/// grade i. Result has grade `i + j − 1` (0 when both are functions).
pub fn schouten<S: Scalar>(
    u: &MultiVectorField<S>,
    v: &MultiVectorField<S>,
) -> Result<MultiVectorField<S>> {
    let n = u.nvars();
    if v.nvars() != n {
        return Err(Error::DimensionMismatch { expected: n, found: v.nvars() });
    }
    let (i, j) = (u.grade(), v.grade());
    if i + j == 0 {
        return Ok(MultiVectorField::zero(n, 0));
    }
    let mut out = curl_d(&u.wedge(v)?);
    if i > 0 {
        out = out.sub(&curl_d(u).wedge(v)?);
    }
    if j > 0 {
        let t = u.wedge(&curl_d(v))?;
        out = if i % 2 == 0 { out.sub(&t) } else { out.add(&t) };
    }
    Ok(out)
}

fn require_bivector<S: Scalar>(pi: &MultiVectorField<S>) -> Result<()> {
    if pi.grade() != 2 {
        return Err(Error::BadGrade { grade: pi.grade(), n: pi.nvars() });
    }
    Ok(())
}

/// Modular vector field `D(π)` of a bivector.
pub fn modular_field<S: Scalar>(pi: &MultiVectorField<S>) -> Result<MultiVectorField<S>> {
    require_bivector(pi)?;
    Ok(curl_d(pi))
}

/// `[π, π]`; it vanishes exactly when π satisfies the Jacobi identity.
pub fn jacobiator<S: Scalar>(pi: &MultiVectorField<S>) -> Result<MultiVectorField<S>> {
    require_bivector(pi)?;
    schouten(pi, pi)
}

/// Coordinate Jacobi sum `{x_i,{x_j,x_k}} + cyclic` for `i < j < k`, with
/// `{x_i, x_j} = π^{ij}`; independent of the curl operator.
pub fn jacobi_cyclic<S: Scalar>(pi: &MultiVectorField<S>) -> Result<MultiVectorField<S>> {
    require_bivector(pi)?;
    let n = pi.nvars();
    let entry = |i: usize, j: usize| -> Polynomial<S> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => pi.component(&[i, j]),
            std::cmp::Ordering::Equal => Polynomial::zero(n),
            std::cmp::Ordering::Greater => -pi.component(&[j, i]),
        }
    };
    // {x_a, g} = Σ_l π^{al} ∂_l g
    let ham = |a: usize, g: &Polynomial<S>| -> Polynomial<S> {
        (0..n).fold(Polynomial::zero(n), |acc, l| acc + &entry(a, l) * &g.derivative(l))
    };
    let mut out = MultiVectorField::zero(n, 3);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let c = ham(i, &entry(j, k)) + ham(j, &entry(k, i)) + ham(k, &entry(i, j));
                out = out.add(&MultiVectorField::term(n, &[i, j, k], c));
            }
        }
    }
    Ok(out)
}

pub fn is_poisson<S: Scalar>(pi: &MultiVectorField<S>) -> Result<bool> {
    Ok(jacobiator(pi)?.is_zero())
}
