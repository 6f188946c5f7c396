//! Items on linear structures: decomposition, isomorphisms, normal forms,
//! automorphism groups, derivations and the calculus identities.

use super::golden::{self, array, field, mismatch, usize_of, Env, Golden, E};
use super::{item, ItemResult, Outcome};
use crate::exactnum::{int, Matrix, Polynomial, QMatrix, Rational, Scalar, SolutionSpace};
use crate::linclass::{
    aut_member, bivector_of, classify as classify_pair, decompose, der0_catalog, der0_space, pair_of, pi_f,
    standard_pair,
};
use crate::multivec::{const_vf, curl_d, euler_vf, jacobi_cyclic, jacobiator, linear_vf, phi, phi_inv, schouten, MultiVectorField};
use crate::sample;

type Mvf = MultiVectorField<Rational>;

fn cases_with_a(case_id: u8) -> Vec<Rational> {
    if matches!(case_id, 8 | 9) {
        vec![int(1), int(2)]
    } else {
        vec![int(1)]
    }
}

pub(super) fn decomposition(g: &Golden) -> Vec<ItemResult> {
    let outcome = || -> Outcome {
        let mut rng = sample::rng(21);
        for n in 0..50 {
            let p = sample::linear_pair(&mut rng, 5);
            let pi = bivector_of(&p);
            let dec = decompose(&pi)?;
            let lambda_expected = pi_f(&p.f());
            if dec.k != p.k() || dec.lambda != lambda_expected {
                return Ok((false, format!("pair {n}: {}", mismatch(format!("k = {:?}, Λ = {lambda_expected}", p.k()), format!("k = {:?}, Λ = {}", dec.k, dec.lambda)))));
            }
            if !curl_d(&dec.lambda).is_zero() || !schouten(&const_vf(&dec.k), &dec.lambda)?.is_zero() {
                return Ok((false, format!("pair {n}: D(Λ) or [k̂,Λ] does not vanish")));
            }
            if pair_of(&pi)? != p {
                return Ok((false, format!("pair {n}: pair_of(bivector_of(p)) ≠ p")));
            }
        }
        Ok((true, "50/50 pairs: decompose∘bivector_of = id, D(Λ) = 0, [k̂,Λ] = 0".into()))
    };
    vec![item(g.label("decomposition", &[]), outcome())]
}

/// `Λ = x₃ ∂₁∧∂₂ + x₁ ∂₃∧∂₄` on R⁴.
fn lambda_n4() -> Mvf {
    let x = |i| Polynomial::var(4, i);
    MultiVectorField::term(4, &[0, 1], x(2)).add(&MultiVectorField::term(4, &[2, 3], x(0)))
}

pub(super) fn decomposition_n4(g: &Golden) -> Vec<ItemResult> {
    let outcome = || -> Outcome {
        let lam = lambda_n4();
        if !curl_d(&lam).is_zero() {
            return Ok((false, "D(Λ) ≠ 0 for the test bivector".into()));
        }
        let bracket = jacobiator(&lam)?;
        let rhs = curl_d(&lam.wedge(&lam)?);
        if bracket.is_zero() {
            return Ok((false, "[Λ,Λ] vanishes; the example is degenerate".into()));
        }
        let sign = if bracket == rhs {
            "+"
        } else if bracket == rhs.neg() {
            "−"
        } else {
            return Ok((false, mismatch(format!("±D(Λ∧Λ) = ±{rhs}"), format!("[Λ,Λ] = {bracket}"))));
        };
        let cyclic = jacobi_cyclic(&lam)?.scale(&int(-2));
        if cyclic != bracket {
            return Ok((false, mismatch(format!("−2·Jacobi sum = {cyclic}"), format!("[Λ,Λ] = {bracket}"))));
        }
        // so(3) ⊕ R with a modular twist along e₄
        let x = |i| Polynomial::var(4, i);
        let so3 = MultiVectorField::term(4, &[0, 1], x(2))
            .add(&MultiVectorField::term(4, &[1, 2], x(0)))
            .add(&MultiVectorField::term(4, &[0, 2], -x(1)));
        let e4 = vec![int(0), int(0), int(0), int(1)];
        let twisted = so3.add(&euler_vf(4).wedge(&const_vf(&e4))?.scale(&crate::exactnum::rat(1, 3)));
        let dec = decompose(&twisted)?;
        let ok = dec.k == e4 && curl_d(&dec.lambda).is_zero() && dec.lambda == so3;
        Ok((
            ok,
            format!(
                "[Λ,Λ] = {sign}D(Λ∧Λ) = {bracket} for Λ = {lam}; agrees with −2× the coordinate Jacobi sum; so(3)⊕R twisted by (1/3)Î∧ê₄ recovers k = e₄{}",
                if ok { "" } else { " — FAILED" }
            ),
        ))
    };
    vec![item(g.label("decomposition_n4", &[]), outcome())]
}

/// `(T_*π)^{ab}(y) = Σ T_ai T_bj π^{ij}(T⁻¹y)`.
fn pushforward(pi: &Mvf, t: &QMatrix) -> crate::Result<Mvf> {
    let inv = t.inverse()?;
    let entry = |i: usize, j: usize| match i.cmp(&j) {
        std::cmp::Ordering::Less => pi.component(&[i, j]),
        std::cmp::Ordering::Equal => Polynomial::zero(3),
        std::cmp::Ordering::Greater => -pi.component(&[j, i]),
    };
    let mut out = MultiVectorField::zero(3, 2);
    for a in 0..3 {
        for b in a + 1..3 {
            let mut c = Polynomial::zero(3);
            for i in 0..3 {
                for j in 0..3 {
                    let coef = t.get(a, i).clone() * t.get(b, j).clone();
                    if !coef.is_zero() {
                        c = c + entry(i, j).pullback(&inv)?.scale(&coef);
                    }
                }
            }
            out = out.add(&MultiVectorField::term(3, &[a, b], c));
        }
    }
    Ok(out)
}

pub(super) fn isomorphism(g: &Golden) -> Vec<ItemResult> {
    let outcome = || -> Outcome {
        let mut rng = sample::rng(22);
        for n in 0..50 {
            let p = sample::linear_pair(&mut rng, 4);
            let t = sample::invertible(&mut rng, 3, 3);
            let q = p.transform(&t)?;
            if !crate::linclass::is_isomorphism(&t, &p, &q)? {
                return Ok((false, format!("pair {n}: transform is not an isomorphism")));
            }
            let pushed = pushforward(&bivector_of(&p), &t)?;
            let direct = bivector_of(&q);
            if pushed != direct {
                return Ok((false, format!("pair {n}: {}", mismatch(format!("π_(Tk, det T·f∘T⁻¹) = {direct}"), format!("T_*π = {pushed}")))));
            }
        }
        Ok((true, "50/50 pairs: pushforward of the bivector equals the bivector of the transformed pair".into()))
    };
    vec![item(g.label("isomorphism", &[]), outcome())]
}

pub(super) fn standard_forms(g: &Golden) -> Vec<ItemResult> {
    let outcome = || -> Outcome {
        let mut notes = Vec::new();
        for entry in array(g.get("standard_forms")?)? {
            let case_id = usize_of(field(entry, "case")?)? as u8;
            let a_values: Vec<Rational> = match entry.get("a") {
                Some(v) => array(v)?.iter().map(|x| golden::rational(x, &Env::new())).collect::<crate::Result<_>>()?,
                None => vec![int(1)],
            };
            for a in a_values {
                let env = golden::env(&[("a", E::from_rational(&a))]);
                let p = standard_pair(case_id, &a)?;
                let k: Vec<E> = p.k().iter().map(E::from_rational).collect();
                let f: Polynomial<E> = p.f().lift();
                let k_gold = golden::vector(field(entry, "k")?, &env)?;
                let f_gold = golden::poly(field(entry, "f")?, &env)?;
                if k != k_gold || f != f_gold {
                    return Ok((false, format!("case {case_id}: {}", mismatch(format!("k = {k_gold:?}, f = {f_gold}"), format!("k = {k:?}, f = {f}")))));
                }
                let c = classify_pair(&p)?;
                let a2 = matches!(case_id, 8 | 9).then(|| &a * &a);
                if c.label.case_id != case_id || c.label.a_squared != a2 || pair_of(&bivector_of(&p))? != p {
                    return Ok((false, format!("case {case_id}: classifies as {}", c.label)));
                }
            }
            notes.push(case_id.to_string());
        }
        Ok((true, format!("cases {} match the listed (k, f), classify to themselves and round-trip", notes.join(", "))))
    };
    vec![item(g.label("standard_forms", &[]), outcome())]
}

fn classify_case(case_id: u8) -> Outcome {
    let mut rng = sample::rng(100 + case_id as u64);
    let mut count = 0;
    for a in cases_with_a(case_id) {
        let p = standard_pair(case_id, &a)?;
        let a2 = matches!(case_id, 8 | 9).then(|| &a * &a);
        for n in 0..100 {
            let t = sample::invertible(&mut rng, 3, 4);
            let q = p.transform(&t)?;
            let c = classify_pair(&q)?;
            if c.label.case_id != case_id || c.label.a_squared != a2 {
                let want = crate::linclass::StdFormLabel { case_id, a_squared: a2 };
                return Ok((false, format!("conjugate {n} by T = {t}: {}", mismatch(want, &c.label))));
            }
            if !c.witness.verify(&q, &c.label)? {
                return Ok((false, format!("conjugate {n}: witness fails the exact check")));
            }
            count += 1;
        }
    }
    let note = if matches!(case_id, 8 | 9) { ", a² ∈ {1, 4} preserved exactly" } else { "" };
    Ok((true, format!("{count}/{count} conjugates classify back with verified witnesses{note}")))
}

pub(super) fn classify(g: &Golden) -> Vec<ItemResult> {
    (1..=10u8).map(|c| item(g.label("classify", &[("case", c.to_string())]), classify_case(c))).collect()
}

/// Replaces one entry of `t` by a random value.
fn perturb(rng: &mut impl rand::Rng, t: &QMatrix) -> QMatrix {
    let mut m = t.clone();
    let (i, j) = (rng.gen_range(0..3), rng.gen_range(0..3));
    m.set(i, j, sample::small_rational(rng, 4));
    m
}

fn aut_case(case_id: u8) -> Outcome {
    let mut rng = sample::rng(200 + case_id as u64);
    let mut members = 0;
    let mut checked = 0;
    while checked < 500 {
        let t = if checked % 2 == 0 {
            sample::invertible(&mut rng, 3, 3)
        } else {
            {
            let m = sample::aut_constructed(&mut rng, case_id);
            perturb(&mut rng, &m)
        }
        };
        if t.det()?.is_zero() {
            continue;
        }
        members += aut_member(&t, case_id)? as usize;
        checked += 1;
    }
    for n in 0..50 {
        let t = sample::aut_constructed(&mut rng, case_id);
        if !aut_member(&t, case_id)? {
            return Ok((false, format!("constructed member {n} rejected: {t}")));
        }
    }
    Ok((true, format!("500 random (of which {members} members) + 50 constructed members; both paths agree on all 550")))
}

pub(super) fn aut(g: &Golden) -> Vec<ItemResult> {
    (1..=10u8).map(|c| item(g.label("aut", &[("case", c.to_string())]), aut_case(c))).collect()
}

fn der0_case(g: &Golden, entry: &serde_json::Value) -> Outcome {
    let case_id = usize_of(field(entry, "case")?)? as u8;
    let params = golden::names(field(entry, "params")?)?;
    let (base, dirs) = golden::family(&params, &Env::new(), |e| golden::rational_matrix(field(entry, "K")?, e), |a, b| a - b)?;
    if !base.is_zero() {
        return Err(crate::Error::Parse(format!("golden: Der₀ pattern of case {case_id} is not linear")));
    }
    let flat = |m: &QMatrix| m.to_rows().concat();
    let pattern = SolutionSpace { ambient_dim: 9, particular: Some(vec![int(0); 9]), basis: dirs.iter().map(flat).collect() };
    let dims = array(g.get("der0_dims")?)?;
    let want_dim = usize_of(&dims[case_id as usize - 1])?;
    let space = der0_space(case_id)?;
    let dim = space.dim().unwrap_or(0);
    let ok = dim == want_dim && pattern.dim() == Some(want_dim) && space.same_space(&pattern) && space.same_space(&der0_catalog(case_id)?);
    let shown: Vec<String> = space.basis.iter().map(|b| Matrix::new(3, 3, b.clone()).to_string()).collect();
    Ok((ok, format!("dim {dim} (expected {want_dim}); solved basis {}", shown.join(" "))))
}

pub(super) fn der0(g: &Golden) -> Vec<ItemResult> {
    let Ok(entries) = g.get("der0").and_then(array) else {
        return vec![item(g.label("der0", &[("case", "*".into())]), Err(crate::Error::Parse("golden entry 'der0' is missing".into())))];
    };
    entries
        .iter()
        .map(|e| {
            let case = e.get("case").map_or("?".into(), |c| c.to_string());
            item(g.label("der0", &[("case", case)]), der0_case(g, e))
        })
        .collect()
}

/// `[U,V] = (−1)^{ij} [V,U]` for the bracket as defined; its twist
/// `(−1)^{i+1}[U,V]` then obeys the usual `−(−1)^{(i−1)(j−1)}` rule.
fn antisymmetric(u: &Mvf, v: &Mvf) -> crate::Result<bool> {
    let (i, j) = (u.grade(), v.grade());
    let uv = schouten(u, v)?;
    let vu = schouten(v, u)?;
    let plain = if i * j % 2 == 1 { uv == vu.neg() } else { uv == vu };
    let twist = |w: Mvf, g: usize| if g % 2 == 1 { w } else { w.neg() };
    let (s_uv, s_vu) = (twist(uv, i), twist(vu, j));
    let usual = if (i + 1) * (j + 1) % 2 == 1 { s_uv == s_vu } else { s_uv == s_vu.neg() };
    Ok(plain && usual)
}

pub(super) fn properties(g: &Golden) -> Vec<ItemResult> {
    let outcome = || -> Outcome {
        let mut rng = sample::rng(23);
        let mut dd = 0;
        for n in [3, 4] {
            for grade in 0..=n {
                for _ in 0..20 {
                    let u = sample::multivector(&mut rng, n, grade, 2, 4);
                    if !curl_d(&curl_d(&u)).is_zero() {
                        return Ok((false, format!("D∘D ≠ 0 on {u}")));
                    }
                    if phi_inv(&phi(&u)?)? != u {
                        return Ok((false, format!("Φ⁻¹Φ ≠ id on {u}")));
                    }
                    dd += 1;
                }
            }
        }
        let mut anti = 0;
        for (i, j) in [(1, 1), (1, 2), (2, 2)] {
            for _ in 0..20 {
                let u = sample::multivector(&mut rng, 3, i, 2, 3);
                let v = sample::multivector(&mut rng, 3, j, 2, 3);
                if !antisymmetric(&u, &v)? {
                    return Ok((false, format!("graded antisymmetry fails for grades ({i},{j})")));
                }
                anti += 1;
            }
        }
        for _ in 0..30 {
            let a = sample::matrix(&mut rng, 3, 5);
            let k = sample::vector(&mut rng, 3, 5);
            let ahat = linear_vf(&a)?;
            if curl_d(&ahat) != MultiVectorField::scalar(Polynomial::constant(3, a.trace())) {
                return Ok((false, format!("div Â ≠ tr A for A = {a}")));
            }
            let lhs = schouten(&ahat, &const_vf(&k))?;
            let rhs = const_vf(&a.mul_vec(&k)).neg();
            if lhs != rhs {
                return Ok((false, mismatch(format!("−(Ak)^ = {rhs}"), format!("[Â,k̂] = {lhs}"))));
            }
            let pi = bivector_of(&sample::linear_pair(&mut rng, 4));
            if schouten(&euler_vf(3), &pi)? != pi.neg() {
                return Ok((false, format!("[Î,π] ≠ −π for π = {pi}")));
            }
        }
        Ok((true, format!("D∘D = 0 and Φ⁻¹Φ = id on {dd} fields; antisymmetry on {anti} pairs; div Â, [Â,k̂], [Î,π] on 30 samples each")))
    };
    vec![item(g.label("properties", &[]), outcome())]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pushforward_by_identity() {
        let p = standard_pair(8, &int(1)).unwrap();
        let pi = bivector_of(&p);
        assert_eq!(pushforward(&pi, &Matrix::identity(3)).unwrap(), pi);
    }

    #[test]
    fn lambda_is_unimodular_but_not_poisson() {
        let l = lambda_n4();
        assert!(curl_d(&l).is_zero());
        assert!(!jacobiator(&l).unwrap().is_zero());
    }
}
