//! Items on quadratic deformations: the deformation identity, the catalogs
//! of the unimodular cases and the orbit machinery of the non-unimodular
//! ones.

use rand::Rng;
use serde_json::Value;

use super::golden::{self, array, field, mismatch, names, show_space, span, string, usize_of, Env, Golden, E};
use super::{item, ItemResult, Outcome};
use crate::error::{Error, Result};
use crate::exactnum::{int, Matrix, Polynomial, QMatrix, QPoly, Rational, Scalar, SolutionSpace};
use crate::linclass::{der0_space, quadratic_form, standard_pair, LinearPair};
use crate::quaddef::{
    catalog, coset_rep_g10, cubic, cubic_kernel, deform_check, deform_check_bracket, deform_check_identity,
    enumerate_orbit_pairs, ktilde as ktilde_of, orbit_reps, p2_orbit_rep, solve_f, t_of_v as rotation_of, transform_pair,
    transform_space, JordanFamily, KSpec, OrbitPair, P2Point, QuadraticPair,
};
use crate::sample;

fn lift(m: &QMatrix) -> Matrix<E> {
    m.map(E::from_rational)
}

fn flat(m: &QMatrix) -> Vec<Rational> {
    m.to_rows().concat()
}

/// Random point of a solution space (`None` when empty).
fn random_member<S: Scalar>(rng: &mut impl Rng, space: &SolutionSpace<S>) -> Option<Vec<S>> {
    let coeffs: Vec<S> = space.basis.iter().map(|_| S::from_rational(&sample::small_rational(rng, 4))).collect();
    space.member(&coeffs)
}

pub(super) fn ktilde(g: &Golden) -> Vec<ItemResult> {
    let outcome = || -> Outcome {
        let e3 = [int(0), int(0), int(1)];
        let kt = ktilde_of(&e3);
        let want = Matrix::from_rows(vec![vec![int(0), int(-1), int(0)], vec![int(1), int(0), int(0)], vec![int(0); 3]]);
        if kt != want {
            return Ok((false, mismatch(&want, &kt)));
        }
        if !ktilde_of(&[int(0), int(0), int(0)]).is_zero() {
            return Ok((false, "k̃ of 0 is not 0".into()));
        }
        let mut rng = sample::rng(31);
        let x = |i| QPoly::var(3, i);
        for _ in 0..25 {
            let k = sample::traceless(&mut rng, 6);
            let a = |i: usize, j: usize| k.get(i - 1, j - 1).clone();
            // −a₂₁x² + a₁₂y² + (a₁₁−a₂₂)xy + a₁₃yz − a₂₃xz
            let expansion = x(0).pow(2).scale(&-a(2, 1))
                + x(1).pow(2).scale(&a(1, 2))
                + (&x(0) * &x(1)).scale(&(a(1, 1) - a(2, 2)))
                + (&x(1) * &x(2)).scale(&a(1, 3))
                - (&x(0) * &x(2)).scale(&a(2, 3));
            let computed = quadratic_form(&(&kt * &k));
            if computed != expansion {
                return Ok((false, format!("K = {k}: {}", mismatch(&expansion, &computed))));
            }
        }
        Ok((true, format!("k̃(e₃) = {kt}; X(k̃K)Xᵀ matches the expansion on 25 random K")))
    };
    vec![item(g.label("ktilde", &[]), outcome())]
}

/// Jordan normal forms with rational entries.
fn jordan_sample(rng: &mut impl Rng) -> QMatrix {
    match rng.gen_range(0..3) {
        0 => {
            let (a, b) = loop {
                let (a, b) = (sample::nonzero(rng, 4), sample::nonzero(rng, 4));
                let c = -(&a + &b);
                if a != b && a != c && b != c && !c.is_zero() {
                    break (a, b);
                }
            };
            let c = -(&a + &b);
            Matrix::diag(&[a, b, c])
        }
        1 => {
            let l = sample::nonzero(rng, 4);
            Matrix::diag(&[l.clone(), l.clone(), l * int(-2)])
        }
        _ => JordanFamily::NilpotentFull.matrix().expect("nilpotent block"),
    }
}

fn conjugate(t: &QMatrix, k: &QMatrix) -> Result<QMatrix> {
    Ok(&(t * k) * &t.inverse()?)
}

/// Rational orbit representatives `Kᵢ` that admit deformations of the book
/// algebra or of case (10).
fn solvable_reps(rng: &mut impl Rng) -> Result<(u8, QMatrix)> {
    let lam = sample::nonzero(rng, 3);
    Ok(match rng.gen_range(0..4) {
        0 => {
            let fam = JordanFamily::DiagDistinct([int(1), int(2), int(-3)]);
            let pairs = enumerate_orbit_pairs(&fam)?;
            let i = rng.gen_range(0..3);
            (7, pairs[i].k.map(|e| e.as_rational().expect("rational rep")))
        }
        1 => (7, Matrix::diag(&[int(-2) * &lam, lam.clone(), lam])),
        2 => {
            let pairs = enumerate_orbit_pairs(&JordanFamily::NilpotentFull)?;
            let i = rng.gen_range(1..3);
            (7, pairs[i].k.map(|e| e.as_rational().expect("rational rep")))
        }
        _ => (10, Matrix::diag(&[lam.clone(), lam.clone(), int(-2) * lam])),
    })
}

pub(super) fn deform_paths(g: &Golden) -> Vec<ItemResult> {
    let outcome = || -> Outcome {
        let mut rng = sample::rng(32);
        let (mut yes, mut no) = (0, 0);
        for n in 0..200 {
            let (lp, k, f) = if n % 2 == 0 {
                let lp = sample::linear_pair(&mut rng, 4);
                let k = match rng.gen_range(0..2) {
                    0 => sample::traceless(&mut rng, 4),
                    _ => conjugate(&sample::invertible(&mut rng, 3, 2), &jordan_sample(&mut rng))?,
                };
                let f = cubic(&random_member(&mut rng, &cubic_kernel(&k)?).expect("kernel contains 0"));
                (lp, k, f)
            } else {
                let (case_id, k) = solvable_reps(&mut rng)?;
                let lp = standard_pair(case_id, &int(1))?;
                let space = if rng.gen_bool(0.75) { solve_f(&lp, &k)? } else { cubic_kernel(&k)? };
                let space = if space.is_empty() { cubic_kernel(&k)? } else { space };
                let f = cubic(&random_member(&mut rng, &space).expect("nonempty"));
                let t = sample::invertible(&mut rng, 3, 2);
                let moved = transform_pair(&t, &QuadraticPair::new(k, f)?)?;
                (lp.transform(&t)?, moved.k().clone(), moved.f().clone())
            };
            let qp = QuadraticPair::new(k, f)?;
            let direct = deform_check_bracket(&lp, &qp);
            let identity = deform_check_identity(&lp, &qp);
            if direct != identity {
                return Ok((false, format!("tuple {n}: bracket says {direct}, identity says {identity} for K = {}, F = {}", qp.k(), qp.f())));
            }
            if direct {
                yes += 1;
            } else {
                no += 1;
            }
        }
        Ok((yes > 0 && no > 0, format!("200 tuples, 0 mismatches ({yes} deform, {no} do not)")))
    };
    vec![item(g.label("deform_paths", &[]), outcome())]
}

pub(super) fn deform_unimodular(g: &Golden) -> Vec<ItemResult> {
    let outcome = || -> Outcome {
        let mut rng = sample::rng(33);
        let (mut inside, mut outside) = (0, 0);
        for case_id in 1..=6u8 {
            let lp = standard_pair(case_id, &int(1))?;
            let der0 = der0_space(case_id)?;
            for n in 0..16 {
                let k = if n % 2 == 0 {
                    Matrix::new(3, 3, random_member(&mut rng, &der0).expect("subspace"))
                } else {
                    sample::traceless(&mut rng, 3)
                };
                let member = der0.contains(&flat(&k));
                let verdict = deform_check(&lp, &QuadraticPair::new(k.clone(), Polynomial::zero(3))?)?;
                if member != verdict {
                    return Ok((false, format!("case {case_id}, K = {k}: K ∈ Der₀ is {member} but (K, 0) deforms is {verdict}")));
                }
                if member {
                    let f = cubic(&random_member(&mut rng, &cubic_kernel(&k)?).expect("kernel contains 0"));
                    if !deform_check(&lp, &QuadraticPair::new(k.clone(), f.clone())?)? {
                        return Ok((false, format!("case {case_id}, K = {k} ∈ Der₀ with K̂F = 0, F = {f}: no deformation")));
                    }
                    inside += 1;
                } else {
                    outside += 1;
                }
            }
        }
        Ok((true, format!("cases 1–6: {inside} K ∈ Der₀ deform with every admissible F, {outside} K ∉ Der₀ do not deform with F = 0")))
    };
    vec![item(g.label("deform_unimodular", &[]), outcome())]
}

pub(super) fn equivariance(g: &Golden) -> Vec<ItemResult> {
    let outcome = || -> Outcome {
        let mut rng = sample::rng(34);
        let (mut total, mut nonempty) = (0, 0);
        for case_id in [2u8, 3, 7, 8, 9, 10] {
            let lp = standard_pair(case_id, &int(1))?;
            for _ in 0..6 {
                let k = if case_id <= 6 {
                    Matrix::new(3, 3, random_member(&mut rng, &der0_space(case_id)?).expect("subspace"))
                } else {
                    let (_, k) = solvable_reps(&mut rng)?;
                    k
                };
                let t = sample::aut_constructed(&mut rng, case_id);
                let moved = solve_f(&lp, &conjugate(&t, &k)?)?;
                let image = transform_space(&solve_f(&lp, &k)?, &t.inverse()?, &t.det()?)?;
                if !moved.same_space(&image) {
                    return Ok((false, format!("case {case_id}, K = {k}, T = {t}: {}", mismatch(show_space(&image), show_space(&moved)))));
                }
                total += 1;
                nonempty += !moved.is_empty() as usize;
            }
        }
        Ok((true, format!("{total} samples over cases 2, 3, 7, 8, 9, 10 ({nonempty} with deformations): solve_F(TKT⁻¹) = T·solve_F(K)")))
    };
    vec![item(g.label("equivariance", &[]), outcome())]
}

fn catalog_family(lp: &LinearPair, k: &Matrix<E>, expr: &Value, params: &[String], env: &Env) -> Outcome {
    let want = span(&golden::poly_family(expr, params, env)?);
    let got = solve_f(lp, k)?;
    Ok((got.same_space(&want), format!("K = {k}: {}", mismatch(show_space(&want), show_space(&got)))))
}

pub(super) fn o3(g: &Golden) -> Vec<ItemResult> {
    let outcome = || -> Outcome {
        let data = g.get("o3")?;
        let lp = standard_pair(usize_of(field(data, "case")?)? as u8, &int(1))?;
        let params = names(field(data, "params")?)?;
        let mut notes = Vec::new();
        let mut ok = true;
        for alpha in [1, 2] {
            let env = golden::env(&[("alpha", E::from_i64(alpha))]);
            let k = golden::matrix(field(data, "K")?, &env)?;
            let (pass, note) = catalog_family(&lp, &k, field(data, "F")?, &params, &env)?;
            ok &= pass;
            notes.push(format!("α = {alpha}: {note}"));
        }
        Ok((ok, notes.join("; ")))
    };
    vec![item(g.label("o3", &[]), outcome())]
}

fn o21_orbit(g: &Golden, entry: &Value) -> Outcome {
    let data = g.get("o21")?;
    let lp = standard_pair(usize_of(field(data, "case")?)? as u8, &int(1))?;
    let params = names(field(entry, "params")?)?;
    let signs: Vec<i64> = match entry.get("signs") {
        Some(s) => array(s)?.iter().map(|v| v.as_i64().ok_or_else(|| Error::Parse(format!("golden: bad sign {v}")))).collect::<Result<_>>()?,
        None => vec![1],
    };
    let coords = golden::matrix(field(data, "xi_eta")?, &Env::new())?;
    let mut notes = Vec::new();
    let mut ok = true;
    for alpha in [1, 2] {
        for &sign in &signs {
            let env = golden::env(&[("alpha", E::from_i64(alpha))]);
            let k = golden::matrix(field(entry, "K")?, &env)?.scale(&E::from_i64(sign));
            let (pass, note) = catalog_family(&lp, &k, field(entry, "F")?, &params, &env)?;
            ok &= pass;
            if entry.get("signs").is_some() {
                // the same comparison in the coordinates x = ξ+η, y = ξ−η
                let want = span(&golden::poly_family(field(entry, "F")?, &params, &env)?);
                let got = solve_f(&lp, &k)?;
                let (want, got) = (transform_space(&want, &coords, &E::one())?, transform_space(&got, &coords, &E::one())?);
                ok &= want.same_space(&got);
                notes.push(format!("sign {sign:+}: {note}; in (ξ, η, z): {}", show_space(&got).replace('x', "ξ").replace('y', "η")));
            } else if alpha == 1 {
                notes.push(note);
            }
        }
    }
    Ok((ok, notes.join("; ")))
}

pub(super) fn o21(g: &Golden) -> Vec<ItemResult> {
    let entries = match g.get("o21").and_then(|d| field(d, "orbits")).and_then(array) {
        Ok(e) => e.clone(),
        Err(e) => return vec![item(g.label("o21", &[("orbit", "*".into())]), Err(e))],
    };
    entries
        .iter()
        .map(|e| {
            let orbit = e.get("orbit").map_or("?".into(), |o| o.to_string());
            item(g.label("o21", &[("orbit", orbit)]), o21_orbit(g, e))
        })
        .collect()
}

fn is_rotation(t: &Matrix<E>) -> bool {
    &t.transpose() * t == Matrix::identity(3) && t.det().is_ok_and(|d| d == E::one())
}

pub(super) fn t_of_v(g: &Golden) -> Vec<ItemResult> {
    let outcome = || -> Outcome {
        let data = g.get("t_of_v")?;
        let env = Env::new();
        let p5 = field(data, "p5")?;
        let v5 = golden::vector(field(p5, "v")?, &env)?;
        let t5 = rotation_of(&[v5[0].clone(), v5[1].clone(), v5[2].clone()])?;
        let want5 = golden::matrix(field(p5, "T")?, &env)?;
        if t5 != want5 {
            return Ok((false, format!("p₅: {}", mismatch(&want5, &t5))));
        }
        let v7 = golden::vector(field(field(data, "p7")?, "v")?, &env)?;
        let t7 = rotation_of(&[v7[0].clone(), v7[1].clone(), v7[2].clone()])?;
        if !is_rotation(&t7) || t7.row(2) != v7.as_slice() {
            return Ok((false, format!("p₇: T = {t7} is not a rotation with last row v")));
        }
        if rotation_of(&[E::zero(), E::zero(), E::one()])? != Matrix::identity(3) {
            return Ok((false, "T(e₃) ≠ I".into()));
        }
        let mut reps = 0;
        for fam in [JordanFamily::DiagDistinct([int(1), int(2), int(-3)]), JordanFamily::DiagRepeated(int(1)), JordanFamily::NilpotentFull] {
            for r in orbit_reps(&fam)? {
                if !is_rotation(&r.t) || r.t.row(2) != r.point.coords().as_slice() {
                    return Ok((false, format!("{fam} orbit {}: T = {} is not a rotation with last row p", r.index, r.t)));
                }
                reps += 1;
            }
        }
        Ok((true, format!("T(p₅) = {t5}; T(p₇) = {t7}; all {reps} representatives give TᵀT = I, det T = 1, last row p")))
    };
    vec![item(g.label("t_of_v", &[]), outcome())]
}

fn random_point(rng: &mut impl Rng) -> Result<P2Point> {
    loop {
        let c: Vec<Rational> = (0..3).map(|_| if rng.gen_bool(0.4) { int(0) } else { sample::nonzero(rng, 6) }).collect();
        if c.iter().any(|v| !v.is_zero()) {
            return P2Point::from_rationals([c[0].clone(), c[1].clone(), c[2].clone()]);
        }
    }
}

pub(super) fn orbit_counts(g: &Golden) -> Vec<ItemResult> {
    let outcome = || -> Outcome {
        let want = g.get("orbit_counts")?;
        let mut rng = sample::rng(35);
        let mut notes = Vec::new();
        let mut ok = true;
        for fam in [JordanFamily::DiagDistinct([int(1), int(2), int(-3)]), JordanFamily::DiagRepeated(int(1)), JordanFamily::NilpotentFull] {
            let mut seen = std::collections::BTreeSet::new();
            for _ in 0..1000 {
                seen.insert(p2_orbit_rep(&fam, &random_point(&mut rng)?)?.index);
            }
            let expected = usize_of(field(want, fam.name())?)?;
            ok &= seen.len() == expected;
            notes.push(format!("{}: {} (expected {expected})", fam.name(), seen.len()));
        }
        Ok((ok, notes.join(", ")))
    };
    vec![item(g.label("orbit_counts", &[]), outcome())]
}

/// Instantiations of the family named in the golden data, with the
/// environment binding its eigenvalue symbols.
fn probes(g: &Golden, kind: &str) -> Result<Vec<(JordanFamily, Env, String)>> {
    let probes = g.get("probes")?;
    match kind {
        "distinct" => array(field(probes, "distinct")?)?
            .iter()
            .map(|p| {
                let l = golden::vector(p, &Env::new())?;
                let q: Vec<Rational> = l.iter().map(|v| v.as_rational().ok_or_else(|| Error::Parse(format!("golden: irrational probe {v}")))).collect::<Result<_>>()?;
                let env = golden::env(&[("l1", l[0].clone()), ("l2", l[1].clone()), ("l3", l[2].clone())]);
                let tag = format!("λ = ({}, {}, {})", q[0], q[1], q[2]);
                Ok((JordanFamily::DiagDistinct([q[0].clone(), q[1].clone(), q[2].clone()]), env, tag))
            })
            .collect(),
        "repeated" => array(field(probes, "repeated")?)?
            .iter()
            .map(|p| {
                let l = golden::rational(p, &Env::new())?;
                Ok((JordanFamily::DiagRepeated(l.clone()), golden::env(&[("lam", E::from_rational(&l))]), format!("λ = {l}")))
            })
            .collect(),
        "nilpotent" => Ok(vec![(JordanFamily::NilpotentFull, Env::new(), "nilpotent".into())]),
        other => Err(Error::Parse(format!("golden: unknown family '{other}'"))),
    }
}

/// Compares one orbit of an enumeration with its golden entry.
fn lemma_orbit(pair: &OrbitPair, entry: &Value, params: &[String], env: &Env) -> Outcome {
    let p = golden::vector(field(entry, "p")?, env)?;
    let point = P2Point::new([p[0].clone(), p[1].clone(), p[2].clone()])?;
    if pair.rep.point != point {
        return Ok((false, format!("representative: {}", mismatch(&point, &pair.rep.point))));
    }
    let k = golden::matrix(field(entry, "K")?, env)?;
    if pair.k != k {
        return Ok((false, format!("K: {}", mismatch(&k, &pair.k))));
    }
    if let Some(z3) = entry.get("F_z3") {
        let want = golden::scalar(z3, &golden::with(env, &[("a", E::one())]))?;
        let got = pair.f_basis[0].coeff_of(&[0, 0, 3]);
        return Ok((want == got, format!("K matches; z³ coefficient of F: {}", mismatch(&want, &got))));
    }
    let want = golden::poly_family(field(entry, "F")?, params, env)?;
    if !span(&want).same_space(&span(&pair.f_basis)) {
        let show = |b: &[Polynomial<E>]| b.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        return Ok((false, format!("K matches; F family: {}", mismatch(format!("span{{{}}}", show(&want)), format!("span{{{}}}", show(&pair.f_basis))))));
    }
    let mut notes = Vec::new();
    for (name, (w, got)) in params.iter().zip(want.iter().zip(&pair.f_basis)) {
        if w == got {
            continue;
        }
        if *w == -got.clone() {
            notes.push(format!("parameter {name} enters with the opposite sign"));
        } else {
            notes.push(format!("parameter {name} enters through a change of parameters"));
        }
    }
    let notes = if notes.is_empty() { String::new() } else { format!(" ({})", notes.join("; ")) };
    Ok((true, format!("p, K and the F family match{notes}")))
}

fn lemma(g: &Golden, key: &str) -> Vec<ItemResult> {
    let count_key = format!("{key}_count");
    let setup = || -> Result<(Vec<Value>, Vec<String>, Vec<(JordanFamily, Env, String, Vec<OrbitPair>)>)> {
        let data = g.get(key)?;
        let orbits = array(field(data, "orbits")?)?.clone();
        let params = names(field(data, "params")?)?;
        let runs = probes(g, string(field(data, "family")?)?)?
            .into_iter()
            .map(|(fam, env, tag)| enumerate_orbit_pairs(&fam).map(|pairs| (fam, env, tag, pairs)))
            .collect::<Result<_>>()?;
        Ok((orbits, params, runs))
    };
    let (orbits, params, runs) = match setup() {
        Ok(s) => s,
        Err(e) => return vec![item(g.label(&count_key, &[]), Err(e))],
    };
    let count = || -> Outcome {
        let counts = g.get("orbit_counts")?;
        let mut notes = Vec::new();
        let mut ok = true;
        for (fam, _, tag, pairs) in &runs {
            let want = usize_of(field(counts, fam.name())?)?;
            ok &= pairs.len() == want && orbits.len() == want;
            notes.push(format!("{tag}: {} representatives", pairs.len()));
        }
        Ok((ok, notes.join("; ")))
    };
    let mut out = vec![item(g.label(&count_key, &[]), count())];
    for entry in &orbits {
        let orbit = entry.get("orbit").and_then(Value::as_u64).unwrap_or(0) as usize;
        let outcome = || -> Outcome {
            let mut notes = Vec::new();
            let mut ok = true;
            for (_, env, tag, pairs) in &runs {
                let pair = pairs.get(orbit.wrapping_sub(1)).ok_or_else(|| Error::Parse(format!("golden: no orbit {orbit}")))?;
                let (pass, note) = lemma_orbit(pair, entry, &params, env)?;
                ok &= pass;
                notes.push(format!("{tag}: {note}"));
            }
            Ok((ok, notes.join("; ")))
        };
        out.push(item(g.label(key, &[("orbit", orbit.to_string())]), outcome()));
    }
    out
}

pub(super) fn lemma51(g: &Golden) -> Vec<ItemResult> {
    lemma(g, "lemma51")
}

pub(super) fn lemma52(g: &Golden) -> Vec<ItemResult> {
    lemma(g, "lemma52")
}

pub(super) fn lemma53(g: &Golden) -> Vec<ItemResult> {
    lemma(g, "lemma53")
}

fn verdict(entry: &Value) -> String {
    if entry.get("empty").and_then(Value::as_bool) == Some(true) {
        return "empty".into();
    }
    let basis = entry.get("basis").and_then(Value::as_array).map_or(0, Vec::len);
    let zero = entry.get("particular").and_then(Value::as_str) == Some("0");
    match (basis, zero) {
        (0, true) => "F = 0 only".into(),
        (0, false) => "unique F".into(),
        (n, _) => format!("{n}-parameter family"),
    }
}

fn prop(g: &Golden, key: &str, kind: &str) -> Vec<ItemResult> {
    let setup = || -> Result<(u8, Vec<Value>, Vec<(Env, String, Vec<crate::quaddef::CatalogEntry>)>)> {
        let data = g.get(key)?;
        let case_id = usize_of(field(data, "case")?)? as u8;
        let orbits = array(field(data, "orbits")?)?.clone();
        let runs = probes(g, kind)?
            .into_iter()
            .map(|(fam, env, tag)| catalog(case_id, &int(1), &KSpec::Family(fam)).map(|c| (env, tag, c)))
            .collect::<Result<_>>()?;
        Ok((case_id, orbits, runs))
    };
    let (case_id, orbits, runs) = match setup() {
        Ok(s) => s,
        Err(e) => return vec![item(g.label(key, &[("orbit", "*".into()), ("verdict", "setup".into())]), Err(e))],
    };
    orbits
        .iter()
        .map(|entry| {
            let orbit = entry.get("orbit").and_then(Value::as_u64).unwrap_or(0) as usize;
            let outcome = || -> Outcome {
                let lp = standard_pair(case_id, &int(1))?;
                let mut notes = Vec::new();
                let mut ok = true;
                for (env, tag, entries) in &runs {
                    let e = entries.get(orbit.wrapping_sub(1)).ok_or_else(|| Error::Parse(format!("golden: no orbit {orbit}")))?;
                    let want = golden::affine(entry, env)?;
                    let pass = e.solution.same_space(&want);
                    ok &= pass;
                    let mut note = if pass { show_space(&e.solution) } else { mismatch(show_space(&want), show_space(&e.solution)) };
                    if let Some(printed) = entry.get("printed") {
                        let printed = golden::poly(printed, env)?;
                        let qp = QuadraticPair::new(e.k.clone(), printed.clone())?;
                        let holds = deform_check_bracket(&lp, &qp);
                        note.push_str(&format!("; the printed constant gives F = {printed}, which {} the bracket", if holds { "also passes" } else { "fails" }));
                    }
                    notes.push(format!("{tag}: {note}"));
                }
                if let Some(n) = entry.get("note").and_then(Value::as_str) {
                    notes.push(format!("note: {n}"));
                }
                Ok((ok, notes.join("; ")))
            };
            item(g.label(key, &[("orbit", orbit.to_string()), ("verdict", verdict(entry))]), outcome())
        })
        .collect()
}

pub(super) fn prop51(g: &Golden) -> Vec<ItemResult> {
    prop(g, "prop51", "distinct")
}

pub(super) fn prop52(g: &Golden) -> Vec<ItemResult> {
    prop(g, "prop52", "repeated")
}

pub(super) fn prop53(g: &Golden) -> Vec<ItemResult> {
    prop(g, "prop53", "nilpotent")
}

pub(super) fn coset(g: &Golden) -> Vec<ItemResult> {
    let outcome = || -> Outcome {
        let env = Env::new();
        let mut notes = Vec::new();
        for entry in array(g.get("coset")?)? {
            let (c, s, sc) = (golden::rational(field(entry, "cos")?, &env)?, golden::rational(field(entry, "sin")?, &env)?, golden::rational(field(entry, "s")?, &env)?);
            let t = coset_rep_g10(&c, &s, &sc)?;
            let want = golden::rational_matrix(field(entry, "T")?, &env)?;
            if t != want || t.det()? != sc || !crate::linclass::aut_member(&t, 7)? {
                return Ok((false, format!("(cos, sin, s) = ({c}, {s}, {sc}): {}", mismatch(&want, &t))));
            }
            let k = Matrix::diag(&[int(2), int(2), int(-4)]);
            if conjugate(&t, &k)? != k {
                return Ok((false, format!("T = {t} does not commute with diag(λ, λ, −2λ)")));
            }
            notes.push(format!("({c}, {s}, {sc}) ↦ {t}"));
        }
        if coset_rep_g10(&int(1), &int(0), &int(0)).is_ok() {
            return Ok((false, "s = 0 accepted".into()));
        }
        Ok((true, format!("{}; det = s, T ∈ G₇, commutes with diag(λ,λ,−2λ); s = 0 rejected", notes.join("; "))))
    };
    vec![item(g.label("coset", &[]), outcome())]
}

pub(super) fn case10_distinct(g: &Golden) -> Vec<ItemResult> {
    let outcome = || -> Outcome {
        let data = g.get("case10_distinct")?;
        let lp = standard_pair(usize_of(field(data, "case")?)? as u8, &int(1))?;
        let orbits: Vec<usize> = array(field(data, "orbits")?)?.iter().map(usize_of).collect::<Result<_>>()?;
        let angles = usize_of(field(data, "angles")?)?;
        let mut rng = sample::rng(36);
        let mut checked = 0;
        for (fam, _, tag) in probes(g, "distinct")? {
            let pairs = enumerate_orbit_pairs(&fam)?;
            for a in 0..angles {
                let (c, s) = if a == 0 { (int(1), int(0)) } else { sample::rational_angle(&mut rng) };
                let t = lift(&coset_rep_g10(&c, &s, &int(1))?);
                for &i in &orbits {
                    let k = &(&t * &pairs[i - 1].k) * &t.inverse()?;
                    let space = solve_f(&lp, &k)?;
                    if !space.is_empty() {
                        return Ok((false, format!("{tag}, orbit {i}, (cos, sin) = ({c}, {s}): deformations {}", show_space(&space))));
                    }
                    checked += 1;
                }
            }
        }
        Ok((true, format!("{checked} conjugates T_αKᵢT_α⁻¹ (i ∈ {orbits:?}) over both λ probes: solve_F empty for each")))
    };
    vec![item(g.label("case10_distinct", &[]), outcome())]
}

pub(super) fn prop_final(g: &Golden) -> Vec<ItemResult> {
    let outcome = || -> Outcome {
        let data = g.get("prop_final")?;
        let case_id = usize_of(field(data, "case")?)? as u8;
        let lp = standard_pair(case_id, &int(1))?;
        let mut rng = sample::rng(37);
        let mut notes = Vec::new();
        let mut ok = true;
        for (fam, env, tag) in probes(g, "repeated")? {
            let k = lift(&fam.matrix().expect("diagonal family"));
            let want = golden::affine(data, &env)?;
            let direct = solve_f(&lp, &k)?;
            let listed = catalog(case_id, &int(1), &KSpec::Family(fam))?;
            ok &= direct.same_space(&want) && listed[0].solution.same_space(&want);
            for _ in 0..5 {
                let (c, s) = sample::rational_angle(&mut rng);
                let t = lift(&coset_rep_g10(&c, &s, &sample::nonzero(&mut rng, 4))?);
                ok &= &(&t * &k) * &t.inverse()? == k;
            }
            notes.push(format!("{tag}: {}", if ok { show_space(&direct) } else { mismatch(show_space(&want), show_space(&direct)) }));
        }
        notes.push("K is fixed by every sampled T_αQ_s".into());
        Ok((ok, notes.join("; ")))
    };
    vec![item(g.label("prop_final", &[]), outcome())]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        assert_eq!(verdict(&serde_json::json!({"empty": true})), "empty");
        assert_eq!(verdict(&serde_json::json!({"particular": "0", "basis": []})), "F = 0 only");
        assert_eq!(verdict(&serde_json::json!({"particular": "x^3", "basis": ["x^3"]})), "1-parameter family");
    }

    #[test]
    fn random_points_are_valid() {
        let mut rng = sample::rng(1);
        for _ in 0..20 {
            assert!(random_point(&mut rng).unwrap().coords().iter().any(|c| !c.is_zero()));
        }
    }
}
