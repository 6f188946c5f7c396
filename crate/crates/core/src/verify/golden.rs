//! Access to the golden data file.

use std::collections::HashMap;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactnum::{parse_poly_expr, parse_scalar_expr, ExtScalar, Matrix, Polynomial, QMatrix, Rational, Scalar, SolutionSpace};

pub const EMBEDDED_GOLDEN: &str = include_str!("../../golden/paper.json");

pub(crate) type E = ExtScalar;
pub(crate) type Env = HashMap<String, E>;

const XYZ: [&str; 3] = ["x", "y", "z"];

/// Expected values, keyed by item.
#[derive(Clone, Debug)]
pub struct Golden {
    root: Value,
}

impl Golden {
    pub fn embedded() -> Self {
        Self::parse(EMBEDDED_GOLDEN).expect("embedded golden data is valid")
    }

    pub fn parse(src: &str) -> Result<Self> {
        let root: Value = serde_json::from_str(src).map_err(|e| Error::Parse(format!("golden file: {e}")))?;
        if !root.is_object() {
            return Err(Error::Parse("golden file: top level must be an object".into()));
        }
        Ok(Self { root })
    }

    pub(crate) fn get(&self, key: &str) -> Result<&Value> {
        self.root.get(key).ok_or_else(|| Error::Parse(format!("golden entry '{key}' is missing")))
    }

    /// Item label with `{name}` placeholders filled in.
    pub(crate) fn label(&self, key: &str, subs: &[(&str, String)]) -> String {
        let mut s = self.root["labels"][key].as_str().unwrap_or(key).to_string();
        for (name, value) in subs {
            s = s.replace(&format!("{{{name}}}"), value);
        }
        s
    }
}

pub(crate) fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("golden: missing field '{key}' in {v}")))
}

pub(crate) fn string(v: &Value) -> Result<&str> {
    v.as_str().ok_or_else(|| Error::Parse(format!("golden: expected a string, found {v}")))
}

pub(crate) fn array(v: &Value) -> Result<&Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Parse(format!("golden: expected an array, found {v}")))
}

pub(crate) fn usize_of(v: &Value) -> Result<usize> {
    v.as_u64().map(|u| u as usize).ok_or_else(|| Error::Parse(format!("golden: expected a count, found {v}")))
}

pub(crate) fn env(pairs: &[(&str, E)]) -> Env {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

pub(crate) fn with(base: &Env, pairs: &[(&str, E)]) -> Env {
    let mut e = base.clone();
    e.extend(pairs.iter().map(|(k, v)| (k.to_string(), v.clone())));
    e
}

pub(crate) fn scalar(v: &Value, env: &Env) -> Result<E> {
    parse_scalar_expr(string(v)?, env)
}

pub(crate) fn rational(v: &Value, env: &Env) -> Result<Rational> {
    let s = scalar(v, env)?;
    s.as_rational().ok_or_else(|| Error::Parse(format!("golden: {v} is not rational")))
}

pub(crate) fn poly(v: &Value, env: &Env) -> Result<Polynomial<E>> {
    parse_poly_expr(string(v)?, &XYZ, env)
}

pub(crate) fn vector(v: &Value, env: &Env) -> Result<Vec<E>> {
    array(v)?.iter().map(|x| scalar(x, env)).collect()
}

pub(crate) fn matrix(v: &Value, env: &Env) -> Result<Matrix<E>> {
    let rows: Vec<Vec<E>> = array(v)?.iter().map(|r| vector(r, env)).collect::<Result<_>>()?;
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Error::Parse(format!("golden: ragged matrix {v}")));
    }
    Ok(Matrix::from_rows(rows))
}

pub(crate) fn rational_matrix(v: &Value, env: &Env) -> Result<QMatrix> {
    let m = matrix(v, env)?;
    let rows = m
        .to_rows()
        .into_iter()
        .map(|r| r.iter().map(|x| x.as_rational().ok_or_else(|| Error::Parse(format!("golden: {x} is not rational")))).collect())
        .collect::<Result<_>>()?;
    Ok(Matrix::from_rows(rows))
}

pub(crate) fn names(v: &Value) -> Result<Vec<String>> {
    array(v)?.iter().map(|x| string(x).map(str::to_string)).collect()
}

/// Splits an expression affine in `params` into its constant part and one
/// direction per parameter.
pub(crate) fn family<T>(
    params: &[String],
    env: &Env,
    eval: impl Fn(&Env) -> Result<T>,
    sub: impl Fn(&T, &T) -> T,
) -> Result<(T, Vec<T>)> {
    let zero = E::zero();
    let at = |hot: Option<usize>| {
        let pairs: Vec<(&str, E)> = params
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_str(), if Some(i) == hot { E::one() } else { zero.clone() }))
            .collect();
        eval(&with(env, &pairs))
    };
    let base = at(None)?;
    let dirs = (0..params.len()).map(|i| at(Some(i)).map(|v| sub(&v, &base))).collect::<Result<_>>()?;
    Ok((base, dirs))
}

/// The linear span of a family of cubics (its constant part must vanish).
pub(crate) fn poly_family(expr: &Value, params: &[String], env: &Env) -> Result<Vec<Polynomial<E>>> {
    let (base, dirs) = family(params, env, |e| poly(expr, e), |a, b| a.clone() - b.clone())?;
    if !base.is_zero() {
        return Err(Error::Parse(format!("golden: {expr} is not linear in {params:?}")));
    }
    Ok(dirs)
}

pub(crate) fn span(basis: &[Polynomial<E>]) -> SolutionSpace<E> {
    SolutionSpace { ambient_dim: 10, particular: Some(vec![E::zero(); 10]), basis: basis.iter().map(|p| p.coeff_vector(3)).collect() }
}

/// Golden affine set `{"particular", "basis"}` or `{"empty": true}`.
pub(crate) fn affine(v: &Value, env: &Env) -> Result<SolutionSpace<E>> {
    if v.get("empty").and_then(Value::as_bool) == Some(true) {
        return Ok(SolutionSpace::empty(10));
    }
    let particular = poly(field(v, "particular")?, env)?.coeff_vector(3);
    let basis = array(field(v, "basis")?)?.iter().map(|b| poly(b, env).map(|p| p.coeff_vector(3))).collect::<Result<_>>()?;
    Ok(SolutionSpace { ambient_dim: 10, particular: Some(particular), basis })
}

/// Affine set of cubics in plain notation.
pub(crate) fn show_space<S: Scalar>(s: &SolutionSpace<S>) -> String {
    let Some(p) = &s.particular else { return "empty".into() };
    let cubic = |v: &Vec<S>| Polynomial::from_coeff_vector(3, 3, v).to_string();
    if s.basis.is_empty() {
        return format!("{{{}}}", cubic(p));
    }
    let basis: Vec<String> = s.basis.iter().map(cubic).collect();
    format!("{} + span{{{}}}", cubic(p), basis.join(", "))
}

pub(crate) fn mismatch(expected: impl std::fmt::Display, computed: impl std::fmt::Display) -> String {
    format!("expected {expected}; computed {computed}")
}
