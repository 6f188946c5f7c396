//! JSON encodings of the exact objects.
//!
//! Rationals are strings (`"-1/6"`); elements of Q(√2, √3) are strings when
//! rational and `[c0, c1, c2, c3]` (coefficients of `1, √2, √3, √6`)
//! otherwise. Integers are also accepted as JSON numbers on input.
//!
//! | object            | encoding                                                  |
//! |-------------------|-----------------------------------------------------------|
//! | polynomial        | `{"vars": n, "terms": [{"exp": [..], "coef": c}, ..]}`     |
//! | multivector field | `{"n": n, "grade": k, "components": {"1,2": poly, ..}}`   |
//! | linear pair       | `{"k": [..], "A": [[..], ..]}`                            |
//! | quadratic pair    | `{"K": [[..], ..], "F": poly}`                            |
//! | solution space    | `{"empty": b, "particular": poly/null, "basis": [poly]}`  |

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, int, parse_rational, ExtScalar, Matrix, Polynomial, Rational, Scalar, SolutionSpace};
use crate::linclass::{Classification, LinearPair};
use crate::multivec::MultiVectorField;
use crate::quaddef::{space_polys, CatalogEntry, OrbitPair, QuadraticPair};

fn parse_err(what: &str, v: &Value) -> Error {
    Error::Parse(format!("expected {what}, found {v}"))
}

/// Scalars with a JSON encoding.
pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n.as_i64().map(int).ok_or_else(|| parse_err("an integer", v)),
        _ => Err(parse_err("a rational", v)),
    }
}

impl JsonScalar for Rational {
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        rational_from_json(v)
    }
}

impl JsonScalar for ExtScalar {
    fn to_json(&self) -> Value {
        match self.as_rational() {
            Some(r) => r.to_json(),
            None => Value::Array(self.coords().iter().map(|c| c.to_json()).collect()),
        }
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Array(a) if a.len() == 4 => {
                let c: Vec<Rational> = a.iter().map(rational_from_json).collect::<Result<_>>()?;
                Ok(ExtScalar::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()))
            }
            _ => Ok(ExtScalar::from_rational(&rational_from_json(v)?)),
        }
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(what, v))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse(format!("missing field \"{key}\" in {v}")))
}

fn usize_of(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|n| n as usize).ok_or_else(|| parse_err(what, v))
}

pub fn vector_to_json<S: JsonScalar>(v: &[S]) -> Value {
    Value::Array(v.iter().map(JsonScalar::to_json).collect())
}

pub fn vector_from_json<S: JsonScalar>(v: &Value) -> Result<Vec<S>> {
    array(v, "a vector")?.iter().map(S::from_json).collect()
}

pub fn matrix_to_json<S: JsonScalar>(m: &Matrix<S>) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_json(m.row(i))).collect())
}

pub fn matrix_from_json<S: JsonScalar>(v: &Value) -> Result<Matrix<S>> {
    let rows: Vec<Vec<S>> = array(v, "a matrix")?.iter().map(vector_from_json).collect::<Result<_>>()?;
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(parse_err("a nonempty rectangular matrix", v));
    }
    Ok(Matrix::from_rows(rows))
}

pub fn poly_to_json<S: JsonScalar>(p: &Polynomial<S>) -> Value {
    let terms: Vec<Value> = p.terms().map(|(m, c)| json!({"exp": m.exps(), "coef": c.to_json()})).collect();
    json!({"vars": p.nvars(), "terms": terms})
}

pub fn poly_from_json<S: JsonScalar>(v: &Value) -> Result<Polynomial<S>> {
    let n = usize_of(field(v, "vars")?, "a variable count")?;
    let mut out = Polynomial::zero(n);
    for t in array(field(v, "terms")?, "a term list")? {
        let exps: Vec<u32> = array(field(t, "exp")?, "an exponent vector")?
            .iter()
            .map(|e| e.as_u64().and_then(|e| u32::try_from(e).ok()).ok_or_else(|| parse_err("an exponent", e)))
            .collect::<Result<_>>()?;
        if exps.len() != n {
            return Err(Error::Parse(format!("exponent vector {exps:?} has length {}, expected {n}", exps.len())));
        }
        out = out + Polynomial::monomial(n, exps, S::from_json(field(t, "coef")?)?);
    }
    Ok(out)
}

pub fn mvf_to_json<S: JsonScalar>(u: &MultiVectorField<S>) -> Value {
    let mut comps = Map::new();
    for (idx, p) in u.components() {
        let key: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
        comps.insert(key.join(","), poly_to_json(p));
    }
    json!({"n": u.nvars(), "grade": u.grade(), "components": comps})
}

pub fn mvf_from_json<S: JsonScalar>(v: &Value) -> Result<MultiVectorField<S>> {
    let n = usize_of(field(v, "n")?, "a dimension")?;
    let grade = usize_of(field(v, "grade")?, "a grade")?;
    let comps = field(v, "components")?.as_object().ok_or_else(|| parse_err("a component map", v))?;
    let mut parts = Vec::new();
    for (key, p) in comps {
        let idx: Vec<usize> = if key.is_empty() {
            Vec::new()
        } else {
            key.split(',')
                .map(|s| match s.trim().parse::<usize>() {
                    Ok(i) if i >= 1 => Ok(i - 1),
                    _ => Err(Error::Parse(format!("bad component index \"{key}\""))),
                })
                .collect::<Result<_>>()?
        };
        let p: Polynomial<S> = poly_from_json(p)?;
        if p.nvars() != n {
            return Err(Error::Parse(format!("component {key} has {} variables, expected {n}", p.nvars())));
        }
        parts.push((idx, p));
    }
    MultiVectorField::from_components(n, grade, parts).map_err(|e| Error::Parse(e.to_string()))
}

pub fn linear_pair_to_json(p: &LinearPair) -> Value {
    json!({"k": vector_to_json(p.k()), "A": matrix_to_json(p.a())})
}

/// Structural problems are parse errors; a pair violating `A·k = 0` or
/// symmetry is a domain error from [`LinearPair::new`].
pub fn linear_pair_from_json(v: &Value) -> Result<LinearPair> {
    let k = vector_from_json(field(v, "k")?)?;
    let a = matrix_from_json(field(v, "A")?)?;
    LinearPair::new(k, a)
}

pub fn classification_to_json(c: &Classification) -> Value {
    json!({
        "case": c.label.case_id,
        "a_squared": c.label.a_squared.as_ref().map(JsonScalar::to_json),
        "witness": {"R": matrix_to_json(&c.witness.r), "d": vector_to_json(&c.witness.d)},
    })
}

pub fn quadratic_pair_to_json<S: JsonScalar>(q: &QuadraticPair<S>) -> Value {
    json!({"K": matrix_to_json(q.k()), "F": poly_to_json(q.f())})
}

pub fn quadratic_pair_from_json<S: JsonScalar>(v: &Value) -> Result<QuadraticPair<S>> {
    QuadraticPair::new(matrix_from_json(field(v, "K")?)?, poly_from_json(field(v, "F")?)?)
}

/// A cubic solution space as polynomials.
pub fn space_to_json<S: JsonScalar>(s: &SolutionSpace<S>) -> Value {
    let (particular, basis) = space_polys(s);
    json!({
        "empty": s.is_empty(),
        "particular": particular.as_ref().map(poly_to_json),
        "basis": basis.iter().map(poly_to_json).collect::<Vec<_>>(),
    })
}

pub fn space_from_json<S: JsonScalar>(v: &Value) -> Result<SolutionSpace<S>> {
    let particular = match field(v, "particular")? {
        Value::Null => None,
        p => Some(poly_from_json::<S>(p)?.coeff_vector(3)),
    };
    let basis = array(field(v, "basis")?, "a basis")?
        .iter()
        .map(|b| Ok(poly_from_json::<S>(b)?.coeff_vector(3)))
        .collect::<Result<_>>()?;
    Ok(SolutionSpace { ambient_dim: 10, particular, basis })
}

pub fn catalog_to_json(entries: &[CatalogEntry]) -> Value {
    Value::Array(
        entries
            .iter()
            .map(|e| {
                json!({
                    "orbit": e.orbit,
                    "rep": e.rep.as_ref().map(|p| vector_to_json(p.coords())),
                    "K": matrix_to_json(&e.k),
                    "solution": space_to_json(&e.solution),
                })
            })
            .collect(),
    )
}

pub fn orbit_pairs_to_json(pairs: &[OrbitPair]) -> Value {
    Value::Array(
        pairs
            .iter()
            .map(|p| {
                json!({
                    "orbit": p.rep.index,
                    "rep": vector_to_json(p.rep.point.coords()),
                    "T": matrix_to_json(&p.rep.t),
                    "K": matrix_to_json(&p.k),
                    "F_basis": p.f_basis.iter().map(poly_to_json).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn polynomial_round_trip() {
        let p = Polynomial::monomial(3, vec![1, 1, 1], rat(1, 6)) - Polynomial::monomial(3, vec![2, 0, 1], int(2));
        let v = poly_to_json(&p);
        assert_eq!(poly_from_json::<Rational>(&v).unwrap(), p);
        let e = p.map_coeffs(ExtScalar::from_rational).scale(&ExtScalar::sqrt2());
        assert_eq!(poly_from_json::<ExtScalar>(&poly_to_json(&e)).unwrap(), e);
    }

    #[test]
    fn ext_scalar_encoding() {
        assert_eq!(ExtScalar::from_i64(3).to_json(), json!("3"));
        assert_eq!(ExtScalar::sqrt3().to_json(), json!(["0", "0", "1", "0"]));
        assert_eq!(ExtScalar::from_json(&json!(2)).unwrap(), ExtScalar::from_i64(2));
    }

    #[test]
    fn pair_parsing() {
        let v = json!({"k": ["0", "0", "1"], "A": [["2", "0", "0"], ["0", "2", "0"], ["0", "0", "0"]]});
        let p = linear_pair_from_json(&v).unwrap();
        assert_eq!(linear_pair_to_json(&p), v);
        let bad = json!({"k": ["0", "0", "1"], "A": [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "1"]]});
        assert_eq!(linear_pair_from_json(&bad), Err(Error::InvalidLinearPair("A·k ≠ 0".into())));
        assert!(matches!(linear_pair_from_json(&json!({"k": 1})), Err(Error::Parse(_))));
    }

    #[test]
    fn multivector_round_trip() {
        let v = json!({"n": 3, "grade": 2, "components": {
            "1,2": {"vars": 3, "terms": [{"exp": [0, 0, 1], "coef": "1"}]},
            "2,3": {"vars": 3, "terms": [{"exp": [1, 0, 0], "coef": "-1/2"}]}}});
        let u: MultiVectorField<Rational> = mvf_from_json(&v).unwrap();
        assert_eq!(mvf_to_json(&u), v);
        let bad = json!({"n": 3, "grade": 2, "components": {"2,1": {"vars": 3, "terms": []}}});
        assert!(mvf_from_json::<Rational>(&bad).is_err());
    }
}
