//! Parser for polynomial expressions over Q(√2, √3).
//!
//! Grammar: `+ - * / ^` and parentheses over integers, variables, the
//! constants `sqrt2`, `sqrt3`, `sqrt6` and named parameters. Division is
//! only by constants. `·` and `−` are accepted as `*` and `-`.

use std::collections::HashMap;

use super::ext::ExtScalar;
use super::poly::Polynomial;
use super::scalar::{int, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut v: i64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    v = v.checked_mul(10).and_then(|v| v.checked_add(d as i64)).ok_or_else(|| Error::Parse(format!("integer overflow in \"{s}\"")))?;
                    chars.next();
                }
                out.push(Tok::Num(v));
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut id = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        id.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(id));
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push(Tok::Op(c));
                chars.next();
            }
            '·' => {
                out.push(Tok::Op('*'));
                chars.next();
            }
            '−' => {
                out.push(Tok::Op('-'));
                chars.next();
            }
            c => return Err(Error::Parse(format!("unexpected character '{c}' in \"{s}\""))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a [&'a str],
    env: &'a HashMap<String, ExtScalar>,
    src: &'a str,
}

type P = Polynomial<ExtScalar>;

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in \"{}\"", self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<P> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<P> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                if d.degree().unwrap_or(0) > 0 {
                    return Err(self.err("division by a non-constant"));
                }
                let c = d.coeff_of(&vec![0; self.vars.len()]);
                acc = acc.scale(&c.try_inv().map_err(|_| self.err("division by zero"))?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<P> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<P> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(e)) if e <= u32::MAX as i64 => {
                    self.pos += 1;
                    Ok(base.pow(e as u32))
                }
                _ => Err(self.err("expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<P> {
        let n = self.vars.len();
        let tok = self.peek().cloned().ok_or_else(|| self.err("unexpected end"))?;
        self.pos += 1;
        match tok {
            Tok::Num(v) => Ok(P::constant(n, ExtScalar::from_rational(&int(v)))),
            Tok::Op('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing ')'"));
                }
                Ok(e)
            }
            Tok::Ident(id) => {
                if let Some(i) = self.vars.iter().position(|v| *v == id) {
                    return Ok(P::var(n, i));
                }
                let c = match id.as_str() {
                    "sqrt2" => ExtScalar::sqrt2(),
                    "sqrt3" => ExtScalar::sqrt3(),
                    "sqrt6" => ExtScalar::sqrt6(),
                    _ => self.env.get(&id).cloned().ok_or_else(|| self.err(&format!("unknown symbol '{id}'")))?,
                };
                Ok(P::constant(n, c))
            }
            Tok::Op(c) => Err(self.err(&format!("unexpected '{c}'"))),
        }
    }
}

/// Parses `src` as a polynomial in `vars` with parameters from `env`.
pub fn parse_poly_expr(src: &str, vars: &[&str], env: &HashMap<String, ExtScalar>) -> Result<Polynomial<ExtScalar>> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0, vars, env, src };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Parses a constant expression.
pub fn parse_scalar_expr(src: &str, env: &HashMap<String, ExtScalar>) -> Result<ExtScalar> {
    let p = parse_poly_expr(src, &[], env)?;
    Ok(p.coeff_of(&[]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    #[test]
    fn expands_products() {
        let env = HashMap::new();
        let p = parse_poly_expr("(z-x)^2*(z+x)", &XYZ, &env).unwrap();
        let q = parse_poly_expr("z^3 - x*z^2 - x^2*z + x^3", &XYZ, &env).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn constants_and_parameters() {
        let env = HashMap::from([("l1".to_string(), ExtScalar::from_i64(2))]);
        let c = parse_scalar_expr("sqrt3*(l1 - 1)/6", &env).unwrap();
        assert_eq!(c, ExtScalar::new(int(0), int(0), rat(1, 6), int(0)));
        assert_eq!(parse_scalar_expr("−1/2·sqrt2*sqrt2", &env).unwrap(), ExtScalar::from_i64(-1));
    }

    #[test]
    fn errors() {
        let env = HashMap::new();
        assert!(parse_poly_expr("x/y", &XYZ, &env).is_err());
        assert!(parse_poly_expr("x +", &XYZ, &env).is_err());
        assert!(parse_poly_expr("w", &XYZ, &env).is_err());
        assert!(parse_poly_expr("(x", &XYZ, &env).is_err());
        assert!(parse_scalar_expr("1/0", &env).is_err());
    }
}
