//! Infix expression parser producing rational functions.
//!
//! Grammar:
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' exponent)?
//! exponent := int | '-' int | '(' '-'? int ')'
//! atom   := int | ident | ident '(' expr (',' expr)* ')' | '(' expr ')'
//! ident  := [A-Za-z_][A-Za-z0-9_]*
//! ```
//! Calls refer to macros: named parameter lists with a body expression.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::error::AlgebraError;
use super::ratfunc::RationalFunction;
use super::rational::Q;
use super::symbol::Symbol;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Macro {
    pub params: Vec<String>,
    pub body: String,
}

pub type Macros = BTreeMap<String, Macro>;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, AlgebraError> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < b.len() && (b[i] as char).is_ascii_digit() {
                i += 1;
            }
            out.push((s, Tok::Int(src[s..i].parse().unwrap())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let s = i;
            while i < b.len() && ((b[i] as char).is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((s, Tok::Ident(src[s..i].to_string())));
        } else if "+-*/^(),".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(AlgebraError::Parse {
                pos: i,
                msg: format!("unexpected character '{}'", c),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    macros: &'a Macros,
    env: &'a HashMap<String, RationalFunction>,
    depth: usize,
}

const MAX_MACRO_DEPTH: usize = 16;

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, AlgebraError> {
        Err(AlgebraError::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), AlgebraError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c))
        }
    }

    fn expr(&mut self) -> Result<RationalFunction, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, AlgebraError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let at = self.offset();
                let d = self.unary()?;
                acc = (&acc / &d).map_err(|_| AlgebraError::Parse {
                    pos: at,
                    msg: "division by zero".into(),
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction, AlgebraError> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction, AlgebraError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let paren = self.eat('(');
        let neg = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Int(n)) => {
                let n: i32 = match i32::try_from(n.clone()) {
                    Ok(v) if v <= 1000 => v,
                    _ => return self.err("exponent too large"),
                };
                self.pos += 1;
                n
            }
            _ => return self.err("expected integer exponent"),
        };
        if paren {
            self.expect(')')?;
        }
        let e = if neg { -e } else { e };
        if e < 0 && base.is_zero() {
            return self.err("negative power of zero");
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<RationalFunction, AlgebraError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(RationalFunction::constant(Q::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Op('(')) {
                    let at = self.offset();
                    self.pos += 1;
                    let mut args = vec![self.expr()?];
                    while self.eat(',') {
                        args.push(self.expr()?);
                    }
                    self.expect(')')?;
                    return self.call(&name, args, at);
                }
                if let Some(v) = self.env.get(&name) {
                    return Ok(v.clone());
                }
                Ok(RationalFunction::var(Symbol::new(&name)))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(Tok::Op(c)) => self.err(format!("unexpected '{}'", c)),
            None => self.err("unexpected end of input"),
        }
    }

    fn call(&mut self, name: &str, args: Vec<RationalFunction>, at: usize) -> Result<RationalFunction, AlgebraError> {
        let m = match self.macros.get(name) {
            Some(m) => m,
            None => {
                return Err(AlgebraError::Parse {
                    pos: at,
                    msg: format!("unknown macro '{}'", name),
                })
            }
        };
        if m.params.len() != args.len() {
            return Err(AlgebraError::Parse {
                pos: at,
                msg: format!("macro '{}' takes {} arguments, got {}", name, m.params.len(), args.len()),
            });
        }
        if self.depth >= MAX_MACRO_DEPTH {
            return Err(AlgebraError::Parse {
                pos: at,
                msg: "macro expansion too deep".into(),
            });
        }
        let env: HashMap<String, RationalFunction> = m.params.iter().cloned().zip(args).collect();
        parse_inner(&m.body, self.macros, &env, self.depth + 1).map_err(|e| match e {
            AlgebraError::Parse { pos, msg } => AlgebraError::Parse {
                pos: at,
                msg: format!("in macro '{}' at {}: {}", name, pos, msg),
            },
            other => other,
        })
    }
}

fn parse_inner(
    src: &str,
    macros: &Macros,
    env: &HashMap<String, RationalFunction>,
    depth: usize,
) -> Result<RationalFunction, AlgebraError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
        macros,
        env,
        depth,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parses an expression with the given macro table.
pub fn parse_expr(src: &str, macros: &Macros) -> Result<RationalFunction, AlgebraError> {
    parse_inner(src, macros, &HashMap::new(), 0)
}

/// Parses an expression with extra named values bound before symbol lookup.
pub fn parse_expr_with(
    src: &str,
    macros: &Macros,
    env: &HashMap<String, RationalFunction>,
) -> Result<RationalFunction, AlgebraError> {
    parse_inner(src, macros, env, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::MultiPoly;
    use crate::algebra::rational::{q, qf};

    fn v(s: &str) -> RationalFunction {
        RationalFunction::var(Symbol::new(s))
    }

    #[test]
    fn precedence_and_powers() {
        let m = Macros::new();
        let r = parse_expr("x^2 - 3*x*y + 1/2", &m).unwrap();
        let e = &(&v("x").pow(2) - &(&v("x") * &v("y")).scale(&q(3))) + &RationalFunction::constant(qf(1, 2));
        assert_eq!(r, e);
        assert_eq!(parse_expr("-x^2", &m).unwrap(), -&v("x").pow(2));
        assert_eq!(parse_expr("x^(-2)", &m).unwrap(), v("x").pow(-2));
        assert_eq!(parse_expr("2^-1", &m).unwrap(), RationalFunction::constant(qf(1, 2)));
        assert_eq!(parse_expr("(q1 - t/q1)*q1", &m).unwrap(), &v("q1").pow(2) - &v("t"));
    }

    #[test]
    fn macros_expand() {
        let mut m = Macros::new();
        m.insert(
            "D8".into(),
            Macro {
                params: vec!["q".into(), "p".into()],
                body: "(p^2*q^2 + q*p - q - t/q)/t".into(),
            },
        );
        let r = parse_expr("t*D8(q2, p2)", &m).unwrap();
        let e = parse_expr("p2^2*q2^2 + q2*p2 - q2 - t/q2", &m).unwrap();
        assert_eq!(r, e);
        // macro parameters shadow outer symbols of the same name
        let r = parse_expr("D8(p, q)", &m).unwrap();
        let e = parse_expr("(q^2*p^2 + p*q - p - t/p)/t", &m).unwrap();
        assert_eq!(r, e);
    }

    #[test]
    fn errors_carry_positions() {
        let m = Macros::new();
        assert!(matches!(parse_expr("x + * y", &m), Err(AlgebraError::Parse { pos: 4, .. })));
        assert!(matches!(parse_expr("(x", &m), Err(AlgebraError::Parse { pos: 2, .. })));
        assert!(matches!(parse_expr("x $", &m), Err(AlgebraError::Parse { pos: 2, .. })));
        assert!(matches!(parse_expr("F(x)", &m), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse_expr("x/0", &m), Err(AlgebraError::Parse { .. })));
        assert_eq!(parse_expr("0*x", &m).unwrap(), RationalFunction::from_poly(MultiPoly::zero()));
    }
}
