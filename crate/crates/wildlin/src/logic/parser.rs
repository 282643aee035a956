//! Parser for the parenthesized prefix grammar.
//!
//! ```text
//! term    := var | N | (c N) | (+ term term) | (s K term)
//! formula := (le t t) | (eq t t) | (and f f) | (or f f) | (not f) | (imp f f)
//!          | (exists v lo bound incl f) | (forall v lo bound incl f)
//!          | (exists v bound f) | (forall v bound f)
//!          | (absdlt t t t t) | (absdle t t t t)
//!          | (eqmod t t t) | (eqdiv t t t) | (neqp t t t t)
//! ```
//!
//! `lo ∈ {0, 1}`, `incl ∈ {le, lt}`.  Bare decimal atoms in term position
//! are constants, so `(+ x 1)` reads like it looks.  The short quantifier
//! form defaults to `lo = 0`, `incl = lt`; it is recognized by the token
//! after the variable *not* being a bare `0` or `1`, so a short-form bound
//! of zero or one must be written `(c 0)` / `(c 1)`.  The printer always
//! emits the long form, and parsing a printed formula reproduces the AST
//! exactly.

use num_bigint::BigInt;

use super::{Formula, LogicError, Quantifier, Term};

#[derive(Debug, Clone, PartialEq)]
enum Tok<'a> {
    Open,
    Close,
    Atom(&'a str),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok<'_>)>, LogicError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b'(' => {
                out.push((i, Tok::Open));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::Close));
                i += 1;
            }
            _ if b.is_ascii_whitespace() => i += 1,
            _ if b.is_ascii_alphanumeric() || b == b'_' || b == b'+' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'+')
                {
                    i += 1;
                }
                out.push((start, Tok::Atom(&text[start..i])));
            }
            _ => {
                return Err(LogicError::Parse {
                    pos: i,
                    msg: format!("unexpected character {:?}", b as char),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok<'a>)>,
    i: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T, LogicError> {
        Err(LogicError::Parse {
            pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<&(usize, Tok<'a>)> {
        self.toks.get(self.i)
    }

    fn next(&mut self, what: &str) -> Result<(usize, Tok<'a>), LogicError> {
        match self.toks.get(self.i) {
            Some(t) => {
                self.i += 1;
                Ok(t.clone())
            }
            None => self.err(self.len, format!("expected {what}, found end of input")),
        }
    }

    fn expect_close(&mut self) -> Result<(), LogicError> {
        match self.next("')'")? {
            (_, Tok::Close) => Ok(()),
            (pos, _) => self.err(pos, "expected ')'"),
        }
    }

    fn atom(&mut self, what: &str) -> Result<(usize, &'a str), LogicError> {
        match self.next(what)? {
            (pos, Tok::Atom(s)) => Ok((pos, s)),
            (pos, _) => self.err(pos, format!("expected {what}")),
        }
    }

    fn number(&mut self, what: &str) -> Result<BigInt, LogicError> {
        let (pos, s) = self.atom(what)?;
        if s.bytes().all(|b| b.is_ascii_digit()) {
            Ok(s.parse().unwrap())
        } else {
            self.err(pos, format!("expected {what}, found {s:?}"))
        }
    }

    fn identifier(&mut self, what: &str) -> Result<String, LogicError> {
        let (pos, s) = self.atom(what)?;
        let mut bytes = s.bytes();
        let head_ok = bytes
            .next()
            .is_some_and(|b| b.is_ascii_alphabetic() || b == b'_');
        if head_ok && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_') {
            Ok(s.to_string())
        } else {
            self.err(pos, format!("expected {what}, found {s:?}"))
        }
    }

    fn term(&mut self) -> Result<Term, LogicError> {
        match self.next("a term")? {
            (pos, Tok::Atom(s)) => {
                if s.bytes().all(|b| b.is_ascii_digit()) {
                    Ok(Term::Const(s.parse().unwrap()))
                } else if s
                    .bytes()
                    .next()
                    .is_some_and(|b| b.is_ascii_alphabetic() || b == b'_')
                    && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
                {
                    Ok(Term::Var(s.to_string()))
                } else {
                    self.err(pos, format!("expected a term, found {s:?}"))
                }
            }
            (pos, Tok::Open) => {
                let (hpos, head) = self.atom("a term head (c, +, s)")?;
                let t = match head {
                    "c" => Term::Const(self.number("a decimal constant")?),
                    "+" => {
                        let a = self.term()?;
                        let b = self.term()?;
                        Term::Sum(Box::new(a), Box::new(b))
                    }
                    "s" => {
                        let k = self.number("a scalar index")?;
                        let k = usize::try_from(&k).map_err(|_| LogicError::Parse {
                            pos: hpos,
                            msg: "scalar index too large".into(),
                        })?;
                        Term::Scalar(k, Box::new(self.term()?))
                    }
                    other => return self.err(hpos, format!("unknown term head {other:?}")),
                };
                self.expect_close()?;
                let _ = pos;
                Ok(t)
            }
            (pos, Tok::Close) => self.err(pos, "expected a term, found ')'"),
        }
    }

    fn quantifier(&mut self, kind: super::QuantKind) -> Result<Formula, LogicError> {
        let var = self.identifier("a quantified variable")?;
        // A bare 0 or 1 here is the long form's lower end; anything else
        // starts the short form's bound term.
        let long = matches!(self.peek(), Some((_, Tok::Atom("0" | "1"))));
        let (lower, bound, inclusive) = if long {
            let lower = if let (_, Tok::Atom(s)) = self.next("lower end")? {
                if s == "1" {
                    1
                } else {
                    0
                }
            } else {
                unreachable!("peeked an atom")
            };
            let bound = self.term()?;
            let (ipos, incl) = self.atom("le or lt")?;
            let inclusive = match incl {
                "le" => true,
                "lt" => false,
                other => return self.err(ipos, format!("expected le or lt, found {other:?}")),
            };
            (lower, bound, inclusive)
        } else {
            (0, self.term()?, false)
        };
        let body = self.formula()?;
        self.expect_close()?;
        Ok(Formula::Quant(Quantifier {
            kind,
            var,
            lower,
            bound,
            inclusive,
            body: Box::new(body),
        }))
    }

    fn formula(&mut self) -> Result<Formula, LogicError> {
        match self.next("a formula")? {
            (pos, Tok::Open) => {
                let (hpos, head) = self.atom("a formula head")?;
                let _ = pos;
                let f = match head {
                    "le" => Formula::Le(self.term()?, self.term()?),
                    "eq" => Formula::Eq(self.term()?, self.term()?),
                    "and" => Formula::And(Box::new(self.formula()?), Box::new(self.formula()?)),
                    "or" => Formula::Or(Box::new(self.formula()?), Box::new(self.formula()?)),
                    "imp" => Formula::Implies(Box::new(self.formula()?), Box::new(self.formula()?)),
                    "not" => Formula::Not(Box::new(self.formula()?)),
                    "exists" => return self.quantifier(super::QuantKind::Exists),
                    "forall" => return self.quantifier(super::QuantKind::Forall),
                    "absdlt" => {
                        Formula::AbsDiffLt([self.term()?, self.term()?, self.term()?, self.term()?])
                    }
                    "absdle" => {
                        Formula::AbsDiffLe([self.term()?, self.term()?, self.term()?, self.term()?])
                    }
                    "eqmod" => Formula::EqMod {
                        rem: self.term()?,
                        value: self.term()?,
                        modulus: self.term()?,
                    },
                    "eqdiv" => Formula::EqDiv {
                        quot: self.term()?,
                        value: self.term()?,
                        divisor: self.term()?,
                    },
                    "neqp" => {
                        Formula::NeqPair([self.term()?, self.term()?, self.term()?, self.term()?])
                    }
                    other => return self.err(hpos, format!("unknown formula head {other:?}")),
                };
                self.expect_close()?;
                Ok(f)
            }
            (pos, _) => self.err(pos, "expected '(' starting a formula"),
        }
    }
}

/// Parses one formula; trailing input is an error.
pub fn parse(text: &str) -> Result<Formula, LogicError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        i: 0,
        len: text.len(),
    };
    let f = p.formula()?;
    if let Some((pos, _)) = p.peek() {
        return Err(LogicError::Parse {
            pos: *pos,
            msg: "trailing input after formula".into(),
        });
    }
    Ok(f)
}
