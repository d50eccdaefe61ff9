//! Text grammar for monomial ideals.
//!
//! An ideal is a comma-separated list of monomials; a monomial is a product
//! of `var(^exp)?` factors joined by `*` or plain juxtaposition. Variables
//! are `x1..xn`, with `x`, `y`, `z` accepted as aliases for the first three.
//! The literal `1` denotes the unit ideal and `0` the zero ideal.

use super::{ExponentVector, MonomialIdeal};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Var(usize),
    Number(u64),
    Caret,
    Star,
    Comma,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let pos = i;
        match bytes[i] {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'^' => {
                out.push((pos, Token::Caret));
                i += 1;
            }
            b'*' => {
                out.push((pos, Token::Star));
                i += 1;
            }
            b',' => {
                out.push((pos, Token::Comma));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                let value: u64 = text
                    .parse()
                    .map_err(|_| err(start, format!("number '{text}' is too large")))?;
                out.push((pos, Token::Number(value)));
            }
            b'x' => {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    out.push((pos, Token::Var(0)));
                } else {
                    let text = &input[start..i];
                    let index: u64 = text
                        .parse()
                        .map_err(|_| err(start, format!("variable index '{text}' is too large")))?;
                    if index == 0 {
                        return Err(err(pos, "variable indices start at x1"));
                    }
                    out.push((pos, Token::Var(index as usize - 1)));
                }
            }
            b'y' => {
                out.push((pos, Token::Var(1)));
                i += 1;
            }
            b'z' => {
                out.push((pos, Token::Var(2)));
                i += 1;
            }
            c => {
                return Err(err(pos, format!("unexpected character '{}'", c as char)));
            }
        }
    }
    Ok(out)
}

/// One parsed monomial as a sparse exponent map.
struct Term {
    exps: Vec<(usize, u64)>,
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.at)
    }

    fn next_pos(&self) -> usize {
        self.peek().map_or(self.end, |(p, _)| *p)
    }

    fn term(&mut self) -> Result<Term> {
        let mut exps: Vec<(usize, u64)> = Vec::new();
        let mut saw_factor = false;
        loop {
            match self.peek() {
                Some((_, Token::Number(1))) if !saw_factor => {
                    // the constant monomial, allowed only as a whole term
                    self.at += 1;
                    match self.peek() {
                        None | Some((_, Token::Comma)) => return Ok(Term { exps }),
                        Some((p, _)) => return Err(err(*p, "expected ',' after '1'")),
                    }
                }
                Some((p, Token::Number(_))) => {
                    return Err(err(*p, "expected a variable"));
                }
                Some((p, Token::Var(v))) => {
                    let (p, v) = (*p, *v);
                    self.at += 1;
                    let mut exp = 1;
                    if let Some((_, Token::Caret)) = self.peek() {
                        self.at += 1;
                        match self.peek() {
                            Some((_, Token::Number(e))) => {
                                exp = *e;
                                self.at += 1;
                            }
                            other => {
                                let p = other.map_or(self.end, |(p, _)| *p);
                                return Err(err(p, "expected an exponent after '^'"));
                            }
                        }
                    }
                    match exps.iter_mut().find(|(w, _)| *w == v) {
                        Some((_, e)) => {
                            *e = e
                                .checked_add(exp)
                                .ok_or_else(|| err(p, "exponent overflow"))?
                        }
                        None => exps.push((v, exp)),
                    }
                    saw_factor = true;
                    // optional separator between factors
                    if let Some((_, Token::Star)) = self.peek() {
                        self.at += 1;
                        match self.peek() {
                            Some((_, Token::Var(_))) => {}
                            other => {
                                let p = other.map_or(self.end, |(p, _)| *p);
                                return Err(err(p, "expected a variable after '*'"));
                            }
                        }
                    }
                }
                Some((_, Token::Comma)) | None => {
                    if !saw_factor {
                        return Err(err(self.next_pos(), "expected a monomial"));
                    }
                    return Ok(Term { exps });
                }
                Some((p, t)) => {
                    let what = match t {
                        Token::Caret => "'^'",
                        Token::Star => "'*'",
                        _ => "token",
                    };
                    return Err(err(*p, format!("unexpected {what}")));
                }
            }
        }
    }
}

pub fn parse(input: &str, vars: Option<usize>) -> Result<MonomialIdeal> {
    if input.trim() == "0" {
        return Ok(MonomialIdeal::zero(vars.unwrap_or(0)));
    }
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(err(0, "empty input"));
    }
    let mut parser = Parser {
        tokens,
        at: 0,
        end: input.len(),
    };
    let mut terms = Vec::new();
    loop {
        terms.push(parser.term()?);
        match parser.peek() {
            Some((_, Token::Comma)) => parser.at += 1,
            None => break,
            Some((p, _)) => return Err(err(*p, "expected ','")),
        }
    }

    let needed = terms
        .iter()
        .flat_map(|t| t.exps.iter().map(|(v, _)| v + 1))
        .max()
        .unwrap_or(0);
    let ambient = match vars {
        Some(n) => {
            if needed > n {
                return Err(Error::VariableCount {
                    found: needed,
                    ambient: n,
                });
            }
            n
        }
        None => needed,
    };

    let gens = terms
        .into_iter()
        .map(|t| {
            let mut e = vec![0u64; ambient];
            for (v, exp) in t.exps {
                e[v] = exp;
            }
            ExponentVector::new(e)
        })
        .collect();
    MonomialIdeal::new(ambient, gens)
}

fn var_name(j: usize, ambient: usize) -> String {
    if ambient <= 3 {
        ["x", "y", "z"][j].to_string()
    } else {
        format!("x{}", j + 1)
    }
}

pub fn format(ideal: &MonomialIdeal) -> String {
    if ideal.is_zero() {
        return "0".to_string();
    }
    let n = ideal.ambient_dim();
    let monomials: Vec<String> = ideal
        .gens()
        .iter()
        .map(|g| {
            if g.is_zero() {
                return "1".to_string();
            }
            g.support()
                .into_iter()
                .map(|j| {
                    let e = g.get(j);
                    if e == 1 {
                        var_name(j, n)
                    } else {
                        format!("{}^{}", var_name(j, n), e)
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        })
        .collect();
    monomials.join(", ")
}
