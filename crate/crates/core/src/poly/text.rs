//! Text and JSON forms of [`SparsePoly`].
//!
//! Text: terms in graded-lex order, each written `c*x0^2*x1`, joined by
//! ` + ` or ` - `. The coefficient is always present, so `1*x0` not `x0`.

use serde::{Deserialize, Serialize};

use num_traits::{One, Signed};

use super::{Exponent, PolyError, Result, SparsePoly};
use crate::rational::{fmt_rational, parse_rational, Rational};

impl SparsePoly {
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.graded_terms() {
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&fmt_rational(&c.abs()));
            for (v, &k) in self.vars().iter().zip(e) {
                match k {
                    0 => {}
                    1 => out.push_str(&format!("*{v}")),
                    _ => out.push_str(&format!("*{v}^{k}")),
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.vars().to_vec(),
            terms: self
                .graded_terms()
                .into_iter()
                .map(|(e, c)| TermJson {
                    exp: e.clone(),
                    coeff: fmt_rational(c),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let terms = j
            .terms
            .iter()
            .map(|t| {
                if t.exp.len() != j.vars.len() {
                    return Err(PolyError::DimensionMismatch {
                        expected: j.vars.len(),
                        got: t.exp.len(),
                    });
                }
                let c = parse_rational(&t.coeff)
                    .ok_or_else(|| PolyError::Parse(format!("bad coefficient {:?}", t.coeff)))?;
                Ok((t.exp.clone(), c))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SparsePoly::from_terms(j.vars.clone(), terms))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Exponent,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_digit() || cs[i] == '.') {
                i += 1;
            }
            out.push(Tok::Num(cs[st..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_' || cs[i] == '\'') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(PolyError::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    vars: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn number(&mut self, first: String) -> Result<Rational> {
        let mut text = first;
        if self.peek() == Some(&Tok::Op('/')) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(d)) => text = format!("{text}/{d}"),
                _ => return Err(PolyError::Parse("expected denominator after '/'".into())),
            }
        }
        parse_rational(&text).ok_or_else(|| PolyError::Parse(format!("bad number {text:?}")))
    }

    fn term(&mut self, sign: Rational) -> Result<(Vec<(String, u32)>, Rational)> {
        let mut coeff = sign;
        let mut mono = Vec::new();
        loop {
            match self.next() {
                Some(Tok::Num(n)) => coeff *= self.number(n)?,
                Some(Tok::Ident(v)) => {
                    let mut k = 1u32;
                    if self.peek() == Some(&Tok::Op('^')) {
                        self.pos += 1;
                        match self.next() {
                            Some(Tok::Num(n)) => {
                                k = n.parse().map_err(|_| PolyError::Parse(format!("bad exponent {n:?}")))?
                            }
                            _ => return Err(PolyError::Parse("expected exponent after '^'".into())),
                        }
                    }
                    if !self.vars.contains(&v) {
                        self.vars.push(v.clone());
                    }
                    mono.push((v, k));
                }
                other => return Err(PolyError::Parse(format!("expected factor, found {other:?}"))),
            }
            if self.peek() == Some(&Tok::Op('*')) {
                self.pos += 1;
            } else {
                return Ok((mono, coeff));
            }
        }
    }
}

/// Parses the text form. Any arrangement of `+`, `-`, `*` and `^` over numbers and
/// identifiers is accepted; variables are ordered by first appearance.
pub fn parse_poly(text: &str) -> Result<SparsePoly> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(PolyError::Parse("empty input".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        vars: Vec::new(),
    };
    let mut raw = Vec::new();
    while p.peek().is_some() {
        let mut sign = Rational::one();
        while let Some(Tok::Op(c @ ('+' | '-'))) = p.peek().cloned() {
            if c == '-' {
                sign = -sign;
            }
            p.pos += 1;
        }
        raw.push(p.term(sign)?);
        match p.peek() {
            None | Some(Tok::Op('+' | '-')) => {}
            Some(t) => return Err(PolyError::Parse(format!("unexpected token {t:?}"))),
        }
    }
    let vars = p.vars;
    let terms = raw.into_iter().map(|(mono, c)| {
        let mut e = vec![0u32; vars.len()];
        for (v, k) in mono {
            e[vars.iter().position(|w| *w == v).unwrap()] += k;
        }
        (e, c)
    });
    let terms: Vec<_> = terms.collect();
    Ok(SparsePoly::from_terms(vars, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn text_round_trip() {
        let p = parse_poly("x0^2*x1 - 1/2*x2 + 3").unwrap();
        assert_eq!(p.coeff(&[("x0", 2), ("x1", 1)]), int(1));
        assert_eq!(p.coeff(&[("x2", 1)]), ratio(-1, 2));
        assert_eq!(p.to_text(), "1*x0^2*x1 - 1/2*x2 + 3");
        assert_eq!(parse_poly(&p.to_text()).unwrap(), p);
        assert_eq!(parse_poly("x'*y + -2*y*x'").unwrap().to_text(), "-1*x'*y");
        assert_eq!(parse_poly("0").unwrap().to_text(), "0");
    }

    #[test]
    fn json_round_trip() {
        let p = parse_poly("2*a*b + 1/3*b^2").unwrap();
        let j = serde_json::to_string(&p.to_json()).unwrap();
        let back = SparsePoly::from_json(&serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.vars(), p.vars());
    }

    #[test]
    fn parse_errors() {
        assert!(parse_poly("").is_err());
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("x + ").is_err());
        assert!(parse_poly("x $ y").is_err());
        assert!(parse_poly("1/0").is_err());
    }
}
