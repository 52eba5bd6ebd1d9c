//! Structure-file parsing.
//!
//! Line-oriented text format:
//!
//! ```text
//! # comment
//! name = kodaira_thurston
//! n = 2
//! d phi2 = (1/2)i * phi1^phibar1
//! ```
//!
//! A term is `<scalar> * <factor>^<factor>` where a factor is `phi<i>` or
//! `phibar<i>`; the scalar may be omitted (meaning 1). Scalar literals accept
//! `a`, `a/b`, `i`, `2i`, `(a/b)i`, `a/b*i`, and sums like `a + (c/d)i`.
//! Omitted `d phi<k>` lines mean zero. An equivalent JSON-shaped document is
//! accepted: `{"name": ..., "n": ..., "d_phi": {"phi2": "<terms>"}}`; it is
//! recognized by a leading `{`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::exterior::BigradedForm;
use crate::scalar::Scalar;

use super::{CoalgebraSpec, ValidationError, MAX_DIM};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("json input: {0}")]
    Json(String),
    #[error("{0}")]
    Validation(#[from] ValidationError),
}

fn syn(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

/// Parse a structure document, text or JSON-shaped, and validate it.
pub fn parse_str(input: &str) -> Result<CoalgebraSpec, ParseError> {
    let spec = if input.trim_start().starts_with('{') {
        parse_json(input)?
    } else {
        parse_text(input)?
    };
    spec.validate()?;
    Ok(spec)
}

fn parse_text(input: &str) -> Result<CoalgebraSpec, ParseError> {
    let mut name: Option<String> = None;
    let mut n: Option<usize> = None;
    let mut d_lines: Vec<(usize, usize, String)> = Vec::new(); // (line, k, rhs)

    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| syn(line_no, 1, "expected `<key> = <value>`"))?;
        let lhs = lhs.trim();
        let rhs = rhs.trim();
        match lhs {
            "name" => {
                if name.is_some() {
                    return Err(syn(line_no, 1, "duplicate `name`"));
                }
                name = Some(rhs.to_string());
            }
            "n" => {
                if n.is_some() {
                    return Err(syn(line_no, 1, "duplicate `n`"));
                }
                let v: usize = rhs
                    .parse()
                    .map_err(|_| syn(line_no, 1, format!("`n` must be an integer, got `{rhs}`")))?;
                n = Some(v);
            }
            _ => {
                let rest = lhs
                    .strip_prefix("d ")
                    .or_else(|| lhs.strip_prefix("d\t"))
                    .ok_or_else(|| {
                        syn(
                            line_no,
                            1,
                            format!("unknown key `{lhs}`; expected name, n, or d phi<k>"),
                        )
                    })?;
                let gen = rest.trim();
                let k = gen
                    .strip_prefix("phi")
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| {
                        syn(line_no, 1, format!("expected `d phi<k>`, got `d {gen}`"))
                    })?;
                if d_lines.iter().any(|(_, kk, _)| *kk == k) {
                    return Err(syn(line_no, 1, format!("duplicate `d phi{k}`")));
                }
                d_lines.push((line_no, k, rhs.to_string()));
            }
        }
    }

    let name = name.ok_or_else(|| syn(0, 0, "missing `name = <string>` header"))?;
    let n = n.ok_or_else(|| syn(0, 0, "missing `n = <integer>` header"))?;
    if n == 0 || n > MAX_DIM {
        return Err(ValidationError::BadDimension(n).into());
    }

    let mut d_phi = vec![BigradedForm::zero(n); n];
    for (line_no, k, rhs) in d_lines {
        if k == 0 || k > n {
            return Err(syn(
                line_no,
                1,
                format!("phi{k} is out of range for n = {n}"),
            ));
        }
        d_phi[k - 1] = parse_form(&rhs, n, line_no)?;
    }

    Ok(CoalgebraSpec { name, n, d_phi })
}

fn parse_json(input: &str) -> Result<CoalgebraSpec, ParseError> {
    let doc: serde_json::Value =
        serde_json::from_str(input).map_err(|e| ParseError::Json(e.to_string()))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| ParseError::Json("top level must be an object".into()))?;
    let name = obj
        .get("name")
        .and_then(|v| v.as_str())
        .ok_or_else(|| ParseError::Json("missing string field `name`".into()))?
        .to_string();
    let n = obj
        .get("n")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| ParseError::Json("missing integer field `n`".into()))? as usize;
    if n == 0 || n > MAX_DIM {
        return Err(ValidationError::BadDimension(n).into());
    }
    let mut d_phi = vec![BigradedForm::zero(n); n];
    if let Some(map) = obj.get("d_phi") {
        let map = map
            .as_object()
            .ok_or_else(|| ParseError::Json("`d_phi` must be an object".into()))?;
        for (key, value) in map {
            let k = key
                .strip_prefix("phi")
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|k| *k >= 1 && *k <= n)
                .ok_or_else(|| {
                    ParseError::Json(format!("`d_phi` key `{key}` is not phi1..phi{n}"))
                })?;
            let text = value
                .as_str()
                .ok_or_else(|| ParseError::Json(format!("`d_phi.{key}` must be a string")))?;
            d_phi[k - 1] = parse_form(text, n, 0)?;
        }
    }
    Ok(CoalgebraSpec { name, n, d_phi })
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Slash,
    LParen,
    RParen,
    ImUnit,
    Plus,
    Minus,
    Star,
    Caret,
    Phi(usize),
    Phibar(usize),
}

fn tokenize(s: &str, line: usize) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        let col = pos + 1;
        match c {
            ' ' | '\t' => {
                pos += 1;
            }
            '/' => {
                out.push((col, Tok::Slash));
                pos += 1;
            }
            '(' => {
                out.push((col, Tok::LParen));
                pos += 1;
            }
            ')' => {
                out.push((col, Tok::RParen));
                pos += 1;
            }
            '+' => {
                out.push((col, Tok::Plus));
                pos += 1;
            }
            '-' => {
                out.push((col, Tok::Minus));
                pos += 1;
            }
            '*' => {
                out.push((col, Tok::Star));
                pos += 1;
            }
            '^' => {
                out.push((col, Tok::Caret));
                pos += 1;
            }
            '0'..='9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let num: BigInt = s[start..pos].parse().expect("digits");
                out.push((col, Tok::Num(num)));
            }
            'i' => {
                out.push((col, Tok::ImUnit));
                pos += 1;
            }
            'p' => {
                let rest = &s[pos..];
                let (bar, after) = if let Some(r) = rest.strip_prefix("phibar") {
                    (true, r)
                } else if let Some(r) = rest.strip_prefix("phi") {
                    (false, r)
                } else {
                    return Err(syn(line, col, format!("unexpected token at `{rest}`")));
                };
                let digits: String = after.chars().take_while(|c| c.is_ascii_digit()).collect();
                if digits.is_empty() {
                    return Err(syn(line, col, "phi factor needs an index, e.g. phi1"));
                }
                let k: usize = digits
                    .parse()
                    .map_err(|_| syn(line, col, "phi index out of range"))?;
                let tok = if bar { Tok::Phibar(k) } else { Tok::Phi(k) };
                let len = if bar { 6 } else { 3 } + digits.len();
                out.push((col, tok));
                pos += len;
            }
            other => {
                return Err(syn(line, col, format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

struct Cursor<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map_or(1, |(c, _)| *c)
    }

    fn next(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        let (line, col) = (self.line, self.col());
        match self.next() {
            Some(t) if *t == tok => Ok(()),
            _ => Err(syn(line, col, format!("expected {what}"))),
        }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        syn(self.line, self.col(), msg)
    }
}

/// `Num [/ Num]` as an exact rational.
fn parse_rational(c: &mut Cursor) -> Result<BigRational, ParseError> {
    let numer = match c.next() {
        Some(Tok::Num(v)) => v.clone(),
        _ => return Err(c.err("expected a number")),
    };
    if c.peek() == Some(&Tok::Slash) {
        c.next();
        let denom = match c.next() {
            Some(Tok::Num(v)) => v.clone(),
            _ => return Err(c.err("expected a denominator")),
        };
        if denom.is_zero() {
            return Err(c.err("zero denominator"));
        }
        Ok(BigRational::new(numer, denom))
    } else {
        Ok(BigRational::from_integer(numer))
    }
}

/// One signed summand of a scalar literal: `i`, `rat`, `rat i`, `(rat)i`,
/// `rat*i`.
fn parse_scalar_part(c: &mut Cursor) -> Result<Scalar, ParseError> {
    let mut sign = BigRational::from_integer(1.into());
    loop {
        match c.peek() {
            Some(Tok::Minus) => {
                c.next();
                sign = -sign;
            }
            Some(Tok::Plus) => {
                c.next();
            }
            _ => break,
        }
    }
    let magnitude = match c.peek() {
        Some(Tok::ImUnit) => {
            c.next();
            return Ok(Scalar::new(BigRational::zero(), sign));
        }
        Some(Tok::LParen) => {
            c.next();
            let r = parse_rational(c)?;
            c.expect(Tok::RParen, "`)`")?;
            r
        }
        Some(Tok::Num(_)) => parse_rational(c)?,
        _ => return Err(c.err("expected a scalar")),
    };
    // optional imaginary unit, with or without `*`
    let imaginary = match c.peek() {
        Some(Tok::ImUnit) => {
            c.next();
            true
        }
        Some(Tok::Star) => {
            // only consume when `i` follows: otherwise the star separates the
            // scalar from the monomial
            if let Some((_, Tok::ImUnit)) = c.toks.get(c.pos + 1) {
                c.next();
                c.next();
                true
            } else {
                false
            }
        }
        _ => false,
    };
    let v = sign * magnitude;
    Ok(if imaginary {
        Scalar::new(BigRational::zero(), v)
    } else {
        Scalar::new(v, BigRational::zero())
    })
}

/// A full scalar literal, a signed sum of parts.
fn parse_scalar_sum(c: &mut Cursor) -> Result<Scalar, ParseError> {
    let mut acc = parse_scalar_part(c)?;
    while matches!(c.peek(), Some(Tok::Plus) | Some(Tok::Minus)) {
        // stop if the remainder belongs to the next term rather than this
        // scalar; callers handle term boundaries
        let save = c.pos;
        let part = parse_scalar_part(c);
        match part {
            Ok(p) => acc = &acc + &p,
            Err(_) => {
                c.pos = save;
                break;
            }
        }
    }
    Ok(acc)
}

/// Parse a standalone scalar literal (used by tests and tooling).
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    let toks = tokenize(text, 0)?;
    let mut c = Cursor {
        toks: &toks,
        pos: 0,
        line: 0,
    };
    let s = parse_scalar_sum(&mut c)?;
    if c.peek().is_some() {
        return Err(c.err("trailing input after scalar"));
    }
    Ok(s)
}

fn parse_factor(c: &mut Cursor, n: usize) -> Result<BigradedForm, ParseError> {
    let (line, col) = (c.line, c.col());
    match c.next() {
        Some(Tok::Phi(k)) => {
            let k = *k;
            if k == 0 || k > n {
                return Err(syn(
                    line,
                    col,
                    format!("phi{k} is out of range for n = {n}"),
                ));
            }
            Ok(BigradedForm::phi(n, k))
        }
        Some(Tok::Phibar(k)) => {
            let k = *k;
            if k == 0 || k > n {
                return Err(syn(
                    line,
                    col,
                    format!("phibar{k} is out of range for n = {n}"),
                ));
            }
            Ok(BigradedForm::phibar(n, k))
        }
        _ => Err(syn(line, col, "expected phi<k> or phibar<k>")),
    }
}

/// A sum of terms `<scalar> * <factor>^<factor>`.
fn parse_form(text: &str, n: usize, line: usize) -> Result<BigradedForm, ParseError> {
    if text.trim() == "0" {
        return Ok(BigradedForm::zero(n));
    }
    let toks = tokenize(text, line)?;
    let mut c = Cursor {
        toks: &toks,
        pos: 0,
        line,
    };
    let mut out = BigradedForm::zero(n);
    loop {
        // optional scalar prefix; a bare monomial means coefficient 1
        let coeff = match c.peek() {
            Some(Tok::Phi(_)) | Some(Tok::Phibar(_)) => Scalar::one(),
            _ => {
                let s = parse_scalar_sum(&mut c)?;
                // optional separating `*`
                if c.peek() == Some(&Tok::Star) {
                    c.next();
                }
                s
            }
        };
        let a = parse_factor(&mut c, n)?;
        c.expect(Tok::Caret, "`^` between the two factors of a term")?;
        let b = parse_factor(&mut c, n)?;
        out = out.add(&a.wedge(&b).scale(&coeff));
        match c.peek() {
            None => break,
            Some(Tok::Plus) => {
                c.next();
            }
            Some(Tok::Minus) => {
                // leave the sign for the next term's scalar
            }
            _ => return Err(c.err("expected `+`, `-`, or end of terms")),
        }
    }
    Ok(out)
}
