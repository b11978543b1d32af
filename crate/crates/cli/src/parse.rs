//! Input parsing: the expression grammars for binary forms and univariate
//! polynomials, and the `.kv` input file format.
//!
//! Form grammar (whitespace insignificant, `#` comments to end of line):
//!
//! ```text
//! form     := ['+'|'-'] term (('+'|'-') term)*
//! term     := [rational ['*']] monomial | rational
//! monomial := ('s' ['^' int])? ('t' ['^' int])?
//! rational := int ['/' positive-int]
//! ```
//!
//! Polynomial grammar: sums, products and integer powers of rationals and
//! `t`, with parentheses.

use khovanskii::{BinaryForm, CurveAlgebra, Form, Int, MultigradedAlgebra, Rat, UniPoly};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(Int),
    VarS,
    VarT,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Tokens {
    line: usize,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn lex(text: &str, line: usize) -> Result<Tokens, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' => {
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                toks.push((Tok::Int(digits.parse().unwrap()), col));
            }
            's' => {
                toks.push((Tok::VarS, col));
                i += 1;
            }
            't' => {
                toks.push((Tok::VarT, col));
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, col));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, col));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, col));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, col));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, col));
                i += 1;
            }
            other => {
                return Err(ParseError {
                    line,
                    col,
                    message: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(Tokens { line, toks, pos: 0 })
}

impl Tokens {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, c)| *c)
            .unwrap_or_else(|| self.toks.last().map(|(_, c)| c + 1).unwrap_or(1))
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col(),
            message: message.into(),
        }
    }

    /// Consumes a run of '+'/'-' tokens, returning the accumulated sign;
    /// `None` if no sign token is present.
    fn take_signs(&mut self) -> Option<i32> {
        let mut sign = 1;
        let mut seen = false;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    seen = true;
                    self.bump();
                }
                Tok::Minus => {
                    seen = true;
                    sign = -sign;
                    self.bump();
                }
                _ => break,
            }
        }
        seen.then_some(sign)
    }

    /// `int ['/' positive-int]`, the leading int already peeked.
    fn take_rational(&mut self) -> Result<Rat, ParseError> {
        let Some(Tok::Int(num)) = self.bump() else {
            return Err(self.error("expected an integer"));
        };
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            match self.bump() {
                Some(Tok::Int(den)) if !den.is_zero() => Ok(Rat::new(num, den)),
                Some(Tok::Int(_)) => Err(self.error("zero denominator")),
                _ => Err(self.error("expected a positive integer denominator")),
            }
        } else {
            Ok(Rat::from_integer(num))
        }
    }

    /// `['^' int]`, defaulting to 1.
    fn take_exponent(&mut self) -> Result<usize, ParseError> {
        if self.peek() != Some(&Tok::Caret) {
            return Ok(1);
        }
        self.bump();
        match self.bump() {
            Some(Tok::Int(e)) => usize::try_from(e.clone())
                .map_err(|_| self.error("exponent out of range")),
            _ => Err(self.error("expected an integer exponent")),
        }
    }
}

/// Parses a homogeneous binary form; every term must have the same total
/// degree.
pub fn parse_form(text: &str, line: usize) -> Result<Form, ParseError> {
    let mut toks = lex(text, line)?;
    let mut terms: Vec<(Rat, usize, usize)> = Vec::new();
    let mut sign = toks.take_signs().unwrap_or(1);
    loop {
        let term_col = toks.col();
        let mut coeff = match toks.peek() {
            Some(Tok::Int(_)) => {
                let c = toks.take_rational()?;
                if toks.peek() == Some(&Tok::Star) {
                    toks.bump();
                }
                Some(c)
            }
            _ => None,
        };
        let mut s_exp = None;
        let mut t_exp = None;
        if toks.peek() == Some(&Tok::VarS) {
            toks.bump();
            s_exp = Some(toks.take_exponent()?);
        }
        if toks.peek() == Some(&Tok::VarT) {
            toks.bump();
            t_exp = Some(toks.take_exponent()?);
        }
        if coeff.is_none() && s_exp.is_none() && t_exp.is_none() {
            return Err(ParseError {
                line,
                col: term_col,
                message: "expected a term (coefficient or monomial)".into(),
            });
        }
        let c = coeff.take().unwrap_or_else(Rat::one);
        let c = if sign < 0 { -c } else { c };
        terms.push((c, s_exp.unwrap_or(0), t_exp.unwrap_or(0)));

        match toks.take_signs() {
            Some(s) => sign = s,
            None => {
                if toks.peek().is_some() {
                    return Err(toks.error("expected '+' or '-' between terms"));
                }
                break;
            }
        }
    }
    let degree = terms[0].1 + terms[0].2;
    for &(_, s, t) in &terms {
        if s + t != degree {
            return Err(ParseError {
                line,
                col: 1,
                message: format!(
                    "inhomogeneous expression: term of degree {} in a form of degree {}",
                    s + t,
                    degree
                ),
            });
        }
    }
    let mut coeffs = vec![Rat::zero(); degree + 1];
    for (c, _, t) in terms {
        coeffs[t] += c;
    }
    Ok(BinaryForm::new(coeffs))
}

/// Parses a polynomial in `t`: sums, products and integer powers of
/// rationals and `t`, with parentheses.
pub fn parse_poly_t(text: &str, line: usize) -> Result<UniPoly, ParseError> {
    let mut toks = lex(text, line)?;
    let p = parse_poly_expr(&mut toks)?;
    if toks.peek().is_some() {
        return Err(toks.error("unexpected trailing input"));
    }
    Ok(p)
}

fn parse_poly_expr(toks: &mut Tokens) -> Result<UniPoly, ParseError> {
    let mut sign = toks.take_signs().unwrap_or(1);
    let mut acc = UniPoly::zero();
    loop {
        let term = parse_poly_term(toks)?;
        acc = if sign < 0 { acc.sub(&term) } else { acc.add(&term) };
        match toks.take_signs() {
            Some(s) => sign = s,
            None => break,
        }
        if toks.peek().is_none() {
            return Err(toks.error("dangling operator"));
        }
    }
    Ok(acc)
}

fn starts_factor(t: Option<&Tok>) -> bool {
    matches!(t, Some(Tok::VarT) | Some(Tok::LParen))
}

fn parse_poly_term(toks: &mut Tokens) -> Result<UniPoly, ParseError> {
    let mut acc = parse_poly_factor(toks)?;
    loop {
        if toks.peek() == Some(&Tok::Star) {
            toks.bump();
            if toks.peek().is_none() {
                return Err(toks.error("dangling '*'"));
            }
            acc = acc.mul(&parse_poly_factor(toks)?);
        } else if starts_factor(toks.peek()) {
            // juxtaposition like 2(t-1) or (t-1)t
            acc = acc.mul(&parse_poly_factor(toks)?);
        } else {
            break;
        }
    }
    Ok(acc)
}

fn parse_poly_factor(toks: &mut Tokens) -> Result<UniPoly, ParseError> {
    let base = match toks.peek() {
        Some(Tok::Int(_)) => UniPoly::constant(toks.take_rational()?),
        Some(Tok::VarT) => {
            toks.bump();
            UniPoly::variable()
        }
        Some(Tok::LParen) => {
            toks.bump();
            let inner = parse_poly_expr(toks)?;
            if toks.bump() != Some(Tok::RParen) {
                return Err(toks.error("expected ')'"));
            }
            inner
        }
        Some(Tok::Minus) => {
            // unary minus inside a factor position, e.g. 2*-3
            toks.bump();
            return Ok(parse_poly_factor(toks)?.neg());
        }
        _ => return Err(toks.error("expected a rational, 't' or '('")),
    };
    if toks.peek() == Some(&Tok::Caret) {
        let e = toks.take_exponent()?;
        Ok(base.pow(e))
    } else {
        Ok(base)
    }
}

/// A parsed `.kv` input: exactly one block per file.
pub enum InputDocument {
    Curve(CurveAlgebra),
    Multigraded(MultigradedAlgebra),
}

#[derive(Debug)]
pub enum InputError {
    Parse(ParseError),
    Core(khovanskii::Error),
    Layout { line: usize, message: String },
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Parse(e) => write!(f, "{e}"),
            InputError::Core(e) => write!(f, "{e}"),
            InputError::Layout { line, message } => write!(f, "line {line}: {message}"),
        }
    }
}

impl From<ParseError> for InputError {
    fn from(e: ParseError) -> Self {
        InputError::Parse(e)
    }
}

impl From<khovanskii::Error> for InputError {
    fn from(e: khovanskii::Error) -> Self {
        InputError::Core(e)
    }
}

/// Strips a '#' comment and surrounding whitespace.
fn content_of(raw: &str) -> &str {
    let text = raw.split('#').next().unwrap_or("");
    text.trim()
}

pub fn parse_document(text: &str) -> Result<InputDocument, InputError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, content_of(raw)))
        .filter(|(_, s)| !s.is_empty());
    let Some((header_line, header)) = lines.next() else {
        return Err(InputError::Layout {
            line: 1,
            message: "empty input: expected a 'curve' or 'multigraded' header".into(),
        });
    };
    let mut parts = header.split_whitespace();
    let kind = parts.next().unwrap_or("");
    let arg = parts.next();
    if parts.next().is_some() {
        return Err(InputError::Layout {
            line: header_line,
            message: "header takes exactly one argument".into(),
        });
    }
    let arg: usize = arg
        .and_then(|a| a.parse().ok())
        .ok_or(InputError::Layout {
            line: header_line,
            message: format!("header '{kind}' needs a non-negative integer argument"),
        })?;
    match kind {
        "curve" => {
            let ambient = arg;
            let mut basis = Vec::new();
            for (line_no, line) in lines {
                let f = parse_form(line, line_no)?;
                if f.degree() != ambient {
                    return Err(InputError::Layout {
                        line: line_no,
                        message: format!(
                            "form has degree {}, the block declares degree {ambient}",
                            f.degree()
                        ),
                    });
                }
                basis.push(f);
            }
            Ok(InputDocument::Curve(CurveAlgebra::new(ambient, &basis)?))
        }
        "multigraded" => {
            let rank = arg;
            let mut gens = Vec::new();
            for (line_no, line) in lines {
                let Some((poly_text, weight_text)) = line.split_once(';') else {
                    return Err(InputError::Layout {
                        line: line_no,
                        message: "generator lines read 'poly-in-t ; weight-vector'".into(),
                    });
                };
                let p = parse_poly_t(poly_text.trim(), line_no)?;
                let weight: Result<Vec<i64>, _> = weight_text
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(str::parse)
                    .collect();
                let weight = weight.map_err(|_| InputError::Layout {
                    line: line_no,
                    message: "weight vector must be a list of integers".into(),
                })?;
                if weight.len() != rank {
                    return Err(InputError::Layout {
                        line: line_no,
                        message: format!(
                            "weight vector has {} entries, the block declares rank {rank}",
                            weight.len()
                        ),
                    });
                }
                gens.push((p, weight));
            }
            Ok(InputDocument::Multigraded(MultigradedAlgebra::new(
                rank, gens,
            )?))
        }
        other => Err(InputError::Layout {
            line: header_line,
            message: format!("unknown block kind '{other}' (expected 'curve' or 'multigraded')"),
        }),
    }
}

/// Parses "a,b" as a point of the projective line with rational entries.
pub fn parse_point(text: &str) -> Result<khovanskii::PointP1, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err("expected two comma-separated rationals, like '1,0'".into());
    }
    let a: Rat = parts[0]
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse '{}' as a rational", parts[0].trim()))?;
    let b: Rat = parts[1]
        .trim()
        .parse()
        .map_err(|_| format!("cannot parse '{}' as a rational", parts[1].trim()))?;
    khovanskii::PointP1::from_rationals(&a, &b).map_err(|e| e.to_string())
}

/// Parses a rational or "inf" as a valuation point of the function field.
pub fn parse_tau(text: &str) -> Result<khovanskii::Tau, String> {
    let text = text.trim();
    if matches!(text, "inf" | "infinity" | "oo") {
        return Ok(khovanskii::Tau::Infinity);
    }
    let r: Rat = text
        .parse()
        .map_err(|_| format!("cannot parse '{text}' as a rational or 'inf'"))?;
    Ok(khovanskii::Tau::Finite(r))
}

/// Parses "a,b,..." as an integer ray vector.
pub fn parse_ray(text: &str) -> Result<Vec<i64>, String> {
    let ray: Result<Vec<i64>, _> = text
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect();
    ray.map_err(|_| format!("cannot parse '{text}' as a comma-separated integer vector"))
}
