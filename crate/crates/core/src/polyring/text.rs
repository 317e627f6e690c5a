//! Reading and writing polynomials in the `z1*z2^2 - 3/2*z3 + 1` text form,
//! and polynomial systems with a `ring k=<k> order=<order> ...` header line.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{Exponent, Monomial, MonomialOrder, Polynomial, Rational, Term, MAX_VARIABLES};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct TextError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl TextError {
    fn new(column: usize, message: impl Into<String>) -> Self {
        TextError {
            line: 1,
            column,
            message: message.into(),
        }
    }

    fn on_line(mut self, line: usize) -> Self {
        self.line = line;
        self
    }
}

/// A term before the ring dimension is known: coefficient plus
/// `(0-based variable, exponent)` factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTerm {
    pub coeff: Rational,
    pub powers: Vec<(usize, Exponent)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, TextError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => out.push((col, Token::Plus)),
            '-' => out.push((col, Token::Minus)),
            '*' => out.push((col, Token::Star)),
            '/' => out.push((col, Token::Slash)),
            '^' => out.push((col, Token::Caret)),
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n = digits
                    .parse::<BigInt>()
                    .map_err(|_| TextError::new(col, "malformed number"))?;
                out.push((col, Token::Num(n)));
                continue;
            }
            'z' => {
                let start = i + 1;
                i = start;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i == start {
                    return Err(TextError::new(col, "expected variable index after 'z'"));
                }
                let digits: String = chars[start..i].iter().collect();
                let idx = digits
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| (1..=MAX_VARIABLES).contains(&v))
                    .ok_or_else(|| TextError::new(col, format!("invalid variable z{digits}")))?;
                out.push((col, Token::Var(idx - 1)));
                continue;
            }
            other => {
                return Err(TextError::new(
                    col,
                    format!("unexpected character {other:?}"),
                ))
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_col, |(c, _)| *c)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect_num(&mut self, what: &str) -> Result<BigInt, TextError> {
        let col = self.col();
        match self.next() {
            Some(Token::Num(n)) => Ok(n),
            _ => Err(TextError::new(col, format!("expected {what}"))),
        }
    }

    fn polynomial(&mut self) -> Result<Vec<RawTerm>, TextError> {
        if self.tokens.is_empty() {
            return Err(TextError::new(1, "empty polynomial"));
        }
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            let col = self.col();
            match self.next() {
                None => break,
                Some(Token::Plus) => negative = false,
                Some(Token::Minus) => negative = true,
                Some(_) => return Err(TextError::new(col, "expected '+' or '-'")),
            }
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<RawTerm, TextError> {
        let mut coeff = Rational::one();
        let mut powers: Vec<(usize, Exponent)> = Vec::new();
        loop {
            let col = self.col();
            match self.next() {
                Some(Token::Num(n)) => {
                    let mut c = Rational::from_integer(n);
                    if self.peek() == Some(&Token::Slash) {
                        self.pos += 1;
                        let dcol = self.col();
                        let d = self.expect_num("denominator")?;
                        if d.is_zero() {
                            return Err(TextError::new(dcol, "zero denominator"));
                        }
                        c /= Rational::from_integer(d);
                    }
                    coeff *= c;
                }
                Some(Token::Var(v)) => {
                    let mut e: Exponent = 1;
                    if self.peek() == Some(&Token::Caret) {
                        self.pos += 1;
                        let ecol = self.col();
                        let n = self.expect_num("exponent")?;
                        e = Exponent::try_from(n)
                            .map_err(|_| TextError::new(ecol, "exponent too large"))?;
                    }
                    match powers.iter_mut().find(|(w, _)| *w == v) {
                        Some((_, acc)) => {
                            *acc = acc
                                .checked_add(e)
                                .ok_or_else(|| TextError::new(col, "exponent overflow"))?;
                        }
                        None => powers.push((v, e)),
                    }
                }
                _ => return Err(TextError::new(col, "expected a number or variable")),
            }
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(RawTerm { coeff, powers })
    }
}

/// Parses one polynomial without fixing the ring dimension.
pub fn parse_raw_terms(text: &str) -> Result<Vec<RawTerm>, TextError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end_col: text.chars().count() + 1,
    };
    parser.polynomial()
}

/// Highest 0-based variable index mentioned, if any.
pub fn max_variable(terms: &[RawTerm]) -> Option<usize> {
    terms
        .iter()
        .flat_map(|t| t.powers.iter().map(|&(v, _)| v))
        .max()
}

pub fn build_polynomial(
    terms: &[RawTerm],
    nvars: usize,
    order: MonomialOrder,
) -> Result<Polynomial, TextError> {
    let mut built = Vec::with_capacity(terms.len());
    for t in terms {
        let mut exps = vec![0; nvars];
        for &(v, e) in &t.powers {
            if v >= nvars {
                return Err(TextError::new(
                    1,
                    format!("variable z{} outside ring of {nvars} variables", v + 1),
                ));
            }
            exps[v] = e;
        }
        built.push(Term::new(t.coeff.clone(), Monomial::new(exps)));
    }
    Polynomial::from_terms(nvars, order, built).map_err(|e| TextError::new(1, e.to_string()))
}

/// Parses a polynomial in the ring with `nvars` variables.
pub fn parse_polynomial(
    text: &str,
    nvars: usize,
    order: MonomialOrder,
) -> Result<Polynomial, TextError> {
    build_polynomial(&parse_raw_terms(text)?, nvars, order)
}

/// The `ring k=<k> order=<order> [mode=<mode>]` header line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingHeader {
    pub nvars: usize,
    pub order: MonomialOrder,
    /// Encoding mode tag carried through from `encode`, if present.
    pub mode: Option<String>,
}

impl RingHeader {
    pub fn render(&self) -> String {
        let mut s = format!("ring k={} order={}", self.nvars, self.order);
        if let Some(mode) = &self.mode {
            let _ = write!(s, " mode={mode}");
        }
        s
    }

    pub fn parse(line: &str) -> Result<Self, TextError> {
        let mut words = line.split_whitespace();
        if words.next() != Some("ring") {
            return Err(TextError::new(1, "expected 'ring' header"));
        }
        let mut nvars = None;
        let mut order = None;
        let mut mode = None;
        for w in words {
            let (key, value) = w
                .split_once('=')
                .ok_or_else(|| TextError::new(1, format!("malformed header field {w:?}")))?;
            match key {
                "k" => {
                    let k = value
                        .parse::<usize>()
                        .ok()
                        .filter(|&k| k <= MAX_VARIABLES)
                        .ok_or_else(|| TextError::new(1, format!("invalid k={value}")))?;
                    nvars = Some(k);
                }
                "order" => {
                    order = Some(
                        value
                            .parse::<MonomialOrder>()
                            .map_err(|e| TextError::new(1, e.to_string()))?,
                    );
                }
                "mode" => mode = Some(value.to_string()),
                other => return Err(TextError::new(1, format!("unknown header field {other:?}"))),
            }
        }
        Ok(RingHeader {
            nvars: nvars.ok_or_else(|| TextError::new(1, "header lacks k="))?,
            order: order.unwrap_or_default(),
            mode,
        })
    }
}

/// A list of polynomials sharing one ring, as read from or written to text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    pub header: RingHeader,
    pub polys: Vec<Polynomial>,
}

impl PolySystem {
    /// Parses one polynomial per line. Blank lines and lines starting with
    /// `#` are skipped. An optional leading `ring ...` header fixes the
    /// dimension and order; without it the dimension is the largest
    /// variable index used. `order` overrides the header's order.
    pub fn parse(text: &str, order: Option<MonomialOrder>) -> Result<Self, TextError> {
        let mut header: Option<RingHeader> = None;
        let mut raw: Vec<(usize, Vec<RawTerm>)> = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            if trimmed.starts_with("ring") {
                if header.is_some() || !raw.is_empty() {
                    return Err(TextError::new(1, "header must be the first line").on_line(lineno));
                }
                header = Some(RingHeader::parse(trimmed).map_err(|e| e.on_line(lineno))?);
                continue;
            }
            raw.push((
                lineno,
                parse_raw_terms(trimmed).map_err(|e| e.on_line(lineno))?,
            ));
        }
        let mut header = header.unwrap_or_else(|| RingHeader {
            nvars: raw
                .iter()
                .filter_map(|(_, t)| max_variable(t))
                .max()
                .map_or(0, |v| v + 1),
            order: MonomialOrder::default(),
            mode: None,
        });
        if let Some(o) = order {
            header.order = o;
        }
        let polys = raw
            .iter()
            .map(|(lineno, terms)| {
                build_polynomial(terms, header.nvars, header.order).map_err(|e| e.on_line(*lineno))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolySystem { header, polys })
    }

    /// Header line followed by one polynomial per line.
    pub fn render(&self) -> String {
        let mut out = self.header.render();
        out.push('\n');
        for p in &self.polys {
            let _ = writeln!(out, "{p}");
        }
        out
    }
}
