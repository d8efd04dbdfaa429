//! Text grammar for polynomials and differential forms.
//!
//! Expressions are `+`/`-` separated terms; a term multiplies rational
//! literals (`3`, `3/2`), variable powers (`z0^2`), parenthesized
//! polynomials, and at most one differential chain (`dz1^dz3`).  The caret
//! is an exponent after a variable and a wedge after a differential;
//! `dz1^2` is rejected because repeated differentials vanish.  Variable
//! names follow the ambient chart: `z1..z4` in four variables, `z0..` in
//! every other dimension.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exterior::DiffForm;
use crate::ring::{var_index, var_name, Polynomial};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Num(s) => s.clone(),
        Tok::Ident(s) => s.clone(),
        Tok::Plus => "+".into(),
        Tok::Minus => "-".into(),
        Tok::Star => "*".into(),
        Tok::Caret => "^".into(),
        Tok::Slash => "/".into(),
        Tok::LParen => "(".into(),
        Tok::RParen => ")".into(),
    }
}

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner { chars: text.chars().peekable(), line: 1, col: 1 }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> char {
        let c = self.chars.next().expect("bump only after peek");
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }
}

fn tokenize(text: &str) -> Result<(Vec<Token>, usize, usize)> {
    let mut tokens = Vec::new();
    let mut sc = Scanner::new(text);
    while let Some(c) = sc.peek() {
        let (tline, tcol) = (sc.line, sc.col);
        if c.is_whitespace() {
            sc.bump();
            continue;
        }
        let tok = match c {
            '+' => {
                sc.bump();
                Tok::Plus
            }
            '-' => {
                sc.bump();
                Tok::Minus
            }
            '*' => {
                sc.bump();
                Tok::Star
            }
            '^' => {
                sc.bump();
                Tok::Caret
            }
            '/' => {
                sc.bump();
                Tok::Slash
            }
            '(' => {
                sc.bump();
                Tok::LParen
            }
            ')' => {
                sc.bump();
                Tok::RParen
            }
            _ if c.is_ascii_digit() => {
                let mut s = String::new();
                while matches!(sc.peek(), Some(d) if d.is_ascii_digit()) {
                    s.push(sc.bump());
                }
                Tok::Num(s)
            }
            _ if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while matches!(sc.peek(), Some(d) if d.is_ascii_alphanumeric() || d == '_') {
                    s.push(sc.bump());
                }
                Tok::Ident(s)
            }
            _ => return Err(parse_err(tline, tcol, format!("unexpected character `{c}`"))),
        };
        tokens.push(Token { tok, line: tline, col: tcol });
    }
    Ok((tokens, sc.line, sc.col))
}

struct Parser {
    ambient: usize,
    tokens: Vec<Token>,
    pos: usize,
    end_line: usize,
    end_col: usize,
}

/// One multiplicative term of a form expression: the scalar part together
/// with the differential indices in written order.
struct FormTerm {
    indices: Vec<usize>,
    scalar: Polynomial,
    line: usize,
    col: usize,
}

impl Parser {
    fn new(ambient: usize, text: &str) -> Result<Self> {
        let (tokens, end_line, end_col) = tokenize(text)?;
        Ok(Parser { ambient, tokens, pos: 0, end_line, end_col })
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        match self.tokens.get(self.pos) {
            Some(t) => (t.line, t.col),
            None => (self.end_line, self.end_col),
        }
    }

    fn advance(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, message: impl Into<String>) -> Error {
        let (line, col) = self.here();
        parse_err(line, col, message)
    }

    fn expect_end(&self) -> Result<()> {
        if self.pos < self.tokens.len() {
            let t = &self.tokens[self.pos];
            return Err(parse_err(t.line, t.col, format!("unexpected `{}`", describe(&t.tok))));
        }
        Ok(())
    }

    /// `sign? product (sign product)*`, stopping before `)` or the end.
    fn polynomial_expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ambient);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(Tok::Plus) => {
                    self.advance();
                    false
                }
                Some(Tok::Minus) => {
                    self.advance();
                    true
                }
                None | Some(Tok::RParen) if !first => break,
                _ if first => false,
                _ => return Err(self.err_here("expected `+` or `-` between terms")),
            };
            let p = self.polynomial_product()?;
            acc = if negative { acc.checked_sub(&p) } else { acc.checked_add(&p) }?;
            first = false;
        }
        Ok(acc)
    }

    fn polynomial_product(&mut self) -> Result<Polynomial> {
        let mut acc = self.polynomial_atom()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.advance();
            let p = self.polynomial_atom()?;
            acc = acc.checked_mul(&p)?;
        }
        Ok(acc)
    }

    fn polynomial_atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Num(_)) => {
                let c = self.rational_literal()?;
                Ok(Polynomial::constant(self.ambient, c))
            }
            Some(Tok::Ident(name)) => {
                let (line, col) = self.here();
                self.advance();
                if is_differential(self.ambient, &name) {
                    return Err(parse_err(line, col, format!("differential `{name}` is not allowed in a polynomial")));
                }
                let index = resolve_var(self.ambient, &name)
                    .ok_or_else(|| parse_err(line, col, unknown_variable(self.ambient, &name)))?;
                let exponent = self.optional_exponent()?;
                Ok(Polynomial::var(self.ambient, index).pow(exponent))
            }
            Some(Tok::LParen) => {
                self.advance();
                let inner = self.polynomial_expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.advance();
                        Ok(inner)
                    }
                    _ => Err(self.err_here("expected `)`")),
                }
            }
            _ => Err(self.err_here("expected a number, variable, or `(`")),
        }
    }

    /// `num (`/` num)?` as an exact rational.
    fn rational_literal(&mut self) -> Result<BigRational> {
        let (line, col) = self.here();
        let numer = match self.advance().map(|t| t.tok.clone()) {
            Some(Tok::Num(s)) => s.parse::<BigInt>().expect("digit string"),
            _ => return Err(parse_err(line, col, "expected a number")),
        };
        if matches!(self.peek(), Some(Tok::Slash)) {
            self.advance();
            let (dline, dcol) = self.here();
            let denom = match self.advance().map(|t| t.tok.clone()) {
                Some(Tok::Num(s)) => s.parse::<BigInt>().expect("digit string"),
                _ => return Err(parse_err(dline, dcol, "expected a denominator after `/`")),
            };
            if denom == BigInt::from(0) {
                return Err(parse_err(dline, dcol, "zero denominator in rational literal"));
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    fn optional_exponent(&mut self) -> Result<u32> {
        if !matches!(self.peek(), Some(Tok::Caret)) {
            return Ok(1);
        }
        self.advance();
        let (line, col) = self.here();
        match self.advance().map(|t| t.tok.clone()) {
            Some(Tok::Num(s)) => s
                .parse::<u32>()
                .map_err(|_| parse_err(line, col, format!("exponent `{s}` is too large"))),
            _ => Err(parse_err(line, col, "expected an integer exponent after `^`")),
        }
    }

    fn form_expr(&mut self) -> Result<Vec<FormTerm>> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(Tok::Plus) => {
                    self.advance();
                    false
                }
                Some(Tok::Minus) => {
                    self.advance();
                    true
                }
                None if !first => break,
                _ if first => false,
                _ => return Err(self.err_here("expected `+` or `-` between terms")),
            };
            let mut term = self.form_product()?;
            if negative {
                term.scalar = term.scalar.neg();
            }
            terms.push(term);
            first = false;
        }
        Ok(terms)
    }

    fn form_product(&mut self) -> Result<FormTerm> {
        let (line, col) = self.here();
        let mut indices: Vec<usize> = Vec::new();
        let mut scalar = Polynomial::one(self.ambient);
        let mut first = true;
        loop {
            if !first {
                if matches!(self.peek(), Some(Tok::Star)) {
                    self.advance();
                } else {
                    break;
                }
            }
            match self.peek().cloned() {
                Some(Tok::Ident(name)) if is_differential(self.ambient, &name) => {
                    let (dline, dcol) = self.here();
                    if !indices.is_empty() {
                        return Err(parse_err(dline, dcol, "use `^` to wedge differentials, not `*`"));
                    }
                    self.differential_chain(&mut indices)?;
                }
                _ => {
                    let p = self.polynomial_atom()?;
                    scalar = scalar.checked_mul(&p)?;
                }
            }
            first = false;
        }
        Ok(FormTerm { indices, scalar, line, col })
    }

    /// `dz_i (^ dz_j)*`; a numeric exponent on a differential is rejected.
    fn differential_chain(&mut self, indices: &mut Vec<usize>) -> Result<()> {
        loop {
            let (line, col) = self.here();
            let name = match self.advance().map(|t| t.tok.clone()) {
                Some(Tok::Ident(name)) if is_differential(self.ambient, &name) => name,
                Some(Tok::Ident(name)) if resolve_var(self.ambient, &name).is_none() => {
                    return Err(parse_err(line, col, unknown_variable(self.ambient, &name)))
                }
                _ => return Err(parse_err(line, col, "expected a differential after `^`")),
            };
            let index = resolve_var(self.ambient, &name[1..]).expect("checked by is_differential");
            indices.push(index);
            if !matches!(self.peek(), Some(Tok::Caret)) {
                return Ok(());
            }
            self.advance();
            if let Some(Tok::Num(_)) = self.peek() {
                let (nline, ncol) = self.here();
                return Err(parse_err(
                    nline,
                    ncol,
                    "differentials cannot be raised to a power; repeated factors vanish",
                ));
            }
        }
    }
}

/// Resolve a printed variable name (`z3`) to its internal index under the
/// ambient chart convention.
fn resolve_var(ambient: usize, name: &str) -> Option<usize> {
    let digits = name.strip_prefix('z')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    let printed: usize = digits.parse().ok()?;
    var_index(ambient, printed)
}

fn is_differential(ambient: usize, name: &str) -> bool {
    matches!(name.strip_prefix('d'), Some(rest) if resolve_var(ambient, rest).is_some())
}

fn unknown_variable(ambient: usize, name: &str) -> String {
    let last = var_name(ambient, ambient - 1);
    let first = var_name(ambient, 0);
    format!("unknown variable `{name}`; this chart uses {first}..{last}")
}

fn check_ambient(ambient: usize) -> Result<()> {
    if ambient == 0 {
        return Err(Error::InvalidInput("ambient dimension must be positive".into()));
    }
    Ok(())
}

pub(crate) fn parse_polynomial(ambient: usize, text: &str) -> Result<Polynomial> {
    check_ambient(ambient)?;
    let mut parser = Parser::new(ambient, text)?;
    if parser.tokens.is_empty() {
        return Err(parse_err(1, 1, "empty expression"));
    }
    let p = parser.polynomial_expr()?;
    parser.expect_end()?;
    Ok(p)
}

pub(crate) fn parse_form(ambient: usize, text: &str) -> Result<DiffForm> {
    check_ambient(ambient)?;
    let mut parser = Parser::new(ambient, text)?;
    if parser.tokens.is_empty() {
        return Err(parse_err(1, 1, "empty expression"));
    }
    let terms = parser.form_expr()?;
    parser.expect_end()?;
    let degree = terms[0].indices.len();
    if let Some(t) = terms.iter().find(|t| t.indices.len() != degree) {
        return Err(parse_err(
            t.line,
            t.col,
            format!("mixed form degrees: expected degree {degree}, found {}", t.indices.len()),
        ));
    }
    DiffForm::from_terms(ambient, degree, terms.into_iter().map(|t| (t.indices, t.scalar)))
}
