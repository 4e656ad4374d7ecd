//! Text formats for polynomials, ideal files and dual-form files.
//!
//! ```text
//! # comment
//! vars: x1, x2, x3
//! field: QQ
//! x1*x3 - x2^2
//! x2*x3
//! x3^2
//! ```

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring, RingRef};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str, line: usize) -> Result<Vec<Tok>> {
    let err = |message: String| Error::Parse { line, message };
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().map_err(|_| err(format!("bad number `{text}`")))?));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(err(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    ring: &'a RingRef,
    line: usize,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, message: message.into() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat_op(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    // expr := ['+'|'-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Polynomial> {
        let neg = if self.eat_op('-') {
            true
        } else {
            self.eat_op('+');
            false
        };
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            if self.eat_op('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat_op('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    // term := factor (('*' | '/') factor)*, division only by nonzero constants
    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            if self.eat_op('*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat_op('/') {
                let d = self.power()?;
                let c = match d.terms() {
                    [(m, c)] if m.is_one() => c.clone(),
                    [] => return Err(self.err("division by zero")),
                    _ => return Err(self.err("division only by constants")),
                };
                acc = acc.scale(&c.inv().ok_or_else(|| self.err("division by zero"))?);
            } else {
                match self.peek() {
                    Some(Tok::Op(')')) | Some(Tok::Op('+')) | Some(Tok::Op('-')) | None => return Ok(acc),
                    Some(t) => return Err(self.err(format!("expected operator before {t:?} (juxtaposition is not allowed)"))),
                }
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat_op('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("exponent must be a nonnegative integer")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let field = self.ring.field();
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let c = field.from_ratio(&n, &BigInt::from(1))?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = self.ring.index_of(&name).map_err(|_| self.err(format!("unknown variable `{name}`")))?;
                Ok(Polynomial::var(self.ring, i))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat_op(')') {
                    return Err(self.err("missing `)`"));
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            Some(t) => Err(self.err(format!("unexpected {t:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses one polynomial; `line` is used in error messages.
pub fn parse_polynomial_at(ring: &RingRef, text: &str, line: usize) -> Result<Polynomial> {
    let toks = lex(text, line)?;
    if toks.is_empty() {
        return Err(Error::Parse { line, message: "empty polynomial".into() });
    }
    let mut p = Parser { toks, pos: 0, ring, line };
    let f = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(f)
}

pub fn parse_polynomial(ring: &RingRef, text: &str) -> Result<Polynomial> {
    parse_polynomial_at(ring, text, 1)
}

/// Contents of an ideal or dual-form file.
#[derive(Debug, Clone)]
pub struct ParsedFile {
    pub ring: RingRef,
    pub polys: Vec<Polynomial>,
    /// True when the header was `dualvars:`.
    pub dual: bool,
}

pub fn parse_file(text: &str) -> Result<ParsedFile> {
    let mut ring: Option<RingRef> = None;
    let mut names: Option<(Vec<String>, bool, usize)> = None;
    let mut field: Option<Field> = None;
    let mut polys = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let header = |key: &str| body.strip_prefix(key).map(str::trim);
        if let Some((rest, dual)) = header("vars:").map(|r| (r, false)).or_else(|| header("dualvars:").map(|r| (r, true))) {
            if names.is_some() {
                return Err(Error::Parse { line, message: "duplicate variable header".into() });
            }
            let list: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
            names = Some((list, dual, line));
            continue;
        }
        if let Some(rest) = header("field:") {
            if ring.is_some() {
                return Err(Error::Parse { line, message: "field must precede generators".into() });
            }
            field = Some(Field::parse(rest).map_err(|e| Error::Parse { line, message: e.to_string() })?);
            continue;
        }
        let r = match &ring {
            Some(r) => r.clone(),
            None => {
                let (list, _, hl) = names
                    .clone()
                    .ok_or(Error::Parse { line, message: "missing `vars:` header".into() })?;
                let r = Ring::new(list, field.unwrap_or(Field::Rational))
                    .map_err(|e| Error::Parse { line: hl, message: e.to_string() })?;
                ring = Some(r.clone());
                r
            }
        };
        polys.push(parse_polynomial_at(&r, body, line)?);
    }
    let (list, dual, hl) = names.ok_or(Error::Parse { line: 1, message: "missing `vars:` header".into() })?;
    let ring = match ring {
        Some(r) => r,
        None => Ring::new(list, field.unwrap_or(Field::Rational)).map_err(|e| Error::Parse { line: hl, message: e.to_string() })?,
    };
    Ok(ParsedFile { ring, polys, dual })
}

/// Renders a file that [`parse_file`] reads back to the same data.
pub fn render_file(ring: &RingRef, polys: &[Polynomial], dual: bool) -> String {
    let mut s = format!("{} {}\nfield: {}\n", if dual { "dualvars:" } else { "vars:" }, ring.names().join(", "), ring.field());
    for p in polys {
        s.push_str(&p.to_string());
        s.push('\n');
    }
    s
}

/// Parses a monomial given as a product of variables, e.g. `x1*x3^2`.
pub fn parse_monomial(ring: &RingRef, text: &str) -> Result<Monomial> {
    let p = parse_polynomial(ring, text)?;
    match p.terms() {
        [(m, c)] if c.is_one() => Ok(m.clone()),
        _ => Err(Error::Invalid(format!("`{text}` is not a monomial"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const REMARK: &str = "# three-variable example\nvars: x1, x2, x3\nfield: QQ\nx1*x3 - x2^2\nx2*x3\nx3^2 # trailing\n";

    #[test]
    fn parse_ideal_file() {
        let f = parse_file(REMARK).unwrap();
        assert_eq!(f.ring.nvars(), 3);
        assert_eq!(f.polys.len(), 3);
        assert!(!f.dual);
        let again = parse_file(&render_file(&f.ring, &f.polys, false)).unwrap();
        assert_eq!(again.polys, f.polys);
    }

    #[test]
    fn fractions_and_parens() {
        let r = Ring::with_names(&["x", "y"], Field::Rational);
        let f = parse_polynomial(&r, "(x + y)^2 - 1/2*x*y + 3/4").unwrap();
        assert_eq!(f.to_string(), "x^2 + 3/2*x*y + y^2 + 3/4");
        let g = parse_polynomial(&r, "-x^2 - -y").unwrap();
        assert_eq!(g.to_string(), "-x^2 + y");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "vars: x, y\nfield: QQ\nx*y\nx y\n";
        assert!(matches!(parse_file(bad), Err(Error::Parse { line: 4, .. })));
        let bad = "vars: x, y\nfield: QQ\nx*z\n";
        assert!(matches!(parse_file(bad), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_file("x*y\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_file("vars: x\nfield: GF(4)\n"), Err(Error::Parse { line: 2, .. })));
        let r = Ring::with_names(&["x"], Field::Rational);
        assert!(parse_polynomial(&r, "x/0").is_err());
        assert!(parse_polynomial(&r, "x/x").is_err());
    }

    #[test]
    fn prime_field_coefficients() {
        let f = parse_file("vars: x\nfield: GF(7)\n8*x - 1/2\n").unwrap();
        assert_eq!(f.polys[0].to_string(), "x + 3");
    }

    #[test]
    fn dual_header() {
        let f = parse_file("dualvars: X, Y\nX*Y\n").unwrap();
        assert!(f.dual);
        assert_eq!(f.ring.field(), Field::Rational);
    }
}
