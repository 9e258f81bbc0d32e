//! Operator polynomials in `a(i)`, `ad(i)` and `N(i)`.
//!
//! Grammar:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := atom ('^' uint)?
//! atom    := complex | 'a(' uint ')' | 'ad(' uint ')' | 'N(' uint ')' | '(' expr ')'
//! complex := float | float ('+' | '-') float 'i' | float 'i'
//! ```
//!
//! A float literal may carry a leading `-` where an atom is expected.

use std::fmt;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::fock::{annihilation, creation, number_op, FockOp};
use crate::qnum::QContext;

#[derive(Debug, Clone, PartialEq)]
pub enum OpExpr {
    Const(Complex64),
    /// `a(i)`
    Annihilation(usize),
    /// `ad(i)`
    Creation(usize),
    /// `N(i)`
    Number(usize),
    Add(Box<OpExpr>, Box<OpExpr>),
    Sub(Box<OpExpr>, Box<OpExpr>),
    Mul(Box<OpExpr>, Box<OpExpr>),
    Pow(Box<OpExpr>, u32),
}

impl OpExpr {
    /// Evaluates to a Fock-space matrix; mode indices are checked here.
    pub fn eval(&self, ctx: &QContext) -> Result<FockOp> {
        match self {
            OpExpr::Const(c) => Ok(FockOp::identity(ctx)?.scale(*c)),
            OpExpr::Annihilation(i) => annihilation(ctx, *i),
            OpExpr::Creation(i) => creation(ctx, *i),
            OpExpr::Number(i) => number_op(ctx, *i),
            OpExpr::Add(l, r) => l.eval(ctx)?.add(&r.eval(ctx)?),
            OpExpr::Sub(l, r) => l.eval(ctx)?.sub(&r.eval(ctx)?),
            OpExpr::Mul(l, r) => l.eval(ctx)?.compose(&r.eval(ctx)?),
            OpExpr::Pow(b, n) => Ok(b.eval(ctx)?.pow(*n)),
        }
    }

    /// Largest mode index referenced.
    pub fn max_mode(&self) -> usize {
        match self {
            OpExpr::Const(_) => 0,
            OpExpr::Annihilation(i) | OpExpr::Creation(i) | OpExpr::Number(i) => *i,
            OpExpr::Add(l, r) | OpExpr::Sub(l, r) | OpExpr::Mul(l, r) => {
                l.max_mode().max(r.max_mode())
            }
            OpExpr::Pow(b, _) => b.max_mode(),
        }
    }
}

impl fmt::Display for OpExpr {
    /// Fully parenthesized; the output parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpExpr::Const(c) if c.im == 0.0 => write!(f, "{}", c.re),
            OpExpr::Const(c) => {
                let sign = if c.im.is_sign_negative() { '-' } else { '+' };
                write!(f, "({}{}{}i)", c.re, sign, c.im.abs())
            }
            OpExpr::Annihilation(i) => write!(f, "a({i})"),
            OpExpr::Creation(i) => write!(f, "ad({i})"),
            OpExpr::Number(i) => write!(f, "N({i})"),
            OpExpr::Add(l, r) => write!(f, "({l} + {r})"),
            OpExpr::Sub(l, r) => write!(f, "({l} - {r})"),
            OpExpr::Mul(l, r) => write!(f, "({l} * {r})"),
            OpExpr::Pow(b, n) => match **b {
                OpExpr::Const(c) if c.im == 0.0 => write!(f, "({b})^{n}"),
                OpExpr::Pow(..) => write!(f, "({b})^{n}"),
                _ => write!(f, "{b}^{n}"),
            },
        }
    }
}

/// Parses an operator expression.
pub fn parse_op(source: &str) -> Result<OpExpr> {
    let mut p = Parser {
        src: source.as_bytes(),
        text: source,
        pos: 0,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(expr)
}

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        let consumed = &self.text[..self.pos.min(self.text.len())];
        let line = consumed.matches('\n').count() + 1;
        let column = consumed
            .rsplit('\n')
            .next()
            .map(|l| l.chars().count())
            .unwrap_or(0)
            + 1;
        let found = match self.peek() {
            Some(c) => format!("found '{}'", c as char),
            None => "found end of input".to_string(),
        };
        Error::Syntax {
            line,
            column,
            message: format!("{message}, {found}"),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<u8> {
        self.src.get(self.pos + offset).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<OpExpr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = OpExpr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = OpExpr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<OpExpr> {
        let mut lhs = self.factor()?;
        while self.eat(b'*') {
            lhs = OpExpr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<OpExpr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let n = self.uint("expected a non-negative integer exponent")?;
            let n = u32::try_from(n).map_err(|_| self.error("exponent too large"))?;
            return Ok(OpExpr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn uint(&mut self, message: &str) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(message));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }

    fn mode_call(&mut self, name_len: usize) -> Result<usize> {
        self.pos += name_len;
        self.expect(b'(')?;
        self.skip_ws();
        let i = self.uint("expected a mode index")?;
        self.expect(b')')?;
        Ok(i)
    }

    fn atom(&mut self) -> Result<OpExpr> {
        self.skip_ws();
        match self.peek() {
            Some(b'a') if self.peek_at(1) == Some(b'd') => {
                Ok(OpExpr::Creation(self.mode_call(2)?))
            }
            Some(b'a') => Ok(OpExpr::Annihilation(self.mode_call(1)?)),
            Some(b'N') => Ok(OpExpr::Number(self.mode_call(1)?)),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' || c == b'-' => self.complex(),
            _ => Err(self.error("expected an operand")),
        }
    }

    /// Scans a float literal at the cursor without consuming it.
    fn scan_float(&self, from: usize) -> Option<usize> {
        let s = self.src;
        let mut i = from;
        if s.get(i) == Some(&b'-') || s.get(i) == Some(&b'+') {
            i += 1;
        }
        let digits = |mut j: usize| {
            while s.get(j).is_some_and(|c| c.is_ascii_digit()) {
                j += 1;
            }
            j
        };
        let int_end = digits(i);
        let mut end = int_end;
        let mut frac_digits = 0;
        if s.get(end) == Some(&b'.') {
            let frac_end = digits(end + 1);
            frac_digits = frac_end - end - 1;
            end = frac_end;
        }
        if int_end == i && frac_digits == 0 {
            return None;
        }
        if matches!(s.get(end), Some(b'e') | Some(b'E')) {
            let mut j = end + 1;
            if matches!(s.get(j), Some(b'+') | Some(b'-')) {
                j += 1;
            }
            let exp_end = digits(j);
            if exp_end > j {
                end = exp_end;
            }
        }
        Some(end)
    }

    fn complex(&mut self) -> Result<OpExpr> {
        let Some(end) = self.scan_float(self.pos) else {
            return Err(self.error("expected a number"));
        };
        let re: f64 = self.text[self.pos..end]
            .parse()
            .map_err(|_| self.error("malformed number"))?;
        self.pos = end;
        if self.peek() == Some(b'i') {
            self.pos += 1;
            return Ok(OpExpr::Const(Complex64::new(0.0, re)));
        }
        if matches!(self.peek(), Some(b'+') | Some(b'-')) {
            if let Some(im_end) = self.scan_float(self.pos) {
                if self.src.get(im_end) == Some(&b'i') {
                    let im: f64 = self.text[self.pos..im_end]
                        .parse()
                        .map_err(|_| self.error("malformed number"))?;
                    self.pos = im_end + 1;
                    return Ok(OpExpr::Const(Complex64::new(re, im)));
                }
            }
        }
        Ok(OpExpr::Const(Complex64::new(re, 0.0)))
    }
}

/// Random polynomial of degree at most `max_degree` in `a(i)`, `ad(i)`,
/// `N(i)` (`i` in `1..=modes`) with `1..=max_terms` monomials. Coefficients
/// are uniform in the complex unit square `[0,1) x [0,1)`.
pub fn random_polynomial<R: Rng>(
    rng: &mut R,
    modes: usize,
    max_terms: usize,
    max_degree: usize,
) -> OpExpr {
    let n_terms = rng.gen_range(1..=max_terms.max(1));
    let mut sum: Option<OpExpr> = None;
    for _ in 0..n_terms {
        let c = Complex64::new(rng.gen::<f64>(), rng.gen::<f64>());
        let mut term = OpExpr::Const(c);
        for _ in 0..rng.gen_range(0..=max_degree) {
            let i = rng.gen_range(1..=modes);
            let g = match rng.gen_range(0..3) {
                0 => OpExpr::Annihilation(i),
                1 => OpExpr::Creation(i),
                _ => OpExpr::Number(i),
            };
            term = OpExpr::Mul(Box::new(term), Box::new(g));
        }
        sum = Some(match sum {
            None => term,
            Some(s) => OpExpr::Add(Box::new(s), Box::new(term)),
        });
    }
    sum.expect("at least one term")
}
