//! Manifold expressions such as `K3^2 x HP3` or `(K3 * HP2)^2`.
//!
//! ```text
//! expr := term (('x' | '*') term)*
//! term := atom ('^' posint)?
//! atom := 'K3' | 'HP' posint | '(' expr ')'
//! ```
//!
//! Whitespace between tokens is ignored and atom names are case-insensitive.

use std::fmt;

use charnum_core::{kummer_class, product, CobordismClass, CobordismRing, Error};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ManifoldExpr {
    K3,
    /// Quaternionic projective space `HP^k`.
    Hp(usize),
    Product(Box<ManifoldExpr>, Box<ManifoldExpr>),
    Power(Box<ManifoldExpr>, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct ParseError {
    /// 1-based character position.
    pub column: usize,
    pub message: String,
}

impl ManifoldExpr {
    /// Sum of atom weights times exponents; `None` on overflow.
    pub fn weight(&self) -> Option<usize> {
        match self {
            ManifoldExpr::K3 => Some(1),
            ManifoldExpr::Hp(k) => Some(*k),
            ManifoldExpr::Product(a, b) => a.weight()?.checked_add(b.weight()?),
            ManifoldExpr::Power(base, n) => base.weight()?.checked_mul(*n),
        }
    }

    pub fn evaluate(&self, ring: &CobordismRing) -> Result<CobordismClass, Error> {
        let max = ring.max_weight();
        match self.weight() {
            Some(w) if w <= max => {}
            w => {
                return Err(Error::OutOfRange {
                    weight: w.unwrap_or(usize::MAX),
                    max,
                })
            }
        }
        self.build(ring)
    }

    fn build(&self, ring: &CobordismRing) -> Result<CobordismClass, Error> {
        Ok(match self {
            ManifoldExpr::K3 => kummer_class(),
            ManifoldExpr::Hp(k) => ring.quaternionic_class(*k)?,
            ManifoldExpr::Product(a, b) => product(&a.build(ring)?, &b.build(ring)?),
            ManifoldExpr::Power(base, n) => {
                let factor = base.build(ring)?;
                let mut acc = factor.clone();
                for _ in 1..*n {
                    acc = product(&acc, &factor);
                }
                acc
            }
        })
    }
}

impl fmt::Display for ManifoldExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldExpr::K3 => f.write_str("K3"),
            ManifoldExpr::Hp(k) => write!(f, "HP{k}"),
            ManifoldExpr::Product(a, b) => match **b {
                ManifoldExpr::Product(..) => write!(f, "{a} x ({b})"),
                _ => write!(f, "{a} x {b}"),
            },
            ManifoldExpr::Power(base, n) => match **base {
                ManifoldExpr::K3 | ManifoldExpr::Hp(_) => write!(f, "{base}^{n}"),
                _ => write!(f, "({base})^{n}"),
            },
        }
    }
}

pub fn parse_manifold(text: &str) -> Result<ManifoldExpr, ParseError> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let expr = parser.expr()?;
    parser.skip_ws();
    if let Some(c) = parser.peek() {
        return Err(parser.error(format!("expected 'x', '*' or end of input, found '{c}'")));
    }
    Ok(expr)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, message: String) -> ParseError {
        ParseError {
            column: self.pos + 1,
            message,
        }
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        }
    }

    fn expr(&mut self) -> Result<ManifoldExpr, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('x' | 'X' | '*') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = ManifoldExpr::Product(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ManifoldExpr, ParseError> {
        let atom = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            let n = self.posint()?;
            return Ok(ManifoldExpr::Power(Box::new(atom), n));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<ManifoldExpr, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error(format!("expected ')', found {}", self.found())));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('k' | 'K') => {
                self.pos += 1;
                if self.peek() != Some('3') {
                    return Err(
                        self.error(format!("expected '3' after 'K', found {}", self.found()))
                    );
                }
                self.pos += 1;
                Ok(ManifoldExpr::K3)
            }
            Some('h' | 'H') => {
                self.pos += 1;
                if !matches!(self.peek(), Some('p' | 'P')) {
                    return Err(
                        self.error(format!("expected 'P' after 'H', found {}", self.found()))
                    );
                }
                self.pos += 1;
                Ok(ManifoldExpr::Hp(self.posint()?))
            }
            _ => Err(self.error(format!(
                "expected 'K3', 'HP<n>' or '(', found {}",
                self.found()
            ))),
        }
    }

    fn posint(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(format!(
                "expected a positive integer, found {}",
                self.found()
            )));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        match digits.parse::<usize>() {
            Ok(0) => Err(ParseError {
                column: start + 1,
                message: "expected a positive integer, found 0".to_string(),
            }),
            Ok(n) => Ok(n),
            Err(_) => Err(ParseError {
                column: start + 1,
                message: format!("integer {digits} is too large"),
            }),
        }
    }
}
