//! The scalar literal grammar.
//!
//! Gaussian literals: `INT[/POSINT][(+|-)INT[/POSINT]i]`, e.g. `3/4`,
//! `-2+1/3i`, `0+1i`. Symbolic literals: arithmetic expressions over
//! `alpha`, `eps`, integer literals, `+ - * / ^` and parentheses, with `^`
//! binding tighter than `*`/`/`, which bind tighter than `+`/`-`; unary
//! minus is allowed and exponents are integers. Both grammars are
//! whitespace-insensitive, and the canonical display of every scalar
//! round-trips.

use num::bigint::BigInt;
use num::One;

use prelie_witt::scalar::{
    BivariatePolynomial, FieldMode, GaussianRational, Rational, RationalFunction, Scalar,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "literal parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_scalar(input: &str, mode: FieldMode) -> Result<Scalar, ParseError> {
    match mode {
        FieldMode::Gaussian => Ok(Scalar::Gaussian(parse_gaussian(input)?)),
        FieldMode::Symbolic => Ok(Scalar::Symbolic(parse_symbolic(input)?)),
    }
}

// ---------------------------------------------------------------------------
// gaussian literals
// ---------------------------------------------------------------------------

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(input: &str) -> Self {
        Cursor {
            chars: input.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().map_or(false, |c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError(format!(
                "expected digits at position {}",
                self.pos
            )));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<BigInt>()
            .map_err(|e| ParseError(format!("bad integer `{text}`: {e}")))
    }

    fn at_end(&self) -> bool {
        self.pos == self.chars.len()
    }
}

/// `[sign] digits [/ digits]` with a positive denominator.
fn parse_rat(cursor: &mut Cursor, allow_sign: bool) -> Result<Rational, ParseError> {
    let mut negative = false;
    if allow_sign {
        match cursor.peek() {
            Some('-') => {
                negative = true;
                cursor.bump();
            }
            Some('+') => {
                cursor.bump();
            }
            _ => {}
        }
    }
    let numerator = cursor.digits()?;
    let denominator = if cursor.peek() == Some('/') {
        cursor.bump();
        let d = cursor.digits()?;
        if d == BigInt::from(0) {
            return Err(ParseError("zero denominator".into()));
        }
        d
    } else {
        BigInt::one()
    };
    let value = Rational::new(numerator, denominator);
    Ok(if negative { -value } else { value })
}

pub fn parse_gaussian(input: &str) -> Result<GaussianRational, ParseError> {
    let mut cursor = Cursor::new(input);
    if cursor.at_end() {
        return Err(ParseError("empty literal".into()));
    }
    let re = parse_rat(&mut cursor, true)?;
    if cursor.at_end() {
        return Ok(GaussianRational::from_rational(re));
    }
    let sign = match cursor.bump() {
        Some('+') => false,
        Some('-') => true,
        other => {
            return Err(ParseError(format!(
                "expected `+` or `-` before the imaginary part, found {other:?}"
            )))
        }
    };
    let magnitude = parse_rat(&mut cursor, false)?;
    if cursor.bump() != Some('i') {
        return Err(ParseError("imaginary part must end in `i`".into()));
    }
    if !cursor.at_end() {
        return Err(ParseError(format!(
            "trailing input at position {}",
            cursor.pos
        )));
    }
    let im = if sign { -magnitude } else { magnitude };
    Ok(GaussianRational::new(re, im))
}

// ---------------------------------------------------------------------------
// symbolic literals
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Alpha,
    Eps,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < chars.len() {
        let c = chars[pos];
        match c {
            _ if c.is_whitespace() => pos += 1,
            '+' => {
                tokens.push(Token::Plus);
                pos += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                pos += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                pos += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                pos += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                pos += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                pos += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                pos += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let text: String = chars[start..pos].iter().collect();
                let value = text
                    .parse::<BigInt>()
                    .map_err(|e| ParseError(format!("bad integer `{text}`: {e}")))?;
                tokens.push(Token::Int(value));
            }
            _ if c.is_ascii_alphabetic() => {
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_alphanumeric() {
                    pos += 1;
                }
                let word: String = chars[start..pos].iter().collect();
                match word.as_str() {
                    "alpha" => tokens.push(Token::Alpha),
                    "eps" => tokens.push(Token::Eps),
                    other => {
                        return Err(ParseError(format!(
                            "unknown identifier `{other}` (expected `alpha` or `eps`)"
                        )))
                    }
                }
            }
            other => return Err(ParseError(format!("unexpected character `{other}`"))),
        }
    }
    Ok(tokens)
}

struct ExprParser {
    tokens: Vec<Token>,
    pos: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                Some(Token::Slash) => {
                    self.bump();
                    let divisor = self.unary()?;
                    acc = acc
                        .div(&divisor)
                        .map_err(|_| ParseError("division by the zero polynomial".into()))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Some(Token::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.bump();
        let negative = if self.peek() == Some(&Token::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let Some(Token::Int(raw)) = self.bump() else {
            return Err(ParseError("exponent must be an integer".into()));
        };
        let magnitude: i32 = raw
            .try_into()
            .map_err(|_| ParseError("exponent out of range".into()))?;
        let exponent = if negative { -magnitude } else { magnitude };
        base.pow(exponent)
            .map_err(|_| ParseError("negative power of the zero polynomial".into()))
    }

    fn atom(&mut self) -> Result<RationalFunction, ParseError> {
        match self.bump() {
            Some(Token::Int(value)) => Ok(RationalFunction::from_poly(
                BivariatePolynomial::constant(Rational::from_integer(value)),
            )),
            Some(Token::Alpha) => Ok(RationalFunction::alpha()),
            Some(Token::Eps) => Ok(RationalFunction::eps()),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                if self.bump() != Some(Token::RParen) {
                    return Err(ParseError("unbalanced parenthesis".into()));
                }
                Ok(inner)
            }
            other => Err(ParseError(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_symbolic(input: &str) -> Result<RationalFunction, ParseError> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(ParseError("empty literal".into()));
    }
    let mut parser = ExprParser { tokens, pos: 0 };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(ParseError("trailing input after expression".into()));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_literals() {
        assert_eq!(
            parse_gaussian("3/4").unwrap(),
            GaussianRational::from_pair(3, 4)
        );
        assert_eq!(
            parse_gaussian("-2+1/3i").unwrap().to_string(),
            "-2+1/3i"
        );
        assert_eq!(parse_gaussian("0+1i").unwrap(), GaussianRational::i());
        assert_eq!(
            parse_gaussian(" - 2 + 1/3 i ").unwrap().to_string(),
            "-2+1/3i"
        );
        assert!(parse_gaussian("1/0").is_err());
        assert!(parse_gaussian("2i").is_err());
        assert!(parse_gaussian("1+2").is_err());
    }

    #[test]
    fn symbolic_literals() {
        let v = parse_symbolic("(alpha + 1)/(1 + eps)").unwrap();
        assert_eq!(v.to_string(), "(alpha + 1)/(eps + 1)");
        let w = parse_symbolic("alpha^2 - 2*alpha*eps + eps^2").unwrap();
        assert_eq!(w.to_string(), "alpha^2 - 2*alpha*eps + eps^2");
        assert!(parse_symbolic("1/(alpha - alpha)").is_err());
        assert!(parse_symbolic("beta").is_err());
        // precedence: ^ over *, * over +
        let p = parse_symbolic("2*eps^2+1").unwrap();
        assert_eq!(p.to_string(), "2*eps^2 + 1");
        let q = parse_symbolic("-eps^2").unwrap();
        assert_eq!(q.to_string(), "-eps^2");
        let r = parse_symbolic("eps^-1").unwrap();
        assert_eq!(r.to_string(), "(1)/(eps)");
    }

    #[test]
    fn display_round_trips() {
        for text in ["5/2", "-7", "0", "1/2-3/5i", "-1+1i"] {
            let v = parse_gaussian(text).unwrap();
            assert_eq!(parse_gaussian(&v.to_string()).unwrap(), v);
        }
        for text in [
            "(3*alpha^2 - 2*alpha*eps + eps - 7)/(eps^2 + 1)",
            "alpha",
            "0",
            "-1/2",
        ] {
            let v = parse_symbolic(text).unwrap();
            assert_eq!(parse_symbolic(&v.to_string()).unwrap(), v);
        }
    }
}
