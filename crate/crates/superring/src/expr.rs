//! Recursive-descent parser for the element grammar shared by the
//! exterior algebra and polynomial superalgebra layers:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := scalar ('*' factor)* | factor ('*' factor)*
//! factor := name ('^' positive-integer)?     (powers only where enabled)
//! scalar := -?[0-9]+ | -?[0-9]+/[1-9][0-9]*
//! ```
//!
//! The parser produces a flat list of signed terms; evaluation against a
//! concrete generator set happens in the consumer.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Factor {
    pub name: String,
    pub power: u32,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct ParsedTerm {
    pub negated: bool,
    /// Scalar literal text and its byte position, when the term has one.
    pub scalar: Option<(String, usize)>,
    pub factors: Vec<Factor>,
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push((Token::Plus, i));
                i += 1;
            }
            '-' => {
                tokens.push((Token::Minus, i));
                i += 1;
            }
            '*' => {
                tokens.push((Token::Star, i));
                i += 1;
            }
            '/' => {
                tokens.push((Token::Slash, i));
                i += 1;
            }
            '^' => {
                tokens.push((Token::Caret, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                tokens.push((Token::Number(text[start..i].to_string()), start));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && matches!(bytes[i] as char, 'a'..='z' | 'A'..='Z' | '0'..='9' | '_')
                {
                    i += 1;
                }
                tokens.push((Token::Ident(text[start..i].to_string()), start));
            }
            other => {
                return Err(Error::Parse {
                    position: i,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
    allow_powers: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|&(_, p)| p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<(Token, usize)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.here(),
            message: message.into(),
        })
    }

    fn expression(&mut self) -> Result<Vec<ParsedTerm>> {
        let mut terms = Vec::new();
        let mut negated = if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            true
        } else {
            false
        };
        loop {
            let mut term = self.term()?;
            term.negated = negated;
            terms.push(term);
            match self.peek() {
                None => break,
                Some(Token::Plus) => {
                    self.bump();
                    negated = false;
                }
                Some(Token::Minus) => {
                    self.bump();
                    negated = true;
                }
                Some(_) => return self.fail("expected `+`, `-`, or end of input"),
            }
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<ParsedTerm> {
        let mut term = ParsedTerm {
            negated: false,
            scalar: None,
            factors: Vec::new(),
        };
        match self.peek() {
            Some(Token::Number(_)) => {
                term.scalar = Some(self.scalar_literal()?);
            }
            Some(Token::Ident(_)) => {
                term.factors.push(self.factor()?);
            }
            _ => return self.fail("expected a scalar or a generator name"),
        }
        while matches!(self.peek(), Some(Token::Star)) {
            self.bump();
            term.factors.push(self.factor()?);
        }
        Ok(term)
    }

    fn scalar_literal(&mut self) -> Result<(String, usize)> {
        let Some((Token::Number(num), pos)) = self.bump() else {
            return self.fail("expected a number");
        };
        if matches!(self.peek(), Some(Token::Slash)) {
            self.bump();
            let den_pos = self.here();
            let Some((Token::Number(den), _)) = self.bump() else {
                return self.fail("expected a denominator after `/`");
            };
            if den.starts_with('0') {
                return Err(Error::Parse {
                    position: den_pos,
                    message: "denominator must not start with 0".into(),
                });
            }
            Ok((format!("{num}/{den}"), pos))
        } else {
            Ok((num, pos))
        }
    }

    fn factor(&mut self) -> Result<Factor> {
        let pos = self.here();
        let Some((Token::Ident(name), _)) = self.bump() else {
            return Err(Error::Parse {
                position: pos,
                message: "expected a generator name".into(),
            });
        };
        let mut power = 1;
        if matches!(self.peek(), Some(Token::Caret)) {
            if !self.allow_powers {
                return self.fail("powers are not allowed in this grammar");
            }
            self.bump();
            let ppos = self.here();
            let Some((Token::Number(exp), _)) = self.bump() else {
                return self.fail("expected an exponent after `^`");
            };
            power = exp.parse::<u32>().map_err(|_| Error::Parse {
                position: ppos,
                message: format!("bad exponent `{exp}`"),
            })?;
            if power == 0 {
                return Err(Error::Parse {
                    position: ppos,
                    message: "exponent must be positive".into(),
                });
            }
        }
        Ok(Factor { name, power, position: pos })
    }
}

pub(crate) fn parse_expression(text: &str, allow_powers: bool) -> Result<Vec<ParsedTerm>> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse {
            position: 0,
            message: "empty expression".into(),
        });
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        allow_powers,
    };
    parser.expression()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sum_of_terms() {
        let terms = parse_expression("1 + 2*t1 - t1*t2", false).unwrap();
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[0].scalar.as_ref().unwrap().0, "1");
        assert!(!terms[1].negated);
        assert_eq!(terms[1].factors[0].name, "t1");
        assert!(terms[2].negated);
        assert_eq!(terms[2].factors.len(), 2);
    }

    #[test]
    fn rational_literal() {
        let terms = parse_expression("-3/4*t1", false).unwrap();
        assert!(terms[0].negated);
        assert_eq!(terms[0].scalar.as_ref().unwrap().0, "3/4");
    }

    #[test]
    fn scalar_must_lead_the_term() {
        let err = parse_expression("t1*2", false).unwrap_err();
        assert!(matches!(err, Error::Parse { position: 3, .. }), "{err}");
    }

    #[test]
    fn reports_position_of_garbage() {
        let err = parse_expression("garbage +*", false).unwrap_err();
        assert!(matches!(err, Error::Parse { position: 9, .. }), "{err}");
    }

    #[test]
    fn powers_only_when_enabled() {
        assert!(parse_expression("X^2", true).is_ok());
        assert!(parse_expression("X^2", false).is_err());
        assert!(parse_expression("X^0", true).is_err());
    }
}
