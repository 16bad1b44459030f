//! Recursive-descent parser for the formula grammar:
//!
//! ```text
//! formula := quant | impl
//! quant   := ("forall" | "exists") IDENT formula
//! impl    := or (("->" | "<->") impl)?
//! or      := and ("|" and)*
//! and     := not ("&" not)*
//! not     := "!" not | atom
//! atom    := "B(" t "," t "," t ")" | "E(" t "," t ")"
//!          | t ("=" | "!=") t
//!          | IDENT "(" [t ("," t)*] ")"          (macro invocation)
//!          | "(" formula ")"
//! t       := IDENT
//! ```
//!
//! Quantifier scope extends maximally to the right; `->` and `<->` are
//! right-associative; macro invocations are expanded in place.

use super::ast::{Formula, Var};
use super::lexer::{Lexer, Pos, Tok};
use super::prelude::Prelude;
use crate::error::{Error, Result};

pub struct Parser<'a> {
    toks: Vec<(Tok, Pos)>,
    pos: usize,
    prelude: &'a Prelude,
}

impl<'a> Parser<'a> {
    pub fn new(text: &str, prelude: &'a Prelude) -> Result<Parser<'a>> {
        Ok(Parser { toks: Lexer::tokenize(text)?, pos: 0, prelude })
    }

    pub(super) fn from_tokens(toks: Vec<(Tok, Pos)>, prelude: &'a Prelude) -> Result<Parser<'a>> {
        Ok(Parser { toks, pos: 0, prelude })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn here(&self) -> Pos {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: impl Into<String>) -> Error {
        let pos = self.here();
        Error::Syntax {
            line: pos.line,
            col: pos.col,
            expected: expected.into(),
            found: self.peek().to_string(),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.err(tok.to_string()))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(name)
            }
            _ => Err(self.err("an identifier")),
        }
    }

    /// Parse one complete formula, requiring all input be consumed.
    pub fn parse_formula(&mut self) -> Result<Formula> {
        let f = self.formula()?;
        if *self.peek() != Tok::Eof {
            return Err(self.err("end of input"));
        }
        Ok(f)
    }

    pub(super) fn formula(&mut self) -> Result<Formula> {
        match self.peek() {
            Tok::Forall => {
                self.bump();
                let v = self.ident()?;
                Ok(Formula::Forall(Var::new(v), Box::new(self.formula()?)))
            }
            Tok::Exists => {
                self.bump();
                let v = self.ident()?;
                Ok(Formula::Exists(Var::new(v), Box::new(self.formula()?)))
            }
            _ => self.implication(),
        }
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        match self.peek() {
            Tok::Arrow => {
                self.bump();
                Ok(Formula::Implies(Box::new(lhs), Box::new(self.implication()?)))
            }
            Tok::DArrow => {
                self.bump();
                Ok(Formula::Iff(Box::new(lhs), Box::new(self.implication()?)))
            }
            _ => Ok(lhs),
        }
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            lhs = Formula::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.negation()?;
        while *self.peek() == Tok::And {
            self.bump();
            lhs = Formula::and(lhs, self.negation()?);
        }
        Ok(lhs)
    }

    fn negation(&mut self) -> Result<Formula> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.negation()?))
            }
            // a quantifier in operand position takes the maximal scope to
            // the right, per the scope rule
            Tok::Forall | Tok::Exists => self.formula(),
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(name) => {
                self.bump();
                if *self.peek() == Tok::LParen {
                    self.bump();
                    let mut args = Vec::new();
                    if *self.peek() != Tok::RParen {
                        loop {
                            args.push(self.ident()?);
                            if *self.peek() == Tok::Comma {
                                self.bump();
                            } else {
                                break;
                            }
                        }
                    }
                    self.expect(Tok::RParen)?;
                    match name.as_str() {
                        "B" => {
                            if args.len() != 3 {
                                return Err(Error::ArityMismatch {
                                    name,
                                    expected: 3,
                                    got: args.len(),
                                });
                            }
                            let mut it = args.into_iter();
                            Ok(Formula::Between(
                                Var::new(it.next().unwrap()),
                                Var::new(it.next().unwrap()),
                                Var::new(it.next().unwrap()),
                            ))
                        }
                        "E" => {
                            if args.len() != 2 {
                                return Err(Error::ArityMismatch {
                                    name,
                                    expected: 2,
                                    got: args.len(),
                                });
                            }
                            let mut it = args.into_iter();
                            Ok(Formula::Edge(
                                Var::new(it.next().unwrap()),
                                Var::new(it.next().unwrap()),
                            ))
                        }
                        _ => self.prelude.expand(&name, &args),
                    }
                } else {
                    // term comparison
                    let lhs = Var::new(name);
                    match self.bump() {
                        Tok::Eq => Ok(Formula::Equal(lhs, Var::new(self.ident()?))),
                        Tok::Ne => Ok(Formula::not(Formula::Equal(lhs, Var::new(self.ident()?)))),
                        _ => {
                            self.pos -= 1;
                            Err(self.err("`=`, `!=`, or `(`"))
                        }
                    }
                }
            }
            _ => Err(self.err("an atom")),
        }
    }
}
