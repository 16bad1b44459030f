use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Forall,
    Exists,
    Def,
    Assign, // :=
    Ident(String),
    LParen,
    RParen,
    Comma,
    Eq,
    Ne,
    Not,
    And,
    Or,
    Arrow,
    DArrow,
    Eof,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Tok::Forall => "forall",
            Tok::Exists => "exists",
            Tok::Def => "def",
            Tok::Assign => ":=",
            Tok::Ident(name) => return write!(f, "`{name}`"),
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Comma => ",",
            Tok::Eq => "=",
            Tok::Ne => "!=",
            Tok::Not => "!",
            Tok::And => "&",
            Tok::Or => "|",
            Tok::Arrow => "->",
            Tok::DArrow => "<->",
            Tok::Eof => "end of input",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

pub struct Lexer;

impl Lexer {
    /// Tokenize; `#` starts a comment running to end of line.
    pub fn tokenize(text: &str) -> Result<Vec<(Tok, Pos)>> {
        let mut toks = Vec::new();
        let mut line = 1usize;
        let mut col = 1usize;
        let mut it = text.chars().peekable();
        while let Some(&c) = it.peek() {
            let pos = Pos { line, col };
            let mut bump = |it: &mut std::iter::Peekable<std::str::Chars>| {
                let c = it.next().unwrap();
                if c == '\n' {
                    line += 1;
                    col = 1;
                } else {
                    col += 1;
                }
                c
            };
            match c {
                ' ' | '\t' | '\r' | '\n' => {
                    bump(&mut it);
                }
                '#' => {
                    while let Some(&c) = it.peek() {
                        if c == '\n' {
                            break;
                        }
                        bump(&mut it);
                    }
                }
                '(' => {
                    bump(&mut it);
                    toks.push((Tok::LParen, pos));
                }
                ')' => {
                    bump(&mut it);
                    toks.push((Tok::RParen, pos));
                }
                ',' => {
                    bump(&mut it);
                    toks.push((Tok::Comma, pos));
                }
                '=' => {
                    bump(&mut it);
                    toks.push((Tok::Eq, pos));
                }
                '&' => {
                    bump(&mut it);
                    toks.push((Tok::And, pos));
                }
                '|' => {
                    bump(&mut it);
                    toks.push((Tok::Or, pos));
                }
                '!' => {
                    bump(&mut it);
                    if it.peek() == Some(&'=') {
                        bump(&mut it);
                        toks.push((Tok::Ne, pos));
                    } else {
                        toks.push((Tok::Not, pos));
                    }
                }
                '-' => {
                    bump(&mut it);
                    if it.peek() == Some(&'>') {
                        bump(&mut it);
                        toks.push((Tok::Arrow, pos));
                    } else {
                        return Err(Error::Syntax {
                            line: pos.line,
                            col: pos.col,
                            expected: "`->`".into(),
                            found: "`-`".into(),
                        });
                    }
                }
                '<' => {
                    bump(&mut it);
                    if it.peek() == Some(&'-') {
                        bump(&mut it);
                        if it.peek() == Some(&'>') {
                            bump(&mut it);
                            toks.push((Tok::DArrow, pos));
                            continue;
                        }
                    }
                    return Err(Error::Syntax {
                        line: pos.line,
                        col: pos.col,
                        expected: "`<->`".into(),
                        found: "`<`".into(),
                    });
                }
                ':' => {
                    bump(&mut it);
                    if it.peek() == Some(&'=') {
                        bump(&mut it);
                        toks.push((Tok::Assign, pos));
                    } else {
                        return Err(Error::Syntax {
                            line: pos.line,
                            col: pos.col,
                            expected: "`:=`".into(),
                            found: "`:`".into(),
                        });
                    }
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut name = String::new();
                    while let Some(&c) = it.peek() {
                        if c.is_ascii_alphanumeric() || c == '_' {
                            name.push(bump(&mut it));
                        } else {
                            break;
                        }
                    }
                    let tok = match name.as_str() {
                        "forall" => Tok::Forall,
                        "exists" => Tok::Exists,
                        "def" => Tok::Def,
                        _ => Tok::Ident(name),
                    };
                    toks.push((tok, pos));
                }
                other => {
                    return Err(Error::Syntax {
                        line: pos.line,
                        col: pos.col,
                        expected: "a token".into(),
                        found: format!("`{other}`"),
                    });
                }
            }
        }
        toks.push((Tok::Eof, Pos { line, col }));
        Ok(toks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens() {
        let toks = Lexer::tokenize("forall u (B(u,x,v) -> x != v) <-> !E(a,b)").unwrap();
        let kinds: Vec<&Tok> = toks.iter().map(|(t, _)| t).collect();
        assert!(matches!(kinds[0], Tok::Forall));
        assert!(kinds.contains(&&Tok::Arrow));
        assert!(kinds.contains(&&Tok::Ne));
        assert!(kinds.contains(&&Tok::DArrow));
    }

    #[test]
    fn comments_are_skipped() {
        let toks = Lexer::tokenize("# hello\nx = y # tail\n").unwrap();
        assert_eq!(toks.len(), 4); // x = y EOF
    }

    #[test]
    fn stray_character_reports_position() {
        match Lexer::tokenize("x %") {
            Err(Error::Syntax { line: 1, col: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
    }
}
