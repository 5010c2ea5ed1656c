//! Tokenizer. Comments (`#` to end of line) are stripped here and never
//! reach the parser; CRLF is accepted and treated like LF.

use std::fmt;
use std::sync::Arc;

use crate::model::SourceSpan;

use super::ParseError;

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Ident(String),
    Int(i64),
    Str(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Star,
    Plus,
    Minus,
    Arrow,
    At,
    Eof,
}

impl Tok {
    /// Short description used in "found ..." error messages.
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("`{name}`"),
            Tok::Int(value) => format!("integer `{value}`"),
            Tok::Str(_) => "string".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Star => "`*`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::At => "`@`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

#[derive(Debug, Clone)]
pub struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    file: Arc<str>,
    line: u32,
    col: u32,
}

impl<'a> Lexer<'a> {
    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn pos(&self) -> (u32, u32) {
        (self.line, self.col)
    }

    fn span_from(&self, start: (u32, u32)) -> SourceSpan {
        SourceSpan::new(self.file.clone(), start.0, start.1, self.line, self.col)
    }

    fn error(&self, start: (u32, u32), expected: &str, found: impl Into<String>) -> ParseError {
        ParseError {
            span: self.span_from(start),
            expected: vec![expected.to_string()],
            found: found.into(),
        }
    }
}

pub fn lex(source: &str, file: &str) -> Result<Vec<Token>, ParseError> {
    let file: Arc<str> = Arc::from(file);
    let mut lx = Lexer {
        chars: source.chars().peekable(),
        file,
        line: 1,
        col: 1,
    };
    let mut tokens = Vec::new();

    loop {
        // Skip whitespace and comments.
        loop {
            match lx.chars.peek() {
                Some(c) if c.is_whitespace() => {
                    lx.bump();
                }
                Some('#') => {
                    while let Some(&c) = lx.chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        lx.bump();
                    }
                }
                _ => break,
            }
        }

        let start = lx.pos();
        let Some(&c) = lx.chars.peek() else {
            tokens.push(Token {
                tok: Tok::Eof,
                span: lx.span_from(start),
            });
            return Ok(tokens);
        };

        let tok = match c {
            '{' => one(&mut lx, Tok::LBrace),
            '}' => one(&mut lx, Tok::RBrace),
            '(' => one(&mut lx, Tok::LParen),
            ')' => one(&mut lx, Tok::RParen),
            '[' => one(&mut lx, Tok::LBracket),
            ']' => one(&mut lx, Tok::RBracket),
            ',' => one(&mut lx, Tok::Comma),
            ':' => one(&mut lx, Tok::Colon),
            '*' => one(&mut lx, Tok::Star),
            '+' => one(&mut lx, Tok::Plus),
            '@' => one(&mut lx, Tok::At),
            '-' => {
                lx.bump();
                if lx.chars.peek() == Some(&'>') {
                    lx.bump();
                    Tok::Arrow
                } else {
                    Tok::Minus
                }
            }
            '"' => lex_string(&mut lx, start)?,
            c if c.is_ascii_digit() => lex_int(&mut lx, start)?,
            c if c.is_alphabetic() => {
                let mut name = String::new();
                while let Some(&c) = lx.chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        name.push(c);
                        lx.bump();
                    } else {
                        break;
                    }
                }
                Tok::Ident(name)
            }
            other => {
                lx.bump();
                return Err(lx.error(start, "a token", format!("unexpected character `{other}`")));
            }
        };

        tokens.push(Token {
            tok,
            span: lx.span_from(start),
        });
    }
}

fn one(lx: &mut Lexer<'_>, tok: Tok) -> Tok {
    lx.bump();
    tok
}

fn lex_string(lx: &mut Lexer<'_>, start: (u32, u32)) -> Result<Tok, ParseError> {
    lx.bump(); // opening quote
    let mut value = String::new();
    loop {
        match lx.bump() {
            None => return Err(lx.error(start, "closing `\"`", "end of input")),
            Some('"') => return Ok(Tok::Str(value)),
            Some('\n') => {
                return Err(lx.error(start, "closing `\"` on the same line", "line break"))
            }
            Some('\\') => match lx.bump() {
                Some('"') => value.push('"'),
                Some('\\') => value.push('\\'),
                Some('n') => value.push('\n'),
                Some('t') => value.push('\t'),
                Some(other) => {
                    return Err(lx.error(
                        start,
                        "escape `\\\"`, `\\\\`, `\\n` or `\\t`",
                        format!("`\\{other}`"),
                    ))
                }
                None => return Err(lx.error(start, "escape character", "end of input")),
            },
            Some(c) => value.push(c),
        }
    }
}

fn lex_int(lx: &mut Lexer<'_>, start: (u32, u32)) -> Result<Tok, ParseError> {
    let mut digits = String::new();
    while let Some(&c) = lx.chars.peek() {
        if c.is_ascii_digit() {
            digits.push(c);
            lx.bump();
        } else {
            break;
        }
    }
    digits.parse::<i64>().map(Tok::Int).map_err(|_| {
        lx.error(
            start,
            "an integer that fits in 64 bits",
            format!("`{digits}`"),
        )
    })
}
