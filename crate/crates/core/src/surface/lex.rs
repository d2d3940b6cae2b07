//! Tokenizer for `.mltt` sources. `--` starts a line comment; `·` and `@`
//! both spell object-level application.

use super::{Diagnostic, Pos, Severity};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Colon,
    ColonEq,
    Dot,
    Eof,
}

#[derive(Debug, Clone)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

pub fn lex(file: &str, src: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '-' => {
                chars.next();
                col += 1;
                if chars.peek() == Some(&'-') {
                    while let Some(&c2) = chars.peek() {
                        if c2 == '\n' {
                            break;
                        }
                        chars.next();
                        col += 1;
                    }
                } else {
                    return Err(unexpected(file, pos, '-'));
                }
            }
            '(' => {
                chars.next();
                col += 1;
                out.push(Token { tok: Tok::LParen, pos });
            }
            ')' => {
                chars.next();
                col += 1;
                out.push(Token { tok: Tok::RParen, pos });
            }
            '[' => {
                chars.next();
                col += 1;
                out.push(Token { tok: Tok::LBracket, pos });
            }
            ']' => {
                chars.next();
                col += 1;
                out.push(Token { tok: Tok::RBracket, pos });
            }
            ':' => {
                chars.next();
                col += 1;
                if chars.peek() == Some(&'=') {
                    chars.next();
                    col += 1;
                    out.push(Token { tok: Tok::ColonEq, pos });
                } else {
                    out.push(Token { tok: Tok::Colon, pos });
                }
            }
            '·' | '@' => {
                chars.next();
                col += 1;
                out.push(Token { tok: Tok::Dot, pos });
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&c2) = chars.peek() {
                    if c2.is_alphanumeric() || c2 == '_' || c2 == '\'' {
                        s.push(c2);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Token {
                    tok: Tok::Ident(s),
                    pos,
                });
            }
            other => return Err(unexpected(file, pos, other)),
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}

fn unexpected(file: &str, pos: Pos, c: char) -> Diagnostic {
    Diagnostic {
        severity: Severity::Error,
        file: file.to_string(),
        line: pos.line,
        col: pos.col,
        message: format!("unexpected character `{c}`"),
        expected: None,
        actual: None,
    }
}
