//! Tokens of the theory language; `#` starts a comment running to the end of the line.

use crate::diagnostic::{Diagnostic, Span};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(String),
    LBracket,
    RBracket,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Colon,
    Eq,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    DotDot,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(s) => format!("number {s}"),
            Tok::Eof => "end of input".into(),
            t => format!("`{}`", t.text()),
        }
    }

    pub fn text(&self) -> &str {
        match self {
            Tok::Ident(s) | Tok::Int(s) => s,
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::Comma => ",",
            Tok::Colon => ":",
            Tok::Eq => "=",
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::DotDot => "..",
            Tok::Eof => "",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

pub fn lex(src: &str) -> Result<Vec<Token>, Vec<Diagnostic>> {
    let mut out = Vec::new();
    let mut errors = Vec::new();
    let mut line = 1;
    let mut line_start = 0;
    let mut chars = src.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        let col = src[line_start..start].chars().count() + 1;
        let span_to = |end: usize| Span { line, col, start, end };
        if c == '\n' {
            chars.next();
            line += 1;
            line_start = start + 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c == '#' {
            while chars.peek().is_some_and(|&(_, c)| c != '\n') {
                chars.next();
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut end = start;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    end = i + c.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            out.push(Token { tok: Tok::Ident(src[start..end].to_string()), span: span_to(end) });
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = start;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_ascii_digit() {
                    end = i + 1;
                    chars.next();
                } else {
                    break;
                }
            }
            out.push(Token { tok: Tok::Int(src[start..end].to_string()), span: span_to(end) });
            continue;
        }
        chars.next();
        let tok = match c {
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            ',' => Tok::Comma,
            ':' => Tok::Colon,
            '=' => Tok::Eq,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '.' if chars.peek().is_some_and(|&(_, c)| c == '.') => {
                chars.next();
                out.push(Token { tok: Tok::DotDot, span: span_to(start + 2) });
                continue;
            }
            other => {
                errors.push(Diagnostic::error(span_to(start + other.len_utf8()), format!("unexpected character {other:?}")));
                continue;
            }
        };
        out.push(Token { tok, span: span_to(start + c.len_utf8()) });
    }
    let col = src[line_start..].chars().count() + 1;
    out.push(Token { tok: Tok::Eof, span: Span { line, col, start: src.len(), end: src.len() } });
    if errors.is_empty() {
        Ok(out)
    } else {
        Err(errors)
    }
}
