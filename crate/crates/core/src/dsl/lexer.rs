use super::ast::Span;
use super::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Number,
    Keyword,
    Punct,
    Eof,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub line: usize,
    pub column: usize,
}

impl Token {
    pub fn span(&self) -> Span {
        Span::new(self.line, self.column)
    }

    pub fn is_punct(&self, p: &str) -> bool {
        self.kind == TokenKind::Punct && self.lexeme == p
    }

    pub fn is_keyword(&self, k: &str) -> bool {
        self.kind == TokenKind::Keyword && self.lexeme == k
    }

    /// How the token is shown in diagnostics.
    pub fn describe(&self) -> String {
        match self.kind {
            TokenKind::Eof => "end of input".to_string(),
            _ => format!("'{}'", self.lexeme),
        }
    }
}

pub const KEYWORDS: &[&str] = &[
    "let",
    "assert_close",
    "tol",
    "pi",
    "area",
    "volume",
    "surface",
    "lateral_area",
    "perimeter",
    "centroid_rho",
];

const PUNCT: &[char] = &['(', ')', ',', '=', ';', '+', '-', '*', '/'];

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
    last: (usize, usize),
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        self.last = (self.line, self.column);
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }
}

/// Split source text into tokens, ending with an `Eof` token positioned on
/// the last character of the source (or 1:1 when the source is empty).
pub fn tokenize(source: &str) -> Result<Vec<Token>, ParseError> {
    let mut cur = Cursor {
        chars: source.chars().peekable(),
        line: 1,
        column: 1,
        last: (1, 1),
    };
    let mut tokens = Vec::new();
    while let Some(c) = cur.peek() {
        let (line, column) = (cur.line, cur.column);
        if c.is_whitespace() {
            cur.bump();
        } else if c == '#' {
            while let Some(c) = cur.peek() {
                if c == '\n' {
                    break;
                }
                cur.bump();
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(c) = cur.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '_') {
                s.push(c);
                cur.bump();
            }
            let kind = if KEYWORDS.contains(&s.as_str()) {
                TokenKind::Keyword
            } else {
                TokenKind::Ident
            };
            tokens.push(Token {
                kind,
                lexeme: s,
                line,
                column,
            });
        } else if c.is_ascii_digit() || c == '.' {
            let s = lex_number(&mut cur, line, column)?;
            tokens.push(Token {
                kind: TokenKind::Number,
                lexeme: s,
                line,
                column,
            });
        } else if PUNCT.contains(&c) {
            cur.bump();
            tokens.push(Token {
                kind: TokenKind::Punct,
                lexeme: c.to_string(),
                line,
                column,
            });
        } else {
            return Err(ParseError {
                line,
                column,
                expected: "token".into(),
                found: format!("'{c}'"),
            });
        }
    }
    let (line, column) = cur.last;
    tokens.push(Token {
        kind: TokenKind::Eof,
        lexeme: String::new(),
        line,
        column,
    });
    Ok(tokens)
}

fn lex_number(cur: &mut Cursor<'_>, line: usize, column: usize) -> Result<String, ParseError> {
    let mut s = String::new();
    let mut digits = 0;
    while let Some(c) = cur.peek().filter(char::is_ascii_digit) {
        s.push(c);
        digits += 1;
        cur.bump();
    }
    if cur.peek() == Some('.') {
        s.push('.');
        cur.bump();
        while let Some(c) = cur.peek().filter(char::is_ascii_digit) {
            s.push(c);
            digits += 1;
            cur.bump();
        }
    }
    if digits == 0 {
        return Err(ParseError {
            line,
            column,
            expected: "NUMBER".into(),
            found: "'.'".into(),
        });
    }
    if matches!(cur.peek(), Some('e' | 'E')) {
        let (eline, ecol) = (cur.line, cur.column);
        s.push('e');
        cur.bump();
        if let Some(sign @ ('+' | '-')) = cur.peek() {
            s.push(sign);
            cur.bump();
        }
        let mut exp_digits = 0;
        while let Some(c) = cur.peek().filter(char::is_ascii_digit) {
            s.push(c);
            exp_digits += 1;
            cur.bump();
        }
        if exp_digits == 0 {
            return Err(ParseError {
                line: eline,
                column: ecol,
                expected: "exponent digits".into(),
                found: format!("'{s}'"),
            });
        }
    }
    Ok(s)
}
