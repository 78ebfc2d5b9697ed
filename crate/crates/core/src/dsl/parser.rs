//! Recursive-descent parser for `.igeo` scripts.
//!
//! ```text
//! script  := stmt*
//! stmt    := "let" IDENT "=" expr ";"
//!          | "assert_close" "(" mexpr "," mexpr "," "tol" "=" NUMBER ")" ";"
//! expr    := IDENT "(" args? ")" | IDENT
//! args    := arg ("," arg)*
//! arg     := IDENT "=" value | value
//! value   := expr | point | mexpr
//! point   := "(" mexpr "," mexpr ("," mexpr)* ")"
//! mexpr   := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*
//! unary   := "-" unary | primary
//! primary := NUMBER | "pi" | "(" mexpr ")" | MEASURE "(" expr ")"
//! ```
//!
//! Calls to a transform name take the transformed figure as their first
//! argument. Parsing stops at the first error.

use super::ast::{Arg, ArgValue, Ast, BinOp, Expr, MExpr, MeasureKind, Stmt};
use super::lexer::{tokenize, Token, TokenKind};
use super::{ParseError, TRANSFORMS};

pub fn parse(source: &str) -> Result<Ast, ParseError> {
    let tokens = tokenize(source)?;
    let mut p = Parser { tokens, pos: 0 };
    let mut statements = Vec::new();
    while p.peek().kind != TokenKind::Eof {
        statements.push(p.stmt()?);
    }
    Ok(Ast { statements })
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, offset: usize) -> &Token {
        let i = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[i]
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.kind != TokenKind::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        let t = self.peek();
        ParseError {
            line: t.line,
            column: t.column,
            expected: expected.to_string(),
            found: t.describe(),
        }
    }

    fn expect_punct(&mut self, p: &str) -> Result<Token, ParseError> {
        if self.peek().is_punct(p) {
            Ok(self.advance())
        } else {
            Err(self.error(&format!("'{p}'")))
        }
    }

    fn expect_ident(&mut self) -> Result<Token, ParseError> {
        if self.peek().kind == TokenKind::Ident {
            Ok(self.advance())
        } else {
            Err(self.error("IDENT"))
        }
    }

    fn stmt(&mut self) -> Result<Stmt, ParseError> {
        let start = self.peek().span();
        if self.peek().is_keyword("let") {
            self.advance();
            let name = self.expect_ident()?.lexeme;
            self.expect_punct("=")?;
            let expr = self.expr()?;
            self.expect_punct(";")?;
            Ok(Stmt::Let {
                name,
                expr,
                span: start,
            })
        } else if self.peek().is_keyword("assert_close") {
            self.advance();
            self.expect_punct("(")?;
            let left = self.mexpr()?;
            self.expect_punct(",")?;
            let right = self.mexpr()?;
            self.expect_punct(",")?;
            if !self.peek().is_keyword("tol") {
                return Err(self.error("'tol'"));
            }
            self.advance();
            self.expect_punct("=")?;
            if self.peek().kind != TokenKind::Number {
                return Err(self.error("NUMBER"));
            }
            let tol = self.number()?;
            if !(tol > 0.0) {
                let t = &self.tokens[self.pos - 1];
                return Err(ParseError {
                    line: t.line,
                    column: t.column,
                    expected: "positive tolerance".into(),
                    found: t.describe(),
                });
            }
            self.expect_punct(")")?;
            self.expect_punct(";")?;
            Ok(Stmt::Assert {
                left,
                right,
                tol,
                span: start,
            })
        } else {
            Err(self.error("'let' or 'assert_close'"))
        }
    }

    fn number(&mut self) -> Result<f64, ParseError> {
        let t = self.advance();
        t.lexeme.parse::<f64>().map_err(|_| ParseError {
            line: t.line,
            column: t.column,
            expected: "NUMBER".into(),
            found: t.describe(),
        })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let head = self.expect_ident()?;
        let span = head.span();
        if !self.peek().is_punct("(") {
            return Ok(Expr::Reference {
                name: head.lexeme,
                span,
            });
        }
        self.advance();
        if TRANSFORMS.contains(&head.lexeme.as_str()) {
            let target = self.expr()?;
            let mut args = Vec::new();
            while self.peek().is_punct(",") {
                self.advance();
                args.push(self.arg()?);
            }
            self.expect_punct(")")?;
            return Ok(Expr::Transform {
                name: head.lexeme,
                target: Box::new(target),
                args,
                span,
            });
        }
        let mut args = Vec::new();
        if !self.peek().is_punct(")") {
            args.push(self.arg()?);
            while self.peek().is_punct(",") {
                self.advance();
                args.push(self.arg()?);
            }
        }
        self.expect_punct(")")?;
        Ok(Expr::Constructor {
            name: head.lexeme,
            args,
            span,
        })
    }

    fn arg(&mut self) -> Result<Arg, ParseError> {
        if self.peek().kind == TokenKind::Ident && self.peek_at(1).is_punct("=") {
            let name = self.advance().lexeme;
            self.advance();
            let value = self.value()?;
            return Ok(Arg {
                name: Some(name),
                value,
            });
        }
        Ok(Arg {
            name: None,
            value: self.value()?,
        })
    }

    /// Whether the parenthesis at the cursor opens a point literal, i.e. has
    /// a comma at its own nesting level.
    fn opens_point(&self) -> bool {
        let mut depth = 0usize;
        for t in &self.tokens[self.pos..] {
            if t.is_punct("(") {
                depth += 1;
            } else if t.is_punct(")") {
                depth -= 1;
                if depth == 0 {
                    return false;
                }
            } else if t.is_punct(",") && depth == 1 {
                return true;
            } else if t.kind == TokenKind::Eof || t.is_punct(";") {
                return false;
            }
        }
        false
    }

    fn value(&mut self) -> Result<ArgValue, ParseError> {
        let t = self.peek();
        if t.kind == TokenKind::Ident {
            return Ok(ArgValue::Figure(self.expr()?));
        }
        if t.is_punct("(") && self.opens_point() {
            self.advance();
            let mut coords = vec![self.mexpr()?];
            while self.peek().is_punct(",") {
                self.advance();
                coords.push(self.mexpr()?);
            }
            self.expect_punct(")")?;
            return Ok(ArgValue::Point(coords));
        }
        if self.starts_mexpr() {
            return Ok(ArgValue::Number(self.mexpr()?));
        }
        Err(self.error("NUMBER"))
    }

    fn starts_mexpr(&self) -> bool {
        let t = self.peek();
        t.kind == TokenKind::Number
            || t.is_keyword("pi")
            || t.is_punct("(")
            || t.is_punct("-")
            || (t.kind == TokenKind::Keyword && MeasureKind::from_keyword(&t.lexeme).is_some())
    }

    fn mexpr(&mut self) -> Result<MExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.peek().is_punct("+") {
                BinOp::Add
            } else if self.peek().is_punct("-") {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            self.advance();
            let rhs = self.term()?;
            lhs = MExpr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            };
        }
    }

    fn term(&mut self) -> Result<MExpr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.peek().is_punct("*") {
                BinOp::Mul
            } else if self.peek().is_punct("/") {
                BinOp::Div
            } else {
                return Ok(lhs);
            };
            self.advance();
            let rhs = self.unary()?;
            lhs = MExpr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
            };
        }
    }

    fn unary(&mut self) -> Result<MExpr, ParseError> {
        if self.peek().is_punct("-") {
            self.advance();
            return Ok(MExpr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<MExpr, ParseError> {
        let t = self.peek().clone();
        match t.kind {
            TokenKind::Number => Ok(MExpr::Number(self.number()?)),
            TokenKind::Keyword if t.lexeme == "pi" => {
                self.advance();
                Ok(MExpr::Pi)
            }
            TokenKind::Keyword if MeasureKind::from_keyword(&t.lexeme).is_some() => {
                self.advance();
                self.expect_punct("(")?;
                let target = self.expr()?;
                self.expect_punct(")")?;
                Ok(MExpr::Measure {
                    kind: MeasureKind::from_keyword(&t.lexeme).expect("checked"),
                    target: Box::new(target),
                    span: t.span(),
                })
            }
            TokenKind::Punct if t.lexeme == "(" => {
                self.advance();
                let inner = self.mexpr()?;
                self.expect_punct(")")?;
                Ok(inner)
            }
            _ => Err(self.error("NUMBER or measure")),
        }
    }
}
