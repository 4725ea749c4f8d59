//! Lexer and recursive-descent parser for the expression language.
//!
//! ```text
//! expr    = sum ;
//! sum     = product { ( "+" | "+." | "-" | "-." ) product } ;
//! product = unary { ( "*" | "*." | "/" ) unary } ;
//! unary   = "-" unary | power ;
//! power   = primary [ ( "^" | "^^" ) unary ] ;
//! primary = natural | name | name "(" [ expr { "," expr } ] ")"
//!         | "H" "[" expr "]" "(" expr "," expr ")"
//!         | "sqrt" "[" expr "]" "(" expr ")"
//!         | "(" expr ")" | "(" expr "," expr ")" ;
//! natural = digit { digit } ;
//! name    = letter { letter | digit | "_" } ;
//! ```

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

/// Byte range into the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    fn join(self, other: Span) -> Span {
        Span {
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    NatAdd,
    NatMul,
    RecAdd,
    RecMul,
    RecPow,
    Tetra,
    Frac,
    RecSub,
    Sub,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::NatAdd => "+",
            BinOp::NatMul => "*",
            BinOp::RecAdd => "+.",
            BinOp::RecMul => "*.",
            BinOp::RecPow => "^",
            BinOp::Tetra => "^^",
            BinOp::Frac => "/",
            BinOp::RecSub => "-.",
            BinOp::Sub => "-",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    NatLiteral(BigUint),
    Omega,
    Eps0Sentinel,
    ImaginaryUnit,
    Bool(bool),
    Var(String),
    UnaryNeg(Box<Expr>),
    BinOp(BinOp, Box<Expr>, Box<Expr>),
    Complex(Box<Expr>, Box<Expr>),
    HyperApp(Box<Expr>, Box<Expr>, Box<Expr>),
    RootCut(Box<Expr>, Box<Expr>),
    FuncApp(String, Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl Expr {
    fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }

    /// Structural shape with spans dropped, for tests and debugging.
    pub fn shape(&self) -> String {
        match &self.kind {
            ExprKind::NatLiteral(n) => n.to_string(),
            ExprKind::Omega => "w".into(),
            ExprKind::Eps0Sentinel => "e0".into(),
            ExprKind::ImaginaryUnit => "i".into(),
            ExprKind::Bool(b) => b.to_string(),
            ExprKind::Var(v) => v.clone(),
            ExprKind::UnaryNeg(e) => format!("(neg {})", e.shape()),
            ExprKind::BinOp(op, l, r) => format!("({} {} {})", op.symbol(), l.shape(), r.shape()),
            ExprKind::Complex(a, b) => format!("(complex {} {})", a.shape(), b.shape()),
            ExprKind::HyperApp(n, a, b) => format!("(H {} {} {})", n.shape(), a.shape(), b.shape()),
            ExprKind::RootCut(n, q) => format!("(sqrt {} {})", n.shape(), q.shape()),
            ExprKind::FuncApp(f, args) => {
                let mut s = format!("({f}");
                for a in args {
                    s.push(' ');
                    s.push_str(&a.shape());
                }
                s.push(')');
                s
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigUint),
    Name(String),
    Plus,
    PlusDot,
    Minus,
    MinusDot,
    Star,
    StarDot,
    Slash,
    Caret,
    CaretCaret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(_) => "number".into(),
            Tok::Name(_) => "name".into(),
            Tok::Eof => "end of input".into(),
            other => format!("'{}'", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Plus => "+",
            Tok::PlusDot => "+.",
            Tok::Minus => "-",
            Tok::MinusDot => "-.",
            Tok::Star => "*",
            Tok::StarDot => "*.",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::CaretCaret => "^^",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            Tok::Num(_) | Tok::Name(_) | Tok::Eof => "",
        }
    }
}

/// A parse failure with its 1-based position and the tokens that would have been accepted.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct Diagnostic {
    pub line: usize,
    pub column: usize,
    pub offset: usize,
    pub found: String,
    pub expected: BTreeSet<String>,
}

impl Diagnostic {
    /// The description without the position.
    pub fn message(&self) -> String {
        let mut s = format!("unexpected {}", self.found);
        if !self.expected.is_empty() {
            let list: Vec<&str> = self.expected.iter().map(String::as_str).collect();
            s.push_str(", expected one of: ");
            s.push_str(&list.join(", "));
        }
        s
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message())
    }
}

/// 1-based line and column of a byte offset, counting columns in characters.
pub fn line_column(src: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(src.len());
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    let column = before[line_start..].chars().count() + 1;
    (line, column)
}

struct Lexed {
    tok: Tok,
    span: Span,
}

fn lex(src: &str) -> Result<Vec<Lexed>, Diagnostic> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let next = bytes.get(i + 1).copied();
        let (tok, len) = match c {
            b'0'..=b'9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let n = src[i..j].parse::<BigUint>().expect("ascii digits");
                (Tok::Num(n), j - i)
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let mut j = i;
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
                    j += 1;
                }
                (Tok::Name(src[i..j].to_string()), j - i)
            }
            b'+' if next == Some(b'.') => (Tok::PlusDot, 2),
            b'-' if next == Some(b'.') => (Tok::MinusDot, 2),
            b'*' if next == Some(b'.') => (Tok::StarDot, 2),
            b'^' if next == Some(b'^') => (Tok::CaretCaret, 2),
            b'+' => (Tok::Plus, 1),
            b'-' => (Tok::Minus, 1),
            b'*' => (Tok::Star, 1),
            b'/' => (Tok::Slash, 1),
            b'^' => (Tok::Caret, 1),
            b'(' => (Tok::LParen, 1),
            b')' => (Tok::RParen, 1),
            b'[' => (Tok::LBracket, 1),
            b']' => (Tok::RBracket, 1),
            b',' => (Tok::Comma, 1),
            _ => {
                let ch = src[i..].chars().next().expect("in bounds");
                let (line, column) = line_column(src, i);
                return Err(Diagnostic {
                    line,
                    column,
                    offset: i,
                    found: format!("character {ch:?}"),
                    expected: ["expression or operator".to_string()].into(),
                });
            }
        };
        i += len;
        out.push(Lexed {
            tok,
            span: Span { start, end: i },
        });
    }
    out.push(Lexed {
        tok: Tok::Eof,
        span: Span {
            start: src.len(),
            end: src.len(),
        },
    });
    Ok(out)
}

const MAX_NESTING: usize = 256;
const MAX_TOKENS: usize = 4096;

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Lexed>,
    pos: usize,
    depth: usize,
    expected: BTreeSet<String>,
}

type PResult<T> = Result<T, Diagnostic>;

const EXPR_START: [&str; 4] = ["number", "name", "'('", "'-'"];

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn span(&self) -> Span {
        self.toks[self.pos].span
    }

    fn bump(&mut self) -> Span {
        let s = self.span();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        self.expected.clear();
        s
    }

    fn error(&self) -> Diagnostic {
        let span = self.span();
        let (line, column) = line_column(self.src, span.start);
        let found = match self.peek() {
            Tok::Num(n) => format!("number {n}"),
            Tok::Name(s) => format!("name '{s}'"),
            t => t.describe(),
        };
        Diagnostic {
            line,
            column,
            offset: span.start,
            found,
            expected: self.expected.clone(),
        }
    }

    fn check(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            true
        } else {
            self.expected.insert(t.describe());
            false
        }
    }

    fn expect(&mut self, t: Tok) -> PResult<Span> {
        if self.check(&t) {
            Ok(self.bump())
        } else {
            Err(self.error())
        }
    }

    fn enter(&mut self) -> PResult<()> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            let mut d = self.error();
            d.found = format!("nesting deeper than {MAX_NESTING}");
            d.expected.clear();
            return Err(d);
        }
        Ok(())
    }

    fn expr(&mut self) -> PResult<Expr> {
        self.enter()?;
        let r = self.sum();
        self.depth -= 1;
        r
    }

    fn sum(&mut self) -> PResult<Expr> {
        let mut lhs = self.product()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::NatAdd,
                Tok::PlusDot => BinOp::RecAdd,
                Tok::Minus => BinOp::Sub,
                Tok::MinusDot => BinOp::RecSub,
                _ => {
                    for t in [Tok::Plus, Tok::PlusDot, Tok::Minus, Tok::MinusDot] {
                        self.expected.insert(t.describe());
                    }
                    return Ok(lhs);
                }
            };
            self.bump();
            let rhs = self.product()?;
            let span = lhs.span.join(rhs.span);
            lhs = Expr::new(ExprKind::BinOp(op, Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn product(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::NatMul,
                Tok::StarDot => BinOp::RecMul,
                Tok::Slash => BinOp::Frac,
                _ => {
                    for t in [Tok::Star, Tok::StarDot, Tok::Slash] {
                        self.expected.insert(t.describe());
                    }
                    return Ok(lhs);
                }
            };
            self.bump();
            let rhs = self.unary()?;
            let span = lhs.span.join(rhs.span);
            lhs = Expr::new(ExprKind::BinOp(op, Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        if *self.peek() == Tok::Minus {
            let start = self.bump();
            self.enter()?;
            let inner = self.unary();
            self.depth -= 1;
            let inner = inner?;
            let span = start.join(inner.span);
            return Ok(Expr::new(ExprKind::UnaryNeg(Box::new(inner)), span));
        }
        self.power()
    }

    fn power(&mut self) -> PResult<Expr> {
        let base = self.primary()?;
        let op = match self.peek() {
            Tok::Caret => BinOp::RecPow,
            Tok::CaretCaret => BinOp::Tetra,
            _ => {
                self.expected.insert(Tok::Caret.describe());
                self.expected.insert(Tok::CaretCaret.describe());
                return Ok(base);
            }
        };
        self.bump();
        self.enter()?;
        let exp = self.unary();
        self.depth -= 1;
        let exp = exp?;
        let span = base.span.join(exp.span);
        Ok(Expr::new(
            ExprKind::BinOp(op, Box::new(base), Box::new(exp)),
            span,
        ))
    }

    fn primary(&mut self) -> PResult<Expr> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Num(n) => {
                self.bump();
                Ok(Expr::new(ExprKind::NatLiteral(n), span))
            }
            Tok::LParen => {
                self.bump();
                let first = self.expr()?;
                if self.check(&Tok::Comma) {
                    self.bump();
                    let second = self.expr()?;
                    let end = self.expect(Tok::RParen)?;
                    return Ok(Expr::new(
                        ExprKind::Complex(Box::new(first), Box::new(second)),
                        span.join(end),
                    ));
                }
                let end = self.expect(Tok::RParen)?;
                Ok(Expr::new(first.kind, span.join(end)))
            }
            Tok::Name(name) => {
                self.bump();
                self.named(name, span)
            }
            _ => {
                for t in EXPR_START {
                    self.expected.insert(t.to_string());
                }
                Err(self.error())
            }
        }
    }

    fn named(&mut self, name: String, span: Span) -> PResult<Expr> {
        if (name == "H" || name == "sqrt") && self.check(&Tok::LBracket) {
            self.bump();
            let index = self.expr()?;
            self.expect(Tok::RBracket)?;
            self.expect(Tok::LParen)?;
            let a = self.expr()?;
            if name == "sqrt" {
                let end = self.expect(Tok::RParen)?;
                return Ok(Expr::new(
                    ExprKind::RootCut(Box::new(index), Box::new(a)),
                    span.join(end),
                ));
            }
            self.expect(Tok::Comma)?;
            let b = self.expr()?;
            let end = self.expect(Tok::RParen)?;
            return Ok(Expr::new(
                ExprKind::HyperApp(Box::new(index), Box::new(a), Box::new(b)),
                span.join(end),
            ));
        }
        if self.check(&Tok::LParen) {
            self.bump();
            let mut args = Vec::new();
            if !self.check(&Tok::RParen) {
                loop {
                    args.push(self.expr()?);
                    if !self.check(&Tok::Comma) {
                        break;
                    }
                    self.bump();
                }
            }
            let end = self.expect(Tok::RParen)?;
            return Ok(Expr::new(ExprKind::FuncApp(name, args), span.join(end)));
        }
        let kind = match name.as_str() {
            "w" => ExprKind::Omega,
            "e0" => ExprKind::Eps0Sentinel,
            "i" => ExprKind::ImaginaryUnit,
            "true" => ExprKind::Bool(true),
            "false" => ExprKind::Bool(false),
            _ => ExprKind::Var(name),
        };
        Ok(Expr::new(kind, span))
    }
}

pub fn parse(src: &str) -> Result<Expr, Diagnostic> {
    let toks = lex(src)?;
    if toks.len() > MAX_TOKENS {
        let (line, column) = line_column(src, toks[MAX_TOKENS].span.start);
        return Err(Diagnostic {
            line,
            column,
            offset: toks[MAX_TOKENS].span.start,
            found: format!("input longer than {MAX_TOKENS} tokens"),
            expected: BTreeSet::new(),
        });
    }
    let mut p = Parser {
        src,
        toks,
        pos: 0,
        depth: 0,
        expected: BTreeSet::new(),
    };
    let e = p.expr()?;
    if !p.check(&Tok::Eof) {
        return Err(p.error());
    }
    Ok(e)
}
