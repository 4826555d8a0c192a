//! Hand-rolled lexer and recursive-descent parser with positions.

use super::ast::Term;
use crate::error::{QcatError, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Literal(String),
    KwId,
    KwZero,
    KwDelta,
    KwNabla,
    KwSwap,
    KwDistX,
    KwLift,
    KwO,
    Semi,
    Plus,
    Star,
    TensorOp,
    OplusOp,
    LParen,
    RParen,
    Comma,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> QcatError {
    QcatError::SyntaxError {
        line,
        col,
        msg: msg.into(),
    }
}

fn lex(input: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    let (mut line, mut col) = (1usize, 1usize);
    let mut expect_literal = false;
    while i < chars.len() {
        let c = chars[i];
        let (l, co) = (line, col);
        let mut push = |tok: Tok| out.push(Spanned { tok, line: l, col: co });
        match c {
            '\n' => {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => {}
            _ if expect_literal => {
                // raw scalar literal: everything up to the next comma
                let start = i;
                while i < chars.len() && chars[i] != ',' && chars[i] != ')' {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                col += i - start;
                push(Tok::Literal(text.trim().to_string()));
                expect_literal = false;
                continue;
            }
            '(' => {
                // three-char operators (*) and (+)
                if i + 2 < chars.len() && chars[i + 2] == ')' && chars[i + 1] == '*' {
                    push(Tok::TensorOp);
                    i += 3;
                    col += 3;
                    continue;
                }
                if i + 2 < chars.len() && chars[i + 2] == ')' && chars[i + 1] == '+' {
                    push(Tok::OplusOp);
                    i += 3;
                    col += 3;
                    continue;
                }
                push(Tok::LParen);
                // a lift literal starts right after `lift(`
                if matches!(
                    out.iter().rev().nth(1),
                    Some(Spanned { tok: Tok::KwLift, .. })
                ) {
                    expect_literal = true;
                }
            }
            ')' => push(Tok::RParen),
            ',' => push(Tok::Comma),
            ';' => push(Tok::Semi),
            '+' => push(Tok::Plus),
            '*' => push(Tok::Star),
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                col += i - start;
                let tok = match word.as_str() {
                    "id" => Tok::KwId,
                    "zero" => Tok::KwZero,
                    "delta" => Tok::KwDelta,
                    "nabla" => Tok::KwNabla,
                    "swap" => Tok::KwSwap,
                    "distx" => Tok::KwDistX,
                    "lift" => Tok::KwLift,
                    "o" => Tok::KwO,
                    _ => Tok::Name(word),
                };
                out.push(Spanned { tok, line: l, col: co });
                continue;
            }
            other => return Err(err(line, col, format!("unexpected character `{other}`"))),
        }
        i += 1;
        col += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos.min(self.toks.len().saturating_sub(1)))
            .map(|s| (s.line, s.col))
            .unwrap_or((1, 1))
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|s| s.tok.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let (l, c) = self.here();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(err(l, c, format!("expected {what}, found {t:?}"))),
            None => Err(err(l, c, format!("expected {what}, found end of input"))),
        }
    }

    fn expect_name(&mut self, what: &str) -> Result<String> {
        let (l, c) = self.here();
        match self.bump() {
            Some(Tok::Name(n)) => Ok(n),
            other => Err(err(l, c, format!("expected {what}, found {other:?}"))),
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut acc = self.comp()?;
        while self.peek() == Some(&Tok::Plus) {
            self.bump();
            let rhs = self.comp()?;
            acc = Term::Add(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn comp(&mut self) -> Result<Term> {
        let first = self.fact()?;
        let mut chain: Vec<(Tok, Term)> = Vec::new();
        while matches!(self.peek(), Some(Tok::Semi) | Some(Tok::KwO)) {
            let op = self.bump().expect("peeked");
            chain.push((op, self.fact()?));
        }
        if chain.is_empty() {
            return Ok(first);
        }
        // right-associative fold
        let (last_op, last) = chain.pop().expect("nonempty");
        let mut acc = last;
        let mut pending_op = last_op;
        while let Some((op, item)) = chain.pop() {
            acc = combine(pending_op, item, acc);
            pending_op = op;
        }
        Ok(combine(pending_op, first, acc))
    }

    fn fact(&mut self) -> Result<Term> {
        let mut acc = self.prim()?;
        loop {
            match self.peek() {
                Some(Tok::TensorOp) => {
                    self.bump();
                    let rhs = self.prim()?;
                    acc = Term::Tensor(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::OplusOp) => {
                    self.bump();
                    let rhs = self.prim()?;
                    acc = Term::Oplus(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn prim(&mut self) -> Result<Term> {
        let mut acc = self.atom()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = Term::Adjoint(Box::new(acc));
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Term> {
        let (l, c) = self.here();
        match self.bump() {
            Some(Tok::Name(n)) => Ok(Term::Name(n)),
            Some(Tok::KwId) => {
                self.expect(Tok::LParen, "`(`")?;
                let a = self.expect_name("an object name")?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Term::Id(a))
            }
            Some(Tok::KwDelta) => {
                self.expect(Tok::LParen, "`(`")?;
                let a = self.expect_name("an object name")?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Term::Delta(a))
            }
            Some(Tok::KwNabla) => {
                self.expect(Tok::LParen, "`(`")?;
                let a = self.expect_name("an object name")?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Term::Nabla(a))
            }
            Some(Tok::KwZero) => {
                self.expect(Tok::LParen, "`(`")?;
                let a = self.expect_name("an object name")?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.expect_name("an object name")?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Term::Zero(a, b))
            }
            Some(Tok::KwSwap) => {
                self.expect(Tok::LParen, "`(`")?;
                let a = self.expect_name("an object name")?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.expect_name("an object name")?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Term::Swap(a, b))
            }
            Some(Tok::KwDistX) => {
                self.expect(Tok::LParen, "`(`")?;
                let a = self.expect_name("an object name")?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.expect_name("an object name")?;
                self.expect(Tok::Comma, "`,`")?;
                let cc = self.expect_name("an object name")?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Term::DistX(a, b, cc))
            }
            Some(Tok::KwLift) => {
                self.expect(Tok::LParen, "`(`")?;
                let lit = match self.bump() {
                    Some(Tok::Literal(t)) if !t.is_empty() => t,
                    other => {
                        return Err(err(l, c, format!("expected a scalar literal, found {other:?}")))
                    }
                };
                self.expect(Tok::Comma, "`,`")?;
                let a = self.expect_name("an object name")?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Term::Lift(lit, a))
            }
            Some(Tok::LParen) => {
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            other => Err(err(l, c, format!("expected a term, found {other:?}"))),
        }
    }
}

fn combine(op: Tok, lhs: Term, rhs: Term) -> Term {
    match op {
        // `lhs ; rhs` applies lhs first
        Tok::Semi => Term::compose(lhs, rhs),
        // `lhs o rhs` applies rhs first
        Tok::KwO => Term::compose(rhs, lhs),
        _ => unreachable!("composition operators only"),
    }
}

pub fn parse(input: &str) -> Result<Term> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(err(1, 1, "empty input"));
    }
    let mut p = Parser { toks, pos: 0 };
    let t = p.term()?;
    if p.pos != p.toks.len() {
        let (l, c) = p.here();
        return Err(err(l, c, "trailing input after the term"));
    }
    Ok(t)
}
