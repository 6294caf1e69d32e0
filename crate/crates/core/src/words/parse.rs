//! Parser for the braid word text format.

use crate::error::{Error, Result};

use super::braid::{BraidWord, Letter};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Virt(i64),
    LBracket,
    RBracket,
    Comma,
    LParen,
    RParen,
    Caret,
}

struct Lexed {
    tok: Tok,
    line: usize,
    col: usize,
}

fn read_int(chars: &[char], i: &mut usize) -> Option<i64> {
    let start = *i;
    if *i < chars.len() && chars[*i] == '-' {
        *i += 1;
    }
    let digits = *i;
    while *i < chars.len() && chars[*i].is_ascii_digit() {
        *i += 1;
    }
    if *i == digits {
        *i = start;
        return None;
    }
    chars[start..*i].iter().collect::<String>().parse().ok()
}

fn lex(body: &[(usize, &str)]) -> Result<Vec<Lexed>> {
    let mut out = Vec::new();
    for &(line, text) in body {
        let text = text.split('#').next().unwrap_or("");
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let simple = match c {
                '[' => Some(Tok::LBracket),
                ']' => Some(Tok::RBracket),
                ',' => Some(Tok::Comma),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                '^' => Some(Tok::Caret),
                _ => None,
            };
            if let Some(tok) = simple {
                out.push(Lexed { tok, line, col });
                i += 1;
            } else if c.is_whitespace() {
                i += 1;
            } else if c == 'v' {
                i += 1;
                let k = read_int(&chars, &mut i)
                    .filter(|k| *k > 0)
                    .ok_or_else(|| Error::parse(line, col, "expected a positive index after `v`"))?;
                out.push(Lexed { tok: Tok::Virt(k), line, col });
            } else if c == '-' || c.is_ascii_digit() {
                let k = read_int(&chars, &mut i).ok_or_else(|| Error::parse(line, col, "expected an integer"))?;
                out.push(Lexed { tok: Tok::Int(k), line, col });
            } else {
                return Err(Error::parse(line, col, format!("unexpected character `{c}`")));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Lexed],
    pos: usize,
    n: usize,
    end: (usize, usize),
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or(self.end, |l| (l.line, l.col))
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (l, c) = self.here();
        Error::parse(l, c, msg)
    }

    fn index(&self, k: i64) -> Result<usize> {
        let i = k.unsigned_abs() as usize;
        if k == 0 || i >= self.n {
            return Err(self.err(format!("generator index {i} out of range for {} strands", self.n)));
        }
        Ok(i)
    }

    fn seq(&mut self) -> Result<BraidWord> {
        let mut w = BraidWord::identity(self.n);
        while let Some(t) = self.peek() {
            if matches!(t, Tok::RBracket | Tok::Comma | Tok::RParen) {
                break;
            }
            let item = self.item()?;
            w = w.concat(&item)?;
        }
        Ok(w)
    }

    fn item(&mut self) -> Result<BraidWord> {
        let base = match self.peek().cloned() {
            Some(Tok::Int(k)) => {
                let i = self.index(k)?;
                self.pos += 1;
                BraidWord::new(self.n, vec![Letter::Sigma(i, if k > 0 { 1 } else { -1 })])?
            }
            Some(Tok::Virt(k)) => {
                let i = self.index(k)?;
                self.pos += 1;
                BraidWord::new(self.n, vec![Letter::Tau(i)])?
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let a = self.seq()?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.seq()?;
                self.expect(Tok::RBracket, "`]`")?;
                BraidWord::commutator(&a, &b)?
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let a = self.seq()?;
                self.expect(Tok::RParen, "`)`")?;
                a
            }
            _ => return Err(self.err("expected a generator, `[` or `(`")),
        };
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(k)) => {
                    self.pos += 1;
                    return Ok(base.pow(k));
                }
                _ => return Err(self.err("expected an integer exponent")),
            }
        }
        Ok(base)
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }
}

pub(crate) fn parse_braid_word(src: &str) -> Result<BraidWord> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.split('#').next().unwrap_or("").trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, 1, "missing `n=<strands>` header"))?;
    let header = header.split('#').next().unwrap_or("");
    let n = header
        .trim()
        .strip_prefix("n=")
        .or_else(|| header.trim().strip_prefix("n ="))
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::parse(hl, 1, "expected header `n=<strands>`"))?;
    let body: Vec<(usize, &str)> = lines.collect();
    let toks = lex(&body)?;
    let end = body.last().map_or((hl + 1, 1), |(l, t)| (*l, t.chars().count() + 1));
    let mut p = Parser { toks: &toks, pos: 0, n, end };
    let w = p.seq()?;
    if p.pos < toks.len() {
        return Err(p.err("unexpected token"));
    }
    Ok(w)
}
