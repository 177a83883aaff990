//! Tokenizer shared by the condition, predicate and formula grammars.

use crate::diag::Diagnostic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Bang,
    Amp,
    Pipe,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrack => "`[`".into(),
            Tok::RBrack => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
        }
    }
}

/// Characters allowed in names: anything but whitespace and punctuation
/// used by the grammars.
pub fn is_name_char(c: char) -> bool {
    !c.is_whitespace() && !"()[],!&|:=#".contains(c)
}

pub fn is_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(is_name_char)
}

/// Token with its 1-based column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spanned {
    pub tok: Tok,
    pub col: usize,
}

pub fn lex(text: &str, line: usize, col0: usize) -> Result<Vec<Spanned>, Diagnostic> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            ',' => Some(Tok::Comma),
            '!' => Some(Tok::Bang),
            '&' => Some(Tok::Amp),
            '|' => Some(Tok::Pipe),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Spanned { tok, col });
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if is_name_char(c) {
            let start = i;
            while i < chars.len() && is_name_char(chars[i]) {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                col,
            });
        } else {
            return Err(Diagnostic::new(line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

/// Cursor over a token list with positioned errors.
pub struct Cursor<'a> {
    toks: &'a [Spanned],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(toks: &'a [Spanned], line: usize, end_col: usize) -> Self {
        Cursor {
            toks,
            pos: 0,
            line,
            end_col,
        }
    }

    pub fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    pub fn peek2(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos + 1).map(|s| &s.tok)
    }

    pub fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |s| s.col)
    }

    pub fn bump(&mut self) -> Option<&'a Tok> {
        let t = self.peek();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn error(&self, msg: impl Into<String>) -> Diagnostic {
        Diagnostic::new(self.line, self.col(), msg)
    }

    pub fn unexpected(&self, wanted: &str) -> Diagnostic {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {}", t.describe())),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    pub fn expect(&mut self, tok: Tok, wanted: &str) -> Result<(), Diagnostic> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    /// A name token, returning it with its column.
    pub fn name(&mut self, wanted: &str) -> Result<(String, usize), Diagnostic> {
        let col = self.col();
        match self.peek() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok((s.clone(), col))
            }
            _ => Err(self.unexpected(wanted)),
        }
    }

    pub fn finish(&self) -> Result<(), Diagnostic> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.unexpected("end of expression"))
        }
    }
}
