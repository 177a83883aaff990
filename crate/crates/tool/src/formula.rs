//! CTL formula surface syntax.
//!
//! ```text
//! f ::= NAME | !f | f & f | f | f | (f)
//!     | EX f | AX f | EF f | AF f | EG f | AG f
//!     | E[f U f] | A[f U f] | E[f R f] | A[f R f]
//! ```
//!
//! `!` and the temporal prefixes bind tighter than `&`, which binds tighter
//! than `|`. Binary connectives associate to the left. `EX AX EF AF EG AG
//! E A U R` are reserved and cannot be predicate names.

use insider_core::CtlFormula;

use crate::diag::Diagnostic;
use crate::lex::{lex, Cursor, Tok};

pub const KEYWORDS: [&str; 10] = ["EX", "AX", "EF", "AF", "EG", "AG", "E", "A", "U", "R"];

/// Parses a formula; errors carry a 1-based column (line 1).
pub fn parse_formula(text: &str) -> Result<CtlFormula, Diagnostic> {
    let toks = lex(text, 1, 1)?;
    let mut c = Cursor::new(&toks, 1, text.chars().count() + 1);
    if c.at_end() {
        return Err(c.error("empty formula"));
    }
    let f = or(&mut c)?;
    c.finish()?;
    Ok(f)
}

fn or(c: &mut Cursor) -> Result<CtlFormula, Diagnostic> {
    let mut f = and(c)?;
    while c.peek() == Some(&Tok::Pipe) {
        c.bump();
        f = f.or(and(c)?);
    }
    Ok(f)
}

fn and(c: &mut Cursor) -> Result<CtlFormula, Diagnostic> {
    let mut f = unary(c)?;
    while c.peek() == Some(&Tok::Amp) {
        c.bump();
        f = f.and(unary(c)?);
    }
    Ok(f)
}

fn unary(c: &mut Cursor) -> Result<CtlFormula, Diagnostic> {
    match c.peek() {
        Some(Tok::Bang) => {
            c.bump();
            Ok(unary(c)?.not())
        }
        Some(Tok::LParen) => {
            c.bump();
            let f = or(c)?;
            c.expect(Tok::RParen, "`)`")?;
            Ok(f)
        }
        Some(Tok::Ident(name)) => {
            let col = c.col();
            c.bump();
            let prefix: Option<fn(CtlFormula) -> CtlFormula> = match name.as_str() {
                "EX" => Some(CtlFormula::ex),
                "AX" => Some(CtlFormula::ax),
                "EF" => Some(CtlFormula::ef),
                "AF" => Some(CtlFormula::af),
                "EG" => Some(CtlFormula::eg),
                "AG" => Some(CtlFormula::ag),
                _ => None,
            };
            if let Some(op) = prefix {
                return Ok(op(unary(c)?));
            }
            match name.as_str() {
                "E" | "A" => {
                    c.expect(Tok::LBrack, "`[` after path quantifier")?;
                    let lhs = or(c)?;
                    let (op, op_col) = c.name("`U` or `R`")?;
                    let rhs = or(c)?;
                    c.expect(Tok::RBrack, "`]`")?;
                    Ok(match (name.as_str(), op.as_str()) {
                        ("E", "U") => lhs.eu(rhs),
                        ("A", "U") => lhs.au(rhs),
                        ("E", "R") => lhs.er(rhs),
                        ("A", "R") => lhs.ar(rhs),
                        _ => return Err(Diagnostic::new(1, op_col, format!("expected `U` or `R`, found `{op}`"))),
                    })
                }
                "U" | "R" => Err(Diagnostic::new(
                    1,
                    col,
                    format!("`{name}` may only appear inside E[..] or A[..]"),
                )),
                _ => Ok(CtlFormula::Pred(name.clone())),
            }
        }
        _ => Err(c.unexpected("a formula")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: &str) -> CtlFormula {
        CtlFormula::pred(n)
    }

    #[test]
    fn examples() {
        assert_eq!(parse_formula("AG eve_ok").unwrap(), p("eve_ok").ag());
        assert_eq!(parse_formula("EF !eve_ok").unwrap(), p("eve_ok").not().ef());
        assert_eq!(
            parse_formula("A[p U q] & EX r").unwrap(),
            p("p").au(p("q")).and(p("r").ex())
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse_formula("a | b & c | d").unwrap(),
            p("a").or(p("b").and(p("c"))).or(p("d"))
        );
        assert_eq!(parse_formula("!a & b").unwrap(), p("a").not().and(p("b")));
        assert_eq!(parse_formula("EF a & b").unwrap(), p("a").ef().and(p("b")));
        assert_eq!(parse_formula("EF (a & b)").unwrap(), p("a").and(p("b")).ef());
        assert_eq!(
            parse_formula("E[a | b R !c]").unwrap(),
            p("a").or(p("b")).er(p("c").not())
        );
    }

    #[test]
    fn positioned_errors() {
        let e = parse_formula("AG (a & )").unwrap_err();
        assert_eq!(e.column, 9);
        let e = parse_formula("E[a X b]").unwrap_err();
        assert_eq!(e.column, 5);
        assert!(parse_formula("").is_err());
        let e = parse_formula("a b").unwrap_err();
        assert_eq!(e.column, 3);
        assert!(parse_formula("U").is_err());
    }
}
