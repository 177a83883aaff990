//! Policy condition and state predicate expressions of the model file.
//!
//! Both grammars share the connectives `!`, `&`, `|` (in decreasing
//! precedence, binary ones left-associative) and parentheses.

use insider_core::{Action, Condition, IdentArg, IdentityId, LocationId, SetId, StatePredicate};

use crate::diag::Diagnostic;
use crate::lex::{lex, Cursor, Spanned, Tok};

/// Names visible to an expression.
pub struct Scope<'a> {
    pub locations: &'a [String],
    pub identities: &'a [String],
    pub sets: &'a [String],
    /// Predicates defined so far and whether each takes a parameter.
    pub predicates: &'a [(String, bool)],
    /// The enclosing predicate's parameter, if any.
    pub param: Option<&'a str>,
}

fn find(names: &[String], n: &str) -> Option<usize> {
    names.iter().position(|x| x == n)
}

impl Scope<'_> {
    fn location(&self, n: &str, line: usize, col: usize) -> Result<LocationId, Diagnostic> {
        find(self.locations, n)
            .map(|i| LocationId(i as u16))
            .ok_or_else(|| Diagnostic::new(line, col, format!("unknown location `{n}`")))
    }

    fn set(&self, n: &str, line: usize, col: usize) -> Result<SetId, Diagnostic> {
        find(self.sets, n)
            .map(|i| SetId(i as u16))
            .ok_or_else(|| Diagnostic::new(line, col, format!("unknown identity set `{n}`")))
    }

    fn who(&self, n: &str, line: usize, col: usize) -> Result<IdentArg, Diagnostic> {
        if self.param == Some(n) {
            return Ok(IdentArg::Param);
        }
        find(self.identities, n)
            .map(|i| IdentArg::Identity(IdentityId(i as u16)))
            .ok_or_else(|| Diagnostic::new(line, col, format!("unknown identity `{n}`")))
    }
}

fn count(c: &mut Cursor, line: usize) -> Result<usize, Diagnostic> {
    let (k, col) = c.name("a count")?;
    match k.parse::<usize>() {
        Ok(0) | Err(_) => Err(Diagnostic::new(
            line,
            col,
            format!("expected a positive count, found `{k}`"),
        )),
        Ok(k) => Ok(k),
    }
}

fn tokens(text: &str, line: usize, col0: usize) -> Result<Vec<Spanned>, Diagnostic> {
    let toks = lex(text, line, col0)?;
    if toks.is_empty() {
        return Err(Diagnostic::new(line, col0, "empty expression"));
    }
    Ok(toks)
}

// ---- policy conditions ----

pub fn parse_condition(text: &str, line: usize, col0: usize, scope: &Scope) -> Result<Condition, Diagnostic> {
    let toks = tokens(text, line, col0)?;
    let mut c = Cursor::new(&toks, line, col0 + text.chars().count());
    let out = cond_or(&mut c, line, scope)?;
    c.finish()?;
    Ok(out)
}

fn cond_or(c: &mut Cursor, line: usize, s: &Scope) -> Result<Condition, Diagnostic> {
    let mut out = cond_and(c, line, s)?;
    while c.peek() == Some(&Tok::Pipe) {
        c.bump();
        out = out.or(cond_and(c, line, s)?);
    }
    Ok(out)
}

fn cond_and(c: &mut Cursor, line: usize, s: &Scope) -> Result<Condition, Diagnostic> {
    let mut out = cond_unary(c, line, s)?;
    while c.peek() == Some(&Tok::Amp) {
        c.bump();
        out = out.and(cond_unary(c, line, s)?);
    }
    Ok(out)
}

fn cond_unary(c: &mut Cursor, line: usize, s: &Scope) -> Result<Condition, Diagnostic> {
    match c.peek() {
        Some(Tok::Bang) => {
            c.bump();
            Ok(cond_unary(c, line, s)?.not())
        }
        Some(Tok::LParen) => {
            c.bump();
            let out = cond_or(c, line, s)?;
            c.expect(Tok::RParen, "`)`")?;
            Ok(out)
        }
        Some(Tok::Ident(_)) => {
            let (kw, col) = c.name("a condition")?;
            if kw == "true" {
                return Ok(Condition::True);
            }
            if !matches!(kw.as_str(), "at" | "has" | "role" | "isin" | "atleast" | "allin") {
                return Err(Diagnostic::new(
                    line,
                    col,
                    format!("unknown condition `{kw}` (expected true, at, has, role, isin, atleast or allin)"),
                ));
            }
            c.expect(Tok::LParen, "`(`")?;
            let (a, acol) = c.name("an argument")?;
            let out = match kw.as_str() {
                "at" => Condition::RequesterAt(s.location(&a, line, acol)?),
                "has" => Condition::HasCred(a),
                "role" => Condition::HasRole(a),
                _ => {
                    let l = s.location(&a, line, acol)?;
                    c.expect(Tok::Comma, "`,`")?;
                    match kw.as_str() {
                        "isin" => Condition::IsIn(l, c.name("a value")?.0),
                        "atleast" => Condition::CountAtLeast(l, count(c, line)?),
                        _ => {
                            let (set, scol) = c.name("an identity set")?;
                            Condition::AllAtAuthorized(l, s.set(&set, line, scol)?)
                        }
                    }
                }
            };
            c.expect(Tok::RParen, "`)`")?;
            Ok(out)
        }
        _ => Err(c.unexpected("a condition")),
    }
}

/// Binding strength used to place the minimum number of parentheses.
fn strength_c(c: &Condition) -> u8 {
    match c {
        Condition::Or(..) => 1,
        Condition::And(..) => 2,
        _ => 3,
    }
}

pub fn write_condition(c: &Condition, s: &Scope) -> String {
    let wrap = |x: &Condition, min: u8| {
        let inner = write_condition(x, s);
        if strength_c(x) < min {
            format!("({inner})")
        } else {
            inner
        }
    };
    let loc = |l: &LocationId| s.locations[l.index()].clone();
    match c {
        Condition::True => "true".into(),
        Condition::RequesterAt(l) => format!("at({})", loc(l)),
        Condition::HasCred(t) => format!("has({t})"),
        Condition::HasRole(t) => format!("role({t})"),
        Condition::IsIn(l, v) => format!("isin({}, {v})", loc(l)),
        Condition::CountAtLeast(l, k) => format!("atleast({}, {k})", loc(l)),
        Condition::AllAtAuthorized(l, set) => format!("allin({}, {})", loc(l), s.sets[set.index()]),
        Condition::Not(x) => format!("!{}", wrap(x, 3)),
        Condition::And(a, b) => format!("{} & {}", wrap(a, 2), wrap(b, 3)),
        Condition::Or(a, b) => format!("{} | {}", wrap(a, 1), wrap(b, 2)),
    }
}

// ---- state predicates ----

pub const PREDICATE_KEYWORDS: [&str; 7] = ["true", "false", "enables", "at", "isin", "atleast", "inset"];

pub fn parse_predicate(text: &str, line: usize, col0: usize, scope: &Scope) -> Result<StatePredicate, Diagnostic> {
    let toks = tokens(text, line, col0)?;
    let mut c = Cursor::new(&toks, line, col0 + text.chars().count());
    let out = pred_or(&mut c, line, scope)?;
    c.finish()?;
    Ok(out)
}

fn pred_or(c: &mut Cursor, line: usize, s: &Scope) -> Result<StatePredicate, Diagnostic> {
    let mut out = pred_and(c, line, s)?;
    while c.peek() == Some(&Tok::Pipe) {
        c.bump();
        out = out.or(pred_and(c, line, s)?);
    }
    Ok(out)
}

fn pred_and(c: &mut Cursor, line: usize, s: &Scope) -> Result<StatePredicate, Diagnostic> {
    let mut out = pred_unary(c, line, s)?;
    while c.peek() == Some(&Tok::Amp) {
        c.bump();
        out = out.and(pred_unary(c, line, s)?);
    }
    Ok(out)
}

fn pred_unary(c: &mut Cursor, line: usize, s: &Scope) -> Result<StatePredicate, Diagnostic> {
    match c.peek() {
        Some(Tok::Bang) => {
            c.bump();
            Ok(pred_unary(c, line, s)?.not())
        }
        Some(Tok::LParen) => {
            c.bump();
            let out = pred_or(c, line, s)?;
            c.expect(Tok::RParen, "`)`")?;
            Ok(out)
        }
        Some(Tok::Ident(_)) => {
            let (kw, col) = c.name("a predicate")?;
            match kw.as_str() {
                "true" => return Ok(StatePredicate::True),
                "false" => return Ok(StatePredicate::False),
                _ => {}
            }
            let has_args = c.peek() == Some(&Tok::LParen);
            if !PREDICATE_KEYWORDS.contains(&kw.as_str()) {
                let idx = s.predicates.iter().position(|(n, _)| *n == kw).ok_or_else(|| {
                    Diagnostic::new(
                        line,
                        col,
                        format!("unknown predicate `{kw}` (predicates may only use those defined above them)"),
                    )
                })?;
                let takes_param = s.predicates[idx].1;
                let arg = if has_args {
                    c.bump();
                    let (w, wcol) = c.name("an identity")?;
                    c.expect(Tok::RParen, "`)`")?;
                    Some(s.who(&w, line, wcol)?)
                } else {
                    None
                };
                if takes_param != arg.is_some() {
                    let msg = if takes_param {
                        format!("predicate `{kw}` takes an identity argument")
                    } else {
                        format!("predicate `{kw}` takes no argument")
                    };
                    return Err(Diagnostic::new(line, col, msg));
                }
                return Ok(StatePredicate::Call { predicate: idx, arg });
            }
            c.expect(Tok::LParen, "`(`")?;
            let (a, acol) = c.name("an argument")?;
            let out = match kw.as_str() {
                "enables" => {
                    let location = s.location(&a, line, acol)?;
                    c.expect(Tok::Comma, "`,`")?;
                    let (w, wcol) = c.name("an identity")?;
                    let who = s.who(&w, line, wcol)?;
                    c.expect(Tok::Comma, "`,`")?;
                    let (act, actcol) = c.name("an action")?;
                    let action = parse_action(&act, line, actcol)?;
                    StatePredicate::Enables { location, who, action }
                }
                "at" => {
                    let who = s.who(&a, line, acol)?;
                    c.expect(Tok::Comma, "`,`")?;
                    let (l, lcol) = c.name("a location")?;
                    StatePredicate::At {
                        who,
                        location: s.location(&l, line, lcol)?,
                    }
                }
                "isin" => {
                    let location = s.location(&a, line, acol)?;
                    c.expect(Tok::Comma, "`,`")?;
                    StatePredicate::IsIn {
                        location,
                        value: c.name("a value")?.0,
                    }
                }
                "atleast" => {
                    let location = s.location(&a, line, acol)?;
                    c.expect(Tok::Comma, "`,`")?;
                    StatePredicate::CountAtLeast {
                        location,
                        count: count(c, line)?,
                    }
                }
                _ => {
                    let who = s.who(&a, line, acol)?;
                    c.expect(Tok::Comma, "`,`")?;
                    let (set, scol) = c.name("an identity set")?;
                    StatePredicate::InSet {
                        who,
                        set: s.set(&set, line, scol)?,
                    }
                }
            };
            c.expect(Tok::RParen, "`)`")?;
            Ok(out)
        }
        _ => Err(c.unexpected("a predicate")),
    }
}

pub fn parse_action(s: &str, line: usize, col: usize) -> Result<Action, Diagnostic> {
    s.parse().map_err(|_| {
        Diagnostic::new(
            line,
            col,
            format!("unknown action `{s}` (expected get, move, eval or put)"),
        )
    })
}

fn strength_p(p: &StatePredicate) -> u8 {
    match p {
        StatePredicate::Or(..) => 1,
        StatePredicate::And(..) => 2,
        _ => 3,
    }
}

pub fn write_predicate(p: &StatePredicate, s: &Scope) -> String {
    let wrap = |x: &StatePredicate, min: u8| {
        let inner = write_predicate(x, s);
        if strength_p(x) < min {
            format!("({inner})")
        } else {
            inner
        }
    };
    let loc = |l: &LocationId| s.locations[l.index()].clone();
    let who = |w: &IdentArg| match w {
        IdentArg::Identity(i) => s.identities[i.index()].clone(),
        IdentArg::Param => s.param.expect("parameter in scope").to_string(),
    };
    match p {
        StatePredicate::True => "true".into(),
        StatePredicate::False => "false".into(),
        StatePredicate::Enables {
            location,
            who: w,
            action,
        } => {
            format!("enables({}, {}, {action})", loc(location), who(w))
        }
        StatePredicate::At { who: w, location } => format!("at({}, {})", who(w), loc(location)),
        StatePredicate::IsIn { location, value } => format!("isin({}, {value})", loc(location)),
        StatePredicate::CountAtLeast { location, count } => format!("atleast({}, {count})", loc(location)),
        StatePredicate::InSet { who: w, set } => format!("inset({}, {})", who(w), s.sets[set.index()]),
        StatePredicate::Call { predicate, arg } => {
            let name = &s.predicates[*predicate].0;
            match arg {
                Some(a) => format!("{name}({})", who(a)),
                None => name.clone(),
            }
        }
        StatePredicate::Not(x) => format!("!{}", wrap(x, 3)),
        StatePredicate::And(a, b) => format!("{} & {}", wrap(a, 2), wrap(b, 3)),
        StatePredicate::Or(a, b) => format!("{} | {}", wrap(a, 1), wrap(b, 2)),
    }
}
