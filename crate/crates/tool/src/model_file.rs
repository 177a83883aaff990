//! The line-oriented model file format; see `docs/formats.md`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use insider_core::{
    Action, ActionSet, ActorState, AtomicPolicy, FoeControl, Identity, IdentityId, IdentitySet, InfraGraph,
    InsiderDecl, Location, LocationId, Model, ModelDef, Motivation, NamedPredicate, PolicyVariant, PsyState,
};

use crate::diag::{Diagnostic, Diagnostics};
use crate::expr::{self, Scope, PREDICATE_KEYWORDS};
use crate::lex::is_name;

const SECTIONS: [&str; 14] = [
    "model",
    "locations",
    "edges",
    "identities",
    "sets",
    "credentials",
    "roles",
    "placements",
    "values",
    "alphabets",
    "policies",
    "insiders",
    "predicates",
    "assumptions",
];

/// One content line: its number, the column of its first character and
/// the text with comments and surrounding blanks removed.
#[derive(Clone, Debug)]
struct Line {
    no: usize,
    col: usize,
    text: String,
}

impl Line {
    fn diag(&self, msg: impl Into<String>) -> Diagnostic {
        Diagnostic::new(self.no, self.col, msg)
    }

    /// Splits at the first `sep`, returning both trimmed halves and the
    /// column where the right half starts.
    fn split_once(&self, sep: char) -> Option<(&str, &str, usize)> {
        let i = self.text.find(sep)?;
        let (l, r) = (&self.text[..i], &self.text[i + sep.len_utf8()..]);
        let lead = r.len() - r.trim_start().len();
        let col = self.col + self.text[..i].chars().count() + 1 + r[..lead].chars().count();
        Some((l.trim(), r.trim(), col))
    }
}

#[derive(Default)]
struct Sections {
    by_name: BTreeMap<String, (usize, Vec<Line>)>,
    /// Policy variants in file order.
    policies: Vec<(String, usize, Vec<Line>)>,
}

fn split_sections(text: &str, diags: &mut Vec<Diagnostic>) -> Sections {
    let mut out = Sections::default();
    // (section name, policy variant) of the lines being collected
    let mut current: Option<(String, Option<String>)> = None;
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col = content.len() - content.trim_start().len() + 1;
        if trimmed.starts_with('[') {
            current = None;
            let Some(inner) = trimmed.strip_prefix('[').and_then(|s| s.strip_suffix(']')) else {
                diags.push(Diagnostic::new(no, col, "section header must end with `]`"));
                continue;
            };
            let mut words = inner.split_whitespace();
            let name = words.next().unwrap_or("");
            let arg = words.next();
            if words.next().is_some() || !SECTIONS.contains(&name) || (name == "policies") != arg.is_some() {
                diags.push(Diagnostic::new(
                    no,
                    col,
                    format!("unknown section `[{inner}]` (policy sections are written `[policies NAME]`)"),
                ));
                continue;
            }
            if name == "policies" {
                let v = arg.unwrap().to_string();
                if out.policies.iter().any(|(n, _, _)| *n == v) {
                    diags.push(Diagnostic::new(no, col, format!("duplicate policy variant `{v}`")));
                    continue;
                }
                out.policies.push((v.clone(), no, Vec::new()));
                current = Some((name.into(), Some(v)));
            } else {
                if out.by_name.contains_key(name) {
                    diags.push(Diagnostic::new(no, col, format!("duplicate section `[{name}]`")));
                    continue;
                }
                out.by_name.insert(name.into(), (no, Vec::new()));
                current = Some((name.into(), None));
            }
            continue;
        }
        let line = Line {
            no,
            col,
            text: trimmed.to_string(),
        };
        match &current {
            None => diags.push(Diagnostic::new(no, col, "content outside of any section")),
            Some((_, Some(v))) => {
                let entry = out.policies.iter_mut().find(|(n, _, _)| n == v).unwrap();
                entry.2.push(line);
            }
            Some((name, None)) => out.by_name.get_mut(name).unwrap().1.push(line),
        }
    }
    out
}

/// Comma separated names, possibly empty. Reports bad names.
fn name_list(text: &str, line: &Line, col: usize, diags: &mut Vec<Diagnostic>) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    if text.trim().is_empty() {
        return out;
    }
    let mut offset = 0;
    for part in text.split(',') {
        let lead = part.len() - part.trim_start().len();
        let c = col + text[..offset + lead].chars().count();
        let name = part.trim();
        if is_name(name) {
            out.push((name.to_string(), c));
        } else {
            diags.push(Diagnostic::new(line.no, c, format!("invalid name `{name}`")));
        }
        offset += part.len() + 1;
    }
    out
}

struct Names {
    locations: Vec<String>,
    identities: Vec<String>,
    sets: Vec<String>,
}

impl Names {
    fn loc(&self, n: &str, line: usize, col: usize) -> Result<LocationId, Diagnostic> {
        self.locations
            .iter()
            .position(|x| x == n)
            .map(|i| LocationId(i as u16))
            .ok_or_else(|| Diagnostic::new(line, col, format!("unknown location `{n}`")))
    }

    fn id(&self, n: &str, line: usize, col: usize) -> Result<IdentityId, Diagnostic> {
        self.identities
            .iter()
            .position(|x| x == n)
            .map(|i| IdentityId(i as u16))
            .ok_or_else(|| Diagnostic::new(line, col, format!("unknown identity `{n}`")))
    }
}

/// Parses and validates a model file.
pub fn parse_model(text: &str) -> Result<Model, Diagnostics> {
    let mut diags = Vec::new();
    let def = parse_def(text, &mut diags);
    if !diags.is_empty() {
        diags.sort();
        return Err(Diagnostics(diags));
    }
    Model::new(def).map_err(|e| Diagnostic::new(0, 0, format!("invalid model: {e}")).into())
}

fn section<'a>(s: &'a Sections, name: &str) -> &'a [Line] {
    s.by_name.get(name).map_or(&[], |(_, l)| l.as_slice())
}

fn parse_def(text: &str, diags: &mut Vec<Diagnostic>) -> ModelDef {
    let s = split_sections(text, diags);

    // locations
    let mut locations: Vec<Location> = Vec::new();
    for line in section(&s, "locations") {
        let words: Vec<&str> = line.text.split_whitespace().collect();
        let (name, id) = match words.as_slice() {
            [n, id] => (*n, *id),
            _ => {
                diags.push(line.diag("expected `NAME ID`"));
                continue;
            }
        };
        if !is_name(name) {
            diags.push(line.diag(format!("invalid location name `{name}`")));
            continue;
        }
        let Ok(id) = id.parse::<u32>() else {
            diags.push(line.diag(format!("location id `{id}` is not a non-negative integer")));
            continue;
        };
        if locations.iter().any(|l| l.name == name) {
            diags.push(line.diag(format!("duplicate location `{name}`")));
        } else if locations.iter().any(|l| l.id == id) {
            diags.push(line.diag(format!("duplicate location id {id}")));
        } else {
            locations.push(Location { id, name: name.into() });
        }
    }
    if locations.is_empty() {
        diags.push(Diagnostic::new(
            s.by_name.get("locations").map_or(0, |(no, _)| *no),
            1,
            "a model needs at least one location",
        ));
    }

    // identities
    let mut identities: Vec<Identity> = Vec::new();
    for line in section(&s, "identities") {
        let name = line.text.as_str();
        if !is_name(name) {
            diags.push(line.diag(format!("invalid identity `{name}`")));
        } else if identities.iter().any(|i| i.0 == name) {
            diags.push(line.diag(format!("duplicate identity `{name}`")));
        } else {
            identities.push(Identity(name.into()));
        }
    }

    let mut names = Names {
        locations: locations.iter().map(|l| l.name.clone()).collect(),
        identities: identities.iter().map(|i| i.0.clone()).collect(),
        sets: Vec::new(),
    };

    // sets
    let mut identity_sets = Vec::new();
    for line in section(&s, "sets") {
        let Some((name, rest, col)) = line.split_once('=') else {
            diags.push(line.diag("expected `NAME = identity, ...`"));
            continue;
        };
        if !is_name(name) || names.sets.iter().any(|x| x == name) {
            diags.push(line.diag(format!("invalid or duplicate set name `{name}`")));
            continue;
        }
        let mut members = BTreeSet::new();
        for (m, c) in name_list(rest, line, col, diags) {
            match names.id(&m, line.no, c) {
                Ok(i) => {
                    members.insert(i);
                }
                Err(d) => diags.push(d),
            }
        }
        names.sets.push(name.into());
        identity_sets.push(IdentitySet {
            name: name.into(),
            members,
        });
    }

    let mut g = InfraGraph::new(locations.len(), identities.len());

    for line in section(&s, "edges") {
        let words: Vec<&str> = line.text.split_whitespace().collect();
        let [a, "->", b] = words.as_slice() else {
            diags.push(line.diag("expected `FROM -> TO`"));
            continue;
        };
        let b_col = line.col + line.text.rfind(b).unwrap_or(0);
        match (names.loc(a, line.no, line.col), names.loc(b, line.no, b_col)) {
            (Ok(a), Ok(b)) => g.add_edge(a, b).expect("known locations"),
            (Err(d), _) | (_, Err(d)) => diags.push(d),
        }
    }

    for (sec, is_cred) in [("credentials", true), ("roles", false)] {
        for line in section(&s, sec) {
            let Some((who, rest, col)) = line.split_once(':') else {
                diags.push(line.diag("expected `IDENTITY: token, ...`"));
                continue;
            };
            let id = match names.id(who, line.no, line.col) {
                Ok(i) => i,
                Err(d) => {
                    diags.push(d);
                    continue;
                }
            };
            for (t, _) in name_list(rest, line, col, diags) {
                if is_cred {
                    g.grant_credential(id, &t).expect("known identity");
                } else {
                    g.grant_role(id, &t).expect("known identity");
                }
            }
        }
    }

    for line in section(&s, "placements") {
        let Some((loc, rest, col)) = line.split_once(':') else {
            diags.push(line.diag("expected `LOCATION: identity, ...`"));
            continue;
        };
        let l = match names.loc(loc, line.no, line.col) {
            Ok(l) => l,
            Err(d) => {
                diags.push(d);
                continue;
            }
        };
        for (who, c) in name_list(rest, line, col, diags) {
            match names.id(&who, line.no, c) {
                Ok(i) => {
                    if let Some(prev) = g.location_of(i) {
                        diags.push(Diagnostic::new(
                            line.no,
                            c,
                            format!(
                                "`{who}` is already placed at `{}`: an identity occupies at most one location, at most once",
                                names.locations[prev.index()]
                            ),
                        ));
                    } else {
                        g.place(i, l).expect("unplaced identity");
                    }
                }
                Err(d) => diags.push(d),
            }
        }
    }

    for line in section(&s, "values") {
        let Some((loc, v, col)) = line.split_once('=') else {
            diags.push(line.diag("expected `LOCATION = value`"));
            continue;
        };
        match names.loc(loc, line.no, line.col) {
            Ok(l) if is_name(v) => {
                if g.value(l).is_some() {
                    diags.push(line.diag(format!("value of `{loc}` given twice")));
                }
                g.set_value(l, Some(v)).expect("known location");
            }
            Ok(_) => diags.push(Diagnostic::new(line.no, col, format!("invalid value `{v}`"))),
            Err(d) => diags.push(d),
        }
    }

    let mut alphabets = vec![Vec::new(); locations.len()];
    let mut alphabet_seen = BTreeSet::new();
    for line in section(&s, "alphabets") {
        let Some((loc, rest, col)) = line.split_once('=') else {
            diags.push(line.diag("expected `LOCATION = value, ...`"));
            continue;
        };
        match names.loc(loc, line.no, line.col) {
            Ok(l) => {
                if !alphabet_seen.insert(l) {
                    diags.push(line.diag(format!("alphabet of `{loc}` given twice")));
                }
                alphabets[l.index()] = name_list(rest, line, col, diags).into_iter().map(|(v, _)| v).collect();
            }
            Err(d) => diags.push(d),
        }
    }

    let scope = Scope {
        locations: &names.locations,
        identities: &names.identities,
        sets: &names.sets,
        predicates: &[],
        param: None,
    };
    let mut variants = Vec::new();
    for (vname, no, lines) in &s.policies {
        if !is_name(vname) {
            diags.push(Diagnostic::new(
                *no,
                1,
                format!("invalid policy variant name `{vname}`"),
            ));
        }
        let mut map = vec![Vec::new(); locations.len()];
        for line in lines {
            let Some((head, cond, col)) = line.split_once(':') else {
                diags.push(line.diag("expected `LOCATION ACTIONS: CONDITION`"));
                continue;
            };
            let words: Vec<&str> = head.split_whitespace().collect();
            let [loc, acts] = words.as_slice() else {
                diags.push(line.diag("expected `LOCATION ACTIONS: CONDITION` with actions comma separated, no spaces"));
                continue;
            };
            let l = match names.loc(loc, line.no, line.col) {
                Ok(l) => l,
                Err(d) => {
                    diags.push(d);
                    continue;
                }
            };
            let acol = line.col + head.find(acts).unwrap_or(0);
            let mut actions = ActionSet::empty();
            for a in acts.split(',') {
                match expr::parse_action(a, line.no, acol) {
                    Ok(a) => actions.insert(a),
                    Err(d) => diags.push(d),
                }
            }
            match expr::parse_condition(cond, line.no, col, &scope) {
                Ok(c) => map[l.index()].push(AtomicPolicy { condition: c, actions }),
                Err(d) => diags.push(d),
            }
        }
        variants.push(PolicyVariant {
            name: vname.clone(),
            map,
        });
    }

    let active_variant = match section(&s, "model") {
        [] => 0,
        lines => {
            let mut active = 0;
            for line in lines {
                match line.split_once('=') {
                    Some(("variant", v, col)) => match variants.iter().position(|x| x.name == v) {
                        Some(i) => active = i,
                        None => diags.push(Diagnostic::new(line.no, col, format!("no `[policies {v}]` section"))),
                    },
                    _ => diags.push(line.diag("expected `variant = NAME`")),
                }
            }
            active
        }
    };
    if variants.is_empty() {
        diags.push(Diagnostic::new(
            0,
            0,
            "a model needs at least one `[policies NAME]` section",
        ));
    }

    let mut insiders = Vec::new();
    for line in section(&s, "insiders") {
        let mut words = line.text.split_whitespace();
        let who = words.next().unwrap_or("");
        let id = match names.id(who, line.no, line.col) {
            Ok(i) => i,
            Err(d) => {
                diags.push(d);
                continue;
            }
        };
        let mut decl = InsiderDecl {
            id,
            alter_egos: BTreeSet::new(),
            state: ActorState::default(),
        };
        for w in words {
            let wcol = line.col + line.text.find(w).unwrap_or(0);
            let Some((k, v)) = w.split_once('=') else {
                diags.push(Diagnostic::new(
                    line.no,
                    wcol,
                    format!("expected `key=value`, found `{w}`"),
                ));
                continue;
            };
            let items = v.split(',').filter(|x| !x.is_empty());
            match k {
                "alter_egos" => {
                    for x in items {
                        match names.id(x, line.no, wcol) {
                            Ok(i) if i == id => diags.push(Diagnostic::new(
                                line.no,
                                wcol,
                                format!("`{who}` cannot be its own alter ego"),
                            )),
                            Ok(i) => {
                                decl.alter_egos.insert(i);
                            }
                            Err(d) => diags.push(d),
                        }
                    }
                }
                "psy" => match v.parse::<PsyState>() {
                    Ok(p) => decl.state.psy = p,
                    Err(()) => diags.push(Diagnostic::new(
                        line.no,
                        wcol,
                        format!(
                            "unknown psychological state `{v}` (one of {})",
                            PsyState::ALL.map(|p| p.as_str()).join(", ")
                        ),
                    )),
                },
                "motivations" => {
                    for x in items {
                        match x.parse::<Motivation>() {
                            Ok(m) => {
                                decl.state.motivations.insert(m);
                            }
                            Err(()) => diags.push(Diagnostic::new(
                                line.no,
                                wcol,
                                format!(
                                    "unknown motivation `{x}` (one of {})",
                                    Motivation::ALL.map(|m| m.as_str()).join(", ")
                                ),
                            )),
                        }
                    }
                }
                _ => diags.push(Diagnostic::new(line.no, wcol, format!("unknown insider field `{k}`"))),
            }
        }
        insiders.push(decl);
    }

    let mut predicates: Vec<NamedPredicate> = Vec::new();
    let mut declared: Vec<(String, bool)> = Vec::new();
    for line in section(&s, "predicates") {
        let Some((head, body, col)) = line.split_once('=') else {
            diags.push(line.diag("expected `NAME = BODY` or `NAME(PARAM) = BODY`"));
            continue;
        };
        let (name, param) = match head.split_once('(') {
            Some((n, rest)) => match rest.strip_suffix(')') {
                Some(p) => (n.trim(), Some(p.trim())),
                None => {
                    diags.push(line.diag("parameter list must end with `)`"));
                    continue;
                }
            },
            None => (head, None),
        };
        if !is_name(name) || PREDICATE_KEYWORDS.contains(&name) || crate::formula::KEYWORDS.contains(&name) {
            diags.push(line.diag(format!("invalid predicate name `{name}`")));
            continue;
        }
        if declared.iter().any(|(n, _)| n == name) {
            diags.push(line.diag(format!("duplicate predicate `{name}`")));
            continue;
        }
        if let Some(p) = param {
            if !is_name(p) || names.identities.iter().any(|i| i == p) {
                diags.push(line.diag(format!("parameter `{p}` must be a fresh name, not an identity")));
                continue;
            }
        }
        let scope = Scope {
            locations: &names.locations,
            identities: &names.identities,
            sets: &names.sets,
            predicates: &declared,
            param,
        };
        match expr::parse_predicate(body, line.no, col, &scope) {
            Ok(b) => {
                predicates.push(NamedPredicate {
                    name: name.into(),
                    param: param.map(String::from),
                    body: b,
                });
                declared.push((name.into(), param.is_some()));
            }
            Err(d) => diags.push(d),
        }
    }

    let mut assumptions = Vec::new();
    for line in section(&s, "assumptions") {
        let words: Vec<&str> = line.text.split_whitespace().collect();
        let ["foe", loc, act, who] = words.as_slice() else {
            diags.push(line.diag("expected `foe LOCATION ACTION IDENTITY`"));
            continue;
        };
        let r = (|| {
            Ok::<_, Diagnostic>(FoeControl {
                location: names.loc(loc, line.no, line.col)?,
                action: expr::parse_action(act, line.no, line.col)?,
                foe: names.id(who, line.no, line.col)?,
            })
        })();
        match r {
            Ok(fc) => assumptions.push(fc),
            Err(d) => diags.push(d),
        }
    }

    ModelDef {
        locations,
        identities,
        identity_sets,
        initial: g,
        variants,
        active_variant,
        alphabets,
        insiders,
        predicates,
        assumptions,
    }
}

fn join<I: IntoIterator<Item = S>, S: AsRef<str>>(xs: I) -> String {
    xs.into_iter()
        .map(|s| s.as_ref().to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Serializes a model. Output is canonical: parsing it gives back an equal
/// model and writing that again gives identical bytes. All names must be
/// valid model-file names.
pub fn write_model(m: &Model) -> String {
    let mut o = String::new();
    let loc = |l: LocationId| m.location_name(l).to_string();
    let id = |i: IdentityId| m.identity_name(i).to_string();
    let g = &m.initial;

    writeln!(o, "[model]\nvariant = {}", m.active_variant_name()).unwrap();

    o.push_str("\n[locations]\n");
    for l in &m.locations {
        writeln!(o, "{} {}", l.name, l.id).unwrap();
    }

    if !g.edges().is_empty() {
        o.push_str("\n[edges]\n");
        for (a, b) in g.edges() {
            writeln!(o, "{} -> {}", loc(*a), loc(*b)).unwrap();
        }
    }

    o.push_str("\n[identities]\n");
    for i in &m.identities {
        writeln!(o, "{}", i.0).unwrap();
    }

    if !m.identity_sets.is_empty() {
        o.push_str("\n[sets]\n");
        for s in &m.identity_sets {
            let members = join(s.members.iter().map(|i| id(*i)));
            writeln!(o, "{}", format!("{} = {members}", s.name).trim_end()).unwrap();
        }
    }

    for (title, get) in [
        (
            "credentials",
            InfraGraph::credentials as fn(&InfraGraph, IdentityId) -> &BTreeSet<String>,
        ),
        ("roles", InfraGraph::roles),
    ] {
        let rows: Vec<String> = m
            .identity_ids()
            .filter(|i| !get(g, *i).is_empty())
            .map(|i| format!("{}: {}", id(i), join(get(g, i))))
            .collect();
        if !rows.is_empty() {
            writeln!(o, "\n[{title}]").unwrap();
            for r in rows {
                writeln!(o, "{r}").unwrap();
            }
        }
    }

    let placed: Vec<LocationId> = m.location_ids().filter(|l| !g.placement(*l).is_empty()).collect();
    if !placed.is_empty() {
        o.push_str("\n[placements]\n");
        for l in placed {
            writeln!(o, "{}: {}", loc(l), join(g.placement(l).iter().map(|i| id(*i)))).unwrap();
        }
    }

    let valued: Vec<LocationId> = m.location_ids().filter(|l| g.value(*l).is_some()).collect();
    if !valued.is_empty() {
        o.push_str("\n[values]\n");
        for l in valued {
            writeln!(o, "{} = {}", loc(l), g.value(l).unwrap()).unwrap();
        }
    }

    if m.alphabets.iter().any(|a| !a.is_empty()) {
        o.push_str("\n[alphabets]\n");
        for l in m.location_ids() {
            let a = &m.alphabets[l.index()];
            if !a.is_empty() {
                writeln!(o, "{} = {}", loc(l), join(a)).unwrap();
            }
        }
    }

    let set_names: Vec<String> = m.identity_sets.iter().map(|s| s.name.clone()).collect();
    let loc_names: Vec<String> = m.locations.iter().map(|l| l.name.clone()).collect();
    let id_names: Vec<String> = m.identities.iter().map(|i| i.0.clone()).collect();
    let scope = Scope {
        locations: &loc_names,
        identities: &id_names,
        sets: &set_names,
        predicates: &[],
        param: None,
    };
    for v in &m.variants {
        writeln!(o, "\n[policies {}]", v.name).unwrap();
        for l in m.location_ids() {
            for p in &v.map[l.index()] {
                let acts = p.actions.iter().map(Action::as_str).collect::<Vec<_>>().join(",");
                writeln!(o, "{} {acts}: {}", loc(l), expr::write_condition(&p.condition, &scope)).unwrap();
            }
        }
    }

    if !m.insiders.is_empty() {
        o.push_str("\n[insiders]\n");
        for d in &m.insiders {
            let egos = d.alter_egos.iter().map(|i| id(*i)).collect::<Vec<_>>().join(",");
            let mots = d
                .state
                .motivations
                .iter()
                .map(|m| m.as_str())
                .collect::<Vec<_>>()
                .join(",");
            writeln!(
                o,
                "{} alter_egos={egos} psy={} motivations={mots}",
                id(d.id),
                d.state.psy
            )
            .unwrap();
        }
    }

    if !m.predicates.is_empty() {
        o.push_str("\n[predicates]\n");
        let declared: Vec<(String, bool)> = m
            .predicates
            .iter()
            .map(|p| (p.name.clone(), p.param.is_some()))
            .collect();
        for p in &m.predicates {
            let scope = Scope {
                predicates: &declared,
                param: p.param.as_deref(),
                ..scope
            };
            let head = match &p.param {
                Some(a) => format!("{}({a})", p.name),
                None => p.name.clone(),
            };
            writeln!(o, "{head} = {}", expr::write_predicate(&p.body, &scope)).unwrap();
        }
    }

    if !m.assumptions.is_empty() {
        o.push_str("\n[assumptions]\n");
        for a in &m.assumptions {
            writeln!(o, "foe {} {} {}", loc(a.location), a.action, id(a.foe)).unwrap();
        }
    }
    o
}

#[cfg(test)]
mod tests {
    use super::*;
    use insider_core::airplane::{build_airplane_model, ScenarioVariant};

    #[test]
    fn airplane_round_trip() {
        for v in ScenarioVariant::ALL {
            let m = build_airplane_model(v);
            let text = write_model(&m);
            let back = parse_model(&text).unwrap();
            assert_eq!(back, m);
            assert_eq!(write_model(&back), text);
        }
    }

    #[test]
    fn double_placement_is_diagnosed() {
        let text = "[locations]\na 0\nb 1\n[identities]\nBob\n[placements]\na: Bob\nb: Bob\n[policies p]\n";
        let e = parse_model(text).unwrap_err();
        assert_eq!(e.0.len(), 1);
        assert_eq!((e.0[0].line, e.0[0].column), (8, 4));
        assert!(e.0[0].message.contains("at most one location"));
    }

    #[test]
    fn empty_document_needs_a_location() {
        let e = parse_model("").unwrap_err();
        assert!(e.0.iter().any(|d| d.message.contains("at least one location")));
    }

    #[test]
    fn unknown_names_are_positioned() {
        let text = "[locations]\na 0\n[identities]\nx\n[policies p]\na move: at(b)\n";
        let e = parse_model(text).unwrap_err();
        assert_eq!(e.0, vec![Diagnostic::new(6, 12, "unknown location `b`")]);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# header\n[locations]\n  a 0   # the only one\n\n[policies p]\na move: true\n";
        let m = parse_model(text).unwrap();
        assert_eq!(m.locations.len(), 1);
        assert_eq!(m.policies()[0].len(), 1);
    }
}
