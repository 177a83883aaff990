//! Machine-readable export of the model schema. Conditions and predicate
//! bodies are carried as strings in the model-file expression syntax.

use serde::Serialize;

use insider_core::{Action, Model};

use crate::expr::{self, Scope};

#[derive(Debug, Serialize)]
pub struct ModelDoc {
    pub variant: String,
    pub locations: Vec<LocationDoc>,
    pub edges: Vec<[String; 2]>,
    pub identities: Vec<String>,
    pub sets: Vec<SetDoc>,
    pub credentials: Vec<TokensDoc>,
    pub roles: Vec<TokensDoc>,
    pub placements: Vec<PlacementDoc>,
    pub values: Vec<ValueDoc>,
    pub alphabets: Vec<AlphabetDoc>,
    pub policies: Vec<VariantDoc>,
    pub insiders: Vec<InsiderDoc>,
    pub predicates: Vec<PredicateDoc>,
    pub assumptions: Vec<AssumptionDoc>,
}

#[derive(Debug, Serialize)]
pub struct LocationDoc {
    pub name: String,
    pub id: u32,
}

#[derive(Debug, Serialize)]
pub struct SetDoc {
    pub name: String,
    pub members: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct TokensDoc {
    pub identity: String,
    pub tokens: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct PlacementDoc {
    pub location: String,
    pub identities: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ValueDoc {
    pub location: String,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct AlphabetDoc {
    pub location: String,
    pub values: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct VariantDoc {
    pub name: String,
    pub rules: Vec<RuleDoc>,
}

#[derive(Debug, Serialize)]
pub struct RuleDoc {
    pub location: String,
    pub actions: Vec<&'static str>,
    pub condition: String,
}

#[derive(Debug, Serialize)]
pub struct InsiderDoc {
    pub identity: String,
    pub alter_egos: Vec<String>,
    pub psy: &'static str,
    pub motivations: Vec<&'static str>,
}

#[derive(Debug, Serialize)]
pub struct PredicateDoc {
    pub name: String,
    pub param: Option<String>,
    pub body: String,
}

#[derive(Debug, Serialize)]
pub struct AssumptionDoc {
    pub kind: &'static str,
    pub location: String,
    pub action: &'static str,
    pub identity: String,
}

pub fn model_doc(m: &Model) -> ModelDoc {
    let loc = |l: insider_core::LocationId| m.location_name(l).to_string();
    let id = |i: &insider_core::IdentityId| m.identity_name(*i).to_string();
    let g = &m.initial;
    let loc_names: Vec<String> = m.locations.iter().map(|l| l.name.clone()).collect();
    let id_names: Vec<String> = m.identities.iter().map(|i| i.0.clone()).collect();
    let set_names: Vec<String> = m.identity_sets.iter().map(|s| s.name.clone()).collect();
    let declared: Vec<(String, bool)> = m
        .predicates
        .iter()
        .map(|p| (p.name.clone(), p.param.is_some()))
        .collect();
    let scope = Scope {
        locations: &loc_names,
        identities: &id_names,
        sets: &set_names,
        predicates: &declared,
        param: None,
    };
    let tokens = |f: fn(&insider_core::InfraGraph, insider_core::IdentityId) -> &std::collections::BTreeSet<String>| {
        m.identity_ids()
            .filter(|i| !f(g, *i).is_empty())
            .map(|i| TokensDoc {
                identity: id(&i),
                tokens: f(g, i).iter().cloned().collect(),
            })
            .collect()
    };
    ModelDoc {
        variant: m.active_variant_name().to_string(),
        locations: m
            .locations
            .iter()
            .map(|l| LocationDoc {
                name: l.name.clone(),
                id: l.id,
            })
            .collect(),
        edges: g.edges().iter().map(|(a, b)| [loc(*a), loc(*b)]).collect(),
        identities: id_names.clone(),
        sets: m
            .identity_sets
            .iter()
            .map(|s| SetDoc {
                name: s.name.clone(),
                members: s.members.iter().map(id).collect(),
            })
            .collect(),
        credentials: tokens(insider_core::InfraGraph::credentials),
        roles: tokens(insider_core::InfraGraph::roles),
        placements: m
            .location_ids()
            .filter(|l| !g.placement(*l).is_empty())
            .map(|l| PlacementDoc {
                location: loc(l),
                identities: g.placement(l).iter().map(id).collect(),
            })
            .collect(),
        values: m
            .location_ids()
            .filter_map(|l| {
                g.value(l).map(|v| ValueDoc {
                    location: loc(l),
                    value: v.to_string(),
                })
            })
            .collect(),
        alphabets: m
            .location_ids()
            .filter(|l| !m.alphabets[l.index()].is_empty())
            .map(|l| AlphabetDoc {
                location: loc(l),
                values: m.alphabets[l.index()].clone(),
            })
            .collect(),
        policies: m
            .variants
            .iter()
            .map(|v| VariantDoc {
                name: v.name.clone(),
                rules: m
                    .location_ids()
                    .flat_map(|l| v.map[l.index()].iter().map(move |p| (l, p)))
                    .map(|(l, p)| RuleDoc {
                        location: loc(l),
                        actions: p.actions.iter().map(Action::as_str).collect(),
                        condition: expr::write_condition(&p.condition, &scope),
                    })
                    .collect(),
            })
            .collect(),
        insiders: m
            .insiders
            .iter()
            .map(|d| InsiderDoc {
                identity: id(&d.id),
                alter_egos: d.alter_egos.iter().map(id).collect(),
                psy: d.state.psy.as_str(),
                motivations: d.state.motivations.iter().map(|x| x.as_str()).collect(),
            })
            .collect(),
        predicates: m
            .predicates
            .iter()
            .map(|p| PredicateDoc {
                name: p.name.clone(),
                param: p.param.clone(),
                body: expr::write_predicate(
                    &p.body,
                    &Scope {
                        param: p.param.as_deref(),
                        ..scope
                    },
                ),
            })
            .collect(),
        assumptions: m
            .assumptions
            .iter()
            .map(|a| AssumptionDoc {
                kind: "foe",
                location: loc(a.location),
                action: a.action.as_str(),
                identity: id(&a.foe),
            })
            .collect(),
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn write_json(m: &Model) -> String {
    let mut s = serde_json::to_string_pretty(&model_doc(m)).expect("model documents always serialize");
    s.push('\n');
    s
}
