//! Seeded generator of small random models, for cross-checking the engine
//! against independent oracles.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use crate::model::{
    Action, ActorState, AtomicPolicy, Condition, IdentArg, Identity, IdentityId, IdentitySet, InfraGraph, InsiderDecl,
    Location, LocationId, Model, ModelDef, Motivation, NamedPredicate, PolicyVariant, PsyState, SetId, StatePredicate,
};

pub const MAX_LOCATIONS: usize = 4;
pub const MAX_IDENTITIES: usize = 4;
pub const MAX_ALPHABET: usize = 2;

const CREDS: [&str; 2] = ["key", "badge"];
const ROLES: [&str; 2] = ["staff", "guest"];
const VALUES: [&str; MAX_ALPHABET] = ["v0", "v1"];

/// Names of the closed predicates every random model defines.
pub const PREDICATES: [&str; 4] = ["p0", "p1", "p2", "p3"];

fn pick<T: Copy>(rng: &mut SmallRng, xs: &[T]) -> T {
    xs[rng.random_range(0..xs.len())]
}

fn condition(rng: &mut SmallRng, nl: usize, depth: u32) -> Condition {
    let loc = |rng: &mut SmallRng| LocationId(rng.random_range(0..nl) as u16);
    if depth == 0 || rng.random_bool(0.5) {
        return match rng.random_range(0..7) {
            0 => Condition::True,
            1 => Condition::RequesterAt(loc(rng)),
            2 => Condition::HasCred(pick(rng, &CREDS).into()),
            3 => Condition::HasRole(pick(rng, &ROLES).into()),
            4 => Condition::IsIn(loc(rng), pick(rng, &VALUES).into()),
            5 => Condition::CountAtLeast(loc(rng), rng.random_range(1..=2)),
            _ => Condition::AllAtAuthorized(loc(rng), SetId(0)),
        };
    }
    match rng.random_range(0..3) {
        0 => condition(rng, nl, depth - 1).not(),
        1 => condition(rng, nl, depth - 1).and(condition(rng, nl, depth - 1)),
        _ => condition(rng, nl, depth - 1).or(condition(rng, nl, depth - 1)),
    }
}

fn predicate(rng: &mut SmallRng, nl: usize, ni: usize, depth: u32) -> StatePredicate {
    let loc = |rng: &mut SmallRng| LocationId(rng.random_range(0..nl) as u16);
    let who = |rng: &mut SmallRng| IdentArg::Identity(IdentityId(rng.random_range(0..ni) as u16));
    if depth == 0 || rng.random_bool(0.5) {
        return match rng.random_range(0..5) {
            0 => StatePredicate::Enables {
                location: loc(rng),
                who: who(rng),
                action: pick(rng, &[Action::Move, Action::Get, Action::Put]),
            },
            1 => StatePredicate::At {
                who: who(rng),
                location: loc(rng),
            },
            2 => StatePredicate::IsIn {
                location: loc(rng),
                value: pick(rng, &VALUES).into(),
            },
            3 => StatePredicate::CountAtLeast {
                location: loc(rng),
                count: rng.random_range(1..=2),
            },
            _ => StatePredicate::InSet {
                who: who(rng),
                set: SetId(0),
            },
        };
    }
    match rng.random_range(0..3) {
        0 => predicate(rng, nl, ni, depth - 1).not(),
        1 => predicate(rng, nl, ni, depth - 1).and(predicate(rng, nl, ni, depth - 1)),
        _ => predicate(rng, nl, ni, depth - 1).or(predicate(rng, nl, ni, depth - 1)),
    }
}

/// A valid random model definition determined by `seed`.
pub fn random_def(seed: u64) -> ModelDef {
    let mut rng = SmallRng::seed_from_u64(seed);
    let nl = rng.random_range(1..=MAX_LOCATIONS);
    let ni = rng.random_range(1..=MAX_IDENTITIES);

    let mut g = InfraGraph::new(nl, ni);
    for a in 0..nl {
        for b in 0..nl {
            if rng.random_bool(0.4) {
                g.add_edge(LocationId(a as u16), LocationId(b as u16)).unwrap();
            }
        }
    }
    for i in 0..ni {
        let id = IdentityId(i as u16);
        if rng.random_bool(0.8) {
            g.place(id, LocationId(rng.random_range(0..nl) as u16)).unwrap();
        }
        for c in CREDS {
            if rng.random_bool(0.4) {
                g.grant_credential(id, c).unwrap();
            }
        }
        for r in ROLES {
            if rng.random_bool(0.3) {
                g.grant_role(id, r).unwrap();
            }
        }
    }
    let alphabets: Vec<Vec<String>> = (0..nl)
        .map(|_| {
            let k = rng.random_range(0..=MAX_ALPHABET);
            VALUES[..k].iter().map(|v| (*v).into()).collect()
        })
        .collect();
    for (l, a) in alphabets.iter().enumerate() {
        if !a.is_empty() && rng.random_bool(0.5) {
            g.set_value(LocationId(l as u16), Some(a[0].as_str())).unwrap();
        }
    }

    let mut map = Vec::with_capacity(nl);
    for _ in 0..nl {
        let n = rng.random_range(0..=2);
        let pols = (0..n)
            .map(|_| {
                let actions: BTreeSet<Action> = [Action::Move, Action::Get, Action::Put]
                    .into_iter()
                    .filter(|_| rng.random_bool(0.5))
                    .collect();
                let actions = if actions.is_empty() {
                    [Action::Move].into()
                } else {
                    actions
                };
                AtomicPolicy::new(condition(&mut rng, nl, 2), actions)
            })
            .collect();
        map.push(pols);
    }

    let mut insiders = Vec::new();
    if ni >= 2 && rng.random_bool(0.5) {
        let id = IdentityId(rng.random_range(0..ni) as u16);
        let alter_egos = (0..ni as u16)
            .map(IdentityId)
            .filter(|&o| o != id && rng.random_bool(0.5))
            .collect();
        let psy = pick(&mut rng, &PsyState::ALL);
        let motivations: Vec<Motivation> = Motivation::ALL.into_iter().filter(|_| rng.random_bool(0.3)).collect();
        insiders.push(InsiderDecl {
            id,
            alter_egos,
            state: ActorState::new(psy, motivations),
        });
    }

    let predicates = PREDICATES
        .iter()
        .map(|name| NamedPredicate {
            name: (*name).into(),
            param: None,
            body: predicate(&mut rng, nl, ni, 2),
        })
        .collect();

    ModelDef {
        locations: (0..nl)
            .map(|i| Location {
                id: i as u32,
                name: format!("l{i}"),
            })
            .collect(),
        identities: (0..ni).map(|i| Identity(format!("i{i}"))).collect(),
        identity_sets: alloc::vec![IdentitySet {
            name: "trusted".into(),
            members: (0..ni as u16)
                .map(IdentityId)
                .filter(|_| rng.random_bool(0.5))
                .collect(),
        }],
        initial: g,
        variants: alloc::vec![PolicyVariant {
            name: "main".into(),
            map
        }],
        active_variant: 0,
        alphabets,
        insiders,
        predicates,
        assumptions: Vec::new(),
    }
}

pub fn random_model(seed: u64) -> Model {
    Model::new(random_def(seed)).expect("generator produces valid models")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_is_deterministic_and_bounded() {
        for seed in 0..50 {
            let m = random_model(seed);
            assert_eq!(m.def(), &random_def(seed));
            assert!(m.locations.len() <= MAX_LOCATIONS);
            assert!(m.identities.len() <= MAX_IDENTITIES);
            assert!(m.alphabets.iter().all(|a| a.len() <= MAX_ALPHABET));
        }
    }
}
