//! The four transition rules and successor enumeration.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::model::{Action, IdentityId, InfraGraph, LocationId, Model};

/// What happened on a transition. The derived order (rule, then actor,
/// then locations, then values) is the enumeration order of [`successors`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TransitionLabel {
    Move {
        actor: IdentityId,
        from: LocationId,
        to: LocationId,
    },
    Get {
        actor: IdentityId,
        location: LocationId,
        credential: String,
        receiver: IdentityId,
    },
    Put {
        actor: IdentityId,
        location: LocationId,
        value: String,
    },
    PutRemote {
        actor: IdentityId,
        location: LocationId,
        value: String,
    },
}

impl TransitionLabel {
    pub fn actor(&self) -> IdentityId {
        match self {
            TransitionLabel::Move { actor, .. }
            | TransitionLabel::Get { actor, .. }
            | TransitionLabel::Put { actor, .. }
            | TransitionLabel::PutRemote { actor, .. } => *actor,
        }
    }

    pub fn rule(&self) -> &'static str {
        match self {
            TransitionLabel::Move { .. } => "move",
            TransitionLabel::Get { .. } => "get",
            TransitionLabel::Put { .. } => "put",
            TransitionLabel::PutRemote { .. } => "put_remote",
        }
    }

    /// Human readable rendering with model names.
    pub fn describe(&self, m: &Model) -> String {
        let who = m.identity_name(self.actor());
        match self {
            TransitionLabel::Move { from, to, .. } => {
                alloc::format!("move {who} {} -> {}", m.location_name(*from), m.location_name(*to))
            }
            TransitionLabel::Get {
                location,
                credential,
                receiver,
                ..
            } => alloc::format!(
                "get {who} gives {credential} to {} at {}",
                m.identity_name(*receiver),
                m.location_name(*location)
            ),
            TransitionLabel::Put { location, value, .. } => {
                alloc::format!("put {who} {} := {value}", m.location_name(*location))
            }
            TransitionLabel::PutRemote { location, value, .. } => {
                alloc::format!("put_remote {who} {} := {value}", m.location_name(*location))
            }
        }
    }
}

/// Moves `who` from `from` to `to` if it is at `from` and not already at
/// `to`; returns the graph unchanged otherwise.
pub fn move_graph(who: IdentityId, from: LocationId, to: LocationId, g: &InfraGraph) -> InfraGraph {
    let mut next = g.clone();
    next.relocate(who, from, to);
    next
}

/// Every successor of `g` under the rules move, get, put and put_remote,
/// in deterministic order. Self-loops are included.
pub fn successors(m: &Model, g: &InfraGraph) -> Vec<(TransitionLabel, InfraGraph)> {
    let mut out = Vec::new();
    let locations: Vec<LocationId> = m.location_ids().collect();
    let nodes = g.nodes();

    // move
    for a in m.identity_ids() {
        let class = m.actor_of(a);
        for &from in &locations {
            if !g.is_at(a, from) || !nodes.contains(&from) {
                continue;
            }
            for &to in &locations {
                if nodes.contains(&to) && m.enables(g, to, class, Action::Move) {
                    out.push((TransitionLabel::Move { actor: a, from, to }, move_graph(a, from, to, g)));
                }
            }
        }
    }

    // get: the enabled actor shares one of its credentials with a co-located identity
    for a in m.identity_ids() {
        let class = m.actor_of(a);
        for &l in &locations {
            if !g.is_at(a, l) || !m.enables(g, l, class, Action::Get) {
                continue;
            }
            let held: BTreeSet<&String> = m
                .resolver()
                .members(class)
                .flat_map(|member| g.credentials(member).iter())
                .collect();
            for z in held {
                for &receiver in g.placement(l) {
                    let mut next = g.clone();
                    next.grant_credential(receiver, z)
                        .expect("receiver is a placed identity");
                    out.push((
                        TransitionLabel::Get {
                            actor: a,
                            location: l,
                            credential: z.clone(),
                            receiver,
                        },
                        next,
                    ));
                }
            }
        }
    }

    // put
    for a in m.identity_ids() {
        let class = m.actor_of(a);
        for &l in &locations {
            if !g.is_at(a, l) || !m.enables(g, l, class, Action::Put) {
                continue;
            }
            for z in &m.alphabets[l.index()] {
                out.push((
                    TransitionLabel::Put {
                        actor: a,
                        location: l,
                        value: z.clone(),
                    },
                    with_value(g, l, z),
                ));
            }
        }
    }

    // put_remote: no location requirement on the actor
    for a in m.identity_ids() {
        let class = m.actor_of(a);
        for &l in &locations {
            if !m.enables(g, l, class, Action::Put) {
                continue;
            }
            for z in &m.alphabets[l.index()] {
                out.push((
                    TransitionLabel::PutRemote {
                        actor: a,
                        location: l,
                        value: z.clone(),
                    },
                    with_value(g, l, z),
                ));
            }
        }
    }

    out
}

fn with_value(g: &InfraGraph, l: LocationId, z: &str) -> InfraGraph {
    let mut next = g.clone();
    next.set_value(l, Some(z)).expect("location of this model");
    next
}
