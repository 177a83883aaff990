//! The airplane cockpit case study as a built-in model.
//!
//! Locations are `cabin`, `door` and `cockpit` (ids 0, 1, 2), identities
//! `Bob`, `Charly`, `Alice` and `Eve` in that order. Eve is an insider who
//! impersonates Charly; she is never placed anywhere.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::model::{
    Action, ActorState, AtomicPolicy, Condition, FoeControl, IdentArg, Identity, IdentityId, IdentitySet, InfraGraph,
    InsiderDecl, Location, LocationId, Model, ModelDef, Motivation, NamedPredicate, PolicyMap, PolicyVariant, PsyState,
    SetId, StatePredicate,
};

pub const CABIN: LocationId = LocationId(0);
pub const DOOR: LocationId = LocationId(1);
pub const COCKPIT: LocationId = LocationId(2);

pub const BOB: IdentityId = IdentityId(0);
pub const CHARLY: IdentityId = IdentityId(1);
pub const ALICE: IdentityId = IdentityId(2);
pub const EVE: IdentityId = IdentityId(3);

pub const AIRPLANE_ACTORS: SetId = SetId(0);

/// Predicate true in every state.
pub const TRUE_PRED: &str = "true_everywhere";
/// Predicate false in every state.
pub const FALSE_PRED: &str = "false_everywhere";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ScenarioVariant {
    Baseline,
    FourEyes,
}

impl ScenarioVariant {
    pub const ALL: [ScenarioVariant; 2] = [ScenarioVariant::Baseline, ScenarioVariant::FourEyes];

    pub fn as_str(self) -> &'static str {
        match self {
            ScenarioVariant::Baseline => "baseline",
            ScenarioVariant::FourEyes => "four_eyes",
        }
    }
}

impl FromStr for ScenarioVariant {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        ScenarioVariant::ALL.into_iter().find(|v| v.as_str() == s).ok_or(())
    }
}

impl fmt::Display for ScenarioVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn baseline_policies() -> PolicyMap {
    let enter_cockpit = Condition::RequesterAt(CABIN)
        .and(Condition::HasCred("PIN".into()))
        .and(Condition::IsIn(DOOR, "norm".into()));
    vec![
        // cabin
        vec![AtomicPolicy::new(Condition::True, [Action::Move])],
        // door
        vec![
            AtomicPolicy::new(Condition::True, [Action::Move]),
            AtomicPolicy::new(Condition::RequesterAt(COCKPIT), [Action::Put]),
        ],
        // cockpit
        vec![
            AtomicPolicy::new(Condition::RequesterAt(COCKPIT), [Action::Put]),
            AtomicPolicy::new(enter_cockpit, [Action::Move]),
        ],
    ]
}

fn four_eyes_policies() -> PolicyMap {
    let enter_cockpit = Condition::RequesterAt(CABIN)
        .and(Condition::HasCred("PIN".into()))
        .and(Condition::IsIn(DOOR, "norm".into()));
    let cockpit_put = Condition::RequesterAt(COCKPIT)
        .and(Condition::CountAtLeast(COCKPIT, 2))
        .and(Condition::AllAtAuthorized(COCKPIT, AIRPLANE_ACTORS));
    vec![
        vec![AtomicPolicy::new(Condition::RequesterAt(DOOR), [Action::Move])],
        // leaving the cockpit needs three people there
        vec![AtomicPolicy::new(
            Condition::RequesterAt(COCKPIT).and(Condition::CountAtLeast(COCKPIT, 3)),
            [Action::Move],
        )],
        vec![
            AtomicPolicy::new(cockpit_put, [Action::Put]),
            AtomicPolicy::new(enter_cockpit, [Action::Move]),
        ],
    ]
}

fn graph(cabin: &[IdentityId], door: &[IdentityId], cockpit: &[IdentityId], door_value: &str) -> InfraGraph {
    let mut g = InfraGraph::new(3, 4);
    g.add_edge(COCKPIT, DOOR).unwrap();
    g.add_edge(DOOR, CABIN).unwrap();
    for (loc, who) in [(CABIN, cabin), (DOOR, door), (COCKPIT, cockpit)] {
        for &id in who {
            g.place(id, loc).unwrap();
        }
    }
    for (id, role) in [(BOB, "pilot"), (CHARLY, "copilot"), (ALICE, "flightattendant")] {
        g.grant_credential(id, "PIN").unwrap();
        g.grant_role(id, role).unwrap();
    }
    g.set_value(DOOR, Some(door_value)).unwrap();
    g.set_value(COCKPIT, Some("air")).unwrap();
    g
}

fn predicates() -> Vec<NamedPredicate> {
    let p = |name: &str, param: Option<&str>, body| NamedPredicate {
        name: name.into(),
        param: param.map(String::from),
        body,
    };
    let a = IdentArg::Param;
    let in_actors = StatePredicate::InSet {
        who: a,
        set: AIRPLANE_ACTORS,
    };
    let enables = |action| StatePredicate::Enables {
        location: COCKPIT,
        who: a,
        action,
    };
    let locked = StatePredicate::IsIn {
        location: DOOR,
        value: "locked".into(),
    };
    vec![
        p(TRUE_PRED, None, StatePredicate::True),
        p(FALSE_PRED, None, StatePredicate::False),
        p(
            "global_policy",
            Some("a"),
            in_actors.clone().or(enables(Action::Put).not()),
        ),
        p("safety", Some("a"), in_actors.not().or(enables(Action::Move))),
        p(
            "security",
            Some("a"),
            locked.clone().not().or(enables(Action::Move).not()),
        ),
        p(
            "eve_ok",
            None,
            StatePredicate::Call {
                predicate: 2,
                arg: Some(IdentArg::Identity(EVE)),
            },
        ),
        p(
            "eve_violates",
            None,
            StatePredicate::Call {
                predicate: 5,
                arg: None,
            }
            .not(),
        ),
        p(
            "two_in_cockpit",
            None,
            StatePredicate::CountAtLeast {
                location: COCKPIT,
                count: 2,
            },
        ),
        p("door_locked", None, locked),
    ]
}

/// The full definition, holding both policy variants with `v` active.
pub fn airplane_def(v: ScenarioVariant) -> ModelDef {
    ModelDef {
        locations: vec![
            Location {
                id: 0,
                name: "cabin".into(),
            },
            Location {
                id: 1,
                name: "door".into(),
            },
            Location {
                id: 2,
                name: "cockpit".into(),
            },
        ],
        identities: ["Bob", "Charly", "Alice", "Eve"]
            .into_iter()
            .map(Identity::from)
            .collect(),
        identity_sets: vec![IdentitySet {
            name: "airplane_actors".into(),
            members: [BOB, CHARLY, ALICE].into_iter().collect(),
        }],
        initial: graph(&[ALICE], &[], &[BOB, CHARLY], "norm"),
        variants: vec![
            PolicyVariant {
                name: "baseline".into(),
                map: baseline_policies(),
            },
            PolicyVariant {
                name: "four_eyes".into(),
                map: four_eyes_policies(),
            },
        ],
        active_variant: match v {
            ScenarioVariant::Baseline => 0,
            ScenarioVariant::FourEyes => 1,
        },
        alphabets: vec![
            vec![],
            vec!["locked".into(), "norm".into(), "unlocked".into()],
            vec!["air".into(), "airport".into(), "ground".into()],
        ],
        insiders: vec![InsiderDecl {
            id: EVE,
            alter_egos: [CHARLY].into_iter().collect::<BTreeSet<_>>(),
            state: ActorState::new(PsyState::Depressed, [Motivation::Revenge, Motivation::PeerRecognition]),
        }],
        predicates: predicates(),
        assumptions: vec![],
    }
}

pub fn build_airplane_model(v: ScenarioVariant) -> Model {
    Model::new(airplane_def(v)).expect("built-in airplane model is valid")
}

/// The assumption that Eve cannot `put` in the cockpit while someone other
/// than her is there.
pub fn foe_control() -> FoeControl {
    FoeControl {
        location: COCKPIT,
        action: Action::Put,
        foe: EVE,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NamedState {
    AirplaneScenario,
    AirplaneGettingInDanger0,
    AirplaneGettingInDanger,
    AirplaneInDanger,
    AirplaneNotInDanger,
    AirplaneNotInDangerInit,
}

impl NamedState {
    pub const ALL: [NamedState; 6] = [
        NamedState::AirplaneScenario,
        NamedState::AirplaneGettingInDanger0,
        NamedState::AirplaneGettingInDanger,
        NamedState::AirplaneInDanger,
        NamedState::AirplaneNotInDanger,
        NamedState::AirplaneNotInDangerInit,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NamedState::AirplaneScenario => "Airplane_scenario",
            NamedState::AirplaneGettingInDanger0 => "Airplane_getting_in_danger0",
            NamedState::AirplaneGettingInDanger => "Airplane_getting_in_danger",
            NamedState::AirplaneInDanger => "Airplane_in_danger",
            NamedState::AirplaneNotInDanger => "Airplane_not_in_danger",
            NamedState::AirplaneNotInDangerInit => "Airplane_not_in_danger_init",
        }
    }
}

impl FromStr for NamedState {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        NamedState::ALL.into_iter().find(|n| n.as_str() == s).ok_or(())
    }
}

impl fmt::Display for NamedState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The graph of a named state and the policy variant it is paired with.
pub fn named_state(name: NamedState) -> (InfraGraph, ScenarioVariant) {
    use NamedState::*;
    use ScenarioVariant::*;
    match name {
        AirplaneScenario => (graph(&[ALICE], &[], &[BOB, CHARLY], "norm"), Baseline),
        AirplaneGettingInDanger0 => (graph(&[ALICE], &[BOB], &[CHARLY], "norm"), Baseline),
        AirplaneGettingInDanger => (graph(&[BOB, ALICE], &[], &[CHARLY], "norm"), Baseline),
        AirplaneInDanger => (graph(&[BOB, ALICE], &[], &[CHARLY], "locked"), Baseline),
        // Named "not in danger", but Charly is alone behind a locked door;
        // it is not reachable from the four-eyes initial state.
        AirplaneNotInDanger => (graph(&[BOB, ALICE], &[], &[CHARLY], "locked"), FourEyes),
        AirplaneNotInDangerInit => (graph(&[ALICE], &[], &[BOB, CHARLY], "norm"), FourEyes),
    }
}

/// The model with the named state as its initial graph.
pub fn named_model(name: NamedState) -> Model {
    let (g, v) = named_state(name);
    let mut def = airplane_def(v);
    def.initial = g;
    Model::new(def).expect("named states are valid")
}

fn eval_param(m: &Model, name: &str, g: &InfraGraph, a: IdentityId) -> bool {
    let idx = m.predicate_named(name).expect("airplane predicate");
    m.eval_named(idx, Some(a), g)
}

/// Only airplane actors may `put` in the cockpit.
pub fn global_policy(m: &Model, g: &InfraGraph, a: IdentityId) -> bool {
    eval_param(m, "global_policy", g, a)
}

/// Airplane actors can always enter the cockpit.
pub fn safety(m: &Model, g: &InfraGraph, a: IdentityId) -> bool {
    eval_param(m, "safety", g, a)
}

/// Nobody can enter the cockpit while the door is locked.
pub fn security(m: &Model, g: &InfraGraph, a: IdentityId) -> bool {
    eval_param(m, "security", g, a)
}
