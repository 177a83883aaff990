//! Infrastructures, actors, local policies and the `enables` judgment.

mod actor;
mod graph;
mod policy;
mod predicate;

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

pub use actor::{ActorClassId, ActorResolver, ActorState, InsiderDecl, Motivation, PsyState};
pub use graph::{GraphError, IdentityId, InfraGraph, LocationId};
pub use policy::{Action, ActionSet, AtomicPolicy, Condition, FoeControl, PolicyMap, PolicyVariant, SetId};
pub use predicate::{IdentArg, NamedPredicate, StatePredicate};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Location {
    pub id: u32,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Identity(pub String);

impl Identity {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Identity {
    fn from(s: &str) -> Self {
        Identity(s.into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySet {
    pub name: String,
    pub members: BTreeSet<IdentityId>,
}

/// The full problem definition as plain data. [`Model::new`] validates it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelDef {
    pub locations: Vec<Location>,
    pub identities: Vec<Identity>,
    pub identity_sets: Vec<IdentitySet>,
    pub initial: InfraGraph,
    /// Named policy maps; `active_variant` selects the one in force.
    pub variants: Vec<PolicyVariant>,
    pub active_variant: usize,
    /// Values a `put` may write, per location, in enumeration order.
    pub alphabets: Vec<Vec<String>>,
    pub insiders: Vec<InsiderDecl>,
    pub predicates: Vec<NamedPredicate>,
    pub assumptions: Vec<FoeControl>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelError {
    NoLocations,
    InvalidToken(String),
    DuplicateLocationName(String),
    DuplicateLocationId(u32),
    DuplicateIdentity(String),
    DuplicateSet(String),
    DuplicatePredicate(String),
    DuplicateVariant(String),
    UnknownLocationIndex(LocationId),
    UnknownIdentityIndex(IdentityId),
    UnknownSetIndex(SetId),
    UnknownVariant(String),
    NoVariants,
    GraphShape,
    Graph(GraphError),
    PlacementNotUnique(IdentityId),
    PolicyMapShape(String),
    EmptyActionSet(LocationId),
    ZeroCount,
    AlphabetShape,
    InsiderIsOwnAlterEgo(IdentityId),
    PredicateCall { predicate: String, reason: &'static str },
    ParamWithoutParameter(String),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ModelError::*;
        match self {
            NoLocations => f.write_str("a model needs at least one location"),
            InvalidToken(t) => write!(f, "invalid token {t:?} (empty or contains whitespace)"),
            DuplicateLocationName(n) => write!(f, "duplicate location name {n}"),
            DuplicateLocationId(i) => write!(f, "duplicate location id {i}"),
            DuplicateIdentity(n) => write!(f, "duplicate identity {n}"),
            DuplicateSet(n) => write!(f, "duplicate identity set {n}"),
            DuplicatePredicate(n) => write!(f, "duplicate predicate {n}"),
            DuplicateVariant(n) => write!(f, "duplicate policy variant {n}"),
            UnknownLocationIndex(l) => write!(f, "unknown location #{}", l.0),
            UnknownIdentityIndex(i) => write!(f, "unknown identity #{}", i.0),
            UnknownSetIndex(s) => write!(f, "unknown identity set #{}", s.0),
            UnknownVariant(n) => write!(f, "unknown policy variant {n}"),
            NoVariants => f.write_str("a model needs at least one policy variant"),
            GraphShape => f.write_str("initial graph does not match the declared locations and identities"),
            Graph(e) => write!(f, "{e}"),
            PlacementNotUnique(i) => write!(
                f,
                "identity #{} placed more than once (each identity may occupy at most one location, once)",
                i.0
            ),
            PolicyMapShape(v) => write!(f, "policy variant {v} does not cover every location"),
            EmptyActionSet(l) => write!(f, "atomic policy at location #{} grants no action", l.0),
            ZeroCount => f.write_str("count thresholds must be positive"),
            AlphabetShape => f.write_str("value alphabets do not cover every location"),
            InsiderIsOwnAlterEgo(i) => write!(f, "insider #{} lists itself as alter ego", i.0),
            PredicateCall { predicate, reason } => {
                write!(f, "predicate {predicate}: {reason}")
            }
            ParamWithoutParameter(n) => {
                write!(f, "predicate {n} uses a parameter but declares none")
            }
        }
    }
}

impl From<GraphError> for ModelError {
    fn from(e: GraphError) -> Self {
        ModelError::Graph(e)
    }
}

/// A warning about a model that is valid but probably not what was meant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lint {
    /// The atomic policy grants only `eval`, which no transition uses.
    EvalOnlyPolicy { variant: String, location: LocationId },
}

fn valid_token(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(char::is_whitespace)
}

fn check_token(s: &str) -> Result<(), ModelError> {
    if valid_token(s) {
        Ok(())
    } else {
        Err(ModelError::InvalidToken(s.into()))
    }
}

fn check_unique<'a>(
    names: impl Iterator<Item = &'a str>,
    dup: impl Fn(String) -> ModelError,
) -> Result<(), ModelError> {
    let mut seen = BTreeSet::new();
    for n in names {
        check_token(n)?;
        if !seen.insert(n) {
            return Err(dup(n.into()));
        }
    }
    Ok(())
}

/// A validated model together with its actor resolver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    def: ModelDef,
    resolver: ActorResolver,
}

impl Deref for Model {
    type Target = ModelDef;

    fn deref(&self) -> &ModelDef {
        &self.def
    }
}

impl Model {
    pub fn new(def: ModelDef) -> Result<Model, ModelError> {
        let nl = def.locations.len();
        let ni = def.identities.len();
        let ns = def.identity_sets.len();
        if nl == 0 {
            return Err(ModelError::NoLocations);
        }
        check_unique(
            def.locations.iter().map(|l| l.name.as_str()),
            ModelError::DuplicateLocationName,
        )?;
        let mut ids = BTreeSet::new();
        for l in &def.locations {
            if !ids.insert(l.id) {
                return Err(ModelError::DuplicateLocationId(l.id));
            }
        }
        check_unique(def.identities.iter().map(|i| i.as_str()), ModelError::DuplicateIdentity)?;
        check_unique(
            def.identity_sets.iter().map(|s| s.name.as_str()),
            ModelError::DuplicateSet,
        )?;
        check_unique(
            def.predicates.iter().map(|p| p.name.as_str()),
            ModelError::DuplicatePredicate,
        )?;
        check_unique(
            def.variants.iter().map(|v| v.name.as_str()),
            ModelError::DuplicateVariant,
        )?;

        let loc_ok = |l: LocationId| {
            if l.index() < nl {
                Ok(())
            } else {
                Err(ModelError::UnknownLocationIndex(l))
            }
        };
        let id_ok = |i: IdentityId| {
            if i.index() < ni {
                Ok(())
            } else {
                Err(ModelError::UnknownIdentityIndex(i))
            }
        };
        let set_ok = |s: SetId| {
            if s.index() < ns {
                Ok(())
            } else {
                Err(ModelError::UnknownSetIndex(s))
            }
        };

        for s in &def.identity_sets {
            for m in &s.members {
                id_ok(*m)?;
            }
        }

        let g = &def.initial;
        if g.location_count() != nl || g.identity_count() != ni {
            return Err(ModelError::GraphShape);
        }
        if !g.placements_unique() {
            let mut seen = BTreeSet::new();
            let dup = (0..nl)
                .flat_map(|l| g.placement(LocationId(l as u16)).iter().copied())
                .find(|i| !seen.insert(*i))
                .unwrap_or(IdentityId(0));
            return Err(ModelError::PlacementNotUnique(dup));
        }
        for i in 0..ni {
            let id = IdentityId(i as u16);
            for t in g.credentials(id).iter().chain(g.roles(id)) {
                check_token(t)?;
            }
        }
        for l in 0..nl {
            if let Some(v) = g.value(LocationId(l as u16)) {
                check_token(v)?;
            }
        }

        if def.variants.is_empty() {
            return Err(ModelError::NoVariants);
        }
        if def.active_variant >= def.variants.len() {
            return Err(ModelError::UnknownVariant(alloc::format!("#{}", def.active_variant)));
        }
        for v in &def.variants {
            if v.map.len() != nl {
                return Err(ModelError::PolicyMapShape(v.name.clone()));
            }
            for (l, pols) in v.map.iter().enumerate() {
                for p in pols {
                    if p.actions.is_empty() {
                        return Err(ModelError::EmptyActionSet(LocationId(l as u16)));
                    }
                    let (mut locs, mut sets, mut counts) = (Vec::new(), Vec::new(), Vec::new());
                    p.condition
                        .for_each_ref(&mut |l| locs.push(l), &mut |s| sets.push(s), &mut |k| counts.push(k));
                    for l in locs {
                        loc_ok(l)?;
                    }
                    for s in sets {
                        set_ok(s)?;
                    }
                    if counts.contains(&0) {
                        return Err(ModelError::ZeroCount);
                    }
                    check_condition_tokens(&p.condition)?;
                }
            }
        }

        if def.alphabets.len() != nl {
            return Err(ModelError::AlphabetShape);
        }
        for a in &def.alphabets {
            for v in a {
                check_token(v)?;
            }
        }

        for (idx, p) in def.predicates.iter().enumerate() {
            let mut err = None;
            let mut record = |e: ModelError| {
                err.get_or_insert(e);
            };
            p.body.visit(&mut |node| {
                let arg_ok = |a: &IdentArg| match a {
                    IdentArg::Identity(i) => id_ok(*i),
                    IdentArg::Param if p.param.is_none() => Err(ModelError::ParamWithoutParameter(p.name.clone())),
                    IdentArg::Param => Ok(()),
                };
                let r = match node {
                    StatePredicate::Enables { location, who, .. } => loc_ok(*location).and(arg_ok(who)),
                    StatePredicate::At { who, location } => loc_ok(*location).and(arg_ok(who)),
                    StatePredicate::IsIn { location, value } => loc_ok(*location).and(check_token(value)),
                    StatePredicate::CountAtLeast { location, count } => loc_ok(*location).and(if *count == 0 {
                        Err(ModelError::ZeroCount)
                    } else {
                        Ok(())
                    }),
                    StatePredicate::InSet { who, set } => set_ok(*set).and(arg_ok(who)),
                    StatePredicate::Call { predicate, arg } => {
                        if *predicate >= idx {
                            Err(ModelError::PredicateCall {
                                predicate: p.name.clone(),
                                reason: "may only call predicates defined before it",
                            })
                        } else {
                            let callee = &def.predicates[*predicate];
                            match (callee.param.is_some(), arg) {
                                (true, Some(a)) => arg_ok(a),
                                (false, None) => Ok(()),
                                _ => Err(ModelError::PredicateCall {
                                    predicate: p.name.clone(),
                                    reason: "argument count does not match the callee",
                                }),
                            }
                        }
                    }
                    _ => Ok(()),
                };
                if let Err(e) = r {
                    record(e);
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
        }

        for a in &def.assumptions {
            loc_ok(a.location)?;
            id_ok(a.foe)?;
        }

        let resolver = ActorResolver::build(&def.insiders, ni)?;
        Ok(Model { def, resolver })
    }

    pub fn def(&self) -> &ModelDef {
        &self.def
    }

    pub fn into_def(self) -> ModelDef {
        self.def
    }

    pub fn resolver(&self) -> &ActorResolver {
        &self.resolver
    }

    pub fn actor_of(&self, id: IdentityId) -> ActorClassId {
        self.resolver.actor_of(id)
    }

    pub fn location_ids(&self) -> impl Iterator<Item = LocationId> {
        (0..self.def.locations.len()).map(|i| LocationId(i as u16))
    }

    pub fn identity_ids(&self) -> impl Iterator<Item = IdentityId> {
        (0..self.def.identities.len()).map(|i| IdentityId(i as u16))
    }

    pub fn location_named(&self, name: &str) -> Option<LocationId> {
        self.def
            .locations
            .iter()
            .position(|l| l.name == name)
            .map(|i| LocationId(i as u16))
    }

    pub fn identity_named(&self, name: &str) -> Option<IdentityId> {
        self.def
            .identities
            .iter()
            .position(|i| i.0 == name)
            .map(|i| IdentityId(i as u16))
    }

    pub fn set_named(&self, name: &str) -> Option<SetId> {
        self.def
            .identity_sets
            .iter()
            .position(|s| s.name == name)
            .map(|i| SetId(i as u16))
    }

    pub fn predicate_named(&self, name: &str) -> Option<usize> {
        self.def.predicates.iter().position(|p| p.name == name)
    }

    pub fn location_name(&self, l: LocationId) -> &str {
        &self.def.locations[l.index()].name
    }

    pub fn identity_name(&self, i: IdentityId) -> &str {
        self.def.identities[i.index()].as_str()
    }

    pub fn set_members(&self, s: SetId) -> &BTreeSet<IdentityId> {
        &self.def.identity_sets[s.index()].members
    }

    /// The policy map in force.
    pub fn policies(&self) -> &PolicyMap {
        &self.def.variants[self.def.active_variant].map
    }

    pub fn active_variant_name(&self) -> &str {
        &self.def.variants[self.def.active_variant].name
    }

    pub fn with_variant(&self, name: &str) -> Result<Model, ModelError> {
        let idx = self
            .def
            .variants
            .iter()
            .position(|v| v.name == name)
            .ok_or_else(|| ModelError::UnknownVariant(name.into()))?;
        let mut def = self.def.clone();
        def.active_variant = idx;
        Model::new(def)
    }

    pub fn with_assumptions(&self, assumptions: Vec<FoeControl>) -> Result<Model, ModelError> {
        let mut def = self.def.clone();
        def.assumptions = assumptions;
        Model::new(def)
    }

    pub fn with_initial(&self, initial: InfraGraph) -> Result<Model, ModelError> {
        let mut def = self.def.clone();
        def.initial = initial;
        Model::new(def)
    }

    /// Evaluates a policy condition for `requester` in graph `g`.
    pub fn eval_condition(&self, c: &Condition, g: &InfraGraph, requester: ActorClassId) -> bool {
        match c {
            Condition::True => true,
            Condition::RequesterAt(l) => g.placement(*l).iter().any(|n| self.actor_of(*n) == requester),
            Condition::HasCred(tok) => self.resolver.members(requester).any(|m| g.credentials(m).contains(tok)),
            Condition::HasRole(tok) => self.resolver.members(requester).any(|m| g.roles(m).contains(tok)),
            Condition::IsIn(l, v) => g.value(*l) == Some(v.as_str()),
            Condition::CountAtLeast(l, k) => g.placement(*l).len() >= *k,
            Condition::AllAtAuthorized(l, s) => {
                let allowed = self.set_members(*s);
                g.placement(*l).iter().all(|n| allowed.contains(n))
            }
            Condition::Not(c) => !self.eval_condition(c, g, requester),
            Condition::And(a, b) => self.eval_condition(a, g, requester) && self.eval_condition(b, g, requester),
            Condition::Or(a, b) => self.eval_condition(a, g, requester) || self.eval_condition(b, g, requester),
        }
    }

    /// Whether `requester` may perform `action` at `l` in graph `g`, taking
    /// the model's foe-control assumptions into account.
    pub fn enables(&self, g: &InfraGraph, l: LocationId, requester: ActorClassId, action: Action) -> bool {
        let foe_disabled = self.def.assumptions.iter().any(|fc| {
            fc.location == l
                && fc.action == action
                && requester == self.actor_of(fc.foe)
                && g.placement(l).iter().any(|x| self.actor_of(*x) != requester)
        });
        if foe_disabled {
            return false;
        }
        self.policies()[l.index()]
            .iter()
            .any(|p| p.actions.contains(action) && self.eval_condition(&p.condition, g, requester))
    }

    /// Evaluates a state predicate; `param` binds `IdentArg::Param`.
    pub fn eval_state_predicate(&self, p: &StatePredicate, g: &InfraGraph, param: Option<IdentityId>) -> bool {
        let who = |a: &IdentArg| match a {
            IdentArg::Identity(i) => *i,
            IdentArg::Param => param.expect("validated: parameter is bound"),
        };
        match p {
            StatePredicate::True => true,
            StatePredicate::False => false,
            StatePredicate::Enables {
                location,
                who: w,
                action,
            } => self.enables(g, *location, self.actor_of(who(w)), *action),
            StatePredicate::At { who: w, location } => g.is_at(who(w), *location),
            StatePredicate::IsIn { location, value } => g.value(*location) == Some(value.as_str()),
            StatePredicate::CountAtLeast { location, count } => g.placement(*location).len() >= *count,
            StatePredicate::InSet { who: w, set } => self.set_members(*set).contains(&who(w)),
            StatePredicate::Call { predicate, arg } => self.eval_named(*predicate, arg.as_ref().map(who), g),
            StatePredicate::Not(p) => !self.eval_state_predicate(p, g, param),
            StatePredicate::And(a, b) => {
                self.eval_state_predicate(a, g, param) && self.eval_state_predicate(b, g, param)
            }
            StatePredicate::Or(a, b) => {
                self.eval_state_predicate(a, g, param) || self.eval_state_predicate(b, g, param)
            }
        }
    }

    pub fn eval_named(&self, predicate: usize, arg: Option<IdentityId>, g: &InfraGraph) -> bool {
        self.eval_state_predicate(&self.def.predicates[predicate].body, g, arg)
    }

    pub fn lints(&self) -> Vec<Lint> {
        let eval_only: ActionSet = [Action::Eval].into_iter().collect();
        let mut out = Vec::new();
        for v in &self.def.variants {
            for (l, pols) in v.map.iter().enumerate() {
                for p in pols {
                    if p.actions == eval_only {
                        out.push(Lint::EvalOnlyPolicy {
                            variant: v.name.clone(),
                            location: LocationId(l as u16),
                        });
                    }
                }
            }
        }
        out
    }
}

fn check_condition_tokens(c: &Condition) -> Result<(), ModelError> {
    match c {
        Condition::HasCred(t) | Condition::HasRole(t) | Condition::IsIn(_, t) => check_token(t),
        Condition::Not(c) => check_condition_tokens(c),
        Condition::And(a, b) | Condition::Or(a, b) => {
            check_condition_tokens(a)?;
            check_condition_tokens(b)
        }
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn tiny() -> ModelDef {
        let mut g = InfraGraph::new(2, 2);
        g.add_edge(LocationId(0), LocationId(1)).unwrap();
        g.place(IdentityId(0), LocationId(0)).unwrap();
        g.grant_credential(IdentityId(1), "key").unwrap();
        ModelDef {
            locations: vec![
                Location {
                    id: 0,
                    name: "a".into(),
                },
                Location {
                    id: 1,
                    name: "b".into(),
                },
            ],
            identities: vec!["x".into(), "y".into()],
            identity_sets: vec![IdentitySet {
                name: "staff".into(),
                members: [IdentityId(0)].into_iter().collect(),
            }],
            initial: g,
            variants: vec![PolicyVariant {
                name: "main".into(),
                map: vec![
                    vec![AtomicPolicy::new(Condition::True, [Action::Move])],
                    vec![AtomicPolicy::new(
                        Condition::RequesterAt(LocationId(0)).and(Condition::HasCred("key".into())),
                        [Action::Put],
                    )],
                ],
            }],
            active_variant: 0,
            alphabets: vec![vec![], vec!["on".into()]],
            insiders: vec![],
            predicates: vec![],
            assumptions: vec![],
        }
    }

    #[test]
    fn valid_tiny_model() {
        let m = Model::new(tiny()).unwrap();
        assert_eq!(m.location_named("b"), Some(LocationId(1)));
        assert_eq!(m.identity_named("y"), Some(IdentityId(1)));
        assert_eq!(m.active_variant_name(), "main");
        assert!(m.lints().is_empty());
    }

    #[test]
    fn credentials_are_per_class() {
        let m = Model::new(tiny()).unwrap();
        let g = &m.initial;
        // x is at a but holds no key; y holds the key but is nowhere
        assert!(!m.enables(g, LocationId(1), m.actor_of(IdentityId(0)), Action::Put));
        let mut def = tiny();
        def.insiders.push(InsiderDecl {
            id: IdentityId(1),
            alter_egos: [IdentityId(0)].into_iter().collect(),
            state: ActorState::new(PsyState::Angry, [Motivation::Power]),
        });
        let m = Model::new(def).unwrap();
        assert!(m.enables(&m.initial, LocationId(1), m.actor_of(IdentityId(1)), Action::Put));
    }

    #[test]
    fn empty_policy_set_enables_nothing() {
        let mut def = tiny();
        def.variants[0].map = vec![vec![], vec![]];
        let m = Model::new(def).unwrap();
        for l in m.location_ids() {
            for i in m.identity_ids() {
                for a in Action::ALL {
                    assert!(!m.enables(&m.initial, l, m.actor_of(i), a));
                }
            }
        }
    }

    #[test]
    fn validation_errors() {
        let mut d = tiny();
        d.locations.clear();
        assert_eq!(Model::new(d), Err(ModelError::NoLocations));

        let mut d = tiny();
        d.locations[1].name = "a".into();
        assert_eq!(Model::new(d), Err(ModelError::DuplicateLocationName("a".into())));

        let mut d = tiny();
        d.identities[0] = "has space".into();
        assert!(matches!(Model::new(d), Err(ModelError::InvalidToken(_))));

        let mut d = tiny();
        d.variants[0].map[0][0].actions = ActionSet::empty();
        assert_eq!(Model::new(d), Err(ModelError::EmptyActionSet(LocationId(0))));

        let mut d = tiny();
        d.variants[0].map[0].push(AtomicPolicy::new(
            Condition::CountAtLeast(LocationId(5), 1),
            [Action::Get],
        ));
        assert_eq!(Model::new(d), Err(ModelError::UnknownLocationIndex(LocationId(5))));

        let mut d = tiny();
        d.variants[0].map.pop();
        assert_eq!(Model::new(d), Err(ModelError::PolicyMapShape("main".into())));

        let mut d = tiny();
        d.predicates.push(NamedPredicate {
            name: "p".into(),
            param: None,
            body: StatePredicate::InSet {
                who: IdentArg::Param,
                set: SetId(0),
            },
        });
        assert_eq!(Model::new(d), Err(ModelError::ParamWithoutParameter("p".into())));

        let mut d = tiny();
        d.predicates.push(NamedPredicate {
            name: "p".into(),
            param: None,
            body: StatePredicate::Call {
                predicate: 0,
                arg: None,
            },
        });
        assert!(matches!(Model::new(d), Err(ModelError::PredicateCall { .. })));
    }

    #[test]
    fn eval_only_policy_is_linted() {
        let mut d = tiny();
        d.variants[0].map[0].push(AtomicPolicy::new(Condition::True, [Action::Eval]));
        let m = Model::new(d).unwrap();
        assert_eq!(
            m.lints(),
            vec![Lint::EvalOnlyPolicy {
                variant: "main".into(),
                location: LocationId(0)
            }]
        );
    }

    #[test]
    fn foe_control_only_affects_the_foe() {
        let mut d = tiny();
        // both x and y may put at a when present there
        d.variants[0].map[0].push(AtomicPolicy::new(Condition::True, [Action::Put]));
        d.initial.place(IdentityId(1), LocationId(0)).unwrap();
        let plain = Model::new(d.clone()).unwrap();
        d.assumptions.push(FoeControl {
            location: LocationId(0),
            action: Action::Put,
            foe: IdentityId(1),
        });
        let guarded = Model::new(d).unwrap();
        let g = &guarded.initial;
        let x = guarded.actor_of(IdentityId(0));
        let y = guarded.actor_of(IdentityId(1));
        assert!(plain.enables(g, LocationId(0), y, Action::Put));
        assert!(!guarded.enables(g, LocationId(0), y, Action::Put));
        assert!(guarded.enables(g, LocationId(0), x, Action::Put));
        assert!(guarded.enables(g, LocationId(0), y, Action::Move));
    }
}
