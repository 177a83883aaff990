use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::graph::{IdentityId, LocationId};

/// Index of a named identity set inside its model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetId(pub u16);

impl SetId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Action {
    Get,
    Move,
    /// Declared for completeness; no transition rule ever fires for it.
    Eval,
    Put,
}

impl Action {
    pub const ALL: [Action; 4] = [Action::Get, Action::Move, Action::Eval, Action::Put];

    pub fn as_str(self) -> &'static str {
        match self {
            Action::Get => "get",
            Action::Move => "move",
            Action::Eval => "eval",
            Action::Put => "put",
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl FromStr for Action {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Action::ALL.into_iter().find(|a| a.as_str() == s).ok_or(())
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActionSet(u8);

impl ActionSet {
    pub const fn empty() -> Self {
        ActionSet(0)
    }

    pub fn insert(&mut self, a: Action) {
        self.0 |= a.bit();
    }

    pub fn contains(self, a: Action) -> bool {
        self.0 & a.bit() != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Action> {
        Action::ALL.into_iter().filter(move |a| self.contains(*a))
    }
}

impl FromIterator<Action> for ActionSet {
    fn from_iter<T: IntoIterator<Item = Action>>(iter: T) -> Self {
        let mut s = ActionSet::empty();
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl fmt::Debug for ActionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Condition of an atomic policy, evaluated for a requesting actor class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    True,
    /// Some identity placed at the location acts as the requester.
    RequesterAt(LocationId),
    /// Some identity of the requester's class holds the credential.
    HasCred(String),
    HasRole(String),
    IsIn(LocationId, String),
    CountAtLeast(LocationId, usize),
    /// Every identity placed at the location belongs to the set.
    AllAtAuthorized(LocationId, SetId),
    Not(Box<Condition>),
    And(Box<Condition>, Box<Condition>),
    Or(Box<Condition>, Box<Condition>),
}

impl Condition {
    pub fn and(self, other: Condition) -> Condition {
        Condition::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Condition) -> Condition {
        Condition::Or(Box::new(self), Box::new(other))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Condition {
        Condition::Not(Box::new(self))
    }

    pub(crate) fn for_each_ref(
        &self,
        loc: &mut dyn FnMut(LocationId),
        set: &mut dyn FnMut(SetId),
        count: &mut dyn FnMut(usize),
    ) {
        match self {
            Condition::True | Condition::HasCred(_) | Condition::HasRole(_) => {}
            Condition::RequesterAt(l) | Condition::IsIn(l, _) => loc(*l),
            Condition::CountAtLeast(l, k) => {
                loc(*l);
                count(*k)
            }
            Condition::AllAtAuthorized(l, s) => {
                loc(*l);
                set(*s)
            }
            Condition::Not(c) => c.for_each_ref(loc, set, count),
            Condition::And(a, b) | Condition::Or(a, b) => {
                a.for_each_ref(loc, set, count);
                b.for_each_ref(loc, set, count);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomicPolicy {
    pub condition: Condition,
    pub actions: ActionSet,
}

impl AtomicPolicy {
    pub fn new(condition: Condition, actions: impl IntoIterator<Item = Action>) -> Self {
        AtomicPolicy {
            condition,
            actions: actions.into_iter().collect(),
        }
    }
}

/// Local policies, one list per location (indexed by `LocationId`).
pub type PolicyMap = Vec<Vec<AtomicPolicy>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolicyVariant {
    pub name: String,
    pub map: PolicyMap,
}

/// Assumption that `foe` is disabled for `action` at `location` whenever an
/// occupant there acts as someone other than the foe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FoeControl {
    pub location: LocationId,
    pub action: Action,
    pub foe: IdentityId,
}
