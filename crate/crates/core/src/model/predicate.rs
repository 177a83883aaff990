use alloc::boxed::Box;
use alloc::string::String;

use super::graph::{IdentityId, LocationId};
use super::policy::{Action, SetId};

/// Identity argument of a predicate atom: a fixed identity or the
/// predicate's own parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentArg {
    Identity(IdentityId),
    Param,
}

/// Boolean expression over a single state.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StatePredicate {
    True,
    False,
    Enables {
        location: LocationId,
        who: IdentArg,
        action: Action,
    },
    At {
        who: IdentArg,
        location: LocationId,
    },
    IsIn {
        location: LocationId,
        value: String,
    },
    CountAtLeast {
        location: LocationId,
        count: usize,
    },
    InSet {
        who: IdentArg,
        set: SetId,
    },
    /// Invokes an earlier named predicate; `arg` is required iff the callee
    /// declares a parameter.
    Call {
        predicate: usize,
        arg: Option<IdentArg>,
    },
    Not(Box<StatePredicate>),
    And(Box<StatePredicate>, Box<StatePredicate>),
    Or(Box<StatePredicate>, Box<StatePredicate>),
}

impl StatePredicate {
    pub fn and(self, other: StatePredicate) -> StatePredicate {
        StatePredicate::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: StatePredicate) -> StatePredicate {
        StatePredicate::Or(Box::new(self), Box::new(other))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> StatePredicate {
        StatePredicate::Not(Box::new(self))
    }

    pub(crate) fn visit(&self, f: &mut dyn FnMut(&StatePredicate)) {
        f(self);
        match self {
            StatePredicate::Not(p) => p.visit(f),
            StatePredicate::And(a, b) | StatePredicate::Or(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            _ => {}
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedPredicate {
    pub name: String,
    pub param: Option<String>,
    pub body: StatePredicate,
}
