//! Explicit-state CTL model checking for actor/infrastructure security models.
//!
//! The crate is `no_std` (it needs `alloc`). It carries the domain model
//! (locations, actors, credentials, local policies and insiders), the
//! state-transition semantics, reachable-state construction, fixpoint based
//! CTL evaluation with witness and counterexample extraction, the built-in
//! airplane case study, the cockpit door timed automaton and the
//! one-person/two-person risk comparison.
//!
//! File formats and the command line live in the `insider-tool` crate.

#![no_std]

extern crate alloc;

pub mod airplane;
pub mod ctl;
pub mod door;
pub mod fixpoint;
pub mod kripke;
pub mod model;
pub mod random;
pub mod risk;
pub mod trace;
pub mod transition;

pub use ctl::{check, eval_ctl, CtlError, CtlEvaluator, CtlFormula, Verdict};
pub use fixpoint::{gfp_iterate, lfp_iterate, Fixpoint, FixpointError, StateSet};
pub use kripke::{reachable, ExploreError, ExploreOptions, KripkeModel, State};
pub use model::{
    Action, ActionSet, ActorClassId, ActorResolver, ActorState, AtomicPolicy, Condition, FoeControl, GraphError,
    IdentArg, Identity, IdentityId, IdentitySet, InfraGraph, InsiderDecl, Lint, Location, LocationId, Model, ModelDef,
    ModelError, Motivation, NamedPredicate, PolicyMap, PolicyVariant, PsyState, SetId, StatePredicate,
};
pub use trace::{extract_trace, shortest_path, Trace, TraceMode, TraceStep};
pub use transition::{move_graph, successors, TransitionLabel};
