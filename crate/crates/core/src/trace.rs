//! Witness and counterexample paths.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::ctl::{CtlError, CtlEvaluator, CtlFormula};
use crate::fixpoint::StateSet;
use crate::kripke::KripkeModel;
use crate::model::Model;
use crate::transition::TransitionLabel;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceMode {
    /// A path into `g` for a formula `EF g`.
    Witness,
    /// A path out of `g` for a formula `AG g`.
    Counterexample,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub label: TransitionLabel,
    pub target: usize,
}

/// A labelled path through a Kripke model. No steps means the start state
/// itself is the witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub start: usize,
    pub steps: Vec<TraceStep>,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self) -> usize {
        self.steps.last().map_or(self.start, |s| s.target)
    }

    /// Every visited state, start included.
    pub fn states(&self) -> Vec<usize> {
        let mut out = vec![self.start];
        out.extend(self.steps.iter().map(|s| s.target));
        out
    }
}

/// Shortest path from any of `sources` into `target`. Sources are tried in
/// index order and edges in label order, so the result is deterministic.
pub fn shortest_path(k: &KripkeModel, sources: &[usize], target: &StateSet) -> Option<Trace> {
    let mut srcs = sources.to_vec();
    srcs.sort_unstable();
    srcs.dedup();
    if let Some(&s) = srcs.iter().find(|&&s| target.contains(s)) {
        return Some(Trace {
            start: s,
            steps: Vec::new(),
        });
    }
    // parent[t] = (source state, edge position)
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; k.len()];
    let mut seen = StateSet::from_indices(k.len(), srcs.iter().copied());
    let mut queue: VecDeque<usize> = srcs.into_iter().collect();
    while let Some(s) = queue.pop_front() {
        for (pos, (_, t)) in k.successors(s).iter().enumerate() {
            if seen.contains(*t) {
                continue;
            }
            seen.insert(*t);
            parent[*t] = Some((s, pos));
            if target.contains(*t) {
                return Some(unwind(k, &parent, *t));
            }
            queue.push_back(*t);
        }
    }
    None
}

fn unwind(k: &KripkeModel, parent: &[Option<(usize, usize)>], end: usize) -> Trace {
    let mut steps = Vec::new();
    let mut cur = end;
    while let Some((s, pos)) = parent[cur] {
        steps.push(TraceStep {
            label: k.successors(s)[pos].0.clone(),
            target: cur,
        });
        cur = s;
    }
    steps.reverse();
    Trace { start: cur, steps }
}

/// A shortest witness for `EF g` or counterexample for `AG g`, starting at
/// an initial state.
pub fn extract_trace(k: &KripkeModel, f: &CtlFormula, m: &Model, mode: TraceMode) -> Result<Trace, CtlError> {
    let mut ev = CtlEvaluator::new(k, m);
    let target = match (mode, f) {
        (TraceMode::Witness, CtlFormula::EF(g)) => ev.eval(g)?,
        (TraceMode::Counterexample, CtlFormula::AG(g)) => {
            if k.init_set().is_subset(&ev.eval(f)?) {
                return Err(CtlError::VerdictMismatch);
            }
            ev.eval(g)?.complement()
        }
        (TraceMode::Witness, _) => return Err(CtlError::ShapeMismatch { expected: "EF g" }),
        (TraceMode::Counterexample, _) => return Err(CtlError::ShapeMismatch { expected: "AG g" }),
    };
    shortest_path(k, k.init(), &target).ok_or(CtlError::VerdictMismatch)
}
