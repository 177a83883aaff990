//! Canonical states and reachable Kripke structures.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::fixpoint::StateSet;
use crate::model::{IdentityId, InfraGraph, LocationId, Model};
use crate::transition::{successors, TransitionLabel};

/// Canonical byte encoding of an [`InfraGraph`]: placements as sets,
/// credentials, roles and location values. Edges are not part of it since
/// no transition changes them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State(Vec<u8>);

impl State {
    pub fn encode(g: &InfraGraph) -> State {
        let mut out = Vec::new();
        let push_len = |out: &mut Vec<u8>, n: usize| out.extend_from_slice(&(n as u32).to_le_bytes());
        let push_str = |out: &mut Vec<u8>, s: &str| {
            push_len(out, s.len());
            out.extend_from_slice(s.as_bytes());
        };
        for l in 0..g.location_count() {
            let mut ids: Vec<IdentityId> = g.placement(LocationId(l as u16)).to_vec();
            ids.sort_unstable();
            ids.dedup();
            push_len(&mut out, ids.len());
            for id in ids {
                out.extend_from_slice(&id.0.to_le_bytes());
            }
        }
        for i in 0..g.identity_count() {
            let id = IdentityId(i as u16);
            push_len(&mut out, g.credentials(id).len());
            for c in g.credentials(id) {
                push_str(&mut out, c);
            }
            push_len(&mut out, g.roles(id).len());
            for r in g.roles(id) {
                push_str(&mut out, r);
            }
        }
        for l in 0..g.location_count() {
            match g.value(LocationId(l as u16)) {
                None => out.push(0),
                Some(v) => {
                    out.push(1);
                    push_str(&mut out, v);
                }
            }
        }
        State(out)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExploreError {
    StateCapExceeded {
        cap: usize,
    },
    /// A supplied state set is not closed under the transition relation.
    NotClosed {
        state: usize,
    },
    /// An initial-state index outside the supplied state set.
    BadInitial {
        index: usize,
    },
}

impl fmt::Display for ExploreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExploreError::StateCapExceeded { cap } => {
                write!(f, "state space exceeds the cap of {cap} states")
            }
            ExploreError::NotClosed { state } => write!(
                f,
                "state set is not closed under transitions (successor of state {state} missing)"
            ),
            ExploreError::BadInitial { index } => write!(f, "initial state {index} is not in the state set"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExploreOptions {
    pub max_states: Option<usize>,
}

/// Reachable states, labelled edges and initial states. States are indexed
/// in breadth-first discovery order.
#[derive(Clone, Debug)]
pub struct KripkeModel {
    graphs: Vec<InfraGraph>,
    index: BTreeMap<State, usize>,
    edges: Vec<Vec<(TransitionLabel, usize)>>,
    init: Vec<usize>,
}

impl KripkeModel {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn graph(&self, i: usize) -> &InfraGraph {
        &self.graphs[i]
    }

    pub fn graphs(&self) -> &[InfraGraph] {
        &self.graphs
    }

    pub fn successors(&self, i: usize) -> &[(TransitionLabel, usize)] {
        &self.edges[i]
    }

    pub fn init(&self) -> &[usize] {
        &self.init
    }

    pub fn init_set(&self) -> StateSet {
        StateSet::from_indices(self.len(), self.init.iter().copied())
    }

    pub fn all(&self) -> StateSet {
        StateSet::full(self.len())
    }

    pub fn index_of(&self, g: &InfraGraph) -> Option<usize> {
        self.index.get(&State::encode(g)).copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// Every `(source, label, target)` triple, sources in index order.
    pub fn edge_list(&self) -> impl Iterator<Item = (usize, &TransitionLabel, usize)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .flat_map(|(s, out)| out.iter().map(move |(l, t)| (s, l, *t)))
    }

    /// Explicit construction from a given state list. The list must be
    /// closed under the transition relation of `m`.
    pub fn from_explicit(m: &Model, graphs: Vec<InfraGraph>, init: Vec<usize>) -> Result<Self, ExploreError> {
        let mut index = BTreeMap::new();
        let mut unique = Vec::new();
        for g in graphs {
            let key = State::encode(&g);
            if let alloc::collections::btree_map::Entry::Vacant(e) = index.entry(key) {
                e.insert(unique.len());
                unique.push(g);
            }
        }
        if let Some(&bad) = init.iter().find(|&&i| i >= unique.len()) {
            return Err(ExploreError::BadInitial { index: bad });
        }
        let mut edges = Vec::with_capacity(unique.len());
        for (i, g) in unique.iter().enumerate() {
            let mut out = Vec::new();
            for (label, next) in successors(m, g) {
                let t = *index
                    .get(&State::encode(&next))
                    .ok_or(ExploreError::NotClosed { state: i })?;
                out.push((label, t));
            }
            edges.push(out);
        }
        let mut init = init;
        init.sort_unstable();
        init.dedup();
        Ok(KripkeModel {
            graphs: unique,
            index,
            edges,
            init,
        })
    }

    /// Reverse adjacency (targets to sources), each list in source order.
    pub fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut pred = alloc::vec![Vec::new(); self.len()];
        for (s, out) in self.edges.iter().enumerate() {
            for (_, t) in out {
                if pred[*t].last() != Some(&s) {
                    pred[*t].push(s);
                }
            }
        }
        pred
    }
}

/// Breadth-first closure of the transition relation from the model's
/// initial graph.
pub fn reachable(m: &Model, opts: ExploreOptions) -> Result<KripkeModel, ExploreError> {
    reachable_from(m, core::slice::from_ref(&m.initial), opts)
}

/// Breadth-first closure from several initial graphs (indexed first, in
/// the given order).
pub fn reachable_from(m: &Model, initial: &[InfraGraph], opts: ExploreOptions) -> Result<KripkeModel, ExploreError> {
    let mut graphs: Vec<InfraGraph> = Vec::new();
    let mut index: BTreeMap<State, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let mut init = Vec::new();

    let mut intern = |g: InfraGraph, graphs: &mut Vec<InfraGraph>, queue: &mut VecDeque<usize>| {
        let key = State::encode(&g);
        if let Some(&i) = index.get(&key) {
            return Ok(i);
        }
        let i = graphs.len();
        if let Some(cap) = opts.max_states {
            if i >= cap {
                return Err(ExploreError::StateCapExceeded { cap });
            }
        }
        index.insert(key, i);
        graphs.push(g);
        queue.push_back(i);
        Ok(i)
    };

    for g in initial {
        let i = intern(g.clone(), &mut graphs, &mut queue)?;
        init.push(i);
    }

    let mut edges: Vec<Vec<(TransitionLabel, usize)>> = Vec::new();
    while let Some(i) = queue.pop_front() {
        let succ = successors(m, &graphs[i]);
        let mut out = Vec::with_capacity(succ.len());
        for (label, next) in succ {
            let t = intern(next, &mut graphs, &mut queue)?;
            out.push((label, t));
        }
        if edges.len() <= i {
            edges.resize_with(i + 1, Vec::new);
        }
        edges[i] = out;
    }
    edges.resize_with(graphs.len(), Vec::new);

    init.sort_unstable();
    init.dedup();
    Ok(KripkeModel {
        graphs,
        index,
        edges,
        init,
    })
}
