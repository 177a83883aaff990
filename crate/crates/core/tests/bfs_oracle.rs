//! Naive re-implementation of the transition rules over a name-keyed state,
//! compared against the engine's reachable state space.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use insider_core::airplane::{self, NamedState, ScenarioVariant};
use insider_core::random::random_model;
use insider_core::{reachable, Action, Condition, ExploreOptions, InfraGraph, LocationId, Model};

/// Everything observable about a state, keyed by names.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Naive {
    at: BTreeMap<String, String>,
    creds: BTreeMap<String, BTreeSet<String>>,
    roles: BTreeMap<String, BTreeSet<String>>,
    values: BTreeMap<String, String>,
}

struct Oracle<'a> {
    m: &'a Model,
    locs: Vec<String>,
    ids: Vec<String>,
    nodes: BTreeSet<String>,
    /// identity -> every identity it acts as (including itself)
    same: BTreeMap<String, BTreeSet<String>>,
}

impl<'a> Oracle<'a> {
    fn new(m: &'a Model) -> Self {
        let locs: Vec<String> = m.locations.iter().map(|l| l.name.clone()).collect();
        let ids: Vec<String> = m.identities.iter().map(|i| i.0.clone()).collect();
        let nodes = m
            .initial
            .edges()
            .iter()
            .flat_map(|(a, b)| [locs[a.0 as usize].clone(), locs[b.0 as usize].clone()])
            .collect();
        // transitive closure of "insider past tipping point ~ alter ego"
        let mut same: BTreeMap<String, BTreeSet<String>> =
            ids.iter().map(|i| (i.clone(), BTreeSet::from([i.clone()]))).collect();
        for d in &m.insiders {
            let tipped = !d.state.motivations.is_empty() && d.state.psy.as_str() != "happy";
            if tipped {
                for ego in &d.alter_egos {
                    let (a, b) = (ids[d.id.0 as usize].clone(), ids[ego.0 as usize].clone());
                    let merged: BTreeSet<String> = same[&a].union(&same[&b]).cloned().collect();
                    for x in &merged {
                        same.insert(x.clone(), merged.clone());
                    }
                }
            }
        }
        Oracle {
            m,
            locs,
            ids,
            nodes,
            same,
        }
    }

    fn naive_of(&self, g: &InfraGraph) -> Naive {
        let mut s = Naive {
            at: BTreeMap::new(),
            creds: BTreeMap::new(),
            roles: BTreeMap::new(),
            values: BTreeMap::new(),
        };
        for (li, l) in self.locs.iter().enumerate() {
            for who in g.placement(LocationId(li as u16)) {
                s.at.insert(self.ids[who.0 as usize].clone(), l.clone());
            }
            if let Some(v) = g.value(LocationId(li as u16)) {
                s.values.insert(l.clone(), v.to_string());
            }
        }
        for (ii, i) in self.ids.iter().enumerate() {
            let id = insider_core::IdentityId(ii as u16);
            s.creds.insert(i.clone(), g.credentials(id).clone());
            s.roles.insert(i.clone(), g.roles(id).clone());
        }
        s
    }

    fn occupants<'s>(&self, s: &'s Naive, l: &str) -> Vec<&'s String> {
        s.at.iter().filter(|(_, at)| at.as_str() == l).map(|(n, _)| n).collect()
    }

    fn cond(&self, c: &Condition, s: &Naive, x: &str) -> bool {
        let class = &self.same[x];
        let loc = |l: &LocationId| self.locs[l.0 as usize].as_str();
        match c {
            Condition::True => true,
            Condition::RequesterAt(l) => self.occupants(s, loc(l)).iter().any(|n| class.contains(*n)),
            Condition::HasCred(t) => class.iter().any(|n| s.creds[n].contains(t)),
            Condition::HasRole(t) => class.iter().any(|n| s.roles[n].contains(t)),
            Condition::IsIn(l, v) => s.values.get(loc(l)) == Some(v),
            Condition::CountAtLeast(l, k) => self.occupants(s, loc(l)).len() >= *k,
            Condition::AllAtAuthorized(l, set) => {
                let members: BTreeSet<&String> = self.m.identity_sets[set.0 as usize]
                    .members
                    .iter()
                    .map(|i| &self.ids[i.0 as usize])
                    .collect();
                self.occupants(s, loc(l)).iter().all(|n| members.contains(n))
            }
            Condition::Not(c) => !self.cond(c, s, x),
            Condition::And(a, b) => self.cond(a, s, x) && self.cond(b, s, x),
            Condition::Or(a, b) => self.cond(a, s, x) || self.cond(b, s, x),
        }
    }

    fn enabled(&self, s: &Naive, l: usize, x: &str, a: Action) -> bool {
        for fc in &self.m.assumptions {
            let foe = &self.ids[fc.foe.0 as usize];
            if fc.location.0 as usize == l
                && fc.action == a
                && self.same[foe].contains(x)
                && self
                    .occupants(s, &self.locs[l])
                    .iter()
                    .any(|n| !self.same[foe].contains(*n))
            {
                return false;
            }
        }
        self.m.policies()[l]
            .iter()
            .any(|p| p.actions.contains(a) && self.cond(&p.condition, s, x))
    }

    fn successors(&self, s: &Naive) -> BTreeSet<Naive> {
        let mut out = BTreeSet::new();
        for x in &self.ids {
            // move
            if let Some(from) = s.at.get(x) {
                if self.nodes.contains(from) {
                    for (li, to) in self.locs.iter().enumerate() {
                        if self.nodes.contains(to) && self.enabled(s, li, x, Action::Move) {
                            let mut n = s.clone();
                            n.at.insert(x.clone(), to.clone());
                            out.insert(n);
                        }
                    }
                }
            }
            for (li, l) in self.locs.iter().enumerate() {
                let here = s.at.get(x) == Some(l);
                // get
                if here && self.enabled(s, li, x, Action::Get) {
                    let held: BTreeSet<&String> = self.same[x].iter().flat_map(|n| &s.creds[n]).collect();
                    for z in held {
                        for r in self.occupants(s, l) {
                            let mut n = s.clone();
                            n.creds.get_mut(r).unwrap().insert(z.clone());
                            out.insert(n);
                        }
                    }
                }
                // put and put_remote produce the same successors
                if self.enabled(s, li, x, Action::Put) {
                    for z in &self.m.alphabets[li] {
                        let mut n = s.clone();
                        n.values.insert(l.clone(), z.clone());
                        out.insert(n);
                    }
                }
            }
        }
        out
    }

    fn explore(&self) -> (BTreeSet<Naive>, BTreeSet<(Naive, Naive)>) {
        let init = self.naive_of(&self.m.initial);
        let mut seen = BTreeSet::from([init.clone()]);
        let mut edges = BTreeSet::new();
        let mut queue = VecDeque::from([init]);
        while let Some(s) = queue.pop_front() {
            for t in self.successors(&s) {
                edges.insert((s.clone(), t.clone()));
                if seen.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
        (seen, edges)
    }
}

fn compare(m: &Model) -> usize {
    let oracle = Oracle::new(m);
    let (states, edges) = oracle.explore();
    let k = reachable(m, ExploreOptions::default()).unwrap();
    let engine_states: BTreeSet<Naive> = k.graphs().iter().map(|g| oracle.naive_of(g)).collect();
    assert_eq!(engine_states.len(), k.len(), "engine states are not distinct");
    assert_eq!(engine_states, states);
    let engine_edges: BTreeSet<(Naive, Naive)> = k
        .edge_list()
        .map(|(s, _, t)| (oracle.naive_of(k.graph(s)), oracle.naive_of(k.graph(t))))
        .collect();
    assert_eq!(engine_edges, edges);
    k.len()
}

#[test]
fn airplane_state_spaces_match_oracle() {
    let baseline = compare(&airplane::build_airplane_model(ScenarioVariant::Baseline));
    let four_eyes = compare(&airplane::named_model(NamedState::AirplaneNotInDangerInit));
    let guarded = airplane::named_model(NamedState::AirplaneNotInDangerInit)
        .with_assumptions(vec![airplane::foe_control()])
        .unwrap();
    compare(&guarded);
    assert!(baseline > four_eyes);
}

#[test]
fn random_state_spaces_match_oracle() {
    for seed in 0..100 {
        compare(&random_model(seed));
    }
}
