use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::graph::IdentityId;
use super::ModelError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PsyState {
    Happy,
    Depressed,
    Disgruntled,
    Angry,
    Stressed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Motivation {
    Financial,
    Political,
    Revenge,
    Curious,
    CompetitiveAdvantage,
    Power,
    PeerRecognition,
}

impl PsyState {
    pub const ALL: [PsyState; 5] = [
        PsyState::Happy,
        PsyState::Depressed,
        PsyState::Disgruntled,
        PsyState::Angry,
        PsyState::Stressed,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PsyState::Happy => "happy",
            PsyState::Depressed => "depressed",
            PsyState::Disgruntled => "disgruntled",
            PsyState::Angry => "angry",
            PsyState::Stressed => "stressed",
        }
    }
}

impl Motivation {
    pub const ALL: [Motivation; 7] = [
        Motivation::Financial,
        Motivation::Political,
        Motivation::Revenge,
        Motivation::Curious,
        Motivation::CompetitiveAdvantage,
        Motivation::Power,
        Motivation::PeerRecognition,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Motivation::Financial => "financial",
            Motivation::Political => "political",
            Motivation::Revenge => "revenge",
            Motivation::Curious => "curious",
            Motivation::CompetitiveAdvantage => "competitive_advantage",
            Motivation::Power => "power",
            Motivation::PeerRecognition => "peer_recognition",
        }
    }
}

impl FromStr for PsyState {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        PsyState::ALL.into_iter().find(|p| p.as_str() == s).ok_or(())
    }
}

impl FromStr for Motivation {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Motivation::ALL.into_iter().find(|m| m.as_str() == s).ok_or(())
    }
}

impl fmt::Display for PsyState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Display for Motivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Psychological disposition of an actor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActorState {
    pub psy: PsyState,
    pub motivations: BTreeSet<Motivation>,
}

impl ActorState {
    pub fn new(psy: PsyState, motivations: impl IntoIterator<Item = Motivation>) -> Self {
        ActorState {
            psy,
            motivations: motivations.into_iter().collect(),
        }
    }

    /// The catalyst that turns an identity into an active insider: some
    /// motivation and a mood other than happy.
    pub fn tipping_point(&self) -> bool {
        !self.motivations.is_empty() && self.psy != PsyState::Happy
    }
}

impl Default for ActorState {
    fn default() -> Self {
        ActorState::new(PsyState::Happy, [])
    }
}

/// An identity that may impersonate its alter egos once its tipping point
/// is reached.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InsiderDecl {
    pub id: IdentityId,
    pub alter_egos: BTreeSet<IdentityId>,
    pub state: ActorState,
}

/// The actor an identity acts as. Identified identities share one class,
/// named by its least member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActorClassId(pub IdentityId);

/// Partition of the identities into actor classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActorResolver {
    representative: Vec<IdentityId>,
}

impl ActorResolver {
    /// One singleton class per identity.
    pub fn injective(identities: usize) -> Self {
        ActorResolver {
            representative: (0..identities).map(|i| IdentityId(i as u16)).collect(),
        }
    }

    /// Merges every active insider with each of its alter egos. Insiders whose
    /// tipping point is not reached leave the partition untouched.
    pub fn build(insiders: &[InsiderDecl], identities: usize) -> Result<Self, ModelError> {
        let mut parent: Vec<usize> = (0..identities).collect();

        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }

        for ins in insiders {
            if ins.id.index() >= identities {
                return Err(ModelError::UnknownIdentityIndex(ins.id));
            }
            if let Some(bad) = ins.alter_egos.iter().find(|a| a.index() >= identities) {
                return Err(ModelError::UnknownIdentityIndex(*bad));
            }
            if ins.alter_egos.contains(&ins.id) {
                return Err(ModelError::InsiderIsOwnAlterEgo(ins.id));
            }
            if !ins.state.tipping_point() {
                continue;
            }
            for alter in &ins.alter_egos {
                let a = find(&mut parent, ins.id.index());
                let b = find(&mut parent, alter.index());
                // keep the smaller index as root so the root is the least member
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }

        let representative = (0..identities)
            .map(|i| IdentityId(find(&mut parent, i) as u16))
            .collect();
        Ok(ActorResolver { representative })
    }

    pub fn actor_of(&self, id: IdentityId) -> ActorClassId {
        ActorClassId(self.representative[id.index()])
    }

    pub fn same_actor(&self, a: IdentityId, b: IdentityId) -> bool {
        self.actor_of(a) == self.actor_of(b)
    }

    /// All identities acting as `class`, in identity order.
    pub fn members(&self, class: ActorClassId) -> impl Iterator<Item = IdentityId> + '_ {
        self.representative
            .iter()
            .enumerate()
            .filter(move |(_, r)| **r == class.0)
            .map(|(i, _)| IdentityId(i as u16))
    }

    pub fn identity_count(&self) -> usize {
        self.representative.len()
    }
}
