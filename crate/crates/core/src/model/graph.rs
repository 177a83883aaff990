use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Index of a location inside its model (declaration order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocationId(pub u16);

/// Index of an identity inside its model (declaration order).
///
/// Declaration order is the fixed total order used to keep placements
/// canonical and to pick actor class representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdentityId(pub u16);

impl LocationId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl IdentityId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    UnknownLocation(LocationId),
    UnknownIdentity(IdentityId),
    /// The identity is already placed (at the given location).
    AlreadyPlaced(IdentityId, LocationId),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::UnknownLocation(l) => write!(f, "unknown location #{}", l.0),
            GraphError::UnknownIdentity(i) => write!(f, "unknown identity #{}", i.0),
            GraphError::AlreadyPlaced(i, l) => {
                write!(f, "identity #{} is already placed at location #{}", i.0, l.0)
            }
        }
    }
}

/// A snapshot of the infrastructure: location graph, who is where, who holds
/// which credentials and roles, and the value slot of every location.
///
/// Placements are kept sorted by identity order and free of duplicates, so
/// two graphs with the same occupants per location compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InfraGraph {
    edges: BTreeSet<(LocationId, LocationId)>,
    placements: Vec<Vec<IdentityId>>,
    credentials: Vec<BTreeSet<String>>,
    roles: Vec<BTreeSet<String>>,
    values: Vec<Option<String>>,
}

impl InfraGraph {
    pub fn new(locations: usize, identities: usize) -> Self {
        InfraGraph {
            edges: BTreeSet::new(),
            placements: vec![Vec::new(); locations],
            credentials: vec![BTreeSet::new(); identities],
            roles: vec![BTreeSet::new(); identities],
            values: vec![None; locations],
        }
    }

    pub fn location_count(&self) -> usize {
        self.placements.len()
    }

    pub fn identity_count(&self) -> usize {
        self.credentials.len()
    }

    fn check_loc(&self, l: LocationId) -> Result<(), GraphError> {
        if l.index() < self.placements.len() {
            Ok(())
        } else {
            Err(GraphError::UnknownLocation(l))
        }
    }

    fn check_id(&self, i: IdentityId) -> Result<(), GraphError> {
        if i.index() < self.credentials.len() {
            Ok(())
        } else {
            Err(GraphError::UnknownIdentity(i))
        }
    }

    pub fn add_edge(&mut self, from: LocationId, to: LocationId) -> Result<(), GraphError> {
        self.check_loc(from)?;
        self.check_loc(to)?;
        self.edges.insert((from, to));
        Ok(())
    }

    pub fn edges(&self) -> &BTreeSet<(LocationId, LocationId)> {
        &self.edges
    }

    /// Locations that occur as an endpoint of some edge.
    pub fn nodes(&self) -> BTreeSet<LocationId> {
        self.edges.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    pub fn is_node(&self, l: LocationId) -> bool {
        self.edges.iter().any(|&(a, b)| a == l || b == l)
    }

    /// Places `who` at `at`. An identity can only be placed once.
    pub fn place(&mut self, who: IdentityId, at: LocationId) -> Result<(), GraphError> {
        self.check_loc(at)?;
        self.check_id(who)?;
        if let Some(l) = self.location_of(who) {
            return Err(GraphError::AlreadyPlaced(who, l));
        }
        insert_sorted(&mut self.placements[at.index()], who);
        Ok(())
    }

    pub fn placement(&self, l: LocationId) -> &[IdentityId] {
        &self.placements[l.index()]
    }

    pub fn is_at(&self, who: IdentityId, l: LocationId) -> bool {
        self.placements[l.index()].binary_search(&who).is_ok()
    }

    pub fn location_of(&self, who: IdentityId) -> Option<LocationId> {
        self.placements
            .iter()
            .position(|p| p.binary_search(&who).is_ok())
            .map(|i| LocationId(i as u16))
    }

    /// Identities placed anywhere in the graph.
    pub fn placed_identities(&self) -> BTreeSet<IdentityId> {
        self.placements.iter().flatten().copied().collect()
    }

    /// Every identity occurs in at most one placement and at most once there.
    pub fn placements_unique(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.placements.iter().flatten().all(|id| seen.insert(*id))
    }

    pub fn credentials(&self, who: IdentityId) -> &BTreeSet<String> {
        &self.credentials[who.index()]
    }

    pub fn roles(&self, who: IdentityId) -> &BTreeSet<String> {
        &self.roles[who.index()]
    }

    pub fn grant_credential(&mut self, who: IdentityId, token: &str) -> Result<(), GraphError> {
        self.check_id(who)?;
        self.credentials[who.index()].insert(token.into());
        Ok(())
    }

    pub fn grant_role(&mut self, who: IdentityId, token: &str) -> Result<(), GraphError> {
        self.check_id(who)?;
        self.roles[who.index()].insert(token.into());
        Ok(())
    }

    pub fn value(&self, l: LocationId) -> Option<&str> {
        self.values[l.index()].as_deref()
    }

    pub fn set_value(&mut self, l: LocationId, value: Option<&str>) -> Result<(), GraphError> {
        self.check_loc(l)?;
        self.values[l.index()] = value.map(String::from);
        Ok(())
    }

    /// Moves `who` from `from` to `to` when it is at `from` and not yet at
    /// `to`; otherwise the graph is left as it is.
    pub(crate) fn relocate(&mut self, who: IdentityId, from: LocationId, to: LocationId) {
        if !self.is_at(who, from) || self.is_at(who, to) {
            return;
        }
        self.placements[from.index()].retain(|x| *x != who);
        insert_sorted(&mut self.placements[to.index()], who);
    }
}

fn insert_sorted(v: &mut Vec<IdentityId>, id: IdentityId) {
    if let Err(pos) = v.binary_search(&id) {
        v.insert(pos, id);
    }
}
