//! State sets and least/greatest fixpoint iteration.

use alloc::vec::Vec;
use core::fmt;

use fixedbitset::FixedBitSet;

/// A subset of the states of a Kripke model, as a bit-vector over state
/// indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    bits: FixedBitSet,
}

impl StateSet {
    pub fn empty(universe: usize) -> Self {
        StateSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        StateSet { bits }
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = StateSet::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, i: usize) {
        self.bits.insert(i);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        StateSet { bits }
    }

    pub fn intersection(&self, other: &StateSet) -> StateSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        StateSet { bits }
    }

    pub fn complement(&self) -> StateSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        StateSet { bits }
    }

    pub fn difference(&self, other: &StateSet) -> StateSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        StateSet { bits }
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.bits.is_subset(&other.bits)
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixpointError {
    /// No fixpoint after `|universe| + 1` applications.
    NonConvergence { iterations: usize },
    /// The iteration chain or a sampled pair showed the transformer is not
    /// monotone.
    MonotonicityViolation,
    /// The transformer returned a set over a different universe.
    UniverseMismatch,
}

impl fmt::Display for FixpointError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixpointError::NonConvergence { iterations } => write!(
                f,
                "no fixpoint after {iterations} iterations; the transformer is not monotone"
            ),
            FixpointError::MonotonicityViolation => f.write_str("set transformer is not monotone"),
            FixpointError::UniverseMismatch => f.write_str("set transformer changed the universe"),
        }
    }
}

/// Result of a fixpoint iteration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixpoint {
    pub set: StateSet,
    /// Number of transformer applications, including the final one that
    /// confirmed the fixpoint.
    pub iterations: usize,
}

/// Number of random subset pairs sampled by the debug-build monotonicity
/// tripwire.
pub const MONOTONICITY_SAMPLES: usize = 32;

fn iterate<T>(universe: usize, start: StateSet, ascending: bool, t: &T) -> Result<Fixpoint, FixpointError>
where
    T: Fn(&StateSet) -> StateSet,
{
    #[cfg(debug_assertions)]
    spot_check_monotone(universe, t)?;

    let bound = universe + 1;
    let mut current = start;
    for i in 1..=bound {
        let next = t(&current);
        if next.universe() != universe {
            return Err(FixpointError::UniverseMismatch);
        }
        if next == current {
            return Ok(Fixpoint {
                set: current,
                iterations: i,
            });
        }
        let chained = if ascending {
            current.is_subset(&next)
        } else {
            next.is_subset(&current)
        };
        if !chained {
            return Err(FixpointError::MonotonicityViolation);
        }
        current = next;
    }
    Err(FixpointError::NonConvergence { iterations: bound })
}

/// Least fixpoint of `t` by iteration from the empty set.
pub fn lfp_iterate<T>(universe: usize, t: T) -> Result<Fixpoint, FixpointError>
where
    T: Fn(&StateSet) -> StateSet,
{
    iterate(universe, StateSet::empty(universe), true, &t)
}

/// Greatest fixpoint of `t` by iteration from the full universe.
pub fn gfp_iterate<T>(universe: usize, t: T) -> Result<Fixpoint, FixpointError>
where
    T: Fn(&StateSet) -> StateSet,
{
    iterate(universe, StateSet::full(universe), false, &t)
}

#[cfg(debug_assertions)]
fn spot_check_monotone<T>(universe: usize, t: &T) -> Result<(), FixpointError>
where
    T: Fn(&StateSet) -> StateSet,
{
    use rand::rngs::SmallRng;
    use rand::{Rng, SeedableRng};

    if universe == 0 {
        return Ok(());
    }
    let mut rng = SmallRng::seed_from_u64(0x5eed_f1c5 ^ universe as u64);
    for _ in 0..MONOTONICITY_SAMPLES {
        let mut small = StateSet::empty(universe);
        let mut large = StateSet::empty(universe);
        for i in 0..universe {
            match rng.random_range(0..3u8) {
                0 => {}
                1 => large.insert(i),
                _ => {
                    small.insert(i);
                    large.insert(i);
                }
            }
        }
        if !t(&small).is_subset(&t(&large)) {
            return Err(FixpointError::MonotonicityViolation);
        }
    }
    Ok(())
}

/// Iterates `t` from the empty set and returns the whole chain up to the
/// fixpoint (bounded by `|universe| + 1` steps). Used to inspect chains.
pub fn lfp_chain<T>(universe: usize, t: T) -> Vec<StateSet>
where
    T: Fn(&StateSet) -> StateSet,
{
    let mut chain = Vec::new();
    let mut current = StateSet::empty(universe);
    chain.push(current.clone());
    for _ in 0..=universe {
        let next = t(&current);
        if next == current {
            break;
        }
        chain.push(next.clone());
        current = next;
    }
    chain
}
