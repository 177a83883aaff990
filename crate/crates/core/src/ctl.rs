//! CTL formulas and their fixpoint evaluation over a [`KripkeModel`].
//!
//! Every temporal operator is computed from its set-transformer:
//!
//! | operator   | definition                          |
//! |------------|-------------------------------------|
//! | `EX f`     | states with some successor in `f`   |
//! | `AX f`     | states whose successors all lie in `f` (vacuously true for deadlocks) |
//! | `EF f`     | `lfp Z. f ∪ EX Z`                   |
//! | `AF f`     | `lfp Z. f ∪ AX Z`                   |
//! | `EG f`     | `gfp Z. f ∩ EX Z`                   |
//! | `AG f`     | `gfp Z. f ∩ AX Z`                   |
//! | `E[f U g]` | `lfp Z. g ∪ (f ∩ EX Z)`             |
//! | `A[f U g]` | `lfp Z. g ∪ (f ∩ AX Z)`             |
//! | `E[f R g]` | `gfp Z. g ∩ (f ∪ EX Z)`             |
//! | `A[f R g]` | `gfp Z. g ∩ (f ∪ AX Z)`             |
//!
//! Because `AX` of a state without successors is true, `AG f` holds at a
//! deadlocked state exactly when `f` does.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::fixpoint::{gfp_iterate, lfp_iterate, FixpointError, StateSet};
use crate::kripke::KripkeModel;
use crate::model::Model;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CtlFormula {
    Pred(String),
    Not(Box<CtlFormula>),
    And(Box<CtlFormula>, Box<CtlFormula>),
    Or(Box<CtlFormula>, Box<CtlFormula>),
    EX(Box<CtlFormula>),
    AX(Box<CtlFormula>),
    EF(Box<CtlFormula>),
    AF(Box<CtlFormula>),
    EG(Box<CtlFormula>),
    AG(Box<CtlFormula>),
    EU(Box<CtlFormula>, Box<CtlFormula>),
    AU(Box<CtlFormula>, Box<CtlFormula>),
    ER(Box<CtlFormula>, Box<CtlFormula>),
    AR(Box<CtlFormula>, Box<CtlFormula>),
}

impl CtlFormula {
    pub fn pred(name: &str) -> Self {
        CtlFormula::Pred(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        CtlFormula::Not(Box::new(self))
    }

    pub fn and(self, other: Self) -> Self {
        CtlFormula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Self) -> Self {
        CtlFormula::Or(Box::new(self), Box::new(other))
    }

    pub fn ex(self) -> Self {
        CtlFormula::EX(Box::new(self))
    }

    pub fn ax(self) -> Self {
        CtlFormula::AX(Box::new(self))
    }

    pub fn ef(self) -> Self {
        CtlFormula::EF(Box::new(self))
    }

    pub fn af(self) -> Self {
        CtlFormula::AF(Box::new(self))
    }

    pub fn eg(self) -> Self {
        CtlFormula::EG(Box::new(self))
    }

    pub fn ag(self) -> Self {
        CtlFormula::AG(Box::new(self))
    }

    pub fn eu(self, until: Self) -> Self {
        CtlFormula::EU(Box::new(self), Box::new(until))
    }

    pub fn au(self, until: Self) -> Self {
        CtlFormula::AU(Box::new(self), Box::new(until))
    }

    pub fn er(self, release: Self) -> Self {
        CtlFormula::ER(Box::new(self), Box::new(release))
    }

    pub fn ar(self, release: Self) -> Self {
        CtlFormula::AR(Box::new(self), Box::new(release))
    }
}

/// Prints in the surface syntax accepted by the formula parser; binary
/// connectives are always parenthesised.
impl fmt::Display for CtlFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CtlFormula::*;
        match self {
            Pred(n) => f.write_str(n),
            Not(a) => write!(f, "!{a}"),
            And(a, b) => write!(f, "({a} & {b})"),
            Or(a, b) => write!(f, "({a} | {b})"),
            EX(a) => write!(f, "EX {a}"),
            AX(a) => write!(f, "AX {a}"),
            EF(a) => write!(f, "EF {a}"),
            AF(a) => write!(f, "AF {a}"),
            EG(a) => write!(f, "EG {a}"),
            AG(a) => write!(f, "AG {a}"),
            EU(a, b) => write!(f, "E[{a} U {b}]"),
            AU(a, b) => write!(f, "A[{a} U {b}]"),
            ER(a, b) => write!(f, "E[{a} R {b}]"),
            AR(a, b) => write!(f, "A[{a} R {b}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CtlError {
    UnknownPredicate(String),
    /// The named predicate takes a parameter and cannot be used directly.
    ParameterizedPredicate(String),
    Fixpoint(FixpointError),
    /// `AG f` and the complement of `EF !f` disagreed.
    DualityViolation,
    /// Trace extraction was asked for a formula of the wrong shape.
    ShapeMismatch {
        expected: &'static str,
    },
    /// Witness requested but the formula fails, or counterexample requested
    /// but it holds.
    VerdictMismatch,
}

impl fmt::Display for CtlError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CtlError::UnknownPredicate(n) => write!(f, "unknown predicate {n}"),
            CtlError::ParameterizedPredicate(n) => {
                write!(
                    f,
                    "predicate {n} takes a parameter; define a closed predicate to use it in a formula"
                )
            }
            CtlError::Fixpoint(e) => write!(f, "{e}"),
            CtlError::DualityViolation => f.write_str("AG/EF duality violated"),
            CtlError::ShapeMismatch { expected } => write!(f, "formula must have the shape {expected}"),
            CtlError::VerdictMismatch => f.write_str("the verdict does not admit the requested trace"),
        }
    }
}

impl From<FixpointError> for CtlError {
    fn from(e: FixpointError) -> Self {
        CtlError::Fixpoint(e)
    }
}

/// One fixpoint computation performed during evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixpointStat {
    pub operator: &'static str,
    pub iterations: usize,
    pub universe: usize,
    /// Whether the result is the least (true) or greatest fixpoint.
    pub least: bool,
}

/// Evaluates formulas over one Kripke model, recording fixpoint statistics.
pub struct CtlEvaluator<'a> {
    k: &'a KripkeModel,
    m: &'a Model,
    stats: Vec<FixpointStat>,
    check_duality: bool,
}

impl<'a> CtlEvaluator<'a> {
    pub fn new(k: &'a KripkeModel, m: &'a Model) -> Self {
        CtlEvaluator {
            k,
            m,
            stats: Vec::new(),
            check_duality: cfg!(debug_assertions),
        }
    }

    /// Cross-check every `AG` result against `EF` of the negation.
    pub fn with_duality_check(mut self, on: bool) -> Self {
        self.check_duality = on;
        self
    }

    pub fn stats(&self) -> &[FixpointStat] {
        &self.stats
    }

    pub fn ex(&self, z: &StateSet) -> StateSet {
        let n = self.k.len();
        StateSet::from_indices(
            n,
            (0..n).filter(|&s| self.k.successors(s).iter().any(|(_, t)| z.contains(*t))),
        )
    }

    pub fn ax(&self, z: &StateSet) -> StateSet {
        let n = self.k.len();
        StateSet::from_indices(
            n,
            (0..n).filter(|&s| self.k.successors(s).iter().all(|(_, t)| z.contains(*t))),
        )
    }

    fn lfp(&mut self, operator: &'static str, t: impl Fn(&StateSet) -> StateSet) -> Result<StateSet, CtlError> {
        let fp = lfp_iterate(self.k.len(), t)?;
        self.stats.push(FixpointStat {
            operator,
            iterations: fp.iterations,
            universe: self.k.len(),
            least: true,
        });
        Ok(fp.set)
    }

    fn gfp(&mut self, operator: &'static str, t: impl Fn(&StateSet) -> StateSet) -> Result<StateSet, CtlError> {
        let fp = gfp_iterate(self.k.len(), t)?;
        self.stats.push(FixpointStat {
            operator,
            iterations: fp.iterations,
            universe: self.k.len(),
            least: false,
        });
        Ok(fp.set)
    }

    pub fn predicate_set(&self, name: &str) -> Result<StateSet, CtlError> {
        let idx = self
            .m
            .predicate_named(name)
            .ok_or_else(|| CtlError::UnknownPredicate(name.into()))?;
        if self.m.predicates[idx].param.is_some() {
            return Err(CtlError::ParameterizedPredicate(name.into()));
        }
        let n = self.k.len();
        Ok(StateSet::from_indices(
            n,
            (0..n).filter(|&s| self.m.eval_named(idx, None, self.k.graph(s))),
        ))
    }

    /// The set of states satisfying `f`.
    pub fn eval(&mut self, f: &CtlFormula) -> Result<StateSet, CtlError> {
        use CtlFormula::*;
        Ok(match f {
            Pred(name) => self.predicate_set(name)?,
            Not(a) => self.eval(a)?.complement(),
            And(a, b) => self.eval(a)?.intersection(&self.eval(b)?),
            Or(a, b) => self.eval(a)?.union(&self.eval(b)?),
            EX(a) => {
                let s = self.eval(a)?;
                self.ex(&s)
            }
            AX(a) => {
                let s = self.eval(a)?;
                self.ax(&s)
            }
            EF(a) => {
                let s = self.eval(a)?;
                self.ef_set(&s)?
            }
            AF(a) => {
                let s = self.eval(a)?;
                self.lfp("AF", |z| s.union(&self_ax(self.k, z)))?
            }
            EG(a) => {
                let s = self.eval(a)?;
                self.gfp("EG", |z| s.intersection(&self_ex(self.k, z)))?
            }
            AG(a) => {
                let s = self.eval(a)?;
                let sat = self.gfp("AG", |z| s.intersection(&self_ax(self.k, z)))?;
                if self.check_duality {
                    let ef_not = self.ef_set(&s.complement())?;
                    if sat != ef_not.complement() {
                        return Err(CtlError::DualityViolation);
                    }
                }
                sat
            }
            EU(a, b) => {
                let (s1, s2) = (self.eval(a)?, self.eval(b)?);
                self.lfp("EU", |z| s2.union(&s1.intersection(&self_ex(self.k, z))))?
            }
            AU(a, b) => {
                let (s1, s2) = (self.eval(a)?, self.eval(b)?);
                self.lfp("AU", |z| s2.union(&s1.intersection(&self_ax(self.k, z))))?
            }
            ER(a, b) => {
                let (s1, s2) = (self.eval(a)?, self.eval(b)?);
                self.gfp("ER", |z| s2.intersection(&s1.union(&self_ex(self.k, z))))?
            }
            AR(a, b) => {
                let (s1, s2) = (self.eval(a)?, self.eval(b)?);
                self.gfp("AR", |z| s2.intersection(&s1.union(&self_ax(self.k, z))))?
            }
        })
    }

    fn ef_set(&mut self, s: &StateSet) -> Result<StateSet, CtlError> {
        let k = self.k;
        self.lfp("EF", |z| s.union(&self_ex(k, z)))
    }
}

fn self_ex(k: &KripkeModel, z: &StateSet) -> StateSet {
    let n = k.len();
    StateSet::from_indices(
        n,
        (0..n).filter(|&s| k.successors(s).iter().any(|(_, t)| z.contains(*t))),
    )
}

fn self_ax(k: &KripkeModel, z: &StateSet) -> StateSet {
    let n = k.len();
    StateSet::from_indices(
        n,
        (0..n).filter(|&s| k.successors(s).iter().all(|(_, t)| z.contains(*t))),
    )
}

/// The satisfying subset of the model's states.
pub fn eval_ctl(k: &KripkeModel, f: &CtlFormula, m: &Model) -> Result<StateSet, CtlError> {
    CtlEvaluator::new(k, m).eval(f)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub sat: StateSet,
}

/// `k ⊢ f`: every initial state satisfies `f`.
pub fn check(k: &KripkeModel, f: &CtlFormula, m: &Model) -> Result<Verdict, CtlError> {
    let sat = eval_ctl(k, f, m)?;
    let holds = k.init_set().is_subset(&sat);
    Ok(Verdict { holds, sat })
}
