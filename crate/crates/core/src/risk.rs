//! One-person versus two-person cockpit rule: probability that a
//! malicious party gets control.

use core::fmt;

/// `p0`: a single pilot is an insider. `p1`: an outside terrorist gets in
/// under the one-person rule. `p2`: the same under the two-person rule.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RiskInputs {
    pub p0: f64,
    pub p1: f64,
    pub p2: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recommendation {
    OnePerson,
    TwoPerson,
    Tie,
}

impl Recommendation {
    pub fn as_str(self) -> &'static str {
        match self {
            Recommendation::OnePerson => "one_person",
            Recommendation::TwoPerson => "two_person",
            Recommendation::Tie => "tie",
        }
    }
}

impl fmt::Display for Recommendation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RiskReport {
    pub one_person: f64,
    pub two_person: f64,
    pub recommend: Recommendation,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RiskError {
    pub name: &'static str,
    pub value: f64,
}

impl fmt::Display for RiskError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {} is not a probability in [0, 1]", self.name, self.value)
    }
}

/// Inclusion–exclusion for independent events: `p0 + p1 - p0*p1`.
pub fn one_person(p0: f64, p1: f64) -> f64 {
    p0 + p1 - p0 * p1
}

/// Only an outside attack remains: the insider alone can no longer act.
pub fn two_person(p2: f64) -> f64 {
    p2
}

pub fn risk_compare(r: RiskInputs) -> Result<RiskReport, RiskError> {
    for (name, value) in [("p0", r.p0), ("p1", r.p1), ("p2", r.p2)] {
        if !(0.0..=1.0).contains(&value) {
            return Err(RiskError { name, value });
        }
    }
    let one = one_person(r.p0, r.p1);
    let two = two_person(r.p2);
    let recommend = if one < two {
        Recommendation::OnePerson
    } else if two < one {
        Recommendation::TwoPerson
    } else {
        Recommendation::Tie
    };
    Ok(RiskReport {
        one_person: one,
        two_person: two,
        recommend,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = risk_compare(RiskInputs {
            p0: 0.0,
            p1: 0.0,
            p2: 0.5,
        })
        .unwrap();
        assert_eq!(r.one_person, 0.0);
        assert_eq!(r.two_person, 0.5);
        assert_eq!(r.recommend, Recommendation::OnePerson);
        let r = risk_compare(RiskInputs {
            p0: 0.001,
            p1: 0.002,
            p2: 0.01,
        })
        .unwrap();
        assert!((r.one_person - 0.002998).abs() < 1e-15);
        assert_eq!(r.recommend, Recommendation::OnePerson);
    }

    #[test]
    fn tie_on_equality() {
        let r = risk_compare(RiskInputs {
            p0: 0.0,
            p1: 0.25,
            p2: 0.25,
        })
        .unwrap();
        assert_eq!(r.recommend, Recommendation::Tie);
    }

    #[test]
    fn rejects_out_of_range() {
        let e = risk_compare(RiskInputs {
            p0: 1.5,
            p1: 0.0,
            p2: 0.0,
        })
        .unwrap_err();
        assert_eq!(e.name, "p0");
        assert!(risk_compare(RiskInputs {
            p0: 0.0,
            p1: f64::NAN,
            p2: 0.0
        })
        .is_err());
        assert!(risk_compare(RiskInputs {
            p0: 0.0,
            p1: 0.0,
            p2: -0.0001
        })
        .is_err());
    }
}
