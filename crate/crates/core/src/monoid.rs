//! Exponent monoids: finite commutative monoids given by a Cayley table and
//! a total order, and the free commutative monoid `N^k` under graded lex.

use std::cmp::Ordering;
use std::fmt;

use crate::multiindex::MultiIndex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonoidError {
    #[error("element {0} does not belong to the monoid")]
    OutOfRange(String),
    #[error("invalid monoid: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonoidElem {
    Index(usize),
    Multi(MultiIndex),
}

impl fmt::Display for MonoidElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Index(i) => write!(f, "{i}"),
            Self::Multi(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonoidSpec {
    Finite {
        size: usize,
        identity: usize,
        cayley: Vec<Vec<usize>>,
        /// Elements listed from least to greatest.
        order: Vec<usize>,
        names: Option<Vec<String>>,
    },
    Free {
        arity: usize,
    },
}

/// Violations found by [`MonoidSpec::validate`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MonoidReport {
    pub violations: Vec<String>,
}

impl MonoidReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl MonoidSpec {
    pub fn free(arity: usize) -> Self {
        Self::Free { arity }
    }

    /// A finite monoid, validated. Names default to the indices.
    pub fn finite(
        identity: usize,
        cayley: Vec<Vec<usize>>,
        order: Vec<usize>,
        names: Option<Vec<String>>,
    ) -> Result<Self, MonoidError> {
        let spec = Self::Finite { size: cayley.len(), identity, cayley, order, names };
        let report = spec.validate();
        if !report.is_valid() {
            return Err(MonoidError::Invalid(report.violations.join("; ")));
        }
        Ok(spec)
    }

    /// The two-element monoid `{0, g}` with `g + g = g`, ordered `0 < g`.
    pub fn two_element_idempotent() -> Self {
        Self::finite(0, vec![vec![0, 1], vec![1, 1]], vec![0, 1], Some(vec!["0".into(), "g".into()]))
            .expect("valid table")
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Self::Finite { .. })
    }

    pub fn identity(&self) -> MonoidElem {
        match self {
            Self::Finite { identity, .. } => MonoidElem::Index(*identity),
            Self::Free { arity } => MonoidElem::Multi(MultiIndex::zero(*arity)),
        }
    }

    pub fn contains(&self, a: &MonoidElem) -> bool {
        match (self, a) {
            (Self::Finite { size, .. }, MonoidElem::Index(i)) => i < size,
            (Self::Free { arity }, MonoidElem::Multi(m)) => m.arity() == *arity,
            _ => false,
        }
    }

    fn check(&self, a: &MonoidElem) -> Result<(), MonoidError> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(MonoidError::OutOfRange(a.to_string()))
        }
    }

    pub fn op(&self, a: &MonoidElem, b: &MonoidElem) -> Result<MonoidElem, MonoidError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.op_unchecked(a, b))
    }

    pub(crate) fn op_unchecked(&self, a: &MonoidElem, b: &MonoidElem) -> MonoidElem {
        match (self, a, b) {
            (Self::Finite { cayley, .. }, MonoidElem::Index(i), MonoidElem::Index(j)) => {
                MonoidElem::Index(cayley[*i][*j])
            }
            (Self::Free { .. }, MonoidElem::Multi(f), MonoidElem::Multi(g)) => {
                MonoidElem::Multi(f.add(g).expect("same arity"))
            }
            _ => panic!("element kind does not match monoid"),
        }
    }

    /// All pairs `(d, e)` with `d e = c`.
    pub fn factorizations(&self, c: &MonoidElem) -> Result<Vec<(MonoidElem, MonoidElem)>, MonoidError> {
        self.check(c)?;
        Ok(match (self, c) {
            (Self::Finite { size, cayley, .. }, MonoidElem::Index(c)) => (0..*size)
                .flat_map(|d| (0..*size).map(move |e| (d, e)))
                .filter(|&(d, e)| cayley[d][e] == *c)
                .map(|(d, e)| (MonoidElem::Index(d), MonoidElem::Index(e)))
                .collect(),
            (Self::Free { .. }, MonoidElem::Multi(f)) => {
                let mut ds = f.divisors();
                ds.sort();
                ds.into_iter()
                    .map(|d| {
                        let e = f.sub(&d).expect("divisor");
                        (MonoidElem::Multi(d), MonoidElem::Multi(e))
                    })
                    .collect()
            }
            _ => unreachable!("checked"),
        })
    }

    /// The well-order `⪯`.
    pub fn cmp(&self, a: &MonoidElem, b: &MonoidElem) -> Ordering {
        match (self, a, b) {
            (Self::Finite { order, .. }, MonoidElem::Index(i), MonoidElem::Index(j)) => {
                let rank = |x: usize| order.iter().position(|&o| o == x).expect("order is a permutation");
                rank(*i).cmp(&rank(*j))
            }
            (Self::Free { .. }, MonoidElem::Multi(f), MonoidElem::Multi(g)) => f.graded_lex(g),
            _ => panic!("element kind does not match monoid"),
        }
    }

    /// Checks closure, identity, associativity, commutativity and the order.
    pub fn validate(&self) -> MonoidReport {
        let mut v = Vec::new();
        let Self::Finite { size, identity, cayley, order, names } = self else {
            return MonoidReport::default();
        };
        let n = *size;
        if n == 0 {
            v.push("empty monoid".to_string());
            return MonoidReport { violations: v };
        }
        if cayley.len() != n || cayley.iter().any(|r| r.len() != n) {
            v.push(format!("cayley table must be {n}x{n}"));
            return MonoidReport { violations: v };
        }
        for (a, row) in cayley.iter().enumerate() {
            for (b, &c) in row.iter().enumerate() {
                if c >= n {
                    v.push(format!("closure: {a}*{b} = {c} is not an element"));
                }
            }
        }
        if !v.is_empty() {
            return MonoidReport { violations: v };
        }
        if *identity >= n {
            v.push(format!("identity {identity} out of range"));
        } else {
            for a in 0..n {
                if cayley[*identity][a] != a || cayley[a][*identity] != a {
                    v.push(format!("identity: {identity} does not fix {a}"));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if cayley[a][b] != cayley[b][a] {
                    v.push(format!("commutativity: {a}*{b} != {b}*{a}"));
                }
                for c in 0..n {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        v.push(format!("associativity: ({a}*{b})*{c} != {a}*({b}*{c})"));
                    }
                }
            }
        }
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            v.push("order must list every element exactly once".to_string());
        } else if order[0] != *identity {
            v.push("order must list the identity first".to_string());
        }
        if let Some(names) = names {
            if names.len() != n {
                v.push(format!("expected {n} element names"));
            }
        }
        MonoidReport { violations: v }
    }

    /// Elements in increasing order; for `N^k` those of weight at most `cap`.
    pub fn elements(&self, cap: u64) -> Vec<MonoidElem> {
        match self {
            Self::Finite { order, .. } => order.iter().map(|&i| MonoidElem::Index(i)).collect(),
            Self::Free { arity } => {
                MultiIndex::up_to_weight(*arity, cap).into_iter().map(MonoidElem::Multi).collect()
            }
        }
    }

    /// A generating set: all non-identity elements of a finite monoid, the
    /// unit vectors of `N^k`.
    pub fn generators(&self) -> Vec<MonoidElem> {
        match self {
            Self::Finite { order, identity, .. } => {
                order.iter().filter(|&&i| i != *identity).map(|&i| MonoidElem::Index(i)).collect()
            }
            Self::Free { arity } => (0..*arity).map(|i| MonoidElem::Multi(MultiIndex::unit(*arity, i))).collect(),
        }
    }

    pub fn name(&self, a: &MonoidElem) -> String {
        match (self, a) {
            (Self::Finite { names: Some(names), .. }, MonoidElem::Index(i)) => names[*i].clone(),
            _ => a.to_string(),
        }
    }

    /// Looks up an element by name, index or bracketed multi-index.
    pub fn parse_elem(&self, s: &str) -> Result<MonoidElem, MonoidError> {
        let t = s.trim();
        let elem = match self {
            Self::Finite { names, size, .. } => names
                .as_ref()
                .and_then(|ns| ns.iter().position(|n| n == t))
                .or_else(|| t.parse::<usize>().ok().filter(|i| i < size))
                .map(MonoidElem::Index),
            Self::Free { .. } => MultiIndex::parse(t).ok().map(MonoidElem::Multi),
        };
        elem.filter(|e| self.contains(e)).ok_or_else(|| MonoidError::OutOfRange(t.to_string()))
    }
}

impl MonoidElem {
    pub fn as_multi(&self) -> Option<&MultiIndex> {
        match self {
            Self::Multi(m) => Some(m),
            Self::Index(_) => None,
        }
    }
}
