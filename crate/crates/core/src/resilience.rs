//! Resilient maps `f : B^n -> B` and an exhaustive resiliency checker.
//!
//! A map is `t`-resilient here when fixing any set `J` of at most `t`
//! coordinates (with `|J| < n`) to any values leaves the restriction
//! balanced: every element of `B` is hit equally often.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::ring::{GaloisRing, RingElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResilienceError {
    #[error("linear coefficient {0} is not a unit")]
    NonUnit(String),
    #[error("expected {expected} inputs, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("table has no entry for input index {0}")]
    MissingEntry(u64),
    #[error("|B|^n = {size} exceeds the enumeration cap {cap}")]
    CapExceeded { size: u128, cap: u64 },
}

/// `alpha_b`: lexicographic index of a vector of `B^n`, coordinate 0 least significant.
pub fn vector_index(x: &[RingElement]) -> u64 {
    match x.first() {
        None => 0,
        Some(first) => {
            let size = first.ring().size();
            x.iter().rev().fold(0u64, |acc, e| acc * size + e.index())
        }
    }
}

pub fn vector_from_index(ring: &GaloisRing, n: usize, mut index: u64) -> Vec<RingElement> {
    let size = ring.size();
    (0..n)
        .map(|_| {
            let e = ring.element_from_index(index % size);
            index /= size;
            e
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapKind {
    /// `x -> sum c_j x_j` with unit coefficients.
    Linear(Vec<RingElement>),
    /// Explicit values keyed by `alpha_b(x)`.
    Table(BTreeMap<u64, RingElement>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResilientMap {
    pub ring: GaloisRing,
    pub n: usize,
    pub kind: MapKind,
    pub claimed_t: usize,
}

impl ResilientMap {
    pub fn linear(
        ring: &GaloisRing,
        coeffs: Vec<RingElement>,
        claimed_t: usize,
    ) -> Result<Self, ResilienceError> {
        if let Some(bad) = coeffs.iter().find(|c| !c.is_unit()) {
            return Err(ResilienceError::NonUnit(bad.to_string()));
        }
        Ok(ResilientMap {
            ring: ring.clone(),
            n: coeffs.len(),
            kind: MapKind::Linear(coeffs),
            claimed_t,
        })
    }

    pub fn table(
        ring: &GaloisRing,
        n: usize,
        table: BTreeMap<u64, RingElement>,
        claimed_t: usize,
    ) -> Self {
        ResilientMap {
            ring: ring.clone(),
            n,
            kind: MapKind::Table(table),
            claimed_t,
        }
    }

    /// Tabulates `f` over all of `B^n`.
    pub fn to_table(&self) -> Result<ResilientMap, ResilienceError> {
        let total = self.ring.size().pow(self.n as u32);
        let mut table = BTreeMap::new();
        for idx in 0..total {
            let x = vector_from_index(&self.ring, self.n, idx);
            table.insert(idx, self.evaluate(&x)?);
        }
        Ok(ResilientMap::table(
            &self.ring,
            self.n,
            table,
            self.claimed_t,
        ))
    }

    pub fn evaluate(&self, x: &[RingElement]) -> Result<RingElement, ResilienceError> {
        if x.len() != self.n {
            return Err(ResilienceError::Arity {
                expected: self.n,
                got: x.len(),
            });
        }
        match &self.kind {
            MapKind::Linear(coeffs) => Ok(coeffs
                .iter()
                .zip(x)
                .fold(self.ring.zero(), |acc, (c, xi)| &acc + &(c * xi))),
            MapKind::Table(table) => {
                let idx = vector_index(x);
                table
                    .get(&idx)
                    .cloned()
                    .ok_or(ResilienceError::MissingEntry(idx))
            }
        }
    }
}

impl fmt::Display for ResilientMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            MapKind::Linear(coeffs) => {
                write!(f, "linear:")?;
                for (i, c) in coeffs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{c}")?;
                }
                Ok(())
            }
            MapKind::Table(table) => {
                write!(f, "table:")?;
                for (i, v) in table.values().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

/// Outcome of [`check_resilient`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResilienceReport {
    pub t: usize,
    pub passed: bool,
    /// Number of coordinate subsets examined.
    pub subsets_checked: usize,
    /// Number of `(J, fixing)` restrictions examined.
    pub restrictions_checked: u64,
    /// First failing subset and fixing (as element indices), if any.
    pub failure: Option<(Vec<usize>, Vec<u64>)>,
}

pub fn check_resilient(
    f: &ResilientMap,
    t: usize,
    cap: u64,
) -> Result<ResilienceReport, ResilienceError> {
    let n = f.n;
    let size = f.ring.size();
    let total = (size as u128).pow(n as u32);
    if total > cap as u128 {
        return Err(ResilienceError::CapExceeded { size: total, cap });
    }
    let values: Vec<u64> = (0..total as u64)
        .map(|idx| {
            f.evaluate(&vector_from_index(&f.ring, n, idx))
                .map(|v| v.index())
        })
        .collect::<Result<_, _>>()?;

    let mut report = ResilienceReport {
        t,
        passed: true,
        subsets_checked: 0,
        restrictions_checked: 0,
        failure: None,
    };
    let max_fixed = t.min(n.saturating_sub(1));
    for width in 0..=max_fixed {
        for subset in (0..n).combinations(width) {
            report.subsets_checked += 1;
            let free = n - width;
            let expected = size.pow(free as u32) / size;
            // group inputs by their values on J
            let mut counts: BTreeMap<Vec<u64>, Vec<u64>> = BTreeMap::new();
            for (idx, &v) in values.iter().enumerate() {
                let digits = digits_of(idx as u64, size, n);
                let key: Vec<u64> = subset.iter().map(|&j| digits[j]).collect();
                counts.entry(key).or_insert_with(|| vec![0; size as usize])[v as usize] += 1;
            }
            for (fixing, hist) in counts {
                report.restrictions_checked += 1;
                if hist.iter().any(|&c| c != expected) {
                    report.passed = false;
                    report.failure = Some((subset.clone(), fixing));
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

fn digits_of(mut idx: u64, base: u64, n: usize) -> Vec<u64> {
    (0..n)
        .map(|_| {
            let d = idx % base;
            idx /= base;
            d
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: u64 = 1 << 20;

    fn gr42() -> GaloisRing {
        GaloisRing::new(2, 2, 2).unwrap()
    }

    #[test]
    fn linear_evaluation() {
        let b = gr42();
        let id = ResilientMap::linear(&b, vec![b.one()], 0).unwrap();
        let a = b.parse_element("3,1").unwrap();
        assert_eq!(id.evaluate(std::slice::from_ref(&a)).unwrap(), a);
        let sum = ResilientMap::linear(&b, vec![b.one(), b.one()], 1).unwrap();
        let c = b.x();
        assert_eq!(sum.evaluate(&[a.clone(), c.clone()]).unwrap(), &a + &c);
        assert!(matches!(
            sum.evaluate(&[a]),
            Err(ResilienceError::Arity { .. })
        ));
    }

    #[test]
    fn non_unit_rejected() {
        let b = gr42();
        assert!(matches!(
            ResilientMap::linear(&b, vec![b.from_int(2)], 0),
            Err(ResilienceError::NonUnit(_))
        ));
    }

    #[test]
    fn table_round_trip() {
        let b = gr42();
        let id = ResilientMap::linear(&b, vec![b.one()], 1).unwrap();
        let table = id.to_table().unwrap();
        for x in b.elements() {
            assert_eq!(table.evaluate(std::slice::from_ref(&x)).unwrap(), x);
        }
        let partial = ResilientMap::table(&b, 1, BTreeMap::new(), 0);
        assert_eq!(
            partial.evaluate(&[b.zero()]).unwrap_err(),
            ResilienceError::MissingEntry(0)
        );
    }

    #[test]
    fn identity_is_balanced() {
        let b = gr42();
        let id = ResilientMap::linear(&b, vec![b.one()], 0).unwrap();
        let rep = check_resilient(&id, 0, CAP).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.subsets_checked, 1);
    }

    #[test]
    fn constant_fails_globally() {
        let b = gr42();
        let table = (0..b.size()).map(|i| (i, b.zero())).collect();
        let f = ResilientMap::table(&b, 1, table, 0);
        let rep = check_resilient(&f, 0, CAP).unwrap();
        assert!(!rep.passed);
        assert_eq!(rep.failure, Some((vec![], vec![])));
    }

    #[test]
    fn sum_on_gr42_squared_is_1_resilient() {
        let b = gr42();
        let f = ResilientMap::linear(&b, vec![b.one(), b.one()], 1).unwrap();
        let rep = check_resilient(&f, 1, CAP).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.subsets_checked, 3);
        assert_eq!(rep.restrictions_checked, 1 + 16 + 16);
    }

    #[test]
    fn projection_is_not_1_resilient() {
        // f(a, b) = a: fixing coordinate 0 makes it constant
        let b = GaloisRing::new(2, 2, 1).unwrap();
        let table = (0..16u64)
            .map(|i| (i, b.element_from_index(i % 4)))
            .collect();
        let f = ResilientMap::table(&b, 2, table, 1);
        assert!(check_resilient(&f, 0, CAP).unwrap().passed);
        let rep = check_resilient(&f, 1, CAP).unwrap();
        assert!(!rep.passed);
        assert_eq!(rep.failure.unwrap().0, vec![0]);
    }

    #[test]
    fn cap_enforced() {
        let b = gr42();
        let f = ResilientMap::linear(&b, vec![b.one(); 3], 1).unwrap();
        assert!(matches!(
            check_resilient(&f, 1, 100),
            Err(ResilienceError::CapExceeded { .. })
        ));
    }
}
