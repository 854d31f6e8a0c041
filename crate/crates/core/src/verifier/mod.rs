//! Injectivity of `k -> e_k`, checked pair by pair with a constructive
//! witness and an independent full-row comparison, plus exact attack
//! probabilities.

mod attack;
mod tags;
mod witness;

pub use attack::{
    prob_impersonation, prob_substitution, substitution_given, AttackReport, MessageCell,
};
pub use tags::TagTable;
pub use witness::{
    classify_case, reason, Assertion, Case, CasePartition, WitnessBuilder, WitnessReport,
};

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::code::{AuthCode, CodeError, Key};

/// Default bound on `|K| * |S|` tag-table cells and on exhaustive pair counts.
pub const DEFAULT_CAP: u64 = 1 << 28;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("keys must differ (both {0})")]
    SameKey(u64),
    #[error("{what} = {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u64,
    },
    #[error("no source state separates keys {k0} and {k1}")]
    NoWitness { k0: u64, k1: u64 },
}

/// Full-row comparison, from a precomputed table when one fits in memory.
pub struct Oracle {
    table: Option<TagTable>,
}

impl Oracle {
    pub fn new(code: &AuthCode, cap: u64) -> Self {
        Oracle {
            table: TagTable::build(code, cap).ok(),
        }
    }

    pub fn from_table(table: TagTable) -> Self {
        Oracle { table: Some(table) }
    }

    pub fn table(&self) -> Option<&TagTable> {
        self.table.as_ref()
    }

    /// Index in `S` of the first state whose tags under `k0` and `k1` differ.
    pub fn first_difference(&self, code: &AuthCode, k0: u64, k1: u64) -> Option<usize> {
        match &self.table {
            Some(t) => t.first_difference(k0, k1),
            None => code.sources().iter().position(|s| {
                let a = code.encode(Key(k0), s).expect("valid key");
                let b = code.encode(Key(k1), s).expect("valid key");
                a != b
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Exhaustive,
    Sampled { count: u64, seed: u64 },
}

/// Constructive and total pair counts for one bucket.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub total: u64,
    pub constructive: u64,
}

impl Tally {
    fn add(&mut self, other: Tally) {
        self.total += other.total;
        self.constructive += other.constructive;
    }

    pub fn percent(&self) -> f64 {
        if self.total == 0 {
            100.0
        } else {
            100.0 * self.constructive as f64 / self.total as f64
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct InjectivityReport {
    pub pairs_examined: u64,
    pub per_case: BTreeMap<Case, Tally>,
    /// Keyed by the leaf the decision tree reached.
    pub per_planned: BTreeMap<Assertion, Tally>,
    /// Keyed by the label that produced the witness (fallback included).
    pub per_used: BTreeMap<Assertion, u64>,
    /// `(planned leaf, reason) -> count` for fallbacks.
    pub fallbacks: BTreeMap<(Assertion, String), u64>,
    /// First fallback pair seen for each `(leaf, reason)`.
    pub fallback_examples: BTreeMap<(Assertion, String), (u64, u64)>,
    pub collisions: Vec<(u64, u64)>,
    /// Pairs where the witness verdict and the oracle disagree.
    pub disagreements: Vec<(u64, u64)>,
}

impl InjectivityReport {
    pub fn zero_collisions(&self) -> bool {
        self.collisions.is_empty()
    }

    pub fn agreement(&self) -> bool {
        self.disagreements.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.zero_collisions() && self.agreement()
    }

    pub fn constructive(&self) -> Tally {
        let mut t = Tally::default();
        for v in self.per_case.values() {
            t.add(*v);
        }
        t
    }

    fn merge(mut self, other: InjectivityReport) -> InjectivityReport {
        self.pairs_examined += other.pairs_examined;
        for (k, v) in other.per_case {
            self.per_case.entry(k).or_default().add(v);
        }
        for (k, v) in other.per_planned {
            self.per_planned.entry(k).or_default().add(v);
        }
        for (k, v) in other.per_used {
            *self.per_used.entry(k).or_default() += v;
        }
        for (k, v) in other.fallbacks {
            *self.fallbacks.entry(k).or_default() += v;
        }
        for (k, v) in other.fallback_examples {
            let e = self.fallback_examples.entry(k).or_insert(v);
            *e = (*e).min(v);
        }
        self.collisions.extend(other.collisions);
        self.disagreements.extend(other.disagreements);
        self
    }

    fn record(&mut self, builder: &WitnessBuilder, oracle: &Oracle, k0: u64, k1: u64) {
        self.pairs_examined += 1;
        let rows_differ = oracle.first_difference(builder.code(), k0, k1).is_some();
        match builder.construct(Key(k0), Key(k1)) {
            Ok(w) => {
                let one = Tally {
                    total: 1,
                    constructive: w.constructive() as u64,
                };
                self.per_case.entry(w.case.case).or_default().add(one);
                self.per_planned.entry(w.planned).or_default().add(one);
                *self.per_used.entry(w.assertion_used).or_default() += 1;
                if let Some(reason) = w.fallback_reason {
                    let key = (w.planned, reason);
                    *self.fallbacks.entry(key.clone()).or_default() += 1;
                    let e = self.fallback_examples.entry(key).or_insert((k0, k1));
                    *e = (*e).min((k0, k1));
                }
                if !rows_differ {
                    self.disagreements.push((k0, k1));
                }
            }
            Err(_) => {
                self.collisions.push((k0, k1));
                if rows_differ {
                    self.disagreements.push((k0, k1));
                }
            }
        }
    }
}

/// The `i`-th sampled pair: independent of how the sample is partitioned.
pub fn sampled_pair(keys: u64, seed: u64, i: u64) -> (u64, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    let a = rng.gen_range(0..keys);
    let mut b = rng.gen_range(0..keys - 1);
    if b >= a {
        b += 1;
    }
    (a.min(b), a.max(b))
}

pub fn verify_injectivity(
    code: &AuthCode,
    oracle: &Oracle,
    mode: VerifyMode,
    cap: u64,
) -> Result<InjectivityReport, VerifyError> {
    let keys = code.key_count();
    let builder = WitnessBuilder::new(code, oracle);
    let mut report = match mode {
        VerifyMode::Exhaustive => {
            let pairs = keys as u128 * keys.saturating_sub(1) as u128 / 2;
            if pairs > cap as u128 {
                return Err(VerifyError::CapExceeded {
                    what: "key pairs",
                    size: pairs,
                    cap,
                });
            }
            (0..keys)
                .into_par_iter()
                .map(|k0| {
                    let mut r = InjectivityReport::default();
                    for k1 in k0 + 1..keys {
                        r.record(&builder, oracle, k0, k1);
                    }
                    r
                })
                .reduce(InjectivityReport::default, InjectivityReport::merge)
        }
        VerifyMode::Sampled { count, seed } => {
            if keys < 2 {
                return Ok(InjectivityReport::default());
            }
            (0..count)
                .into_par_iter()
                .map(|i| {
                    let (k0, k1) = sampled_pair(keys, seed, i);
                    let mut r = InjectivityReport::default();
                    r.record(&builder, oracle, k0, k1);
                    r
                })
                .reduce(InjectivityReport::default, InjectivityReport::merge)
        }
    };
    report.collisions.sort_unstable();
    report.disagreements.sort_unstable();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::CodeSpec;

    fn p0() -> AuthCode {
        AuthCode::build(&CodeSpec::new(2, 2, 2, 1, 1)).unwrap()
    }

    #[test]
    fn case_examples() {
        let c = p0();
        let case = |a, b| classify_case(&c, Key(a), Key(b)).unwrap().case;
        assert_eq!(case(1, 2), Case::I);
        assert_eq!(case(1, 5), Case::III);
        assert_eq!(case(1, 17), Case::II);
        assert_eq!(case(1, 21), Case::IV);
        assert!(matches!(
            classify_case(&c, Key(3), Key(3)),
            Err(VerifyError::SameKey(3))
        ));
        let cp = classify_case(&c, Key(1), Key(6)).unwrap();
        assert_eq!((cp.k00, cp.k10), (1, 2));
    }

    #[test]
    fn assertion_labels_round_trip() {
        for a in Assertion::ALL {
            assert_eq!(Assertion::from_label(a.label()), Some(a));
        }
        assert_eq!(Assertion::II01101.label(), "II.0.1.1.0.1");
    }

    #[test]
    fn case_i_witness_is_constructive() {
        let c = p0();
        let oracle = Oracle::new(&c, DEFAULT_CAP);
        let b = WitnessBuilder::new(&c, &oracle);
        let w = b.construct(Key(1), Key(2)).unwrap();
        assert_eq!(w.assertion_used, Assertion::I);
        assert!(w.witness.s0.is_zero());
        assert_ne!(w.tags.0, w.tags.1);
        assert_eq!(c.encode(Key(1), &w.witness).unwrap(), w.tags.0);
    }

    #[test]
    fn case_iii_same_offset_uses_any_state() {
        let c = p0();
        let oracle = Oracle::new(&c, DEFAULT_CAP);
        let b = WitnessBuilder::new(&c, &oracle);
        let w = b.construct(Key(1), Key(5)).unwrap();
        assert_eq!(w.assertion_used, Assertion::III0);
        assert_eq!(w.witness, c.sources()[0]);
    }

    #[test]
    fn table_and_lazy_oracle_agree() {
        let c = p0();
        let table = Oracle::new(&c, DEFAULT_CAP);
        let lazy = Oracle::new(&c, 0);
        assert!(table.table().is_some() && lazy.table().is_none());
        for (k0, k1) in [(0, 1), (3, 200), (17, 18), (100, 255)] {
            assert_eq!(
                table.first_difference(&c, k0, k1),
                lazy.first_difference(&c, k0, k1)
            );
        }
    }

    #[test]
    fn sampled_mode_is_reproducible() {
        let c = p0();
        let oracle = Oracle::new(&c, DEFAULT_CAP);
        let mode = VerifyMode::Sampled {
            count: 300,
            seed: 11,
        };
        let a = verify_injectivity(&c, &oracle, mode, DEFAULT_CAP).unwrap();
        let b = verify_injectivity(&c, &oracle, mode, DEFAULT_CAP).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.pairs_examined, 300);
        assert!(a.passed());
        for i in 0..50 {
            let (k0, k1) = sampled_pair(256, 11, i);
            assert!(k0 < k1 && k1 < 256);
        }
    }

    #[test]
    fn exhaustive_cap() {
        let c = p0();
        let oracle = Oracle::new(&c, DEFAULT_CAP);
        assert!(matches!(
            verify_injectivity(&c, &oracle, VerifyMode::Exhaustive, 1000),
            Err(VerifyError::CapExceeded { .. })
        ));
    }
}
