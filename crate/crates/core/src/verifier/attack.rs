use std::collections::BTreeMap;

use num_rational::Ratio;
use rayon::prelude::*;

use super::TagTable;

/// A message `(s, t)` as (index in `S`, tag index).
pub type MessageCell = (usize, u32);

/// A probability with its witness and a histogram of per-cell values.
pub type Extremum<W, H> = (Ratio<u64>, W, BTreeMap<H, u64>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttackReport {
    pub keys: u64,
    pub sources: usize,
    pub q: u64,
    pub p_i: Ratio<u64>,
    pub p_i_witness: MessageCell,
    pub p_s: Ratio<u64>,
    /// Observed message and the substitute achieving `p_s`.
    pub p_s_witness: (MessageCell, MessageCell),
    /// `|{k : e_k(s) = t}|` -> number of cells `(s, t)` with that count.
    pub impersonation_histogram: BTreeMap<u64, u64>,
    /// Best conditional success for each observable `(s, t)` -> number of such cells.
    pub substitution_histogram: BTreeMap<Ratio<u64>, u64>,
}

fn column_counts(table: &TagTable, s: usize) -> Vec<u64> {
    let mut counts = vec![0u64; table.q() as usize];
    for k in 0..table.keys() as u64 {
        counts[table.tag(k, s) as usize] += 1;
    }
    counts
}

/// `p_I = max_{(s,t)} |{k : e_k(s) = t}| / |K|`, with the first maximizing cell.
pub fn prob_impersonation(table: &TagTable) -> Extremum<MessageCell, u64> {
    let mut best = (0u64, (0usize, 0u32));
    let mut hist = BTreeMap::new();
    for s in 0..table.sources() {
        for (t, &c) in column_counts(table, s).iter().enumerate() {
            *hist.entry(c).or_insert(0) += 1;
            if c > best.0 {
                best = (c, (s, t as u32));
            }
        }
    }
    (Ratio::new(best.0, table.keys() as u64), best.1, hist)
}

/// Best substitute for an observed `(s, t)`: the ratio and the cell achieving it,
/// optionally restricted to one substitute source.
pub fn substitution_given(
    table: &TagTable,
    observed: MessageCell,
    only: Option<usize>,
) -> Option<(Ratio<u64>, MessageCell)> {
    let (s, t) = observed;
    let keys: Vec<u64> = (0..table.keys() as u64)
        .filter(|&k| table.tag(k, s) == t)
        .collect();
    if keys.is_empty() {
        return None;
    }
    let q = table.q() as usize;
    let mut best = (0u64, (0usize, 0u32));
    let mut counts = vec![0u64; q];
    for s2 in 0..table.sources() {
        if s2 == s || only.is_some_and(|o| o != s2) {
            continue;
        }
        counts.iter_mut().for_each(|c| *c = 0);
        for &k in &keys {
            counts[table.tag(k, s2) as usize] += 1;
        }
        for (t2, &c) in counts.iter().enumerate() {
            if c > best.0 {
                best = (c, (s2, t2 as u32));
            }
        }
    }
    if best.0 == 0 {
        return None;
    }
    Some((Ratio::new(best.0, keys.len() as u64), best.1))
}

/// `p_S`: the max over observable `(s, t)` of the best conditional success.
pub fn prob_substitution(table: &TagTable) -> Extremum<(MessageCell, MessageCell), Ratio<u64>> {
    let cells: Vec<MessageCell> = (0..table.sources())
        .flat_map(|s| (0..table.q() as u32).map(move |t| (s, t)))
        .collect();
    let results: Vec<_> = cells
        .par_iter()
        .map(|&cell| (cell, substitution_given(table, cell, None)))
        .collect();
    let mut best: Option<(Ratio<u64>, (MessageCell, MessageCell))> = None;
    let mut hist = BTreeMap::new();
    for (cell, res) in results {
        let Some((ratio, sub)) = res else { continue };
        *hist.entry(ratio).or_insert(0) += 1;
        if best.as_ref().is_none_or(|(b, _)| ratio > *b) {
            best = Some((ratio, (cell, sub)));
        }
    }
    let (p, w) = best.unwrap_or((Ratio::new(0, 1), ((0, 0), (0, 0))));
    (p, w, hist)
}

impl AttackReport {
    pub fn compute(table: &TagTable) -> Self {
        let (p_i, p_i_witness, impersonation_histogram) = prob_impersonation(table);
        let (p_s, p_s_witness, substitution_histogram) = prob_substitution(table);
        AttackReport {
            keys: table.keys() as u64,
            sources: table.sources(),
            q: table.q(),
            p_i,
            p_i_witness,
            p_s,
            p_s_witness,
            impersonation_histogram,
            substitution_histogram,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{AuthCode, CodeSpec};
    use crate::verifier::DEFAULT_CAP;

    #[test]
    fn p0_bounds() {
        let c = AuthCode::build(&CodeSpec::new(2, 2, 2, 1, 1)).unwrap();
        let table = TagTable::build(&c, DEFAULT_CAP).unwrap();
        let rep = AttackReport::compute(&table);
        assert!(rep.p_i >= Ratio::new(1, c.q()));
        assert!(rep.p_i <= Ratio::from_integer(1));
        assert!(rep.p_s <= Ratio::from_integer(1));
        let cells: u64 = rep.impersonation_histogram.values().sum();
        assert_eq!(cells, c.q() * c.sources().len() as u64);
        // a single substitute lower-bounds the full max
        let (obs, sub) = rep.p_s_witness;
        let single = substitution_given(&table, obs, Some(sub.0)).unwrap();
        assert_eq!(single.0, rep.p_s);
        let other = (sub.0 + 1) % c.sources().len();
        if other != obs.0 {
            assert!(substitution_given(&table, obs, Some(other)).unwrap().0 <= rep.p_s);
        }
    }
}
