use std::collections::HashMap;

use rayon::prelude::*;

use crate::code::{AuthCode, CodeError, SourceState};

/// Every tag `e_k(s)` as a residue index, row-major by key. Built from the
/// materialized rows `u_s`, independently of the lazy encoder.
#[derive(Debug, Clone)]
pub struct TagTable {
    keys: usize,
    sources: usize,
    q: u64,
    tags: Vec<u32>,
    source_index: HashMap<SourceState, usize>,
}

impl TagTable {
    pub fn build(code: &AuthCode, cap: u64) -> Result<Self, CodeError> {
        let keys = code.key_count() as usize;
        let sources = code.sources().len();
        let cells = keys as u128 * sources as u128;
        if cells > cap as u128 {
            return Err(CodeError::Invariant(format!(
                "tag table needs {cells} cells, cap is {cap}"
            )));
        }
        let columns: Vec<Vec<u32>> = code
            .sources()
            .par_iter()
            .map(|s| {
                code.u_s(s)
                    .map(|row| row.iter().map(|t| t.index() as u32).collect())
            })
            .collect::<Result<_, _>>()?;
        let mut tags = vec![0u32; keys * sources];
        for (si, col) in columns.iter().enumerate() {
            for (k, &t) in col.iter().enumerate() {
                tags[k * sources + si] = t;
            }
        }
        let source_index = code
            .sources()
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Ok(TagTable {
            keys,
            sources,
            q: code.q(),
            tags,
            source_index,
        })
    }

    pub fn keys(&self) -> usize {
        self.keys
    }

    pub fn sources(&self) -> usize {
        self.sources
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `(e_k(s))_{s in S}`.
    pub fn row(&self, k: u64) -> &[u32] {
        let k = k as usize;
        &self.tags[k * self.sources..(k + 1) * self.sources]
    }

    pub fn tag(&self, k: u64, s: usize) -> u32 {
        self.tags[k as usize * self.sources + s]
    }

    pub fn index_of(&self, s: &SourceState) -> Option<usize> {
        self.source_index.get(s).copied()
    }

    /// First source distinguishing the two keys, by scanning both rows.
    pub fn first_difference(&self, k0: u64, k1: u64) -> Option<usize> {
        self.row(k0)
            .iter()
            .zip(self.row(k1))
            .position(|(a, b)| a != b)
    }
}
