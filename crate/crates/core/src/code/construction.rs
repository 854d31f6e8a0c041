//! Builders for the sets that shape a code instance.

use std::collections::BTreeMap;

use indexmap::IndexSet;

use super::CodeError;
use crate::ring::{Extension, GaloisRing, RingElement, TeichmullerSet};

/// A vector of `B^n`.
pub type BVector = Vec<RingElement>;

/// A `(s_0, s_1)` pair of a source state.
pub type SourcePair = (RingElement, BVector);

pub fn unit_vector(ring: &GaloisRing, n: usize, j: usize, scale: &RingElement) -> BVector {
    (0..n)
        .map(|i| if i == j { scale.clone() } else { ring.zero() })
        .collect()
}

/// `N` together with the observed sizes of the sets `X_{b,t}`.
#[derive(Debug, Clone)]
pub struct NSet {
    pub vectors: IndexSet<BVector>,
    /// Distinct size of `X_{b,t}` -> number of `b` producing it.
    pub x_sizes: BTreeMap<usize, u64>,
}

/// `N = union over b in T(B)^n of {sum_{j<t-1} b_j e_j, b_{t-1} e_{t-1}, ..., b_{n-1} e_{n-1}}`.
pub fn build_n(ring: &GaloisRing, teich: &TeichmullerSet, n: usize, t: usize) -> NSet {
    let elems: Vec<&RingElement> = teich.elements().collect();
    let base = elems.len() as u64;
    let total = base.pow(n as u32);
    let mut vectors = IndexSet::new();
    let mut x_sizes = BTreeMap::new();
    let head = t.saturating_sub(1);
    for code in 0..total {
        let mut rest = code;
        let b: Vec<&RingElement> = (0..n)
            .map(|_| {
                let e = elems[(rest % base) as usize];
                rest /= base;
                e
            })
            .collect();
        let mut x_set: IndexSet<BVector> = IndexSet::new();
        let prefix: BVector = (0..n)
            .map(|j| if j < head { b[j].clone() } else { ring.zero() })
            .collect();
        x_set.insert(prefix);
        for (j, bj) in b.iter().enumerate().skip(head) {
            x_set.insert(unit_vector(ring, n, j, bj));
        }
        *x_sizes.entry(x_set.len()).or_insert(0) += 1;
        vectors.extend(x_set);
    }
    NSet { vectors, x_sizes }
}

/// `L = {sum_{i<r-1} r_i p^i : r_i in T(A)}` in lexicographic digit order.
pub fn build_l(ring: &GaloisRing) -> IndexSet<RingElement> {
    let teich: Vec<RingElement> = ring.teichmuller().elements().cloned().collect();
    let digits = ring.r() as usize - 1;
    let base = teich.len() as u64;
    let mut out = IndexSet::new();
    for code in 0..base.pow(digits as u32) {
        let mut rest = code;
        let mut acc = ring.zero();
        for i in 0..digits {
            let d = &teich[(rest % base) as usize];
            rest /= base;
            acc = &acc + &(d * &ring.p_power(i as u32));
        }
        out.insert(acc);
    }
    out
}

/// `D_eta = {(eta_{(i-1)n + j}, p^i e_j) : 1 <= i <= r-1, 0 <= j < n}`.
pub fn build_d_eta(
    ext: &Extension,
    eta: &[RingElement],
    n: usize,
) -> Result<Vec<(RingElement, BVector)>, CodeError> {
    let b = ext.ext();
    let r = b.r() as usize;
    let need = (r - 1) * n;
    if eta.len() < need {
        return Err(CodeError::Invariant(format!(
            "eta has {} elements, {} required",
            eta.len(),
            need
        )));
    }
    let mut out = Vec::with_capacity(need);
    for i in 1..r {
        for j in 0..n {
            let first = eta[(i - 1) * n + j].clone();
            out.push((first, unit_vector(b, n, j, &b.p_power(i as u32))));
        }
    }
    Ok(out)
}

/// One element of some `T_{theta zeta k}` with the data that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TEntry {
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub zeta: RingElement,
    /// Exponent `1 + (k mod (r-1))` of `p`.
    pub exponent: u32,
    pub pair: SourcePair,
}

/// `T_{theta zeta k} = {(theta_j^i, (zeta + theta_j^i p^{1 + (k mod (r-1))}) e_j)}`.
pub fn build_t_theta_zeta_k(
    ring: &GaloisRing,
    theta: &[RingElement],
    zeta: &RingElement,
    k: usize,
    k_max: usize,
) -> Result<Vec<TEntry>, CodeError> {
    if zeta.is_zero() {
        return Err(CodeError::Invariant("zeta must be nonzero".into()));
    }
    if k > k_max {
        return Err(CodeError::Invariant(format!("k = {k} exceeds {k_max}")));
    }
    let r = ring.r();
    if r < 2 {
        return Err(CodeError::Invariant("T_theta_zeta_k needs r >= 2".into()));
    }
    let n = theta.len();
    let exponent = 1 + (k as u32 % (r - 1));
    let pe = ring.p_power(exponent);
    let count = ring.residue_size() as usize - 1;
    let mut out = Vec::with_capacity(count * n);
    for i in 0..count {
        for (j, th) in theta.iter().enumerate() {
            let first = th.pow(i as u64);
            let coord = zeta + &(&first * &pe);
            out.push(TEntry {
                k,
                i,
                j,
                zeta: zeta.clone(),
                exponent,
                pair: (first.clone(), unit_vector(ring, n, j, &coord)),
            });
        }
    }
    Ok(out)
}

/// `T_{eta theta Z} = D_eta union T_{theta zeta_k k}` (set semantics), with `D_eta`
/// components lifted into `B`.
pub fn build_t_eta_theta_z(
    ext: &Extension,
    d_eta: &[(RingElement, BVector)],
    t_entries: &[TEntry],
) -> Result<IndexSet<SourcePair>, CodeError> {
    let mut out = IndexSet::new();
    for (a, v) in d_eta {
        out.insert((ext.embed(a)?, v.clone()));
    }
    for e in t_entries {
        out.insert(e.pair.clone());
    }
    Ok(out)
}

/// Admissible `(s_0, s_1)` pairs:
/// `({0} x (N - {0})) u T_{eta theta Z} u ((T(A) - eta - {0}) x {0})`.
pub fn build_pairs(
    ext: &Extension,
    n_set: &IndexSet<BVector>,
    t_eta_theta_z: &IndexSet<SourcePair>,
    eta: &[RingElement],
) -> Result<IndexSet<SourcePair>, CodeError> {
    let b = ext.ext();
    let a = ext.base();
    let n = n_set.first().map(|v| v.len()).unwrap_or(0);
    let zero_vec: BVector = vec![b.zero(); n];
    let mut out = IndexSet::new();
    for v in n_set {
        if v.iter().any(|c| !c.is_zero()) {
            out.insert((b.zero(), v.clone()));
        }
    }
    out.extend(t_eta_theta_z.iter().cloned());
    for t in a.teichmuller().powers {
        if !eta.contains(&t) {
            out.insert((ext.embed(&t)?, zero_vec.clone()));
        }
    }
    Ok(out)
}
