//! The Gray-map systematic authentication code over `A = GR(p^r, l)` and
//! `B = GR(p^r, l n)`.
//!
//! A source state `s = (s_0, s_1, s_2)` is encoded by the table
//!
//! ```text
//! v_{s,w}(x) = Tr_{B/A}(s_0 f(x) + s_1 . x) + s_2 + w,   x in B^n, w in p^{r-1} A
//! ```
//!
//! Gray-mapped and flattened; key `k` selects one coordinate of that table,
//! so the tag space is `F_q` and there are `q^{r(mn+1)}` keys. Block
//! `k_{x,w} = alpha_b(x) q + alpha_a(w)` holds the `q^{r-1}` coordinates of
//! `Phi(v_{s,w}(x))`.

pub mod config;
mod construction;

pub use construction::{
    build_d_eta, build_l, build_n, build_pairs, build_t_eta_theta_z, build_t_theta_zeta_k,
    unit_vector, BVector, NSet, SourcePair, TEntry,
};

use std::fmt;

use indexmap::IndexSet;
use thiserror::Error;

use crate::gray::GrayMap;
use crate::resilience::{
    check_resilient, vector_from_index, vector_index, ResilienceError, ResilientMap,
};
use crate::ring::{Extension, GaloisRing, ResidueElement, RingElement, RingError};

#[derive(Debug, Error)]
pub enum CodeError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Resilience(#[from] ResilienceError),
    #[error("invalid code parameters: {0}")]
    Invariant(String),
    #[error("key {key} out of range [0, {count})")]
    KeyOutOfRange { key: u64, count: u64 },
    #[error("{0} is not in the socle p^(r-1)A")]
    NotSocle(String),
    #[error("malformed source state: {0}")]
    BadSource(String),
}

/// A Teichmuller element written `0` or `xi^j` in configuration files.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TeichSpec {
    Zero,
    Power(u64),
}

impl TeichSpec {
    pub fn resolve(&self, ring: &GaloisRing) -> RingElement {
        match self {
            TeichSpec::Zero => ring.zero(),
            TeichSpec::Power(j) => ring.xi_power(*j),
        }
    }
}

impl fmt::Display for TeichSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TeichSpec::Zero => f.write_str("0"),
            TeichSpec::Power(j) => write!(f, "xi^{j}"),
        }
    }
}

/// A coefficient of a linear `f`: an integer or a Teichmuller element of `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffSpec {
    Int(i64),
    Teich(TeichSpec),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapSpec {
    Linear(Vec<CoeffSpec>),
    /// Values in `alpha_b` order, canonical element text.
    Table(Vec<String>),
}

/// User-facing description of a code instance. `None` selects the default
/// for `eta`, `theta`, `zeta` and `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    pub p: u32,
    pub r: u32,
    pub ell: u32,
    pub n: u32,
    pub t: u32,
    pub eta: Option<Vec<TeichSpec>>,
    pub theta: Option<Vec<TeichSpec>>,
    pub zeta: Option<Vec<TeichSpec>>,
    pub f: Option<MapSpec>,
    pub seed: u64,
}

impl CodeSpec {
    pub fn new(p: u32, r: u32, ell: u32, n: u32, t: u32) -> Self {
        CodeSpec {
            p,
            r,
            ell,
            n,
            t,
            eta: None,
            theta: None,
            zeta: None,
            f: None,
            seed: 0,
        }
    }
}

/// The key space `K = {0, ..., q^{r(mn+1)} - 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Key(pub u64);

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A tag is an element of `F_q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tag(pub ResidueElement);

impl Tag {
    pub fn index(&self) -> u64 {
        self.0.index()
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SourceState {
    pub s0: RingElement,
    pub s1: BVector,
    pub s2: RingElement,
}

impl fmt::Display for SourceState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; ", self.s0)?;
        for (i, c) in self.s1.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; {})", self.s2)
    }
}

/// Position of a key inside the flattened table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyCoords {
    pub x: BVector,
    pub w: RingElement,
    pub offset: usize,
    /// `k_{x,w} = alpha_b(x) q + alpha_a(w)`.
    pub block: u64,
}

/// A claimed cardinality next to the enumerated one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CardinalityCheck {
    pub name: String,
    pub claimed: u128,
    pub actual: u128,
}

impl CardinalityCheck {
    pub fn holds(&self) -> bool {
        self.claimed == self.actual
    }
}

/// Every set the instance is built from.
#[derive(Debug, Clone)]
pub struct ConstructionSets {
    pub n_set: NSet,
    pub l_set: IndexSet<RingElement>,
    pub d_eta: Vec<(RingElement, BVector)>,
    /// `T_{theta zeta_k k}` for each `k`, in order.
    pub t_blocks: Vec<Vec<TEntry>>,
    pub t_eta_theta_z: IndexSet<SourcePair>,
    pub pairs: IndexSet<SourcePair>,
}

/// A fully materialized, immutable code instance.
#[derive(Debug, Clone)]
pub struct AuthCode {
    spec: CodeSpec,
    a: GaloisRing,
    b: GaloisRing,
    ext: Extension,
    gray: GrayMap,
    n: usize,
    q: u64,
    qm: u64,
    eta: Vec<RingElement>,
    theta: Vec<RingElement>,
    zeta: Vec<RingElement>,
    spare: RingElement,
    f: ResilientMap,
    sets: ConstructionSets,
    sources: Vec<SourceState>,
    socle: Vec<RingElement>,
    teich_a_in_b: Vec<RingElement>,
    key_count: u64,
}

fn resolve_list(specs: &[TeichSpec], ring: &GaloisRing) -> Vec<RingElement> {
    specs.iter().map(|s| s.resolve(ring)).collect()
}

fn all_distinct(v: &[RingElement]) -> bool {
    let set: std::collections::HashSet<_> = v.iter().collect();
    set.len() == v.len()
}

/// The map `f : B^n -> B` described by `spec`, identity sum by default.
pub fn build_map(spec: &CodeSpec, b: &GaloisRing) -> Result<ResilientMap, CodeError> {
    let n = spec.n as usize;
    Ok(match &spec.f {
        None => ResilientMap::linear(b, vec![b.one(); n], spec.t as usize)?,
        Some(MapSpec::Linear(coeffs)) => {
            let coeffs = coeffs
                .iter()
                .map(|c| match c {
                    CoeffSpec::Int(v) => b.from_int(*v),
                    CoeffSpec::Teich(t) => t.resolve(b),
                })
                .collect::<Vec<_>>();
            if coeffs.len() != n {
                return Err(CodeError::Invariant(format!("f needs {n} coefficients")));
            }
            ResilientMap::linear(b, coeffs, spec.t as usize)?
        }
        Some(MapSpec::Table(values)) => {
            let total = b.size().pow(n as u32);
            if values.len() as u64 != total {
                return Err(CodeError::Invariant(format!(
                    "f table needs {total} values"
                )));
            }
            let table = values
                .iter()
                .enumerate()
                .map(|(i, v)| b.parse_element(v).map(|e| (i as u64, e)))
                .collect::<Result<_, _>>()?;
            ResilientMap::table(b, n, table, spec.t as usize)
        }
    })
}

impl AuthCode {
    pub fn build(spec: &CodeSpec) -> Result<Self, CodeError> {
        let (p, r, ell, n) = (spec.p, spec.r, spec.ell, spec.n as usize);
        if n == 0 {
            return Err(CodeError::Invariant("n must be at least 1".into()));
        }
        if spec.t as usize > n {
            return Err(CodeError::Invariant(format!(
                "t = {} exceeds n = {n}",
                spec.t
            )));
        }
        if r < 2 {
            return Err(CodeError::Invariant("the code needs r >= 2".into()));
        }
        let a = GaloisRing::new(p, r, ell)?;
        let b = GaloisRing::new(p, r, ell * n as u32)?;
        let ext = Extension::new(&a, &b)?;
        let q = a.residue_size();
        let qm = b.residue_size();
        let rm1 = (r - 1) as u64;
        let eta_len = (rm1 * n as u64) as usize;
        if rm1 * (n as u64 + 1) >= qm - 1 {
            return Err(CodeError::Invariant(format!(
                "(r-1)(n+1) = {} must be below q^m - 1 = {}",
                rm1 * (n as u64 + 1),
                qm - 1
            )));
        }

        let teich_a = a.teichmuller();
        let eta = match &spec.eta {
            Some(list) => resolve_list(list, &a),
            None => teich_a
                .powers
                .iter()
                .skip(1)
                .take(eta_len)
                .cloned()
                .collect(),
        };
        let one = a.one();
        if eta.len() != eta_len
            || !all_distinct(&eta)
            || eta
                .iter()
                .any(|e| e.is_zero() || *e == one || !a.is_teichmuller(e))
        {
            return Err(CodeError::Invariant(format!(
                "eta must be {eta_len} distinct elements of T(A) - {{0, 1}}"
            )));
        }
        let eta_b: Vec<RingElement> = eta.iter().map(|e| ext.embed(e)).collect::<Result<_, _>>()?;

        let coprime = b.coprime_teichmuller();
        let theta = match &spec.theta {
            Some(list) => resolve_list(list, &b),
            None => vec![b.xi_power(1); n],
        };
        if theta.len() != n || theta.iter().any(|t| !coprime.contains(t)) {
            return Err(CodeError::Invariant(format!(
                "theta must be {n} elements of G(T(B))"
            )));
        }

        let zeta_len = (qm - rm1 * n as u64 - 1) as usize;
        let zeta = match &spec.zeta {
            Some(list) => resolve_list(list, &b),
            None => b
                .teichmuller()
                .powers
                .iter()
                .filter(|t| !eta_b.contains(t))
                .take(zeta_len)
                .cloned()
                .collect(),
        };
        if zeta.len() != zeta_len
            || !all_distinct(&zeta)
            || zeta
                .iter()
                .any(|z| z.is_zero() || !b.is_teichmuller(z) || eta_b.contains(z))
        {
            return Err(CodeError::Invariant(format!(
                "Z must be {zeta_len} distinct elements of T(B) - {{0}} disjoint from eta"
            )));
        }

        let spare = teich_a
            .powers
            .iter()
            .find(|t| !eta.contains(t))
            .cloned()
            .ok_or_else(|| CodeError::Invariant("T(A) - eta - {0} is empty".into()))?;

        let f = build_map(spec, &b)?;
        let report = check_resilient(&f, spec.t as usize, crate::ring::DEFAULT_ELEMENT_CAP)?;
        if !report.passed {
            return Err(CodeError::Invariant(format!(
                "f is not {}-resilient (failing subset {:?})",
                spec.t,
                report.failure.map(|f| f.0).unwrap_or_default()
            )));
        }

        let n_set = build_n(&b, &b.teichmuller(), n, spec.t as usize);
        let l_set = build_l(&a);
        let d_eta = build_d_eta(&ext, &eta, n)?;
        let k_max = zeta_len - 1;
        let t_blocks = zeta
            .iter()
            .enumerate()
            .map(|(k, z)| build_t_theta_zeta_k(&b, &theta, z, k, k_max))
            .collect::<Result<Vec<_>, _>>()?;
        let all_entries: Vec<TEntry> = t_blocks.iter().flatten().cloned().collect();
        let t_eta_theta_z = build_t_eta_theta_z(&ext, &d_eta, &all_entries)?;
        let pairs = build_pairs(&ext, &n_set.vectors, &t_eta_theta_z, &eta)?;

        let sources = pairs
            .iter()
            .flat_map(|(s0, s1)| {
                l_set.iter().map(move |s2| SourceState {
                    s0: s0.clone(),
                    s1: s1.clone(),
                    s2: s2.clone(),
                })
            })
            .collect();

        let top = a.p_power(r - 1);
        let socle = teich_a.elements().map(|t| t * &top).collect();
        let teich_a_in_b = teich_a
            .elements()
            .map(|t| ext.embed(t))
            .collect::<Result<_, _>>()?;
        let key_count = q.pow(r) * b.size().pow(n as u32);

        Ok(AuthCode {
            spec: spec.clone(),
            gray: GrayMap::new(&a),
            a,
            b,
            ext,
            n,
            q,
            qm,
            eta,
            theta,
            zeta,
            spare,
            f,
            sets: ConstructionSets {
                n_set,
                l_set,
                d_eta,
                t_blocks,
                t_eta_theta_z,
                pairs,
            },
            sources,
            socle,
            teich_a_in_b,
            key_count,
        })
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn a(&self) -> &GaloisRing {
        &self.a
    }

    pub fn b(&self) -> &GaloisRing {
        &self.b
    }

    pub fn ext(&self) -> &Extension {
        &self.ext
    }

    pub fn gray(&self) -> &GrayMap {
        &self.gray
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `q^m`, the size of `B`'s residue field.
    pub fn qm(&self) -> u64 {
        self.qm
    }

    pub fn eta(&self) -> &[RingElement] {
        &self.eta
    }

    pub fn theta(&self) -> &[RingElement] {
        &self.theta
    }

    pub fn zeta(&self) -> &[RingElement] {
        &self.zeta
    }

    /// The element of `T(A) - {0}` outside `eta` used by states `(eta', 0, 0)`.
    pub fn spare(&self) -> &RingElement {
        &self.spare
    }

    pub fn f(&self) -> &ResilientMap {
        &self.f
    }

    pub fn sets(&self) -> &ConstructionSets {
        &self.sets
    }

    pub fn sources(&self) -> &[SourceState] {
        &self.sources
    }

    /// `p^{r-1}A` in `alpha_a` order: `0, xi^0 p^{r-1}, ..., xi^{q-2} p^{r-1}`.
    pub fn socle(&self) -> &[RingElement] {
        &self.socle
    }

    /// `T(A)` embedded in `B`, zero first.
    pub fn teich_a_in_b(&self) -> &[RingElement] {
        &self.teich_a_in_b
    }

    pub fn key_count(&self) -> u64 {
        self.key_count
    }

    /// `q^{r-1}`, the width of a key block.
    pub fn block_len(&self) -> u64 {
        self.gray.len() as u64
    }

    pub fn contains_source(&self, s: &SourceState) -> bool {
        self.sets.l_set.contains(&s.s2) && self.sets.pairs.contains(&(s.s0.clone(), s.s1.clone()))
    }

    /// The lower `r-1` Teichmuller digits of `a` recombined: the element of
    /// `L` congruent to `a` modulo `p^{r-1}`.
    pub fn l_representative(&self, a: &RingElement) -> RingElement {
        let digits = self.a.padic_digits(a);
        let r = self.a.r() as usize;
        digits[..r - 1]
            .iter()
            .enumerate()
            .fold(self.a.zero(), |acc, (i, d)| {
                &acc + &(d * &self.a.p_power(i as u32))
            })
    }

    pub fn dot(&self, u: &[RingElement], v: &[RingElement]) -> RingElement {
        u.iter()
            .zip(v)
            .fold(self.b.zero(), |acc, (a, b)| &acc + &(a * b))
    }

    /// `Tr_{B/A}(b)`.
    pub fn trace(&self, b: &RingElement) -> RingElement {
        self.ext
            .trace(b)
            .expect("trace of an element of B lies in A")
    }

    /// `gamma_{s_0 s_1 f}(x) = Tr_{B/A}(s_0 f(x) + s_1 . x)`.
    pub fn gamma(&self, s0: &RingElement, s1: &[RingElement], x: &[RingElement]) -> RingElement {
        let fx = self.f.evaluate(x).expect("f is total on B^n");
        self.trace(&(&(s0 * &fx) + &self.dot(s1, x)))
    }

    pub fn v_s_w(
        &self,
        s: &SourceState,
        w: &RingElement,
        x: &[RingElement],
    ) -> Result<RingElement, CodeError> {
        if w.ring() != &self.a || !w.in_socle() {
            return Err(CodeError::NotSocle(w.to_string()));
        }
        self.check_source(s)?;
        if x.len() != self.n || x.iter().any(|c| c.ring() != &self.b) {
            return Err(CodeError::BadSource(format!(
                "x must be a vector of B^{}",
                self.n
            )));
        }
        Ok(&(&self.gamma(&s.s0, &s.s1, x) + &s.s2) + w)
    }

    fn check_source(&self, s: &SourceState) -> Result<(), CodeError> {
        if s.s0.ring() != &self.b
            || s.s1.len() != self.n
            || s.s1.iter().any(|c| c.ring() != &self.b)
            || s.s2.ring() != &self.a
        {
            return Err(CodeError::BadSource(s.to_string()));
        }
        Ok(())
    }

    /// `alpha_a(w)`.
    pub fn alpha_a(&self, w: &RingElement) -> Result<u64, CodeError> {
        if w.ring() != &self.a || !w.in_socle() {
            return Err(CodeError::NotSocle(w.to_string()));
        }
        let top = &self.a.padic_digits(w)[self.a.r() as usize - 1];
        Ok(self.a.teich_position(top).expect("digits are Teichmuller") as u64)
    }

    pub fn key_coords(&self, k: Key) -> Result<KeyCoords, CodeError> {
        if k.0 >= self.key_count {
            return Err(CodeError::KeyOutOfRange {
                key: k.0,
                count: self.key_count,
            });
        }
        let width = self.block_len();
        let block = k.0 / width;
        let offset = (k.0 % width) as usize;
        let x = vector_from_index(&self.b, self.n, block / self.q);
        let w = self.socle[(block % self.q) as usize].clone();
        Ok(KeyCoords {
            x,
            w,
            offset,
            block,
        })
    }

    pub fn key_from_coords(
        &self,
        x: &[RingElement],
        w: &RingElement,
        offset: usize,
    ) -> Result<Key, CodeError> {
        let block = vector_index(x) * self.q + self.alpha_a(w)?;
        Ok(Key(block * self.block_len() + offset as u64))
    }

    /// `e_k(s) = pi_k(u_s)`, evaluated for a single coordinate.
    pub fn encode(&self, k: Key, s: &SourceState) -> Result<Tag, CodeError> {
        let c = self.key_coords(k)?;
        let v = self.v_s_w(s, &c.w, &c.x)?;
        Ok(Tag(self.gray.coordinate(&v, c.offset)))
    }

    /// The full encoding row `u_s`, blocks in `k_{x,w}` order.
    pub fn u_s(&self, s: &SourceState) -> Result<Vec<ResidueElement>, CodeError> {
        let xs = self.b.size().pow(self.n as u32);
        let mut out = Vec::with_capacity(self.key_count as usize);
        for xi in 0..xs {
            let x = vector_from_index(&self.b, self.n, xi);
            for w in &self.socle {
                let v = self.v_s_w(s, w, &x)?;
                out.extend(self.gray.gray(&v).coords);
            }
        }
        Ok(out)
    }

    /// Claimed set sizes alongside the enumerated ones.
    pub fn cardinality_checks(&self) -> Vec<CardinalityCheck> {
        let n = self.n as u128;
        let t = self.spec.t as u128;
        let r = self.a.r() as u128;
        let q = self.q as u128;
        let qm = self.qm as u128;
        let m = self.n as u32;
        let mut out = vec![
            CardinalityCheck {
                name: "|N|".into(),
                claimed: q.pow(m * (t as u32).saturating_sub(1)) + (n - (t - 1).min(n)) * qm,
                actual: self.sets.n_set.vectors.len() as u128,
            },
            CardinalityCheck {
                name: "|L|".into(),
                claimed: q.pow(r as u32 - 1),
                actual: self.sets.l_set.len() as u128,
            },
            CardinalityCheck {
                name: "|D_eta|".into(),
                claimed: (r - 1) * n,
                actual: self.sets.d_eta.iter().collect::<IndexSet<_>>().len() as u128,
            },
        ];
        for (k, block) in self.sets.t_blocks.iter().enumerate() {
            out.push(CardinalityCheck {
                name: format!("|T_theta_zeta_{k}|"),
                claimed: (qm - 1) * n,
                actual: block
                    .iter()
                    .map(|e| e.pair.clone())
                    .collect::<IndexSet<_>>()
                    .len() as u128,
            });
        }
        out.push(CardinalityCheck {
            name: "|T_eta_theta_Z|".into(),
            claimed: ((r - 1) + ((qm - 1) - (r - 1) * n) * (qm - 1)) * n,
            actual: self.sets.t_eta_theta_z.len() as u128,
        });
        let x_claim = n + 1 - t;
        for (&size, &count) in &self.sets.n_set.x_sizes {
            out.push(CardinalityCheck {
                name: format!("|X_b,t| ({count} of b)"),
                claimed: x_claim,
                actual: size as u128,
            });
        }
        out
    }

    /// Canonical text of every parameter, defaults materialized. Stable
    /// across runs; feeds the report fingerprint.
    pub fn canonical_params(&self) -> String {
        let list = |v: &[RingElement]| {
            v.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!(
            "p={} r={} ell={} n={} t={}\nA={}\nB={}\neta={}\ntheta={}\nZ={}\nspare={}\nf={}",
            self.spec.p,
            self.spec.r,
            self.spec.ell,
            self.spec.n,
            self.spec.t,
            self.a.params(),
            self.b.params(),
            list(&self.eta),
            list(&self.theta),
            list(&self.zeta),
            self.spare,
            self.f
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p0() -> AuthCode {
        AuthCode::build(&CodeSpec::new(2, 2, 2, 1, 1)).unwrap()
    }

    #[test]
    fn p0_defaults() {
        let c = p0();
        assert_eq!(c.q(), 4);
        assert_eq!(c.qm(), 4);
        assert_eq!(c.key_count(), 256);
        assert_eq!(c.eta(), &[c.a().x()]);
        assert_eq!(c.theta(), &[c.b().x()]);
        assert_eq!(c.zeta(), &[c.b().one(), c.b().xi_power(2)]);
        assert_eq!(*c.spare(), c.a().one());
    }

    #[test]
    fn l_examples() {
        let z4code_l = build_l(&GaloisRing::new(2, 2, 1).unwrap());
        let l: Vec<String> = z4code_l.iter().map(|e| e.to_string()).collect();
        assert_eq!(l, vec!["0", "1"]);
        let c = p0();
        let l: Vec<String> = c.sets().l_set.iter().map(|e| e.to_string()).collect();
        assert_eq!(l, vec!["0,0", "1,0", "0,1", "3,3"]);
    }

    #[test]
    fn n_for_single_coordinate() {
        let c = p0();
        let n: Vec<BVector> = c.sets().n_set.vectors.iter().cloned().collect();
        let t: Vec<BVector> = c
            .b()
            .teichmuller()
            .elements()
            .map(|e| vec![e.clone()])
            .collect();
        assert_eq!(n, t);
    }

    #[test]
    fn d_eta_example() {
        let c = p0();
        assert_eq!(c.sets().d_eta, vec![(c.a().x(), vec![c.b().from_int(2)])]);
    }

    #[test]
    fn d_eta_needs_enough_eta() {
        let a = GaloisRing::new(2, 2, 2).unwrap();
        let ext = Extension::new(&a, &a).unwrap();
        assert!(build_d_eta(&ext, &[], 1).is_err());
        assert_eq!(
            build_d_eta(&ext, &[a.x(), a.xi_power(2)], 2).unwrap().len(),
            2
        );
    }

    #[test]
    fn t_theta_zeta_k_example() {
        let b = GaloisRing::new(2, 2, 2).unwrap();
        let xi = b.x();
        let zeta = b.xi_power(2);
        let entries = build_t_theta_zeta_k(&b, std::slice::from_ref(&xi), &zeta, 0, 1).unwrap();
        let two = b.from_int(2);
        let expected: Vec<SourcePair> = (0..3)
            .map(|i| {
                let t = xi.pow(i);
                let coord = &zeta + &(&two * &t);
                (t, vec![coord])
            })
            .collect();
        let got: Vec<SourcePair> = entries.into_iter().map(|e| e.pair).collect();
        assert_eq!(got, expected);
        assert!(build_t_theta_zeta_k(&b, std::slice::from_ref(&xi), &b.zero(), 0, 1).is_err());
        assert!(build_t_theta_zeta_k(&b, &[xi], &zeta, 2, 1).is_err());
    }

    #[test]
    fn p0_source_space() {
        let c = p0();
        let sets = c.sets();
        assert_eq!(sets.t_eta_theta_z.len(), 7);
        // D_eta is disjoint from every T block
        for block in &sets.t_blocks {
            for e in block {
                assert!(!sets
                    .d_eta
                    .iter()
                    .any(|(a, v)| { c.ext().embed(a).unwrap() == e.pair.0 && *v == e.pair.1 }));
            }
        }
        // 3 from {0} x (N - {0}), 7 from T_eta_theta_Z, 2 from (T(A) - eta - {0}) x {0}
        assert_eq!(sets.pairs.len(), 12);
        assert_eq!(c.sources().len(), 48);
        let zero = c.b().zero();
        assert!(!sets.pairs.contains(&(zero.clone(), vec![zero])));
        for s in c.sources() {
            assert!(sets.l_set.contains(&s.s2));
            assert!(c.contains_source(s));
        }
    }

    #[test]
    fn v_s_w_examples() {
        let c = p0();
        let a = c.a();
        let b = c.b();
        let w = a.from_int(2);
        let s2 = a.x();
        let constant = SourceState {
            s0: b.zero(),
            s1: vec![b.zero()],
            s2: s2.clone(),
        };
        let unit = SourceState {
            s0: b.zero(),
            s1: vec![b.one()],
            s2: a.zero(),
        };
        let f_only = SourceState {
            s0: b.one(),
            s1: vec![b.zero()],
            s2: a.zero(),
        };
        for x in b.elements() {
            assert_eq!(
                c.v_s_w(&constant, &w, std::slice::from_ref(&x)).unwrap(),
                &s2 + &w
            );
            assert_eq!(
                c.v_s_w(&unit, &a.zero(), std::slice::from_ref(&x)).unwrap(),
                c.trace(&x)
            );
            assert_eq!(
                c.v_s_w(&f_only, &a.zero(), std::slice::from_ref(&x))
                    .unwrap(),
                c.trace(&x)
            );
        }
        assert!(matches!(
            c.v_s_w(&constant, &a.one(), &[b.zero()]),
            Err(CodeError::NotSocle(_))
        ));
    }

    #[test]
    fn key_coords_example() {
        let c = p0();
        let kc = c.key_coords(Key(37)).unwrap();
        assert_eq!(kc.block, 9);
        assert_eq!(kc.offset, 1);
        assert_eq!(vector_index(&kc.x), 2);
        assert_eq!(c.alpha_a(&kc.w).unwrap(), 1);
        let k0 = c.key_coords(Key(0)).unwrap();
        assert!(k0.x[0].is_zero() && k0.w.is_zero() && k0.offset == 0);
        assert!(matches!(
            c.key_coords(Key(256)),
            Err(CodeError::KeyOutOfRange { .. })
        ));
    }

    #[test]
    fn key_layout_round_trips() {
        let c = p0();
        for k in 0..c.key_count() {
            let kc = c.key_coords(Key(k)).unwrap();
            assert_eq!(c.key_from_coords(&kc.x, &kc.w, kc.offset).unwrap(), Key(k));
        }
    }

    #[test]
    fn constant_state_encodes_socle() {
        let c = p0();
        let s = SourceState {
            s0: c.b().zero(),
            s1: vec![c.b().zero()],
            s2: c.a().zero(),
        };
        assert!(c.encode(Key(0), &s).unwrap().0.is_zero());
        let u = c.u_s(&s).unwrap();
        assert_eq!(u.len(), 256);
        for k in 0..c.key_count() {
            let kc = c.key_coords(Key(k)).unwrap();
            let expected = c.gray().coordinate(&kc.w, kc.offset);
            assert_eq!(c.encode(Key(k), &s).unwrap().0, expected);
            assert_eq!(u[k as usize], expected);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(AuthCode::build(&CodeSpec::new(2, 2, 1, 1, 1)).is_err());
        assert!(AuthCode::build(&CodeSpec::new(2, 2, 2, 1, 2)).is_err());
        let mut spec = CodeSpec::new(2, 2, 2, 1, 1);
        spec.eta = Some(vec![TeichSpec::Power(0)]);
        assert!(AuthCode::build(&spec).is_err());
        let mut spec = CodeSpec::new(2, 2, 2, 1, 1);
        spec.theta = Some(vec![TeichSpec::Power(0)]);
        assert!(AuthCode::build(&spec).is_err());
        let mut spec = CodeSpec::new(2, 2, 2, 1, 1);
        spec.zeta = Some(vec![TeichSpec::Power(1), TeichSpec::Power(2)]);
        assert!(AuthCode::build(&spec).is_err());
    }
}
