//! Exact arithmetic in Galois rings `GR(p^r, d)`.
//!
//! A ring is `Z_{p^r}[x]/(g)` for the Hensel lift `g` of the smallest monic
//! irreducible polynomial of degree `d` over `F_p`. The lift is chosen so
//! that its roots are Teichmuller representatives, which makes `x` itself a
//! root of unity of order dividing `p^d - 1`.
//!
//! The residue field `F_{p^d}` is represented as the Galois ring with
//! `r = 1` and the reduced modulus, so residue elements share the element
//! type with ring elements.

mod extension;
mod poly;

pub use extension::Extension;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

/// Default bound on `p^{rd}`, the number of ring elements.
pub const DEFAULT_ELEMENT_CAP: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent r and degree d must be at least 1 (got r={r}, d={d})")]
    BadShape { r: u32, d: u32 },
    #[error("ring with {size} elements exceeds the enumeration cap {cap}")]
    CapExceeded { size: u128, cap: u64 },
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("element {0} is not a Teichmuller representative")]
    NotTeichmuller(String),
    #[error("expected {expected} coefficients, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("cannot parse ring element from {0:?}")]
    Parse(String),
    #[error("incompatible rings for extension: {0}")]
    Incompatible(String),
}

/// Parameters of `GR(p^r, d)`: the prime, the nilpotency exponent, the
/// extension degree and the monic modulus (ascending, `d + 1` entries).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingParams {
    pub p: u32,
    pub r: u32,
    pub d: u32,
    pub modulus: Vec<u32>,
}

impl RingParams {
    pub fn characteristic(&self) -> u64 {
        (self.p as u64).pow(self.r)
    }

    /// `p^d`, the size of the residue field.
    pub fn residue_size(&self) -> u64 {
        (self.p as u64).pow(self.d)
    }

    pub fn size(&self) -> u64 {
        self.characteristic().pow(self.d)
    }
}

impl fmt::Display for RingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GR({}^{}, {}) mod ", self.p, self.r, self.d)?;
        write_poly(f, &self.modulus)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: &[u32]) -> fmt::Result {
    let mut first = true;
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        match (i, c) {
            (0, c) => write!(f, "{c}")?,
            (1, 1) => write!(f, "x")?,
            (1, c) => write!(f, "{c}x")?,
            (i, 1) => write!(f, "x^{i}")?,
            (i, c) => write!(f, "{c}x^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            out.push(k);
            while n.is_multiple_of(k) {
                n /= k;
            }
        }
        k += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

struct RingInner {
    params: RingParams,
    char_: u64,
    /// Position 0 is zero, position `1 + j` holds `xi^j`.
    teich: Vec<Vec<u32>>,
    /// Residue index (`sum c_i p^i`) to Teichmuller position.
    teich_by_residue: Vec<u32>,
    /// `None` when `r = 1`: the ring is its own residue field.
    residue: Option<GaloisRing>,
}

/// Shared handle to a constructed Galois ring. Cloning is cheap.
#[derive(Clone)]
pub struct GaloisRing {
    inner: Arc<RingInner>,
}

impl fmt::Debug for GaloisRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inner.params)
    }
}

impl PartialEq for GaloisRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.params == other.inner.params
    }
}

impl Eq for GaloisRing {}

fn mul_raw(params: &RingParams, m: u64, a: &[u32], b: &[u32]) -> Vec<u32> {
    let d = params.d as usize;
    let mut prod = vec![0u64; 2 * d - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % m;
        }
    }
    for i in (d..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        // x^d = -(g_0 + ... + g_{d-1} x^{d-1})
        for (j, &g) in params.modulus[..d].iter().enumerate() {
            let k = i - d + j;
            prod[k] = (prod[k] + m - c * g as u64 % m) % m;
        }
        prod[i] = 0;
    }
    prod.truncate(d);
    prod.into_iter().map(|c| c as u32).collect()
}

fn pow_raw(params: &RingParams, m: u64, a: &[u32], mut e: u64) -> Vec<u32> {
    let d = params.d as usize;
    let mut acc = vec![0u32; d];
    acc[0] = 1 % m as u32;
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_raw(params, m, &acc, &base);
        }
        base = mul_raw(params, m, &base, &base);
        e >>= 1;
    }
    acc
}

fn residue_index(coeffs: &[u32], p: u32) -> usize {
    coeffs
        .iter()
        .rev()
        .fold(0usize, |acc, &c| acc * p as usize + (c % p) as usize)
}

impl GaloisRing {
    /// `GR(p^r, d)` with the default element cap.
    pub fn new(p: u32, r: u32, d: u32) -> Result<Self, RingError> {
        Self::with_cap(p, r, d, DEFAULT_ELEMENT_CAP)
    }

    pub fn with_cap(p: u32, r: u32, d: u32, cap: u64) -> Result<Self, RingError> {
        if !is_prime(p as u64) {
            return Err(RingError::NotPrime(p as u64));
        }
        if r == 0 || d == 0 {
            return Err(RingError::BadShape { r, d });
        }
        let size = (p as u128).pow(r * d);
        if size > cap as u128 {
            return Err(RingError::CapExceeded { size, cap });
        }
        let gbar = poly::smallest_irreducible(p as u64, d);
        let lifted = poly::hensel_lift_teichmuller_factor(&gbar, p as u64, r);
        let modulus: Vec<u32> = lifted.iter().map(|&c| c as u32).collect();
        let residue = if r == 1 {
            None
        } else {
            let modulus = gbar.iter().map(|&c| c as u32).collect();
            Some(Self::from_params(
                RingParams {
                    p,
                    r: 1,
                    d,
                    modulus,
                },
                None,
            ))
        };
        Ok(Self::from_params(RingParams { p, r, d, modulus }, residue))
    }

    fn from_params(params: RingParams, residue: Option<GaloisRing>) -> Self {
        let m = params.characteristic();
        let q = params.residue_size();
        let fparams = RingParams {
            p: params.p,
            r: 1,
            d: params.d,
            modulus: params.modulus.iter().map(|c| c % params.p).collect(),
        };
        let generator = Self::residue_generator(&fparams);
        // lift to Z_{p^r} and iterate e -> e^q until it stabilises
        let mut xi = generator;
        loop {
            let next = pow_raw(&params, m, &xi, q);
            if next == xi {
                break;
            }
            xi = next;
        }
        let d = params.d as usize;
        let mut teich = Vec::with_capacity(q as usize);
        teich.push(vec![0u32; d]);
        let mut cur = vec![0u32; d];
        cur[0] = 1;
        for _ in 0..q - 1 {
            teich.push(cur.clone());
            cur = mul_raw(&params, m, &cur, &xi);
        }
        let mut teich_by_residue = vec![u32::MAX; q as usize];
        for (pos, e) in teich.iter().enumerate() {
            teich_by_residue[residue_index(e, params.p)] = pos as u32;
        }
        debug_assert!(teich_by_residue.iter().all(|&x| x != u32::MAX));
        GaloisRing {
            inner: Arc::new(RingInner {
                params,
                char_: m,
                teich,
                teich_by_residue,
                residue,
            }),
        }
    }

    /// Smallest (by residue index) multiplicative generator of `F_{p^d}`.
    fn residue_generator(fparams: &RingParams) -> Vec<u32> {
        let p = fparams.p as u64;
        let q = fparams.residue_size();
        let factors = prime_factors(q - 1);
        let d = fparams.d as usize;
        for idx in 1..q {
            let coeffs: Vec<u32> = (0..d)
                .map(|i| ((idx / p.pow(i as u32)) % p) as u32)
                .collect();
            let is_gen = factors.iter().all(|&f| {
                let e = pow_raw(fparams, p, &coeffs, (q - 1) / f);
                !(e[0] == 1 && e[1..].iter().all(|&c| c == 0))
            });
            if is_gen {
                return coeffs;
            }
        }
        unreachable!("F_q^* is cyclic")
    }

    pub fn params(&self) -> &RingParams {
        &self.inner.params
    }

    pub fn p(&self) -> u32 {
        self.inner.params.p
    }

    pub fn r(&self) -> u32 {
        self.inner.params.r
    }

    pub fn degree(&self) -> u32 {
        self.inner.params.d
    }

    pub fn characteristic(&self) -> u64 {
        self.inner.char_
    }

    /// Size of the residue field, `p^d`.
    pub fn residue_size(&self) -> u64 {
        self.inner.params.residue_size()
    }

    pub fn size(&self) -> u64 {
        self.inner.params.size()
    }

    pub fn residue_field(&self) -> GaloisRing {
        match &self.inner.residue {
            Some(f) => f.clone(),
            None => self.clone(),
        }
    }

    fn wrap(&self, coeffs: Vec<u32>) -> RingElement {
        RingElement {
            ring: self.clone(),
            coeffs,
        }
    }

    pub fn zero(&self) -> RingElement {
        self.wrap(vec![0; self.degree() as usize])
    }

    pub fn one(&self) -> RingElement {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> RingElement {
        let m = self.characteristic() as i64;
        let mut coeffs = vec![0u32; self.degree() as usize];
        coeffs[0] = v.rem_euclid(m) as u32;
        self.wrap(coeffs)
    }

    /// The generator `x` of the ring over `Z_{p^r}` (equals an integer when `d = 1`).
    pub fn x(&self) -> RingElement {
        if self.degree() == 1 {
            // x = -g_0 modulo the linear modulus
            let m = self.characteristic();
            let g0 = self.inner.params.modulus[0] as u64;
            return self.wrap(vec![((m - g0) % m) as u32]);
        }
        let mut coeffs = vec![0u32; self.degree() as usize];
        coeffs[1] = 1;
        self.wrap(coeffs)
    }

    /// Element from ascending coefficients, each reduced modulo `p^r`.
    pub fn element(&self, coeffs: &[u64]) -> Result<RingElement, RingError> {
        let d = self.degree() as usize;
        if coeffs.len() != d {
            return Err(RingError::BadLength {
                expected: d,
                got: coeffs.len(),
            });
        }
        let m = self.characteristic();
        Ok(self.wrap(coeffs.iter().map(|&c| (c % m) as u32).collect()))
    }

    /// Parses the canonical text encoding: comma-separated coefficients,
    /// ascending degree. A single integer is accepted for any degree.
    pub fn parse_element(&self, text: &str) -> Result<RingElement, RingError> {
        let parts: Result<Vec<i64>, _> = text.split(',').map(|t| t.trim().parse::<i64>()).collect();
        let parts = parts.map_err(|_| RingError::Parse(text.to_string()))?;
        let d = self.degree() as usize;
        if parts.len() == 1 {
            return Ok(self.from_int(parts[0]));
        }
        if parts.len() != d {
            return Err(RingError::BadLength {
                expected: d,
                got: parts.len(),
            });
        }
        let m = self.characteristic() as i64;
        Ok(self.wrap(parts.iter().map(|c| c.rem_euclid(m) as u32).collect()))
    }

    /// Element with index `sum c_i (p^r)^i`.
    pub fn element_from_index(&self, mut index: u64) -> RingElement {
        let m = self.characteristic();
        let coeffs = (0..self.degree())
            .map(|_| {
                let c = index % m;
                index /= m;
                c as u32
            })
            .collect();
        self.wrap(coeffs)
    }

    /// Every element, in index order.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.size()).map(move |i| self.element_from_index(i))
    }

    /// `p^i` as a ring element.
    pub fn p_power(&self, i: u32) -> RingElement {
        if i >= self.r() {
            return self.zero();
        }
        self.from_int((self.p() as i64).pow(i))
    }

    pub fn teichmuller(&self) -> TeichmullerSet {
        let elems: Vec<RingElement> = self
            .inner
            .teich
            .iter()
            .map(|c| self.wrap(c.clone()))
            .collect();
        TeichmullerSet {
            zero: elems[0].clone(),
            xi: elems.get(2).cloned().unwrap_or_else(|| elems[1].clone()),
            powers: elems[1..].to_vec(),
        }
    }

    /// `xi^j` for the fixed Teichmuller generator.
    pub fn xi_power(&self, j: u64) -> RingElement {
        let order = self.residue_size() - 1;
        self.wrap(self.inner.teich[1 + (j % order) as usize].clone())
    }

    /// Teichmuller representative with the same residue as `a`.
    pub fn teich_lift(&self, a: &RingElement) -> RingElement {
        let pos = self.inner.teich_by_residue[residue_index(&a.coeffs, self.p())];
        self.wrap(self.inner.teich[pos as usize].clone())
    }

    /// Position in `(0, xi^0, xi^1, ...)` of the Teichmuller element `a`, if it is one.
    pub fn teich_position(&self, a: &RingElement) -> Option<usize> {
        let pos = self.inner.teich_by_residue[residue_index(&a.coeffs, self.p())] as usize;
        (self.inner.teich[pos] == a.coeffs).then_some(pos)
    }

    pub fn is_teichmuller(&self, a: &RingElement) -> bool {
        a.ring == *self && self.teich_position(a).is_some()
    }

    /// Teichmuller digits `(a_0, ..., a_{r-1})` with `a = sum a_i p^i`.
    pub fn padic_digits(&self, a: &RingElement) -> Vec<RingElement> {
        let p = self.p();
        let mut rest = a.coeffs.clone();
        let mut digits = Vec::with_capacity(self.r() as usize);
        for _ in 0..self.r() {
            let pos = self.inner.teich_by_residue[residue_index(&rest, p)] as usize;
            let digit = &self.inner.teich[pos];
            let m = self.characteristic();
            for (c, &t) in rest.iter_mut().zip(digit) {
                let diff = (*c as u64 + m - t as u64) % m;
                *c = (diff / p as u64) as u32;
            }
            digits.push(self.wrap(digit.clone()));
        }
        digits
    }

    /// Inverse of [`padic_digits`](Self::padic_digits).
    pub fn from_digits(&self, digits: &[RingElement]) -> Result<RingElement, RingError> {
        if digits.len() != self.r() as usize {
            return Err(RingError::BadLength {
                expected: self.r() as usize,
                got: digits.len(),
            });
        }
        let mut acc = self.zero();
        for (i, digit) in digits.iter().enumerate() {
            if !self.is_teichmuller(digit) {
                return Err(RingError::NotTeichmuller(digit.to_string()));
            }
            acc = &acc + &(digit * &self.p_power(i as u32));
        }
        Ok(acc)
    }

    /// Reduction modulo `p` into the residue field.
    pub fn rho(&self, a: &RingElement) -> ResidueElement {
        let field = self.residue_field();
        let p = self.p();
        field.wrap(a.coeffs.iter().map(|c| c % p).collect())
    }

    /// Elements `xi^k` with `gcd(k, p^d - 1) = 1`.
    pub fn coprime_teichmuller(&self) -> Vec<RingElement> {
        coprime_teichmuller(&self.teichmuller())
    }
}

/// Residue-field elements are elements of `GR(p, d)`.
pub type ResidueElement = RingElement;

/// Element of a Galois ring: `d` residues modulo `p^r`, ascending degree.
#[derive(Clone)]
pub struct RingElement {
    ring: GaloisRing,
    coeffs: Vec<u32>,
}

impl RingElement {
    pub fn ring(&self) -> &GaloisRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// `sum c_i (p^r)^i`; a bijection onto `[0, |ring|)`.
    pub fn index(&self) -> u64 {
        let m = self.ring.characteristic();
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * m + c as u64)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_unit(&self) -> bool {
        let p = self.ring.p();
        self.coeffs.iter().any(|&c| c % p != 0)
    }

    /// Whether the element lies in `p^{r-1} R`.
    pub fn in_socle(&self) -> bool {
        let top = (self.ring.p() as u64).pow(self.ring.r() - 1);
        self.coeffs.iter().all(|&c| (c as u64).is_multiple_of(top))
    }

    fn check(&self, other: &Self) -> Result<(), RingError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(RingError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let m = self.ring.characteristic();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| ((a as u64 + b as u64) % m) as u32)
            .collect();
        Ok(self.ring.wrap(coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let m = self.ring.characteristic();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| ((a as u64 + m - b as u64) % m) as u32)
            .collect();
        Ok(self.ring.wrap(coeffs))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let params = self.ring.params();
        let coeffs = mul_raw(
            params,
            self.ring.characteristic(),
            &self.coeffs,
            &other.coeffs,
        );
        Ok(self.ring.wrap(coeffs))
    }

    pub fn neg(&self) -> Self {
        let m = self.ring.characteristic();
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| ((m - a as u64) % m) as u32)
            .collect();
        self.ring.wrap(coeffs)
    }

    pub fn pow(&self, e: u64) -> Self {
        let coeffs = pow_raw(
            self.ring.params(),
            self.ring.characteristic(),
            &self.coeffs,
            e,
        );
        self.ring.wrap(coeffs)
    }
}

/// Arithmetic operation selector for [`ring_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
    Neg,
    Pow(u64),
}

/// Checked binary/unary arithmetic; unary operations ignore `b` apart from
/// the ring check.
pub fn ring_arith(a: &RingElement, b: &RingElement, op: RingOp) -> Result<RingElement, RingError> {
    match op {
        RingOp::Add => a.try_add(b),
        RingOp::Sub => a.try_sub(b),
        RingOp::Mul => a.try_mul(b),
        RingOp::Neg => a.check(b).map(|_| a.neg()),
        RingOp::Pow(e) => a.check(b).map(|_| a.pow(e)),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&RingElement> for &RingElement {
            type Output = RingElement;
            /// Panics if the operands come from different rings.
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
        impl std::ops::$trait<RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                self.$checked(&rhs).expect("ring mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement::neg(self)
    }
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.ring == other.ring
    }
}

impl Eq for RingElement {}

impl Hash for RingElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl PartialOrd for RingElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RingElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.index().cmp(&other.index())
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// `{0}` together with the powers `xi^0, ..., xi^{p^d - 2}` of the fixed generator.
#[derive(Debug, Clone)]
pub struct TeichmullerSet {
    pub zero: RingElement,
    pub powers: Vec<RingElement>,
    pub xi: RingElement,
}

impl TeichmullerSet {
    /// Zero first, then powers in exponent order.
    pub fn elements(&self) -> impl Iterator<Item = &RingElement> {
        std::iter::once(&self.zero).chain(self.powers.iter())
    }

    pub fn len(&self) -> usize {
        self.powers.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, e: &RingElement) -> bool {
        self.elements().any(|t| t == e)
    }
}

/// `{xi^k : gcd(k, |T| - 1) = 1}`.
pub fn coprime_teichmuller(teich: &TeichmullerSet) -> Vec<RingElement> {
    let order = teich.powers.len() as u64;
    teich
        .powers
        .iter()
        .enumerate()
        .filter(|(k, _)| gcd(*k as u64, order) == 1)
        .map(|(_, e)| e.clone())
        .collect()
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> GaloisRing {
        GaloisRing::new(2, 2, 1).unwrap()
    }

    fn gr42() -> GaloisRing {
        GaloisRing::new(2, 2, 2).unwrap()
    }

    #[test]
    fn make_ring_moduli() {
        assert_eq!(z4().params().modulus.len(), 2);
        assert_eq!(z4().size(), 4);
        assert_eq!(gr42().params().modulus, vec![1, 1, 1]);
        assert_eq!(GaloisRing::new(5, 2, 1).unwrap().characteristic(), 25);
    }

    #[test]
    fn make_ring_errors() {
        assert_eq!(
            GaloisRing::new(4, 2, 1).unwrap_err(),
            RingError::NotPrime(4)
        );
        assert!(matches!(
            GaloisRing::new(2, 0, 1),
            Err(RingError::BadShape { .. })
        ));
        assert!(matches!(
            GaloisRing::with_cap(2, 4, 4, 1000),
            Err(RingError::CapExceeded { .. })
        ));
    }

    #[test]
    fn arithmetic_examples() {
        let z = z4();
        assert_eq!(&z.from_int(3) + &z.from_int(3), z.from_int(2));
        let r = gr42();
        let x = r.x();
        assert_eq!((&x * &x).to_string(), "3,3");
        assert_eq!(x.pow(3), r.one());
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = z4().one();
        let b = gr42().one();
        assert_eq!(
            ring_arith(&a, &b, RingOp::Add).unwrap_err(),
            RingError::RingMismatch
        );
        assert_eq!(
            ring_arith(&a, &b, RingOp::Neg).unwrap_err(),
            RingError::RingMismatch
        );
    }

    #[test]
    fn teichmuller_examples() {
        let t = z4().teichmuller();
        let set: Vec<String> = t.elements().map(|e| e.to_string()).collect();
        assert_eq!(set, vec!["0", "1"]);

        let r = gr42();
        let t = r.teichmuller();
        assert_eq!(t.xi, r.x());
        let set: Vec<String> = t.elements().map(|e| e.to_string()).collect();
        assert_eq!(set, vec!["0,0", "1,0", "0,1", "3,3"]);

        let z25 = GaloisRing::new(5, 2, 1).unwrap();
        let t = z25.teichmuller();
        assert_eq!(t.len(), 5);
        for e in t.elements() {
            assert_eq!(e.pow(5), *e);
        }
        let brute: Vec<RingElement> = z25.elements().filter(|e| e.pow(5) == *e).collect();
        assert_eq!(brute.len(), 5);
    }

    #[test]
    fn digit_examples() {
        let z = z4();
        let d = z.padic_digits(&z.from_int(3));
        assert_eq!(d, vec![z.one(), z.one()]);
        assert_eq!(z.padic_digits(&z.from_int(2)), vec![z.zero(), z.one()]);
        assert_eq!(z.padic_digits(&z.zero()), vec![z.zero(), z.zero()]);
        assert_eq!(z.from_digits(&[z.one(), z.one()]).unwrap(), z.from_int(3));

        let r = gr42();
        let x = r.x();
        assert_eq!(
            r.from_digits(&[x.clone(), x.clone()]).unwrap().to_string(),
            "0,3"
        );
        assert!(matches!(
            r.from_digits(&[r.from_int(2), r.zero()]),
            Err(RingError::NotTeichmuller(_))
        ));
    }

    #[test]
    fn rho_examples() {
        let z = z4();
        assert_eq!(z.rho(&z.from_int(3)).to_string(), "1");
        assert_eq!(z.rho(&z.from_int(2)).to_string(), "0");
        let r = gr42();
        assert_eq!(r.rho(&r.parse_element("3,3").unwrap()).to_string(), "1,1");
    }

    #[test]
    fn coprime_examples() {
        let r = gr42();
        assert_eq!(r.coprime_teichmuller(), vec![r.xi_power(1), r.xi_power(2)]);
        let f2 = GaloisRing::new(2, 1, 1).unwrap();
        assert_eq!(f2.coprime_teichmuller(), vec![f2.one()]);
        let z25 = GaloisRing::new(5, 2, 1).unwrap();
        assert_eq!(
            z25.coprime_teichmuller(),
            vec![z25.xi_power(1), z25.xi_power(3)]
        );
    }

    #[test]
    fn nonprimitive_modulus_still_finds_generator() {
        // x^2 + 1 over F_3 is irreducible but x has order 4, not 8
        let r = GaloisRing::new(3, 2, 2).unwrap();
        let t = r.teichmuller();
        assert_eq!(t.len(), 9);
        let distinct: std::collections::HashSet<_> = t.elements().collect();
        assert_eq!(distinct.len(), 9);
        for e in t.elements() {
            assert_eq!(e.pow(9), *e);
        }
    }
}
