//! The generalized Gray map `Phi : A -> F_q^{q^{r-1}}`.
//!
//! Write `a = sum_{i<r} a_i p^i` in Teichmuller digits. Coordinate `k`, with
//! base-`q` digits `k_0, ..., k_{r-2}` (least significant first), is the
//! affine form
//!
//! ```text
//! Phi(a)[k] = rho(a_{r-1}) + sum_{i<r-1} rho(a_i) * Xi[k_i]
//! ```
//!
//! where `Xi = (0, rho(xi), rho(xi^2), ..., rho(xi^{q-1}) = 1)`. For `Z_4` this is
//! the classical Gray map `0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10`.

use std::fmt;

use thiserror::Error;

use crate::ring::{GaloisRing, ResidueElement, RingElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrayError {
    #[error("socle additivity violated for a = {a}, c = {c}")]
    SocleAdditivity { a: String, c: String },
    #[error("{0} is not a Teichmuller element")]
    NotTeichmuller(String),
}

/// `(0, rho(xi), ..., rho(xi^{q-1}))`, one entry per element of `F_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiEnumeration {
    pub entries: Vec<ResidueElement>,
}

pub fn xi_enum(ring: &GaloisRing) -> XiEnumeration {
    let q = ring.residue_size();
    let mut entries = Vec::with_capacity(q as usize);
    entries.push(ring.residue_field().zero());
    for j in 1..q {
        entries.push(ring.rho(&ring.xi_power(j)));
    }
    XiEnumeration { entries }
}

/// Image of the Gray map: `q^{r-1}` residue-field coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrayVector {
    pub coords: Vec<ResidueElement>,
}

impl GrayVector {
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

impl fmt::Display for GrayVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(":")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct GrayMap {
    ring: GaloisRing,
    xi: XiEnumeration,
    q: u64,
    len: usize,
}

impl GrayMap {
    pub fn new(ring: &GaloisRing) -> Self {
        let q = ring.residue_size();
        GrayMap {
            ring: ring.clone(),
            xi: xi_enum(ring),
            q,
            len: q.pow(ring.r() - 1) as usize,
        }
    }

    pub fn ring(&self) -> &GaloisRing {
        &self.ring
    }

    pub fn xi(&self) -> &XiEnumeration {
        &self.xi
    }

    /// Number of coordinates, `q^{r-1}`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn residue_digits(&self, a: &RingElement) -> Vec<ResidueElement> {
        self.ring
            .padic_digits(a)
            .iter()
            .map(|d| self.ring.rho(d))
            .collect()
    }

    fn coordinate_from_digits(&self, digits: &[ResidueElement], mut k: usize) -> ResidueElement {
        let r = digits.len();
        let mut acc = digits[r - 1].clone();
        for digit in &digits[..r - 1] {
            let idx = k % self.q as usize;
            k /= self.q as usize;
            acc = &acc + &(digit * &self.xi.entries[idx]);
        }
        acc
    }

    /// Coordinate `k` of `Phi(a)` without building the whole vector.
    pub fn coordinate(&self, a: &RingElement, k: usize) -> ResidueElement {
        debug_assert!(k < self.len);
        self.coordinate_from_digits(&self.residue_digits(a), k)
    }

    pub fn gray(&self, a: &RingElement) -> GrayVector {
        let digits = self.residue_digits(a);
        GrayVector {
            coords: (0..self.len)
                .map(|k| self.coordinate_from_digits(&digits, k))
                .collect(),
        }
    }

    /// `Phi(a + c p^{r-1})`, checked against `Phi(a) + rho(c) * (1, ..., 1)`.
    pub fn gray_add_socle(
        &self,
        a: &RingElement,
        c: &RingElement,
    ) -> Result<GrayVector, GrayError> {
        if !self.ring.is_teichmuller(c) {
            return Err(GrayError::NotTeichmuller(c.to_string()));
        }
        let shifted = a + &(c * &self.ring.p_power(self.ring.r() - 1));
        let direct = self.gray(&shifted);
        let rc = self.ring.rho(c);
        let expected = GrayVector {
            coords: self.gray(a).coords.iter().map(|v| v + &rc).collect(),
        };
        if direct != expected {
            return Err(GrayError::SocleAdditivity {
                a: a.to_string(),
                c: c.to_string(),
            });
        }
        Ok(direct)
    }

    /// `(index, element, Phi(element))` for every element of `A` in index order.
    pub fn table(&self) -> Vec<(u64, RingElement, GrayVector)> {
        self.ring
            .elements()
            .map(|a| {
                let g = self.gray(&a);
                (a.index(), a, g)
            })
            .collect()
    }
}
