use std::collections::HashMap;

use super::{GaloisRing, RingElement, RingError};

/// `B = GR(p^r, d n)` viewed as a degree-`n` unramified extension of
/// `A = GR(p^r, d)`, with the embedding `A -> B` and the relative trace.
#[derive(Debug, Clone)]
pub struct Extension {
    base: GaloisRing,
    ext: GaloisRing,
    degree: u32,
    /// Images of `1, y, ..., y^{d-1}` where `y` generates `A`.
    basis_images: Vec<RingElement>,
    /// B-coefficients of an embedded element to its A-coefficients.
    preimage: HashMap<Vec<u32>, RingElement>,
}

impl Extension {
    pub fn new(base: &GaloisRing, ext: &GaloisRing) -> Result<Self, RingError> {
        if base.p() != ext.p() || base.r() != ext.r() {
            return Err(RingError::Incompatible(format!(
                "{:?} and {:?} differ in characteristic",
                base, ext
            )));
        }
        if !ext.degree().is_multiple_of(base.degree()) {
            return Err(RingError::Incompatible(format!(
                "degree {} does not divide {}",
                base.degree(),
                ext.degree()
            )));
        }
        let degree = ext.degree() / base.degree();
        let image = if base.params() == ext.params() {
            ext.x()
        } else {
            Self::find_root(base, ext)?
        };
        let mut basis_images = Vec::with_capacity(base.degree() as usize);
        let mut cur = ext.one();
        for _ in 0..base.degree() {
            basis_images.push(cur.clone());
            cur = &cur * &image;
        }
        let mut out = Extension {
            base: base.clone(),
            ext: ext.clone(),
            degree,
            basis_images,
            preimage: HashMap::new(),
        };
        let preimage = base
            .elements()
            .map(|a| (out.embed_unchecked(&a).coeffs, a))
            .collect();
        out.preimage = preimage;
        Ok(out)
    }

    /// A root of `A`'s modulus among the Teichmuller elements of `B`,
    /// taking zero first and then the smallest exponent of `xi_B`.
    fn find_root(base: &GaloisRing, ext: &GaloisRing) -> Result<RingElement, RingError> {
        let modulus = &base.params().modulus;
        for cand in ext.teichmuller().elements().cloned() {
            let mut acc = ext.zero();
            for &c in modulus.iter().rev() {
                acc = &(&acc * &cand) + &ext.from_int(c as i64);
            }
            if acc.is_zero() {
                return Ok(cand);
            }
        }
        Err(RingError::Incompatible(
            "base modulus has no Teichmuller root in the extension".into(),
        ))
    }

    pub fn base(&self) -> &GaloisRing {
        &self.base
    }

    pub fn ext(&self) -> &GaloisRing {
        &self.ext
    }

    /// Relative degree `n`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `q = p^{deg A}`, the order of the relative Frobenius.
    pub fn q(&self) -> u64 {
        self.base.residue_size()
    }

    fn embed_unchecked(&self, a: &RingElement) -> RingElement {
        a.coeffs
            .iter()
            .zip(&self.basis_images)
            .fold(self.ext.zero(), |acc, (&c, b)| {
                &acc + &(b * &self.ext.from_int(c as i64))
            })
    }

    pub fn embed(&self, a: &RingElement) -> Result<RingElement, RingError> {
        if a.ring() != &self.base {
            return Err(RingError::RingMismatch);
        }
        Ok(self.embed_unchecked(a))
    }

    /// Preimage in `A` of an element of `B`, if it lies in the embedded copy.
    pub fn contract(&self, b: &RingElement) -> Option<RingElement> {
        if b.ring() != &self.ext {
            return None;
        }
        self.preimage.get(&b.coeffs).cloned()
    }

    /// Relative Frobenius: digit-wise `q`-th power in Teichmuller coordinates.
    pub fn frobenius(&self, b: &RingElement) -> RingElement {
        let q = self.q();
        let digits = self.ext.padic_digits(b);
        digits
            .iter()
            .enumerate()
            .fold(self.ext.zero(), |acc, (i, digit)| {
                &acc + &(&digit.pow(q) * &self.ext.p_power(i as u32))
            })
    }

    /// `Tr_{B/A}(b) = sum_{i<n} phi^i(b)`, returned as an element of `A`.
    pub fn trace(&self, b: &RingElement) -> Result<RingElement, RingError> {
        if b.ring() != &self.ext {
            return Err(RingError::RingMismatch);
        }
        if self.degree == 1 {
            return self
                .contract(b)
                .ok_or_else(|| RingError::Incompatible("trivial extension".into()));
        }
        let mut acc = b.clone();
        let mut cur = b.clone();
        for _ in 1..self.degree {
            cur = self.frobenius(&cur);
            acc = &acc + &cur;
        }
        self.contract(&acc)
            .ok_or_else(|| RingError::Incompatible(format!("trace {acc} not in the base ring")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_extension_is_identity() {
        let a = GaloisRing::new(2, 2, 2).unwrap();
        let ext = Extension::new(&a, &a).unwrap();
        for e in a.elements() {
            assert_eq!(ext.embed(&e).unwrap(), e);
            assert_eq!(ext.trace(&e).unwrap(), e);
        }
    }

    #[test]
    fn trace_of_x_over_z4() {
        let a = GaloisRing::new(2, 2, 1).unwrap();
        let b = GaloisRing::new(2, 2, 2).unwrap();
        let ext = Extension::new(&a, &b).unwrap();
        assert_eq!(ext.trace(&b.x()).unwrap(), a.from_int(3));
        assert_eq!(ext.trace(&b.one()).unwrap(), a.from_int(2));
        assert_eq!(ext.embed(&a.zero()).unwrap(), b.zero());
        assert_eq!(ext.embed(&a.one()).unwrap(), b.one());
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let a = GaloisRing::new(2, 2, 2).unwrap();
        let b = GaloisRing::new(2, 2, 4).unwrap();
        let ext = Extension::new(&a, &b).unwrap();
        for x in a.elements() {
            for y in a.elements() {
                let ex = ext.embed(&x).unwrap();
                let ey = ext.embed(&y).unwrap();
                assert_eq!(ext.embed(&(&x + &y)).unwrap(), &ex + &ey);
                assert_eq!(ext.embed(&(&x * &y)).unwrap(), &ex * &ey);
            }
        }
        // Teichmuller elements land on Teichmuller elements
        let tb = b.teichmuller();
        for t in a.teichmuller().elements() {
            assert!(tb.contains(&ext.embed(t).unwrap()));
        }
    }

    #[test]
    fn incompatible_rings() {
        let a = GaloisRing::new(2, 2, 2).unwrap();
        let b = GaloisRing::new(2, 2, 3).unwrap();
        assert!(matches!(
            Extension::new(&a, &b),
            Err(RingError::Incompatible(_))
        ));
        let c = GaloisRing::new(2, 3, 2).unwrap();
        assert!(Extension::new(&a, &c).is_err());
    }
}
