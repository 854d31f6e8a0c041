use std::collections::HashSet;

use gray_auth::code::{AuthCode, CodeSpec, Key};
use gray_auth::gray::GrayMap;
use gray_auth::protocol::{decode_message, encode_message, transmit};
use gray_auth::ring::{Extension, GaloisRing};
use proptest::prelude::*;

const RINGS: &[(u32, u32, u32)] = &[
    (2, 2, 1),
    (2, 2, 2),
    (2, 3, 1),
    (3, 2, 1),
    (2, 3, 2),
    (3, 2, 2),
    (5, 2, 1),
];

fn ring_and_indices(count: usize) -> impl Strategy<Value = (GaloisRing, Vec<u64>)> {
    prop::sample::select(RINGS).prop_flat_map(move |(p, r, d)| {
        let ring = GaloisRing::new(p, r, d).unwrap();
        let size = ring.size();
        (Just(ring), prop::collection::vec(0..size, count))
    })
}

proptest! {
    #[test]
    fn digits_round_trip((ring, idx) in ring_and_indices(1)) {
        let a = ring.element_from_index(idx[0]);
        prop_assert_eq!(a.index(), idx[0]);
        let digits = ring.padic_digits(&a);
        prop_assert_eq!(digits.len(), ring.r() as usize);
        prop_assert!(digits.iter().all(|d| ring.is_teichmuller(d)));
        prop_assert_eq!(ring.from_digits(&digits).unwrap(), a);
    }

    #[test]
    fn ring_axioms((ring, idx) in ring_and_indices(3)) {
        let [a, b, c] = [0, 1, 2].map(|i| ring.element_from_index(idx[i]));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a + &(-&a), ring.zero());
        prop_assert_eq!(&a * &ring.one(), a.clone());
    }

    #[test]
    fn units_have_inverses((ring, idx) in ring_and_indices(1)) {
        let a = ring.element_from_index(idx[0]);
        let has_inverse = ring.elements().any(|b| &a * &b == ring.one());
        prop_assert_eq!(has_inverse, a.is_unit());
        prop_assert_eq!(a.is_unit(), !ring.rho(&a).is_zero());
    }

    #[test]
    fn teichmuller_is_multiplicative((ring, idx) in ring_and_indices(2)) {
        let x = ring.teich_lift(&ring.element_from_index(idx[0]));
        let y = ring.teich_lift(&ring.element_from_index(idx[1]));
        prop_assert!(ring.is_teichmuller(&(&x * &y)));
        prop_assert_eq!(x.pow(ring.residue_size()), x);
    }

    #[test]
    fn gray_map_is_injective_and_socle_additive((ring, idx) in ring_and_indices(2)) {
        let gray = GrayMap::new(&ring);
        let a = ring.element_from_index(idx[0]);
        let b = ring.element_from_index(idx[1]);
        prop_assert_eq!(gray.gray(&a) == gray.gray(&b), a == b);
        let c = ring.teich_lift(&b);
        prop_assert!(gray.gray_add_socle(&a, &c).is_ok());
    }

    #[test]
    fn trace_is_linear(seed in 0u64..1 << 32, pick in 0usize..3) {
        let (a, b) = [((2, 2, 1), (2, 2, 2)), ((2, 2, 2), (2, 2, 4)), ((3, 2, 1), (3, 2, 3))][pick];
        let base = GaloisRing::new(a.0, a.1, a.2).unwrap();
        let ext_ring = GaloisRing::new(b.0, b.1, b.2).unwrap();
        let ext = Extension::new(&base, &ext_ring).unwrap();
        let c = base.element_from_index(seed % base.size());
        let x = ext_ring.element_from_index((seed >> 7) % ext_ring.size());
        let y = ext_ring.element_from_index((seed >> 17) % ext_ring.size());
        let lhs = ext.trace(&(&(&ext.embed(&c).unwrap() * &x) + &y)).unwrap();
        let rhs = &(&c * &ext.trace(&x).unwrap()) + &ext.trace(&y).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(ext.trace(&ext.frobenius(&x)).unwrap(), ext.trace(&x).unwrap());
    }

    #[test]
    fn messages_round_trip(key in 0u64..256, s in 0usize..48) {
        let code = AuthCode::build(&CodeSpec::new(2, 2, 2, 1, 1)).unwrap();
        let m = transmit(&code, Key(key), &code.sources()[s]).unwrap();
        let frame = encode_message(&m);
        prop_assert_eq!(decode_message(&code, &frame).unwrap(), m);
    }
}

#[test]
fn source_states_are_distinct() {
    for spec in [CodeSpec::new(2, 2, 2, 1, 1), CodeSpec::new(5, 2, 1, 1, 1)] {
        let code = AuthCode::build(&spec).unwrap();
        let set: HashSet<_> = code.sources().iter().collect();
        assert_eq!(set.len(), code.sources().len());
        assert!(code.sources().iter().all(|s| code.contains_source(s)));
    }
}
