//! Dense polynomials over `Z/mZ`, ascending coefficient order.
//!
//! Only what the ring constructor needs: products, division by a monic
//! divisor, extended gcd over a prime field, an irreducibility test and
//! the Hensel lift of a factor of `x^{p^d} - x`.

pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn reduce(a: &[u64], m: u64) -> Poly {
    trim(a.iter().map(|c| c % m).collect())
}

pub(crate) fn add(a: &[u64], b: &[u64], m: u64) -> Poly {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % m)
        .collect();
    trim(out)
}

pub(crate) fn sub(a: &[u64], b: &[u64], m: u64) -> Poly {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0) % m;
            let y = b.get(i).copied().unwrap_or(0) % m;
            (x + m - y) % m
        })
        .collect();
    trim(out)
}

pub(crate) fn scale(a: &[u64], c: u64, m: u64) -> Poly {
    trim(a.iter().map(|x| x * c % m).collect())
}

pub(crate) fn mul(a: &[u64], b: &[u64], m: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % m;
        }
    }
    trim(out)
}

fn pow_u64(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub(crate) fn inv_mod_prime(a: u64, p: u64) -> u64 {
    pow_u64(a, p - 2, p)
}

/// Division with remainder by `b`, whose leading coefficient must be
/// invertible modulo `m` (always true for monic `b`, or for any nonzero
/// leading coefficient when `m` is prime).
pub(crate) fn divmod(a: &[u64], b: &[u64], m: u64, lead_inv: u64) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem = reduce(a, m);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let db = b.len() - 1;
    let mut quot = vec![0u64; rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = rem[i] % m * lead_inv % m;
        if c == 0 {
            continue;
        }
        quot[i - db] = c;
        for (j, &bj) in b.iter().enumerate() {
            let k = i - db + j;
            rem[k] = (rem[k] + m - bj * c % m) % m;
        }
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

fn divmod_prime(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly) {
    let lead = *trim(b.to_vec()).last().expect("nonzero divisor");
    divmod(a, b, p, inv_mod_prime(lead, p))
}

/// Extended gcd over `F_p`: returns `(g, s, t)` with `s a + t b = g`, `g` monic.
pub(crate) fn xgcd_prime(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (reduce(a, p), reduce(b, p));
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divmod_prime(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if let Some(&lead) = r0.last() {
        let inv = inv_mod_prime(lead, p);
        (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
    } else {
        (r0, s0, t0)
    }
}

fn mulmod_prime(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Poly {
    divmod_prime(&mul(a, b, p), f, p).1
}

fn powmod_prime(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Poly {
    let mut acc = vec![1u64];
    let mut b = divmod_prime(base, f, p).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod_prime(&acc, &b, f, p);
        }
        b = mulmod_prime(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

/// Ben-Or irreducibility test for a monic polynomial over `F_p`.
pub(crate) fn is_irreducible_prime(f: &[u64], p: u64) -> bool {
    let f = reduce(f, p);
    let d = f.len().saturating_sub(1);
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let mut xp = x.clone();
    for _ in 1..=d / 2 {
        xp = powmod_prime(&xp, p, &f, p);
        let diff = sub(&xp, &x, p);
        let (g, _, _) = xgcd_prime(&diff, &f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible polynomial of degree `d`
/// over `F_p`, ordering candidates by the integer `sum c_i p^i` of their
/// lower coefficients (highest degree most significant).
pub(crate) fn smallest_irreducible(p: u64, d: u32) -> Poly {
    let count = p.pow(d);
    for code in 0..count {
        let mut f: Poly = (0..d)
            .scan(code, |rest, _| {
                let c = *rest % p;
                *rest /= p;
                Some(c)
            })
            .collect();
        f.push(1);
        if is_irreducible_prime(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

/// Hensel lift of the monic irreducible factor `g` of `x^{p^d} - x` to the
/// unique monic factor modulo `p^r`. The roots of the lift are exactly the
/// Teichmuller representatives of the splitting ring.
pub(crate) fn hensel_lift_teichmuller_factor(g: &[u64], p: u64, r: u32) -> Poly {
    let g = reduce(g, p);
    let d = (g.len() - 1) as u32;
    let big = p.pow(d) as usize;
    let mut target = vec![0u64; big + 1];
    target[big] = 1;
    let full = p.pow(r);
    target[1] = full - 1;

    let (hbar, rem) = divmod_prime(&target, &g, p);
    debug_assert!(rem.is_empty(), "g must divide x^(p^d) - x");
    let (one, _sigma, tau) = xgcd_prime(&g, &hbar, p);
    debug_assert_eq!(one, vec![1]);

    let mut glift = g.clone();
    let mut hlift = hbar.clone();
    let mut pk = p;
    for _ in 1..r {
        let next = pk * p;
        let prod = mul(&glift, &hlift, next);
        let err = sub(&target, &prod, next);
        let e: Poly = trim(err.iter().map(|c| (c / pk) % p).collect());
        let dg = divmod_prime(&mul(&tau, &e, p), &g, p).1;
        let (dh, r2) = divmod_prime(&sub(&e, &mul(&dg, &hbar, p), p), &g, p);
        debug_assert!(r2.is_empty());
        glift = add(&glift, &scale(&dg, pk, next), next);
        hlift = add(&hlift, &scale(&dh, pk, next), next);
        pk = next;
    }
    let mut out = glift;
    out.resize(d as usize + 1, 0);
    out
}
